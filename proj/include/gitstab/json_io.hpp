#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "gitstab/criteria.hpp"
#include "gitstab/singularity.hpp"
#include "gitstab/torus.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

/// Schema version stamped on every JSON report.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

/// {"sigma": [[rational strings]], "r": [ints], "strict": bool}
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TorusDecision& t);
nlohmann::json to_json(const StabilityVerdict& v);
nlohmann::json to_json(const SingularityProfile& p);
nlohmann::json to_json(const LocalData& l);
nlohmann::json to_json(const SingularScan& s);

/// Points are arrays of integer strings.
nlohmann::json to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const nlohmann::json& j);
std::vector<ProjectivePoint> points_from_json(const nlohmann::json& j);

}  // namespace gitstab
