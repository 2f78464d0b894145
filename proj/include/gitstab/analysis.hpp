#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gitstab/criteria.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/search.hpp"
#include "gitstab/singularity.hpp"

namespace gitstab {

inline constexpr const char* kToolVersion = "0.1.0";

/// The destabilized families x_0^2 x_n + x_1^3 + ... + x_{n-1}^3 ("fn") and
/// x_0^2 x_n^2 + x_0 x_{n-1}^3 + x_1^4 + ... + x_{n-2}^4 ("gn"), together
/// with their strict certificates (identity frame).
struct ExampleFamily {
  HomogeneousPoly poly;
  Certificate certificate;
  bool edge_case = false;  // gn with n = 2 has no quartic block
};

/// Throws std::invalid_argument for an unknown family or n < 2.
ExampleFamily example_family(std::string_view family, int n);

struct AnalyzeOptions {
  std::optional<int> s;                       // user-asserted dim of the singular locus
  std::vector<ProjectivePoint> extra_points;  // supplied candidate points
  std::optional<int> height_bound;            // default depends on n
  std::vector<int> primes = default_scan_primes();
  SearchConfig search;
};

struct AnalysisReport {
  std::string polynomial;
  int n = 0;
  int d = 0;
  SingularScan scan;
  std::vector<LocalData> points;            // singular points analyzed
  std::vector<std::string> ignored_points;  // supplied points that are not singular
  std::optional<SingularityProfile> profile;
  std::optional<bool> cone_free;
  StabilityVerdict criteria;
  SearchResult search;
  Status status = Status::Inconclusive;
  std::optional<Certificate> certificate;  // backs any negative status
  bool not_stable_certified = false;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
};

/// Full pipeline: singular point scan, local analysis, profile, sufficient
/// criteria, and a destabilization search. Negative statuses always carry a
/// certificate verified exactly.
AnalysisReport analyze(const HomogeneousPoly& f, const AnalyzeOptions& opts = {});

nlohmann::json to_json(const AnalysisReport& r, bool with_timestamp);
std::string to_text(const AnalysisReport& r);

/// Reads a polynomial file: the polynomial grammar with '#' comments. The
/// number of variables is the largest index present plus one unless `n` is
/// given.
HomogeneousPoly read_poly_text(std::string_view text, std::optional<int> n = {});

}  // namespace gitstab
