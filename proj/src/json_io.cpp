#include "gitstab/json_io.hpp"

#include <stdexcept>

namespace gitstab {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

json monomial_json(const ExponentVector& e) { return json(e); }

}  // namespace

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw std::invalid_argument("matrix rows have different lengths");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const Certificate& c) {
  return json{{"sigma", matrix_to_json(c.sigma)}, {"r", c.r.values()}, {"strict", c.strict}};
}

Certificate certificate_from_json(const json& j) {
  return Certificate{matrix_from_json(j.at("sigma")),
                     WeightVector(j.at("r").get<std::vector<std::int64_t>>()),
                     j.at("strict").get<bool>()};
}

json to_json(const TorusDecision& t) {
  json out{{"feasible", t.feasible}};
  out["witness"] = t.witness ? json(t.witness->values()) : json(nullptr);
  json cert = json::array();
  for (const auto& [m, lambda] : t.certificate) {
    cert.push_back(json{{"monomial", monomial_json(m)}, {"lambda", to_string(lambda)}});
  }
  out["certificate"] = std::move(cert);
  return out;
}

json to_json(const StabilityVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) {
    reasons.push_back(json{{"criterion", r.criterion},
                           {"margin", r.margin},
                           {"note", r.note},
                           {"provenance", r.provenance}});
  }
  json out{{"status", std::string(to_string(v.status))}, {"reasons", std::move(reasons)}};
  out["literature"] = v.literature ? json(*v.literature) : json(nullptr);
  return out;
}

json to_json(const SingularityProfile& p) {
  json out{{"n", p.n}, {"d", p.d}, {"s", p.s}, {"delta", p.delta}};
  out["min_hessian_rank"] = p.min_hessian_rank ? json(*p.min_hessian_rank) : json(nullptr);
  out["singularity_class"] = p.singularity_class ? json(*p.singularity_class) : json(nullptr);
  out["provenance"] = json{{"s", std::string(to_string(p.s_provenance))},
                           {"delta", std::string(to_string(p.delta_provenance))},
                           {"min_hessian_rank", std::string(to_string(p.rank_provenance))}};
  return out;
}

json to_json(const ProjectivePoint& p) {
  json out = json::array();
  for (const auto& z : p.coords()) out.push_back(z.str());
  return out;
}

ProjectivePoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("a point is a nonempty list of integers");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return ProjectivePoint(coords);
}

std::vector<ProjectivePoint> points_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("points must be a JSON list");
  std::vector<ProjectivePoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json to_json(const LocalData& l) {
  json out{{"point", to_json(l.point)},
           {"point_text", to_string(l.point)},
           {"multiplicity", l.multiplicity},
           {"tangent_cone", to_string(l.tangent_cone)},
           {"essential_variables", l.essential_variables}};
  out["hessian_rank"] = l.hessian_rank ? json(*l.hessian_rank) : json(nullptr);
  out["hessian_corank"] = l.hessian_corank ? json(*l.hessian_corank) : json(nullptr);
  return out;
}

json to_json(const SingularScan& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  json counts = json::array();
  for (const auto& c : s.finite_field_counts) {
    counts.push_back(json{{"prime", c.prime},
                          {"singular_points", c.singular_points},
                          {"points_checked", c.points_checked}});
  }
  return json{{"height_bound", s.height_bound},
              {"rational_points", std::move(pts)},
              {"finite_field_counts", std::move(counts)},
              {"estimated_s", s.estimated_s},
              {"heuristic", true}};
}

}  // namespace gitstab
