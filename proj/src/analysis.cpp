#include "gitstab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "gitstab/json_io.hpp"

namespace gitstab {

namespace {

Polynomial power_of(int nvars, std::initializer_list<std::pair<int, int>> factors) {
  ExponentVector e(nvars, 0);
  for (auto [j, k] : factors) e[j] += k;
  return Polynomial::monomial(e, Rational(1));
}

}  // namespace

ExampleFamily example_family(std::string_view family, int n) {
  if (n < 2) throw std::invalid_argument("example families need n >= 2");
  const int nv = n + 1;
  Polynomial p(nv);
  std::vector<std::int64_t> r(nv, 1);
  bool edge = false;
  int degree = 0;
  if (family == "fn") {
    degree = 3;
    p += power_of(nv, {{0, 2}, {n, 1}});
    for (int j = 1; j <= n - 1; ++j) p += power_of(nv, {{j, 3}});
    r[0] = 3 * (n - 1);
    r[n] = -4 * static_cast<std::int64_t>(n - 1);
  } else if (family == "gn") {
    degree = 4;
    p += power_of(nv, {{0, 2}, {n, 2}});
    p += power_of(nv, {{0, 1}, {n - 1, 3}});
    for (int j = 1; j <= n - 2; ++j) p += power_of(nv, {{j, 4}});
    r[0] = 3 * n + 2;
    r[n - 1] = -n;
    r[n] = -3 * n;
    edge = n == 2;
  } else {
    throw std::invalid_argument("unknown example family '" + std::string(family) + "' (expected fn or gn)");
  }
  return ExampleFamily{HomogeneousPoly(std::move(p), degree),
                       Certificate{identity_matrix(nv), WeightVector(std::move(r)), true}, edge};
}

HomogeneousPoly read_poly_text(std::string_view text, std::optional<int> n) {
  std::string cleaned;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    cleaned += line;
    cleaned += ' ';
  }
  int nv = n.value_or(-1);
  if (!n) {
    static const std::regex var(R"(x\s*(\d+))");
    int largest = -1;
    for (auto it = std::sregex_iterator(cleaned.begin(), cleaned.end(), var); it != std::sregex_iterator(); ++it) {
      largest = std::max(largest, std::stoi((*it)[1].str()));
    }
    nv = largest;
  }
  if (nv < 0) throw std::invalid_argument("no variables found in input");
  return parse_poly(cleaned, nv);
}

AnalysisReport analyze(const HomogeneousPoly& f, const AnalyzeOptions& opts) {
  if (f.n() < 2) throw std::invalid_argument("hypersurfaces need n >= 2");
  if (f.degree() < 3) throw std::invalid_argument("hypersurfaces need d >= 3");
  if (opts.s && (*opts.s < -1 || *opts.s > f.n() - 1)) {
    throw std::invalid_argument("--s must lie in [-1, n-1]");
  }
  AnalysisReport rep;
  rep.polynomial = to_string(f);
  rep.n = f.n();
  rep.d = f.degree();
  rep.seed = opts.search.seed;

  const int height = opts.height_bound.value_or(f.n() <= 4 ? 2 : 1);
  rep.scan = scan_singular_points(f, height, opts.primes);

  std::vector<ProjectivePoint> candidates = rep.scan.points;
  for (const auto& p : opts.extra_points) {
    if (p.n() != f.n()) throw std::invalid_argument("supplied point " + to_string(p) + " has the wrong length");
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<ProjectivePoint> singular;
  for (const auto& p : candidates) {
    LocalData local = analyze_point(f, p);
    if (local.multiplicity >= 2) {
      singular.push_back(p);
      rep.points.push_back(std::move(local));
    } else {
      rep.ignored_points.push_back(to_string(p));
    }
  }

  // Profile.
  SingularityProfile profile;
  profile.n = f.n();
  profile.d = f.degree();
  if (opts.s) {
    profile.s = *opts.s;
    profile.s_provenance = Provenance::UserAsserted;
  } else {
    profile.s = std::min(rep.scan.estimated_s, f.n() - 1);
    if (profile.s < 0 && !singular.empty()) profile.s = 0;
    profile.s_provenance = Provenance::Heuristic;
  }
  if (profile.s == -1 && !singular.empty()) {
    throw std::invalid_argument("--s -1 (smooth) contradicts the singular point " + to_string(singular.front()));
  }
  if (profile.s == -1) {
    profile.delta = 1;
    profile.delta_provenance = profile.s_provenance;
    profile.singularity_class = "smooth";
    rep.profile = profile;
  } else if (!rep.points.empty()) {
    int delta = 0;
    for (const auto& l : rep.points) delta = std::max(delta, l.multiplicity);
    profile.delta = delta;
    profile.delta_provenance = Provenance::VerifiedAtPoints;
    if (delta == 2) {
      int min_rank = f.n();
      bool all_nodes = true;
      for (const auto& l : rep.points) {
        min_rank = std::min(min_rank, *l.hessian_rank);
        all_nodes = all_nodes && *l.hessian_corank == 0;
      }
      profile.min_hessian_rank = min_rank;
      profile.rank_provenance = Provenance::VerifiedAtPoints;
      if (all_nodes) profile.singularity_class = "A1";
    }
    bool cone_free = true;
    for (const auto& l : rep.points) {
      if (l.multiplicity == delta) cone_free = cone_free && l.essential_variables == f.n();
    }
    rep.cone_free = cone_free;
    rep.profile = profile;
  } else {
    rep.notes.push_back(
        "singular points are indicated but none was found among rational points of height <= " +
        std::to_string(height) + "; multiplicity data unavailable, criteria skipped");
  }

  if (rep.profile) {
    rep.criteria = combined_verdict(*rep.profile, rep.cone_free);
  }

  rep.search = search_destabilizing(f, singular, opts.search);

  // Merge: certificates are exact and take priority over criteria whose
  // inputs may be heuristic.
  const Status positive = rep.criteria.status;
  if (rep.search.strict_certificate) {
    rep.status = Status::NotSemiStable;
    rep.certificate = rep.search.strict_certificate;
    rep.not_stable_certified = true;
    if (is_positive(positive)) {
      rep.notes.push_back("a verified certificate contradicts the criteria verdict " +
                          std::string(to_string(positive)) + "; the profile inputs are wrong");
    }
  } else if (rep.search.nonstrict_certificate) {
    rep.certificate = rep.search.nonstrict_certificate;
    rep.not_stable_certified = true;
    if (positive == Status::SemiStable) {
      rep.status = Status::SemiStable;
      rep.notes.push_back("semi-stable but not stable: a non-strict certificate is attached");
    } else {
      rep.status = Status::NotStable;
      if (positive == Status::Stable) {
        rep.notes.push_back("a verified certificate contradicts the criteria verdict Stable; "
                            "the profile inputs are wrong");
      }
    }
  } else {
    rep.status = positive;
  }
  return rep;
}

nlohmann::json to_json(const AnalysisReport& r, bool with_timestamp) {
  using nlohmann::json;
  json points = json::array();
  for (const auto& l : r.points) points.push_back(to_json(l));
  json out{{"schema_version", kReportSchemaVersion},
           {"tool_version", kToolVersion},
           {"seed", r.seed},
           {"input", json{{"polynomial", r.polynomial}, {"n", r.n}, {"d", r.d}}},
           {"scan", to_json(r.scan)},
           {"points", std::move(points)},
           {"ignored_points", r.ignored_points},
           {"criteria", to_json(r.criteria)},
           {"search", to_json(r.search)},
           {"status", std::string(to_string(r.status))},
           {"not_stable_certified", r.not_stable_certified},
           {"notes", r.notes}};
  out["profile"] = r.profile ? to_json(*r.profile) : json(nullptr);
  out["cone_free"] = r.cone_free ? json(*r.cone_free) : json(nullptr);
  out["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  if (with_timestamp) {
    out["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
  }
  return out;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "polynomial: " << r.polynomial << "  (n = " << r.n << ", d = " << r.d << ")\n";
  os << "singular points (rational, height <= " << r.scan.height_bound << "):";
  if (r.points.empty()) os << " none";
  os << "\n";
  for (const auto& l : r.points) {
    os << "  " << to_string(l.point) << "  multiplicity " << l.multiplicity << ", tangent cone "
       << to_string(l.tangent_cone);
    if (l.hessian_rank) os << ", Hessian rank " << *l.hessian_rank << " (corank " << *l.hessian_corank << ")";
    os << "\n";
  }
  for (const auto& c : r.scan.finite_field_counts) {
    os << "  F_" << c.prime << ": " << c.singular_points << " singular points (heuristic)\n";
  }
  if (r.profile) {
    const auto& p = *r.profile;
    os << "profile: s = " << p.s << " [" << to_string(p.s_provenance) << "], delta = " << p.delta << " ["
       << to_string(p.delta_provenance) << "]";
    if (p.min_hessian_rank) os << ", min Hessian rank = " << *p.min_hessian_rank;
    os << "\n";
  }
  os << "criteria: " << to_string(r.criteria.status) << "\n";
  for (const auto& reason : r.criteria.reasons) {
    os << "  " << reason.criterion << " [" << reason.provenance << "]: " << reason.note;
    if (!reason.margin.empty()) os << "  (margin " << reason.margin << ")";
    os << "\n";
  }
  os << "search: " << r.search.frames.size() << " frame(s) tried\n";
  if (r.certificate) {
    os << "certificate (" << (r.certificate->strict ? "strict" : "non-strict") << "): r = (";
    for (std::size_t j = 0; j < r.certificate->r.size(); ++j) os << (j ? ", " : "") << r.certificate->r[j];
    os << ")\n";
  }
  for (const auto& note : r.search.notes) os << "note: " << note << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  os << "status: " << to_string(r.status) << "\n";
  return os.str();
}

}  // namespace gitstab
