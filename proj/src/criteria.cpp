#include "gitstab/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gitstab/errors.hpp"
#include "literature_data.hpp"

namespace gitstab {

namespace {

constexpr const char* kPairingNote = "strict inequality gives stable, equality semi-stable";

Status status_from(int cmp) {
  // cmp > 0: strict inequality holds; cmp == 0: equality.
  if (cmp > 0) return Status::Stable;
  if (cmp == 0) return Status::SemiStable;
  return Status::Inconclusive;
}

int cmp_sign(const Rational& x) { return x.sign(); }

StabilityVerdict single(Status status, Reason reason) {
  StabilityVerdict v;
  v.status = status;
  v.reasons.push_back(std::move(reason));
  return v;
}

StabilityVerdict smooth_verdict(std::string criterion) {
  return single(Status::Stable,
                Reason{std::move(criterion), "", "non-singular hypersurfaces of degree >= 3 are stable"});
}

std::string relation(int cmp) { return cmp > 0 ? "<" : (cmp == 0 ? "=" : ">"); }

int class_rank(std::string_view c) {
  static constexpr std::array<std::string_view, 5> chain{"smooth", "A1", "A2", "Am", "ADE"};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == c) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::UserAsserted: return "user-asserted";
    case Provenance::VerifiedAtPoints: return "verified-at-points";
    case Provenance::Heuristic: return "heuristic";
  }
  return "heuristic";
}

void SingularityProfile::validate() const {
  if (n < 1) throw std::invalid_argument("profile needs n >= 1");
  if (d < 3) throw std::invalid_argument("profile needs d >= 3");
  if (s < -1 || s > n - 1) {
    throw std::invalid_argument("singular locus dimension " + std::to_string(s) + " outside [-1, n-1]");
  }
  if (delta < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (s == -1 && delta != 1) throw std::invalid_argument("a smooth profile has delta = 1");
  if (min_hessian_rank) {
    if (delta > 2) throw std::invalid_argument("Hessian rank given but delta > 2");
    if (*min_hessian_rank < 0 || *min_hessian_rank > n) {
      throw std::invalid_argument("Hessian rank outside [0, n]");
    }
  }
  if (singularity_class && class_rank(*singularity_class) < 0) {
    throw std::invalid_argument("unknown singularity class '" + *singularity_class + "'");
  }
}

std::optional<int> SingularityProfile::max_corank() const {
  if (!min_hessian_rank) return std::nullopt;
  return n - *min_hessian_rank;
}

StabilityVerdict evaluate_thm1_delta_form(const SingularityProfile& p) {
  p.validate();
  if (p.s == -1) return smooth_verdict("smooth");
  Rational bound;
  std::string formula;
  if (p.s <= p.n - 2) {
    bound = Rational(p.d * (p.d - 2), (p.s + 2) * p.d - (p.s + 3));
    formula = "d(d-2)/((s+2)d-(s+3))";
  } else {
    bound = Rational(p.d, p.n + 1);
    formula = "d/(n+1)";
  }
  const Rational margin = bound - p.delta;
  const int cmp = cmp_sign(margin);
  return single(status_from(cmp),
                Reason{"multiplicity-bound", to_string(margin),
                       "delta = " + std::to_string(p.delta) + " " + relation(cmp) + " " +
                           to_string(bound) + " = " + formula + "; " + kPairingNote});
}

StabilityVerdict evaluate_thm1_d_form(const SingularityProfile& p) {
  p.validate();
  if (p.s == -1) return smooth_verdict("smooth");
  if (p.s == p.n - 1) {
    const std::int64_t threshold = static_cast<std::int64_t>(p.delta) * (p.n + 1);
    const std::int64_t margin = p.d - threshold;
    const int cmp = margin > 0 ? 1 : (margin == 0 ? 0 : -1);
    return single(status_from(cmp),
                  Reason{"multiplicity-bound-d", std::to_string(margin),
                         "d = " + std::to_string(p.d) + (cmp > 0 ? " > " : cmp == 0 ? " = " : " < ") +
                             "delta(n+1) = " + std::to_string(threshold)});
  }
  // d  vs  a + sqrt(a^2 - delta + 1) + 1,  a = delta (s+2) / 2
  const Rational a(p.delta * (p.s + 2), 2);
  const Rational gap = Rational(p.d) - 1 - a;
  const Rational radicand = a * a - p.delta + 1;
  int cmp;
  if (gap.sign() < 0) {
    cmp = -1;
  } else {
    cmp = cmp_sign(gap * gap - radicand);
  }
  std::string threshold = to_string(a + 1) + " + sqrt(" + to_string(radicand) + ")";
  return single(status_from(cmp),
                Reason{"multiplicity-bound-d", "d - 1 - a = " + to_string(gap) + ", sqrt(" + to_string(radicand) + ")",
                       "d = " + std::to_string(p.d) + (cmp > 0 ? " > " : cmp == 0 ? " = " : " < ") +
                           threshold + "; decided exactly by sign-checked squaring"});
}

namespace {

void require_thm2_scope(const SingularityProfile& p) {
  p.validate();
  std::string problems;
  if (p.d != 3 && p.d != 4) problems += " d must be 3 or 4;";
  if (p.s != 0) problems += " singularities must be isolated (s = 0);";
  if (p.delta != 2) problems += " every singular point must be a double point (delta = 2);";
  if (!p.min_hessian_rank) problems += " the minimal Hessian rank is required;";
  if (!problems.empty()) throw std::invalid_argument("Hessian-rank criterion does not apply:" + problems);
}

std::string equality_note(int cmp) { return cmp == 0 ? "equality" : (cmp > 0 ? "strict" : "fails"); }

}  // namespace

StabilityVerdict evaluate_thm2(const SingularityProfile& p) {
  require_thm2_scope(p);
  const Rational threshold(2 * (p.n + 1), p.d);
  const Rational margin = Rational(*p.min_hessian_rank) - threshold;
  const int cmp = cmp_sign(margin);
  return single(status_from(cmp),
                Reason{"hessian-rank", to_string(margin),
                       equality_note(cmp) + ": r = " + std::to_string(*p.min_hessian_rank) + " " +
                           (cmp > 0 ? ">" : cmp == 0 ? "=" : "<") + " 2(n+1)/d = " + to_string(threshold)});
}

StabilityVerdict evaluate_corank_form(const SingularityProfile& p) {
  require_thm2_scope(p);
  const int cr = *p.max_corank();
  const Rational threshold = p.d == 3 ? Rational(p.n - 2, 3) : Rational(p.n - 1, 2);
  const Rational margin = threshold - cr;
  const int cmp = cmp_sign(margin);
  return single(status_from(cmp),
                Reason{"hessian-corank", to_string(margin),
                       equality_note(cmp) + ": cr = " + std::to_string(cr) + " " + relation(cmp) + " " +
                           (p.d == 3 ? "(n-2)/3" : "(n-1)/2") + " = " + to_string(threshold)});
}

StabilityVerdict evaluate_mordant(const SingularityProfile& p, bool cone_free) {
  p.validate();
  const std::int64_t m = std::min(p.n + 1, p.s + 3);
  StabilityVerdict v;
  auto consider = [&](std::string id, std::int64_t threshold, std::string formula) {
    const std::int64_t margin = p.d - threshold;
    const Status st = margin > 0 ? Status::Stable : (margin == 0 ? Status::SemiStable : Status::Inconclusive);
    v.reasons.push_back(Reason{std::move(id), std::to_string(margin),
                               "d = " + std::to_string(p.d) +
                                   (margin > 0 ? " > " : margin == 0 ? " = " : " < ") + formula + " = " +
                                   std::to_string(threshold)});
    if (positive_strength(st) > positive_strength(v.status)) v.status = st;
  };
  consider("mordant", static_cast<std::int64_t>(p.delta) * m, "delta min(n+1, s+3)");
  if (cone_free) {
    consider("mordant-cone-free", static_cast<std::int64_t>(p.delta - 1) * m, "(delta-1) min(n+1, s+3)");
  }
  return v;
}

std::string BoundComparison::describe() const {
  return to_string(rational_part) + " + sqrt(" + to_string(radicand) + ")";
}

double BoundComparison::approximate() const {
  return rational_part.convert_to<double>() + std::sqrt(radicand.convert_to<double>());
}

BoundComparison compare_bounds(int delta, int s) {
  if (delta < 1 || s < 0) throw std::invalid_argument("compare_bounds needs delta >= 1 and s >= 0");
  BoundComparison out;
  const Rational a(delta * (s + 2), 2);
  out.rational_part = a + 1;
  out.radicand = a * a - delta + 1;
  out.mordant_threshold = static_cast<std::int64_t>(delta) * (s + 3);
  const Rational room = Rational(out.mordant_threshold) - out.rational_part;
  out.strictly_better = room.sign() > 0 && out.radicand < room * room;
  return out;
}

std::vector<LiteratureEntry> parse_literature_table(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array()) throw std::invalid_argument("literature table must be a JSON list");
  std::vector<LiteratureEntry> out;
  for (const auto& e : doc) {
    LiteratureEntry entry;
    entry.n = e.at("n").get<int>();
    entry.d = e.at("d").get<int>();
    entry.singularity_class = e.at("class").get<std::string>();
    entry.status = parse_status(e.at("status").get<std::string>());
    entry.source = e.at("source").get<std::string>();
    if (class_rank(entry.singularity_class) < 0) {
      throw std::invalid_argument("unknown singularity class '" + entry.singularity_class + "'");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<LiteratureEntry>& builtin_literature_table() {
  static const std::vector<LiteratureEntry> table = parse_literature_table(detail::kLiteratureTableJson);
  return table;
}

std::optional<StabilityVerdict> literature_lookup(int n, int d, std::string_view singularity_class,
                                                  const std::vector<LiteratureEntry>& table) {
  const int query = class_rank(singularity_class);
  if (query < 0) return std::nullopt;
  const LiteratureEntry* best = nullptr;
  for (const auto& e : table) {
    if (e.n != n || e.d != d || class_rank(e.singularity_class) < query) continue;
    if (!best || positive_strength(e.status) > positive_strength(best->status)) best = &e;
  }
  if (!best) return std::nullopt;
  StabilityVerdict v;
  v.status = best->status;
  v.literature = best->source;
  v.reasons.push_back(Reason{"literature", "",
                             "at most " + best->singularity_class + " singularities: " + best->source,
                             "literature"});
  return v;
}

StabilityVerdict combined_verdict(const SingularityProfile& p, std::optional<bool> cone_free) {
  p.validate();
  if (p.s == -1) return smooth_verdict("smooth");

  StabilityVerdict out;
  auto absorb = [&](const StabilityVerdict& v) {
    for (const auto& r : v.reasons) out.reasons.push_back(r);
    if (positive_strength(v.status) > positive_strength(out.status)) {
      out.status = v.status;
      if (v.literature) out.literature = v.literature;
    }
  };

  const auto delta_form = evaluate_thm1_delta_form(p);
  const auto d_form = evaluate_thm1_d_form(p);
  if (delta_form.status != d_form.status) {
    throw ConsistencyError("the delta-form and d-form multiplicity criteria disagree");
  }
  absorb(delta_form);
  absorb(d_form);

  if ((p.d == 3 || p.d == 4) && p.s == 0 && p.delta == 2 && p.min_hessian_rank) {
    const auto rank_form = evaluate_thm2(p);
    const auto corank_form = evaluate_corank_form(p);
    if (rank_form.status != corank_form.status) {
      throw ConsistencyError("the rank and corank forms of the Hessian criterion disagree");
    }
    absorb(rank_form);
    absorb(corank_form);
  }

  absorb(evaluate_mordant(p, cone_free.value_or(false)));

  if (p.singularity_class) {
    if (auto lit = literature_lookup(p.n, p.d, *p.singularity_class)) absorb(*lit);
  }

  // Heuristic inputs weaken every theorem-based reason.
  const bool heuristic = p.s_provenance == Provenance::Heuristic ||
                         p.delta_provenance == Provenance::Heuristic ||
                         (p.min_hessian_rank && p.rank_provenance == Provenance::Heuristic);
  if (heuristic) {
    for (auto& r : out.reasons) {
      if (r.provenance == "theorem") r.provenance = "heuristic";
    }
  }
  return out;
}

}  // namespace gitstab
