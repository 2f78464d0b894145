#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gitstab/rational.hpp"
#include "gitstab/verdict.hpp"

namespace gitstab {

enum class Provenance { UserAsserted, VerifiedAtPoints, Heuristic };

std::string_view to_string(Provenance p);

/// Singularity data of a hypersurface of degree d in P^n.
struct SingularityProfile {
  int n = 2;
  int d = 3;
  int s = -1;      // dimension of the singular locus, -1 when smooth
  int delta = 1;   // maximal multiplicity
  std::optional<int> min_hessian_rank;  // only when every singular point is a double point
  /// "smooth", "A1", "A2", "Am" or "ADE"; used for the literature table.
  std::optional<std::string> singularity_class;
  Provenance s_provenance = Provenance::UserAsserted;
  Provenance delta_provenance = Provenance::UserAsserted;
  Provenance rank_provenance = Provenance::UserAsserted;

  /// Throws std::invalid_argument on inconsistent data.
  void validate() const;
  std::optional<int> max_corank() const;
};

StabilityVerdict evaluate_thm1_delta_form(const SingularityProfile& p);
StabilityVerdict evaluate_thm1_d_form(const SingularityProfile& p);

/// Hessian-rank criterion for d in {3, 4}, isolated double points.
/// Throws std::invalid_argument when the profile is outside its scope.
StabilityVerdict evaluate_thm2(const SingularityProfile& p);
/// Same criterion phrased with the maximal corank n - r.
StabilityVerdict evaluate_corank_form(const SingularityProfile& p);

/// Multiplicity thresholds d >= delta min(n+1, s+3) and, when every tangent
/// cone at a point of maximal multiplicity is not a cone over a hypersurface
/// in a hyperplane, d >= (delta-1) min(n+1, s+3). Strict inequality gives
/// Stable.
StabilityVerdict evaluate_mordant(const SingularityProfile& p, bool cone_free);

/// The threshold a + sqrt(a^2 - delta + 1) + 1 with a = delta(s+2)/2 against
/// the integer threshold delta(s+3).
struct BoundComparison {
  Rational rational_part;  // a + 1
  Rational radicand;       // a^2 - delta + 1
  std::int64_t mordant_threshold = 0;
  bool strictly_better = false;

  std::string describe() const;
  double approximate() const;
};

BoundComparison compare_bounds(int delta, int s);

struct LiteratureEntry {
  int n = 0;
  int d = 0;
  std::string singularity_class;
  Status status = Status::Inconclusive;
  std::string source;
};

/// Parses the literature table format: a JSON list of
/// {"n", "d", "class", "status", "source"} objects.
std::vector<LiteratureEntry> parse_literature_table(std::string_view json_text);

/// The table shipped with the library.
const std::vector<LiteratureEntry>& builtin_literature_table();

/// Classes form the chain smooth < A1 < A2 < Am < ADE; an entry for class C
/// covers every query class below or equal to C.
std::optional<StabilityVerdict> literature_lookup(int n, int d, std::string_view singularity_class,
                                                  const std::vector<LiteratureEntry>& table =
                                                      builtin_literature_table());

/// Strongest positive conclusion over every applicable criterion. Throws
/// ConsistencyError if the two forms of a criterion disagree.
StabilityVerdict combined_verdict(const SingularityProfile& p, std::optional<bool> cone_free = {});

}  // namespace gitstab
