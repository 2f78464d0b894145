#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

/// Point of P^n in canonical form: integer coordinates with gcd 1 and the
/// first nonzero coordinate positive.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const std::vector<Rational>& coords);
  explicit ProjectivePoint(const std::vector<Integer>& coords);

  /// [0:...:0:1] in P^n.
  static ProjectivePoint last_coordinate_point(int n);

  const std::vector<Integer>& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()) - 1; }
  std::vector<Rational> rational_coords() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

std::string to_string(const ProjectivePoint& p);

/// Local invariants of V(f) at a point.
struct LocalData {
  ProjectivePoint point;
  int multiplicity = 0;
  /// Lowest-degree part of the chart expansion, in n chart variables.
  Polynomial tangent_cone;
  std::optional<int> hessian_rank;
  std::optional<int> hessian_corank;
  /// Dimension of the span of the tangent cone's first partials.
  int essential_variables = 0;
};

/// Affine chart of f around p, with p moved to the origin by an integer
/// coordinate change sending p to [0:...:0:1].
Polynomial chart_at(const HomogeneousPoly& f, const ProjectivePoint& p);

/// Order of vanishing of f at p: 0 when f(p) != 0, otherwise in [1, d].
int multiplicity_at(const HomogeneousPoly& f, const ProjectivePoint& p);

/// Lower bound on the multiplicity at [0:...:0:1] of any f in M_{>=0}(r)
/// (M_{>0}(r) when strict): 1 + the largest j in [1, d-1] with
/// j r_0 + (d-j) r_n < 0 (<= 0 when strict), or 1 when there is none.
int mult_lower_bound_from_weights(const WeightVector& r, int d, bool strict);

/// Symmetric matrix (a_ij) of a quadratic form sum a_ij x_i x_j.
RationalMatrix quadratic_form_matrix(const Polynomial& q);

/// Rank and corank (n - rank) of the Hessian of the chart at p. Throws
/// std::invalid_argument unless the multiplicity at p is 2.
std::pair<int, int> hessian_rank_at(const HomogeneousPoly& f, const ProjectivePoint& p);

/// Rank of the quadratic form q multiplying x_n^{d-2} in f.
int rank_of_q(const HomogeneousPoly& f);

/// Least integer m with m > 2(n+1)/d - 1 (strict) or m >= 2(n+1)/d - 1.
int m0_threshold(int n, int d, bool strict);

/// Dimension of the span of the first partials of a nonzero form. The form
/// is a cone over a hypersurface in a hyperplane iff this is below the
/// number of variables. Throws std::invalid_argument for the zero form.
int essential_variable_count(const Polynomial& h);

/// Multiplicity, tangent cone and (for double points) Hessian rank at p.
LocalData analyze_point(const HomogeneousPoly& f, const ProjectivePoint& p);

struct FiniteFieldCount {
  int prime = 0;
  long long singular_points = 0;
  long long points_checked = 0;
};

/// Candidate singular points. Everything here except the exact rational
/// points is heuristic evidence.
struct SingularScan {
  std::vector<ProjectivePoint> points;  // sorted, exact
  std::vector<FiniteFieldCount> finite_field_counts;
  int height_bound = 0;
  /// Guess for dim H_sing (-1 = smooth) from the counts; heuristic only.
  int estimated_s = -1;
};

/// Rational points of height <= height_bound where every partial of f
/// vanishes, plus singular point counts over F_p for the given primes
/// (primes p <= d, dividing a denominator, or with too many points are
/// skipped).
SingularScan scan_singular_points(const HomogeneousPoly& f, int height_bound,
                                  const std::vector<int>& primes);

/// Default primes used by the analysis pipeline.
std::vector<int> default_scan_primes();

}  // namespace gitstab
