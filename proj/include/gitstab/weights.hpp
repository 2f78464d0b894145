#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/verdict.hpp"

namespace gitstab {

/// Weights (r_0, ..., r_n) of a one-parameter subgroup diag(t^{r_0}, ..., t^{r_n})
/// of SL(n+1): integers summing to zero, not all zero. Any order is allowed;
/// sorted() produces the descending normal form.
class WeightVector {
 public:
  /// Throws std::invalid_argument unless the entries sum to 0 and are not all 0.
  explicit WeightVector(std::vector<std::int64_t> r);

  std::size_t size() const { return r_.size(); }
  int n() const { return static_cast<int>(r_.size()) - 1; }
  std::int64_t operator[](std::size_t j) const { return r_[j]; }
  const std::vector<std::int64_t>& values() const { return r_; }

  bool is_sorted() const;

  /// Descending rearrangement. `perm[k]` is the index in *this of entry k.
  WeightVector sorted(std::vector<int>* perm = nullptr) const;

  /// Divides out the gcd of the entries.
  WeightVector normalized() const;

  /// Largest index t with r_t >= 0 (r_t > 0 when strict). Requires sorted.
  int last_nonnegative_index(bool strict) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> r_;
};

/// sum_j r_j i_j
std::int64_t weight_of(const WeightVector& r, const ExponentVector& m);

struct WeightViolation {
  ExponentVector monomial;
  std::int64_t weight;
};

/// The first support monomial (graded-lex order) whose weight is < 0, or <= 0
/// when strict.
std::optional<WeightViolation> find_violation(const HomogeneousPoly& f, const WeightVector& r,
                                              bool strict);

/// f in M_{>=0}(r) (strict = false) or M_{>0}(r) (strict = true).
bool membership(const HomogeneousPoly& f, const WeightVector& r, bool strict);

/// A destabilizing pair: sigma f lies in M_{>0}(r) (strict) or M_{>=0}(r).
struct Certificate {
  RationalMatrix sigma;
  WeightVector r;
  bool strict = false;
};

/// Exact check of a certificate. Accepted certificates yield NotSemiStable
/// (strict) or NotStable; rejected ones yield Inconclusive with the first
/// violating monomial in the reason note. Throws std::domain_error for a
/// singular sigma.
StabilityVerdict verify_certificate(const HomogeneousPoly& f, const Certificate& c);

/// Reorders r into descending order and folds the matching coordinate
/// permutation into sigma; the result certifies the same statement.
Certificate sort_certificate(const Certificate& c);

/// Necessary conditions on a sorted r for some f in M_{>=0}(r) (M_{>0}(r) when
/// strict) to have singular locus of dimension <= s:
///   2t + 2 >= n - s,  r_0 + (d-1) r_{n-1-s} >= 0,  r_1 + ... + r_{n-2-s} >= 0
/// (strict inequalities and r_t > 0 in strict mode; the last sum is skipped
/// for s = n-2). Throws std::invalid_argument for unsorted r or s outside
/// [0, n-2].
bool weight_inequality_filter(const WeightVector& r, int s, int d, bool strict);

}  // namespace gitstab
