#pragma once

#include <optional>
#include <vector>

#include "gitstab/polynomial.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

struct BarycentricWeight {
  ExponentVector monomial;
  Rational lambda;
};

/// Outcome of the fixed-frame destabilization question.
///
/// Feasible: `witness` is an integer, gcd-reduced weight vector with f in
/// M_{>0}(witness) (strict) or M_{>=0}(witness).
///
/// Infeasible: `certificate` holds convex weights on the support whose
/// barycenter is the centroid c = (d/(n+1), ..., d/(n+1)). In non-strict mode
/// every weight is positive and the vectors i - c span the hyperplane
/// sum = 0, which rules out every nonzero r.
struct TorusDecision {
  bool feasible = false;
  std::optional<WeightVector> witness;
  std::vector<BarycentricWeight> certificate;
};

/// Decides whether some 1-PS in the diagonal torus destabilizes f in the
/// current coordinates, by exact LP. Both outcomes are re-verified before
/// returning; a failed re-verification throws ConsistencyError.
TorusDecision torus_destabilize(const HomogeneousPoly& f, bool strict);

/// Independent check of an infeasibility certificate.
bool verify_barycentric_certificate(const HomogeneousPoly& f,
                                    const std::vector<BarycentricWeight>& certificate,
                                    bool strict);

struct OracleOptions {
  /// Skip vectors whose sorted form fails weight_inequality_filter for this s.
  std::optional<int> assume_s;
};

/// Brute force over integer vectors with |r_j| <= bound, sum 0, r != 0, in
/// ascending lexicographic order of (r_0, ..., r_{n-1}). Returns the first
/// vector with f in M_{>0}(r) (strict) or M_{>=0}(r).
std::optional<WeightVector> enumerate_weight_oracle(const HomogeneousPoly& f, int bound,
                                                    bool strict, const OracleOptions& opts = {});

}  // namespace gitstab
