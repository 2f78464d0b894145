#pragma once

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

struct NormalizedCertificate {
  RationalMatrix sigma;
  WeightVector r;
};

/// For a cubic f in M_{>=0}(r) with isolated singularities, produces a
/// certificate (sigma, r') with sigma f in M_{>=0}(r') and r'_0 + 2 r'_n < 0,
/// so that [0:...:0:1] is a singular point of V(sigma f).
///
/// When r already satisfies r_0 + 2 r_n < 0 the input is returned with sigma
/// the identity. Otherwise the weights must have the shape
/// (a, 0, ..., 0, b, c); f is then brought to the form
/// x_n x_0 l(x_0..x_{n-1}) + c(x_0..x_{n-1}) and l is renamed x_1, giving
/// r' = (1, 1, 0, ..., 0, -2).
///
/// Throws std::invalid_argument when d != 3, r is unsorted, or f is not in
/// M_{>=0}(r); StructuralError when the weight shape is impossible for
/// isolated singularities or the quadratic part in (x_{n-1}, x_n) has no
/// rational isotropic direction.
NormalizedCertificate normalize_cubic_certificate(const HomogeneousPoly& f, const WeightVector& r);

}  // namespace gitstab
