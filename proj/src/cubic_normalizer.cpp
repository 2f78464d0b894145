#include "gitstab/cubic_normalizer.hpp"

#include <string>

#include "gitstab/errors.hpp"

namespace gitstab {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  Integer a = boost::multiprecision::sqrt(num(q));
  Integer b = boost::multiprecision::sqrt(den(q));
  if (a * a != num(q) || b * b != den(q)) return std::nullopt;
  return Rational(a, b);
}

ExponentVector unit_sum(int nvars, std::initializer_list<int> idx) {
  ExponentVector e(nvars, 0);
  for (int j : idx) ++e[j];
  return e;
}

// Substitution x_{n-1} -> a y_{n-1} + b y_n, x_n -> c y_{n-1} + e y_n that
// removes x_n^2 from the binary quadratic  alpha u^2 + beta u v + gamma v^2.
RationalMatrix isotropic_frame(int n, const Rational& alpha, const Rational& beta,
                               const Rational& gamma) {
  RationalMatrix p = identity_matrix(n + 1);  // x = p y
  if (gamma == 0) return p;
  if (alpha == 0) {
    p(n - 1, n - 1) = 0;
    p(n - 1, n) = 1;
    p(n, n - 1) = 1;
    p(n, n) = 0;
    return p;
  }
  auto root = rational_sqrt(beta * beta - 4 * alpha * gamma);
  if (!root) {
    throw StructuralError(
        "the quadratic part in (x_{n-1}, x_n) has no rational isotropic direction; "
        "the normalization needs a quadratic field extension");
  }
  p(n - 1, n) = (-beta + *root) / (2 * alpha);
  return p;
}

}  // namespace

NormalizedCertificate normalize_cubic_certificate(const HomogeneousPoly& f, const WeightVector& r) {
  const int n = f.n();
  if (f.degree() != 3) throw std::invalid_argument("cubic normalization needs d = 3");
  if (static_cast<int>(r.size()) != n + 1) throw std::invalid_argument("weight length mismatch");
  if (!r.is_sorted()) throw std::invalid_argument("cubic normalization needs sorted weights");
  if (n < 2) throw std::invalid_argument("cubic normalization needs n >= 2");
  if (auto bad = find_violation(f, r, false)) {
    throw std::invalid_argument("f is not in M_{>=0}(r): a monomial has weight " +
                                std::to_string(bad->weight));
  }
  if (r[0] + 2 * r[n] < 0) return {identity_matrix(n + 1), r};

  if (n >= 3) {
    if (r[n - 1] >= 0) {
      throw StructuralError("r_0 + 2 r_n >= 0 forces r_{n-1} < 0, but r_{n-1} = " +
                            std::to_string(r[n - 1]));
    }
    for (int j = 1; j <= n - 2; ++j) {
      if (r[j] != 0) {
        throw StructuralError(
            "r_0 + 2 r_n >= 0 with isolated singularities forces r_1 = ... = r_{n-2} = 0, but r_" +
            std::to_string(j) + " = " + std::to_string(r[j]) +
            " (the singular locus is not finite)");
      }
    }
  }

  const int nv = n + 1;
  const Rational alpha = f.poly().coefficient(unit_sum(nv, {0, n - 1, n - 1}));
  const Rational beta = f.poly().coefficient(unit_sum(nv, {0, n - 1, n}));
  const Rational gamma = f.poly().coefficient(unit_sum(nv, {0, n, n}));
  // apply_linear_change(f, sigma) evaluates f at x = sigma^T y.
  const RationalMatrix sigma1 = isotropic_frame(n, alpha, beta, gamma).transpose();
  const HomogeneousPoly f1 = apply_linear_change(f, sigma1);

  // f1 = x_n x_0 l(x_0..x_{n-1}) + c(x_0..x_{n-1})
  RationalVector l = RationalVector::Zero(nv);
  for (const auto& [m, c] : f1.terms()) {
    if (m[n] == 0) continue;
    if (m[n] != 1 || m[0] == 0) {
      throw StructuralError("after normalizing the quadratic part, a monomial still has x_n-degree " +
                            std::to_string(m[n]) + " or lacks x_0");
    }
    ExponentVector rest = m;
    --rest[0];
    --rest[n];
    for (int j = 0; j < n; ++j) {
      if (rest[j] == 1) l(j) += c;
    }
  }

  RationalMatrix sigma2 = identity_matrix(nv);
  int pivot = -1;
  for (int k = 1; k < n; ++k) {
    if (l(k) != 0) {
      pivot = k;
      break;
    }
  }
  if (pivot > 0) {
    // New coordinates y = M x with y_1 = l(x); sigma2 = (M^{-1})^T.
    RationalMatrix m = identity_matrix(nv);
    m.row(1) = l.transpose();
    if (pivot != 1) {
      m.row(pivot).setZero();
      m(pivot, 1) = 1;
    }
    sigma2 = exact_inverse(m).transpose();
  }

  std::vector<std::int64_t> weights(nv, 0);
  weights[0] = 1;
  weights[1] += 1;
  weights[n] = -2;
  NormalizedCertificate out{sigma2 * sigma1, WeightVector(std::move(weights))};
  if (!membership(apply_linear_change(f, out.sigma), out.r, false) || out.r[0] + 2 * out.r[n] >= 0) {
    throw ConsistencyError("cubic normalization produced a certificate that does not verify");
  }
  return out;
}

}  // namespace gitstab
