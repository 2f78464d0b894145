// Shared test helpers: seeded generators and brute-force oracles that do not
// call into the algorithms they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/polynomial.hpp"
#include "gitstab/rational.hpp"
#include "gitstab/weights.hpp"

namespace testing {

using namespace gitstab;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

inline Rational random_coefficient(Rng& rng) {
  int v = 0;
  while (v == 0) v = rng.uniform(-5, 5);
  return rng.coin(0.2) ? Rational(v, rng.uniform(2, 4)) : Rational(v);
}

inline std::int64_t weight(const std::vector<std::int64_t>& r, const ExponentVector& e) {
  std::int64_t w = 0;
  for (std::size_t j = 0; j < r.size(); ++j) w += r[j] * e[j];
  return w;
}

/// Sorted, sum-zero, nonzero weights with entries in [-m, m].
inline WeightVector random_sorted_weights(Rng& rng, int n, int m) {
  for (;;) {
    std::vector<std::int64_t> r(n + 1);
    std::int64_t sum = 0;
    for (int j = 0; j < n; ++j) sum += r[j] = rng.uniform(-m, m);
    r[n] = -sum;
    if (r[n] < -m || r[n] > m) continue;
    if (std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; })) continue;
    std::sort(r.rbegin(), r.rend());
    return WeightVector(r);
  }
}

/// Random form whose support is a random nonempty subset of the monomials
/// of weight >= 0 (> 0 when strict).
inline HomogeneousPoly random_form_in(Rng& rng, const WeightVector& r, int d, bool strict,
                                      double density = 0.4) {
  std::vector<ExponentVector> allowed;
  for (const auto& e : all_monomials(static_cast<int>(r.size()), d)) {
    const auto w = weight(r.values(), e);
    if (strict ? w > 0 : w >= 0) allowed.push_back(e);
  }
  Polynomial p(static_cast<int>(r.size()));
  while (p.is_zero()) {
    for (const auto& e : allowed) {
      if (rng.coin(density)) p.add_term(e, random_coefficient(rng));
    }
  }
  return HomogeneousPoly(std::move(p), d);
}

inline HomogeneousPoly random_form(Rng& rng, int n, int d, double density = 0.3) {
  Polynomial p(n + 1);
  const auto monomials = all_monomials(n + 1, d);
  while (p.is_zero()) {
    for (const auto& e : monomials) {
      if (rng.coin(density)) p.add_term(e, random_coefficient(rng));
    }
  }
  return HomogeneousPoly(std::move(p), d);
}

inline RationalMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
  return m;
}

/// Naive Gaussian elimination over Q.
inline int naive_rank(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int naive_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return naive_rank(a);
}

inline RationalMatrix random_invertible(Rng& rng, int size, int bound) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, size, size, bound);
    if (naive_rank(m) == size) return m;
  }
}

using MapPoly = std::map<ExponentVector, Rational>;

inline MapPoly to_map(const Polynomial& p) {
  MapPoly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

inline void clean(MapPoly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
}

inline MapPoly multiply(const MapPoly& a, const MapPoly& b) {
  MapPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      ExponentVector e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out[e] += ca * cb;
    }
  }
  clean(out);
  return out;
}

/// sigma f by expanding products of the linear forms sum_k sigma(k, j) x_k.
inline MapPoly naive_substitute(const HomogeneousPoly& f, const RationalMatrix& sigma) {
  const int nv = f.nvars();
  std::vector<MapPoly> linear(nv);
  for (int j = 0; j < nv; ++j) {
    for (int k = 0; k < nv; ++k) {
      if (sigma(k, j) == 0) continue;
      ExponentVector e(nv, 0);
      e[k] = 1;
      linear[j][e] = sigma(k, j);
    }
  }
  MapPoly out;
  for (const auto& [e, c] : f.terms()) {
    MapPoly term{{ExponentVector(nv, 0), c}};
    for (int j = 0; j < nv; ++j)
      for (int k = 0; k < e[j]; ++k) term = multiply(term, linear[j]);
    for (const auto& [m, v] : term) out[m] += v;
  }
  clean(out);
  return out;
}

inline MapPoly differentiate(const MapPoly& p, int j) {
  MapPoly out;
  for (const auto& [e, c] : p) {
    if (e[j] == 0) continue;
    ExponentVector m = e;
    --m[j];
    out[m] += c * e[j];
  }
  clean(out);
  return out;
}

inline Rational evaluate_map(const MapPoly& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [e, c] : p) {
    Rational t = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) t *= x[j];
    total += t;
  }
  return total;
}

/// Order of vanishing at x: the least k such that some k-th partial of f is
/// nonzero at x.
inline int naive_multiplicity(const HomogeneousPoly& f, const std::vector<Rational>& x) {
  std::vector<MapPoly> layer{to_map(f.poly())};
  for (int k = 0; k <= f.degree(); ++k) {
    for (const auto& p : layer)
      if (evaluate_map(p, x) != 0) return k;
    std::vector<MapPoly> next;
    for (const auto& p : layer)
      for (int j = 0; j < f.nvars(); ++j) next.push_back(differentiate(p, j));
    layer = std::move(next);
  }
  return f.degree();
}

inline bool naive_member(const HomogeneousPoly& f, const std::vector<std::int64_t>& r, bool strict) {
  for (const auto& [e, c] : f.terms()) {
    const auto w = weight(r, e);
    if (strict ? w <= 0 : w < 0) return false;
  }
  return true;
}

inline bool naive_member(const MapPoly& f, const std::vector<std::int64_t>& r, bool strict) {
  for (const auto& [e, c] : f) {
    const auto w = weight(r, e);
    if (strict ? w <= 0 : w < 0) return false;
  }
  return true;
}

/// Odometer over [-bound, bound]^{n+1}; independent of the library oracle.
inline bool brute_force_destabilizable(const HomogeneousPoly& f, int bound, bool strict) {
  const int nv = f.nvars();
  std::vector<std::int64_t> r(nv, -bound);
  for (;;) {
    std::int64_t sum = 0;
    bool nonzero = false;
    for (auto v : r) {
      sum += v;
      nonzero = nonzero || v != 0;
    }
    if (sum == 0 && nonzero && naive_member(f, r, strict)) return true;
    int k = 0;
    while (k < nv && r[k] == bound) r[k++] = -bound;
    if (k == nv) return false;
    ++r[k];
  }
}

}  // namespace testing
