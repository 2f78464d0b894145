#include "gitstab/torus.hpp"

#include <stdexcept>

#include "gitstab/errors.hpp"
#include "gitstab/simplex.hpp"

namespace gitstab {

namespace {

// Variables [r+ (N) | r- (N) | slack (S)]; rows: sum r = 0, r.i - s_i = rhs,
// optionally r_k = fixed.
std::optional<WeightVector> solve_weight_system(const std::vector<ExponentVector>& support,
                                                int nvars, const Rational& rhs,
                                                std::optional<std::pair<int, int>> fixed) {
  const Eigen::Index n_cols = 2 * nvars + static_cast<Eigen::Index>(support.size());
  const Eigen::Index n_rows = 1 + static_cast<Eigen::Index>(support.size()) + (fixed ? 1 : 0);
  RationalMatrix a = RationalMatrix::Zero(n_rows, n_cols);
  RationalVector b = RationalVector::Zero(n_rows);
  for (int j = 0; j < nvars; ++j) {
    a(0, j) = 1;
    a(0, nvars + j) = -1;
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i + 1);
    for (int j = 0; j < nvars; ++j) {
      a(row, j) = support[i][j];
      a(row, nvars + j) = -support[i][j];
    }
    a(row, 2 * nvars + static_cast<Eigen::Index>(i)) = -1;
    b(row) = rhs;
  }
  if (fixed) {
    const Eigen::Index row = n_rows - 1;
    a(row, fixed->first) = 1;
    a(row, nvars + fixed->first) = -1;
    b(row) = fixed->second;
  }
  const auto lp = find_feasible_point<Rational>(a, b);
  if (lp.status == LpStatus::Infeasible) return std::nullopt;
  std::vector<Rational> r(nvars);
  for (int j = 0; j < nvars; ++j) r[j] = lp.x(j) - lp.x(nvars + j);
  std::vector<std::int64_t> ints;
  for (const auto& z : primitive_integer_vector(r)) ints.push_back(to_int64(z));
  return WeightVector(std::move(ints));
}

std::vector<BarycentricWeight> barycentric_certificate(const std::vector<ExponentVector>& support,
                                                       int nvars, int degree, bool strict) {
  // lambda_i = mu_i + t; maximise t in the non-strict case so that every
  // lambda_i is positive.
  const auto count = static_cast<Eigen::Index>(support.size());
  const Rational centroid(degree, nvars);
  const Eigen::Index n_cols = count + 1;
  RationalMatrix a = RationalMatrix::Zero(1 + nvars, n_cols);
  RationalVector b(1 + nvars);
  RationalVector cost = RationalVector::Zero(n_cols);
  for (Eigen::Index i = 0; i < count; ++i) a(0, i) = 1;
  a(0, count) = strict ? 0 : count;
  b(0) = 1;
  for (int j = 0; j < nvars; ++j) {
    Rational column_sum(0);
    for (Eigen::Index i = 0; i < count; ++i) {
      a(1 + j, i) = support[i][j];
      column_sum += support[i][j];
    }
    a(1 + j, count) = strict ? Rational(0) : column_sum;
    b(1 + j) = centroid;
  }
  if (!strict) cost(count) = -1;
  auto lp = solve_standard_form<Rational>(a, b, cost);
  if (lp.status != LpStatus::Optimal) {
    throw ConsistencyError("torus LP infeasible but the centroid is not in the Newton polytope");
  }
  const Rational t = strict ? Rational(0) : lp.x(count);
  std::vector<BarycentricWeight> out;
  for (Eigen::Index i = 0; i < count; ++i) {
    const Rational lambda = lp.x(i) + t;
    if (lambda != 0) out.push_back({support[i], lambda});
  }
  return out;
}

}  // namespace

bool verify_barycentric_certificate(const HomogeneousPoly& f,
                                    const std::vector<BarycentricWeight>& certificate,
                                    bool strict) {
  const int nvars = f.nvars();
  const Rational centroid(f.degree(), nvars);
  Rational total(0);
  std::vector<Rational> bary(nvars, Rational(0));
  for (const auto& [m, lambda] : certificate) {
    if (f.poly().coefficient(m) == 0) return false;
    if (lambda.sign() < 0 || (!strict && lambda.sign() == 0)) return false;
    total += lambda;
    for (int j = 0; j < nvars; ++j) bary[j] += lambda * m[j];
  }
  if (total != 1) return false;
  for (int j = 0; j < nvars; ++j) {
    if (bary[j] != centroid) return false;
  }
  if (strict) return true;
  // Non-strict: the whole support must carry positive weight and the
  // differences i - c must have rank n.
  if (certificate.size() != f.terms().size()) return false;
  RationalMatrix diffs(static_cast<Eigen::Index>(certificate.size()), nvars);
  for (std::size_t i = 0; i < certificate.size(); ++i) {
    for (int j = 0; j < nvars; ++j) {
      diffs(static_cast<Eigen::Index>(i), j) = Rational(certificate[i].monomial[j]) - centroid;
    }
  }
  return exact_rank(diffs) == nvars - 1;
}

TorusDecision torus_destabilize(const HomogeneousPoly& f, bool strict) {
  if (f.is_zero()) throw std::invalid_argument("torus_destabilize needs a nonzero polynomial");
  const int nvars = f.nvars();
  const auto support = f.support();
  TorusDecision out;
  if (strict) {
    out.witness = solve_weight_system(support, nvars, Rational(1), std::nullopt);
  } else {
    for (int k = 0; k < nvars && !out.witness; ++k) {
      for (int sign : {1, -1}) {
        out.witness = solve_weight_system(support, nvars, Rational(0), std::make_pair(k, sign));
        if (out.witness) break;
      }
    }
  }
  out.feasible = out.witness.has_value();
  if (out.feasible) {
    if (!membership(f, *out.witness, strict)) {
      throw ConsistencyError("LP witness fails exact membership");
    }
    return out;
  }
  out.certificate = barycentric_certificate(support, nvars, f.degree(), strict);
  if (!verify_barycentric_certificate(f, out.certificate, strict)) {
    throw ConsistencyError("torus infeasibility certificate does not verify");
  }
  return out;
}

std::optional<WeightVector> enumerate_weight_oracle(const HomogeneousPoly& f, int bound,
                                                    bool strict, const OracleOptions& opts) {
  if (bound < 1) throw std::invalid_argument("oracle bound must be at least 1");
  const int nvars = f.nvars();
  const auto support = f.support();
  std::vector<std::int64_t> r(nvars, 0);
  std::optional<WeightVector> found;

  auto accepts = [&]() {
    for (const auto& m : support) {
      std::int64_t w = 0;
      for (int j = 0; j < nvars; ++j) w += r[j] * m[j];
      if (strict ? w <= 0 : w < 0) return false;
    }
    if (opts.assume_s) {
      WeightVector sorted = WeightVector(r).sorted();
      const int s = *opts.assume_s;
      if (s >= 0 && s <= sorted.n() - 2 && !weight_inequality_filter(sorted, s, f.degree(), strict)) {
        return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int j, std::int64_t partial) -> bool {
    const std::int64_t remaining = nvars - j;  // coordinates still free, including the last
    if (j == nvars - 1) {
      r[j] = -partial;
      if (r[j] < -bound || r[j] > bound) return false;
      bool nonzero = false;
      for (auto x : r) nonzero = nonzero || x != 0;
      if (!nonzero || !accepts()) return false;
      found = WeightVector(r);
      return true;
    }
    for (std::int64_t v = -bound; v <= bound; ++v) {
      const std::int64_t next = partial + v;
      if (next > bound * (remaining - 1) || next < -bound * (remaining - 1)) continue;
      r[j] = v;
      if (self(self, j + 1, next)) return true;
    }
    return false;
  };
  rec(rec, 0, 0);
  return found;
}

}  // namespace gitstab
