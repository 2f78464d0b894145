#include "gitstab/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gitstab {

WeightVector::WeightVector(std::vector<std::int64_t> r) : r_(std::move(r)) {
  if (r_.empty()) throw std::invalid_argument("empty weight vector");
  __int128 sum = 0;
  bool nonzero = false;
  for (auto x : r_) {
    sum += x;
    nonzero = nonzero || x != 0;
  }
  if (sum != 0) throw std::invalid_argument("weights must sum to zero");
  if (!nonzero) throw std::invalid_argument("weight vector must be nonzero");
}

bool WeightVector::is_sorted() const {
  return std::is_sorted(r_.begin(), r_.end(), std::greater<>());
}

WeightVector WeightVector::sorted(std::vector<int>* perm) const {
  std::vector<int> idx(r_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return r_[a] > r_[b]; });
  std::vector<std::int64_t> out;
  out.reserve(r_.size());
  for (int k : idx) out.push_back(r_[k]);
  if (perm) *perm = idx;
  return WeightVector(std::move(out));
}

WeightVector WeightVector::normalized() const {
  std::int64_t g = 0;
  for (auto x : r_) g = std::gcd(g, x);
  std::vector<std::int64_t> out = r_;
  for (auto& x : out) x /= g;
  return WeightVector(std::move(out));
}

int WeightVector::last_nonnegative_index(bool strict) const {
  int t = -1;
  for (std::size_t j = 0; j < r_.size(); ++j) {
    if (strict ? r_[j] > 0 : r_[j] >= 0) t = static_cast<int>(j);
  }
  return t;
}

std::int64_t weight_of(const WeightVector& r, const ExponentVector& m) {
  if (m.size() != r.size()) {
    throw std::invalid_argument("weight vector has length " + std::to_string(r.size()) +
                                ", monomial has " + std::to_string(m.size()));
  }
  __int128 w = 0;
  for (std::size_t j = 0; j < m.size(); ++j) w += static_cast<__int128>(r[j]) * m[j];
  if (w > std::numeric_limits<std::int64_t>::max() || w < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("weight overflows 64 bits");
  }
  return static_cast<std::int64_t>(w);
}

std::optional<WeightViolation> find_violation(const HomogeneousPoly& f, const WeightVector& r,
                                              bool strict) {
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t w = weight_of(r, m);
    if (strict ? w <= 0 : w < 0) return WeightViolation{m, w};
  }
  return std::nullopt;
}

bool membership(const HomogeneousPoly& f, const WeightVector& r, bool strict) {
  return !find_violation(f, r, strict).has_value();
}

StabilityVerdict verify_certificate(const HomogeneousPoly& f, const Certificate& c) {
  if (static_cast<int>(c.r.size()) != f.nvars()) {
    throw std::invalid_argument("certificate weight length does not match the polynomial");
  }
  const HomogeneousPoly g = apply_linear_change(f, c.sigma);
  StabilityVerdict v;
  Reason reason;
  reason.criterion = "certificate";
  reason.provenance = "certificate";
  if (auto bad = find_violation(g, c.r, c.strict)) {
    v.status = Status::Inconclusive;
    reason.margin = std::to_string(bad->weight);
    reason.note = "rejected: monomial " + to_string(Polynomial::monomial(bad->monomial, Rational(1))) +
                  " of sigma f has weight " + std::to_string(bad->weight);
    v.reasons.push_back(std::move(reason));
    return v;
  }
  std::int64_t min_weight = std::numeric_limits<std::int64_t>::max();
  for (const auto& [m, coef] : g.terms()) min_weight = std::min(min_weight, weight_of(c.r, m));
  v.status = c.strict ? Status::NotSemiStable : Status::NotStable;
  reason.margin = std::to_string(min_weight);
  reason.note = c.strict ? "sigma f lies in M_{>0}(r); the limit under the 1-PS is 0"
                         : "sigma f lies in M_{>=0}(r); the limit under the 1-PS exists";
  v.reasons.push_back(std::move(reason));
  return v;
}

Certificate sort_certificate(const Certificate& c) {
  std::vector<int> perm;
  WeightVector r = c.r.sorted(&perm);
  return Certificate{permutation_matrix(perm) * c.sigma, std::move(r), c.strict};
}

bool weight_inequality_filter(const WeightVector& r, int s, int d, bool strict) {
  const int n = r.n();
  if (!r.is_sorted()) throw std::invalid_argument("weight inequality filter needs sorted weights");
  if (s < 0 || s > n - 2) {
    throw std::invalid_argument("singular locus dimension " + std::to_string(s) +
                                " outside [0, n-2]");
  }
  auto holds = [strict](__int128 value) { return strict ? value > 0 : value >= 0; };
  const int t = r.last_nonnegative_index(strict);
  if (2 * t + 2 < n - s) return false;
  if (!holds(static_cast<__int128>(r[0]) + static_cast<__int128>(d - 1) * r[n - 1 - s])) return false;
  if (s < n - 2) {
    __int128 sum = 0;
    for (int j = 1; j <= n - 2 - s; ++j) sum += r[j];
    if (!holds(sum)) return false;
  }
  return true;
}

}  // namespace gitstab
