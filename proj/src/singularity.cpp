#include "gitstab/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <stdexcept>

namespace gitstab {

// ---------------------------------------------------------------------------
// ProjectivePoint

ProjectivePoint::ProjectivePoint(const std::vector<Rational>& coords) {
  auto ints = primitive_integer_vector(coords);
  *this = ProjectivePoint(ints);
}

ProjectivePoint::ProjectivePoint(const std::vector<Integer>& coords) : coords_(coords) {
  Integer g(0);
  for (const auto& z : coords_) g = gcd(g, z);
  if (g == 0) throw std::invalid_argument("the zero vector is not a projective point");
  for (auto& z : coords_) z /= g;
  auto first = std::find_if(coords_.begin(), coords_.end(), [](const Integer& z) { return z != 0; });
  if (*first < 0) {
    for (auto& z : coords_) z = -z;
  }
}

ProjectivePoint ProjectivePoint::last_coordinate_point(int n) {
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  return ProjectivePoint(c);
}

std::vector<Rational> ProjectivePoint::rational_coords() const {
  return {coords_.begin(), coords_.end()};
}

std::string to_string(const ProjectivePoint& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ":";
    out += p.coords()[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Local invariants

Polynomial chart_at(const HomogeneousPoly& f, const ProjectivePoint& p) {
  if (p.n() != f.n()) throw std::invalid_argument("point and polynomial live in different spaces");
  const ProjectivePoint q = ProjectivePoint::last_coordinate_point(f.n());
  if (p == q) return dehomogenize_at_last(f);
  return dehomogenize_at_last(apply_linear_change(f, point_to_last_frame(p.coords())));
}

int multiplicity_at(const HomogeneousPoly& f, const ProjectivePoint& p) {
  return std::max(chart_at(f, p).min_degree(), 0);
}

int mult_lower_bound_from_weights(const WeightVector& r, int d, bool strict) {
  const std::int64_t top = r[0];
  const std::int64_t bottom = r[r.size() - 1];
  int best = 0;
  for (int j = 1; j <= d - 1; ++j) {
    const __int128 v = static_cast<__int128>(j) * top + static_cast<__int128>(d - j) * bottom;
    if (strict ? v <= 0 : v < 0) best = j;
  }
  return best + 1;
}

RationalMatrix quadratic_form_matrix(const Polynomial& q) {
  const int n = q.nvars();
  RationalMatrix a = RationalMatrix::Zero(n, n);
  for (const auto& [e, c] : q.terms()) {
    if (total_degree(e) != 2) throw std::invalid_argument("not a quadratic form");
    std::vector<int> idx;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < e[j]; ++k) idx.push_back(j);
    }
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) += c;
    } else {
      a(idx[0], idx[1]) += c / 2;
      a(idx[1], idx[0]) += c / 2;
    }
  }
  return a;
}

std::pair<int, int> hessian_rank_at(const HomogeneousPoly& f, const ProjectivePoint& p) {
  const Polynomial chart = chart_at(f, p);
  const int mult = std::max(chart.min_degree(), 0);
  if (mult != 2) {
    throw std::invalid_argument("Hessian rank needs a double point; multiplicity at " + to_string(p) +
                                " is " + std::to_string(mult));
  }
  const int rank = static_cast<int>(exact_rank(quadratic_form_matrix(chart.homogeneous_part(2))));
  return {rank, f.n() - rank};
}

int rank_of_q(const HomogeneousPoly& f) {
  if (f.degree() < 2) return 0;
  const Polynomial q = dehomogenize_at_last(f).homogeneous_part(2);
  return static_cast<int>(exact_rank(quadratic_form_matrix(q)));
}

int m0_threshold(int n, int d, bool strict) {
  const Rational x = Rational(2 * (n + 1), d) - 1;
  Integer m = ceil(x);
  if (strict && Rational(m) == x) m += 1;
  return static_cast<int>(to_int64(m));
}

int essential_variable_count(const Polynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("essential variable count of the zero form");
  if (!h.is_homogeneous()) throw std::invalid_argument("essential variable count needs a form");
  const int nv = h.nvars();
  const int deg = h.total_degree();
  if (deg == 0) return 0;
  const auto basis = all_monomials(nv, deg - 1);
  RationalMatrix coeffs = RationalMatrix::Zero(nv, static_cast<Eigen::Index>(basis.size()));
  for (int j = 0; j < nv; ++j) {
    const Polynomial dj = h.derivative(j);
    for (std::size_t b = 0; b < basis.size(); ++b) coeffs(j, static_cast<Eigen::Index>(b)) = dj.coefficient(basis[b]);
  }
  return static_cast<int>(exact_rank(coeffs));
}

LocalData analyze_point(const HomogeneousPoly& f, const ProjectivePoint& p) {
  const Polynomial chart = chart_at(f, p);
  LocalData out{p, std::max(chart.min_degree(), 0), Polynomial(f.n()), std::nullopt, std::nullopt, 0};
  if (out.multiplicity == 0) return out;
  out.tangent_cone = chart.homogeneous_part(out.multiplicity);
  out.essential_variables = essential_variable_count(out.tangent_cone);
  if (out.multiplicity == 2) {
    const int rank = static_cast<int>(exact_rank(quadratic_form_matrix(out.tangent_cone)));
    out.hessian_rank = rank;
    out.hessian_corank = f.n() - rank;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Singular point scan

namespace {

struct IntegerForm {
  std::vector<std::pair<std::vector<int>, Integer>> terms;
};

IntegerForm integerize(const Polynomial& p) {
  Integer l(1);
  for (const auto& [e, c] : p.terms()) l = lcm(l, den(c));
  IntegerForm out;
  for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, num(c) * (l / den(c)));
  return out;
}

// Exact evaluation at a small integer point; falls back to big integers when
// the 128-bit accumulation would overflow.
bool vanishes_at(const IntegerForm& g, const std::vector<long long>& x) {
  __int128 total = 0;
  bool overflow = false;
  for (const auto& [e, c] : g.terms) {
    if (c > Integer(std::numeric_limits<long long>::max()) ||
        c < Integer(std::numeric_limits<long long>::min())) {
      overflow = true;
      break;
    }
    __int128 t = c.convert_to<long long>();
    for (std::size_t j = 0; j < e.size() && t != 0; ++j) {
      for (int k = 0; k < e[j]; ++k) {
        if (__builtin_mul_overflow(t, static_cast<__int128>(x[j]), &t)) overflow = true;
      }
    }
    if (__builtin_add_overflow(total, t, &total)) overflow = true;
    if (overflow) break;
  }
  if (!overflow) return total == 0;
  Integer big(0);
  for (const auto& [e, c] : g.terms) {
    Integer t = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (int k = 0; k < e[j]; ++k) t *= x[j];
    }
    big += t;
  }
  return big == 0;
}

long long mod_form(const std::vector<std::pair<std::vector<int>, long long>>& g,
                   const std::vector<long long>& x, long long p) {
  long long total = 0;
  for (const auto& [e, c] : g) {
    long long t = c;
    for (std::size_t j = 0; j < e.size() && t != 0; ++j) {
      for (int k = 0; k < e[j]; ++k) t = (t * x[j]) % p;
    }
    total = (total + t) % p;
  }
  return total;
}

long long projective_point_count(int n, long long p) {
  long long count = 0;
  long long power = 1;
  for (int i = 0; i <= n; ++i) {
    count += power;
    power *= p;
    if (count > 100'000'000) return count;
  }
  return count;
}

long long inverse_mod(long long a, long long p) {
  long long result = 1;
  long long base = a % p;
  for (long long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

constexpr long long kMaxFiniteFieldPoints = 250'000;

}  // namespace

std::vector<int> default_scan_primes() { return {5, 7, 11, 13, 17}; }

SingularScan scan_singular_points(const HomogeneousPoly& f, int height_bound,
                                  const std::vector<int>& primes) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be at least 1");
  const int nv = f.nvars();
  std::vector<IntegerForm> grad;
  for (int j = 0; j < nv; ++j) grad.push_back(integerize(f.poly().derivative(j)));
  const IntegerForm whole = integerize(f.poly());

  SingularScan out;
  out.height_bound = height_bound;

  std::vector<long long> x(nv, -height_bound);
  while (true) {
    // Canonical representatives only: first nonzero coordinate positive, gcd 1.
    auto first = std::find_if(x.begin(), x.end(), [](long long v) { return v != 0; });
    if (first != x.end() && *first > 0) {
      long long g = 0;
      for (auto v : x) g = std::gcd(g, v);
      if (g == 1) {
        bool singular = vanishes_at(whole, x);
        for (int j = 0; j < nv && singular; ++j) singular = vanishes_at(grad[j], x);
        if (singular) {
          std::vector<Integer> c(x.begin(), x.end());
          out.points.emplace_back(c);
        }
      }
    }
    int j = nv - 1;
    while (j >= 0 && x[j] == height_bound) {
      x[j] = -height_bound;
      --j;
    }
    if (j < 0) break;
    ++x[j];
  }
  std::sort(out.points.begin(), out.points.end());

  // Finite-field counts.
  Integer den_lcm(1);
  for (const auto& [e, c] : f.terms()) den_lcm = lcm(den_lcm, den(c));
  for (int p : primes) {
    if (p <= f.degree()) continue;
    if (den_lcm % p == 0) continue;
    const long long total = projective_point_count(f.n(), p);
    if (total > kMaxFiniteFieldPoints) continue;
    auto reduce = [&](const Polynomial& poly) {
      std::vector<std::pair<std::vector<int>, long long>> g;
      for (const auto& [e, c] : poly.terms()) {
        const long long dp = Integer(den(c) % p).convert_to<long long>();
        long long v = Integer(num(c) % p).convert_to<long long>();
        if (v < 0) v += p;
        g.emplace_back(e, v * inverse_mod(dp, p) % p);
      }
      return g;
    };
    const auto fp = reduce(f.poly());
    std::vector<std::vector<std::pair<std::vector<int>, long long>>> gp;
    for (int j = 0; j < nv; ++j) gp.push_back(reduce(f.poly().derivative(j)));

    FiniteFieldCount count{p, 0, 0};
    // Points with leading coordinate 1 at position `lead`, zeros before it.
    for (int lead = 0; lead < nv; ++lead) {
      std::vector<long long> pt(nv, 0);
      pt[lead] = 1;
      while (true) {
        ++count.points_checked;
        bool singular = mod_form(fp, pt, p) == 0;
        for (int j = 0; j < nv && singular; ++j) singular = mod_form(gp[j], pt, p) == 0;
        if (singular) ++count.singular_points;
        int k = nv - 1;
        while (k > lead && pt[k] == p - 1) {
          pt[k] = 0;
          --k;
        }
        if (k == lead) break;
        ++pt[k];
      }
    }
    out.finite_field_counts.push_back(count);
  }

  // Heuristic dimension estimate.
  const FiniteFieldCount* largest = nullptr;
  for (const auto& c : out.finite_field_counts) {
    if (!largest || c.prime > largest->prime) largest = &c;
  }
  bool any_singular = !out.points.empty();
  for (const auto& c : out.finite_field_counts) any_singular = any_singular || c.singular_points > 0;
  if (!any_singular) {
    out.estimated_s = -1;
  } else if (largest && largest->singular_points > 0) {
    const double est = std::log(static_cast<double>(largest->singular_points)) /
                       std::log(static_cast<double>(largest->prime));
    out.estimated_s = std::max(0, static_cast<int>(std::lround(est)));
  } else {
    out.estimated_s = 0;
  }
  return out;
}

}  // namespace gitstab
