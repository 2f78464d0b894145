#include "gitstab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gitstab {

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(ExponentVector(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int j) {
  ExponentVector e(nvars, 0);
  e.at(j) = 1;
  return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(ExponentVector e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : gitstab::total_degree(terms_.begin()->first);
}

int Polynomial::min_degree() const {
  return terms_.empty() ? -1 : gitstab::total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const { return total_degree() == min_degree(); }

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (gitstab::total_degree(e) == k) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Polynomial Polynomial::derivative(int j) const {
  if (j < 0 || j >= nvars_) {
    throw std::out_of_range("variable index " + std::to_string(j) + " out of range");
  }
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    ExponentVector de = e;
    --de[j];
    out.add_term(de, c * e[j]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                " coordinates, expected " + std::to_string(nvars_));
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_ && t != 0; ++j) {
      for (int k = 0; k < e[j]; ++k) t *= point[j];
    }
    total += t;
  }
  return total;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  ExponentVector e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial result = Polynomial::constant(p.nvars(), Rational(1));
  for (int i = 0; i < k; ++i) result = result * p;
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? Rational(-c) : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(Polynomial p, int degree) : poly_(std::move(p)), degree_(degree) {
  if (poly_.nvars() < 1) throw std::invalid_argument("a form needs at least one variable");
  if (degree_ < 0) throw std::invalid_argument("negative degree");
  for (const auto& [e, c] : poly_.terms()) {
    if (gitstab::total_degree(e) != degree_) {
      throw std::invalid_argument("inhomogeneous: term of degree " +
                                  std::to_string(gitstab::total_degree(e)) + " in a form of degree " +
                                  std::to_string(degree_));
    }
  }
}

std::vector<ExponentVector> HomogeneousPoly::support() const {
  std::vector<ExponentVector> out;
  out.reserve(poly_.size());
  for (const auto& [e, c] : poly_.terms()) out.push_back(e);
  return out;
}

std::string to_string(const HomogeneousPoly& f) { return to_string(f.poly()); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

  Polynomial parse() {
    Polynomial result(n_ + 1);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      skip_ws();
      parse_term(result, sign);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_small_int(const char* what) {
    const std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 6) throw ParseError(std::string(what) + " too large", start);
    return std::stoi(digits);
  }

  void parse_term(Polynomial& result, int sign) {
    Rational coef(sign);
    ExponentVector e(n_ + 1, 0);
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer p(read_digits());
      Integer q(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t qpos = pos_;
        q = Integer(read_digits());
        if (q == 0) throw ParseError("zero denominator", qpos);
      }
      coef *= Rational(p, q);
      skip_ws();
      if (at_end() || peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
      ++pos_;
      skip_ws();
    }
    while (true) {
      parse_factor(e);
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        continue;
      }
      break;
    }
    if (have_factor) result.add_term(e, coef);
  }

  void parse_factor(ExponentVector& e) {
    if (at_end() || peek() != 'x') throw ParseError("expected variable 'x<index>'", pos_);
    ++pos_;
    const std::size_t index_pos = pos_;
    const int index = read_small_int("variable index");
    if (index > n_) {
      throw std::invalid_argument("variable x" + std::to_string(index) + " at position " +
                                  std::to_string(index_pos) + " exceeds n = " + std::to_string(n_));
    }
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = read_small_int("exponent");
    }
    e[index] += exponent;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPoly parse_poly(std::string_view text, int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Polynomial p = PolyParser(text, n).parse();
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial does not define a hypersurface");
  if (!p.is_homogeneous()) {
    throw std::invalid_argument("inhomogeneous polynomial: degrees range from " +
                                std::to_string(p.min_degree()) + " to " +
                                std::to_string(p.total_degree()));
  }
  const int d = p.total_degree();
  return HomogeneousPoly(std::move(p), d);
}

HomogeneousPoly apply_linear_change(const HomogeneousPoly& f, const RationalMatrix& sigma) {
  const int nv = f.nvars();
  if (sigma.rows() != nv || sigma.cols() != nv) {
    throw std::invalid_argument("coordinate change has size " + std::to_string(sigma.rows()) + "x" +
                                std::to_string(sigma.cols()) + ", expected " + std::to_string(nv));
  }
  if (exact_determinant(sigma) == 0) throw std::domain_error("coordinate change is singular");

  // powers[j][k] = (image of x_j)^k
  std::vector<std::vector<Polynomial>> powers(nv);
  for (int j = 0; j < nv; ++j) {
    Polynomial image(nv);
    for (int k = 0; k < nv; ++k) {
      if (sigma(k, j) == 0) continue;
      ExponentVector unit(nv, 0);
      unit[k] = 1;
      image.add_term(unit, sigma(k, j));
    }
    powers[j].push_back(Polynomial::constant(nv, Rational(1)));
    for (int k = 1; k <= f.degree(); ++k) powers[j].push_back(powers[j].back() * image);
  }
  Polynomial out(nv);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(nv, c);
    for (int j = 0; j < nv; ++j) {
      if (e[j] > 0) term = term * powers[j][e[j]];
    }
    out += term;
  }
  return HomogeneousPoly(std::move(out), f.degree());
}

Polynomial dehomogenize_at_last(const HomogeneousPoly& f) {
  const int n = f.n();
  Polynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    out.add_term(ExponentVector(e.begin(), e.begin() + n), c);
  }
  return out;
}

HomogeneousPoly rehomogenize_at_last(const Polynomial& chart, int degree) {
  const int n = chart.nvars();
  Polynomial out(n + 1);
  for (const auto& [e, c] : chart.terms()) {
    const int k = total_degree(e);
    if (k > degree) throw std::invalid_argument("chart has a term of degree above the target degree");
    ExponentVector he = e;
    he.push_back(degree - k);
    out.add_term(he, c);
  }
  return HomogeneousPoly(std::move(out), degree);
}

HomogeneousPoly partial_derivative(const HomogeneousPoly& f, int j) {
  return HomogeneousPoly(f.poly().derivative(j), std::max(f.degree() - 1, 0));
}

Rational evaluate(const HomogeneousPoly& f, std::span<const Rational> point) {
  return f.poly().evaluate(point);
}

std::vector<ExponentVector> all_monomials(int nvars, int degree) {
  std::vector<ExponentVector> out;
  ExponentVector e(nvars, 0);
  // Recursive fill in lexicographically decreasing order.
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == nvars - 1) {
      e[j] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[j] = k;
      self(self, j + 1, remaining - k);
    }
  };
  if (nvars > 0) rec(rec, 0, degree);
  return out;
}

}  // namespace gitstab
