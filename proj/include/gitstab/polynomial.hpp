#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gitstab/matrix.hpp"
#include "gitstab/rational.hpp"

namespace gitstab {

/// Exponents (i_0, ..., i_n) of a monomial x_0^{i_0} ... x_n^{i_n}.
using ExponentVector = std::vector<int>;

/// Graded-lex order, largest first: higher total degree wins, ties broken by
/// the first differing exponent.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

int total_degree(const ExponentVector& e);

/// Malformed polynomial text; `position` is a byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sparse polynomial with exact rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexGreater>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int j);
  static Polynomial monomial(ExponentVector e, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const ExponentVector& e) const;
  void add_term(const ExponentVector& e, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree of the lowest-degree term; -1 for the zero polynomial.
  int min_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int k) const;

  Polynomial derivative(int j) const;
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  int nvars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, int k);

/// Canonical text: terms in graded-lex order, explicit '*' and '^'.
std::string to_string(const Polynomial& p);

/// Homogeneous form of a fixed degree in the n+1 variables x_0, ..., x_n.
/// The zero form is representable (derivatives may vanish); hypersurface
/// inputs are rejected when zero by parse_poly.
class HomogeneousPoly {
 public:
  /// Throws std::invalid_argument if `p` has a term of degree other than
  /// `degree` or fewer than one variable.
  HomogeneousPoly(Polynomial p, int degree);

  int n() const { return poly_.nvars() - 1; }
  int nvars() const { return poly_.nvars(); }
  int degree() const { return degree_; }
  const Polynomial& poly() const { return poly_; }
  const Polynomial::TermMap& terms() const { return poly_.terms(); }
  bool is_zero() const { return poly_.is_zero(); }

  std::vector<ExponentVector> support() const;

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  int degree_;
};

/// Reads the text grammar
///   poly   ::= term { ('+' | '-') term }
///   term   ::= [sign] [coef '*'] factor { '*' factor }
///   factor ::= 'x' INDEX [ '^' EXP ]
///   coef   ::= INT | INT '/' INT
/// over the variables x0..xn. Throws ParseError on syntax errors and
/// std::invalid_argument for inhomogeneous input, out-of-range variables or
/// the zero polynomial.
HomogeneousPoly parse_poly(std::string_view text, int n);

std::string to_string(const HomogeneousPoly& f);

/// sigma f: substitutes x_j -> sum_k sigma(k, j) x_k. With this convention
/// apply_linear_change(apply_linear_change(f, tau), sigma) equals
/// apply_linear_change(f, sigma * tau).
HomogeneousPoly apply_linear_change(const HomogeneousPoly& f, const RationalMatrix& sigma);

/// Sets x_n = 1. The degree-j part of the result is the coefficient form of
/// x_n^{d-j}.
Polynomial dehomogenize_at_last(const HomogeneousPoly& f);

/// Inverse of dehomogenize_at_last for charts of total degree <= d.
HomogeneousPoly rehomogenize_at_last(const Polynomial& chart, int degree);

HomogeneousPoly partial_derivative(const HomogeneousPoly& f, int j);

Rational evaluate(const HomogeneousPoly& f, std::span<const Rational> point);

/// All exponent vectors of the given degree in `nvars` variables, in
/// graded-lex order (largest first).
std::vector<ExponentVector> all_monomials(int nvars, int degree);

}  // namespace gitstab
