#include "gitstab/rational.hpp"

#include <stdexcept>

namespace gitstab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer p = parse_integer(text.substr(0, slash));
  std::string_view qs = text.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+')) {
    throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  Integer q = parse_integer(qs);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer floor(const Rational& q) {
  Integer n = num(q);
  Integer d = den(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) { return -floor(-q); }

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, den(x));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g(0);
  for (const auto& x : v) {
    out.push_back(num(x) * (l / den(x)));
    g = gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

std::int64_t to_int64(const Integer& z) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (z < lo || z > hi) throw std::overflow_error("integer " + z.str() + " exceeds 64 bits");
  return z.convert_to<std::int64_t>();
}

}  // namespace gitstab
