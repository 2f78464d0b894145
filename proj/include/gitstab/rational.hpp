#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace gitstab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Smallest integer >= q and largest integer <= q.
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

/// Scales a rational vector by a positive factor so that every entry is an
/// integer and the entries have gcd 1. The zero vector is returned unchanged.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& z);

}  // namespace gitstab
