#ifndef QUADLIE_RATIONAL_HPP
#define QUADLIE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace quadlie {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator, so equality is representation equality and no rounding ever
// occurs anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

/// Shorthand for p/q literals in code and tests.
inline Rational frac(long long p, long long q = 1) { return Rational(p, q); }

/// Parses "p/q" or "p" (arbitrary precision). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

std::string to_string(const Vec& v);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
/// Standard basis vector e_i in F^n.
Vec unit_axis(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rational& c);

}  // namespace quadlie

#endif
