#include "quadlie/rational.hpp"

#include <stdexcept>

namespace quadlie {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Rational(std::string(text));
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad rational literal '" + std::string(text) +
                                "': " + e.what());
  }
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_axis(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit_axis index");
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec scaled(const Vec& a, const Rational& c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

}  // namespace quadlie
