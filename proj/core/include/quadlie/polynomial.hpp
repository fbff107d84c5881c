#ifndef QUADLIE_POLYNOMIAL_HPP
#define QUADLIE_POLYNOMIAL_HPP

#include "quadlie/matrix.hpp"
#include "quadlie/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadlie {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial has an empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);
  /// t^k
  static Polynomial power(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vec& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  Vec coeffs_;
  void normalize();
};

/// Monic gcd (Euclid); gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// True iff gcd(p, p') is constant. Throws std::invalid_argument on the zero
/// polynomial.
bool is_squarefree(const Polynomial& p);

/// Least-degree monic p with p(m) = 0, via per-vector Krylov minimal
/// polynomials combined by lcm.
Polynomial minimal_polynomial(const Matrix& m);

/// det(tI - m), exact (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const Matrix& m);

/// Rational roots with multiplicity plus the rational-root-free remaining
/// factor (monic; constant 1 iff the polynomial splits over Q).
struct RationalRoots {
  std::vector<Rational> roots;  // sorted ascending, repeated per multiplicity
  Polynomial remaining;
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace quadlie

#endif
