#ifndef QUADLIE_TESTS_HELPERS_HPP
#define QUADLIE_TESTS_HELPERS_HPP

#include <quadlie/catalog.hpp>
#include <quadlie/derivations.hpp>
#include <quadlie/lie_algebra.hpp>
#include <quadlie/matrix.hpp>

#include <random>
#include <vector>

namespace quadlie::testing {

/// Deterministic RNG for reproducible randomized tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int int_in(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  /// Nonzero numerator in [-4, 4], denominator in {1, 2, 3}.
  Rational small_rational(bool allow_zero = true) {
    while (true) {
      const int num = int_in(-4, 4);
      if (!allow_zero && num == 0) continue;
      return Rational(num, int_in(1, 3));
    }
  }

  Rational nonzero_rational() { return small_rational(false); }

  Vec small_vector(std::size_t n, bool allow_zero = true) {
    while (true) {
      Vec v(n);
      for (auto& x : v) x = small_rational();
      if (allow_zero || !is_zero(v)) return v;
    }
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Random skew map w.r.t. the form: D = G^{-1} K with K antisymmetric, since
/// G D = K is antisymmetric exactly when Gram*D + D^T*Gram = 0.
inline Matrix random_skew(const BilinearForm& form, Rng& rng, bool allow_zero = false) {
  const std::size_t n = form.dim();
  while (true) {
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        k(i, j) = rng.small_rational();
        k(j, i) = -k(i, j);
      }
    const Matrix d = inverse(form.gram()) * k;
    if (allow_zero || !d.is_zero()) return d;
  }
}

/// Random element of the skew-derivation space of q (a small-coefficient
/// combination of the solver's basis).
inline Matrix random_skew_derivation(const QuadraticLieAlgebra& q, Rng& rng,
                                     bool allow_zero = false) {
  const DerivationSpace space = skew_derivation_space(q);
  if (space.dim() == 0) return Matrix(q.dim(), q.dim());
  while (true) {
    Matrix d(q.dim(), q.dim());
    for (const auto& basis_matrix : space.basis()) d += rng.small_rational() * basis_matrix;
    if (allow_zero || !d.is_zero()) return d;
  }
}

/// Random i-automorphism of an abelian canonical space F^{2k}: a product of
/// hyperbolic pair scalings, pair swaps, pair permutations and isotropic
/// shears, all of which preserve the hyperbolic form (and trivially the zero
/// bracket).
inline Matrix random_hyperbolic_isometry(std::size_t pairs, Rng& rng) {
  const std::size_t n = 2 * pairs;
  Matrix p = Matrix::identity(n);
  const int steps = rng.int_in(1, 4);
  for (int s = 0; s < steps; ++s) {
    Matrix step = Matrix::identity(n);
    switch (rng.int_in(0, 3)) {
      case 0: {  // scale one pair: X_i -> t X_i, Z_i -> (1/t) Z_i
        const std::size_t i = rng.int_in(0, static_cast<int>(pairs) - 1);
        const Rational t = rng.nonzero_rational();
        step(i, i) = t;
        step(pairs + i, pairs + i) = 1 / t;
        break;
      }
      case 1: {  // swap X_i and Z_i
        const std::size_t i = rng.int_in(0, static_cast<int>(pairs) - 1);
        step(i, i) = step(pairs + i, pairs + i) = 0;
        step(i, pairs + i) = step(pairs + i, i) = 1;
        break;
      }
      case 2: {  // permute two pairs
        if (pairs < 2) break;
        const std::size_t i = rng.int_in(0, static_cast<int>(pairs) - 1);
        std::size_t j = rng.int_in(0, static_cast<int>(pairs) - 1);
        if (i == j) j = (j + 1) % pairs;
        step(i, i) = step(j, j) = 0;
        step(i, j) = step(j, i) = 1;
        step(pairs + i, pairs + i) = step(pairs + j, pairs + j) = 0;
        step(pairs + i, pairs + j) = step(pairs + j, pairs + i) = 1;
        break;
      }
      default: {  // isotropic shear: X_i += c X_j, Z_j -= c Z_i
        if (pairs < 2) break;
        const std::size_t i = rng.int_in(0, static_cast<int>(pairs) - 1);
        std::size_t j = rng.int_in(0, static_cast<int>(pairs) - 1);
        if (i == j) j = (j + 1) % pairs;
        const Rational c = rng.small_rational();
        step(i, j) = c;
        step(pairs + j, pairs + i) = -c;
        break;
      }
    }
    p = p * step;
  }
  return p;
}

/// Random i-automorphism of the diamond algebra g4 on (X, P, Q, Z): products
/// of the torus map (P -> tP, Q -> Q/t), the flip (X -> -X, P <-> Q,
/// Z -> -Z), and unipotent maps exp(ad(sP)), exp(ad(sQ)).
inline Matrix random_g4_automorphism(Rng& rng) {
  Matrix p = Matrix::identity(4);
  const int steps = rng.int_in(1, 4);
  for (int s = 0; s < steps; ++s) {
    Matrix step = Matrix::identity(4);
    switch (rng.int_in(0, 3)) {
      case 0: {
        const Rational t = rng.nonzero_rational();
        step(1, 1) = t;
        step(2, 2) = 1 / t;
        break;
      }
      case 1: {
        step = Matrix{{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
        break;
      }
      case 2: {  // exp(ad(sP)): X -> X - sP, Q -> Q + sZ
        const Rational s2 = rng.small_rational();
        step(1, 0) = -s2;
        step(3, 2) = s2;
        break;
      }
      default: {  // exp(ad(sQ)): X -> X + sQ, P -> P - sZ
        const Rational s2 = rng.small_rational();
        step(2, 0) = s2;
        step(3, 1) = -s2;
        break;
      }
    }
    p = p * step;
  }
  return p;
}

/// Random i-automorphism of g5 on (X1, X2, T, Z1, Z2): the X-block moves by
/// a determinant-one matrix M, the Z-block by (M^T)^{-1}, T is fixed.
inline Matrix random_g5_automorphism(Rng& rng) {
  Matrix m = Matrix::identity(2);
  const int steps = rng.int_in(1, 3);
  for (int s = 0; s < steps; ++s) {
    Matrix step = Matrix::identity(2);
    if (rng.int_in(0, 1) == 0) step(0, 1) = rng.small_rational();
    else step(1, 0) = rng.small_rational();
    m = m * step;
  }
  const Matrix mtinv = inverse(m.transposed());
  Matrix p(5, 5);
  p(2, 2) = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      p(i, j) = m(i, j);
      p(3 + i, 3 + j) = mtinv(i, j);
    }
  return p;
}

// ---------------------------------------------------------------------------
// Frozen one-parameter families of skew derivations, one per catalog base.
// Instantiating any of them at arbitrary rational parameters must land inside
// the solver's skew-derivation space; a failure indicates a transcription or
// sign-convention error in the matrices and stops the build.

/// g4 (+) F^1, basis (X, P, Q, Z, Y).
inline Matrix diamond_line_family(const Rational& x, const Rational& y, const Rational& z,
                                  const Rational& t) {
  return Matrix{{0, 0, 0, 0, 0},
                {y, x, 0, 0, 0},
                {z, 0, -x, 0, 0},
                {0, -z, -y, 0, t},
                {-t, 0, 0, 0, 0}};
}

/// g5, basis (X1, X2, T, Z1, Z2).
inline Matrix g5_family(const Rational& x, const Rational& y, const Rational& z,
                        const Rational& t, const Rational& b, const Rational& c) {
  return Matrix{{x, z, 0, 0, 0},
                {y, -x, 0, 0, 0},
                {-b, -c, 0, 0, 0},
                {0, -t, b, -x, -y},
                {t, 0, c, -z, x}};
}

/// g4 (+) F^2, basis (X, P, Q, Z, X1, X2).
inline Matrix diamond_plane_family(const Rational& x, const Rational& y, const Rational& z,
                                   const Rational& x1, const Rational& x2,
                                   const Rational& c) {
  return Matrix{{0, 0, 0, 0, 0, 0},
                {y, x, 0, 0, 0, 0},
                {z, 0, -x, 0, 0, 0},
                {0, -z, -y, 0, x1, x2},
                {-x1, 0, 0, 0, 0, -c},
                {-x2, 0, 0, 0, c, 0}};
}

/// g5 (+) F^1, basis (X1, X2, T, Z1, Z2, Y): all eight parameters.
inline Matrix g5_line_family(const Rational& x, const Rational& y, const Rational& z,
                             const Rational& b, const Rational& c, const Rational& t,
                             const Rational& x1, const Rational& y1) {
  return Matrix{{x, z, 0, 0, 0, 0},
                {y, -x, 0, 0, 0, 0},
                {-b, -c, 0, 0, 0, 0},
                {0, -t, b, -x, -y, x1},
                {t, 0, c, -z, x, y1},
                {-x1, -y1, 0, 0, 0, 0}};
}

/// g5 (+) F^1 with inner derivations eliminated, in the reduced sign
/// convention of the dimension-8 case analysis.
inline Matrix g5_line_family_reduced(const Rational& x, const Rational& y,
                                     const Rational& z, const Rational& alpha,
                                     const Rational& beta) {
  return Matrix{{-x, -z, 0, 0, 0, 0},
                {-y, x, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0},
                {0, 0, 0, x, y, -alpha},
                {0, 0, 0, z, -x, -beta},
                {alpha, beta, 0, 0, 0, 0}};
}

/// g6,1, basis (X1..X3, Z1..Z3): block matrix [[A, 0], [B, -A^T]] with A
/// traceless and B skew.
inline Matrix g61_family(const Matrix& a, const Matrix& b) {
  Matrix d(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      d(i, j) = a(i, j);
      d(3 + i, j) = b(i, j);
      d(3 + i, 3 + j) = -a(j, i);
    }
  return d;
}

/// g6,2(1), basis (X, X1, X2, Z1, Z2, Z).
inline Matrix g62_family(const Rational& y, const Rational& z, const Rational& t,
                         const Rational& h, const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d) {
  return Matrix{{0, 0, 0, 0, 0, 0},
                {y, a, c, 0, 0, 0},
                {z, b, d, 0, 0, 0},
                {t, 0, 0, -a, -b, 0},
                {h, 0, 0, -c, -d, 0},
                {0, -t, -h, -y, -z, 0}};
}

/// g6,3, basis (X, X1, X2, Z1, Z2, Z).
inline Matrix g63_family(const Rational& x, const Rational& y, const Rational& z,
                         const Rational& t, const Rational& a, const Rational& b) {
  return Matrix{{0, 0, 0, 0, 0, 0},
                {x, a, b, 0, 0, 0},
                {y, 0, a, 0, 0, 0},
                {z, 0, 0, -a, 0, 0},
                {t, 0, 0, -b, -a, 0},
                {0, -z, -t, -x, -y, 0}};
}

}  // namespace quadlie::testing

#endif
