#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quadlie/catalog.hpp>
#include <quadlie/double_extension.hpp>
#include <quadlie/invariants.hpp>
#include <quadlie/isomorphy.hpp>

#include "helpers.hpp"

using namespace quadlie;
using quadlie::testing::Rng;

TEST_CASE("dext1 of the hyperbolic plane by diag(1,-1) is g4") {
  const QuadraticLieAlgebra built =
      dext1(catalog::canonical_space(2), Matrix::diagonal({1, -1}));
  const QuadraticLieAlgebra g4 = catalog::make("g4");
  CHECK(built.algebra().constants() == g4.algebra().constants());
  CHECK(built.form().gram() == g4.form().gram());
}

TEST_CASE("dext1 by zero splits off a central hyperbolic pair") {
  const QuadraticLieAlgebra h = catalog::make("g5");
  const QuadraticLieAlgebra g = dext1(h, Matrix(5, 5));
  CHECK(validate(g).ok());
  const Subspace z = center(g.algebra());
  CHECK(z.contains(unit_axis(7, 0)));  // e central
  CHECK(z.contains(unit_axis(7, 6)));  // f central
  CHECK(g.form().eval(unit_axis(7, 0), unit_axis(7, 6)) == 1);
  const auto split = find_nondegenerate_ideal(g);
  CHECK(split.has_value());
}

TEST_CASE("dext1 of g5 by diag(1,-1,0,-1,1) has dim_dd 4") {
  const QuadraticLieAlgebra g = dext1(catalog::make("g5"), Matrix::diagonal({1, -1, 0, -1, 1}));
  CHECK(fingerprint(g).dim_dd == 4);
  CHECK(fingerprint(g) == fingerprint(catalog::make("g7,3")));
}

TEST_CASE("dext1 rejects non-derivations and non-skew maps with a witness") {
  const QuadraticLieAlgebra g5 = catalog::make("g5");
  // diag(1,...,1) is not a derivation of a nonabelian algebra.
  CHECK_THROWS_WITH_AS(dext1(g5, Matrix::identity(5)),
                       doctest::Contains("derivation identity fails"),
                       std::invalid_argument);
  // The grading derivation diag(1,1,2,3,3) is a derivation but not skew.
  const Matrix grading = Matrix::diagonal({1, 1, 2, 3, 3});
  CHECK_THROWS_WITH_AS(dext1(g5, grading), doctest::Contains("skewness fails"),
                       std::invalid_argument);
}

TEST_CASE("dext1 structural properties on random bases") {
  Rng rng(777);
  for (const char* base : {"F2", "F4", "g4", "g5"}) {
    const QuadraticLieAlgebra h = catalog::make(base);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix d = quadlie::testing::random_skew_derivation(h, rng, true);
      const QuadraticLieAlgebra g = dext1(h, d);
      const std::size_t n = g.dim();
      CHECK(validate(g).ok());
      // f is central, isotropic, and pairs with e.
      CHECK(center(g.algebra()).contains(unit_axis(n, n - 1)));
      CHECK(g.form().eval(unit_axis(n, n - 1), unit_axis(n, n - 1)) == 0);
      CHECK(g.form().eval(unit_axis(n, 0), unit_axis(n, n - 1)) == 1);
    }
  }
}

TEST_CASE("dext1 round trip: restrict to f-perp, quotient by f, recover the base") {
  Rng rng(778);
  for (const char* base : {"F4", "g4", "g5", "g6,1"}) {
    const QuadraticLieAlgebra h = catalog::make(base);
    const Matrix d = quadlie::testing::random_skew_derivation(h, rng);
    const QuadraticLieAlgebra g = dext1(h, d);
    const std::size_t n = g.dim();
    const Subspace fperp = perp(g, Subspace::span(n, {unit_axis(n, n - 1)}));
    const LieAlgebra sub = restrict_to(g.algebra(), fperp);
    const auto fcoords = fperp.coordinates(unit_axis(n, n - 1));
    REQUIRE(fcoords.has_value());
    const auto [quot, projection] =
        quotient(sub, Subspace::span(fperp.dim(), {*fcoords}));
    CHECK(quot == h.algebra());
  }
}

TEST_CASE("one-dimensional extensions of abelian bases are at most 1-step") {
  Rng rng(779);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t pairs = rng.int_in(1, 3);
    const QuadraticLieAlgebra h = catalog::canonical_space(2 * pairs);
    const Matrix d = quadlie::testing::random_skew(h.form(), rng);
    const QuadraticLieAlgebra g = dext1(h, d);
    CHECK(fingerprint(g).dim_dd <= 1);
  }
}

TEST_CASE("dext_pair reproduces the pair-extension bracket table") {
  const BilinearForm f4 = canonical_form(4);
  const Matrix c = Matrix::diagonal({1, 1, -1, -1});
  const Matrix d1 = {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}};
  const QuadraticLieAlgebra g = dext_pair(f4, c, d1);
  CHECK(g.dim() == 8);
  CHECK(validate(g).ok());
  // Basis (q1..q4, X1, X2, Z1, Z2): [X1, q1] = C q1 = q1 means [q1, X1] = -q1.
  CHECK(g.algebra().bracket(4, 0) == unit_axis(8, 0));
  // [q1, q3] = B(C q1, q3) Z1 + B(D1 q1, q3) Z2 = Z1.
  CHECK(g.algebra().bracket(0, 2) == unit_axis(8, 6));
  // [q2, q3] = B(D1 q2, q3) Z2 = Z2 (since D1 q2 = q1).
  CHECK(g.algebra().bracket(1, 2) == unit_axis(8, 7));
  // Z1, Z2 are central.
  const Subspace z = center(g.algebra());
  CHECK(z.contains(unit_axis(8, 6)));
  CHECK(z.contains(unit_axis(8, 7)));
}

TEST_CASE("dext_pair with C2 = 0 and invertible C1 is decomposable") {
  const QuadraticLieAlgebra g =
      dext_pair(canonical_form(4), Matrix::diagonal({1, 1, -1, -1}), Matrix(4, 4));
  // X2 and Z2 are central with B(X2, Z2) = 1: a nondegenerate ideal.
  const Subspace z = center(g.algebra());
  CHECK(z.contains(unit_axis(8, 5)));
  CHECK(z.contains(unit_axis(8, 7)));
  const auto split = find_nondegenerate_ideal(g);
  REQUIRE(split.has_value());
  CHECK(is_ideal(g.algebra(), split->first));
}

TEST_CASE("dext_pair rejects a non-commuting pair naming the commutator") {
  const BilinearForm f4 = canonical_form(4);
  const Matrix c1 = Matrix::diagonal({1, 2, -1, -2});
  const Matrix c2 = {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}};
  CHECK_THROWS_WITH_AS(dext_pair(f4, c1, c2), doctest::Contains("do not commute"),
                       std::invalid_argument);
  CHECK_THROWS_AS(dext_pair(f4, Matrix::identity(4), Matrix(4, 4)), std::invalid_argument);
}

TEST_CASE("dext_triple of the zero space gives the g5 bracket table") {
  const QuadraticLieAlgebra g = dext_triple(canonical_form(0), Matrix(0, 0), Matrix(0, 0));
  CHECK(g.dim() == 5);
  // Basis (T, X1, X2, Z1, Z2): relabeling to g5's (X1, X2, T, Z1, Z2).
  Matrix relabel(5, 5);
  relabel(2, 0) = 1;  // T -> T slot
  relabel(0, 1) = 1;  // X1
  relabel(1, 2) = 1;  // X2
  relabel(3, 3) = 1;
  relabel(4, 4) = 1;
  const IsoCheck check = check_i_isomorphism(g, catalog::make("g5"), relabel);
  CHECK(check.ok);
}

TEST_CASE("dext_triple with decoupled base matches g5 plus padding") {
  const QuadraticLieAlgebra g = dext_triple(canonical_form(2), Matrix(2, 2), Matrix(2, 2));
  CHECK(g.dim() == 7);
  CHECK(validate(g).ok());
  const QuadraticLieAlgebra reference =
      direct_sum(catalog::make("g5"), catalog::canonical_space(2));
  CHECK(fingerprint(g) == fingerprint(reference));
}

TEST_CASE("dext_triple outputs always validate on random commuting pairs") {
  Rng rng(780);
  const BilinearForm f4 = canonical_form(4);
  for (int trial = 0; trial < 8; ++trial) {
    // Commuting family: diagonal skew maps diag(a, b, -a, -b).
    const Rational a1 = rng.small_rational(), b1 = rng.small_rational();
    const Rational a2 = rng.small_rational(), b2 = rng.small_rational();
    const Matrix c1 = Matrix::diagonal({a1, b1, -a1, -b1});
    const Matrix c2 = Matrix::diagonal({a2, b2, -a2, -b2});
    CHECK(validate(dext_triple(f4, c1, c2)).ok());
    CHECK(validate(dext_pair(f4, c1, c2)).ok());
  }
}
