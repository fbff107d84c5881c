#ifndef QUADLIE_ISOMORPHY_HPP
#define QUADLIE_ISOMORPHY_HPP

#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"
#include "quadlie/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

/// An explicit linear map claimed to be an isometric isomorphism; columns are
/// images of the source basis in target coordinates.
struct IsoWitness {
  Matrix map;
  std::string source;
  std::string target;
};

struct IsoCheck {
  bool ok = false;
  std::string report;  // first failure when not ok
};

/// Verifies that A is invertible, intertwines the brackets on all basis
/// pairs, and is an isometry of the forms. The report names the first
/// failing pair.
IsoCheck check_i_isomorphism(const QuadraticLieAlgebra& q1, const QuadraticLieAlgebra& q2,
                             const Matrix& a);

/// Constructive witness between one-dimensional double extensions of the
/// same base: given an i-automorphism P of h, nonzero lambda and X in h with
/// P^{-1} D1 P = lambda D2 + ad(X), builds
///   e |-> lambda e' + X - (B(X,X)/2 lambda) f',
///   Y |-> P^{-1}(Y) - (1/lambda) B(X, P^{-1} Y) f',
///   f |-> (1/lambda) f'
/// and verifies it. Throws std::invalid_argument when a hypothesis fails.
IsoWitness build_dext1_isomorphism(const QuadraticLieAlgebra& h, const Matrix& d1,
                                   const Matrix& d2, const Matrix& p,
                                   const Rational& lambda, const Vec& x);

/// Constructive witness between double extensions of (q, Bq) by commuting
/// pairs: given an isometry P with P C1 P^{-1} = l1 C1' + l2 C2' and
/// P C2 P^{-1} = g1 C1' + g2 C2' and l1 g2 - l2 g1 != 0, maps
/// X1 |-> l1 X1' + l2 X2', X2 |-> g1 X1' + g2 X2', A|q = P and sends Z1, Z2
/// by the inverse coefficient matrix. Verified before returning.
IsoWitness build_pair_isomorphism(const BilinearForm& bq, const Matrix& c1,
                                  const Matrix& c2, const Matrix& c1p, const Matrix& c2p,
                                  const Matrix& p, std::pair<Rational, Rational> lambdas,
                                  std::pair<Rational, Rational> gammas);

/// Data of the derivation restricted to the center of the base: its minimal
/// polynomial and whether that polynomial is squarefree (equivalently,
/// whether the restriction is diagonalizable over the algebraic closure).
/// Requires an invertible skew derivation.
struct CenterActionInvariant {
  Matrix center_action;
  Polynomial minpoly;
  bool squarefree = false;
};
CenterActionInvariant center_action_invariant(const QuadraticLieAlgebra& h, const Matrix& d);

/// Canonical form of a spectrum multiset under permutation and common
/// nonzero rational scaling: the lexicographically smallest among the sorted
/// multisets S/s over nonzero s in S.
std::vector<Rational> normalized_spectrum(std::vector<Rational> multiset);

/// Rational spectrum (eigenvalues with multiplicity). Empty optional if the
/// characteristic polynomial does not split over Q.
std::optional<std::vector<Rational>> rational_spectrum(const Matrix& m);

/// Bounded deterministic witness search. Requires equal dimensions and equal
/// fingerprints (otherwise immediately none). Candidates, in order:
///  1. signed basis permutations composed with diagonal scalings from
///     {1, -1, 2, 1/2, -2, -1/2}, generated directly as isometries of the
///     two forms (depth-first, lexicographic);
///  2. when both inputs carry one-dimensional double-extension data over the
///     same base: maps built from build_dext1_isomorphism over monomial
///     i-automorphisms P of the base, scalar multiples lambda, and X solved
///     linearly.
/// Every successful candidate is re-verified by check_i_isomorphism. A none
/// result is evidence bounded by `budget`, never a proof.
std::optional<IsoWitness> witness_search(const QuadraticLieAlgebra& q1,
                                         const QuadraticLieAlgebra& q2,
                                         std::size_t budget = 100000);

}  // namespace quadlie

#endif
