#ifndef QUADLIE_DOUBLE_EXTENSION_HPP
#define QUADLIE_DOUBLE_EXTENSION_HPP

#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"

#include <optional>
#include <string>
#include <variant>

namespace quadlie {

/// Construction data kept on the result of dext1, so later tooling can
/// recognize the algebra as a one-dimensional double extension.
struct DextOrigin {
  QuadraticLieAlgebra base;
  Matrix derivation;
};

enum class DextKind { one_dim, pair, triple };

/// Parsed form of the extension spec file: a base (named algebra or inline),
/// one derivation matrix for the one-dimensional case, or a commuting pair of
/// skew maps for the pair/triple cases.
struct DoubleExtensionSpec {
  DextKind kind = DextKind::one_dim;
  std::variant<std::string, QuadraticLieAlgebra> base;
  std::optional<Matrix> d;
  std::optional<Matrix> c1;
  std::optional<Matrix> c2;
};

/// True iff D is a derivation of g; on failure reports the first basis pair
/// where D[x,y] != [Dx,y] + [x,Dy].
bool is_derivation(const LieAlgebra& g, const Matrix& d, std::string* why = nullptr);

/// True iff Gram*D + D^T*Gram = 0; on failure reports the offending entry.
bool is_skew(const BilinearForm& form, const Matrix& d, std::string* why = nullptr);

/// One-dimensional double extension of h by a skew-symmetric derivation D.
/// New basis (e, ...h basis..., f) with [e, X] = D X,
/// [X, Y] = [X, Y]_h + B(D X, Y) f, [f, .] = 0, B(e, f) = 1. The input D is
/// checked, never trusted: a non-derivation or non-skew matrix throws with
/// the failing pair, which guards against transposed or mistyped data.
QuadraticLieAlgebra dext1(const QuadraticLieAlgebra& h, const Matrix& d,
                          const std::string& name = "");

/// Double extension of a quadratic vector space (q, Bq) by a commuting pair
/// of skew maps. Basis (q..., X1, X2, Z1, Z2) with [X_i, X] = C_i X and
/// [X, Y] = B(C1 X, Y) Z1 + B(C2 X, Y) Z2; the new block is hyperbolic.
QuadraticLieAlgebra dext_pair(const BilinearForm& bq, const Matrix& c1, const Matrix& c2,
                              const std::string& name = "");

/// Variant with an extra unit vector T: basis (q..., T, X1, X2, Z1, Z2) with
/// [X1, X2] = T, [X1, T] = -Z2, [X2, T] = Z1 on top of the pair brackets.
QuadraticLieAlgebra dext_triple(const BilinearForm& bq, const Matrix& c1, const Matrix& c2,
                                const std::string& name = "");

}  // namespace quadlie

#endif
