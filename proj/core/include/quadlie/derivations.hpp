#ifndef QUADLIE_DERIVATIONS_HPP
#define QUADLIE_DERIVATIONS_HPP

#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"
#include "quadlie/subspace.hpp"

#include <string>
#include <vector>

namespace quadlie {

enum class DerivationKind { all, skew, inner };

/// Canonical basis of a space of n x n matrices, held as the echelon span of
/// their row-major vectorizations.
class DerivationSpace {
 public:
  DerivationSpace(std::string algebra_ref, DerivationKind kind, std::size_t n,
                  Subspace space);

  const std::string& algebra_ref() const { return ref_; }
  DerivationKind kind() const { return kind_; }
  std::size_t matrix_dim() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& vectorized() const { return space_; }
  std::vector<Matrix> basis() const;
  bool contains(const Matrix& d) const;

 private:
  std::string ref_;
  DerivationKind kind_;
  std::size_t n_;
  Subspace space_;
};

/// All derivations of g: exact nullspace of the linear system
/// D[x,y] = [Dx,y] + [x,Dy] over basis pairs, in the n^2 matrix entries.
DerivationSpace derivation_space(const LieAlgebra& g, const std::string& ref = "");

/// Derivations that are also skew with respect to the form
/// (Gram*D + D^T*Gram = 0).
DerivationSpace skew_derivation_space(const QuadraticLieAlgebra& q);

/// Span of the inner derivations ad(b_i); dim = dim g - dim center.
DerivationSpace inner_derivation_space(const LieAlgebra& g, const std::string& ref = "");

/// dim skew - dim inner. Inner derivations of a quadratic algebra are skew;
/// that containment is asserted.
std::size_t outer_skew_dimension(const QuadraticLieAlgebra& q);

}  // namespace quadlie

#endif
