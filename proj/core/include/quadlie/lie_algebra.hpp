#ifndef QUADLIE_LIE_ALGEBRA_HPP
#define QUADLIE_LIE_ALGEBRA_HPP

#include "quadlie/matrix.hpp"
#include "quadlie/rational.hpp"
#include "quadlie/subspace.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

struct DextOrigin;  // defined in double_extension.hpp

/// Finite-dimensional Lie algebra by structure constants. Brackets of basis
/// vectors are stored sparsely for i < j only; [b_j, b_i] = -[b_i, b_j] and
/// diagonal brackets vanish by construction, so antisymmetry cannot be
/// violated by data.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<std::pair<std::size_t, std::size_t>, Vec>& constants() const {
    return constants_;
  }

  /// Sets [b_i, b_j] = out for i < j. A zero vector erases the entry.
  void set_bracket(std::size_t i, std::size_t j, Vec out);

  /// [b_i, b_j] for any i, j (sign handled).
  Vec bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const { return constants_.empty(); }

  /// Structure constants agree: same dimension and identical sparse tables.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> constants_;
};

/// Symmetric bilinear form by its Gram matrix.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational eval(const Vec& x, const Vec& y) const;
  bool is_nondegenerate() const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) = default;

 private:
  Matrix gram_;
};

/// Hyperbolic pairing B(X_i, Z_j) = delta_ij on (X_1..X_n, Z_1..Z_n); in odd
/// dimension an extra unit vector T in the middle with B(T, T) = 1.
BilinearForm canonical_form(std::size_t m);

/// Identity Gram matrix (orthonormal basis).
BilinearForm orthonormal_form(std::size_t m);

struct ValidationIssue {
  enum class Kind {
    bad_shape,          // mismatched sizes in the raw data
    form_not_symmetric, // gram(i,j) != gram(j,i)
    form_degenerate,    // gram has a kernel
    jacobi,             // Jacobi identity fails on a basis triple
    invariance,         // B([x,y],z) != B(x,[y,z]) on a basis triple
  };
  Kind kind;
  std::array<std::size_t, 3> where{0, 0, 0};
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Thrown when a constructed or ingested algebra fails the axioms; carries
/// the full report so callers can show every broken axiom.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string what, ValidationReport report)
      : std::invalid_argument(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class QuadraticLieAlgebra {
 public:
  QuadraticLieAlgebra() = default;
  QuadraticLieAlgebra(LieAlgebra algebra, BilinearForm form, std::string name);

  const LieAlgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return algebra_.dim(); }

  void set_name(std::string name) { name_ = std::move(name); }

  /// Set when this algebra was produced by the one-dimensional double
  /// extension; lets searches reuse the construction data.
  std::shared_ptr<const DextOrigin> origin() const { return origin_; }
  void set_origin(std::shared_ptr<const DextOrigin> origin) { origin_ = std::move(origin); }

  friend bool operator==(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.form_ == b.form_;
  }

 private:
  LieAlgebra algebra_;
  BilinearForm form_;
  std::string name_;
  std::shared_ptr<const DextOrigin> origin_;
};

/// Checks every quadratic axiom; failures are reported as data, one issue per
/// failed axiom instance with the witnessing triple.
ValidationReport validate(const QuadraticLieAlgebra& q);

/// Like validate but throws std::invalid_argument carrying the report.
void validate_or_throw(const QuadraticLieAlgebra& q);

/// Matrix of y -> [x, y].
Matrix ad(const LieAlgebra& g, const Vec& x);
Matrix ad_basis(const LieAlgebra& g, std::size_t i);

/// Span of [u, v] over basis vectors u of U and v of V.
Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v);

/// Smallest ideal containing U: iterate U <- U + [g, U] to a fixpoint.
Subspace ideal_closure(const LieAlgebra& g, Subspace u);
bool is_ideal(const LieAlgebra& g, const Subspace& u);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);

/// {v : B(v, u) = 0 for all u in U}.
Subspace perp(const QuadraticLieAlgebra& q, const Subspace& u);
Subspace perp(const BilinearForm& form, const Subspace& u);

/// Gram matrix of the form restricted to U (in U's echelon basis).
Matrix restricted_gram(const BilinearForm& form, const Subspace& u);
bool restricted_form_nondegenerate(const BilinearForm& form, const Subspace& u);

struct QuotientResult {
  LieAlgebra algebra;
  Matrix projection;  // (dim g - dim I) x dim g, onto the complement coordinates
};

/// Quotient by an ideal, on the echelon complement of the ideal's pivot
/// columns. Throws std::invalid_argument if I is not an ideal; the induced
/// Jacobi identity is re-checked.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

/// Structure constants of a bracket-closed subspace in its echelon basis.
/// Throws std::invalid_argument if U is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& u);

/// Orthogonal direct sum of algebras and forms.
QuadraticLieAlgebra direct_sum(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b);

}  // namespace quadlie

#endif
