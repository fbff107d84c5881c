#ifndef QUADLIE_SUBSPACE_HPP
#define QUADLIE_SUBSPACE_HPP

#include "quadlie/matrix.hpp"
#include "quadlie/rational.hpp"

#include <optional>
#include <vector>

namespace quadlie {

/// Linear subspace of F^n held by its reduced-row-echelon basis (nonzero
/// rows, strictly increasing pivot columns). The representative is unique,
/// so equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  /// The zero subspace of F^n.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Row span, canonicalized.
  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<std::size_t> pivot_columns() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // dim x ambient, RREF
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Canonical basis of {v : m v = 0}; dim = cols - rank.
Subspace nullspace(const Matrix& m);

}  // namespace quadlie

#endif
