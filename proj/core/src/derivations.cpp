#include "quadlie/derivations.hpp"

#include <stdexcept>

namespace quadlie {

DerivationSpace::DerivationSpace(std::string algebra_ref, DerivationKind kind,
                                 std::size_t n, Subspace space)
    : ref_(std::move(algebra_ref)), kind_(kind), n_(n), space_(std::move(space)) {
  if (space_.ambient_dim() != n_ * n_)
    throw std::invalid_argument("derivation space ambient must be n^2");
}

std::vector<Matrix> DerivationSpace::basis() const {
  std::vector<Matrix> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    out.push_back(Matrix::from_vectorized(space_.basis_vector(r), n_, n_));
  return out;
}

bool DerivationSpace::contains(const Matrix& d) const {
  if (d.rows() != n_ || d.cols() != n_) return false;
  return space_.contains(d.vectorized());
}

namespace {

// Rows of the derivation conditions in the n^2 unknowns D(r, c), row-major.
// For each basis pair i < j and output coordinate k:
//   sum_m c_ij^m D(k, m) - sum_r c_rj^k D(r, i) - sum_r c_ir^k D(r, j) = 0.
std::vector<Vec> derivation_constraint_rows(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto at = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec cij = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row = zero_vec(n * n);
        for (std::size_t m = 0; m < n; ++m)
          if (cij[m] != 0) row[at(k, m)] += cij[m];
        for (std::size_t r = 0; r < n; ++r) {
          const Rational crj = g.bracket(r, j)[k];
          if (crj != 0) row[at(r, i)] -= crj;
          const Rational cir = g.bracket(i, r)[k];
          if (cir != 0) row[at(r, j)] -= cir;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  return rows;
}

// Skewness Gram*D + D^T*Gram = 0, entry (p, q):
//   sum_r G(p, r) D(r, q) + sum_r D(r, p) G(r, q) = 0.
std::vector<Vec> skew_constraint_rows(const BilinearForm& form) {
  const std::size_t n = form.dim();
  const Matrix& gram = form.gram();
  auto at = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> rows;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {  // the defect matrix is symmetric
      Vec row = zero_vec(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        if (gram(p, r) != 0) row[at(r, q)] += gram(p, r);
        if (gram(r, q) != 0) row[at(r, p)] += gram(r, q);
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace

DerivationSpace derivation_space(const LieAlgebra& g, const std::string& ref) {
  const std::size_t n = g.dim();
  const auto rows = derivation_constraint_rows(g);
  const Subspace space = nullspace(Matrix::from_rows(rows, n * n));
  return DerivationSpace(ref, DerivationKind::all, n, space);
}

DerivationSpace skew_derivation_space(const QuadraticLieAlgebra& q) {
  const std::size_t n = q.dim();
  auto rows = derivation_constraint_rows(q.algebra());
  auto skew_rows = skew_constraint_rows(q.form());
  rows.insert(rows.end(), skew_rows.begin(), skew_rows.end());
  const Subspace space = nullspace(Matrix::from_rows(rows, n * n));
  return DerivationSpace(q.name(), DerivationKind::skew, n, space);
}

DerivationSpace inner_derivation_space(const LieAlgebra& g, const std::string& ref) {
  const std::size_t n = g.dim();
  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(ad_basis(g, i).vectorized());
  return DerivationSpace(ref, DerivationKind::inner, n, Subspace::span(n * n, rows));
}

std::size_t outer_skew_dimension(const QuadraticLieAlgebra& q) {
  const DerivationSpace skew = skew_derivation_space(q);
  const DerivationSpace inner = inner_derivation_space(q.algebra(), q.name());
  if (!skew.vectorized().contains(inner.vectorized()))
    throw std::logic_error(
        "inner derivations of a quadratic Lie algebra must be skew; invariance is broken");
  return skew.dim() - inner.dim();
}

}  // namespace quadlie
