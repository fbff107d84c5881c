#include "quadlie/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  auto [red, rk] = rref(rows);
  Subspace s(rows.cols());
  Matrix basis(rk, rows.cols());
  for (std::size_t r = 0; r < rk; ++r) basis.set_row(r, red.row(r));
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
  return span(Matrix::from_rows(vectors, ambient_dim));
}

std::vector<std::size_t> Subspace::pivot_columns() const {
  std::vector<std::size_t> pivots;
  pivots.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("coordinates: ambient dimension mismatch");
  // Rows are RREF: the coordinate along row r is v at that row's pivot.
  const auto pivots = pivot_columns();
  Vec coords(dim());
  Vec residue = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    coords[r] = residue[pivots[r]];
    if (coords[r] != 0)
      for (std::size_t c = 0; c < ambient_; ++c) residue[c] -= coords[r] * basis_(r, c);
  }
  if (!is_zero(residue)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("contains: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span of " << dim() << " in F^" << ambient_ << ":\n" << basis_.to_string();
  return os.str();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  Matrix stacked(u.dim() + v.dim(), u.ambient_dim());
  for (std::size_t r = 0; r < u.dim(); ++r) stacked.set_row(r, u.basis_vector(r));
  for (std::size_t r = 0; r < v.dim(); ++r) stacked.set_row(u.dim() + r, v.basis_vector(r));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(n);
  // x = a^T U = b^T V; kernel of [U^T | -V^T] yields the (a, b) pairs.
  Matrix m(n, u.dim() + v.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    const Vec row = u.basis_vector(c);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = row[r];
  }
  for (std::size_t c = 0; c < v.dim(); ++c) {
    const Vec row = v.basis_vector(c);
    for (std::size_t r = 0; r < n; ++r) m(r, u.dim() + c) = -row[r];
  }
  const Subspace pairs = nullspace(m);
  std::vector<Vec> vectors;
  for (std::size_t r = 0; r < pairs.dim(); ++r) {
    const Vec ab = pairs.basis_vector(r);
    Vec x(n, Rational(0));
    for (std::size_t j = 0; j < u.dim(); ++j)
      if (ab[j] != 0)
        for (std::size_t c = 0; c < n; ++c) x[c] += ab[j] * u.basis()(j, c);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(n, vectors);
}

Subspace nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  auto [red, rk] = rref(m);
  // Pivot columns of the RREF.
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_of_row(rk);
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (red(r, c) == 0) ++c;
    is_pivot[c] = true;
    pivot_of_row[r] = c;
  }
  std::vector<Vec> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rk; ++r) v[pivot_of_row[r]] = -red(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

}  // namespace quadlie
