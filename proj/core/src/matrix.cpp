#include "quadlie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t n = 0, k = 0;
  for (const auto& b : blocks) { n += b.rows(); k += b.cols(); }
  Matrix m(n, k);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Rational& Matrix::operator()(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return data_[r * cols_ + c];
}

const Rational& Matrix::operator()(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return data_[r * cols_ + c];
}

Vec Matrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("matrix row");
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("matrix col");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
  return out;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (r >= rows_ || v.size() != cols_) throw std::out_of_range("matrix row assign");
  std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return quadlie::is_zero(data_); }

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  Vec out(m.rows_, Rational(0));
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (m(r, c) != 0) out[r] += m(r, c) * v[c];
  return out;
}

Matrix operator*(const Rational& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

Matrix Matrix::from_vectorized(const Vec& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols)
    throw std::invalid_argument("vectorized length does not match shape");
  Matrix m(rows, cols);
  m.data_ = flat;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << quadlie::to_string((*this)(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

std::pair<Matrix, std::size_t> rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(lead, c));
    const Rational inv = Rational(1) / m(lead, col);
    for (std::size_t c = col; c < cols; ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(lead, c);
    }
    ++lead;
  }
  return {std::move(m), lead};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, rk] = rref(std::move(aug));
  if (rk != n) throw std::invalid_argument("inverse of singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve: rhs size mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto [red, rk] = rref(std::move(aug));
  Vec x(n, Rational(0));
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t lead = 0;
    while (lead < n && red(r, lead) == 0) ++lead;
    if (lead == n) return std::nullopt;  // 0 = 1 row: inconsistent
    x[lead] = red(r, n);
  }
  return x;
}

}  // namespace quadlie
