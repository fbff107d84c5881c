#include "quadlie/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)) {
  if (names_.empty()) {
    names_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) names_.push_back("b" + std::to_string(i));
  }
  if (names_.size() != dim_)
    throw std::invalid_argument("basis name count does not match dimension");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vec out) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("bracket index");
  if (i == j) throw std::invalid_argument("diagonal brackets are identically zero");
  if (out.size() != dim_) throw std::invalid_argument("bracket value has wrong length");
  bool negate = false;
  if (i > j) {
    std::swap(i, j);
    negate = true;
  }
  if (negate)
    for (auto& c : out) c = -c;
  if (is_zero(out))
    constants_.erase({i, j});
  else
    constants_[{i, j}] = std::move(out);
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("bracket index");
  if (i == j) return zero_vec(dim_);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find({i, j});
  if (it == constants_.end()) return zero_vec(dim_);
  return flip ? scaled(it->second, Rational(-1)) : it->second;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket operand length mismatch");
  Vec out = zero_vec(dim_);
  for (const auto& [key, c] : constants_) {
    const auto [i, j] = key;
    const Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (c[k] != 0) out[k] += coeff * c[k];
  }
  return out;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim_ == b.dim_ && a.constants_ == b.constants_;
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw std::invalid_argument("Gram matrix must be square");
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("form operand length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (gram_(i, j) != 0 && y[j] != 0) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

bool BilinearForm::is_nondegenerate() const { return rank(gram_) == dim(); }

BilinearForm canonical_form(std::size_t m) {
  const std::size_t n = m / 2;
  Matrix gram(m, m);
  if (m % 2 == 0) {
    for (std::size_t i = 0; i < n; ++i) gram(i, n + i) = gram(n + i, i) = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i) gram(i, n + 1 + i) = gram(n + 1 + i, i) = 1;
    gram(n, n) = 1;  // the unit vector T sits between the X and Z blocks
  }
  return BilinearForm(std::move(gram));
}

BilinearForm orthonormal_form(std::size_t m) { return BilinearForm(Matrix::identity(m)); }

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& issue : issues) os << issue.detail << "\n";
  return os.str();
}

QuadraticLieAlgebra::QuadraticLieAlgebra(LieAlgebra algebra, BilinearForm form,
                                         std::string name)
    : algebra_(std::move(algebra)), form_(std::move(form)), name_(std::move(name)) {
  if (algebra_.dim() != form_.dim())
    throw std::invalid_argument("algebra and form dimensions differ");
}

ValidationReport validate(const QuadraticLieAlgebra& q) {
  ValidationReport report;
  const LieAlgebra& g = q.algebra();
  const Matrix& gram = q.form().gram();
  const std::size_t n = g.dim();

  for (const auto& [key, c] : g.constants()) {
    if (key.first >= n || key.second >= n || key.first >= key.second || c.size() != n) {
      report.issues.push_back({ValidationIssue::Kind::bad_shape,
                               {key.first, key.second, 0},
                               "malformed structure constant entry"});
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) {
        std::ostringstream os;
        os << "form not symmetric at (" << i << ", " << j << "): "
           << to_string(gram(i, j)) << " vs " << to_string(gram(j, i));
        report.issues.push_back({ValidationIssue::Kind::form_not_symmetric, {i, j, 0}, os.str()});
      }

  if (rank(gram) != n) {
    std::ostringstream os;
    os << "form degenerate: rank " << rank(gram) << " < " << n;
    report.issues.push_back({ValidationIssue::Kind::form_degenerate, {0, 0, 0}, os.str()});
  }

  // Jacobi on basis triples i < j < k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec bij = g.bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec defect = g.bracket(bij, unit_axis(n, k));
        defect = add(defect, g.bracket(g.bracket(j, k), unit_axis(n, i)));
        defect = add(defect, g.bracket(g.bracket(k, i), unit_axis(n, j)));
        if (!is_zero(defect)) {
          std::ostringstream os;
          os << "Jacobi fails on (" << g.basis_names()[i] << ", " << g.basis_names()[j]
             << ", " << g.basis_names()[k] << "): defect " << to_string(defect);
          report.issues.push_back({ValidationIssue::Kind::jacobi, {i, j, k}, os.str()});
        }
      }
    }

  // Invariance B([b_i, b_j], b_k) = B(b_i, [b_j, b_k]) on all ordered triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec bij = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (bij[m] != 0) lhs += bij[m] * gram(m, k);
        const Vec bjk = g.bracket(j, k);
        for (std::size_t m = 0; m < n; ++m)
          if (bjk[m] != 0) rhs += gram(i, m) * bjk[m];
        if (lhs != rhs) {
          std::ostringstream os;
          os << "invariance fails on (" << g.basis_names()[i] << ", " << g.basis_names()[j]
             << ", " << g.basis_names()[k] << "): " << to_string(lhs) << " vs "
             << to_string(rhs);
          report.issues.push_back({ValidationIssue::Kind::invariance, {i, j, k}, os.str()});
        }
      }
    }

  return report;
}

void validate_or_throw(const QuadraticLieAlgebra& q) {
  ValidationReport report = validate(q);
  if (report.ok()) return;
  std::string what = "algebra '" + q.name() + "' fails validation:\n" + report.to_string();
  throw ValidationError(std::move(what), std::move(report));
}

Matrix ad(const LieAlgebra& g, const Vec& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("ad: vector length mismatch");
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec column = g.bracket(x, unit_axis(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = column[i];
  }
  return m;
}

Matrix ad_basis(const LieAlgebra& g, std::size_t i) {
  return ad(g, unit_axis(g.dim(), i));
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != g.dim() || v.ambient_dim() != g.dim())
    throw std::invalid_argument("subspace_bracket: ambient dimension mismatch");
  std::vector<Vec> products;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b)
      products.push_back(g.bracket(u.basis_vector(a), v.basis_vector(b)));
  return Subspace::span(g.dim(), products);
}

Subspace ideal_closure(const LieAlgebra& g, Subspace u) {
  const Subspace full = Subspace::full(g.dim());
  while (true) {
    Subspace next = sum(u, subspace_bracket(g, full, u));
    if (next == u) return u;
    u = std::move(next);
  }
}

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
  return u.contains(subspace_bracket(g, Subspace::full(g.dim()), u));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) {
  return u.contains(subspace_bracket(g, u, u));
}

Subspace perp(const BilinearForm& form, const Subspace& u) {
  if (u.ambient_dim() != form.dim())
    throw std::invalid_argument("perp: ambient dimension mismatch");
  return nullspace(u.basis() * form.gram());
}

Subspace perp(const QuadraticLieAlgebra& q, const Subspace& u) {
  return perp(q.form(), u);
}

Matrix restricted_gram(const BilinearForm& form, const Subspace& u) {
  return u.basis() * form.gram() * u.basis().transposed();
}

bool restricted_form_nondegenerate(const BilinearForm& form, const Subspace& u) {
  return rank(restricted_gram(form, u)) == u.dim();
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim())
    throw std::invalid_argument("quotient: ambient dimension mismatch");
  if (!is_ideal(g, ideal))
    throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  const auto pivots = ideal.pivot_columns();
  std::vector<bool> in_ideal_pivots(n, false);
  for (auto p : pivots) in_ideal_pivots[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c)
    if (!in_ideal_pivots[c]) complement.push_back(c);
  const std::size_t q = complement.size();

  // Projection: reduce by the ideal's echelon rows, then read complement coords.
  Matrix projection(q, n);
  auto project = [&](Vec v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Rational c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] -= c * ideal.basis()(r, k);
    }
    Vec out(q);
    for (std::size_t k = 0; k < q; ++k) out[k] = v[complement[k]];
    return out;
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Vec image = project(unit_axis(n, j));
    for (std::size_t i = 0; i < q; ++i) projection(i, j) = image[i];
  }

  std::vector<std::string> names;
  names.reserve(q);
  for (auto c : complement) names.push_back(g.basis_names()[c]);
  LieAlgebra out(q, std::move(names));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      out.set_bracket(a, b, project(g.bracket(complement[a], complement[b])));

  // The induced bracket must again satisfy Jacobi.
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = j + 1; k < q; ++k) {
        Vec defect = out.bracket(out.bracket(i, j), unit_axis(q, k));
        defect = add(defect, out.bracket(out.bracket(j, k), unit_axis(q, i)));
        defect = add(defect, out.bracket(out.bracket(k, i), unit_axis(q, j)));
        if (!is_zero(defect))
          throw std::logic_error("quotient bracket violates Jacobi; input was not valid");
      }
  return {std::move(out), std::move(projection)};
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& u) {
  if (u.ambient_dim() != g.dim())
    throw std::invalid_argument("restrict_to: ambient dimension mismatch");
  const std::size_t k = u.dim();
  std::vector<std::string> names;
  names.reserve(k);
  for (auto p : u.pivot_columns()) names.push_back(g.basis_names()[p]);
  LieAlgebra out(k, std::move(names));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const Vec prod = g.bracket(u.basis_vector(a), u.basis_vector(b));
      const auto coords = u.coordinates(prod);
      if (!coords)
        throw std::invalid_argument(
            "restrict_to: subspace is not closed under the bracket (rows " +
            std::to_string(a) + ", " + std::to_string(b) + ")");
      out.set_bracket(a, b, *coords);
    }
  return out;
}

QuadraticLieAlgebra direct_sum(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> names = a.algebra().basis_names();
  for (const auto& name : b.algebra().basis_names()) names.push_back(name + "'");
  LieAlgebra g(na + nb, std::move(names));
  for (const auto& [key, c] : a.algebra().constants()) {
    Vec lifted = zero_vec(na + nb);
    std::copy(c.begin(), c.end(), lifted.begin());
    g.set_bracket(key.first, key.second, std::move(lifted));
  }
  for (const auto& [key, c] : b.algebra().constants()) {
    Vec lifted = zero_vec(na + nb);
    std::copy(c.begin(), c.end(), lifted.begin() + na);
    g.set_bracket(na + key.first, na + key.second, std::move(lifted));
  }
  BilinearForm form(Matrix::block_diagonal({a.form().gram(), b.form().gram()}));
  QuadraticLieAlgebra out(std::move(g), std::move(form), a.name() + "+" + b.name());
  return out;
}

}  // namespace quadlie
