#include "quadlie/double_extension.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace quadlie {

bool is_derivation(const LieAlgebra& g, const Matrix& d, std::string* why) {
  const std::size_t n = g.dim();
  if (!d.is_square() || d.rows() != n) {
    if (why) *why = "matrix shape does not match the algebra dimension";
    return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d * g.bracket(i, j);
      Vec rhs = add(g.bracket(d.col(i), unit_axis(n, j)),
                    g.bracket(unit_axis(n, i), d.col(j)));
      if (lhs != rhs) {
        if (why) {
          std::ostringstream os;
          os << "derivation identity fails on (" << g.basis_names()[i] << ", "
             << g.basis_names()[j] << "): D[x,y] = " << to_string(lhs)
             << " but [Dx,y]+[x,Dy] = " << to_string(rhs);
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

bool is_skew(const BilinearForm& form, const Matrix& d, std::string* why) {
  const std::size_t n = form.dim();
  if (!d.is_square() || d.rows() != n) {
    if (why) *why = "matrix shape does not match the form dimension";
    return false;
  }
  const Matrix defect = form.gram() * d + d.transposed() * form.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (defect(i, j) != 0) {
        if (why) {
          std::ostringstream os;
          os << "skewness fails at entry (" << i << ", " << j
             << "): Gram*D + D^T*Gram has value " << to_string(defect(i, j));
          *why = os.str();
        }
        return false;
      }
  return true;
}

QuadraticLieAlgebra dext1(const QuadraticLieAlgebra& h, const Matrix& d,
                          const std::string& name) {
  const std::size_t n = h.dim();
  std::string why;
  if (!is_derivation(h.algebra(), d, &why))
    throw std::invalid_argument("dext1: " + why);
  if (!is_skew(h.form(), d, &why)) throw std::invalid_argument("dext1: " + why);

  std::vector<std::string> names;
  names.reserve(n + 2);
  names.push_back("e");
  for (const auto& s : h.algebra().basis_names()) names.push_back(s);
  names.push_back("f");

  LieAlgebra g(n + 2, std::move(names));
  // [e, b_j] = D b_j.
  for (std::size_t j = 0; j < n; ++j) {
    Vec out = zero_vec(n + 2);
    const Vec image = d.col(j);
    std::copy(image.begin(), image.end(), out.begin() + 1);
    g.set_bracket(0, 1 + j, std::move(out));
  }
  // [b_i, b_j] = [b_i, b_j]_h + B(D b_i, b_j) f.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec out = zero_vec(n + 2);
      const Vec inner = h.algebra().bracket(i, j);
      std::copy(inner.begin(), inner.end(), out.begin() + 1);
      out[n + 1] = h.form().eval(d.col(i), unit_axis(n, j));
      g.set_bracket(1 + i, 1 + j, std::move(out));
    }

  Matrix gram(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(1 + i, 1 + j) = h.form().gram()(i, j);
  gram(0, n + 1) = gram(n + 1, 0) = 1;

  QuadraticLieAlgebra out(std::move(g), BilinearForm(std::move(gram)),
                          name.empty() ? "dext1(" + h.name() + ")" : name);
  validate_or_throw(out);
  out.set_origin(std::make_shared<const DextOrigin>(DextOrigin{h, d}));
  return out;
}

namespace {

void check_pair(const BilinearForm& bq, const Matrix& c1, const Matrix& c2,
                const char* who) {
  std::string why;
  if (!is_skew(bq, c1, &why)) throw std::invalid_argument(std::string(who) + ": C1 " + why);
  if (!is_skew(bq, c2, &why)) throw std::invalid_argument(std::string(who) + ": C2 " + why);
  const Matrix commutator = c1 * c2 - c2 * c1;
  for (std::size_t i = 0; i < commutator.rows(); ++i)
    for (std::size_t j = 0; j < commutator.cols(); ++j)
      if (commutator(i, j) != 0) {
        std::ostringstream os;
        os << who << ": C1 and C2 do not commute; [C1,C2](" << i << ", " << j
           << ") = " << to_string(commutator(i, j));
        throw std::invalid_argument(os.str());
      }
}

}  // namespace

QuadraticLieAlgebra dext_pair(const BilinearForm& bq, const Matrix& c1, const Matrix& c2,
                              const std::string& name) {
  check_pair(bq, c1, c2, "dext_pair");
  const std::size_t m = bq.dim();
  const std::size_t x1 = m, x2 = m + 1, z1 = m + 2, z2 = m + 3;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("q" + std::to_string(i + 1));
  names.insert(names.end(), {"X1", "X2", "Z1", "Z2"});

  LieAlgebra g(m + 4, std::move(names));
  const Matrix* cs[2] = {&c1, &c2};
  for (int idx = 0; idx < 2; ++idx)
    for (std::size_t j = 0; j < m; ++j) {
      // Stored as [q_j, X_i] = -C_i q_j.
      Vec out = zero_vec(m + 4);
      const Vec image = cs[idx]->col(j);
      for (std::size_t k = 0; k < m; ++k) out[k] = -image[k];
      g.set_bracket(j, idx == 0 ? x1 : x2, std::move(out));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec out = zero_vec(m + 4);
      out[z1] = bq.eval(c1.col(i), unit_axis(m, j));
      out[z2] = bq.eval(c2.col(i), unit_axis(m, j));
      g.set_bracket(i, j, std::move(out));
    }

  Matrix gram(m + 4, m + 4);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = bq.gram()(i, j);
  gram(x1, z1) = gram(z1, x1) = 1;
  gram(x2, z2) = gram(z2, x2) = 1;

  QuadraticLieAlgebra out(std::move(g), BilinearForm(std::move(gram)),
                          name.empty() ? "dext_pair" : name);
  validate_or_throw(out);
  return out;
}

QuadraticLieAlgebra dext_triple(const BilinearForm& bq, const Matrix& c1, const Matrix& c2,
                                const std::string& name) {
  check_pair(bq, c1, c2, "dext_triple");
  const std::size_t m = bq.dim();
  const std::size_t t = m, x1 = m + 1, x2 = m + 2, z1 = m + 3, z2 = m + 4;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("q" + std::to_string(i + 1));
  names.insert(names.end(), {"T", "X1", "X2", "Z1", "Z2"});

  LieAlgebra g(m + 5, std::move(names));
  {
    Vec out = zero_vec(m + 5);
    out[t] = 1;
    g.set_bracket(x1, x2, std::move(out));  // [X1, X2] = T
  }
  {
    Vec out = zero_vec(m + 5);
    out[z2] = 1;
    g.set_bracket(t, x1, std::move(out));  // [T, X1] = Z2, i.e. [X1, T] = -Z2
  }
  {
    Vec out = zero_vec(m + 5);
    out[z1] = -1;
    g.set_bracket(t, x2, std::move(out));  // [T, X2] = -Z1, i.e. [X2, T] = Z1
  }
  const Matrix* cs[2] = {&c1, &c2};
  for (int idx = 0; idx < 2; ++idx)
    for (std::size_t j = 0; j < m; ++j) {
      Vec out = zero_vec(m + 5);
      const Vec image = cs[idx]->col(j);
      for (std::size_t k = 0; k < m; ++k) out[k] = -image[k];
      g.set_bracket(j, idx == 0 ? x1 : x2, std::move(out));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec out = zero_vec(m + 5);
      out[z1] = bq.eval(c1.col(i), unit_axis(m, j));
      out[z2] = bq.eval(c2.col(i), unit_axis(m, j));
      g.set_bracket(i, j, std::move(out));
    }

  Matrix gram(m + 5, m + 5);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = bq.gram()(i, j);
  gram(t, t) = 1;
  gram(x1, z1) = gram(z1, x1) = 1;
  gram(x2, z2) = gram(z2, x2) = 1;

  QuadraticLieAlgebra out(std::move(g), BilinearForm(std::move(gram)),
                          name.empty() ? "dext_triple" : name);
  validate_or_throw(out);
  return out;
}

}  // namespace quadlie
