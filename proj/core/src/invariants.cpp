#include "quadlie/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadlie {

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim << " dim[g,g]=" << dim_derived << " dim[[g,g],[g,g]]=" << dim_dd
     << " dim_center=" << dim_center
     << " center_isotropic=" << (center_totally_isotropic ? "yes" : "no") << " class=";
  if (nilpotency_class) os << *nilpotency_class;
  else os << "-";
  os << " derived_length=";
  if (derived_length) os << *derived_length;
  else os << "-";
  os << " solvable=" << (solvable ? "yes" : "no");
  return os.str();
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return Subspace::zero(0);
  // x central iff ad(b_i) x = 0 for every i; stack the n maps.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix adi = ad_basis(g, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = adi(r, c);
  }
  return nullspace(stacked);
}

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
  const Subspace full = Subspace::full(g.dim());
  std::vector<Subspace> chain{full};
  while (true) {
    const Subspace& last = chain.back();
    Subspace next = kind == SeriesKind::lower_central
                        ? subspace_bracket(g, full, last)
                        : subspace_bracket(g, last, last);
    if (next == last) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  const auto chain = series(g, SeriesKind::lower_central);
  if (chain.back().dim() != 0) return std::nullopt;
  return chain.size() - 1;  // number of nonzero terms; [0] alone means dim 0
}

bool is_nilpotent(const LieAlgebra& g) { return nilpotency_class(g).has_value(); }

bool is_solvable(const LieAlgebra& g) {
  return series(g, SeriesKind::derived).back().dim() == 0;
}

Fingerprint fingerprint(const QuadraticLieAlgebra& q) {
  const LieAlgebra& g = q.algebra();
  Fingerprint fp;
  fp.dim = g.dim();

  const Subspace full = Subspace::full(g.dim());
  const Subspace derived = subspace_bracket(g, full, full);
  fp.dim_derived = derived.dim();
  fp.dim_dd = subspace_bracket(g, derived, derived).dim();
  const auto derived_chain = series(g, SeriesKind::derived);

  const Subspace z = center(g);
  fp.dim_center = z.dim();
  fp.center_totally_isotropic = is_totally_isotropic(q, z);
  fp.nilpotency_class = nilpotency_class(g);
  fp.solvable = derived_chain.back().dim() == 0;
  if (fp.solvable) fp.derived_length = derived_chain.size() - 1;
  return fp;
}

bool is_totally_isotropic(const QuadraticLieAlgebra& q, const Subspace& u) {
  if (u.ambient_dim() != q.dim())
    throw std::invalid_argument("is_totally_isotropic: ambient dimension mismatch");
  return restricted_gram(q.form(), u).is_zero();
}

std::optional<Vec> nonisotropic_central_element(const QuadraticLieAlgebra& q) {
  const Subspace z = center(q.algebra());
  const Matrix gz = restricted_gram(q.form(), z);
  const std::size_t k = z.dim();
  for (std::size_t i = 0; i < k; ++i)
    if (gz(i, i) != 0) return z.basis_vector(i);
  // All basis vectors isotropic; any nonzero off-diagonal pairing gives
  // B(c_i + c_j, c_i + c_j) = 2 B(c_i, c_j) != 0 in characteristic zero.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (gz(i, j) != 0) return add(z.basis_vector(i), z.basis_vector(j));
  return std::nullopt;
}

std::optional<std::pair<Subspace, Subspace>> find_nondegenerate_ideal(
    const QuadraticLieAlgebra& q, std::size_t budget) {
  const std::size_t n = q.dim();
  if (n <= 1) return std::nullopt;
  std::size_t tried = 0;

  auto consider = [&](const Subspace& seed) -> std::optional<std::pair<Subspace, Subspace>> {
    if (tried >= budget) return std::nullopt;
    ++tried;
    const Subspace ideal = ideal_closure(q.algebra(), seed);
    if (ideal.dim() == 0 || ideal.dim() == n) return std::nullopt;
    if (!restricted_form_nondegenerate(q.form(), ideal)) return std::nullopt;
    const Subspace complement = perp(q, ideal);
    if (!restricted_form_nondegenerate(q.form(), complement)) return std::nullopt;
    return std::make_pair(ideal, complement);
  };

  if (const auto u = nonisotropic_central_element(q)) {
    if (auto hit = consider(Subspace::span(n, {*u}))) return hit;
  }
  for (std::size_t i = 0; i < n && tried < budget; ++i) {
    if (auto hit = consider(Subspace::span(n, {unit_axis(n, i)}))) return hit;
  }
  for (std::size_t i = 0; i < n && tried < budget; ++i)
    for (std::size_t j = i + 1; j < n && tried < budget; ++j) {
      if (auto hit = consider(Subspace::span(n, {unit_axis(n, i), unit_axis(n, j)})))
        return hit;
    }
  for (std::size_t i = 0; i < n && tried < budget; ++i)
    for (std::size_t j = i + 1; j < n && tried < budget; ++j)
      for (std::size_t k = j + 1; k < n && tried < budget; ++k) {
        if (auto hit = consider(
                Subspace::span(n, {unit_axis(n, i), unit_axis(n, j), unit_axis(n, k)})))
          return hit;
      }
  return std::nullopt;
}

std::optional<std::size_t> zperp_quotient_class(const QuadraticLieAlgebra& q, const Vec& z) {
  const std::size_t n = q.dim();
  if (z.size() != n) throw std::invalid_argument("zperp_quotient_class: length mismatch");
  if (is_zero(z)) throw std::invalid_argument("zperp_quotient_class: z is zero");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(q.algebra().bracket(z, unit_axis(n, i))))
      throw std::invalid_argument("zperp_quotient_class: z is not central");
  if (q.form().eval(z, z) != 0)
    throw std::invalid_argument("zperp_quotient_class: z is not isotropic");

  const Subspace line = Subspace::span(n, {z});
  const Subspace zp = perp(q, line);
  // z central makes [g, g] orthogonal to z, so z-perp is a subalgebra and
  // contains the isotropic z itself.
  const LieAlgebra sub = restrict_to(q.algebra(), zp);
  const auto zcoords = zp.coordinates(z);
  if (!zcoords) throw std::logic_error("isotropic central z must lie in its own perp");
  const auto [quot, projection] = quotient(sub, Subspace::span(zp.dim(), {*zcoords}));
  return nilpotency_class(quot);
}

}  // namespace quadlie
