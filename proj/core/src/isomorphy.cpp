#include "quadlie/isomorphy.hpp"

#include "quadlie/double_extension.hpp"
#include "quadlie/invariants.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace quadlie {

IsoCheck check_i_isomorphism(const QuadraticLieAlgebra& q1, const QuadraticLieAlgebra& q2,
                             const Matrix& a) {
  if (q1.dim() != q2.dim())
    throw std::invalid_argument("check_i_isomorphism: dimensions differ");
  const std::size_t n = q1.dim();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("check_i_isomorphism: map has wrong shape");

  if (!is_invertible(a)) return {false, "map is not invertible"};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = a * q1.algebra().bracket(i, j);
      const Vec rhs = q2.algebra().bracket(a.col(i), a.col(j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "bracket not preserved on (" << q1.algebra().basis_names()[i] << ", "
           << q1.algebra().basis_names()[j] << "): A[x,y] = " << to_string(lhs)
           << " but [Ax,Ay] = " << to_string(rhs);
        return {false, os.str()};
      }
    }

  const Matrix pulled = a.transposed() * q2.form().gram() * a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (pulled(i, j) != q1.form().gram()(i, j)) {
        std::ostringstream os;
        os << "not an isometry at (" << i << ", " << j
           << "): B2(Ax,Ay) = " << to_string(pulled(i, j))
           << " but B1(x,y) = " << to_string(q1.form().gram()(i, j));
        return {false, os.str()};
      }

  return {true, ""};
}

IsoWitness build_dext1_isomorphism(const QuadraticLieAlgebra& h, const Matrix& d1,
                                   const Matrix& d2, const Matrix& p,
                                   const Rational& lambda, const Vec& x) {
  const std::size_t n = h.dim();
  if (lambda == 0) throw std::invalid_argument("build_dext1_isomorphism: lambda must be nonzero");
  if (x.size() != n) throw std::invalid_argument("build_dext1_isomorphism: X has wrong length");
  const IsoCheck pcheck = check_i_isomorphism(h, h, p);
  if (!pcheck.ok)
    throw std::invalid_argument("build_dext1_isomorphism: P is not an i-automorphism of the base: " +
                                pcheck.report);
  const Matrix pinv = inverse(p);
  const Matrix lhs = pinv * d1 * p;
  const Matrix rhs = lambda * d2 + ad(h.algebra(), x);
  if (lhs != rhs)
    throw std::invalid_argument(
        "build_dext1_isomorphism: P^{-1} D1 P != lambda D2 + ad(X); the hypothesis fails");

  const QuadraticLieAlgebra g1 = dext1(h, d1);
  const QuadraticLieAlgebra g2 = dext1(h, d2);

  // Basis order of both extensions is (e, h..., f).
  Matrix a(n + 2, n + 2);
  a(0, 0) = lambda;
  for (std::size_t i = 0; i < n; ++i) a(1 + i, 0) = x[i];
  a(n + 1, 0) = -h.form().eval(x, x) / (2 * lambda);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec py = pinv.col(j);
    for (std::size_t i = 0; i < n; ++i) a(1 + i, 1 + j) = py[i];
    a(n + 1, 1 + j) = -h.form().eval(x, py) / lambda;
  }
  a(n + 1, n + 1) = Rational(1) / lambda;

  const IsoCheck check = check_i_isomorphism(g1, g2, a);
  if (!check.ok)
    throw std::logic_error("build_dext1_isomorphism: constructed witness failed verification: " +
                           check.report);
  return {a, g1.name(), g2.name()};
}

IsoWitness build_pair_isomorphism(const BilinearForm& bq, const Matrix& c1,
                                  const Matrix& c2, const Matrix& c1p, const Matrix& c2p,
                                  const Matrix& p, std::pair<Rational, Rational> lambdas,
                                  std::pair<Rational, Rational> gammas) {
  const std::size_t m = bq.dim();
  const auto [l1, l2] = lambdas;
  const auto [g1c, g2c] = gammas;
  const Rational det = l1 * g2c - l2 * g1c;
  if (det == 0)
    throw std::invalid_argument("build_pair_isomorphism: lambda/gamma coefficient matrix is singular");
  if (p.rows() != m || p.cols() != m)
    throw std::invalid_argument("build_pair_isomorphism: P has wrong shape");
  if (p.transposed() * bq.gram() * p != bq.gram())
    throw std::invalid_argument("build_pair_isomorphism: P is not an isometry of the base form");
  const Matrix pinv = inverse(p);
  if (p * c1 * pinv != l1 * c1p + l2 * c2p)
    throw std::invalid_argument("build_pair_isomorphism: P C1 P^{-1} != l1 C1' + l2 C2'");
  if (p * c2 * pinv != g1c * c1p + g2c * c2p)
    throw std::invalid_argument("build_pair_isomorphism: P C2 P^{-1} != g1 C1' + g2 C2'");

  const QuadraticLieAlgebra g = dext_pair(bq, c1, c2);
  const QuadraticLieAlgebra gp = dext_pair(bq, c1p, c2p);

  // a solves (l1 a1 + l2 a2, g1 a1 + g2 a2) = (1, 0); b the same with (0, 1).
  const Rational a1 = g2c / det, a2 = -g1c / det;
  const Rational b1 = -l2 / det, b2 = l1 / det;

  const std::size_t x1 = m, x2 = m + 1, z1 = m + 2, z2 = m + 3;
  Matrix a(m + 4, m + 4);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = p(i, j);
  a(x1, x1) = l1;
  a(x2, x1) = l2;
  a(x1, x2) = g1c;
  a(x2, x2) = g2c;
  a(z1, z1) = a1;
  a(z2, z1) = a2;
  a(z1, z2) = b1;
  a(z2, z2) = b2;

  const IsoCheck check = check_i_isomorphism(g, gp, a);
  if (!check.ok)
    throw std::logic_error("build_pair_isomorphism: constructed witness failed verification: " +
                           check.report);
  return {a, g.name(), gp.name()};
}

CenterActionInvariant center_action_invariant(const QuadraticLieAlgebra& h, const Matrix& d) {
  std::string why;
  if (!is_derivation(h.algebra(), d, &why))
    throw std::invalid_argument("center_action_invariant: " + why);
  if (!is_skew(h.form(), d, &why)) throw std::invalid_argument("center_action_invariant: " + why);
  if (!is_invertible(d))
    throw std::invalid_argument("center_action_invariant: derivation must be invertible");

  const Subspace z = center(h.algebra());
  const std::size_t k = z.dim();
  Matrix action(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vec image = d * z.basis_vector(j);
    const auto coords = z.coordinates(image);
    if (!coords)
      throw std::logic_error("center_action_invariant: derivation does not stabilize the center");
    for (std::size_t i = 0; i < k; ++i) action(i, j) = (*coords)[i];
  }
  CenterActionInvariant out;
  out.center_action = action;
  out.minpoly = minimal_polynomial(action);
  out.squarefree = is_squarefree(out.minpoly);
  return out;
}

std::vector<Rational> normalized_spectrum(std::vector<Rational> multiset) {
  std::sort(multiset.begin(), multiset.end());
  bool any_nonzero = false;
  for (const auto& s : multiset) any_nonzero = any_nonzero || s != 0;
  if (!any_nonzero) return multiset;
  std::optional<std::vector<Rational>> best;
  for (const auto& s : multiset) {
    if (s == 0) continue;
    std::vector<Rational> scaled;
    scaled.reserve(multiset.size());
    for (const auto& v : multiset) scaled.push_back(v / s);
    std::sort(scaled.begin(), scaled.end());
    if (!best || scaled < *best) best = std::move(scaled);
  }
  return *best;
}

std::optional<std::vector<Rational>> rational_spectrum(const Matrix& m) {
  const RationalRoots roots = rational_roots(characteristic_polynomial(m));
  if (roots.remaining.degree() > 0) return std::nullopt;
  return roots.roots;
}

namespace {

// A e_i = scale[i] * e_{target[i]}: the monomial (signed scaled permutation)
// candidates of the search.
struct MonomialMap {
  std::vector<std::size_t> target;
  Vec scale;
};

Matrix monomial_matrix(const MonomialMap& map) {
  const std::size_t n = map.target.size();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(map.target[i], i) = map.scale[i];
  return a;
}

// Dense lookup over the sparse structure constants: entry (p, q) points at
// the stored vector for the unordered pair with its sign, nullptr when the
// bracket is zero. Items carry their support so the per-candidate check
// touches only nonzero coefficients and never allocates.
struct BracketTable {
  std::size_t n;
  struct Item {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, const Rational*>> support;
  };
  struct Entry {
    const Vec* vec = nullptr;
    int sign = 1;
    std::size_t support_size = 0;
  };
  std::vector<Item> items;   // the stored pairs i < j
  std::vector<Entry> entry;  // n*n

  explicit BracketTable(const LieAlgebra& g) : n(g.dim()), entry(n * n) {
    for (const auto& [key, c] : g.constants()) {
      const auto [i, j] = key;
      Item item{i, j, {}};
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) item.support.emplace_back(k, &c[k]);
      const std::size_t size = item.support.size();
      items.push_back(std::move(item));
      entry[i * n + j] = {&c, 1, size};
      entry[j * n + i] = {&c, -1, size};
    }
  }
};

// Bracket preservation specialized to monomial maps; both directions of the
// sparse tables are compared so that a zero bracket mapping onto a nonzero
// one is caught. Equal support sizes plus the inclusion checked coefficient
// by coefficient pin the supports exactly.
bool monomial_preserves_brackets(const BracketTable& t1, const BracketTable& t2,
                                 const MonomialMap& map) {
  const std::size_t n = t1.n;
  for (const auto& item : t1.items) {
    const std::size_t p = map.target[item.i], q = map.target[item.j];
    const BracketTable::Entry& target = t2.entry[p * n + q];
    if (!target.vec) return false;  // nonzero bracket mapped onto a zero one
    if (target.support_size != item.support.size()) return false;
    const Rational factor =
        Rational(target.sign) * map.scale[item.i] * map.scale[item.j];
    for (const auto& [k, coeff] : item.support) {
      const Rational& rhs_k = (*target.vec)[map.target[k]];
      if (rhs_k == 0) return false;
      if (*coeff * map.scale[k] != factor * rhs_k) return false;
    }
  }
  for (const auto& item : t2.items) {
    // Zero brackets mapped onto nonzero ones, scanned from the target side.
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (map.target[k] == item.i) i = k;
      if (map.target[k] == item.j) j = k;
    }
    if (!t1.entry[i * n + j].vec) return false;
  }
  return true;
}

constexpr std::array<int, 6> kScaleNum = {1, -1, 2, 1, -2, -1};
constexpr std::array<int, 6> kScaleDen = {1, 1, 1, 2, 1, 2};

// Depth-first enumeration of monomial isometries (G1 -> G2), lexicographic in
// (position, target, scale index). Calls visit on every complete candidate;
// stops when visit returns true or the candidate budget runs dry.
template <typename Visit>
class MonomialIsometryEnumerator {
 public:
  MonomialIsometryEnumerator(const Matrix& g1, const Matrix& g2, std::size_t& tried,
                             std::size_t budget, Visit visit)
      : tried_(tried), budget_(budget), n_(g1.rows()), g1_(g1.vectorized()),
        g2_(g2.vectorized()), visit_(std::move(visit)) {
    map_.target.assign(n_, 0);
    map_.scale.assign(n_, Rational(0));
    used_.assign(n_, false);
    scales_.reserve(kScaleNum.size());
    for (std::size_t s = 0; s < kScaleNum.size(); ++s)
      scales_.emplace_back(kScaleNum[s], kScaleDen[s]);
    // Zero patterns of the Gram matrices; they prune nearly every branch
    // before any rational arithmetic happens.
    nz1_.resize(n_ * n_);
    nz2_.resize(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      nz1_[k] = g1_[k] != 0;
      nz2_[k] = g2_[k] != 0;
    }
  }

  bool run() { return n_ == 0 ? visit_complete() : extend(0); }

 private:
  bool visit_complete() {
    ++tried_;
    return visit_(map_);
  }

  bool extend(std::size_t pos) {
    if (tried_ >= budget_) return false;
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t]) continue;
      if (!pattern_compatible(pos, t)) continue;
      for (const Rational& d : scales_) {
        if (!isometry_compatible(pos, t, d)) continue;
        map_.target[pos] = t;
        map_.scale[pos] = d;
        used_[t] = true;
        const bool hit = pos + 1 == n_ ? visit_complete() : extend(pos + 1);
        if (hit) return true;
        used_[t] = false;
        if (tried_ >= budget_) return false;
      }
    }
    return false;
  }

  // Scale-independent part: nonzero patterns of the pairings must agree.
  bool pattern_compatible(std::size_t pos, std::size_t t) const {
    if (nz1_[pos * n_ + pos] != nz2_[t * n_ + t]) return false;
    for (std::size_t j = 0; j < pos; ++j)
      if (nz1_[pos * n_ + j] != nz2_[t * n_ + map_.target[j]]) return false;
    return true;
  }

  bool isometry_compatible(std::size_t pos, std::size_t t, const Rational& d) const {
    if (nz2_[t * n_ + t] && d * d * g2_[t * n_ + t] != g1_[pos * n_ + pos]) return false;
    for (std::size_t j = 0; j < pos; ++j) {
      if (!nz1_[pos * n_ + j]) continue;
      if (d * map_.scale[j] * g2_[t * n_ + map_.target[j]] != g1_[pos * n_ + j])
        return false;
    }
    return true;
  }

  std::size_t& tried_;
  std::size_t budget_;
  std::size_t n_;
  Vec g1_;
  Vec g2_;
  std::vector<char> nz1_;
  std::vector<char> nz2_;
  std::vector<Rational> scales_;
  MonomialMap map_;
  std::vector<bool> used_;
  Visit visit_;
};

}  // namespace

std::optional<IsoWitness> witness_search(const QuadraticLieAlgebra& q1,
                                         const QuadraticLieAlgebra& q2,
                                         std::size_t budget) {
  if (q1.dim() != q2.dim()) return std::nullopt;
  if (fingerprint(q1) != fingerprint(q2)) return std::nullopt;

  std::size_t tried = 0;
  std::optional<IsoWitness> found;

  // Phase 1: signed scaled basis permutations that are isometries.
  const BracketTable table1(q1.algebra());
  const BracketTable table2(q2.algebra());
  MonomialIsometryEnumerator enumerator(
      q1.form().gram(), q2.form().gram(), tried, budget, [&](const MonomialMap& map) {
        if (!monomial_preserves_brackets(table1, table2, map)) return false;
        const Matrix a = monomial_matrix(map);
        if (!check_i_isomorphism(q1, q2, a).ok) return false;
        found = IsoWitness{a, q1.name(), q2.name()};
        return true;
      });
  enumerator.run();
  if (found || tried >= budget) return found;

  // Phase 2: construction-aware maps when both inputs are double extensions
  // of one base.
  const auto o1 = q1.origin();
  const auto o2 = q2.origin();
  if (!o1 || !o2 || !(o1->base == o2->base)) return std::nullopt;
  const QuadraticLieAlgebra& h = o1->base;
  const std::size_t n = h.dim();

  // vec(ad(X)) is linear in X; columns of this operator are vec(ad(b_i)).
  Matrix ad_op(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec flat = ad_basis(h.algebra(), i).vectorized();
    for (std::size_t r = 0; r < n * n; ++r) ad_op(r, i) = flat[r];
  }
  const std::vector<Rational> lambda_pool = {
      Rational(1),     Rational(-1),    Rational(2),  Rational(-2), Rational(1, 2),
      Rational(-1, 2), Rational(3),     Rational(-3), Rational(1, 3), Rational(-1, 3)};

  const BracketTable base_table(h.algebra());
  MonomialIsometryEnumerator base_enum(
      h.form().gram(), h.form().gram(), tried, budget, [&](const MonomialMap& map) {
    if (!monomial_preserves_brackets(base_table, base_table, map)) return false;
    const Matrix p = monomial_matrix(map);
    const Matrix pinv = inverse(p);
    const Matrix conj = pinv * o1->derivation * p;
    for (const Rational& lambda : lambda_pool) {
      if (tried >= budget) return true;  // abort enumeration, nothing found
      ++tried;
      const Matrix residue = conj - lambda * o2->derivation;
      const auto x = solve(ad_op, residue.vectorized());
      if (!x) continue;
      try {
        IsoWitness witness = build_dext1_isomorphism(h, o1->derivation, o2->derivation, p, lambda, *x);
        // build_dext1_isomorphism certifies dext1(h, D1) -> dext1(h, D2); q1 and q2 are
        // those extensions (their origins say so), so re-verify directly.
        const IsoCheck recheck = check_i_isomorphism(q1, q2, witness.map);
        if (recheck.ok) {
          found = IsoWitness{witness.map, q1.name(), q2.name()};
          return true;
        }
      } catch (const std::exception&) {
        // Hypothesis check failed for this (P, lambda); keep searching.
      }
    }
    return false;
  });
  base_enum.run();
  return found;
}

}  // namespace quadlie
