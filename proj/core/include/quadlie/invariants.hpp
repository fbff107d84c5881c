#ifndef QUADLIE_INVARIANTS_HPP
#define QUADLIE_INVARIANTS_HPP

#include "quadlie/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

/// The structural data used to tell algebras apart. Equality of fingerprints
/// is necessary, never sufficient, for an isometric isomorphism.
///
/// Nilpotency class convention: with g^1 = g and g^{k+1} = [g, g^k], the
/// class is the largest k with g^k != 0 (abelian algebras have class 1, and
/// "class 5" means g^5 != 0 and g^6 = 0). Tests pin this convention.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_derived = 0;   // dim [g, g]
  std::size_t dim_dd = 0;        // dim [[g, g], [g, g]]
  std::size_t dim_center = 0;
  bool center_totally_isotropic = false;
  std::optional<std::size_t> nilpotency_class;  // empty when not nilpotent
  std::optional<std::size_t> derived_length;    // empty when not solvable
  bool solvable = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

/// {x : [x, g] = 0}, via the nullspace of the stacked ad-constraints.
Subspace center(const LieAlgebra& g);

enum class SeriesKind { lower_central, derived };

/// Strictly decreasing chain starting at g^1 = g and ending at the first
/// repeated (stable) term: lower central g^{k+1} = [g, g^k], derived
/// g^{(k+1)} = [g^{(k)}, g^{(k)}].
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

Fingerprint fingerprint(const QuadraticLieAlgebra& q);

/// True iff B vanishes identically on U x U.
bool is_totally_isotropic(const QuadraticLieAlgebra& q, const Subspace& u);

/// Some central x with B(x, x) != 0, if one exists: restricts B to the
/// center and inspects the (completed) diagonal.
std::optional<Vec> nonisotropic_central_element(const QuadraticLieAlgebra& q);

/// Best-effort search for a proper nondegenerate ideal. Candidates are the
/// ideal closures of spans of basis-vector subsets of size <= 3 plus a
/// non-isotropic central line when present, capped at `budget` candidates.
/// Returns the certificate (I, I-perp); a nullopt result is evidence only
/// and never proves indecomposability.
std::optional<std::pair<Subspace, Subspace>> find_nondegenerate_ideal(
    const QuadraticLieAlgebra& q, std::size_t budget = 200);

/// Nilpotency class of (z-perp restricted algebra) / span{z} for a nonzero
/// isotropic central z (z-perp is then a subalgebra). Empty when the
/// quotient is not nilpotent. Throws std::invalid_argument when z is zero,
/// not central, or not isotropic.
std::optional<std::size_t> zperp_quotient_class(const QuadraticLieAlgebra& q, const Vec& z);

}  // namespace quadlie

#endif
