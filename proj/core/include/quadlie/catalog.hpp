#ifndef QUADLIE_CATALOG_HPP
#define QUADLIE_CATALOG_HPP

#include "quadlie/invariants.hpp"
#include "quadlie/lie_algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadlie {
namespace catalog {

using Params = std::map<std::string, Rational>;

struct ParamSpec {
  std::string key;
  Rational default_value;
  std::string constraint;  // human-readable admissibility condition
  std::function<bool(const Rational&)> admissible;
};

/// Classification data pinned for an entry; empty fields are unchecked.
/// nilpotency_class uses an outer optional for "specified at all" and an
/// inner one mirroring Fingerprint ("specified as not nilpotent").
struct PartialFingerprint {
  std::optional<std::size_t> dim_derived;
  std::optional<std::size_t> dim_dd;
  std::optional<std::size_t> dim_center;
  std::optional<bool> center_totally_isotropic;
  std::optional<std::optional<std::size_t>> nilpotency_class;
  std::optional<bool> solvable;

  bool matches(const Fingerprint& fp, std::string* why = nullptr) const;
};

struct CatalogEntry {
  std::string name;
  std::size_t dim = 0;
  std::vector<ParamSpec> params;
  std::string description;
  /// True for entries the classification lists as indecomposable.
  bool indecomposable = false;
  PartialFingerprint expected;
  std::function<QuadraticLieAlgebra(const Params&)> build;
};

const std::vector<CatalogEntry>& list_entries();
const CatalogEntry* find_entry(const std::string& name);

/// Builds a named algebra. Missing parameters take their defaults;
/// inadmissible or unknown parameters and unknown names throw
/// std::invalid_argument. Every result passes validation before returning.
QuadraticLieAlgebra make(const std::string& name, const Params& params = {});

/// Abelian quadratic space with the identity Gram matrix, basis Y (k = 1) or
/// Y1..Yk; the summand used for the orthogonal paddings.
QuadraticLieAlgebra orthonormal_space(std::size_t k);

/// Abelian quadratic space with the hyperbolic canonical form.
QuadraticLieAlgebra canonical_space(std::size_t m);

/// "name", "name(v)" or "name(k=v)": parameter values for make.
std::pair<std::string, Params> parse_reference(const std::string& text);

struct SampleInstance {
  std::string display_name;
  QuadraticLieAlgebra algebra;
};

/// The fixed instantiation list covered by the verification report and the
/// axiom suite: every catalog entry, parametrized families sampled at
/// lambda in {1, 2, 1/2} and alpha in {1, 2, 3}.
std::vector<SampleInstance> standard_samples();

}  // namespace catalog
}  // namespace quadlie

#endif
