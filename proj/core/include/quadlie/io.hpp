#ifndef QUADLIE_IO_HPP
#define QUADLIE_IO_HPP

#include "quadlie/double_extension.hpp"
#include "quadlie/invariants.hpp"
#include "quadlie/lie_algebra.hpp"
#include "quadlie/matrix.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace quadlie {

// All rationals serialize as strings "p/q" ("p" when q = 1); integers are
// also accepted on input. Omitted bracket/form entries are zero and indices
// are 0-based.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// { "name", "dim", "basis", "brackets": [{"left", "right", "out"}] with
/// left < right, "form": [{"i", "j", "value"}] with i <= j }.
nlohmann::json algebra_to_json(const QuadraticLieAlgebra& q);

/// Parses and validates; throws std::invalid_argument with the failing axiom
/// on bad data.
QuadraticLieAlgebra algebra_from_json(const nlohmann::json& j);
QuadraticLieAlgebra algebra_from_json_text(const std::string& text);

nlohmann::json fingerprint_to_json(const Fingerprint& fp);

/// { "kind": "one_dim" | "pair" | "triple", "base": name or inline algebra,
///   "D": [[...]] (one_dim), "C1"/"C2": [[...]] (pair, triple) }.
DoubleExtensionSpec dext_spec_from_json(const nlohmann::json& j);

/// Builds the extension described by a spec; named bases resolve through the
/// catalog (parameters in the name, e.g. "g6,2(1/2)"). For pair and triple
/// kinds the base must be abelian and contributes only its form.
QuadraticLieAlgebra build_extension(const DoubleExtensionSpec& spec);

}  // namespace quadlie

#endif
