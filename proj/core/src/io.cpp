#include "quadlie/io.hpp"

#include "quadlie/catalog.hpp"

#include <stdexcept>

namespace quadlie {

using nlohmann::json;

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " +
                              j.dump());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j.at(r).at(c));
  }
  return m;
}

json algebra_to_json(const QuadraticLieAlgebra& q) {
  json out;
  out["name"] = q.name();
  out["dim"] = q.dim();
  out["basis"] = q.algebra().basis_names();
  json brackets = json::array();
  for (const auto& [key, c] : q.algebra().constants()) {
    json entry;
    entry["left"] = key.first;
    entry["right"] = key.second;
    json image = json::object();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) image[std::to_string(k)] = rational_to_json(c[k]);
    entry["out"] = std::move(image);
    brackets.push_back(std::move(entry));
  }
  out["brackets"] = std::move(brackets);
  json form = json::array();
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      if (q.form().gram()(i, j) != 0) {
        json entry;
        entry["i"] = i;
        entry["j"] = j;
        entry["value"] = rational_to_json(q.form().gram()(i, j));
        form.push_back(std::move(entry));
      }
  out["form"] = std::move(form);
  return out;
}

QuadraticLieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra file must be a JSON object");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  LieAlgebra g(dim, std::move(names));
  for (const auto& entry : j.value("brackets", json::array())) {
    const std::size_t left = entry.at("left").get<std::size_t>();
    const std::size_t right = entry.at("right").get<std::size_t>();
    if (left >= right)
      throw std::invalid_argument("bracket entries must have left < right");
    Vec out = zero_vec(dim);
    for (const auto& [key, value] : entry.at("out").items()) {
      const std::size_t k = std::stoul(key);
      if (k >= dim) throw std::invalid_argument("bracket output index out of range");
      out[k] = rational_from_json(value);
    }
    g.set_bracket(left, right, std::move(out));
  }
  Matrix gram(dim, dim);
  for (const auto& entry : j.value("form", json::array())) {
    const std::size_t i = entry.at("i").get<std::size_t>();
    const std::size_t jj = entry.at("j").get<std::size_t>();
    if (i > jj) throw std::invalid_argument("form entries must have i <= j");
    if (i >= dim || jj >= dim) throw std::invalid_argument("form index out of range");
    gram(i, jj) = gram(jj, i) = rational_from_json(entry.at("value"));
  }
  QuadraticLieAlgebra q(std::move(g), BilinearForm(std::move(gram)),
                        j.value("name", std::string("unnamed")));
  validate_or_throw(q);
  return q;
}

QuadraticLieAlgebra algebra_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  return algebra_from_json(j);
}

json fingerprint_to_json(const Fingerprint& fp) {
  json out;
  out["dim"] = fp.dim;
  out["dim_derived"] = fp.dim_derived;
  out["dim_dd"] = fp.dim_dd;
  out["dim_center"] = fp.dim_center;
  out["center_totally_isotropic"] = fp.center_totally_isotropic;
  if (fp.nilpotency_class) out["nilpotency_class"] = *fp.nilpotency_class;
  else out["nilpotency_class"] = nullptr;
  if (fp.derived_length) out["derived_length"] = *fp.derived_length;
  else out["derived_length"] = nullptr;
  out["solvable"] = fp.solvable;
  return out;
}

DoubleExtensionSpec dext_spec_from_json(const json& j) {
  DoubleExtensionSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "one_dim") spec.kind = DextKind::one_dim;
  else if (kind == "pair") spec.kind = DextKind::pair;
  else if (kind == "triple") spec.kind = DextKind::triple;
  else
    throw std::invalid_argument("unknown extension kind '" + kind +
                                "' (expected one_dim, pair or triple)");
  const json& base = j.at("base");
  if (base.is_string()) spec.base = base.get<std::string>();
  else spec.base = algebra_from_json(base);
  if (j.contains("D")) spec.d = matrix_from_json(j.at("D"));
  if (j.contains("C1")) spec.c1 = matrix_from_json(j.at("C1"));
  if (j.contains("C2")) spec.c2 = matrix_from_json(j.at("C2"));
  return spec;
}

QuadraticLieAlgebra build_extension(const DoubleExtensionSpec& spec) {
  QuadraticLieAlgebra base;
  if (std::holds_alternative<std::string>(spec.base)) {
    const auto [name, params] = catalog::parse_reference(std::get<std::string>(spec.base));
    base = catalog::make(name, params);
  } else {
    base = std::get<QuadraticLieAlgebra>(spec.base);
  }
  switch (spec.kind) {
    case DextKind::one_dim:
      if (!spec.d)
        throw std::invalid_argument("one_dim extension spec requires the matrix D");
      return dext1(base, *spec.d);
    case DextKind::pair:
    case DextKind::triple: {
      if (!spec.c1 || !spec.c2)
        throw std::invalid_argument("pair/triple extension spec requires C1 and C2");
      if (!base.algebra().is_abelian())
        throw std::invalid_argument(
            "pair/triple extensions take a quadratic vector space: base must be abelian");
      return spec.kind == DextKind::pair ? dext_pair(base.form(), *spec.c1, *spec.c2)
                                         : dext_triple(base.form(), *spec.c1, *spec.c2);
    }
  }
  throw std::logic_error("unreachable extension kind");
}

}  // namespace quadlie
