#include "quadlie/catalog.hpp"

#include "quadlie/double_extension.hpp"

#include <sstream>
#include <stdexcept>

namespace quadlie {
namespace catalog {

namespace {

std::vector<std::string> canonical_names(std::size_t m) {
  const std::size_t n = m / 2;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  if (m % 2 == 1) names.push_back("T");
  for (std::size_t i = 1; i <= n; ++i) names.push_back("Z" + std::to_string(i));
  return names;
}

QuadraticLieAlgebra renamed(const QuadraticLieAlgebra& q,
                            std::vector<std::string> basis_names, std::string name) {
  LieAlgebra g(q.dim(), std::move(basis_names));
  for (const auto& [key, c] : q.algebra().constants()) g.set_bracket(key.first, key.second, c);
  QuadraticLieAlgebra out(std::move(g), q.form(), std::move(name));
  out.set_origin(q.origin());
  return out;
}

QuadraticLieAlgebra make_g4() {
  const QuadraticLieAlgebra plane = canonical_space(2);
  const Matrix d = Matrix::diagonal({1, -1});
  return renamed(dext1(plane, d), {"X", "P", "Q", "Z"}, "g4");
}

QuadraticLieAlgebra make_g5() {
  LieAlgebra g(5, canonical_names(5));  // (X1, X2, T, Z1, Z2)
  Vec t = zero_vec(5), z1 = zero_vec(5), mz2 = zero_vec(5);
  t[2] = 1;
  z1[3] = 1;
  mz2[4] = -1;
  g.set_bracket(0, 1, t);    // [X1, X2] = T
  g.set_bracket(0, 2, mz2);  // [X1, T] = -Z2
  g.set_bracket(1, 2, z1);   // [X2, T] = Z1
  return QuadraticLieAlgebra(std::move(g), canonical_form(5), "g5");
}

QuadraticLieAlgebra make_g61() {
  LieAlgebra g(6, {"X1", "X2", "X3", "Z1", "Z2", "Z3"});
  Vec z3 = zero_vec(6), z1 = zero_vec(6), mz2 = zero_vec(6);
  z3[5] = 1;
  z1[3] = 1;
  mz2[4] = -1;
  g.set_bracket(0, 1, z3);   // [X1, X2] = Z3
  g.set_bracket(1, 2, z1);   // [X2, X3] = Z1
  g.set_bracket(0, 2, mz2);  // [X1, X3] = -Z2, i.e. [X3, X1] = Z2
  return QuadraticLieAlgebra(std::move(g), canonical_form(6), "g6,1");
}

// Gram for the basis order (X, X1, X2, Z1, Z2, Z): B(X,Z) = B(Xi,Zi) = 1.
BilinearForm g62_form() {
  Matrix gram(6, 6);
  gram(0, 5) = gram(5, 0) = 1;
  gram(1, 3) = gram(3, 1) = 1;
  gram(2, 4) = gram(4, 2) = 1;
  return BilinearForm(std::move(gram));
}

QuadraticLieAlgebra make_g62(const Rational& lambda) {
  LieAlgebra g(6, {"X", "X1", "X2", "Z1", "Z2", "Z"});
  auto axis = [](std::size_t i, const Rational& c) {
    Vec v = zero_vec(6);
    v[i] = c;
    return v;
  };
  g.set_bracket(0, 1, axis(1, 1));        // [X, X1] = X1
  g.set_bracket(0, 2, axis(2, lambda));   // [X, X2] = lambda X2
  g.set_bracket(0, 3, axis(3, -1));       // [X, Z1] = -Z1
  g.set_bracket(0, 4, axis(4, -lambda));  // [X, Z2] = -lambda Z2
  g.set_bracket(1, 3, axis(5, 1));        // [X1, Z1] = Z
  g.set_bracket(2, 4, axis(5, lambda));   // [X2, Z2] = lambda Z
  return QuadraticLieAlgebra(std::move(g), g62_form(),
                             "g6,2(" + to_string(lambda) + ")");
}

QuadraticLieAlgebra make_g63() {
  LieAlgebra g(6, {"X", "X1", "X2", "Z1", "Z2", "Z"});
  Vec x1 = zero_vec(6), x12 = zero_vec(6), z12 = zero_vec(6), z2 = zero_vec(6),
      z = zero_vec(6);
  x1[1] = 1;
  x12[1] = 1;
  x12[2] = 1;
  z12[3] = -1;
  z12[4] = -1;
  z2[4] = -1;
  z[5] = 1;
  g.set_bracket(0, 1, x1);   // [X, X1] = X1
  g.set_bracket(0, 2, x12);  // [X, X2] = X1 + X2
  g.set_bracket(0, 3, z12);  // [X, Z1] = -Z1 - Z2
  g.set_bracket(0, 4, z2);   // [X, Z2] = -Z2
  g.set_bracket(1, 3, z);    // [X1, Z1] = Z
  g.set_bracket(2, 3, z);    // [X2, Z1] = Z
  g.set_bracket(2, 4, z);    // [X2, Z2] = Z
  return QuadraticLieAlgebra(std::move(g), g62_form(), "g6,3");
}

QuadraticLieAlgebra make_g71() {
  const Matrix d = {{0, 1, 0, 0, 0},
                    {0, 0, 1, 0, 0},
                    {0, 0, 0, 0, -1},
                    {0, 0, 0, 0, 0},
                    {0, 0, 0, -1, 0}};
  return dext1(canonical_space(5), d, "g7,1");
}

QuadraticLieAlgebra make_g72() {
  const Matrix d = {{1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0},
                    {0, 0, 0, 0, -1},
                    {0, 0, 0, -1, 0},
                    {0, 0, 0, 0, 0}};
  return dext1(canonical_space(5), d, "g7,2");
}

QuadraticLieAlgebra make_g73() {
  return dext1(make_g5(), Matrix::diagonal({1, -1, 0, -1, 1}), "g7,3");
}

QuadraticLieAlgebra make_g5_plus_line() { return direct_sum(make_g5(), orthonormal_space(1)); }

QuadraticLieAlgebra make_g81(const Rational& alpha) {
  // Base (X1, X2, T, Z1, Z2, Y): g5 with an orthonormal line attached.
  Matrix d(6, 6);
  d(0, 1) = 1;       // X2 -> X1
  d(3, 5) = -alpha;  // Y  -> -alpha Z1
  d(4, 3) = -1;      // Z1 -> -Z2
  d(5, 0) = alpha;   // X1 -> alpha Y
  return dext1(make_g5_plus_line(), d, "g8,1(" + to_string(alpha) + ")");
}

QuadraticLieAlgebra make_g6x_extension(const Matrix& a, const std::string& name) {
  const Matrix d = Matrix::block_diagonal({a, -(a.transposed())});
  return dext1(make_g61(), d, name);
}

QuadraticLieAlgebra make_g82() {
  return make_g6x_extension({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, "g8,2");
}

QuadraticLieAlgebra make_g83() {
  return make_g6x_extension({{1, 1, 0}, {0, 1, 0}, {0, 0, -2}}, "g8,3");
}

QuadraticLieAlgebra make_g84(const Rational& alpha) {
  return make_g6x_extension(Matrix::diagonal({1, alpha, -1 - alpha}),
                            "g8,4(" + to_string(alpha) + ")");
}

QuadraticLieAlgebra make_g62_extension(const Matrix& a, const std::string& name) {
  const Matrix d =
      Matrix::block_diagonal({Matrix(1, 1), a, -(a.transposed()), Matrix(1, 1)});
  return dext1(make_g62(1), d, name);
}

QuadraticLieAlgebra make_g85() { return make_g62_extension({{0, 1}, {0, 0}}, "g8,5"); }
QuadraticLieAlgebra make_g86() { return make_g62_extension({{1, 1}, {0, 1}}, "g8,6"); }

Rational param_or_default(const Params& params, const ParamSpec& spec) {
  auto it = params.find(spec.key);
  return it == params.end() ? spec.default_value : it->second;
}

ParamSpec lambda_spec() {
  return {"lambda", Rational(1), "lambda != 0",
          [](const Rational& v) { return v != 0; }};
}

ParamSpec alpha_nonzero_spec() {
  return {"alpha", Rational(1), "alpha != 0", [](const Rational& v) { return v != 0; }};
}

ParamSpec alpha_g84_spec() {
  return {"alpha", Rational(1), "alpha != 0 and alpha != -1",
          [](const Rational& v) { return v != 0 && v != -1; }};
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> entries;

  for (std::size_t n = 0; n <= 8; ++n) {
    CatalogEntry e;
    e.name = "F" + std::to_string(n);
    e.dim = n;
    e.description = "abelian quadratic space with the canonical form";
    e.expected.dim_derived = 0;
    e.expected.dim_dd = 0;
    e.expected.dim_center = n;
    e.expected.nilpotency_class = std::optional<std::size_t>(n == 0 ? 0 : 1);
    e.expected.solvable = true;
    e.build = [n](const Params&) { return canonical_space(n); };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "g4";
    e.dim = 4;
    e.description = "diamond algebra: double extension of the hyperbolic plane by diag(1,-1)";
    e.indecomposable = true;
    e.expected.dim_derived = 3;
    e.expected.dim_center = 1;
    e.expected.center_totally_isotropic = true;
    e.expected.nilpotency_class = std::optional<std::size_t>();  // not nilpotent
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g4(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g5";
    e.dim = 5;
    e.description = "nilpotent: [X1,X2]=T, [X1,T]=-Z2, [X2,T]=Z1, canonical form";
    e.indecomposable = true;
    e.expected.dim_derived = 3;
    e.expected.dim_center = 2;
    e.expected.nilpotency_class = std::optional<std::size_t>(3);
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g5(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g6,1";
    e.dim = 6;
    e.description = "free 2-step nilpotent algebra on three generators with invariant pairing";
    e.indecomposable = true;
    e.expected.dim_derived = 3;
    e.expected.dim_center = 3;
    e.expected.nilpotency_class = std::optional<std::size_t>(2);
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g61(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g6,2";
    e.dim = 6;
    e.params = {lambda_spec()};
    e.description = "solvable, diagonal action [X,X1]=X1, [X,X2]=lambda X2; lambda and "
                    "1/lambda give isomorphic algebras";
    e.indecomposable = true;
    e.expected.dim_center = 1;
    e.expected.center_totally_isotropic = true;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params& p) {
      return make_g62(param_or_default(p, lambda_spec()));
    };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g6,3";
    e.dim = 6;
    e.description = "solvable, non-semisimple action [X,X2]=X1+X2";
    e.indecomposable = true;
    e.expected.dim_center = 1;
    e.expected.center_totally_isotropic = true;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g63(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g7,1";
    e.dim = 7;
    e.description = "double extension of F^5 by a nilpotent skew map";
    e.indecomposable = true;
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g71(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g7,2";
    e.dim = 7;
    e.description = "double extension of F^5 by a skew map with one semisimple eigenvalue pair";
    e.indecomposable = true;
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g72(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g7,3";
    e.dim = 7;
    e.description = "double extension of g5 by the skew derivation diag(1,-1,0,-1,1)";
    e.indecomposable = true;
    e.expected.dim_dd = 4;
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g73(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,1";
    e.dim = 8;
    e.params = {alpha_nonzero_spec()};
    e.description = "double extension of g5 (+) F by a nilpotent skew derivation";
    e.indecomposable = true;
    e.expected.dim_derived = 6;
    e.expected.dim_dd = 2;
    e.expected.nilpotency_class = std::optional<std::size_t>(5);
    e.expected.solvable = true;
    e.build = [](const Params& p) {
      return make_g81(param_or_default(p, alpha_nonzero_spec()));
    };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,2";
    e.dim = 8;
    e.description = "double extension of g6,1 by the nilpotent 3x3 Jordan block";
    e.indecomposable = true;
    e.expected.dim_dd = 2;
    e.expected.nilpotency_class = std::optional<std::size_t>(5);
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g82(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,3";
    e.dim = 8;
    e.description = "double extension of g6,1 by an invertible non-diagonalizable derivation";
    e.indecomposable = true;
    e.expected.dim_derived = 7;
    e.expected.dim_dd = 4;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g83(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,4";
    e.dim = 8;
    e.params = {alpha_g84_spec()};
    e.description = "double extension of g6,1 by diag(1,alpha,-1-alpha) and its negative "
                    "transpose";
    e.indecomposable = true;
    e.expected.dim_derived = 7;
    e.expected.dim_dd = 4;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params& p) {
      return make_g84(param_or_default(p, alpha_g84_spec()));
    };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,5";
    e.dim = 8;
    e.description = "double extension of g6,2(1) by the nilpotent 2x2 Jordan block pair";
    e.indecomposable = true;
    e.expected.dim_center = 2;
    e.expected.center_totally_isotropic = true;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g85(); };
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g8,6";
    e.dim = 8;
    e.description = "double extension of g6,2(1) by an invertible non-diagonalizable pair";
    e.indecomposable = true;
    e.expected.dim_center = 2;
    e.expected.center_totally_isotropic = true;
    e.expected.nilpotency_class = std::optional<std::size_t>();
    e.expected.solvable = true;
    e.build = [](const Params&) { return make_g86(); };
    entries.push_back(std::move(e));
  }

  // Orthogonal paddings named by the dimension tables.
  struct Padding {
    const char* base;
    std::size_t k;
  };
  const Padding paddings[] = {{"g4", 1},   {"g4", 2},   {"g4", 3},   {"g4", 4},
                              {"g5", 1},   {"g5", 2},   {"g5", 3},   {"g6,1", 1},
                              {"g6,1", 2}, {"g6,2", 1}, {"g6,2", 2}, {"g6,3", 1},
                              {"g6,3", 2}, {"g7,1", 1}, {"g7,2", 1}, {"g7,3", 1}};
  for (const auto& padding : paddings) {
    CatalogEntry e;
    const std::string base = padding.base;
    const std::size_t k = padding.k;
    e.name = base + "+F" + std::to_string(k);
    const CatalogEntry* base_entry = nullptr;
    for (const auto& other : entries)
      if (other.name == base) base_entry = &other;
    e.dim = base_entry->dim + k;
    e.params = base_entry->params;
    e.description = "orthogonal direct sum with an orthonormal abelian summand";
    e.expected.solvable = true;
    auto base_build = base_entry->build;
    e.build = [base_build, k](const Params& p) {
      return direct_sum(base_build(p), orthonormal_space(k));
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "g4+g4";
    e.dim = 8;
    e.description = "orthogonal direct sum of two diamond algebras";
    e.expected.dim_derived = 6;
    e.expected.solvable = true;
    e.build = [](const Params&) { return direct_sum(make_g4(), make_g4()); };
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

bool PartialFingerprint::matches(const Fingerprint& fp, std::string* why) const {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (dim_derived && *dim_derived != fp.dim_derived) return fail("dim [g,g] differs");
  if (dim_dd && *dim_dd != fp.dim_dd) return fail("dim [[g,g],[g,g]] differs");
  if (dim_center && *dim_center != fp.dim_center) return fail("center dimension differs");
  if (center_totally_isotropic &&
      *center_totally_isotropic != fp.center_totally_isotropic)
    return fail("center isotropy differs");
  if (nilpotency_class && *nilpotency_class != fp.nilpotency_class)
    return fail("nilpotency class differs");
  if (solvable && *solvable != fp.solvable) return fail("solvability differs");
  return true;
}

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : list_entries())
    if (e.name == name) return &e;
  return nullptr;
}

QuadraticLieAlgebra make(const std::string& name, const Params& params) {
  const CatalogEntry* entry = find_entry(name);
  if (!entry) throw std::invalid_argument("unknown catalog algebra '" + name + "'");
  for (const auto& [key, value] : params) {
    const ParamSpec* spec = nullptr;
    for (const auto& s : entry->params)
      if (s.key == key) spec = &s;
    if (!spec)
      throw std::invalid_argument("algebra '" + name + "' has no parameter '" + key + "'");
    if (!spec->admissible(value))
      throw std::invalid_argument("parameter " + key + "=" + to_string(value) +
                                  " violates " + spec->constraint);
  }
  QuadraticLieAlgebra q = entry->build(params);
  validate_or_throw(q);
  return q;
}

QuadraticLieAlgebra orthonormal_space(std::size_t k) {
  std::vector<std::string> names;
  if (k == 1) names.push_back("Y");
  else
    for (std::size_t i = 1; i <= k; ++i) names.push_back("Y" + std::to_string(i));
  LieAlgebra g(k, std::move(names));
  return QuadraticLieAlgebra(std::move(g), orthonormal_form(k), "F" + std::to_string(k));
}

QuadraticLieAlgebra canonical_space(std::size_t m) {
  LieAlgebra g(m, canonical_names(m));
  return QuadraticLieAlgebra(std::move(g), canonical_form(m), "F" + std::to_string(m));
}

std::pair<std::string, Params> parse_reference(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {text, {}};
  if (text.back() != ')')
    throw std::invalid_argument("malformed algebra reference '" + text + "'");
  const std::string name = text.substr(0, open);
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  const CatalogEntry* entry = find_entry(name);
  if (!entry) throw std::invalid_argument("unknown catalog algebra '" + name + "'");
  Params params;
  std::size_t start = 0;
  std::size_t position = 0;
  while (start < inner.size()) {
    std::size_t comma = inner.find(',', start);
    if (comma == std::string::npos) comma = inner.size();
    const std::string piece = inner.substr(start, comma - start);
    const auto eq = piece.find('=');
    if (eq == std::string::npos) {
      if (position >= entry->params.size())
        throw std::invalid_argument("too many parameters in '" + text + "'");
      params[entry->params[position].key] = parse_rational(piece);
      ++position;
    } else {
      params[piece.substr(0, eq)] = parse_rational(piece.substr(eq + 1));
    }
    start = comma + 1;
  }
  return {name, params};
}

std::vector<SampleInstance> standard_samples() {
  const std::vector<Rational> lambdas = {Rational(1), Rational(2), Rational(1, 2)};
  const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(3)};
  std::vector<SampleInstance> out;
  for (const auto& entry : list_entries()) {
    if (entry.params.empty()) {
      QuadraticLieAlgebra q = make(entry.name);
      out.push_back({q.name(), std::move(q)});
      continue;
    }
    const std::string& key = entry.params.front().key;
    const auto& values = key == "lambda" ? lambdas : alphas;
    for (const auto& v : values) {
      if (!entry.params.front().admissible(v)) continue;
      QuadraticLieAlgebra q = make(entry.name, {{key, v}});
      std::string display = q.name();
      if (display.find('(') == std::string::npos)
        display += "(" + to_string(v) + ")";
      out.push_back({std::move(display), std::move(q)});
    }
  }
  return out;
}

}  // namespace catalog
}  // namespace quadlie
