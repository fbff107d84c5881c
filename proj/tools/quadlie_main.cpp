// Command-line front end: catalog inspection, axiom verification, invariant
// reports, double-extension construction from spec files, and isomorphism
// tooling.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 file or
// validation error.

#include <quadlie/catalog.hpp>
#include <quadlie/derivations.hpp>
#include <quadlie/invariants.hpp>
#include <quadlie/io.hpp>
#include <quadlie/isomorphy.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace quadlie;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return read_stream(in);
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(what + ": JSON parse error: " + e.what());
  }
}

/// Accepts a catalog reference ("g8,4(2)"), "-" for stdin, or a file path.
QuadraticLieAlgebra resolve_algebra(const std::string& ref,
                                    const std::map<std::string, Rational>& params) {
  if (ref == "-") return algebra_from_json(parse_json_text(read_stream(std::cin), "stdin"));
  const auto [name, inline_params] = catalog::parse_reference(ref);
  if (catalog::find_entry(name)) {
    auto merged = inline_params;
    merged.insert(params.begin(), params.end());
    return catalog::make(name, merged);
  }
  std::ifstream in(ref);
  if (!in) throw DataError("'" + ref + "' is neither a catalog name nor a readable file");
  return algebra_from_json(parse_json_text(read_stream(in), ref));
}

std::map<std::string, Rational> parse_param_flags(const std::vector<std::string>& flags) {
  std::map<std::string, Rational> params;
  for (const auto& flag : flags) {
    const auto eq = flag.find('=');
    if (eq == std::string::npos)
      throw DataError("--param expects key=value, got '" + flag + "'");
    params[flag.substr(0, eq)] = parse_rational(flag.substr(eq + 1));
  }
  return params;
}

void print_algebra_human(const QuadraticLieAlgebra& q) {
  const auto& names = q.algebra().basis_names();
  std::cout << q.name() << ": dim " << q.dim() << "\nbasis:";
  for (const auto& n : names) std::cout << " " << n;
  std::cout << "\nbrackets:\n";
  if (q.algebra().constants().empty()) std::cout << "  (abelian)\n";
  for (const auto& [key, c] : q.algebra().constants()) {
    std::cout << "  [" << names[key.first] << ", " << names[key.second] << "] =";
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      std::cout << (first ? " " : " + ");
      if (c[k] != 1) std::cout << to_string(c[k]) << "*";
      std::cout << names[k];
      first = false;
    }
    if (first) std::cout << " 0";
    std::cout << "\n";
  }
  std::cout << "form:\n";
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      if (q.form().gram()(i, j) != 0)
        std::cout << "  B(" << names[i] << ", " << names[j]
                  << ") = " << to_string(q.form().gram()(i, j)) << "\n";
}

std::string fingerprint_row(const Fingerprint& fp) {
  std::ostringstream os;
  os << fp.dim << "\t" << fp.dim_derived << "\t" << fp.dim_dd << "\t" << fp.dim_center
     << "\t" << (fp.center_totally_isotropic ? "yes" : "no") << "\t";
  if (fp.nilpotency_class) os << *fp.nilpotency_class;
  else os << "-";
  os << "\t";
  if (fp.derived_length) os << *fp.derived_length;
  else os << "-";
  os << "\t" << (fp.solvable ? "yes" : "no");
  return os.str();
}

int run_catalog_list(bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const auto& e : catalog::list_entries()) {
      json entry;
      entry["name"] = e.name;
      entry["dim"] = e.dim;
      entry["indecomposable"] = e.indecomposable;
      entry["description"] = e.description;
      json params = json::array();
      for (const auto& p : e.params)
        params.push_back({{"key", p.key},
                          {"default", to_string(p.default_value)},
                          {"constraint", p.constraint}});
      entry["params"] = std::move(params);
      out.push_back(std::move(entry));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : catalog::list_entries()) {
    std::cout << std::left << std::setw(12) << e.name << " dim " << e.dim;
    for (const auto& p : e.params) std::cout << "  [" << p.key << ": " << p.constraint << "]";
    std::cout << "  " << e.description << "\n";
  }
  return kExitOk;
}

int run_catalog_show(const std::string& name, bool as_json,
                     const std::vector<std::string>& param_flags) {
  const auto [base, inline_params] = catalog::parse_reference(name);
  auto params = parse_param_flags(param_flags);
  params.insert(inline_params.begin(), inline_params.end());
  const QuadraticLieAlgebra q = catalog::make(base, params);
  if (as_json) std::cout << algebra_to_json(q).dump(2) << "\n";
  else print_algebra_human(q);
  return kExitOk;
}

int run_verify(const std::string& ref, const std::vector<std::string>& param_flags) {
  // Ingestion validates eagerly; an axiom failure surfaces as a
  // ValidationError carrying the full report.
  try {
    const QuadraticLieAlgebra q = resolve_algebra(ref, parse_param_flags(param_flags));
    std::cout << q.name() << ": valid\n";
    return kExitOk;
  } catch (const ValidationError& e) {
    std::cout << "INVALID (" << e.report().issues.size() << " failures)\n"
              << e.report().to_string();
    return kExitCheckFailed;
  }
}

int run_fingerprint(const std::string& ref, bool as_json,
                    const std::vector<std::string>& param_flags) {
  const QuadraticLieAlgebra q = resolve_algebra(ref, parse_param_flags(param_flags));
  const Fingerprint fp = fingerprint(q);
  if (as_json) {
    json out = fingerprint_to_json(fp);
    out["name"] = q.name();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << q.name() << ": " << fp.to_string() << "\n";
  }
  return kExitOk;
}

int run_derivations(const std::string& ref, bool skew, bool inner, bool dim_only,
                    const std::vector<std::string>& param_flags) {
  const QuadraticLieAlgebra q = resolve_algebra(ref, parse_param_flags(param_flags));
  const DerivationSpace space = skew    ? skew_derivation_space(q)
                                : inner ? inner_derivation_space(q.algebra(), q.name())
                                        : derivation_space(q.algebra(), q.name());
  if (dim_only) {
    std::cout << space.dim() << "\n";
    return kExitOk;
  }
  std::cout << q.name() << ": " << (skew ? "skew " : inner ? "inner " : "")
            << "derivation space of dimension " << space.dim() << "\n";
  for (const auto& m : space.basis()) std::cout << m.to_string() << "\n";
  return kExitOk;
}

int run_dext(const std::string& spec_path, bool as_json) {
  const json j = parse_json_text(read_file(spec_path), spec_path);
  const DoubleExtensionSpec spec = dext_spec_from_json(j);
  const QuadraticLieAlgebra q = build_extension(spec);
  if (as_json) std::cout << algebra_to_json(q).dump(2) << "\n";
  else print_algebra_human(q);
  return kExitOk;
}

int run_iso_check(const std::string& map_path, const std::string& ref1,
                  const std::string& ref2) {
  const QuadraticLieAlgebra q1 = resolve_algebra(ref1, {});
  const QuadraticLieAlgebra q2 = resolve_algebra(ref2, {});
  const Matrix a = matrix_from_json(parse_json_text(read_file(map_path), map_path));
  const IsoCheck result = check_i_isomorphism(q1, q2, a);
  if (result.ok) {
    std::cout << "i-isomorphism verified: " << q1.name() << " -> " << q2.name() << "\n";
    return kExitOk;
  }
  std::cout << "not an i-isomorphism: " << result.report << "\n";
  return kExitCheckFailed;
}

int run_iso_search(const std::string& ref1, const std::string& ref2, std::size_t budget) {
  const QuadraticLieAlgebra q1 = resolve_algebra(ref1, {});
  const QuadraticLieAlgebra q2 = resolve_algebra(ref2, {});
  const auto witness = witness_search(q1, q2, budget);
  if (!witness) {
    std::cout << "none (budget " << budget << ")\n";
    return kExitCheckFailed;
  }
  std::cout << witness->map.to_string();
  return kExitOk;
}

int run_report(bool as_json, bool as_tsv) {
  const auto samples = catalog::standard_samples();
  if (as_json) {
    json out = json::array();
    for (const auto& s : samples) {
      json row = fingerprint_to_json(fingerprint(s.algebra));
      row["name"] = s.display_name;
      row["valid"] = validate(s.algebra).ok();
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << (as_tsv ? "name\tdim\tdim_derived\tdim_dd\tdim_center\tcenter_isotropic\t"
                         "nilpotency_class\tderived_length\tsolvable\tvalid\n"
                       : "name\tdim\td1\td2\tzdim\tziso\tclass\tdlen\tsolv\tvalid\n");
  for (const auto& s : samples) {
    const bool ok = validate(s.algebra).ok();
    std::cout << s.display_name << "\t" << fingerprint_row(fingerprint(s.algebra)) << "\t"
              << (ok ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for quadratic Lie algebras"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list entries or show one algebra");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  bool list_json = false;
  list_cmd->add_flag("--json", list_json, "machine-readable output");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "print one algebra");
  std::string show_name;
  bool show_json = false;
  std::vector<std::string> show_params;
  show_cmd->add_option("name", show_name, "catalog name, e.g. g6,2(1/2)")->required();
  show_cmd->add_flag("--json", show_json, "emit the algebra file format");
  show_cmd->add_option("--param", show_params, "parameter assignment key=value");

  auto* verify_cmd = app.add_subcommand("verify", "check the quadratic Lie algebra axioms");
  std::string verify_ref;
  std::vector<std::string> verify_params;
  verify_cmd->add_option("algebra", verify_ref, "catalog name, file path, or - for stdin")
      ->required();
  verify_cmd->add_option("--param", verify_params, "parameter assignment key=value");

  auto* fp_cmd = app.add_subcommand("fingerprint", "print the invariant record");
  std::string fp_ref;
  bool fp_json = false;
  std::vector<std::string> fp_params;
  fp_cmd->add_option("algebra", fp_ref)->required();
  fp_cmd->add_flag("--json", fp_json);
  fp_cmd->add_option("--param", fp_params, "parameter assignment key=value");

  auto* der_cmd = app.add_subcommand("derivations", "derivation space basis or dimension");
  std::string der_ref;
  bool der_skew = false, der_inner = false, der_dim_only = false;
  std::vector<std::string> der_params;
  der_cmd->add_option("algebra", der_ref)->required();
  auto* skew_flag = der_cmd->add_flag("--skew", der_skew, "skew-symmetric derivations only");
  der_cmd->add_flag("--inner", der_inner, "inner derivations only")->excludes(skew_flag);
  der_cmd->add_flag("--dim-only", der_dim_only, "print just the dimension");
  der_cmd->add_option("--param", der_params, "parameter assignment key=value");

  auto* dext_cmd = app.add_subcommand("dext", "build a double extension from a spec file");
  std::string dext_spec;
  bool dext_json = false;
  dext_cmd->add_option("--spec", dext_spec, "JSON extension spec")->required();
  dext_cmd->add_flag("--json", dext_json, "emit the algebra file format");

  auto* check_cmd = app.add_subcommand("iso-check", "verify an isomorphism witness matrix");
  std::string check_map, check_g1, check_g2;
  check_cmd->add_option("--map", check_map, "JSON matrix file")->required();
  check_cmd->add_option("g1", check_g1)->required();
  check_cmd->add_option("g2", check_g2)->required();

  auto* search_cmd = app.add_subcommand("iso-search", "bounded isomorphism witness search");
  std::string search_g1, search_g2;
  std::size_t budget = 100000;
  if (const char* env = std::getenv("QUADLIE_BUDGET")) budget = std::strtoull(env, nullptr, 10);
  search_cmd->add_option("g1", search_g1)->required();
  search_cmd->add_option("g2", search_g2)->required();
  search_cmd->add_option("--budget", budget, "candidate budget");

  auto* report_cmd = app.add_subcommand("report", "fingerprint table over all catalog samples");
  bool report_json = false, report_tsv = false;
  report_cmd->add_flag("--json", report_json);
  report_cmd->add_flag("--tsv", report_tsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list_cmd->parsed()) return run_catalog_list(list_json);
    if (show_cmd->parsed()) return run_catalog_show(show_name, show_json, show_params);
    if (verify_cmd->parsed()) return run_verify(verify_ref, verify_params);
    if (fp_cmd->parsed()) return run_fingerprint(fp_ref, fp_json, fp_params);
    if (der_cmd->parsed())
      return run_derivations(der_ref, der_skew, der_inner, der_dim_only, der_params);
    if (dext_cmd->parsed()) return run_dext(dext_spec, dext_json);
    if (check_cmd->parsed()) return run_iso_check(check_map, check_g1, check_g2);
    if (search_cmd->parsed()) return run_iso_search(search_g1, search_g2, budget);
    if (report_cmd->parsed()) return run_report(report_json, report_tsv);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
