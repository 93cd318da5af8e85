#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "convcode/budget.hpp"
#include "convcode/code.hpp"
#include "convcode/distances.hpp"
#include "convcode/equivalence.hpp"
#include "convcode/errors.hpp"
#include "convcode/examples.hpp"
#include "convcode/io.hpp"
#include "convcode/realization.hpp"
#include "convcode/reference_suite.hpp"
#include "convcode/wam.hpp"

namespace {

using namespace convcode;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitSuite = 5;

struct Input {
  std::string path;
  std::string sha256;
  PolyMatrix matrix;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return {path, sha256_hex(text), matrix_from_json(j)};
}

json provenance(const Input& in) { return {{"path", in.path}, {"sha256", in.sha256}}; }

json budgets_json(const Budgets& b) {
  return {{"states", b.states},
          {"enumeration", b.enumeration},
          {"linear_group", b.linear_group},
          {"orbit", b.orbit},
          {"path_length", b.path_length}};
}

std::string field_name(const Field& f) { return "GF(" + std::to_string(f.order()) + ")"; }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

void print_matrix(std::ostream& os, const std::string& label, const PolyMatrix& m) {
  os << label << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) os << "  " << to_string(m.row(i)) << "\n";
}

void print_matrix(std::ostream& os, const std::string& label, const FMatrix& m) {
  os << label << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.field().format(m(i, j));
    os << "\n";
  }
}

json fmatrix_json(const FMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

json profile_json(const DistanceProfile& p) {
  json values = json::array();
  for (std::size_t j = p.jmin; j <= p.jmax(); ++j) values.push_back({{"j", j}, {"value", p.at(j).to_string()}});
  return {{"family", to_string(p.family)}, {"jmin", p.jmin}, {"values", values}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& path, bool as_json, const Budgets& budgets) {
  const Input in = read_input(path);
  const PolyMatrix& g = in.matrix;
  if (!is_basic(g)) throw PreconditionError(path + ": encoder is not basic");
  const bool reduced = is_reduced(g);
  const ConvCode c = ConvCode::from_encoder(g);
  const auto dist = free_distance(c, budgets);
  if (as_json) {
    json j = {{"input", provenance(in)},
              {"budgets", budgets_json(budgets)},
              {"field", field_to_json(c.field())},
              {"n", c.length()},
              {"k", c.dimension()},
              {"basic", true},
              {"reduced", reduced},
              {"degree", c.degree()},
              {"forney_indices", c.forney_indices()},
              {"memory", c.memory()},
              {"free_distance", dist}};
    if (!reduced) j["reduced_encoder"] = matrix_to_json(c.encoder());
    emit(j);
    return 0;
  }
  std::cout << "file: " << in.path << "\nsha256: " << in.sha256 << "\nfield: " << field_name(c.field())
            << "\nn: " << c.length() << "\nk: " << c.dimension() << "\nbasic: yes\nreduced: "
            << (reduced ? "yes" : "not reduced") << "\ndegree: " << c.degree()
            << "\nforney indices: " << join(c.forney_indices()) << "\nmemory: " << c.memory()
            << "\nfree distance: " << dist << "\n";
  if (!reduced) print_matrix(std::cout, "reduced encoder", c.encoder());
  return 0;
}

int cmd_ccf(const std::string& path, bool as_json) {
  const Input in = read_input(path);
  const Realization r = ccf(ConvCode::from_encoder(in.matrix).encoder());
  if (as_json) {
    emit({{"input", provenance(in)},
          {"field", field_to_json(r.field())},
          {"row_degrees", r.row_degrees},
          {"A", fmatrix_json(r.A)},
          {"B", fmatrix_json(r.B)},
          {"C", fmatrix_json(r.C)},
          {"D", fmatrix_json(r.D)}});
    return 0;
  }
  std::cout << "row degrees: " << join(r.row_degrees) << "\n";
  print_matrix(std::cout, "A", r.A);
  print_matrix(std::cout, "B", r.B);
  print_matrix(std::cout, "C", r.C);
  print_matrix(std::cout, "D", r.D);
  return 0;
}

int cmd_wam(const std::string& path, const std::string& variant, bool as_json, const Budgets& budgets) {
  const Input in = read_input(path);
  WAM w = wam(ConvCode::from_encoder(in.matrix).encoder(), budgets);
  if (variant == "tilde") w = tilde(w);
  else if (variant == "hat") w = hat(w);
  if (as_json) {
    json j = wam_to_json(w);
    j["input"] = provenance(in);
    j["variant"] = variant;
    emit(j);
    return 0;
  }
  std::cout << w.to_string();
  return 0;
}

int cmd_distances(const std::string& path, const std::string& family_name, std::size_t jmax, bool as_json,
                  const Budgets& budgets) {
  const auto family = parse_family(family_name);
  if (!family) throw ParseError("unknown distance family: " + family_name);
  const Input in = read_input(path);
  const ConvCode c = ConvCode::from_encoder(in.matrix);
  const DistanceProfile p = distance_profile(c, *family, jmax, budgets);
  if (as_json) {
    json j = profile_json(p);
    j["input"] = provenance(in);
    j["jmax"] = jmax;
    emit(j);
    return 0;
  }
  std::cout << "family: " << to_string(p.family) << "\n";
  for (std::size_t j = p.jmin; j <= p.jmax(); ++j) std::cout << "j=" << j << "\t" << p.at(j) << "\n";
  return 0;
}

int cmd_wenum(const std::string& path, std::size_t lmax, bool as_json, const Budgets& budgets) {
  const Input in = read_input(path);
  const ConvCode c = ConvCode::from_encoder(in.matrix);
  const OmegaSeries om = omega_series(c, lmax, budgets);
  const WSeries we = weight_enumerator(om);
  if (as_json) {
    json terms = json::array();
    for (std::size_t l = 0; l <= we.order(); ++l) terms.push_back({{"l", l}, {"coefficient", we[l].to_string()}});
    emit({{"input", provenance(in)}, {"lmax", lmax}, {"weight_enumerator", terms}});
    return 0;
  }
  for (std::size_t l = 0; l <= we.order(); ++l) std::cout << "(" << l << ", " << we[l].to_string() << ")\n";
  return 0;
}

int cmd_dual(const std::string& path, bool as_json) {
  const Input in = read_input(path);
  const ConvCode d = ConvCode::from_encoder(in.matrix).dual();
  if (as_json) {
    emit({{"input", provenance(in)},
          {"dual_encoder", matrix_to_json(d.encoder())},
          {"canonical", matrix_to_json(d.canonical())}});
    return 0;
  }
  print_matrix(std::cout, "dual encoder (reduced)", d.encoder());
  print_matrix(std::cout, "canonical form", d.canonical());
  return 0;
}

/// First invariant that already separates the two codes, if any.
std::string failing_invariant(const ConvCode& a, const ConvCode& b, const std::string& mode) {
  if (&a.field() != &b.field()) return "fields differ";
  if (a.length() != b.length()) return "lengths differ";
  if (a.dimension() != b.dimension()) return "dimensions differ";
  if ((mode == "me" || mode == "strong") && a.forney_indices() != b.forney_indices()) return "Forney indices differ";
  if (mode == "me") return "no reduced encoder of the first code is monomially equivalent to the second";
  if (mode == "iso") return "column-delay normalized codes are not monomially equivalent";
  return "no pair of reduced encoders with equal row degrees is z-monomially equivalent";
}

json witness_json(const std::vector<std::size_t>& perm, const std::vector<Elem>& scalars, const std::vector<int>& exps) {
  return {{"perm", perm}, {"scalars", scalars}, {"exponents", exps}};
}

int cmd_equiv(const std::string& mode, const std::string& path_a, const std::string& path_b, bool as_json,
              const Budgets& budgets) {
  const Input a = read_input(path_a);
  const Input b = read_input(path_b);
  json j = {{"mode", mode}, {"inputs", {provenance(a), provenance(b)}}};
  std::string reason;
  std::ostringstream text;

  if (mode == "zme") {
    if (const auto m = matrix_zme(a.matrix, b.matrix)) {
      j.update(witness_json(m->perm, m->scalars, m->exponents));
      text << "perm: " << json(m->perm).dump() << "\nscalars: " << json(m->scalars).dump()
           << "\nexponents: " << json(m->exponents).dump() << "\n";
    } else {
      reason = "columns do not match up to a*z^mu";
    }
  } else {
    const ConvCode c = ConvCode::from_encoder(a.matrix);
    const ConvCode cbar = ConvCode::from_encoder(b.matrix);
    if (mode == "me") {
      if (const auto w = code_me(c, cbar, budgets)) {
        j.update(witness_json(w->m.perm, w->m.scalars, std::vector<int>(w->m.size(), 0)));
        j["U"] = matrix_to_json(w->u);
        text << "perm: " << json(w->m.perm).dump() << "\nscalars: " << json(w->m.scalars).dump() << "\n";
        print_matrix(text, "U", w->u);
      }
    } else if (mode == "iso") {
      if (const auto w = code_isometric(c, cbar, budgets)) {
        j.update(witness_json(w->m.perm, w->m.scalars, w->m.exponents));
        j["U"] = matrix_to_json(w->u);
        text << "perm: " << json(w->m.perm).dump() << "\nscalars: " << json(w->m.scalars).dump()
             << "\nexponents: " << json(w->m.exponents).dump() << "\n";
        print_matrix(text, "U", w->u);
      }
    } else {
      if (const auto w = code_strongly_isometric(c, cbar, budgets)) {
        j.update(witness_json(w->m.perm, w->m.scalars, w->m.exponents));
        j["G"] = matrix_to_json(w->g);
        j["Gbar"] = matrix_to_json(w->gbar);
        print_matrix(text, "G", w->g);
        print_matrix(text, "Gbar", w->gbar);
        text << "perm: " << json(w->m.perm).dump() << "\nscalars: " << json(w->m.scalars).dump()
             << "\nexponents: " << json(w->m.exponents).dump() << "\n";
      }
    }
    if (!j.contains("perm")) reason = failing_invariant(c, cbar, mode);
  }

  j["equivalent"] = reason.empty();
  if (!reason.empty()) j["reason"] = reason;
  if (as_json) {
    emit(j);
  } else if (reason.empty()) {
    std::cout << "equivalent (" << mode << ")\n" << text.str();
  } else {
    std::cout << "not equivalent (" << mode << "): " << reason << "\n";
  }
  return 0;
}

int cmd_examples(bool list, const std::optional<std::string>& filter, const std::filesystem::path& data_dir,
                 const Budgets& budgets) {
  if (list) {
    for (const auto& name : reference_example_names()) std::cout << name << "\n";
    return 0;
  }
  std::vector<SuiteCheck> checks;
  try {
    checks = run_reference_suite(filter, data_dir, budgets);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitParse;
  }
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.example << "  " << c.description;
    if (!c.passed) std::cout << "  [got " << c.detail << "]";
    std::cout << "\n";
    failed += c.passed ? 0 : 1;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed ? kExitSuite : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of convolutional codes over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> budget;
  std::string data_dir;
  bool as_json = false;
  app.add_option("--budget", budget, "Cap for exhaustive searches (enumeration, linear group, orbit)");
  app.add_option("--data-dir", data_dir, "Directory containing examples/<name>.json");

  std::string path, path_b, reduced = "none", family = "column", mode = "me";
  std::size_t jmax = 10, lmax = 8;
  bool list = false;
  std::optional<std::string> filter;

  auto* analyze = app.add_subcommand("analyze", "Code parameters and free distance");
  analyze->add_option("file", path, "Encoder JSON file")->required();
  analyze->add_flag("--json", as_json, "JSON output");

  auto* ccf_cmd = app.add_subcommand("ccf", "Controller canonical form (A, B, C, D)");
  ccf_cmd->add_option("file", path, "Encoder JSON file")->required();
  ccf_cmd->add_flag("--json", as_json, "JSON output");

  auto* wam_cmd = app.add_subcommand("wam", "Weight adjacency matrix");
  wam_cmd->add_option("file", path, "Encoder JSON file")->required();
  wam_cmd->add_option("--reduced", reduced, "Variant: none, tilde or hat")
      ->check(CLI::IsMember({"none", "tilde", "hat"}));
  wam_cmd->add_flag("--json", as_json, "JSON output");

  auto* dist_cmd = app.add_subcommand("distances", "Distance profile");
  dist_cmd->add_option("file", path, "Encoder JSON file")->required();
  dist_cmd->add_option("--family", family, "column, extended_row, active_column, active_row, active_segment, active_burst");
  dist_cmd->add_option("--jmax", jmax, "Largest j");
  dist_cmd->add_flag("--json", as_json, "JSON output");

  auto* wenum_cmd = app.add_subcommand("wenum", "Weight enumerator coefficients up to L^lmax");
  wenum_cmd->add_option("file", path, "Encoder JSON file")->required();
  wenum_cmd->add_option("--lmax", lmax, "Truncation order");
  wenum_cmd->add_flag("--json", as_json, "JSON output");

  auto* dual_cmd = app.add_subcommand("dual", "Dual code");
  dual_cmd->add_option("file", path, "Encoder JSON file")->required();
  dual_cmd->add_flag("--json", as_json, "JSON output");

  auto* equiv_cmd = app.add_subcommand("equiv", "Equivalence test between two encoders");
  equiv_cmd->add_option("--mode", mode, "me (codes), zme (matrices), iso (codes), strong (codes)")
      ->check(CLI::IsMember({"me", "zme", "iso", "strong"}));
  equiv_cmd->add_option("a", path, "First encoder JSON file")->required();
  equiv_cmd->add_option("b", path_b, "Second encoder JSON file")->required();
  equiv_cmd->add_flag("--json", as_json, "JSON output");

  auto* examples_cmd = app.add_subcommand("examples", "Run the built-in worked-example suite");
  examples_cmd->add_flag("--list", list, "List example names");
  examples_cmd->add_option("--filter", filter, "Run one example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  Budgets budgets = Budgets::from_environment();
  if (budget) budgets = budgets.with_search_cap(*budget);
  const std::filesystem::path data = data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir);

  try {
    if (*analyze) return cmd_analyze(path, as_json, budgets);
    if (*ccf_cmd) return cmd_ccf(path, as_json);
    if (*wam_cmd) return cmd_wam(path, reduced, as_json, budgets);
    if (*dist_cmd) return cmd_distances(path, family, jmax, as_json, budgets);
    if (*wenum_cmd) return cmd_wenum(path, lmax, as_json, budgets);
    if (*dual_cmd) return cmd_dual(path, as_json);
    if (*equiv_cmd) return cmd_equiv(mode, path, path_b, as_json, budgets);
    if (*examples_cmd) return cmd_examples(list, filter, data, budgets);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
