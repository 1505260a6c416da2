// singkit: Milnor numbers, vector-field indices and bundle-triviality
// verdicts for isolated singularity germs.
//
// Exit codes: 0 computed (whatever the verdict), 1 catalog mismatch or
// internal inconsistency, 2 germ file / parse error, 3 non-isolated or
// budget exhausted, 4 unsupported or out of range.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "singkit/catalog.hpp"
#include "singkit/errors.hpp"
#include "singkit/germ.hpp"
#include "singkit/index.hpp"
#include "singkit/obstruction.hpp"
#include "singkit/parser.hpp"
#include "singkit/report.hpp"

namespace {

using nlohmann::json;
using namespace singkit;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonIsolated = 3;
constexpr int kExitUnsupported = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::ring_mismatch:
      return kExitParse;
    case ErrorKind::non_isolated:
    case ErrorKind::budget_exceeded:
    case ErrorKind::overflow:
      return kExitNonIsolated;
    case ErrorKind::unsupported:
    case ErrorKind::out_of_range:
    case ErrorKind::tangency:
    case ErrorKind::invalid_argument:
      return kExitUnsupported;
    case ErrorKind::inconsistency:
      return kExitMismatch;
  }
  return kExitMismatch;
}

struct Settings {
  bool json_output = false;
  Budget budget;
  std::string germ_path;
  std::optional<std::int64_t> declared_mu;
  std::optional<std::int64_t> declared_gsv;
  bool radial = false;
};

void emit(const Settings& s, const json& payload, const std::string& text) {
  if (s.json_output)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

int report_error(const Settings& s, ErrorKind kind, const std::string& message, int code,
                 const ParseError* position = nullptr) {
  std::cerr << "singkit: " << to_string(kind) << ": " << message << "\n";
  if (s.json_output) {
    json err = {{"kind", to_string(kind)}, {"message", message}};
    if (position != nullptr) {
      err["line"] = position->line();
      err["column"] = position->column();
      err["context"] = position->context();
    }
    std::cout << json{{"schema", "singkit.error/1"}, {"error", err}, {"exit_code", code}}.dump(2) << "\n";
  }
  return code;
}

GermDefinition load_germ(const Settings& s) {
  if (s.germ_path.empty()) throw ParseError("no germ file given (--germ <path>)", 1, 1);
  return load_germ_file(s.germ_path);
}

AnalysisOptions options_from(const Settings& s) {
  AnalysisOptions o;
  o.budget = s.budget;
  o.declared_mu = s.declared_mu;
  o.declared_gsv = s.declared_gsv;
  o.radial = s.radial;
  return o;
}

int run_report(const Settings& s, AnalysisReport (*analyze)(const GermDefinition&, const AnalysisOptions&)) {
  GermDefinition germ = load_germ(s);
  AnalysisReport r = analyze(germ, options_from(s));
  emit(s, to_json(r), to_text(r));
  return kExitOk;
}

int run_hamiltonian(const Settings& s) {
  GermDefinition germ = load_germ(s);
  if (germ.codimension() != 1)
    throw Error(ErrorKind::unsupported, "Hamiltonian fields are defined for hypersurface germs");
  const Polynomial& f = germ.equations.front();
  VectorField v = hamiltonian_field(f);
  Polynomial df = apply_differential(v, f);
  Tangency t = tangency(v, f, s.budget);

  json comps = json::array();
  std::ostringstream text;
  text << "v = (";
  for (std::size_t i = 0; i < v.components().size(); ++i) {
    auto c = format_polynomial(v.components()[i]);
    comps.push_back(c);
    text << (i ? ", " : "") << c;
  }
  text << ")\n";
  text << "df(v) = " << format_polynomial(df) << "\n";
  text << "tangent: " << (t.tangent ? "yes" : "no") << (t.tangent_to_all_fibers ? " (to all fibres)" : "") << "\n";

  json ph = nullptr;
  try {
    ph = ph_index(v, s.budget).value;
    text << "Poincare-Hopf index: " << ph.get<std::int64_t>() << "\n";
  } catch (const Error& e) {
    text << "Poincare-Hopf index: unavailable (" << e.what() << ")\n";
  }
  text << "GSV index: 0 [gsv-hamiltonian]\n";

  json payload = {{"schema", "singkit.hamiltonian/1"},
                  {"command", "hamiltonian"},
                  {"label", germ.label.value_or("")},
                  {"variables", germ.ring.variables()},
                  {"field", comps},
                  {"df_v", format_polynomial(df)},
                  {"tangent", t.tangent},
                  {"tangent_to_all_fibers", t.tangent_to_all_fibers},
                  {"poincare_hopf", ph},
                  {"gsv", {{"kind", "gsv-hamiltonian"}, {"value", 0}}}};
  emit(s, payload, text.str());
  return kExitOk;
}

int run_homotopy(const Settings& s, std::uint64_t k, std::uint64_t n) {
  GroupDescriptor g = homotopy_group_u(k, n);
  json torsion = g.torsion_order.fits_slong_p() ? json(g.torsion_order.get_si()) : json(g.torsion_order.get_str());
  json payload = {{"schema", "singkit.homotopy/1"},
                  {"command", "homotopy"},
                  {"k", k},
                  {"n", n},
                  {"group", g.to_string()},
                  {"rank", g.rank},
                  {"torsion_order", torsion}};
  emit(s, payload, g.to_string() + "\n");
  return kExitOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 1, 1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_catalog_list(const Settings& s, const std::string& catalog_path) {
  auto entries = catalog_path.empty() ? shipped_catalog() : parse_catalog(read_file(catalog_path));
  json arr = json::array();
  std::ostringstream text;
  for (const auto& e : entries) {
    arr.push_back({{"label", e.label}, {"n", e.germ.dimension()}, {"mu", e.expected.mu}, {"provenance", e.provenance}});
    text << e.label << "\tn=" << e.germ.dimension() << "\tmu=" << e.expected.mu << "\t" << e.provenance << "\n";
  }
  emit(s, json{{"schema", "singkit.catalog/1"}, {"entries", arr}}, text.str());
  return kExitOk;
}

int run_catalog_verify(const Settings& s, const std::string& catalog_path) {
  auto entries = catalog_path.empty() ? shipped_catalog() : parse_catalog(read_file(catalog_path));
  auto checks = verify_catalog(entries, s.budget);
  bool all_ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok();
    arr.push_back({{"label", c.label}, {"ok", c.ok()}, {"mismatches", c.mismatches}});
    text << (c.ok() ? "ok   " : "FAIL ") << c.label;
    for (const auto& m : c.mismatches) text << "\n       " << m;
    text << "\n";
  }
  emit(s, json{{"schema", "singkit.catalog-run/1"}, {"ok", all_ok}, {"entries", arr}}, text.str());
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singkit: Milnor numbers, GSV indices and contact-bundle triviality for isolated singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json_output, "Emit one machine-readable JSON document");
  app.add_option("--budget-reductions", s.budget.reductions, "Maximum reduction steps per standard basis")
      ->envname("SINGKIT_BUDGET_REDUCTIONS");
  app.add_option("--budget-staircase", s.budget.staircase, "Maximum staircase monomials enumerated")
      ->envname("SINGKIT_BUDGET_STAIRCASE");

  auto add_germ = [&](CLI::App* cmd) { cmd->add_option("--germ", s.germ_path, "Germ file (JSON)")->required(); };

  auto* milnor = app.add_subcommand("milnor", "Milnor number of the germ");
  add_germ(milnor);
  milnor->add_option("--declared-mu", s.declared_mu, "Milnor number for germs with several equations");

  auto* decide = app.add_subcommand("decide", "Milnor number, indices and triviality verdicts");
  add_germ(decide);
  decide->add_option("--declared-mu", s.declared_mu, "Milnor number for germs with several equations");
  decide->add_option("--declared-gsv", s.declared_gsv, "GSV index of the germ's vector field");
  decide->add_flag("--radial", s.radial, "Accepted for symmetry with 'index'; the radial field is always reported");

  auto* index = app.add_subcommand("index", "Poincare-Hopf and GSV indices");
  add_germ(index);
  index->add_option("--declared-mu", s.declared_mu, "Milnor number for germs with several equations");
  index->add_option("--declared-gsv", s.declared_gsv, "GSV index of the germ's vector field");
  index->add_flag("--radial", s.radial, "Index the radial field");

  auto* hamiltonian = app.add_subcommand("hamiltonian", "Hamiltonian field of a hypersurface in even dimension");
  add_germ(hamiltonian);

  std::uint64_t hk = 0, hn = 0;
  auto* homotopy = app.add_subcommand("homotopy", "pi_k(U(n)) for k <= 2n");
  homotopy->add_option("k", hk, "Degree k")->required();
  homotopy->add_option("n", hn, "Rank n of U(n)")->required();

  std::string catalog_path;
  auto* catalog = app.add_subcommand("catalog", "Shipped germ catalog");
  catalog->require_subcommand(1);
  catalog->add_option("--catalog", catalog_path, "Use this catalog file instead of the shipped one");
  auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");
  auto* catalog_run = catalog->add_subcommand("run", "Re-verify every catalog entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*milnor) return run_report(s, analyze_milnor);
    if (*decide) return run_report(s, analyze_decide);
    if (*index) return run_report(s, analyze_index);
    if (*hamiltonian) return run_hamiltonian(s);
    if (*homotopy) return run_homotopy(s, hk, hn);
    if (*catalog_list) return run_catalog_list(s, catalog_path);
    if (*catalog_run) return run_catalog_verify(s, catalog_path);
  } catch (const ParseError& e) {
    return report_error(s, e.kind(), e.what(), kExitParse, &e);
  } catch (const Error& e) {
    return report_error(s, e.kind(), e.what(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return report_error(s, ErrorKind::inconsistency, e.what(), kExitMismatch);
  }
  return kExitMismatch;
}
