#include "singkit/catalog.hpp"

#include <algorithm>

#include "json.hpp"

#include "singkit/errors.hpp"
#include "singkit/report.hpp"

namespace singkit {
namespace {

using nlohmann::json;

// Expected values were fixed before release by the oracle named in each
// entry's provenance; the engine must reproduce them exactly.
constexpr const char* kShippedCatalog = R"json([
  {"label": "quadric-n2",
   "germ": {"variables": ["z0", "z1", "z2"], "equations": ["z0^2 + z1^2 + z2^2"], "weights": [1, 1, 1]},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 2},
   "provenance": "mu: Jacobian is the maximal ideal, Brieskorn (2,2,2); verdict: modulus 1! = 1"},
  {"label": "quadric-n3",
   "germ": {"variables": ["z0", "z1", "z2", "z3"], "equations": ["z0^2 + z1^2 + z2^2 + z3^2"], "weights": [1, 1, 1, 1]},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 0},
   "provenance": "mu: Brieskorn (2,2,2,2); verdict: quadric rule, odd n"},
  {"label": "quadric-n4",
   "germ": {"variables": ["z0", "z1", "z2", "z3", "z4"], "equations": ["z0^2 + z1^2 + z2^2 + z3^2 + z4^2"]},
   "expected": {"mu": 1, "contact_trivial": false, "radial_gsv": 2},
   "provenance": "mu: Brieskorn (2,2,2,2,2); verdict: quadric rule, even n > 2, residue 2 mod 6"},
  {"label": "quadric-n5",
   "germ": {"variables": ["z0", "z1", "z2", "z3", "z4", "z5"], "equations": ["z0^2 + z1^2 + z2^2 + z3^2 + z4^2 + z5^2"]},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 0},
   "provenance": "mu: Brieskorn (2,2,2,2,2,2); verdict: quadric rule, odd n"},
  {"label": "fermat-cubic-surface",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + y^3 + z^3"], "weights": [1, 1, 1]},
   "expected": {"mu": 8, "contact_trivial": true, "radial_gsv": 9},
   "provenance": "mu: Brieskorn (3,3,3) and weighted formula (1,1,1; 3); staircase of <x^2,y^2,z^2>"},
  {"label": "fermat-cubic-threefold",
   "germ": {"variables": ["x", "y", "z", "w"], "equations": ["x^3 + y^3 + z^3 + w^3"], "weights": [1, 1, 1, 1]},
   "expected": {"mu": 16, "contact_trivial": false, "radial_gsv": -15},
   "provenance": "mu: Brieskorn (3,3,3,3); verdict: 16 - 1 odd"},
  {"label": "A1",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^2 + y^2 + z^2"], "weights": [2, 2, 2]},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 2},
   "provenance": "mu: Brieskorn (2,2,2), weighted formula (2,2,2; 4)"},
  {"label": "A2",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + y^2 + z^2"], "weights": [2, 3, 3]},
   "expected": {"mu": 2, "contact_trivial": true, "radial_gsv": 3},
   "provenance": "mu: Brieskorn (3,2,2), weighted formula (2,3,3; 6)"},
  {"label": "A3",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^4 + y^2 + z^2"], "weights": [2, 4, 4]},
   "expected": {"mu": 3, "contact_trivial": true, "radial_gsv": 4},
   "provenance": "mu: Brieskorn (4,2,2), weighted formula (2,4,4; 8)"},
  {"label": "A4",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^5 + y^2 + z^2"], "weights": [2, 5, 5]},
   "expected": {"mu": 4, "contact_trivial": true, "radial_gsv": 5},
   "provenance": "mu: Brieskorn (5,2,2), weighted formula (2,5,5; 10)"},
  {"label": "A5",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^6 + y^2 + z^2"], "weights": [2, 6, 6]},
   "expected": {"mu": 5, "contact_trivial": true, "radial_gsv": 6},
   "provenance": "mu: Brieskorn (6,2,2), weighted formula (2,6,6; 12)"},
  {"label": "D4",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^2*y + y^3 + z^2"], "weights": [2, 2, 3]},
   "expected": {"mu": 4, "contact_trivial": true, "radial_gsv": 5},
   "provenance": "mu: weighted formula (2,2,3; 6)"},
  {"label": "D5",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^2*y + y^4 + z^2"], "weights": [3, 2, 4]},
   "expected": {"mu": 5, "contact_trivial": true, "radial_gsv": 6},
   "provenance": "mu: weighted formula (3,2,4; 8)"},
  {"label": "E6",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + y^4 + z^2"], "weights": [4, 3, 6]},
   "expected": {"mu": 6, "contact_trivial": true, "radial_gsv": 7},
   "provenance": "mu: Brieskorn (3,4,2), weighted formula (4,3,6; 12)"},
  {"label": "E7",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + x*y^3 + z^2"], "weights": [6, 4, 9]},
   "expected": {"mu": 7, "contact_trivial": true, "radial_gsv": 8},
   "provenance": "mu: weighted formula (6,4,9; 18)"},
  {"label": "E8",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + y^5 + z^2"], "weights": [10, 6, 15]},
   "expected": {"mu": 8, "contact_trivial": true, "radial_gsv": 9},
   "provenance": "mu: Brieskorn (3,5,2), weighted formula (10,6,15; 30)"},
  {"label": "cusp-curve",
   "germ": {"variables": ["x", "y"], "equations": ["x^2 + y^3"], "weights": [3, 2]},
   "expected": {"mu": 2},
   "provenance": "mu: weighted formula (3,2; 6), Jacobian <x, y^2>; n = 1 so no verdicts"},
  {"label": "T245-surface",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^4 + y^5 + x^2*y^2 + z^2"]},
   "expected": {"mu": 10, "contact_trivial": true, "radial_gsv": 11},
   "provenance": "mu: truncated linear-algebra colength oracle dim Q[x]/(J + m^N); Newton-polygon count 2*9 - 4 - 5 + 1"},
  {"label": "T334-surface",
   "germ": {"variables": ["x", "y", "z"], "equations": ["x^3 + y^3 + z^4 + x*y*z"]},
   "expected": {"mu": 9, "contact_trivial": true, "radial_gsv": 10},
   "provenance": "mu: truncated linear-algebra colength oracle; T(p,q,r) count p + q + r - 1"},
  {"label": "hamiltonian-quadric-c4",
   "germ": {"variables": ["z1", "z2", "z3", "z4"], "equations": ["z1^2 + z2^2 + z3^2 + z4^2"],
            "vector_field": ["2*z2", "-2*z1", "2*z4", "-2*z3"]},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 0,
                "field_gsv": 0, "field_trivial": true, "foliation_trivial": true},
   "provenance": "Hamiltonian field of the quadric: df(v) = 0, GSV index 0, normal bundle trivial"},
  {"label": "hamiltonian-fermat-quartic-c4",
   "germ": {"variables": ["x", "y", "z", "w"], "equations": ["x^4 + y^4 + z^4 + w^4"],
            "vector_field": ["4*y^3", "-4*x^3", "4*w^3", "-4*z^3"], "weights": [1, 1, 1, 1]},
   "expected": {"mu": 81, "contact_trivial": true, "radial_gsv": -80,
                "field_gsv": 0, "field_trivial": true, "foliation_trivial": true},
   "provenance": "mu: Brieskorn (4,4,4,4); field: Hamiltonian, GSV index 0"},
  {"label": "icis-hyperplane-quadric-n3",
   "germ": {"variables": ["z0", "z1", "z2", "z3", "z4"], "equations": ["z4", "z0^2 + z1^2 + z2^2 + z3^2"],
            "declared_milnor": 1},
   "expected": {"mu": 1, "contact_trivial": true, "radial_gsv": 0},
   "provenance": "declared: the hyperplane z4 = 0 reduces the germ to quadric-n3"}
])json";

std::optional<bool> opt_bool(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<bool>();
}

std::optional<std::int64_t> opt_int(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

template <class T>
void expect(EntryCheck& check, const char* what, const std::optional<T>& expected, const std::optional<T>& actual) {
  if (!expected) return;
  if (!actual) {
    check.mismatches.push_back(std::string(what) + ": expected a value, got none");
  } else if (*expected != *actual) {
    check.mismatches.push_back(std::string(what) + ": expected " + std::to_string(*expected) + ", got " +
                               std::to_string(*actual));
  }
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!doc.is_array()) throw ParseError("catalog must be a JSON array", 1, 1);
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& e = doc[i];
    std::string ctx = "catalog[" + std::to_string(i) + "]";
    try {
      CatalogEntry entry{e.at("label").get<std::string>(), parse_germ_file(e.at("germ").dump()), {},
                         e.value("provenance", std::string())};
      const json& x = e.at("expected");
      entry.expected.mu = x.at("mu").get<std::int64_t>();
      entry.expected.contact_trivial = opt_bool(x, "contact_trivial");
      entry.expected.radial_gsv = opt_int(x, "radial_gsv");
      entry.expected.field_gsv = opt_int(x, "field_gsv");
      entry.expected.field_trivial = opt_bool(x, "field_trivial");
      entry.expected.foliation_trivial = opt_bool(x, "foliation_trivial");
      if (!entry.germ.label) entry.germ.label = entry.label;
      out.push_back(std::move(entry));
    } catch (const json::exception& ex) {
      throw ParseError(ex.what(), 1, 1, ctx);
    } catch (const ParseError& ex) {
      throw ParseError(ex.message(), ex.line(), ex.column(), ctx + ".germ" + (ex.context().empty() ? "" : "." + ex.context()));
    }
  }
  return out;
}

const std::vector<CatalogEntry>& shipped_catalog() {
  static const std::vector<CatalogEntry> catalog = parse_catalog(kShippedCatalog);
  return catalog;
}

EntryCheck verify_entry(const CatalogEntry& entry, const Budget& budget) {
  EntryCheck check{entry.label, {}};
  AnalysisOptions options;
  options.budget = budget;
  try {
    bool decide = entry.germ.dimension() >= 2;
    AnalysisReport r = decide ? analyze_decide(entry.germ, options) : analyze_milnor(entry.germ, options);
    expect<std::int64_t>(check, "mu", entry.expected.mu,
                         r.milnor ? std::optional<std::int64_t>(r.milnor->mu) : std::nullopt);
    if (entry.germ.weights) {
      bool agreed = std::any_of(r.cross_checks.begin(), r.cross_checks.end(), [](const CrossCheck& c) {
        return c.method == MilnorMethod::weighted_homogeneous;
      });
      if (!agreed) check.mismatches.push_back("weighted-homogeneous oracle did not apply");
    }
    expect(check, "contact_trivial", entry.expected.contact_trivial,
           r.contact ? std::optional<bool>(r.contact->trivial) : std::nullopt);
    expect(check, "radial_gsv", entry.expected.radial_gsv,
           r.radial_gsv ? std::optional<std::int64_t>(r.radial_gsv->value) : std::nullopt);

    const FieldAnalysis* field = nullptr;
    for (const auto& f : r.fields)
      if (f.source == "germ") field = &f;
    std::optional<std::int64_t> gsv;
    std::optional<bool> field_trivial, foliation_trivial;
    if (field != nullptr) {
      if (field->gsv) gsv = field->gsv->value;
      if (field->orthogonal) field_trivial = field->orthogonal->trivial;
      if (field->foliation) foliation_trivial = field->foliation->trivial;
    }
    expect(check, "field_gsv", entry.expected.field_gsv, gsv);
    expect(check, "field_trivial", entry.expected.field_trivial, field_trivial);
    expect(check, "foliation_trivial", entry.expected.foliation_trivial, foliation_trivial);
  } catch (const std::exception& e) {
    check.mismatches.push_back(std::string("engine error: ") + e.what());
  }
  return check;
}

std::vector<EntryCheck> verify_catalog(const std::vector<CatalogEntry>& entries, const Budget& budget) {
  std::vector<EntryCheck> out;
  for (const auto& e : entries) out.push_back(verify_entry(e, budget));
  std::stable_sort(out.begin(), out.end(), [](const EntryCheck& a, const EntryCheck& b) { return a.label < b.label; });
  return out;
}

}  // namespace singkit
