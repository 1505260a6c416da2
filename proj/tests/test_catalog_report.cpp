#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "singkit/catalog.hpp"
#include "singkit/errors.hpp"
#include "singkit/germ.hpp"
#include "singkit/parser.hpp"
#include "singkit/report.hpp"

using namespace singkit;

namespace {

const CatalogEntry* find(const std::vector<CatalogEntry>& entries, const std::string& label) {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("shipped catalog verifies") {
  const auto& entries = shipped_catalog();
  CHECK(entries.size() >= 20);
  for (const char* label : {"quadric-n3", "fermat-cubic-surface", "A1", "A2", "A3", "A4", "A5", "E8"})
    CHECK_MESSAGE(find(entries, label) != nullptr, label);
  for (const auto& check : verify_catalog(entries)) {
    INFO(check.label);
    for (const auto& m : check.mismatches) INFO(m);
    CHECK(check.ok());
  }
}

TEST_CASE("catalog run is sorted by label") {
  auto checks = verify_catalog(shipped_catalog());
  CHECK(std::is_sorted(checks.begin(), checks.end(),
                       [](const EntryCheck& a, const EntryCheck& b) { return a.label < b.label; }));
}

TEST_CASE("corrupted expectations are reported as mismatches") {
  auto entries = shipped_catalog();
  auto* e = &entries.front();
  e->expected.mu += 1;
  CHECK_FALSE(verify_entry(*e).ok());

  auto text = R"([{"label":"bad","germ":{"variables":["x","y","z"],"equations":["x^2+y^2+z^2"]},
                   "expected":{"mu":1,"contact_trivial":false},"provenance":"test"}])";
  auto parsed = parse_catalog(text);
  REQUIRE(parsed.size() == 1);
  CHECK_FALSE(verify_entry(parsed[0]).ok());
  CHECK_THROWS_AS(parse_catalog("{}"), Error);
}

TEST_CASE("decide report") {
  auto germ = parse_germ_file(R"({"variables":["x","y","z"],"equations":["x^3+y^3+z^3"],"label":"cubic"})");
  auto r = analyze_decide(germ, {});
  REQUIRE(r.milnor);
  CHECK(r.milnor->mu == 8);
  REQUIRE(r.contact);
  CHECK(r.contact->trivial);  // n = 2
  REQUIRE(r.radial_gsv);
  CHECK(r.radial_gsv->value == 9);
  auto j = to_json(r);
  CHECK(j["schema"] == "singkit.report/1");
  CHECK(j["milnor"]["mu"] == 8);
  CHECK(j["cross_checks"][0]["method"] == "brieskorn");
  // deterministic: no timings in the machine output
  CHECK(to_json(analyze_decide(germ, {})).dump() == j.dump());
}

TEST_CASE("declared Milnor number on a complete intersection") {
  auto germ = parse_germ_file(R"({"variables":["a","b","c","d","e","f"],
    "equations":["a","b^2+c^2+d^2+e^2+f^2"],"declared_milnor":7})");
  CHECK(germ.dimension() == 4);
  auto r = analyze_decide(germ, {});
  REQUIRE(r.contact);
  CHECK_FALSE(r.contact->trivial);
  CHECK(r.contact->residue == 2);
  CHECK(r.contact->modulus == 6);
}

TEST_CASE("decide without mu still uses a declared GSV index") {
  auto germ = parse_germ_file(R"({"variables":["a","b","c","d","e"],"equations":["a","b^2+c^2+d^2+e^2"]})");
  try {
    analyze_decide(germ, {});
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
  AnalysisOptions o;
  o.declared_gsv = 4;
  auto r = analyze_decide(germ, o);
  CHECK_FALSE(r.milnor);
  REQUIRE(r.fields.size() == 1);
  CHECK(r.fields[0].source == "declared");
  CHECK(r.fields[0].orthogonal->trivial);
  CHECK(r.fields[0].foliation->trivial);
}

TEST_CASE("inconsistent weights are caught by the cross-check") {
  auto germ = parse_germ_file(R"({"variables":["x","y"],"equations":["x^2+y^3"],"weights":[3,2]})");
  auto r = analyze_milnor(germ, {});
  CHECK(r.milnor->mu == 2);
  CHECK(r.cross_checks.size() == 2);
  auto other = parse_germ_file(R"({"variables":["x","y"],"equations":["x^2+y^3"],"weights":[1,1]})");
  auto r2 = analyze_milnor(other, {});
  CHECK_FALSE(r2.notices.empty());
}

TEST_CASE("index report") {
  auto germ = parse_germ_file(R"({"variables":["z1","z2","z3","z4"],"equations":["z1^2+z2^2+z3^2+z4^2"],
    "vector_field":["2*z2","-2*z1","2*z4","-2*z3"]})");
  AnalysisOptions o;
  o.radial = true;
  auto r = analyze_index(germ, o);
  REQUIRE(r.fields.size() == 2);
  CHECK(r.fields[0].ph->value == 1);
  CHECK(r.fields[0].gsv->value == 0);
  CHECK(r.fields[1].hamiltonian);
  CHECK(r.fields[1].ph->value == 1);
  CHECK(r.fields[1].gsv->value == 0);
  CHECK(to_text(r).find("GSV index: 0") != std::string::npos);
}
