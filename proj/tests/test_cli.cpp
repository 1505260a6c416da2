#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" SINGKIT_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string("'" SINGKIT_FIXTURES "/") + name + "'"; }

}  // namespace

TEST_CASE("milnor") {
  auto q = run("--json milnor --germ " + fixture("quadric_n3.json"));
  REQUIRE(q.exit_code == 0);
  CHECK(q.doc()["milnor"]["mu"] == 1);
  CHECK(q.doc()["schema"] == "singkit.report/1");

  auto c = run("--json milnor --germ " + fixture("fermat_cubic_surface.json"));
  REQUIRE(c.exit_code == 0);
  auto d = c.doc();
  CHECK(d["milnor"]["mu"] == 8);
  CHECK(d["milnor"]["method"] == "jacobian-colength");
  REQUIRE(d["cross_checks"].size() == 2);
  CHECK(d["cross_checks"][0]["mu"] == 8);
  CHECK(d["cross_checks"][1]["method"] == "weighted-homogeneous");

  auto text = run("milnor --germ " + fixture("fermat_cubic_surface.json"));
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("mu = 8") != std::string::npos);
}

TEST_CASE("non-isolated singularity exits 3") {
  auto r = run("--json milnor --germ " + fixture("nonisolated_x2y.json"));
  CHECK(r.exit_code == 3);
  CHECK(r.doc()["error"]["kind"] == "non-isolated");
  CHECK(r.doc()["exit_code"] == 3);
}

TEST_CASE("malformed germ files exit 2 with positions") {
  struct Case {
    const char* file;
    int line, column;
    const char* context;
  };
  Case cases[] = {
      {"malformed_json.json", 4, 1, ""},
      {"malformed_negative_exponent.json", 3, 20, "equations[0]"},
      {"malformed_unknown_variable.json", 3, 30, "equations[0]"},
      {"malformed_constant_term.json", 3, 17, "equations[0]"},
      {"malformed_dimension.json", 3, 3, "equations"},
      {"malformed_unknown_key.json", 4, 3, "colour"},
      {"malformed_vector_field_length.json", 4, 3, "vector_field"},
  };
  for (const auto& c : cases) {
    INFO(c.file);
    auto r = run("--json milnor --germ " + fixture(c.file));
    CHECK(r.exit_code == 2);
    auto e = r.doc()["error"];
    CHECK(e["kind"] == "parse");
    CHECK(e["line"] == c.line);
    CHECK(e["column"] == c.column);
    CHECK(e["context"] == c.context);
  }
  CHECK(run("milnor --germ /nonexistent/germ.json").exit_code == 2);
}

TEST_CASE("homotopy") {
  CHECK(run("homotopy 4 2").out == "Z/2\n");
  CHECK(run("homotopy 5 3").out == "Z\n");
  CHECK(run("homotopy 2 3").out == "0\n");
  auto j = run("--json homotopy 8 4").doc();
  CHECK(j["group"] == "Z/24");
  CHECK(j["torsion_order"] == 24);
  auto out = run("--json homotopy 9 3");
  CHECK(out.exit_code == 4);
  CHECK(out.doc()["error"]["kind"] == "out-of-range");
}

TEST_CASE("decide") {
  auto q = run("--json decide --germ " + fixture("quadric_n4.json")).doc();
  CHECK(q["contact"]["trivial"] == false);
  CHECK(q["contact"]["residue"] == 2);
  CHECK(q["contact"]["modulus"] == 6);
  CHECK(q["radial_gsv"]["value"] == 2);

  auto m = run("--json decide --germ " + fixture("declared_mu7_n4.json"));
  REQUIRE(m.exit_code == 0);
  CHECK(m.doc()["milnor"]["method"] == "declared");
  CHECK(m.doc()["contact"]["residue"] == 2);
  CHECK(m.doc()["contact"]["trivial"] == false);

  auto h = run("--json decide --germ " + fixture("hamiltonian_quadric_c4.json"));
  REQUIRE(h.exit_code == 0);
  auto fields = h.doc()["fields"];
  REQUIRE(fields.size() == 2);
  CHECK(fields[1]["source"] == "germ");
  CHECK(fields[1]["hamiltonian"] == true);
  CHECK(fields[1]["gsv"]["value"] == 0);
  CHECK(fields[1]["orthogonal"]["trivial"] == true);
  CHECK(fields[1]["foliation"]["trivial"] == true);
  CHECK(fields[1]["foliation"]["assumes_locally_free"] == true);
}

TEST_CASE("fields that are not tangent are rejected") {
  auto r = run("--json decide --germ " + fixture("not_tangent.json") + " --declared-gsv 0");
  CHECK(r.exit_code == 4);
  CHECK(r.doc()["error"]["kind"] == "not-tangent");
}

TEST_CASE("general tangent fields need a declared GSV index") {
  CHECK(run("decide --germ " + fixture("radial_field_quadric.json")).exit_code == 4);
  auto r = run("--json decide --germ " + fixture("radial_field_quadric.json") + " --declared-gsv 0");
  REQUIRE(r.exit_code == 0);
  auto f = r.doc()["fields"][1];
  CHECK(f["gsv"]["kind"] == "gsv-declared");
  CHECK(f["tangency"]["tangent"] == true);
  CHECK(f["orthogonal"]["trivial"] == true);
}

TEST_CASE("index and hamiltonian") {
  auto i = run("--json index --radial --germ " + fixture("quadric_n3.json"));
  REQUIRE(i.exit_code == 0);
  CHECK(i.doc()["fields"][0]["poincare_hopf"] == 1);
  CHECK(i.doc()["fields"][0]["gsv"]["value"] == 0);
  CHECK(run("index --germ " + fixture("quadric_n3.json")).exit_code == 4);

  auto h = run("--json hamiltonian --germ " + fixture("hamiltonian_quadric_c4.json"));
  REQUIRE(h.exit_code == 0);
  auto d = h.doc();
  CHECK(d["df_v"] == "0");
  CHECK(d["field"] == json::array({"2*z2", "-2*z1", "2*z4", "-2*z3"}));
  CHECK(d["tangent_to_all_fibers"] == true);
  CHECK(d["poincare_hopf"] == 1);
  CHECK(run("hamiltonian --germ " + fixture("quadric_n3.json")).exit_code == 0);
  CHECK(run("hamiltonian --germ " + fixture("fermat_cubic_surface.json")).exit_code == 4);
}

TEST_CASE("catalog") {
  auto list = run("--json catalog list");
  REQUIRE(list.exit_code == 0);
  bool found = false;
  auto doc = list.doc();
  for (const auto& e : doc["entries"]) found = found || e["label"].get<std::string>() == "quadric-n3";
  CHECK(found);

  auto ok = run("--json catalog run");
  CHECK(ok.exit_code == 0);
  CHECK(ok.doc()["ok"] == true);

  auto bad = run("--json catalog --catalog " + fixture("corrupted_catalog.json") + " run");
  CHECK(bad.exit_code == 1);
  auto entries = bad.doc()["entries"];
  REQUIRE(entries.size() == 2);
  CHECK(entries[0]["label"] == "fermat-cubic-surface-corrupted");
  CHECK(entries[0]["ok"] == false);
  CHECK(entries[1]["ok"] == true);
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const char* f : {"quadric_n4.json", "hamiltonian_quadric_c4.json", "t245_surface.json"}) {
    auto a = run("--json decide --germ " + fixture(f));
    auto b = run("--json decide --germ " + fixture(f));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("budgets from the environment, overridden by flags") {
  auto base = run("--json milnor --germ " + fixture("t245_surface.json"));
  REQUIRE(base.exit_code == 0);
  REQUIRE(base.doc()["engine"]["reductions_used"] >= 2);

  auto starved = run("--json milnor --germ " + fixture("t245_surface.json"), "SINGKIT_BUDGET_REDUCTIONS=1");
  CHECK(starved.exit_code == 3);
  CHECK(starved.doc()["error"]["kind"] == "budget-exceeded");

  auto flag = run("--json --budget-reductions 1000 milnor --germ " + fixture("t245_surface.json"),
                  "SINGKIT_BUDGET_REDUCTIONS=1");
  CHECK(flag.exit_code == 0);
  CHECK(flag.doc()["engine"]["budget_reductions"] == 1000);

  auto staircase = run("milnor --germ " + fixture("t245_surface.json"), "SINGKIT_BUDGET_STAIRCASE=5");
  CHECK(staircase.exit_code == 3);
}
