// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "singkit/catalog.hpp"
#include "singkit/errors.hpp"
#include "singkit/germ.hpp"
#include "singkit/index.hpp"
#include "singkit/milnor.hpp"
#include "singkit/obstruction.hpp"
#include "singkit/parser.hpp"
#include "singkit/report.hpp"

using namespace singkit;
using nlohmann::json;

namespace {

// Collects the first few failures of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title, double limit_ms, const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0 && ms > limit_ms)
    c.failures.push_back("took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms) + " ms");
  std::ostringstream line;
  line << (c.ok() ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " (" << c.cases << " cases, "
       << static_cast<long>(ms) << " ms";
  if (limit_ms > 0) line << " of " << static_cast<long>(limit_ms) << " ms allowed";
  line << ")";
  std::cout << line.str() << "\n";
  for (const auto& f : c.failures) std::cout << "        " << f << "\n";
  if (!c.ok()) ++failed_criteria;
}

Ring ring_of(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("z" + std::to_string(i));
  return Ring(names);
}

Polynomial brieskorn(const Ring& r, const std::vector<int>& a) {
  Polynomial f(r);
  for (std::size_t i = 0; i < a.size(); ++i) f.add_term(Monomial::variable(a.size(), i, a[i]), 1);
  return f;
}

BigInt slow_factorial(std::uint64_t m) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f *= i;
  return f;
}

// Order of a finite group descriptor; 0 for infinite groups.
BigInt order(const GroupDescriptor& g) {
  if (g.rank > 0) return 0;
  return g.torsion_order == 0 ? BigInt(1) : g.torsion_order;
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = "'" SINGKIT_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

}  // namespace

int main() {
  criterion(1, "quadric law, 2 <= n <= 12", 5000, [](Check& c) {
    for (std::uint64_t n = 2; n <= 12; ++n) {
      Ring r = ring_of(n + 1);
      std::vector<int> twos(n + 1, 2);
      Polynomial f = brieskorn(r, twos);
      std::string tag = "n=" + std::to_string(n);
      std::vector<std::int64_t> exps(n + 1, 2);
      c.expect(brieskorn_milnor(exps) == 1, tag + ": Brieskorn mu != 1");
      if (n <= 4) c.expect(milnor_number_hypersurface(f).mu == 1, tag + ": Jacobian colength mu != 1");

      GermDefinition germ{r, {f}};
      auto report = analyze_decide(germ, {});
      c.expect(report.milnor && report.milnor->mu == 1, tag + ": pipeline mu != 1");
      bool expected = n == 2 || n % 2 == 1;
      c.expect(report.contact && report.contact->trivial == expected, tag + ": pipeline verdict");
      c.expect(decide_contact_triviality(n, 1).trivial == expected, tag + ": contact verdict");
    }
  });

  criterion(2, "Hamiltonian fields on C^4 (quadric + 10 random quartics)", 2000, [](Check& c) {
    Ring r({"z1", "z2", "z3", "z4"});
    std::vector<Polynomial> fs{parse_expression("z1^2 + z2^2 + z3^2 + z4^2", r)};
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-9, 9);
    while (fs.size() < 11) {
      Polynomial f(r);
      oracle::for_each_in_box({5, 5, 5, 5}, [&](const Monomial& m) {
        if (m.total_degree() == 4) f.add_term(m, coef(rng));
      });
      if (!f.is_zero()) fs.push_back(f);
    }
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& f = fs[k];
      std::string tag = "f#" + std::to_string(k) + " = " + format_polynomial(f);
      VectorField v = hamiltonian_field(f);
      c.expect(apply_differential(v, f).is_zero(), tag + ": df(v) != 0");
      GermDefinition germ{r, {f}, v.components()};
      auto gsv = gsv_index(germ);
      c.expect(gsv.value == 0 && gsv.kind == IndexKind::gsv_hamiltonian, tag + ": GSV index != 0");
      c.expect(decide_foliation_normal_triviality(gsv.value).trivial, tag + ": foliation verdict");
    }
  });

  criterion(3, "radial consistency, 2 <= n <= 9, 0 <= mu <= 2000", 1000, [](Check& c) {
    for (std::int64_t n = 2; n <= 9; ++n) {
      for (std::int64_t mu = 0; mu <= 2000; ++mu) {
        std::int64_t chi = 1 + (n % 2 == 0 ? mu : -mu);
        auto radial = radial_gsv_index(n, mu);
        auto un = static_cast<std::uint64_t>(n);
        bool agree = decide_contact_triviality(un, mu).trivial == decide_orthogonal_triviality(un, chi).trivial;
        c.expect(radial.value == chi && agree, "n=" + std::to_string(n) + " mu=" + std::to_string(mu));
      }
    }
  });

  criterion(4, "Milnor number oracle battery", 60000, [](Check& c) {
    for (std::size_t m = 1; m <= 4; ++m) {
      Ring r = ring_of(m);
      oracle::for_each_in_box(std::vector<Exponent>(m, 5), [&](const Monomial& e) {
        std::vector<int> a(m);
        std::vector<std::int64_t> a64(m);
        std::int64_t product = 1;
        for (std::size_t i = 0; i < m; ++i) {
          a[i] = e[i] + 2;
          a64[i] = a[i];
          product *= a[i] - 1;
        }
        auto mu = milnor_number_hypersurface(brieskorn(r, a)).mu;
        std::string tag = format_polynomial(brieskorn(r, a));
        c.expect(mu == product, tag + ": Jacobian mu " + std::to_string(mu) + " != " + std::to_string(product));
        c.expect(brieskorn_milnor(a64) == product, tag + ": brieskorn_milnor");
      });
    }
    std::size_t weighted = 0;
    for (const auto& entry : shipped_catalog()) {
      if (!entry.germ.weights) continue;
      ++weighted;
      const auto& f = entry.germ.equations.front();
      auto d = is_weighted_homogeneous(f, *entry.germ.weights);
      c.expect(d.has_value(), entry.label + ": not weighted homogeneous");
      if (!d) continue;
      auto formula = weighted_homogeneous_milnor(*entry.germ.weights, *d);
      auto mu = milnor_number_hypersurface(f).mu;
      c.expect(formula == mu, entry.label + ": weighted formula " + std::to_string(formula) + " != " +
                                  std::to_string(mu));
      c.expect(mu == entry.expected.mu, entry.label + ": catalog value");
    }
    c.expect(weighted >= 10, "weighted catalog has only " + std::to_string(weighted) + " entries");
  });

  criterion(5, "homotopy groups of U(n), 2 <= n <= 12", 0, [](Check& c) {
    for (std::uint64_t n = 2; n <= 12; ++n) {
      std::string tag = "n=" + std::to_string(n);
      auto odd = homotopy_group_u(2 * n - 1, n);
      c.expect(odd.rank == 1 && odd.torsion_order == 0, tag + ": pi_{2n-1}(U(n)) != Z");
      auto torsion = homotopy_group_u(2 * n - 2, n - 1);
      c.expect(torsion.rank == 0 && order(torsion) == slow_factorial(n - 1),
               tag + ": pi_{2n-2}(U(n-1)) = " + torsion.to_string());
      c.expect(factorial(n - 1) == slow_factorial(n - 1), tag + ": factorial");
      c.expect(homotopy_group_u(2 * n - 2, n).is_trivial(), tag + ": pi_{2n-2}(U(n)) != 0");
    }
  });

  criterion(6, "Poincare-Hopf index against exhaustive staircase", 0, [](Check& c) {
    for (std::size_t m = 1; m <= 6; ++m)
      c.expect(ph_index(radial_field(ring_of(m))).value == 1, "radial field, " + std::to_string(m) + " variables");

    std::mt19937 rng(66);
    std::uniform_int_distribution<std::size_t> dim(2, 4);
    std::uniform_int_distribution<int> exponent(0, 6);
    std::uniform_int_distribution<int> coef(1, 7);
    std::bernoulli_distribution pure(0.8);
    int finite = 0, isolated_checks = 0;
    while (finite < 50) {
      std::size_t m = dim(rng);
      Ring r = ring_of(m);
      std::vector<std::size_t> perm(m);
      for (std::size_t i = 0; i < m; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Monomial> mons;
      std::vector<Polynomial> comps;
      for (std::size_t i = 0; i < m; ++i) {
        Monomial mon(m);
        if (pure(rng)) {
          mon = Monomial::variable(m, perm[i], 1 + exponent(rng));
        } else {
          std::vector<Exponent> e(m);
          for (auto& x : e) x = exponent(rng) / 2;
          mon = Monomial(e);
          if (mon.is_one()) mon = Monomial::variable(m, perm[i], 1);
        }
        mons.push_back(mon);
        comps.push_back(Polynomial::term(r, mon, coef(rng)));
      }
      auto expected = oracle::monomial_ideal_colength(mons, m);
      VectorField v(r, comps);
      if (!expected) {
        bool threw = false;
        try {
          ph_index(v);
        } catch (const Error& e) {
          threw = e.kind() == ErrorKind::non_isolated;
        }
        c.expect(threw, "non-isolated field not rejected");
        ++isolated_checks;
        continue;
      }
      if (*expected > 200) continue;
      ++finite;
      auto got = ph_index(v).value;
      c.expect(static_cast<std::uint64_t>(got) == *expected,
               "field with colength " + std::to_string(*expected) + ": ph_index " + std::to_string(got));
    }
    c.expect(isolated_checks > 0, "no non-isolated fields sampled");
  });

  criterion(7, "parser round trip and malformed fixtures", 0, [](Check& c) {
    std::mt19937 rng(77);
    Ring r({"x", "y", "z1", "w_2"});
    std::uniform_int_distribution<int> den(1, 12);
    for (int trial = 0; trial < 1000; ++trial) {
      auto p = oracle::random_polynomial(rng, r, 7, 6);
      p *= Rational(den(rng), den(rng));
      auto text = format_polynomial(p);
      c.expect(parse_expression(text, r) == p, "round trip: " + text);
    }

    const std::string dir = SINGKIT_FIXTURES;
    for (const char* name : {"malformed_json.json", "malformed_negative_exponent.json",
                             "malformed_unknown_variable.json", "malformed_constant_term.json",
                             "malformed_dimension.json", "malformed_unknown_key.json",
                             "malformed_vector_field_length.json"}) {
      std::string path = dir + "/" + name;
      auto run = run_cli("--json milnor --germ '" + path + "'");
      c.expect(run.exit_code == 2, std::string(name) + ": exit code " + std::to_string(run.exit_code));
      json doc = json::parse(run.out, nullptr, false);
      bool positioned = false;
      if (!doc.is_discarded() && doc.contains("error") && doc["error"].contains("line")) {
        auto line = doc["error"]["line"].get<std::size_t>();
        auto col = doc["error"]["column"].get<std::size_t>();
        auto lines = lines_of(path);
        positioned = line >= 1 && line <= lines.size() && col >= 1 && col <= lines[line - 1].size() + 1;
      }
      c.expect(positioned, std::string(name) + ": error has no position inside the file");
    }
  });

  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << "\n";
  return failed_criteria == 0 ? 0 : 1;
}
