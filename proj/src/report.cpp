#include "singkit/report.hpp"

#include <chrono>
#include <sstream>

#include "singkit/errors.hpp"
#include "singkit/parser.hpp"

namespace singkit {
namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

AnalysisReport blank_report(const std::string& command, const GermDefinition& germ, const AnalysisOptions& options) {
  AnalysisReport r;
  r.command = command;
  r.label = germ.label.value_or("");
  r.ambient_dimension = germ.ambient_dimension();
  r.codimension = germ.codimension();
  r.n = germ.dimension();
  r.budget = options.budget;
  return r;
}

GermDefinition with_overrides(GermDefinition germ, const AnalysisOptions& options) {
  if (options.declared_mu) {
    if (*options.declared_mu < 0) throw Error(ErrorKind::invalid_argument, "declared Milnor number must be >= 0");
    germ.declared_milnor = options.declared_mu;
  }
  return germ;
}

void add_cross_checks(AnalysisReport& r, const GermDefinition& germ) {
  if (germ.codimension() != 1 || !r.milnor || r.milnor->method != MilnorMethod::jacobian_colength) return;
  const Polynomial& f = germ.equations.front();
  if (auto exps = brieskorn_exponents(f)) r.cross_checks.push_back({MilnorMethod::brieskorn, brieskorn_milnor(*exps)});
  if (germ.weights) {
    auto d = is_weighted_homogeneous(f, *germ.weights);
    bool usable = d.has_value();
    for (auto w : *germ.weights) usable = usable && *d > w;
    if (usable) {
      r.cross_checks.push_back({MilnorMethod::weighted_homogeneous, weighted_homogeneous_milnor(*germ.weights, *d)});
    } else {
      r.notices.push_back("germ is not weighted homogeneous for the supplied weights");
    }
  }
  for (const auto& c : r.cross_checks) {
    if (c.mu != r.milnor->mu)
      throw Error(ErrorKind::inconsistency, std::string(to_string(c.method)) + " formula gives " +
                                                std::to_string(c.mu) + " but the Jacobian colength is " +
                                                std::to_string(r.milnor->mu));
  }
}

void attach_verdicts(FieldAnalysis& fa, std::size_t n) {
  fa.orthogonal = decide_orthogonal_triviality(n, fa.gsv->value);
  if (n == 3) fa.foliation = decide_foliation_normal_triviality(fa.gsv->value);
}

FieldAnalysis analyze_germ_field(const GermDefinition& germ, const AnalysisOptions& options, EngineStats& stats) {
  FieldAnalysis fa;
  fa.source = "germ";
  VectorField v(germ.ring, *germ.vector_field);
  fa.tangency = tangency(v, germ.equations, options.budget, &stats);
  fa.hamiltonian = is_hamiltonian_germ(germ);
  fa.gsv = gsv_index(germ, GsvRequest{false, options.declared_gsv}, options.budget, &stats);
  return fa;
}

json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IndexValue& v) { return {{"kind", to_string(v.kind)}, {"value", v.value}}; }

template <class T, class F>
json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

std::string verdict_line(const TrivialityVerdict& v) {
  std::ostringstream out;
  out << (v.trivial ? "trivial" : "nontrivial") << " (residue " << v.residue.get_str() << " mod "
      << v.modulus.get_str() << ")";
  return out.str();
}

}  // namespace

AnalysisReport analyze_milnor(const GermDefinition& input, const AnalysisOptions& options) {
  Stopwatch clock;
  GermDefinition germ = with_overrides(input, options);
  AnalysisReport r = blank_report("milnor", germ, options);
  r.milnor = milnor_number(germ, options.budget, &r.stats);
  add_cross_checks(r, germ);
  for (const auto& note : r.milnor->notices) r.notices.push_back(note);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

AnalysisReport analyze_decide(const GermDefinition& input, const AnalysisOptions& options) {
  Stopwatch clock;
  GermDefinition germ = with_overrides(input, options);
  AnalysisReport r = blank_report("decide", germ, options);
  if (r.n < 2) throw Error(ErrorKind::unsupported, "triviality criteria need a germ of dimension n >= 2");

  try {
    r.milnor = milnor_number(germ, options.budget, &r.stats);
  } catch (const Error& e) {
    // A declared GSV index still decides the orthogonal complement.
    if (e.kind() != ErrorKind::unsupported || !options.declared_gsv) throw;
    r.notices.push_back(std::string("Milnor number unavailable: ") + e.what());
  }
  if (r.milnor) {
    add_cross_checks(r, germ);
    for (const auto& note : r.milnor->notices) r.notices.push_back(note);
    r.radial_gsv = radial_gsv_index(static_cast<std::int64_t>(r.n), r.milnor->mu);
    r.contact = decide_contact_triviality(r.n, r.milnor->mu);
    FieldAnalysis radial;
    radial.source = "radial";
    radial.gsv = r.radial_gsv;
    attach_verdicts(radial, r.n);
    r.fields.push_back(std::move(radial));
  }
  if (germ.vector_field) {
    FieldAnalysis fa = analyze_germ_field(germ, options, r.stats);
    attach_verdicts(fa, r.n);
    r.fields.push_back(std::move(fa));
  } else if (options.declared_gsv) {
    FieldAnalysis fa;
    fa.source = "declared";
    fa.gsv = IndexValue{IndexKind::gsv_declared, *options.declared_gsv};
    attach_verdicts(fa, r.n);
    r.fields.push_back(std::move(fa));
  }
  if (r.n == 3 && !r.fields.empty())
    r.notices.push_back("foliation verdicts assume the foliation is locally free (automatic when X is smooth)");
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

AnalysisReport analyze_index(const GermDefinition& input, const AnalysisOptions& options) {
  Stopwatch clock;
  GermDefinition germ = with_overrides(input, options);
  AnalysisReport r = blank_report("index", germ, options);
  if (options.radial) {
    r.milnor = milnor_number(germ, options.budget, &r.stats);
    r.radial_gsv = radial_gsv_index(static_cast<std::int64_t>(r.n), r.milnor->mu);
    FieldAnalysis radial;
    radial.source = "radial";
    radial.ph = ph_index(radial_field(germ.ring), options.budget, &r.stats);
    radial.gsv = r.radial_gsv;
    r.fields.push_back(std::move(radial));
  }
  if (germ.vector_field) {
    FieldAnalysis fa = analyze_germ_field(germ, options, r.stats);
    fa.ph = ph_index(VectorField(germ.ring, *germ.vector_field), options.budget, &r.stats);
    r.fields.push_back(std::move(fa));
  } else if (options.declared_gsv) {
    FieldAnalysis fa;
    fa.source = "declared";
    fa.gsv = IndexValue{IndexKind::gsv_declared, *options.declared_gsv};
    r.fields.push_back(std::move(fa));
  }
  if (r.fields.empty())
    throw Error(ErrorKind::unsupported, "nothing to index: the germ has no vector field (use --radial or --declared-gsv)");
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

json to_json(const TrivialityVerdict& v) {
  json j = {{"criterion", to_string(v.criterion)},
            {"trivial", v.trivial},
            {"n", v.n},
            {"modulus", to_json(v.modulus)},
            {"residue", to_json(v.residue)}};
  j[v.criterion == Criterion::contact_bundle ? "mu" : "gsv"] = v.input;
  if (v.criterion == Criterion::foliation_normal) j["assumes_locally_free"] = v.assumes_locally_free;
  return j;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = "singkit.report/1";
  j["command"] = r.command;
  j["label"] = r.label;
  j["ambient_dimension"] = r.ambient_dimension;
  j["codimension"] = r.codimension;
  j["n"] = r.n;
  j["milnor"] = optional_json(r.milnor, [](const MilnorResult& m) {
    return json{{"mu", m.mu}, {"method", to_string(m.method)}, {"isolated", m.isolated}};
  });
  json checks = json::array();
  for (const auto& c : r.cross_checks) checks.push_back({{"method", to_string(c.method)}, {"mu", c.mu}});
  j["cross_checks"] = checks;
  j["radial_gsv"] = optional_json(r.radial_gsv, [](const IndexValue& v) { return to_json(v); });
  j["contact"] = optional_json(r.contact, [](const TrivialityVerdict& v) { return to_json(v); });
  json fields = json::array();
  for (const auto& f : r.fields) {
    json fj;
    fj["source"] = f.source;
    fj["poincare_hopf"] = optional_json(f.ph, [](const IndexValue& v) { return json(v.value); });
    fj["tangency"] = optional_json(f.tangency, [](const Tangency& t) {
      return json{{"tangent", t.tangent}, {"tangent_to_all_fibers", t.tangent_to_all_fibers}};
    });
    fj["hamiltonian"] = f.hamiltonian;
    fj["gsv"] = optional_json(f.gsv, [](const IndexValue& v) { return to_json(v); });
    fj["orthogonal"] = optional_json(f.orthogonal, [](const TrivialityVerdict& v) { return to_json(v); });
    fj["foliation"] = optional_json(f.foliation, [](const TrivialityVerdict& v) { return to_json(v); });
    fields.push_back(fj);
  }
  j["fields"] = fields;
  j["notices"] = r.notices;
  j["engine"] = {{"budget_reductions", r.budget.reductions},
                 {"budget_staircase", r.budget.staircase},
                 {"reductions_used", r.stats.reductions},
                 {"staircase_visited", r.stats.staircase}};
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "germ: " << (r.label.empty() ? "(unlabelled)" : r.label) << "\n";
  out << "ambient dimension " << r.ambient_dimension << ", equations " << r.codimension << ", n = " << r.n << "\n";
  if (r.milnor) {
    out << "mu = " << r.milnor->mu << " [" << to_string(r.milnor->method) << "]"
        << (r.milnor->isolated ? "" : " (not isolated)") << "\n";
  }
  for (const auto& c : r.cross_checks) out << "  cross-check " << to_string(c.method) << ": " << c.mu << "\n";
  if (r.contact) out << "contact bundle: " << verdict_line(*r.contact) << "\n";
  for (const auto& f : r.fields) {
    out << "field [" << f.source << "]";
    if (f.hamiltonian) out << " hamiltonian";
    out << "\n";
    if (f.tangency)
      out << "  tangent: " << (f.tangency->tangent ? "yes" : "no")
          << (f.tangency->tangent_to_all_fibers ? " (to all fibres)" : "") << "\n";
    if (f.ph) out << "  Poincare-Hopf index: " << f.ph->value << "\n";
    if (f.gsv) out << "  GSV index: " << f.gsv->value << " [" << to_string(f.gsv->kind) << "]\n";
    if (f.orthogonal) out << "  orthogonal complement: " << verdict_line(*f.orthogonal) << "\n";
    if (f.foliation) out << "  foliation normal bundle: " << verdict_line(*f.foliation) << "\n";
  }
  for (const auto& n : r.notices) out << "note: " << n << "\n";
  out << "engine: " << r.stats.reductions << " reductions, " << r.stats.staircase << " staircase monomials, "
      << r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace singkit
