#include "singkit/index.hpp"

#include "singkit/errors.hpp"
#include "singkit/milnor.hpp"

namespace singkit {

VectorField::VectorField(Ring ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_.dimension())
    throw Error(ErrorKind::invalid_argument, "vector field needs one component per variable");
  bool all_zero = true;
  for (const auto& c : components_) {
    if (!(c.ring() == ring_)) throw Error(ErrorKind::ring_mismatch, "vector field component from another ring");
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) throw Error(ErrorKind::invalid_argument, "vector field is identically zero");
}

VectorField radial_field(const Ring& ring) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < ring.dimension(); ++i) comps.push_back(Polynomial::variable(ring, i));
  return VectorField(ring, std::move(comps));
}

const char* to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::poincare_hopf: return "poincare-hopf";
    case IndexKind::gsv_radial: return "gsv-radial";
    case IndexKind::gsv_hamiltonian: return "gsv-hamiltonian";
    case IndexKind::gsv_declared: return "gsv-declared";
  }
  return "unknown";
}

IndexValue ph_index(const VectorField& v, const Budget& budget, EngineStats* stats) {
  Colength c = colength(v.components(), budget, stats);
  switch (c.status) {
    case Colength::Status::finite:
      return {IndexKind::poincare_hopf, static_cast<std::int64_t>(c.value)};
    case Colength::Status::infinite:
      throw Error(ErrorKind::non_isolated, "vector field zero at the origin is not isolated");
    case Colength::Status::exceeded_budget:
      break;
  }
  throw BudgetExceeded(c.exhausted + " budget exceeded while computing the Poincare-Hopf index", c.budget_used);
}

VectorField hamiltonian_field(const Polynomial& f) {
  const std::size_t dim = f.ring().dimension();
  if (dim % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "Hamiltonian field needs an even number of variables");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < dim; i += 2) {
    comps.push_back(partial_derivative(f, i + 1));
    comps.push_back(-partial_derivative(f, i));
  }
  return VectorField(f.ring(), std::move(comps));
}

Polynomial apply_differential(const VectorField& v, const Polynomial& f) {
  if (!(v.ring() == f.ring())) throw Error(ErrorKind::ring_mismatch, "field and function live in different rings");
  Polynomial sum(f.ring());
  for (std::size_t i = 0; i < f.ring().dimension(); ++i) sum += v.components()[i] * partial_derivative(f, i);
  return sum;
}

Tangency tangency(const VectorField& v, const std::vector<Polynomial>& equations, const Budget& budget,
                  EngineStats* stats) {
  Tangency t{true, true};
  for (const auto& f : equations) {
    Polynomial df = apply_differential(v, f);
    if (df.is_zero()) continue;
    t.tangent_to_all_fibers = false;
    if (!ideal_membership(df, equations, budget, stats)) t.tangent = false;
  }
  return t;
}

Tangency tangency(const VectorField& v, const Polynomial& f, const Budget& budget, EngineStats* stats) {
  return tangency(v, std::vector<Polynomial>{f}, budget, stats);
}

bool check_tangency(const VectorField& v, const Polynomial& f, const Budget& budget, EngineStats* stats) {
  return tangency(v, f, budget, stats).tangent;
}

IndexValue radial_gsv_index(std::int64_t n, std::int64_t mu) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "radial GSV index needs n >= 2");
  if (mu < 0) throw Error(ErrorKind::invalid_argument, "Milnor number must be nonnegative");
  return {IndexKind::gsv_radial, n % 2 == 0 ? 1 + mu : 1 - mu};
}

bool is_hamiltonian_germ(const GermDefinition& germ) {
  if (!germ.vector_field || germ.codimension() != 1 || germ.ambient_dimension() % 2 != 0) return false;
  return hamiltonian_field(germ.equations.front()).components() == *germ.vector_field;
}

IndexValue gsv_index(const GermDefinition& germ, const GsvRequest& request, const Budget& budget,
                     EngineStats* stats) {
  if (request.radial) {
    auto mu = milnor_number(germ, budget, stats).mu;
    return radial_gsv_index(static_cast<std::int64_t>(germ.dimension()), mu);
  }
  if (germ.vector_field) {
    VectorField v(germ.ring, *germ.vector_field);
    if (!tangency(v, germ.equations, budget, stats).tangent)
      throw Error(ErrorKind::tangency, "vector field is not tangent to the germ");
    if (is_hamiltonian_germ(germ)) return {IndexKind::gsv_hamiltonian, 0};
    if (request.declared) return {IndexKind::gsv_declared, *request.declared};
    throw Error(ErrorKind::unsupported,
                "GSV index of a general tangent field is not computed; supply a declared value");
  }
  if (request.declared) return {IndexKind::gsv_declared, *request.declared};
  throw Error(ErrorKind::unsupported, "no vector field: request the radial field or supply a declared GSV index");
}

}  // namespace singkit
