#include "singkit/milnor.hpp"

#include "singkit/errors.hpp"

namespace singkit {

const char* to_string(MilnorMethod method) {
  switch (method) {
    case MilnorMethod::jacobian_colength: return "jacobian-colength";
    case MilnorMethod::brieskorn: return "brieskorn";
    case MilnorMethod::weighted_homogeneous: return "weighted-homogeneous";
    case MilnorMethod::declared: return "declared";
  }
  return "unknown";
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  if (sgn(f.constant_term()) != 0) throw Error(ErrorKind::invalid_argument, "germ does not vanish at the origin");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.ring().dimension(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

MilnorResult milnor_number_hypersurface(const Polynomial& f, const Budget& budget, EngineStats* stats) {
  auto jac = jacobian_ideal(f);
  MilnorResult r;
  bool all_zero = true;
  for (const auto& g : jac) all_zero = all_zero && g.is_zero();
  if (all_zero) {
    // f is identically zero: every point is critical.
    r.isolated = false;
    return r;
  }
  for (const auto& g : jac) {
    if (sgn(g.constant_term()) != 0) {
      r.mu = 0;
      r.notices.push_back("smooth point: the germ has a nonzero linear part, mu = 0");
      return r;
    }
  }
  Colength c = colength(jac, budget, stats);
  switch (c.status) {
    case Colength::Status::finite:
      r.mu = static_cast<std::int64_t>(c.value);
      break;
    case Colength::Status::infinite:
      r.isolated = false;
      break;
    case Colength::Status::exceeded_budget:
      throw BudgetExceeded(c.exhausted + " budget exceeded while computing the Jacobian colength "
                               "(possibly non-isolated)",
                           c.budget_used);
  }
  return r;
}

std::optional<std::vector<std::int64_t>> brieskorn_exponents(const Polynomial& f) {
  const std::size_t dim = f.ring().dimension();
  if (f.size() != dim) return std::nullopt;
  std::vector<std::int64_t> exps(dim, 0);
  for (const auto& [m, c] : f.terms()) {
    std::size_t var = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      if (m[i] == 0) continue;
      if (var != dim) return std::nullopt;
      var = i;
    }
    if (var == dim || m[var] < 2 || exps[var] != 0) return std::nullopt;
    exps[var] = m[var];
  }
  return exps;
}

std::int64_t brieskorn_milnor(std::span<const std::int64_t> exponents) {
  if (exponents.empty()) throw Error(ErrorKind::invalid_argument, "no exponents");
  std::int64_t mu = 1;
  for (auto a : exponents) {
    if (a < 2) throw Error(ErrorKind::invalid_argument, "Brieskorn exponents must be at least 2");
    if (__builtin_mul_overflow(mu, a - 1, &mu)) throw Error(ErrorKind::overflow, "Milnor number overflow");
  }
  return mu;
}

std::optional<std::int64_t> is_weighted_homogeneous(const Polynomial& f, std::span<const std::int64_t> weights) {
  if (weights.size() != f.ring().dimension())
    throw Error(ErrorKind::invalid_argument, "weight vector length does not match ring dimension");
  if (f.is_zero()) throw Error(ErrorKind::invalid_argument, "zero polynomial has no weighted degree");
  std::optional<std::int64_t> degree;
  for (const auto& [m, c] : f.terms()) {
    auto d = weighted_degree(m, weights);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::int64_t weighted_homogeneous_milnor(std::span<const std::int64_t> weights, std::int64_t degree) {
  if (weights.empty()) throw Error(ErrorKind::invalid_argument, "no weights");
  Rational product = 1;
  for (auto w : weights) {
    if (w <= 0) throw Error(ErrorKind::invalid_argument, "weights must be positive");
    if (degree <= w) throw Error(ErrorKind::invalid_argument, "degree must exceed every weight");
    product *= Rational(BigInt(degree - w), BigInt(w));
  }
  product.canonicalize();
  if (product.get_den() != 1 || sgn(product) < 0)
    throw Error(ErrorKind::inconsistency,
                "weighted-homogeneous formula gives non-integer " + product.get_str() + " (invalid weight data)");
  if (!product.get_num().fits_slong_p()) throw Error(ErrorKind::overflow, "Milnor number overflow");
  return product.get_num().get_si();
}

MilnorResult milnor_number(const GermDefinition& germ, const Budget& budget, EngineStats* stats) {
  if (germ.codimension() == 1) {
    auto r = milnor_number_hypersurface(germ.equations.front(), budget, stats);
    if (!r.isolated) throw Error(ErrorKind::non_isolated, "singularity at the origin is not isolated");
    if (germ.declared_milnor && *germ.declared_milnor != r.mu)
      r.notices.push_back("declared_milnor " + std::to_string(*germ.declared_milnor) +
                          " ignored: computed value differs");
    return r;
  }
  if (germ.declared_milnor) {
    MilnorResult r;
    r.mu = *germ.declared_milnor;
    r.method = MilnorMethod::declared;
    return r;
  }
  throw Error(ErrorKind::unsupported,
              "Milnor numbers of complete intersections with more than one equation must be declared "
              "(declared_milnor)");
}

}  // namespace singkit
