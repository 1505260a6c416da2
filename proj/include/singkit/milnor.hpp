#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singkit/germ.hpp"
#include "singkit/local_algebra.hpp"
#include "singkit/poly.hpp"

namespace singkit {

enum class MilnorMethod { jacobian_colength, brieskorn, weighted_homogeneous, declared };

const char* to_string(MilnorMethod method);

struct MilnorResult {
  std::int64_t mu = 0;
  MilnorMethod method = MilnorMethod::jacobian_colength;
  bool isolated = true;
  std::vector<std::string> notices;
};

// (df/dz_1, ..., df/dz_m). f must vanish at the origin.
std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

/// Milnor number as the colength of the Jacobian ideal. A smooth point
/// gives mu = 0 with a notice; a non-isolated critical point gives
/// isolated = false. Throws BudgetExceeded when the engine gives up.
MilnorResult milnor_number_hypersurface(const Polynomial& f, const Budget& budget = {},
                                        EngineStats* stats = nullptr);

// Exponents (a_1..a_m) when f = sum c_i z_i^a_i with every variable
// appearing in exactly one pure-power term, each a_i >= 2.
std::optional<std::vector<std::int64_t>> brieskorn_exponents(const Polynomial& f);

// prod (a_i - 1) for z_1^a_1 + ... + z_m^a_m.
std::int64_t brieskorn_milnor(std::span<const std::int64_t> exponents);

std::optional<std::int64_t> is_weighted_homogeneous(const Polynomial& f, std::span<const std::int64_t> weights);

// prod (d - w_i) / w_i; throws Error(inconsistency) if that is not a
// nonnegative integer.
std::int64_t weighted_homogeneous_milnor(std::span<const std::int64_t> weights, std::int64_t degree);

/// Dispatcher: hypersurfaces go through the Jacobian colength; higher
/// codimension uses declared_milnor or fails as unsupported. Throws
/// Error(non_isolated) for non-isolated hypersurface germs.
MilnorResult milnor_number(const GermDefinition& germ, const Budget& budget = {}, EngineStats* stats = nullptr);

}  // namespace singkit
