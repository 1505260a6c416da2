#pragma once

// Indices of vector fields at the origin.

#include <cstdint>
#include <optional>
#include <vector>

#include "singkit/germ.hpp"
#include "singkit/local_algebra.hpp"
#include "singkit/poly.hpp"

namespace singkit {

class VectorField {
 public:
  // Throws unless there is one component per variable and not all are zero.
  VectorField(Ring ring, std::vector<Polynomial> components);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  Ring ring_;
  std::vector<Polynomial> components_;
};

// The field z_1 d/dz_1 + ... + z_m d/dz_m.
VectorField radial_field(const Ring& ring);

enum class IndexKind { poincare_hopf, gsv_radial, gsv_hamiltonian, gsv_declared };

const char* to_string(IndexKind kind);

struct IndexValue {
  IndexKind kind;
  std::int64_t value;
};

/// Local Poincare-Hopf index of a holomorphic field: the colength of the
/// ideal of its components. Throws Error(non_isolated) when the zero at
/// the origin is not isolated, BudgetExceeded when the engine gives up.
IndexValue ph_index(const VectorField& v, const Budget& budget = {}, EngineStats* stats = nullptr);

/// (df/dz_2, -df/dz_1, df/dz_4, -df/dz_3, ...) on an even-dimensional space.
VectorField hamiltonian_field(const Polynomial& f);

// df(v) = sum_i v_i * df/dz_i.
Polynomial apply_differential(const VectorField& v, const Polynomial& f);

struct Tangency {
  bool tangent = false;               // df(v) in the local ideal <f>
  bool tangent_to_all_fibers = false; // df(v) == 0 as a polynomial
};

Tangency tangency(const VectorField& v, const Polynomial& f, const Budget& budget = {},
                  EngineStats* stats = nullptr);

bool check_tangency(const VectorField& v, const Polynomial& f, const Budget& budget = {},
                    EngineStats* stats = nullptr);

// Tangency to a complete intersection: df_j(v) in <f_1..f_k> for every j.
Tangency tangency(const VectorField& v, const std::vector<Polynomial>& equations, const Budget& budget = {},
                  EngineStats* stats = nullptr);

// Euler characteristic of the Milnor fibre, 1 + (-1)^n mu: the GSV index
// of a radial field on an n-dimensional germ.
IndexValue radial_gsv_index(std::int64_t n, std::int64_t mu);

struct GsvRequest {
  bool radial = false;
  std::optional<std::int64_t> declared;
};

/// GSV index of the germ's field, of the radial field, or a declared value.
///  - radial requested: 1 + (-1)^n mu (needs the Milnor number).
///  - germ field: must be tangent (Error(tangency) otherwise); a field equal
///    to the Hamiltonian field of the single equation has index 0;
///    anything else needs a declared value.
///  - no field: a declared value is passed through.
/// Missing information raises Error(unsupported).
IndexValue gsv_index(const GermDefinition& germ, const GsvRequest& request = {}, const Budget& budget = {},
                     EngineStats* stats = nullptr);

// True when the germ is a hypersurface in even dimension whose field is
// exactly the Hamiltonian field of its equation.
bool is_hamiltonian_germ(const GermDefinition& germ);

}  // namespace singkit
