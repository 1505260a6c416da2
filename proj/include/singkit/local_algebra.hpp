#pragma once

// Ideals in the local ring Q[z]_(z) at the origin: standard bases under the
// negative-degree reverse lexicographic ordering (Mora's tangent cone
// algorithm) and the colength dim_Q Q[z]_(z)/I.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "singkit/poly.hpp"

namespace singkit {

struct Budget {
  std::uint64_t reductions = 10'000'000;
  std::uint64_t staircase = 1'000'000;
};

// Work counters accumulated across calls that receive the same object.
struct EngineStats {
  std::uint64_t reductions = 0;
  std::uint64_t staircase = 0;
};

/// Negative degree reverse lexicographic ordering ("ds"). Lower total
/// degree wins; ties are broken reverse-lexicographically. The constant
/// monomial is the largest.
struct LocalOrdering {
  static constexpr const char* name = "negative-degree-reverse-lexicographic";

  static std::strong_ordering compare(const Monomial& a, const Monomial& b);
  static bool greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
  // Precondition: p nonzero.
  static Monomial leading_monomial(const Polynomial& p);
  // Largest total degree minus degree of the leading monomial.
  static std::int64_t ecart(const Polynomial& p);
};

class StandardBasis {
 public:
  // truncation_degree D asserts m^D lies in the ideal; normal forms then
  // drop terms of degree >= D.
  StandardBasis(std::vector<Polynomial> generators, std::vector<Polynomial> source,
                std::int64_t truncation_degree = std::numeric_limits<std::int64_t>::max());

  const LocalOrdering& ordering() const noexcept { return ordering_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  const std::vector<Polynomial>& source_ideal() const noexcept { return source_; }
  const Ring& ring() const noexcept { return source_.front().ring(); }
  std::int64_t truncation_degree() const noexcept { return truncation_degree_; }

  // Minimal generators of the leading ideal, in basis order.
  std::vector<Monomial> minimal_leading_monomials() const;
  bool leading_ideal_contains(const Monomial& m) const;
  bool contains_unit() const;

  Polynomial normal_form(const Polynomial& p, const Budget& budget = {}, EngineStats* stats = nullptr) const;

 private:
  LocalOrdering ordering_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::vector<Polynomial> source_;
  std::int64_t truncation_degree_;
};

/// Mora's weak normal form. The result r satisfies u*p - r in <basis> for
/// some unit u of the local ring, and either r = 0 or its leading monomial
/// is not divisible by any leading monomial of the basis. Reducers are
/// chosen by smallest ecart, ties by position (basis first, then
/// intermediate remainders in the order they were recorded).
Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> basis, const Budget& budget = {},
                            EngineStats* stats = nullptr);

/// Standard basis of the ideal generated by `gens` in the local ring.
/// Zero generators are dropped; an all-zero list is rejected. Pairs are
/// processed lowest lcm degree first, ties in creation order. Once the
/// leading monomials bound the colength, a power m^D of the maximal ideal
/// is known to lie in the ideal and terms of degree >= D are dropped. Throws
/// BudgetExceeded when the total number of reduction steps passes
/// budget.reductions.
StandardBasis standard_basis(std::span<const Polynomial> gens, const Budget& budget = {},
                             EngineStats* stats = nullptr);

struct Colength {
  enum class Status { finite, infinite, exceeded_budget };

  Status status = Status::finite;
  std::uint64_t value = 0;
  // Set when status is exceeded_budget.
  std::string exhausted;  // "reductions" or "staircase"
  std::uint64_t budget_used = 0;

  bool is_finite() const noexcept { return status == Status::finite; }
};

const char* to_string(Colength::Status status);

// Number of monomials outside the leading ideal (breadth-first from 1).
Colength staircase_colength(const StandardBasis& basis, const Budget& budget = {}, EngineStats* stats = nullptr);

Colength colength(std::span<const Polynomial> gens, const Budget& budget = {}, EngineStats* stats = nullptr);

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> gens, const Budget& budget = {},
                      EngineStats* stats = nullptr);

}  // namespace singkit
