#pragma once

// Homotopy groups of U(n) in the range the triviality criteria use, and
// the criteria themselves. All congruences are taken modulo (n-1)! with
// residues normalized to [0, (n-1)!).

#include <cstdint>
#include <string>

#include "singkit/poly.hpp"

namespace singkit {

BigInt factorial(std::uint64_t m);

/// Z^rank + Z/torsion_order; torsion_order 0 means no torsion.
struct GroupDescriptor {
  std::uint64_t rank = 0;
  BigInt torsion_order = 0;

  bool is_trivial() const { return rank == 0 && torsion_order == 0; }
  std::string to_string() const;  // "0", "Z", "Z/2", "Z^2 + Z/6"

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.rank == b.rank && a.torsion_order == b.torsion_order;
  }
};

/// pi_k(U(n)) for 1 <= k <= 2n: Z for odd k < 2n, 0 for even k < 2n,
/// Z/n! for k = 2n. Throws Error(out_of_range) for k > 2n.
GroupDescriptor homotopy_group_u(std::uint64_t k, std::uint64_t n);

// Image of `degree` in pi_{2n-2}(U(n-1)) = Z/(n-1)!.
BigInt obstruction_class(std::int64_t degree, std::uint64_t n);

enum class Criterion {
  contact_bundle,         // mu = (-1)^(n-1) mod (n-1)!
  orthogonal_complement,  // GSV index = 0 mod (n-1)!
  foliation_normal,       // n = 3: GSV index even
};

const char* to_string(Criterion c);

struct TrivialityVerdict {
  bool trivial = false;
  BigInt modulus;
  BigInt residue;
  Criterion criterion = Criterion::orthogonal_complement;
  std::uint64_t n = 0;
  std::int64_t input = 0;  // mu for contact_bundle, the GSV index otherwise
  // Foliation criterion only: the foliation is assumed locally free.
  bool assumes_locally_free = false;
};

TrivialityVerdict decide_orthogonal_triviality(std::uint64_t n, std::int64_t gsv);
TrivialityVerdict decide_contact_triviality(std::uint64_t n, std::int64_t mu);
TrivialityVerdict decide_foliation_normal_triviality(std::int64_t gsv);

}  // namespace singkit
