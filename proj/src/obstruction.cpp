#include "singkit/obstruction.hpp"

#include "singkit/errors.hpp"

namespace singkit {
namespace {

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_n(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "triviality criteria need n >= 2");
}

}  // namespace

BigInt factorial(std::uint64_t m) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

std::string GroupDescriptor::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  if (torsion_order != 0) out += (out.empty() ? "" : " + ") + std::string("Z/") + torsion_order.get_str();
  return out;
}

GroupDescriptor homotopy_group_u(std::uint64_t k, std::uint64_t n) {
  if (k < 1 || n < 1) throw Error(ErrorKind::invalid_argument, "homotopy_group_u needs k >= 1 and n >= 1");
  if (k > 2 * n)
    throw Error(ErrorKind::out_of_range, "pi_" + std::to_string(k) + "(U(" + std::to_string(n) +
                                             ")) is outside the implemented range k <= 2n");
  GroupDescriptor g;
  if (k < 2 * n) {
    g.rank = k % 2;
    return g;
  }
  g.torsion_order = factorial(n);
  if (g.torsion_order == 1) g.torsion_order = 0;
  return g;
}

BigInt obstruction_class(std::int64_t degree, std::uint64_t n) {
  require_n(n);
  return floor_mod(BigInt(degree), factorial(n - 1));
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::contact_bundle: return "contact-bundle";
    case Criterion::orthogonal_complement: return "orthogonal-complement";
    case Criterion::foliation_normal: return "foliation-normal";
  }
  return "unknown";
}

TrivialityVerdict decide_orthogonal_triviality(std::uint64_t n, std::int64_t gsv) {
  require_n(n);
  TrivialityVerdict v;
  v.criterion = Criterion::orthogonal_complement;
  v.n = n;
  v.input = gsv;
  v.modulus = factorial(n - 1);
  v.residue = obstruction_class(gsv, n);
  v.trivial = v.residue == 0;
  return v;
}

TrivialityVerdict decide_contact_triviality(std::uint64_t n, std::int64_t mu) {
  require_n(n);
  if (mu < 0) throw Error(ErrorKind::invalid_argument, "Milnor number must be nonnegative");
  TrivialityVerdict v;
  v.criterion = Criterion::contact_bundle;
  v.n = n;
  v.input = mu;
  v.modulus = factorial(n - 1);
  BigInt sign = (n - 1) % 2 == 0 ? 1 : -1;
  v.residue = floor_mod(BigInt(mu) - sign, v.modulus);
  v.trivial = v.residue == 0;
  return v;
}

TrivialityVerdict decide_foliation_normal_triviality(std::int64_t gsv) {
  TrivialityVerdict v = decide_orthogonal_triviality(3, gsv);
  v.criterion = Criterion::foliation_normal;
  v.assumes_locally_free = true;
  return v;
}

}  // namespace singkit
