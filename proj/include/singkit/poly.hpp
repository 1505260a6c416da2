#pragma once

// Exact sparse multivariate polynomials over Q.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace singkit {

using Rational = mpq_class;  // kept canonical: lowest terms, positive denominator
using BigInt = mpz_class;

/// Ordered list of distinct variable names. Copies share storage.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t dimension() const noexcept { return vars_->size(); }
  const std::vector<std::string>& variables() const noexcept { return *vars_; }
  const std::string& name(std::size_t i) const { return vars_->at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

using Exponent = std::int32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents) : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial variable(std::size_t dimension, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::int64_t total_degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  // Throws Error(overflow) if an exponent would pass 2^31-1.
  Monomial operator*(const Monomial& other) const;
  // Precondition: divides(other) in reverse, i.e. other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Lexicographic on exponent vectors; storage order only.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, Monomial m, const Rational& c);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // Largest total degree of a term; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;

  // Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(std::uint64_t exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Polynomial& other, const char* op) const;

  Ring ring_;
  TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

}  // namespace singkit
