#include "singkit/poly.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "singkit/errors.hpp"

namespace singkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::non_isolated: return "non-isolated";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::tangency: return "not-tangent";
    case ErrorKind::inconsistency: return "inconsistency";
  }
  return "unknown";
}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::string context)
    : Error(ErrorKind::parse,
            (context.empty() ? std::string() : context + ": ") + std::to_string(line) + ":" +
                std::to_string(column) + ": " + message),
      message_(std::move(message)),
      line_(line),
      column_(column),
      context_(std::move(context)) {}

Ring::Ring(std::vector<std::string> variables) {
  if (variables.empty()) throw Error(ErrorKind::invalid_argument, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(ErrorKind::invalid_argument, "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorKind::invalid_argument, "duplicate variable '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  return std::nullopt;
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_)
    if (e < 0) throw Error(ErrorKind::invalid_argument, "negative exponent");
}

Monomial Monomial::variable(std::size_t dimension, std::size_t index, Exponent power) {
  if (index >= dimension) throw Error(ErrorKind::out_of_range, "variable index out of range");
  Monomial m(dimension);
  m.exps_[index] = power;
  return m;
}

std::int64_t Monomial::total_degree() const noexcept {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i]))
      throw Error(ErrorKind::overflow, "exponent overflow");
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights) {
  if (weights.size() != m.size())
    throw Error(ErrorKind::invalid_argument, "weight vector length does not match ring dimension");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (weights[i] <= 0) throw Error(ErrorKind::invalid_argument, "weights must be positive");
    std::int64_t t = 0;
    if (__builtin_mul_overflow(weights[i], static_cast<std::int64_t>(m[i]), &t) ||
        __builtin_add_overflow(d, t, &d))
      throw Error(ErrorKind::overflow, "weighted degree overflow");
  }
  return d;
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  return term(ring, Monomial(ring.dimension()), c);
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  return term(ring, Monomial::variable(ring.dimension(), index), 1);
}

Polynomial Polynomial::term(const Ring& ring, Monomial m, const Rational& c) {
  if (m.size() != ring.dimension())
    throw Error(ErrorKind::ring_mismatch, "monomial length does not match ring dimension");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(ring_.dimension())); }

std::int64_t Polynomial::degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  // Callers may hand in an mpq_class built from an unreduced fraction.
  Rational reduced = c;
  reduced.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, reduced);
  if (!inserted) {
    it->second += reduced;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& other, const char* op) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorKind::ring_mismatch, std::string("ring mismatch in ") + op);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other, "addition");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other, "subtraction");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    Rational reduced = c;
    reduced.canonicalize();
    for (auto& [m, coef] : terms_) coef *= reduced;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b, "multiplication");
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.ring().dimension())
    throw Error(ErrorKind::out_of_range, "partial derivative: variable index out of range");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Exponent e = m[var_index];
    if (e == 0) continue;
    std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
    exps[var_index] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

}  // namespace singkit
