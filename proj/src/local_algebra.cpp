#include "singkit/local_algebra.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>

#include "singkit/errors.hpp"

namespace singkit {

std::strong_ordering LocalOrdering::compare(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return db <=> da;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

Monomial LocalOrdering::leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "leading monomial of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || greater(m, *best)) best = &m;
  return *best;
}

std::int64_t LocalOrdering::ecart(const Polynomial& p) {
  return p.degree() - leading_monomial(p).total_degree();
}

namespace {

// Polynomial with terms held in descending local order, leading term first.
struct Term {
  Monomial m;
  Rational c;
};

struct SortedPoly {
  std::vector<Term> terms;
  std::int64_t max_degree = -1;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
  const Rational& lc() const { return terms.front().c; }
  std::int64_t ecart() const { return max_degree - lm().total_degree(); }

  void refresh_degree() {
    max_degree = -1;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.m.total_degree());
  }
};

SortedPoly to_sorted(const Polynomial& p) {
  SortedPoly s;
  s.terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) s.terms.push_back({m, c});
  std::sort(s.terms.begin(), s.terms.end(),
            [](const Term& a, const Term& b) { return LocalOrdering::greater(a.m, b.m); });
  s.refresh_degree();
  return s;
}

Polynomial from_sorted(const SortedPoly& s, const Ring& ring) {
  Polynomial p(ring);
  for (const auto& t : s.terms) p.add_term(t.m, t.c);
  return p;
}

void make_monic(SortedPoly& s) {
  if (s.empty() || s.lc() == 1) return;
  Rational inv = 1 / s.lc();
  for (auto& t : s.terms) t.c *= inv;
}

constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

// h - coef * mult * g, dropping terms of degree >= limit. Multiplying by a
// monomial preserves the order of g, and both inputs ascend in degree.
SortedPoly subtract_multiple(const SortedPoly& h, const Rational& coef, const Monomial& mult, const SortedPoly& g,
                             std::int64_t limit = kNoLimit) {
  SortedPoly r;
  r.terms.reserve(h.terms.size() + g.terms.size());
  const std::int64_t shift = mult.total_degree();
  std::size_t i = 0, j = 0;
  auto h_live = [&] { return i < h.terms.size() && h.terms[i].m.total_degree() < limit; };
  auto g_live = [&] { return j < g.terms.size() && g.terms[j].m.total_degree() + shift < limit; };
  while (h_live() || g_live()) {
    if (!g_live()) {
      r.terms.push_back(h.terms[i++]);
      continue;
    }
    Monomial gm = g.terms[j].m * mult;
    if (!h_live()) {
      r.terms.push_back({std::move(gm), -coef * g.terms[j].c});
      ++j;
      continue;
    }
    auto cmp = LocalOrdering::compare(h.terms[i].m, gm);
    if (cmp > 0) {
      r.terms.push_back(h.terms[i++]);
    } else if (cmp < 0) {
      r.terms.push_back({std::move(gm), -coef * g.terms[j].c});
      ++j;
    } else {
      Rational c = h.terms[i].c - coef * g.terms[j].c;
      if (sgn(c) != 0) r.terms.push_back({std::move(gm), std::move(c)});
      ++i;
      ++j;
    }
  }
  r.refresh_degree();
  return r;
}

void truncate(SortedPoly& s, std::int64_t limit) {
  auto cut = std::find_if(s.terms.begin(), s.terms.end(),
                          [&](const Term& t) { return t.m.total_degree() >= limit; });
  if (cut == s.terms.end()) return;
  s.terms.erase(cut, s.terms.end());
  s.refresh_degree();
}

// Once the leading monomials contain a pure power z_i^a_i of every
// variable, every monomial of degree E = sum(a_i - 1) + 1 is a leading
// monomial, and then m^E lies in the ideal of the local ring: a weak normal
// form of such a monomial could only have leading terms of degree >= E.
// Terms of degree >= E + 1 are dropped from everything; cutting at E + 1
// rather than E keeps the pure powers themselves (degree a_i <= E).
std::int64_t truncation_degree(const std::vector<Exponent>& pure) {
  std::int64_t d = 2;
  for (auto a : pure) {
    if (a == 0) return kNoLimit;
    d += a - 1;
  }
  return d;
}

void note_pure_power(std::vector<Exponent>& pure, const Monomial& lm) {
  if (lm.is_one()) {
    std::fill(pure.begin(), pure.end(), 1);
    return;
  }
  for (std::size_t i = 0; i < lm.size(); ++i) {
    if (lm[i] == lm.total_degree() && (pure[i] == 0 || lm[i] < pure[i])) pure[i] = lm[i];
  }
}

class StepCounter {
 public:
  StepCounter(const Budget& budget, EngineStats* stats) : budget_(budget), stats_(stats) {}

  void step() {
    ++used_;
    if (stats_ != nullptr) ++stats_->reductions;
    if (used_ > budget_.reductions)
      throw BudgetExceeded("reduction budget of " + std::to_string(budget_.reductions) + " steps exceeded", used_);
  }

 private:
  const Budget& budget_;
  EngineStats* stats_;
  std::uint64_t used_ = 0;
};

SortedPoly mora_reduce(SortedPoly h, const std::vector<const SortedPoly*>& basis, StepCounter& counter,
                       std::int64_t limit = kNoLimit) {
  truncate(h, limit);
  std::vector<const SortedPoly*> reducers = basis;
  std::deque<SortedPoly> recorded;
  while (!h.empty()) {
    const SortedPoly* best = nullptr;
    std::int64_t best_ecart = std::numeric_limits<std::int64_t>::max();
    for (const SortedPoly* g : reducers) {
      if (!g->lm().divides(h.lm())) continue;
      auto e = g->ecart();
      if (e < best_ecart) {
        best = g;
        best_ecart = e;
      }
    }
    if (best == nullptr) break;
    counter.step();
    if (best_ecart > h.ecart()) {
      recorded.push_back(h);
      reducers.push_back(&recorded.back());
    }
    Rational coef = h.lc() / best->lc();
    Monomial mult = h.lm() / best->lm();
    h = subtract_multiple(h, coef, mult, *best, limit);
  }
  return h;
}

std::vector<Polynomial> nonzero(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

void check_same_ring(std::span<const Polynomial> polys, const Ring& ring) {
  for (const auto& p : polys)
    if (!(p.ring() == ring)) throw Error(ErrorKind::ring_mismatch, "polynomials belong to different rings");
}

}  // namespace

StandardBasis::StandardBasis(std::vector<Polynomial> generators, std::vector<Polynomial> source,
                             std::int64_t truncation_degree)
    : generators_(std::move(generators)), source_(std::move(source)), truncation_degree_(truncation_degree) {
  if (source_.empty()) throw Error(ErrorKind::invalid_argument, "standard basis of an empty generator list");
  for (const auto& g : generators_) leading_.push_back(LocalOrdering::leading_monomial(g));
}

std::vector<Monomial> StandardBasis::minimal_leading_monomials() const {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < leading_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leading_.size() && !redundant; ++j) {
      if (i == j || !leading_[j].divides(leading_[i])) continue;
      // Equal monomials: keep the first occurrence.
      redundant = leading_[j] != leading_[i] || j < i;
    }
    if (!redundant) out.push_back(leading_[i]);
  }
  return out;
}

bool StandardBasis::leading_ideal_contains(const Monomial& m) const {
  return std::any_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(m); });
}

bool StandardBasis::contains_unit() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& l) { return l.is_one(); });
}

namespace {

Polynomial normal_form_below(const Polynomial& p, std::span<const Polynomial> basis, const Budget& budget,
                             EngineStats* stats, std::int64_t limit) {
  check_same_ring(basis, p.ring());
  std::vector<SortedPoly> sorted;
  for (const auto& g : basis)
    if (!g.is_zero()) sorted.push_back(to_sorted(g));
  std::vector<const SortedPoly*> refs;
  for (const auto& s : sorted) refs.push_back(&s);
  StepCounter counter(budget, stats);
  return from_sorted(mora_reduce(to_sorted(p), refs, counter, limit), p.ring());
}

}  // namespace

Polynomial StandardBasis::normal_form(const Polynomial& p, const Budget& budget, EngineStats* stats) const {
  return normal_form_below(p, generators_, budget, stats, truncation_degree_);
}

Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> basis, const Budget& budget,
                            EngineStats* stats) {
  return normal_form_below(p, basis, budget, stats, kNoLimit);
}

StandardBasis standard_basis(std::span<const Polynomial> gens, const Budget& budget, EngineStats* stats) {
  if (gens.empty()) throw Error(ErrorKind::invalid_argument, "standard basis of an empty generator list");
  const Ring& ring = gens.front().ring();
  check_same_ring(gens, ring);
  std::vector<Polynomial> source(gens.begin(), gens.end());
  std::vector<Polynomial> input = nonzero(gens);
  if (input.empty()) throw Error(ErrorKind::invalid_argument, "all generators are zero");

  // deque: reducers hold pointers into it while it grows.
  std::deque<SortedPoly> basis;
  std::vector<bool> dead;  // emptied by truncation
  std::vector<const SortedPoly*> refs;
  std::vector<Exponent> pure(ring.dimension(), 0);
  std::int64_t limit = kNoLimit;

  struct Pair {
    std::size_t i, j;
    std::int64_t degree;
    std::uint64_t seq;
  };
  auto later = [](const Pair& a, const Pair& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.seq > b.seq;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);
  std::uint64_t seq = 0;

  auto tighten = [&] {
    std::int64_t d = truncation_degree(pure);
    if (d >= limit) return;
    limit = d;
    refs.clear();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      truncate(basis[i], limit);
      if (basis[i].empty()) dead[i] = true;
      if (!dead[i]) refs.push_back(&basis[i]);
    }
  };
  auto add = [&](SortedPoly s) {
    truncate(s, limit);
    if (s.empty()) return;
    make_monic(s);
    basis.push_back(std::move(s));
    dead.push_back(false);
    refs.push_back(&basis.back());
    std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i)
      if (!dead[i]) pairs.push({i, k, basis[i].lm().lcm(basis[k].lm()).total_degree(), seq++});
    note_pure_power(pure, basis[k].lm());
    tighten();
  };
  for (const auto& g : input) add(to_sorted(g));

  StepCounter counter(budget, stats);
  while (!pairs.empty()) {
    Pair pr = pairs.top();
    pairs.pop();
    if (dead[pr.i] || dead[pr.j]) continue;
    const SortedPoly& f = basis[pr.i];
    const SortedPoly& g = basis[pr.j];
    Monomial l = f.lm().lcm(g.lm());
    if (l.total_degree() >= limit) continue;
    // basis elements are monic, so spoly = (l/lm f) f - (l/lm g) g
    SortedPoly s = subtract_multiple(SortedPoly{}, -1, l / f.lm(), f, limit);
    s = subtract_multiple(s, 1, l / g.lm(), g, limit);
    SortedPoly h = mora_reduce(std::move(s), refs, counter, limit);
    if (!h.empty()) add(std::move(h));
  }

  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!dead[i]) out.push_back(from_sorted(basis[i], ring));
  return StandardBasis(std::move(out), std::move(source), limit);
}

const char* to_string(Colength::Status status) {
  switch (status) {
    case Colength::Status::finite: return "finite";
    case Colength::Status::infinite: return "infinite";
    case Colength::Status::exceeded_budget: return "exceeded-budget";
  }
  return "unknown";
}

Colength staircase_colength(const StandardBasis& basis, const Budget& budget, EngineStats* stats) {
  Colength result;
  if (basis.contains_unit()) return result;

  const std::size_t dim = basis.ring().dimension();
  auto minimal = basis.minimal_leading_monomials();
  // Finite iff every variable has a pure power in the leading ideal.
  for (std::size_t i = 0; i < dim; ++i) {
    bool has_power = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& m) {
      return m.total_degree() == m[i];
    });
    if (!has_power) {
      result.status = Colength::Status::infinite;
      return result;
    }
  }

  auto in_leading = [&](const Monomial& m) {
    return std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::queue<Monomial> frontier;
  Monomial one(dim);
  seen.insert(one);
  frontier.push(one);
  std::uint64_t count = 0;
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.front());
    frontier.pop();
    ++count;
    if (stats != nullptr) ++stats->staircase;
    if (count > budget.staircase) {
      result.status = Colength::Status::exceeded_budget;
      result.exhausted = "staircase";
      result.budget_used = count;
      return result;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      Monomial next = m * Monomial::variable(dim, i);
      if (in_leading(next) || seen.count(next)) continue;
      seen.insert(next);
      frontier.push(std::move(next));
    }
  }
  result.value = count;
  return result;
}

Colength colength(std::span<const Polynomial> gens, const Budget& budget, EngineStats* stats) {
  try {
    auto basis = standard_basis(gens, budget, stats);
    return staircase_colength(basis, budget, stats);
  } catch (const BudgetExceeded& e) {
    Colength c;
    c.status = Colength::Status::exceeded_budget;
    c.exhausted = "reductions";
    c.budget_used = e.used();
    return c;
  }
}

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> gens, const Budget& budget,
                      EngineStats* stats) {
  check_same_ring(gens, p.ring());
  auto filtered = nonzero(gens);
  if (filtered.empty()) return p.is_zero();
  if (p.is_zero()) return true;
  auto basis = standard_basis(filtered, budget, stats);
  return basis.normal_form(p, budget, stats).is_zero();
}

}  // namespace singkit
