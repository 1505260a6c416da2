#include "singkit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "singkit/errors.hpp"

namespace singkit {
namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      if (c == '+')
        acc += term();
      else
        acc -= term();
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      if (at_end()) fail("expected exponent after '^'");
      if (peek() == '-') fail("negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected nonnegative integer exponent");
      std::size_t line = line_, col = col_;
      std::uint64_t e = natural();
      if (expansion_too_large(b, e)) throw ParseError("power expands beyond the size limit", line, col);
      b = b.pow(e);
    }
    return b;
  }

  // Caps the work a single '^' can trigger: at most kMaxTerms terms in the
  // expansion and kMaxCoefficientBits bits for a powered coefficient.
  static bool expansion_too_large(const Polynomial& b, std::uint64_t e) {
    if (e <= 1 || b.size() == 0) return false;
    if (b.size() == 1) {
      const Rational& c = b.terms().begin()->second;
      std::uint64_t bits = mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
      return c != 1 && c != -1 && bits * e > kMaxCoefficientBits;
    }
    BigInt terms;
    mpz_bin_uiui(terms.get_mpz_t(), e + b.size() - 1, b.size() - 1);
    return terms > kMaxTerms || e > kMaxCoefficientBits;
  }

  Polynomial base() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    if (depth_ >= kMaxDepth) fail("expression nested too deeply");
    DepthGuard guard(depth_);
    char c = peek();
    if (c == '-') {
      advance();
      return -factor();
    }
    if (c == '(') {
      std::size_t open_line = line_, open_col = col_;
      advance();
      Polynomial inner = expr();
      skip_space();
      if (at_end() || peek() != ')') {
        if (at_end()) throw ParseError("unclosed '('", open_line, open_col);
        fail("expected ')'");
      }
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t line = line_, col = col_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name.push_back(peek());
        advance();
      }
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", line, col);
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Rational rational() {
    std::size_t line = line_, col = col_;
    std::string digits = digit_run();
    if (!at_end() && peek() == '/') {
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
      std::string den = digit_run();
      BigInt d(den, 10);
      if (d == 0) throw ParseError("zero denominator", line, col);
      Rational r(BigInt(digits, 10), d);
      r.canonicalize();
      return r;
    }
    return Rational(BigInt(digits, 10));
  }

  std::uint64_t natural() {
    std::size_t line = line_, col = col_;
    std::string digits = digit_run();
    BigInt v(digits, 10);
    if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", line, col);
    return v.get_ui();
  }

  std::string digit_run() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s.push_back(peek());
      advance();
    }
    return s;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  static constexpr int kMaxDepth = 200;
  static constexpr unsigned long kMaxTerms = 1'000'000;
  static constexpr std::uint64_t kMaxCoefficientBits = 1'000'000;

  struct DepthGuard {
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  std::string_view text_;
  const Ring& ring_;
  int depth_ = 0;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const Ring& ring) {
  return ExpressionParser(text, ring).parse();
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const Polynomial::TermMap::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    auto da = a->first.total_degree(), db = b->first.total_degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : terms) {
    const Monomial& m = t->first;
    Rational c = t->second;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      out << c.get_str();
    } else if (c == 1) {
      out << format_monomial(m, p.ring());
    } else {
      out << c.get_str() << '*' << format_monomial(m, p.ring());
    }
  }
  return out.str();
}

}  // namespace singkit
