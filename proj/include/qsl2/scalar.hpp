#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qsl2 {

using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Dense polynomials in q over Q.  c[e] is the coefficient of q^e; the vector
// carries no trailing zeros, so the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(const Rat& r) {
    if (r != 0) c.push_back(r);
  }

  static Poly monomial(const Rat& r, long e) {
    Poly p;
    if (r != 0) {
      p.c.assign(static_cast<size_t>(e) + 1, Rat(0));
      p.c.back() = r;
    }
    return p;
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }

  const Rat& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] += b.c[i];
    r.trim();
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); j++) {
        if (b.c[j] == 0) continue;
        r.c[i + j] += a.c[i] * b.c[j];
      }
    }
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  // Division with remainder over Q; b must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    quot = Poly();
    rem = a;
    if (rem.degree() >= b.degree())
      quot.c.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      long sh = rem.degree() - b.degree();
      Rat f = rem.lead() / b.lead();
      quot.c[sh] = f;
      for (size_t i = 0; i < b.c.size(); i++) rem.c[i + sh] -= f * b.c[i];
      rem.trim();
    }
    quot.trim();
  }

  Poly monic() const {
    Poly r = *this;
    if (!r.is_zero() && r.lead() != 1) {
      Rat inv = 1 / r.lead();
      for (auto& x : r.c) x *= inv;
    }
    return r;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a.monic();
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Reduced rational functions in q.  Invariants: den is monic and nonzero,
// gcd(num, den) = 1, zero is num = 0, den = 1.
// ---------------------------------------------------------------------------

struct RatFunc {
  Poly num;
  Poly den = Poly(Rat(1));

  static RatFunc make(Poly n, Poly d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc r;
    if (n.is_zero()) return r;
    Poly g = Poly::gcd(n, d);
    if (g.degree() > 0) {
      Poly q, rem;
      Poly::divmod(n, g, q, rem);
      n = q;
      Poly::divmod(d, g, q, rem);
      d = q;
    }
    Rat inv = 1 / d.lead();
    for (auto& x : d.c) x *= inv;
    for (auto& x : n.c) x *= inv;
    r.num = n;
    r.den = d;
    return r;
  }

  bool is_zero() const { return num.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return make(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return make(a.num * b.den, a.den * b.num);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }

  Rat eval(const Rat& x) const {
    Rat d = den.eval(x);
    if (d == 0) throw std::domain_error("rational function pole at evaluation point");
    return num.eval(x) / d;
  }
};

// ---------------------------------------------------------------------------
// Scalar: an element of the coefficient field, either Q(q) (generic mode) or
// Q with q specialized to a fixed rational (specialized mode).  Mixing modes
// in one arithmetic expression is a programming error.
// ---------------------------------------------------------------------------

enum class QMode { Generic, Specialized };

struct Scalar {
  std::variant<RatFunc, Rat> v;

  Scalar() : v(Rat(0)) {}
  explicit Scalar(RatFunc f) : v(std::move(f)) {}
  explicit Scalar(Rat r) : v(std::move(r)) {}

  bool generic() const { return std::holds_alternative<RatFunc>(v); }

  bool is_zero() const {
    if (generic()) return std::get<RatFunc>(v).is_zero();
    return std::get<Rat>(v) == 0;
  }

  static void check(const Scalar& a, const Scalar& b) {
    if (a.generic() != b.generic()) throw std::logic_error("mixed scalar modes");
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (a.generic()) return Scalar(std::get<RatFunc>(a.v) + std::get<RatFunc>(b.v));
    return Scalar(Rat(std::get<Rat>(a.v) + std::get<Rat>(b.v)));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (a.generic()) return Scalar(std::get<RatFunc>(a.v) - std::get<RatFunc>(b.v));
    return Scalar(Rat(std::get<Rat>(a.v) - std::get<Rat>(b.v)));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (a.generic()) return Scalar(std::get<RatFunc>(a.v) * std::get<RatFunc>(b.v));
    return Scalar(Rat(std::get<Rat>(a.v) * std::get<Rat>(b.v)));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (b.is_zero()) throw std::domain_error("scalar division by zero");
    if (a.generic()) return Scalar(std::get<RatFunc>(a.v) / std::get<RatFunc>(b.v));
    return Scalar(Rat(std::get<Rat>(a.v) / std::get<Rat>(b.v)));
  }
  Scalar operator-() const {
    if (generic()) return Scalar(-std::get<RatFunc>(v));
    return Scalar(Rat(-std::get<Rat>(v)));
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a.v == b.v;
  }

  Scalar inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (generic()) {
      const auto& f = std::get<RatFunc>(v);
      return Scalar(RatFunc::make(f.den, f.num));
    }
    return Scalar(Rat(1 / std::get<Rat>(v)));
  }

  Scalar pow(long e) const {
    Scalar base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc = generic() ? Scalar(RatFunc::make(Poly(Rat(1)), Poly(Rat(1)))) : Scalar(Rat(1));
    while (n) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  // Evaluate a generic scalar at q = x.
  Rat specialize(const Rat& x) const {
    if (!generic()) return std::get<Rat>(v);
    return std::get<RatFunc>(v).eval(x);
  }
};

struct QContext {
  QMode mode = QMode::Generic;
  Rat q;  // only read in Specialized mode

  Scalar zero() const {
    return mode == QMode::Generic ? Scalar(RatFunc()) : Scalar(Rat(0));
  }
  Scalar rat(const Rat& r) const {
    if (mode == QMode::Generic) return Scalar(RatFunc::make(Poly(r), Poly(Rat(1))));
    return Scalar(r);
  }
  Scalar integer(long n) const { return rat(Rat(n)); }
  Scalar one() const { return integer(1); }
  Scalar qpow(long e) const {
    if (mode == QMode::Generic) {
      if (e >= 0) return Scalar(RatFunc::make(Poly::monomial(Rat(1), e), Poly(Rat(1))));
      return Scalar(RatFunc::make(Poly(Rat(1)), Poly::monomial(Rat(1), -e)));
    }
    if (q == 0) throw std::domain_error("specialized q is zero");
    Rat base = q;
    Rat acc(1);
    long n = e < 0 ? -e : e;
    for (long t = 0; t < n; t++) acc *= base;
    if (e < 0) acc = 1 / acc;
    return Scalar(acc);
  }
};

// ---------------------------------------------------------------------------
// Printing.  Monomials print as "3/2*q^5", "q", "-q^-2"; a polynomial prints
// as "q^2-1"; a proper quotient prints as "(q^2-1)/(q-1)".  A quotient of two
// monomials folds into a single monomial with a possibly negative exponent,
// so printed scalars re-parse exactly.
// ---------------------------------------------------------------------------

inline bool poly_is_monomial(const Poly& p, Rat& coeff, long& e) {
  if (p.is_zero()) return false;
  long nz = -1;
  for (long i = 0; i <= p.degree(); i++) {
    if (p.c[i] != 0) {
      if (nz >= 0) return false;
      nz = i;
    }
  }
  coeff = p.c[nz];
  e = nz;
  return true;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string monomial_term_str(const Rat& coeff, long e) {
  if (e == 0) return rat_str(coeff);
  std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
  if (coeff == 1) return qpart;
  if (coeff == -1) return "-" + qpart;
  return rat_str(coeff) + "*" + qpart;
}

inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long i = p.degree(); i >= 0; i--) {
    if (p.c[i] == 0) continue;
    std::string t = monomial_term_str(p.c[i], i);
    if (s.empty())
      s = t;
    else if (t[0] == '-')
      s += t;
    else
      s += "+" + t;
  }
  return s;
}

inline std::string scalar_str(const Scalar& s) {
  if (!s.generic()) return rat_str(std::get<Rat>(s.v));
  const auto& f = std::get<RatFunc>(s.v);
  if (f.is_zero()) return "0";
  Rat nc, dc;
  long ne, de;
  bool nm = poly_is_monomial(f.num, nc, ne);
  bool dm = poly_is_monomial(f.den, dc, de);
  if (nm && dm) return monomial_term_str(nc / dc, ne - de);
  if (dm && de == 0) return poly_str(f.num);  // den == 1 after reduction
  return "(" + poly_str(f.num) + ")/(" + poly_str(f.den) + ")";
}

// ---------------------------------------------------------------------------
// Parsing.  Accepts what the printer emits plus the input forms used on the
// command line: "q^-2", "3/2*q^5", "-q", "7", "3/2", "q^2-1",
// "(q^2-1)/(q-1)".  Whitespace is ignored.
// ---------------------------------------------------------------------------

namespace detail {

struct ScalarParser {
  const QContext& ctx;
  std::string s;
  size_t pos = 0;

  explicit ScalarParser(const QContext& c, std::string in) : ctx(c) {
    for (char ch : in)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad scalar expression '" + s + "': " + why);
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  long parse_int() {
    bool neg = eat('-');
    if (!neg) eat('+');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  // term := [sign] [int ['/' int]] ['*'] ['q' ['^' int]]
  Scalar parse_term() {
    bool neg = eat('-');
    Rat coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long a = parse_int();
      coeff = Rat(a);
      saw_coeff = true;
      if (eat('/')) {
        long b = parse_int();
        if (b == 0) fail("zero denominator");
        coeff = rat_of(a, b);
      }
    }
    eat('*');
    long e = 0;
    bool saw_q = false;
    if (peek() == 'q') {
      pos++;
      saw_q = true;
      e = 1;
      if (eat('^')) e = parse_int();
    }
    if (!saw_coeff && !saw_q) fail("empty term");
    if (neg) coeff = -coeff;
    Scalar t = ctx.qpow(saw_q ? e : 0) * ctx.rat(coeff);
    return t;
  }

  // sum := term (('+'|'-') term)*
  Scalar parse_sum() {
    Scalar acc = parse_term();
    while (peek() == '+' || peek() == '-') {
      bool minus = s[pos] == '-';
      pos++;
      Scalar t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Scalar parse_group() {
    if (eat('(')) {
      Scalar r = parse_sum();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    return parse_sum();
  }

  Scalar parse() {
    bool parened = peek() == '(';
    Scalar r = parse_group();
    if (parened && eat('/')) {
      Scalar d = parse_group();
      r = r / d;
    }
    if (pos != s.size()) fail("trailing input");
    return r;
  }
};

}  // namespace detail

inline Scalar parse_scalar(const QContext& ctx, const std::string& in) {
  detail::ScalarParser p(ctx, in);
  return p.parse();
}

}  // namespace qsl2
