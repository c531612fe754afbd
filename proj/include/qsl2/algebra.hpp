#pragma once

#include "qsl2/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// ---------------------------------------------------------------------------
// PBW basis e_{i,j,k} = a^i b^j c^k, where a^i stands for d^{-i} when i < 0.
// The exponents j, k are nonnegative; i ranges over Z.
// ---------------------------------------------------------------------------

struct Monomial {
  long i = 0;
  long j = 0;
  long k = 0;

  auto operator<=>(const Monomial&) const = default;

  bool is_unit() const { return i == 0 && j == 0 && k == 0; }
  long level() const { return j + k; }                      // bc-level
  std::pair<long, long> bidegree() const { return {i, j - k}; }
};

using Elem = std::map<Monomial, Scalar>;
using TensorSq = std::map<std::pair<Monomial, Monomial>, Scalar>;

enum class Gen { A, B, C, D };

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::A: return "a";
    case Gen::B: return "b";
    case Gen::C: return "c";
    default: return "d";
  }
}

inline void add_term(Elem& e, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
  }
}

inline void add_tensor(TensorSq& e, const Monomial& m1, const Monomial& m2, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m1, m2);
  auto it = e.find(key);
  if (it == e.end()) {
    e.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
  }
}

inline Elem elem_add(const Elem& a, const Elem& b) {
  Elem r = a;
  for (const auto& [m, c] : b) add_term(r, m, c);
  return r;
}

inline Elem elem_sub(const Elem& a, const Elem& b) {
  Elem r = a;
  for (const auto& [m, c] : b) add_term(r, m, -c);
  return r;
}

inline Elem elem_scale(const Elem& a, const Scalar& s) {
  Elem r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a) r.emplace(m, c * s);
  return r;
}

inline bool elem_eq(const Elem& a, const Elem& b) { return elem_sub(a, b).empty(); }

template <class Pred>
Elem elem_filter(const Elem& a, Pred keep) {
  Elem r;
  for (const auto& [m, c] : a)
    if (keep(m)) r.emplace(m, c);
  return r;
}

// Diagonal algebra automorphism a -> lambda a, b -> mu b, c -> mu^{-1} c,
// d -> lambda^{-1} d; on the basis it scales by lambda^i mu^{j-k}.
struct Automorphism {
  Scalar lambda;
  Scalar mu;

  Scalar coeff(const Monomial& m) const { return lambda.pow(m.i) * mu.pow(m.j - m.k); }

  Elem apply(const Elem& x) const {
    Elem r;
    for (const auto& [m, c] : x) r.emplace(m, c * coeff(m));
    return r;
  }

  Automorphism inverse() const { return {lambda.inv(), mu.inv()}; }
};

// ---------------------------------------------------------------------------
// The algebra engine: exact products in the PBW basis, the Hopf structure
// maps, the Haar functional, and the twisted right-module action.
// ---------------------------------------------------------------------------

class Algebra {
 public:
  QContext ctx;

  explicit Algebra(QContext c) : ctx(std::move(c)) {}

  Elem zero() const { return {}; }

  Elem monomial(long i, long j, long k, Scalar coeff) const {
    Elem e;
    add_term(e, Monomial{i, j, k}, coeff);
    return e;
  }
  Elem monomial(long i, long j, long k) const { return monomial(i, j, k, ctx.one()); }
  Elem unit() const { return monomial(0, 0, 0); }

  Elem gen(Gen g) const {
    switch (g) {
      case Gen::A: return monomial(1, 0, 0);
      case Gen::B: return monomial(0, 1, 0);
      case Gen::C: return monomial(0, 0, 1);
      default: return monomial(-1, 0, 0);
    }
  }

  // Right multiplication by a generator, the rewriting core.  The bc-level
  // j+k never decreases; multiplication by a (resp. d) picks up a second
  // term raising it by two exactly when the power of d (resp. a) drops.
  Elem rmul_gen(const Elem& x, Gen g) const {
    Elem r;
    for (const auto& [m, c] : x) {
      switch (g) {
        case Gen::B:
          add_term(r, {m.i, m.j + 1, m.k}, c);
          break;
        case Gen::C:
          add_term(r, {m.i, m.j, m.k + 1}, c);
          break;
        case Gen::A: {
          Scalar f = c * ctx.qpow(-m.level());
          add_term(r, {m.i + 1, m.j, m.k}, f);
          if (m.i < 0) add_term(r, {m.i + 1, m.j + 1, m.k + 1}, f * ctx.qpow(-1));
          break;
        }
        case Gen::D: {
          Scalar f = c * ctx.qpow(m.level());
          add_term(r, {m.i - 1, m.j, m.k}, f);
          if (m.i > 0) add_term(r, {m.i - 1, m.j + 1, m.k + 1}, f * ctx.qpow(1));
          break;
        }
      }
    }
    return r;
  }

  // The PBW word of e_{i,j,k}: |i| letters a or d, then j letters b, then k
  // letters c.  Words act letter by letter wherever an operation is only
  // known on generators.
  template <class Fn>
  void for_word(const Monomial& m, Fn&& step) const {
    for (long t = 0; t < (m.i >= 0 ? m.i : -m.i); t++) step(m.i >= 0 ? Gen::A : Gen::D);
    for (long t = 0; t < m.j; t++) step(Gen::B);
    for (long t = 0; t < m.k; t++) step(Gen::C);
  }

  Elem mul(const Elem& x, const Elem& y) const {
    Elem r;
    for (const auto& [n, c] : y) {
      Elem t = elem_scale(x, c);
      for_word(n, [&](Gen g) { t = rmul_gen(t, g); });
      for (const auto& [m, cv] : t) add_term(r, m, cv);
    }
    return r;
  }

  Scalar counit(const Elem& x) const {
    Scalar s = ctx.zero();
    for (const auto& [m, c] : x)
      if (m.j == 0 && m.k == 0) s = s + c;
    return s;
  }

  const TensorSq& coproduct(const Monomial& m) const {
    auto it = coproduct_cache_.find(m);
    if (it != coproduct_cache_.end()) return it->second;
    TensorSq r;
    if (m.is_unit()) {
      add_tensor(r, {}, {}, ctx.one());
    } else {
      Monomial head = m;
      Gen last;
      if (m.k > 0) {
        head.k--;
        last = Gen::C;
      } else if (m.j > 0) {
        head.j--;
        last = Gen::B;
      } else if (m.i > 0) {
        head.i--;
        last = Gen::A;
      } else {
        head.i++;
        last = Gen::D;
      }
      r = tensor_mul(coproduct(head), gen_coproduct(last));
    }
    return coproduct_cache_.emplace(m, std::move(r)).first->second;
  }

  TensorSq coproduct(const Elem& x) const {
    TensorSq r;
    for (const auto& [m, c] : x)
      for (const auto& [p, cv] : coproduct(m)) add_tensor(r, p.first, p.second, c * cv);
    return r;
  }

  TensorSq tensor_mul(const TensorSq& x, const TensorSq& y) const {
    TensorSq r;
    for (const auto& [px, cx] : x)
      for (const auto& [py, cy] : y) {
        Elem left = mul(monomial_elem(px.first), monomial_elem(py.first));
        Elem right = mul(monomial_elem(px.second), monomial_elem(py.second));
        Scalar c = cx * cy;
        for (const auto& [ml, cl] : left)
          for (const auto& [mr, cr] : right) add_tensor(r, ml, mr, c * cl * cr);
      }
    return r;
  }

  // Antipode: an algebra antihomomorphism with S(a)=d, S(b)=-q^{-1}b,
  // S(c)=-qc, S(d)=a.
  const Elem& antipode(const Monomial& m) const {
    auto it = antipode_cache_.find(m);
    if (it != antipode_cache_.end()) return it->second;
    // S(e_{i,j,k}) = S(c)^k S(b)^j S(a-part) = (-q)^k (-q^{-1})^j b^j c^k S(a-part)
    Scalar coeff = ctx.qpow(m.k - m.j);
    if ((m.j + m.k) % 2 != 0) coeff = -coeff;
    Elem r = monomial(0, m.j, m.k, coeff);
    if (m.i >= 0)
      for (long t = 0; t < m.i; t++) r = rmul_gen(r, Gen::D);
    else
      for (long t = 0; t < -m.i; t++) r = rmul_gen(r, Gen::A);
    return antipode_cache_.emplace(m, std::move(r)).first->second;
  }

  Elem antipode(const Elem& x) const {
    Elem r;
    for (const auto& [m, c] : x)
      for (const auto& [n, cv] : antipode(m)) add_term(r, n, c * cv);
    return r;
  }

  // The Haar functional: supported on e_{0,j,j} with value
  // (-q)^{-j} (1-q^{-2}) / (1-q^{-2(j+1)}).
  Scalar haar(const Elem& x) const {
    Scalar s = ctx.zero();
    for (const auto& [m, c] : x) {
      if (m.i != 0 || m.j != m.k) continue;
      long j = m.j;
      Scalar v;
      if (j == 0) {
        v = ctx.one();
      } else {
        Scalar num = ctx.one() - ctx.qpow(-2);
        Scalar den = ctx.one() - ctx.qpow(-2 * (j + 1));
        v = ctx.qpow(-j) * num / den;
        if (j % 2 != 0) v = -v;
      }
      s = s + c * v;
    }
    return s;
  }

  // Flip automorphism a -> lambda a, b -> mu^{-1} c, c -> mu b,
  // d -> lambda^{-1} d; on the basis it swaps j and k.
  Elem flip(const Elem& x, const Scalar& lambda, const Scalar& mu) const {
    Elem r;
    for (const auto& [m, c] : x)
      add_term(r, {m.i, m.k, m.j}, c * lambda.pow(m.i) * mu.pow(m.k - m.j));
    return r;
  }

  // --- twisted right-module action -------------------------------------
  // The module is A itself with m <| y = sum sigma(S(y_(2))) m y_(1).
  // Generator actions have closed forms; eps_{i,j,k} = q^{i+j+k+2} lambda/mu.

  Scalar eps_factor(const Automorphism& sigma, long i, long j, long k) const {
    return ctx.qpow(i + j + k + 2) * sigma.lambda / sigma.mu;
  }

  Elem act_gen(const Elem& x, Gen g, const Automorphism& sigma) const {
    Elem r;
    for (const auto& [m, c] : x) {
      long i = m.i, j = m.j, k = m.k;
      switch (g) {
        case Gen::A: {
          Scalar f = c * sigma.lambda.inv() * ctx.qpow(-(j + k));
          add_term(r, m, f);
          long absi = i >= 0 ? i : -i;
          Scalar tail = f * ctx.qpow(-1 - i - absi) * (ctx.one() - eps_factor(sigma, absi, j, k));
          add_term(r, {i, j + 1, k + 1}, tail);
          break;
        }
        case Gen::B: {
          Scalar f = c * sigma.lambda;
          add_term(r, {i + 1, j + 1, k}, f * (ctx.one() - eps_factor(sigma, i, j, k).inv()));
          if (i < 0)
            add_term(r, {i + 1, j + 2, k + 1},
                     f * ctx.qpow(-2 * i - 1) * (ctx.one() - eps_factor(sigma, -i, j, k).inv()));
          break;
        }
        case Gen::C: {
          Scalar f = c * sigma.lambda.inv();
          add_term(r, {i - 1, j, k + 1}, f * (ctx.one() - eps_factor(sigma, -i, j, k)));
          if (i > 0)
            add_term(r, {i - 1, j + 1, k + 2},
                     f * ctx.qpow(-2 * i + 1) * (ctx.one() - eps_factor(sigma, i, j, k)));
          break;
        }
        case Gen::D: {
          // from the coproduct of d: m <| d = -q^{-1} mu b m c + lambda a m d
          Elem mm;
          add_term(mm, m, c);
          Elem t1 = mul(mul(gen(Gen::B), mm), gen(Gen::C));
          Elem t2 = mul(mul(gen(Gen::A), mm), gen(Gen::D));
          for (const auto& [n, cv] : t1) add_term(r, n, -ctx.qpow(-1) * sigma.mu * cv);
          for (const auto& [n, cv] : t2) add_term(r, n, sigma.lambda * cv);
          break;
        }
      }
    }
    return r;
  }

  Elem act(const Elem& x, const Elem& y, const Automorphism& sigma) const {
    Elem r;
    for (const auto& [n, c] : y) {
      Elem t = elem_scale(x, c);
      for_word(n, [&](Gen g) { t = act_gen(t, g, sigma); });
      for (const auto& [m, cv] : t) add_term(r, m, cv);
    }
    return r;
  }

  // Independent implementation straight from the Hopf-algebraic definition,
  // used to cross-check the closed forms.
  Elem act_hopf(const Elem& x, const Elem& y, const Automorphism& sigma) const {
    Elem r;
    for (const auto& [n, c] : y)
      for (const auto& [p, cv] : coproduct(n)) {
        Elem left = sigma.apply(antipode(monomial_elem(p.second)));
        Elem t = mul(mul(left, x), monomial_elem(p.first));
        for (const auto& [m, cm] : t) add_term(r, m, c * cv * cm);
      }
    return r;
  }

  Elem monomial_elem(const Monomial& m) const {
    Elem e;
    e.emplace(m, ctx.one());
    return e;
  }

 private:
  TensorSq gen_coproduct(Gen g) const {
    TensorSq r;
    Monomial a{1, 0, 0}, b{0, 1, 0}, c{0, 0, 1}, d{-1, 0, 0};
    switch (g) {
      case Gen::A:
        add_tensor(r, a, a, ctx.one());
        add_tensor(r, b, c, ctx.one());
        break;
      case Gen::B:
        add_tensor(r, a, b, ctx.one());
        add_tensor(r, b, d, ctx.one());
        break;
      case Gen::C:
        add_tensor(r, c, a, ctx.one());
        add_tensor(r, d, c, ctx.one());
        break;
      default:
        add_tensor(r, c, b, ctx.one());
        add_tensor(r, d, d, ctx.one());
        break;
    }
    return r;
  }

  mutable std::map<Monomial, TensorSq> coproduct_cache_;
  mutable std::map<Monomial, Elem> antipode_cache_;
};

// ---------------------------------------------------------------------------
// Derivations.  The diagonal ones scale basis monomials; the twisted one
// satisfies the sigma-Leibniz rule with sigma = sigma_{lambda,1}; an inner
// derivation is a commutator.
// ---------------------------------------------------------------------------

struct Derivation {
  enum class Kind { DegA, DegB, Deg0, Twisted, Inner };

  Kind kind = Kind::DegA;
  Scalar lambda;  // Twisted only
  Elem inner;     // Inner only

  static Derivation deg_a() { return {Kind::DegA, {}, {}}; }
  static Derivation deg_b() { return {Kind::DegB, {}, {}}; }
  static Derivation deg_0() { return {Kind::Deg0, {}, {}}; }
  static Derivation twisted(Scalar lam) { return {Kind::Twisted, std::move(lam), {}}; }
  static Derivation commutator(Elem x) { return {Kind::Inner, {}, std::move(x)}; }

  bool diagonal() const { return kind != Kind::Inner; }

  Scalar diagonal_coeff(const QContext& ctx, const Monomial& m) const {
    switch (kind) {
      case Kind::DegA: return ctx.integer(m.i);
      case Kind::DegB: return ctx.integer(m.j - m.k);
      case Kind::Deg0: return ctx.integer(m.i + m.j - m.k);
      case Kind::Twisted: {
        // geometric sums: [i]_lambda for i >= 0, else -(lambda^{-1}+...+lambda^{i})
        Scalar s = ctx.zero();
        if (m.i >= 0)
          for (long t = 0; t < m.i; t++) s = s + lambda.pow(t);
        else
          for (long t = 1; t <= -m.i; t++) s = s - lambda.pow(-t);
        return s;
      }
      default: throw std::logic_error("inner derivation is not diagonal");
    }
  }

  Elem apply(const Algebra& A, const Elem& x) const {
    if (kind == Kind::Inner) return elem_sub(A.mul(inner, x), A.mul(x, inner));
    Elem r;
    for (const auto& [m, c] : x) add_term(r, m, c * diagonal_coeff(A.ctx, m));
    return r;
  }
};

// ---------------------------------------------------------------------------
// Text form: signed sums of coeff*a^i*b^j*c^k (d^m for negative a-powers).
// The parser multiplies factors in the order written, so any generator word
// is accepted; the printer emits the PBW normal form, which round-trips.
// ---------------------------------------------------------------------------

inline std::string monomial_str(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  auto emit = [&](const char* g, long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += g;
    if (e != 1) s += "^" + std::to_string(e);
  };
  if (m.i >= 0)
    emit("a", m.i);
  else
    emit("d", -m.i);
  emit("b", m.j);
  emit("c", m.k);
  return s;
}

// A coefficient as a self-delimiting product factor: single monomials and
// (num)/(den) quotients stand alone, other polynomials get parentheses.
inline std::string coeff_factor_str(const Scalar& c) {
  std::string cs = scalar_str(c);
  if (!c.generic()) return cs;
  const auto& f = std::get<RatFunc>(c.v);
  Rat rc;
  long re;
  bool num_mono = poly_is_monomial(f.num, rc, re);
  bool den_one = f.den.degree() == 0;
  if (den_one && !num_mono) return "(" + cs + ")";
  return cs;
}

inline std::string elem_str(const Elem& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : x) {
    std::string cs = coeff_factor_str(c);
    std::string term;
    if (m.is_unit())
      term = cs;
    else if (cs == "1")
      term = monomial_str(m);
    else if (cs == "-1")
      term = "-" + monomial_str(m);
    else
      term = cs + "*" + monomial_str(m);
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += term;
    else
      s += "+" + term;
  }
  return s;
}

namespace detail {

// Splits a sum into signed terms at depth-0 '+'/'-'; spaces act as '*'.
inline std::vector<std::string> split_terms(const std::string& raw) {
  std::string s;
  for (size_t p = 0; p < raw.size(); p++) {
    char ch = raw[p];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      char prev = s.empty() ? '\0' : s.back();
      size_t nx = p;
      while (nx < raw.size() && std::isspace(static_cast<unsigned char>(raw[nx]))) nx++;
      char next = nx < raw.size() ? raw[nx] : '\0';
      auto is_op = [](char c) { return c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ')' || c == '\0'; };
      if (!is_op(prev) && !is_op(next)) s.push_back('*');
      continue;
    }
    s.push_back(ch);
  }
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (size_t p = 0; p < s.size(); p++) {
    char ch = s[p];
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if ((ch == '+' || ch == '-') && depth == 0 && p > 0 && s[p - 1] != '^' && s[p - 1] != '*' &&
        s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-' && s[p - 1] != '(') {
      terms.push_back(cur);
      cur.clear();
    }
    if (!(ch == '+' && cur.empty() && depth == 0)) cur.push_back(ch);
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

inline std::vector<std::string> split_factors(const std::string& term) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : term) {
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if (ch == '*' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline Elem parse_elem(const Algebra& A, const std::string& in) {
  Elem total;
  for (std::string term : detail::split_terms(in)) {
    bool neg = false;
    if (!term.empty() && term[0] == '-') {
      neg = true;
      term.erase(0, 1);
    }
    if (term.empty()) throw std::invalid_argument("empty term in element '" + in + "'");
    Scalar coeff = A.ctx.one();
    Elem mono = A.unit();
    std::string scalar_part;
    // a '/' after a parenthesized factor binds it to the next factor as a quotient
    auto factors = detail::split_factors(term);
    for (size_t idx = 0; idx < factors.size(); idx++) {
      const std::string& f = factors[idx];
      if (f.empty()) throw std::invalid_argument("empty factor in '" + in + "'");
      char h = f[0];
      if (h == 'a' || h == 'b' || h == 'c' || h == 'd') {
        long e = 1;
        if (f.size() > 1) {
          if (f[1] != '^') throw std::invalid_argument("bad generator factor '" + f + "'");
          e = std::stol(f.substr(2));
          if (e < 0) throw std::invalid_argument("negative generator power in '" + f + "'");
        }
        Gen g = h == 'a' ? Gen::A : h == 'b' ? Gen::B : h == 'c' ? Gen::C : Gen::D;
        for (long t = 0; t < e; t++) mono = A.rmul_gen(mono, g);
      } else {
        if (!scalar_part.empty()) scalar_part += "*";
        scalar_part += f;
      }
    }
    if (!scalar_part.empty()) coeff = parse_scalar(A.ctx, scalar_part);
    if (neg) coeff = -coeff;
    for (const auto& [m, c] : mono) add_term(total, m, c * coeff);
  }
  return total;
}

}  // namespace qsl2
