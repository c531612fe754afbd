#pragma once

// Operators on the twisted Hochschild and cyclic chain complexes: faces,
// boundary, cyclic permutation, the extra degeneracy, the B operator in
// composite and normalized form, the boundary of the coefficient-module
// complex, and the translation maps between the two complexes.  Cochains
// built from twisted traces and derivation towers live here as well,
// together with pairing and windowed cocycle verification.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl2/algebra.hpp"

namespace qsl2 {

// A chain of arity n is a linear combination of (n+1)-tuples of basis
// monomials.  Products appearing in the operators are expanded back into
// monomial tuples immediately.
struct Chain {
  long arity = 0;
  std::map<std::vector<Monomial>, Scalar> terms;
};

inline void add_tuple(Chain& ch, const std::vector<Monomial>& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = ch.terms.emplace(t, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) ch.terms.erase(it);
  }
}

inline Chain chain_add(const Chain& a, const Chain& b) {
  if (a.arity != b.arity) throw std::logic_error("chain arity mismatch");
  Chain r = a;
  for (const auto& [t, c] : b.terms) add_tuple(r, t, c);
  return r;
}

inline Chain chain_scale(const Chain& a, const Scalar& s) {
  Chain r{a.arity, {}};
  for (const auto& [t, c] : a.terms) add_tuple(r, t, c * s);
  return r;
}

inline Chain chain_sub(const Chain& a, const Chain& b) {
  if (a.arity != b.arity) throw std::logic_error("chain arity mismatch");
  Chain r = a;
  for (const auto& [t, c] : b.terms) add_tuple(r, t, -c);
  return r;
}

inline bool chain_is_zero(const Chain& a) { return a.terms.empty(); }

inline bool chain_eq(const Chain& a, const Chain& b) { return chain_is_zero(chain_sub(a, b)); }

inline std::string tuple_str(const std::vector<Monomial>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); i++) {
    if (i) s += ", ";
    s += monomial_str(t[i]);
  }
  return s + ")";
}

inline std::string chain_str(const Chain& ch) {
  if (ch.terms.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : ch.terms) {
    std::string cs = coeff_factor_str(c);
    std::string term;
    if (cs == "1")
      term = tuple_str(t);
    else if (cs == "-1")
      term = "-" + tuple_str(t);
    else
      term = cs + "*" + tuple_str(t);
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// Chain-level operators for a fixed twisting automorphism.
class ChainOps {
 public:
  ChainOps(const Algebra& algebra, const Automorphism& twist) : A(algebra), sigma(twist) {}

  const Algebra& A;
  Automorphism sigma;

  // Face i of an arity-n chain: multiply slots i and i+1 for i < n, and
  // rotate the twisted last slot onto the front for i = n.
  Chain face(const Chain& ch, long i) const {
    long n = ch.arity;
    if (n < 1 || i < 0 || i > n) throw std::logic_error("face index out of range");
    Chain out{n - 1, {}};
    for (const auto& [t, c] : ch.terms) {
      if (i < n) {
        Elem prod = A.mul(A.monomial_elem(t[i]), A.monomial_elem(t[i + 1]));
        std::vector<Monomial> prefix(t.begin(), t.begin() + i);
        std::vector<Monomial> suffix(t.begin() + i + 2, t.end());
        emit(out, prefix, prod, suffix, c);
      } else {
        Elem prod = A.mul(A.monomial_elem(t[n]), A.monomial_elem(t[0]));
        std::vector<Monomial> suffix(t.begin() + 1, t.begin() + n);
        emit(out, {}, prod, suffix, c * sigma.coeff(t[n]));
      }
    }
    return out;
  }

  Chain boundary(const Chain& ch) const {
    Chain out{ch.arity - 1, {}};
    for (long i = 0; i <= ch.arity; i++)
      out = chain_add(out, signed_copy(face(ch, i), i));
    return out;
  }

  Chain cyclic_t(const Chain& ch) const {
    long n = ch.arity;
    Chain out{n, {}};
    for (const auto& [t, c] : ch.terms) {
      std::vector<Monomial> r;
      r.push_back(t[static_cast<size_t>(n)]);
      r.insert(r.end(), t.begin(), t.begin() + n);
      add_tuple(out, r, c * sigma.coeff(t[static_cast<size_t>(n)]));
    }
    return out;
  }

  // t^{n+1} twists every slot and returns the tuple to its original order.
  Chain cyclic_T(const Chain& ch) const {
    Chain out{ch.arity, {}};
    for (const auto& [t, c] : ch.terms) {
      Scalar f = c;
      for (const Monomial& m : t) f = f * sigma.coeff(m);
      add_tuple(out, t, f);
    }
    return out;
  }

  Chain extra_degeneracy(const Chain& ch) const {
    Chain out{ch.arity + 1, {}};
    for (const auto& [t, c] : ch.terms) {
      std::vector<Monomial> r;
      r.push_back(Monomial{0, 0, 0});
      r.insert(r.end(), t.begin(), t.end());
      add_tuple(out, r, c);
    }
    return out;
  }

  Chain norm_sum(const Chain& ch) const {
    long n = ch.arity;
    Chain out{n, {}};
    Chain power = ch;
    for (long j = 0; j <= n; j++) {
      out = chain_add(out, signed_copy(power, n * j));
      if (j < n) power = cyclic_t(power);
    }
    return out;
  }

  // B as the composite (1 + (-1)^n t) s N.
  Chain cyclic_B_composite(const Chain& ch) const {
    long n = ch.arity;
    Chain sn = extra_degeneracy(norm_sum(ch));
    return chain_add(sn, signed_copy(cyclic_t(sn), n));
  }

  // B on the normalized complex, written out term by term.
  Chain cyclic_B(const Chain& ch) const {
    long n = ch.arity;
    Chain out{n + 1, {}};
    for (const auto& [t, c] : ch.terms) {
      for (long i = 1; i <= n + 1; i++) {
        std::vector<Monomial> r;
        r.push_back(Monomial{0, 0, 0});
        Scalar f = c;
        for (long s = i; s <= n; s++) {
          r.push_back(t[static_cast<size_t>(s)]);
          f = f * sigma.coeff(t[static_cast<size_t>(s)]);
        }
        for (long s = 0; s < i; s++) r.push_back(t[static_cast<size_t>(s)]);
        if ((n * i) % 2 != 0) f = -f;
        add_tuple(out, r, f);
      }
    }
    return out;
  }

  // Projection onto the normalized complex: tuples with the unit in any
  // slot past the first are degenerate and vanish there.
  Chain normalize(const Chain& ch) const {
    Chain out{ch.arity, {}};
    for (const auto& [t, c] : ch.terms) {
      bool degenerate = false;
      for (size_t s = 1; s < t.size(); s++)
        if (t[s].is_unit()) degenerate = true;
      if (!degenerate) add_tuple(out, t, c);
    }
    return out;
  }

  // Boundary of the coefficient-module complex M (x) A^{(x) n}: the module
  // action on the left, plain multiplications in the middle, the counit on
  // the right.
  Chain tor_boundary(const Chain& ch) const {
    long n = ch.arity;
    if (n < 1) throw std::logic_error("module boundary needs arity >= 1");
    Chain out{n - 1, {}};
    for (const auto& [t, c] : ch.terms) {
      Elem acted = A.act(A.monomial_elem(t[0]), A.monomial_elem(t[1]), sigma);
      emit(out, {}, acted, std::vector<Monomial>(t.begin() + 2, t.end()), c);
      for (long i = 1; i < n; i++) {
        Elem prod = A.mul(A.monomial_elem(t[i]), A.monomial_elem(t[i + 1]));
        std::vector<Monomial> prefix(t.begin(), t.begin() + i);
        std::vector<Monomial> suffix(t.begin() + i + 2, t.end());
        emit(out, prefix, prod, suffix, i % 2 ? -c : c);
      }
      Scalar eps = A.counit(A.monomial_elem(t[static_cast<size_t>(n)]));
      if (!eps.is_zero()) {
        std::vector<Monomial> r(t.begin(), t.begin() + n);
        Scalar f = eps * c;
        if (n % 2 != 0) f = -f;
        add_tuple(out, r, f);
      }
    }
    return out;
  }

  // Translation from the Hochschild picture to the module picture: absorb
  // the twisted product of second coproduct legs into the left slot.
  Chain to_tor(const Chain& ch) const { return translate(ch, false); }

  // Inverse translation, with the twisted antipode of the product of the
  // second legs; it intertwines the module boundary with the Hochschild
  // boundary.
  Chain from_tor(const Chain& ch) const { return translate(ch, true); }

 private:
  static Chain signed_copy(const Chain& ch, long sign_exponent) {
    if (sign_exponent % 2 == 0) return ch;
    Chain out{ch.arity, {}};
    for (const auto& [t, c] : ch.terms) out.terms.emplace(t, -c);
    return out;
  }

  static void emit(Chain& out, const std::vector<Monomial>& prefix, const Elem& slot,
                   const std::vector<Monomial>& suffix, const Scalar& c) {
    for (const auto& [m, v] : slot) {
      std::vector<Monomial> t = prefix;
      t.push_back(m);
      t.insert(t.end(), suffix.begin(), suffix.end());
      add_tuple(out, t, c * v);
    }
  }

  template <class Fn>
  static void for_combinations(const std::vector<const TensorSq*>& legs, Fn&& fn) {
    if (legs.empty()) return;
    std::vector<TensorSq::const_iterator> pos;
    for (const TensorSq* leg : legs) {
      if (leg->empty()) return;
      pos.push_back(leg->begin());
    }
    while (true) {
      fn(pos);
      long s = static_cast<long>(pos.size()) - 1;
      while (s >= 0) {
        ++pos[static_cast<size_t>(s)];
        if (pos[static_cast<size_t>(s)] != legs[static_cast<size_t>(s)]->end()) break;
        pos[static_cast<size_t>(s)] = legs[static_cast<size_t>(s)]->begin();
        s--;
      }
      if (s < 0) break;
    }
  }

  Chain translate(const Chain& ch, bool with_antipode) const {
    long n = ch.arity;
    if (n == 0) return ch;
    Chain out{n, {}};
    for (const auto& [t, c] : ch.terms) {
      std::vector<const TensorSq*> legs;
      for (long s = 1; s <= n; s++) legs.push_back(&A.coproduct(t[static_cast<size_t>(s)]));
      for_combinations(legs, [&](const std::vector<TensorSq::const_iterator>& pos) {
        Scalar f = c;
        Elem w = A.unit();
        std::vector<Monomial> suffix;
        for (const auto& it : pos) {
          f = f * it->second;
          suffix.push_back(it->first.first);
          w = A.mul(w, A.monomial_elem(it->first.second));
        }
        if (f.is_zero()) return;
        Elem head = with_antipode ? A.antipode(w) : w;
        Elem slot0 = A.mul(sigma.apply(head), A.monomial_elem(t[0]));
        emit(out, {}, slot0, suffix, f);
      });
    }
    return out;
  }
};

// Linear functional on the algebra.  The power-trace family is supported on
// the monomials b^j c^k with a fixed difference j - k and is determined by
// a twist parameter; the point family is the delta functional at one basis
// monomial.
class Functional {
 public:
  enum class Kind { Zero, Pow, Point };

  Functional() = default;

  static Functional pow_trace(const QContext& ctx, long w, const Scalar& lambda) {
    Functional f;
    f.kind_ = Kind::Pow;
    f.ctx_ = ctx;
    f.w_ = w;
    f.lambda_ = lambda;
    if (!f.pole(0).is_zero()) {
      for (long m = 1; m <= 256; m++)
        if (f.pole(m).is_zero())
          throw std::domain_error("power trace undefined: the recursion hits a pole");
    }
    return f;
  }

  static Functional point(const QContext& ctx, const Monomial& m) {
    Functional f;
    f.kind_ = Kind::Point;
    f.ctx_ = ctx;
    f.support_ = m;
    return f;
  }

  Scalar value(const Monomial& m) const {
    switch (kind_) {
      case Kind::Zero: throw std::logic_error("evaluating an empty functional");
      case Kind::Point: return m == support_ ? ctx_.one() : ctx_.zero();
      case Kind::Pow: break;
    }
    if (m.i != 0 || m.j - m.k != w_) return ctx_.zero();
    long depth = m.j < m.k ? m.j : m.k;
    if (depth == 0) return ctx_.one();
    Scalar num = pole(0);
    if (num.is_zero()) return ctx_.zero();
    Scalar v = ctx_.qpow(-depth) * num / pole(depth);
    if (depth % 2 != 0) v = -v;
    return v;
  }

  Scalar value(const Elem& e) const {
    Scalar s = ctx_.zero();
    for (const auto& [m, c] : e) s = s + c * value(m);
    return s;
  }

 private:
  Scalar pole(long depth) const {
    long w = w_ < 0 ? -w_ : w_;
    return lambda_ - ctx_.qpow(-(w + 2 * depth));
  }

  Kind kind_ = Kind::Zero;
  QContext ctx_;
  long w_ = 0;
  Scalar lambda_;
  Monomial support_;
};

// Cochains of two shapes: a base functional composed with a tower of
// derivations, one derivation per slot past the first, or a degree-one
// cochain given by its values on (element, generator) pairs and extended
// by the cocycle recursion
//   phi(x, m g) = phi(x m, g) + phi(sigma(g) x, m).
struct Cochain {
  enum class Kind { Tower, Table };

  Kind kind = Kind::Tower;
  long degree = 0;
  Functional base;
  std::vector<Derivation> towers;
  Automorphism sigma;
  std::map<Gen, std::map<Monomial, Scalar>> table;

  static Cochain tower(Functional b, std::vector<Derivation> ds) {
    Cochain c;
    c.kind = Kind::Tower;
    c.degree = static_cast<long>(ds.size());
    c.base = std::move(b);
    c.towers = std::move(ds);
    return c;
  }

  static Cochain from_table(const Automorphism& s,
                            std::map<Gen, std::map<Monomial, Scalar>> t) {
    Cochain c;
    c.kind = Kind::Table;
    c.degree = 1;
    c.sigma = s;
    c.table = std::move(t);
    return c;
  }

  Scalar value(const Algebra& A, const std::vector<Monomial>& t) const {
    if (static_cast<long>(t.size()) != degree + 1)
      throw std::logic_error("cochain degree does not match the tuple");
    if (kind == Kind::Tower) {
      Elem prod = A.monomial_elem(t[0]);
      for (long s = 0; s < degree; s++)
        prod = A.mul(prod, towers[static_cast<size_t>(s)].apply(
                               A, A.monomial_elem(t[static_cast<size_t>(s + 1)])));
      return base.value(prod);
    }
    return table_value(A, A.monomial_elem(t[0]), t[1]);
  }

 private:
  Scalar table_lookup(const Algebra& A, Gen g, const Elem& x) const {
    auto git = table.find(g);
    if (git == table.end()) return A.ctx.zero();
    Scalar s = A.ctx.zero();
    for (const auto& [m, c] : x) {
      auto it = git->second.find(m);
      if (it != git->second.end()) s = s + c * it->second;
    }
    return s;
  }

  static std::pair<Monomial, Gen> split_last(const Monomial& m) {
    if (m.k > 0) return {Monomial{m.i, m.j, m.k - 1}, Gen::C};
    if (m.j > 0) return {Monomial{m.i, m.j - 1, 0}, Gen::B};
    if (m.i > 0) return {Monomial{m.i - 1, 0, 0}, Gen::A};
    return {Monomial{m.i + 1, 0, 0}, Gen::D};
  }

  static Monomial gen_monomial(Gen g) {
    switch (g) {
      case Gen::A: return {1, 0, 0};
      case Gen::B: return {0, 1, 0};
      case Gen::C: return {0, 0, 1};
      default: return {-1, 0, 0};
    }
  }

  Scalar table_value(const Algebra& A, const Elem& x, const Monomial& m) const {
    if (m.is_unit()) return A.ctx.zero();
    auto [head, g] = split_last(m);
    Scalar first = table_lookup(A, g, head.is_unit() ? x : A.mul(x, A.monomial_elem(head)));
    if (head.is_unit()) return first;
    Monomial gm = gen_monomial(g);
    Elem twisted = elem_scale(A.mul(A.monomial_elem(gm), x), sigma.coeff(gm));
    return first + table_value(A, twisted, head);
  }
};

inline Scalar pairing(const Algebra& A, const Cochain& phi, const Chain& ch) {
  if (phi.degree != ch.arity) throw std::logic_error("pairing degree mismatch");
  Scalar s = A.ctx.zero();
  for (const auto& [t, c] : ch.terms) s = s + c * phi.value(A, t);
  return s;
}

inline std::vector<Monomial> monomial_window(long I, long L) {
  std::vector<Monomial> w;
  for (long i = -I; i <= I; i++)
    for (long j = 0; j <= L; j++)
      for (long k = 0; j + k <= L; k++) w.push_back({i, j, k});
  return w;
}

template <class Fn>
void for_tuples(const std::vector<Monomial>& window, long slots, Fn&& fn) {
  if (window.empty() || slots <= 0) return;
  std::vector<size_t> idx(static_cast<size_t>(slots), 0);
  while (true) {
    std::vector<Monomial> t;
    for (size_t p : idx) t.push_back(window[p]);
    fn(t);
    long s = slots - 1;
    while (s >= 0) {
      idx[static_cast<size_t>(s)]++;
      if (idx[static_cast<size_t>(s)] < window.size()) break;
      idx[static_cast<size_t>(s)] = 0;
      s--;
    }
    if (s < 0) break;
  }
}

// The cochain kills every boundary of a one-term chain drawn from the
// window.
inline bool is_cocycle_on_window(const Algebra& A, const ChainOps& ops, const Cochain& phi,
                                 const std::vector<Monomial>& window) {
  bool ok = true;
  for_tuples(window, phi.degree + 2, [&](const std::vector<Monomial>& t) {
    if (!ok) return;
    Chain ch{phi.degree + 1, {}};
    add_tuple(ch, t, A.ctx.one());
    ok = pairing(A, phi, ops.boundary(ch)).is_zero();
  });
  return ok;
}

// <phi, t(ch)> = (-1)^n <phi, ch> for every one-term chain from the window.
inline bool is_cyclic_on_window(const Algebra& A, const ChainOps& ops, const Cochain& phi,
                                const std::vector<Monomial>& window) {
  bool ok = true;
  for_tuples(window, phi.degree + 1, [&](const std::vector<Monomial>& t) {
    if (!ok) return;
    Chain ch{phi.degree, {}};
    add_tuple(ch, t, A.ctx.one());
    Scalar lhs = pairing(A, phi, ops.cyclic_t(ch));
    Scalar rhs = pairing(A, phi, ch);
    if (phi.degree % 2 != 0) rhs = -rhs;
    ok = (lhs - rhs).is_zero();
  });
  return ok;
}

}  // namespace qsl2
