#pragma once

// Windowed twisted homology of the quantum SL(2) coordinate algebra.
//
// All computations run inside the finite window |i| <= I, j + k <= L of the
// basis e_{i,j,k}.  Multiplication and every boundary operator used here
// preserve the joint grading (i, j - k), so each question decomposes into
// independent slices.  Dimensions are reported on a sub-window a margin of
// bc-levels below the truncation, with images fed from the full window, so
// boundaries entering from the margin are counted.  Certificates (preimages,
// boundary identities, pairings) are re-verified exactly before they are
// reported.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsl2/algebra.hpp"
#include "qsl2/chains.hpp"
#include "qsl2/exactla.hpp"
#include "qsl2/koszul.hpp"

namespace qsl2 {

// ---------------------------------------------------------------------------
// Parameter classification
// ---------------------------------------------------------------------------

// Recognizes s = q^n for an integer n of bounded magnitude.
inline std::optional<long> q_exponent(const QContext& ctx, const Scalar& s,
                                      long bound = 256) {
  for (long n = -bound; n <= bound; n++)
    if ((s - ctx.qpow(n)).is_zero()) return n;
  return std::nullopt;
}

enum class TwistCase { One = 1, Two, Three, Four, Five };

inline std::string twist_case_str(TwistCase c) {
  switch (c) {
    case TwistCase::One: return "1";
    case TwistCase::Two: return "2";
    case TwistCase::Three: return "3";
    case TwistCase::Four: return "4";
    case TwistCase::Five: return "5";
  }
  return "?";
}

// The twist (lambda, mu) falls into one of five regimes.  N and M are the
// resonance indices of lambda and mu when the regime defines them.
struct CaseInfo {
  TwistCase twist_case = TwistCase::Five;
  long N = -1;
  long M = -1;
};

inline CaseInfo classify_case(const QContext& ctx, const Scalar& lambda,
                              const Scalar& mu) {
  bool mu_one = (mu - ctx.one()).is_zero();
  bool la_one = (lambda - ctx.one()).is_zero();
  std::optional<long> el = q_exponent(ctx, lambda);
  std::optional<long> em = q_exponent(ctx, mu);
  if (mu_one) {
    if (el && *el <= -2) return {TwistCase::Two, -*el - 2, -1};
    return {TwistCase::One, -1, -1};
  }
  if (la_one) return {TwistCase::One, -1, -1};
  if (em && *em >= 1 && el && *el <= -1) return {TwistCase::Three, -*el - 1, *em - 1};
  if (em && *em <= -1 && el && *el <= -1)
    return {TwistCase::Four, -*el - 1, -*em - 1};
  return {TwistCase::Five, -1, -1};
}

// Expected dimensions of the homology in degrees 0..3; -1 marks a row that
// is infinite-dimensional, where a window can only exhibit growth.
inline std::array<long, 4> expected_dims(const CaseInfo& info) {
  switch (info.twist_case) {
    case TwistCase::One: return {-1, -1, 0, 0};
    case TwistCase::Two: return {-1, -1, info.N + 1, info.N + 1};
    case TwistCase::Three:
    case TwistCase::Four: return {2, 4, 2, 0};
    case TwistCase::Five: return {0, 0, 0, 0};
  }
  return {0, 0, 0, 0};
}

// ---------------------------------------------------------------------------
// Windows and graded slices
// ---------------------------------------------------------------------------

// Truncation parameters: the window keeps |i| <= I and bc-level j + k <= L,
// and dimensions are read off at bc-level <= L - margin.
struct Window {
  long I = 6;
  long L = 12;
  long margin = 2;
};

// Joint grading (i, j - k) preserved by multiplication and boundaries.
struct Bidegree {
  long i = 0;
  long w = 0;
  auto operator<=>(const Bidegree&) const = default;
};

inline Bidegree bidegree_of(const Monomial& m) { return {m.i, m.j - m.k}; }

// Basis monomials of one bidegree with bc-level at most L and |i| <= I,
// listed by increasing level.
inline std::vector<Monomial> slice_monomials(Bidegree deg, long I, long L) {
  std::vector<Monomial> out;
  if (deg.i < -I || deg.i > I) return out;
  for (long j = std::max(deg.w, 0L); 2 * j - deg.w <= L; j++)
    out.push_back({deg.i, j, j - deg.w});
  return out;
}

// Bidegree shift contributed by each coordinate slot of the induced complex:
// a slot-p monomial of bidegree beta feeds the output slice beta + offset.
inline Bidegree slot_offset(long n, long p) {
  static const std::vector<std::vector<Bidegree>> table = {
      {{0, 0}},
      {{0, 0}, {1, 1}, {-1, -1}},
      {{1, 1}, {-1, -1}, {0, 0}},
      {{0, 0}},
  };
  return table.at(static_cast<size_t>(n)).at(static_cast<size_t>(p));
}

// One coordinate of a term of the induced complex: slot index and monomial.
using SlotKey = std::pair<long, Monomial>;

namespace detail {

// Slot basis of one slice of the degree-n term, restricted to the window.
inline std::vector<SlotKey> slice_slot_basis(long n, Bidegree slice, long I, long L) {
  std::vector<SlotKey> keys;
  for (long p = 0; p < Koszul::dim(n); p++) {
    Bidegree off = slot_offset(n, p);
    for (const Monomial& m :
         slice_monomials({slice.i - off.i, slice.w - off.w}, I, L))
      keys.push_back({p, m});
  }
  return keys;
}

inline SparseCol induced_column(const InducedComplex& cx, Indexer<SlotKey>& rows,
                                long n, const SlotKey& key) {
  std::vector<Elem> coeffs(static_cast<size_t>(Koszul::dim(n)));
  coeffs[static_cast<size_t>(key.first)] = cx.A.monomial_elem(key.second);
  std::vector<Elem> img = cx.map(n, coeffs);
  SparseCol col;
  for (long p = 0; p < Koszul::dim(n - 1); p++)
    for (const auto& [m, c] : img[static_cast<size_t>(p)])
      col[rows.intern({p, m})] = c;
  return col;
}

inline SparseCol elem_column(Indexer<Monomial>& rows, const Elem& e) {
  SparseCol col;
  for (const auto& [m, c] : e) col[rows.intern(m)] = c;
  return col;
}

inline SparseCol chain_column(Indexer<std::vector<Monomial>>& rows, const Chain& ch) {
  SparseCol col;
  for (const auto& [t, c] : ch.terms) col[rows.intern(t)] = c;
  return col;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dimension tables
// ---------------------------------------------------------------------------

struct SliceDims {
  long kernel = 0;
  long image = 0;
};

// Homology of one slice in one degree: cycles are counted exactly on the
// reported sub-window (level <= Lr), boundaries come from the full window
// (level <= L) and are intersected with the reported sub-window.
inline SliceDims slice_homology(const InducedComplex& cx, long n, Bidegree slice,
                                long I, long L, long Lr,
                                std::vector<Elem>* kernel_gens = nullptr) {
  SliceDims out;
  std::vector<SlotKey> rep = detail::slice_slot_basis(n, slice, I, Lr);
  if (rep.empty()) return out;
  if (n == 0) {
    out.kernel = static_cast<long>(rep.size());
  } else {
    Indexer<SlotKey> rows;
    ColumnReducer red(cx.A.ctx);
    for (const SlotKey& key : rep)
      red.append(detail::induced_column(cx, rows, n, key));
    out.kernel = static_cast<long>(rep.size()) - red.rank();
    if (kernel_gens) {
      for (const SparseCol& combo : red.kernels()) {
        Elem gen;
        for (const auto& [idx, c] : combo)
          add_term(gen, rep[static_cast<size_t>(idx)].second, c);
        kernel_gens->push_back(std::move(gen));
      }
    }
  }
  if (n < 3) {
    // Boundaries are sourced two i-columns beyond the reported window so the
    // image is not starved at the i-extremes; cycles need no cushion because
    // their columns carry full row support.
    Indexer<SlotKey> rows;
    for (const SlotKey& key : rep) rows.intern(key);
    ColumnReducer red(cx.A.ctx);
    for (const SlotKey& key : detail::slice_slot_basis(n + 1, slice, I + 2, L))
      red.append(detail::induced_column(cx, rows, n + 1, key));
    long extra = 0;
    for (long t = 0; t < static_cast<long>(rep.size()); t++) {
      SparseCol unit;
      unit[t] = cx.A.ctx.one();
      if (red.append(unit)) extra++;
    }
    out.image = static_cast<long>(rep.size()) - extra;
  }
  return out;
}

struct DegreeReport {
  long expected = 0;   // -1 when the row is infinite-dimensional
  long dim = 0;        // window dimension at bc-level cap L
  long dim_reduced = 0;  // same computation at cap L - 2
  std::string verdict;   // ok | mismatch | unstable | growing | saturated
  std::vector<std::pair<Bidegree, long>> slices;  // nonzero contributions at cap L
};

struct DimReport {
  CaseInfo info;
  Window window;
  std::array<DegreeReport, 4> degree;
  std::vector<std::string> degree3_generators;
  bool ok = true;
};

inline DimReport hh_dims(const Algebra& A, const Automorphism& sigma,
                         const Window& win = {}) {
  DimReport rep;
  rep.info = classify_case(A.ctx, sigma.lambda, sigma.mu);
  rep.window = win;
  std::array<long, 4> exp = expected_dims(rep.info);
  InducedComplex cx(A, sigma);
  std::array<std::array<long, 4>, 2> totals{};
  for (long pass = 0; pass < 2; pass++) {
    long L = win.L - 2 * pass;
    long Lr = L - win.margin;
    for (long i0 = -(win.I + 1); i0 <= win.I + 1; i0++) {
      for (long w0 = -(Lr + 1); w0 <= Lr + 1; w0++) {
        Bidegree slice{i0, w0};
        for (long n = 0; n <= 3; n++) {
          std::vector<Elem> gens;
          SliceDims sd = slice_homology(cx, n, slice, win.I, L, Lr,
                                        pass == 0 && n == 3 ? &gens : nullptr);
          long contrib = sd.kernel - sd.image;
          if (contrib < 0)
            throw std::logic_error("windowed image exceeds the windowed kernel");
          totals[static_cast<size_t>(pass)][static_cast<size_t>(n)] += contrib;
          if (pass == 0 && contrib > 0)
            rep.degree[static_cast<size_t>(n)].slices.push_back({slice, contrib});
          if (pass == 0 && n == 3 && contrib > 0)
            for (const Elem& g : gens) rep.degree3_generators.push_back(elem_str(g));
        }
      }
    }
  }
  for (long n = 0; n <= 3; n++) {
    DegreeReport& d = rep.degree[static_cast<size_t>(n)];
    d.expected = exp[static_cast<size_t>(n)];
    d.dim = totals[0][static_cast<size_t>(n)];
    d.dim_reduced = totals[1][static_cast<size_t>(n)];
    if (d.expected < 0) {
      d.verdict = d.dim > d.dim_reduced ? "growing" : "saturated";
    } else if (d.dim != d.dim_reduced) {
      d.verdict = "unstable";
      rep.ok = false;
    } else if (d.dim != d.expected) {
      d.verdict = "mismatch";
      rep.ok = false;
    } else {
      d.verdict = "ok";
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Degree-zero boundary span
// ---------------------------------------------------------------------------

// Degree-0 boundary of the pair (x, g): x g - sigma(g) x.
inline Elem hh0_family(const Algebra& A, const Automorphism& sigma,
                       const Monomial& x, Gen g) {
  Elem xe = A.monomial_elem(x);
  Elem ge = A.gen(g);
  Monomial gm = ge.begin()->first;
  return elem_sub(A.mul(xe, ge), elem_scale(A.mul(ge, xe), sigma.coeff(gm)));
}

namespace detail {

inline Bidegree gen_bidegree(Gen g) {
  switch (g) {
    case Gen::A: return {1, 0};
    case Gen::B: return {0, 1};
    case Gen::C: return {0, -1};
    default: return {-1, 0};
  }
}

// The reduced spanning set of the degree-0 boundaries on one slice: in the
// i = 0 column the two-term ladder elements and the (1 - mu) multiples, for
// i != 0 the interior monomials together with single-term multiples from
// each generator family.  Targets run over |i| <= I, bc-level <= L.
inline std::vector<Elem> hh0_reduced_items(const Algebra& A, const Automorphism& sigma,
                                           Bidegree slice, long I, long L) {
  const QContext& ctx = A.ctx;
  const Scalar& la = sigma.lambda;
  const Scalar& mu = sigma.mu;
  std::vector<Elem> items;
  for (const Monomial& m : slice_monomials(slice, I, L)) {
    long lev = m.level();
    if (m.i == 0) {
      Elem two = A.monomial(0, m.j, m.k, ctx.one() - la * ctx.qpow(lev));
      two = elem_add(two, A.monomial(0, m.j + 1, m.k + 1,
                                     ctx.qpow(-1) - la * ctx.qpow(lev + 1)));
      if (!two.empty()) items.push_back(two);
      if (lev > 0) {
        Elem e = A.monomial(0, m.j, m.k, ctx.one() - mu);
        if (!e.empty()) items.push_back(e);
      }
    } else {
      if (m.j > 0 && m.k > 0) items.push_back(A.monomial_elem(m));
      Elem ea = A.monomial(m.i, m.j, m.k, ctx.one() - la * ctx.qpow(lev));
      if (!ea.empty()) items.push_back(ea);
      if (m.j > 0 && m.k == 0) {
        Elem eb = A.monomial(m.i, m.j, 0, ctx.one() - mu * ctx.qpow(-m.i));
        if (!eb.empty()) items.push_back(eb);
      }
      if (m.j == 0 && m.k > 0) {
        Elem ec = A.monomial(m.i, 0, m.k, ctx.one() - mu.inv() * ctx.qpow(-m.i));
        if (!ec.empty()) items.push_back(ec);
      }
    }
  }
  return items;
}

}  // namespace detail

// Exact identities between the generator families: the i = -1 a-family is
// proportional to the i = +1 d-family, the a- and d-families agree modulo
// interior monomials, and the i = 0 b- and c-families are proportional.
inline bool hh0_identities_ok(const Algebra& A, const Automorphism& sigma,
                              long grid = 3) {
  const QContext& ctx = A.ctx;
  const Scalar& la = sigma.lambda;
  const Scalar& mu = sigma.mu;
  auto drop_interior = [](const Elem& e) {
    Elem r;
    for (const auto& [m, c] : e)
      if (!(m.i != 0 && m.j > 0 && m.k > 0)) add_term(r, m, c);
    return r;
  };
  for (long j = 0; j <= grid; j++) {
    for (long k = 0; k <= grid; k++) {
      long lev = j + k;
      Elem lhs = elem_add(hh0_family(A, sigma, {-1, j, k}, Gen::A),
                          elem_scale(hh0_family(A, sigma, {1, j, k}, Gen::D),
                                     la * ctx.qpow(-lev)));
      if (!lhs.empty()) return false;
      if (j >= 1) {
        Elem cf = hh0_family(A, sigma, {0, j, k}, Gen::C);
        Elem bf = hh0_family(A, sigma, {0, j - 1, k + 1}, Gen::B);
        if (!elem_add(cf, elem_scale(bf, mu.inv())).empty()) return false;
      }
      for (long i = -grid; i <= grid; i++) {
        Elem bf = hh0_family(A, sigma, {i, j, k}, Gen::B);
        if (!elem_eq(bf, A.monomial(i, j + 1, k, ctx.one() - mu * ctx.qpow(-i))))
          return false;
        Elem cf = hh0_family(A, sigma, {i, j, k}, Gen::C);
        if (!elem_eq(cf, A.monomial(i, j, k + 1, ctx.one() - mu.inv() * ctx.qpow(-i))))
          return false;
        if (i != -1) {
          Elem af = drop_interior(hh0_family(A, sigma, {i, j, k}, Gen::A));
          Elem rhs = drop_interior(A.monomial(i + 1, j, k, ctx.qpow(-lev) - la));
          if (!elem_eq(af, rhs)) return false;
        }
        if (i != 1) {
          Elem df = drop_interior(hh0_family(A, sigma, {i, j, k}, Gen::D));
          Elem rhs = drop_interior(A.monomial(i - 1, j, k, ctx.qpow(lev) - la.inv()));
          if (!elem_eq(df, rhs)) return false;
        }
      }
    }
  }
  return true;
}

struct HH0Report {
  long expected = 0;     // -1 when infinite-dimensional
  long dim = 0;          // window quotient dimension at cap L
  long dim_reduced = 0;  // same at cap L - 2
  std::vector<Monomial> reps;  // monomials spanning the quotient at cap L
  bool identities_ok = false;
  bool reduction_ok = false;  // families and reduced list span the same slices
  std::string verdict;
  bool ok = true;
};

inline HH0Report hh0_boundary_span(const Algebra& A, const Automorphism& sigma,
                                   const Window& win = {}) {
  const QContext& ctx = A.ctx;
  HH0Report rep;
  CaseInfo info = classify_case(ctx, sigma.lambda, sigma.mu);
  rep.expected = expected_dims(info)[0];
  rep.identities_ok = hh0_identities_ok(A, sigma);
  rep.reduction_ok = true;
  const std::array<Gen, 4> gens{Gen::A, Gen::B, Gen::C, Gen::D};
  for (long pass = 0; pass < 2; pass++) {
    long L = win.L - 2 * pass;
    long Lr = L - win.margin;
    long total = 0;
    for (long i0 = -win.I; i0 <= win.I; i0++) {
      for (long w0 = -Lr; w0 <= Lr; w0++) {
        Bidegree slice{i0, w0};
        std::vector<Monomial> repdom = slice_monomials(slice, win.I, Lr);
        if (repdom.empty()) continue;
        Indexer<Monomial> rows;
        for (const Monomial& m : repdom) rows.intern(m);
        ColumnReducer fam(ctx);
        std::vector<SparseCol> family_cols;
        for (Gen g : gens) {
          Bidegree d = detail::gen_bidegree(g);
          Bidegree src{slice.i - d.i, slice.w - d.w};
          for (const Monomial& x : slice_monomials(src, win.I + 2, L + 4)) {
            SparseCol col = detail::elem_column(rows, hh0_family(A, sigma, x, g));
            if (col.empty()) continue;
            if (x.i >= -win.I && x.i <= win.I && x.level() <= L - 2)
              family_cols.push_back(col);
            fam.append(col);
          }
        }
        long extra = 0;
        for (long t = 0; t < static_cast<long>(repdom.size()); t++) {
          SparseCol unit;
          unit[t] = ctx.one();
          if (fam.append(unit)) {
            extra++;
            if (pass == 0) rep.reps.push_back(repdom[static_cast<size_t>(t)]);
          }
        }
        total += extra;
        if (pass == 0) {
          ColumnReducer items(ctx);
          std::vector<SparseCol> item_cols;
          for (const Elem& it :
               detail::hh0_reduced_items(A, sigma, slice, win.I + 1, L)) {
            SparseCol col = detail::elem_column(rows, it);
            item_cols.push_back(col);
            items.append(col);
          }
          for (const SparseCol& col : item_cols)
            if (!fam.contains(col)) rep.reduction_ok = false;
          for (const SparseCol& col : family_cols)
            if (!items.contains(col)) rep.reduction_ok = false;
        }
      }
    }
    if (pass == 0)
      rep.dim = total;
    else
      rep.dim_reduced = total;
  }
  std::sort(rep.reps.begin(), rep.reps.end());
  if (rep.expected < 0) {
    rep.verdict = rep.dim > rep.dim_reduced ? "growing" : "saturated";
  } else if (rep.dim != rep.dim_reduced) {
    rep.verdict = "unstable";
    rep.ok = false;
  } else if (rep.dim != rep.expected) {
    rep.verdict = "mismatch";
    rep.ok = false;
  } else {
    rep.verdict = "ok";
  }
  if (!rep.identities_ok || !rep.reduction_ok) rep.ok = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Boundary certificates
// ---------------------------------------------------------------------------

namespace detail {

struct BoundarySolve {
  bool found = false;
  Chain preimage;
  std::vector<Scalar> extras;
  long columns = 0;
};

// Searches for chains P, t with boundary(P) + sum t_e extra_e = z, where P
// runs over tuples that conserve the total bidegree of z and respect level
// and |i| budgets derived from z plus the window margin.
inline BoundarySolve boundary_solve(const Algebra& A, const Automorphism& sigma,
                                    const Chain& z, const Window& win,
                                    const std::vector<Chain>& extras,
                                    long column_cap) {
  const QContext& ctx = A.ctx;
  ChainOps ops(A, sigma);
  BoundarySolve out;
  out.preimage = Chain{z.arity + 1, {}};
  if (chain_is_zero(z)) {
    out.found = true;
    out.extras.assign(extras.size(), ctx.zero());
    return out;
  }
  Bidegree total{0, 0};
  long max_level = 0, max_slot_i = 0, max_sum_i = 0;
  bool first = true;
  for (const auto& [t, c] : z.terms) {
    Bidegree deg{0, 0};
    long lev = 0, sum_i = 0;
    for (const Monomial& m : t) {
      deg.i += m.i;
      deg.w += m.j - m.k;
      lev += m.level();
      sum_i += m.i < 0 ? -m.i : m.i;
      max_slot_i = std::max(max_slot_i, m.i < 0 ? -m.i : m.i);
    }
    if (first) {
      total = deg;
      first = false;
    } else if (!(deg == total)) {
      throw std::invalid_argument("target chain is not bidegree-homogeneous");
    }
    max_level = std::max(max_level, lev);
    max_sum_i = std::max(max_sum_i, sum_i);
  }
  long level_cap = max_level + win.margin;
  long slot_cap = std::min(win.I, max_slot_i + win.margin);
  long sum_cap = max_sum_i + win.margin;

  Indexer<std::vector<Monomial>> rows;
  ColumnReducer red(ctx);
  std::vector<std::vector<Monomial>> appended;
  long nslots = z.arity + 2;
  std::vector<Monomial> slots(static_cast<size_t>(nslots));
  auto emit = [&]() {
    Chain one_tuple{z.arity + 1, {}};
    add_tuple(one_tuple, slots, ctx.one());
    SparseCol col = chain_column(rows, ops.boundary(one_tuple));
    if (col.empty()) return;
    if (static_cast<long>(appended.size()) >= column_cap)
      throw std::runtime_error("boundary search exceeds the column cap");
    appended.push_back(slots);
    red.append(col);
  };
  auto recurse = [&](auto&& self, long s, long acc_i, long acc_w, long acc_lev,
                     long acc_abs) -> void {
    if (s == nslots - 1) {
      long rem_i = total.i - acc_i;
      long abs_rem = rem_i < 0 ? -rem_i : rem_i;
      if (abs_rem > slot_cap || acc_abs + abs_rem > sum_cap) return;
      long rem_w = total.w - acc_w;
      for (long j = std::max(rem_w, 0L); 2 * j - rem_w + acc_lev <= level_cap; j++) {
        slots[static_cast<size_t>(s)] = {rem_i, j, j - rem_w};
        emit();
      }
      return;
    }
    for (long i = -slot_cap; i <= slot_cap; i++) {
      long abs_i = i < 0 ? -i : i;
      if (acc_abs + abs_i > sum_cap) continue;
      for (long j = 0; acc_lev + j <= level_cap; j++) {
        for (long k = 0; acc_lev + j + k <= level_cap; k++) {
          slots[static_cast<size_t>(s)] = {i, j, k};
          self(self, s + 1, acc_i + i, acc_w + (j - k), acc_lev + j + k,
               acc_abs + abs_i);
        }
      }
    }
  };
  recurse(recurse, 0, 0, 0, 0, 0);
  long base = static_cast<long>(appended.size());
  for (const Chain& e : extras) red.append(chain_column(rows, e));
  out.columns = base;
  std::optional<SparseCol> combo = red.express(chain_column(rows, z));
  if (!combo) return out;
  out.found = true;
  out.extras.assign(extras.size(), ctx.zero());
  for (const auto& [idx, c] : *combo) {
    if (idx < base)
      add_tuple(out.preimage, appended[static_cast<size_t>(idx)], c);
    else
      out.extras[static_cast<size_t>(idx - base)] = c;
  }
  return out;
}

}  // namespace detail

// Searches a window for a preimage of z under the twisted Hochschild
// boundary; a found preimage is re-verified exactly before it is returned.
// Throws when the tuple enumeration exceeds the column cap.
inline std::optional<Chain> is_boundary(const Algebra& A, const Automorphism& sigma,
                                        const Chain& z, const Window& win = {},
                                        long column_cap = 20000) {
  ChainOps ops(A, sigma);
  std::map<Bidegree, Chain> parts;
  for (const auto& [t, c] : z.terms) {
    Bidegree deg{0, 0};
    for (const Monomial& m : t) {
      deg.i += m.i;
      deg.w += m.j - m.k;
    }
    auto it = parts.find(deg);
    if (it == parts.end()) it = parts.emplace(deg, Chain{z.arity, {}}).first;
    add_tuple(it->second, t, c);
  }
  Chain preimage{z.arity + 1, {}};
  for (const auto& [deg, part] : parts) {
    detail::BoundarySolve sol =
        detail::boundary_solve(A, sigma, part, win, {}, column_cap);
    if (!sol.found) return std::nullopt;
    preimage = chain_add(preimage, sol.preimage);
  }
  if (!chain_eq(ops.boundary(preimage), z))
    throw std::logic_error("boundary preimage failed re-verification");
  return preimage;
}

// ---------------------------------------------------------------------------
// Cycle constructions
// ---------------------------------------------------------------------------

namespace cycles {

inline Monomial gen_monomial(Gen g) {
  switch (g) {
    case Gen::A: return {1, 0, 0};
    case Gen::B: return {0, 1, 0};
    case Gen::C: return {0, 0, 1};
    default: return {-1, 0, 0};
  }
}

inline Monomial gen_power(Gen g, long r) {
  switch (g) {
    case Gen::A: return {r, 0, 0};
    case Gen::B: return {0, r, 0};
    case Gen::C: return {0, 0, r};
    default: return {-r, 0, 0};
  }
}

// Chain with slot 0 running over the terms of x and fixed later slots.
inline Chain chain_from(const Elem& x, const std::vector<Monomial>& rest) {
  Chain ch{static_cast<long>(rest.size()), {}};
  for (const auto& [m, c] : x) {
    std::vector<Monomial> t{m};
    t.insert(t.end(), rest.begin(), rest.end());
    add_tuple(ch, t, c);
  }
  return ch;
}

inline Chain of_elem(const Elem& x) { return chain_from(x, {}); }

// omega_1 = (mu^{-1} - 1)(d, a) + (q^{-1} - q)(b, c).
inline Chain omega1(const Algebra& A, const Automorphism& sigma) {
  Chain ch{1, {}};
  add_tuple(ch, {gen_monomial(Gen::D), gen_monomial(Gen::A)},
            sigma.mu.inv() - A.ctx.one());
  add_tuple(ch, {gen_monomial(Gen::B), gen_monomial(Gen::C)},
            A.ctx.qpow(-1) - A.ctx.qpow(1));
  return ch;
}

// Degree-2 generator of the resonant regime: the image of a degree-2 kernel
// vector of the small complex under the comparison map.  Over x = b^i c^k
// with i + k = N + 1 the kernel vector is
//   (e_{-1,i,k}, lambda^2 e_{1,i+1,k-1}, lambda q^{-1} e_{0,i+1,k}),
// and the image is a cycle because both intertwiners are exact.
inline Chain omega2_case2(const Algebra& A, long N, long i) {
  const QContext& ctx = A.ctx;
  Koszul kz(A);
  Automorphism sigma{ctx.qpow(-(N + 2)), ctx.one()};
  ChainOps ops(A, sigma);
  const long k = N + 1 - i;
  std::vector<Elem> vec{A.monomial(-1, i, k),
                        elem_scale(A.monomial(1, i + 1, k - 1),
                                   sigma.lambda * sigma.lambda),
                        elem_scale(A.monomial(0, i + 1, k),
                                   sigma.lambda * ctx.qpow(-1))};
  return ops.from_tor(kz.compare(2, vec));
}

// Companion degree-2 generator of the resonant regime, from the kernel
// vector (0, 0, b^i c^{N-i}).  Together with omega2_case2 these span the
// stable degree-2 homology of the resonant slice.
inline Chain kappa2_case2(const Algebra& A, long N, long i) {
  Koszul kz(A);
  Automorphism sigma{A.ctx.qpow(-(N + 2)), A.ctx.one()};
  ChainOps ops(A, sigma);
  std::vector<Elem> vec{A.zero(), A.zero(), A.monomial(0, i, N - i)};
  return ops.from_tor(kz.compare(2, vec));
}

// Eight-term bracket presentation over x = b^i c^{N-i}.  Its pairings with
// the power-trace cocycles obey a closed product formula (the transgression
// arithmetic), which is what the pairing table certifies.  Above the base
// level N = 0 this presentation fails the cycle test, so the catalog stores
// the comparison-map generators instead; see omega2_case2.
inline Chain omega2_bracket_case2(const Algebra& A, long N, long i) {
  const QContext& ctx = A.ctx;
  Elem x = A.monomial(0, i, N - i);
  auto head = [&](Gen g1, Gen g2) { return A.mul(A.gen(g1), A.mul(A.gen(g2), x)); };
  struct Term {
    Gen h1, h2, s1, s2;
    Scalar c;
  };
  const std::vector<Term> terms = {
      {Gen::B, Gen::C, Gen::A, Gen::D, ctx.one()},
      {Gen::B, Gen::C, Gen::D, Gen::A, -ctx.one()},
      {Gen::D, Gen::B, Gen::A, Gen::C, -ctx.qpow(1)},
      {Gen::B, Gen::D, Gen::C, Gen::A, ctx.qpow(1)},
      {Gen::D, Gen::A, Gen::B, Gen::C, ctx.one()},
      {Gen::A, Gen::D, Gen::C, Gen::B, -ctx.one()},
      {Gen::C, Gen::A, Gen::B, Gen::D, -ctx.qpow(-1)},
      {Gen::A, Gen::C, Gen::D, Gen::B, ctx.qpow(-1)},
  };
  Chain ch{2, {}};
  for (const Term& t : terms)
    ch = chain_add(ch, chain_scale(chain_from(head(t.h1, t.h2),
                                              {gen_monomial(t.s1), gen_monomial(t.s2)}),
                                   t.c));
  return ch;
}

// Degree-3 generator of the resonant regime: the image of the top kernel
// coefficient b^i c^{N-i} under the comparison map into the Hochschild
// complex.  Both intertwiners are exact, so the image is a cycle by
// construction.
inline Chain omega3_case2(const Algebra& A, long N, long i) {
  Koszul kz(A);
  Automorphism sigma{A.ctx.qpow(-(N + 2)), A.ctx.one()};
  ChainOps ops(A, sigma);
  std::vector<Elem> top{A.monomial(0, i, N - i)};
  return ops.from_tor(kz.compare(3, top));
}

// Degree-2 generators of the isolated regimes: (x, g, h) - q^{+-1}(x, h, g).
inline Chain skew_pair(const Algebra& A, const Monomial& x, Gen g, Gen h,
                       const Scalar& c) {
  Chain ch{2, {}};
  add_tuple(ch, {x, gen_monomial(g), gen_monomial(h)}, A.ctx.one());
  add_tuple(ch, {x, gen_monomial(h), gen_monomial(g)}, -c);
  return ch;
}

}  // namespace cycles

// ---------------------------------------------------------------------------
// Generator catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  long degree = 0;
  std::string name;
  Chain cycle;
  std::optional<Cochain> dual;
  Scalar pair_value;
  bool degenerate = false;  // the pairing is expected to vanish at this point
};

struct Catalog {
  CaseInfo info;
  long tower_cap = 0;
  std::vector<CatalogEntry> entries;
};

namespace detail {

inline std::string bracket(const Monomial& m) { return "[" + monomial_str(m) + "]"; }

inline std::string bracket(const std::vector<Monomial>& t) {
  return "[" + tuple_str(t) + "]";
}

inline Cochain case1_dual0(const Algebra& A, const Automorphism& sigma, Gen x,
                           long r) {
  switch (x) {
    case Gen::A: return Cochain::tower(Functional::point(A.ctx, {r + 1, 0, 0}), {});
    case Gen::D: return Cochain::tower(Functional::point(A.ctx, {-(r + 1), 0, 0}), {});
    case Gen::B:
      return Cochain::tower(Functional::pow_trace(A.ctx, r + 1, sigma.lambda), {});
    default:
      return Cochain::tower(Functional::pow_trace(A.ctx, -(r + 1), sigma.lambda), {});
  }
}

inline Scalar omega1_pairing(const Algebra& A, const Automorphism& sigma) {
  const QContext& ctx = A.ctx;
  bool mu_one = (sigma.mu - ctx.one()).is_zero();
  bool la_one = (sigma.lambda - ctx.one()).is_zero();
  if (mu_one && la_one) return ctx.zero();
  if (mu_one)
    return (ctx.one() - ctx.qpow(2)) * (sigma.lambda - ctx.one()) /
           (sigma.lambda * ctx.qpow(2) - ctx.one());
  return sigma.mu.inv() - ctx.one();
}

}  // namespace detail

// Generating cycles of the four homology degrees with dual cocycles and the
// expected diagonal pairings.  Infinite families are truncated at tower_cap.
inline Catalog generator_catalog(const Algebra& A, const Automorphism& sigma,
                                 long tower_cap = 3) {
  const QContext& ctx = A.ctx;
  Catalog cat;
  cat.info = classify_case(ctx, sigma.lambda, sigma.mu);
  cat.tower_cap = tower_cap;
  auto add = [&](CatalogEntry e) { cat.entries.push_back(std::move(e)); };
  const Scalar one = ctx.one();
  const Monomial ma = cycles::gen_monomial(Gen::A);
  const Monomial mb = cycles::gen_monomial(Gen::B);
  const Monomial mc = cycles::gen_monomial(Gen::C);
  const Monomial md = cycles::gen_monomial(Gen::D);

  switch (cat.info.twist_case) {
    case TwistCase::One: {
      bool la_one = (sigma.lambda - one).is_zero();
      bool mu_one = (sigma.mu - one).is_zero();
      add({0, "[1]", cycles::of_elem(A.unit()),
           Cochain::tower(Functional::pow_trace(ctx, 0, sigma.lambda), {}), one});
      std::vector<Gen> fixed;
      if (la_one) fixed.push_back(Gen::A);
      if (mu_one) fixed.push_back(Gen::B);
      if (mu_one) fixed.push_back(Gen::C);
      if (la_one) fixed.push_back(Gen::D);
      for (Gen x : fixed) {
        for (long r = 0; r <= tower_cap; r++) {
          Monomial pw = cycles::gen_power(x, r + 1);
          Cochain d0 = detail::case1_dual0(A, sigma, x, r);
          add({0, detail::bracket(pw), cycles::of_elem(A.monomial_elem(pw)), d0, one});
          Scalar sign = (x == Gen::A || x == Gen::B) ? one : -one;
          add({1, detail::bracket({cycles::gen_power(x, r), cycles::gen_monomial(x)}),
               cycles::chain_from(A.monomial_elem(cycles::gen_power(x, r)),
                                  {cycles::gen_monomial(x)}),
               Cochain::tower(d0.base, {Derivation::deg_0()}), sign});
        }
      }
      Scalar pv = detail::omega1_pairing(A, sigma);
      add({1, "omega_1", cycles::omega1(A, sigma),
           Cochain::tower(Functional::pow_trace(ctx, 0, sigma.lambda),
                          {Derivation::deg_0()}),
           pv, pv.is_zero()});
      break;
    }
    case TwistCase::Two: {
      long N = cat.info.N;
      std::vector<long> S;
      for (long s = N + 1; s >= 0; s -= 2) S.push_back(s);
      for (long s = N + 3; s <= N + 3 + tower_cap; s++) S.push_back(s);
      std::sort(S.begin(), S.end());
      std::vector<long> Sp;
      for (long s = N - 2; s >= 0; s -= 2) Sp.push_back(s);
      for (long s = N; s <= N + 2 + tower_cap; s++) Sp.push_back(s);
      std::sort(Sp.begin(), Sp.end());
      for (long s : S)
        add({0, s == 0 ? "[1]" : detail::bracket(Monomial{0, s, 0}),
             cycles::of_elem(A.monomial(0, s, 0)),
             Cochain::tower(Functional::pow_trace(ctx, s, sigma.lambda), {}), one});
      for (long t : S)
        if (t >= 1)
          add({0, detail::bracket(Monomial{0, 0, t}),
               cycles::of_elem(A.monomial(0, 0, t)),
               Cochain::tower(Functional::pow_trace(ctx, -t, sigma.lambda), {}), one});
      for (long i = 0; i <= N + 2; i++)
        add({0, detail::bracket(Monomial{0, i, N + 2 - i}),
             cycles::of_elem(A.monomial(0, i, N + 2 - i)),
             Cochain::tower(Functional::point(ctx, {0, i, N + 2 - i}), {}), one});
      for (long s : Sp)
        add({1, detail::bracket({Monomial{0, s, 0}, mb}),
             cycles::chain_from(A.monomial(0, s, 0), {mb}),
             Cochain::tower(Functional::pow_trace(ctx, s + 1, sigma.lambda),
                            {Derivation::deg_0()}),
             one});
      for (long t : Sp)
        add({1, detail::bracket({Monomial{0, 0, t}, mc}),
             cycles::chain_from(A.monomial(0, 0, t), {mc}),
             Cochain::tower(Functional::pow_trace(ctx, -(t + 1), sigma.lambda),
                            {Derivation::deg_0()}),
             -one});
      for (long i = 0; i <= N; i++) {
        std::map<Gen, std::map<Monomial, Scalar>> t1;
        t1[Gen::B][Monomial{0, i, N + 1 - i}] = one;
        t1[Gen::A][Monomial{-1, i, N - i}] = ctx.qpow(-(N + 1));
        add({1, detail::bracket({Monomial{0, i, N + 1 - i}, mb}),
             cycles::chain_from(A.monomial(0, i, N + 1 - i), {mb}),
             Cochain::from_table(sigma, std::move(t1)), one});
      }
      for (long i = 0; i <= N; i++) {
        std::map<Gen, std::map<Monomial, Scalar>> t2;
        t2[Gen::C][Monomial{0, i + 1, N - i}] = one;
        t2[Gen::D][Monomial{1, i, N - i}] = ctx.qpow(N + 1);
        add({1, detail::bracket({Monomial{0, i + 1, N - i}, mc}),
             cycles::chain_from(A.monomial(0, i + 1, N - i), {mc}),
             Cochain::from_table(sigma, std::move(t2)), one});
      }
      if (N % 2 == 1) {
        Scalar pv = detail::omega1_pairing(A, sigma);
        add({1, "omega_1", cycles::omega1(A, sigma),
             Cochain::tower(Functional::pow_trace(ctx, 0, sigma.lambda),
                            {Derivation::deg_0()}),
             pv});
      }
      // The power-trace cocycles vanish on the whole stable degree-2 class
      // space here, so every degree-2 entry is recorded as degenerate.  The
      // closed product formula for the trace pairings lives on the bracket
      // presentation and is certified separately; see
      // cycles::omega2_bracket_case2.
      for (long i = 0; i <= N; i++) {
        long n = 2 * i - N;
        add({2, "omega_2(i=" + std::to_string(i) + ")", cycles::omega2_case2(A, N, i),
             Cochain::tower(Functional::pow_trace(ctx, n, one),
                            {Derivation::deg_b(), Derivation::twisted(sigma.lambda)}),
             ctx.zero(), true});
      }
      for (long i = 0; i <= N; i++)
        add({2, "kappa_2(i=" + std::to_string(i) + ")", cycles::kappa2_case2(A, N, i),
             std::nullopt, ctx.zero()});
      for (long i = 0; i <= N; i++)
        add({3, "omega_3(i=" + std::to_string(i) + ")", cycles::omega3_case2(A, N, i),
             std::nullopt, ctx.zero()});
      break;
    }
    case TwistCase::Three: {
      long N = cat.info.N, M = cat.info.M;
      Monomial top_d{-(M + 1), 0, N + 1};
      Monomial top_a{M + 1, N + 1, 0};
      add({0, detail::bracket(top_d), cycles::of_elem(A.monomial_elem(top_d)),
           Cochain::tower(Functional::point(ctx, top_d), {}), one});
      add({0, detail::bracket(top_a), cycles::of_elem(A.monomial_elem(top_a)),
           Cochain::tower(Functional::point(ctx, top_a), {}), one});
      Monomial g1{M, N + 1, 0}, g2{M + 1, N, 0}, g3{-(M + 1), 0, N}, g4{-M, 0, N + 1};
      add({1, detail::bracket({g1, ma}), cycles::chain_from(A.monomial_elem(g1), {ma}),
           Cochain::tower(Functional::point(ctx, top_a), {Derivation::deg_a()}),
           ctx.qpow(-(N + 1))});
      add({1, detail::bracket({g2, mb}), cycles::chain_from(A.monomial_elem(g2), {mb}),
           Cochain::tower(Functional::point(ctx, top_a), {Derivation::deg_b()}), one});
      add({1, detail::bracket({g3, mc}), cycles::chain_from(A.monomial_elem(g3), {mc}),
           Cochain::tower(Functional::point(ctx, top_d), {Derivation::deg_b()}), -one});
      add({1, detail::bracket({g4, md}), cycles::chain_from(A.monomial_elem(g4), {md}),
           Cochain::tower(Functional::point(ctx, top_d), {Derivation::deg_a()}),
           -ctx.qpow(N + 1)});
      add({2, "omega_2", cycles::skew_pair(A, {M, N, 0}, Gen::B, Gen::A, ctx.qpow(-1)),
           Cochain::tower(Functional::point(ctx, top_a),
                          {Derivation::deg_a(), Derivation::deg_b()}),
           -ctx.qpow(-(N + 1))});
      add({2, "omega_2'", cycles::skew_pair(A, {-M, 0, N}, Gen::C, Gen::D, ctx.qpow(1)),
           Cochain::tower(Functional::point(ctx, top_d),
                          {Derivation::deg_a(), Derivation::deg_b()}),
           -ctx.qpow(N + 1)});
      break;
    }
    case TwistCase::Four: {
      long N = cat.info.N, M = cat.info.M;
      Monomial top_d{-(M + 1), N + 1, 0};
      Monomial top_a{M + 1, 0, N + 1};
      add({0, detail::bracket(top_d), cycles::of_elem(A.monomial_elem(top_d)),
           Cochain::tower(Functional::point(ctx, top_d), {}), one});
      add({0, detail::bracket(top_a), cycles::of_elem(A.monomial_elem(top_a)),
           Cochain::tower(Functional::point(ctx, top_a), {}), one});
      Monomial g1{M, 0, N + 1}, g2{-(M + 1), N, 0}, g3{M + 1, 0, N}, g4{-M, N + 1, 0};
      add({1, detail::bracket({g1, ma}), cycles::chain_from(A.monomial_elem(g1), {ma}),
           Cochain::tower(Functional::point(ctx, top_a), {Derivation::deg_a()}),
           ctx.qpow(-(N + 1))});
      add({1, detail::bracket({g2, mb}), cycles::chain_from(A.monomial_elem(g2), {mb}),
           Cochain::tower(Functional::point(ctx, top_d), {Derivation::deg_b()}), one});
      add({1, detail::bracket({g3, mc}), cycles::chain_from(A.monomial_elem(g3), {mc}),
           Cochain::tower(Functional::point(ctx, top_a), {Derivation::deg_b()}), -one});
      add({1, detail::bracket({g4, md}), cycles::chain_from(A.monomial_elem(g4), {md}),
           Cochain::tower(Functional::point(ctx, top_d), {Derivation::deg_a()}),
           -ctx.qpow(N + 1)});
      add({2, "omega_2", cycles::skew_pair(A, {M, 0, N}, Gen::C, Gen::A, ctx.qpow(-1)),
           Cochain::tower(Functional::point(ctx, top_a),
                          {Derivation::deg_a(), Derivation::deg_b()}),
           ctx.qpow(-(N + 1))});
      add({2, "omega_2'", cycles::skew_pair(A, {-M, N, 0}, Gen::B, Gen::D, ctx.qpow(1)),
           Cochain::tower(Functional::point(ctx, top_d),
                          {Derivation::deg_a(), Derivation::deg_b()}),
           ctx.qpow(N + 1)});
      break;
    }
    case TwistCase::Five: break;
  }
  return cat;
}

struct CatalogCheck {
  bool cycles_ok = true;    // every cataloged cycle has zero boundary
  bool pairings_ok = true;  // the pairing matrix is diagonal with the stored values
  bool cocycles_ok = true;  // duals pass the window cocycle check
  long independent = 0;     // entries certified independent by a nonzero pairing
  std::vector<std::string> failures;
  bool ok = true;
};

inline CatalogCheck check_catalog(const Algebra& A, const Automorphism& sigma,
                                  const Catalog& cat, long cocycle_I = 1,
                                  long cocycle_L = 2) {
  ChainOps ops(A, sigma);
  CatalogCheck out;
  for (const CatalogEntry& e : cat.entries) {
    if (e.degree == 0) continue;
    if (!chain_is_zero(ops.normalize(ops.boundary(e.cycle)))) {
      out.cycles_ok = false;
      out.failures.push_back(e.name + ": nonzero boundary");
    }
  }
  for (const CatalogEntry& row : cat.entries) {
    if (!row.dual) continue;
    for (const CatalogEntry& col : cat.entries) {
      if (col.degree != row.degree) continue;
      Scalar got = pairing(A, *row.dual, col.cycle);
      Scalar want = (&row == &col) ? row.pair_value : A.ctx.zero();
      if (!(got - want).is_zero()) {
        out.pairings_ok = false;
        out.failures.push_back("pairing " + row.name + " / " + col.name);
      }
    }
    if (!row.degenerate && !row.pair_value.is_zero()) out.independent++;
  }
  for (const CatalogEntry& e : cat.entries) {
    if (!e.dual) continue;
    long L = e.degree >= 2 ? std::min(cocycle_L, 1L) : cocycle_L;
    std::vector<Monomial> window = monomial_window(cocycle_I, L);
    if (!is_cocycle_on_window(A, ops, *e.dual, window)) {
      out.cocycles_ok = false;
      out.failures.push_back(e.name + ": dual fails the cocycle check");
    }
  }
  out.ok = out.cycles_ok && out.pairings_ok && out.cocycles_ok;
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic bicomplex rows
// ---------------------------------------------------------------------------

// Rewriting of the degree-zero cyclic operator applied to a basis monomial:
// pairs whose last slot is a single generator, together with a degree-two
// certificate whose boundary is exactly pairs - (1, w).
struct B0Reduction {
  Chain pairs{1, {}};
  Chain certificate{2, {}};
};

namespace detail {

inline std::vector<std::pair<Gen, long>> monomial_blocks(const Monomial& m) {
  std::vector<std::pair<Gen, long>> blocks;
  if (m.i > 0) blocks.push_back({Gen::A, m.i});
  if (m.i < 0) blocks.push_back({Gen::D, -m.i});
  if (m.j > 0) blocks.push_back({Gen::B, m.j});
  if (m.k > 0) blocks.push_back({Gen::C, m.k});
  return blocks;
}

inline Monomial blocks_monomial(const std::vector<std::pair<Gen, long>>& blocks,
                                size_t from) {
  Monomial m{0, 0, 0};
  for (size_t p = from; p < blocks.size(); p++) {
    switch (blocks[p].first) {
      case Gen::A: m.i += blocks[p].second; break;
      case Gen::D: m.i -= blocks[p].second; break;
      case Gen::B: m.j += blocks[p].second; break;
      case Gen::C: m.k += blocks[p].second; break;
    }
  }
  return m;
}

inline void b0_reduce_word(const Algebra& A, const Automorphism& sigma, const Elem& x,
                           const std::vector<std::pair<Gen, long>>& blocks, size_t p,
                           B0Reduction& out) {
  Gen g = blocks[p].first;
  long r = blocks[p].second;
  Monomial gm = cycles::gen_monomial(g);
  if (p + 1 == blocks.size()) {
    Scalar tw = sigma.coeff(gm);
    Elem acc = x;
    for (long m = 0; m < r; m++) {
      Elem head = A.mul(acc, A.monomial_elem(cycles::gen_power(g, r - 1 - m)));
      for (const auto& [hm, hc] : head) add_tuple(out.pairs, {hm, gm}, hc);
      if (m + 1 < r)
        for (const auto& [am, ac] : acc)
          add_tuple(out.certificate, {am, cycles::gen_power(g, r - 1 - m), gm}, ac);
      acc = elem_scale(A.mul(A.monomial_elem(gm), acc), tw);
    }
    return;
  }
  Monomial rest = blocks_monomial(blocks, p + 1);
  Monomial gp = cycles::gen_power(g, r);
  for (const auto& [xm, xc] : x) add_tuple(out.certificate, {xm, gp, rest}, xc);
  b0_reduce_word(A, sigma, A.mul(x, A.monomial_elem(gp)), blocks, p + 1, out);
  Elem tx = elem_scale(A.mul(A.monomial_elem(rest), x), sigma.coeff(rest));
  std::vector<std::pair<Gen, long>> single{blocks[p]};
  b0_reduce_word(A, sigma, tx, single, 0, out);
}

}  // namespace detail

inline B0Reduction b0_reduction(const Algebra& A, const Automorphism& sigma,
                                const Monomial& w) {
  B0Reduction out;
  auto blocks = detail::monomial_blocks(w);
  if (!blocks.empty()) detail::b0_reduce_word(A, sigma, A.unit(), blocks, 0, out);
  return out;
}

// Confirms boundary(certificate) == pairs - (1, w) exactly.
inline bool b0_reduction_valid(const Algebra& A, const Automorphism& sigma,
                               const Monomial& w, const B0Reduction& red) {
  if (w.is_unit()) return chain_is_zero(red.pairs) && chain_is_zero(red.certificate);
  ChainOps ops(A, sigma);
  Chain rhs = red.pairs;
  add_tuple(rhs, {Monomial{0, 0, 0}, w}, -A.ctx.one());
  return chain_eq(ops.boundary(red.certificate), rhs);
}

struct HCCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct HCRow {
  std::string name;
  long dim = 0;
  std::string basis;
  std::string status;  // exact | windowed | conditional
};

struct HCReport {
  CaseInfo info;
  std::vector<HCRow> rows;
  std::vector<HCCheck> checks;
  bool ok = true;
};

namespace detail {

inline void hc_check(HCReport& rep, const std::string& name, bool ok,
                     const std::string& det = "") {
  rep.checks.push_back({name, ok, det});
  if (!ok) rep.ok = false;
}

// B0 image of one cataloged degree-0 monomial as a combination of pair
// tuples, after verifying the rewriting certificate.
inline std::optional<Chain> b0_row(const Algebra& A, const Automorphism& sigma,
                                   const Monomial& w) {
  B0Reduction red = b0_reduction(A, sigma, w);
  if (!b0_reduction_valid(A, sigma, w, red)) return std::nullopt;
  return red.pairs;
}

}  // namespace detail

// Cyclic homology rows of one parameter point, with the mechanical evidence
// backing each row: rewriting certificates for the degree-zero cyclic
// operator, rank counts of its image against the catalog basis, and dual
// pairings certifying which classes survive.
inline HCReport hc_instance(const Algebra& A, const Automorphism& sigma,
                            const Window& win = {}, long tower_cap = 3) {
  const QContext& ctx = A.ctx;
  ChainOps ops(A, sigma);
  HCReport rep;
  rep.info = classify_case(ctx, sigma.lambda, sigma.mu);
  Catalog cat = generator_catalog(A, sigma, tower_cap);
  const Scalar one = ctx.one();

  auto entries_of = [&](long deg) {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : cat.entries)
      if (e.degree == deg) out.push_back(&e);
    return out;
  };
  auto b1_of = [&](const Chain& cycle) {
    return ops.normalize(ops.cyclic_B(cycle));
  };

  switch (rep.info.twist_case) {
    case TwistCase::One: {
      bool id_twist = (sigma.lambda - one).is_zero() && (sigma.mu - one).is_zero();
      detail::hc_check(rep, "b0_unit",
                       chain_is_zero(ops.normalize(ops.cyclic_B(
                           cycles::of_elem(A.unit())))));
      // Every degree-0 tower maps to (r + 1) times its degree-1 companion.
      bool towers_ok = true, killed_ok = true;
      auto deg1 = entries_of(1);
      for (const CatalogEntry* e : entries_of(0)) {
        if (e->name == "[1]") continue;
        Monomial w = e->cycle.terms.begin()->first[0];
        std::optional<Chain> row = detail::b0_row(A, sigma, w);
        if (!row) {
          towers_ok = false;
          continue;
        }
        // The image class pairs to (r + 1) against its own dual, so it is a
        // nonzero class; the distinguished cocycle kills every image row.
        bool hit = false;
        for (const CatalogEntry* g : deg1) {
          if (!g->dual) continue;
          Scalar v = pairing(A, *g->dual, *row);
          if (g->name == "omega_1") {
            if (!v.is_zero()) killed_ok = false;
          } else if (!v.is_zero()) {
            hit = true;
          }
        }
        if (!hit) towers_ok = false;
      }
      detail::hc_check(rep, "b0_towers", towers_ok);
      detail::hc_check(rep, "omega_1_kills_image", killed_ok);
      if (!id_twist) {
        Scalar pv = detail::omega1_pairing(A, sigma);
        detail::hc_check(rep, "omega_1_survives", !pv.is_zero());
      }
      HH0Report h0 = hh0_boundary_span(A, sigma, win);
      rep.rows.push_back({"HC_0", h0.dim, "monomial classes at cap L", "windowed"});
      rep.rows.push_back({"HC_1", 1, "omega_1", id_twist ? "degenerate-evidence" : "exact"});
      rep.rows.push_back({"HC_{2n+2}", 1, "[1]", id_twist ? "degenerate-evidence" : "exact"});
      rep.rows.push_back({"HC_{2n+3}", 1, "omega_1", id_twist ? "degenerate-evidence" : "exact"});
      break;
    }
    case TwistCase::Two: {
      long N = rep.info.N;
      bool odd = N % 2 == 1;
      detail::hc_check(rep, "b0_unit",
                       chain_is_zero(ops.normalize(ops.cyclic_B(
                           cycles::of_elem(A.unit())))));
      // Staircase of B0 rows over the degree-1 tuple coordinates.
      auto deg0 = entries_of(0);
      auto deg1 = entries_of(1);
      std::set<std::vector<Monomial>> basis_tuples;
      for (const CatalogEntry* e : deg1)
        for (const auto& [t, c] : e->cycle.terms) basis_tuples.insert(t);
      Indexer<std::vector<Monomial>> tuples;
      ColumnReducer stair(ctx);
      bool certs_ok = true, support_ok = true;
      long rank_expect = 0;
      for (const CatalogEntry* e : deg0) {
        Monomial w = e->cycle.terms.begin()->first[0];
        if (w.is_unit()) continue;
        std::optional<Chain> row = detail::b0_row(A, sigma, w);
        if (!row) {
          certs_ok = false;
          continue;
        }
        for (const auto& [t, c] : row->terms)
          if (!basis_tuples.count(t)) support_ok = false;
        stair.append(detail::chain_column(tuples, *row));
        rank_expect++;
      }
      detail::hc_check(rep, "b0_certificates", certs_ok);
      detail::hc_check(rep, "b0_rows_in_catalog", support_ok);
      detail::hc_check(rep, "b0_staircase_rank", stair.rank() == rank_expect,
                       "rank " + std::to_string(stair.rank()));
      // For N odd the whole degree-2 dual family vanishes on B1 images.
      auto deg2 = entries_of(2);
      if (odd) {
        bool b1_zero = true;
        for (const CatalogEntry* g : deg1) {
          Chain z = b1_of(g->cycle);
          for (const CatalogEntry* f : deg2)
            if (f->dual && !pairing(A, *f->dual, z).is_zero()) b1_zero = false;
        }
        detail::hc_check(rep, "b1_pairings_vanish", b1_zero);
      }
      DimReport dims = hh_dims(A, sigma, win);
      detail::hc_check(rep, "hh2_dim", dims.degree[2].verdict == "ok",
                       "dim " + std::to_string(dims.degree[2].dim));
      detail::hc_check(rep, "hh3_dim", dims.degree[3].verdict == "ok",
                       "dim " + std::to_string(dims.degree[3].dim));
      HH0Report h0 = hh0_boundary_span(A, sigma, win);
      rep.rows.push_back({"HC_0", h0.dim, "monomial classes at cap L", "windowed"});
      long hc1 = N + 1 + (odd ? 1 : 0);
      rep.rows.push_back({"HC_1", hc1,
                          "[(b^i c^{N+1-i}, b)]" + std::string(odd ? " + omega_1" : ""),
                          "exact"});
      if (odd) {
        rep.rows.push_back({"HC_2", N + 2, "omega_2 family + [1]", "exact"});
        rep.rows.push_back({"HC_{2n+3}", N + 2, "degree-1 quotient", "conditional"});
        rep.rows.push_back({"HC_{2n+4}", 1, "[1]", "conditional"});
      } else {
        rep.rows.push_back({"HC_2", N, "omega_2 family, i != N/2", "conditional"});
        rep.rows.push_back({"HC_{2n+3}", N + 2,
                            "omega_3(i=N/2) + degree-1 quotient", "conditional"});
        rep.rows.push_back({"HC_{2n+4}", 1, "omega_2(i=N/2)", "conditional"});
      }
      break;
    }
    case TwistCase::Three:
    case TwistCase::Four: {
      long N = rep.info.N;
      auto deg0 = entries_of(0);
      auto deg1 = entries_of(1);
      auto deg2 = entries_of(2);
      // B0 rows in dual coordinates have rank 2, so B0 is injective.
      ColumnReducer b0rank(ctx);
      bool certs_ok = true;
      for (const CatalogEntry* e : deg0) {
        Monomial w = e->cycle.terms.begin()->first[0];
        std::optional<Chain> row = detail::b0_row(A, sigma, w);
        if (!row) {
          certs_ok = false;
          continue;
        }
        SparseCol col;
        for (size_t j = 0; j < deg1.size(); j++)
          if (deg1[j]->dual) {
            Scalar v = pairing(A, *deg1[j]->dual, *row);
            if (!v.is_zero()) col[static_cast<long>(j)] = v;
          }
        b0rank.append(col);
      }
      detail::hc_check(rep, "b0_certificates", certs_ok);
      detail::hc_check(rep, "b0_rank", b0rank.rank() == 2,
                       "rank " + std::to_string(b0rank.rank()));
      // B1 matrix against the degree-2 duals: rank 2, so B1 is surjective
      // onto the degree-2 classes and the higher rows vanish.
      ColumnReducer b1rank(ctx);
      std::map<std::pair<std::string, std::string>, Scalar> b1vals;
      for (const CatalogEntry* g : deg1) {
        Chain z = b1_of(g->cycle);
        SparseCol col;
        for (size_t j = 0; j < deg2.size(); j++)
          if (deg2[j]->dual) {
            Scalar v = pairing(A, *deg2[j]->dual, z);
            b1vals[{deg2[j]->name, g->name}] = v;
            if (!v.is_zero()) col[static_cast<long>(j)] = v;
          }
        b1rank.append(col);
      }
      detail::hc_check(rep, "b1_rank", b1rank.rank() == 2,
                       "rank " + std::to_string(b1rank.rank()));
      Scalar nn = ctx.integer(N + 1);
      bool c3 = rep.info.twist_case == TwistCase::Three;
      Monomial ga = c3 ? Monomial{rep.info.M, N + 1, 0} : Monomial{rep.info.M, 0, N + 1};
      Monomial gd = c3 ? Monomial{-rep.info.M, 0, N + 1} : Monomial{-rep.info.M, N + 1, 0};
      Scalar wa = (c3 ? -one : one) * nn * ctx.qpow(-(N + 1));
      Scalar wd = (c3 ? -one : one) * nn * ctx.qpow(N + 1);
      detail::hc_check(rep, "b1_diagonal_a",
                       (b1vals[{"omega_2", detail::bracket({ga, cycles::gen_monomial(Gen::A)})}] -
                        wa).is_zero());
      detail::hc_check(rep, "b1_diagonal_d",
                       (b1vals[{"omega_2'", detail::bracket({gd, cycles::gen_monomial(Gen::D)})}] -
                        wd).is_zero());
      HH0Report h0 = hh0_boundary_span(A, sigma, win);
      std::string reps;
      for (const Monomial& m : h0.reps) reps += (reps.empty() ? "" : ", ") + monomial_str(m);
      rep.rows.push_back({"HC_0", h0.dim, reps, h0.verdict == "ok" ? "exact" : h0.verdict});
      rep.rows.push_back({"HC_1", 2, "degree-1 quotient classes", "exact"});
      rep.rows.push_back({"HC_{n>=2}", 0, "", "exact"});
      break;
    }
    case TwistCase::Five: {
      DimReport dims = hh_dims(A, sigma, win);
      bool zero = true;
      for (long n = 0; n <= 3; n++)
        if (dims.degree[static_cast<size_t>(n)].dim != 0) zero = false;
      detail::hc_check(rep, "hh_rows_zero", zero);
      for (long n = 0; n <= 3; n++)
        rep.rows.push_back({"HC_" + std::to_string(n), 0, "", "exact"});
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Resolution exactness
// ---------------------------------------------------------------------------

struct ResolutionReport {
  bool squares_zero = false;
  bool augmentation_ok = false;
  long k3_kernel = 0;       // windowed kernel vectors in top degree
  long checked_k2 = 0;      // kernel vectors with verified preimages
  long checked_k1 = 0;
  long checked_k0 = 0;      // augmentation kernel vectors lifted through k1
  bool exact_ok = true;
  bool ok = false;
};

namespace detail {

inline long resolution_w_offset(long n, long p) {
  static const std::vector<std::vector<long>> table = {
      {0}, {0, 1, -1}, {1, -1, 0}, {0}};
  return table.at(static_cast<size_t>(n)).at(static_cast<size_t>(p));
}

inline std::vector<SlotKey> resolution_slot_basis(long n, long w0, long I, long L) {
  std::vector<SlotKey> keys;
  for (long p = 0; p < Koszul::dim(n); p++) {
    long w = w0 - resolution_w_offset(n, p);
    for (long i = -I; i <= I; i++)
      for (const Monomial& m : slice_monomials({i, w}, I, L))
        keys.push_back({p, m});
  }
  return keys;
}

inline SparseCol resolution_column(const Koszul& kz, Indexer<SlotKey>& rows, long n,
                                   const SlotKey& key) {
  std::vector<Elem> coeffs(static_cast<size_t>(Koszul::dim(n)));
  coeffs[static_cast<size_t>(key.first)] = kz.A.monomial_elem(key.second);
  std::vector<Elem> img = kz.boundary(n, coeffs);
  SparseCol col;
  for (long p = 0; p < Koszul::dim(n - 1); p++)
    for (const auto& [m, c] : img[static_cast<size_t>(p)])
      col[rows.intern({p, m})] = c;
  return col;
}

}  // namespace detail

// Windowed exactness of the length-three free resolution: the composites
// vanish, the counit splits off degree zero, the top map is injective, and
// every windowed kernel vector in lower degrees lifts with an exactly
// verified preimage.
inline ResolutionReport verify_resolution(const Algebra& A, const Window& win = {}) {
  const QContext& ctx = A.ctx;
  Koszul kz(A);
  ResolutionReport rep;
  rep.squares_zero = true;
  rep.augmentation_ok = true;

  for (long n = 2; n <= 3; n++) {
    for (long p = 0; p < Koszul::dim(n); p++) {
      for (const Monomial& m : {Monomial{0, 0, 0}, Monomial{1, 1, 0}, Monomial{-1, 0, 2}}) {
        std::vector<Elem> coeffs(static_cast<size_t>(Koszul::dim(n)));
        coeffs[static_cast<size_t>(p)] = A.monomial_elem(m);
        std::vector<Elem> once = kz.boundary(n, coeffs);
        for (const Elem& e : kz.boundary(n - 1, once))
          if (!e.empty()) rep.squares_zero = false;
      }
    }
  }
  for (long p = 0; p < Koszul::dim(1); p++) {
    for (const Monomial& m : {Monomial{0, 0, 0}, Monomial{2, 1, 1}, Monomial{-1, 2, 0}}) {
      std::vector<Elem> coeffs(static_cast<size_t>(Koszul::dim(1)));
      coeffs[static_cast<size_t>(p)] = A.monomial_elem(m);
      if (!A.counit(kz.boundary(1, coeffs)[0]).is_zero()) rep.augmentation_ok = false;
    }
  }

  long Idom = win.I + win.margin;
  for (long w0 = -(win.L + 1); w0 <= win.L + 1; w0++) {
    // top degree: no windowed kernel
    {
      Indexer<SlotKey> rows;
      ColumnReducer red(ctx);
      for (const SlotKey& key : detail::resolution_slot_basis(3, w0, win.I, win.L))
        red.append(detail::resolution_column(kz, rows, 3, key));
      rep.k3_kernel += static_cast<long>(red.kernels().size());
    }
    // middle degrees: windowed kernel vectors lift one step up
    for (long n = 2; n >= 1; n--) {
      Indexer<SlotKey> rows;
      ColumnReducer red(ctx);
      std::vector<SlotKey> dom = detail::resolution_slot_basis(n, w0, win.I, win.L);
      for (const SlotKey& key : dom)
        red.append(detail::resolution_column(kz, rows, n, key));
      if (red.kernels().empty()) continue;
      Indexer<SlotKey> up_rows;
      ColumnReducer up(ctx);
      std::vector<SlotKey> updom =
          detail::resolution_slot_basis(n + 1, w0, Idom, win.L);
      for (const SlotKey& key : updom)
        up.append(detail::resolution_column(kz, up_rows, n + 1, key));
      for (const SparseCol& combo : red.kernels()) {
        std::vector<Elem> vec(static_cast<size_t>(Koszul::dim(n)));
        for (const auto& [idx, c] : combo) {
          const SlotKey& key = dom[static_cast<size_t>(idx)];
          add_term(vec[static_cast<size_t>(key.first)], key.second, c);
        }
        SparseCol target;
        for (long p = 0; p < Koszul::dim(n); p++)
          for (const auto& [m, c] : vec[static_cast<size_t>(p)])
            target[up_rows.intern({p, m})] = c;
        std::optional<SparseCol> sol = up.express(target);
        if (!sol) {
          rep.exact_ok = false;
          continue;
        }
        std::vector<Elem> pre(static_cast<size_t>(Koszul::dim(n + 1)));
        for (const auto& [idx, c] : *sol) {
          const SlotKey& key = updom[static_cast<size_t>(idx)];
          add_term(pre[static_cast<size_t>(key.first)], key.second, c);
        }
        std::vector<Elem> img = kz.boundary(n + 1, pre);
        bool match = true;
        for (long p = 0; p < Koszul::dim(n); p++)
          if (!elem_eq(img[static_cast<size_t>(p)], vec[static_cast<size_t>(p)]))
            match = false;
        if (!match)
          rep.exact_ok = false;
        else if (n == 2)
          rep.checked_k2++;
        else
          rep.checked_k1++;
      }
    }
    // degree zero: the augmentation kernel lifts through the first map
    {
      Indexer<SlotKey> rows;
      ColumnReducer red(ctx);
      std::vector<SlotKey> dom = detail::resolution_slot_basis(1, w0, Idom, win.L);
      for (const SlotKey& key : dom)
        red.append(detail::resolution_column(kz, rows, 1, key));
      std::vector<Elem> targets;
      for (long i = -win.I; i <= win.I; i++) {
        for (const Monomial& m : slice_monomials({i, w0}, win.I, win.L)) {
          if (m.is_unit()) continue;
          Elem e = A.monomial_elem(m);
          if (m.level() == 0) e = elem_sub(e, A.unit());
          targets.push_back(e);
        }
      }
      for (const Elem& t : targets) {
        SparseCol target;
        for (const auto& [m, c] : t) target[rows.intern({0, m})] = c;
        std::optional<SparseCol> sol = red.express(target);
        if (!sol) {
          rep.exact_ok = false;
          continue;
        }
        std::vector<Elem> pre(static_cast<size_t>(Koszul::dim(1)));
        for (const auto& [idx, c] : *sol) {
          const SlotKey& key = dom[static_cast<size_t>(idx)];
          add_term(pre[static_cast<size_t>(key.first)], key.second, c);
        }
        if (!elem_eq(kz.boundary(1, pre)[0], t))
          rep.exact_ok = false;
        else
          rep.checked_k0++;
      }
    }
  }
  rep.ok = rep.squares_zero && rep.augmentation_ok && rep.k3_kernel == 0 &&
           rep.exact_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Degree-two transgression probe
// ---------------------------------------------------------------------------

struct ProbeReport {
  long N = 0;
  bool cycle_ok = false;       // gamma and its transgression are cycles
  bool bb_zero_ok = false;     // the composite of the two cyclic operators vanishes
  std::string nontriviality;   // outcome of the windowed preimage search
  std::string proportionality; // coefficient on omega_2 in the class expansion
  std::string residual;        // coefficient on kappa_2 in the class expansion
  long dual_rank = -1;         // rank of verified 3-cocycle pairings, -1 unknown
  bool consistent = false;     // all produced evidence agrees with the conjecture
  std::vector<std::string> notes;
};

// Evidence for the transgression conjecture at even N: the middle cycle
// gamma = (b^{N/2} c^{N/2+1}, b) maps under the degree-one cyclic operator to
// a Hochschild 2-cycle z; the probe searches a window for a preimage of z,
// expresses z against the boundary span extended by the two degree-2
// generators omega_2(N, N/2) and kappa_2(N, N/2), and tests injectivity of
// the degree-two cyclic operator through pairings of constructed 3-cocycles.
// The expansion certificate is verified exactly; the conjecture is counted
// consistent when z is not a plain boundary and the omega_2 coefficient is
// nonzero.
inline ProbeReport conjecture_probe(const Algebra& A, long N, const Window& win = {},
                                    long column_cap = 20000) {
  if (N < 0 || N % 2 != 0) throw std::invalid_argument("probe needs even N >= 0");
  const QContext& ctx = A.ctx;
  ProbeReport rep;
  rep.N = N;
  Automorphism sigma{ctx.qpow(-(N + 2)), ctx.one()};
  ChainOps ops(A, sigma);
  const Scalar one = ctx.one();

  Chain gamma = cycles::chain_from(A.monomial(0, N / 2, N / 2 + 1),
                                   {cycles::gen_monomial(Gen::B)});
  Chain z = ops.normalize(ops.cyclic_B(gamma));
  rep.cycle_ok = chain_is_zero(ops.normalize(ops.boundary(gamma))) &&
                 chain_is_zero(ops.normalize(ops.boundary(z)));
  bool bb = true;
  for (const Monomial& m : {Monomial{0, 1, 1}, Monomial{0, 2, 0}, Monomial{0, N / 2, N / 2}}) {
    Chain b0 = ops.normalize(ops.cyclic_B(cycles::of_elem(A.monomial_elem(m))));
    if (!chain_is_zero(ops.normalize(ops.cyclic_B(b0)))) bb = false;
  }
  rep.bb_zero_ok = bb;

  Chain w2 = cycles::omega2_case2(A, N, N / 2);
  Chain kp = cycles::kappa2_case2(A, N, N / 2);
  bool refuted = false;
  rep.nontriviality = "unresolved";
  for (long m = 0; m <= win.margin; m++) {
    Window probe{win.I, win.L, m};
    try {
      std::optional<Chain> pre = is_boundary(A, sigma, z, probe, column_cap);
      if (pre) {
        rep.nontriviality = "boundary preimage found at margin " + std::to_string(m);
        refuted = true;
      } else {
        rep.nontriviality = "no preimage up to margin " + std::to_string(m);
      }
    } catch (const std::runtime_error&) {
      rep.notes.push_back("preimage search hit the column cap at margin " +
                          std::to_string(m));
      break;
    }
    if (refuted) break;
  }

  rep.proportionality = "unresolved";
  rep.residual = "unresolved";
  for (long m = 0; m <= win.margin; m++) {
    Window probe{win.I, win.L, m};
    try {
      detail::BoundarySolve sol =
          detail::boundary_solve(A, sigma, z, probe, {w2, kp}, column_cap);
      if (sol.found) {
        rep.proportionality = scalar_str(sol.extras[0]);
        rep.residual = scalar_str(sol.extras[1]);
        Chain rhs = chain_add(ops.boundary(sol.preimage),
                              chain_add(chain_scale(w2, sol.extras[0]),
                                        chain_scale(kp, sol.extras[1])));
        if (!chain_eq(rhs, z)) rep.proportionality = "certificate failed";
        if (sol.extras[0].is_zero()) refuted = true;
        if (!sol.extras[1].is_zero())
          rep.notes.push_back("expansion carries a kappa_2 component");
        break;
      }
    } catch (const std::runtime_error&) {
      rep.notes.push_back("class expansion search hit the column cap at margin " +
                          std::to_string(m));
      break;
    }
  }

  // Injectivity evidence for the degree-two cyclic operator: pair verified
  // 3-cocycles against the transgressions of the degree-2 generators.
  std::vector<Chain> b2;
  for (long i = 0; i <= N; i++)
    b2.push_back(ops.normalize(ops.cyclic_B(cycles::omega2_case2(A, N, i))));
  std::vector<Derivation> pool = {Derivation::deg_a(), Derivation::deg_b(),
                                  Derivation::deg_0()};
  std::vector<Monomial> small = monomial_window(1, 1);
  ColumnReducer rank(ctx);
  for (long i = 0; i <= N; i++) {
    long n = 2 * i - N;
    for (size_t d1 = 0; d1 < pool.size() && rank.rank() <= N; d1++) {
      for (size_t d2 = 0; d2 < pool.size(); d2++) {
        Cochain phi = Cochain::tower(
            Functional::pow_trace(ctx, n, one),
            {pool[d1], pool[d2], Derivation::twisted(sigma.lambda)});
        SparseCol col;
        for (size_t j = 0; j < b2.size(); j++) {
          Scalar v = pairing(A, phi, b2[j]);
          if (!v.is_zero()) col[static_cast<long>(j)] = v;
        }
        if (col.empty()) continue;
        if (!rank.contains(col) && is_cocycle_on_window(A, ops, phi, small))
          rank.append(col);
      }
    }
  }
  rep.dual_rank = rank.rank();
  if (rep.dual_rank < N + 1)
    rep.notes.push_back("cyclic operator injectivity evidence incomplete");

  bool prop_ok = rep.proportionality != "unresolved" &&
                 rep.proportionality != "certificate failed" && !refuted;
  rep.consistent = rep.cycle_ok && rep.bb_zero_ok && !refuted &&
                   rep.nontriviality.rfind("no preimage", 0) == 0 && prop_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Invariant 4-cocycle
// ---------------------------------------------------------------------------

struct S2hReport {
  bool haar_ok = false;        // invariant integral matches the power trace
  bool hochschild_ok = false;  // the 5-slot functional vanishes on boundaries
  bool cyclic_ok = false;      // and is fixed by the twisted cyclic rotation
  Scalar unit_value;
  Scalar bc_value;
  bool ok = false;
};

// The invariant integral composed with total multiplication of five slots,
// checked as a twisted Hochschild and cyclic 4-cocycle on a small window.
inline S2hReport s2h_check(const Algebra& A, long haar_I = 3, long haar_L = 8) {
  const QContext& ctx = A.ctx;
  S2hReport rep;
  Automorphism sigma{ctx.qpow(2), ctx.one()};
  ChainOps ops(A, sigma);

  Functional trace = Functional::pow_trace(ctx, 0, ctx.qpow(2));
  rep.haar_ok = true;
  for (const Monomial& m : monomial_window(haar_I, haar_L))
    if (!(A.haar(A.monomial_elem(m)) - trace.value(m)).is_zero()) rep.haar_ok = false;

  auto ev = [&](const Chain& ch) {
    Scalar s = ctx.zero();
    for (const auto& [t, c] : ch.terms) {
      Elem prod = A.monomial_elem(t[0]);
      for (size_t p = 1; p < t.size(); p++) prod = A.mul(prod, A.monomial_elem(t[p]));
      s = s + c * A.haar(prod);
    }
    return s;
  };

  std::vector<Monomial> window = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}};
  rep.hochschild_ok = true;
  for_tuples(window, 6, [&](const std::vector<Monomial>& t) {
    Chain ch{5, {}};
    add_tuple(ch, t, ctx.one());
    if (!ev(ops.boundary(ch)).is_zero()) rep.hochschild_ok = false;
  });
  rep.cyclic_ok = true;
  for_tuples(window, 5, [&](const std::vector<Monomial>& t) {
    Chain ch{4, {}};
    add_tuple(ch, t, ctx.one());
    if (!(ev(ops.cyclic_t(ch)) - ev(ch)).is_zero()) rep.cyclic_ok = false;
  });

  Chain unit{4, {}};
  add_tuple(unit, {Monomial{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
            ctx.one());
  rep.unit_value = ev(unit);
  Chain bc{4, {}};
  add_tuple(bc, {Monomial{0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
            ctx.one());
  rep.bc_value = ev(bc);
  rep.ok = rep.haar_ok && rep.hochschild_ok && rep.cyclic_ok &&
           (rep.unit_value - ctx.one()).is_zero() &&
           (rep.bc_value - A.haar(A.mul(A.gen(Gen::B), A.gen(Gen::C)))).is_zero();
  return rep;
}

}  // namespace qsl2
