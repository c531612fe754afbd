#include "qsl2/chains.hpp"

#include <gtest/gtest.h>

#include "util.hpp"

namespace qsl2 {
namespace {

using testutil::generic_ctx;
using testutil::rand_automorphism;
using testutil::rand_chain;
using testutil::rand_monomial;
using testutil::rint;

Chain one_tuple(const Algebra& A, std::vector<Monomial> t) {
  Chain ch{static_cast<long>(t.size()) - 1, {}};
  add_tuple(ch, t, A.ctx.one());
  return ch;
}

TEST(Chains, BoundaryOnPairs) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; trial++) {
    Automorphism sigma = rand_automorphism(A, rng);
    ChainOps ops(A, sigma);
    Monomial x = rand_monomial(rng), y = rand_monomial(rng);
    Chain b = ops.boundary(one_tuple(A, {x, y}));
    Elem expect = elem_sub(A.mul(A.monomial_elem(x), A.monomial_elem(y)),
                           A.mul(sigma.apply(A.monomial_elem(y)), A.monomial_elem(x)));
    Chain want{0, {}};
    for (const auto& [m, c] : expect) add_tuple(want, {m}, c);
    EXPECT_TRUE(chain_eq(b, want));
  }

  ChainOps ops(A, Automorphism{ctx.qpow(2), ctx.qpow(-1)});
  Monomial unit{0, 0, 0};
  Chain b3 = ops.boundary(one_tuple(A, {unit, unit, unit}));
  EXPECT_TRUE(chain_eq(b3, one_tuple(A, {unit, unit})));
}

TEST(Chains, BoundarySquaredIsZero) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(22);
  for (long arity : {2L, 3L}) {
    for (int trial = 0; trial < 12; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      EXPECT_TRUE(chain_is_zero(ops.boundary(ops.boundary(ch))));
    }
  }
}

TEST(Chains, ParacyclicIdentity) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(23);
  for (long arity : {1L, 2L}) {
    for (int trial = 0; trial < 8; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      Chain lhs = ops.boundary(ops.cyclic_B_composite(ch));
      lhs = chain_add(lhs, ops.cyclic_B_composite(ops.boundary(ch)));
      Chain rhs = chain_sub(ch, ops.cyclic_T(ch));
      EXPECT_TRUE(chain_eq(lhs, rhs));
    }
  }
}

TEST(Chains, NormalizedBMatchesComposite) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(24);
  for (long arity : {0L, 1L, 2L}) {
    for (int trial = 0; trial < 8; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      EXPECT_TRUE(chain_eq(ops.normalize(ops.cyclic_B_composite(ch)),
                           ops.normalize(ops.cyclic_B(ch))));
      EXPECT_TRUE(chain_is_zero(ops.normalize(ops.cyclic_B(ops.cyclic_B(ch)))));
    }
  }

  Automorphism sigma{ctx.qpow(-3), ctx.qpow(1)};
  ChainOps ops(A, sigma);
  Monomial x = {1, 1, 0}, y = {0, 0, 2};
  Chain b0 = ops.cyclic_B(one_tuple(A, {x}));
  EXPECT_TRUE(chain_eq(b0, one_tuple(A, {{0, 0, 0}, x})));
  Chain b1 = ops.cyclic_B(one_tuple(A, {x, y}));
  Chain want = chain_sub(one_tuple(A, {{0, 0, 0}, x, y}),
                         chain_scale(one_tuple(A, {{0, 0, 0}, y, x}), sigma.coeff(y)));
  EXPECT_TRUE(chain_eq(b1, want));
}

TEST(Chains, ModuleBoundarySquaredIsZero) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(25);
  for (long arity : {2L, 3L}) {
    for (int trial = 0; trial < 10; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      EXPECT_TRUE(chain_is_zero(ops.tor_boundary(ops.tor_boundary(ch))));
    }
  }
}

TEST(Chains, ModuleBoundaryOnPairs) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 20; trial++) {
    Automorphism sigma = rand_automorphism(A, rng);
    ChainOps ops(A, sigma);
    Monomial x = rand_monomial(rng), y = rand_monomial(rng);
    Chain d = ops.tor_boundary(one_tuple(A, {x, y}));
    Elem expect = A.act(A.monomial_elem(x), A.monomial_elem(y), sigma);
    expect = elem_sub(expect,
                      elem_scale(A.monomial_elem(x), A.counit(A.monomial_elem(y))));
    Chain want{0, {}};
    for (const auto& [m, c] : expect) add_tuple(want, {m}, c);
    EXPECT_TRUE(chain_eq(d, want));
  }
}

TEST(Chains, TranslationsAreInverse) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(27);
  for (long arity : {1L, 2L}) {
    for (int trial = 0; trial < 8; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      EXPECT_TRUE(chain_eq(ops.from_tor(ops.to_tor(ch)), ch));
      EXPECT_TRUE(chain_eq(ops.to_tor(ops.from_tor(ch)), ch));
    }
  }
}

TEST(Chains, TranslationIntertwinesBoundaries) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  std::mt19937_64 rng(28);
  for (long arity : {1L, 2L}) {
    for (int trial = 0; trial < 8; trial++) {
      ChainOps ops(A, rand_automorphism(A, rng));
      Chain ch = rand_chain(A, rng, arity);
      EXPECT_TRUE(chain_eq(ops.boundary(ops.from_tor(ch)), ops.from_tor(ops.tor_boundary(ch))));
      EXPECT_TRUE(chain_eq(ops.tor_boundary(ops.to_tor(ch)), ops.to_tor(ops.boundary(ch))));
    }
  }
}

TEST(Chains, PowerTraceMatchesInvariantIntegral) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  Functional h = Functional::pow_trace(ctx, 0, ctx.qpow(2));
  Scalar frozen = -(ctx.qpow(-1) * (ctx.one() - ctx.qpow(-2)) / (ctx.one() - ctx.qpow(-4)));
  EXPECT_TRUE((h.value(Monomial{0, 1, 1}) - frozen).is_zero());
  for (long j = 0; j <= 4; j++) {
    Monomial m{0, j, j};
    EXPECT_TRUE((h.value(m) - A.haar(A.monomial_elem(m))).is_zero());
  }
  EXPECT_TRUE(h.value(Monomial{1, 1, 1}).is_zero());
  EXPECT_TRUE(h.value(Monomial{0, 2, 1}).is_zero());
}

TEST(Chains, PowerTraceGuardsAndDegenerateCase) {
  QContext ctx = generic_ctx();
  EXPECT_THROW(Functional::pow_trace(ctx, 0, ctx.qpow(-2)), std::domain_error);
  EXPECT_THROW(Functional::pow_trace(ctx, 1, ctx.qpow(-5)), std::domain_error);
  Functional delta_b = Functional::pow_trace(ctx, 1, ctx.qpow(-1));
  EXPECT_TRUE((delta_b.value(Monomial{0, 1, 0}) - ctx.one()).is_zero());
  EXPECT_TRUE(delta_b.value(Monomial{0, 2, 1}).is_zero());
  Functional pt = Functional::point(ctx, Monomial{0, 2, 0});
  EXPECT_TRUE((pt.value(Monomial{0, 2, 0}) - ctx.one()).is_zero());
  EXPECT_TRUE(pt.value(Monomial{0, 1, 0}).is_zero());
}

TEST(Chains, TowerCochainFrozenValues) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  Scalar lambda = ctx.qpow(-3);
  Functional h = Functional::pow_trace(ctx, 0, lambda);
  Cochain phi = Cochain::tower(h, {Derivation::deg_0()});
  Chain da = one_tuple(A, {{-1, 0, 0}, {1, 0, 0}});
  Chain bc = one_tuple(A, {{0, 1, 0}, {0, 0, 1}});
  Scalar want_da = lambda * (ctx.one() - ctx.qpow(-2)) / (lambda - ctx.qpow(-2));
  Scalar want_bc = ctx.qpow(1) * (lambda - ctx.one()) / (lambda * ctx.qpow(2) - ctx.one());
  EXPECT_TRUE((pairing(A, phi, da) - want_da).is_zero());
  EXPECT_TRUE((pairing(A, phi, bc) - want_bc).is_zero());
}

TEST(Chains, TableCochainRecursionAndCocycle) {
  QContext ctx = generic_ctx();
  Algebra A(ctx);
  Automorphism sigma{ctx.qpow(-2), ctx.one()};
  ChainOps ops(A, sigma);
  std::map<Gen, std::map<Monomial, Scalar>> table;
  table[Gen::B][Monomial{0, 0, 1}] = ctx.one();
  table[Gen::A][Monomial{-1, 0, 0}] = ctx.qpow(-1);
  table[Gen::D][Monomial{1, 0, 0}] = -ctx.qpow(1);
  table[Gen::C][Monomial{0, 1, 0}] = -ctx.one();
  Cochain phi = Cochain::from_table(sigma, table);

  Chain lookup = one_tuple(A, {{0, 0, 1}, {0, 1, 0}});
  EXPECT_TRUE((pairing(A, phi, lookup) - ctx.one()).is_zero());
  Chain recursive = one_tuple(A, {{-1, 0, 1}, {1, 1, 0}});
  EXPECT_TRUE((pairing(A, phi, recursive) - ctx.qpow(-1)).is_zero());
  Chain rotated = one_tuple(A, {{1, 1, 0}, {-1, 0, 1}});
  EXPECT_TRUE((pairing(A, phi, rotated) + ctx.qpow(1)).is_zero());

  std::vector<Monomial> window = monomial_window(1, 2);
  EXPECT_TRUE(is_cocycle_on_window(A, ops, phi, window));
  EXPECT_TRUE(is_cyclic_on_window(A, ops, phi, window));
}

}  // namespace
}  // namespace qsl2
