#include "qsl2/algebra.hpp"

#include <gtest/gtest.h>

#include "util.hpp"

using namespace qsl2;
using namespace qsl2::testutil;

namespace {

struct Fix {
  Algebra A{generic_ctx()};
  Elem a = A.gen(Gen::A);
  Elem b = A.gen(Gen::B);
  Elem c = A.gen(Gen::C);
  Elem d = A.gen(Gen::D);
  Scalar q = A.ctx.qpow(1);
};

TEST(Algebra, DefiningRelations) {
  Fix f;
  auto& A = f.A;
  EXPECT_TRUE(elem_eq(A.mul(f.a, f.b), elem_scale(A.mul(f.b, f.a), f.q)));
  EXPECT_TRUE(elem_eq(A.mul(f.a, f.c), elem_scale(A.mul(f.c, f.a), f.q)));
  EXPECT_TRUE(elem_eq(A.mul(f.b, f.d), elem_scale(A.mul(f.d, f.b), f.q)));
  EXPECT_TRUE(elem_eq(A.mul(f.c, f.d), elem_scale(A.mul(f.d, f.c), f.q)));
  EXPECT_TRUE(elem_eq(A.mul(f.b, f.c), A.mul(f.c, f.b)));
  Elem bc = A.mul(f.b, f.c);
  EXPECT_TRUE(elem_eq(elem_sub(A.mul(f.a, f.d), elem_scale(bc, f.q)), A.unit()));
  EXPECT_TRUE(elem_eq(elem_sub(A.mul(f.d, f.a), elem_scale(bc, f.q.inv())), A.unit()));
}

TEST(Algebra, NormalFormSamples) {
  Fix f;
  auto& A = f.A;
  // d a^2 b = ab + q^{-3} ab^2c
  Elem lhs = A.mul(f.d, parse_elem(A, "a^2*b"));
  Elem rhs = elem_add(A.monomial(1, 1, 0), A.monomial(1, 2, 1, A.ctx.qpow(-3)));
  EXPECT_TRUE(elem_eq(lhs, rhs));
  // bc * a = q^{-2} abc
  EXPECT_TRUE(elem_eq(A.mul(A.monomial(0, 1, 1), f.a), A.monomial(1, 1, 1, A.ctx.qpow(-2))));
}

TEST(Algebra, AssociativityRandom) {
  Fix f;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; t++) {
    Elem x = rand_elem(f.A, rng), y = rand_elem(f.A, rng), z = rand_elem(f.A, rng);
    EXPECT_TRUE(elem_eq(f.A.mul(f.A.mul(x, y), z), f.A.mul(x, f.A.mul(y, z))));
  }
}

TEST(Algebra, CounitIsAHomomorphism) {
  Fix f;
  std::mt19937_64 rng(12);
  EXPECT_TRUE(f.A.counit(parse_elem(f.A, "a^2")) == f.A.ctx.one());
  EXPECT_TRUE(f.A.counit(parse_elem(f.A, "a*b")).is_zero());
  for (int t = 0; t < 40; t++) {
    Elem x = rand_elem(f.A, rng), y = rand_elem(f.A, rng);
    EXPECT_TRUE(f.A.counit(f.A.mul(x, y)) == f.A.counit(x) * f.A.counit(y));
  }
}

TEST(Algebra, CoproductIsAHomomorphism) {
  Fix f;
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; t++) {
    Elem x = rand_elem(f.A, rng, 2, 1, 1), y = rand_elem(f.A, rng, 2, 1, 1);
    EXPECT_TRUE(f.A.tensor_mul(f.A.coproduct(x), f.A.coproduct(y)) == f.A.coproduct(f.A.mul(x, y)));
  }
}

TEST(Algebra, CounitAxiom) {
  Fix f;
  std::mt19937_64 rng(14);
  for (int t = 0; t < 25; t++) {
    Elem x = rand_elem(f.A, rng);
    Elem left, right;
    for (const auto& [p, cv] : f.A.coproduct(x)) {
      add_term(left, p.second, cv * f.A.counit(f.A.monomial_elem(p.first)));
      add_term(right, p.first, cv * f.A.counit(f.A.monomial_elem(p.second)));
    }
    EXPECT_TRUE(elem_eq(left, x));
    EXPECT_TRUE(elem_eq(right, x));
  }
}

TEST(Algebra, AntipodeAxiom) {
  Fix f;
  std::mt19937_64 rng(15);
  for (int t = 0; t < 15; t++) {
    Elem x = rand_elem(f.A, rng, 2, 1, 1);
    Elem left, right;
    for (const auto& [p, cv] : f.A.coproduct(x)) {
      Elem l = f.A.mul(f.A.antipode(f.A.monomial_elem(p.first)), f.A.monomial_elem(p.second));
      Elem r = f.A.mul(f.A.monomial_elem(p.first), f.A.antipode(f.A.monomial_elem(p.second)));
      left = elem_add(left, elem_scale(l, cv));
      right = elem_add(right, elem_scale(r, cv));
    }
    Elem expect = elem_scale(f.A.unit(), f.A.counit(x));
    EXPECT_TRUE(elem_eq(left, expect));
    EXPECT_TRUE(elem_eq(right, expect));
  }
}

TEST(Algebra, AntipodeValues) {
  Fix f;
  auto& A = f.A;
  EXPECT_TRUE(elem_eq(A.antipode(f.a), f.d));
  EXPECT_TRUE(elem_eq(A.antipode(f.b), elem_scale(f.b, -A.ctx.qpow(-1))));
  EXPECT_TRUE(elem_eq(A.antipode(f.c), elem_scale(f.c, -f.q)));
  EXPECT_TRUE(elem_eq(A.antipode(f.d), f.a));
  EXPECT_TRUE(elem_eq(A.antipode(parse_elem(A, "a^3")), parse_elem(A, "d^3")));
  EXPECT_TRUE(elem_eq(A.antipode(parse_elem(A, "d^2")), parse_elem(A, "a^2")));
}

TEST(Algebra, AntipodeIsAnAntihomomorphism) {
  Fix f;
  std::mt19937_64 rng(16);
  for (int t = 0; t < 15; t++) {
    Elem x = rand_elem(f.A, rng, 2, 1, 1), y = rand_elem(f.A, rng, 2, 1, 1);
    EXPECT_TRUE(elem_eq(f.A.antipode(f.A.mul(x, y)), f.A.mul(f.A.antipode(y), f.A.antipode(x))));
  }
}

TEST(Algebra, AutomorphismsAreHomomorphisms) {
  Fix f;
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; t++) {
    Automorphism s = rand_automorphism(f.A, rng);
    Elem x = rand_elem(f.A, rng), y = rand_elem(f.A, rng);
    EXPECT_TRUE(elem_eq(s.apply(f.A.mul(x, y)), f.A.mul(s.apply(x), s.apply(y))));
    // the flip family too
    Elem fx = f.A.flip(x, s.lambda, s.mu), fy = f.A.flip(y, s.lambda, s.mu);
    EXPECT_TRUE(elem_eq(f.A.flip(f.A.mul(x, y), s.lambda, s.mu), f.A.mul(fx, fy)));
  }
}

TEST(Algebra, DiagonalDerivations) {
  Fix f;
  Elem x = f.A.monomial(-2, 3, 1);
  EXPECT_TRUE(elem_eq(Derivation::deg_a().apply(f.A, x), elem_scale(x, f.A.ctx.integer(-2))));
  EXPECT_TRUE(elem_eq(Derivation::deg_b().apply(f.A, x), elem_scale(x, f.A.ctx.integer(2))));
  EXPECT_TRUE(elem_eq(Derivation::deg_0().apply(f.A, x), elem_scale(x, f.A.ctx.integer(0))));
}

TEST(Algebra, TwistedLeibnizRule) {
  Fix f;
  std::mt19937_64 rng(18);
  Scalar lam = f.A.ctx.qpow(-3);
  Derivation der = Derivation::twisted(lam);
  Automorphism s{lam, f.A.ctx.one()};
  for (int t = 0; t < 25; t++) {
    Elem u = rand_elem(f.A, rng), v = rand_elem(f.A, rng);
    Elem lhs = der.apply(f.A, f.A.mul(u, v));
    Elem rhs = elem_add(f.A.mul(u, der.apply(f.A, v)), f.A.mul(der.apply(f.A, u), s.apply(v)));
    EXPECT_TRUE(elem_eq(lhs, rhs));
  }
}

TEST(Algebra, InnerDerivationLeibniz) {
  Fix f;
  std::mt19937_64 rng(19);
  Derivation der = Derivation::commutator(parse_elem(f.A, "a*b"));
  for (int t = 0; t < 10; t++) {
    Elem u = rand_elem(f.A, rng), v = rand_elem(f.A, rng);
    Elem lhs = der.apply(f.A, f.A.mul(u, v));
    Elem rhs = elem_add(f.A.mul(u, der.apply(f.A, v)), f.A.mul(der.apply(f.A, u), v));
    EXPECT_TRUE(elem_eq(lhs, rhs));
  }
}

TEST(Algebra, HaarValues) {
  Fix f;
  auto& ctx = f.A.ctx;
  EXPECT_TRUE(f.A.haar(f.A.unit()) == ctx.one());
  Scalar expect_bc = -ctx.qpow(-1) * (ctx.one() - ctx.qpow(-2)) / (ctx.one() - ctx.qpow(-4));
  EXPECT_TRUE(f.A.haar(parse_elem(f.A, "b*c")) == expect_bc);
  Scalar expect_b2c2 = ctx.qpow(-2) * (ctx.one() - ctx.qpow(-2)) / (ctx.one() - ctx.qpow(-6));
  EXPECT_TRUE(f.A.haar(parse_elem(f.A, "b^2*c^2")) == expect_b2c2);
  EXPECT_TRUE(f.A.haar(parse_elem(f.A, "a*b")).is_zero());
}

TEST(Algebra, HaarInvariance) {
  Fix f;
  std::mt19937_64 rng(20);
  for (int t = 0; t < 15; t++) {
    Elem x = rand_elem(f.A, rng, 2, 1, 2);
    Elem left, right;
    for (const auto& [p, cv] : f.A.coproduct(x)) {
      add_term(left, p.second, cv * f.A.haar(f.A.monomial_elem(p.first)));
      add_term(right, p.first, cv * f.A.haar(f.A.monomial_elem(p.second)));
    }
    Elem expect = elem_scale(f.A.unit(), f.A.haar(x));
    EXPECT_TRUE(elem_eq(left, expect));
    EXPECT_TRUE(elem_eq(right, expect));
  }
}

TEST(Algebra, HaarModularProperty) {
  Fix f;
  std::mt19937_64 rng(21);
  Automorphism mod{f.A.ctx.qpow(-2), f.A.ctx.one()};
  for (int t = 0; t < 25; t++) {
    Elem x = rand_elem(f.A, rng), y = rand_elem(f.A, rng);
    EXPECT_TRUE(f.A.haar(f.A.mul(x, y)) == f.A.haar(f.A.mul(y, mod.apply(x))));
  }
}

TEST(Algebra, ActionClosedFormOracle) {
  Fix f;
  auto& ctx = f.A.ctx;
  Automorphism s{ctx.qpow(-1), ctx.qpow(1)};
  // b <| a = lambda^{-1} q^{-1} b + lambda^{-1} q^{-2} (1 - q^3 lambda/mu) b^2 c
  Elem got = f.A.act_gen(f.b, Gen::A, s);
  Elem expect = elem_add(
      f.A.monomial(0, 1, 0, s.lambda.inv() * ctx.qpow(-1)),
      f.A.monomial(0, 2, 1, s.lambda.inv() * ctx.qpow(-2) *
                                (ctx.one() - ctx.qpow(3) * s.lambda / s.mu)));
  EXPECT_TRUE(elem_eq(got, expect));
}

TEST(Algebra, ActionMatchesHopfForm) {
  Fix f;
  std::mt19937_64 rng(22);
  for (int t = 0; t < 12; t++) {
    Automorphism s = rand_automorphism(f.A, rng);
    Elem m = rand_elem(f.A, rng, 2, 1, 1);
    for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D})
      EXPECT_TRUE(elem_eq(f.A.act(m, f.A.gen(g), s), f.A.act_hopf(m, f.A.gen(g), s)));
    Elem y = rand_elem(f.A, rng, 1, 1, 1);
    EXPECT_TRUE(elem_eq(f.A.act(m, y, s), f.A.act_hopf(m, y, s)));
  }
}

TEST(Algebra, ActionIsARightAction) {
  Fix f;
  std::mt19937_64 rng(23);
  for (int t = 0; t < 12; t++) {
    Automorphism s = rand_automorphism(f.A, rng);
    Elem m = rand_elem(f.A, rng, 2, 1, 1);
    Elem x = rand_elem(f.A, rng, 1, 1, 1), y = rand_elem(f.A, rng, 1, 1, 1);
    EXPECT_TRUE(elem_eq(f.A.act(f.A.act(m, x, s), y, s), f.A.act(m, f.A.mul(x, y), s)));
    EXPECT_TRUE(elem_eq(f.A.act(m, f.A.unit(), s), m));
  }
}

TEST(Algebra, TextRoundTrip) {
  Fix f;
  std::mt19937_64 rng(24);
  EXPECT_TRUE(elem_eq(parse_elem(f.A, "a*b"), f.A.monomial(1, 1, 0)));
  EXPECT_TRUE(elem_eq(parse_elem(f.A, "d^2*b*c^3"), f.A.monomial(-2, 1, 3)));
  // non-normal order multiplies out: b*a = q^{-1} ab
  EXPECT_TRUE(elem_eq(parse_elem(f.A, "b*a"), f.A.monomial(1, 1, 0, f.A.ctx.qpow(-1))));
  for (int t = 0; t < 40; t++) {
    Elem x = rand_elem(f.A, rng, 3);
    EXPECT_TRUE(elem_eq(parse_elem(f.A, elem_str(x)), x)) << elem_str(x);
  }
  Algebra S(q2_ctx());
  for (int t = 0; t < 20; t++) {
    Elem x = rand_elem(S, rng, 3);
    EXPECT_TRUE(elem_eq(parse_elem(S, elem_str(x)), x)) << elem_str(x);
  }
}

}  // namespace
