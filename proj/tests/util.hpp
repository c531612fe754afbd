#pragma once

#include "qsl2/chains.hpp"

#include <random>

namespace qsl2::testutil {

inline QContext generic_ctx() { return QContext{QMode::Generic, Rat(0)}; }
inline QContext q2_ctx() { return QContext{QMode::Specialized, Rat(2)}; }

// Bounded sampling off the raw engine; std::uniform_int_distribution is
// implementation-defined and would break byte-identical reports.
inline long rint(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Monomial rand_monomial(std::mt19937_64& rng, long imax = 2, long lmax = 2) {
  return Monomial{rint(rng, -imax, imax), rint(rng, 0, lmax), rint(rng, 0, lmax)};
}

inline Scalar rand_coeff(const QContext& ctx, std::mt19937_64& rng) {
  long n = rint(rng, -3, 3);
  if (n == 0) n = 1;
  return ctx.integer(n) * ctx.qpow(rint(rng, -2, 2));
}

inline Elem rand_elem(const Algebra& A, std::mt19937_64& rng, long terms = 2, long imax = 2,
                      long lmax = 2) {
  Elem e;
  for (long t = 0; t < terms; t++)
    add_term(e, rand_monomial(rng, imax, lmax), rand_coeff(A.ctx, rng));
  return e;
}

inline Automorphism rand_automorphism(const Algebra& A, std::mt19937_64& rng) {
  return Automorphism{A.ctx.qpow(rint(rng, -3, 3)), A.ctx.qpow(rint(rng, -3, 3))};
}

inline Chain rand_chain(const Algebra& A, std::mt19937_64& rng, long arity, long terms = 2,
                        long imax = 1, long lmax = 1) {
  Chain ch{arity, {}};
  for (long t = 0; t < terms; t++) {
    std::vector<Monomial> tuple;
    for (long s = 0; s <= arity; s++) tuple.push_back(rand_monomial(rng, imax, lmax));
    add_tuple(ch, tuple, rand_coeff(A.ctx, rng));
  }
  return ch;
}

}  // namespace qsl2::testutil
