#pragma once

// The small free resolution built from a three-by-three matrix of degree-one
// elements satisfying a braid-type exchange relation, the complexes obtained
// by tensoring with a twisted coefficient module, and the comparison maps
// into the module-coefficient bar complex.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qsl2/chains.hpp"

namespace qsl2 {

class Koszul {
 public:
  explicit Koszul(const Algebra& algebra) : A(algebra) {}

  const Algebra& A;

  // Row r of the matrix is (q^{1-r} a - 1, b, c), rows and columns 1-based.
  Elem xentry(long row, long col) const {
    if (row < 1 || row > 3 || col < 1 || col > 3) throw std::logic_error("matrix index");
    switch (col) {
      case 1: return elem_sub(A.monomial(1, 0, 0, A.ctx.qpow(1 - row)), A.unit());
      case 2: return A.monomial(0, 1, 0);
      default: return A.monomial(0, 0, 1);
    }
  }

  // Basis of the degree-n term: strictly increasing index tuples in {1,2,3}.
  static const std::vector<std::vector<long>>& basis(long n) {
    static const std::vector<std::vector<std::vector<long>>> all = {
        {{}},
        {{1}, {2}, {3}},
        {{1, 2}, {1, 3}, {2, 3}},
        {{1, 2, 3}},
    };
    if (n < 0 || n > 3) throw std::logic_error("resolution degree out of range");
    return all[static_cast<size_t>(n)];
  }

  static long dim(long n) { return static_cast<long>(basis(n).size()); }

  static long basis_position(long n, const std::vector<long>& index) {
    const auto& b = basis(n);
    for (size_t p = 0; p < b.size(); p++)
      if (b[p] == index) return static_cast<long>(p);
    throw std::logic_error("unknown basis index");
  }

  // Boundary of the resolution: delete one index and multiply the
  // coefficient on the right by the matching matrix entry, with an
  // alternating sign from the back.
  std::vector<Elem> boundary(long n, const std::vector<Elem>& coeffs) const {
    check_size(n, coeffs);
    std::vector<Elem> out(static_cast<size_t>(dim(n - 1)));
    for (size_t p = 0; p < coeffs.size(); p++) {
      if (coeffs[p].empty()) continue;
      const std::vector<long>& index = basis(n)[p];
      for (long r = 1; r <= n; r++) {
        std::vector<long> rest = index;
        rest.erase(rest.begin() + (r - 1));
        Elem term = A.mul(coeffs[p], xentry(n, index[static_cast<size_t>(r - 1)]));
        if ((n - r) % 2 != 0) term = elem_scale(term, -A.ctx.one());
        size_t target = static_cast<size_t>(basis_position(n - 1, rest));
        out[target] = elem_add(out[target], term);
      }
    }
    return out;
  }

  // Comparison map into the module-coefficient bar complex: each basis
  // index tuple expands to the signed sum over permutations of tensor
  // words in the matrix entries, top row first.
  Chain compare(long n, const std::vector<Elem>& coeffs) const {
    check_size(n, coeffs);
    Chain out{n, {}};
    for (size_t p = 0; p < coeffs.size(); p++) {
      if (coeffs[p].empty()) continue;
      const std::vector<long>& index = basis(n)[p];
      std::vector<long> perm(static_cast<size_t>(n));
      for (long s = 0; s < n; s++) perm[static_cast<size_t>(s)] = s;
      do {
        std::vector<Elem> slots;
        slots.push_back(coeffs[p]);
        for (long s = n - 1; s >= 0; s--)
          slots.push_back(xentry(s + 1, index[static_cast<size_t>(perm[static_cast<size_t>(s)])]));
        emit_product(out, slots, parity(perm) ? -A.ctx.one() : A.ctx.one());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }

 private:
  static void check_size(long n, const std::vector<Elem>& coeffs) {
    if (n < 1 || n > 3) throw std::logic_error("resolution degree out of range");
    if (static_cast<long>(coeffs.size()) != dim(n)) throw std::logic_error("coefficient size");
  }

  static bool parity(const std::vector<long>& perm) {
    bool odd = false;
    for (size_t i = 0; i < perm.size(); i++)
      for (size_t j = i + 1; j < perm.size(); j++)
        if (perm[i] > perm[j]) odd = !odd;
    return odd;
  }

  // Distributes a product of element slots into monomial tuples.
  static void emit_product(Chain& out, const std::vector<Elem>& slots, const Scalar& sign) {
    std::vector<Elem::const_iterator> pos;
    for (const Elem& e : slots) {
      if (e.empty()) return;
      pos.push_back(e.begin());
    }
    while (true) {
      std::vector<Monomial> t;
      Scalar c = sign;
      for (const auto& it : pos) {
        t.push_back(it->first);
        c = c * it->second;
      }
      add_tuple(out, t, c);
      long s = static_cast<long>(pos.size()) - 1;
      while (s >= 0) {
        ++pos[static_cast<size_t>(s)];
        if (pos[static_cast<size_t>(s)] != slots[static_cast<size_t>(s)].end()) break;
        pos[static_cast<size_t>(s)] = slots[static_cast<size_t>(s)].begin();
        s--;
      }
      if (s < 0) break;
    }
  }
};

// The complex obtained from the resolution by passing to the twisted
// coefficient module: coefficients act on the right through the module
// action instead of by multiplication.
class InducedComplex {
 public:
  InducedComplex(const Algebra& algebra, const Automorphism& twist)
      : A(algebra), sigma(twist), kz(algebra) {}

  const Algebra& A;
  Automorphism sigma;

  std::vector<Elem> map(long n, const std::vector<Elem>& coeffs) const {
    if (n < 1 || n > 3) throw std::logic_error("resolution degree out of range");
    if (static_cast<long>(coeffs.size()) != Koszul::dim(n))
      throw std::logic_error("coefficient size");
    std::vector<Elem> out(static_cast<size_t>(Koszul::dim(n - 1)));
    for (size_t p = 0; p < coeffs.size(); p++) {
      if (coeffs[p].empty()) continue;
      const std::vector<long>& index = Koszul::basis(n)[p];
      for (long r = 1; r <= n; r++) {
        std::vector<long> rest = index;
        rest.erase(rest.begin() + (r - 1));
        Elem term = A.act(coeffs[p], kz.xentry(n, index[static_cast<size_t>(r - 1)]), sigma);
        if ((n - r) % 2 != 0) term = elem_scale(term, -A.ctx.one());
        size_t target = static_cast<size_t>(Koszul::basis_position(n - 1, rest));
        out[target] = elem_add(out[target], term);
      }
    }
    return out;
  }

 private:
  Koszul kz;
};

}  // namespace qsl2
