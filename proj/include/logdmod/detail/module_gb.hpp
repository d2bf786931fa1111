#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "logdmod/monomial.hpp"
#include "logdmod/poly.hpp"
#include "logdmod/rational.hpp"
#include "logdmod/term_order.hpp"

namespace logdmod::detail {

// Falling factorial c (c-1) ... (c-k+1).
inline long falling_factorial(int c, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= (c - i);
  return r;
}

inline long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Normal form of (c x^a1 d^a2)(x^b1 d^b2) in A_n:
//   sum_k prod_i C(a2_i, k_i) (b1_i)_(k_i) x^(a1+b1-k) d^(a2+b2-k).
// Each term is passed to emit(monomial, coefficient).
template <typename Emit>
void weyl_monomial_product(int n, const Monomial& a, const Monomial& b, const Rational& c, Emit&& emit) {
  std::array<int, kMaxSlots> limit{};
  bool commuting = true;
  for (int i = 0; i < n; ++i) {
    limit[i] = std::min(a[static_cast<std::size_t>(n + i)], b[static_cast<std::size_t>(i)]);
    if (limit[i] > 0) commuting = false;
  }
  const Monomial base = a * b;
  if (commuting) {
    emit(base, Rational(c));
    return;
  }
  std::array<int, kMaxSlots> k{};
  while (true) {
    Rational coef = c;
    Monomial m = base;
    for (int i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      const auto xi = static_cast<std::size_t>(i);
      const auto di = static_cast<std::size_t>(n + i);
      coef *= binomial(a[di], k[i]) * falling_factorial(b[xi], k[i]);
      m.set(xi, m[xi] - k[i]);
      m.set(di, m[di] - k[i]);
    }
    emit(m, std::move(coef));
    int i = 0;
    for (; i < n; ++i) {
      if (k[i] < limit[i]) {
        ++k[i];
        break;
      }
      k[i] = 0;
    }
    if (i == n) break;
  }
}

enum class AlgebraKind { Commutative, Weyl };

struct MTerm {
  Monomial mono;
  int comp = 0;
  Rational coef;

  bool operator==(const MTerm& o) const {
    return comp == o.comp && mono == o.mono && coef == o.coef;
  }
};

// Element of a free (left) module, terms sorted descending by the engine order.
using MElem = std::vector<MTerm>;

// Left-module Groebner machinery over either Q[x_1..x_n] or the Weyl algebra
// A_n. Weyl monomials use 2n slots: x-exponents in [0, n), d-exponents in
// [n, 2n), always in normal form x^a d^b.
//
// Leading terms multiply (lt(m * g) = m * lt(g)) for both algebras because the
// Weyl commutator corrections are componentwise smaller, so plain Buchberger
// with left S-pairs is correct. The product criterion is only applied in the
// commutative rank-1 case.
class ModuleEngine {
 public:
  ModuleEngine(AlgebraKind kind, int nvars, ModuleOrder order);

  AlgebraKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int nslots() const { return kind_ == AlgebraKind::Weyl ? 2 * nvars_ : nvars_; }
  const ModuleOrder& order() const { return order_; }

  int compare(const MTerm& a, const MTerm& b) const {
    return order_.compare(a.mono, a.comp, b.mono, b.comp);
  }

  // Sort, merge like terms, drop zeros.
  void normalize(MElem& e) const;

  MElem add(const MElem& a, const MElem& b) const;
  // a - c * b
  MElem sub_scaled(const MElem& a, const Rational& c, const MElem& b) const;
  MElem scale(const MElem& a, const Rational& c) const;
  void make_monic(MElem& e) const;

  // (c * m) * g, with m a normal-ordered monomial acting on the left.
  MElem mul_term_left(const Monomial& m, const Rational& c, const MElem& g) const;
  // Left multiplication by a ring element given as canonical terms.
  MElem mul_left(std::span<const Term> ring_elem, const MElem& g) const;

  // Normal form. With full = false only the leading term is reduced repeatedly.
  MElem reduce(MElem f, std::span<const MElem> basis, bool full = true) const;

  // Reduced, monic Groebner basis sorted ascending by leading term.
  std::vector<MElem> groebner(std::vector<MElem> gens) const;

  // Generators of the syzygy module of `gens` (left coefficients), as
  // elements of the free module of rank gens.size().
  std::vector<MElem> syzygies(std::span<const MElem> gens, int rank) const;

  // Product of two normal-ordered Weyl monomials (or commutative product),
  // appended to `out` scaled by c.
  void monomial_product(const Monomial& a, const Monomial& b, const Rational& c, int comp,
                        MElem& out) const;

 private:
  AlgebraKind kind_;
  int nvars_;
  ModuleOrder order_;
};

// Helpers for rank-1 use.
MElem to_melem(const ModuleEngine& eng, std::span<const Term> terms, int comp = 0);
std::vector<Term> component_terms(const MElem& e, int comp);
int max_component(const MElem& e);

}  // namespace logdmod::detail
