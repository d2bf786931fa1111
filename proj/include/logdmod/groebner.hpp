#pragma once

#include <span>
#include <vector>

#include "logdmod/poly.hpp"
#include "logdmod/term_order.hpp"

// Commutative Groebner bases over Q[x_1..x_n]: reduction, reduced bases,
// membership, ideal quotients, gcds and syzygy modules.
namespace logdmod {

// Normal form of p against `basis` (not necessarily a Groebner basis). The
// first basis element whose leading monomial divides the current leading term
// is used, so the result is deterministic for a fixed basis sequence.
Poly poly_reduce(const Poly& p, std::span<const Poly> basis, const TermOrder& order);

// Reduced Groebner basis, monic, sorted ascending by leading monomial. Zero
// generators are dropped; the zero ideal yields an empty basis.
std::vector<Poly> buchberger_commutative(std::span<const Poly> gens, const TermOrder& order);
std::vector<Poly> buchberger_commutative(std::span<const Poly> gens);

bool ideal_member(const Poly& p, std::span<const Poly> gens);
bool ideal_member(const Poly& p, std::span<const Poly> gens, const TermOrder& order);

bool ideals_equal(std::span<const Poly> a, std::span<const Poly> b);

// Generators of (I : g) = {p : p g in I}. Throws when g is zero.
std::vector<Poly> ideal_quotient(std::span<const Poly> gens, const Poly& g);

// Monic generator of the intersection of principal ideals, i.e. lcm(a, b).
Poly poly_lcm(const Poly& a, const Poly& b);
// gcd normalized to leading coefficient 1 under grevlex; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Generators of {(g_1..g_k) : sum g_i gens_i = 0}.
std::vector<PolyVector> syzygy_module(std::span<const Poly> gens, const TermOrder& order);
std::vector<PolyVector> syzygy_module(std::span<const Poly> gens);

// Submodules of Q[x]^r given by generating vectors.
std::vector<PolyVector> module_groebner(std::span<const PolyVector> gens, const TermOrder& order);
bool module_member(const PolyVector& v, std::span<const PolyVector> gens);
bool modules_equal(std::span<const PolyVector> a, std::span<const PolyVector> b);

// Polynomial combination sum_i c_i v_i.
PolyVector combine(std::span<const Poly> coefficients, std::span<const PolyVector> vectors);

}  // namespace logdmod
