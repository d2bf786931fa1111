#include "logdmod/groebner.hpp"

#include <stdexcept>

#include "logdmod/detail/module_gb.hpp"

namespace logdmod {

using detail::AlgebraKind;
using detail::MElem;
using detail::ModuleEngine;

namespace {

int ring_of(std::span<const Poly> ps) {
  if (ps.empty()) return -1;
  int n = ps.front().nvars();
  for (const Poly& p : ps)
    if (p.nvars() != n) throw std::invalid_argument("generators live in different rings");
  return n;
}

ModuleEngine engine_for(int nvars, const TermOrder& order) {
  if (order.nslots() != nvars) throw std::invalid_argument("term order does not match the ring");
  return ModuleEngine(AlgebraKind::Commutative, nvars, ModuleOrder(order));
}

std::vector<MElem> to_elems(const ModuleEngine& eng, std::span<const Poly> ps) {
  std::vector<MElem> r;
  for (const Poly& p : ps) r.push_back(detail::to_melem(eng, p.terms()));
  return r;
}

MElem vector_elem(const ModuleEngine& eng, const PolyVector& v) {
  MElem e;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const Term& t : v[c].terms()) e.push_back({t.mono, static_cast<int>(c), t.coef});
  eng.normalize(e);
  return e;
}

PolyVector elem_vector(const MElem& e, int nvars, std::size_t rank) {
  PolyVector v;
  for (std::size_t c = 0; c < rank; ++c) v.emplace_back(nvars, detail::component_terms(e, static_cast<int>(c)));
  return v;
}

int vectors_ring(std::span<const PolyVector> vs, std::size_t& rank) {
  int n = -1;
  rank = 0;
  for (const PolyVector& v : vs) {
    if (rank == 0) rank = v.size();
    if (v.size() != rank) throw std::invalid_argument("vectors of different lengths");
    for (const Poly& p : v) {
      if (n < 0) n = p.nvars();
      if (p.nvars() != n) throw std::invalid_argument("vectors over different rings");
    }
  }
  return n;
}

}  // namespace

Poly poly_reduce(const Poly& p, std::span<const Poly> basis, const TermOrder& order) {
  ModuleEngine eng = engine_for(p.nvars(), order);
  for (const Poly& b : basis) {
    if (b.nvars() != p.nvars()) throw std::invalid_argument("poly_reduce: ring mismatch");
    if (b.is_zero()) throw std::invalid_argument("poly_reduce: zero basis element");
  }
  std::vector<MElem> bs = to_elems(eng, basis);
  MElem r = eng.reduce(detail::to_melem(eng, p.terms()), bs, true);
  return Poly(p.nvars(), detail::component_terms(r, 0));
}

std::vector<Poly> buchberger_commutative(std::span<const Poly> gens, const TermOrder& order) {
  int n = ring_of(gens);
  if (n < 0) return {};
  ModuleEngine eng = engine_for(n, order);
  std::vector<Poly> out;
  for (const MElem& e : eng.groebner(to_elems(eng, gens))) out.emplace_back(n, detail::component_terms(e, 0));
  return out;
}

std::vector<Poly> buchberger_commutative(std::span<const Poly> gens) {
  int n = ring_of(gens);
  if (n < 0) return {};
  return buchberger_commutative(gens, TermOrder::grevlex(n));
}

bool ideal_member(const Poly& p, std::span<const Poly> gens, const TermOrder& order) {
  if (p.is_zero()) return true;
  std::vector<Poly> gb = buchberger_commutative(gens, order);
  return poly_reduce(p, gb, order).is_zero();
}

bool ideal_member(const Poly& p, std::span<const Poly> gens) {
  return ideal_member(p, gens, TermOrder::grevlex(p.nvars()));
}

bool ideals_equal(std::span<const Poly> a, std::span<const Poly> b) {
  return buchberger_commutative(a) == buchberger_commutative(b);
}

std::vector<Poly> ideal_quotient(std::span<const Poly> gens, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor polynomial");
  const int n = g.nvars();
  std::vector<Poly> nonzero;
  for (const Poly& p : gens)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return {};
  // I ∩ <g> = (t I + (1 - t) <g>) ∩ Q[x], eliminating the tag t with a weight.
  const Poly t = Poly::variable(n + 1, n);
  const Poly one = Poly::constant(n + 1, 1);
  std::vector<Poly> lifted;
  for (const Poly& p : nonzero) lifted.push_back(t * p.extend(n + 1));
  lifted.push_back((one - t) * g.extend(n + 1));
  std::vector<int> weights(static_cast<std::size_t>(n + 1), 0);
  weights.back() = 1;
  std::vector<Poly> gb = buchberger_commutative(lifted, TermOrder::elimination(n + 1, weights));
  std::vector<Poly> out;
  for (const Poly& q : gb) {
    bool has_t = false;
    for (const Term& term : q.terms())
      if (term.mono[static_cast<std::size_t>(n)] != 0) has_t = true;
    if (has_t) continue;
    auto quotient = exact_divide(Poly(n, q.terms()), g);
    if (!quotient) throw std::logic_error("ideal_quotient: intersection element not divisible by g");
    out.push_back(*quotient);
  }
  return buchberger_commutative(out);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
  std::vector<Poly> gens{a};
  std::vector<Poly> q = ideal_quotient(gens, b);  // (<a> : b) = <a / gcd>
  if (q.size() != 1) throw std::logic_error("poly_lcm: quotient of a principal ideal is not principal");
  Poly l = q.front() * b;
  Rational lc = l.leading_term(TermOrder::grevlex(l.nvars())).coef;
  return l * (1 / lc);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  TermOrder ord = TermOrder::grevlex(a.is_zero() ? b.nvars() : a.nvars());
  auto monic = [&](const Poly& p) { return p * (1 / p.leading_term(ord).coef); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  auto g = exact_divide(a * b, poly_lcm(a, b));
  if (!g) throw std::logic_error("poly_gcd: lcm does not divide the product");
  return monic(*g);
}

std::vector<PolyVector> syzygy_module(std::span<const Poly> gens, const TermOrder& order) {
  int n = ring_of(gens);
  if (n < 0) return {};
  ModuleEngine eng = engine_for(n, order);
  std::vector<MElem> elems = to_elems(eng, gens);
  std::vector<PolyVector> out;
  for (const MElem& e : eng.syzygies(elems, 1)) out.push_back(elem_vector(e, n, gens.size()));
  return out;
}

std::vector<PolyVector> syzygy_module(std::span<const Poly> gens) {
  int n = ring_of(gens);
  if (n < 0) return {};
  return syzygy_module(gens, TermOrder::grevlex(n));
}

std::vector<PolyVector> module_groebner(std::span<const PolyVector> gens, const TermOrder& order) {
  std::size_t rank = 0;
  int n = vectors_ring(gens, rank);
  if (n < 0) return {};
  ModuleEngine eng = engine_for(n, order);
  std::vector<MElem> elems;
  for (const PolyVector& v : gens) elems.push_back(vector_elem(eng, v));
  std::vector<PolyVector> out;
  for (const MElem& e : eng.groebner(std::move(elems))) out.push_back(elem_vector(e, n, rank));
  return out;
}

bool module_member(const PolyVector& v, std::span<const PolyVector> gens) {
  std::vector<PolyVector> all(gens.begin(), gens.end());
  all.push_back(v);
  std::size_t rank = 0;
  int n = vectors_ring(all, rank);
  if (n < 0) return true;
  TermOrder order = TermOrder::grevlex(n);
  ModuleEngine eng = engine_for(n, order);
  std::vector<MElem> elems;
  for (const PolyVector& g : gens) elems.push_back(vector_elem(eng, g));
  std::vector<MElem> gb = eng.groebner(std::move(elems));
  return eng.reduce(vector_elem(eng, v), gb, true).empty();
}

bool modules_equal(std::span<const PolyVector> a, std::span<const PolyVector> b) {
  std::size_t rank = 0;
  int n = vectors_ring(a, rank);
  if (n < 0) n = vectors_ring(b, rank);
  if (n < 0) return true;
  TermOrder order = TermOrder::grevlex(n);
  return module_groebner(a, order) == module_groebner(b, order);
}

PolyVector combine(std::span<const Poly> coefficients, std::span<const PolyVector> vectors) {
  if (coefficients.size() != vectors.size() || vectors.empty())
    throw std::invalid_argument("combine: coefficient count mismatch");
  PolyVector r(vectors.front().size(), Poly(coefficients.front().nvars()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t c = 0; c < r.size(); ++c) r[c] += coefficients[i] * vectors[i][c];
  return r;
}

}  // namespace logdmod
