#include "logdmod/detail/module_gb.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace logdmod::detail {

ModuleEngine::ModuleEngine(AlgebraKind kind, int nvars, ModuleOrder order)
    : kind_(kind), nvars_(nvars), order_(std::move(order)) {
  if (nvars < 0 || nslots() > static_cast<int>(kMaxSlots))
    throw std::invalid_argument("module engine: too many variables");
}

void ModuleEngine::normalize(MElem& e) const {
  std::sort(e.begin(), e.end(), [this](const MTerm& a, const MTerm& b) { return compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i + 1;
    Rational c = e[i].coef;
    while (j < e.size() && e[j].comp == e[i].comp && e[j].mono == e[i].mono) c += e[j++].coef;
    if (!is_zero(c)) {
      e[out].mono = e[i].mono;
      e[out].comp = e[i].comp;
      e[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  e.resize(out);
}

MElem ModuleEngine::add(const MElem& a, const MElem& b) const { return sub_scaled(a, -1, b); }

MElem ModuleEngine::sub_scaled(const MElem& a, const Rational& c, const MElem& b) const {
  MElem r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i], b[j]);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back({b[j].mono, b[j].comp, -c * b[j].coef});
      ++j;
    } else {
      Rational v = a[i].coef - c * b[j].coef;
      if (!is_zero(v)) r.push_back({a[i].mono, a[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

MElem ModuleEngine::scale(const MElem& a, const Rational& c) const {
  if (is_zero(c)) return {};
  MElem r = a;
  for (MTerm& t : r) t.coef *= c;
  return r;
}

void ModuleEngine::make_monic(MElem& e) const {
  if (e.empty() || e.front().coef == 1) return;
  Rational inv = 1 / e.front().coef;
  for (MTerm& t : e) t.coef *= inv;
}

void ModuleEngine::monomial_product(const Monomial& a, const Monomial& b, const Rational& c, int comp,
                                    MElem& out) const {
  if (kind_ == AlgebraKind::Commutative) {
    out.push_back({a * b, comp, c});
    return;
  }
  weyl_monomial_product(nvars_, a, b, c, [&](const Monomial& m, Rational coef) {
    out.push_back({m, comp, std::move(coef)});
  });
}

MElem ModuleEngine::mul_term_left(const Monomial& m, const Rational& c, const MElem& g) const {
  MElem r;
  r.reserve(g.size());
  if (kind_ == AlgebraKind::Commutative) {
    // Multiplicative order: sortedness is preserved.
    for (const MTerm& t : g) r.push_back({m * t.mono, t.comp, c * t.coef});
    return r;
  }
  for (const MTerm& t : g) monomial_product(m, t.mono, c * t.coef, t.comp, r);
  normalize(r);
  return r;
}

MElem ModuleEngine::mul_left(std::span<const Term> ring_elem, const MElem& g) const {
  MElem r;
  for (const Term& s : ring_elem)
    for (const MTerm& t : g) monomial_product(s.mono, t.mono, s.coef * t.coef, t.comp, r);
  normalize(r);
  return r;
}

MElem ModuleEngine::reduce(MElem f, std::span<const MElem> basis, bool full) const {
  MElem done;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const MTerm& lt = f[pos];
    const MElem* div = nullptr;
    for (const MElem& g : basis) {
      if (g.empty()) continue;
      if (g.front().comp == lt.comp && g.front().mono.divides(lt.mono)) {
        div = &g;
        break;
      }
    }
    if (div) {
      MElem h = mul_term_left(lt.mono / div->front().mono, lt.coef / div->front().coef, *div);
      if (pos > 0) f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pos));
      f = sub_scaled(f, 1, h);
      pos = 0;
    } else if (full) {
      done.push_back(f[pos++]);
    } else {
      break;
    }
  }
  if (done.empty()) return f;
  done.insert(done.end(), f.begin() + static_cast<std::ptrdiff_t>(pos), f.end());
  return done;
}

std::vector<MElem> ModuleEngine::groebner(std::vector<MElem> gens) const {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int comp;
  };
  std::vector<MElem> g;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  // Buchberger's coprime criterion is valid only for ideals of a commutative ring.
  bool product_criterion = kind_ == AlgebraKind::Commutative;
  for (const MElem& e : gens)
    for (const MTerm& t : e)
      if (t.comp != 0) product_criterion = false;

  auto insert = [&](MElem h) {
    make_monic(h);
    const std::size_t idx = g.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (g[i].empty() || g[i].front().comp != h.front().comp) continue;
      pairs.push_back({i, idx, Monomial::lcm(g[i].front().mono, h.front().mono), h.front().comp});
      pending.insert({i, idx});
    }
    g.push_back(std::move(h));
  };

  for (MElem& e : gens) {
    normalize(e);
    e = reduce(std::move(e), g, false);
    if (!e.empty()) insert(std::move(e));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [this](const Pair& a, const Pair& b) {
      int da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) return da < db;
      return order_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0;
    });
    Pair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    pending.erase({p.i, p.j});

    const MTerm& li = g[p.i].front();
    const MTerm& lj = g[p.j].front();
    if (product_criterion && li.mono.coprime(lj.mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j || g[k].front().comp != p.comp) continue;
      if (!g[k].front().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    // Both leading coefficients are 1.
    MElem s = sub_scaled(mul_term_left(p.lcm / li.mono, 1, g[p.i]), 1,
                         mul_term_left(p.lcm / lj.mono, 1, g[p.j]));
    s = reduce(std::move(s), g, false);
    if (!s.empty()) insert(std::move(s));
  }

  // Minimalize, then interreduce.
  std::vector<MElem> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const MTerm& a = g[j].front();
      const MTerm& b = g[i].front();
      if (a.comp != b.comp || !a.mono.divides(b.mono)) continue;
      // Equal leading monomials: keep the earliest.
      if (a.mono == b.mono && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    MElem head{minimal[i].front()};
    MElem tail(minimal[i].begin() + 1, minimal[i].end());
    std::vector<MElem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    tail = reduce(std::move(tail), others, true);
    head.insert(head.end(), tail.begin(), tail.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [this](const MElem& a, const MElem& b) { return compare(a.front(), b.front()) < 0; });
  return minimal;
}

std::vector<MElem> ModuleEngine::syzygies(std::span<const MElem> gens, int rank) const {
  std::vector<MElem> aug;
  aug.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    MElem e = gens[i];
    e.push_back({Monomial{}, rank + static_cast<int>(i), 1});
    normalize(e);
    aug.push_back(std::move(e));
  }
  if (order_.extension() != ModuleExtension::PositionOverTerm)
    throw std::logic_error("syzygies require a position-over-term order");
  std::vector<MElem> gb = groebner(std::move(aug));
  std::vector<MElem> out;
  for (MElem& e : gb) {
    if (e.front().comp < rank) continue;
    for (MTerm& t : e) t.comp -= rank;
    out.push_back(std::move(e));
  }
  return out;
}

MElem to_melem(const ModuleEngine& eng, std::span<const Term> terms, int comp) {
  MElem e;
  e.reserve(terms.size());
  for (const Term& t : terms) e.push_back({t.mono, comp, t.coef});
  eng.normalize(e);
  return e;
}

std::vector<Term> component_terms(const MElem& e, int comp) {
  std::vector<Term> r;
  for (const MTerm& t : e)
    if (t.comp == comp) r.push_back({t.mono, t.coef});
  canonicalize_terms(r);
  return r;
}

int max_component(const MElem& e) {
  int c = -1;
  for (const MTerm& t : e) c = std::max(c, t.comp);
  return c;
}

}  // namespace logdmod::detail
