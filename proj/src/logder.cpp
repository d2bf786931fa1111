#include "logdmod/logder.hpp"

#include <algorithm>
#include <numeric>

#include "logdmod/errors.hpp"
#include "logdmod/groebner.hpp"

namespace logdmod {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Exact constant c with p = c * q, if any.
std::optional<Rational> constant_ratio(const Poly& p, const Poly& q) {
  auto r = exact_divide(p, q);
  if (!r || !r->is_constant() || r->is_zero()) return std::nullopt;
  return r->constant_term();
}

std::vector<std::vector<Poly>> coefficient_matrix(std::span<const LogDerivation> ds) {
  std::vector<std::vector<Poly>> m;
  for (const LogDerivation& d : ds) m.push_back(d.coefficients());
  return m;
}

std::vector<std::vector<Poly>> minor(const std::vector<std::vector<Poly>>& m, std::size_t row, std::size_t col) {
  std::vector<std::vector<Poly>> r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Poly> line;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) line.push_back(m[i][j]);
    r.push_back(std::move(line));
  }
  return r;
}

// Degree-ordered monomials in n variables up to total degree `bound`.
std::vector<Monomial> monomials_up_to(int n, int bound) {
  std::vector<Monomial> out{Monomial{}};
  std::vector<Monomial> layer{Monomial{}};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& m : layer)
      for (int i = 0; i < n; ++i) {
        Monomial t = m * Monomial::unit(sz(i));
        if (std::find(next.begin(), next.end(), t) == next.end()) next.push_back(t);
      }
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<SaitoBasis> try_basis(std::vector<LogDerivation> ds, const Poly& f) {
  auto unit = constant_ratio(determinant(coefficient_matrix(ds)), f);
  if (!unit) return std::nullopt;
  return SaitoBasis{std::move(ds), *unit, f};
}

// Searches n-subsets of `pool` ranked by total degree, ties by index order.
// When `fixed_prefix` < pool.size(), only subsets with at most one member at
// index >= fixed_prefix are considered.
std::optional<SaitoBasis> subset_search(const std::vector<LogDerivation>& pool, std::size_t fixed_prefix,
                                        std::size_t n, const Poly& f) {
  struct Candidate {
    int degree;
    std::vector<std::size_t> idx;
  };
  std::vector<Candidate> cands;
  auto add = [&](const std::vector<std::size_t>& idx) {
    int deg = 0;
    for (std::size_t i : idx) deg += pool[i].degree();
    cands.push_back({deg, idx});
  };
  if (fixed_prefix >= pool.size()) {
    for_each_subset(pool.size(), n, add);
  } else {
    for_each_subset(fixed_prefix, n - 1, [&](const std::vector<std::size_t>& base) {
      for (std::size_t extra = fixed_prefix; extra < pool.size(); ++extra) {
        std::vector<std::size_t> idx = base;
        idx.push_back(extra);
        add(idx);
      }
    });
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  for (const Candidate& c : cands) {
    std::vector<LogDerivation> ds;
    for (std::size_t i : c.idx) ds.push_back(pool[i]);
    if (auto b = try_basis(std::move(ds), f)) return b;
  }
  return std::nullopt;
}

}  // namespace

LogDerivation::LogDerivation(WeylOp delta, Poly cofactor, const Poly& f)
    : delta_(std::move(delta)), cofactor_(std::move(cofactor)) {
  if (delta_.nvars() != f.nvars() || cofactor_.nvars() != f.nvars())
    throw InputError("logarithmic derivation: ring mismatch");
  if (delta_.order() != 1) throw InputError("logarithmic derivation must have order exactly one");
  if (!delta_.order_zero_part().is_zero()) throw InputError("logarithmic derivation has an order-zero term");
  if (!(apply_to_poly(delta_, f) == cofactor_ * f))
    throw InputError("delta(f) differs from cofactor * f");
}

int LogDerivation::degree() const {
  int d = 0;
  for (const Poly& c : coefficients()) d = std::max(d, c.total_degree());
  return d;
}

LogDerivation LogDerivation::normalized() const {
  mpz_class den = 1, num = 0;
  auto visit = [&](const Rational& c) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  };
  for (const Term& t : delta_.terms()) visit(t.coef);
  for (const Term& t : cofactor_.terms()) visit(t.coef);
  Rational scale(den, num);
  scale.canonicalize();
  const int n = nvars();
  Poly flat(2 * n, delta_.terms());
  if (flat.leading_term(TermOrder::grevlex(2 * n)).coef < 0) scale = -scale;
  return LogDerivation(delta_ * scale, cofactor_ * scale);
}

std::vector<std::vector<Poly>> SaitoBasis::matrix() const { return coefficient_matrix(derivations); }

const BracketEntry& BracketStructure::at(int i, int j) const {
  for (const BracketEntry& e : entries)
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("bracket pair not stored");
}

std::pair<Poly, Poly> BracketStructure::curve_alpha() const {
  const BracketEntry& e = at(0, 1);
  if (e.alpha.size() != 2) throw std::domain_error("curve_alpha needs a two-variable structure");
  return {e.alpha[0], e.alpha[1]};
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  Poly r(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Poly t = m[0][j] * determinant(minor(m, 0, j));
    if (j % 2 == 0)
      r += t;
    else
      r -= t;
  }
  return r;
}

std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("adjugate of an empty matrix");
  const int nv = m[0][0].nvars();
  std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n, Poly(nv)));
  if (n == 1) {
    adj[0][0] = Poly::constant(nv, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly c = determinant(minor(m, i, j));
      adj[j][i] = (i + j) % 2 == 0 ? c : -c;
    }
  return adj;
}

bool is_reduced(const Poly& f) {
  if (f.is_zero()) return false;
  Poly g = f;
  for (int i = 0; i < f.nvars() && !g.is_constant(); ++i) g = poly_gcd(g, partial_derivative(f, i));
  return g.is_constant();
}

bool derivation_in_span(const WeylOp& delta, std::span<const LogDerivation> gens) {
  std::vector<PolyVector> vs;
  for (const LogDerivation& g : gens) vs.push_back(g.coefficients());
  PolyVector v = delta.vector_field_coefficients();
  if (vs.empty()) return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
  return module_member(v, vs);
}

std::vector<LogDerivation> derlog_generators(const Poly& f) {
  if (f.is_zero()) throw InputError("divisor is zero");
  if (!is_zero(evaluate_at_origin(f))) throw InputError("divisor does not vanish at the origin");
  if (!is_reduced(f)) throw InputError("divisor is not reduced");
  const int n = f.nvars();
  std::vector<Poly> gens{-f};
  for (int i = 0; i < n; ++i) gens.push_back(partial_derivative(f, i));

  std::vector<LogDerivation> all;
  for (const PolyVector& s : syzygy_module(gens)) {
    std::vector<Poly> b(s.begin() + 1, s.end());
    if (std::all_of(b.begin(), b.end(), [](const Poly& p) { return p.is_zero(); })) continue;
    LogDerivation d = LogDerivation(WeylOp::vector_field(b), s[0], f).normalized();
    if (std::find(all.begin(), all.end(), d) == all.end()) all.push_back(std::move(d));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const LogDerivation& a, const LogDerivation& b) { return a.degree() < b.degree(); });

  // Drop generators in the span of the others, highest degree first.
  for (std::size_t k = all.size(); k-- > 0;) {
    std::vector<LogDerivation> rest;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != k) rest.push_back(all[j]);
    if (!rest.empty() && derivation_in_span(all[k].delta(), rest)) all.erase(all.begin() + static_cast<long>(k));
  }
  return all;
}

std::optional<SaitoBasis> saito_basis(std::span<const LogDerivation> gens, const Poly& f, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("saito_basis: negative degree bound");
  const std::size_t n = sz(f.nvars());
  std::vector<LogDerivation> pool(gens.begin(), gens.end());
  if (auto b = subset_search(pool, pool.size(), n, f)) return b;
  if (pool.empty()) return std::nullopt;

  const std::size_t original = pool.size();
  for (std::size_t i = 0; i < original; ++i) {
    for (std::size_t j = 0; j < original; ++j) {
      if (i == j) continue;
      for (const Monomial& m : monomials_up_to(static_cast<int>(n), degree_bound)) {
        WeylOp mg = WeylOp(static_cast<int>(n), {{m, 1}}) * pool[j].delta();
        Poly mc = Poly::monomial(static_cast<int>(n), m) * pool[j].cofactor();
        // +-1 and every scalar that cancels a shared monomial of delta_i.
        std::vector<Rational> scalars{1, -1};
        for (const Term& t : pool[i].delta().terms())
          for (const Term& u : mg.terms())
            if (t.mono == u.mono) scalars.push_back(-t.coef / u.coef);
        for (const Rational& c : scalars) {
          WeylOp d = pool[i].delta() + mg * c;
          if (d.is_zero() || d.order() != 1) continue;
          LogDerivation cand = LogDerivation(d, pool[i].cofactor() + mc * c, f).normalized();
          if (std::find(pool.begin(), pool.end(), cand) == pool.end()) pool.push_back(std::move(cand));
        }
      }
    }
  }
  return subset_search(pool, original, n, f);
}

SaitoBasis adopt_saito_basis(std::vector<LogDerivation> candidate, std::span<const LogDerivation> gens,
                             const Poly& f) {
  if (candidate.size() != sz(f.nvars())) throw InputError("basis must have one derivation per variable");
  auto b = try_basis(candidate, f);
  if (!b) throw InputError("coefficient determinant is not a nonzero constant times f");
  for (const LogDerivation& d : candidate)
    if (!derivation_in_span(d.delta(), gens)) throw InputError("basis element outside Der(log f)");
  for (const LogDerivation& g : gens)
    if (!derivation_in_span(g.delta(), candidate)) throw InputError("basis does not generate Der(log f)");
  return *b;
}

BracketStructure bracket_decompose(const SaitoBasis& basis) {
  const auto a = basis.matrix();
  const auto adj = adjugate(a);
  const std::size_t n = a.size();
  const Poly denom = basis.divisor * basis.unit;
  BracketStructure out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const WeylOp& di = basis.derivations[i].delta();
      const WeylOp& dj = basis.derivations[j].delta();
      WeylOp br = lie_bracket(di, dj);
      if (br.order() > 1 || !br.order_zero_part().is_zero())
        throw InconsistencyError("bracket of two vector fields is not a vector field");
      std::vector<Poly> v = br.vector_field_coefficients();
      std::vector<Poly> alpha;
      WeylOp check(di.nvars());
      for (std::size_t k = 0; k < n; ++k) {
        Poly num(di.nvars());
        for (std::size_t l = 0; l < n; ++l) num += v[l] * adj[l][k];
        auto q = exact_divide(num, denom);
        if (!q) throw InconsistencyError("bracket coefficients not divisible by the Saito determinant");
        check += WeylOp::from_poly(*q) * basis.derivations[k].delta();
        alpha.push_back(std::move(*q));
      }
      if (!(check == br)) throw InconsistencyError("bracket decomposition does not re-expand");
      out.entries.push_back({static_cast<int>(i), static_cast<int>(j), std::move(br), std::move(alpha)});
    }
  }
  return out;
}

std::pair<Poly, Poly> divergence_residues(const SaitoBasis& basis, const BracketStructure& brackets) {
  if (basis.nvars() != 2) throw std::domain_error("divergence identities are stated for curves");
  auto [a1, a2] = brackets.curve_alpha();
  const LogDerivation& d1 = basis.derivations[0];
  const LogDerivation& d2 = basis.derivations[1];
  return {d1.cofactor() - a2 - divergence(d1.delta()), d2.cofactor() + a1 - divergence(d2.delta())};
}

QhVerdict qh_test(std::span<const LogDerivation> gens, const Poly& f) {
  QhVerdict v;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_zero(evaluate_at_origin(gens[i].cofactor()))) {
      v.cofactor_criterion = true;
      v.witness_index = static_cast<int>(i);
      v.witness_cofactor = gens[i].cofactor();
      break;
    }
  }
  std::vector<Poly> jac;
  for (int i = 0; i < f.nvars(); ++i) jac.push_back(partial_derivative(f, i));
  const TermOrder order = TermOrder::grevlex(f.nvars());
  std::vector<Poly> gb = buchberger_commutative(jac, order);
  v.jacobian_remainder = gb.empty() ? f : poly_reduce(f, gb, order);
  v.jacobian_criterion = v.jacobian_remainder.is_zero();
  // Local membership: (J : f) contains an element that is a unit at 0.
  if (v.jacobian_criterion) {
    v.jacobian_local = true;
  } else {
    for (const Poly& g : ideal_quotient(jac, f))
      if (!is_zero(evaluate_at_origin(g))) v.jacobian_local = true;
  }
  if (v.cofactor_criterion != v.jacobian_criterion) {
    std::string msg = std::string("quasi-homogeneity criteria disagree: cofactor test says ") +
                      (v.cofactor_criterion ? "QH" : "not QH") + ", Jacobian membership says " +
                      (v.jacobian_criterion ? "QH" : "not QH");
    if (v.jacobian_local == v.cofactor_criterion)
      msg += " (f is in the Jacobian ideal localized at the origin; singular points elsewhere break global membership)";
    throw InconsistencyError(msg);
  }
  v.quasi_homogeneous = v.cofactor_criterion;
  return v;
}

}  // namespace logdmod
