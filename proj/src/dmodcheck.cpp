#include "logdmod/dmodcheck.hpp"

#include <algorithm>

#include "logdmod/errors.hpp"
#include "logdmod/groebner.hpp"

namespace logdmod {

namespace {

WeylOp op(const Poly& p) { return WeylOp::from_poly(p); }

std::vector<WeylOp> deltas(const SaitoBasis& b) {
  std::vector<WeylOp> r;
  for (const LogDerivation& d : b.derivations) r.push_back(d.delta());
  return r;
}

std::vector<WeylOp> shifted(const SaitoBasis& b) {
  std::vector<WeylOp> r;
  for (const LogDerivation& d : b.derivations) r.push_back(d.shifted());
  return r;
}

bool all_zero(const OperatorVector& v) {
  return std::all_of(v.begin(), v.end(), [](const WeylOp& p) { return p.is_zero(); });
}

std::vector<WeylOp> nonzero(std::vector<WeylOp> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const WeylOp& p) { return p.is_zero(); }), v.end());
  return v;
}

// Scales v so its last nonzero component has leading coefficient 1.
OperatorVector last_component_monic(OperatorVector v, const TermOrder& order) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (v[k].is_zero()) continue;
    const int n = v[k].nvars();
    Rational lc = Poly(2 * n, v[k].terms()).leading_term(order).coef;
    for (WeylOp& p : v) p *= 1 / lc;
    break;
  }
  return v;
}

std::vector<Monomial> monomials_of_degree_at_most(int n, int k) {
  std::vector<Monomial> out;
  // Odometer over exponent vectors with total degree <= k.
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    int deg = 0;
    for (int v : e) deg += v;
    if (deg <= k) {
      Monomial t;
      for (int i = 0; i < n; ++i) t.set(static_cast<std::size_t>(i), e[static_cast<std::size_t>(i)]);
      out.push_back(t);
    }
    int i = 0;
    while (i < n) {
      if (++e[static_cast<std::size_t>(i)] <= k) break;
      e[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : b < a;
  });
  return out;
}

}  // namespace

std::pair<IdealPresentation, IdealPresentation> build_log_ideals(const SaitoBasis& basis) {
  return {IdealPresentation(deltas(basis)), IdealPresentation(shifted(basis))};
}

OperatorVector bracket_relation(const SaitoBasis& basis, const BracketEntry& e) {
  const std::size_t n = basis.derivations.size();
  const int nv = basis.nvars();
  OperatorVector r(n, WeylOp(nv));
  r[static_cast<std::size_t>(e.i)] -= basis.derivations[static_cast<std::size_t>(e.j)].delta();
  r[static_cast<std::size_t>(e.j)] += basis.derivations[static_cast<std::size_t>(e.i)].delta();
  for (std::size_t k = 0; k < n; ++k) r[k] -= op(e.alpha[k]);
  return r;
}

RegularityResult regular_sequence_test(std::span<const Poly> seq) {
  RegularityResult r;
  if (seq.empty()) {
    r.regular = true;
    return r;
  }
  const int nv = seq[0].nvars();
  const TermOrder order = TermOrder::grevlex(nv);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    std::vector<Poly> prev(seq.begin(), seq.begin() + static_cast<long>(k));
    if (seq[k].is_zero()) {
      r.failing_index = static_cast<int>(k);
      r.witness = Poly::constant(nv, 1);
      return r;
    }
    if (k == 0) continue;
    std::vector<Poly> gb = buchberger_commutative(prev, order);
    for (const Poly& q : ideal_quotient(prev, seq[k])) {
      Poly w = poly_reduce(q, gb, order);
      if (!w.is_zero()) {
        r.failing_index = static_cast<int>(k);
        r.witness = std::move(w);
        return r;
      }
    }
  }
  // Proper ideal: 1 is not a combination of the sequence.
  std::vector<Poly> all(seq.begin(), seq.end());
  if (ideal_member(Poly::constant(nv, 1), all)) {
    r.failing_index = static_cast<int>(seq.size()) - 1;
    r.witness = Poly::constant(nv, 1);
    return r;
  }
  r.regular = true;
  return r;
}

ResolutionReport resolution_check(const SaitoBasis& basis, const BracketStructure& brackets) {
  return resolution_check(basis, brackets, default_weyl_order(basis.nvars()));
}

ResolutionReport resolution_check(const SaitoBasis& basis, const BracketStructure& brackets, const TermOrder& order) {
  const int n = basis.nvars();
  ResolutionReport r;
  const std::vector<WeylOp> ds = deltas(basis);
  const std::vector<WeylOp> ts = shifted(basis);

  if (n == 2) {
    auto [al1, al2] = brackets.curve_alpha();
    r.phi1 = OperatorMatrix::column({ts[0], ts[1]});
    r.phi2 = OperatorMatrix::row({-ts[1] - op(al1), ts[0] - op(al2)});
    r.psi1 = OperatorMatrix::column({ds[0], ds[1]});
    r.psi2 = OperatorMatrix::row({-ds[1] - op(al1), ds[0] - op(al2)});
    r.phi_residue = matrix_compose(r.phi2, r.phi1).at(0, 0);
    r.psi_residue = matrix_compose(r.psi2, r.psi1).at(0, 0);
    r.phi_vanishes = r.phi_residue.is_zero();
    r.psi_vanishes = r.psi_residue.is_zero();
  }

  for (const BracketEntry& e : brackets.entries) r.relations.push_back(bracket_relation(basis, e));
  r.relations_are_syzygies = std::all_of(r.relations.begin(), r.relations.end(),
                                         [&](const OperatorVector& v) { return apply_relation(v, ds).is_zero(); });

  if (n >= 3) {
    std::vector<OperatorVector> first = left_syzygies(std::span<const WeylOp>(ds), order);
    r.relations_generate = left_modules_equal(r.relations, first, order);
    r.second_syzygies = left_syzygies(std::span<const OperatorVector>(r.relations), order);
    for (const OperatorVector& g : r.second_syzygies) {
      const std::vector<OperatorVector> single{g};
      bool generates = std::all_of(r.second_syzygies.begin(), r.second_syzygies.end(), [&](const OperatorVector& h) {
        return left_module_member(h, single, order);
      });
      if (generates) {
        r.second_cyclic = true;
        r.second_generator = last_component_monic(g, order);
        break;
      }
    }
    if (r.second_cyclic)
      r.second_vanishes = all_zero(left_combine(r.second_generator, r.relations));
  }

  std::vector<Poly> symbols;
  r.symbols_match_tilde = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    symbols.push_back(principal_symbol(ds[i]));
    if (!(principal_symbol(ts[i]) == symbols.back())) r.symbols_match_tilde = false;
  }
  r.symbols_regular = regular_sequence_test(symbols).regular;
  return r;
}

DualityReport duality_check(const SaitoBasis& basis, const BracketStructure& brackets,
                            const ResolutionReport& resolution, std::span<const std::string> vars) {
  return duality_check(basis, brackets, resolution, vars, default_weyl_order(basis.nvars()));
}

DualityReport duality_check(const SaitoBasis& basis, const BracketStructure& brackets,
                            const ResolutionReport& resolution, std::span<const std::string> vars,
                            const TermOrder& order) {
  const int n = basis.nvars();
  DualityReport d;
  const std::vector<WeylOp> ds = deltas(basis);
  const std::vector<WeylOp> ts = shifted(basis);
  IdealPresentation tilde(ts, order);
  d.tilde_fingerprint = gb_fingerprint(tilde.groebner_basis(), vars);

  if (n == 2) {
    auto [al1, al2] = brackets.curve_alpha();
    d.transposed = {transpose(ds[1]) + op(al1), transpose(ds[0]) - op(al2)};
    d.identities_hold = (-transpose(ds[0]) + op(al2) == ts[0]) && (transpose(ds[1]) + op(al1) == -ts[1]);
  } else {
    if (!resolution.second_cyclic) {
      d.note = "second syzygy module is not cyclic; no single transposed presentation";
      return d;
    }
    for (const WeylOp& s : resolution.second_generator) d.transposed.push_back(transpose(s));
  }
  std::vector<WeylOp> gens = nonzero(d.transposed);
  if (gens.empty()) {
    d.note = "transposed presentation is zero";
    return d;
  }
  IdealPresentation dual(gens, order);
  d.dual_fingerprint = gb_fingerprint(dual.groebner_basis(), vars);
  d.holds = left_ideal_equal(dual, tilde);
  return d;
}

GrFReport grF_analysis(const SaitoBasis& basis) {
  GrFReport g;
  g.tilde_symbols_equal = true;
  for (const LogDerivation& d : basis.derivations) {
    g.symbols.push_back(principal_symbol(d.delta()));
    if (!(principal_symbol(d.shifted()) == g.symbols.back())) g.tilde_symbols_equal = false;
  }
  g.regularity = regular_sequence_test(g.symbols);
  return g;
}

std::pair<bool, bool> symbol_witness_check(const GrFReport& report, const Poly& witness) {
  if (report.symbols.size() < 2) throw std::invalid_argument("symbol witness needs at least two symbols");
  std::vector<Poly> head(report.symbols.begin(), report.symbols.end() - 1);
  return {!ideal_member(witness, head), ideal_member(witness * report.symbols.back(), head)};
}

bool linear_system_solvable(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("linear system: right-hand side length mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    std::swap(b[p], b[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || is_zero(a[r][c])) continue;
      Rational factor = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[pivot_row][k];
      b[r] -= factor * b[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (!is_zero(b[r])) return false;
  return true;
}

Ext2Probe ext2_jet_probe(const SaitoBasis& basis, const BracketStructure& brackets, int k_max) {
  if (k_max < 1) throw std::invalid_argument("ext2_jet_probe: K_max must be at least 1");
  const int n = basis.nvars();
  if (n != 2) throw std::domain_error("ext2_jet_probe is defined for curves");
  auto [al1, al2] = brackets.curve_alpha();
  const WeylOp p1 = -basis.derivations[1].shifted() - op(al1);
  const WeylOp p2 = basis.derivations[0].shifted() - op(al2);

  const std::vector<Monomial> inputs = monomials_of_degree_at_most(n, k_max);
  std::vector<Poly> images;  // P_1(m) for every input, then P_2(m)
  for (const WeylOp* p : {&p1, &p2})
    for (const Monomial& m : inputs) images.push_back(apply_to_poly(*p, Poly::monomial(n, m)));

  Ext2Probe probe;
  probe.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Monomial> rows = monomials_of_degree_at_most(n, k - 1);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < images.size(); ++j)
      if (inputs[j % inputs.size()].degree() <= k) cols.push_back(j);
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size()));
    std::vector<Rational> b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].is_one()) b[r] = 1;
      for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = images[cols[c]].coefficient(rows[r]);
    }
    bool ok = linear_system_solvable(std::move(a), std::move(b));
    if (ok && probe.first_unsolvable > 0)
      throw InconsistencyError("jet probe solvable at K = " + std::to_string(k) + " after failing at K = " +
                               std::to_string(probe.first_unsolvable));
    if (!ok && probe.first_unsolvable < 0) probe.first_unsolvable = k;
    probe.solvable.push_back(ok);
  }
  return probe;
}

bool annihilator_containment(std::span<const WeylOp> operators, const Poly& f) {
  const MeroElement inverse(Poly::constant(f.nvars(), 1), 1, f);
  return std::all_of(operators.begin(), operators.end(),
                     [&](const WeylOp& p) { return apply_to_meromorphic(p, inverse).is_zero(); });
}

bool annihilator_containment(const SaitoBasis& basis, const Poly& f) {
  return annihilator_containment(shifted(basis), f);
}

LctVerdict lct_verdict(int nvars, const QhVerdict& qh, const DualityReport& duality,
                       const ResolutionReport& resolution, const std::optional<Ext2Probe>& probe,
                       bool annihilator_contained) {
  if (!annihilator_contained) throw InconsistencyError("a generator of the tilde ideal does not annihilate 1/f");
  LctVerdict v;
  if (nvars == 2) {
    if (!duality.holds || !duality.identities_hold)
      throw InconsistencyError("duality fails for a reduced plane curve");
    if (!resolution.phi_vanishes || !resolution.psi_vanishes)
      throw InconsistencyError("resolution composition does not vanish for a plane curve");
    if (!probe) throw std::invalid_argument("lct_verdict: curves need the jet probe");
    if (qh.quasi_homogeneous) {
      if (probe->certificate())
        throw InconsistencyError("quasi-homogeneous curve with an unsolvable jet system at K = " +
                                 std::to_string(probe->first_unsolvable));
      v.status = LctStatus::Holds;
      v.explanation = "quasi-homogeneous; jet system solvable for every K <= " + std::to_string(probe->k_max);
    } else {
      v.status = LctStatus::Fails;
      if (probe->certificate()) {
        v.explanation = "not quasi-homogeneous; Ext^2 nonzero, certified at K = " +
                        std::to_string(probe->first_unsolvable);
      } else {
        v.probe_consistent = false;
        v.probe_inconclusive = true;
        v.explanation = "not quasi-homogeneous; jet probe inconclusive up to K = " + std::to_string(probe->k_max);
      }
    }
    return v;
  }
  if (duality.holds) {
    v.status = LctStatus::HoldsModuloAnnihilator;
    v.explanation = std::string("duality verified, annihilator containment verified, symbols ") +
                    (resolution.symbols_regular ? "form" : "do not form") +
                    " a regular sequence; holds given Ann_D(1/f) equals the tilde ideal";
  } else {
    v.status = LctStatus::Unverified;
    v.explanation = "duality not verified: " + (duality.note.empty() ? std::string("ideals differ") : duality.note);
  }
  return v;
}

std::string to_string(LctStatus s) {
  switch (s) {
    case LctStatus::Holds: return "holds";
    case LctStatus::Fails: return "fails";
    case LctStatus::HoldsModuloAnnihilator: return "holds-modulo-annihilator";
    case LctStatus::Unverified: return "unverified";
  }
  return "unverified";
}

LctStatus parse_lct_status(const std::string& s) {
  for (LctStatus v : {LctStatus::Holds, LctStatus::Fails, LctStatus::HoldsModuloAnnihilator, LctStatus::Unverified})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown LCT status '" + s + "'");
}

}  // namespace logdmod
