#include "logdmod/pipeline.hpp"

#include <chrono>

#include "logdmod/errors.hpp"
#include "logdmod/parser.hpp"

namespace logdmod {

namespace {

struct Printer {
  const std::vector<std::string>& vars;
  std::vector<std::string> symbol_names;

  std::string poly(const Poly& p) const { return to_string(p, vars, PrintStyle::Parseable); }
  std::string op(const WeylOp& p) const { return to_string(p, vars, PrintStyle::Parseable); }
  std::string symbol(const Poly& p) const { return to_string(p, symbol_names, PrintStyle::Parseable); }
  DerivationText derivation(const LogDerivation& d) const { return {op(d.delta()), poly(d.cofactor())}; }
  std::vector<std::string> ops(const std::vector<WeylOp>& v) const {
    std::vector<std::string> r;
    for (const WeylOp& p : v) r.push_back(op(p));
    return r;
  }
};

SaitoBasis basis_from_hint(const std::vector<std::string>& hint, const std::vector<LogDerivation>& gens,
                           const Poly& f, const std::vector<std::string>& vars) {
  std::vector<LogDerivation> candidate;
  for (const std::string& src : hint) {
    WeylOp d = parse_operator(src, vars);
    auto a = exact_divide(apply_to_poly(d, f), f);
    if (!a) throw InputError("basis hint '" + src + "' is not a logarithmic derivation");
    candidate.emplace_back(d, *a, f);
  }
  return adopt_saito_basis(std::move(candidate), gens, f);
}

}  // namespace

std::string engine_version() { return std::string("logdmod ") + LOGDMOD_VERSION; }

CurveReport analyze_divisor(const Poly& f, const std::vector<std::string>& vars, const std::string& name,
                            const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = f.nvars();
  if (static_cast<int>(vars.size()) != n) throw InputError("variable list does not match the divisor");
  if (n < 2) throw InputError("at least two variables are required");
  if (options.k_max < 1) throw InputError("K_max must be at least 1");
  if (options.degree_bound < 0) throw InputError("degree bound must be non-negative");

  const Printer pr{vars, symbol_slot_names(vars, PrintStyle::Parseable)};
  const TermOrder order(options.order, 2 * n);

  CurveReport r;
  r.name = name;
  r.vars = vars;
  r.symbol = options.symbol;
  r.divisor = pr.poly(f);
  r.order = order.name();
  r.k_max = options.k_max;
  r.degree_bound = options.degree_bound;
  r.notes = options.notes;
  r.engine_version = engine_version();

  const std::vector<LogDerivation> gens = derlog_generators(f);
  for (const LogDerivation& d : gens) r.generators.push_back(pr.derivation(d));

  const QhVerdict qh = qh_test(gens, f);
  r.qh = {qh.quasi_homogeneous, qh.cofactor_criterion, qh.jacobian_criterion, qh.jacobian_local,
          qh.witness_index,     qh.witness_index >= 0 ? pr.poly(qh.witness_cofactor) : "",
          pr.poly(qh.jacobian_remainder)};

  std::optional<SaitoBasis> basis;
  if (!options.basis_hint.empty()) {
    basis = basis_from_hint(options.basis_hint, gens, f, vars);
    r.saito.source = "hint";
  } else {
    basis = saito_basis(gens, f, options.degree_bound);
    r.saito.source = "search";
  }
  auto finish = [&] {
    r.timing.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (!basis) {
    r.lct.status = to_string(LctStatus::Unverified);
    r.lct.explanation = "no polynomial Saito basis found with degree bound " + std::to_string(options.degree_bound);
    return finish();
  }
  r.saito.found = true;
  r.saito.unit = basis->unit.get_str();
  for (const LogDerivation& d : basis->derivations) r.saito.basis.push_back(pr.derivation(d));

  const BracketStructure brackets = bracket_decompose(*basis);
  for (const BracketEntry& e : brackets.entries) {
    BracketText t{e.i, e.j, pr.op(e.bracket), {}};
    for (const Poly& a : e.alpha) t.alpha.push_back(pr.poly(a));
    r.saito.brackets.push_back(std::move(t));
  }
  if (n == 2) {
    auto [r1, r2] = divergence_residues(*basis, brackets);
    r.saito.divergence_residues = {pr.poly(r1), pr.poly(r2)};
  }

  auto [ilog, itilde] = build_log_ideals(*basis);
  r.i_log = pr.ops(ilog.generators());
  r.i_log_tilde = pr.ops(itilde.generators());

  const ResolutionReport res = resolution_check(*basis, brackets, order);
  r.resolution.phi_vanishes = res.phi_vanishes;
  r.resolution.psi_vanishes = res.psi_vanishes;
  r.resolution.phi_residue = pr.op(res.phi_residue.nvars() ? res.phi_residue : WeylOp(n));
  r.resolution.psi_residue = pr.op(res.psi_residue.nvars() ? res.psi_residue : WeylOp(n));
  for (const OperatorVector& v : res.relations) r.resolution.relations.push_back(pr.ops(v));
  r.resolution.relations_are_syzygies = res.relations_are_syzygies;
  r.resolution.relations_generate = res.relations_generate;
  r.resolution.second_cyclic = res.second_cyclic;
  r.resolution.second_generator = pr.ops(res.second_generator);
  r.resolution.second_vanishes = res.second_vanishes;

  const DualityReport dual = duality_check(*basis, brackets, res, vars, order);
  r.duality = {dual.holds, dual.identities_hold, pr.ops(dual.transposed), dual.dual_fingerprint,
               dual.tilde_fingerprint, dual.note};

  const GrFReport grf = grF_analysis(*basis);
  for (const Poly& s : grf.symbols) r.grf.symbols.push_back(pr.symbol(s));
  r.grf.regular = grf.regularity.regular;
  r.grf.failing_index = grf.regularity.failing_index;
  r.grf.witness = grf.regularity.regular ? "" : pr.symbol(grf.regularity.witness);
  r.grf.tilde_symbols_equal = grf.tilde_symbols_equal;

  std::optional<Ext2Probe> probe;
  if (n == 2) {
    probe = ext2_jet_probe(*basis, brackets, options.k_max);
    r.probe = {true, probe->k_max, probe->solvable, probe->first_unsolvable};
  }

  r.annihilator_contained = annihilator_containment(*basis, f);
  const LctVerdict lct = lct_verdict(n, qh, dual, res, probe, r.annihilator_contained);
  r.lct = {to_string(lct.status), lct.probe_consistent, lct.probe_inconclusive, lct.explanation};
  return finish();
}

}  // namespace logdmod
