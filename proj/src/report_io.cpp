#include <sstream>

#include <json.hpp>

#include "logdmod/cli.hpp"
#include "logdmod/errors.hpp"
#include "logdmod/parser.hpp"

namespace logdmod {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DerivationText, delta, cofactor)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BracketText, i, j, bracket, alpha)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(QhSection, quasi_homogeneous, cofactor_criterion, jacobian_criterion,
                                   jacobian_local, witness_index, witness_cofactor, jacobian_remainder)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SaitoSection, found, source, unit, basis, brackets, divergence_residues)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResolutionSection, phi_vanishes, psi_vanishes, phi_residue, psi_residue,
                                   relations, relations_are_syzygies, relations_generate, second_cyclic,
                                   second_generator, second_vanishes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DualitySection, holds, identities_hold, transposed, dual_fingerprint,
                                   tilde_fingerprint, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GrFSection, symbols, regular, failing_index, witness, tilde_symbols_equal)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProbeSection, ran, k_max, solvable, first_unsolvable)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LctSection, status, probe_consistent, probe_inconclusive, explanation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CurveReport, name, vars, symbol, divisor, order, k_max, degree_bound, generators,
                                   qh, saito, i_log, i_log_tilde, resolution, duality, grf, probe,
                                   annihilator_contained, lct, notes, engine_version)

namespace {

// Re-renders stored parseable text in the display style.
class Display {
 public:
  explicit Display(const std::vector<std::string>& vars)
      : vars_(vars), symbol_parse_(symbol_slot_names(vars, PrintStyle::Parseable)),
        symbol_show_(symbol_slot_names(vars, PrintStyle::Display)) {}

  Poly parse_poly(const std::string& s) const { return parse_polynomial(s, vars_); }
  std::string poly(const std::string& s) const { return to_string(parse_poly(s), vars_, PrintStyle::Display); }
  std::string op(const std::string& s) const {
    return to_string(parse_operator(s, vars_), vars_, PrintStyle::Display);
  }
  std::vector<std::string> ops(const std::vector<std::string>& v) const {
    std::vector<std::string> r;
    for (const std::string& s : v) r.push_back(op(s));
    return r;
  }
  std::string symbol(const std::string& s) const {
    return to_string(parse_polynomial(s, symbol_parse_), symbol_show_, PrintStyle::Display);
  }

  // c * name with the sign pulled out; parenthesized when c has several terms.
  std::pair<bool, std::string> scaled(const std::string& coefficient, const std::string& name) const {
    Poly c = parse_poly(coefficient);
    bool negative = false;
    if (c.size() == 1 && c.terms().front().coef < 0) {
      negative = true;
      c = -c;
    }
    if (c == Poly::constant(c.nvars(), 1)) return {negative, name};
    std::string body = to_string(c, vars_, PrintStyle::Display);
    if (c.size() > 1) body = "(" + body + ")";
    return {negative, body + " " + name};
  }

  std::string combination(const std::vector<std::pair<std::string, std::string>>& parts) const {
    std::string out;
    for (const auto& [coefficient, name] : parts) {
      if (parse_poly(coefficient).is_zero()) continue;
      auto [neg, body] = scaled(coefficient, name);
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> symbol_parse_;
  std::vector<std::string> symbol_show_;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string emit_text(const CurveReport& r) {
  const Display d(r.vars);
  const std::string& h = r.symbol;
  std::ostringstream out;
  auto delta = [](std::size_t i) { return "δ" + std::to_string(i + 1); };

  out << (r.name.empty() ? std::string() : r.name + ": ") << h << " = " << d.poly(r.divisor) << "  in Q["
      << join(r.vars, ", ") << "]\n";
  out << "order " << r.order << ", K_max " << r.k_max << ", degree bound " << r.degree_bound << "\n\n";

  out << "Der(log " << h << ") generators:\n";
  for (const DerivationText& g : r.generators)
    out << "  " << d.op(g.delta) << "    cofactor " << d.poly(g.cofactor) << "\n";

  out << "\nquasi-homogeneous: " << yes_no(r.qh.quasi_homogeneous) << "\n";
  if (r.qh.witness_index >= 0)
    out << "  witness: generator " << r.qh.witness_index + 1 << " has cofactor a = " << d.poly(r.qh.witness_cofactor)
        << " (unit at 0)\n";
  out << "  cofactor criterion: " << yes_no(r.qh.cofactor_criterion)
      << ", Jacobian membership: " << yes_no(r.qh.jacobian_criterion);
  if (!r.qh.jacobian_criterion) out << " (remainder " << d.poly(r.qh.jacobian_remainder) << ")";
  out << "\n";

  if (!r.saito.found) {
    out << "\nSaito basis: not found\n";
    out << "\nLCT: " << r.lct.status << " (" << r.lct.explanation << ")\n";
    for (const std::string& note : r.notes) out << "note: " << note << "\n";
    out << "engine: " << r.engine_version << "\n";
    return out.str();
  }

  out << "\nSaito basis (" << r.saito.source << "), det = " << (r.saito.unit == "1" ? "" : r.saito.unit + " ") << h
      << ":\n";
  for (std::size_t i = 0; i < r.saito.basis.size(); ++i)
    out << "  " << delta(i) << " = " << d.op(r.saito.basis[i].delta) << "\n";
  out << "cofactors:\n";
  for (std::size_t i = 0; i < r.saito.basis.size(); ++i) {
    auto parts = d.combination({{r.saito.basis[i].cofactor, h}});
    out << "  " << delta(i) << "(" << h << ") = " << parts << "\n";
  }
  out << "brackets:\n";
  for (const BracketText& b : r.saito.brackets) {
    std::vector<std::pair<std::string, std::string>> parts;
    for (std::size_t k = 0; k < b.alpha.size(); ++k) parts.push_back({b.alpha[k], delta(k)});
    out << "  [" << delta(static_cast<std::size_t>(b.i)) << ", " << delta(static_cast<std::size_t>(b.j))
        << "] = " << d.combination(parts) << "\n";
  }
  if (!r.saito.divergence_residues.empty())
    out << "divergence identities: " << (r.saito.divergence_residues[0] == "0" && r.saito.divergence_residues[1] == "0"
                                             ? "hold"
                                             : "FAIL (" + join(r.saito.divergence_residues, ", ") + ")")
        << "\n";

  out << "\nI^log = <" << join(d.ops(r.i_log), ", ") << ">\n";
  out << "Ĩ^log = <" << join(d.ops(r.i_log_tilde), ", ") << ">\n";

  out << "\nresolution:\n";
  if (r.vars.size() == 2) {
    out << "  φ2 φ1 = " << (r.resolution.phi_vanishes ? "0" : d.op(r.resolution.phi_residue)) << "\n";
    out << "  ψ2 ψ1 = " << (r.resolution.psi_vanishes ? "0" : d.op(r.resolution.psi_residue)) << "\n";
  }
  for (std::size_t k = 0; k < r.resolution.relations.size(); ++k) {
    const BracketText& b = r.saito.brackets[k];
    out << "  r" << b.i + 1 << b.j + 1 << " = (" << join(d.ops(r.resolution.relations[k]), ", ") << ")\n";
  }
  out << "  relations are syzygies: " << yes_no(r.resolution.relations_are_syzygies) << "\n";
  if (r.vars.size() >= 3) {
    out << "  relations generate the first syzygies: " << yes_no(r.resolution.relations_generate) << "\n";
    if (r.resolution.second_cyclic) {
      out << "  second syzygies generated by s = (s1, .., s" << r.resolution.second_generator.size() << "):\n";
      for (std::size_t k = 0; k < r.resolution.second_generator.size(); ++k)
        out << "  s" << k + 1 << " = " << d.op(r.resolution.second_generator[k]) << "\n";
      out << "  s · R = " << (r.resolution.second_vanishes ? "0" : "nonzero") << "\n";
    } else {
      out << "  second syzygies: not cyclic\n";
    }
  }

  out << "\nduality: " << (r.duality.holds ? "holds" : "fails") << "\n";
  for (std::size_t k = 0; k < r.duality.transposed.size(); ++k) {
    std::string label = r.vars.size() == 2 ? (k == 0 ? "δ2^t + α1" : "δ1^t - α2") : "s" + std::to_string(k + 1) + "^t";
    out << "  " << label << " = " << d.op(r.duality.transposed[k]) << "\n";
  }
  if (r.vars.size() == 2) out << "  transpose identities: " << (r.duality.identities_hold ? "hold" : "FAIL") << "\n";
  if (!r.duality.note.empty()) out << "  " << r.duality.note << "\n";

  out << "\ngr^F:\n";
  for (std::size_t k = 0; k < r.grf.symbols.size(); ++k)
    out << "  σ(" << delta(k) << ") = " << d.symbol(r.grf.symbols[k]) << "\n";
  out << "  regular sequence: " << yes_no(r.grf.regular);
  if (!r.grf.regular)
    out << " (witness " << d.symbol(r.grf.witness) << " at position " << r.grf.failing_index + 1 << ")";
  out << "\n  σ(δi) = σ(δi + ai): " << yes_no(r.grf.tilde_symbols_equal) << "\n";

  if (r.probe.ran) {
    out << "\nExt^2 jet probe: ";
    if (r.probe.first_unsolvable > 0)
      out << "unsolvable from K = " << r.probe.first_unsolvable << " (certificate: Ext^2 is nonzero)\n";
    else
      out << "solvable for K = 1.." << r.probe.k_max << " (evidence only)\n";
  }
  out << "annihilator containment Ĩ^log ⊂ Ann(1/" << h << "): " << yes_no(r.annihilator_contained) << "\n";
  out << "\nLCT: " << r.lct.status << " (" << r.lct.explanation << ")\n";
  for (const std::string& note : r.notes) out << "note: " << note << "\n";
  out << "engine: " << r.engine_version << "\n";
  return out.str();
}

}  // namespace

std::string report_emit(const CurveReport& report, OutputFormat format) {
  if (format == OutputFormat::Text) return emit_text(report);
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["report"] = report;
  return j.dump(2) + "\n";
}

CurveReport report_parse(const std::string& structured) {
  try {
    nlohmann::json j = nlohmann::json::parse(structured);
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw InputError("unsupported schema_version");
    return j.at("report").get<CurveReport>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace logdmod
