#include <ostream>

#include "logdmod/cli.hpp"
#include "logdmod/errors.hpp"
#include "logdmod/groebner.hpp"
#include "logdmod/parser.hpp"

namespace logdmod {

namespace {

CatalogEntry surface_entry() {
  CatalogEntry e;
  e.name = "surface-h";
  e.vars = {"x", "y", "z"};
  e.f = "x*y*(x+y)*(x*z+y)";
  e.symbol = "h";
  e.basis = {"x*dx + y*dy", "x*z*dz + y*dz", "x^2*dx - y^2*dy - x*z*dz - y*z*dz"};
  e.expect_qh = true;
  e.expect_lct = "holds-modulo-annihilator";
  return e;
}

CatalogEntry curve(const std::string& name, const std::string& f, bool qh) {
  CatalogEntry e;
  e.name = name;
  e.vars = {"x", "y"};
  e.f = f;
  e.expect_qh = qh;
  e.expect_lct = qh ? "holds" : "fails";
  return e;
}

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& label) {
    out_ << (ok ? "PASS " : "FAIL ") << label << "\n";
    if (!ok) failed_ = true;
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

bool same_poly(const std::string& a, const std::string& b, const std::vector<std::string>& vars) {
  return parse_polynomial(a, vars) == parse_polynomial(b, vars);
}

bool same_op(const std::string& a, const std::string& b, const std::vector<std::string>& vars) {
  return parse_operator(a, vars) == parse_operator(b, vars);
}

void check_surface(Checker& c, const CurveReport& r) {
  const auto& v = r.vars;
  c.check(r.saito.found && r.saito.source == "hint", "h: reference fields generate Der(log h)");
  const std::vector<std::string> cofactors{"4", "x", "2*x - 3*y"};
  bool cof = r.saito.basis.size() == 3;
  for (std::size_t i = 0; cof && i < 3; ++i) cof = same_poly(r.saito.basis[i].cofactor, cofactors[i], v);
  c.check(cof, "h: cofactors (4, x, 2x - 3y)");
  c.check(r.saito.unit == "1", "h: coefficient determinant = h");

  const std::vector<std::vector<std::string>> alpha{{"0", "1", "0"}, {"0", "0", "1"}, {"0", "-x", "0"}};
  bool br = r.saito.brackets.size() == 3;
  for (std::size_t k = 0; br && k < 3; ++k)
    for (std::size_t m = 0; br && m < 3; ++m) br = same_poly(r.saito.brackets[k].alpha[m], alpha[k][m], v);
  c.check(br, "h: [d1,d2] = d2, [d1,d3] = d3, [d2,d3] = -x d2");

  c.check(r.resolution.relations_are_syzygies && r.resolution.relations_generate,
          "h: bracket relations generate the first syzygies");
  const std::vector<std::string> s{"-y^2*dy + x^2*dx - z*y*dz - z*x*dz - x", "-y*dz - x*z*dz",
                                   "y*dy + x*dx - 2"};
  bool sec = r.resolution.second_cyclic && r.resolution.second_generator.size() == 3;
  for (std::size_t k = 0; sec && k < 3; ++k) sec = same_op(r.resolution.second_generator[k], s[k], v);
  c.check(sec, "h: second syzygies generated by s");
  c.check(r.resolution.second_vanishes, "h: s composed with the relations is zero");
  c.check(r.duality.holds, "h: <s1^t, s2^t, s3^t> equals the tilde ideal");

  std::vector<std::string> sym_vars = symbol_slot_names(v, PrintStyle::Parseable);
  GrFReport grf;
  for (const std::string& sym : r.grf.symbols) grf.symbols.push_back(parse_polynomial(sym, sym_vars));
  auto [outside, product_inside] = symbol_witness_check(grf, parse_polynomial("z*eta*zeta - xi*zeta", sym_vars));
  c.check(!r.grf.regular && outside && product_inside, "h: symbols not regular, witness z eta zeta - xi zeta");
  c.check(r.annihilator_contained, "h: tilde ideal annihilates 1/h");
}

void check_curve(Checker& c, const CatalogEntry& e, const CurveReport& r) {
  for (const std::string& m : check_expectations(e, r)) c.check(false, e.name + ": " + m);
  c.check(check_expectations(e, r).empty(), e.name + ": QH and LCT verdicts");
  c.check(r.duality.holds && r.duality.identities_hold, e.name + ": duality and transpose identities");
  c.check(r.resolution.phi_vanishes && r.resolution.psi_vanishes, e.name + ": resolution compositions vanish");
  c.check(r.saito.divergence_residues == std::vector<std::string>{"0", "0"}, e.name + ": divergence identities");
  if (!r.qh.quasi_homogeneous) c.check(r.probe.first_unsolvable > 0, e.name + ": Ext^2 certificate");
}

}  // namespace

int verify_golden(std::ostream& out, const RunConfig& config) {
  Checker c(out);
  try {
    CatalogEntry h = surface_entry();
    CurveReport r = analyze_divisor(parse_polynomial(h.f, h.vars), h.vars, h.name, options_for(config, h));
    check_surface(c, r);

    const std::vector<CatalogEntry> curves{curve("node", "x*y", true), curve("cusp", "x^2 - y^3", true),
                                           curve("w-type", "x^4 + y^5 + x*y^4", false)};
    for (const CatalogEntry& e : curves) {
      CurveReport cr = analyze_divisor(parse_polynomial(e.f, e.vars), e.vars, e.name, options_for(config, e));
      check_curve(c, e, cr);
      if (e.name == "cusp")
        c.check(cr.qh.witness_index >= 0 && cr.qh.witness_cofactor == "6", "cusp: QH witness a1 = 6");
    }
  } catch (const InconsistencyError& e) {
    out << "INCONSISTENT " << e.what() << "\n";
    return kExitInconsistent;
  }
  return c.failed() ? kExitMismatch : kExitOk;
}

}  // namespace logdmod
