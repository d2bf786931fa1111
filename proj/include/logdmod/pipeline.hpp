#pragma once

#include <string>
#include <vector>

#include "logdmod/dmodcheck.hpp"
#include "logdmod/term_order.hpp"

namespace logdmod {

struct AnalysisOptions {
  OrderKind order = OrderKind::GrevLex;  // order for the Weyl Groebner bases
  int k_max = 10;
  int degree_bound = 2;
  // Optional Saito basis given as operators; adopted only after it is checked
  // against the computed Der(log f).
  std::vector<std::string> basis_hint;
  std::string symbol = "f";  // how the divisor is named in text output
  std::vector<std::string> notes;
};

// Everything below is stored as text in the parseable style so reports can be
// serialized, cached and compared without the engine.
struct DerivationText {
  std::string delta;
  std::string cofactor;
  bool operator==(const DerivationText&) const = default;
};

struct BracketText {
  int i = 0;
  int j = 0;
  std::string bracket;
  std::vector<std::string> alpha;
  bool operator==(const BracketText&) const = default;
};

struct QhSection {
  bool quasi_homogeneous = false;
  bool cofactor_criterion = false;
  bool jacobian_criterion = false;
  bool jacobian_local = false;
  int witness_index = -1;
  std::string witness_cofactor;
  std::string jacobian_remainder;
  bool operator==(const QhSection&) const = default;
};

struct SaitoSection {
  bool found = false;
  std::string source;  // "search" or "hint"
  std::string unit;
  std::vector<DerivationText> basis;
  std::vector<BracketText> brackets;
  std::vector<std::string> divergence_residues;  // curves only
  bool operator==(const SaitoSection&) const = default;
};

struct ResolutionSection {
  bool phi_vanishes = false;
  bool psi_vanishes = false;
  std::string phi_residue;
  std::string psi_residue;
  std::vector<std::vector<std::string>> relations;
  bool relations_are_syzygies = false;
  bool relations_generate = false;
  bool second_cyclic = false;
  std::vector<std::string> second_generator;
  bool second_vanishes = false;
  bool operator==(const ResolutionSection&) const = default;
};

struct DualitySection {
  bool holds = false;
  bool identities_hold = false;
  std::vector<std::string> transposed;
  std::string dual_fingerprint;
  std::string tilde_fingerprint;
  std::string note;
  bool operator==(const DualitySection&) const = default;
};

struct GrFSection {
  std::vector<std::string> symbols;
  bool regular = false;
  int failing_index = -1;
  std::string witness;
  bool tilde_symbols_equal = false;
  bool operator==(const GrFSection&) const = default;
};

struct ProbeSection {
  bool ran = false;
  int k_max = 0;
  std::vector<bool> solvable;
  int first_unsolvable = -1;
  bool operator==(const ProbeSection&) const = default;
};

struct LctSection {
  std::string status = "unverified";
  bool probe_consistent = true;
  bool probe_inconclusive = false;
  std::string explanation;
  bool operator==(const LctSection&) const = default;
};

// Wall-clock time; compares equal to any other so it never affects report equality.
struct Timing {
  double seconds = 0;
  bool operator==(const Timing&) const { return true; }
};

struct CurveReport {
  std::string name;
  std::vector<std::string> vars;
  std::string symbol = "f";
  std::string divisor;
  std::string order;
  int k_max = 0;
  int degree_bound = 0;
  std::vector<DerivationText> generators;
  QhSection qh;
  SaitoSection saito;
  std::vector<std::string> i_log;
  std::vector<std::string> i_log_tilde;
  ResolutionSection resolution;
  DualitySection duality;
  GrFSection grf;
  ProbeSection probe;
  bool annihilator_contained = false;
  LctSection lct;
  std::vector<std::string> notes;
  std::string engine_version;
  Timing timing;

  bool operator==(const CurveReport&) const = default;
};

// Engine version string embedded in reports and cache keys.
std::string engine_version();

// Full pipeline for one divisor. Throws InputError for invalid input and
// InconsistencyError when internal cross-checks disagree; a missing Saito
// basis is reported, not thrown.
CurveReport analyze_divisor(const Poly& f, const std::vector<std::string>& vars, const std::string& name,
                            const AnalysisOptions& options);

}  // namespace logdmod
