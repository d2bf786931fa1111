#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logdmod/logder.hpp"
#include "logdmod/ncgb.hpp"

namespace logdmod {

// I^log = <delta_i> and the tilde ideal <delta_i + a_i>.
std::pair<IdealPresentation, IdealPresentation> build_log_ideals(const SaitoBasis& basis);

// Syzygy of (delta_1..delta_n) read off [delta_i, delta_j] = sum_k alpha_k delta_k:
// -delta_j in slot i, delta_i in slot j, and -alpha_k added to slot k.
OperatorVector bracket_relation(const SaitoBasis& basis, const BracketEntry& entry);

struct ResolutionReport {
  // Curves: phi_1 = (delta_1 + a_1, delta_2 + a_2)^T, phi_2 = (-delta_2 - a_2 - alpha_1, delta_1 + a_1 - alpha_2),
  // and psi the same with every a_i dropped.
  OperatorMatrix phi1, phi2, psi1, psi2;
  bool phi_vanishes = false;
  bool psi_vanishes = false;
  WeylOp phi_residue;  // entry of phi_2 phi_1 (zero when it vanishes)
  WeylOp psi_residue;

  // Three or more variables: the bracket relations and the second syzygies.
  std::vector<OperatorVector> relations;
  bool relations_are_syzygies = false;
  bool relations_generate = false;  // equal to the computed first syzygy module
  std::vector<OperatorVector> second_syzygies;
  bool second_cyclic = false;
  OperatorVector second_generator;  // last component monic
  bool second_vanishes = false;     // second_generator * relations = 0

  bool symbols_regular = false;
  bool symbols_match_tilde = false;  // sigma(delta_i) = sigma(delta_i + a_i)
};

// Composition and symbol checks; relations and second syzygies for n >= 3.
ResolutionReport resolution_check(const SaitoBasis& basis, const BracketStructure& brackets);
ResolutionReport resolution_check(const SaitoBasis& basis, const BracketStructure& brackets, const TermOrder& order);

struct DualityReport {
  std::vector<WeylOp> transposed;
  bool holds = false;
  bool identities_hold = false;  // curves only: -d1^t + alpha_2 = d1 + a1, d2^t + alpha_1 = -d2 - a2
  std::string dual_fingerprint;
  std::string tilde_fingerprint;
  std::string note;
};

// Curves: the closed-form transposed pair. More variables: transposes of the
// single generator in `resolution.second_generator` (fails when not cyclic).
DualityReport duality_check(const SaitoBasis& basis, const BracketStructure& brackets,
                            const ResolutionReport& resolution, std::span<const std::string> vars);
DualityReport duality_check(const SaitoBasis& basis, const BracketStructure& brackets,
                            const ResolutionReport& resolution, std::span<const std::string> vars,
                            const TermOrder& order);

// Regular-sequence test for polynomials in a commutative ring: each element is
// a non-zerodivisor modulo the previous ones and the ideal is proper. When it
// fails, `witness` receives an element of (I_{k-1} : g_k) outside I_{k-1} and
// `failing_index` the position k.
struct RegularityResult {
  bool regular = false;
  int failing_index = -1;
  Poly witness;
};
RegularityResult regular_sequence_test(std::span<const Poly> seq);

struct GrFReport {
  std::vector<Poly> symbols;  // sigma(delta_i) in Q[x, xi]
  RegularityResult regularity;
  bool tilde_symbols_equal = false;
};

GrFReport grF_analysis(const SaitoBasis& basis);

// For the symbol sequence (s_1..s_n): w not in <s_1..s_{n-1}> and
// w * s_n in <s_1..s_{n-1}>.
std::pair<bool, bool> symbol_witness_check(const GrFReport& report, const Poly& witness);

struct Ext2Probe {
  int k_max = 0;
  std::vector<bool> solvable;  // solvable[K-1] for K = 1..k_max
  int first_unsolvable = -1;   // -1 when solvable throughout

  bool certificate() const { return first_unsolvable > 0; }
};

// Curves only. Decides for each K whether h_1, h_2 of degree <= K satisfy
// P_1(h_1) + P_2(h_2) = 1 mod m^K with P_1 = -delta_2 - a_2 - alpha_1 and
// P_2 = delta_1 + a_1 - alpha_2. Throws InconsistencyError if solvability is
// not monotone in K.
Ext2Probe ext2_jet_probe(const SaitoBasis& basis, const BracketStructure& brackets, int k_max);

// Exact rank-based solvability of A z = b over Q.
bool linear_system_solvable(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

// Every operator annihilates 1/f.
bool annihilator_containment(std::span<const WeylOp> operators, const Poly& f);
bool annihilator_containment(const SaitoBasis& basis, const Poly& f);

enum class LctStatus { Holds, Fails, HoldsModuloAnnihilator, Unverified };

struct LctVerdict {
  LctStatus status = LctStatus::Unverified;
  bool probe_consistent = true;  // QH with full solvability, or not-QH with a certificate
  bool probe_inconclusive = false;
  std::string explanation;
};

// Curves: LCT iff QH, cross-checked against the probe and duality. More
// variables: reports the verified chain. Throws InconsistencyError on
// contradictory inputs (duality failing for a curve, missing containment,
// QH with an unsolvable jet system).
LctVerdict lct_verdict(int nvars, const QhVerdict& qh, const DualityReport& duality,
                       const ResolutionReport& resolution, const std::optional<Ext2Probe>& probe,
                       bool annihilator_contained);

std::string to_string(LctStatus s);
LctStatus parse_lct_status(const std::string& s);

}  // namespace logdmod
