#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdmod/poly.hpp"
#include "logdmod/weyl.hpp"

namespace logdmod {

// A vector field delta with delta(f) = a f for the divisor f it was built for.
class LogDerivation {
 public:
  // Throws InputError unless delta has order exactly one with no order-zero
  // term and delta(f) = cofactor * f holds exactly.
  LogDerivation(WeylOp delta, Poly cofactor, const Poly& f);

  const WeylOp& delta() const { return delta_; }
  const Poly& cofactor() const { return cofactor_; }
  int nvars() const { return delta_.nvars(); }
  // (b_1..b_n) with delta = sum b_i d_i.
  std::vector<Poly> coefficients() const { return delta_.vector_field_coefficients(); }
  // delta + a, a generator of the tilde ideal.
  WeylOp shifted() const { return delta_ + WeylOp::from_poly(cofactor_); }
  // Max total degree of the coefficients.
  int degree() const;

  // Scaled to integer coefficients with content 1 and positive leading
  // coefficient (grevlex on x, d).
  LogDerivation normalized() const;

  bool operator==(const LogDerivation& o) const { return delta_ == o.delta_ && cofactor_ == o.cofactor_; }

 private:
  LogDerivation(WeylOp delta, Poly cofactor) : delta_(std::move(delta)), cofactor_(std::move(cofactor)) {}

  WeylOp delta_;
  Poly cofactor_;
};

struct SaitoBasis {
  std::vector<LogDerivation> derivations;
  Rational unit;  // det(coefficient matrix) = unit * f
  Poly divisor;

  int nvars() const { return divisor.nvars(); }
  std::vector<std::vector<Poly>> matrix() const;
};

struct BracketEntry {
  int i = 0;
  int j = 0;
  WeylOp bracket;           // [delta_i, delta_j]
  std::vector<Poly> alpha;  // bracket = sum_k alpha[k] delta_k
};

struct BracketStructure {
  std::vector<BracketEntry> entries;  // all pairs i < j

  const BracketEntry& at(int i, int j) const;
  // For two variables: (alpha_1, alpha_2) of [delta_1, delta_2].
  std::pair<Poly, Poly> curve_alpha() const;
};

// Determinant by cofactor expansion; square input only.
Poly determinant(const std::vector<std::vector<Poly>>& m);
// Adjugate (transposed cofactor matrix): m * adj(m) = det(m) I.
std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& m);

// f is reduced iff gcd(f, d_1 f, .., d_n f) is constant.
bool is_reduced(const Poly& f);

// Generators of Der(log f) from the syzygies of (-f, f_x1, .., f_xn), one
// derivation per syzygy (a, b_1..b_n) with sum b_i f_xi - a f = 0, normalized,
// de-duplicated and pruned of generators lying in the span of the others.
// Throws InputError for f = 0, f(0) != 0 or non-reduced f.
std::vector<LogDerivation> derlog_generators(const Poly& f);

// Searches n-subsets of the generators (then subsets where one member is
// g_i +- m g_j with monomial m of degree <= degree_bound) for a coefficient
// determinant equal to a nonzero constant times f. Smallest total degree
// first, ties by input order. std::nullopt when none is found.
std::optional<SaitoBasis> saito_basis(std::span<const LogDerivation> gens, const Poly& f,
                                      int degree_bound = 2);

// Validates that `candidate` is a Saito basis generating the same module as
// `gens`; throws InputError otherwise.
SaitoBasis adopt_saito_basis(std::vector<LogDerivation> candidate, std::span<const LogDerivation> gens,
                             const Poly& f);

// Membership of a vector field in the Q[x]-module spanned by `gens`.
bool derivation_in_span(const WeylOp& delta, std::span<const LogDerivation> gens);

// Structure constants of every bracket [delta_i, delta_j] (i < j) in the
// basis, from the adjugate of the Saito matrix and exact division by unit * f.
// Each decomposition is re-expanded; throws InconsistencyError on failure.
BracketStructure bracket_decompose(const SaitoBasis& basis);

// For two variables: a_1 - alpha_2 - div(delta_1) and a_2 + alpha_1 - div(delta_2).
// Both vanish identically for every Saito basis of a curve.
std::pair<Poly, Poly> divergence_residues(const SaitoBasis& basis, const BracketStructure& brackets);

struct QhVerdict {
  bool quasi_homogeneous = false;
  bool cofactor_criterion = false;   // some cofactor has a nonzero constant term
  bool jacobian_criterion = false;   // f in (d_1 f, .., d_n f)
  bool jacobian_local = false;       // f in the Jacobian ideal localized at 0
  int witness_index = -1;            // generator whose cofactor is a unit at 0
  Poly witness_cofactor;
  Poly jacobian_remainder;           // normal form of f modulo the Jacobian ideal
};

// Throws InconsistencyError when the two criteria disagree. The cofactor test
// is local at the origin while Jacobian membership is global, so singular
// points elsewhere can split them; the message then says so.
QhVerdict qh_test(std::span<const LogDerivation> gens, const Poly& f);

}  // namespace logdmod
