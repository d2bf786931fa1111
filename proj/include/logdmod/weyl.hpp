#pragma once

#include <span>
#include <string>
#include <vector>

#include "logdmod/poly.hpp"

namespace logdmod {

// Element of the Weyl algebra A_n = Q[x_1..x_n]<d_1..d_n>, d_i x_i = x_i d_i + 1.
//
// Stored in normal form sum c_{ab} x^a d^b: monomial slot i < n holds the
// exponent of x_i, slot n + i the exponent of d_i. Storage is canonical so
// equality is structural.
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(int n);
  WeylOp(int n, std::vector<Term> terms);

  static WeylOp constant(int n, const Rational& c);
  static WeylOp x(int n, int i);
  static WeylOp d(int n, int i);
  // Multiplication operator by a polynomial coefficient.
  static WeylOp from_poly(const Poly& p);
  // The vector field sum_i coeffs[i] d_i.
  static WeylOp vector_field(std::span<const Poly> coeffs);

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // max |b| over terms; -1 for zero.
  int order() const;

  // Coefficient polynomial of d^b for a given multi-index b.
  Poly coefficient_of(const Monomial& d_exponents) const;
  // Order-0 part as a polynomial.
  Poly order_zero_part() const;
  // For an operator of order <= 1: coefficients (c_1..c_n) of d_1..d_n.
  std::vector<Poly> vector_field_coefficients() const;

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rational& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  WeylOp operator-() const;

  bool operator==(const WeylOp& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

WeylOp weyl_mul(const WeylOp& p, const WeylOp& q);

// Formal adjoint: x^t = x, d^t = -d, (PQ)^t = Q^t P^t.
WeylOp transpose(const WeylOp& p);

WeylOp lie_bracket(const WeylOp& p, const WeylOp& q);

// Top-order part with d_i replaced by the commuting symbol variable xi_i, as a
// polynomial in 2n variables (x_1..x_n, xi_1..xi_n). Throws on zero.
Poly principal_symbol(const WeylOp& p);

// Standard action on polynomials.
Poly apply_to_poly(const WeylOp& p, const Poly& g);

// apply_to_poly followed by reduction modulo m^k (k >= 0).
Poly jet_apply(const WeylOp& p, const Poly& g, int k);

// Divergence sum_i d_i(c_i) of the vector-field part of an order <= 1 operator.
Poly divergence(const WeylOp& vector_field);

// Element g / f^k of Q[x][1/f] for a fixed base f.
class MeroElement {
 public:
  MeroElement(Poly numerator, int pole_order, Poly base);

  const Poly& numerator() const { return num_; }
  int pole_order() const { return k_; }
  const Poly& base() const { return base_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const MeroElement& o) const {
    return num_ == o.num_ && k_ == o.k_ && base_ == o.base_;
  }

 private:
  void reduce();

  Poly num_;
  int k_;
  Poly base_;
};

MeroElement apply_to_meromorphic(const WeylOp& p, const MeroElement& m);

// Slot names for printing: x y z dx dy dz (or x1.. d1..).
std::vector<std::string> weyl_slot_names(std::span<const std::string> vars);
// Names of the symbol ring: vars followed by xi eta zeta (or xi1..).
std::vector<std::string> symbol_slot_names(std::span<const std::string> vars, PrintStyle style);

// Terms are printed descending under grevlex on (x, d); the parseable style
// round-trips through the expression parser.
std::string to_string(const WeylOp& p, std::span<const std::string> vars,
                      PrintStyle style = PrintStyle::Parseable);

}  // namespace logdmod
