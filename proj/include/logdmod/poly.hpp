#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdmod/monomial.hpp"
#include "logdmod/rational.hpp"
#include "logdmod/term_order.hpp"

namespace logdmod {

struct Term {
  Monomial mono;
  Rational coef;

  bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
};

// Sorts terms into canonical storage order (descending slot-lex), merges equal
// monomials and drops zero coefficients.
void canonicalize_terms(std::vector<Term>& terms);

// Multivariate polynomial over Q in a fixed number of variables.
//
// Storage is canonical and independent of any term order, so two polynomials
// are equal iff their term vectors are equal.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars);
  Poly(int nvars, std::vector<Term> terms);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Monomial& m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;  // -1 for the zero polynomial

  const Term& leading_term(const TermOrder& order) const;

  // Terms sorted descending by `order`.
  std::vector<Term> sorted_terms(const TermOrder& order) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(int e) const;

  // Same polynomial viewed in a ring with more variables (appended at the end).
  Poly extend(int nvars) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void check_same_ring(const Poly& o) const;

  int nvars_ = 0;
  std::vector<Term> terms_;
};

using PolyVector = std::vector<Poly>;

Poly partial_derivative(const Poly& p, int var);

// p / q when q divides p exactly, std::nullopt otherwise.
// Throws std::invalid_argument when q is zero.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

// Drops every term of total degree >= k (reduction modulo m^k).
Poly truncate_degree(const Poly& p, int k);

Rational evaluate_at_origin(const Poly& p);

enum class PrintStyle {
  Parseable,  // explicit '*', e.g. "3*x^2*y - 1/2"
  Display     // juxtaposition, e.g. "3 x^2 y - 1/2"
};

std::string to_string(const Poly& p, std::span<const std::string> names,
                      PrintStyle style = PrintStyle::Parseable,
                      const TermOrder* order = nullptr);

// Default variable names: x, y, z for n <= 3, x1..xn otherwise.
std::vector<std::string> default_variable_names(int n);

}  // namespace logdmod
