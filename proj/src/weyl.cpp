#include "logdmod/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "logdmod/detail/format.hpp"
#include "logdmod/detail/module_gb.hpp"

namespace logdmod {

namespace {

void check_n(int n) {
  if (n < 1 || 2 * n > static_cast<int>(kMaxSlots)) throw std::invalid_argument("Weyl algebra: unsupported number of variables");
}

std::size_t xs(int i) { return static_cast<std::size_t>(i); }
std::size_t ds(int n, int i) { return static_cast<std::size_t>(n + i); }

}  // namespace

WeylOp::WeylOp(int n) : n_(n) { check_n(n); }

WeylOp::WeylOp(int n, std::vector<Term> terms) : WeylOp(n) {
  terms_ = std::move(terms);
  canonicalize_terms(terms_);
}

WeylOp WeylOp::constant(int n, const Rational& c) {
  WeylOp r(n);
  if (!logdmod::is_zero(c)) r.terms_.push_back({Monomial{}, c});
  return r;
}

WeylOp WeylOp::x(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("Weyl variable index out of range");
  return WeylOp(n, {{Monomial::unit(xs(i)), 1}});
}

WeylOp WeylOp::d(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("Weyl partial index out of range");
  return WeylOp(n, {{Monomial::unit(ds(n, i)), 1}});
}

WeylOp WeylOp::from_poly(const Poly& p) { return WeylOp(p.nvars(), p.terms()); }

WeylOp WeylOp::vector_field(std::span<const Poly> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i) {
    if (coeffs[xs(i)].nvars() != n) throw std::invalid_argument("vector field: coefficient ring mismatch");
    for (const Term& t : coeffs[xs(i)].terms()) {
      Monomial m = t.mono;
      m.set(ds(n, i), 1);
      terms.push_back({m, t.coef});
    }
  }
  return WeylOp(n, std::move(terms));
}

int WeylOp::order() const {
  int o = -1;
  for (const Term& t : terms_) o = std::max(o, t.mono.degree(xs(n_), ds(n_, n_)));
  return o;
}

Poly WeylOp::coefficient_of(const Monomial& d_exponents) const {
  std::vector<Term> r;
  for (const Term& t : terms_) {
    bool match = true;
    for (int i = 0; i < n_; ++i)
      if (t.mono[ds(n_, i)] != d_exponents[xs(i)]) match = false;
    if (!match) continue;
    Monomial m;
    for (int i = 0; i < n_; ++i) m.set(xs(i), t.mono[xs(i)]);
    r.push_back({m, t.coef});
  }
  return Poly(n_, std::move(r));
}

Poly WeylOp::order_zero_part() const { return coefficient_of(Monomial{}); }

std::vector<Poly> WeylOp::vector_field_coefficients() const {
  if (order() > 1) throw std::domain_error("operator has order greater than one");
  std::vector<Poly> r;
  for (int i = 0; i < n_; ++i) r.push_back(coefficient_of(Monomial::unit(xs(i))));
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("Weyl operators over different algebras");
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  canonicalize_terms(all);
  terms_ = std::move(all);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) { return *this += -o; }

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (logdmod::is_zero(c)) terms_.clear();
  for (Term& t : terms_) t.coef *= c;
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (Term& t : r.terms_) t.coef = -t.coef;
  return r;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("weyl_mul: operators over different algebras");
  std::vector<Term> out;
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      detail::weyl_monomial_product(a.n_, s.mono, t.mono, s.coef * t.coef,
                                    [&](const Monomial& m, Rational c) { out.push_back({m, std::move(c)}); });
  return WeylOp(a.n_, std::move(out));
}

WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) { return p * q; }

WeylOp transpose(const WeylOp& p) {
  const int n = p.nvars();
  WeylOp r(n);
  for (const Term& t : p.terms()) {
    // (x^a d^b)^t = (-1)^|b| d^b x^a
    Monomial dpart, xpart;
    int order = 0;
    for (int i = 0; i < n; ++i) {
      dpart.set(ds(n, i), t.mono[ds(n, i)]);
      xpart.set(xs(i), t.mono[xs(i)]);
      order += t.mono[ds(n, i)];
    }
    Rational c = order % 2 == 0 ? t.coef : Rational(-t.coef);
    r += WeylOp(n, {{dpart, c}}) * WeylOp(n, {{xpart, 1}});
  }
  return r;
}

WeylOp lie_bracket(const WeylOp& p, const WeylOp& q) { return p * q - q * p; }

Poly principal_symbol(const WeylOp& p) {
  if (p.is_zero()) throw std::domain_error("principal symbol of the zero operator");
  const int n = p.nvars();
  const int ord = p.order();
  std::vector<Term> r;
  for (const Term& t : p.terms())
    if (t.mono.degree(xs(n), ds(n, n)) == ord) r.push_back(t);
  return Poly(2 * n, std::move(r));
}

Poly apply_to_poly(const WeylOp& p, const Poly& g) {
  const int n = p.nvars();
  if (g.nvars() != n) throw std::invalid_argument("apply_to_poly: ring mismatch");
  Poly result(n);
  for (const Term& t : p.terms()) {
    Poly h = g;
    for (int i = 0; i < n && !h.is_zero(); ++i)
      for (int k = 0; k < t.mono[ds(n, i)] && !h.is_zero(); ++k) h = partial_derivative(h, i);
    if (h.is_zero()) continue;
    Monomial xpart;
    for (int i = 0; i < n; ++i) xpart.set(xs(i), t.mono[xs(i)]);
    result += Poly::monomial(n, xpart, t.coef) * h;
  }
  return result;
}

Poly jet_apply(const WeylOp& p, const Poly& g, int k) {
  if (k < 0) throw std::invalid_argument("jet_apply: negative truncation order");
  return truncate_degree(apply_to_poly(p, g), k);
}

Poly divergence(const WeylOp& vector_field) {
  std::vector<Poly> c = vector_field.vector_field_coefficients();
  Poly r(vector_field.nvars());
  for (int i = 0; i < vector_field.nvars(); ++i) r += partial_derivative(c[xs(i)], i);
  return r;
}

MeroElement::MeroElement(Poly numerator, int pole_order, Poly base)
    : num_(std::move(numerator)), k_(pole_order), base_(std::move(base)) {
  if (k_ < 0) throw std::invalid_argument("negative pole order");
  if (base_.is_zero()) throw std::invalid_argument("meromorphic base must be nonzero");
  if (num_.nvars() != base_.nvars()) throw std::invalid_argument("meromorphic element: ring mismatch");
  reduce();
}

void MeroElement::reduce() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto q = exact_divide(num_, base_);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

MeroElement apply_to_meromorphic(const WeylOp& p, const MeroElement& m) {
  const int n = p.nvars();
  const Poly& f = m.base();
  if (f.nvars() != n) throw std::invalid_argument("apply_to_meromorphic: ring mismatch");
  std::vector<Poly> df;
  for (int i = 0; i < n; ++i) df.push_back(partial_derivative(f, i));

  // Accumulate every term over a common denominator f^top.
  struct Frac {
    Poly g;
    int k;
  };
  std::vector<Frac> parts;
  int top = 0;
  for (const Term& t : p.terms()) {
    Frac cur{m.numerator(), m.pole_order()};
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < t.mono[ds(n, i)]; ++e) {
        // d_i (g / f^k) = (d_i(g) f - k g d_i(f)) / f^(k+1)
        Poly ng = partial_derivative(cur.g, i) * f - Poly::constant(n, cur.k) * cur.g * df[xs(i)];
        cur = {std::move(ng), cur.k + 1};
      }
    }
    Monomial xpart;
    for (int i = 0; i < n; ++i) xpart.set(xs(i), t.mono[xs(i)]);
    cur.g = Poly::monomial(n, xpart, t.coef) * cur.g;
    top = std::max(top, cur.k);
    parts.push_back(std::move(cur));
  }
  Poly num(n);
  for (Frac& fr : parts) num += fr.g * f.pow(top - fr.k);
  return MeroElement(std::move(num), top, f);
}

std::vector<std::string> weyl_slot_names(std::span<const std::string> vars) {
  std::vector<std::string> r(vars.begin(), vars.end());
  for (const std::string& v : vars) r.push_back("d" + v);
  return r;
}

std::vector<std::string> symbol_slot_names(std::span<const std::string> vars, PrintStyle style) {
  std::vector<std::string> r(vars.begin(), vars.end());
  static const char* kDisplay[] = {"ξ", "η", "ζ"};
  static const char* kPlain[] = {"xi", "eta", "zeta"};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars.size() <= 3)
      r.push_back(style == PrintStyle::Display ? kDisplay[i] : kPlain[i]);
    else
      r.push_back("xi" + std::to_string(i + 1));
  }
  return r;
}

std::string to_string(const WeylOp& p, std::span<const std::string> vars, PrintStyle style) {
  if (static_cast<int>(vars.size()) != p.nvars()) throw std::invalid_argument("to_string: variable count mismatch");
  std::vector<std::string> names = weyl_slot_names(vars);
  Poly flat(2 * p.nvars(), p.terms());
  return to_string(flat, names, style);
}

}  // namespace logdmod
