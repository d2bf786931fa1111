#include "logdmod/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "logdmod/detail/format.hpp"

namespace logdmod {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

void canonicalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coef;
    if (!is_zero(c)) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

namespace {

// Merge of two canonical term vectors: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      r.push_back(b[j++]);
      if (sign < 0) r.back().coef = -r.back().coef;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (!is_zero(c)) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > static_cast<int>(kMaxSlots))
    throw std::invalid_argument("polynomial ring: variable count out of range");
}

Poly::Poly(int nvars, std::vector<Term> terms) : Poly(nvars) {
  terms_ = std::move(terms);
  canonicalize_terms(terms_);
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (!logdmod::is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  return monomial(nvars, Monomial::unit(static_cast<std::size_t>(index)));
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  if (!logdmod::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono > k; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

int Poly::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Poly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::vector<Term> Poly::sorted_terms(const TermOrder& order) const {
  std::vector<Term> r = terms_;
  std::sort(r.begin(), r.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return r;
}

void Poly::check_same_ring(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials live in different rings");
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (logdmod::is_zero(c)) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  std::vector<Term> r;
  r.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) r.push_back({s.mono * t.mono, s.coef * t.coef});
  return Poly(a.nvars_, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::extend(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a polynomial ring");
  Poly r(nvars);
  r.terms_ = terms_;
  return r;
}

Poly partial_derivative(const Poly& p, int var) {
  if (var < 0 || var >= p.nvars()) throw std::out_of_range("partial derivative: invalid variable index");
  std::vector<Term> r;
  for (const Term& t : p.terms()) {
    int e = t.mono[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(static_cast<std::size_t>(var), e - 1);
    r.push_back({m, t.coef * e});
  }
  return Poly(p.nvars(), std::move(r));
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_divide: division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw std::invalid_argument("exact_divide: ring mismatch");
  // Storage order is lex on slots, itself a monomial order, so the first term
  // is the leading one.
  const Term& lead = q.terms().front();
  Poly rem = p;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& t = rem.terms().front();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    Term qt{t.mono / lead.mono, t.coef / lead.coef};
    quot.push_back(qt);
    rem -= Poly::monomial(p.nvars(), qt.mono, qt.coef) * q;
  }
  return Poly(p.nvars(), std::move(quot));
}

Poly truncate_degree(const Poly& p, int k) {
  std::vector<Term> r;
  for (const Term& t : p.terms())
    if (t.mono.degree() < k) r.push_back(t);
  return Poly(p.nvars(), std::move(r));
}

Rational evaluate_at_origin(const Poly& p) { return p.constant_term(); }

std::vector<std::string> default_variable_names(int n) {
  if (n <= 3) {
    static const char* kNames[] = {"x", "y", "z"};
    return {kNames, kNames + n};
  }
  std::vector<std::string> r;
  for (int i = 1; i <= n; ++i) r.push_back("x" + std::to_string(i));
  return r;
}

std::string to_string(const Poly& p, std::span<const std::string> names, PrintStyle style,
                      const TermOrder* order) {
  if (static_cast<int>(names.size()) < p.nvars()) throw std::invalid_argument("not enough variable names");
  TermOrder fallback = TermOrder::grevlex(p.nvars());
  std::vector<Term> terms = p.sorted_terms(order ? *order : fallback);
  return detail::format_terms(terms, names, style);
}

namespace detail {

std::string format_terms(std::span<const Term> terms, std::span<const std::string> names,
                         PrintStyle style) {
  if (terms.empty()) return "0";
  const char* join = style == PrintStyle::Parseable ? "*" : " ";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    Rational c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_one = t.mono.is_one();
    bool wrote = false;
    if (c != 1 || is_one) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << join;
      os << names[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace detail

}  // namespace logdmod
