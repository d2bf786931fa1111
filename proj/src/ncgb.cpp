#include "logdmod/ncgb.hpp"

#include <stdexcept>

#include "logdmod/detail/module_gb.hpp"

namespace logdmod {

using detail::AlgebraKind;
using detail::MElem;
using detail::ModuleEngine;

namespace {

int common_n(std::span<const WeylOp> ops) {
  if (ops.empty()) throw std::invalid_argument("empty operator list");
  const int n = ops.front().nvars();
  for (const WeylOp& p : ops)
    if (p.nvars() != n) throw std::invalid_argument("operators over different Weyl algebras");
  return n;
}

int common_n(std::span<const OperatorVector> vs, std::size_t& rank) {
  if (vs.empty()) throw std::invalid_argument("empty vector list");
  rank = vs.front().size();
  int n = -1;
  for (const OperatorVector& v : vs) {
    if (v.size() != rank) throw std::invalid_argument("operator vectors of different lengths");
    for (const WeylOp& p : v) {
      if (n < 0) n = p.nvars();
      if (p.nvars() != n) throw std::invalid_argument("operators over different Weyl algebras");
    }
  }
  if (n < 0) throw std::invalid_argument("zero-length operator vectors");
  return n;
}

ModuleEngine weyl_engine(int n, const TermOrder& order) {
  if (order.nslots() != 2 * n) throw std::invalid_argument("term order does not match the Weyl algebra");
  return ModuleEngine(AlgebraKind::Weyl, n, ModuleOrder(order));
}

MElem op_elem(const ModuleEngine& eng, const WeylOp& p, int comp = 0) {
  return detail::to_melem(eng, p.terms(), comp);
}

MElem vec_elem(const ModuleEngine& eng, const OperatorVector& v) {
  MElem e;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const Term& t : v[c].terms()) e.push_back({t.mono, static_cast<int>(c), t.coef});
  eng.normalize(e);
  return e;
}

OperatorVector elem_vec(const MElem& e, int n, std::size_t rank, int offset = 0) {
  OperatorVector v;
  for (std::size_t c = 0; c < rank; ++c)
    v.emplace_back(n, detail::component_terms(e, offset + static_cast<int>(c)));
  return v;
}

}  // namespace

TermOrder default_weyl_order(int n) { return TermOrder::grevlex(2 * n); }

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols, int n)
    : rows_(rows, OperatorVector(cols, WeylOp(n))), cols_(cols) {}

OperatorMatrix::OperatorMatrix(std::vector<OperatorVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const OperatorVector& r : rows_)
    if (r.size() != cols_) throw std::invalid_argument("operator matrix rows have different lengths");
}

OperatorMatrix OperatorMatrix::row(OperatorVector entries) { return OperatorMatrix({std::move(entries)}); }

OperatorMatrix OperatorMatrix::column(const OperatorVector& entries) {
  std::vector<OperatorVector> rows;
  for (const WeylOp& p : entries) rows.push_back({p});
  return OperatorMatrix(std::move(rows));
}

OperatorMatrix OperatorMatrix::identity(std::size_t size, int n) {
  OperatorMatrix m(size, size, n);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = WeylOp::constant(n, 1);
  return m;
}

bool OperatorMatrix::is_zero() const {
  for (const OperatorVector& r : rows_)
    for (const WeylOp& p : r)
      if (!p.is_zero()) return false;
  return true;
}

OperatorMatrix matrix_compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix_compose: shape mismatch");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) throw std::invalid_argument("matrix_compose: empty matrix");
  const int n = a.at(0, 0).nvars();
  OperatorMatrix r(a.rows(), b.cols(), n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, k) += a.at(i, j) * b.at(j, k);
  return r;
}

WeylOp left_reduce(const WeylOp& p, std::span<const WeylOp> basis, const TermOrder& order) {
  ModuleEngine eng = weyl_engine(p.nvars(), order);
  std::vector<MElem> bs;
  for (const WeylOp& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("left_reduce: zero basis element");
    if (b.nvars() != p.nvars()) throw std::invalid_argument("left_reduce: algebra mismatch");
    bs.push_back(op_elem(eng, b));
  }
  MElem r = eng.reduce(op_elem(eng, p), bs, true);
  return WeylOp(p.nvars(), detail::component_terms(r, 0));
}

std::vector<WeylOp> left_buchberger(std::span<const WeylOp> gens, const TermOrder& order) {
  if (gens.empty()) return {};  // the zero ideal
  const int n = common_n(gens);
  ModuleEngine eng = weyl_engine(n, order);
  std::vector<MElem> es;
  for (const WeylOp& g : gens) es.push_back(op_elem(eng, g));
  std::vector<WeylOp> out;
  for (const MElem& e : eng.groebner(std::move(es))) out.emplace_back(n, detail::component_terms(e, 0));
  return out;
}

std::vector<CertifiedElement> left_buchberger_certified(std::span<const WeylOp> gens,
                                                        const TermOrder& order) {
  const int n = common_n(gens);
  ModuleEngine eng = weyl_engine(n, order);
  std::vector<MElem> aug;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    MElem e = op_elem(eng, gens[i]);
    e.push_back({Monomial{}, 1 + static_cast<int>(i), 1});
    eng.normalize(e);
    aug.push_back(std::move(e));
  }
  // Position-over-term with component 0 dominating: the elements led in
  // component 0 project onto a Groebner basis of the ideal, and their tag
  // components record the cofactors.
  std::vector<MElem> gb = eng.groebner(std::move(aug));
  std::vector<MElem> ideal_part, syz_part;
  for (MElem& e : gb) (e.front().comp == 0 ? ideal_part : syz_part).push_back(e);

  std::vector<WeylOp> reduced = left_buchberger(gens, order);
  std::vector<CertifiedElement> out;
  for (const WeylOp& g : reduced) {
    MElem f = op_elem(eng, g);
    // Reduce (g, 0) until component 0 vanishes; the tag part is then -cofactors.
    MElem rem = eng.reduce(std::move(f), ideal_part, false);
    if (!rem.empty() && rem.front().comp == 0) throw std::logic_error("certified GB: element not in the ideal");
    OperatorVector cof = elem_vec(rem, n, gens.size(), 1);
    for (WeylOp& c : cof) c = -c;
    out.push_back({g, std::move(cof)});
  }
  return out;
}

IdealPresentation::IdealPresentation(std::vector<WeylOp> generators, TermOrder order)
    : gens_(std::move(generators)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  n_ = common_n(gens_);
  for (const WeylOp& g : gens_)
    if (g.is_zero()) throw std::invalid_argument("ideal presentation: zero generator");
  if (order_.nslots() != 2 * n_) throw std::invalid_argument("ideal presentation: order does not match");
}

IdealPresentation::IdealPresentation(std::vector<WeylOp> generators)
    : IdealPresentation(generators, default_weyl_order(generators.empty() ? 1 : generators.front().nvars())) {}

const std::vector<WeylOp>& IdealPresentation::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->gb = left_buchberger(gens_, order_); });
  return cache_->gb;
}

bool left_ideal_member(const WeylOp& p, const IdealPresentation& ideal) {
  if (p.is_zero()) return true;
  return left_reduce(p, ideal.groebner_basis(), ideal.order()).is_zero();
}

bool left_ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("left_ideal_equal: context mismatch");
  if (a.order().kind() != b.order().kind() || a.order().priority() != b.order().priority() ||
      a.order().weights() != b.order().weights())
    throw std::invalid_argument("left_ideal_equal: term orders differ");
  return a.groebner_basis() == b.groebner_basis();
}

WeylOp apply_relation(const OperatorVector& v, std::span<const WeylOp> gens) {
  if (v.size() != gens.size()) throw std::invalid_argument("apply_relation: length mismatch");
  WeylOp r(gens.front().nvars());
  for (std::size_t i = 0; i < v.size(); ++i) r += v[i] * gens[i];
  return r;
}

OperatorVector left_combine(std::span<const WeylOp> coefficients, std::span<const OperatorVector> vectors) {
  if (coefficients.size() != vectors.size() || vectors.empty())
    throw std::invalid_argument("left_combine: length mismatch");
  OperatorVector r(vectors.front().size(), WeylOp(coefficients.front().nvars()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t c = 0; c < r.size(); ++c) r[c] += coefficients[i] * vectors[i][c];
  return r;
}

std::vector<OperatorVector> left_syzygies(std::span<const WeylOp> gens, const TermOrder& order) {
  std::vector<OperatorVector> vs;
  for (const WeylOp& g : gens) vs.push_back({g});
  return left_syzygies(vs, order);
}

std::vector<OperatorVector> left_syzygies(std::span<const OperatorVector> gens, const TermOrder& order) {
  std::size_t rank = 0;
  const int n = common_n(gens, rank);
  ModuleEngine eng = weyl_engine(n, order);
  std::vector<MElem> es;
  for (const OperatorVector& v : gens) es.push_back(vec_elem(eng, v));
  std::vector<OperatorVector> out;
  for (const MElem& e : eng.syzygies(es, static_cast<int>(rank))) {
    OperatorVector s = elem_vec(e, n, gens.size());
    // sum_i s_i * gens_i must vanish in every component.
    for (std::size_t c = 0; c < rank; ++c) {
      WeylOp acc(n);
      for (std::size_t i = 0; i < gens.size(); ++i) acc += s[i] * gens[i][c];
      if (!acc.is_zero()) throw std::logic_error("left_syzygies: returned vector fails its relation");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<OperatorVector> left_module_groebner(std::span<const OperatorVector> gens,
                                                 const TermOrder& order) {
  std::size_t rank = 0;
  const int n = common_n(gens, rank);
  ModuleEngine eng = weyl_engine(n, order);
  std::vector<MElem> es;
  for (const OperatorVector& v : gens) es.push_back(vec_elem(eng, v));
  std::vector<OperatorVector> out;
  for (const MElem& e : eng.groebner(std::move(es))) out.push_back(elem_vec(e, n, rank));
  return out;
}

bool left_module_member(const OperatorVector& v, std::span<const OperatorVector> gens,
                        const TermOrder& order) {
  std::size_t rank = 0;
  const int n = common_n(gens, rank);
  if (v.size() != rank) throw std::invalid_argument("left_module_member: length mismatch");
  ModuleEngine eng = weyl_engine(n, order);
  std::vector<MElem> gb;
  for (const OperatorVector& g : left_module_groebner(gens, order)) gb.push_back(vec_elem(eng, g));
  return eng.reduce(vec_elem(eng, v), gb, true).empty();
}

bool left_modules_equal(std::span<const OperatorVector> a, std::span<const OperatorVector> b,
                        const TermOrder& order) {
  return left_module_groebner(a, order) == left_module_groebner(b, order);
}

std::string gb_fingerprint(std::span<const WeylOp> gb, std::span<const std::string> vars) {
  std::string r;
  for (const WeylOp& g : gb) {
    if (!r.empty()) r += "\n";
    r += to_string(g, vars);
  }
  return r;
}

}  // namespace logdmod
