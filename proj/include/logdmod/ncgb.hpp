#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "logdmod/term_order.hpp"
#include "logdmod/weyl.hpp"

// Left ideals and left submodules of free modules over the Weyl algebra.
namespace logdmod {

using OperatorVector = std::vector<WeylOp>;

// Default order on (x_1..x_n, d_1..d_n) exponents: grevlex.
TermOrder default_weyl_order(int n);

class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(std::size_t rows, std::size_t cols, int n);
  explicit OperatorMatrix(std::vector<OperatorVector> rows);

  static OperatorMatrix row(OperatorVector entries);
  static OperatorMatrix column(const OperatorVector& entries);
  static OperatorMatrix identity(std::size_t size, int n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const WeylOp& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  WeylOp& at(std::size_t r, std::size_t c) { return rows_.at(r).at(c); }
  const OperatorVector& row_at(std::size_t r) const { return rows_.at(r); }
  bool is_zero() const;

  bool operator==(const OperatorMatrix&) const = default;

 private:
  std::vector<OperatorVector> rows_;
  std::size_t cols_ = 0;
};

// Product A * B with entries composed by weyl_mul. Throws on shape mismatch.
OperatorMatrix matrix_compose(const OperatorMatrix& a, const OperatorMatrix& b);

// Normal form modulo the left ideal generated by `basis`.
WeylOp left_reduce(const WeylOp& p, std::span<const WeylOp> basis, const TermOrder& order);

// Reduced monic left Groebner basis, sorted ascending by leading monomial.
// Zero generators are dropped; the zero ideal yields an empty basis.
std::vector<WeylOp> left_buchberger(std::span<const WeylOp> gens, const TermOrder& order);

struct CertifiedElement {
  WeylOp element;
  OperatorVector cofactors;  // element = sum_i cofactors[i] * gens[i]
};

// Reduced left Groebner basis together with a representation of every element
// in terms of the input generators.
std::vector<CertifiedElement> left_buchberger_certified(std::span<const WeylOp> gens,
                                                        const TermOrder& order);

// Generator list plus a lazily computed, write-once reduced left GB.
class IdealPresentation {
 public:
  IdealPresentation(std::vector<WeylOp> generators, TermOrder order);
  explicit IdealPresentation(std::vector<WeylOp> generators);

  const std::vector<WeylOp>& generators() const { return gens_; }
  const TermOrder& order() const { return order_; }
  int nvars() const { return n_; }
  const std::vector<WeylOp>& groebner_basis() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<WeylOp> gb;
  };
  std::vector<WeylOp> gens_;
  TermOrder order_;
  int n_ = 0;
  std::shared_ptr<Cache> cache_;
};

bool left_ideal_member(const WeylOp& p, const IdealPresentation& ideal);
// Compares reduced GBs. Throws when contexts or orders differ.
bool left_ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

// Left syzygies {(A_1..A_k) : sum A_i gens_i = 0}; every vector is verified by
// expansion before it is returned.
std::vector<OperatorVector> left_syzygies(std::span<const WeylOp> gens, const TermOrder& order);
// Same for elements of a free module D^r.
std::vector<OperatorVector> left_syzygies(std::span<const OperatorVector> gens, const TermOrder& order);

// Submodules of D^r.
std::vector<OperatorVector> left_module_groebner(std::span<const OperatorVector> gens,
                                                 const TermOrder& order);
bool left_module_member(const OperatorVector& v, std::span<const OperatorVector> gens,
                        const TermOrder& order);
bool left_modules_equal(std::span<const OperatorVector> a, std::span<const OperatorVector> b,
                        const TermOrder& order);

// sum_i coefficients[i] * vectors[i] (left multiplication).
OperatorVector left_combine(std::span<const WeylOp> coefficients, std::span<const OperatorVector> vectors);
// sum_i v[i] * gens[i]
WeylOp apply_relation(const OperatorVector& v, std::span<const WeylOp> gens);

// Canonical text of a reduced GB (one generator per line).
std::string gb_fingerprint(std::span<const WeylOp> gb, std::span<const std::string> vars);

}  // namespace logdmod
