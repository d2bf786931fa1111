#pragma once

#include <string>
#include <vector>

#include "logdmod/monomial.hpp"

namespace logdmod {

enum class OrderKind { Lex, GrLex, GrevLex, WeightedElimination };

enum class ModuleExtension { PositionOverTerm, TermOverPosition };

// A multiplicative well-order on monomials with `nslots` variables.
//
// `priority` lists slot indices from most to least significant; by default the
// identity. For WeightedElimination the weight vector (non-negative) is compared
// first and grevlex breaks ties, which makes any slot with positive weight
// eliminable.
class TermOrder {
 public:
  TermOrder() : TermOrder(OrderKind::GrevLex, 0) {}
  TermOrder(OrderKind kind, int nslots);
  TermOrder(OrderKind kind, std::vector<int> priority, std::vector<int> weights = {});

  static TermOrder grevlex(int nslots) { return {OrderKind::GrevLex, nslots}; }
  static TermOrder lex(int nslots) { return {OrderKind::Lex, nslots}; }
  static TermOrder grlex(int nslots) { return {OrderKind::GrLex, nslots}; }
  static TermOrder elimination(int nslots, std::vector<int> weights);

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  OrderKind kind() const { return kind_; }
  int nslots() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<int>& weights() const { return weights_; }

  // Same order on a ring with one more slot appended as the least significant
  // variable (weights extended by `extra_weight`).
  TermOrder with_appended_slot(int extra_weight = 0) const;

  std::string name() const;

 private:
  int lex_compare(const Monomial& a, const Monomial& b) const;
  int revlex_compare(const Monomial& a, const Monomial& b) const;

  OrderKind kind_;
  std::vector<int> priority_;
  std::vector<int> weights_;
};

OrderKind parse_order_kind(const std::string& name);

// Extension of a term order to free modules with components 0..rank-1.
// Under position-over-term the lower component index dominates. Optional
// shifts are added to the total degree of a term in that component before
// anything else is compared (Schreyer-style grading).
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(TermOrder order,
                       ModuleExtension ext = ModuleExtension::PositionOverTerm,
                       std::vector<int> shifts = {})
      : order_(std::move(order)), ext_(ext), shifts_(std::move(shifts)) {}

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;

  const TermOrder& term_order() const { return order_; }
  ModuleExtension extension() const { return ext_; }

 private:
  TermOrder order_;
  ModuleExtension ext_ = ModuleExtension::PositionOverTerm;
  std::vector<int> shifts_;
};

}  // namespace logdmod
