#include "logdmod/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logdmod {

namespace {

std::vector<int> identity_priority(int nslots) {
  if (nslots < 0 || nslots > static_cast<int>(kMaxSlots))
    throw std::invalid_argument("term order: slot count out of range");
  std::vector<int> p(static_cast<std::size_t>(nslots));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, int nslots)
    : TermOrder(kind, identity_priority(nslots)) {}

TermOrder::TermOrder(OrderKind kind, std::vector<int> priority, std::vector<int> weights)
    : kind_(kind), priority_(std::move(priority)), weights_(std::move(weights)) {
  std::vector<int> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i))
      throw std::invalid_argument("term order: priority is not a permutation");
  if (kind_ == OrderKind::WeightedElimination) {
    if (weights_.size() != priority_.size())
      throw std::invalid_argument("term order: weight vector length mismatch");
    if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w < 0; }))
      throw std::invalid_argument("term order: negative weight");
  }
}

TermOrder TermOrder::elimination(int nslots, std::vector<int> weights) {
  return {OrderKind::WeightedElimination, identity_priority(nslots), std::move(weights)};
}

int TermOrder::lex_compare(const Monomial& a, const Monomial& b) const {
  for (int s : priority_)
    if (a[s] != b[s]) return a[s] > b[s] ? 1 : -1;
  return 0;
}

int TermOrder::revlex_compare(const Monomial& a, const Monomial& b) const {
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
    if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::GrLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return lex_compare(a, b);
    }
    case OrderKind::GrevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return revlex_compare(a, b);
    }
    case OrderKind::WeightedElimination: {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        wa += static_cast<long>(weights_[i]) * a[i];
        wb += static_cast<long>(weights_[i]) * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      int da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return revlex_compare(a, b);
    }
  }
  return 0;
}

TermOrder TermOrder::with_appended_slot(int extra_weight) const {
  std::vector<int> p = priority_;
  p.push_back(static_cast<int>(p.size()));
  if (kind_ == OrderKind::WeightedElimination) {
    std::vector<int> w = weights_;
    w.push_back(extra_weight);
    return {kind_, std::move(p), std::move(w)};
  }
  if (extra_weight != 0) {
    std::vector<int> w(p.size(), 0);
    w.back() = extra_weight;
    return {OrderKind::WeightedElimination, std::move(p), std::move(w)};
  }
  return {kind_, std::move(p)};
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::WeightedElimination: return "weighted";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw std::invalid_argument("unknown term order '" + name + "'");
}

int ModuleOrder::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  if (!shifts_.empty()) {
    int da = a.degree() + shifts_.at(static_cast<std::size_t>(ca));
    int db = b.degree() + shifts_.at(static_cast<std::size_t>(cb));
    if (da != db) return da > db ? 1 : -1;
  }
  if (ext_ == ModuleExtension::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return order_.compare(a, b);
  }
  int c = order_.compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

}  // namespace logdmod
