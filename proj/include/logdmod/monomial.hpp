#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace logdmod {

// Upper bound on exponent slots of a monomial. A Weyl algebra in n variables
// uses 2n slots (x-part then d-part), and the tag-variable constructions in
// the symbol ring use 2n + 1.
inline constexpr std::size_t kMaxSlots = 16;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxSlots) throw std::out_of_range("too many exponent slots");
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }

  static Monomial unit(std::size_t slot, int power = 1) {
    Monomial m;
    m.set(slot, power);
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value) {
    if (value < 0 || value > 0xFFFF) throw std::overflow_error("monomial exponent out of range");
    e_[i] = static_cast<Exponent>(value);
  }

  int degree() const {
    int d = 0;
    for (Exponent x : e_) d += x;
    return d;
  }
  // Degree restricted to slots [begin, end).
  int degree(std::size_t begin, std::size_t end) const {
    int d = 0;
    for (std::size_t i = begin; i < end; ++i) d += e_[i];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxSlots; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
  }

  // this / o; precondition o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxSlots; ++i) r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxSlots; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxSlots; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxSlots; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  // Canonical (order-independent) storage comparison: lexicographic on slots.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<Exponent, kMaxSlots> e_{};
};

}  // namespace logdmod

template <>
struct std::hash<logdmod::Monomial> {
  std::size_t operator()(const logdmod::Monomial& m) const noexcept { return m.hash(); }
};
