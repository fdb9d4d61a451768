// The semigroup of matrix units: pairs (i, j) with
// (a,b).(c,d) = (a,d) when b = c and 0 otherwise.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polymon {

/// Zero or a unit (i, j); indices are plain naturals.
class BElement {
 public:
  static BElement zero() noexcept { return BElement(); }
  static BElement unit(std::uint32_t i, std::uint32_t j) noexcept {
    BElement e;
    e.zero_ = false;
    e.i_ = i;
    e.j_ = j;
    return e;
  }

  bool is_zero() const noexcept { return zero_; }
  std::uint32_t i() const {
    if (zero_) throw std::logic_error("zero has no indices");
    return i_;
  }
  std::uint32_t j() const {
    if (zero_) throw std::logic_error("zero has no indices");
    return j_;
  }

  std::string str() const {
    if (zero_) return "0";
    return "(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
  }

  friend bool operator==(const BElement&, const BElement&) noexcept = default;
  friend auto operator<=>(const BElement&, const BElement&) noexcept = default;

 private:
  BElement() = default;

  bool zero_ = true;
  std::uint32_t i_ = 0;
  std::uint32_t j_ = 0;
};

inline BElement multiply(const BElement& x, const BElement& y) {
  if (x.is_zero() || y.is_zero() || x.j() != y.i()) {
    return BElement::zero();
  }
  return BElement::unit(x.i(), y.j());
}

inline BElement invert(const BElement& x) {
  if (x.is_zero()) return x;
  return BElement::unit(x.j(), x.i());
}

}  // namespace polymon
