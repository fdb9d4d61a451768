// The topological inverse monoid that contains the two-generator
// polycyclic monoid as a dense discrete subsemigroup: adjoined filter
// points, the case-defined multiplication extending the normal-form
// product, neighborhood bases at the filter points, continuity
// witnesses, and the isomorphism of the filter part onto the countable
// matrix-unit semigroup.
//
// A filter point is described by a pair (a, b) of words over two
// generators, neither beginning with p1; it is the limit of the elements
// <p1^k.a | p1^m.b> as k and m grow. Products whose literal case output
// has a leading p1 are normalized by stripping it, since cofinal bases
// describe the same filter.

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>

#include "polymon/matrix_units.hpp"
#include "polymon/polycyclic.hpp"
#include "polymon/word.hpp"

namespace polymon {

/// Canonical description (a, b) of the filter point at a^-1 b: words over
/// two generators, neither starting with p1.
class FilterDesc {
 public:
  /// Throws std::invalid_argument unless both words are over two
  /// generators and p1-head-free.
  FilterDesc(Word a, Word b);

  const Word& a() const noexcept { return a_; }
  const Word& b() const noexcept { return b_; }

  std::string str() const;

  friend bool operator==(const FilterDesc&, const FilterDesc&) noexcept = default;
  friend auto operator<=>(const FilterDesc&, const FilterDesc&) noexcept = default;

 private:
  Word a_, b_;
};

/// Strips all leading p1's from both words; bases with extra leading p1
/// powers are cofinal and generate the same filter.
FilterDesc normalize_filter(const Word& a, const Word& b);

/// Element of the extension: a finite element of the two-generator
/// polycyclic monoid, or a filter point.
class SElement {
 public:
  /// Throws std::invalid_argument unless the element is over two generators.
  explicit SElement(PElement finite);
  explicit SElement(FilterDesc filter);

  bool is_finite() const noexcept { return std::holds_alternative<PElement>(value_); }
  bool is_filter() const noexcept { return !is_finite(); }
  bool is_zero() const noexcept {
    return is_finite() && std::get<PElement>(value_).is_zero();
  }

  const PElement& finite() const { return std::get<PElement>(value_); }
  const FilterDesc& filter() const { return std::get<FilterDesc>(value_); }

  std::string str() const;

  friend bool operator==(const SElement&, const SElement&) noexcept = default;

 private:
  std::variant<PElement, FilterDesc> value_;
};

/// The case-defined product. Finite pairs multiply by the normal-form
/// product; a finite element against a filter point follows the
/// translated-base cases; two filter points compose like matrix units.
SElement multiply(const SElement& x, const SElement& y);

/// Finite elements invert in the monoid; a filter point (a, b) inverts
/// to (b, a).
SElement invert(const SElement& x);

bool is_idempotent(const SElement& x);

/// Basic neighborhood of a filter point: the point itself together with
/// every <p1^k.a | p1^m.b> with k, m > n.
class SNbhd {
 public:
  /// Throws std::invalid_argument if n < 1.
  SNbhd(FilterDesc center, std::size_t n);

  const FilterDesc& center() const noexcept { return center_; }
  std::size_t n() const noexcept { return n_; }

  bool contains(const SElement& x) const;

 private:
  FilterDesc center_;
  std::size_t n_;
};

/// Smallest m with x.U_m(center) contained in U_n(x.center), for finite x.
///
/// m = n when the product arises from the suffix case, n + t when the
/// right word of x is p1^t times the center's left word. When the product
/// is zero, m is chosen large enough that every product of x with a base
/// member actually vanishes; n itself does not always suffice there.
std::size_t right_continuity_witness(const PElement& x, const FilterDesc& center,
                                     std::size_t n);

/// Mirror image: smallest m with U_m(center).x contained in U_n(center.x).
std::size_t left_continuity_witness(const PElement& x, const FilterDesc& center,
                                    std::size_t n);

/// Witness pair (m_f, m_g) with U_{m_f}(f).U_{m_g}(g) contained in
/// U_n(f.g). Equal to (n, n) when the centers compose to a filter; in the
/// zero case the bound is raised to kill residual suffix matches between
/// the two bases.
std::pair<std::size_t, std::size_t> mul_continuity_witness(const FilterDesc& f,
                                                           const FilterDesc& g,
                                                           std::size_t n);

/// Position of a p1-head-free word in the fixed length-then-lexicographic
/// enumeration e, p2, p2p1, p2p2, p2p1p1, ... Throws on words with a
/// leading p1 or a foreign alphabet.
std::size_t headfree_index(const Word& w);

/// Inverse of headfree_index.
Word headfree_word(std::size_t index);

/// The isomorphism of the filter part (with zero) onto matrix units:
/// zero -> zero, filter (a, b) -> (headfree_index(a), headfree_index(b)).
/// Throws std::invalid_argument on non-zero finite elements.
BElement t_isomorphism(const SElement& x);

/// Constructively verifies that U_n(center) holds at least `count`
/// distinct finite elements. Throws std::invalid_argument if count < 1.
bool density_check(const FilterDesc& center, std::size_t n, std::size_t count);

/// For a filter point x both x.x^-1 and x^-1.x are again filter points;
/// returns true after computing both. Throws on finite input.
bool dichotomy_check(const SElement& x);

}  // namespace polymon
