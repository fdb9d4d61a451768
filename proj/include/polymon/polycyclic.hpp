// The polycyclic monoid on lambda generators: elements in normal form
// u^-1 v, the two-case multiplication on normal forms, and the string
// rewriting reducer that serves as an independent route to the same
// products.
//
// The reducer implements the defining relations directly
// (p_i p_i^-1 = 1 and p_i p_j^-1 = 0 for i != j), so tests can compare
// the normal-form multiplication against plain token rewriting.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "polymon/word.hpp"

namespace polymon {

/// Zero, or a pair <u|v> of words denoting u^-1 v in normal form.
/// Two non-zero elements are equal iff their words are letter-equal.
class PElement {
 public:
  static PElement zero(Letter alphabet);
  static PElement one(Letter alphabet);
  /// Throws std::invalid_argument if u and v disagree on the alphabet.
  static PElement pair(Word u, Word v);

  bool is_zero() const noexcept { return zero_; }
  Letter alphabet() const noexcept { return alphabet_; }

  /// The word u of <u|v>. Throws std::logic_error on zero.
  const Word& left() const;
  /// The word v of <u|v>. Throws std::logic_error on zero.
  const Word& right() const;

  /// "0", or the token expansion of u^-1 v such as "p2^-1 p1^-1 p2",
  /// with the empty word written "e".
  std::string str() const;

  friend bool operator==(const PElement& a, const PElement& b) noexcept;
  /// Zero sorts first, then pairs by (u, v) in word order.
  friend std::strong_ordering operator<=>(const PElement& a, const PElement& b) noexcept;

 private:
  PElement(bool zero, Word u, Word v);

  Word u_, v_;
  Letter alphabet_;
  bool zero_;
};

/// Multiplication of normal forms.
///
/// For x = <a|b> and y = <c|d>: the product is <c1.a|d> when c = c1.b,
/// <a|b1.d> when b = b1.c, and zero otherwise (both cases agree when
/// b = c). Zero is absorbing. Throws on alphabet mismatch.
PElement multiply(const PElement& x, const PElement& y);

/// <u|v> -> <v|u>, zero -> zero.
PElement invert(const PElement& x);

/// True iff x is zero or of the form <u|u>.
bool is_idempotent(const PElement& x);

/// Natural partial order: x <= y iff x = (x.x^-1).y. On idempotents this
/// is the suffix order on words; zero is the minimum.
bool nat_leq(const PElement& x, const PElement& y);

/// One signed generator occurrence: p_index or p_index^-1.
struct GenToken {
  Letter index;
  bool inverted;

  friend bool operator==(const GenToken&, const GenToken&) noexcept = default;
};

/// Raw sequence of signed generator tokens, input to the reducer.
class GenString {
 public:
  explicit GenString(Letter alphabet);
  GenString(std::vector<GenToken> tokens, Letter alphabet);

  Letter alphabet() const noexcept { return alphabet_; }
  const std::vector<GenToken>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }

  void push_back(GenToken t);
  /// Concatenation of token sequences.
  friend GenString operator+(const GenString& a, const GenString& b);

  friend bool operator==(const GenString& a, const GenString& b) noexcept = default;

 private:
  std::vector<GenToken> tokens_;
  Letter alphabet_;
};

/// Rewrites s by (p_i, p_i^-1) -> nothing and (p_i, p_j^-1) -> 0 for
/// i != j, scanning leftmost-innermost, and reads the surviving tokens
/// off as a normal form. The rewriting system is confluent, so the scan
/// strategy does not affect the result.
PElement reduce(const GenString& s);

/// The token expansion of a non-zero element: <u|v> with u = u_1..u_k
/// expands to u_k^-1 .. u_1^-1 v_1 .. v_m. Throws std::logic_error on zero.
GenString gen_string(const PElement& x);

/// Zero plus every <u|v> with both words of length <= max_len, in
/// (u, v) enumeration order. Size 1 + W^2 for W words.
std::vector<PElement> enumerate_ball(Letter alphabet, std::size_t max_len);

/// Bicyclic monoid element q^k p^l.
struct BicyclicElem {
  std::uint64_t k = 0;
  std::uint64_t l = 0;

  friend bool operator==(const BicyclicElem&, const BicyclicElem&) noexcept = default;
};

/// q^k p^l . q^m p^n = q^(k+m-min(l,m)) p^(l+n-min(l,m)).
BicyclicElem bicyclic_mul(const BicyclicElem& x, const BicyclicElem& y);

/// (k, l) -> <p1^k|p1^l>; a multiplicative embedding onto the non-zero
/// part of the one-generator monoid.
PElement embed_bicyclic(const BicyclicElem& x);

}  // namespace polymon

template <>
struct std::hash<polymon::PElement> {
  std::size_t operator()(const polymon::PElement& x) const noexcept;
};
