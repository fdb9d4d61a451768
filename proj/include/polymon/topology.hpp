// The minimal inverse-semigroup topology on the polycyclic monoid as
// decidable membership in the basic zero-neighborhoods U_A(0), plus the
// constructive witness sets that make translation, multiplication and
// inversion continuous, and ball checks for the coarseness identity and
// the chain-intersection property.
//
// U_A(0) = {0} union {<a|b> : a not in A and b not in A} for a finite
// word set A. The witness sets returned here contain A itself in
// addition to the suffix sets; without that term the inclusion
// x.U_B(0) <= U_A(0) has concrete counterexamples (see the tests).

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "polymon/green.hpp"
#include "polymon/polycyclic.hpp"
#include "polymon/word.hpp"

namespace polymon {

/// Basic neighborhood of zero, described by its finite excluded word set.
class BasicNbhd {
 public:
  explicit BasicNbhd(WordSet words) : words_(std::move(words)) {}

  const WordSet& words() const noexcept { return words_; }
  Letter alphabet() const noexcept { return words_.alphabet(); }

  /// True iff x is zero or neither word of x lies in the excluded set.
  /// Throws std::invalid_argument on alphabet mismatch.
  bool contains(const PElement& x) const;

  friend bool operator==(const BasicNbhd&, const BasicNbhd&) noexcept = default;

 private:
  WordSet words_;
};

/// A = {a, b} for x = <a|b>; the returned neighborhood omits x, which
/// separates x from zero. Throws std::invalid_argument on zero.
BasicNbhd hausdorff_witness(const PElement& x);

/// B with x.U_B(0) <= U_A(0) for non-zero x = <a|b>:
/// B = A  union  suffixes(b)  union  {k.b : k.a in A}.
BasicNbhd right_translation_witness(const PElement& x, const BasicNbhd& A);

/// D with U_D(0).x <= U_A(0) for non-zero x = <a|b>:
/// D = A  union  suffixes(a)  union  {t.a : t.b in A}.
BasicNbhd left_translation_witness(const PElement& x, const BasicNbhd& A);

/// T with U_T(0).U_T(0) <= U_A(0): A together with all suffixes of its
/// members.
BasicNbhd multiplication_witness(const BasicNbhd& A);

/// Outcome of a ball check: ok, or a concrete failing element.
struct CheckResult {
  bool ok = true;
  std::optional<PElement> counterexample;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks U_A(0)^-1 = U_A(0) over the ball of words of length <= max_len.
CheckResult inversion_witness_check(const BasicNbhd& A, std::size_t max_len);

/// Checks the coarseness identity over the ball: membership in U_A(0)
/// agrees with "x.x^-1 and x^-1.x both avoid {<a|a> : a in A}", the two
/// sides being computed by independent routes.
CheckResult coarseness_identity_check(const BasicNbhd& A, std::size_t max_len);

struct ChainIntersection {
  std::size_t hits = 0;
  std::size_t misses = 0;
};

/// Counts how many of the n+1 chain elements lie inside U_A(0). Misses
/// are bounded by |A| since distinct chain idempotents pin distinct words.
ChainIntersection chain_intersection_check(const BasicNbhd& A, const ChainSpec& spec,
                                           std::size_t n);

/// Literal inclusion checks used as test oracles: every element of the
/// translated neighborhood is multiplied out and tested for membership.
CheckResult right_translation_check(const PElement& x, const BasicNbhd& A,
                                    const BasicNbhd& B, std::size_t max_len);
CheckResult left_translation_check(const PElement& x, const BasicNbhd& A,
                                   const BasicNbhd& D, std::size_t max_len);
CheckResult multiplication_inclusion_check(const BasicNbhd& A, const BasicNbhd& T,
                                           std::size_t max_len);

}  // namespace polymon
