// Green's relations on the polycyclic monoid, constructive D-class
// witnesses, and truncated maximal chains of idempotents.
//
// R and L reduce to equality of the idempotents x.x^-1 and x^-1.x; the
// monoid is combinatorial and 0-bisimple, so H is trivial and D relates
// all non-zero elements. The bounded definitional search over one-sided
// multipliers lives in the test suite, not here.

#pragma once

#include <cstddef>
#include <vector>

#include "polymon/polycyclic.hpp"

namespace polymon {

/// x.x^-1, the idempotent <u|u> indexing the R-class of x = <u|v>.
PElement rr(const PElement& x);

/// x^-1.x, the idempotent <v|v> indexing the L-class of x = <u|v>.
PElement ll(const PElement& x);

bool green_r(const PElement& x, const PElement& y);
bool green_l(const PElement& x, const PElement& y);
bool green_h(const PElement& x, const PElement& y);
/// Zero is D-related only to zero; any two non-zero elements are D-related.
bool green_d(const PElement& x, const PElement& y);

/// Multipliers connecting two D-related elements through a common middle:
/// x.s = b, b.s_prime = x, t.b = y, t_prime.y = b.
struct DWitness {
  PElement b;
  PElement s;
  PElement s_prime;
  PElement t;
  PElement t_prime;
};

/// Witness for non-zero x = <u|v> and y = <s|t>, built from the word data
/// directly: b = <u|t> with multipliers <v|t>, <t|v>, <s|u>, <u|s>.
/// Throws std::invalid_argument on zero inputs.
DWitness d_witness(const PElement& x, const PElement& y);

/// Finite description of an infinite maximal chain of idempotents: the
/// letters of `preperiod` and then `period`, cycled forever, are prepended
/// one at a time to grow the idempotent words.
struct ChainSpec {
  Word preperiod;
  Word period;

  /// Throws std::invalid_argument if period is empty or alphabets differ.
  ChainSpec(Word preperiod, Word period);
};

/// e_0 = <e|e>, e_1, ..., e_n: each word is the previous one with the next
/// stream letter prepended, so consecutive elements are covers in the
/// natural order.
std::vector<PElement> chain_prefix(const ChainSpec& spec, std::size_t n);

/// True iff the sequence starts at <e|e>, consists of idempotents, is
/// strictly descending in the natural order, and each step is a cover
/// (word length grows by exactly one).
bool is_omega_chain_prefix(const std::vector<PElement>& es);

}  // namespace polymon
