// Named verification suites over fixed element families, shared by the
// command-line `check` subcommands and the acceptance runner. Every
// suite returns a SuiteReport; parameters choose the desk scale.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polymon/analysis.hpp"

namespace polymon::suites {

/// Normal-form multiplication vs. the rewriting reducer, exhaustively on
/// all pairs from the two-generator ball of words of length <= max_len.
SuiteReport oracle_equivalence(std::size_t max_len);

/// Inverse-semigroup axioms on the two-generator ball and on an extension
/// sample (all filter points with words <= 2 plus the finite ball <= 3).
SuiteReport inverse_axioms(std::size_t max_len);

/// Seeded random associativity triples: `samples` in the two-generator
/// monoid (words <= 6) and `samples` in the extension.
SuiteReport associativity(std::size_t samples, std::uint64_t seed);

/// 0-E-unitary property on the two-generator ball.
SuiteReport zero_e_unitary(std::size_t max_len);

/// Translation and multiplication witness inclusions for every excluded
/// set with at most max_set member words of length <= member_len, every
/// translating element with words <= trans_len, over the ball of words
/// <= ball_len. Also reproduces the counterexample to the unstrengthened
/// witness set.
SuiteReport translation_witnesses(std::size_t member_len, std::size_t max_set,
                                  std::size_t trans_len, std::size_t ball_len);

/// Coarseness identity over the same excluded-set family.
SuiteReport coarseness(std::size_t member_len, std::size_t max_set,
                       std::size_t ball_len);

/// Chain intersections: misses <= |A| for every chain spec with words of
/// length <= spec_len against the excluded-set family.
SuiteReport chain_intersections(std::size_t spec_len, std::size_t member_len,
                                std::size_t max_set, std::size_t prefix_len);

/// The two product cases of the extension rules never overlap (exhaustive
/// over word pairs of length <= max_len).
SuiteReport extension_cases(std::size_t max_len);

/// Limit consistency of the finite-times-filter rules: products of base
/// members through the continuity witness land in the output base, for
/// element and center words <= word_len and a (n, n+window] exponent grid.
SuiteReport extension_limits(std::size_t word_len, std::size_t n, std::size_t window);

/// Base-times-base inclusion for filter products through
/// mul_continuity_witness, on the same kind of grid.
SuiteReport extension_mul_continuity(std::size_t word_len, std::size_t n,
                                     std::size_t window);

/// Distinct filter points have disjoint basic neighborhoods for every
/// n <= max_n (centers with words <= word_len, base grid of width window).
SuiteReport extension_hausdorff(std::size_t word_len, std::size_t max_n,
                                std::size_t window);

/// The filter part against matrix units: index round trips and
/// multiplicativity on all index pairs < max_index.
SuiteReport matrix_unit_isomorphism(std::size_t max_index);

/// Every distinct non-zero pair with words <= word_len collapses, and the
/// (identity, zero) pair collapses at depth 1.
SuiteReport congruence_collapse(std::size_t word_len, std::size_t ball_len,
                                std::size_t mult_len);

/// Chain prefixes of the given length pass the omega-chain predicate and
/// are pairwise comparable, for three fixed distinct specs.
SuiteReport omega_chains(std::size_t prefix_len);

/// One report from several, for combined command-line checks.
SuiteReport merge(std::string name, const std::vector<SuiteReport>& parts);

}  // namespace polymon::suites
