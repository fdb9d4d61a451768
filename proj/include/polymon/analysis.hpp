// Cross-cutting verification machinery: inverse-semigroup axiom checks,
// associativity sampling, the 0-E-unitary test, and the congruence
// saturation oracle that gives desk-scale evidence of congruence-freeness.
//
// The law checkers are generic over the element type so the same code
// runs on normal-form elements, extension elements and matrix units.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymon/polycyclic.hpp"

namespace polymon {

/// Result of one verification suite. Failures hold rendered
/// counterexample tuples; empty failures means the suite passed.
struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return failures.empty(); }

  /// Appends a failure unless too many were already collected.
  void fail(std::string message);
};

/// Verifies x.x^-1.x = x and x^-1.x.x^-1 = x^-1 for every sample element,
/// commutation of sampled idempotents, and that any sampled y satisfying
/// both inverse identities for x equals inv(x).
template <class Elem, class Mul, class Inv, class Str>
SuiteReport check_inverse_axioms(const std::vector<Elem>& elements, Mul mul, Inv inv,
                                 Str str, std::string suite_name) {
  SuiteReport report;
  report.suite = std::move(suite_name);
  std::vector<const Elem*> idempotents;
  for (const Elem& x : elements) {
    ++report.cases;
    const Elem xi = inv(x);
    if (mul(mul(x, xi), x) != x) {
      report.fail("x.x^-1.x != x for x = " + str(x));
    }
    if (mul(mul(xi, x), xi) != xi) {
      report.fail("x^-1.x.x^-1 != x^-1 for x = " + str(x));
    }
    if (mul(x, x) == x) {
      idempotents.push_back(&x);
    }
  }
  for (const Elem* e : idempotents) {
    for (const Elem* f : idempotents) {
      ++report.cases;
      if (mul(*e, *f) != mul(*f, *e)) {
        report.fail("idempotents do not commute: " + str(*e) + ", " + str(*f));
      }
    }
  }
  for (const Elem& x : elements) {
    const Elem xi = inv(x);
    for (const Elem& y : elements) {
      ++report.cases;
      if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y && y != xi) {
        report.fail("second inverse of " + str(x) + ": " + str(y));
      }
    }
  }
  return report;
}

/// (x.y).z = x.(y.z) on every triple of the pool, exhaustively.
template <class Elem, class Mul, class Str>
SuiteReport check_associativity_exhaustive(const std::vector<Elem>& pool, Mul mul,
                                           Str str, std::string suite_name) {
  SuiteReport report;
  report.suite = std::move(suite_name);
  for (const Elem& x : pool) {
    for (const Elem& y : pool) {
      const Elem xy = mul(x, y);
      for (const Elem& z : pool) {
        ++report.cases;
        if (mul(xy, z) != mul(x, mul(y, z))) {
          report.fail("(" + str(x) + "." + str(y) + ")." + str(z));
        }
      }
    }
  }
  return report;
}

/// (x.y).z = x.(y.z) on `samples` seeded random triples from the pool.
template <class Elem, class Mul, class Str>
SuiteReport check_associativity_sampled(const std::vector<Elem>& pool, Mul mul, Str str,
                                        std::size_t samples, std::uint64_t seed,
                                        std::string suite_name) {
  SuiteReport report;
  report.suite = std::move(suite_name);
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    ++report.cases;
    const Elem& x = pool[pick(rng)];
    const Elem& y = pool[pick(rng)];
    const Elem& z = pool[pick(rng)];
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
      report.fail("(" + str(x) + "." + str(y) + ")." + str(z));
    }
  }
  return report;
}

/// A non-zero idempotent below x forces x to be idempotent. The order and
/// idempotency predicates are injectable so tests can run negative
/// controls with a forged order.
SuiteReport check_zero_e_unitary(
    const std::vector<PElement>& ball,
    const std::function<bool(const PElement&, const PElement&)>& leq = {},
    const std::function<bool(const PElement&)>& idem = {});

enum class CongruenceStatus { Collapsed, Inconclusive };

/// Outcome of saturating the congruence generated by one pair.
///
/// Only elements touched by the saturation are stored; every other ball
/// element is an implicit singleton class until the collapse, after which
/// the whole ball lies in the class of zero.
class CongruenceState {
 public:
  CongruenceStatus status() const noexcept { return status_; }
  /// Saturation level of the collapsing merge; the seed pair has depth 1.
  std::size_t multiplier_depth() const noexcept { return depth_; }
  std::size_t touched() const noexcept { return parent_.size(); }
  std::size_t ball_len() const noexcept { return ball_len_; }

  /// True iff u and v are congruent: explicitly merged, or anything after
  /// the collapse.
  bool same_class(const PElement& u, const PElement& v) const;

 private:
  friend CongruenceState congruence_saturate(const PElement&, const PElement&,
                                             std::size_t, std::size_t);

  std::size_t find(std::size_t i) const;
  std::size_t intern(const PElement& x);
  bool merge(std::size_t a, std::size_t b);

  std::unordered_map<PElement, std::size_t> index_;
  mutable std::vector<std::size_t> parent_;
  std::vector<PElement> elements_;
  CongruenceStatus status_ = CongruenceStatus::Inconclusive;
  std::size_t depth_ = 0;
  std::size_t ball_len_ = 0;
};

/// Saturates the relation generated by x ~ y under two-sided multipliers
/// a.u.b with words of length <= mult_len, discarding products whose
/// words exceed ball_len. Stops as soon as zero and the identity merge
/// (Collapsed) or at a fixed point (Inconclusive).
/// Throws std::invalid_argument when x = y.
CongruenceState congruence_saturate(const PElement& x, const PElement& y,
                                    std::size_t ball_len, std::size_t mult_len);

}  // namespace polymon
