#include "polymon/topology.hpp"

#include <stdexcept>
#include <vector>

namespace polymon {

bool BasicNbhd::contains(const PElement& x) const {
  if (x.alphabet() != alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (x.is_zero()) return true;
  return !words_.contains(x.left()) && !words_.contains(x.right());
}

BasicNbhd hausdorff_witness(const PElement& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("hausdorff_witness requires a non-zero element");
  }
  WordSet words(x.alphabet());
  words.insert(x.left());
  words.insert(x.right());
  return BasicNbhd(std::move(words));
}

namespace {

void check_witness_args(const PElement& x, const BasicNbhd& A) {
  if (x.alphabet() != A.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (x.is_zero()) {
    throw std::invalid_argument("translation witness requires a non-zero element");
  }
}

}  // namespace

BasicNbhd right_translation_witness(const PElement& x, const BasicNbhd& A) {
  check_witness_args(x, A);
  const Word& a = x.left();
  const Word& b = x.right();
  WordSet out = A.words();
  for (const Word& s : suffixes(b)) {
    out.insert(s);
  }
  for (const Word& w : A.words()) {
    if (auto k = strip_suffix(w, a)) {
      out.insert(concat(*k, b));
    }
  }
  return BasicNbhd(std::move(out));
}

BasicNbhd left_translation_witness(const PElement& x, const BasicNbhd& A) {
  check_witness_args(x, A);
  const Word& a = x.left();
  const Word& b = x.right();
  WordSet out = A.words();
  for (const Word& s : suffixes(a)) {
    out.insert(s);
  }
  for (const Word& w : A.words()) {
    if (auto t = strip_suffix(w, b)) {
      out.insert(concat(*t, a));
    }
  }
  return BasicNbhd(std::move(out));
}

BasicNbhd multiplication_witness(const BasicNbhd& A) {
  WordSet out = A.words();
  for (const Word& w : A.words()) {
    for (const Word& s : suffixes(w)) {
      out.insert(s);
    }
  }
  return BasicNbhd(std::move(out));
}

CheckResult inversion_witness_check(const BasicNbhd& A, std::size_t max_len) {
  for (const PElement& x : enumerate_ball(A.alphabet(), max_len)) {
    if (A.contains(x) != A.contains(invert(x))) {
      return CheckResult{false, x, "membership changes under inversion"};
    }
  }
  return CheckResult{};
}

CheckResult coarseness_identity_check(const BasicNbhd& A, std::size_t max_len) {
  // Right-hand side of the identity: the idempotent sets pulled back
  // through x -> x.x^-1 and x -> x^-1.x, computed with multiply().
  std::vector<PElement> excluded;
  excluded.reserve(A.words().size());
  for (const Word& a : A.words()) {
    excluded.push_back(PElement::pair(a, a));
  }
  for (const PElement& x : enumerate_ball(A.alphabet(), max_len)) {
    bool rhs = true;
    if (!x.is_zero()) {
      const PElement r = multiply(x, invert(x));
      const PElement l = multiply(invert(x), x);
      for (const PElement& e : excluded) {
        if (r == e || l == e) {
          rhs = false;
          break;
        }
      }
    }
    if (A.contains(x) != rhs) {
      return CheckResult{false, x, "coarseness identity fails"};
    }
  }
  return CheckResult{};
}

ChainIntersection chain_intersection_check(const BasicNbhd& A, const ChainSpec& spec,
                                           std::size_t n) {
  ChainIntersection out;
  for (const PElement& e : chain_prefix(spec, n)) {
    if (A.contains(e)) {
      ++out.hits;
    } else {
      ++out.misses;
    }
  }
  return out;
}

CheckResult right_translation_check(const PElement& x, const BasicNbhd& A,
                                    const BasicNbhd& B, std::size_t max_len) {
  for (const PElement& u : enumerate_ball(A.alphabet(), max_len)) {
    if (B.contains(u) && !A.contains(multiply(x, u))) {
      return CheckResult{false, u, "x.u escapes U_A"};
    }
  }
  return CheckResult{};
}

CheckResult left_translation_check(const PElement& x, const BasicNbhd& A,
                                   const BasicNbhd& D, std::size_t max_len) {
  for (const PElement& u : enumerate_ball(A.alphabet(), max_len)) {
    if (D.contains(u) && !A.contains(multiply(u, x))) {
      return CheckResult{false, u, "u.x escapes U_A"};
    }
  }
  return CheckResult{};
}

CheckResult multiplication_inclusion_check(const BasicNbhd& A, const BasicNbhd& T,
                                           std::size_t max_len) {
  const std::vector<PElement> ball = enumerate_ball(A.alphabet(), max_len);
  std::vector<const PElement*> in_t;
  for (const PElement& u : ball) {
    if (T.contains(u)) {
      in_t.push_back(&u);
    }
  }
  for (const PElement* u : in_t) {
    for (const PElement* v : in_t) {
      if (!A.contains(multiply(*u, *v))) {
        return CheckResult{false, multiply(*u, *v), "u.v escapes U_A"};
      }
    }
  }
  return CheckResult{};
}

}  // namespace polymon
