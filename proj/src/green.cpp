#include "polymon/green.hpp"

#include <stdexcept>

namespace polymon {

namespace {

void check_same_alphabet(const PElement& x, const PElement& y) {
  if (x.alphabet() != y.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
}

}  // namespace

PElement rr(const PElement& x) {
  if (x.is_zero()) return x;
  return PElement::pair(x.left(), x.left());
}

PElement ll(const PElement& x) {
  if (x.is_zero()) return x;
  return PElement::pair(x.right(), x.right());
}

bool green_r(const PElement& x, const PElement& y) {
  check_same_alphabet(x, y);
  return rr(x) == rr(y);
}

bool green_l(const PElement& x, const PElement& y) {
  check_same_alphabet(x, y);
  return ll(x) == ll(y);
}

bool green_h(const PElement& x, const PElement& y) {
  return green_r(x, y) && green_l(x, y);
}

bool green_d(const PElement& x, const PElement& y) {
  check_same_alphabet(x, y);
  return x.is_zero() == y.is_zero();
}

DWitness d_witness(const PElement& x, const PElement& y) {
  check_same_alphabet(x, y);
  if (x.is_zero() || y.is_zero()) {
    throw std::invalid_argument("d_witness requires non-zero elements");
  }
  const Word& u = x.left();
  const Word& v = x.right();
  const Word& s = y.left();
  const Word& t = y.right();
  return DWitness{
      PElement::pair(u, t),  // b
      PElement::pair(v, t),  // s:  x.s = b
      PElement::pair(t, v),  // s': b.s' = x
      PElement::pair(s, u),  // t:  t.b = y
      PElement::pair(u, s),  // t': t'.y = b
  };
}

ChainSpec::ChainSpec(Word preperiod_, Word period_)
    : preperiod(std::move(preperiod_)), period(std::move(period_)) {
  if (preperiod.alphabet() != period.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (period.empty()) {
    throw std::invalid_argument("chain period must be nonempty");
  }
}

std::vector<PElement> chain_prefix(const ChainSpec& spec, std::size_t n) {
  const Letter alphabet = spec.preperiod.alphabet();
  std::vector<PElement> out;
  out.reserve(n + 1);
  out.push_back(PElement::one(alphabet));
  std::vector<Letter> word;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter next =
        k < spec.preperiod.size()
            ? spec.preperiod.at(k)
            : spec.period.at((k - spec.preperiod.size()) % spec.period.size());
    word.insert(word.begin(), next);
    Word w(word, alphabet);
    out.push_back(PElement::pair(w, w));
  }
  return out;
}

bool is_omega_chain_prefix(const std::vector<PElement>& es) {
  if (es.empty() || es.front() != PElement::one(es.front().alphabet())) {
    return false;
  }
  for (const PElement& e : es) {
    if (e.is_zero() || !is_idempotent(e)) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const PElement& hi = es[i];
    const PElement& lo = es[i + 1];
    if (lo == hi || !nat_leq(lo, hi)) {
      return false;
    }
    if (lo.left().size() != hi.left().size() + 1) {
      return false;  // not a cover
    }
  }
  return true;
}

}  // namespace polymon
