#include "polymon/polycyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polymon {

PElement::PElement(bool zero, Word u, Word v)
    : u_(std::move(u)), v_(std::move(v)), alphabet_(u_.alphabet()), zero_(zero) {}

PElement PElement::zero(Letter alphabet) {
  return PElement(true, Word(alphabet), Word(alphabet));
}

PElement PElement::one(Letter alphabet) {
  return PElement(false, Word(alphabet), Word(alphabet));
}

PElement PElement::pair(Word u, Word v) {
  if (u.alphabet() != v.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  return PElement(false, std::move(u), std::move(v));
}

const Word& PElement::left() const {
  if (zero_) throw std::logic_error("zero has no normal-form words");
  return u_;
}

const Word& PElement::right() const {
  if (zero_) throw std::logic_error("zero has no normal-form words");
  return v_;
}

std::string PElement::str() const {
  if (zero_) return "0";
  std::string out;
  if (u_.empty()) {
    out += "e^-1";
  } else {
    for (std::size_t i = u_.size(); i-- > 0;) {
      if (!out.empty()) out += ' ';
      out += 'p';
      out += std::to_string(u_.at(i));
      out += "^-1";
    }
  }
  out += ' ';
  out += v_.str();
  return out;
}

bool operator==(const PElement& a, const PElement& b) noexcept {
  if (a.zero_ != b.zero_ || a.alphabet_ != b.alphabet_) return false;
  if (a.zero_) return true;
  return a.u_ == b.u_ && a.v_ == b.v_;
}

std::strong_ordering operator<=>(const PElement& a, const PElement& b) noexcept {
  if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
  if (auto c = b.zero_ <=> a.zero_; c != 0) return c;  // zero first
  if (a.zero_) return std::strong_ordering::equal;
  if (auto c = a.u_ <=> b.u_; c != 0) return c;
  return a.v_ <=> b.v_;
}

PElement multiply(const PElement& x, const PElement& y) {
  if (x.alphabet() != y.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (x.is_zero() || y.is_zero()) {
    return PElement::zero(x.alphabet());
  }
  const Word& b = x.right();
  const Word& c = y.left();
  if (auto c1 = strip_suffix(c, b)) {
    return PElement::pair(concat(*c1, x.left()), y.right());
  }
  if (auto b1 = strip_suffix(b, c)) {
    return PElement::pair(x.left(), concat(*b1, y.right()));
  }
  return PElement::zero(x.alphabet());
}

PElement invert(const PElement& x) {
  if (x.is_zero()) return x;
  return PElement::pair(x.right(), x.left());
}

bool is_idempotent(const PElement& x) {
  return x.is_zero() || x.left() == x.right();
}

bool nat_leq(const PElement& x, const PElement& y) {
  if (x.alphabet() != y.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  return x == multiply(multiply(x, invert(x)), y);
}

GenString::GenString(Letter alphabet) : alphabet_(alphabet) {
  if (alphabet < 1 || alphabet > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, 2^16]");
  }
}

GenString::GenString(std::vector<GenToken> tokens, Letter alphabet)
    : GenString(alphabet) {
  tokens_ = std::move(tokens);
  for (const GenToken& t : tokens_) {
    if (t.index < 1 || t.index > alphabet_) {
      throw std::invalid_argument("letter index out of [1, alphabet]");
    }
  }
}

void GenString::push_back(GenToken t) {
  if (t.index < 1 || t.index > alphabet_) {
    throw std::invalid_argument("letter index out of [1, alphabet]");
  }
  tokens_.push_back(t);
}

GenString operator+(const GenString& a, const GenString& b) {
  if (a.alphabet_ != b.alphabet_) {
    throw std::invalid_argument("alphabet mismatch");
  }
  GenString out = a;
  out.tokens_.insert(out.tokens_.end(), b.tokens_.begin(), b.tokens_.end());
  return out;
}

PElement reduce(const GenString& s) {
  // A single left-to-right pass with a stack performs the leftmost-
  // innermost strategy: a redex (p_i, p_j^-1) can only appear when an
  // inverted token arrives on top of a plain one.
  std::vector<GenToken> stack;
  stack.reserve(s.size());
  for (const GenToken& t : s.tokens()) {
    if (t.inverted && !stack.empty() && !stack.back().inverted) {
      if (stack.back().index == t.index) {
        stack.pop_back();
        continue;
      }
      return PElement::zero(s.alphabet());
    }
    stack.push_back(t);
  }
  // No redex left: inverted tokens all precede plain ones.
  std::vector<Letter> u, v;
  for (const GenToken& t : stack) {
    (t.inverted ? u : v).push_back(t.index);
  }
  std::reverse(u.begin(), u.end());
  return PElement::pair(Word(std::move(u), s.alphabet()),
                        Word(std::move(v), s.alphabet()));
}

GenString gen_string(const PElement& x) {
  if (x.is_zero()) throw std::logic_error("zero has no token expansion");
  std::vector<GenToken> tokens;
  tokens.reserve(x.left().size() + x.right().size());
  for (std::size_t i = x.left().size(); i-- > 0;) {
    tokens.push_back(GenToken{x.left().at(i), true});
  }
  for (Letter g : x.right().letters()) {
    tokens.push_back(GenToken{g, false});
  }
  return GenString(std::move(tokens), x.alphabet());
}

std::vector<PElement> enumerate_ball(Letter alphabet, std::size_t max_len) {
  const std::vector<Word> words = enumerate_words(alphabet, max_len);
  std::vector<PElement> out;
  out.reserve(words.size() * words.size() + 1);
  out.push_back(PElement::zero(alphabet));
  for (const Word& u : words) {
    for (const Word& v : words) {
      out.push_back(PElement::pair(u, v));
    }
  }
  return out;
}

BicyclicElem bicyclic_mul(const BicyclicElem& x, const BicyclicElem& y) {
  const std::uint64_t t = std::min(x.l, y.k);
  return BicyclicElem{x.k + y.k - t, x.l + y.l - t};
}

PElement embed_bicyclic(const BicyclicElem& x) {
  std::vector<Letter> u(static_cast<std::size_t>(x.k), 1);
  std::vector<Letter> v(static_cast<std::size_t>(x.l), 1);
  return PElement::pair(Word(std::move(u), 1), Word(std::move(v), 1));
}

}  // namespace polymon

std::size_t std::hash<polymon::PElement>::operator()(const polymon::PElement& x) const noexcept {
  if (x.is_zero()) return 0x9e3779b97f4a7c15ull ^ x.alphabet();
  const std::hash<polymon::Word> h;
  std::size_t a = h(x.left());
  std::size_t b = h(x.right());
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}
