#include "polymon/extension.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace polymon {

namespace {

constexpr Letter kTwo = 2;

void check_headfree(const Word& w) {
  if (w.alphabet() != kTwo) {
    throw std::invalid_argument("filter words live over two generators");
  }
  if (w.starts_with(1)) {
    throw std::invalid_argument("filter word must not begin with p1");
  }
}

/// Largest k >= 1 such that w ends with p1^k.tail, or 0 when there is none.
/// The matching k form a contiguous range starting at 1.
std::size_t trailing_power_match(const Word& w, const Word& tail) {
  std::size_t r = 0;
  for (std::size_t k = 1; k + tail.size() <= w.size(); ++k) {
    const std::size_t start = w.size() - tail.size() - k;
    bool match = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (w.at(start + i) != 1) {
        match = false;
        break;
      }
    }
    for (std::size_t i = 0; match && i < tail.size(); ++i) {
      if (w.at(start + k + i) != tail.at(i)) {
        match = false;
      }
    }
    if (!match) break;
    r = k;
  }
  return r;
}

}  // namespace

FilterDesc::FilterDesc(Word a, Word b) : a_(std::move(a)), b_(std::move(b)) {
  check_headfree(a_);
  check_headfree(b_);
}

std::string FilterDesc::str() const {
  return "F[" + a_.str() + "|" + b_.str() + "]";
}

FilterDesc normalize_filter(const Word& a, const Word& b) {
  return FilterDesc(strip_head_power(a, 1).tail, strip_head_power(b, 1).tail);
}

SElement::SElement(PElement finite) : value_(std::move(finite)) {
  if (std::get<PElement>(value_).alphabet() != kTwo) {
    throw std::invalid_argument("extension elements live over two generators");
  }
}

SElement::SElement(FilterDesc filter) : value_(std::move(filter)) {}

std::string SElement::str() const {
  return is_finite() ? finite().str() : filter().str();
}

namespace {

SElement s_zero() { return SElement(PElement::zero(kTwo)); }

// Finite <a|b> times the filter at (c, d).
SElement mul_finite_filter(const PElement& x, const FilterDesc& y) {
  if (x.is_zero()) return s_zero();
  const Word& a = x.left();
  const Word& b = x.right();
  if (auto e = strip_suffix(y.a(), b)) {
    return SElement(normalize_filter(concat(*e, a), y.b()));
  }
  const HeadPower hp = strip_head_power(b, 1);
  if (hp.count >= 1 && hp.tail == y.a()) {
    return SElement(normalize_filter(strip_head_power(a, 1).tail, y.b()));
  }
  return s_zero();
}

// The filter at (c, d) times finite <a|b>.
SElement mul_filter_finite(const FilterDesc& x, const PElement& y) {
  if (y.is_zero()) return s_zero();
  const Word& a = y.left();
  const Word& b = y.right();
  if (auto e = strip_suffix(x.b(), a)) {
    return SElement(normalize_filter(x.a(), concat(*e, b)));
  }
  const HeadPower hp = strip_head_power(a, 1);
  if (hp.count >= 1 && hp.tail == x.b()) {
    return SElement(normalize_filter(x.a(), strip_head_power(b, 1).tail));
  }
  return s_zero();
}

}  // namespace

SElement multiply(const SElement& x, const SElement& y) {
  if (x.is_finite() && y.is_finite()) {
    return SElement(multiply(x.finite(), y.finite()));
  }
  if (x.is_finite()) {
    return mul_finite_filter(x.finite(), y.filter());
  }
  if (y.is_finite()) {
    return mul_filter_finite(x.filter(), y.finite());
  }
  if (x.filter().b() == y.filter().a()) {
    return SElement(FilterDesc(x.filter().a(), y.filter().b()));
  }
  return s_zero();
}

SElement invert(const SElement& x) {
  if (x.is_finite()) {
    return SElement(invert(x.finite()));
  }
  return SElement(FilterDesc(x.filter().b(), x.filter().a()));
}

bool is_idempotent(const SElement& x) {
  if (x.is_finite()) return is_idempotent(x.finite());
  return x.filter().a() == x.filter().b();
}

SNbhd::SNbhd(FilterDesc center, std::size_t n) : center_(std::move(center)), n_(n) {
  if (n < 1) {
    throw std::invalid_argument("neighborhood index must be >= 1");
  }
}

bool SNbhd::contains(const SElement& x) const {
  if (x.is_filter()) {
    return x.filter() == center_;
  }
  if (x.is_zero()) {
    return false;
  }
  const HeadPower hu = strip_head_power(x.finite().left(), 1);
  const HeadPower hv = strip_head_power(x.finite().right(), 1);
  return hu.count > n_ && hv.count > n_ && hu.tail == center_.a() &&
         hv.tail == center_.b();
}

std::size_t right_continuity_witness(const PElement& x, const FilterDesc& center,
                                     std::size_t n) {
  if (x.alphabet() != kTwo) {
    throw std::invalid_argument("extension elements live over two generators");
  }
  if (x.is_zero()) return n;
  const Word& b = x.right();
  if (strip_suffix(center.a(), b)) {
    return n;
  }
  const HeadPower hp = strip_head_power(b, 1);
  if (hp.count >= 1 && hp.tail == center.a()) {
    return n + hp.count;
  }
  // Zero product. Base members <p1^k.c | p1^m.d> still multiply to a
  // non-zero element whenever b ends with p1^k.c, so the witness must
  // exceed every such k.
  return std::max(n, trailing_power_match(b, center.a()));
}

std::size_t left_continuity_witness(const PElement& x, const FilterDesc& center,
                                    std::size_t n) {
  if (x.alphabet() != kTwo) {
    throw std::invalid_argument("extension elements live over two generators");
  }
  if (x.is_zero()) return n;
  const Word& a = x.left();
  if (strip_suffix(center.b(), a)) {
    return n;
  }
  const HeadPower hp = strip_head_power(a, 1);
  if (hp.count >= 1 && hp.tail == center.b()) {
    return n + hp.count;
  }
  return std::max(n, trailing_power_match(a, center.b()));
}

std::pair<std::size_t, std::size_t> mul_continuity_witness(const FilterDesc& f,
                                                           const FilterDesc& g,
                                                           std::size_t n) {
  if (f.b() == g.a()) {
    return {n, n};
  }
  // Zero product: residual suffix matches between the bases survive for
  // small exponents, e.g. f = (e, e) against g = (p2p1p1, e) at n = 1.
  return {std::max(n, trailing_power_match(g.a(), f.b())),
          std::max(n, trailing_power_match(f.b(), g.a()))};
}

std::size_t headfree_index(const Word& w) {
  check_headfree(w);
  if (w.empty()) return 0;
  if (w.size() > 63) {
    throw std::invalid_argument("word too long to index");
  }
  // Words shorter than |w| occupy indices [0, 2^(L-1)); within length L
  // the tail after the leading p2 reads as a binary rank.
  const std::size_t base = std::size_t{1} << (w.size() - 1);
  std::size_t rank = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    rank = rank * 2 + (w.at(i) - 1);
  }
  return base + rank;
}

Word headfree_word(std::size_t index) {
  if (index == 0) return Word(kTwo);
  const std::size_t len = std::bit_width(index);
  const std::size_t rank = index - (std::size_t{1} << (len - 1));
  std::vector<Letter> letters;
  letters.reserve(len);
  letters.push_back(2);
  for (std::size_t i = len - 1; i-- > 0;) {
    letters.push_back(static_cast<Letter>(((rank >> i) & 1) + 1));
  }
  return Word(std::move(letters), kTwo);
}

BElement t_isomorphism(const SElement& x) {
  if (x.is_finite()) {
    if (!x.is_zero()) {
      throw std::invalid_argument("only zero and filter points map to matrix units");
    }
    return BElement::zero();
  }
  const std::size_t i = headfree_index(x.filter().a());
  const std::size_t j = headfree_index(x.filter().b());
  if (i > 0xffffffffull || j > 0xffffffffull) {
    throw std::invalid_argument("filter index exceeds matrix-unit range");
  }
  return BElement::unit(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
}

bool density_check(const FilterDesc& center, std::size_t n, std::size_t count) {
  if (count < 1) {
    throw std::invalid_argument("count must be >= 1");
  }
  std::size_t r = 1;
  while (r * r < count) ++r;
  const SNbhd nbhd(center, n);
  std::set<PElement> seen;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      std::vector<Letter> u(n + i, 1);
      std::vector<Letter> v(n + j, 1);
      u.insert(u.end(), center.a().letters().begin(), center.a().letters().end());
      v.insert(v.end(), center.b().letters().begin(), center.b().letters().end());
      PElement e = PElement::pair(Word(std::move(u), kTwo), Word(std::move(v), kTwo));
      if (!nbhd.contains(SElement(e))) {
        return false;
      }
      seen.insert(std::move(e));
    }
  }
  return seen.size() >= count;
}

bool dichotomy_check(const SElement& x) {
  if (x.is_finite()) {
    throw std::invalid_argument("dichotomy_check requires a filter point");
  }
  const SElement left = multiply(x, invert(x));
  const SElement right = multiply(invert(x), x);
  return left.is_filter() && right.is_filter();
}

}  // namespace polymon
