#include "polymon/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace polymon {

namespace {

void check_alphabet(Letter alphabet) {
  if (alphabet < 1 || alphabet > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, 2^16]");
  }
}

void check_same_alphabet(Letter a, Letter b) {
  if (a != b) {
    throw std::invalid_argument("alphabet mismatch");
  }
}

}  // namespace

Word::Word(Letter alphabet) : alphabet_(alphabet) { check_alphabet(alphabet); }

Word::Word(std::vector<Letter> letters, Letter alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  check_alphabet(alphabet);
  for (Letter g : letters_) {
    if (g < 1 || g > alphabet_) {
      throw std::invalid_argument("letter index out of [1, alphabet]");
    }
  }
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "e";
  }
  std::string out;
  for (Letter g : letters_) {
    out += 'p';
    out += std::to_string(g);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

Word concat(const Word& x, const Word& y) {
  check_same_alphabet(x.alphabet(), y.alphabet());
  std::vector<Letter> letters;
  letters.reserve(x.size() + y.size());
  letters.insert(letters.end(), x.letters().begin(), x.letters().end());
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return Word(std::move(letters), x.alphabet());
}

std::optional<Word> strip_suffix(const Word& w, const Word& s) {
  check_same_alphabet(w.alphabet(), s.alphabet());
  if (s.size() > w.size()) {
    return std::nullopt;
  }
  const std::size_t head = w.size() - s.size();
  if (!std::equal(s.letters().begin(), s.letters().end(),
                  w.letters().begin() + static_cast<std::ptrdiff_t>(head))) {
    return std::nullopt;
  }
  return Word(std::vector<Letter>(w.letters().begin(),
                                  w.letters().begin() + static_cast<std::ptrdiff_t>(head)),
              w.alphabet());
}

HeadPower strip_head_power(const Word& w, Letter g) {
  if (g < 1 || g > w.alphabet()) {
    throw std::invalid_argument("letter index out of [1, alphabet]");
  }
  std::size_t count = 0;
  while (count < w.size() && w.at(count) == g) {
    ++count;
  }
  return HeadPower{count, Word(std::vector<Letter>(w.letters().begin() +
                                                       static_cast<std::ptrdiff_t>(count),
                                                   w.letters().end()),
                               w.alphabet())};
}

std::vector<Word> enumerate_words(Letter alphabet, std::size_t max_len) {
  check_alphabet(alphabet);
  std::vector<Word> out;
  out.push_back(Word(alphabet));
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter g = 1; g <= alphabet; ++g) {
        std::vector<Letter> letters = out[i].letters();
        letters.push_back(g);
        out.push_back(Word(std::move(letters), alphabet));
      }
    }
    level_begin = level_end;
  }
  return out;
}

WordSet::WordSet(Letter alphabet) : alphabet_(alphabet) { check_alphabet(alphabet); }

WordSet::WordSet(std::vector<Word> members, Letter alphabet)
    : members_(std::move(members)), alphabet_(alphabet) {
  check_alphabet(alphabet);
  for (const Word& w : members_) {
    check_same_alphabet(w.alphabet(), alphabet_);
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

void WordSet::insert(const Word& w) {
  check_same_alphabet(w.alphabet(), alphabet_);
  auto it = std::lower_bound(members_.begin(), members_.end(), w);
  if (it == members_.end() || *it != w) {
    members_.insert(it, w);
  }
}

WordSet suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t i = 0; i <= w.size(); ++i) {
    out.push_back(Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(i),
                                           w.letters().end()),
                       w.alphabet()));
  }
  return WordSet(std::move(out), w.alphabet());
}

}  // namespace polymon

std::size_t std::hash<polymon::Word>::operator()(const polymon::Word& w) const noexcept {
  // FNV-1a over the letters, seeded with the alphabet.
  std::size_t h = 1469598103934665603ull ^ w.alphabet();
  for (polymon::Letter g : w.letters()) {
    h ^= g;
    h *= 1099511628211ull;
  }
  return h;
}
