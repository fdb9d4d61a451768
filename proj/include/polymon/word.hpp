// Free monoid words over a finite alphabet and the suffix/prefix
// combinatorics the rest of the library is built on.
//
// Letters are 1-based generator indices; every word carries its alphabet
// size so that operations over mixed alphabets fail loudly instead of
// silently embedding one monoid in another.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polymon {

/// 1-based generator index.
using Letter = std::uint32_t;

/// Largest supported alphabet size.
inline constexpr Letter kMaxAlphabet = 1u << 16;

/// An element of the free monoid on `alphabet` generators.
class Word {
 public:
  /// The empty word over the given alphabet.
  explicit Word(Letter alphabet);

  /// A word from explicit letters. Throws std::invalid_argument if the
  /// alphabet is out of range or a letter is not in [1, alphabet].
  Word(std::vector<Letter> letters, Letter alphabet);

  Letter alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  bool starts_with(Letter g) const noexcept {
    return !letters_.empty() && letters_.front() == g;
  }

  /// Canonical text form: "e" for the empty word, else juxtaposed
  /// generator tokens such as "p1p2".
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

  /// Length-then-lexicographic order; words over a smaller alphabet sort
  /// first. This is the order used by every enumeration in the library.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Letter> letters_;
  Letter alphabet_;
};

/// Result of strip_head_power: w = g^count . tail, tail not starting with g.
struct HeadPower {
  std::size_t count;
  Word tail;
};

/// Concatenation x.y. Throws std::invalid_argument on alphabet mismatch.
Word concat(const Word& x, const Word& y);

/// The unique q with q.s = w when s is a suffix of w, absent otherwise.
std::optional<Word> strip_suffix(const Word& w, const Word& s);

/// Splits w as g^count . tail where tail is the longest suffix of w not
/// beginning with g.
HeadPower strip_head_power(const Word& w, Letter g);

/// All words of length <= max_len in length-then-lexicographic order.
std::vector<Word> enumerate_words(Letter alphabet, std::size_t max_len);

/// Finite set of words over one alphabet (sorted, duplicate-free).
class WordSet {
 public:
  explicit WordSet(Letter alphabet);
  WordSet(std::vector<Word> members, Letter alphabet);

  Letter alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Word& w) const;
  void insert(const Word& w);

  const std::vector<Word>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const WordSet& a, const WordSet& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.members_ == b.members_;
  }

 private:
  std::vector<Word> members_;  // sorted ascending, unique
  Letter alphabet_;
};

/// All |w|+1 suffixes of w, including the empty word and w itself.
WordSet suffixes(const Word& w);

}  // namespace polymon

template <>
struct std::hash<polymon::Word> {
  std::size_t operator()(const polymon::Word& w) const noexcept;
};
