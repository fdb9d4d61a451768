// Text forms: the generator-expression grammar, word literals, filter
// literals, and the renderings they round-trip with.
//
// Grammar for element expressions (whitespace and '*' separate items):
//
//   expr   := item+
//   item   := GEN | INVGEN | "0" | "1" | EMPTY
//   GEN    := "p" DIGITS
//   INVGEN := "P" DIGITS | "p" DIGITS "^-1"
//   EMPTY  := "e" | "e^-1"
//
// "0" anywhere makes the whole expression zero; "1" and "e" contribute
// nothing ("e" exists so that rendered normal forms parse back).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polymon/extension.hpp"
#include "polymon/polycyclic.hpp"
#include "polymon/word.hpp"

namespace polymon {

/// Syntax or range error with the byte offset it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parsed element expression: a token sequence, plus whether a zero
/// literal occurred.
struct Expr {
  GenString tokens;
  bool zero = false;
};

/// Parses an element expression over the given alphabet.
Expr parse_expr(std::string_view text, Letter alphabet);

/// The element an expression denotes: zero if a "0" literal occurred,
/// otherwise the reduced token sequence.
PElement eval_expr(const Expr& e);

/// Word literal: "e" or juxtaposed generator tokens such as "p1p2".
Word parse_word(std::string_view text, Letter alphabet);

/// Comma-separated word literals; the empty string denotes the empty set.
WordSet parse_word_set(std::string_view text, Letter alphabet);

/// Extension-element literal: "F[a|b]" with word literals inside, or an
/// element expression over two generators.
SElement parse_s_literal(std::string_view text);

/// Canonical text renderings; parse of a rendering gives the value back.
std::string render(const Word& w);
std::string render(const PElement& x);
std::string render(const SElement& x);

}  // namespace polymon
