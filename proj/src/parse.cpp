#include "polymon/parse.hpp"

#include <cctype>

namespace polymon {

namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '*';
}

/// Reads DIGITS at `pos` and checks the index against the alphabet.
Letter read_index(std::string_view text, std::size_t& pos, Letter alphabet) {
  const std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (value > kMaxAlphabet) break;
    ++pos;
  }
  if (pos == start) {
    throw ParseError("expected generator index", start);
  }
  if (value < 1 || value > alphabet) {
    throw ParseError("generator index out of [1, " + std::to_string(alphabet) + "]",
                     start);
  }
  return static_cast<Letter>(value);
}

/// Consumes "^-1" if present.
bool read_inverse_suffix(std::string_view text, std::size_t& pos) {
  if (text.substr(pos, 3) == "^-1") {
    pos += 3;
    return true;
  }
  return false;
}

}  // namespace

Expr parse_expr(std::string_view text, Letter alphabet) {
  Expr out{GenString(alphabet), false};
  std::size_t pos = 0;
  std::size_t items = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_separator(c)) {
      ++pos;
      continue;
    }
    if (c == '0') {
      out.zero = true;
      ++pos;
      ++items;
      continue;
    }
    if (c == '1') {
      ++pos;
      ++items;
      continue;
    }
    if (c == 'e') {
      ++pos;
      read_inverse_suffix(text, pos);
      ++items;
      continue;
    }
    if (c == 'p' || c == 'P') {
      ++pos;
      const Letter index = read_index(text, pos, alphabet);
      bool inverted = (c == 'P');
      if (!inverted) {
        inverted = read_inverse_suffix(text, pos);
      }
      out.tokens.push_back(GenToken{index, inverted});
      ++items;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  if (items == 0) {
    throw ParseError("empty expression", 0);
  }
  return out;
}

PElement eval_expr(const Expr& e) {
  if (e.zero) {
    return PElement::zero(e.tokens.alphabet());
  }
  return reduce(e.tokens);
}

Word parse_word(std::string_view text, Letter alphabet) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_separator(text[begin])) ++begin;
  while (end > begin && is_separator(text[end - 1])) --end;
  if (begin == end) {
    throw ParseError("empty word literal", begin);
  }
  if (text.substr(begin, end - begin) == "e") {
    return Word(alphabet);
  }
  std::vector<Letter> letters;
  std::size_t pos = begin;
  while (pos < end) {
    if (text[pos] != 'p') {
      throw ParseError("expected 'p' token in word literal", pos);
    }
    ++pos;
    letters.push_back(read_index(text, pos, alphabet));
  }
  return Word(std::move(letters), alphabet);
}

WordSet parse_word_set(std::string_view text, Letter alphabet) {
  const auto blank = [](std::string_view piece) {
    for (char c : piece) {
      if (!is_separator(c)) return false;
    }
    return true;
  };
  WordSet out(alphabet);
  if (blank(text)) {
    return out;  // empty set
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      const std::string_view piece = text.substr(pos, i - pos);
      if (blank(piece)) {
        throw ParseError("empty word in list", pos);
      }
      out.insert(parse_word(piece, alphabet));
      pos = i + 1;
    }
  }
  return out;
}

SElement parse_s_literal(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && is_separator(text[begin])) ++begin;
  if (begin < text.size() && text[begin] == 'F') {
    std::size_t pos = begin + 1;
    if (pos >= text.size() || text[pos] != '[') {
      throw ParseError("expected '[' after 'F'", pos);
    }
    const std::size_t bar = text.find('|', pos);
    const std::size_t close = text.find(']', pos);
    if (bar == std::string_view::npos || close == std::string_view::npos ||
        bar > close) {
      throw ParseError("malformed filter literal, expected F[a|b]", begin);
    }
    const Word a = parse_word(text.substr(pos + 1, bar - pos - 1), 2);
    const Word b = parse_word(text.substr(bar + 1, close - bar - 1), 2);
    for (std::size_t i = close + 1; i < text.size(); ++i) {
      if (!is_separator(text[i])) {
        throw ParseError("trailing input after filter literal", i);
      }
    }
    return SElement(normalize_filter(a, b));
  }
  return SElement(eval_expr(parse_expr(text, 2)));
}

std::string render(const Word& w) { return w.str(); }

std::string render(const PElement& x) { return x.str(); }

std::string render(const SElement& x) { return x.str(); }

}  // namespace polymon
