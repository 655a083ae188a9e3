#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "greenscan/errors.hpp"
#include "greenscan/rational.hpp"

namespace greenscan::detail {

enum class Tok { Ident, Number, Colon, Arrow, Star, Plus, Minus, Equals, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 0;
  int column = 0;
};

inline const char* token_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Equals: return "'='";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of line";
  }
  return "?";
}

/// Tokens of one source line (comments stripped).
inline std::vector<Token> tokenize_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.line = line_no;
    t.column = col(i);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\''))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        const std::size_t d = j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        if (j == d) throw ParseError("expected denominator after '/'", line_no, col(j));
      }
      t.kind = Tok::Number;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      t.kind = Tok::Arrow;
      t.text = "->";
      i += 2;
    } else {
      switch (c) {
        case ':': t.kind = Tok::Colon; break;
        case '*': t.kind = Tok::Star; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '=': t.kind = Tok::Equals; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case ',': t.kind = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line_no, col(i));
      }
      t.text = std::string(1, c);
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line_no;
  end.column = col(line.size());
  out.push_back(end);
  return out;
}

/// Cursor over one line's tokens.
class LineCursor {
 public:
  explicit LineCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const Token& expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + token_name(k) + ", found " + describe(peek()));
    return next();
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    throw ParseError(message, t.line, t.column);
  }
  void expect_end() {
    if (!at(Tok::End)) fail("unexpected " + describe(peek()));
  }

  long positive_integer() {
    const Token& t = expect(Tok::Number);
    if (t.text.find('/') != std::string::npos) fail_at(t, "expected an integer");
    try {
      const long v = std::stol(t.text);
      if (v <= 0) fail_at(t, "expected a positive integer");
      return v;
    } catch (const std::out_of_range&) {
      fail_at(t, "integer out of range");
    }
  }

  long nonnegative_integer() {
    const Token& t = expect(Tok::Number);
    if (t.text.find('/') != std::string::npos) fail_at(t, "expected an integer");
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail_at(t, "integer out of range");
    }
  }

  /// Optional leading signs followed by a number.
  Rational signed_rational() {
    int sign = 1;
    while (at(Tok::Minus) || at(Tok::Plus))
      if (next().kind == Tok::Minus) sign = -sign;
    const Token& t = expect(Tok::Number);
    try {
      Rational r = parse_rational(t.text);
      return sign < 0 ? Rational(-r) : r;
    } catch (const std::invalid_argument& e) {
      fail_at(t, e.what());
    }
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of line";
    return std::string(token_name(t.kind)) + " '" + t.text + "'";
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace greenscan::detail
