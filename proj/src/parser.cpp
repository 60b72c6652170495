#include "unrel/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "unrel/errors.hpp"

namespace unrel {
namespace {

enum class Tok { Ident, True, False, Not, Next, WeakNext, Always, Eventually, Until, Release, And, Or,
                 Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    const std::size_t col = i + 1;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "N") kind = Tok::Next;
      else if (word == "X") kind = Tok::WeakNext;
      else if (word == "G") kind = Tok::Always;
      else if (word == "F") kind = Tok::Eventually;
      else if (word == "U") kind = Tok::Until;
      else if (word == "R") kind = Tok::Release;
      out.push_back({kind, std::move(word), col});
      i = j;
      continue;
    }
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    if (starts("<->")) {
      out.push_back({Tok::Iff, "<->", col});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Implies, "->", col});
      i += 2;
    } else if (c == '!') {
      out.push_back({Tok::Not, "!", col});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", col});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else {
      throw ParseError(std::string("unknown token '") + text[i] + "'", col);
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    if (peek().kind == Tok::End) throw ParseError("empty formula", peek().column);
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what, peek().column);
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (peek().kind == Tok::Iff) {
      take();
      lhs = iff(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (peek().kind == Tok::Implies) {
      take();
      return implies(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      lhs = lor(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_binary_temporal();
    while (peek().kind == Tok::And) {
      take();
      lhs = land(lhs, parse_binary_temporal());
    }
    return lhs;
  }

  Formula parse_binary_temporal() {
    Formula lhs = parse_unary();
    if (peek().kind == Tok::Until) {
      take();
      return until(lhs, parse_binary_temporal());
    }
    if (peek().kind == Tok::Release) {
      take();
      return release(lhs, parse_binary_temporal());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return lnot(parse_unary());
      case Tok::Next: take(); return next(parse_unary());
      case Tok::WeakNext: take(); return wnext(parse_unary());
      case Tok::Always: take(); return always(parse_unary());
      case Tok::Eventually: take(); return eventually(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: take(); return tt();
      case Tok::False: take(); return ff();
      case Tok::Ident: return atom(take().text);
      case Tok::LParen: {
        take();
        Formula inner = parse_iff();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_ltlf(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace unrel
