#pragma once

// Text formats for clausal theories and DNF formulas.
//
//   theory  := (clause)*
//   clause  := "false" "." | ":-" body "." | heads [":-" body] "."
//   heads   := atom (";" atom)*
//   body    := atom ("," atom)*
//   dnf     := "false" | cube ("|" cube)*
//   cube    := "true" | literal ("," literal)*
//   literal := ["~"] atom
//   atom    := predicate ["(" term ("," term)* ")"]
//
// Identifiers starting with an upper case letter denote variables in term
// position and predicates in predicate position. "%" starts a comment that
// runs to the end of the line. "true" and "false" are reserved words.

#include <cctype>
#include <string>
#include <vector>

#include "possib/errors.hpp"
#include "possib/logic.hpp"

namespace possib {
namespace detail {

struct Token {
  enum class Kind {
    Ident,      // lower case identifier or '#'
    UpperIdent, // upper case identifier
    True,
    False,
    LParen,
    RParen,
    Comma,
    Semicolon,
    Period,
    Implies,  // ":-"
    Pipe,
    Tilde,
    End,
  };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.line, current_.column, message);
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= input_.size()) {
      current_.kind = Token::Kind::End;
      current_.text.clear();
      return;
    }
    char c = input_[pos_];
    if (c == '#' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      if (c == '#') {
        word = "#";
        bump();
      } else {
        while (pos_ < input_.size() &&
               (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                input_[pos_] == '_')) {
          word += input_[pos_];
          bump();
        }
      }
      current_.text = word;
      if (word == "true")
        current_.kind = Token::Kind::True;
      else if (word == "false")
        current_.kind = Token::Kind::False;
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        current_.kind = Token::Kind::UpperIdent;
      else
        current_.kind = Token::Kind::Ident;
      return;
    }
    switch (c) {
      case '(': single(Token::Kind::LParen); return;
      case ')': single(Token::Kind::RParen); return;
      case ',': single(Token::Kind::Comma); return;
      case ';': single(Token::Kind::Semicolon); return;
      case '.': single(Token::Kind::Period); return;
      case '|': single(Token::Kind::Pipe); return;
      case '~': single(Token::Kind::Tilde); return;
      case ':':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '-') {
          current_.kind = Token::Kind::Implies;
          current_.text = ":-";
          bump();
          bump();
          return;
        }
        throw ParseError(line_, column_, "expected ':-'");
      default:
        throw ParseError(line_, column_,
                         std::string("unexpected character '") + c + "'");
    }
  }

  void single(Token::Kind kind) {
    current_.kind = kind;
    current_.text = input_[pos_];
    bump();
  }

  void skip_space() {
    while (pos_ < input_.size()) {
      char c = input_[pos_];
      if (c == '%') {
        while (pos_ < input_.size() && input_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(const std::string& input) : lex_(input) {}

  ClausalTheory theory() {
    std::vector<Clause> clauses;
    while (lex_.peek().kind != Token::Kind::End) {
      if (lex_.peek().kind == Token::Kind::True) {
        // "true." contributes no clause; it is how empty theories print.
        lex_.take();
        expect(Token::Kind::Period, "'.'");
        continue;
      }
      clauses.push_back(clause());
    }
    return ClausalTheory(std::move(clauses));
  }

  DnfFormula dnf() {
    DnfFormula out;
    if (lex_.peek().kind == Token::Kind::False) {
      lex_.take();
      expect(Token::Kind::End, "end of input");
      return out;
    }
    out.cubes.push_back(cube());
    while (lex_.peek().kind == Token::Kind::Pipe) {
      lex_.take();
      out.cubes.push_back(cube());
    }
    expect(Token::Kind::End, "end of input");
    return out;
  }

  Atom ground_atom() {
    Atom a = atom();
    if (!a.ground()) lex_.fail("expected a ground atom");
    expect(Token::Kind::End, "end of input");
    return a;
  }

 private:
  Clause clause() {
    Clause c;
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::False) {
      lex_.take();
      expect(Token::Kind::Period, "'.'");
      return c;
    }
    if (t.kind != Token::Kind::Implies) {
      c.head.push_back(atom());
      while (lex_.peek().kind == Token::Kind::Semicolon) {
        lex_.take();
        c.head.push_back(atom());
      }
    }
    if (lex_.peek().kind == Token::Kind::Implies) {
      lex_.take();
      c.body.push_back(atom());
      while (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        c.body.push_back(atom());
      }
    }
    expect(Token::Kind::Period, "'.'");
    return c;
  }

  Cube cube() {
    Cube c;
    if (lex_.peek().kind == Token::Kind::True) {
      lex_.take();
      return c;
    }
    c.literals.push_back(literal());
    while (lex_.peek().kind == Token::Kind::Comma) {
      lex_.take();
      c.literals.push_back(literal());
    }
    return c;
  }

  Literal literal() {
    bool positive = true;
    if (lex_.peek().kind == Token::Kind::Tilde) {
      lex_.take();
      positive = false;
    }
    return Literal{atom(), positive};
  }

  Atom atom() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::UpperIdent)
      lex_.fail("expected a predicate name");
    Atom a{lex_.take().text, {}};
    if (lex_.peek().kind == Token::Kind::LParen) {
      lex_.take();
      a.args.push_back(term());
      while (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        a.args.push_back(term());
      }
      expect(Token::Kind::RParen, "')'");
    }
    return a;
  }

  Term term() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::UpperIdent) return Term::variable(lex_.take().text);
    if (t.kind == Token::Kind::Ident) return Term::constant(lex_.take().text);
    lex_.fail("expected a term");
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (lex_.peek().kind != kind) lex_.fail("expected " + what);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace detail

inline ClausalTheory parse_theory(const std::string& text) {
  return detail::Parser(text).theory();
}

inline DnfFormula parse_dnf(const std::string& text) {
  return detail::Parser(text).dnf();
}

inline Atom parse_ground_atom(const std::string& text) {
  return detail::Parser(text).ground_atom();
}

}  // namespace possib
