//  Copyright 2026 The emalp Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Recursive-descent parser for the rule language:
//
//   program := (decl ";")*
//   decl    := head "<-" tag expr "with" literal
//   head    := IDENT | literal
//   tag     := "g" | "p" | "l"
//   expr    := literal | IDENT | FUNC "(" expr ("," expr)* ")"
//   literal := DECIMAL | INT "/" INT
//
// '#' starts a comment running to the end of the line.

#include <algorithm>
#include <cctype>
#include <charconv>

#include "emalp/error.hpp"
#include "emalp/program.hpp"

namespace emalp {

namespace {

enum class Tok { kIdent, kNumber, kArrow, kLParen, kRParen, kComma, kSemi, kSlash, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(t);
        return tokens;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::kIdent;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::kNumber;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '.')) {
          t.text += advance();
        }
      } else if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        t.kind = Tok::kArrow;
        t.text += advance();
        t.text += advance();
      } else {
        switch (c) {
          case '(':
            t.kind = Tok::kLParen;
            break;
          case ')':
            t.kind = Tok::kRParen;
            break;
          case ',':
            t.kind = Tok::kComma;
            break;
          case ';':
            t.kind = Tok::kSemi;
            break;
          case '/':
            t.kind = Tok::kSlash;
            break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line_, column_);
        }
        t.text += advance();
      }
      tokens.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_integer(const std::string& s) {
  return !s.empty() && s.find('.') == std::string::npos;
}

double to_double(const Token& t) {
  double value = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("malformed number " + describe(t), t.line, t.column);
  }
  return value;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program p;
    while (peek().kind != Tok::kEnd) {
      p.rules.push_back(decl());
      expect(Tok::kSemi, "';'");
    }
    return p;
  }

  TruthValue lone_literal() {
    const TruthValue v = literal();
    if (peek().kind != Tok::kEnd) {
      throw ParseError("trailing input after literal", peek().line,
                       peek().column);
    }
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found " +
                           describe(peek()),
                       peek().line, peek().column);
    }
    return next();
  }

  static bool reserved(const std::string& name) {
    return name == "with" || op_from_name(name).has_value();
  }

  Rule decl() {
    Rule rule;
    const Token head = peek();
    if (head.kind == Tok::kIdent) {
      next();
      if (reserved(head.text)) {
        throw ParseError("reserved word '" + head.text + "' used as head",
                         head.line, head.column);
      }
      rule.head = head.text;
    } else if (head.kind == Tok::kNumber) {
      rule.head = literal();
    } else {
      throw ParseError("expected rule head, found " + describe(head), head.line,
                       head.column);
    }
    expect(Tok::kArrow, "'<-'");
    const Token tag = expect(Tok::kIdent, "implication tag g, p or l");
    if (tag.text.size() != 1) {
      throw ParseError("unknown implication tag '" + tag.text + "'", tag.line,
                       tag.column);
    }
    const auto impl = adjoint_pair_from_tag(tag.text);
    if (!impl) {
      throw ParseError("unknown implication tag '" + tag.text + "'", tag.line,
                       tag.column);
    }
    rule.impl = *impl;
    rule.body = expr();
    const Token with = expect(Tok::kIdent, "'with'");
    if (with.text != "with") {
      throw ParseError("expected 'with', found " + describe(with), with.line,
                       with.column);
    }
    rule.weight = literal();
    return rule;
  }

  Expr expr() {
    const Token t = peek();
    if (t.kind == Tok::kNumber) return Expr::constant(literal());
    if (t.kind != Tok::kIdent) {
      throw ParseError("expected expression, found " + describe(t), t.line,
                       t.column);
    }
    next();
    const auto op = op_from_name(t.text);
    if (peek().kind != Tok::kLParen) {
      if (reserved(t.text)) {
        throw ParseError("reserved word '" + t.text + "' used as atom", t.line,
                         t.column);
      }
      return Expr::atom(t.text);
    }
    if (!op) {
      throw ParseError("unknown builtin '" + t.text + "'", t.line, t.column);
    }
    next();  // (
    const OpInfo& info = op_info(*op);
    if (info.parameterized) {
      const TruthValue c = literal();
      expect(Tok::kComma, "','");
      Expr arg = expr();
      if (peek().kind != Tok::kRParen) {
        throw ParseError(std::string(info.name) +
                             " takes a threshold literal and one expression",
                         t.line, t.column);
      }
      next();
      return Expr::threshold(*op, c, std::move(arg));
    }
    std::vector<Expr> args;
    args.push_back(expr());
    while (peek().kind == Tok::kComma) {
      next();
      args.push_back(expr());
    }
    expect(Tok::kRParen, "')'");
    if (args.size() < info.min_arity || args.size() > info.max_arity) {
      throw ParseError("arity mismatch: " + std::string(info.name) +
                           " applied to " + std::to_string(args.size()) +
                           " argument(s)",
                       t.line, t.column);
    }
    return Expr::apply(*op, std::move(args));
  }

  TruthValue literal() {
    const Token num = expect(Tok::kNumber, "literal");
    double value = 0.0;
    if (peek().kind == Tok::kSlash) {
      next();
      const Token den = expect(Tok::kNumber, "denominator");
      if (!is_integer(num.text) || !is_integer(den.text)) {
        throw ParseError("fractions need integer parts", num.line, num.column);
      }
      const double d = to_double(den);
      if (d == 0.0) {
        throw ParseError("zero denominator", den.line, den.column);
      }
      value = to_double(num) / d;
    } else {
      value = to_double(num);
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ParseError("literal " + num.text + " outside [0,1]", num.line,
                       num.column);
    }
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program_unchecked(std::string_view text) {
  return Parser(Lexer(text).run()).program();
}

Program parse_program(std::string_view text, const ValidationOptions& options) {
  Program program = parse_program_unchecked(text);
  const ValidationReport report = validate_program(program, options);
  if (!report.valid) {
    std::string message = "invalid program:";
    for (const auto& issue : report.issues) {
      message += "\n  rule " + std::to_string(issue.rule + 1) + ": " +
                 issue.message;
    }
    throw ValidationError(message);
  }
  return program;
}

TruthValue parse_literal(std::string_view text) {
  return Parser(Lexer(text).run()).lone_literal();
}

}  // namespace emalp
