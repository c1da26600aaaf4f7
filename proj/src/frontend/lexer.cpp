// Copyright 2026 The Nucleus WDE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

#include <cctype>

namespace wde::frontend {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::Number:
      return "number";
    case TokenKind::String:
      return "string";
    case TokenKind::LBrace:
      return "'{'";
    case TokenKind::RBrace:
      return "'}'";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::LBracket:
      return "'['";
    case TokenKind::RBracket:
      return "']'";
    case TokenKind::Semicolon:
      return "';'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::Equals:
      return "'='";
    case TokenKind::Colon:
      return "':'";
    case TokenKind::Arrow:
      return "'->'";
    case TokenKind::BiArrow:
      return "'<->'";
    case TokenKind::DotDot:
      return "'..'";
    case TokenKind::LessEqual:
      return "'<='";
    case TokenKind::GreaterEqual:
      return "'>='";
    case TokenKind::Plus:
      return "'+'";
    case TokenKind::Star:
      return "'*'";
    case TokenKind::EndOfFile:
      return "end of file";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view source, std::string file)
      : source_(source), file_(std::move(file)) {}

  LexResult run() {
    while (!at_end()) {
      skip_trivia();
      if (at_end()) break;
      lex_token();
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.span = here(0);
    result_.tokens.push_back(eof);
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= source_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < source_.size() ? source_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = source_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  SourceSpan here(int length) const { return SourceSpan{file_, line_, column_, length}; }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void error(const SourceSpan& span, std::string code, std::string message) {
    result_.diagnostics.push_back(
        ParseDiagnostic{Severity::Error, std::move(code), std::move(message), span});
  }

  void push(TokenKind kind, std::string text, SourceSpan span, bool is_integer = false) {
    span.length = static_cast<int>(text.size());
    result_.tokens.push_back(Token{kind, std::move(text), std::move(span), is_integer});
  }

  void lex_token() {
    const SourceSpan start = here(1);
    const char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      lex_identifier(start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_number(start, /*negative=*/false);
      return;
    }

    switch (c) {
      case '"':
        lex_string(start);
        return;
      case '{':
        advance();
        push(TokenKind::LBrace, "{", start);
        return;
      case '}':
        advance();
        push(TokenKind::RBrace, "}", start);
        return;
      case '(':
        advance();
        push(TokenKind::LParen, "(", start);
        return;
      case ')':
        advance();
        push(TokenKind::RParen, ")", start);
        return;
      case '[':
        advance();
        push(TokenKind::LBracket, "[", start);
        return;
      case ']':
        advance();
        push(TokenKind::RBracket, "]", start);
        return;
      case ';':
        advance();
        push(TokenKind::Semicolon, ";", start);
        return;
      case ',':
        advance();
        push(TokenKind::Comma, ",", start);
        return;
      case '=':
        advance();
        push(TokenKind::Equals, "=", start);
        return;
      case ':':
        advance();
        push(TokenKind::Colon, ":", start);
        return;
      case '+':
        advance();
        push(TokenKind::Plus, "+", start);
        return;
      case '*':
        advance();
        push(TokenKind::Star, "*", start);
        return;
      case '.':
        if (peek(1) == '.') {
          advance();
          advance();
          push(TokenKind::DotDot, "..", start);
          return;
        }
        break;
      case '-':
        if (peek(1) == '>') {
          advance();
          advance();
          push(TokenKind::Arrow, "->", start);
          return;
        }
        if (std::isdigit(static_cast<unsigned char>(peek(1)))) {
          advance();  // consume '-'
          lex_number(start, /*negative=*/true);
          return;
        }
        break;
      case '<':
        if (peek(1) == '=') {
          advance();
          advance();
          push(TokenKind::LessEqual, "<=", start);
          return;
        }
        if (peek(1) == '-' && peek(2) == '>') {
          advance();
          advance();
          advance();
          push(TokenKind::BiArrow, "<->", start);
          return;
        }
        break;
      case '>':
        if (peek(1) == '=') {
          advance();
          advance();
          push(TokenKind::GreaterEqual, ">=", start);
          return;
        }
        break;
      default:
        break;
    }

    advance();
    error(start, "lex.invalid-char", std::string("unexpected character '") + c + "'");
  }

  void lex_identifier(const SourceSpan& start) {
    std::string text;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      text += advance();
    }
    push(TokenKind::Identifier, std::move(text), start);
  }

  void lex_number(const SourceSpan& start, bool negative) {
    std::string text = negative ? "-" : "";
    bool is_integer = true;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
    // '.' starts a fraction only when followed by a digit, so `64..4096`
    // still lexes as two integers around a DotDot.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_integer = false;
      text += advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      const char sign = peek(1);
      const char first = (sign == '+' || sign == '-') ? peek(2) : sign;
      if (std::isdigit(static_cast<unsigned char>(first))) {
        is_integer = false;
        text += advance();
        if (peek() == '+' || peek() == '-') text += advance();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
      }
    }
    push(TokenKind::Number, std::move(text), start, is_integer);
  }

  void lex_string(const SourceSpan& start) {
    advance();  // opening quote
    std::string text;
    while (!at_end() && peek() != '"' && peek() != '\n') text += advance();
    if (at_end() || peek() != '"') {
      error(start, "lex.unterminated-string", "unterminated string literal");
      return;
    }
    advance();  // closing quote
    SourceSpan span = start;
    span.length = static_cast<int>(text.size()) + 2;
    result_.tokens.push_back(Token{TokenKind::String, std::move(text), std::move(span), false});
  }

  std::string_view source_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  LexResult result_;
};

}  // namespace

LexResult lex(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace wde::frontend
