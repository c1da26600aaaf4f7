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

#ifndef WDE_SRC_FRONTEND_LEXER_HPP_
#define WDE_SRC_FRONTEND_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wde/frontend/diagnostics.hpp"

namespace wde::frontend {

enum class TokenKind {
  Identifier,
  Number,  // raw text; `is_integer` marks pure integer literals
  String,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semicolon,
  Comma,
  Equals,
  Colon,
  Arrow,         // ->
  BiArrow,       // <->
  DotDot,        // ..
  LessEqual,     // <=
  GreaterEqual,  // >=
  Plus,
  Star,
  EndOfFile,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;
  SourceSpan span;
  bool is_integer = false;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by EndOfFile
  std::vector<ParseDiagnostic> diagnostics;
};

LexResult lex(std::string_view source, const std::string& file);

}  // namespace wde::frontend

#endif  // WDE_SRC_FRONTEND_LEXER_HPP_
