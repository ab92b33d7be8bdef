// Copyright 2026 The tgdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tgdb/errors.hpp"

namespace tgdb {

enum class TokenKind {
  Identifier,        // unquoted, folded to upper case; also generated &n names
  QuotedIdentifier,  // "double quoted", case preserved
  String,            // 'single quoted'
  Number,            // digits
  DateLiteral,       // date'22/11/2002'; lexeme holds the quoted body
  Keyword,           // reserved word, lexeme upper case
  Punct,
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  SourcePos pos;
  // Set when at least one empty line separates this token from the
  // previous one. Scripts without semicolons use it to find statement
  // boundaries.
  bool after_blank_line = false;

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
  bool is_punct(std::string_view text) const { return is(TokenKind::Punct, text); }
  bool is_keyword(std::string_view text) const {
    return is(TokenKind::Keyword, text);
  }
  bool is_name() const {
    return kind == TokenKind::Identifier || kind == TokenKind::QuotedIdentifier;
  }
};

// Maximal-munch tokenizer. Edge arrows -[ ]-> <-[ ]- are single tokens.
// "--" starts a comment running to end of line. The result always ends
// with an End token. Throws UnterminatedString or IllegalCharacter.
std::vector<Token> tokenize(std::string_view source);

}  // namespace tgdb
