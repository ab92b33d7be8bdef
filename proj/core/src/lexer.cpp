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

#include "tgdb/lexer.hpp"

#include <cctype>

#include "tgdb/identifier.hpp"

namespace tgdb {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::QuotedIdentifier: return "quoted identifier";
    case TokenKind::String: return "string";
    case TokenKind::Number: return "number";
    case TokenKind::DateLiteral: return "date literal";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      bool blank = skip_space();
      Token t;
      t.pos = pos_;
      t.after_blank_line = blank && !out.empty();
      if (at_end()) {
        t.kind = TokenKind::End;
        out.push_back(std::move(t));
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    std::size_t i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }
  void advance() {
    if (src_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  // Returns true when the skipped run contained an empty line.
  bool skip_space() {
    int newlines = 0;
    bool blank = false;
    while (!at_end()) {
      char c = peek();
      if (c == '-' && peek(1) == '-') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      if (c == '\n') {
        if (++newlines >= 2) blank = true;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      advance();
    }
    return blank;
  }

  std::string quoted_body(char quote, const SourcePos& start) {
    std::string body;
    advance();  // opening quote
    for (;;) {
      if (at_end())
        throw Error(ErrorCode::UnterminatedString,
                    quote == '\'' ? "unterminated string constant"
                                  : "unterminated quoted identifier",
                    start);
      char c = peek();
      advance();
      if (c == quote) {
        if (peek() == quote) {
          body += quote;
          advance();
          continue;
        }
        return body;
      }
      body += c;
    }
  }

  void lex_one(Token& t) {
    const SourcePos start = pos_;
    char c = peek();
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc) || c == '_') {
      std::string word;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_')) {
        word += static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
        advance();
      }
      if (word == "DATE" && peek() == '\'') {
        t.kind = TokenKind::DateLiteral;
        t.lexeme = quoted_body('\'', start);
        return;
      }
      t.kind = is_reserved_word(word) ? TokenKind::Keyword : TokenKind::Identifier;
      t.lexeme = std::move(word);
      return;
    }
    if (std::isdigit(uc)) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        t.lexeme += peek();
        advance();
      }
      t.kind = TokenKind::Number;
      return;
    }
    if (c == '&' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      t.lexeme += '&';
      advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        t.lexeme += peek();
        advance();
      }
      t.kind = TokenKind::Identifier;
      return;
    }
    if (c == '\'') {
      t.kind = TokenKind::String;
      t.lexeme = quoted_body('\'', start);
      return;
    }
    if (c == '"') {
      t.kind = TokenKind::QuotedIdentifier;
      t.lexeme = quoted_body('"', start);
      if (t.lexeme.empty())
        throw Error(ErrorCode::IllegalCharacter, "empty quoted identifier", start);
      return;
    }
    t.kind = TokenKind::Punct;
    auto take = [&](std::string_view s) {
      for (std::size_t i = 0; i < s.size(); ++i) advance();
      t.lexeme = std::string(s);
    };
    switch (c) {
      case '-':
        if (peek(1) == '[') return take("-[");
        return take("-");
      case ']':
        if (peek(1) == '-' && peek(2) == '>') return take("]->");
        if (peek(1) == '-') return take("]-");
        return take("]");
      case '<':
        if (peek(1) == '-' && peek(2) == '[') return take("<-[");
        if (peek(1) == '=') return take("<=");
        if (peek(1) == '>') return take("<>");
        return take("<");
      case '>':
        if (peek(1) == '=') return take(">=");
        return take(">");
      case '(': case ')': case '{': case '}': case '[': case ':': case ',':
      case '.': case ';': case '=': case '*':
        return take(std::string_view(&src_[pos_.offset], 1));
      default: break;
    }
    std::string shown = uc >= 0x20 && uc < 0x7f ? std::string(1, c)
                                                : "byte " + std::to_string(uc);
    throw Error(ErrorCode::IllegalCharacter, "illegal character '" + shown + "'",
                start);
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace tgdb
