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

#include <string_view>
#include <vector>

#include "tgdb/ast.hpp"
#include "tgdb/lexer.hpp"
#include "tgdb/values.hpp"

namespace tgdb {

// Parses exactly one statement; a trailing ';' is allowed. Throws
// SyntaxError (with position and the expected tokens), DuplicateDocKey.
Statement parse(const std::vector<Token>& tokens);
Statement parse(std::string_view source);

// Parses a doc starting at tokens[pos], which must be '{'. On return pos
// indexes the token after the closing '}'.
Doc parse_doc(const std::vector<Token>& tokens, std::size_t& pos);

// Splits a token stream into statements at ';' and, where no semicolon has
// been written, at a statement keyword or shell word (DUMP, SCHEMA, DATA,
// GRAPHS) that follows an empty line. Each piece ends with an End token.
std::vector<std::vector<Token>> split_statements(const std::vector<Token>& tokens);

// The column kind a CREATE literal gives a new property.
SimpleKind infer_property_kind(const Literal& lit);

}  // namespace tgdb
