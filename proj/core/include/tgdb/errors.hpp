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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgdb {

// Position of a token or node in statement source text. Line and column are
// 1-based; offset is the byte offset from the start of the input.
struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePos&) const = default;
};

std::string to_string(const SourcePos& pos);

enum class ErrorCode {
  // values_types
  DuplicateTypeName,
  UnknownComponentType,
  UnknownType,
  InvalidLiteral,
  // relational_core
  TransactionAlreadyOpen,
  TransactionClosed,
  DuplicateTableName,
  UnknownTable,
  UnknownColumn,
  TypeViolation,
  UnknownRow,
  NullKeyViolation,
  ReferencedByForeignKey,
  ImmutableKey,
  // schema_graph
  DuplicateTypeLabel,
  UnknownSupertype,
  UnknownEndpointType,
  UnknownTypeLabel,
  CyclicSupertype,
  SchemaConflict,
  // graph_instance
  DuplicateNode,
  UnknownEndpoint,
  UnknownEdge,
  UnknownNode,
  HasIncidentEdges,
  // syntax
  UnterminatedString,
  IllegalCharacter,
  SyntaxError,
  DuplicateDocKey,
  // matcher / executor
  TypeErrorInWhere,
  UnknownIdentifier,
  AmbiguousReference,
  DuplicateDefinition,
  // shell
  FileNotFound,
  EncodingError,
};

std::string_view to_string(ErrorCode code);

// The single exception type thrown by the engine. Statement execution
// catches it, aborts the open transaction and turns it into a diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<SourcePos> pos_;
};

}  // namespace tgdb
