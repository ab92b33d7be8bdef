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

#include "tgdb/errors.hpp"

namespace tgdb {

std::string to_string(const SourcePos& pos) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateTypeName: return "DuplicateTypeName";
    case ErrorCode::UnknownComponentType: return "UnknownComponentType";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::InvalidLiteral: return "InvalidLiteral";
    case ErrorCode::TransactionAlreadyOpen: return "TransactionAlreadyOpen";
    case ErrorCode::TransactionClosed: return "TransactionClosed";
    case ErrorCode::DuplicateTableName: return "DuplicateTableName";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::TypeViolation: return "TypeViolation";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::NullKeyViolation: return "NullKeyViolation";
    case ErrorCode::ReferencedByForeignKey: return "ReferencedByForeignKey";
    case ErrorCode::ImmutableKey: return "ImmutableKey";
    case ErrorCode::DuplicateTypeLabel: return "DuplicateTypeLabel";
    case ErrorCode::UnknownSupertype: return "UnknownSupertype";
    case ErrorCode::UnknownEndpointType: return "UnknownEndpointType";
    case ErrorCode::UnknownTypeLabel: return "UnknownTypeLabel";
    case ErrorCode::CyclicSupertype: return "CyclicSupertype";
    case ErrorCode::SchemaConflict: return "SchemaConflict";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::HasIncidentEdges: return "HasIncidentEdges";
    case ErrorCode::UnterminatedString: return "UnterminatedString";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateDocKey: return "DuplicateDocKey";
    case ErrorCode::TypeErrorInWhere: return "TypeErrorInWhere";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::AmbiguousReference: return "AmbiguousReference";
    case ErrorCode::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::EncodingError: return "EncodingError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           const std::optional<SourcePos>& pos) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  if (pos) out += " (" + to_string(*pos) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<SourcePos> pos)
    : std::runtime_error(format_message(code, message, pos)),
      code_(code),
      detail_(message),
      pos_(pos) {}

}  // namespace tgdb
