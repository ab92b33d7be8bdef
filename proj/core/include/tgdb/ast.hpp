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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgdb/expression.hpp"

namespace tgdb {

struct DocEntry;

// Value side of a doc entry: an expression, a [list], a nested {doc}, or
// '*' (unbounded, used in multiplicity metadata).
struct DocValue {
  enum class Kind { Scalar, Array, Object, Unbounded };
  Kind kind = Kind::Scalar;
  Expr scalar;
  std::vector<DocValue> items;
  std::vector<DocEntry> entries;
  SourcePos pos;
};

struct DocEntry {
  std::string key;
  DocValue value;
  SourcePos pos;
};

using Doc = std::vector<DocEntry>;

// id {':' label} [doc]. An empty id is anonymous.
struct NewG {
  std::string id;
  std::vector<std::string> labels;
  std::optional<Doc> doc;
  SourcePos pos;
};

enum class Direction { Rightward, Leftward };

struct NodeItem {
  // A bare (id) referring to a node defined elsewhere.
  bool reference = false;
  NewG node;
};

struct EdgeItem {
  Direction direction = Direction::Rightward;
  NewG edge;
};

// node {edge node}: nodes.size() == edges.size() + 1.
struct Path {
  std::vector<NodeItem> nodes;
  std::vector<EdgeItem> edges;
};

struct CreateGraph {
  std::vector<Path> paths;
};

struct ColumnDef {
  std::string name;
  std::string type_name;
};

struct ConstraintDef {
  std::string name;
  Expr predicate;
};

struct CreateType {
  enum class Kind { Node, Edge, Under };
  std::string label;
  std::vector<ColumnDef> columns;
  Kind kind = Kind::Node;
  std::string leaving;
  std::string arriving;
  std::string under;
  std::optional<Doc> metadata;
  std::vector<ConstraintDef> constraints;
};

struct Statement;

struct Match {
  std::vector<Path> paths;
  std::optional<Expr> where;
  // Zero or one trailing SET, DELETE or CREATE run once per binding row.
  std::vector<Statement> then;
};

struct Assignment {
  std::string target;
  std::string property;
  Expr value;
  SourcePos pos;
};

struct SetStmt {
  std::vector<Assignment> assignments;
};

struct DeleteStmt {
  std::vector<std::string> targets;
  std::vector<SourcePos> positions;
};

struct Statement {
  std::variant<CreateGraph, CreateType, Match, SetStmt, DeleteStmt> node;
  SourcePos pos;
};

// Structural equality ignoring source positions.
bool operator==(const DocValue& a, const DocValue& b);
bool operator==(const DocEntry& a, const DocEntry& b);
bool operator==(const NewG& a, const NewG& b);
bool operator==(const NodeItem& a, const NodeItem& b);
bool operator==(const EdgeItem& a, const EdgeItem& b);
bool operator==(const Path& a, const Path& b);
bool operator==(const CreateGraph& a, const CreateGraph& b);
bool operator==(const ColumnDef& a, const ColumnDef& b);
bool operator==(const ConstraintDef& a, const ConstraintDef& b);
bool operator==(const CreateType& a, const CreateType& b);
bool operator==(const Match& a, const Match& b);
bool operator==(const Assignment& a, const Assignment& b);
bool operator==(const SetStmt& a, const SetStmt& b);
bool operator==(const DeleteStmt& a, const DeleteStmt& b);
bool operator==(const Statement& a, const Statement& b);

// Deterministic pretty-printer; its output parses back to an equal AST.
std::string render(const Statement& s);
std::string render(const Path& p);
std::string render(const Doc& d);
std::string render(const DocValue& v);

}  // namespace tgdb
