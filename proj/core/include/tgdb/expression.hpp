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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tgdb/errors.hpp"
#include "tgdb/values.hpp"

namespace tgdb {

enum class ExprOp { Eq, Ne, Lt, Le, Gt, Ge, And, Or, Not };

// Boolean/comparison expression tree used by WHERE clauses, SET values and
// integrity constraints.
struct Expr {
  enum class Kind { Literal, Identifier, Property, Binary, Not };

  Kind kind = Kind::Literal;
  Literal literal;
  // Identifier name, or the variable of a dotted property access.
  std::string name;
  // Property of a dotted access.
  std::string property;
  ExprOp op = ExprOp::Eq;
  std::vector<Expr> operands;
  SourcePos pos;

  static Expr make_literal(Literal lit, SourcePos pos = {});
  static Expr make_identifier(std::string name, SourcePos pos = {});
  static Expr make_property(std::string var, std::string prop, SourcePos pos = {});
  static Expr make_binary(ExprOp op, Expr lhs, Expr rhs, SourcePos pos = {});
  static Expr make_not(Expr operand, SourcePos pos = {});
};

// Structural equality; source positions are ignored.
bool operator==(const Expr& a, const Expr& b);

// Fully parenthesised rendering that parses back to an equal tree.
std::string render(const Expr& e);
std::string_view to_string(ExprOp op);

// Supplies values for identifiers and dotted property accesses. Either
// callback may throw Error(UnknownIdentifier).
struct ExprScope {
  std::function<Value(const std::string& name, const SourcePos& pos)> identifier;
  std::function<Value(const std::string& var, const std::string& prop,
                      const SourcePos& pos)>
      property;
};

// Three-valued evaluation: a comparison involving null yields null.
// Throws Error(TypeErrorInWhere) for comparisons across kinds or boolean
// connectives over non-boolean operands.
Value evaluate(const Expr& e, const ExprScope& scope);

// Definite-true test used for filtering: null and false both reject.
bool evaluate_predicate(const Expr& e, const ExprScope& scope);

// Every identifier and property-variable the expression refers to.
void collect_references(const Expr& e, std::vector<std::string>& out);

}  // namespace tgdb
