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

#include "tgdb/expression.hpp"

#include "tgdb/identifier.hpp"

namespace tgdb {

Expr Expr::make_literal(Literal lit, SourcePos pos) {
  Expr e;
  e.kind = Kind::Literal;
  e.literal = std::move(lit);
  e.pos = pos;
  return e;
}

Expr Expr::make_identifier(std::string name, SourcePos pos) {
  Expr e;
  e.kind = Kind::Identifier;
  e.name = std::move(name);
  e.pos = pos;
  return e;
}

Expr Expr::make_property(std::string var, std::string prop, SourcePos pos) {
  Expr e;
  e.kind = Kind::Property;
  e.name = std::move(var);
  e.property = std::move(prop);
  e.pos = pos;
  return e;
}

Expr Expr::make_binary(ExprOp op, Expr lhs, Expr rhs, SourcePos pos) {
  Expr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.pos = pos;
  return e;
}

Expr Expr::make_not(Expr operand, SourcePos pos) {
  Expr e;
  e.kind = Kind::Not;
  e.op = ExprOp::Not;
  e.operands.push_back(std::move(operand));
  e.pos = pos;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.literal == b.literal;
    case Expr::Kind::Identifier: return a.name == b.name;
    case Expr::Kind::Property:
      return a.name == b.name && a.property == b.property;
    case Expr::Kind::Binary:
    case Expr::Kind::Not:
      return a.op == b.op && a.operands == b.operands;
  }
  return false;
}

std::string_view to_string(ExprOp op) {
  switch (op) {
    case ExprOp::Eq: return "=";
    case ExprOp::Ne: return "<>";
    case ExprOp::Lt: return "<";
    case ExprOp::Le: return "<=";
    case ExprOp::Gt: return ">";
    case ExprOp::Ge: return ">=";
    case ExprOp::And: return "AND";
    case ExprOp::Or: return "OR";
    case ExprOp::Not: return "NOT";
  }
  return "?";
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return e.literal.render();
    case Expr::Kind::Identifier: return render_identifier(e.name);
    case Expr::Kind::Property:
      return render_identifier(e.name) + "." + render_identifier(e.property);
    case Expr::Kind::Binary:
      return "(" + render(e.operands[0]) + " " + std::string(to_string(e.op)) +
             " " + render(e.operands[1]) + ")";
    case Expr::Kind::Not: return "(NOT " + render(e.operands[0]) + ")";
  }
  return {};
}

namespace {

Value truth(bool b) { return Value::boolean(b); }

std::string describe(const Value& v) {
  if (v.is_structured()) return "structured";
  return std::string(to_string(*v.kind()));
}

Value require_boolean(const Value& v, const Expr& e) {
  if (!v.is_null() && v.kind() != SimpleKind::Boolean)
    throw Error(ErrorCode::TypeErrorInWhere,
                "expected a boolean operand, got " + describe(v), e.pos);
  return v;
}

Value compare(ExprOp op, const Value& a, const Value& b, const Expr& e) {
  if (a.is_null() || b.is_null()) return Value::null();
  if (a.is_structured() || b.is_structured() || a.kind() != b.kind())
    throw Error(ErrorCode::TypeErrorInWhere,
                "cannot compare " + describe(a) + " with " + describe(b), e.pos);
  auto c = a <=> b;
  switch (op) {
    case ExprOp::Eq: return truth(c == 0);
    case ExprOp::Ne: return truth(c != 0);
    case ExprOp::Lt: return truth(c < 0);
    case ExprOp::Le: return truth(c <= 0);
    case ExprOp::Gt: return truth(c > 0);
    case ExprOp::Ge: return truth(c >= 0);
    default: break;
  }
  return Value::null();
}

}  // namespace

Value evaluate(const Expr& e, const ExprScope& scope) {
  switch (e.kind) {
    case Expr::Kind::Literal: return natural_value(e.literal);
    case Expr::Kind::Identifier:
      if (!scope.identifier)
        throw Error(ErrorCode::UnknownIdentifier, "unbound identifier " + e.name,
                    e.pos);
      return scope.identifier(e.name, e.pos);
    case Expr::Kind::Property:
      if (!scope.property)
        throw Error(ErrorCode::UnknownIdentifier,
                    "unbound identifier " + e.name, e.pos);
      return scope.property(e.name, e.property, e.pos);
    case Expr::Kind::Not: {
      Value v = require_boolean(evaluate(e.operands[0], scope), e);
      if (v.is_null()) return v;
      return truth(!v.as_bool());
    }
    case Expr::Kind::Binary: {
      if (e.op == ExprOp::And || e.op == ExprOp::Or) {
        Value a = require_boolean(evaluate(e.operands[0], scope), e);
        Value b = require_boolean(evaluate(e.operands[1], scope), e);
        bool dominant = e.op == ExprOp::Or;
        if ((!a.is_null() && a.as_bool() == dominant) ||
            (!b.is_null() && b.as_bool() == dominant))
          return truth(dominant);
        if (a.is_null() || b.is_null()) return Value::null();
        return truth(!dominant);
      }
      return compare(e.op, evaluate(e.operands[0], scope),
                     evaluate(e.operands[1], scope), e);
    }
  }
  return Value::null();
}

bool evaluate_predicate(const Expr& e, const ExprScope& scope) {
  Value v = evaluate(e, scope);
  if (v.is_null()) return false;
  if (v.kind() != SimpleKind::Boolean)
    throw Error(ErrorCode::TypeErrorInWhere, "condition is not boolean", e.pos);
  return v.as_bool();
}

void collect_references(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Identifier || e.kind == Expr::Kind::Property)
    out.push_back(e.name);
  for (const auto& o : e.operands) collect_references(o, out);
}

}  // namespace tgdb
