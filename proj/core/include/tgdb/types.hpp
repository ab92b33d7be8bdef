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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tgdb/values.hpp"

namespace tgdb {

struct TypeId {
  std::uint32_t value = 0;
  auto operator<=>(const TypeId&) const = default;
};

// Bounds on a simple kind, e.g. int > 0 or int in [0..100].
struct RangeRestriction {
  SimpleKind base = SimpleKind::Int;
  std::optional<Value> min;
  std::optional<Value> max;
  bool min_exclusive = false;
  bool max_exclusive = false;

  static RangeRestriction greater_than(std::int64_t bound);
  static RangeRestriction between(std::int64_t lo, std::int64_t hi);
};

struct StructuredDefinition {
  struct Member {
    std::string name;
    TypeId type;
  };
  std::vector<Member> components;
};

using TypeDefinition =
    std::variant<SimpleKind, RangeRestriction, StructuredDefinition>;

struct DataType {
  std::string name;
  TypeDefinition definition;
};

// The type universe. The four simple kinds are preregistered under the names
// CHAR, INT, DATE and BOOLEAN.
class TypeRegistry {
 public:
  static constexpr TypeId kChar{0};
  static constexpr TypeId kInt{1};
  static constexpr TypeId kDate{2};
  static constexpr TypeId kBoolean{3};

  TypeRegistry();

  // Throws DuplicateTypeName or UnknownComponentType.
  TypeId register_type(std::string name, TypeDefinition definition);

  std::optional<TypeId> find(std::string_view name) const;
  const DataType& get(TypeId id) const;
  std::size_t size() const { return types_.size(); }

  static TypeId simple(SimpleKind kind);
  // The simple kind a type reduces to; nullopt for structured types.
  std::optional<SimpleKind> base_kind(TypeId id) const;
  bool is_builtin(TypeId id) const { return id.value < 4; }

  // nullopt when v conforms to t. Null conforms to every type.
  std::optional<std::string> check_value(const Value& v, TypeId t) const;

  // Converts v to type t when that loses nothing: numeric strings to INT,
  // integers to CHAR, 'DD/MM/YYYY' strings to DATE. The result always
  // passes check_value; otherwise a violation description is returned.
  std::variant<Value, std::string> coerce_value(const Value& v, TypeId t) const;
  std::variant<Value, std::string> coerce_literal(const Literal& lit,
                                                  TypeId t) const;

 private:
  std::vector<DataType> types_;
  std::unordered_map<std::string, TypeId> by_name_;
};

}  // namespace tgdb
