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

#include "tgdb/types.hpp"

#include <charconv>

#include "tgdb/errors.hpp"

namespace tgdb {

RangeRestriction RangeRestriction::greater_than(std::int64_t bound) {
  RangeRestriction r;
  r.base = SimpleKind::Int;
  r.min = Value::integer(bound);
  r.min_exclusive = true;
  return r;
}

RangeRestriction RangeRestriction::between(std::int64_t lo, std::int64_t hi) {
  RangeRestriction r;
  r.base = SimpleKind::Int;
  r.min = Value::integer(lo);
  r.max = Value::integer(hi);
  return r;
}

TypeRegistry::TypeRegistry() {
  register_type("CHAR", SimpleKind::Char);
  register_type("INT", SimpleKind::Int);
  register_type("DATE", SimpleKind::Date);
  register_type("BOOLEAN", SimpleKind::Boolean);
}

TypeId TypeRegistry::register_type(std::string name, TypeDefinition definition) {
  if (by_name_.count(name))
    throw Error(ErrorCode::DuplicateTypeName, "type already registered: " + name);
  if (auto* s = std::get_if<StructuredDefinition>(&definition)) {
    for (const auto& m : s->components) {
      if (m.type.value >= types_.size())
        throw Error(ErrorCode::UnknownComponentType,
                    "component " + m.name + " of " + name +
                        " references an unregistered type");
    }
  }
  TypeId id{static_cast<std::uint32_t>(types_.size())};
  by_name_.emplace(name, id);
  types_.push_back({std::move(name), std::move(definition)});
  return id;
}

std::optional<TypeId> TypeRegistry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const DataType& TypeRegistry::get(TypeId id) const {
  if (id.value >= types_.size())
    throw Error(ErrorCode::UnknownType,
                "no type with id " + std::to_string(id.value));
  return types_[id.value];
}

TypeId TypeRegistry::simple(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::Char: return kChar;
    case SimpleKind::Int: return kInt;
    case SimpleKind::Date: return kDate;
    case SimpleKind::Boolean: return kBoolean;
  }
  return kChar;
}

std::optional<SimpleKind> TypeRegistry::base_kind(TypeId id) const {
  const auto& def = get(id).definition;
  if (auto* k = std::get_if<SimpleKind>(&def)) return *k;
  if (auto* r = std::get_if<RangeRestriction>(&def)) return r->base;
  return std::nullopt;
}

namespace {

std::string kind_name(const Value& v) {
  if (v.is_structured()) return "structured";
  return std::string(to_string(*v.kind()));
}

}  // namespace

std::optional<std::string> TypeRegistry::check_value(const Value& v,
                                                     TypeId t) const {
  if (v.is_null()) return std::nullopt;
  const DataType& type = get(t);
  if (auto* s = std::get_if<StructuredDefinition>(&type.definition)) {
    if (!v.is_structured())
      return "structure: " + type.name + " expects a structured value";
    const auto& parts = v.as_structured();
    if (parts.size() != s->components.size())
      return "structure: " + type.name + " has " +
             std::to_string(s->components.size()) + " components, value has " +
             std::to_string(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].name != s->components[i].name)
        return "structure: expected component " + s->components[i].name +
               ", found " + parts[i].name;
      if (auto bad = check_value(parts[i].value, s->components[i].type))
        return *bad;
    }
    return std::nullopt;
  }
  SimpleKind expected = *base_kind(t);
  if (v.is_structured() || *v.kind() != expected)
    return "kind mismatch: " + type.name + " expects " +
           std::string(to_string(expected)) + ", got " + kind_name(v);
  if (auto* r = std::get_if<RangeRestriction>(&type.definition)) {
    if (r->min) {
      auto c = v <=> *r->min;
      if (c < 0 || (r->min_exclusive && c == 0))
        return "range: " + v.render() + " violates " +
               (r->min_exclusive ? "> " : ">= ") + r->min->render() +
               " for " + type.name;
    }
    if (r->max) {
      auto c = v <=> *r->max;
      if (c > 0 || (r->max_exclusive && c == 0))
        return "range: " + v.render() + " violates " +
               (r->max_exclusive ? "< " : "<= ") + r->max->render() +
               " for " + type.name;
    }
  }
  return std::nullopt;
}

std::variant<Value, std::string> TypeRegistry::coerce_value(const Value& v,
                                                            TypeId t) const {
  if (v.is_null()) return v;
  auto target = base_kind(t);
  Value out = v;
  if (target && !v.is_structured() && *v.kind() != *target) {
    SimpleKind from = *v.kind();
    if (from == SimpleKind::Char && *target == SimpleKind::Int) {
      const std::string& s = v.as_char();
      std::int64_t i = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        return "not numeric: " + v.render();
      out = Value::integer(i);
    } else if (from == SimpleKind::Int && *target == SimpleKind::Char) {
      out = Value::character(std::to_string(v.as_int()));
    } else if (from == SimpleKind::Char && *target == SimpleKind::Date) {
      auto d = Date::parse(v.as_char());
      if (!d) return "not a date: " + v.render();
      out = Value::date(*d);
    } else {
      return "kind mismatch: cannot convert " + std::string(to_string(from)) +
             " to " + std::string(to_string(*target));
    }
  }
  if (auto bad = check_value(out, t)) return *bad;
  return out;
}

std::variant<Value, std::string> TypeRegistry::coerce_literal(const Literal& lit,
                                                              TypeId t) const {
  Value v;
  try {
    v = natural_value(lit);
  } catch (const Error& e) {
    return e.detail();
  }
  return coerce_value(v, t);
}

}  // namespace tgdb
