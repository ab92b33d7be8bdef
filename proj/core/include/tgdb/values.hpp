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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tgdb {

enum class SimpleKind { Char, Int, Date, Boolean };

std::string_view to_string(SimpleKind kind);

// Calendar date. Literals are written day-first: date'22/11/2002'.
struct Date {
  int year = 1;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  // Parses "DD/MM/YYYY" (one or two digit day and month, four digit year).
  static std::optional<Date> parse(std::string_view text);
  std::string to_string() const;
};

struct Component;

// A typed value: null, a scalar of one SimpleKind, or a structured tuple of
// named components. Values are plain data and cheap enough to copy.
class Value {
 public:
  using Structured = std::vector<Component>;

  Value() = default;
  static Value null() { return Value(); }
  static Value character(std::string s);
  static Value integer(std::int64_t i);
  static Value date(Date d);
  static Value boolean(bool b);
  static Value structured(Structured components);

  bool is_null() const { return std::holds_alternative<std::monostate>(data_); }
  bool is_structured() const { return std::holds_alternative<Structured>(data_); }
  // Kind of a scalar value; nullopt for null and structured values.
  std::optional<SimpleKind> kind() const;

  const std::string& as_char() const { return std::get<std::string>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const Date& as_date() const { return std::get<Date>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  const Structured& as_structured() const { return std::get<Structured>(data_); }

  // Literal rendering: 'text', 42, date'22/11/2002', TRUE, NULL,
  // (name: value, ...).
  std::string render() const;

  friend bool operator==(const Value& a, const Value& b);
  // Total order: null first, then by alternative, then by content.
  friend std::weak_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<std::monostate, std::string, std::int64_t, Date, bool,
               Structured>
      data_;
};

struct Component {
  std::string name;
  Value value;
};

bool operator==(const Component& a, const Component& b);

using Row = std::vector<Value>;

// A constant as written in statement text, before it has been given a
// column type.
struct Literal {
  enum class Kind { String, Number, Date, Boolean, Null };
  Kind kind = Kind::Null;
  // Unquoted content: string body, digits (with optional leading '-'),
  // date body "22/11/2002", "TRUE"/"FALSE".
  std::string text;

  bool operator==(const Literal&) const = default;

  static Literal string(std::string s) { return {Kind::String, std::move(s)}; }
  static Literal number(std::string digits) {
    return {Kind::Number, std::move(digits)};
  }
  static Literal date(std::string body) { return {Kind::Date, std::move(body)}; }
  static Literal boolean(bool b) { return {Kind::Boolean, b ? "TRUE" : "FALSE"}; }
  static Literal null() { return {Kind::Null, "NULL"}; }

  std::string render() const;
};

// The value a literal denotes without any target type: string -> CHAR,
// number -> INT, date -> DATE. Throws Error(InvalidLiteral) for malformed
// numbers or impossible dates.
Value natural_value(const Literal& lit);

// Quote a string for SQL rendering: wraps in single quotes, doubling any
// embedded quote.
std::string quote_string(std::string_view s);

}  // namespace tgdb
