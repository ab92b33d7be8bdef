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

#include "tgdb/values.hpp"

#include <charconv>
#include <cstdio>

#include "tgdb/errors.hpp"

namespace tgdb {

std::string_view to_string(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::Char: return "char";
    case SimpleKind::Int: return "int";
    case SimpleKind::Date: return "date";
    case SimpleKind::Boolean: return "boolean";
  }
  return "?";
}

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

std::optional<int> parse_digits(std::string_view s, std::size_t min_len,
                                std::size_t max_len) {
  if (s.size() < min_len || s.size() > max_len) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Date> Date::parse(std::string_view text) {
  auto first = text.find('/');
  if (first == std::string_view::npos) return std::nullopt;
  auto second = text.find('/', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  auto d = parse_digits(text.substr(0, first), 1, 2);
  auto m = parse_digits(text.substr(first + 1, second - first - 1), 1, 2);
  auto y = parse_digits(text.substr(second + 1), 4, 4);
  if (!d || !m || !y) return std::nullopt;
  if (*m < 1 || *m > 12 || *y < 1) return std::nullopt;
  if (*d < 1 || *d > days_in_month(*y, *m)) return std::nullopt;
  return Date{*y, *m, *d};
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d/%02d/%04d", day, month, year);
  return buf;
}

Value Value::character(std::string s) {
  Value v;
  v.data_ = std::move(s);
  return v;
}

Value Value::integer(std::int64_t i) {
  Value v;
  v.data_ = i;
  return v;
}

Value Value::date(Date d) {
  Value v;
  v.data_ = d;
  return v;
}

Value Value::boolean(bool b) {
  Value v;
  v.data_ = b;
  return v;
}

Value Value::structured(Structured components) {
  Value v;
  v.data_ = std::move(components);
  return v;
}

std::optional<SimpleKind> Value::kind() const {
  switch (data_.index()) {
    case 1: return SimpleKind::Char;
    case 2: return SimpleKind::Int;
    case 3: return SimpleKind::Date;
    case 4: return SimpleKind::Boolean;
    default: return std::nullopt;
  }
}

std::string quote_string(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

std::string Value::render() const {
  switch (data_.index()) {
    case 0: return "NULL";
    case 1: return quote_string(as_char());
    case 2: return std::to_string(as_int());
    case 3: return "date'" + as_date().to_string() + "'";
    case 4: return as_bool() ? "TRUE" : "FALSE";
    default: {
      std::string out = "(";
      bool first = true;
      for (const auto& c : as_structured()) {
        if (!first) out += ", ";
        first = false;
        out += c.name + ": " + c.value.render();
      }
      return out + ")";
    }
  }
}

bool operator==(const Component& a, const Component& b) {
  return a.name == b.name && a.value == b.value;
}

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

std::weak_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index())
    return a.data_.index() <=> b.data_.index();
  switch (a.data_.index()) {
    case 0: return std::weak_ordering::equivalent;
    case 1: return a.as_char().compare(b.as_char()) <=> 0;
    case 2: return a.as_int() <=> b.as_int();
    case 3: return a.as_date() <=> b.as_date();
    case 4: return a.as_bool() <=> b.as_bool();
    default: {
      const auto& x = a.as_structured();
      const auto& y = b.as_structured();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (auto c = x[i].name.compare(y[i].name) <=> 0; c != 0) return c;
        if (auto c = x[i].value <=> y[i].value; c != 0) return c;
      }
      return x.size() <=> y.size();
    }
  }
}

std::string Literal::render() const {
  switch (kind) {
    case Kind::String: return quote_string(text);
    case Kind::Number: return text;
    case Kind::Date: return "date'" + text + "'";
    case Kind::Boolean: return text;
    case Kind::Null: return "NULL";
  }
  return text;
}

Value natural_value(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::String: return Value::character(lit.text);
    case Literal::Kind::Number: {
      std::int64_t v = 0;
      const char* b = lit.text.data();
      const char* e = b + lit.text.size();
      auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || ptr != e)
        throw Error(ErrorCode::InvalidLiteral,
                    "number out of range: " + lit.text);
      return Value::integer(v);
    }
    case Literal::Kind::Date: {
      auto d = Date::parse(lit.text);
      if (!d)
        throw Error(ErrorCode::InvalidLiteral,
                    "invalid date (expected DD/MM/YYYY): " + lit.text);
      return Value::date(*d);
    }
    case Literal::Kind::Boolean: return Value::boolean(lit.text == "TRUE");
    case Literal::Kind::Null: return Value::null();
  }
  return Value::null();
}

}  // namespace tgdb
