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

#include "tgdb/identifier.hpp"

#include <array>
#include <cctype>

namespace tgdb {

namespace {

constexpr std::array<std::string_view, 21> kReserved = {
    "MATCH",   "CREATE", "TYPE",  "UNDER", "WHERE",      "SET",   "DELETE",
    "NODETYPE", "EDGETYPE", "AS",  "NULL",  "DATE",      "ORDER", "NAME",
    "AND",     "OR",     "NOT",   "TRUE",  "FALSE",      "CONSTRAINT", "CHECK"};

bool is_plain_word(std::string_view s) {
  if (s.empty()) return false;
  unsigned char first = static_cast<unsigned char>(s[0]);
  if (!(std::isupper(first) || first == '_')) return false;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!(std::isupper(c) || std::isdigit(c) || c == '_')) return false;
  }
  return true;
}

}  // namespace

bool is_reserved_word(std::string_view upper) {
  for (auto w : kReserved)
    if (w == upper) return true;
  return false;
}

bool is_generated_name(std::string_view name) {
  if (name.size() < 2 || name[0] != '&') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

std::string render_identifier(std::string_view name) {
  if (is_generated_name(name)) return std::string(name);
  if (is_plain_word(name) && !is_reserved_word(name)) return std::string(name);
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace tgdb
