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

#include "tgdb/relational.hpp"

#include <algorithm>

#include "tgdb/errors.hpp"

namespace tgdb {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TypeViolation: return "TypeViolation";
    case ViolationKind::DuplicateKey: return "DuplicateKey";
    case ViolationKind::ForeignKeyViolation: return "ForeignKeyViolation";
    case ViolationKind::NullKeyViolation: return "NullKeyViolation";
    case ViolationKind::MultiplicityViolation: return "MultiplicityViolation";
    case ViolationKind::ConstraintViolation: return "ConstraintViolation";
  }
  return "?";
}

BaseTable::BaseTable(std::string name, std::vector<Column> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

std::optional<std::size_t> BaseTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  return std::nullopt;
}

const Row* BaseTable::find(const Value& pk) const {
  auto it = rows_.find(pk);
  return it == rows_.end() ? nullptr : &it->second;
}

Row* BaseTable::find(const Value& pk) {
  auto it = rows_.find(pk);
  return it == rows_.end() ? nullptr : &it->second;
}

void BaseTable::insert(Row row) {
  row.resize(columns_.size());
  Value key = row[0];
  rows_.emplace(std::move(key), std::move(row));
}

void BaseTable::set(const Value& pk, std::size_t column, Value v) {
  auto it = rows_.find(pk);
  if (it == rows_.end())
    throw Error(ErrorCode::UnknownRow, name_ + " has no row " + pk.render());
  if (column == 0) {
    Row row = std::move(it->second);
    rows_.erase(it);
    row[0] = v;
    rows_.emplace(std::move(v), std::move(row));
    return;
  }
  it->second[column] = std::move(v);
}

bool BaseTable::erase(const Value& pk) {
  auto it = rows_.find(pk);
  if (it == rows_.end()) return false;
  rows_.erase(it);
  return true;
}

void BaseTable::add_column(Column c) {
  columns_.push_back(std::move(c));
  for (auto& [key, row] : rows_) row.resize(columns_.size());
}

void BaseTable::retarget(std::size_t column, std::string target) {
  columns_.at(column).references = std::move(target);
}

BaseTable& Catalog::create_table(std::string name, std::vector<Column> columns) {
  if (find(name))
    throw Error(ErrorCode::DuplicateTableName, "table already exists: " + name);
  if (columns.empty() || columns[0].role != KeyRole::Primary)
    throw Error(ErrorCode::SchemaConflict,
                "table " + name + " must start with its primary key column");
  for (std::size_t i = 1; i < columns.size(); ++i) {
    if (columns[i].role == KeyRole::Primary)
      throw Error(ErrorCode::SchemaConflict,
                  "table " + name + " has more than one primary key column");
  }
  tables_.emplace_back(std::move(name), std::move(columns));
  return tables_.back();
}

const BaseTable* Catalog::find(std::string_view name) const {
  for (const auto& t : tables_)
    if (t.name() == name) return &t;
  return nullptr;
}

BaseTable* Catalog::find(std::string_view name) {
  for (auto& t : tables_)
    if (t.name() == name) return &t;
  return nullptr;
}

const BaseTable& Catalog::table(std::string_view name) const {
  if (const auto* t = find(name)) return *t;
  throw Error(ErrorCode::UnknownTable, "no table " + std::string(name));
}

BaseTable& Catalog::table(std::string_view name) {
  if (auto* t = find(name)) return *t;
  throw Error(ErrorCode::UnknownTable, "no table " + std::string(name));
}

namespace {

std::vector<const BaseTable*> resolve(const Catalog& catalog,
                                      const FamilyResolver& family,
                                      std::string_view target) {
  if (family) return family(target);
  if (const auto* t = catalog.find(target)) return {t};
  return {};
}

}  // namespace

std::vector<Violation> Catalog::check_integrity(const FamilyResolver& family) const {
  std::vector<Violation> out;
  for (const auto& t : tables_) {
    const Value* prev = nullptr;
    for (const auto& [key, row] : t.rows()) {
      if (key.is_null()) {
        out.push_back({ViolationKind::NullKeyViolation,
                       t.name() + " has a row with a null primary key"});
      } else if (prev && *prev == key) {
        out.push_back({ViolationKind::DuplicateKey,
                       t.name() + " has duplicate primary key " + key.render()});
      }
      prev = &key;
    }
    for (std::size_t c = 0; c < t.columns().size(); ++c) {
      const Column& col = t.columns()[c];
      if (col.role != KeyRole::Foreign) continue;
      auto targets = resolve(*this, family, col.references);
      for (const auto& [key, row] : t.rows()) {
        const Value& v = row[c];
        if (v.is_null()) {
          out.push_back({ViolationKind::NullKeyViolation,
                         t.name() + " " + key.render() + "." + col.name +
                             " is null"});
          continue;
        }
        bool found = std::any_of(targets.begin(), targets.end(),
                                 [&](const BaseTable* x) { return x->find(v); });
        if (!found)
          out.push_back({ViolationKind::ForeignKeyViolation,
                         t.name() + " " + key.render() + "." + col.name + " = " +
                             v.render() + " does not reference a row of " +
                             col.references});
      }
    }
  }
  return out;
}

std::vector<std::string> Catalog::referencing(std::string_view table,
                                              const Value& pk,
                                              const FamilyResolver& family) const {
  std::vector<std::string> out;
  for (const auto& t : tables_) {
    for (std::size_t c = 0; c < t.columns().size(); ++c) {
      const Column& col = t.columns()[c];
      if (col.role != KeyRole::Foreign) continue;
      auto targets = resolve(*this, family, col.references);
      bool covers = std::any_of(targets.begin(), targets.end(),
                                [&](const BaseTable* x) { return x->name() == table; });
      if (!covers) continue;
      for (const auto& [key, row] : t.rows())
        if (row[c] == pk) out.push_back(t.name() + " " + key.render());
    }
  }
  return out;
}

}  // namespace tgdb
