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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgdb/types.hpp"
#include "tgdb/values.hpp"

namespace tgdb {

enum class KeyRole { Primary, Foreign, Plain };

struct Column {
  std::string name;
  TypeId type;
  KeyRole role = KeyRole::Plain;
  // Target table of a FOREIGN column.
  std::string references;

  static Column primary(std::string name, TypeId type) {
    return {std::move(name), type, KeyRole::Primary, {}};
  }
  static Column foreign(std::string name, TypeId type, std::string target) {
    return {std::move(name), type, KeyRole::Foreign, std::move(target)};
  }
  static Column plain(std::string name, TypeId type) {
    return {std::move(name), type, KeyRole::Plain, {}};
  }
};

enum class ViolationKind {
  TypeViolation,
  DuplicateKey,
  ForeignKeyViolation,
  NullKeyViolation,
  MultiplicityViolation,
  ConstraintViolation,
};

std::string_view to_string(ViolationKind kind);

// A reason a transaction cannot commit.
struct Violation {
  ViolationKind kind;
  std::string message;
};

// Rows are kept ordered by primary key. A multimap lets a duplicate key be
// staged so that it is reported, like the other key checks, at commit.
using RowMap = std::multimap<Value, Row>;

// A base table with a fixed, observable column order. The primary key column
// is always at position 0.
class BaseTable {
 public:
  BaseTable(std::string name, std::vector<Column> columns);

  const std::string& name() const { return name_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::optional<std::size_t> column_index(std::string_view name) const;
  const RowMap& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }

  const Row* find(const Value& pk) const;
  Row* find(const Value& pk);

  void insert(Row row);
  // Replaces one value. An update of the primary key re-files the row.
  void set(const Value& pk, std::size_t column, Value v);
  bool erase(const Value& pk);

  void add_column(Column c);
  void retarget(std::size_t column, std::string target);

 private:
  std::string name_;
  std::vector<Column> columns_;
  RowMap rows_;
};

// Resolves a FOREIGN target to the tables whose primary keys satisfy it.
// A target naming a supertype is satisfied by any table in its family.
using FamilyResolver =
    std::function<std::vector<const BaseTable*>(std::string_view target)>;

// All base tables in creation order.
class Catalog {
 public:
  // Throws DuplicateTableName; requires exactly one PRIMARY column at
  // position 0.
  BaseTable& create_table(std::string name, std::vector<Column> columns);

  const BaseTable* find(std::string_view name) const;
  BaseTable* find(std::string_view name);
  // Throws UnknownTable.
  const BaseTable& table(std::string_view name) const;
  BaseTable& table(std::string_view name);

  const std::vector<BaseTable>& tables() const { return tables_; }
  bool empty() const { return tables_.empty(); }

  // Primary keys non-null and unique per table, foreign keys non-null and
  // resolvable through the family resolver (identity when none is given).
  std::vector<Violation> check_integrity(const FamilyResolver& family = {}) const;

  // Rows in any table holding a FOREIGN reference that resolves to
  // (table, pk). Used to block deletes of referenced rows.
  std::vector<std::string> referencing(std::string_view table, const Value& pk,
                                       const FamilyResolver& family = {}) const;

 private:
  std::vector<BaseTable> tables_;
};

}  // namespace tgdb
