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

#include <string>
#include <string_view>
#include <vector>

#include "tgdb/graph_set.hpp"
#include "tgdb/relational.hpp"
#include "tgdb/schema.hpp"
#include "tgdb/types.hpp"

namespace tgdb {

// Everything a statement may change. A transaction works on a private copy
// and commit swaps it in, so an abort leaves the committed state untouched.
struct DatabaseState {
  TypeRegistry types;
  Catalog catalog;
  Schema schema;
  NameCounter names;
};

// Node and edge rows with their endpoints resolved through the supertype
// families. Pointers stay valid while the state is not modified.
struct InstanceNode {
  NodeRef ref;
  const BaseTable* table = nullptr;
  const Row* row = nullptr;
};

struct InstanceEdge {
  EdgeRef ref;
  const BaseTable* table = nullptr;
  const Row* row = nullptr;
};

struct InstanceView {
  std::vector<InstanceNode> nodes;
  std::vector<InstanceEdge> edges;
};

// Tables in catalog order, rows in primary-key order. Edges whose endpoints
// do not resolve (possible only before commit checks) are left out.
InstanceView instance_view(const DatabaseState& state);

struct CommitResult {
  std::vector<Violation> violations;
  std::vector<SchemaDiagnostic> diagnostics;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

class Database;

// One statement's worth of staged changes. Type checks run as each change
// is staged; key, foreign-key, multiplicity and constraint checks run in
// Database::commit. Destroying an open transaction aborts it.
class Transaction {
 public:
  Transaction(Transaction&& other) noexcept;
  Transaction& operator=(Transaction&&) = delete;
  Transaction(const Transaction&) = delete;
  ~Transaction();

  bool is_open() const { return db_ != nullptr; }
  const DatabaseState& state() const { return working_; }
  DatabaseState& state() { return working_; }

  void create_table(std::string name, std::vector<Column> columns);
  // Throws UnknownTable or TypeViolation. Missing trailing values are null.
  void insert_row(std::string_view table, Row row);
  // Throws UnknownRow, UnknownColumn, TypeViolation, NullKeyViolation or
  // ImmutableKey. A null value removes the property.
  void update_property(std::string_view table, const Value& pk,
                       std::string_view column, Value v);
  // Throws UnknownRow or ReferencedByForeignKey.
  void delete_row(std::string_view table, const Value& pk);

  const NodeTypeDecl& declare_node_type(std::string label,
                                        const std::vector<PropertyDef>& properties,
                                        std::optional<std::string> supertype = {});
  const EdgeTypeDecl& declare_edge_type(std::string label,
                                        const std::vector<PropertyDef>& properties,
                                        std::string leaving, std::string arriving,
                                        std::optional<Multiplicity> m = {});
  std::vector<SchemaDiagnostic> generalize_endpoint(std::string_view edge_type,
                                                    EdgeEnd end,
                                                    std::string_view new_node_type);
  void set_supertype(std::string_view label, std::string_view supertype);
  void set_multiplicity(std::string_view edge_type, Multiplicity m);
  void add_constraint(Constraint c);
  void add_property(std::string_view label, PropertyDef p);

  std::string generate_name() { return working_.names.next(); }
  void note(SchemaDiagnostic d) { diagnostics_.push_back(std::move(d)); }
  const std::vector<SchemaDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  friend class Database;
  Transaction(Database& db, DatabaseState snapshot);
  void require_open() const;

  Database* db_;
  DatabaseState working_;
  std::vector<SchemaDiagnostic> diagnostics_;
};

// Single-writer engine state: at most one open transaction at a time.
class Database {
 public:
  Database() = default;
  Database(const Database&) = delete;
  Database& operator=(const Database&) = delete;

  // Throws TransactionAlreadyOpen.
  Transaction begin();
  // Runs every integrity check against the transaction's view. On success
  // the view becomes the committed state and the graph set is updated;
  // otherwise nothing changes. Either way the transaction is closed.
  CommitResult commit(Transaction& tx);
  void abort(Transaction& tx);

  bool in_transaction() const { return open_; }
  const DatabaseState& state() const { return committed_; }
  const GraphSet& graphs() const { return graphs_; }

 private:
  friend class Transaction;

  DatabaseState committed_;
  GraphSet graphs_;
  bool open_ = false;
};

// All commit-time checks for a state, in the order commit runs them.
std::vector<Violation> check_state(const DatabaseState& state);

}  // namespace tgdb
