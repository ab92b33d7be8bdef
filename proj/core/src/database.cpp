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

#include "tgdb/database.hpp"

#include <algorithm>
#include <set>

#include "tgdb/errors.hpp"
#include "tgdb/identifier.hpp"

namespace tgdb {

namespace {

std::string key_text(const Value& v) {
  if (v.kind() == SimpleKind::Char) return v.as_char();
  return v.render();
}

std::optional<NodeRef> resolve_endpoint(const DatabaseState& state,
                                        const std::string& endpoint_type,
                                        const Value& id) {
  if (id.is_null()) return std::nullopt;
  for (const auto& label : state.schema.family(endpoint_type)) {
    const BaseTable* t = state.catalog.find(label);
    if (t && t->find(id)) return NodeRef{label, key_text(id)};
  }
  return std::nullopt;
}

}  // namespace

InstanceView instance_view(const DatabaseState& state) {
  InstanceView view;
  for (const auto& t : state.catalog.tables()) {
    if (!state.schema.find_node_type(t.name())) continue;
    for (const auto& [key, row] : t.rows())
      view.nodes.push_back({NodeRef{t.name(), key_text(key)}, &t, &row});
  }
  for (const auto& t : state.catalog.tables()) {
    const EdgeTypeDecl* decl = state.schema.find_edge_type(t.name());
    if (!decl) continue;
    for (const auto& [key, row] : t.rows()) {
      auto leaving = resolve_endpoint(state, decl->leaving, row[1]);
      auto arriving = resolve_endpoint(state, decl->arriving, row[2]);
      if (!leaving || !arriving) continue;
      view.edges.push_back(
          {EdgeRef{t.name(), key_text(key), *leaving, *arriving}, &t, &row});
    }
  }
  return view;
}

Transaction::Transaction(Database& db, DatabaseState snapshot)
    : db_(&db), working_(std::move(snapshot)) {}

Transaction::Transaction(Transaction&& other) noexcept
    : db_(std::exchange(other.db_, nullptr)),
      working_(std::move(other.working_)),
      diagnostics_(std::move(other.diagnostics_)) {}

Transaction::~Transaction() {
  if (db_) db_->abort(*this);
}

void Transaction::require_open() const {
  if (!db_) throw Error(ErrorCode::TransactionClosed, "transaction is not open");
}

void Transaction::create_table(std::string name, std::vector<Column> columns) {
  require_open();
  working_.catalog.create_table(std::move(name), std::move(columns));
}

void Transaction::insert_row(std::string_view table, Row row) {
  require_open();
  BaseTable& t = working_.catalog.table(table);
  if (row.size() > t.columns().size())
    throw Error(ErrorCode::TypeViolation,
                std::to_string(row.size()) + " values for " +
                    std::to_string(t.columns().size()) + " columns of " +
                    render_identifier(table));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (auto bad = working_.types.check_value(row[i], t.columns()[i].type))
      throw Error(ErrorCode::TypeViolation,
                  render_identifier(table) + "." +
                      render_identifier(t.columns()[i].name) + ": " + *bad);
  }
  t.insert(std::move(row));
}

void Transaction::update_property(std::string_view table, const Value& pk,
                                  std::string_view column, Value v) {
  require_open();
  BaseTable& t = working_.catalog.table(table);
  if (!t.find(pk))
    throw Error(ErrorCode::UnknownRow,
                render_identifier(table) + " has no row " + pk.render());
  auto idx = t.column_index(column);
  if (!idx)
    throw Error(ErrorCode::UnknownColumn,
                render_identifier(table) + " has no column " +
                    render_identifier(column));
  const Column& col = t.columns()[*idx];
  if (col.role == KeyRole::Primary)
    throw Error(ErrorCode::ImmutableKey,
                "primary key " + render_identifier(column) + " cannot be updated");
  if (col.role == KeyRole::Foreign && v.is_null())
    throw Error(ErrorCode::NullKeyViolation,
                render_identifier(table) + " " + pk.render() + "." +
                    render_identifier(column) + " cannot be set to NULL");
  if (auto bad = working_.types.check_value(v, col.type))
    throw Error(ErrorCode::TypeViolation,
                render_identifier(table) + "." + render_identifier(column) +
                    ": " + *bad);
  t.set(pk, *idx, std::move(v));
}

void Transaction::delete_row(std::string_view table, const Value& pk) {
  require_open();
  BaseTable& t = working_.catalog.table(table);
  if (!t.find(pk))
    throw Error(ErrorCode::UnknownRow,
                render_identifier(table) + " has no row " + pk.render());
  auto refs = working_.catalog.referencing(
      table, pk, working_.schema.resolver(working_.catalog));
  if (!refs.empty())
    throw Error(ErrorCode::ReferencedByForeignKey,
                render_identifier(table) + " " + pk.render() +
                    " is still referenced by " + refs.front());
  t.erase(pk);
}

const NodeTypeDecl& Transaction::declare_node_type(
    std::string label, const std::vector<PropertyDef>& properties,
    std::optional<std::string> supertype) {
  require_open();
  working_.names.observe(label);
  return working_.schema.declare_node_type(working_.catalog, std::move(label),
                                           properties, std::move(supertype));
}

const EdgeTypeDecl& Transaction::declare_edge_type(
    std::string label, const std::vector<PropertyDef>& properties,
    std::string leaving, std::string arriving, std::optional<Multiplicity> m) {
  require_open();
  working_.names.observe(label);
  return working_.schema.declare_edge_type(working_.catalog, std::move(label),
                                           properties, std::move(leaving),
                                           std::move(arriving), m);
}

std::vector<SchemaDiagnostic> Transaction::generalize_endpoint(
    std::string_view edge_type, EdgeEnd end, std::string_view new_node_type) {
  require_open();
  auto out = working_.schema.generalize_endpoint(
      working_.catalog, working_.names, edge_type, end, new_node_type);
  diagnostics_.insert(diagnostics_.end(), out.begin(), out.end());
  return out;
}

void Transaction::set_supertype(std::string_view label, std::string_view supertype) {
  require_open();
  working_.schema.set_supertype(label, supertype);
}

void Transaction::set_multiplicity(std::string_view edge_type, Multiplicity m) {
  require_open();
  working_.schema.set_multiplicity(edge_type, m);
}

void Transaction::add_constraint(Constraint c) {
  require_open();
  working_.schema.add_constraint(working_.catalog, std::move(c));
}

void Transaction::add_property(std::string_view label, PropertyDef p) {
  require_open();
  working_.schema.add_property(working_.catalog, label, std::move(p));
}

Transaction Database::begin() {
  if (open_)
    throw Error(ErrorCode::TransactionAlreadyOpen,
                "a transaction is already open");
  open_ = true;
  return Transaction(*this, committed_);
}

void Database::abort(Transaction& tx) {
  if (tx.db_ != this) return;
  tx.db_ = nullptr;
  open_ = false;
}

std::vector<Violation> check_state(const DatabaseState& state) {
  auto out = state.catalog.check_integrity(state.schema.resolver(state.catalog));
  for (auto more : {state.schema.check_family_keys(state.catalog),
                    state.schema.check_multiplicity(state.catalog),
                    state.schema.check_constraints(state.catalog)})
    out.insert(out.end(), more.begin(), more.end());
  return out;
}

CommitResult Database::commit(Transaction& tx) {
  if (tx.db_ != this)
    throw Error(ErrorCode::TransactionClosed, "transaction is not open");
  CommitResult result;
  result.violations = check_state(tx.working_);
  if (!result.ok()) {
    abort(tx);
    return result;
  }

  // Replay the net node/edge changes into the component set.
  InstanceView before = instance_view(committed_);
  InstanceView after = instance_view(tx.working_);
  std::set<NodeRef> old_nodes, new_nodes;
  std::set<EdgeRef> old_edges, new_edges;
  for (const auto& n : before.nodes) old_nodes.insert(n.ref);
  for (const auto& n : after.nodes) new_nodes.insert(n.ref);
  for (const auto& e : before.edges) old_edges.insert(e.ref);
  for (const auto& e : after.edges) new_edges.insert(e.ref);

  GraphSet graphs = graphs_;
  try {
    for (const auto& e : old_edges)
      if (!new_edges.count(e)) graphs.remove_edge(e);
    for (const auto& n : old_nodes)
      if (!new_nodes.count(n)) graphs.remove_node(n);
    for (const auto& n : new_nodes)
      if (!old_nodes.count(n)) graphs.add_node(n);
    for (const auto& e : new_edges)
      if (!old_edges.count(e)) graphs.add_edge(e);
  } catch (const Error& err) {
    result.violations.push_back({ViolationKind::ForeignKeyViolation, err.detail()});
    abort(tx);
    return result;
  }

  result.diagnostics = std::move(tx.diagnostics_);
  committed_ = std::move(tx.working_);
  graphs_ = std::move(graphs);
  tx.db_ = nullptr;
  open_ = false;
  return result;
}

}  // namespace tgdb
