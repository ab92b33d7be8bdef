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

#include "tgdb/executor.hpp"

#include <map>
#include <set>

#include "tgdb/identifier.hpp"
#include "tgdb/parser.hpp"

namespace tgdb {

std::string StatementReport::summary() const {
  if (!committed()) return "rolled back";
  if (result) return std::to_string(result->rows.size()) + " row(s)";
  std::vector<std::string> parts;
  auto add = [&](std::size_t n, const char* what) {
    if (n) parts.push_back(std::to_string(n) + " " + what);
  };
  add(types_created, types_created == 1 ? "type created" : "types created");
  add(nodes_created, nodes_created == 1 ? "node created" : "nodes created");
  add(edges_created, edges_created == 1 ? "edge created" : "edges created");
  add(properties_set, properties_set == 1 ? "property set" : "properties set");
  add(nodes_deleted, nodes_deleted == 1 ? "node deleted" : "nodes deleted");
  add(edges_deleted, edges_deleted == 1 ? "edge deleted" : "edges deleted");
  std::string out = "committed";
  if (matched) parts.insert(parts.begin(), std::to_string(matched) + " row(s) matched");
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : ": ") + parts[i];
  return out;
}

namespace {

constexpr std::string_view kMultiplicityKey = "MULTIPLICITY";

bool is_key_column(std::string_view c) {
  return c == kIdColumn || c == kLeavingColumn || c == kArrivingColumn;
}

struct EntityRef {
  std::string table;
  std::string id;
  bool edge = false;
};

Bounds parse_bounds(const DocValue& v) {
  if (v.kind != DocValue::Kind::Array || v.items.size() != 2)
    throw Error(ErrorCode::SyntaxError, "bounds must be written [min, max]", v.pos);
  auto number = [](const DocValue& item) -> std::optional<std::uint32_t> {
    if (item.kind == DocValue::Kind::Unbounded) return std::nullopt;
    if (item.kind != DocValue::Kind::Scalar || item.scalar.kind != Expr::Kind::Literal ||
        item.scalar.literal.kind != Literal::Kind::Number)
      throw Error(ErrorCode::SyntaxError, "bound must be a number or *", item.pos);
    Value n = natural_value(item.scalar.literal);
    if (n.as_int() < 0 || n.as_int() > 0xffffffffLL)
      throw Error(ErrorCode::SyntaxError, "bound out of range", item.pos);
    return static_cast<std::uint32_t>(n.as_int());
  };
  Bounds b;
  auto lo = number(v.items[0]);
  if (!lo) throw Error(ErrorCode::SyntaxError, "minimum cannot be *", v.items[0].pos);
  b.min = *lo;
  b.max = number(v.items[1]);
  return b;
}

class Executor {
 public:
  Executor(Transaction& tx, StatementReport& report) : tx_(tx), report_(report) {}

  void run(const Statement& s, const BindingRow* env) {
    env_ = env;
    std::visit([&](const auto& node) { run_node(node); }, s.node);
  }

 private:
  DatabaseState& state() { return tx_.state(); }

  void run_node(const CreateType& c) {
    std::vector<PropertyDef> props;
    for (const auto& col : c.columns) {
      auto t = state().types.find(col.type_name);
      if (!t)
        throw Error(ErrorCode::UnknownType,
                    "unknown column type " + render_identifier(col.type_name));
      props.push_back({col.name, *t});
    }
    std::optional<Multiplicity> mult;
    if (c.metadata) {
      for (const auto& e : *c.metadata) {
        if (e.key != kMultiplicityKey)
          throw Error(ErrorCode::SyntaxError,
                      "unknown metadata key " + render_identifier(e.key), e.pos);
        if (c.kind != CreateType::Kind::Edge)
          throw Error(ErrorCode::SyntaxError, "MULTIPLICITY applies to edge types",
                      e.pos);
        mult = parse_multiplicity(e.value);
      }
    }
    switch (c.kind) {
      case CreateType::Kind::Node: tx_.declare_node_type(c.label, props); break;
      case CreateType::Kind::Under:
        tx_.declare_node_type(c.label, props, c.under);
        break;
      case CreateType::Kind::Edge:
        tx_.declare_edge_type(c.label, props, c.leaving, c.arriving, mult);
        break;
    }
    ++report_.types_created;
    for (const auto& k : c.constraints) tx_.add_constraint({k.name, c.label, k.predicate});
  }

  // ---- name resolution --------------------------------------------------

  std::vector<EntityRef> lookup_key(const std::string& id, bool nodes, bool edges) {
    std::vector<EntityRef> out;
    Value key = Value::character(id);
    for (const auto& t : state().catalog.tables()) {
      bool is_edge = state().schema.find_edge_type(t.name()) != nullptr;
      bool is_node = state().schema.find_node_type(t.name()) != nullptr;
      if (!(is_node && nodes) && !(is_edge && edges)) continue;
      if (t.find(key)) out.push_back({t.name(), id, is_edge});
    }
    return out;
  }

  EntityRef resolve_entity(const std::string& name, const SourcePos& pos) {
    if (env_) {
      if (const Bound* b = env_->find(name)) {
        if (const auto* n = std::get_if<NodeRef>(b)) return {n->type, n->id, false};
        if (const auto* e = std::get_if<EdgeRef>(b)) return {e->type, e->id, true};
        throw Error(ErrorCode::UnknownIdentifier,
                    render_identifier(name) + " is bound to a value, not a node or edge",
                    pos);
      }
    }
    auto found = lookup_key(name, true, true);
    if (found.empty())
      throw Error(ErrorCode::UnknownIdentifier,
                  "no node or edge has key " + quote_string(name), pos);
    if (found.size() > 1)
      throw Error(ErrorCode::AmbiguousReference,
                  "key " + quote_string(name) + " occurs in " +
                      render_identifier(found[0].table) + " and " +
                      render_identifier(found[1].table),
                  pos);
    return found[0];
  }

  NodeRef resolve_node(const std::string& name, const SourcePos& pos) {
    if (env_) {
      if (const Bound* b = env_->find(name)) {
        if (const auto* n = std::get_if<NodeRef>(b)) return *n;
        throw Error(ErrorCode::UnknownNode,
                    render_identifier(name) + " is not bound to a node", pos);
      }
    }
    auto found = lookup_key(name, true, false);
    if (found.empty())
      throw Error(ErrorCode::UnknownNode, "no node has key " + quote_string(name), pos);
    if (found.size() > 1)
      throw Error(ErrorCode::AmbiguousReference,
                  "node key " + quote_string(name) + " occurs in " +
                      render_identifier(found[0].table) + " and " +
                      render_identifier(found[1].table),
                  pos);
    return {found[0].table, name};
  }

  Value evaluate_value(const Expr& e) {
    if (e.kind == Expr::Kind::Literal) return natural_value(e.literal);
    ExprScope scope;
    scope.identifier = [&](const std::string& name, const SourcePos& pos) -> Value {
      if (env_) {
        if (const Bound* b = env_->find(name)) {
          if (const auto* v = std::get_if<Value>(b)) return *v;
        }
      }
      return Value::character(resolve_entity(name, pos).id);
    };
    scope.property = [&](const std::string& var, const std::string& prop,
                         const SourcePos& pos) -> Value {
      EntityRef ent = resolve_entity(var, pos);
      const BaseTable& t = state().catalog.table(ent.table);
      const Row* row = t.find(Value::character(ent.id));
      if (!row)
        throw Error(ErrorCode::UnknownRow,
                    render_identifier(ent.table) + " has no row " + quote_string(ent.id),
                    pos);
      auto idx = t.column_index(prop);
      if (!idx)
        throw Error(ErrorCode::UnknownColumn,
                    render_identifier(ent.table) + " has no column " +
                        render_identifier(prop),
                    pos);
      return *idx < row->size() ? (*row)[*idx] : Value::null();
    };
    return evaluate(e, scope);
  }

  // ---- properties -------------------------------------------------------

  using Props = std::vector<std::pair<std::string, Value>>;

  Props evaluate_doc(const std::optional<Doc>& doc, bool edge,
                     std::optional<Multiplicity>* mult) {
    Props out;
    if (!doc) return out;
    for (const auto& e : *doc) {
      if (e.key == kMultiplicityKey) {
        if (!edge)
          throw Error(ErrorCode::SyntaxError, "MULTIPLICITY applies to edges", e.pos);
        *mult = parse_multiplicity(e.value);
        continue;
      }
      if (is_key_column(e.key))
        throw Error(ErrorCode::SyntaxError,
                    render_identifier(e.key) + " is a key column and cannot be a property",
                    e.pos);
      if (e.value.kind != DocValue::Kind::Scalar)
        throw Error(ErrorCode::SyntaxError, "property values must be scalar", e.value.pos);
      out.emplace_back(e.key, evaluate_value(e.value.scalar));
    }
    return out;
  }

  void widen(const std::string& type, const Props& props) {
    for (const auto& [name, v] : props) {
      if (v.is_null()) continue;
      if (state().catalog.table(type).column_index(name)) continue;
      auto kind = v.kind();
      if (!kind)
        throw Error(ErrorCode::TypeViolation,
                    "cannot infer a column type for " + render_identifier(name));
      tx_.add_property(type, {name, TypeRegistry::simple(*kind)});
    }
  }

  std::vector<PropertyDef> property_defs(const Props& props) {
    std::vector<PropertyDef> out;
    for (const auto& [name, v] : props) {
      if (v.is_null()) continue;
      auto kind = v.kind();
      if (!kind)
        throw Error(ErrorCode::TypeViolation,
                    "cannot infer a column type for " + render_identifier(name));
      out.push_back({name, TypeRegistry::simple(*kind)});
    }
    return out;
  }

  Value coerce(const BaseTable& t, std::size_t idx, const Value& v) {
    auto r = state().types.coerce_value(v, t.columns()[idx].type);
    if (auto* bad = std::get_if<std::string>(&r))
      throw Error(ErrorCode::TypeViolation, render_identifier(t.name()) + "." +
                                                render_identifier(t.columns()[idx].name) +
                                                ": " + *bad);
    return std::get<Value>(std::move(r));
  }

  void fill(Row& row, const BaseTable& t, const Props& props) {
    for (const auto& [name, v] : props) {
      if (v.is_null()) continue;
      auto idx = t.column_index(name);
      row[*idx] = coerce(t, *idx, v);
    }
  }

  void observe_key(const std::string& key) {
    if (is_generated_name(key)) state().names.observe(key);
  }

  // ---- graph CREATE -----------------------------------------------------

  struct NodeDef {
    const NewG* g;
    std::string type;
    std::optional<std::string> super;
    Props props;
  };

  struct Endpoint {
    int def = -1;
    NodeRef existing;
    const NewG* g = nullptr;
  };

  struct EdgeDef {
    const NewG* g;
    std::string type;
    Endpoint leaving;
    Endpoint arriving;
    Props props;
    std::optional<Multiplicity> mult;
  };

  void run_node(const CreateGraph& c) {
    std::vector<NodeDef> nodes;
    std::vector<EdgeDef> edges;
    std::map<std::string, int> defined;
    std::vector<std::vector<Endpoint>> path_nodes;

    for (const auto& path : c.paths) {
      auto& slots = path_nodes.emplace_back();
      for (const auto& item : path.nodes) {
        const NewG& g = item.node;
        Endpoint ep;
        ep.g = &g;
        if (!g.labels.empty()) {
          if (!g.id.empty() && !defined.emplace(g.id, static_cast<int>(nodes.size())).second)
            throw Error(ErrorCode::DuplicateDefinition,
                        "node " + render_identifier(g.id) + " is defined twice", g.pos);
          NodeDef d{&g, g.labels[0], {}, evaluate_doc(g.doc, false, nullptr)};
          if (g.labels.size() > 1) d.super = g.labels[1];
          ep.def = static_cast<int>(nodes.size());
          nodes.push_back(std::move(d));
        } else if (g.id.empty()) {
          throw Error(ErrorCode::SyntaxError, "a new node needs a type label", g.pos);
        } else if (g.doc) {
          throw Error(ErrorCode::SyntaxError,
                      "a node reference cannot carry properties; add a type label to "
                      "define a node",
                      g.pos);
        }
        slots.push_back(ep);
      }
    }
    // References may name nodes defined later in the same statement.
    for (auto& slots : path_nodes)
      for (auto& ep : slots) {
        if (ep.def >= 0) continue;
        auto it = defined.find(ep.g->id);
        if (it != defined.end())
          ep.def = it->second;
        else
          ep.existing = resolve_node(ep.g->id, ep.g->pos);
      }
    for (std::size_t p = 0; p < c.paths.size(); ++p) {
      const Path& path = c.paths[p];
      for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const NewG& g = path.edges[i].edge;
        if (g.labels.size() != 1)
          throw Error(ErrorCode::SyntaxError, "a new edge needs exactly one type label",
                      g.pos);
        EdgeDef d{&g, g.labels[0], {}, {}, {}, {}};
        d.props = evaluate_doc(g.doc, true, &d.mult);
        const Endpoint& left = path_nodes[p][i];
        const Endpoint& right = path_nodes[p][i + 1];
        bool rightward = path.edges[i].direction == Direction::Rightward;
        d.leaving = rightward ? left : right;
        d.arriving = rightward ? right : left;
        edges.push_back(std::move(d));
      }
    }

    // Schema first, so generated type names precede generated keys.
    for (const auto& d : nodes) ensure_node_type(d);
    auto endpoint_type = [&](const Endpoint& ep) {
      return ep.def >= 0 ? nodes[ep.def].type : ep.existing.type;
    };
    for (const auto& d : edges)
      ensure_edge_type(d, endpoint_type(d.leaving), endpoint_type(d.arriving));

    std::vector<std::string> keys;
    for (const auto& d : nodes) {
      std::string key = d.g->id.empty() ? tx_.generate_name() : d.g->id;
      observe_key(key);
      const BaseTable& t = state().catalog.table(d.type);
      Row row(t.columns().size());
      row[0] = Value::character(key);
      fill(row, t, d.props);
      tx_.insert_row(d.type, std::move(row));
      keys.push_back(std::move(key));
      ++report_.nodes_created;
    }
    auto endpoint_key = [&](const Endpoint& ep) {
      return ep.def >= 0 ? keys[ep.def] : ep.existing.id;
    };
    for (const auto& d : edges) {
      std::string key = d.g->id.empty() ? tx_.generate_name() : d.g->id;
      observe_key(key);
      const BaseTable& t = state().catalog.table(d.type);
      Row row(t.columns().size());
      row[0] = Value::character(key);
      row[1] = Value::character(endpoint_key(d.leaving));
      row[2] = Value::character(endpoint_key(d.arriving));
      fill(row, t, d.props);
      tx_.insert_row(d.type, std::move(row));
      ++report_.edges_created;
    }
  }

  void ensure_node_type(const NodeDef& d) {
    const Schema& schema = state().schema;
    if (schema.find_edge_type(d.type))
      throw Error(ErrorCode::SchemaConflict,
                  render_identifier(d.type) + " is an edge type, not a node type",
                  d.g->pos);
    if (d.super && !schema.has_type(*d.super)) tx_.declare_node_type(*d.super, {});
    const NodeTypeDecl* decl = schema.find_node_type(d.type);
    if (!decl) {
      tx_.declare_node_type(d.type, property_defs(d.props), d.super);
      return;
    }
    widen(d.type, d.props);
    if (d.super && decl->supertype != d.super) tx_.set_supertype(d.type, *d.super);
  }

  void ensure_edge_type(const EdgeDef& d, const std::string& leaving,
                        const std::string& arriving) {
    const Schema& schema = state().schema;
    if (schema.find_node_type(d.type))
      throw Error(ErrorCode::SchemaConflict,
                  render_identifier(d.type) + " is a node type, not an edge type",
                  d.g->pos);
    if (!schema.find_edge_type(d.type)) {
      tx_.declare_edge_type(d.type, property_defs(d.props), leaving, arriving, d.mult);
      return;
    }
    tx_.generalize_endpoint(d.type, EdgeEnd::Leaving, leaving);
    tx_.generalize_endpoint(d.type, EdgeEnd::Arriving, arriving);
    widen(d.type, d.props);
    if (d.mult && schema.find_edge_type(d.type)->multiplicity != *d.mult)
      tx_.set_multiplicity(d.type, *d.mult);
  }

  // ---- SET / DELETE -----------------------------------------------------

  void run_node(const SetStmt& s) {
    for (const auto& a : s.assignments) {
      EntityRef ent = resolve_entity(a.target, a.pos);
      Value v = evaluate_value(a.value);
      if (!state().catalog.table(ent.table).column_index(a.property)) {
        if (v.is_null()) continue;
        widen(ent.table, {{a.property, v}});
      }
      const BaseTable& t = state().catalog.table(ent.table);
      std::size_t idx = *t.column_index(a.property);
      Value stored = v.is_null() || t.columns()[idx].role == KeyRole::Primary
                         ? v
                         : coerce(t, idx, v);
      tx_.update_property(ent.table, Value::character(ent.id), a.property,
                          std::move(stored));
      ++report_.properties_set;
    }
  }

  void run_node(const DeleteStmt& d) {
    for (std::size_t i = 0; i < d.targets.size(); ++i) {
      EntityRef ent;
      if (env_) {
        ent = resolve_entity(d.targets[i], d.positions[i]);
        if (!deleted_.insert({ent.table, ent.id}).second) continue;
      } else {
        ent = resolve_entity(d.targets[i], d.positions[i]);
      }
      tx_.delete_row(ent.table, Value::character(ent.id));
      ++(ent.edge ? report_.edges_deleted : report_.nodes_deleted);
    }
  }

  void run_node(const Match& m) {
    std::vector<BindingRow> rows;
    for_each_binding(m.paths, m.where, state(),
                     [&](const BindingRow& r) { rows.push_back(r); });
    report_.matched = rows.size();
    for (const auto& r : rows)
      for (const auto& s : m.then) {
        const BindingRow* saved = env_;
        run(s, &r);
        env_ = saved;
      }
  }

  Transaction& tx_;
  StatementReport& report_;
  const BindingRow* env_ = nullptr;
  std::set<std::pair<std::string, std::string>> deleted_;
};

}  // namespace

Multiplicity parse_multiplicity(const DocValue& value) {
  if (value.kind != DocValue::Kind::Object)
    throw Error(ErrorCode::SyntaxError,
                "MULTIPLICITY must be a doc {LEAVING: [min, max], ARRIVING: [min, max]}",
                value.pos);
  Multiplicity m;
  for (const auto& e : value.entries) {
    if (e.key == kLeavingColumn)
      m.leaving = parse_bounds(e.value);
    else if (e.key == kArrivingColumn)
      m.arriving = parse_bounds(e.value);
    else
      throw Error(ErrorCode::SyntaxError,
                  "expected LEAVING or ARRIVING, found " + render_identifier(e.key), e.pos);
  }
  return m;
}

StatementReport execute(Database& db, const Statement& statement) {
  StatementReport report;
  if (const auto* m = std::get_if<Match>(&statement.node); m && m->then.empty()) {
    report.result = evaluate(m->paths, m->where, db.state());
    return report;
  }
  Transaction tx = db.begin();
  Executor(tx, report).run(statement, nullptr);
  CommitResult r = db.commit(tx);
  report.violations = std::move(r.violations);
  report.diagnostics = std::move(r.diagnostics);
  return report;
}

}  // namespace tgdb
