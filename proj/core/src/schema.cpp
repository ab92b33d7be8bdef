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

#include "tgdb/schema.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tgdb/errors.hpp"
#include "tgdb/identifier.hpp"

namespace tgdb {

std::string Bounds::to_string() const {
  return "[" + std::to_string(min) + ".." +
         (max ? std::to_string(*max) : std::string("*")) + "]";
}

std::string_view to_string(EdgeEnd end) {
  return end == EdgeEnd::Leaving ? "leaving" : "arriving";
}

std::string_view to_string(SchemaDiagnosticKind kind) {
  switch (kind) {
    case SchemaDiagnosticKind::GeneralizationPerformed:
      return "GeneralizationPerformed";
    case SchemaDiagnosticKind::TypeRetargeted: return "TypeRetargeted";
    case SchemaDiagnosticKind::NewAnonymousType: return "NewAnonymousType";
  }
  return "?";
}

std::string NameCounter::next() { return "&" + std::to_string(next_++); }

void NameCounter::observe(std::string_view name) {
  if (!is_generated_name(name)) return;
  std::uint64_t n = std::stoull(std::string(name.substr(1)));
  next_ = std::max(next_, n + 1);
}

std::string render_type_name(const TypeRegistry& types, TypeId id) {
  if (types.is_builtin(id)) return std::string(to_string(*types.base_kind(id)));
  return render_identifier(types.get(id).name);
}

NodeTypeDecl* Schema::node_type(std::string_view label) {
  for (auto& n : nodes_)
    if (n.label == label) return &n;
  return nullptr;
}

EdgeTypeDecl* Schema::edge_type(std::string_view label) {
  for (auto& e : edges_)
    if (e.label == label) return &e;
  return nullptr;
}

const NodeTypeDecl* Schema::find_node_type(std::string_view label) const {
  for (const auto& n : nodes_)
    if (n.label == label) return &n;
  return nullptr;
}

const EdgeTypeDecl* Schema::find_edge_type(std::string_view label) const {
  for (const auto& e : edges_)
    if (e.label == label) return &e;
  return nullptr;
}

void Schema::check_label_free(const Catalog& catalog,
                              std::string_view label) const {
  if (has_type(label) || catalog.find(label))
    throw Error(ErrorCode::DuplicateTypeLabel,
                "type already declared: " + render_identifier(label));
}

namespace {

std::vector<Column> with_properties(std::vector<Column> keys,
                                    const std::vector<PropertyDef>& properties) {
  for (const auto& p : properties) {
    bool clash = std::any_of(keys.begin(), keys.end(),
                             [&](const Column& c) { return c.name == p.name; });
    if (clash)
      throw Error(ErrorCode::SchemaConflict,
                  "duplicate column " + render_identifier(p.name));
    keys.push_back(Column::plain(p.name, p.type));
  }
  return keys;
}

}  // namespace

const NodeTypeDecl& Schema::declare_node_type(Catalog& catalog, std::string label,
                                              const std::vector<PropertyDef>& properties,
                                              std::optional<std::string> supertype) {
  check_label_free(catalog, label);
  if (supertype && !find_node_type(*supertype))
    throw Error(ErrorCode::UnknownSupertype,
                "no node type " + render_identifier(*supertype));
  auto columns = with_properties(
      {Column::primary(std::string(kIdColumn), TypeRegistry::kChar)}, properties);
  catalog.create_table(label, std::move(columns));
  bool anonymous = is_generated_name(label);
  nodes_.push_back({std::move(label), std::move(supertype), anonymous});
  return nodes_.back();
}

const EdgeTypeDecl& Schema::declare_edge_type(Catalog& catalog, std::string label,
                                              const std::vector<PropertyDef>& properties,
                                              std::string leaving, std::string arriving,
                                              std::optional<Multiplicity> multiplicity) {
  check_label_free(catalog, label);
  for (const auto* end : {&leaving, &arriving}) {
    if (!find_node_type(*end))
      throw Error(ErrorCode::UnknownEndpointType,
                  "edge type " + render_identifier(label) +
                      " names unknown node type " + render_identifier(*end));
  }
  auto columns = with_properties(
      {Column::primary(std::string(kIdColumn), TypeRegistry::kChar),
       Column::foreign(std::string(kLeavingColumn), TypeRegistry::kChar, leaving),
       Column::foreign(std::string(kArrivingColumn), TypeRegistry::kChar, arriving)},
      properties);
  catalog.create_table(label, std::move(columns));
  edges_.push_back({std::move(label), std::move(leaving), std::move(arriving),
                    multiplicity.value_or(Multiplicity{})});
  return edges_.back();
}

std::vector<std::string> Schema::ancestors(std::string_view label) const {
  std::vector<std::string> out;
  const NodeTypeDecl* n = find_node_type(label);
  while (n) {
    out.push_back(n->label);
    if (!n->supertype) break;
    n = find_node_type(*n->supertype);
  }
  return out;
}

std::vector<std::string> Schema::subtypes(std::string_view label) const {
  std::vector<std::string> out;
  for (const auto& n : nodes_)
    if (n.supertype && *n.supertype == label) out.push_back(n.label);
  return out;
}

std::vector<std::string> Schema::family(std::string_view label) const {
  std::vector<std::string> out{std::string(label)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto& s : subtypes(out[i])) out.push_back(std::move(s));
  return out;
}

bool Schema::conforms(std::string_view instance, std::string_view declared) const {
  for (auto l : {instance, declared}) {
    if (!has_type(l))
      throw Error(ErrorCode::UnknownTypeLabel, "no type " + render_identifier(l));
  }
  if (instance == declared) return true;
  if (!find_node_type(instance)) return false;
  auto chain = ancestors(instance);
  return std::find(chain.begin(), chain.end(), declared) != chain.end();
}

void Schema::set_supertype(std::string_view label, std::string_view supertype) {
  NodeTypeDecl* n = node_type(label);
  if (!n)
    throw Error(ErrorCode::UnknownTypeLabel,
                "no node type " + render_identifier(label));
  if (!find_node_type(supertype))
    throw Error(ErrorCode::UnknownSupertype,
                "no node type " + render_identifier(supertype));
  if (n->supertype && *n->supertype == supertype) return;
  if (n->supertype)
    throw Error(ErrorCode::SchemaConflict,
                render_identifier(label) + " is already UNDER " +
                    render_identifier(*n->supertype));
  auto chain = ancestors(supertype);
  if (std::find(chain.begin(), chain.end(), label) != chain.end())
    throw Error(ErrorCode::CyclicSupertype,
                render_identifier(label) + " UNDER " +
                    render_identifier(supertype) + " would form a cycle");
  n->supertype = std::string(supertype);
}

void Schema::set_multiplicity(std::string_view edge, Multiplicity m) {
  EdgeTypeDecl* e = edge_type(edge);
  if (!e)
    throw Error(ErrorCode::UnknownTypeLabel,
                "no edge type " + render_identifier(edge));
  for (const Bounds* b : {&m.leaving, &m.arriving}) {
    if (b->max && (*b->max == 0 || *b->max < b->min))
      throw Error(ErrorCode::SchemaConflict,
                  "invalid multiplicity " + b->to_string() + " for " +
                      render_identifier(edge));
  }
  e->multiplicity = m;
}

void Schema::add_constraint(const Catalog& catalog, Constraint c) {
  if (!has_type(c.target))
    throw Error(ErrorCode::UnknownTypeLabel,
                "no type " + render_identifier(c.target));
  const BaseTable& t = catalog.table(c.target);
  std::vector<std::string> refs;
  collect_references(c.predicate, refs);
  for (const auto& r : refs) {
    if (!t.column_index(r))
      throw Error(ErrorCode::UnknownColumn,
                  "constraint " + render_identifier(c.name) + " refers to " +
                      render_identifier(r) + ", not a column of " +
                      render_identifier(c.target));
  }
  constraints_.push_back(std::move(c));
}

void Schema::add_property(Catalog& catalog, std::string_view label, PropertyDef p) {
  if (!has_type(label))
    throw Error(ErrorCode::UnknownTypeLabel, "no type " + render_identifier(label));
  BaseTable& t = catalog.table(label);
  if (t.column_index(p.name))
    throw Error(ErrorCode::SchemaConflict,
                render_identifier(label) + " already has column " +
                    render_identifier(p.name));
  t.add_column(Column::plain(std::move(p.name), p.type));
}

std::vector<PropertyDef> Schema::properties(const Catalog& catalog,
                                            std::string_view label) const {
  const BaseTable& t = catalog.table(label);
  std::size_t first = find_edge_type(label) ? 3 : 1;
  std::vector<PropertyDef> out;
  for (std::size_t i = first; i < t.columns().size(); ++i)
    out.push_back({t.columns()[i].name, t.columns()[i].type});
  return out;
}

void Schema::retarget(Catalog& catalog, EdgeTypeDecl& edge, EdgeEnd end,
                      std::string target, std::vector<SchemaDiagnostic>& out) {
  std::string& slot = end == EdgeEnd::Leaving ? edge.leaving : edge.arriving;
  if (slot == target) return;
  out.push_back({SchemaDiagnosticKind::TypeRetargeted,
                 {edge.label, slot, target},
                 render_identifier(edge.label) + " " + std::string(to_string(end)) +
                     " endpoint retargeted from " + render_identifier(slot) +
                     " to " + render_identifier(target)});
  catalog.table(edge.label).retarget(end == EdgeEnd::Leaving ? 1 : 2, target);
  slot = std::move(target);
}

std::vector<SchemaDiagnostic> Schema::generalize_endpoint(Catalog& catalog,
                                                          NameCounter& names,
                                                          std::string_view edge_label,
                                                          EdgeEnd end,
                                                          std::string_view new_type) {
  EdgeTypeDecl* edge = edge_type(edge_label);
  if (!edge)
    throw Error(ErrorCode::UnknownTypeLabel,
                "no edge type " + render_identifier(edge_label));
  if (!find_node_type(new_type))
    throw Error(ErrorCode::UnknownTypeLabel,
                "no node type " + render_identifier(new_type));
  std::vector<SchemaDiagnostic> out;
  const std::string current = edge->endpoint(end);
  if (conforms(new_type, current)) return out;
  if (conforms(current, new_type)) {
    retarget(catalog, *edge, end, std::string(new_type), out);
    return out;
  }

  auto current_chain = ancestors(current);
  auto new_chain = ancestors(new_type);
  for (const auto& a : current_chain) {
    if (std::find(new_chain.begin(), new_chain.end(), a) != new_chain.end()) {
      retarget(catalog, *edge, end, a, out);
      return out;
    }
  }

  auto under = [&](const std::string& sub, const std::string& super) {
    set_supertype(sub, super);
    out.push_back({SchemaDiagnosticKind::GeneralizationPerformed,
                   {sub, super},
                   "CREATE TYPE " + render_identifier(sub) + " UNDER " +
                       render_identifier(super)});
  };
  const std::string current_root = current_chain.back();
  const std::string new_root = new_chain.back();
  std::string target;
  if (find_node_type(current_root)->anonymous) {
    under(new_root, current_root);
    target = current_root;
  } else if (find_node_type(new_root)->anonymous) {
    under(current_root, new_root);
    target = new_root;
  } else {
    std::string name = names.next();
    declare_node_type(catalog, name, {});
    out.push_back({SchemaDiagnosticKind::NewAnonymousType,
                   {name},
                   "CREATE TYPE " + name + " NodeType"});
    under(current_root, name);
    under(new_root, name);
    target = name;
  }
  retarget(catalog, *edge_type(edge_label), end, target, out);
  return out;
}

FamilyResolver Schema::resolver(const Catalog& catalog) const {
  return [this, &catalog](std::string_view target) {
    std::vector<const BaseTable*> out;
    if (!find_node_type(target)) {
      if (const auto* t = catalog.find(target)) out.push_back(t);
      return out;
    }
    for (const auto& label : family(target))
      if (const auto* t = catalog.find(label)) out.push_back(t);
    return out;
  };
}

std::vector<Violation> Schema::check_family_keys(const Catalog& catalog) const {
  std::vector<Violation> out;
  for (const auto& n : nodes_) {
    if (n.supertype) continue;
    auto members = family(n.label);
    if (members.size() < 2) continue;
    std::map<Value, std::string> owner;
    for (const auto& label : members) {
      const BaseTable* t = catalog.find(label);
      if (!t) continue;
      std::set<Value> seen;
      for (const auto& [key, row] : t->rows()) {
        if (key.is_null() || !seen.insert(key).second) continue;
        auto [it, fresh] = owner.emplace(key, label);
        if (!fresh)
          out.push_back({ViolationKind::DuplicateKey,
                         "key " + key.render() + " appears in both " +
                             render_identifier(it->second) + " and " +
                             render_identifier(label) + " under " +
                             render_identifier(n.label)});
      }
    }
  }
  return out;
}

std::vector<Violation> Schema::check_multiplicity(const Catalog& catalog) const {
  std::vector<Violation> out;
  for (const auto& e : edges_) {
    const BaseTable& edges = catalog.table(e.label);
    for (EdgeEnd end : {EdgeEnd::Leaving, EdgeEnd::Arriving}) {
      const Bounds& bounds =
          end == EdgeEnd::Leaving ? e.multiplicity.leaving : e.multiplicity.arriving;
      if (bounds.unbounded_default()) continue;
      std::size_t column = end == EdgeEnd::Leaving ? 1 : 2;
      std::map<Value, std::size_t> counts;
      for (const auto& [key, row] : edges.rows()) ++counts[row[column]];
      for (const auto& label : family(e.endpoint(end))) {
        const BaseTable* nodes = catalog.find(label);
        if (!nodes) continue;
        for (const auto& [id, row] : nodes->rows()) {
          auto it = counts.find(id);
          std::size_t n = it == counts.end() ? 0 : it->second;
          if (!bounds.admits(n))
            out.push_back({ViolationKind::MultiplicityViolation,
                           render_identifier(e.label) + " " +
                               std::string(to_string(end)) + " " +
                               render_identifier(label) + " " + id.render() +
                               ": " + std::to_string(n) + " edge(s), bounds " +
                               bounds.to_string()});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> Schema::check_constraints(const Catalog& catalog) const {
  std::vector<Violation> out;
  for (const auto& c : constraints_) {
    const BaseTable& t = catalog.table(c.target);
    for (const auto& [key, row] : t.rows()) {
      ExprScope scope;
      scope.identifier = [&](const std::string& name, const SourcePos& pos) {
        auto idx = t.column_index(name);
        if (!idx)
          throw Error(ErrorCode::UnknownIdentifier,
                      "no column " + render_identifier(name), pos);
        return row[*idx];
      };
      bool ok = false;
      std::string why;
      try {
        ok = evaluate_predicate(c.predicate, scope);
      } catch (const Error& err) {
        why = ": " + err.detail();
      }
      if (!ok)
        out.push_back({ViolationKind::ConstraintViolation,
                       "constraint " + render_identifier(c.name) + " " +
                           render(c.predicate) + " fails for " +
                           render_identifier(c.target) + " " + key.render() + why});
    }
  }
  return out;
}

std::vector<std::string> Schema::dependency_order(const Catalog& catalog) const {
  std::vector<std::string> out;
  std::set<std::string> done;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    if (!done.insert(name).second) return;
    if (const auto* n = find_node_type(name)) {
      if (n->supertype) visit(*n->supertype);
    } else if (const auto* e = find_edge_type(name)) {
      visit(e->leaving);
      visit(e->arriving);
    } else if (const auto* t = catalog.find(name)) {
      for (const auto& c : t->columns())
        if (c.role == KeyRole::Foreign && c.references != name)
          visit(c.references);
    }
    if (catalog.find(name)) out.push_back(name);
  };
  for (const auto& t : catalog.tables()) visit(t.name());
  return out;
}

namespace {

std::string render_bounds(const Bounds& b) {
  return "[" + std::to_string(b.min) + ", " +
         (b.max ? std::to_string(*b.max) : std::string("*")) + "]";
}

}  // namespace

std::string Schema::export_document(const Catalog& catalog,
                                    const TypeRegistry& types) const {
  std::string out;
  for (const auto& label : dependency_order(catalog)) {
    if (!has_type(label)) continue;
    std::string stmt = "CREATE TYPE " + render_identifier(label);
    auto props = properties(catalog, label);
    if (!props.empty()) {
      stmt += " AS (";
      for (std::size_t i = 0; i < props.size(); ++i) {
        if (i) stmt += ", ";
        stmt += render_identifier(props[i].name) + " " +
                render_type_name(types, props[i].type);
      }
      stmt += ")";
    }
    if (const auto* n = find_node_type(label)) {
      stmt += n->supertype ? " UNDER " + render_identifier(*n->supertype)
                           : std::string(" NodeType");
    } else {
      const auto* e = find_edge_type(label);
      stmt += " EdgeType(" + render_identifier(e->leaving) + ", " +
              render_identifier(e->arriving) + ")";
      if (!e->multiplicity.is_default())
        stmt += " {MULTIPLICITY: {LEAVING: " + render_bounds(e->multiplicity.leaving) +
                ", ARRIVING: " + render_bounds(e->multiplicity.arriving) + "}}";
    }
    for (const auto& c : constraints_) {
      if (c.target != label) continue;
      std::string pred = render(c.predicate);
      if (pred.front() != '(') pred = "(" + pred + ")";
      stmt += " CONSTRAINT " + render_identifier(c.name) + " CHECK " + pred;
    }
    out += stmt + ";\n";
  }
  return out;
}

}  // namespace tgdb
