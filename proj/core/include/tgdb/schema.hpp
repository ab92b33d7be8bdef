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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgdb/expression.hpp"
#include "tgdb/relational.hpp"
#include "tgdb/types.hpp"

namespace tgdb {

// Column names the graph layer reserves in node and edge tables.
inline constexpr std::string_view kIdColumn = "ID";
inline constexpr std::string_view kLeavingColumn = "LEAVING";
inline constexpr std::string_view kArrivingColumn = "ARRIVING";

struct PropertyDef {
  std::string name;
  TypeId type;
};

// Min/max number of edges of one type incident to a node at one end.
// max == nullopt means unbounded.
struct Bounds {
  std::uint32_t min = 0;
  std::optional<std::uint32_t> max;

  bool operator==(const Bounds&) const = default;
  bool unbounded_default() const { return min == 0 && !max; }
  bool admits(std::size_t count) const {
    return count >= min && (!max || count <= *max);
  }
  std::string to_string() const;
};

struct Multiplicity {
  Bounds leaving;
  Bounds arriving;

  bool operator==(const Multiplicity&) const = default;
  bool is_default() const {
    return leaving.unbounded_default() && arriving.unbounded_default();
  }
};

enum class EdgeEnd { Leaving, Arriving };
std::string_view to_string(EdgeEnd end);

struct NodeTypeDecl {
  std::string label;
  std::optional<std::string> supertype;
  // Introduced by generalization (or named &n by the user).
  bool anonymous = false;
};

struct EdgeTypeDecl {
  std::string label;
  std::string leaving;
  std::string arriving;
  Multiplicity multiplicity;

  const std::string& endpoint(EdgeEnd end) const {
    return end == EdgeEnd::Leaving ? leaving : arriving;
  }
};

// Integrity constraint over the rows of one type's base table. Bare
// identifiers in the predicate name columns of that table.
struct Constraint {
  std::string name;
  std::string target;
  Expr predicate;
};

enum class SchemaDiagnosticKind {
  GeneralizationPerformed,
  TypeRetargeted,
  NewAnonymousType,
};
std::string_view to_string(SchemaDiagnosticKind kind);

struct SchemaDiagnostic {
  SchemaDiagnosticKind kind;
  std::vector<std::string> labels;
  std::string message;
};

// Source of generated names &1, &2, ... shared by anonymous types and
// engine-supplied keys.
class NameCounter {
 public:
  std::string next();
  // Keeps the counter ahead of an explicitly used &n name.
  void observe(std::string_view name);
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_ = 1;
};

// The typed graph schema: node types, edge types with their endpoints and
// multiplicities, the UNDER lattice and the integrity constraints. Each
// type is realized as one base table of the same name in a Catalog.
class Schema {
 public:
  // Creates table label(ID char PRIMARY, properties...).
  // Throws DuplicateTypeLabel or UnknownSupertype.
  const NodeTypeDecl& declare_node_type(Catalog& catalog, std::string label,
                                        const std::vector<PropertyDef>& properties,
                                        std::optional<std::string> supertype = {});

  // Creates table label(ID, LEAVING, ARRIVING, properties...).
  // Throws DuplicateTypeLabel or UnknownEndpointType.
  const EdgeTypeDecl& declare_edge_type(Catalog& catalog, std::string label,
                                        const std::vector<PropertyDef>& properties,
                                        std::string leaving, std::string arriving,
                                        std::optional<Multiplicity> multiplicity = {});

  // Widens the edge type's endpoint at `end` so that nodes of
  // `new_node_type` conform to it, introducing an anonymous supertype when
  // the two types share none.
  std::vector<SchemaDiagnostic> generalize_endpoint(Catalog& catalog,
                                                    NameCounter& names,
                                                    std::string_view edge_type,
                                                    EdgeEnd end,
                                                    std::string_view new_node_type);

  // Places `label` UNDER `supertype`. Throws UnknownTypeLabel,
  // UnknownSupertype, CyclicSupertype or SchemaConflict (already under a
  // different supertype).
  void set_supertype(std::string_view label, std::string_view supertype);
  void set_multiplicity(std::string_view edge_type, Multiplicity m);
  // Throws UnknownTypeLabel or UnknownColumn.
  void add_constraint(const Catalog& catalog, Constraint c);
  // Appends a nullable property column to an existing type.
  void add_property(Catalog& catalog, std::string_view label, PropertyDef p);

  // True iff instance == declared or instance is a transitive UNDER
  // descendant. Throws UnknownTypeLabel.
  bool conforms(std::string_view instance, std::string_view declared) const;

  const NodeTypeDecl* find_node_type(std::string_view label) const;
  const EdgeTypeDecl* find_edge_type(std::string_view label) const;
  bool has_type(std::string_view label) const {
    return find_node_type(label) || find_edge_type(label);
  }
  const std::vector<NodeTypeDecl>& node_types() const { return nodes_; }
  const std::vector<EdgeTypeDecl>& edge_types() const { return edges_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Property columns of a type's table (everything after the key columns).
  std::vector<PropertyDef> properties(const Catalog& catalog,
                                      std::string_view label) const;
  // Direct subtypes in declaration order.
  std::vector<std::string> subtypes(std::string_view label) const;
  // label followed by all transitive subtypes.
  std::vector<std::string> family(std::string_view label) const;
  // label, its supertype, its supertype's supertype, ...
  std::vector<std::string> ancestors(std::string_view label) const;

  FamilyResolver resolver(const Catalog& catalog) const;

  // Primary keys must also be unique across a supertype family, so that a
  // foreign key into the family names exactly one node.
  std::vector<Violation> check_family_keys(const Catalog& catalog) const;
  std::vector<Violation> check_multiplicity(const Catalog& catalog) const;
  std::vector<Violation> check_constraints(const Catalog& catalog) const;

  // Table names in creation order, with every supertype and endpoint type
  // hoisted before the first table that depends on it.
  std::vector<std::string> dependency_order(const Catalog& catalog) const;

  // Replayable CREATE TYPE script, one statement per type.
  std::string export_document(const Catalog& catalog,
                              const TypeRegistry& types) const;

 private:
  NodeTypeDecl* node_type(std::string_view label);
  EdgeTypeDecl* edge_type(std::string_view label);
  void retarget(Catalog& catalog, EdgeTypeDecl& edge, EdgeEnd end,
                std::string target, std::vector<SchemaDiagnostic>& out);
  void check_label_free(const Catalog& catalog, std::string_view label) const;

  std::vector<NodeTypeDecl> nodes_;
  std::vector<EdgeTypeDecl> edges_;
  std::vector<Constraint> constraints_;
};

// Renders a column type for DDL: char, int, date, boolean or the
// registered name.
std::string render_type_name(const TypeRegistry& types, TypeId id);

}  // namespace tgdb
