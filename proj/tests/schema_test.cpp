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

#include <gtest/gtest.h>

#include <algorithm>

#include "support/expect_error.hpp"
#include "tgdb/database.hpp"
#include "tgdb/parser.hpp"

namespace tgdb {
namespace {

std::vector<std::string> names_of(const std::vector<SchemaDiagnostic>& ds,
                                  SchemaDiagnosticKind kind) {
  std::vector<std::string> out;
  for (const auto& d : ds)
    if (d.kind == kind) out.push_back(d.message);
  return out;
}

class SchemaTest : public ::testing::Test {
 protected:
  Row node(const std::string& id) { return {Value::character(id)}; }
  Row edge(const std::string& id, const std::string& l, const std::string& a) {
    return {Value::character(id), Value::character(l), Value::character(a)};
  }

  Catalog catalog;
  Schema schema;
  NameCounter names;
  TypeRegistry types;
};

TEST_F(SchemaTest, NodeTypeGetsIdColumn) {
  schema.declare_node_type(catalog, "CUSTOMER",
                           {{"Name", TypeRegistry::kChar}, {"ADDRESS", TypeRegistry::kChar}});
  const BaseTable& t = catalog.table("CUSTOMER");
  ASSERT_EQ(t.columns().size(), 3u);
  EXPECT_EQ(t.columns()[0].name, "ID");
  EXPECT_EQ(t.columns()[0].role, KeyRole::Primary);
  EXPECT_EQ(t.columns()[0].type, TypeRegistry::kChar);
  EXPECT_EQ(t.columns()[1].name, "Name");
  EXPECT_EQ(t.columns()[2].name, "ADDRESS");
  EXPECT_FALSE(schema.find_node_type("CUSTOMER")->anonymous);
  EXPECT_TGDB_ERROR(schema.declare_node_type(catalog, "CUSTOMER", {}), DuplicateTypeLabel);
}

TEST_F(SchemaTest, SubtypeDeclaration) {
  schema.declare_node_type(catalog, "&1", {});
  schema.declare_node_type(catalog, "WOODSCREW", {}, "&1");
  EXPECT_TRUE(schema.find_node_type("&1")->anonymous);
  EXPECT_EQ(schema.find_node_type("WOODSCREW")->supertype, "&1");
  EXPECT_EQ(catalog.table("WOODSCREW").columns().size(), 1u);
  EXPECT_TGDB_ERROR(schema.declare_node_type(catalog, "X", {}, "NOPE"), UnknownSupertype);
}

TEST_F(SchemaTest, EdgeTypeGetsKeyColumns) {
  schema.declare_node_type(catalog, "CUSTOMER", {});
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_edge_type(catalog, "ORDERED", {{"Date", TypeRegistry::kDate}}, "CUSTOMER",
                           "Order");
  const BaseTable& t = catalog.table("ORDERED");
  ASSERT_EQ(t.columns().size(), 4u);
  EXPECT_EQ(t.columns()[1].name, "LEAVING");
  EXPECT_EQ(t.columns()[1].references, "CUSTOMER");
  EXPECT_EQ(t.columns()[2].name, "ARRIVING");
  EXPECT_EQ(t.columns()[2].references, "Order");
  EXPECT_EQ(t.columns()[3].name, "Date");
  EXPECT_TRUE(schema.find_edge_type("ORDERED")->multiplicity.is_default());
  EXPECT_TGDB_ERROR(schema.declare_edge_type(catalog, "X", {}, "CUSTOMER", "MISSING"),
                    UnknownEndpointType);
}

TEST_F(SchemaTest, Conforms) {
  schema.declare_node_type(catalog, "&1", {});
  schema.declare_node_type(catalog, "WOODSCREW", {}, "&1");
  schema.declare_node_type(catalog, "CUSTOMER", {});
  EXPECT_TRUE(schema.conforms("WOODSCREW", "&1"));
  EXPECT_FALSE(schema.conforms("CUSTOMER", "&1"));
  EXPECT_TRUE(schema.conforms("CUSTOMER", "CUSTOMER"));
  EXPECT_FALSE(schema.conforms("&1", "WOODSCREW"));
  EXPECT_TGDB_ERROR(schema.conforms("NOPE", "CUSTOMER"), UnknownTypeLabel);
}

TEST_F(SchemaTest, SupertypeLatticeStaysAcyclic) {
  schema.declare_node_type(catalog, "A", {});
  schema.declare_node_type(catalog, "B", {}, "A");
  schema.declare_node_type(catalog, "C", {});
  EXPECT_TGDB_ERROR(schema.set_supertype("A", "B"), CyclicSupertype);
  EXPECT_TGDB_ERROR(schema.set_supertype("A", "A"), CyclicSupertype);
  EXPECT_TGDB_ERROR(schema.set_supertype("B", "C"), SchemaConflict);
  EXPECT_TGDB_ERROR(schema.set_supertype("B", "Z"), UnknownSupertype);
  schema.set_supertype("C", "B");
  EXPECT_TRUE(schema.conforms("C", "A"));
  EXPECT_EQ(schema.family("A"), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(schema.ancestors("C"), (std::vector<std::string>{"C", "B", "A"}));
}

TEST_F(SchemaTest, GeneralizationIntroducesOneAnonymousType) {
  for (const char* n : {"Order", "WOODSCREW", "WALLPLUG", "RUBBERGLUE"})
    schema.declare_node_type(catalog, n, {});
  schema.declare_edge_type(catalog, "ITEM", {{"QTY", TypeRegistry::kInt}}, "Order",
                           "WOODSCREW");

  auto first = schema.generalize_endpoint(catalog, names, "ITEM", EdgeEnd::Arriving, "WALLPLUG");
  EXPECT_EQ(names_of(first, SchemaDiagnosticKind::NewAnonymousType),
            (std::vector<std::string>{"CREATE TYPE &1 NodeType"}));
  EXPECT_EQ(names_of(first, SchemaDiagnosticKind::GeneralizationPerformed),
            (std::vector<std::string>{"CREATE TYPE WOODSCREW UNDER &1",
                                      "CREATE TYPE WALLPLUG UNDER &1"}));
  EXPECT_EQ(names_of(first, SchemaDiagnosticKind::TypeRetargeted).size(), 1u);
  EXPECT_EQ(schema.find_edge_type("ITEM")->arriving, "&1");
  EXPECT_EQ(catalog.table("ITEM").columns()[2].references, "&1");

  auto second =
      schema.generalize_endpoint(catalog, names, "ITEM", EdgeEnd::Arriving, "RUBBERGLUE");
  EXPECT_TRUE(names_of(second, SchemaDiagnosticKind::NewAnonymousType).empty());
  EXPECT_EQ(names_of(second, SchemaDiagnosticKind::GeneralizationPerformed),
            (std::vector<std::string>{"CREATE TYPE RUBBERGLUE UNDER &1"}));
  EXPECT_EQ(schema.subtypes("&1"),
            (std::vector<std::string>{"WOODSCREW", "WALLPLUG", "RUBBERGLUE"}));
  EXPECT_EQ(names.peek(), 2u);
}

TEST_F(SchemaTest, GeneralizationNoOpForConformingType) {
  schema.declare_node_type(catalog, "P", {});
  schema.declare_node_type(catalog, "Q", {}, "P");
  schema.declare_edge_type(catalog, "E", {}, "P", "P");
  EXPECT_TRUE(schema.generalize_endpoint(catalog, names, "E", EdgeEnd::Leaving, "Q").empty());
  EXPECT_EQ(schema.find_edge_type("E")->leaving, "P");
}

TEST_F(SchemaTest, GeneralizationWidensToSupertype) {
  schema.declare_node_type(catalog, "P", {});
  schema.declare_node_type(catalog, "Q", {}, "P");
  schema.declare_node_type(catalog, "R", {}, "P");
  schema.declare_edge_type(catalog, "E", {}, "Q", "Q");
  schema.generalize_endpoint(catalog, names, "E", EdgeEnd::Leaving, "P");
  EXPECT_EQ(schema.find_edge_type("E")->leaving, "P");
  schema.generalize_endpoint(catalog, names, "E", EdgeEnd::Arriving, "R");
  EXPECT_EQ(schema.find_edge_type("E")->arriving, "P");
  EXPECT_EQ(names.peek(), 1u);
}

TEST_F(SchemaTest, MultiplicityViolationsNameNodeAndBounds) {
  schema.declare_node_type(catalog, "CUSTOMER", {});
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_edge_type(catalog, "ORDERED", {}, "CUSTOMER", "Order",
                           Multiplicity{{0, std::nullopt}, {0, 1}});
  catalog.table("CUSTOMER").insert(node("JOE"));
  catalog.table("CUSTOMER").insert(node("SUE"));
  catalog.table("Order").insert(node("ORD201"));
  catalog.table("ORDERED").insert(edge("&2", "JOE", "ORD201"));
  EXPECT_TRUE(schema.check_multiplicity(catalog).empty());
  catalog.table("ORDERED").insert(edge("&3", "SUE", "ORD201"));
  auto vs = schema.check_multiplicity(catalog);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::MultiplicityViolation);
  EXPECT_NE(vs[0].message.find("ORD201"), std::string::npos);
  EXPECT_NE(vs[0].message.find("[0..1]"), std::string::npos);
}

TEST_F(SchemaTest, MinimumMultiplicity) {
  schema.declare_node_type(catalog, "CUSTOMER", {});
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_edge_type(catalog, "ORDERED", {}, "CUSTOMER", "Order");
  schema.set_multiplicity("ORDERED", {{1, std::nullopt}, {0, std::nullopt}});
  catalog.table("CUSTOMER").insert(node("JOE"));
  auto vs = schema.check_multiplicity(catalog);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_NE(vs[0].message.find("JOE"), std::string::npos);
  EXPECT_TGDB_ERROR(schema.set_multiplicity("ORDERED", {{2, 1}, {}}), SchemaConflict);
}

TEST_F(SchemaTest, Constraints) {
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_node_type(catalog, "PART", {});
  schema.declare_edge_type(catalog, "ITEM", {{"QTY", TypeRegistry::kInt}}, "Order", "PART");
  EXPECT_TRUE(schema.check_constraints(catalog).empty());
  Statement s = parse("MATCH (x) WHERE QTY > 0");
  Expr predicate = *std::get<Match>(s.node).where;
  schema.add_constraint(catalog, {"POSITIVE", "ITEM", predicate});
  catalog.table("Order").insert(node("O"));
  catalog.table("PART").insert(node("P"));
  catalog.table("ITEM").insert({Value::character("&3"), Value::character("O"),
                                Value::character("P"), Value::integer(5)});
  EXPECT_TRUE(schema.check_constraints(catalog).empty());
  catalog.table("ITEM").insert({Value::character("&4"), Value::character("O"),
                                Value::character("P"), Value::integer(0)});
  catalog.table("ITEM").insert({Value::character("&5"), Value::character("O"),
                                Value::character("P"), Value::null()});
  auto vs = schema.check_constraints(catalog);
  EXPECT_EQ(vs.size(), 2u);
  for (const auto& v : vs) EXPECT_EQ(v.kind, ViolationKind::ConstraintViolation);
  Statement bad = parse("MATCH (x) WHERE WEIGHT > 0");
  EXPECT_TGDB_ERROR(
      schema.add_constraint(catalog, {"W", "ITEM", *std::get<Match>(bad.node).where}),
      UnknownColumn);
  EXPECT_TGDB_ERROR(schema.add_constraint(catalog, {"W", "NOPE", predicate}),
                    UnknownTypeLabel);
}

TEST_F(SchemaTest, FamilyKeysMustBeUnique) {
  schema.declare_node_type(catalog, "&1", {});
  schema.declare_node_type(catalog, "A", {}, "&1");
  schema.declare_node_type(catalog, "B", {}, "&1");
  catalog.table("A").insert(node("K"));
  EXPECT_TRUE(schema.check_family_keys(catalog).empty());
  catalog.table("B").insert(node("K"));
  auto vs = schema.check_family_keys(catalog);
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs[0].kind, ViolationKind::DuplicateKey);
}

TEST_F(SchemaTest, ForeignKeysResolveThroughFamilies) {
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_node_type(catalog, "&1", {});
  schema.declare_node_type(catalog, "WALLPLUG", {}, "&1");
  schema.declare_edge_type(catalog, "ITEM", {}, "Order", "&1");
  catalog.table("Order").insert(node("ORD201"));
  catalog.table("WALLPLUG").insert(node("Fiber 12cm"));
  catalog.table("ITEM").insert(edge("&4", "ORD201", "Fiber 12cm"));
  EXPECT_TRUE(catalog.check_integrity(schema.resolver(catalog)).empty());
  EXPECT_FALSE(catalog.check_integrity().empty());
}

TEST_F(SchemaTest, ExportIsReplayable) {
  schema.declare_node_type(catalog, "CUSTOMER", {{"Name", TypeRegistry::kChar}});
  schema.declare_node_type(catalog, "Order", {});
  schema.declare_edge_type(catalog, "ORDERED", {{"Date", TypeRegistry::kDate}}, "CUSTOMER",
                           "Order", Multiplicity{{0, std::nullopt}, {0, 1}});
  std::string doc = schema.export_document(catalog, types);
  EXPECT_EQ(doc,
            "CREATE TYPE CUSTOMER AS (\"Name\" char) NodeType;\n"
            "CREATE TYPE \"Order\" NodeType;\n"
            "CREATE TYPE ORDERED AS (\"Date\" date) EdgeType(CUSTOMER, \"Order\") "
            "{MULTIPLICITY: {LEAVING: [0, *], ARRIVING: [0, 1]}};\n");
  EXPECT_EQ(Schema().export_document(Catalog(), types), "");
}

TEST_F(SchemaTest, DependencyOrderHoistsSupertypes) {
  schema.declare_node_type(catalog, "A", {});
  schema.declare_node_type(catalog, "B", {});
  schema.declare_node_type(catalog, "&1", {});
  schema.set_supertype("A", "&1");
  schema.set_supertype("B", "&1");
  EXPECT_EQ(schema.dependency_order(catalog), (std::vector<std::string>{"&1", "A", "B"}));
}

}  // namespace
}  // namespace tgdb
