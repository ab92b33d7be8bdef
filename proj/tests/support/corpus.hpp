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

#include <string_view>

#include "fixtures.hpp"

namespace tgdb::testing {

// Statements exercising every production of the dialect.
inline constexpr std::string_view kParserCorpus[] = {
    kOrderExample,
    R"(CREATE TYPE CUSTOMER as ("Name" char, ADDRESS char) NodeType)",
    R"(CREATE TYPE "Order" NodeType)",
    R"(CREATE TYPE ORDERED as ("Date" date) EdgeType(CUSTOMER,"Order"))",
    R"(CREATE TYPE ITEM as (QTY int) EdgeType("Order",WOODSCREW))",
    R"(CREATE TYPE &1 NodeType)",
    R"(CREATE TYPE WoodScrew UNDER &1)",
    R"(CREATE TYPE PART AS (WEIGHT int) UNDER &1 NODETYPE)",
    R"(CREATE TYPE LIKES EdgeType(CUSTOMER, "Order") {MULTIPLICITY: {LEAVING: [0, *], ARRIVING: [0, 1]}})",
    R"(CREATE TYPE LINE AS (QTY int, NOTE char) EdgeType("Order", PART) CONSTRAINT POSITIVE CHECK QTY > 0 CONSTRAINT SMALL CHECK QTY <= 100)",
    R"(CREATE TYPE FLAG AS (ON boolean) NodeType CONSTRAINT SET_ON CHECK ON = TRUE OR NOT ON = FALSE)",
    R"(CREATE (a:Customer))",
    R"(CREATE (:Customer {"Name": 'Anonymous'}))",
    R"(create (a:customer {n: 'x''y', d: date'01/02/2003', b: false, z: null, k: -3}))",
    R"(CREATE (x:WIDGET:&1 {PRICE: 12}))",
    R"(CREATE ("Grüße":"Größe" {"ü": 'ö'}))",
    R"(CREATE (a)<-[:ITEM {QTY: 2}]-(b), (c)-[e:LIKES]->(d))",
    R"(CREATE (a)-[:R {MULTIPLICITY: {LEAVING: [1, 2], ARRIVING: [0, *]}}]->(b))",
    R"(MATCH (c:CUSTOMER))",
    R"(MATCH (o:"Order")-[i:ITEM]->(p))",
    R"(MATCH (o:"Order")-[i:ITEM]->(p) WHERE i.QTY > 1)",
    R"(MATCH (x:CUSTOMER)-[:ITEM]->(y))",
    R"(MATCH (p {QTY: q}), (o)<-[:ITEM]-(p) WHERE NOT (q = 1 AND p.Q <> 'a') OR o = p)",
    R"(MATCH (a)-[e]->(b)-[f]->(c) WHERE a.X >= 1 AND (b.Y < 2 OR c.Z <= date'31/12/1999'))",
    R"(MATCH (o:"Order")-[i:ITEM]->(p) SET i.QTY = 2)",
    R"(MATCH (o:"Order")-[i:ITEM]->(p) SET i.QTY = i.QTY, p.SEEN = TRUE)",
    R"(MATCH (o:"Order")-[i:ITEM]->(p) DELETE i)",
    R"(MATCH (c:CUSTOMER), (o:"Order") CREATE (c)-[:LIKES]->(o))",
    R"(SET JOE.ADDRESS = '11 Station Rd.')",
    R"(SET JOE.ADDRESS = NULL, "Ord201".NOTE = 'x')",
    R"(DELETE &3)",
    R"(DELETE &3, &4;)",
    R"(MATCH ("MATCH":"WHERE" {"SET": "DELETE"}))",
};

}  // namespace tgdb::testing
