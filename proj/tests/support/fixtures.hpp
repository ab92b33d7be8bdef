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

namespace tgdb::testing {

// The order-entry example: one customer, one order, three products.
inline constexpr std::string_view kOrderExample = R"(CREATE
  (Joe:Customer {"Name":'Joe Edwards',
Address:'10 Station Rd.'}),
  (Joe)-[:Ordered {"Date":date'22/11/2002'} ]->
(Ord201:"Order")-[:Item {Qty: 5}]->("16/50x100" :
WoodScrew),
  (Ord201)-[:Item {Qty: 5}]->("Fiber 12cm":
WallPlug),
  (Ord201)-[:Item {Qty: 1}]->("500ml" :
RubberGlue))";

inline constexpr std::string_view kOrderDump =
    R"(CUSTOMER (ID char, "Name" char, ADDRESS char)
  ('JOE', 'Joe Edwards', '10 Station Rd.')
"Order" (ID char)
  ('ORD201')
&1 (ID char)
WOODSCREW (ID char)
  ('16/50x100')
WALLPLUG (ID char)
  ('Fiber 12cm')
RUBBERGLUE (ID char)
  ('500ml')
ORDERED (ID char, LEAVING char, ARRIVING char, "Date" date)
  ('&2', 'JOE', 'ORD201', date'22/11/2002')
ITEM (ID char, LEAVING char, ARRIVING char, QTY int)
  ('&3', 'ORD201', '16/50x100', 5)
  ('&4', 'ORD201', 'Fiber 12cm', 5)
  ('&5', 'ORD201', '500ml', 1)
)";

inline constexpr std::string_view kOrderSchema =
    R"(CREATE TYPE CUSTOMER AS ("Name" char, ADDRESS char) NodeType;
CREATE TYPE "Order" NodeType;
CREATE TYPE &1 NodeType;
CREATE TYPE WOODSCREW UNDER &1;
CREATE TYPE WALLPLUG UNDER &1;
CREATE TYPE RUBBERGLUE UNDER &1;
CREATE TYPE ORDERED AS ("Date" date) EdgeType(CUSTOMER, "Order");
CREATE TYPE ITEM AS (QTY int) EdgeType("Order", &1);
)";

}  // namespace tgdb::testing
