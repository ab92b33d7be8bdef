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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tgdb/ast.hpp"
#include "tgdb/database.hpp"

namespace tgdb {

// What a pattern identifier is bound to: a node, an edge, or (for an
// identifier written as a doc value) a property value.
using Bound = std::variant<NodeRef, EdgeRef, Value>;

std::string render(const Bound& b);

struct BindingRow {
  std::vector<std::pair<std::string, Bound>> entries;

  const Bound* find(std::string_view name) const;
  bool operator==(const BindingRow&) const = default;
};

struct MatchResult {
  std::vector<std::string> columns;
  std::vector<BindingRow> rows;

  // Column-aligned text table.
  std::string render() const;
};

// Backtracking pattern evaluation. Candidates are tried in table creation
// order and primary-key order, so the row order is reproducible. Labels
// that are not in the schema, and identifiers used for two kinds of
// entity, give zero rows. Throws UnknownIdentifier for a WHERE reference
// to a name the pattern does not bind, and TypeErrorInWhere.
MatchResult evaluate(const std::vector<Path>& paths, const std::optional<Expr>& where,
                     const DatabaseState& state);

// As evaluate, handing each distinct row to `row` as it is found.
void for_each_binding(const std::vector<Path>& paths, const std::optional<Expr>& where,
                      const DatabaseState& state,
                      const std::function<void(const BindingRow&)>& row);

// The entities a single item may bind to given the bindings so far.
// `left` and `right` are the nodes on either side of an edge item, if
// already bound.
std::vector<Bound> candidate_stream(const NodeItem& item, const BindingRow& partial,
                                    const DatabaseState& state);
std::vector<Bound> candidate_stream(const EdgeItem& item, const BindingRow& partial,
                                    const std::optional<NodeRef>& left,
                                    const std::optional<NodeRef>& right,
                                    const DatabaseState& state);

}  // namespace tgdb
