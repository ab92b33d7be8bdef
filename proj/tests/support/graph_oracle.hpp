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

// Breadth-first reference for weakly connected components.

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "tgdb/graph_set.hpp"

namespace tgdb::testing {

inline std::vector<GraphComponent> bfs_components(const std::set<NodeRef>& nodes,
                                                  const std::set<EdgeRef>& edges) {
  std::map<NodeRef, std::vector<const EdgeRef*>> incident;
  for (const auto& e : edges) {
    incident[e.leaving].push_back(&e);
    incident[e.arriving].push_back(&e);
  }
  std::set<NodeRef> seen;
  std::vector<GraphComponent> out;
  for (const auto& start : nodes) {
    if (seen.count(start)) continue;
    GraphComponent c;
    std::queue<NodeRef> frontier;
    frontier.push(start);
    seen.insert(start);
    while (!frontier.empty()) {
      NodeRef n = frontier.front();
      frontier.pop();
      c.nodes.insert(n);
      for (const EdgeRef* e : incident[n]) {
        c.edges.insert(*e);
        for (const NodeRef* next : {&e->leaving, &e->arriving})
          if (seen.insert(*next).second) frontier.push(*next);
      }
    }
    c.representative = *c.nodes.begin();
    out.push_back(std::move(c));
  }
  // Nodes are visited in ascending order, so the first unseen node of each
  // component is its minimum and the list is already sorted.
  return out;
}

}  // namespace tgdb::testing
