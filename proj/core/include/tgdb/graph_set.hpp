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

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tgdb {

// A node of the instance graph: its type (base table) and primary key text.
struct NodeRef {
  std::string type;
  std::string id;

  auto operator<=>(const NodeRef&) const = default;
  std::string to_string() const;
};

struct EdgeRef {
  std::string type;
  std::string id;
  NodeRef leaving;
  NodeRef arriving;

  auto operator<=>(const EdgeRef&) const = default;
  std::string to_string() const;
};

// One weakly connected piece of the instance graph.
struct GraphComponent {
  NodeRef representative;
  std::set<NodeRef> nodes;
  std::set<EdgeRef> edges;

  bool operator==(const GraphComponent&) const = default;
};

// The set of disjoint graphs formed by all nodes and edges. Each component
// is identified by its smallest node under (type, id) order. Adding an edge
// merges at most two components; removing one dissolves its component and
// re-adds the members.
class GraphSet {
 public:
  // Throws DuplicateNode.
  void add_node(const NodeRef& n);
  // Throws UnknownEndpoint or DuplicateNode (same edge twice).
  void add_edge(const EdgeRef& e);
  // Throws UnknownEdge.
  void remove_edge(const EdgeRef& e);
  // Throws UnknownNode or HasIncidentEdges.
  void remove_node(const NodeRef& n);

  bool contains(const NodeRef& n) const { return owner_.count(n) != 0; }
  std::size_t size() const { return components_.size(); }
  std::size_t node_count() const { return owner_.size(); }

  // Snapshot ordered by representative.
  std::vector<GraphComponent> components() const;

 private:
  void link(const EdgeRef& e);

  std::size_t new_component(const NodeRef& n);

  std::map<std::size_t, GraphComponent> components_;
  std::map<NodeRef, std::size_t> owner_;
  std::size_t next_id_ = 0;
  std::map<std::pair<std::string, std::string>, EdgeRef> edges_;
};

}  // namespace tgdb
