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

#include "tgdb/graph_set.hpp"

#include <algorithm>

#include "tgdb/errors.hpp"

namespace tgdb {

std::string NodeRef::to_string() const { return type + " '" + id + "'"; }

std::string EdgeRef::to_string() const {
  return type + " '" + id + "' (" + leaving.to_string() + " -> " +
         arriving.to_string() + ")";
}

void GraphSet::add_node(const NodeRef& n) {
  if (owner_.count(n))
    throw Error(ErrorCode::DuplicateNode, "node already present: " + n.to_string());
  new_component(n);
}

std::size_t GraphSet::new_component(const NodeRef& n) {
  GraphComponent c;
  c.representative = n;
  c.nodes.insert(n);
  std::size_t id = next_id_++;
  components_.emplace(id, std::move(c));
  owner_[n] = id;
  return id;
}

void GraphSet::add_edge(const EdgeRef& e) {
  for (const auto* end : {&e.leaving, &e.arriving}) {
    if (!owner_.count(*end))
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge " + e.to_string() + " has missing endpoint " +
                      end->to_string());
  }
  if (edges_.count({e.type, e.id}))
    throw Error(ErrorCode::DuplicateNode, "edge already present: " + e.to_string());
  link(e);
}

void GraphSet::link(const EdgeRef& e) {
  edges_.emplace(std::make_pair(e.type, e.id), e);
  std::size_t a = owner_.at(e.leaving);
  std::size_t b = owner_.at(e.arriving);
  if (a == b) {
    components_.at(a).edges.insert(e);
    return;
  }
  // Merge the smaller component into the larger; the representative is the
  // smaller of the two representatives.
  GraphComponent* big = &components_.at(a);
  GraphComponent* small = &components_.at(b);
  if (big->nodes.size() + big->edges.size() < small->nodes.size() + small->edges.size()) {
    std::swap(a, b);
    std::swap(big, small);
  }
  for (const auto& n : small->nodes) owner_[n] = a;
  big->nodes.merge(small->nodes);
  big->edges.merge(small->edges);
  big->edges.insert(e);
  big->representative = std::min(big->representative, small->representative);
  components_.erase(b);
}

void GraphSet::remove_edge(const EdgeRef& e) {
  auto it = edges_.find({e.type, e.id});
  if (it == edges_.end())
    throw Error(ErrorCode::UnknownEdge, "no edge " + e.type + " '" + e.id + "'");
  EdgeRef stored = it->second;
  edges_.erase(it);
  std::size_t id = owner_.at(stored.leaving);
  GraphComponent old = std::move(components_.at(id));
  components_.erase(id);
  old.edges.erase(stored);
  for (const auto& n : old.nodes) new_component(n);
  for (const auto& x : old.edges) {
    edges_.erase({x.type, x.id});
    link(x);
  }
}

void GraphSet::remove_node(const NodeRef& n) {
  auto it = owner_.find(n);
  if (it == owner_.end())
    throw Error(ErrorCode::UnknownNode, "no node " + n.to_string());
  const GraphComponent& c = components_.at(it->second);
  for (const auto& e : c.edges) {
    if (e.leaving == n || e.arriving == n)
      throw Error(ErrorCode::HasIncidentEdges,
                  n.to_string() + " still has edge " + e.type + " '" + e.id + "'");
  }
  if (c.nodes.size() != 1)
    throw Error(ErrorCode::HasIncidentEdges, n.to_string() + " is connected");
  components_.erase(it->second);
  owner_.erase(it);
}

std::vector<GraphComponent> GraphSet::components() const {
  std::vector<GraphComponent> out;
  out.reserve(components_.size());
  for (const auto& [id, c] : components_) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const GraphComponent& x, const GraphComponent& y) {
    return x.representative < y.representative;
  });
  return out;
}

}  // namespace tgdb
