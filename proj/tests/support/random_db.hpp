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

#include <random>
#include <string>
#include <vector>

namespace tgdb::testing {

struct RandomDbLimits {
  int max_nodes = 8;
  int max_edges = 12;
  int max_node_types = 3;
  int max_edge_types = 2;
};

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

// Script for a small random database. Node types N0 [N1 N2 UNDER N0] with
// columns P int and Q char; edge types E0 [E1] between N0 nodes with W int
// (E1 also has P int). Node keys K0.. and edge keys X0.. are unique.
inline std::vector<std::string> random_db_script(std::mt19937& rng,
                                                 const RandomDbLimits& lim = {}) {
  std::vector<std::string> out;
  int node_types = pick(rng, 1, lim.max_node_types);
  int edge_types = pick(rng, 1, lim.max_edge_types);
  out.push_back("CREATE TYPE N0 AS (P int, Q char) NodeType");
  for (int i = 1; i < node_types; ++i)
    out.push_back("CREATE TYPE N" + std::to_string(i) + " AS (P int, Q char) UNDER N0");
  out.push_back("CREATE TYPE E0 AS (W int) EdgeType(N0, N0)");
  if (edge_types > 1) out.push_back("CREATE TYPE E1 AS (W int, P int) EdgeType(N0, N0)");

  int n = pick(rng, 0, lim.max_nodes);
  int m = n == 0 ? 0 : pick(rng, 0, lim.max_edges);
  std::vector<std::string> items;
  auto small = [&](const char* key) -> std::string {
    int v = pick(rng, -1, 2);
    return v < 0 ? "" : std::string(key) + ": " + std::to_string(v);
  };
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> props;
    if (auto p = small("P"); !p.empty()) props.push_back(p);
    if (int q = pick(rng, -1, 1); q >= 0) props.push_back("Q: 'q" + std::to_string(q) + "'");
    std::string doc;
    for (std::size_t k = 0; k < props.size(); ++k) doc += (k ? ", " : " {") + props[k];
    if (!doc.empty()) doc += "}";
    items.push_back("(K" + std::to_string(i) + ":N" +
                    std::to_string(pick(rng, 0, node_types - 1)) + doc + ")");
  }
  for (int j = 0; j < m; ++j) {
    int type = pick(rng, 0, edge_types - 1);
    std::vector<std::string> props;
    if (auto w = small("W"); !w.empty()) props.push_back(w);
    if (type == 1)
      if (auto p = small("P"); !p.empty()) props.push_back(p);
    std::string doc;
    for (std::size_t k = 0; k < props.size(); ++k) doc += (k ? ", " : " {") + props[k];
    if (!doc.empty()) doc += "}";
    items.push_back("(K" + std::to_string(pick(rng, 0, n - 1)) + ")-[X" + std::to_string(j) +
                    ":E" + std::to_string(type) + doc + "]->(K" +
                    std::to_string(pick(rng, 0, n - 1)) + ")");
  }
  if (!items.empty()) {
    std::string create = "CREATE ";
    for (std::size_t k = 0; k < items.size(); ++k) create += (k ? ", " : "") + items[k];
    out.push_back(create);
  }
  return out;
}

// A random MATCH statement over the random_db_script vocabulary: paths of
// at most three edges and four node items in all, optional labels, docs
// with constants or variables, and an optional WHERE clause.
inline std::string random_pattern(std::mt19937& rng) {
  std::vector<std::string> entity_vars;
  bool uses_x = false;
  auto node_item = [&]() {
    std::string s = "(";
    if (chance(rng, 0.7)) {
      static const char* kNames[] = {"A", "B", "C", "A", "B", "D"};
      std::string v = kNames[pick(rng, 0, 5)];
      entity_vars.push_back(v);
      s += v;
    }
    int l = pick(rng, 0, 9);
    if (l >= 4 && l <= 6) s += ":N" + std::to_string(l - 4);
    if (l == 7) s += ":N0";
    if (l == 8 && chance(rng, 0.3)) s += ":ZZ";
    if (l == 9 && chance(rng, 0.2)) s += ":E0";
    switch (pick(rng, 0, 7)) {
      case 0: s += " {P: " + std::to_string(pick(rng, 0, 2)) + "}"; break;
      case 1: s += " {P: X}"; uses_x = true; break;
      case 2: s += " {Q: 'q" + std::to_string(pick(rng, 0, 1)) + "'}"; break;
      case 3: s += " {Q: Y}"; break;
      case 4: s += " {P: X, Q: Y}"; uses_x = true; break;
      default: break;
    }
    return s + ")";
  };
  auto edge_item = [&]() {
    bool right = chance(rng, 0.6);
    std::string s = right ? "-[" : "<-[";
    if (chance(rng, 0.6)) {
      static const char* kNames[] = {"D", "E", "D", "A"};
      std::string v = kNames[pick(rng, 0, 3)];
      entity_vars.push_back(v);
      s += v;
    }
    int l = pick(rng, 0, 4);
    if (l == 1 || l == 2) s += ":E" + std::to_string(l - 1);
    if (l == 3 && chance(rng, 0.3)) s += ":N0";
    switch (pick(rng, 0, 6)) {
      case 0: s += " {W: " + std::to_string(pick(rng, 0, 2)) + "}"; break;
      case 1: s += " {W: X}"; uses_x = true; break;
      case 2: s += " {P: X}"; uses_x = true; break;
      default: break;
    }
    return s + (right ? "]->" : "]-");
  };
  std::vector<int> lengths;
  if (chance(rng, 0.7)) {
    lengths.push_back(pick(rng, 1, 4));
  } else {
    int first = pick(rng, 1, 3);
    lengths = {first, pick(rng, 1, 4 - first)};
  }
  std::string text = "MATCH ";
  for (std::size_t p = 0; p < lengths.size(); ++p) {
    if (p) text += ", ";
    text += node_item();
    for (int i = 1; i < lengths[p]; ++i) text += edge_item() + node_item();
  }
  if (!entity_vars.empty() && chance(rng, 0.5)) {
    auto var = [&]() { return entity_vars[pick(rng, 0, static_cast<int>(entity_vars.size()) - 1)]; };
    std::string k = std::to_string(pick(rng, 0, 2));
    std::string cond;
    switch (pick(rng, 0, 6)) {
      case 0: cond = var() + ".P > " + k; break;
      case 1: cond = var() + ".P = " + k; break;
      case 2: cond = var() + ".Q = 'q1'"; break;
      case 3: cond = "NOT " + var() + ".P = " + k; break;
      case 4: cond = var() + ".P < " + var() + ".P OR " + var() + ".Q = 'q0'"; break;
      case 5: cond = var() + " = " + var(); break;
      case 6: cond = var() + ".W >= " + k + " AND " + var() + ".P <> " + k; break;
    }
    if (uses_x && chance(rng, 0.3)) cond += " AND X < 2";
    text += " WHERE " + cond;
  }
  return text;
}

}  // namespace tgdb::testing
