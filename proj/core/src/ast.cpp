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

#include "tgdb/ast.hpp"

#include "tgdb/identifier.hpp"

namespace tgdb {

bool operator==(const DocValue& a, const DocValue& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DocValue::Kind::Scalar: return a.scalar == b.scalar;
    case DocValue::Kind::Array: return a.items == b.items;
    case DocValue::Kind::Object: return a.entries == b.entries;
    case DocValue::Kind::Unbounded: return true;
  }
  return false;
}

bool operator==(const DocEntry& a, const DocEntry& b) {
  return a.key == b.key && a.value == b.value;
}

bool operator==(const NewG& a, const NewG& b) {
  return a.id == b.id && a.labels == b.labels && a.doc == b.doc;
}

bool operator==(const NodeItem& a, const NodeItem& b) {
  return a.reference == b.reference && a.node == b.node;
}

bool operator==(const EdgeItem& a, const EdgeItem& b) {
  return a.direction == b.direction && a.edge == b.edge;
}

bool operator==(const Path& a, const Path& b) {
  return a.nodes == b.nodes && a.edges == b.edges;
}

bool operator==(const CreateGraph& a, const CreateGraph& b) {
  return a.paths == b.paths;
}

bool operator==(const ColumnDef& a, const ColumnDef& b) {
  return a.name == b.name && a.type_name == b.type_name;
}

bool operator==(const ConstraintDef& a, const ConstraintDef& b) {
  return a.name == b.name && a.predicate == b.predicate;
}

bool operator==(const CreateType& a, const CreateType& b) {
  return a.label == b.label && a.columns == b.columns && a.kind == b.kind &&
         a.leaving == b.leaving && a.arriving == b.arriving &&
         a.under == b.under && a.metadata == b.metadata &&
         a.constraints == b.constraints;
}

bool operator==(const Match& a, const Match& b) {
  return a.paths == b.paths && a.where == b.where && a.then == b.then;
}

bool operator==(const Assignment& a, const Assignment& b) {
  return a.target == b.target && a.property == b.property && a.value == b.value;
}

bool operator==(const SetStmt& a, const SetStmt& b) {
  return a.assignments == b.assignments;
}

bool operator==(const DeleteStmt& a, const DeleteStmt& b) {
  return a.targets == b.targets;
}

bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }

std::string render(const DocValue& v) {
  switch (v.kind) {
    case DocValue::Kind::Scalar: return render(v.scalar);
    case DocValue::Kind::Unbounded: return "*";
    case DocValue::Kind::Array: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i) out += ", ";
        out += render(v.items[i]);
      }
      return out + "]";
    }
    case DocValue::Kind::Object: return render(v.entries);
  }
  return {};
}

std::string render(const Doc& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += render_identifier(d[i].key) + ": " + render(d[i].value);
  }
  return out + "}";
}

namespace {

std::string render_newg(const NewG& g) {
  std::string out = g.id.empty() ? "" : render_identifier(g.id);
  for (const auto& l : g.labels) out += ":" + render_identifier(l);
  if (g.doc) {
    if (!out.empty()) out += " ";
    out += render(*g.doc);
  }
  return out;
}

std::string render_paths(const std::vector<Path>& paths) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ", ";
    out += render(paths[i]);
  }
  return out;
}

struct Renderer {
  std::string operator()(const CreateGraph& c) const {
    return "CREATE " + render_paths(c.paths);
  }

  std::string operator()(const CreateType& c) const {
    std::string out = "CREATE TYPE " + render_identifier(c.label);
    if (!c.columns.empty()) {
      out += " AS (";
      for (std::size_t i = 0; i < c.columns.size(); ++i) {
        if (i) out += ", ";
        out += render_identifier(c.columns[i].name) + " ";
        out += c.columns[i].type_name == "DATE" ? std::string("DATE")
                                                : render_identifier(c.columns[i].type_name);
      }
      out += ")";
    }
    switch (c.kind) {
      case CreateType::Kind::Node: out += " NODETYPE"; break;
      case CreateType::Kind::Edge:
        out += " EDGETYPE(" + render_identifier(c.leaving) + ", " +
               render_identifier(c.arriving) + ")";
        break;
      case CreateType::Kind::Under: out += " UNDER " + render_identifier(c.under); break;
    }
    if (c.metadata) out += " " + render(*c.metadata);
    for (const auto& k : c.constraints) {
      std::string pred = render(k.predicate);
      if (pred.front() != '(') pred = "(" + pred + ")";
      out += " CONSTRAINT " + render_identifier(k.name) + " CHECK " + pred;
    }
    return out;
  }

  std::string operator()(const Match& m) const {
    std::string out = "MATCH " + render_paths(m.paths);
    if (m.where) out += " WHERE " + render(*m.where);
    for (const auto& s : m.then) out += " " + render(s);
    return out;
  }

  std::string operator()(const SetStmt& s) const {
    std::string out = "SET ";
    for (std::size_t i = 0; i < s.assignments.size(); ++i) {
      const auto& a = s.assignments[i];
      if (i) out += ", ";
      out += render_identifier(a.target) + "." + render_identifier(a.property) +
             " = " + render(a.value);
    }
    return out;
  }

  std::string operator()(const DeleteStmt& d) const {
    std::string out = "DELETE ";
    for (std::size_t i = 0; i < d.targets.size(); ++i) {
      if (i) out += ", ";
      out += render_identifier(d.targets[i]);
    }
    return out;
  }
};

}  // namespace

std::string render(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i > 0) {
      const EdgeItem& e = p.edges[i - 1];
      std::string inner = render_newg(e.edge);
      out += e.direction == Direction::Rightward ? "-[" + inner + "]->"
                                                 : "<-[" + inner + "]-";
    }
    out += "(" + render_newg(p.nodes[i].node) + ")";
  }
  return out;
}

std::string render(const Statement& s) { return std::visit(Renderer{}, s.node); }

}  // namespace tgdb
