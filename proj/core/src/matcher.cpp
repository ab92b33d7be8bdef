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

#include "tgdb/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tgdb/identifier.hpp"

namespace tgdb {

std::string render(const Bound& b) {
  if (const auto* n = std::get_if<NodeRef>(&b))
    return render_identifier(n->type) + " " + quote_string(n->id);
  if (const auto* e = std::get_if<EdgeRef>(&b))
    return render_identifier(e->type) + " " + quote_string(e->id);
  return std::get<Value>(b).render();
}

const Bound* BindingRow::find(std::string_view name) const {
  for (const auto& [n, b] : entries)
    if (n == name) return &b;
  return nullptr;
}

std::string MatchResult::render() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& r : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      line.push_back(tgdb::render(r.entries[i].second));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line, std::string& out) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += " | ";
      out += line[i];
      if (i + 1 < line.size()) out.append(width[i] - line[i].size(), ' ');
    }
    out += '\n';
  };
  std::string out;
  if (!columns.empty()) {
    emit(columns, out);
    for (std::size_t i = 0; i < width.size(); ++i) {
      if (i) out += "-+-";
      out.append(width[i], '-');
    }
    out += '\n';
    for (const auto& line : cells) emit(line, out);
  }
  out += "(" + std::to_string(rows.size()) + (rows.size() == 1 ? " row)\n" : " rows)\n");
  return out;
}

namespace {

enum class SlotKind { Node, Edge, Value };

struct Slot {
  SlotKind kind;
  std::string name;  // empty for anonymous items
  int entity = -1;   // index into the view's nodes or edges
  std::optional<Value> value;

  bool bound() const { return entity >= 0 || value.has_value(); }
  void clear() {
    entity = -1;
    value.reset();
  }
};

struct DocCheck {
  std::string key;
  std::optional<Value> constant;
  int var = -1;
};

struct Step {
  bool edge = false;
  int slot = -1;
  std::vector<std::string> labels;
  std::vector<DocCheck> doc;
  // Edge steps: node slots on either side as written.
  int left = -1;
  int right = -1;
  Direction direction = Direction::Rightward;
  // Node steps after an edge: the edge and which of its ends this node is.
  int via = -1;
  EdgeEnd via_end = EdgeEnd::Arriving;
};

bool labels_ok(const Schema& schema, const std::string& type,
               const std::vector<std::string>& labels) {
  for (const auto& l : labels)
    if (!schema.has_type(l) || !schema.conforms(type, l)) return false;
  return true;
}

bool labels_exist(const Schema& schema, const std::vector<std::string>& labels,
                  bool edge) {
  for (const auto& l : labels) {
    if (edge ? !schema.find_edge_type(l) : !schema.find_node_type(l)) return false;
  }
  return true;
}

const Value* column_value(const BaseTable& table, const Row& row,
                          const std::string& column) {
  auto idx = table.column_index(column);
  if (!idx || *idx >= row.size()) return nullptr;
  return &row[*idx];
}

[[noreturn]] void unsupported_doc_value(const DocValue& v) {
  throw Error(ErrorCode::SyntaxError,
              "doc values in MATCH must be constants or identifiers", v.pos);
}

std::optional<Value> doc_constant(const DocValue& v) {
  if (v.kind != DocValue::Kind::Scalar) unsupported_doc_value(v);
  if (v.scalar.kind == Expr::Kind::Literal) return natural_value(v.scalar.literal);
  if (v.scalar.kind == Expr::Kind::Identifier) return std::nullopt;
  unsupported_doc_value(v);
}

class Matcher {
 public:
  Matcher(const std::vector<Path>& paths, const std::optional<Expr>& where,
          const DatabaseState& state)
      : state_(state), where_(where) {
    compile(paths);
    if (where_) {
      std::vector<std::string> refs;
      collect_references(*where_, refs);
      for (const auto& r : refs)
        if (!names_.count(r))
          throw Error(ErrorCode::UnknownIdentifier,
                      "WHERE refers to " + render_identifier(r) +
                          ", which the pattern does not bind",
                      where_->pos);
    }
  }

  std::vector<std::string> columns() const {
    std::vector<std::string> out;
    for (int c : columns_) out.push_back(slots_[c].name);
    return out;
  }

  void run(const std::function<void(const BindingRow&)>& emit) {
    if (empty_) return;
    view_ = instance_view(state_);
    for (std::size_t i = 0; i < view_.nodes.size(); ++i)
      node_index_.emplace(view_.nodes[i].ref, i);
    for (std::size_t i = 0; i < view_.edges.size(); ++i) {
      out_[view_.edges[i].ref.leaving].push_back(i);
      in_[view_.edges[i].ref.arriving].push_back(i);
    }
    emit_ = &emit;
    search(0);
  }

 private:
  int slot_for(const std::string& name, SlotKind kind) {
    if (name.empty()) {
      slots_.push_back({kind, {}, -1, std::nullopt});
      return static_cast<int>(slots_.size() - 1);
    }
    auto it = names_.find(name);
    if (it != names_.end()) {
      if (slots_[it->second].kind != kind) empty_ = true;
      return it->second;
    }
    slots_.push_back({kind, name, -1, std::nullopt});
    int s = static_cast<int>(slots_.size() - 1);
    names_.emplace(name, s);
    columns_.push_back(s);
    return s;
  }

  std::vector<DocCheck> compile_doc(const std::optional<Doc>& doc) {
    std::vector<DocCheck> out;
    if (!doc) return out;
    for (const auto& entry : *doc) {
      DocCheck c;
      c.key = entry.key;
      c.constant = doc_constant(entry.value);
      if (!c.constant) c.var = slot_for(entry.value.scalar.name, SlotKind::Value);
      out.push_back(std::move(c));
    }
    return out;
  }

  void compile(const std::vector<Path>& paths) {
    for (const auto& path : paths) {
      Step first;
      first.slot = slot_for(path.nodes[0].node.id, SlotKind::Node);
      first.labels = path.nodes[0].node.labels;
      first.doc = compile_doc(path.nodes[0].node.doc);
      if (!labels_exist(state_.schema, first.labels, false)) empty_ = true;
      steps_.push_back(std::move(first));
      for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const EdgeItem& e = path.edges[i];
        const NodeItem& n = path.nodes[i + 1];
        Step es;
        es.edge = true;
        es.slot = slot_for(e.edge.id, SlotKind::Edge);
        es.labels = e.edge.labels;
        es.doc = compile_doc(e.edge.doc);
        es.direction = e.direction;
        es.left = steps_.back().edge ? -1 : steps_.back().slot;
        if (!labels_exist(state_.schema, es.labels, true)) empty_ = true;
        Step ns;
        ns.slot = slot_for(n.node.id, SlotKind::Node);
        ns.labels = n.node.labels;
        ns.doc = compile_doc(n.node.doc);
        ns.via = es.slot;
        ns.via_end = e.direction == Direction::Rightward ? EdgeEnd::Arriving
                                                         : EdgeEnd::Leaving;
        if (!labels_exist(state_.schema, ns.labels, false)) empty_ = true;
        es.right = ns.slot;
        steps_.push_back(std::move(es));
        steps_.push_back(std::move(ns));
      }
    }
  }

  // Checks doc entries against a row, binding doc variables. Newly bound
  // slots are appended to `bound` so the caller can undo them.
  bool check_doc(const std::vector<DocCheck>& doc, const BaseTable& table,
                 const Row& row, std::vector<int>& bound) {
    for (const auto& c : doc) {
      const Value* v = column_value(table, row, c.key);
      if (!v || v->is_null()) return false;
      if (c.constant) {
        if (!(*v == *c.constant)) return false;
        continue;
      }
      Slot& s = slots_[c.var];
      if (s.value) {
        if (!(*s.value == *v)) return false;
      } else {
        s.value = *v;
        bound.push_back(c.var);
      }
    }
    return true;
  }

  void try_candidate(std::size_t step, int entity) {
    const Step& st = steps_[step];
    const BaseTable* table;
    const Row* row;
    const std::string* type;
    if (st.edge) {
      const InstanceEdge& e = view_.edges[entity];
      table = e.table;
      row = e.row;
      type = &e.ref.type;
    } else {
      const InstanceNode& n = view_.nodes[entity];
      table = n.table;
      row = n.row;
      type = &n.ref.type;
    }
    if (!labels_ok(state_.schema, *type, st.labels)) return;
    Slot& slot = slots_[st.slot];
    bool fresh = slot.entity < 0;
    if (!fresh && slot.entity != entity) return;
    std::vector<int> bound;
    if (check_doc(st.doc, *table, *row, bound)) {
      if (fresh) slot.entity = entity;
      search(step + 1);
      if (fresh) slot.entity = -1;
    }
    for (int b : bound) slots_[b].clear();
  }

  void search(std::size_t step) {
    if (step == steps_.size()) {
      complete();
      return;
    }
    const Step& st = steps_[step];
    if (st.edge) {
      const NodeRef& left = view_.nodes[slots_[st.left].entity].ref;
      const auto& index = st.direction == Direction::Rightward ? out_ : in_;
      auto it = index.find(left);
      if (it == index.end()) return;
      const Slot& right = slots_[st.right];
      for (std::size_t e : it->second) {
        if (right.entity >= 0) {
          const EdgeRef& ref = view_.edges[e].ref;
          const NodeRef& far =
              st.direction == Direction::Rightward ? ref.arriving : ref.leaving;
          if (!(far == view_.nodes[right.entity].ref)) continue;
        }
        try_candidate(step, static_cast<int>(e));
      }
      return;
    }
    if (st.via >= 0) {
      const EdgeRef& ref = view_.edges[slots_[st.via].entity].ref;
      const NodeRef& end = st.via_end == EdgeEnd::Arriving ? ref.arriving : ref.leaving;
      try_candidate(step, static_cast<int>(node_index_.at(end)));
      return;
    }
    const Slot& slot = slots_[st.slot];
    if (slot.entity >= 0) {
      try_candidate(step, slot.entity);
      return;
    }
    for (std::size_t n = 0; n < view_.nodes.size(); ++n)
      try_candidate(step, static_cast<int>(n));
  }

  Value id_value(const Slot& s) const {
    const std::string& id = s.kind == SlotKind::Node ? view_.nodes[s.entity].ref.id
                                                     : view_.edges[s.entity].ref.id;
    return Value::character(id);
  }

  void complete() {
    if (where_) {
      ExprScope scope;
      scope.identifier = [&](const std::string& name, const SourcePos&) {
        const Slot& s = slots_[names_.at(name)];
        return s.kind == SlotKind::Value ? *s.value : id_value(s);
      };
      scope.property = [&](const std::string& var, const std::string& prop,
                           const SourcePos& pos) {
        const Slot& s = slots_[names_.at(var)];
        if (s.kind == SlotKind::Value)
          throw Error(ErrorCode::TypeErrorInWhere,
                      render_identifier(var) + " is a value, not a node or edge", pos);
        const BaseTable* table;
        const Row* row;
        if (s.kind == SlotKind::Node) {
          table = view_.nodes[s.entity].table;
          row = view_.nodes[s.entity].row;
        } else {
          table = view_.edges[s.entity].table;
          row = view_.edges[s.entity].row;
        }
        const Value* v = column_value(*table, *row, prop);
        return v ? *v : Value::null();
      };
      if (!evaluate_predicate(*where_, scope)) return;
    }
    BindingRow r;
    std::vector<Bound> key;
    for (int c : columns_) {
      const Slot& s = slots_[c];
      Bound b;
      if (s.kind == SlotKind::Node)
        b = view_.nodes[s.entity].ref;
      else if (s.kind == SlotKind::Edge)
        b = view_.edges[s.entity].ref;
      else
        b = *s.value;
      key.push_back(b);
      r.entries.emplace_back(s.name, std::move(b));
    }
    if (!seen_.insert(std::move(key)).second) return;
    (*emit_)(r);
  }

  const DatabaseState& state_;
  const std::optional<Expr>& where_;
  std::vector<Slot> slots_;
  std::vector<Step> steps_;
  std::map<std::string, int> names_;
  std::vector<int> columns_;
  bool empty_ = false;

  InstanceView view_;
  std::map<NodeRef, std::size_t> node_index_;
  std::map<NodeRef, std::vector<std::size_t>> out_;
  std::map<NodeRef, std::vector<std::size_t>> in_;
  std::set<std::vector<Bound>> seen_;
  const std::function<void(const BindingRow&)>* emit_ = nullptr;
};

// Doc test for the single-item candidate helpers: constants must match,
// identifiers must agree with `partial` when bound there and be non-null.
bool item_doc_ok(const std::optional<Doc>& doc, const BaseTable& table, const Row& row,
                 const BindingRow& partial) {
  if (!doc) return true;
  for (const auto& entry : *doc) {
    const Value* v = column_value(table, row, entry.key);
    if (!v || v->is_null()) return false;
    auto constant = doc_constant(entry.value);
    if (constant) {
      if (!(*v == *constant)) return false;
      continue;
    }
    if (const Bound* b = partial.find(entry.value.scalar.name)) {
      const Value* bv = std::get_if<Value>(b);
      if (!bv || !(*bv == *v)) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_binding(const std::vector<Path>& paths, const std::optional<Expr>& where,
                      const DatabaseState& state,
                      const std::function<void(const BindingRow&)>& row) {
  Matcher m(paths, where, state);
  m.run(row);
}

MatchResult evaluate(const std::vector<Path>& paths, const std::optional<Expr>& where,
                     const DatabaseState& state) {
  Matcher m(paths, where, state);
  MatchResult result;
  result.columns = m.columns();
  m.run([&](const BindingRow& r) { result.rows.push_back(r); });
  return result;
}

std::vector<Bound> candidate_stream(const NodeItem& item, const BindingRow& partial,
                                    const DatabaseState& state) {
  std::vector<Bound> out;
  const NewG& g = item.node;
  if (!labels_exist(state.schema, g.labels, false)) return out;
  const NodeRef* fixed = nullptr;
  if (!g.id.empty()) {
    if (const Bound* b = partial.find(g.id)) {
      fixed = std::get_if<NodeRef>(b);
      if (!fixed) return out;
    }
  }
  for (const auto& n : instance_view(state).nodes) {
    if (fixed && !(n.ref == *fixed)) continue;
    if (!labels_ok(state.schema, n.ref.type, g.labels)) continue;
    if (!item_doc_ok(g.doc, *n.table, *n.row, partial)) continue;
    out.emplace_back(n.ref);
  }
  return out;
}

std::vector<Bound> candidate_stream(const EdgeItem& item, const BindingRow& partial,
                                    const std::optional<NodeRef>& left,
                                    const std::optional<NodeRef>& right,
                                    const DatabaseState& state) {
  std::vector<Bound> out;
  const NewG& g = item.edge;
  if (!labels_exist(state.schema, g.labels, true)) return out;
  const EdgeRef* fixed = nullptr;
  if (!g.id.empty()) {
    if (const Bound* b = partial.find(g.id)) {
      fixed = std::get_if<EdgeRef>(b);
      if (!fixed) return out;
    }
  }
  bool rightward = item.direction == Direction::Rightward;
  for (const auto& e : instance_view(state).edges) {
    const NodeRef& near = rightward ? e.ref.leaving : e.ref.arriving;
    const NodeRef& far = rightward ? e.ref.arriving : e.ref.leaving;
    if (left && !(near == *left)) continue;
    if (right && !(far == *right)) continue;
    if (fixed && !(e.ref == *fixed)) continue;
    if (!labels_ok(state.schema, e.ref.type, g.labels)) continue;
    if (!item_doc_ok(g.doc, *e.table, *e.row, partial)) continue;
    out.emplace_back(e.ref);
  }
  return out;
}

}  // namespace tgdb
