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

#include "tgdb/engine.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "tgdb/identifier.hpp"
#include "tgdb/lexer.hpp"
#include "tgdb/parser.hpp"

namespace tgdb {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

std::string Diagnostic::render() const {
  std::string out = std::string(to_string(severity)) + ": " + message;
  if (pos) out += " (" + to_string(*pos) + ")";
  return out;
}

namespace {

Diagnostic from_error(const Error& e) {
  return {Severity::Error, std::string(to_string(e.code())) + ": " + e.detail(),
          e.position(), {}};
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Property doc for the non-key, non-null columns of a row.
std::string property_doc(const BaseTable& t, const Row& row, std::size_t first) {
  std::vector<std::string> entries;
  for (std::size_t i = first; i < t.columns().size() && i < row.size(); ++i) {
    if (row[i].is_null()) continue;
    entries.push_back(render_identifier(t.columns()[i].name) + ": " + row[i].render());
  }
  if (entries.empty()) return {};
  return " {" + join(entries, ", ") + "}";
}

}  // namespace

std::vector<Outcome> Engine::execute(std::string_view source, bool stop_on_error) {
  std::vector<Outcome> out;
  std::vector<Token> tokens;
  try {
    tokens = tokenize(source);
  } catch (const Error& e) {
    Outcome o;
    o.text = trim(source);
    o.ok = false;
    o.diagnostics.push_back(from_error(e));
    out.push_back(std::move(o));
    return out;
  }
  for (const auto& piece : split_statements(tokens)) {
    std::size_t begin = piece.front().pos.offset;
    std::size_t end = piece.back().pos.offset;
    out.push_back(run_piece(source.substr(begin, end - begin), piece));
    if (!out.back().ok && stop_on_error) break;
  }
  return out;
}

Outcome Engine::run_piece(std::string_view source, const std::vector<Token>& tokens) {
  Outcome o;
  o.text = trim(source);
  if (tokens.size() == 2 && tokens[0].kind == TokenKind::Identifier) {
    const std::string& word = tokens[0].lexeme;
    if (word == "DUMP") {
      o.output = dump();
      return o;
    }
    if (word == "SCHEMA") {
      o.output = export_schema();
      return o;
    }
    if (word == "DATA") {
      o.output = export_data();
      return o;
    }
    if (word == "GRAPHS") {
      o.output = graphs();
      return o;
    }
  }
  try {
    Statement s = parse(tokens);
    StatementReport r = tgdb::execute(db_, s);
    if (r.result) {
      o.output = r.result->render();
    } else if (r.committed()) {
      o.output = r.summary() + "\n";
      for (const auto& d : r.diagnostics)
        o.diagnostics.push_back({Severity::Info,
                                 std::string(to_string(d.kind)) + ": " + d.message,
                                 std::nullopt,
                                 {d}});
    } else {
      o.ok = false;
      for (const auto& v : r.violations)
        o.diagnostics.push_back(
            {Severity::Error, std::string(to_string(v.kind)) + ": " + v.message, {}, {}});
      o.diagnostics.push_back({Severity::Error, "statement rolled back", {}, {}});
    }
    o.report = std::move(r);
  } catch (const Error& e) {
    o.ok = false;
    o.diagnostics.push_back(from_error(e));
  }
  return o;
}

std::string Engine::dump() const {
  const DatabaseState& s = db_.state();
  std::string out;
  for (const auto& name : s.schema.dependency_order(s.catalog)) {
    const BaseTable& t = s.catalog.table(name);
    std::vector<std::string> cols;
    for (const auto& c : t.columns())
      cols.push_back(render_identifier(c.name) + " " + render_type_name(s.types, c.type));
    out += render_identifier(name) + " (" + join(cols, ", ") + ")\n";
    for (const auto& [key, row] : t.rows()) {
      std::vector<std::string> vals;
      for (const auto& v : row) vals.push_back(v.render());
      out += "  (" + join(vals, ", ") + ")\n";
    }
  }
  return out;
}

std::string Engine::export_schema() const {
  const DatabaseState& s = db_.state();
  return s.schema.export_document(s.catalog, s.types);
}

std::string Engine::export_data() const {
  const DatabaseState& s = db_.state();
  std::vector<std::string> items;
  std::vector<std::string> edges;
  for (const auto& name : s.schema.dependency_order(s.catalog)) {
    const BaseTable& t = s.catalog.table(name);
    bool is_edge = s.schema.find_edge_type(name) != nullptr;
    if (!is_edge && !s.schema.find_node_type(name)) continue;
    for (const auto& [key, row] : t.rows()) {
      std::string id = render_identifier(row[0].as_char());
      if (is_edge) {
        edges.push_back("(" + render_identifier(row[1].as_char()) + ")-[" + id + ":" +
                        render_identifier(name) + property_doc(t, row, 3) + "]->(" +
                        render_identifier(row[2].as_char()) + ")");
      } else {
        items.push_back("(" + id + ":" + render_identifier(name) +
                        property_doc(t, row, 1) + ")");
      }
    }
  }
  items.insert(items.end(), edges.begin(), edges.end());
  if (items.empty()) return {};
  return "CREATE\n  " + join(items, ",\n  ") + ";\n";
}

std::string Engine::graphs() const {
  std::string out;
  for (const auto& c : db_.graphs().components()) {
    out += render(Bound(c.representative)) + ": " + std::to_string(c.nodes.size()) +
           (c.nodes.size() == 1 ? " node, " : " nodes, ") + std::to_string(c.edges.size()) +
           (c.edges.size() == 1 ? " edge\n" : " edges\n");
    for (const auto& n : c.nodes) out += "  node " + render(Bound(n)) + "\n";
    for (const auto& e : c.edges)
      out += "  edge " + render(Bound(e)) + " " + render(Bound(e.leaving)) + " -> " +
             render(Bound(e.arriving)) + "\n";
  }
  return out;
}

void validate_utf8(std::string_view text) {
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto fail = [&]() {
    throw Error(ErrorCode::EncodingError, "invalid UTF-8 sequence",
                SourcePos{i, line, i - line_start + 1});
  };
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (c == '\n') {
        ++line;
        line_start = i + 1;
      }
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c & 0xe0) == 0xc0) {
      len = 2;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      len = 3;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      len = 4;
      cp = c & 0x07;
    } else {
      fail();
    }
    if (i + len > text.size()) fail();
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xc0) != 0x80) fail();
      cp = (cp << 6) | (cc & 0x3f);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) fail();
    i += len;
  }
}

int run_script(const std::filesystem::path& path, Engine& engine,
               const SessionConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << Diagnostic{Severity::Error,
                      "FileNotFound: cannot open " + path.string(), {}, {}}
               .render()
        << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  try {
    validate_utf8(text);
  } catch (const Error& e) {
    err << from_error(e).render() << "\n";
    return 2;
  }
  bool failed = false;
  for (const auto& o : engine.execute(text, config.stop_on_error)) {
    if (config.echo) out << o.text << "\n";
    out << o.output;
    for (const auto& d : o.diagnostics)
      (d.severity == Severity::Error ? err : out) << d.render() << "\n";
    failed = failed || !o.ok;
  }
  if (config.dump_after) out << engine.dump();
  return failed ? 1 : 0;
}

}  // namespace tgdb
