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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgdb/database.hpp"
#include "tgdb/executor.hpp"
#include "tgdb/lexer.hpp"

namespace tgdb {

enum class Severity { Error, Warning, Info };

std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  std::optional<SourcePos> pos;
  std::vector<SchemaDiagnostic> related;

  std::string render() const;
};

// The result of one statement or shell command.
struct Outcome {
  std::string text;    // the statement as written
  bool ok = true;
  std::string output;  // result table, dump, or commit summary
  std::vector<Diagnostic> diagnostics;
  std::optional<StatementReport> report;
};

struct SessionConfig {
  std::optional<std::filesystem::path> script;
  bool echo = false;
  bool stop_on_error = true;
  bool dump_after = false;
};

// A database plus the shell commands DUMP, SCHEMA, DATA and GRAPHS.
class Engine {
 public:
  // Runs every statement in `source`, each in its own transaction. With
  // stop_on_error the statements after a failing one are skipped.
  std::vector<Outcome> execute(std::string_view source, bool stop_on_error = false);

  // Tables in dependency order, each a header line followed by its rows in
  // primary-key order, indented two spaces.
  std::string dump() const;
  // CREATE TYPE script that rebuilds the schema.
  std::string export_schema() const;
  // One CREATE statement that reinserts every node and edge.
  std::string export_data() const;
  // The disjoint graphs, ordered by representative.
  std::string graphs() const;

  Database& database() { return db_; }
  const Database& database() const { return db_; }

 private:
  Outcome run_piece(std::string_view source, const std::vector<Token>& tokens);

  Database db_;
};

// Executes a UTF-8 script file, writing results to `out` and diagnostics
// to `err`. Returns 0 on success, 1 if a statement failed, and 2 if the
// file is missing or not valid UTF-8.
int run_script(const std::filesystem::path& path, Engine& engine,
               const SessionConfig& config, std::ostream& out, std::ostream& err);

// Throws Error(EncodingError) unless `text` is well-formed UTF-8.
void validate_utf8(std::string_view text);

}  // namespace tgdb
