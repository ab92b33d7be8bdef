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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgdb/ast.hpp"
#include "tgdb/database.hpp"
#include "tgdb/matcher.hpp"

namespace tgdb {

struct StatementReport {
  std::optional<MatchResult> result;  // MATCH without a trailing statement
  std::size_t matched = 0;            // binding rows fed to a trailing statement
  std::size_t nodes_created = 0;
  std::size_t edges_created = 0;
  std::size_t types_created = 0;
  std::size_t properties_set = 0;
  std::size_t nodes_deleted = 0;
  std::size_t edges_deleted = 0;
  std::vector<SchemaDiagnostic> diagnostics;
  std::vector<Violation> violations;

  bool committed() const { return violations.empty(); }
  // One-line account of what the statement did.
  std::string summary() const;
};

// Runs one statement as a single transaction. Errors raised while staging
// throw (the transaction is aborted); commit-time violations are returned
// in the report with nothing applied.
StatementReport execute(Database& db, const Statement& statement);

// Interprets a metadata value {LEAVING: [min, max], ARRIVING: [min, max]},
// where max may be '*'. Throws SyntaxError.
Multiplicity parse_multiplicity(const DocValue& value);

}  // namespace tgdb
