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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tgdb/engine.hpp"

namespace {

bool is_shell_word(const std::string& line) {
  std::string upper;
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r' && c != ';')
      upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return upper == "DUMP" || upper == "SCHEMA" || upper == "DATA" || upper == "GRAPHS";
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool ends_statement(const std::string& line) {
  auto last = line.find_last_not_of(" \t\r");
  return last != std::string::npos && line[last] == ';';
}

int repl(tgdb::Engine& engine, const tgdb::SessionConfig& config) {
  std::string pending;
  std::string line;
  bool failed = false;
  auto flush = [&]() {
    if (is_blank(pending)) {
      pending.clear();
      return;
    }
    for (const auto& o : engine.execute(pending, config.stop_on_error)) {
      if (config.echo) std::cout << o.text << "\n";
      std::cout << o.output;
      for (const auto& d : o.diagnostics)
        (d.severity == tgdb::Severity::Error ? std::cerr : std::cout)
            << d.render() << "\n";
      failed = failed || !o.ok;
    }
    pending.clear();
  };
  std::cout << "tgdb> " << std::flush;
  while (std::getline(std::cin, line)) {
    if (pending.empty()) {
      std::string word = line;
      for (auto& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (word == "QUIT" || word == "EXIT") break;
    }
    if (pending.empty() && is_shell_word(line)) {
      pending = line;
      flush();
    } else if (is_blank(line)) {
      flush();
    } else {
      pending += line;
      pending += '\n';
      if (ends_statement(line)) flush();
    }
    std::cout << (pending.empty() ? "tgdb> " : "  ... ") << std::flush;
  }
  flush();
  std::cout << "\n";
  if (config.dump_after) std::cout << engine.dump();
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tgdb: typed graph database shell"};
  std::string script;
  bool echo = false;
  bool dump_after = false;
  std::optional<bool> stop_on_error;
  app.add_option("script", script, "Script file to run (omit for an interactive session)");
  app.add_flag("--echo", echo, "Print each statement before its result");
  app.add_flag("--stop-on-error,!--no-stop-on-error", stop_on_error,
               "Skip the remaining statements after a failure");
  app.add_flag("--dump-after", dump_after, "Print the database dump on exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  tgdb::SessionConfig config;
  config.echo = echo;
  config.dump_after = dump_after;
  tgdb::Engine engine;
  if (!script.empty()) {
    config.script = script;
    config.stop_on_error = stop_on_error.value_or(true);
    return tgdb::run_script(*config.script, engine, config, std::cout, std::cerr);
  }
  config.stop_on_error = stop_on_error.value_or(false);
  return repl(engine, config);
}
