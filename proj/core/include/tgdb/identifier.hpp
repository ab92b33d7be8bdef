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

#include <string>
#include <string_view>

namespace tgdb {

// Words that must be double-quoted to be used as identifiers.
bool is_reserved_word(std::string_view upper);

// Renders a stored (already case-folded or case-sensitive) identifier so
// that lexing it again yields the same name: bare when it is an upper-case
// word that is not reserved or a generated &n name, double-quoted otherwise.
std::string render_identifier(std::string_view name);

// True for names of the form &<digits> produced by the key/type counter.
bool is_generated_name(std::string_view name);

}  // namespace tgdb
