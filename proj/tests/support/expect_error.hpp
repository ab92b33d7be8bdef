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

#include <gtest/gtest.h>

#include "tgdb/errors.hpp"

#define EXPECT_TGDB_ERROR(statement, expected_code)                          \
  do {                                                                       \
    try {                                                                    \
      statement;                                                             \
      ADD_FAILURE() << "expected " #expected_code " from " #statement;       \
    } catch (const ::tgdb::Error& tgdb_error_) {                             \
      EXPECT_EQ(tgdb_error_.code(), ::tgdb::ErrorCode::expected_code)        \
          << tgdb_error_.what();                                             \
    }                                                                        \
  } while (false)
