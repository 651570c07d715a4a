/*
   Copyright 2026 The wpsq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpsq/gf.hpp"
#include "wpsq/wpoly.hpp"

namespace wpsq {

struct SuiteRow {
  std::vector<std::string> cells;
  bool match = true;
  bool observation = false;  // reported only, never counted as a mismatch
};

struct SuiteResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<SuiteRow> rows;
  std::vector<std::string> notes;

  bool all_match() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named experiment suite. Throws Errc::precondition on an
/// unknown name.
SuiteResult run_suite(std::string_view name, unsigned threads = 1);

std::string format_table(const SuiteResult& suite);

/// For weights (1, 1, 1) with d <= q: V(f) is d distinct lines through one
/// point. For weights (1, 1): f has d distinct zeros.
bool is_line_pencil(const WeightedPolynomial& f, const Field& field);

}  // namespace wpsq
