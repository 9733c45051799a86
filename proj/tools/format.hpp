// Copyright 2026 The Baskets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "baskets/baskets.h"

namespace baskets::cli {

// Fixed-point text of x rounded half away from zero.
std::string round_half_away(double x, int decimals);

// "{0,1,2,24}": every element, no spaces.
std::string distribution_text(std::span<const std::uint64_t> counts);

enum class TableFormat { kCsv, kMarkdown, kPlain };

struct TableRow {
  std::uint64_t n_input = 0;
  std::string bound_display;       // 1 decimal
  std::uint64_t n_max = 0;
  std::uint64_t apples_per_basket = 0;
  std::string efficiency_display;  // 2 decimals
  std::string distribution;
  std::string display_class;       // perfect | prime | near_perfect | plain
};

TableRow make_row(const baskets_solution& solution, std::span<const std::uint64_t> canonical,
                  const baskets_flags& flags);

std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace baskets::cli
