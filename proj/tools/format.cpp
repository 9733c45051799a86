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

#include "format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace baskets::cli {

std::string round_half_away(double x, int decimals) {
  if (decimals < 0 || decimals > 9) throw std::invalid_argument("decimals must be in [0, 9]");
  long long scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // std::round rounds halfway cases away from zero.
  const long long scaled = std::llround(x * static_cast<double>(scale));
  const unsigned long long mag =
      scaled < 0 ? 0ULL - static_cast<unsigned long long>(scaled) : static_cast<unsigned long long>(scaled);

  std::string out = scaled < 0 ? "-" : "";
  out += std::to_string(mag / static_cast<unsigned long long>(scale));
  if (decimals > 0) {
    std::string frac = std::to_string(mag % static_cast<unsigned long long>(scale));
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string distribution_text(std::span<const std::uint64_t> counts) {
  std::string out = "{";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts[i]);
  }
  out += '}';
  return out;
}

TableRow make_row(const baskets_solution& solution, std::span<const std::uint64_t> canonical,
                  const baskets_flags& flags) {
  TableRow row;
  row.n_input = solution.n_input;
  row.bound_display = round_half_away(solution.pear_bound, 1);
  row.n_max = solution.n_max;
  row.apples_per_basket = solution.apples_per_basket;
  row.efficiency_display = round_half_away(solution.efficiency, 2);
  row.distribution = distribution_text(canonical);
  // The table only distinguishes the three shaded classes.
  const baskets_class c =
      flags.display_class == BASKETS_CLASS_HIGHLY_COMPOSITE ? BASKETS_CLASS_PLAIN : flags.display_class;
  row.display_class = baskets_class_name(c);
  return row;
}

namespace {

constexpr std::array<const char*, 7> kHeader = {"N", "Bnd", "n", "k", "Eff", "distribution", "class"};

std::array<std::string, 7> cells(const TableRow& r) {
  return {std::to_string(r.n_input), r.bound_display,        std::to_string(r.n_max),
          std::to_string(r.apples_per_basket), r.efficiency_display, r.distribution,
          r.display_class};
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv: {
      out << "N,Bnd,n,k,Eff,distribution,class\n";
      for (const auto& r : rows) {
        auto c = cells(r);
        out << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ',' << c[4] << ",\"" << c[5]
            << "\"," << c[6] << '\n';
      }
      break;
    }
    case TableFormat::kMarkdown: {
      out << "| N | Bnd | n | k | Eff | distribution | class |\n";
      out << "|--:|--:|--:|--:|--:|:--|:--|\n";
      for (const auto& r : rows) {
        out << '|';
        for (const auto& c : cells(r)) out << ' ' << c << " |";
        out << '\n';
      }
      break;
    }
    case TableFormat::kPlain: {
      std::array<std::size_t, 7> width{};
      for (std::size_t i = 0; i < kHeader.size(); ++i) width[i] = std::string(kHeader[i]).size();
      for (const auto& r : rows) {
        auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
      }
      auto emit = [&](const std::array<std::string, 7>& c) {
        std::string line;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i > 0) line += "  ";
          // Numbers right-aligned, text left-aligned.
          const std::string pad(width[i] - c[i].size(), ' ');
          line += i < 5 ? pad + c[i] : c[i] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      };
      std::array<std::string, 7> head;
      std::copy(kHeader.begin(), kHeader.end(), head.begin());
      emit(head);
      for (const auto& r : rows) emit(cells(r));
      break;
    }
  }
  return out.str();
}

}  // namespace baskets::cli
