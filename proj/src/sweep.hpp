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
#include <filesystem>
#include <span>
#include <vector>

#include "arith.hpp"
#include "census.hpp"

namespace baskets::sweep {

// Datasets cover two views: N <= kSmallViewLimit and the full limit.
inline constexpr std::uint64_t kSmallViewLimit = 10'000;

struct SweepRecord {
  std::uint64_t n_input = 0;
  std::uint64_t n_max = 0;
  census::ClassificationFlags flags;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepConfig {
  std::uint64_t limit = 1'000'000;
  std::uint64_t stride = 10;         // sampling of nmax_sampled.csv
  std::uint64_t stride_large = 997;  // sampling of nmax_1m_sampled.csv
  std::filesystem::path output_dir = ".";
  unsigned thread_count = 0;  // 0 = hardware concurrency
};

struct SweepSummary {
  std::uint64_t record_count = 0;
  std::uint64_t perfect_count = 0;
  std::uint64_t prime_count = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::filesystem::path> files;
};

// Records for every N in [1, config.limit], ascending. The result does not
// depend on thread_count.
std::vector<SweepRecord> compute_records(const SweepConfig& config);

// Records for N in [first, last] against a shared sieve.
void compute_range(const arith::DivisorSieve& sieve, std::uint64_t first, std::uint64_t last,
                   std::span<SweepRecord> out);

// Writes the dataset files into config.output_dir, each through a temporary
// file renamed into place. Throws InvalidArgument on an empty or incomplete
// record sequence and IoError on filesystem failure.
std::vector<std::filesystem::path> emit_datasets(std::span<const SweepRecord> records,
                                                 const SweepConfig& config);

SweepSummary run_sweep(const SweepConfig& config);

}  // namespace baskets::sweep
