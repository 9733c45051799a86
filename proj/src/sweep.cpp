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

#include "sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <string>
#include <system_error>
#include <thread>

#include "errors.hpp"
#include "solver.hpp"

namespace baskets::sweep {
namespace fs = std::filesystem;
namespace {

using RowFilter = std::function<bool(const SweepRecord&)>;

void validate(const SweepConfig& config) {
  if (config.limit == 0) throw InvalidArgument("sweep: limit must be positive");
  if (config.stride == 0 || config.stride_large == 0) {
    throw InvalidArgument("sweep: stride must be positive");
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

void append_row(std::string& out, std::uint64_t n, std::uint64_t n_max) {
  char buf[24];
  out.append(buf, std::to_chars(buf, buf + sizeof(buf), n).ptr);
  out += ',';
  out.append(buf, std::to_chars(buf, buf + sizeof(buf), n_max).ptr);
  out += '\n';
}

std::string render(std::span<const SweepRecord> records, std::uint64_t upto,
                   const RowFilter& keep) {
  std::string out = "N,nmax\n";
  for (const auto& r : records) {
    if (r.n_input > upto) break;
    if (keep(r)) append_row(out, r.n_input, r.n_max);
  }
  return out;
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing", tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("write failed", tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("rename failed (" + ec.message() + ")", path.string());
  }
}

}  // namespace

void compute_range(const arith::DivisorSieve& sieve, std::uint64_t first, std::uint64_t last,
                   std::span<SweepRecord> out) {
  for (std::uint64_t n = first; n <= last; ++n) {
    const auto n_max = solver::max_baskets(n, &sieve);
    out[n - first] = SweepRecord{n, n_max, census::classify(n, n_max, sieve)};
  }
}

std::vector<SweepRecord> compute_records(const SweepConfig& config) {
  validate(config);
  const arith::DivisorSieve sieve(std::max<std::uint64_t>(config.limit, 2));
  std::vector<SweepRecord> records(config.limit);

  const std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(config.thread_count), config.limit);
  const std::uint64_t chunk = (config.limit + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = 1 + w * chunk;
      if (first > config.limit) break;
      const std::uint64_t last = std::min(config.limit, first + chunk - 1);
      pool.emplace_back([&, w, first, last] {
        try {
          compute_range(sieve, first, last,
                        std::span(records).subspan(first - 1, last - first + 1));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::vector<fs::path> emit_datasets(std::span<const SweepRecord> records, const SweepConfig& config) {
  validate(config);
  if (records.empty()) throw InvalidArgument("emit_datasets: no records");
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].n_input != i + 1) {
      throw InvalidArgument("emit_datasets: records must cover 1..limit in order");
    }
  }
  const std::uint64_t limit = records.size();

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory", config.output_dir.string());

  const auto sampled = [](std::uint64_t stride) {
    return [stride](const SweepRecord& r) { return (r.n_input - 1) % stride == 0; };
  };
  const RowFilter perfect = [](const SweepRecord& r) { return r.flags.perfect; };
  const RowFilter floor_primes = [](const SweepRecord& r) { return r.flags.prime && r.n_max == 1; };

  struct Dataset {
    const char* name;
    std::uint64_t upto;
    RowFilter keep;
  };
  const std::uint64_t small = std::min(limit, kSmallViewLimit);
  std::vector<Dataset> datasets = {
      {"nmax_sampled.csv", small, sampled(config.stride)},
      {"nmax_perfect.csv", small, perfect},
      {"nmax_primes_10k.csv", small, floor_primes},
  };
  if (limit > kSmallViewLimit) {
    datasets.push_back({"nmax_1m_sampled.csv", limit, sampled(config.stride_large)});
    datasets.push_back({"nmax_1m_perfect.csv", limit, perfect});
    datasets.push_back({"nmax_primes_1m.csv", limit, floor_primes});
  }

  std::vector<fs::path> written;
  for (const auto& d : datasets) {
    const fs::path path = config.output_dir / d.name;
    write_atomically(path, render(records, d.upto, d.keep));
    written.push_back(path);
  }
  return written;
}

SweepSummary run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto records = compute_records(config);

  SweepSummary summary;
  summary.record_count = records.size();
  for (const auto& r : records) {
    summary.perfect_count += r.flags.perfect ? 1 : 0;
    summary.prime_count += r.flags.prime ? 1 : 0;
  }
  summary.files = emit_datasets(records, config);
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace baskets::sweep
