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

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"
#include "baskets/baskets.h"
#include "format.hpp"
#include "json.hpp"

namespace baskets::cli {
namespace {

using nlohmann::json;

// Thrown inside command handlers; carries the exit status.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

int exit_code_for(baskets_status s) {
  switch (s) {
    case BASKETS_OK:
      return kExitOk;
    case BASKETS_E_INVALID_ARGUMENT:
      return kExitUsage;
    case BASKETS_E_DOMAIN:
    case BASKETS_E_OVERFLOW:
      return kExitDomain;
    case BASKETS_E_IO:
      return kExitIo;
    case BASKETS_E_CAPACITY:
      return kExitCapacity;
    default:
      return kExitMismatch;
  }
}

void check(baskets_status s) {
  if (s != BASKETS_OK) {
    std::string msg = baskets_last_error();
    if (msg.empty()) msg = baskets_status_string(s);
    throw CommandError(exit_code_for(s), msg);
  }
}

void usage_error(const std::string& msg) { throw CommandError(kExitUsage, msg); }

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : "|") + a;
  usage_error(std::string(command) + ": --format must be one of " + list);
}

using SievePtr = std::unique_ptr<baskets_sieve, decltype(&baskets_sieve_destroy)>;

SievePtr make_sieve(std::uint64_t limit) {
  baskets_sieve* raw = nullptr;
  check(baskets_sieve_create(std::max<std::uint64_t>(limit, 2), &raw));
  return SievePtr(raw, &baskets_sieve_destroy);
}

std::vector<std::uint64_t> canonical_of(std::uint64_t baskets, std::uint64_t n_input) {
  std::vector<std::uint64_t> counts(baskets);
  std::size_t count = 0;
  check(baskets_canonical_distribution(baskets, n_input, counts.data(), counts.size(), &count));
  counts.resize(count);
  return counts;
}

std::string count_text(std::uint64_t baskets, std::uint64_t n_input) {
  std::size_t length = 0;
  std::string buf(64, '\0');
  baskets_status s = baskets_count_distributions(baskets, n_input, buf.data(), buf.size(), &length);
  if (s == BASKETS_E_BUFFER_TOO_SMALL) {
    buf.assign(length + 1, '\0');
    s = baskets_count_distributions(baskets, n_input, buf.data(), buf.size(), &length);
  }
  check(s);
  buf.resize(length);
  return buf;
}

baskets_solution solve_one(std::uint64_t n_input) {
  if (n_input == 0) usage_error("N must be a positive integer");
  baskets_solution sol{};
  check(baskets_solve(n_input, nullptr, &sol));
  return sol;
}

json flags_json(const baskets_flags& f) {
  return json{{"perfect", f.perfect != 0},
              {"prime", f.prime != 0},
              {"near_perfect", f.near_perfect != 0},
              {"highly_composite", f.highly_composite != 0},
              {"display_class", baskets_class_name(f.display_class)}};
}

// ---- commands ----

void cmd_solve(std::uint64_t n_input, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"}, "solve");
  const auto sol = solve_one(n_input);
  const auto pears = canonical_of(sol.n_max, n_input);
  if (format == "json") {
    out << json{{"n_input", sol.n_input},
                {"n_max", sol.n_max},
                {"apples_per_basket", sol.apples_per_basket},
                {"pear_bound", sol.pear_bound},
                {"efficiency", sol.efficiency},
                {"surplus", sol.surplus},
                {"canonical", pears}}
               .dump()
        << '\n';
    return;
  }
  out << "N                 " << sol.n_input << '\n'
      << "baskets (n_max)   " << sol.n_max << '\n'
      << "apples per basket " << sol.apples_per_basket << '\n'
      << "pear bound        " << round_half_away(sol.pear_bound, 4) << '\n'
      << "efficiency        " << round_half_away(sol.efficiency, 4) << '\n'
      << "surplus           " << sol.surplus << '\n'
      << "pears             " << distribution_text(pears) << '\n';
}

void cmd_classify(std::uint64_t n_input, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"}, "classify");
  const auto sol = solve_one(n_input);
  const auto sieve = make_sieve(n_input);
  baskets_flags flags{};
  check(baskets_classify(&sol, sieve.get(), &flags));
  if (format == "json") {
    json j = flags_json(flags);
    j["n_input"] = sol.n_input;
    j["n_max"] = sol.n_max;
    j["efficiency"] = sol.efficiency;
    out << j.dump() << '\n';
    return;
  }
  const auto yes_no = [](int v) { return v != 0 ? "yes" : "no"; };
  out << "N                " << sol.n_input << '\n'
      << "n_max            " << sol.n_max << '\n'
      << "efficiency       " << round_half_away(sol.efficiency, 4) << '\n'
      << "perfect          " << yes_no(flags.perfect) << '\n'
      << "prime            " << yes_no(flags.prime) << '\n'
      << "near_perfect     " << yes_no(flags.near_perfect) << '\n'
      << "highly_composite " << yes_no(flags.highly_composite) << '\n'
      << "class            " << baskets_class_name(flags.display_class) << '\n';
}

void cmd_table(std::uint64_t from, std::uint64_t to, const std::string& format, std::ostream& out) {
  const std::string f = format == "text" ? "plain" : format;
  require_format(f, {"csv", "markdown", "plain"}, "table");
  if (from == 0 || from > to) usage_error("table: need 1 <= from <= to");
  const auto sieve = make_sieve(to);
  std::vector<TableRow> rows;
  rows.reserve(to - from + 1);
  for (std::uint64_t n = from; n <= to; ++n) {
    baskets_solution sol{};
    check(baskets_solve(n, sieve.get(), &sol));
    baskets_flags flags{};
    check(baskets_classify(&sol, sieve.get(), &flags));
    rows.push_back(make_row(sol, canonical_of(sol.n_max, n), flags));
  }
  const TableFormat tf = f == "csv" ? TableFormat::kCsv
                         : f == "markdown" ? TableFormat::kMarkdown
                                           : TableFormat::kPlain;
  out << render_table(rows, tf);
}

struct SweepArgs {
  std::uint64_t limit = 0;
  std::uint64_t stride = 10;
  std::uint64_t stride_large = 997;
  std::string out_dir = ".";
  unsigned threads = 0;
};

void cmd_sweep(const SweepArgs& a, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"}, "sweep");
  if (a.limit == 0) usage_error("sweep: --limit must be positive");
  if (a.stride == 0 || a.stride_large == 0) usage_error("sweep: strides must be positive");
  const baskets_sweep_config config{a.limit, a.stride, a.stride_large, a.out_dir.c_str(), a.threads};
  baskets_sweep_summary summary{};
  check(baskets_sweep_run(&config, &summary));
  if (format == "json") {
    out << json{{"records", summary.record_count},
                {"perfect", summary.perfect_count},
                {"primes", summary.prime_count},
                {"files", summary.file_count},
                {"elapsed_seconds", summary.elapsed_seconds},
                {"output_dir", a.out_dir}}
               .dump()
        << '\n';
    return;
  }
  out << "records  " << summary.record_count << '\n'
      << "perfect  " << summary.perfect_count << '\n'
      << "primes   " << summary.prime_count << '\n'
      << "files    " << summary.file_count << " in " << a.out_dir << '\n'
      << "elapsed  " << std::fixed << std::setprecision(3) << summary.elapsed_seconds << " s\n";
}

void cmd_count(std::uint64_t n_input, std::uint64_t baskets, std::uint64_t list,
               const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"}, "count");
  if (n_input == 0) usage_error("count: N must be positive");
  if (baskets == 0) baskets = solve_one(n_input).n_max;

  int ok = 0;
  check(baskets_feasible(baskets, n_input, &ok));
  if (ok == 0) {
    throw CommandError(kExitDomain, std::to_string(baskets) +
                                        " baskets cannot hold distinct pear counts summing to " +
                                        std::to_string(n_input));
  }
  std::uint64_t tri = 0;
  check(baskets_triangular(baskets, &tri));
  const std::uint64_t surplus = n_input - tri;
  const std::string count = count_text(baskets, n_input);

  std::vector<std::vector<std::uint64_t>> listed;
  if (list > 0) {
    baskets_distribution_list* raw = nullptr;
    check(baskets_enumerate_distributions(baskets, n_input, list, &raw));
    std::unique_ptr<baskets_distribution_list, decltype(&baskets_distribution_list_destroy)> dl(
        raw, &baskets_distribution_list_destroy);
    for (std::size_t i = 0; i < baskets_distribution_list_size(dl.get()); ++i) {
      std::vector<std::uint64_t> d(baskets);
      std::size_t c = 0;
      check(baskets_distribution_list_get(dl.get(), i, d.data(), d.size(), &c));
      d.resize(c);
      listed.push_back(std::move(d));
    }
  }

  if (format == "json") {
    json j{{"n_input", n_input}, {"baskets", baskets}, {"surplus", surplus}, {"count", count}};
    if (list > 0) j["distributions"] = listed;
    out << j.dump() << '\n';
    return;
  }
  out << "N        " << n_input << '\n'
      << "baskets  " << baskets << '\n'
      << "surplus  " << surplus << '\n'
      << "count    " << count << '\n';
  for (const auto& d : listed) out << distribution_text(d) << '\n';
}

void cmd_perfect(std::uint64_t limit, const std::string& format, std::ostream& out) {
  const std::string f = format == "text" ? "csv" : format;
  require_format(f, {"csv", "json"}, "perfect");
  if (limit == 0) usage_error("perfect: --limit must be positive");
  std::size_t count = 0;
  const baskets_status probe = baskets_perfect_values(limit, nullptr, nullptr, 0, &count);
  if (probe != BASKETS_E_BUFFER_TOO_SMALL) check(probe);
  std::vector<std::uint64_t> ns(count), ms(count);
  check(baskets_perfect_values(limit, ns.data(), ms.data(), count, &count));
  if (f == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < count; ++i) arr.push_back({{"N", ns[i]}, {"nmax", ms[i]}});
    out << json{{"limit", limit}, {"count", count}, {"values", arr}}.dump() << '\n';
    return;
  }
  out << "N,nmax\n";
  for (std::size_t i = 0; i < count; ++i) out << ns[i] << ',' << ms[i] << '\n';
}

int cmd_oracle(std::uint64_t limit, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"}, "oracle");
  if (limit == 0 || limit > 2000) usage_error("oracle: --limit must be in [1, 2000]");
  std::size_t count = 0;
  std::vector<baskets_mismatch> mismatches(64);
  check(baskets_oracle_verify(limit, mismatches.data(), mismatches.size(), &count));
  mismatches.resize(std::min(count, mismatches.size()));
  if (format == "json") {
    json arr = json::array();
    for (const auto& m : mismatches) {
      arr.push_back({{"N", m.n_input}, {"oracle", m.oracle_n_max}, {"solver", m.solver_n_max}});
    }
    out << json{{"limit", limit}, {"checked", limit}, {"mismatches", count}, {"examples", arr}}.dump()
        << '\n';
  } else {
    out << "checked     " << limit << '\n' << "mismatches  " << count << '\n';
    for (const auto& m : mismatches) {
      out << "  N=" << m.n_input << " oracle=" << m.oracle_n_max << " solver=" << m.solver_n_max << '\n';
    }
  }
  return count == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum basket counts for N apples and N pears", "baskets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format: text|json|csv|markdown|plain (per command)");

  std::uint64_t solve_n = 0;
  auto* solve = app.add_subcommand("solve", "Solve for one N");
  solve->add_option("N", solve_n, "Number of apples (and of pears)")->required();

  std::uint64_t classify_n = 0;
  auto* classify = app.add_subcommand("classify", "Classification flags for one N");
  classify->add_option("N", classify_n)->required();

  std::uint64_t table_from = 0, table_to = 0;
  auto* table = app.add_subcommand("table", "Result table for a range of N");
  table->add_option("from", table_from)->required();
  table->add_option("to", table_to)->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Solve every N up to a limit and write CSV datasets");
  sweep->add_option("--limit", sweep_args.limit)->required();
  sweep->add_option("--stride", sweep_args.stride, "Sampling stride for the small view")
      ->capture_default_str();
  sweep->add_option("--stride-large", sweep_args.stride_large,
                    "Sampling stride for the full-limit view")
      ->capture_default_str();
  sweep->add_option("--out", sweep_args.out_dir, "Output directory")->capture_default_str();
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

  std::uint64_t count_n = 0, count_baskets = 0, count_list = 0;
  auto* count = app.add_subcommand("count", "Count valid pear distributions");
  count->add_option("N", count_n)->required();
  count->add_option("--baskets", count_baskets, "Basket count (default: n_max)");
  count->add_option("--list", count_list, "Also print the first K distributions");

  std::uint64_t perfect_limit = 0;
  auto* perfect = app.add_subcommand("perfect", "List perfect values up to a limit");
  perfect->add_option("--limit", perfect_limit)->required();

  std::uint64_t oracle_limit = 0;
  auto* oracle = app.add_subcommand("oracle", "Check the solver against brute force");
  oracle->add_option("--limit", oracle_limit)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*solve) cmd_solve(solve_n, format, out);
    if (*classify) cmd_classify(classify_n, format, out);
    if (*table) cmd_table(table_from, table_to, format, out);
    if (*sweep) cmd_sweep(sweep_args, format, out);
    if (*count) cmd_count(count_n, count_baskets, count_list, format, out);
    if (*perfect) cmd_perfect(perfect_limit, format, out);
    if (*oracle) return cmd_oracle(oracle_limit, format, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  }
  return kExitOk;
}

}  // namespace baskets::cli
