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

#include "baskets/baskets.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "sweep.hpp"

struct baskets_sieve {
  baskets::arith::DivisorSieve impl;
};

struct baskets_distribution_list {
  std::vector<baskets::solver::PearDistribution> items;
};

namespace {

thread_local std::string g_last_error;

baskets_status fail(baskets_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
baskets_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const baskets::InvalidArgument& e) {
    return fail(BASKETS_E_INVALID_ARGUMENT, e.what());
  } catch (const baskets::CapacityError& e) {
    return fail(BASKETS_E_CAPACITY, e.what());
  } catch (const baskets::DomainError& e) {
    return fail(BASKETS_E_DOMAIN, e.what());
  } catch (const baskets::OverflowError& e) {
    return fail(BASKETS_E_OVERFLOW, e.what());
  } catch (const baskets::IoError& e) {
    return fail(BASKETS_E_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BASKETS_E_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BASKETS_E_INTERNAL, e.what());
  } catch (...) {
    return fail(BASKETS_E_INTERNAL, "unknown error");
  }
}

template <typename T>
void require_out(T* p, const char* name) {
  if (p == nullptr) throw baskets::InvalidArgument(std::string(name) + " must not be NULL");
}

const baskets::arith::DivisorSieve* unwrap(const baskets_sieve* s) {
  return s == nullptr ? nullptr : &s->impl;
}

const baskets::arith::DivisorSieve& require_sieve(const baskets_sieve* s) {
  if (s == nullptr) throw baskets::InvalidArgument("sieve must not be NULL");
  return s->impl;
}

baskets_status copy_out(std::span<const std::uint64_t> values, uint64_t* out, size_t capacity,
                        size_t* count) {
  require_out(count, "count");
  *count = values.size();
  if (capacity < values.size()) {
    return fail(BASKETS_E_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(capacity) + ", need " + std::to_string(values.size()));
  }
  if (!values.empty()) {
    require_out(out, "out");
    std::copy(values.begin(), values.end(), out);
  }
  return BASKETS_OK;
}

baskets_flags to_c(const baskets::census::ClassificationFlags& f) {
  return baskets_flags{f.perfect, f.prime, f.near_perfect, f.highly_composite,
                       static_cast<baskets_class>(f.display_class)};
}

baskets::sweep::SweepConfig to_cpp(const baskets_sweep_config& c) {
  baskets::sweep::SweepConfig cfg;
  cfg.limit = c.limit;
  if (c.stride != 0) cfg.stride = c.stride;
  if (c.stride_large != 0) cfg.stride_large = c.stride_large;
  cfg.output_dir = c.output_dir != nullptr ? c.output_dir : ".";
  cfg.thread_count = c.thread_count;
  return cfg;
}

}  // namespace

extern "C" {

const char* baskets_version(void) { return "1.0.0"; }

const char* baskets_status_string(baskets_status status) {
  switch (status) {
    case BASKETS_OK:
      return "ok";
    case BASKETS_E_INVALID_ARGUMENT:
      return "invalid argument";
    case BASKETS_E_CAPACITY:
      return "capacity exceeded";
    case BASKETS_E_DOMAIN:
      return "domain error";
    case BASKETS_E_OVERFLOW:
      return "overflow";
    case BASKETS_E_IO:
      return "i/o error";
    case BASKETS_E_BUFFER_TOO_SMALL:
      return "buffer too small";
    case BASKETS_E_INTERNAL:
      break;
  }
  return "internal error";
}

const char* baskets_last_error(void) { return g_last_error.c_str(); }

const char* baskets_class_name(baskets_class c) {
  if (c < BASKETS_CLASS_PERFECT || c > BASKETS_CLASS_PLAIN) return "unknown";
  // string_view literals from to_string are NUL-terminated.
  return baskets::census::to_string(static_cast<baskets::census::DisplayClass>(c)).data();
}

baskets_status baskets_sieve_create(uint64_t limit, baskets_sieve** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = new baskets_sieve{baskets::arith::DivisorSieve(limit)};
    return BASKETS_OK;
  });
}

void baskets_sieve_destroy(baskets_sieve* sieve) { delete sieve; }

uint64_t baskets_sieve_limit(const baskets_sieve* sieve) {
  return sieve == nullptr ? 0 : sieve->impl.limit();
}

baskets_status baskets_divisors(uint64_t n, const baskets_sieve* sieve, uint64_t* out,
                                size_t capacity, size_t* count) {
  return guarded([&] {
    const auto divs = baskets::arith::divisors(n, unwrap(sieve));
    return copy_out(divs.divisors(), out, capacity, count);
  });
}

baskets_status baskets_is_prime(uint64_t n, const baskets_sieve* sieve, int* out) {
  return guarded([&] {
    require_out(out, "out");
    if (n == 0) throw baskets::InvalidArgument("is_prime: n must be positive");
    *out = baskets::arith::is_prime(n, unwrap(sieve)) ? 1 : 0;
    return BASKETS_OK;
  });
}

baskets_status baskets_triangular(uint64_t m, uint64_t* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = baskets::arith::triangular(m);
    return BASKETS_OK;
  });
}

baskets_status baskets_is_highly_composite(uint64_t n, const baskets_sieve* sieve, int* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = baskets::arith::is_highly_composite(n, require_sieve(sieve)) ? 1 : 0;
    return BASKETS_OK;
  });
}

baskets_status baskets_pear_bound(uint64_t n_input, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = baskets::solver::pear_bound(n_input);
    return BASKETS_OK;
  });
}

baskets_status baskets_feasible(uint64_t baskets, uint64_t n_input, int* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = baskets::solver::feasible(baskets, n_input) ? 1 : 0;
    return BASKETS_OK;
  });
}

baskets_status baskets_solve(uint64_t n_input, const baskets_sieve* sieve, baskets_solution* out) {
  return guarded([&] {
    require_out(out, "out");
    const auto s = baskets::solver::solve(n_input, unwrap(sieve));
    *out = baskets_solution{s.n_input, s.n_max, s.apples_per_basket, s.pear_bound, s.efficiency, s.surplus};
    return BASKETS_OK;
  });
}

baskets_status baskets_canonical_distribution(uint64_t baskets, uint64_t n_input, uint64_t* out,
                                              size_t capacity, size_t* count) {
  return guarded([&] {
    const auto d = baskets::solver::canonical_distribution(baskets, n_input);
    return copy_out(d.counts(), out, capacity, count);
  });
}

baskets_status baskets_classify(const baskets_solution* solution, const baskets_sieve* sieve,
                                baskets_flags* out) {
  return guarded([&] {
    require_out(solution, "solution");
    require_out(out, "out");
    // Re-derive n_max so a hand-built struct cannot smuggle in a wrong answer.
    const auto n_max = baskets::solver::max_baskets(solution->n_input, unwrap(sieve));
    if (n_max != solution->n_max) {
      throw baskets::InvalidArgument("solution.n_max does not match solve(" +
                                     std::to_string(solution->n_input) + ")");
    }
    *out = to_c(baskets::census::classify(solution->n_input, n_max, require_sieve(sieve)));
    return BASKETS_OK;
  });
}

baskets_status baskets_count_distributions(uint64_t baskets, uint64_t n_input, char* out,
                                           size_t capacity, size_t* length) {
  return guarded([&] {
    require_out(length, "length");
    const auto text = baskets::census::count_distributions(baskets, n_input).count.str();
    *length = text.size();
    if (capacity < text.size() + 1) {
      return fail(BASKETS_E_BUFFER_TOO_SMALL, "count needs " + std::to_string(text.size() + 1) + " bytes");
    }
    require_out(out, "out");
    std::memcpy(out, text.c_str(), text.size() + 1);
    return BASKETS_OK;
  });
}

baskets_status baskets_count_distributions_u64(uint64_t baskets, uint64_t n_input, uint64_t* out) {
  return guarded([&] {
    require_out(out, "out");
    const auto result = baskets::census::count_distributions(baskets, n_input);
    if (result.count > std::numeric_limits<std::uint64_t>::max()) {
      throw baskets::OverflowError("distribution count " + result.count.str() + " exceeds 64 bits");
    }
    *out = static_cast<std::uint64_t>(result.count);
    return BASKETS_OK;
  });
}

baskets_status baskets_enumerate_distributions(uint64_t baskets, uint64_t n_input, uint64_t limit,
                                               baskets_distribution_list** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = new baskets_distribution_list{
        baskets::census::enumerate_distributions(baskets, n_input, limit)};
    return BASKETS_OK;
  });
}

void baskets_distribution_list_destroy(baskets_distribution_list* list) { delete list; }

size_t baskets_distribution_list_size(const baskets_distribution_list* list) {
  return list == nullptr ? 0 : list->items.size();
}

baskets_status baskets_distribution_list_get(const baskets_distribution_list* list, size_t index,
                                             uint64_t* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require_out(list, "list");
    if (index >= list->items.size()) {
      throw baskets::InvalidArgument("index " + std::to_string(index) + " out of range");
    }
    return copy_out(list->items[index].counts(), out, capacity, count);
  });
}

baskets_status baskets_perfect_values(uint64_t limit, uint64_t* n_input, uint64_t* n_max,
                                      size_t capacity, size_t* count) {
  return guarded([&] {
    require_out(count, "count");
    const auto values = baskets::census::perfect_values(limit);
    *count = values.size();
    if (capacity < values.size()) {
      return fail(BASKETS_E_BUFFER_TOO_SMALL, "need " + std::to_string(values.size()) + " entries");
    }
    if (!values.empty()) {
      require_out(n_input, "n_input");
      require_out(n_max, "n_max");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      n_input[i] = values[i].n_input;
      n_max[i] = values[i].n_max;
    }
    return BASKETS_OK;
  });
}

baskets_status baskets_sweep_run(const baskets_sweep_config* config, baskets_sweep_summary* out) {
  return guarded([&] {
    require_out(config, "config");
    require_out(out, "out");
    const auto summary = baskets::sweep::run_sweep(to_cpp(*config));
    *out = baskets_sweep_summary{summary.record_count, summary.perfect_count, summary.prime_count,
                                 summary.elapsed_seconds, summary.files.size()};
    return BASKETS_OK;
  });
}

baskets_status baskets_sweep_records(uint64_t limit, unsigned thread_count, baskets_record* out,
                                     size_t capacity) {
  return guarded([&] {
    if (capacity < limit) {
      return fail(BASKETS_E_BUFFER_TOO_SMALL, "need " + std::to_string(limit) + " records");
    }
    require_out(out, "out");
    baskets::sweep::SweepConfig cfg;
    cfg.limit = limit;
    cfg.thread_count = thread_count;
    const auto records = baskets::sweep::compute_records(cfg);
    for (std::size_t i = 0; i < records.size(); ++i) {
      out[i] = baskets_record{records[i].n_input, records[i].n_max, to_c(records[i].flags)};
    }
    return BASKETS_OK;
  });
}

baskets_status baskets_oracle_n_max(uint64_t n_input, uint64_t* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = baskets::oracle::brute_force_max_baskets(n_input);
    return BASKETS_OK;
  });
}

baskets_status baskets_oracle_verify(uint64_t limit, baskets_mismatch* out, size_t capacity,
                                     size_t* count) {
  return guarded([&] {
    require_out(count, "count");
    const auto mismatches = baskets::oracle::verify(limit);
    *count = mismatches.size();
    const std::size_t n = std::min(capacity, mismatches.size());
    if (n > 0) require_out(out, "out");
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = baskets_mismatch{mismatches[i].n_input, mismatches[i].expected, mismatches[i].actual};
    }
    return BASKETS_OK;
  });
}

}  // extern "C"
