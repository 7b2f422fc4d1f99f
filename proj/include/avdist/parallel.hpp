// Copyright 2026 The avdist Authors
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

// Order-independent fan-out and sample statistics.
//
// Work item i writes slot i of the result vector; reductions then run
// sequentially in index order, so the outcome does not depend on the number
// of workers.

#ifndef AVDIST_PARALLEL_HPP
#define AVDIST_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "avdist/error.hpp"

namespace avdist {

/// Calls fn(i) for i in [0, n) on up to `workers` threads (0 = hardware
/// concurrency). The first exception thrown by any item is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class Fn>
std::vector<double> parallel_map(std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<double> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

struct EstimateReport {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t n_samples = 0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::uint64_t seed = 0;
};

inline EstimateReport summarize(const std::vector<double>& xs, std::uint64_t seed) {
  EstimateReport r;
  r.seed = seed;
  r.n_samples = xs.size();
  if (xs.empty()) return r;
  double sum = 0.0;
  for (double x : xs) sum += x;
  r.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    r.std_err = std::sqrt(var / static_cast<double>(xs.size()));
  }
  r.ci95_lo = r.mean - 1.96 * r.std_err;
  r.ci95_hi = r.mean + 1.96 * r.std_err;
  return r;
}

}  // namespace avdist

#endif  // AVDIST_PARALLEL_HPP
