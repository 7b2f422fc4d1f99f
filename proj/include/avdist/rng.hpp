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

// Counter-based random streams.
//
// Draw number n of stream (master_seed, stream_id) is a pure function of the
// triple, so samples do not depend on execution order or worker count.

#ifndef AVDIST_RNG_HPP
#define AVDIST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace avdist {

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

namespace detail {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Derives an independent master seed for a named sub-task.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  return detail::splitmix64(detail::splitmix64(master) ^ detail::splitmix64(tag * detail::kGolden + 1));
}

class Stream {
 public:
  explicit Stream(SeedSpec seed)
      : key_(detail::splitmix64(detail::splitmix64(seed.master_seed) ^
                                detail::splitmix64(~seed.stream_id))) {}

  std::uint64_t next_u64() { return detail::splitmix64(key_ + detail::kGolden * ++counter_); }

  /// Uniform on (0, 1); never returns 0.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace avdist

#endif  // AVDIST_RNG_HPP
