// Copyright 2026 The rslist Authors
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

#ifndef RSLIST_RNG_H_
#define RSLIST_RNG_H_

#include <cstdint>
#include <limits>

namespace rslist {

// Counter-based generator. The n-th output of a stream is a pure function of
// (key, n), where the key is derived from (seed, stream id). Child streams are
// derived by hashing, so work items can own independent streams regardless of
// which thread runs them.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(Mix(Mix(seed ^ 0x6a09e667f3bcc909ULL) + Mix(stream + kGolden))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix(key_ + kGolden * ++counter_); }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t Below(std::uint64_t bound) {
    // Rejection on the top of the range keeps the result exactly uniform.
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1).
  double Uniform() { return ((*this)() >> 11) * 0x1.0p-53; }

  Rng Split(std::uint64_t id) const {
    Rng child(0);
    child.key_ = Mix(key_ ^ Mix(id + 0x9e3779b97f4a7c15ULL * 3));
    return child;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer
  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace rslist

#endif  // RSLIST_RNG_H_
