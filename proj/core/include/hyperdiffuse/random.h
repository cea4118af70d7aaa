// Copyright 2026 The hyperdiffuse Authors.
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


// SplitMix64 (Steele, Lea, Flood 2014) with fixed derivations of bounded
// integers and doubles, so generated fixtures are identical on every
// platform and standard library:
//
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
//
// below(n): Lemire's multiply-shift with rejection (unbiased).
// unit():   top 53 bits scaled by 2^-53, in [0, 1).

#ifndef HYPERDIFFUSE_RANDOM_H_
#define HYPERDIFFUSE_RANDOM_H_

#include <cstdint>

namespace hyperdiffuse {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t low = 0;
    std::uint64_t high = mul_wide(next(), n, low);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) high = mul_wide(next(), n, low);
    }
    return high;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  // Full 128-bit product; returns the high word.
  static std::uint64_t mul_wide(std::uint64_t a, std::uint64_t b, std::uint64_t& low) {
    const std::uint64_t a_lo = a & 0xffffffffULL;
    const std::uint64_t a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xffffffffULL;
    const std::uint64_t b_hi = b >> 32;
    const std::uint64_t ll = a_lo * b_lo;
    const std::uint64_t lh = a_lo * b_hi;
    const std::uint64_t hl = a_hi * b_lo;
    const std::uint64_t hh = a_hi * b_hi;
    const std::uint64_t mid = (ll >> 32) + (lh & 0xffffffffULL) + (hl & 0xffffffffULL);
    low = (mid << 32) | (ll & 0xffffffffULL);
    return hh + (lh >> 32) + (hl >> 32) + (mid >> 32);
  }

  std::uint64_t state_;
};

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_RANDOM_H_
