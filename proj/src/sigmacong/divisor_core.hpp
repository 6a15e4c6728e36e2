/*
Copyright 2026 The sigmacong Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sigmacong {

// Largest limit accepted by SigmaTable::build. 2^32 entries of uint64_t is
// 32 GiB, already past what a desk machine can hold; the residual code relies
// on this bound for its overflow proofs (see recurrences.cpp).
inline constexpr uint64_t kMaxTableLimit = uint64_t{1} << 32;

// Sum of the positive divisors of n by trial division up to sqrt(n).
// divisor_sum(0) = 0. Independent of the sieve; used as its oracle.
uint64_t divisor_sum(uint64_t n);

// Sum of the odd / even divisors of n. n = 0 is rejected.
uint64_t sigma_odd(uint64_t n);
uint64_t sigma_even(uint64_t n);

// g(n) = sigma(n) - 4 sigma(n/2), where sigma(n/2) = 0 for odd n.
// Equals sigma(n) for odd n and sigma_odd(n) - sigma_even(n) for even n.
int64_t g_value(uint64_t n);

// Floor square root, exact for the full 128-bit range.
uint64_t isqrt(unsigned __int128 n);

// T_j = j(j+1)/2. Throws OverflowError past 64 bits.
uint64_t triangular(uint64_t j);
// True iff 8n+1 is a perfect square (T_0 = 0 counts).
bool is_triangular(uint64_t n);
// Largest j with T_j <= bound.
uint64_t max_tri_index(uint64_t bound);

// Dense sigma(n) for 0 <= n <= limit, values[0] = 0. Immutable once built
// and safe to share across threads.
class SigmaTable {
 public:
  // Divisor-accumulation sieve, O(limit log limit) additions.
  // limit = 0 and limit > kMaxTableLimit are rejected.
  static SigmaTable build(uint64_t limit);

  // Wraps externally computed values (values[0] must be 0, size >= 2).
  // The entries are not checked against sigma; verifying them is what the
  // recurrence and congruence checks are for.
  static SigmaTable from_values(std::vector<uint64_t> values);

  uint64_t limit() const { return limit_; }

  // Unchecked lookup, n <= limit().
  uint64_t operator[](uint64_t n) const { return values_[n]; }
  // Checked lookup; throws RangeError past the limit.
  uint64_t at(uint64_t n) const;

  // g(n) read from the table; 1 <= n <= limit().
  int64_t g(uint64_t n) const;

  std::span<const uint64_t> values() const { return values_; }

 private:
  SigmaTable(uint64_t limit, std::vector<uint64_t> values)
      : limit_(limit), values_(std::move(values)) {}

  uint64_t limit_;
  std::vector<uint64_t> values_;
};

}  // namespace sigmacong
