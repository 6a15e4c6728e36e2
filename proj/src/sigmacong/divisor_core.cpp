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
#include "sigmacong/divisor_core.hpp"

#include <cmath>
#include <new>
#include <string>

#include "sigmacong/errors.hpp"

namespace sigmacong {

uint64_t divisor_sum(uint64_t n) {
  if (n == 0) return 0;
  uint64_t sum = 0;
  const uint64_t root = isqrt(n);
  for (uint64_t d = 1; d <= root; ++d) {
    if (n % d != 0) continue;
    const uint64_t q = n / d;
    sum += d;
    if (q != d) sum += q;
  }
  return sum;
}

uint64_t sigma_even(uint64_t n) {
  if (n == 0) throw InvalidArgument("sigma_even: n must be positive");
  if (n % 2 != 0) return 0;
  // Even divisors of 2m are exactly 2d for d | m.
  return 2 * divisor_sum(n / 2);
}

uint64_t sigma_odd(uint64_t n) {
  if (n == 0) throw InvalidArgument("sigma_odd: n must be positive");
  uint64_t m = n;
  while (m % 2 == 0) m /= 2;
  return divisor_sum(m);
}

int64_t g_value(uint64_t n) {
  if (n == 0) throw InvalidArgument("g_value: n must be positive");
  const auto s = static_cast<int64_t>(divisor_sum(n));
  if (n % 2 != 0) return s;
  return s - 4 * static_cast<int64_t>(divisor_sum(n / 2));
}

uint64_t isqrt(unsigned __int128 n) {
  if (n == 0) return 0;
  using u128 = unsigned __int128;
  constexpr u128 kMaxRoot = UINT64_MAX;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  if (r > kMaxRoot) r = kMaxRoot;
  while (r * r > n) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
  return static_cast<uint64_t>(r);
}

uint64_t triangular(uint64_t j) {
  const unsigned __int128 t = static_cast<unsigned __int128>(j) * (j + 1) / 2;
  if (t > UINT64_MAX) throw OverflowError("triangular: T_j exceeds 64 bits");
  return static_cast<uint64_t>(t);
}

uint64_t max_tri_index(uint64_t bound) {
  const unsigned __int128 disc = static_cast<unsigned __int128>(bound) * 8 + 1;
  return (isqrt(disc) - 1) / 2;
}

bool is_triangular(uint64_t n) {
  const unsigned __int128 disc = static_cast<unsigned __int128>(n) * 8 + 1;
  const unsigned __int128 r = isqrt(disc);
  return r * r == disc;
}

SigmaTable SigmaTable::build(uint64_t limit) {
  if (limit == 0) throw InvalidArgument("SigmaTable: limit must be at least 1");
  if (limit > kMaxTableLimit) {
    throw ResourceError("SigmaTable: limit " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(kMaxTableLimit));
  }
  std::vector<uint64_t> values;
  try {
    values.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("SigmaTable: cannot allocate " + std::to_string(limit + 1) + " entries");
  }
  for (uint64_t d = 1; d <= limit; ++d) {
    for (uint64_t m = d; m <= limit; m += d) values[m] += d;
  }
  return SigmaTable(limit, std::move(values));
}

SigmaTable SigmaTable::from_values(std::vector<uint64_t> values) {
  if (values.size() < 2) throw InvalidArgument("SigmaTable: need values for n = 0 and n = 1");
  if (values.size() - 1 > kMaxTableLimit) throw ResourceError("SigmaTable: too many values");
  if (values[0] != 0) throw InvalidArgument("SigmaTable: values[0] must be 0");
  const uint64_t limit = values.size() - 1;
  return SigmaTable(limit, std::move(values));
}

uint64_t SigmaTable::at(uint64_t n) const {
  if (n > limit_) {
    throw RangeError("SigmaTable: index " + std::to_string(n) + " beyond limit " +
                     std::to_string(limit_));
  }
  return values_[n];
}

int64_t SigmaTable::g(uint64_t n) const {
  if (n == 0) throw InvalidArgument("g: n must be positive");
  const auto s = static_cast<int64_t>(at(n));
  if (n % 2 != 0) return s;
  return s - 4 * static_cast<int64_t>(values_[n / 2]);
}

}  // namespace sigmacong
