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
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigmacong/divisor_core.hpp"
#include "sigmacong/errors.hpp"

using namespace sigmacong;

TEST_CASE("divisor_sum small values") {
  CHECK(divisor_sum(0) == 0);
  CHECK(divisor_sum(1) == 1);
  CHECK(divisor_sum(6) == 12);
  CHECK(divisor_sum(9) == 13);
  for (uint64_t n = 1; n <= 2000; ++n) REQUIRE(divisor_sum(n) == oracle::sigma(n));
}

TEST_CASE("divisor_sum near perfect squares and large primes") {
  CHECK(divisor_sum(1'000'000'007ULL) == 1'000'000'008ULL);
  // 999983^2: divisors 1, p, p^2.
  const uint64_t p = 999983;
  CHECK(divisor_sum(p * p) == 1 + p + p * p);
  CHECK(divisor_sum(uint64_t{1} << 40) == (uint64_t{1} << 41) - 1);
}

TEST_CASE("SigmaTable construction") {
  const auto one = SigmaTable::build(1);
  REQUIRE(one.values().size() == 2);
  CHECK(one[0] == 0);
  CHECK(one[1] == 1);

  CHECK(SigmaTable::build(10)[10] == 18);

  CHECK_THROWS_AS(SigmaTable::build(0), InvalidArgument);
  CHECK_THROWS_AS(SigmaTable::build(kMaxTableLimit + 1), ResourceError);
  CHECK_THROWS_AS(SigmaTable::build(10).at(11), RangeError);
}

TEST_CASE("sieve agrees with trial division") {
  const auto table = SigmaTable::build(10'000);
  for (uint64_t n = 0; n <= 10'000; ++n) REQUIRE(table[n] == divisor_sum(n));

  const auto big = SigmaTable::build(1'000'000);
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<uint64_t> pick(1, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const uint64_t n = pick(rng);
    REQUIRE(big[n] == divisor_sum(n));
  }
}

TEST_CASE("SigmaTable value invariants") {
  const uint64_t limit = 10'000;
  const auto table = SigmaTable::build(limit);
  const auto prime = oracle::primes_upto(limit);
  CHECK(table[0] == 0);
  CHECK(table[1] == 1);
  for (uint64_t n = 2; n <= limit; ++n) {
    REQUIRE(table[n] >= n + 1);
    REQUIRE((table[n] == n + 1) == prime[n]);
  }
}

TEST_CASE("SigmaTable::from_values") {
  const auto t = SigmaTable::from_values({0, 1, 3, 4});
  CHECK(t.limit() == 3);
  CHECK(t[2] == 3);
  CHECK_THROWS_AS(SigmaTable::from_values({0}), InvalidArgument);
  CHECK_THROWS_AS(SigmaTable::from_values({1, 1}), InvalidArgument);
}

TEST_CASE("odd and even divisor sums") {
  CHECK(sigma_odd(12) == 4);
  CHECK(sigma_even(12) == 24);
  CHECK(sigma_odd(7) == 8);
  CHECK(sigma_even(7) == 0);
  CHECK_THROWS_AS(sigma_odd(0), InvalidArgument);
  CHECK_THROWS_AS(sigma_even(0), InvalidArgument);

  for (uint64_t n = 1; n <= 500; ++n) {
    REQUIRE(sigma_odd(n) == oracle::sigma_odd(n));
    REQUIRE(sigma_even(n) == oracle::sigma_even(n));
  }
  for (uint64_t n = 1; n <= 10'000; ++n) REQUIRE(sigma_odd(n) + sigma_even(n) == divisor_sum(n));
  for (uint64_t m = 1; m <= 10'000; ++m) REQUIRE(sigma_even(2 * m) == 2 * divisor_sum(m));
}

TEST_CASE("g_value") {
  CHECK(g_value(1) == 1);
  CHECK(g_value(2) == -1);
  CHECK(g_value(3) == 4);
  CHECK(g_value(4) == -5);
  CHECK(g_value(6) == -4);
  CHECK(g_value(10) == -6);
  CHECK_THROWS_AS(g_value(0), InvalidArgument);

  const auto table = SigmaTable::build(5000);
  CHECK_THROWS_AS(table.g(0), InvalidArgument);
  for (uint64_t n = 1; n <= 5000; ++n) {
    const int64_t g = g_value(n);
    REQUIRE(table.g(n) == g);
    if (n % 2 == 1) {
      REQUIRE(g == static_cast<int64_t>(divisor_sum(n)));
      REQUIRE(g > 0);
    } else {
      REQUIRE(g == static_cast<int64_t>(sigma_odd(n)) - static_cast<int64_t>(sigma_even(n)));
    }
  }
}

TEST_CASE("triangular helpers") {
  CHECK(triangular(0) == 0);
  CHECK(triangular(3) == 6);
  CHECK(is_triangular(0));
  CHECK(is_triangular(10));
  CHECK_FALSE(is_triangular(11));
  CHECK(max_tri_index(0) == 0);
  CHECK(max_tri_index(5) == 2);
  CHECK(max_tri_index(6) == 3);

  const auto tri = oracle::triangulars_upto(100'000);
  std::vector<bool> is_tri(100'001, false);
  for (uint64_t t : tri) is_tri[t] = true;
  uint64_t index = 0;
  for (uint64_t n = 0; n <= 100'000; ++n) {
    REQUIRE(is_triangular(n) == is_tri[n]);
    if (index + 1 < tri.size() && tri[index + 1] <= n) ++index;
    REQUIRE(max_tri_index(n) == index);
  }
  for (uint64_t j = 0; j < 1000; ++j) REQUIRE(triangular(j + 1) > triangular(j));
}

TEST_CASE("triangular helpers near the 64-bit boundary") {
  // T_j for j = 6'074'000'999 is just below 2^64.
  const uint64_t j = 6'074'000'999ULL;
  const uint64_t t = triangular(j);
  CHECK(is_triangular(t));
  CHECK_FALSE(is_triangular(t - 1));
  CHECK_FALSE(is_triangular(t + 1));
  CHECK(max_tri_index(t) == j);
  CHECK(max_tri_index(t - 1) == j - 1);
  CHECK(max_tri_index(UINT64_MAX) == j);
  CHECK_THROWS_AS(triangular(j + 1), OverflowError);
  CHECK(isqrt(~static_cast<unsigned __int128>(0)) == UINT64_MAX);
}

TEST_CASE("elementary congruences of sigma") {
  const auto table = SigmaTable::build(1'000'000);
  for (uint64_t n = 0; 4 * n + 3 <= 1'000'000; ++n) REQUIRE(table[4 * n + 3] % 4 == 0);
  for (uint64_t n = 0; 3 * n + 2 <= 1'000'000; ++n) REQUIRE(table[3 * n + 2] % 3 == 0);
}
