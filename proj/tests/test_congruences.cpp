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

#include <vector>

#include "sigmacong/congruences.hpp"
#include "sigmacong/errors.hpp"
#include "sigmacong/recurrences.hpp"

using namespace sigmacong;

namespace {

const SigmaTable& table_20k() {
  static const SigmaTable t = SigmaTable::build(20'001);
  return t;
}

}  // namespace

TEST_CASE("mod5 sums") {
  const auto& t = table_20k();
  CHECK(mod5_sum(1, t) == 5);
  CHECK(mod5_sum(3, t) == 15);
  CHECK(mod5_sum(5, t) == 31);  // 5 | n: outside the hypothesis
  CHECK(mod5_sum(5, t) % 5 == 1);
  CHECK_THROWS_AS(mod5_sum(0, t), InvalidArgument);
  CHECK_THROWS_AS(mod5_sum(10'001, t), RangeError);
}

TEST_CASE("mod4 sums") {
  const auto& t = table_20k();
  CHECK(mod4_sum(2, t) == 4);
  CHECK(mod4_sum(5, t) == 16);
  CHECK(mod4_sum(3, t) == 7);  // 3 = T_2: outside the hypothesis
  CHECK_THROWS_AS(mod4_sum(0, t), InvalidArgument);
  CHECK_THROWS_AS(mod4_sum(20'002, t), RangeError);
}

TEST_CASE("classic_check") {
  const auto& t = table_20k();
  CHECK(classic_check(0, t) == std::pair{true, true});
  CHECK(classic_check(1, t) == std::pair{true, true});
  CHECK_NOTHROW(classic_check(4999, t));
  CHECK_THROWS_AS(classic_check(5000, t), RangeError);
}

TEST_CASE("scan over the covered hypotheses") {
  const auto& t = table_20k();
  const auto mod5 = scan(ScanKind::kMod5, 1, 10'000, t);
  CHECK(mod5.passed());
  CHECK(mod5.checked_count == 8000);
  CHECK(mod5.hypothesis_excluded == 2000);

  const auto mod4 = scan(ScanKind::kMod4, 1, 10'000, t);
  CHECK(mod4.passed());
  CHECK(mod4.hypothesis_excluded == max_tri_index(10'000));  // T_1..T_140
  CHECK(mod4.checked_count + mod4.hypothesis_excluded == 10'000);

  for (const auto& r : {mod5, mod4}) {
    uint64_t total = 0;
    for (const auto& [residue, count] : r.residue_histogram) {
      REQUIRE(residue < scan_modulus(r.kind));
      total += count;
    }
    REQUIRE(total == r.hypothesis_excluded);
  }

  const auto c3 = scan(ScanKind::kClassic3, 0, 6000, t);
  const auto c4 = scan(ScanKind::kClassic4, 0, 4999, t);
  CHECK(c3.passed());
  CHECK(c4.passed());
  CHECK(c3.checked_count == 6001);
  CHECK(c3.hypothesis_excluded == 0);
  CHECK(c3.residue_histogram.empty());
}

TEST_CASE("excluded classes are histogrammed") {
  const auto& t = table_20k();
  const auto at3 = scan(ScanKind::kMod4, 3, 3, t);
  CHECK(at3.hypothesis_excluded == 1);
  CHECK(at3.checked_count == 0);
  CHECK(at3.residue_histogram == std::map<uint32_t, uint64_t>{{3, 1}});

  const auto at5 = scan(ScanKind::kMod5, 5, 5, t);
  CHECK(at5.residue_histogram == std::map<uint32_t, uint64_t>{{1, 1}});
}

TEST_CASE("scan argument checks") {
  const auto& t = table_20k();
  CHECK_THROWS_AS(scan(ScanKind::kMod5, 0, 10, t), InvalidArgument);
  CHECK_THROWS_AS(scan(ScanKind::kMod4, 0, 10, t), InvalidArgument);
  CHECK_THROWS_AS(scan(ScanKind::kMod5, 11, 10, t), InvalidArgument);
  CHECK_THROWS_AS(scan(ScanKind::kMod5, 1, 10'001, t), RangeError);
  CHECK_THROWS_AS(scan(ScanKind::kClassic4, 0, 5000, t), RangeError);
  CHECK_THROWS_AS(scan(ScanKind::kClassic3, 1, UINT64_MAX, t), RangeError);
}

TEST_CASE("mod5 congruence agrees with div1 reduced mod 5") {
  // div1 mod 5 reads 2n sigma(2n+1) + 2n sum_{j>=1} sigma(2n+1-j(j+1)) = 0,
  // i.e. 2n S(n) = 0 (mod 5); cancelling 2n needs 5 not dividing n.
  const auto& t = table_20k();
  for (uint64_t n = 1; n <= 10'000; ++n) {
    const auto terms = div1_terms(n, t);
    REQUIRE(terms.residual() == 0);
    const u128 s = mod5_sum(n, t);
    REQUIRE((2 * n * s) % 5 == 0);
    if (n % 5 != 0) REQUIRE(s % 5 == 0);
  }
}

TEST_CASE("scan reports violations from a corrupted table") {
  std::vector<uint64_t> values(table_20k().values().begin(), table_20k().values().begin() + 42);
  values[21] += 1;
  const auto bad = SigmaTable::from_values(values);
  const auto r = scan(ScanKind::kMod5, 1, 20, bad);
  REQUIRE(r.violations.size() == 3);
  CHECK(r.violations[0] == ScanViolation{11, 91, 1});
  CHECK(r.violations[1].n == 13);
  CHECK(r.violations[2].n == 16);

  values[21] -= 1;
  values[20] += 1;  // sigma(3*6 + 2) = 42
  const auto c3 = scan(ScanKind::kClassic3, 0, 13, SigmaTable::from_values(values));
  REQUIRE(c3.violations.size() == 1);
  CHECK(c3.violations[0] == ScanViolation{6, 43, 1});
}

TEST_CASE("scan is independent of thread count") {
  const auto t = SigmaTable::build(600'001);
  RunOptions opts;
  opts.threads = 3;
  for (auto kind : {ScanKind::kMod5, ScanKind::kMod4, ScanKind::kClassic4}) {
    const uint64_t hi = kind == ScanKind::kClassic4 ? 149'999 : 300'000;
    const auto serial = scan(kind, 1, hi, t);
    const auto parallel = scan(kind, 1, hi, t, opts);
    CHECK(serial == parallel);
    CHECK(serial.passed());
  }
}
