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

#include "sigmacong/errors.hpp"
#include "sigmacong/report_io.hpp"

using namespace sigmacong;

namespace {

i128 random_i128(std::mt19937_64& rng) {
  const u128 bits = (static_cast<u128>(rng()) << 64) | rng();
  // Spread magnitudes across small, 64-bit and full 128-bit ranges.
  switch (rng() % 3) {
    case 0: return static_cast<i128>(static_cast<int64_t>(rng() % 2001) - 1000);
    case 1: return static_cast<i128>(static_cast<int64_t>(rng()));
    default: return static_cast<i128>(bits);
  }
}

RecurrenceReport random_recurrence_report(std::mt19937_64& rng) {
  RecurrenceReport r;
  r.identity = static_cast<Identity>(rng() % 5);
  r.k = r.identity == Identity::kTkRecurrence ? 1 + rng() % 8 : 0;
  r.lo = 1 + rng() % 1000;
  r.hi = r.lo + rng() % 100'000;
  r.checked_count = r.hi - r.lo + 1;
  const size_t failures = rng() % 6;
  for (size_t i = 0; i < failures; ++i) {
    const i128 lhs = random_i128(rng) / 2;
    const i128 rhs = random_i128(rng) / 2;
    r.failures.push_back({r.lo + i, lhs, rhs, lhs - rhs});
  }
  return r;
}

ScanReport random_scan_report(std::mt19937_64& rng) {
  ScanReport r;
  r.kind = static_cast<ScanKind>(rng() % 4);
  r.lo = rng() % 1000;
  r.hi = r.lo + rng() % 100'000;
  r.checked_count = rng() % 100'000;
  const uint32_t m = scan_modulus(r.kind);
  for (size_t i = 0, count = rng() % 5; i < count; ++i) {
    const u128 sum = rng() % 2 ? rng() : (static_cast<u128>(rng()) << 64) | rng();
    r.violations.push_back({r.lo + i, sum, static_cast<uint32_t>(sum % m)});
  }
  for (uint32_t residue = 0; residue < m; ++residue) {
    if (rng() % 2) {
      r.residue_histogram[residue] = 1 + rng() % 1000;
      r.hypothesis_excluded += r.residue_histogram[residue];
    }
  }
  return r;
}

}  // namespace

TEST_CASE("128-bit decimal conversion") {
  CHECK(to_string(i128{0}) == "0");
  CHECK(to_string(i128{-42}) == "-42");
  CHECK(to_string(kI128Max) == "170141183460469231731687303715884105727");
  CHECK(to_string(kI128Min) == "-170141183460469231731687303715884105728");
  CHECK(parse_i128("-170141183460469231731687303715884105728") == kI128Min);
  CHECK_THROWS_AS(parse_i128("170141183460469231731687303715884105728"), OverflowError);
  CHECK_THROWS_AS(parse_i128("12a"), InvalidArgument);
  CHECK_THROWS_AS(parse_u128(""), InvalidArgument);
  CHECK(to_string(~static_cast<u128>(0)) == "340282366920938463463374607431768211455");
}

TEST_CASE("JSON reports round-trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto r = random_recurrence_report(rng);
    REQUIRE(recurrence_report_from_json(render(r, Format::kJson)) == r);
    const auto s = random_scan_report(rng);
    REQUIRE(scan_report_from_json(render(s, Format::kJson)) == s);
  }
}

TEST_CASE("CSV layout") {
  RecurrenceReport r;
  r.identity = Identity::kDiv1;
  r.lo = 1;
  r.hi = 20;
  r.checked_count = 20;
  r.failures.push_back({10, 660, 640, 20});
  r.failures.push_back({13, 1040, 1044, -4});
  CHECK(render(r, Format::kCsv) == "identity,n,lhs,rhs,residual\ndiv1,10,660,640,20\ndiv1,13,1040,1044,-4\n");
  r.failures.clear();
  CHECK(render(r, Format::kCsv) == "identity,n,lhs,rhs,residual\n");

  ScanReport s;
  s.kind = ScanKind::kMod5;
  s.violations.push_back({11, 91, 1});
  CHECK(render(s, Format::kCsv) == "kind,n,sum,residue\nmod5,11,91,1\n");
}

TEST_CASE("plain summaries") {
  ScanReport s;
  s.kind = ScanKind::kMod4;
  s.lo = 3;
  s.hi = 3;
  s.hypothesis_excluded = 1;
  s.residue_histogram[3] = 1;
  const auto text = render(s, Format::kPlain);
  CHECK(text.find("hypothesis excluded: 1") != std::string::npos);
  CHECK(text.find("excluded residue 3: 1") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
}

TEST_CASE("wide values are JSON strings") {
  RecurrenceReport r;
  r.identity = Identity::kDiv3;
  r.lo = r.hi = r.checked_count = 1;
  const i128 big = static_cast<i128>(1) << 100;
  r.failures.push_back({1, big, 0, big});
  const auto json = render(r, Format::kJson);
  CHECK(json.find("\"1267650600228229401496703205376\"") != std::string::npos);
  CHECK(json.find("\"rhs\": 0") != std::string::npos);
}

TEST_CASE("malformed report JSON is rejected") {
  CHECK_THROWS_AS(recurrence_report_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(recurrence_report_from_json("{}"), InvalidArgument);
  CHECK_THROWS_AS(recurrence_report_from_json(
                      R"({"identity":"div7","k":0,"lo":1,"hi":1,"checked_count":1,"failure_count":0,"failures":[]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(recurrence_report_from_json(
                      R"({"identity":"div1","k":0,"lo":1,"hi":1,"checked_count":1,"failure_count":2,"failures":[]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(scan_report_from_json(
                      R"({"kind":"mod4","lo":1,"hi":1,"checked_count":1,"hypothesis_excluded":0,)"
                      R"("violation_count":0,"violations":[],"residue_histogram":{"4":1}})"),
                  InvalidArgument);
}

TEST_CASE("enum names") {
  for (auto id : {Identity::kDiv1, Identity::kDiv2, Identity::kDiv3, Identity::kTkRecurrence, Identity::kGfIdentity}) {
    CHECK(parse_identity(identity_name(id)) == id);
  }
  for (auto k : {ScanKind::kMod5, ScanKind::kMod4, ScanKind::kClassic3, ScanKind::kClassic4}) {
    CHECK(parse_scan_kind(scan_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_identity("DIV1"), InvalidArgument);
  CHECK_THROWS_AS(parse_scan_kind("mod3"), InvalidArgument);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}
