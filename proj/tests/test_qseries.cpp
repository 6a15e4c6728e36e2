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
#include "sigmacong/qseries.hpp"

using namespace sigmacong;

namespace {

TruncatedSeries make(std::vector<int64_t> c) { return TruncatedSeries::from_int64(c); }

std::vector<int64_t> random_coeffs(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int64_t> dist(-9, 9);
  std::vector<int64_t> c(n);
  for (auto& v : c) v = dist(rng);
  return c;
}

std::vector<int64_t> as_int64(const TruncatedSeries& s) {
  std::vector<int64_t> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

// G(q) = sum_{k>=1} g(k) q^k.
TruncatedSeries g_series(size_t order) {
  std::vector<int64_t> c(order + 1, 0);
  for (size_t k = 1; k <= order; ++k) c[k] = g_value(k);
  return make(c);
}

}  // namespace

TEST_CASE("series construction") {
  CHECK(TruncatedSeries(3).order() == 3);
  CHECK(TruncatedSeries::one(2) == make({1, 0, 0}));
  CHECK_THROWS_AS(TruncatedSeries(std::vector<mpz_class>{}), InvalidArgument);
  CHECK_THROWS_AS(TruncatedSeries(kMaxSeriesOrder + 1), ResourceError);
  CHECK_THROWS_AS(make({1, 2}).coeff(2), RangeError);
  CHECK(make({1, 2, 3}).truncate(1) == make({1, 2}));
  CHECK_THROWS_AS(make({1, 2}).truncate(2), InvalidArgument);
}

TEST_CASE("series_add") {
  CHECK(series_add(make({1, 1}), make({1, -1})) == make({2, 0}));
  const auto psi = psi_series(20);
  CHECK(series_add(psi, series_neg(psi)) == TruncatedSeries(20));
  const auto g = g_series(20);
  CHECK(series_add(g, TruncatedSeries(20)) == g);
  CHECK_THROWS_AS(series_add(make({1}), make({1, 1})), InvalidArgument);
}

TEST_CASE("series_mul") {
  CHECK(series_mul(make({1, 1, 0}), make({1, 1, 0})) == make({1, 2, 1}));
  CHECK(series_mul(make({1, 1}), make({1, 1})) == make({1, 2}));
  const auto a = make({3, -1, 4, 1, -5});
  CHECK(series_mul(a, TruncatedSeries::one(4)) == a);
  CHECK_THROWS_AS(series_mul(make({1}), make({1, 1})), InvalidArgument);

  // psi * G at q^3: psi_0 g(3) + psi_1 g(2) + psi_2 g(1) = 4 - 1 + 0.
  const auto product = series_mul(psi_series(6), g_series(6));
  CHECK(product[3] == 3);
}

TEST_CASE("series ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + trial % 31;
    const auto ca = random_coeffs(rng, n);
    const auto cb = random_coeffs(rng, n);
    const auto cc = random_coeffs(rng, n);
    const auto a = make(ca), b = make(cb), c = make(cc);
    REQUIRE(as_int64(series_mul(a, b)) == oracle::convolve(ca, cb));
    REQUIRE(series_mul(a, b) == series_mul(b, a));
    REQUIRE(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    REQUIRE(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
  }
}

TEST_CASE("wide coefficients take the arbitrary-precision path") {
  std::mt19937_64 rng(11);
  const mpz_class scale = mpz_class(1) << 90;
  for (int trial = 0; trial < 20; ++trial) {
    const size_t n = 5 + trial;
    const auto ca = random_coeffs(rng, n);
    const auto cb = random_coeffs(rng, n);
    std::vector<mpz_class> scaled;
    for (int64_t v : ca) scaled.push_back(mpz_class(static_cast<long>(v)) * scale);
    const auto wide = series_mul(TruncatedSeries(scaled), make(cb));
    const auto narrow = series_mul(make(ca), make(cb));
    for (size_t i = 0; i < n; ++i) REQUIRE(wide[i] == narrow[i] * scale);
  }
}

TEST_CASE("i128 <-> mpz conversion") {
  const i128 big = static_cast<i128>(1) << 100;
  for (i128 v : {i128{0}, i128{1}, i128{-1}, big + 12345, -big - 6789, kI128Max, kI128Min + 1}) {
    REQUIRE(to_i128(from_i128(v)) == v);
  }
  CHECK_THROWS_AS(to_i128(mpz_class(1) << 127), OverflowError);
}

TEST_CASE("series_pow") {
  const auto psi = psi_series(30);
  CHECK(series_pow(psi, 1) == psi);
  CHECK(series_pow(psi, 0) == TruncatedSeries::one(30));
  CHECK(series_pow(psi, 2)[1] == 2);
  CHECK(series_pow(psi, 4)[1] == 4);
  TruncatedSeries iterated = psi;
  for (uint64_t k = 2; k <= 9; ++k) {
    iterated = series_mul(iterated, psi);
    REQUIRE(series_pow(psi, k) == iterated);
  }
}

TEST_CASE("psi_series") {
  CHECK(psi_series(7) == make({1, 1, 0, 1, 0, 0, 1, 0}));
  CHECK(psi_series(0) == make({1}));
  for (size_t order : {0, 1, 5, 100, 1000}) {
    const auto psi = psi_series(order);
    REQUIRE(psi[0] == 1);
    size_t ones = 0;
    for (const auto& c : psi.coeffs()) ones += (c == 1) ? 1 : 0;
    REQUIRE(ones == max_tri_index(order) + 1);
  }
}

TEST_CASE("psi product form matches the sum form") {
  for (size_t order : {0, 1, 2, 3, 10, 57, 500}) REQUIRE(psi_product_series(order) == psi_series(order));
}

TEST_CASE("t_k tables") {
  CHECK_THROWS_AS(TkTable::build(0, 10), InvalidArgument);
  const auto t1 = TkTable::build(1, 100);
  for (size_t n = 0; n <= 100; ++n) REQUIRE(t1[n] == (is_triangular(n) ? 1 : 0));
  CHECK(TkTable::build(4, 2)[2] == 6);
  CHECK_THROWS_AS(t1.at(101), RangeError);

  const auto tri = oracle::triangulars_upto(60);
  for (uint32_t k = 1; k <= 4; ++k) {
    const auto table = TkTable::build(k, 60);
    REQUIRE(table.k() == k);
    REQUIRE(table.limit() == 60);
    REQUIRE(table[0] == 1);
    for (size_t n = 0; n <= 60; ++n) REQUIRE(table[n] == oracle::count_tuples(k, n, tri));
  }
}

TEST_CASE("t_4 equals sigma(2n+1)") {
  const auto t4 = TkTable::build(4, 1000);
  const auto sigma = SigmaTable::build(2001);
  for (size_t n = 0; n <= 1000; ++n) REQUIRE(t4[n] == sigma[2 * n + 1]);
}

TEST_CASE("large k stays exact") {
  // t_40(n) exceeds 64 bits well before n = 300.
  const auto t40 = TkTable::build(40, 300);
  const auto t20 = TkTable::build(20, 300);
  const auto squared = series_mul(TruncatedSeries({t20.counts().begin(), t20.counts().end()}),
                                  TruncatedSeries({t20.counts().begin(), t20.counts().end()}));
  CHECK(mpz_sizeinbase(t40[300].get_mpz_t(), 2) > 64);
  for (size_t n = 0; n <= 300; ++n) REQUIRE(t40[n] == squared[n]);
  const auto tri = oracle::triangulars_upto(5);
  for (size_t n = 0; n <= 5; ++n) REQUIRE(t40[n] == oracle::count_tuples(40, n, tri));
}

TEST_CASE("generating-function identity") {
  const auto product = series_mul(psi_series(6), g_series(6));
  CHECK(product[1] == 1);  // g(1) = T_1
  CHECK(product[2] == 0);  // g(2) + g(1), 2 not triangular
  CHECK(product[6] == 6);  // T_3

  const auto report = verify_gf_identity(2000);
  CHECK(report.identity == Identity::kGfIdentity);
  CHECK(report.checked_count == 2000);
  CHECK(report.failures.empty());

  const auto sub = verify_gf_identity(10, 20);
  CHECK(sub.lo == 10);
  CHECK(sub.checked_count == 11);
  CHECK_THROWS_AS(verify_gf_identity(0, 5), InvalidArgument);
  CHECK_THROWS_AS(verify_gf_identity(6, 5), InvalidArgument);
}
