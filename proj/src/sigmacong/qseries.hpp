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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigmacong/checked.hpp"
#include "sigmacong/reports.hpp"

namespace sigmacong {

// Upper bound on series order; a dense product at this order is already
// ~10^14 coefficient multiplications.
inline constexpr std::size_t kMaxSeriesOrder = 10'000'000;

// Formal power series with exact integer coefficients, known modulo
// q^(order+1). Values are immutable; every operation returns a new series.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  // Order is coeffs.size() - 1; an empty vector is rejected.
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);

  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries from_int64(std::span<const int64_t> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const mpz_class& coeff(std::size_t i) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  // Drops terms above new_order; new_order must not exceed order().
  TruncatedSeries truncate(std::size_t new_order) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);
// Truncated Cauchy product. Both operands must have the same order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// a^k by binary powering; k = 0 gives the constant series 1.
TruncatedSeries series_pow(const TruncatedSeries& a, uint64_t k);

// psi(q) = sum_{j>=0} q^{T_j}: coefficient 1 at triangular exponents.
TruncatedSeries psi_series(std::size_t order);

// prod_{k>=1} (1 - q^{2k}) / (1 - q^{2k-1}), expanded to the given order.
// Agrees with psi_series; kept as an independent route for cross-checks.
TruncatedSeries psi_product_series(std::size_t order);

// t_k(n) for 0 <= n <= limit: ordered representations of n as a sum of k
// triangular numbers, read off psi(q)^k.
class TkTable {
 public:
  static TkTable build(uint32_t k, std::size_t limit);

  uint32_t k() const { return k_; }
  std::size_t limit() const { return counts_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return counts_[n]; }
  const mpz_class& at(std::size_t n) const;
  std::span<const mpz_class> counts() const { return counts_; }

 private:
  TkTable(uint32_t k, std::vector<mpz_class> counts) : k_(k), counts_(std::move(counts)) {}

  uint32_t k_;
  std::vector<mpz_class> counts_;
};

// Compares psi(q) * sum_{k>=1} g(k) q^k with sum_{j>=0} T_j q^{T_j}
// coefficient by coefficient over [lo, hi]. Mismatches are reported.
RecurrenceReport verify_gf_identity(uint64_t lo, uint64_t hi);
inline RecurrenceReport verify_gf_identity(uint64_t limit) { return verify_gf_identity(1, limit); }

i128 to_i128(const mpz_class& v);
mpz_class from_i128(i128 v);

}  // namespace sigmacong
