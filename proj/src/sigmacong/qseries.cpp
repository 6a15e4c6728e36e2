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
#include "sigmacong/qseries.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sigmacong/divisor_core.hpp"
#include "sigmacong/errors.hpp"

namespace sigmacong {

namespace {

void check_order(std::size_t order) {
  if (order > kMaxSeriesOrder) {
    throw ResourceError("series order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(kMaxSeriesOrder));
  }
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw InvalidArgument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
  }
}

std::size_t max_bits(std::span<const mpz_class> coeffs) {
  std::size_t bits = 0;
  for (const auto& c : coeffs) {
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

std::size_t nonzero_count(std::span<const mpz_class> coeffs) {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return sgn(c) != 0; }));
}

// Convolution with 128-bit accumulators. Caller guarantees
// bits(a) + bits(b) + bits(order+1) <= 126, so no partial sum can overflow.
std::vector<mpz_class> mul_small(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  const std::size_t n = a.size();
  std::vector<int64_t> bs(n);
  for (std::size_t j = 0; j < n; ++j) bs[j] = b[j].get_si();
  std::vector<i128> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    const i128 ai = a[i].get_si();
    const std::size_t span = n - i;
    i128* out = acc.data() + i;
    for (std::size_t j = 0; j < span; ++j) out[j] += ai * bs[j];
  }
  std::vector<mpz_class> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = from_i128(acc[i]);
  return result;
}

std::vector<mpz_class> mul_big(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  const std::size_t n = a.size();
  std::vector<mpz_class> result(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(result[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return result;
}

}  // namespace

i128 to_i128(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 127) throw OverflowError("integer exceeds 128 bits");
  uint64_t words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(uint64_t), 0, 0, v.get_mpz_t());
  const u128 magnitude = (static_cast<u128>(words[1]) << 64) | words[0];
  const auto value = static_cast<i128>(magnitude);
  return sgn(v) < 0 ? -value : value;
}

mpz_class from_i128(i128 v) {
  const bool negative = v < 0;
  const u128 magnitude = negative ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
  const uint64_t words[2] = {static_cast<uint64_t>(magnitude), static_cast<uint64_t>(magnitude >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

TruncatedSeries::TruncatedSeries(std::size_t order) {
  check_order(order);
  coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("TruncatedSeries: at least one coefficient required");
  check_order(coeffs_.size() - 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_int64(std::span<const int64_t> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.emplace_back(static_cast<signed long>(v));
  return TruncatedSeries(std::move(c));
}

const mpz_class& TruncatedSeries::coeff(std::size_t i) const {
  if (i > order()) {
    throw RangeError("coefficient index " + std::to_string(i) + " beyond order " +
                     std::to_string(order()));
  }
  return coeffs_[i];
}

TruncatedSeries TruncatedSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) throw InvalidArgument("truncate: cannot raise the order of a series");
  return TruncatedSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_add");
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_mul");
  auto lhs = a.coeffs();
  auto rhs = b.coeffs();
  // Iterate over the sparser operand in the outer loop.
  if (nonzero_count(rhs) < nonzero_count(lhs)) std::swap(lhs, rhs);
  const std::size_t bits_l = max_bits(lhs);
  const std::size_t bits_r = max_bits(rhs);
  const auto bits_n = static_cast<std::size_t>(std::bit_width(lhs.size()));
  if (bits_l <= 63 && bits_r <= 63 && bits_l + bits_r + bits_n <= 126) {
    return TruncatedSeries(mul_small(lhs, rhs));
  }
  return TruncatedSeries(mul_big(lhs, rhs));
}

TruncatedSeries series_pow(const TruncatedSeries& a, uint64_t k) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  if (k == 0) return result;
  TruncatedSeries base = a;
  bool first = true;
  while (true) {
    if (k & 1) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k == 0) break;
    base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries psi_series(std::size_t order) {
  check_order(order);
  std::vector<mpz_class> c(order + 1);
  for (uint64_t j = 0;; ++j) {
    const uint64_t t = triangular(j);
    if (t > order) break;
    c[t] = 1;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries psi_product_series(std::size_t order) {
  check_order(order);
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t k = 1; 2 * k - 1 <= order; ++k) {
    // Multiply by (1 - q^{2k}).
    const std::size_t even = 2 * k;
    for (std::size_t i = order; i >= even && even <= order; --i) c[i] -= c[i - even];
    // Multiply by 1/(1 - q^{2k-1}) = sum_{i>=0} q^{(2k-1)i}.
    const std::size_t odd = 2 * k - 1;
    for (std::size_t i = odd; i <= order; ++i) c[i] += c[i - odd];
  }
  return TruncatedSeries(std::move(c));
}

TkTable TkTable::build(uint32_t k, std::size_t limit) {
  if (k == 0) throw InvalidArgument("TkTable: k must be at least 1");
  auto power = series_pow(psi_series(limit), k);
  return TkTable(k, std::vector<mpz_class>(power.coeffs().begin(), power.coeffs().end()));
}

const mpz_class& TkTable::at(std::size_t n) const {
  if (n > limit()) {
    throw RangeError("TkTable: index " + std::to_string(n) + " beyond limit " +
                     std::to_string(limit()));
  }
  return counts_[n];
}

RecurrenceReport verify_gf_identity(uint64_t lo, uint64_t hi) {
  if (lo == 0 || lo > hi) throw InvalidArgument("verify_gf_identity: need 1 <= lo <= hi");
  check_order(hi);
  const auto table = SigmaTable::build(hi);
  std::vector<mpz_class> g(hi + 1);
  for (uint64_t n = 1; n <= hi; ++n) g[n] = static_cast<signed long>(table.g(n));
  const auto product = series_mul(psi_series(hi), TruncatedSeries(std::move(g)));

  RecurrenceReport report;
  report.identity = Identity::kGfIdentity;
  report.lo = lo;
  report.hi = hi;
  for (uint64_t n = lo; n <= hi; ++n) {
    const i128 lhs = to_i128(product[n]);
    const i128 rhs = is_triangular(n) ? static_cast<i128>(n) : 0;
    if (lhs != rhs) report.failures.push_back({n, lhs, rhs, checked_sub(lhs, rhs)});
    ++report.checked_count;
  }
  return report;
}

}  // namespace sigmacong
