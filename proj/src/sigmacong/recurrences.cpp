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
#include "sigmacong/recurrences.hpp"

#include <string>

#include "sigmacong/errors.hpp"
#include "sigmacong/parallel.hpp"

// Overflow bound for the residuals. SigmaTable caps limit at 2^32, and
// Robin's bound sigma(m)/m < e^gamma ln ln m + 0.6483 / ln ln m gives
// sigma(m) < 6m < 2^35 for 3 <= m <= 2^32. For n with 2n+1 <= 2^32:
//   div1: |5j(j+1) - 2n| <= 10n < 2^36, so each term is < 2^71, and there
//         are fewer than 2^17 terms: |sum| < 2^88.
//   div2: at most 2^17 terms each below 2^38: |sum| < 2^55.
//   div3: |g(j)| <= 4 sigma(j/2) + sigma(j) < 2^38, products < 2^73 and at
//         most 2^31 of them: |sum| < 2^104.
// All far below 2^127, so the div3 inner loop runs unchecked; the short
// div1/div2 loops use checked arithmetic regardless.

namespace sigmacong {

namespace {

void require_positive(uint64_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": n must be positive");
}

void require_odd_coverage(uint64_t n, const SigmaTable& table, const char* what) {
  if (n > (table.limit() - 1) / 2) {
    throw RangeError(std::string(what) + ": 2n+1 = " + to_string(static_cast<u128>(n) * 2 + 1) +
                     " exceeds table limit " + std::to_string(table.limit()));
  }
}

}  // namespace

IdentityTerms div1_terms(uint64_t n, const SigmaTable& table) {
  require_positive(n, "div1");
  require_odd_coverage(n, table, "div1");
  const uint64_t m = 2 * n + 1;
  IdentityTerms t;
  t.lhs = checked_mul(static_cast<i128>(2 * n), static_cast<i128>(table[m]));
  // j(j+1) <= 2n keeps the sigma argument positive.
  for (uint64_t j = 1; j * (j + 1) <= 2 * n; ++j) {
    const uint64_t pj = j * (j + 1);
    const i128 weight = static_cast<i128>(5 * pj) - static_cast<i128>(2 * n);
    t.rhs = checked_add(t.rhs, checked_mul(weight, static_cast<i128>(table[m - pj])));
  }
  return t;
}

IdentityTerms div2_terms(uint64_t n, const SigmaTable& table) {
  require_positive(n, "div2");
  if (n > table.limit()) {
    throw RangeError("div2: n = " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(table.limit()));
  }
  IdentityTerms t;
  for (uint64_t j = 0;; ++j) {
    const uint64_t tj = triangular(j);
    if (tj > n) break;
    const uint64_t m = n - tj;  // m = 0 contributes sigma(0) = 0
    i128 term = static_cast<i128>(table[m]);
    if (m % 2 == 0) term = checked_sub(term, checked_mul(4, static_cast<i128>(table[m / 2])));
    t.lhs = checked_add(t.lhs, term);
  }
  t.rhs = is_triangular(n) ? static_cast<i128>(n) : 0;
  return t;
}

IdentityTerms div3_terms(uint64_t n, const SigmaTable& table) {
  require_positive(n, "div3");
  require_odd_coverage(n, table, "div3");
  const uint64_t m = 2 * n + 1;
  IdentityTerms t;
  t.lhs = checked_mul(static_cast<i128>(n), static_cast<i128>(table[m]));
  i128 sum = 0;
  // j <= n keeps 2n+1-2j >= 1. Bounded by the proof at the top of the file.
  for (uint64_t j = 1; j <= n; ++j) sum += static_cast<i128>(table.g(j)) * static_cast<i128>(table[m - 2 * j]);
  t.rhs = checked_mul(4, sum);
  return t;
}

IdentityTerms tk_recurrence_terms(uint64_t n, const TkTable& tk) {
  require_positive(n, "tk_recurrence");
  if (n > tk.limit()) {
    throw RangeError("tk_recurrence: n = " + std::to_string(n) + " exceeds t_k table limit " +
                     std::to_string(tk.limit()));
  }
  mpz_class sum = mpz_class(static_cast<unsigned long>(n)) * tk[n];
  const mpz_class k1 = static_cast<unsigned long>(tk.k()) + 1;
  for (uint64_t j = 1;; ++j) {
    const uint64_t tj = triangular(j);
    if (tj > n) break;
    // n - T_j = 0 is included: t_k(0) = 1.
    const mpz_class weight = mpz_class(static_cast<unsigned long>(n)) - k1 * static_cast<unsigned long>(tj);
    sum += weight * tk[n - tj];
  }
  IdentityTerms t;
  t.lhs = to_i128(sum);
  t.rhs = 0;
  return t;
}

std::vector<uint64_t> sigma_odd_via_div1(uint64_t limit_n) {
  if (limit_n >= kMaxTableLimit / 2) {
    throw ResourceError("sigma_odd_via_div1: limit_n " + std::to_string(limit_n) + " exceeds cap");
  }
  std::vector<uint64_t> out(limit_n + 1);
  out[0] = 1;
  for (uint64_t n = 1; n <= limit_n; ++n) {
    // Argument 2n+1 - j(j+1) is odd; its index is n - T_j.
    i128 sum = 0;
    for (uint64_t j = 1; j * (j + 1) <= 2 * n; ++j) {
      const uint64_t pj = j * (j + 1);
      const i128 weight = static_cast<i128>(5 * pj) - static_cast<i128>(2 * n);
      sum = checked_add(sum, checked_mul(weight, static_cast<i128>(out[n - pj / 2])));
    }
    const auto divisor = static_cast<i128>(2 * n);
    if (sum % divisor != 0) {
      throw InexactDivision("sigma_odd_via_div1: sum at n = " + std::to_string(n) +
                            " is not divisible by 2n");
    }
    const i128 value = sum / divisor;
    if (value <= 0 || value > static_cast<i128>(UINT64_MAX)) {
      throw OverflowError("sigma_odd_via_div1: value at n = " + std::to_string(n) + " out of range");
    }
    out[n] = static_cast<uint64_t>(value);
  }
  return out;
}

uint64_t required_table_limit(Identity identity, uint64_t hi) {
  switch (identity) {
    case Identity::kDiv1:
    case Identity::kDiv3:
      return 2 * hi + 1;
    case Identity::kDiv2:
    case Identity::kTkRecurrence:
      return hi;
    case Identity::kGfIdentity:
      return 0;
  }
  return 0;
}

RecurrenceReport batch_verify(Identity identity, uint64_t lo, uint64_t hi, const SigmaTable* table,
                              const TkTable* tk, const RunOptions& options) {
  if (lo == 0 || lo > hi) throw InvalidArgument("batch_verify: need 1 <= lo <= hi");
  if (identity == Identity::kGfIdentity) return verify_gf_identity(lo, hi);

  const uint64_t needed = required_table_limit(identity, hi);
  if (identity == Identity::kTkRecurrence) {
    if (tk == nullptr) throw InvalidArgument("batch_verify: t_k recurrence needs a t_k table");
    if (tk->limit() < needed) {
      throw RangeError("batch_verify: t_k table limit " + std::to_string(tk->limit()) +
                       " < required " + std::to_string(needed));
    }
  } else {
    if (table == nullptr) throw InvalidArgument("batch_verify: sigma table required");
    if (hi > (kMaxTableLimit - 1) / 2 || table->limit() < needed) {
      throw RangeError("batch_verify: sigma table limit " + std::to_string(table->limit()) +
                       " < required " + std::to_string(needed));
    }
  }

  RecurrenceReport report;
  report.identity = identity;
  report.k = identity == Identity::kTkRecurrence ? tk->k() : 0;
  report.lo = lo;
  report.hi = hi;

  // div3 is a convolution of g with sigma at odd arguments; precompute both
  // as contiguous arrays so the inner loop streams.
  std::vector<int64_t> g;
  std::vector<uint64_t> odd_sigma;
  if (identity == Identity::kDiv3) {
    g.resize(hi + 1);
    odd_sigma.resize(hi + 1);
    for (uint64_t j = 1; j <= hi; ++j) g[j] = table->g(j);
    for (uint64_t i = 0; i <= hi; ++i) odd_sigma[i] = (*table)[2 * i + 1];
  }

  auto evaluate = [&](uint64_t n) -> IdentityTerms {
    switch (identity) {
      case Identity::kDiv1:
        return div1_terms(n, *table);
      case Identity::kDiv2:
        return div2_terms(n, *table);
      case Identity::kDiv3: {
        IdentityTerms t;
        t.lhs = static_cast<i128>(n) * static_cast<i128>(odd_sigma[n]);
        i128 sum = 0;
        const uint64_t* s = odd_sigma.data() + n;  // s[-j] = sigma(2(n-j)+1)
        for (uint64_t j = 1; j <= n; ++j) sum += static_cast<i128>(g[j]) * static_cast<i128>(*(s - j));
        t.rhs = checked_mul(4, sum);
        return t;
      }
      case Identity::kTkRecurrence:
        return tk_recurrence_terms(n, *tk);
      case Identity::kGfIdentity:
        break;
    }
    throw InvalidArgument("batch_verify: unsupported identity");
  };

  detail::run_blocked<std::vector<RecurrenceFailure>>(
      lo, hi, options,
      [&](uint64_t a, uint64_t b) {
        std::vector<RecurrenceFailure> failures;
        for (uint64_t n = a; n <= b; ++n) {
          const auto t = evaluate(n);
          if (t.lhs != t.rhs) failures.push_back({n, t.lhs, t.rhs, t.residual()});
        }
        return failures;
      },
      [&](std::vector<RecurrenceFailure>&& part) {
        report.failures.insert(report.failures.end(), part.begin(), part.end());
      });
  report.checked_count = hi - lo + 1;
  return report;
}

}  // namespace sigmacong
