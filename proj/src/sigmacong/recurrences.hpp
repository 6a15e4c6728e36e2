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
#include <vector>

#include "sigmacong/checked.hpp"
#include "sigmacong/divisor_core.hpp"
#include "sigmacong/qseries.hpp"
#include "sigmacong/reports.hpp"

namespace sigmacong {

// Both sides of an identity evaluated exactly at one n.
struct IdentityTerms {
  i128 lhs = 0;
  i128 rhs = 0;
  i128 residual() const { return checked_sub(lhs, rhs); }
};

// 2n sigma(2n+1) = sum_{j>=1} (5j(j+1) - 2n) sigma(2n+1 - j(j+1)).
// Requires n >= 1 and 2n+1 <= table.limit().
IdentityTerms div1_terms(uint64_t n, const SigmaTable& table);

// sum_{j>=0} [sigma(n - T_j) - 4 sigma((n - T_j)/2)] = (n if n triangular else 0).
// Requires 1 <= n <= table.limit().
IdentityTerms div2_terms(uint64_t n, const SigmaTable& table);

// n sigma(2n+1) = 4 sum_{j=1}^{n} g(j) sigma(2n+1-2j).
// Requires n >= 1 and 2n+1 <= table.limit().
IdentityTerms div3_terms(uint64_t n, const SigmaTable& table);

// n t_k(n) + sum_{j>=1} (n - (k+1) T_j) t_k(n - T_j) = 0, including the
// term where n - T_j = 0 (t_k(0) = 1). lhs holds the full sum, rhs = 0.
IdentityTerms tk_recurrence_terms(uint64_t n, const TkTable& tk);

inline i128 div1_residual(uint64_t n, const SigmaTable& t) { return div1_terms(n, t).residual(); }
inline i128 div2_residual(uint64_t n, const SigmaTable& t) { return div2_terms(n, t).residual(); }
inline i128 div3_residual(uint64_t n, const SigmaTable& t) { return div3_terms(n, t).residual(); }
inline i128 tk_recurrence_residual(uint64_t n, const TkTable& tk) {
  return tk_recurrence_terms(n, tk).residual();
}

// sigma(2n+1) for 0 <= n <= limit_n, generated from the div1 recurrence
// alone (no sieve, no factoring). Every division by 2n is checked for
// exactness; a remainder throws InexactDivision.
std::vector<uint64_t> sigma_odd_via_div1(uint64_t limit_n);

// Table coverage needed to check `identity` up to hi.
uint64_t required_table_limit(Identity identity, uint64_t hi);

// Runs the residual for every n in [lo, hi] and keeps the nonzero ones.
// DIV1/DIV2/DIV3 need `table`; TK_REC needs `tk`; GF_IDENTITY needs neither.
// Coverage is validated before any n is evaluated.
RecurrenceReport batch_verify(Identity identity, uint64_t lo, uint64_t hi, const SigmaTable* table,
                              const TkTable* tk, const RunOptions& options = {});

}  // namespace sigmacong
