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
#include <utility>

#include "sigmacong/checked.hpp"
#include "sigmacong/divisor_core.hpp"
#include "sigmacong/reports.hpp"

namespace sigmacong {

// S(n) = sum_{j>=0, j(j+1) <= 2n} sigma(2n+1 - j(j+1)). S(n) = 0 mod 5
// whenever 5 does not divide n. Requires n >= 1, 2n+1 <= table.limit().
u128 mod5_sum(uint64_t n, const SigmaTable& table);

// S(n) = sum_{j>=0, T_j <= n} sigma(n - T_j). S(n) = 0 mod 4 whenever n
// is not triangular. Requires 1 <= n <= table.limit().
u128 mod4_sum(uint64_t n, const SigmaTable& table);

// (3 | sigma(3n+2), 4 | sigma(4n+3)). Requires 4n+3 <= table.limit().
std::pair<bool, bool> classic_check(uint64_t n, const SigmaTable& table);

// Table coverage needed to scan `kind` up to hi.
u128 required_table_limit(ScanKind kind, uint64_t hi);

// Checks the congruence for every n in [lo, hi] covered by its hypothesis
// and histograms residues of the excluded n. MOD5/MOD4 need lo >= 1; the
// classic kinds accept lo = 0 and have no excluded class.
ScanReport scan(ScanKind kind, uint64_t lo, uint64_t hi, const SigmaTable& table,
                const RunOptions& options = {});

}  // namespace sigmacong
