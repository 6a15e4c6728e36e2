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
#include "sigmacong/congruences.hpp"

#include <map>
#include <string>
#include <vector>

#include "sigmacong/errors.hpp"
#include "sigmacong/parallel.hpp"

namespace sigmacong {

namespace {

void require_coverage(u128 needed, const SigmaTable& table, const char* what) {
  if (needed > table.limit()) {
    throw RangeError(std::string(what) + ": needs sigma up to " + to_string(needed) +
                     ", table limit is " + std::to_string(table.limit()));
  }
}

struct ScanPartial {
  uint64_t checked = 0;
  uint64_t excluded = 0;
  std::vector<ScanViolation> violations;
  std::map<uint32_t, uint64_t> histogram;
};

}  // namespace

u128 mod5_sum(uint64_t n, const SigmaTable& table) {
  if (n == 0) throw InvalidArgument("mod5_sum: n must be positive");
  require_coverage(static_cast<u128>(n) * 2 + 1, table, "mod5_sum");
  const uint64_t m = 2 * n + 1;
  u128 sum = 0;
  for (uint64_t j = 0; j * (j + 1) <= 2 * n; ++j) sum += table[m - j * (j + 1)];
  return sum;
}

u128 mod4_sum(uint64_t n, const SigmaTable& table) {
  if (n == 0) throw InvalidArgument("mod4_sum: n must be positive");
  require_coverage(n, table, "mod4_sum");
  u128 sum = 0;
  // The T_j = n term adds sigma(0) = 0.
  for (uint64_t j = 0;; ++j) {
    const uint64_t tj = triangular(j);
    if (tj > n) break;
    sum += table[n - tj];
  }
  return sum;
}

std::pair<bool, bool> classic_check(uint64_t n, const SigmaTable& table) {
  require_coverage(static_cast<u128>(n) * 4 + 3, table, "classic_check");
  return {table[3 * n + 2] % 3 == 0, table[4 * n + 3] % 4 == 0};
}

u128 required_table_limit(ScanKind kind, uint64_t hi) {
  switch (kind) {
    case ScanKind::kMod5:
      return static_cast<u128>(hi) * 2 + 1;
    case ScanKind::kMod4:
      return hi;
    case ScanKind::kClassic3:
      return static_cast<u128>(hi) * 3 + 2;
    case ScanKind::kClassic4:
      return static_cast<u128>(hi) * 4 + 3;
  }
  return 0;
}

ScanReport scan(ScanKind kind, uint64_t lo, uint64_t hi, const SigmaTable& table,
                const RunOptions& options) {
  const bool classic = kind == ScanKind::kClassic3 || kind == ScanKind::kClassic4;
  if (lo > hi || (!classic && lo == 0)) {
    throw InvalidArgument(classic ? "scan: need lo <= hi" : "scan: need 1 <= lo <= hi");
  }
  require_coverage(required_table_limit(kind, hi), table, "scan");

  const uint32_t modulus = scan_modulus(kind);
  ScanReport report;
  report.kind = kind;
  report.lo = lo;
  report.hi = hi;

  // Sums stay unreduced: with limit <= 2^32, each is below 2^17 * 2^35.
  auto evaluate = [&](uint64_t n, bool& excluded) -> u128 {
    switch (kind) {
      case ScanKind::kMod5:
        excluded = n % 5 == 0;
        return mod5_sum(n, table);
      case ScanKind::kMod4:
        excluded = is_triangular(n);
        return mod4_sum(n, table);
      case ScanKind::kClassic3:
        excluded = false;
        return table[3 * n + 2];
      case ScanKind::kClassic4:
        excluded = false;
        return table[4 * n + 3];
    }
    return 0;
  };

  detail::run_blocked<ScanPartial>(
      lo, hi, options,
      [&](uint64_t a, uint64_t b) {
        ScanPartial part;
        for (uint64_t n = a; n <= b; ++n) {
          bool excluded = false;
          const u128 sum = evaluate(n, excluded);
          const auto residue = static_cast<uint32_t>(sum % modulus);
          if (excluded) {
            ++part.excluded;
            ++part.histogram[residue];
          } else {
            ++part.checked;
            if (residue != 0) part.violations.push_back({n, sum, residue});
          }
        }
        return part;
      },
      [&](ScanPartial&& part) {
        report.checked_count += part.checked;
        report.hypothesis_excluded += part.excluded;
        report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
        for (const auto& [residue, count] : part.histogram) report.residue_histogram[residue] += count;
      });
  return report;
}

}  // namespace sigmacong
