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
#include <map>
#include <string_view>
#include <vector>

#include "sigmacong/checked.hpp"

namespace sigmacong {

enum class Identity { kDiv1, kDiv2, kDiv3, kTkRecurrence, kGfIdentity };

enum class ScanKind { kMod5, kMod4, kClassic3, kClassic4 };

std::string_view identity_name(Identity id);
Identity parse_identity(std::string_view name);
std::string_view scan_kind_name(ScanKind kind);
ScanKind parse_scan_kind(std::string_view name);
uint32_t scan_modulus(ScanKind kind);

struct RecurrenceFailure {
  uint64_t n = 0;
  i128 lhs = 0;
  i128 rhs = 0;
  i128 residual = 0;

  bool operator==(const RecurrenceFailure&) const = default;
};

// Result of checking one identity over [lo, hi]. Only failures are kept;
// passes are counted.
struct RecurrenceReport {
  Identity identity = Identity::kDiv1;
  uint32_t k = 0;  // t_k order for kTkRecurrence, 0 otherwise
  uint64_t lo = 0;
  uint64_t hi = 0;
  uint64_t checked_count = 0;
  std::vector<RecurrenceFailure> failures;  // ordered by n

  bool passed() const { return failures.empty(); }
  bool operator==(const RecurrenceReport&) const = default;
};

struct ScanViolation {
  uint64_t n = 0;
  u128 sum = 0;
  uint32_t residue = 0;

  bool operator==(const ScanViolation&) const = default;
};

struct ScanReport {
  ScanKind kind = ScanKind::kMod5;
  uint64_t lo = 0;
  uint64_t hi = 0;
  uint64_t checked_count = 0;         // n satisfying the hypothesis
  uint64_t hypothesis_excluded = 0;   // n the congruence makes no claim about
  std::vector<ScanViolation> violations;  // ordered by n
  std::map<uint32_t, uint64_t> residue_histogram;  // over excluded n

  bool passed() const { return violations.empty(); }
  bool operator==(const ScanReport&) const = default;
};

// Work partitioning for batch verification and scans. Results do not depend
// on the thread count. The progress callback fires on the calling thread
// after each completed block of kProgressBlock values of n.
inline constexpr uint64_t kProgressBlock = 100000;

struct RunOptions {
  unsigned threads = 1;
  void (*progress)(uint64_t done, uint64_t total, void* user) = nullptr;
  void* progress_user = nullptr;
};

}  // namespace sigmacong
