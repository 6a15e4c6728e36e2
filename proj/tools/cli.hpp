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
#include <iosfwd>
#include <optional>
#include <string>

#include "sigmacong/sigmacong.h"

namespace sigmacong_cli {

enum class Command { kSigma, kGseq, kTk, kVerify, kScan, kBench };

struct RunConfig {
  Command command = Command::kSigma;
  uint64_t limit = 0;
  uint64_t lo = 1;
  uint64_t hi = 0;
  uint32_t k = 4;
  sc_identity identity = SC_IDENTITY_DIV1;
  sc_scan_kind kind = SC_SCAN_MOD5;
  sc_format format = SC_FORMAT_CSV;
  std::optional<std::string> out_path;
  // verify/scan: read sigma from an "n,sigma" CSV instead of the sieve.
  std::optional<std::string> sigma_file;
  unsigned threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

struct ParseResult {
  std::optional<RunConfig> config;  // empty when the caller should exit
  int exit_code = kExitOk;
};

// Validates argv, including the program name at argv[0]. --help prints
// usage to `out` and yields exit 0; any parse or validation error goes to
// `err` with exit 2.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes a validated config. Data goes to `out` (or --out), progress and
// diagnostics to `err`. Returns 0 on success, 1 when a verification or scan
// found failures, 2 on usage or resource errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv);

}  // namespace sigmacong_cli
