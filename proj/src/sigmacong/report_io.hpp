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

#include <string>
#include <string_view>

#include "sigmacong/reports.hpp"

namespace sigmacong {

enum class Format { kCsv, kJson, kPlain };

std::string_view format_name(Format f);
Format parse_format(std::string_view name);

// CSV: header then one row per failure (identity,n,lhs,rhs,residual) or
// violation (kind,n,sum,residue). JSON carries the same rows plus the
// summary counts and the excluded-residue histogram. PLAIN is a
// human-readable summary. Output is a pure function of the report.
std::string render(const RecurrenceReport& report, Format format);
std::string render(const ScanReport& report, Format format);

// Inverse of render(..., Format::kJson). Throws InvalidArgument on
// malformed documents.
RecurrenceReport recurrence_report_from_json(std::string_view text);
ScanReport scan_report_from_json(std::string_view text);

}  // namespace sigmacong
