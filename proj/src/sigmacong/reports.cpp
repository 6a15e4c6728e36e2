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
#include "sigmacong/reports.hpp"

#include <string>

#include "sigmacong/errors.hpp"

namespace sigmacong {

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::kDiv1: return "div1";
    case Identity::kDiv2: return "div2";
    case Identity::kDiv3: return "div3";
    case Identity::kTkRecurrence: return "tk";
    case Identity::kGfIdentity: return "gf";
  }
  return "unknown";
}

Identity parse_identity(std::string_view name) {
  for (auto id : {Identity::kDiv1, Identity::kDiv2, Identity::kDiv3, Identity::kTkRecurrence,
                  Identity::kGfIdentity}) {
    if (identity_name(id) == name) return id;
  }
  throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

std::string_view scan_kind_name(ScanKind kind) {
  switch (kind) {
    case ScanKind::kMod5: return "mod5";
    case ScanKind::kMod4: return "mod4";
    case ScanKind::kClassic3: return "classic3";
    case ScanKind::kClassic4: return "classic4";
  }
  return "unknown";
}

ScanKind parse_scan_kind(std::string_view name) {
  for (auto kind : {ScanKind::kMod5, ScanKind::kMod4, ScanKind::kClassic3, ScanKind::kClassic4}) {
    if (scan_kind_name(kind) == name) return kind;
  }
  throw InvalidArgument("unknown scan kind '" + std::string(name) + "'");
}

uint32_t scan_modulus(ScanKind kind) {
  switch (kind) {
    case ScanKind::kMod5: return 5;
    case ScanKind::kMod4: return 4;
    case ScanKind::kClassic3: return 3;
    case ScanKind::kClassic4: return 4;
  }
  return 1;
}

}  // namespace sigmacong
