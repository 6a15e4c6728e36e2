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
#include "sigmacong/report_io.hpp"

#include <json.hpp>

#include <sstream>

#include "sigmacong/errors.hpp"

namespace sigmacong {

namespace {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; wider ones are strings.
Json wide(i128 v) {
  if (fits_int64(v)) return static_cast<int64_t>(v);
  return to_string(v);
}

Json wide(u128 v) {
  if (v <= UINT64_MAX) return static_cast<uint64_t>(v);
  return to_string(v);
}

i128 read_i128(const Json& j) {
  if (j.is_string()) return parse_i128(j.get<std::string>());
  if (j.is_number_unsigned()) return static_cast<i128>(j.get<uint64_t>());
  if (j.is_number_integer()) return static_cast<i128>(j.get<int64_t>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

u128 read_u128(const Json& j) {
  if (j.is_string()) return parse_u128(j.get<std::string>());
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer() && j.get<int64_t>() >= 0) return static_cast<u128>(j.get<int64_t>());
  throw InvalidArgument("expected a nonnegative integer, got " + j.dump());
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

std::string_view format_name(Format f) {
  switch (f) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kPlain: return "plain";
  }
  return "unknown";
}

Format parse_format(std::string_view name) {
  for (auto f : {Format::kCsv, Format::kJson, Format::kPlain}) {
    if (format_name(f) == name) return f;
  }
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string render(const RecurrenceReport& r, Format format) {
  std::ostringstream out;
  const auto name = identity_name(r.identity);
  switch (format) {
    case Format::kCsv:
      out << "identity,n,lhs,rhs,residual\n";
      for (const auto& f : r.failures) {
        out << name << ',' << f.n << ',' << to_string(f.lhs) << ',' << to_string(f.rhs) << ','
            << to_string(f.residual) << '\n';
      }
      break;
    case Format::kJson: {
      Json doc;
      doc["identity"] = name;
      doc["k"] = r.k;
      doc["lo"] = r.lo;
      doc["hi"] = r.hi;
      doc["checked_count"] = r.checked_count;
      doc["failure_count"] = r.failures.size();
      doc["failures"] = Json::array();
      for (const auto& f : r.failures) {
        doc["failures"].push_back(
            {{"n", f.n}, {"lhs", wide(f.lhs)}, {"rhs", wide(f.rhs)}, {"residual", wide(f.residual)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kPlain:
      out << "identity: " << name;
      if (r.identity == Identity::kTkRecurrence) out << " (k=" << r.k << ")";
      out << "\nrange: [" << r.lo << ", " << r.hi << "]\n"
          << "checked: " << r.checked_count << "\n"
          << "failures: " << r.failures.size() << "\n";
      for (const auto& f : r.failures) {
        out << "  n=" << f.n << " lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs)
            << " residual=" << to_string(f.residual) << '\n';
      }
      out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
      break;
  }
  return out.str();
}

std::string render(const ScanReport& r, Format format) {
  std::ostringstream out;
  const auto name = scan_kind_name(r.kind);
  switch (format) {
    case Format::kCsv:
      out << "kind,n,sum,residue\n";
      for (const auto& v : r.violations) {
        out << name << ',' << v.n << ',' << to_string(v.sum) << ',' << v.residue << '\n';
      }
      break;
    case Format::kJson: {
      Json doc;
      doc["kind"] = name;
      doc["modulus"] = scan_modulus(r.kind);
      doc["lo"] = r.lo;
      doc["hi"] = r.hi;
      doc["checked_count"] = r.checked_count;
      doc["hypothesis_excluded"] = r.hypothesis_excluded;
      doc["violation_count"] = r.violations.size();
      doc["violations"] = Json::array();
      for (const auto& v : r.violations) {
        doc["violations"].push_back({{"n", v.n}, {"sum", wide(v.sum)}, {"residue", v.residue}});
      }
      doc["residue_histogram"] = Json::object();
      for (const auto& [residue, count] : r.residue_histogram) {
        doc["residue_histogram"][std::to_string(residue)] = count;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kPlain:
      out << "kind: " << name << " (mod " << scan_modulus(r.kind) << ")\n"
          << "range: [" << r.lo << ", " << r.hi << "]\n"
          << "checked: " << r.checked_count << "\n"
          << "hypothesis excluded: " << r.hypothesis_excluded << "\n"
          << "violations: " << r.violations.size() << "\n";
      for (const auto& v : r.violations) {
        out << "  n=" << v.n << " sum=" << to_string(v.sum) << " residue=" << v.residue << '\n';
      }
      for (const auto& [residue, count] : r.residue_histogram) {
        out << "  excluded residue " << residue << ": " << count << '\n';
      }
      out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
      break;
  }
  return out.str();
}

RecurrenceReport recurrence_report_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    RecurrenceReport r;
    r.identity = parse_identity(doc.at("identity").get<std::string>());
    r.k = doc.at("k").get<uint32_t>();
    r.lo = doc.at("lo").get<uint64_t>();
    r.hi = doc.at("hi").get<uint64_t>();
    r.checked_count = doc.at("checked_count").get<uint64_t>();
    for (const auto& f : doc.at("failures")) {
      r.failures.push_back({f.at("n").get<uint64_t>(), read_i128(f.at("lhs")), read_i128(f.at("rhs")),
                            read_i128(f.at("residual"))});
    }
    if (doc.at("failure_count").get<uint64_t>() != r.failures.size()) {
      throw InvalidArgument("report JSON: failure_count disagrees with failures");
    }
    return r;
  });
}

ScanReport scan_report_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    ScanReport r;
    r.kind = parse_scan_kind(doc.at("kind").get<std::string>());
    r.lo = doc.at("lo").get<uint64_t>();
    r.hi = doc.at("hi").get<uint64_t>();
    r.checked_count = doc.at("checked_count").get<uint64_t>();
    r.hypothesis_excluded = doc.at("hypothesis_excluded").get<uint64_t>();
    for (const auto& v : doc.at("violations")) {
      r.violations.push_back({v.at("n").get<uint64_t>(), read_u128(v.at("sum")), v.at("residue").get<uint32_t>()});
    }
    if (doc.at("violation_count").get<uint64_t>() != r.violations.size()) {
      throw InvalidArgument("report JSON: violation_count disagrees with violations");
    }
    const uint32_t modulus = scan_modulus(r.kind);
    for (const auto& [key, count] : doc.at("residue_histogram").items()) {
      const u128 residue = parse_u128(key);
      if (residue >= modulus) throw InvalidArgument("report JSON: histogram residue out of range");
      r.residue_histogram[static_cast<uint32_t>(residue)] = count.get<uint64_t>();
    }
    return r;
  });
}

}  // namespace sigmacong
