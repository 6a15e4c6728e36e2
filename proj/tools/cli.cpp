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
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sigmacong_cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for any failed C API call; carries the library's message.
class ApiError : public std::runtime_error {
 public:
  ApiError(sc_status status, const std::string& what)
      : std::runtime_error(what + ": " + sc_status_string(status) + " (" + sc_last_error_message() + ")") {}
};

void check(sc_status status, const char* what) {
  if (status != SC_OK) throw ApiError(status, what);
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using SigmaTablePtr = std::unique_ptr<sc_sigma_table, Deleter<sc_sigma_table, sc_sigma_table_destroy>>;
using TkTablePtr = std::unique_ptr<sc_tk_table, Deleter<sc_tk_table, sc_tk_table_destroy>>;
using ReportPtr = std::unique_ptr<sc_report, Deleter<sc_report, sc_report_destroy>>;
using ScanReportPtr = std::unique_ptr<sc_scan_report, Deleter<sc_scan_report, sc_scan_report_destroy>>;

SigmaTablePtr make_sigma_table(uint64_t limit) {
  sc_sigma_table* raw = nullptr;
  check(sc_sigma_table_create(limit, &raw), "building sigma table");
  return SigmaTablePtr(raw);
}

TkTablePtr make_tk_table(uint32_t k, uint64_t limit) {
  sc_tk_table* raw = nullptr;
  check(sc_tk_table_create(k, limit, &raw), "building t_k table");
  return TkTablePtr(raw);
}

// Reads the CSV written by `sigma`: optional header, then rows n,sigma(n)
// for n = 1, 2, ... without gaps.
SigmaTablePtr load_sigma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sigma file " + path);
  std::vector<uint64_t> values{0};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && (line.front() < '0' || line.front() > '9')) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      size_t used = 0;
      const uint64_t n = std::stoull(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("bad n");
      const std::string rest = line.substr(comma + 1);
      const uint64_t v = std::stoull(rest, &used);
      if (used != rest.size() || rest.front() == '-') throw std::invalid_argument("bad value");
      if (n != values.size()) throw std::invalid_argument("expected n = " + std::to_string(values.size()));
      values.push_back(v);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed row '" + line + "' (" +
                               e.what() + ")");
    }
  }
  sc_sigma_table* raw = nullptr;
  check(sc_sigma_table_from_values(values.data(), values.size(), &raw), "loading sigma file");
  return SigmaTablePtr(raw);
}

template <class Fn>
std::string fetch_string(Fn&& fn, const char* what) {
  size_t needed = 0;
  check(fn(nullptr, 0, &needed), what);
  std::string text(needed + 1, '\0');
  check(fn(text.data(), text.size(), &needed), what);
  text.resize(needed);
  return text;
}

std::string tk_value(const sc_tk_table* tk, uint64_t n) {
  return fetch_string([&](char* b, size_t c, size_t* need) { return sc_tk_table_get_str(tk, n, b, c, need); },
                      "reading t_k");
}

void report_progress(uint64_t done, uint64_t total, void* user) {
  auto& err = *static_cast<std::ostream*>(user);
  err << "progress: " << done << "/" << total << '\n';
  err.flush();
}

sc_run_options run_options(const RunConfig& c, std::ostream& err) {
  sc_run_options opts{};
  opts.threads = c.threads;
  // Ranges that fit in one progress block stay quiet.
  if (c.hi - c.lo + 1 > 100000) {
    opts.progress = report_progress;
    opts.progress_user = &err;
  }
  return opts;
}

const char* dump_column(const RunConfig& c, std::string& scratch) {
  switch (c.command) {
    case Command::kSigma: return "sigma";
    case Command::kGseq: return "g";
    default:
      scratch = "t" + std::to_string(c.k);
      return scratch.c_str();
  }
}

// Writes (n, value) rows. Values arrive as decimal strings so t_k of any
// size passes through unchanged.
void write_dump(const RunConfig& c, uint64_t first, const std::vector<std::string>& values, std::ostream& out) {
  std::string scratch;
  const char* column = dump_column(c, scratch);
  switch (c.format) {
    case SC_FORMAT_CSV:
      out << "n," << column << '\n';
      for (size_t i = 0; i < values.size(); ++i) out << first + i << ',' << values[i] << '\n';
      break;
    case SC_FORMAT_PLAIN:
      for (size_t i = 0; i < values.size(); ++i) out << first + i << ' ' << values[i] << '\n';
      break;
    case SC_FORMAT_JSON: {
      Json doc;
      doc["sequence"] = column;
      if (c.command == Command::kTk) doc["k"] = c.k;
      doc["limit"] = c.limit;
      doc["first_n"] = first;
      doc["values"] = Json::array();
      for (const auto& v : values) {
        // Up to 18 digits always fits in 64 bits; longer values stay strings.
        const bool negative = !v.empty() && v.front() == '-';
        if (v.size() < 19) {
          if (negative) doc["values"].push_back(std::stoll(v));
          else doc["values"].push_back(std::stoull(v));
        } else {
          doc["values"].push_back(v);
        }
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

int run_dump(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> values;
  uint64_t first = 1;
  if (c.command == Command::kTk) {
    auto tk = make_tk_table(c.k, c.limit);
    first = 0;
    values.reserve(c.limit + 1);
    for (uint64_t n = 0; n <= c.limit; ++n) values.push_back(tk_value(tk.get(), n));
  } else {
    auto table = make_sigma_table(c.limit);
    values.reserve(c.limit);
    for (uint64_t n = 1; n <= c.limit; ++n) {
      if (c.command == Command::kSigma) {
        uint64_t v = 0;
        check(sc_sigma_table_get(table.get(), n, &v), "reading sigma");
        values.push_back(std::to_string(v));
      } else {
        int64_t v = 0;
        check(sc_sigma_table_g(table.get(), n, &v), "reading g");
        values.push_back(std::to_string(v));
      }
    }
  }
  write_dump(c, first, values, out);
  return kExitOk;
}

uint64_t verify_table_limit(const RunConfig& c) {
  switch (c.identity) {
    case SC_IDENTITY_DIV1:
    case SC_IDENTITY_DIV3:
      return 2 * c.hi + 1;
    case SC_IDENTITY_DIV2:
      return c.hi;
    default:
      return 0;
  }
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SigmaTablePtr table;
  TkTablePtr tk;
  if (c.identity == SC_IDENTITY_TK) {
    tk = make_tk_table(c.k, c.hi);
  } else if (c.identity != SC_IDENTITY_GF) {
    table = c.sigma_file ? load_sigma_file(*c.sigma_file) : make_sigma_table(verify_table_limit(c));
  }
  const sc_run_options opts = run_options(c, err);
  sc_report* raw = nullptr;
  check(sc_batch_verify(c.identity, c.lo, c.hi, table.get(), tk.get(), &opts, &raw), "verifying identity");
  ReportPtr report(raw);
  out << fetch_string(
      [&](char* b, size_t cap, size_t* need) { return sc_report_render(report.get(), c.format, b, cap, need); },
      "rendering report");
  return sc_report_failure_count(report.get()) == 0 ? kExitOk : kExitViolations;
}

uint64_t scan_table_limit(const RunConfig& c) {
  switch (c.kind) {
    case SC_SCAN_MOD5: return 2 * c.hi + 1;
    case SC_SCAN_MOD4: return c.hi;
    case SC_SCAN_CLASSIC3: return 3 * c.hi + 2;
    case SC_SCAN_CLASSIC4: return 4 * c.hi + 3;
  }
  return c.hi;
}

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  auto table = c.sigma_file ? load_sigma_file(*c.sigma_file) : make_sigma_table(scan_table_limit(c));
  const sc_run_options opts = run_options(c, err);
  sc_scan_report* raw = nullptr;
  check(sc_scan(c.kind, c.lo, c.hi, table.get(), &opts, &raw), "scanning congruence");
  ScanReportPtr report(raw);
  out << fetch_string(
      [&](char* b, size_t cap, size_t* need) { return sc_scan_report_render(report.get(), c.format, b, cap, need); },
      "rendering report");
  return sc_scan_report_violation_count(report.get()) == 0 ? kExitOk : kExitViolations;
}

struct BenchRow {
  std::string method;
  double seconds = 0;
  bool agrees = true;
};

template <class Fn>
double time_it(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// sigma(2n+1) for 0 <= n <= limit by three routes: sieve, the div1
// recurrence, and the coefficients of psi(q)^4.
int run_bench(const RunConfig& c, std::ostream& out) {
  const uint64_t n_max = c.limit;
  SigmaTablePtr table;
  std::vector<BenchRow> rows;
  rows.push_back({"sieve", time_it([&] { table = make_sigma_table(2 * n_max + 1); }), true});
  const uint64_t* sigma = sc_sigma_table_data(table.get());

  std::vector<uint64_t> via_div1(n_max + 1);
  BenchRow div1{"div1_recurrence", 0, true};
  div1.seconds = time_it([&] {
    check(sc_sigma_odd_via_div1(n_max, via_div1.data(), via_div1.size()), "sigma via div1");
  });
  for (uint64_t n = 0; n <= n_max; ++n) div1.agrees = div1.agrees && via_div1[n] == sigma[2 * n + 1];
  rows.push_back(div1);

  TkTablePtr tk;
  BenchRow psi4{"psi4_coefficients", 0, true};
  psi4.seconds = time_it([&] { tk = make_tk_table(4, n_max); });
  for (uint64_t n = 0; n <= n_max; ++n) {
    int64_t v = 0;
    check(sc_tk_table_get_i64(tk.get(), n, &v), "reading t_4");
    psi4.agrees = psi4.agrees && static_cast<uint64_t>(v) == sigma[2 * n + 1];
  }
  rows.push_back(psi4);

  bool all_agree = true;
  for (const auto& r : rows) all_agree = all_agree && r.agrees;

  switch (c.format) {
    case SC_FORMAT_CSV:
      out << "method,n_max,seconds,agrees\n";
      for (const auto& r : rows) {
        out << r.method << ',' << n_max << ',' << std::fixed << std::setprecision(6) << r.seconds << ','
            << (r.agrees ? "yes" : "no") << '\n';
      }
      break;
    case SC_FORMAT_JSON: {
      Json doc;
      doc["n_max"] = n_max;
      doc["methods"] = Json::array();
      for (const auto& r : rows) {
        doc["methods"].push_back({{"method", r.method}, {"seconds", r.seconds}, {"agrees", r.agrees}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case SC_FORMAT_PLAIN:
      out << "sigma(2n+1) for 0 <= n <= " << n_max << "\n";
      out << std::left << std::setw(20) << "method" << std::right << std::setw(12) << "seconds" << std::setw(10)
          << "agrees" << '\n';
      for (const auto& r : rows) {
        out << std::left << std::setw(20) << r.method << std::right << std::setw(12) << std::fixed
            << std::setprecision(6) << r.seconds << std::setw(10) << (r.agrees ? "yes" : "no") << '\n';
      }
      break;
  }
  return all_agree ? kExitOk : kExitViolations;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format;
  std::string identity;
  std::string kind;
  std::string out_path;
  std::string sigma_file;

  CLI::App app{"sigmacong: sum-of-divisors tables, theta-series counts, recurrence and congruence checks"};
  app.require_subcommand(1);

  const std::map<std::string, sc_identity> identities{{"div1", SC_IDENTITY_DIV1}, {"div2", SC_IDENTITY_DIV2},
                                                      {"div3", SC_IDENTITY_DIV3}, {"tk", SC_IDENTITY_TK},
                                                      {"gf", SC_IDENTITY_GF}};
  const std::map<std::string, sc_scan_kind> kinds{{"mod5", SC_SCAN_MOD5}, {"mod4", SC_SCAN_MOD4},
                                                  {"classic3", SC_SCAN_CLASSIC3}, {"classic4", SC_SCAN_CLASSIC4}};
  const std::map<std::string, sc_format> formats{
      {"csv", SC_FORMAT_CSV}, {"json", SC_FORMAT_JSON}, {"plain", SC_FORMAT_PLAIN}};

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: csv, json or plain")->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
  };
  auto add_limit = [&](CLI::App* sub, const char* help, bool required) {
    auto* opt = sub->add_option("--limit", cfg.limit, help)->check(CLI::Range(uint64_t{1}, SC_MAX_TABLE_LIMIT));
    if (required) opt->required();
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--lo", cfg.lo, "First n (default 1)");
    sub->add_option("--hi", cfg.hi, "Last n")->required()->check(CLI::Range(uint64_t{1}, SC_MAX_TABLE_LIMIT));
    sub->add_option("--threads", cfg.threads, "Worker threads (default 1)")->check(CLI::Range(1u, 256u));
    sub->add_option("--sigma-file", sigma_file, "Check sigma values from an n,sigma CSV instead of the sieve")
        ->check(CLI::ExistingFile);
  };

  auto* sigma = app.add_subcommand("sigma", "Dump sigma(n) for 1 <= n <= limit");
  add_limit(sigma, "Largest n", true);
  add_output(sigma);

  auto* gseq = app.add_subcommand("gseq", "Dump g(n) = sigma(n) - 4 sigma(n/2) for 1 <= n <= limit");
  add_limit(gseq, "Largest n", true);
  add_output(gseq);

  auto* tk = app.add_subcommand("tk", "Dump t_k(n), representations as k triangular numbers, for 0 <= n <= limit");
  tk->add_option("--k", cfg.k, "Number of triangular summands (default 4)")->check(CLI::Range(1u, 1000u));
  add_limit(tk, "Largest n", true);
  add_output(tk);

  auto* verify = app.add_subcommand("verify", "Check a divisor-sum identity exactly over [lo, hi]");
  verify->add_option("--identity", identity, "div1, div2, div3, tk or gf")
      ->required()
      ->check(CLI::IsMember(identities));
  verify->add_option("--k", cfg.k, "t_k order for --identity tk (default 4)")->check(CLI::Range(1u, 1000u));
  add_range(verify);
  add_output(verify);

  auto* scan = app.add_subcommand("scan", "Scan a congruence over [lo, hi]");
  scan->add_option("--kind", kind, "mod5, mod4, classic3 or classic4")
      ->required()
      ->check(CLI::IsMember(kinds));
  add_range(scan);
  add_output(scan);

  auto* bench = app.add_subcommand("bench", "Time three routes to sigma(2n+1), 0 <= n <= limit");
  cfg.limit = 10000;
  add_limit(bench, "Largest n (default 10000)", false);
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }

  if (app.got_subcommand(sigma)) cfg.command = Command::kSigma;
  else if (app.got_subcommand(gseq)) cfg.command = Command::kGseq;
  else if (app.got_subcommand(tk)) cfg.command = Command::kTk;
  else if (app.got_subcommand(verify)) cfg.command = Command::kVerify;
  else if (app.got_subcommand(scan)) cfg.command = Command::kScan;
  else cfg.command = Command::kBench;

  if (!out_path.empty()) cfg.out_path = out_path;
  if (!sigma_file.empty()) cfg.sigma_file = sigma_file;
  if (!identity.empty()) cfg.identity = identities.at(identity);
  if (!kind.empty()) cfg.kind = kinds.at(kind);
  if (!format.empty()) cfg.format = formats.at(format);
  else if (cfg.command == Command::kBench) cfg.format = SC_FORMAT_PLAIN;

  if (cfg.command == Command::kVerify || cfg.command == Command::kScan) {
    if (cfg.lo > cfg.hi) {
      err << "error: --lo (" << cfg.lo << ") must not exceed --hi (" << cfg.hi << ")\n";
      return {std::nullopt, kExitUsage};
    }
    const bool classic = cfg.command == Command::kScan &&
                         (cfg.kind == SC_SCAN_CLASSIC3 || cfg.kind == SC_SCAN_CLASSIC4);
    if (cfg.lo == 0 && !classic) {
      err << "error: --lo must be at least 1\n";
      return {std::nullopt, kExitUsage};
    }
  }
  return {cfg, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out_path) {
    file.open(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    int code = kExitOk;
    switch (config.command) {
      case Command::kSigma:
      case Command::kGseq:
      case Command::kTk:
        code = run_dump(config, *sink);
        break;
      case Command::kVerify:
        code = run_verify(config, *sink, err);
        break;
      case Command::kScan:
        code = run_scan(config, *sink, err);
        break;
      case Command::kBench:
        code = run_bench(config, *sink);
        break;
    }
    sink->flush();
    if (!*sink) {
      err << "error: failed writing output\n";
      return kExitUsage;
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv) {
  const ParseResult parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace sigmacong_cli
