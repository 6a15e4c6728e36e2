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
#include "sigmacong/sigmacong.h"

#include <cstring>
#include <new>
#include <string>

#include "sigmacong/congruences.hpp"
#include "sigmacong/divisor_core.hpp"
#include "sigmacong/errors.hpp"
#include "sigmacong/qseries.hpp"
#include "sigmacong/recurrences.hpp"
#include "sigmacong/report_io.hpp"

struct sc_sigma_table {
  sigmacong::SigmaTable table;
};
struct sc_series {
  sigmacong::TruncatedSeries series;
};
struct sc_tk_table {
  sigmacong::TkTable table;
};
struct sc_report {
  sigmacong::RecurrenceReport report;
};
struct sc_scan_report {
  sigmacong::ScanReport report;
};

namespace {

using namespace sigmacong;

static_assert(SC_MAX_TABLE_LIMIT == kMaxTableLimit);
static_assert(SC_MAX_SERIES_ORDER == kMaxSeriesOrder);

std::string& last_error() {
  thread_local std::string message;
  return message;
}

sc_status fail(sc_status status, const char* message) {
  try {
    last_error() = message;
  } catch (...) {
  }
  return status;
}

// Runs `body` and maps the library's exception types onto status codes.
template <class F>
sc_status guard(F&& body) noexcept {
  try {
    body();
    return SC_OK;
  } catch (const InvalidArgument& e) {
    return fail(SC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const RangeError& e) {
    return fail(SC_ERR_OUT_OF_RANGE, e.what());
  } catch (const OverflowError& e) {
    return fail(SC_ERR_OVERFLOW, e.what());
  } catch (const InexactDivision& e) {
    return fail(SC_ERR_INEXACT_DIVISION, e.what());
  } catch (const ResourceError& e) {
    return fail(SC_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is NULL");
}

sc_status write_string(const std::string& text, char* buf, size_t capacity, size_t* needed) {
  if (needed != nullptr) *needed = text.size();
  if (buf == nullptr && capacity == 0 && needed != nullptr) return SC_OK;
  if (buf == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "output buffer is NULL");
  if (capacity < text.size() + 1) return fail(SC_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return SC_OK;
}

void copy_decimal(const std::string& text, char (&dst)[48]) {
  if (text.size() + 1 > sizeof dst) throw OverflowError("decimal value too long");
  std::memcpy(dst, text.c_str(), text.size() + 1);
}

int64_t narrow(i128 v) {
  if (!fits_int64(v)) throw OverflowError("value does not fit in int64_t: " + to_string(v));
  return static_cast<int64_t>(v);
}

uint64_t narrow(u128 v) {
  if (v > UINT64_MAX) throw OverflowError("value does not fit in uint64_t: " + to_string(v));
  return static_cast<uint64_t>(v);
}

RunOptions to_options(const sc_run_options* o) {
  RunOptions opts;
  if (o != nullptr) {
    opts.threads = o->threads == 0 ? 1 : o->threads;
    opts.progress = o->progress;
    opts.progress_user = o->progress_user;
  }
  return opts;
}

Identity to_identity(sc_identity id) {
  switch (id) {
    case SC_IDENTITY_DIV1: return Identity::kDiv1;
    case SC_IDENTITY_DIV2: return Identity::kDiv2;
    case SC_IDENTITY_DIV3: return Identity::kDiv3;
    case SC_IDENTITY_TK: return Identity::kTkRecurrence;
    case SC_IDENTITY_GF: return Identity::kGfIdentity;
  }
  throw InvalidArgument("unknown identity value " + std::to_string(static_cast<int>(id)));
}

sc_identity from_identity(Identity id) {
  switch (id) {
    case Identity::kDiv1: return SC_IDENTITY_DIV1;
    case Identity::kDiv2: return SC_IDENTITY_DIV2;
    case Identity::kDiv3: return SC_IDENTITY_DIV3;
    case Identity::kTkRecurrence: return SC_IDENTITY_TK;
    case Identity::kGfIdentity: return SC_IDENTITY_GF;
  }
  return SC_IDENTITY_DIV1;
}

ScanKind to_kind(sc_scan_kind kind) {
  switch (kind) {
    case SC_SCAN_MOD5: return ScanKind::kMod5;
    case SC_SCAN_MOD4: return ScanKind::kMod4;
    case SC_SCAN_CLASSIC3: return ScanKind::kClassic3;
    case SC_SCAN_CLASSIC4: return ScanKind::kClassic4;
  }
  throw InvalidArgument("unknown scan kind value " + std::to_string(static_cast<int>(kind)));
}

sc_scan_kind from_kind(ScanKind kind) {
  switch (kind) {
    case ScanKind::kMod5: return SC_SCAN_MOD5;
    case ScanKind::kMod4: return SC_SCAN_MOD4;
    case ScanKind::kClassic3: return SC_SCAN_CLASSIC3;
    case ScanKind::kClassic4: return SC_SCAN_CLASSIC4;
  }
  return SC_SCAN_MOD5;
}

Format to_format(sc_format f) {
  switch (f) {
    case SC_FORMAT_CSV: return Format::kCsv;
    case SC_FORMAT_JSON: return Format::kJson;
    case SC_FORMAT_PLAIN: return Format::kPlain;
  }
  throw InvalidArgument("unknown format value " + std::to_string(static_cast<int>(f)));
}

template <class Handle, class Make>
sc_status create(Handle** out, Make&& make) {
  return guard([&] {
    require(out, "out");
    *out = new Handle{make()};
  });
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_string(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SC_ERR_OUT_OF_RANGE: return "out of range";
    case SC_ERR_OVERFLOW: return "overflow";
    case SC_ERR_INEXACT_DIVISION: return "inexact division";
    case SC_ERR_RESOURCE: return "resource error";
    case SC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sc_last_error_message(void) { return last_error().c_str(); }

// ---- divisor functions

uint64_t sc_divisor_sum(uint64_t n) { return divisor_sum(n); }

sc_status sc_sigma_odd(uint64_t n, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sigma_odd(n);
  });
}

sc_status sc_sigma_even(uint64_t n, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sigma_even(n);
  });
}

sc_status sc_g_value(uint64_t n, int64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = g_value(n);
  });
}

sc_status sc_triangular(uint64_t j, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = triangular(j);
  });
}

int sc_is_triangular(uint64_t n) { return is_triangular(n) ? 1 : 0; }

uint64_t sc_max_tri_index(uint64_t bound) { return max_tri_index(bound); }

sc_status sc_sigma_table_create(uint64_t limit, sc_sigma_table** out) {
  return create(out, [&] { return SigmaTable::build(limit); });
}

sc_status sc_sigma_table_from_values(const uint64_t* values, size_t count, sc_sigma_table** out) {
  return create(out, [&] {
    require(values, "values");
    return SigmaTable::from_values(std::vector<uint64_t>(values, values + count));
  });
}

void sc_sigma_table_destroy(sc_sigma_table* table) { delete table; }

uint64_t sc_sigma_table_limit(const sc_sigma_table* table) { return table ? table->table.limit() : 0; }

sc_status sc_sigma_table_get(const sc_sigma_table* table, uint64_t n, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = table->table.at(n);
  });
}

sc_status sc_sigma_table_g(const sc_sigma_table* table, uint64_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = table->table.g(n);
  });
}

const uint64_t* sc_sigma_table_data(const sc_sigma_table* table) {
  return table ? table->table.values().data() : nullptr;
}

// ---- series

sc_status sc_series_from_int64(const int64_t* coeffs, size_t count, sc_series** out) {
  return create(out, [&] {
    if (count == 0) throw InvalidArgument("series needs at least one coefficient");
    require(coeffs, "coeffs");
    return TruncatedSeries::from_int64({coeffs, count});
  });
}

sc_status sc_series_psi(size_t order, sc_series** out) {
  return create(out, [&] { return psi_series(order); });
}

sc_status sc_series_psi_product(size_t order, sc_series** out) {
  return create(out, [&] { return psi_product_series(order); });
}

sc_status sc_series_add(const sc_series* a, const sc_series* b, sc_series** out) {
  return create(out, [&] {
    require(a, "a");
    require(b, "b");
    return series_add(a->series, b->series);
  });
}

sc_status sc_series_mul(const sc_series* a, const sc_series* b, sc_series** out) {
  return create(out, [&] {
    require(a, "a");
    require(b, "b");
    return series_mul(a->series, b->series);
  });
}

sc_status sc_series_pow(const sc_series* a, uint64_t k, sc_series** out) {
  return create(out, [&] {
    require(a, "a");
    return series_pow(a->series, k);
  });
}

sc_status sc_series_truncate(const sc_series* a, size_t order, sc_series** out) {
  return create(out, [&] {
    require(a, "a");
    return a->series.truncate(order);
  });
}

void sc_series_destroy(sc_series* series) { delete series; }

size_t sc_series_order(const sc_series* series) { return series ? series->series.order() : 0; }

sc_status sc_series_coeff_i64(const sc_series* series, size_t i, int64_t* out) {
  return guard([&] {
    require(series, "series");
    require(out, "out");
    *out = narrow(to_i128(series->series.coeff(i)));
  });
}

sc_status sc_series_coeff_str(const sc_series* series, size_t i, char* buf, size_t capacity, size_t* needed) {
  std::string text;
  const sc_status s = guard([&] {
    require(series, "series");
    text = series->series.coeff(i).get_str();
  });
  return s == SC_OK ? write_string(text, buf, capacity, needed) : s;
}

int sc_series_equal(const sc_series* a, const sc_series* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->series == b->series ? 1 : 0;
}

sc_status sc_tk_table_create(uint32_t k, size_t limit, sc_tk_table** out) {
  return create(out, [&] { return TkTable::build(k, limit); });
}

void sc_tk_table_destroy(sc_tk_table* table) { delete table; }

uint32_t sc_tk_table_k(const sc_tk_table* table) { return table ? table->table.k() : 0; }

size_t sc_tk_table_limit(const sc_tk_table* table) { return table ? table->table.limit() : 0; }

sc_status sc_tk_table_get_i64(const sc_tk_table* table, size_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(to_i128(table->table.at(n)));
  });
}

sc_status sc_tk_table_get_str(const sc_tk_table* table, size_t n, char* buf, size_t capacity, size_t* needed) {
  std::string text;
  const sc_status s = guard([&] {
    require(table, "table");
    text = table->table.at(n).get_str();
  });
  return s == SC_OK ? write_string(text, buf, capacity, needed) : s;
}

// ---- recurrences

sc_status sc_div1_residual(const sc_sigma_table* table, uint64_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(div1_residual(n, table->table));
  });
}

sc_status sc_div2_residual(const sc_sigma_table* table, uint64_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(div2_residual(n, table->table));
  });
}

sc_status sc_div3_residual(const sc_sigma_table* table, uint64_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(div3_residual(n, table->table));
  });
}

sc_status sc_tk_recurrence_residual(const sc_tk_table* table, uint64_t n, int64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(tk_recurrence_residual(n, table->table));
  });
}

sc_status sc_sigma_odd_via_div1(uint64_t limit_n, uint64_t* out, size_t out_len) {
  return guard([&] {
    require(out, "out");
    if (out_len <= limit_n) throw InvalidArgument("output array shorter than limit_n + 1");
    const auto values = sigma_odd_via_div1(limit_n);
    std::memcpy(out, values.data(), values.size() * sizeof(uint64_t));
  });
}

sc_status sc_batch_verify(sc_identity identity, uint64_t lo, uint64_t hi, const sc_sigma_table* table,
                          const sc_tk_table* tk, const sc_run_options* options, sc_report** out) {
  return create(out, [&] {
    return batch_verify(to_identity(identity), lo, hi, table ? &table->table : nullptr,
                        tk ? &tk->table : nullptr, to_options(options));
  });
}

sc_status sc_verify_gf_identity(uint64_t limit, sc_report** out) {
  return create(out, [&] { return verify_gf_identity(limit); });
}

void sc_report_destroy(sc_report* report) { delete report; }

sc_identity sc_report_identity(const sc_report* r) {
  return r ? from_identity(r->report.identity) : SC_IDENTITY_DIV1;
}
uint64_t sc_report_lo(const sc_report* r) { return r ? r->report.lo : 0; }
uint64_t sc_report_hi(const sc_report* r) { return r ? r->report.hi : 0; }
uint64_t sc_report_checked_count(const sc_report* r) { return r ? r->report.checked_count : 0; }
size_t sc_report_failure_count(const sc_report* r) { return r ? r->report.failures.size() : 0; }

sc_status sc_report_failure(const sc_report* report, size_t i, sc_failure* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    if (i >= report->report.failures.size()) throw RangeError("failure index out of range");
    const auto& f = report->report.failures[i];
    sc_failure tmp{};
    tmp.n = f.n;
    copy_decimal(to_string(f.lhs), tmp.lhs);
    copy_decimal(to_string(f.rhs), tmp.rhs);
    copy_decimal(to_string(f.residual), tmp.residual);
    *out = tmp;
  });
}

sc_status sc_report_render(const sc_report* report, sc_format format, char* buf, size_t capacity,
                           size_t* needed) {
  std::string text;
  const sc_status s = guard([&] {
    require(report, "report");
    text = render(report->report, to_format(format));
  });
  return s == SC_OK ? write_string(text, buf, capacity, needed) : s;
}

// ---- congruences

sc_status sc_mod5_sum(const sc_sigma_table* table, uint64_t n, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(mod5_sum(n, table->table));
  });
}

sc_status sc_mod4_sum(const sc_sigma_table* table, uint64_t n, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = narrow(mod4_sum(n, table->table));
  });
}

sc_status sc_classic_check(const sc_sigma_table* table, uint64_t n, int* div3, int* div4) {
  return guard([&] {
    require(table, "table");
    require(div3, "div3");
    require(div4, "div4");
    const auto [three, four] = classic_check(n, table->table);
    *div3 = three ? 1 : 0;
    *div4 = four ? 1 : 0;
  });
}

sc_status sc_scan(sc_scan_kind kind, uint64_t lo, uint64_t hi, const sc_sigma_table* table,
                  const sc_run_options* options, sc_scan_report** out) {
  return create(out, [&] {
    require(table, "table");
    return scan(to_kind(kind), lo, hi, table->table, to_options(options));
  });
}

void sc_scan_report_destroy(sc_scan_report* report) { delete report; }

sc_scan_kind sc_scan_report_kind(const sc_scan_report* r) { return r ? from_kind(r->report.kind) : SC_SCAN_MOD5; }
uint32_t sc_scan_report_modulus(const sc_scan_report* r) { return r ? scan_modulus(r->report.kind) : 0; }
uint64_t sc_scan_report_checked_count(const sc_scan_report* r) { return r ? r->report.checked_count : 0; }
uint64_t sc_scan_report_excluded_count(const sc_scan_report* r) { return r ? r->report.hypothesis_excluded : 0; }
size_t sc_scan_report_violation_count(const sc_scan_report* r) { return r ? r->report.violations.size() : 0; }

sc_status sc_scan_report_violation(const sc_scan_report* report, size_t i, sc_violation* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    if (i >= report->report.violations.size()) throw RangeError("violation index out of range");
    const auto& v = report->report.violations[i];
    sc_violation tmp{};
    tmp.n = v.n;
    copy_decimal(to_string(v.sum), tmp.sum);
    tmp.residue = v.residue;
    *out = tmp;
  });
}

uint64_t sc_scan_report_histogram(const sc_scan_report* report, uint32_t residue) {
  if (report == nullptr) return 0;
  const auto it = report->report.residue_histogram.find(residue);
  return it == report->report.residue_histogram.end() ? 0 : it->second;
}

sc_status sc_scan_report_render(const sc_scan_report* report, sc_format format, char* buf, size_t capacity,
                                size_t* needed) {
  std::string text;
  const sc_status s = guard([&] {
    require(report, "report");
    text = render(report->report, to_format(format));
  });
  return s == SC_OK ? write_string(text, buf, capacity, needed) : s;
}

}  // extern "C"
