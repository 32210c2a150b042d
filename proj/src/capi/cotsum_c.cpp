// Copyright 2026 The cotsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cotsum/cotsum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "cotsum/report.hpp"

struct cotsum_report {
  cotsum::Report report;
};

namespace {

thread_local std::string last_error;

cotsum_status to_status(cotsum::ErrorCode code) {
  using cotsum::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return COTSUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return COTSUM_ERR_PARSE;
    case ErrorCode::DivisionByZero: return COTSUM_ERR_DIVISION_BY_ZERO;
    case ErrorCode::ZeroConstantTerm: return COTSUM_ERR_ZERO_CONSTANT_TERM;
    case ErrorCode::NonzeroInnerConstant: return COTSUM_ERR_NONZERO_INNER_CONSTANT;
    case ErrorCode::PoleAtOrigin: return COTSUM_ERR_POLE_AT_ORIGIN;
    case ErrorCode::BadDimension: return COTSUM_ERR_BAD_DIMENSION;
    case ErrorCode::NonRealValue: return COTSUM_ERR_NON_REAL_VALUE;
    case ErrorCode::SingularAlpha: return COTSUM_ERR_SINGULAR_ALPHA;
    case ErrorCode::BadK: return COTSUM_ERR_BAD_K;
    case ErrorCode::BadN: return COTSUM_ERR_BAD_N;
    case ErrorCode::TooLarge: return COTSUM_ERR_TOO_LARGE;
    case ErrorCode::ParityMismatch: return COTSUM_ERR_PARITY_MISMATCH;
    case ErrorCode::Internal: return COTSUM_ERR_INTERNAL;
  }
  return COTSUM_ERR_INTERNAL;
}

cotsum_status fail(cotsum_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
cotsum_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cotsum::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COTSUM_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(COTSUM_ERR_INTERNAL, e.what());
  }
}

template <class Make>
cotsum_status produce(cotsum_report** out, Make&& make) {
  if (out == nullptr) return fail(COTSUM_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  return guard([&] {
    auto holder = std::make_unique<cotsum_report>();
    holder->report = make();
    *out = holder.release();
    return COTSUM_OK;
  });
}

std::string text_or(const char* s, const char* fallback) { return s == nullptr ? fallback : s; }

cotsum::Rational parse_cot(const char* cot) {
  cotsum::require(cot != nullptr, cotsum::ErrorCode::InvalidArgument, "cot value is null");
  return cotsum::Rational::parse(cot);
}

std::vector<cotsum::SumMethod> parse_methods(const std::string& list) {
  if (list.empty() || list == "all") return cotsum::all_sum_methods();
  std::vector<cotsum::SumMethod> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cotsum::parse_sum_method(item));
  return out;
}

}  // namespace

extern "C" {

const char* cotsum_version(void) { return "0.1.0"; }

const char* cotsum_status_string(cotsum_status status) {
  switch (status) {
    case COTSUM_OK: return "ok";
    case COTSUM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COTSUM_ERR_PARSE: return "parse error";
    case COTSUM_ERR_DIVISION_BY_ZERO: return "division by zero";
    case COTSUM_ERR_ZERO_CONSTANT_TERM: return "zero constant term";
    case COTSUM_ERR_NONZERO_INNER_CONSTANT: return "nonzero inner constant";
    case COTSUM_ERR_POLE_AT_ORIGIN: return "pole at origin";
    case COTSUM_ERR_BAD_DIMENSION: return "bad dimension";
    case COTSUM_ERR_NON_REAL_VALUE: return "non-real value";
    case COTSUM_ERR_SINGULAR_ALPHA: return "singular alpha";
    case COTSUM_ERR_BAD_K: return "bad k";
    case COTSUM_ERR_BAD_N: return "bad n";
    case COTSUM_ERR_TOO_LARGE: return "too large";
    case COTSUM_ERR_PARITY_MISMATCH: return "parity mismatch";
    case COTSUM_ERR_INTERNAL: return "internal error";
    case COTSUM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case COTSUM_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* cotsum_last_error(void) { return last_error.c_str(); }

cotsum_status cotsum_sum(int m, int n, const char* cot, const char* methods, cotsum_report** out) {
  return produce(out, [&] { return cotsum::report_sum(m, n, parse_cot(cot), parse_methods(text_or(methods, "all"))); });
}

cotsum_status cotsum_sum_alpha(int m, int n, double alpha, cotsum_report** out) {
  return produce(out, [&] { return cotsum::report_sum_float(m, n, alpha); });
}

cotsum_status cotsum_poly(int m, int n, cotsum_report** out) {
  return produce(out, [&] { return cotsum::report_poly(m, n); });
}

cotsum_status cotsum_seq(const char* kind, int max_n, const char* method, cotsum_report** out) {
  return produce(out, [&] { return cotsum::report_seq(text_or(kind, ""), max_n, text_or(method, "recursion")); });
}

cotsum_status cotsum_genfun(const char* kind, int n, int order, const char* cot, const char* method,
                            cotsum_report** out) {
  return produce(out, [&] {
    const cotsum::Rational c = cot == nullptr ? cotsum::Rational(0) : cotsum::Rational::parse(cot);
    return cotsum::report_genfun(text_or(kind, ""), n, order, c, text_or(method, "recursion"));
  });
}

cotsum_status cotsum_comb(const char* kind, int n, int m, int k, int list, cotsum_report** out) {
  return produce(out, [&] { return cotsum::report_comb(text_or(kind, ""), n, m, k, list != 0); });
}

cotsum_status cotsum_zeta(int k, const int* ns, size_t count, cotsum_report** out) {
  return produce(out, [&] {
    cotsum::require(ns != nullptr || count == 0, cotsum::ErrorCode::InvalidArgument, "n list is null");
    return cotsum::report_zeta(k, std::vector<int>(ns, ns + count));
  });
}

cotsum_status cotsum_verify(const char* suite, int max_m, int max_n, int* passed, cotsum_report** out) {
  const cotsum_status status = produce(out, [&] {
    cotsum::VerifyOptions options;
    options.suite = cotsum::parse_verify_suite(text_or(suite, "all"));
    options.max_m = max_m;
    options.max_n = max_n;
    return cotsum::report_verify(options);
  });
  if (passed != nullptr) *passed = status == COTSUM_OK && (*out)->report.ok ? 1 : 0;
  return status;
}

int cotsum_report_ok(const cotsum_report* report) { return report != nullptr && report->report.ok ? 1 : 0; }

cotsum_status cotsum_report_render(const cotsum_report* report, cotsum_format format, char** text) {
  if (report == nullptr || text == nullptr) return fail(COTSUM_ERR_INVALID_ARGUMENT, "null report or output pointer");
  *text = nullptr;
  return guard([&] {
    cotsum::Format f = cotsum::Format::Text;
    switch (format) {
      case COTSUM_FORMAT_TEXT: f = cotsum::Format::Text; break;
      case COTSUM_FORMAT_JSON: f = cotsum::Format::Json; break;
      case COTSUM_FORMAT_CSV: f = cotsum::Format::Csv; break;
      default: return fail(COTSUM_ERR_INVALID_ARGUMENT, "unknown format");
    }
    const std::string rendered = cotsum::render(report->report, f);
    char* buffer = static_cast<char*>(std::malloc(rendered.size() + 1));
    if (buffer == nullptr) return fail(COTSUM_ERR_OUT_OF_MEMORY, "out of memory");
    std::memcpy(buffer, rendered.c_str(), rendered.size() + 1);
    *text = buffer;
    return COTSUM_OK;
  });
}

void cotsum_report_free(cotsum_report* report) { delete report; }

void cotsum_string_free(char* text) { std::free(text); }

cotsum_status cotsum_s_exact(int m, int n, const char* cot, char* buf, size_t size, size_t* needed) {
  return guard([&] {
    const std::string value = cotsum::S_trace(m, n, parse_cot(cot)).str();
    if (needed != nullptr) *needed = value.size() + 1;
    if (buf == nullptr || size < value.size() + 1)
      return fail(COTSUM_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(value.size() + 1) + " bytes");
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return COTSUM_OK;
  });
}

cotsum_status cotsum_s_float(int m, int n, double alpha, double* out) {
  if (out == nullptr) return fail(COTSUM_ERR_INVALID_ARGUMENT, "output pointer is null");
  return guard([&] {
    *out = cotsum::S_float(m, n, alpha);
    return COTSUM_OK;
  });
}

}  // extern "C"
