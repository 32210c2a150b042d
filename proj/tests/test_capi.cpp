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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "cotsum/cotsum.h"

namespace {

std::string render(cotsum_report* r, cotsum_format f) {
  char* text = nullptr;
  REQUIRE(cotsum_report_render(r, f, &text) == COTSUM_OK);
  std::string out(text);
  cotsum_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(cotsum_version()) > 0);
  CHECK(std::string(cotsum_status_string(COTSUM_OK)) == "ok");
  for (int s = 1; s <= 16; ++s) CHECK(std::string(cotsum_status_string(static_cast<cotsum_status>(s))) != "unknown status");
  CHECK(std::string(cotsum_status_string(static_cast<cotsum_status>(99))) == "unknown status");
}

TEST_CASE("exact sum into a caller buffer") {
  char buf[64];
  size_t needed = 0;
  REQUIRE(cotsum_s_exact(2, 3, "1", buf, sizeof buf, &needed) == COTSUM_OK);
  CHECK(std::string(buf) == "15");
  CHECK(needed == 3);

  REQUIRE(cotsum_s_exact(3, 4, "1/3", buf, sizeof buf, &needed) == COTSUM_OK);
  const std::string full(buf);
  CHECK(needed == full.size() + 1);
  char tiny[2];
  CHECK(cotsum_s_exact(3, 4, "1/3", tiny, sizeof tiny, &needed) == COTSUM_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == full.size() + 1);

  CHECK(cotsum_s_exact(2, 3, "x", buf, sizeof buf, &needed) == COTSUM_ERR_PARSE);
  CHECK(std::strlen(cotsum_last_error()) > 0);
  CHECK(cotsum_s_exact(2, 0, "1", buf, sizeof buf, &needed) != COTSUM_OK);
  REQUIRE(cotsum_s_exact(2, 3, "1", buf, sizeof buf, &needed) == COTSUM_OK);
  CHECK(std::string(cotsum_last_error()).empty());
}

TEST_CASE("float sum") {
  double v = 0;
  REQUIRE(cotsum_s_float(2, 3, 1.5707963267948966, &v) == COTSUM_OK);
  CHECK(v == doctest::Approx(6.0));
  CHECK(cotsum_s_float(2, 3, 0.0, &v) == COTSUM_ERR_SINGULAR_ALPHA);
  CHECK(cotsum_s_float(2, 3, 1.0, nullptr) == COTSUM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reports") {
  cotsum_report* r = nullptr;
  REQUIRE(cotsum_sum(2, 3, "1", "all", &r) == COTSUM_OK);
  CHECK(cotsum_report_ok(r) == 1);
  const std::string j = render(r, COTSUM_FORMAT_JSON);
  CHECK(j.find("\"agree\": true") != std::string::npos);
  CHECK(render(r, COTSUM_FORMAT_TEXT).find("15") != std::string::npos);
  CHECK(render(r, COTSUM_FORMAT_CSV).find("trace") != std::string::npos);
  cotsum_report_free(r);

  r = nullptr;
  CHECK(cotsum_sum(2, 3, "1", "trace,bogus", &r) == COTSUM_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(cotsum_sum(2, 3, "1", "all", nullptr) == COTSUM_ERR_INVALID_ARGUMENT);
  CHECK(cotsum_sum(2, 3, nullptr, "all", &r) == COTSUM_ERR_INVALID_ARGUMENT);

  REQUIRE(cotsum_sum_alpha(2, 3, 1.0, &r) == COTSUM_OK);
  cotsum_report_free(r);
  REQUIRE(cotsum_poly(5, 3, &r) == COTSUM_OK);
  cotsum_report_free(r);
  REQUIRE(cotsum_seq("derivpoly", 6, "explicit", &r) == COTSUM_OK);
  cotsum_report_free(r);
  REQUIRE(cotsum_seq("tangent", 6, nullptr, &r) == COTSUM_OK);
  cotsum_report_free(r);
  REQUIRE(cotsum_genfun("Q", 3, 10, nullptr, "continued_fraction", &r) == COTSUM_OK);
  CHECK(render(r, COTSUM_FORMAT_JSON).find("\"648\"") != std::string::npos);
  cotsum_report_free(r);
  REQUIRE(cotsum_comb("dyck", 3, 2, 0, 1, &r) == COTSUM_OK);
  CHECK(render(r, COTSUM_FORMAT_JSON).find("\"64/9\"") != std::string::npos);
  cotsum_report_free(r);
  CHECK(cotsum_comb("forest", 3, 4, 1, 0, &r) == COTSUM_ERR_PARITY_MISMATCH);

  const int ns[] = {10, 20};
  REQUIRE(cotsum_zeta(1, ns, 2, &r) == COTSUM_OK);
  cotsum_report_free(r);
  CHECK(cotsum_zeta(9, ns, 2, &r) == COTSUM_ERR_BAD_K);

  int passed = -1;
  REQUIRE(cotsum_verify("combinatorics", 5, 4, &passed, &r) == COTSUM_OK);
  CHECK(passed == 1);
  CHECK(cotsum_report_ok(r) == 1);
  cotsum_report_free(r);
  CHECK(cotsum_verify("everything", 5, 4, &passed, &r) == COTSUM_ERR_INVALID_ARGUMENT);

  cotsum_report_free(nullptr);
  cotsum_string_free(nullptr);
}

TEST_CASE("last error is per thread") {
  char buf[8];
  size_t needed = 0;
  CHECK(cotsum_s_exact(2, 3, "bad", buf, sizeof buf, &needed) == COTSUM_ERR_PARSE);
  std::string other = "unset";
  std::thread t([&] { other = cotsum_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(cotsum_last_error()) > 0);
}
