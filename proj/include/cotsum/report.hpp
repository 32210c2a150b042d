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

#ifndef COTSUM_REPORT_HPP
#define COTSUM_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cotsum/numkernel.hpp"
#include "cotsum/sumlab.hpp"
#include "cotsum/verify.hpp"

namespace cotsum {

enum class Format { Text, Json, Csv };
Format parse_format(std::string_view name);

struct Column {
  std::string name;
  bool text_only = false;  // decimal renderings that must not leave text mode
};

/// Output of one CLI command. The JSON body has sorted keys so that parsing
/// and re-serialising reproduces it byte for byte; the table drives text and
/// CSV output.
struct Report {
  std::string title;
  nlohmann::json body = nlohmann::json::object();
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool ok = true;
};

std::string render(const Report& report, Format format);

/// "p/q" strings, index = degree.
nlohmann::json to_json(std::span<const Rational> values);
nlohmann::json to_json(const RationalPoly& p);
/// Human-readable polynomial such as "2/3 n^5 - 5/3 n^3 + n".
std::string poly_str(const RationalPoly& p, std::string_view var);

Report report_sum(int m, int n, const Rational& c, const std::vector<SumMethod>& methods);
Report report_sum_float(int m, int n, double alpha);
Report report_poly(int m, int n);
/// kind: tangent, arctan, euler, bernoulli, stirling2, derivpoly, tanpoly.
/// method applies to derivpoly only.
Report report_seq(std::string_view kind, int max_n, std::string_view method = "recursion");
/// kind: F, Q, MB. c applies to F, method to Q.
Report report_genfun(std::string_view kind, int n, int order, const Rational& c, std::string_view method = "recursion");
/// kind: dyck, trees, forest, dtable. For trees m counts leaves.
Report report_comb(std::string_view kind, int n, int m, int k, bool list);
Report report_zeta(int k, const std::vector<int>& ns);
Report report_verify(const VerifyOptions& options);

}  // namespace cotsum

#endif  // COTSUM_REPORT_HPP
