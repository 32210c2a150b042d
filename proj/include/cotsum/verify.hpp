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

#ifndef COTSUM_VERIFY_HPP
#define COTSUM_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cotsum/numkernel.hpp"

namespace cotsum {

enum class VerifySuite { All, Sums, Sequences, Combinatorics, GenFun };
VerifySuite parse_verify_suite(std::string_view name);
std::string_view verify_suite_name(VerifySuite suite);

struct VerifyOptions {
  VerifySuite suite = VerifySuite::All;
  int max_m = 10;
  int max_n = 8;
  std::vector<Rational> cot_values{Rational(0), Rational(1), Rational(1, 2), Rational(-2), Rational(3, 7)};
  bool parallel = true;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failing case, empty on success
};

struct VerifyResult {
  std::vector<CheckResult> checks;
  std::vector<std::string> diagnostics;

  bool passed() const;
  std::size_t failures() const;
};

/// Runs the invariant grids of the selected suites. Independent checks run on
/// separate threads when `parallel` is set; the result order does not depend
/// on scheduling.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace cotsum

#endif  // COTSUM_VERIFY_HPP
