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

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cotsum/cotsum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

cotsum_format format_of(const std::string& name) {
  if (name == "json") return COTSUM_FORMAT_JSON;
  if (name == "csv") return COTSUM_FORMAT_CSV;
  return COTSUM_FORMAT_TEXT;
}

int report_error(cotsum_status status) {
  std::cerr << "error: " << cotsum_status_string(status);
  const std::string detail = cotsum_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitUsage;
}

// Prints the report and maps its status onto the exit code.
int emit(cotsum_status status, cotsum_report* report, const std::string& format) {
  if (status != COTSUM_OK) return report_error(status);
  char* text = nullptr;
  const cotsum_status rendered = cotsum_report_render(report, format_of(format), &text);
  const bool ok = cotsum_report_ok(report) != 0;
  cotsum_report_free(report);
  if (rendered != COTSUM_OK) return report_error(rendered);
  std::fputs(text, stdout);
  cotsum_string_free(text);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cotangent power sums and the sequences behind them"};
  app.set_version_flag("--version", std::string(cotsum_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::function<int()> action;

  int m = 0, n = 0, k = 1, max = 20, order = 10, max_m = 10, max_n = 8;
  std::string cot = "0", method, kind, suite = "all";
  double alpha = 0.0;
  bool list = false;
  std::vector<int> n_list;

  auto* sum = app.add_subcommand("sum", "S(m, n, alpha) by every method");
  sum->add_option("--m", m, "Exponent")->required()->check(CLI::NonNegativeNumber);
  sum->add_option("--n", n, "Number of terms")->required()->check(CLI::PositiveNumber);
  auto* cot_opt = sum->add_option("--cot", cot, "cot alpha as p/q");
  auto* alpha_opt = sum->add_option("--alpha-float", alpha, "alpha in radians (float method only)");
  cot_opt->excludes(alpha_opt);
  sum->add_option("--method", method, "all, or a comma list of trace, closed, faa, genfun, float")->default_str("all");
  sum->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      if (alpha_opt->count() > 0) {
        if (!method.empty() && method != "all" && method != "float") {
          std::cerr << "error: --alpha-float supports only the float method\n";
          return kExitUsage;
        }
        const cotsum_status status = cotsum_sum_alpha(m, n, alpha, &r);
        return emit(status, r, format);
      }
      if (cot_opt->count() == 0) {
        std::cerr << "error: one of --cot or --alpha-float is required\n";
        return kExitUsage;
      }
      const cotsum_status status = cotsum_sum(m, n, cot.c_str(), method.empty() ? "all" : method.c_str(), &r);
      return emit(status, r, format);
    };
  });

  auto* poly = app.add_subcommand("poly", "Coefficients of S(m, n, alpha) in cot alpha");
  poly->add_option("--m", m, "Exponent")->required()->check(CLI::PositiveNumber);
  poly->add_option("--n", n, "Number of terms")->required()->check(CLI::PositiveNumber);
  poly->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      const cotsum_status status = cotsum_poly(m, n, &r);
      return emit(status, r, format);
    };
  });

  auto* seq = app.add_subcommand("seq", "Special number tables");
  seq->add_option("kind", kind, "Sequence")
      ->required()
      ->check(CLI::IsMember({"tangent", "arctan", "euler", "bernoulli", "stirling2", "derivpoly", "tanpoly"}));
  seq->add_option("--max", max, "Largest index")->required()->check(CLI::NonNegativeNumber);
  seq->add_option("--method", method, "derivpoly construction: recursion, explicit, tangent_expansion");
  seq->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      const cotsum_status status = cotsum_seq(kind.c_str(), max, method.empty() ? nullptr : method.c_str(), &r);
      return emit(status, r, format);
    };
  });

  auto* genfun = app.add_subcommand("genfun", "Generating function coefficients");
  genfun->add_option("kind", kind, "Series")->required()->check(CLI::IsMember({"F", "Q", "MB"}));
  genfun->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  genfun->add_option("--order", order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
  genfun->add_option("--cot", cot, "cot alpha as p/q (F only)");
  genfun->add_option("--method", method, "Q construction: recursion, continued_fraction, tan_compose");
  genfun->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      const cotsum_status status = cotsum_genfun(kind.c_str(), n, order, cot.c_str(), method.empty() ? nullptr : method.c_str(), &r);
      return emit(status, r, format);
    };
  });

  auto* comb = app.add_subcommand("comb", "Paths, trees and forests");
  comb->add_option("kind", kind, "Family")->required()->check(CLI::IsMember({"dyck", "trees", "forest", "dtable"}));
  comb->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  comb->add_option("--m", m, "Semilength, leaves, or exponent")->required()->check(CLI::NonNegativeNumber);
  comb->add_option("--k", k, "Forest degree")->check(CLI::PositiveNumber);
  comb->add_flag("--list", list, "List every object with its weight");
  comb->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      const cotsum_status status = cotsum_comb(kind.c_str(), n, m, k, list ? 1 : 0, &r);
      return emit(status, r, format);
    };
  });

  auto* zeta = app.add_subcommand("zeta", "zeta(2k) from traces of B_n");
  zeta->add_option("--k", k, "Half the zeta argument")->required()->check(CLI::Range(1, 5));
  zeta->add_option("--n-list", n_list, "Comma separated n values")->required()->delimiter(',')->check(
      CLI::Range(2, 2000));
  zeta->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      const cotsum_status status = cotsum_zeta(k, n_list.data(), n_list.size(), &r);
      return emit(status, r, format);
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the invariant grids");
  verify->add_option("--suite", suite, "Suite")->check(
      CLI::IsMember({"all", "sums", "sequences", "combinatorics", "genfun"}));
  verify->add_option("--max-m", max_m, "Largest exponent")->check(CLI::Range(1, 40));
  verify->add_option("--max-n", max_n, "Largest dimension")->check(CLI::Range(1, 64));
  verify->callback([&] {
    action = [&] {
      cotsum_report* r = nullptr;
      int passed = 0;
      const cotsum_status status = cotsum_verify(suite.c_str(), max_m, max_n, &passed, &r);
      return emit(status, r, format);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return action ? action() : kExitUsage;
}
