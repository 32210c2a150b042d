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

#include "cotsum/verify.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "cotsum/genfun.hpp"
#include "cotsum/pathforest.hpp"
#include "cotsum/seqlab.hpp"
#include "cotsum/specmat.hpp"
#include "cotsum/sumlab.hpp"

namespace cotsum {

namespace {

// Collects the outcome of one named check; only the first failure is kept.
class Tally {
 public:
  Tally(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
    result_.passed = true;
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.detail = describe();
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

template <class... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  return os.str();
}

using Task = std::function<CheckResult()>;

Task guarded(std::string suite, std::string name, std::function<void(Tally&)> body) {
  return [suite = std::move(suite), name = std::move(name), body = std::move(body)]() {
    Tally tally(suite, name);
    try {
      body(tally);
    } catch (const Error& e) {
      tally.expect(false, [&] { return cat("raised ", error_code_name(e.code()), ": ", e.what()); });
    }
    return tally.finish();
  };
}

const std::vector<Rational>& relation_x_values() {
  static const std::vector<Rational> values{Rational(1), Rational(1, 2), Rational(-2)};
  return values;
}

void add_sum_checks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string s = "sums";
  for (const Rational& c : o.cot_values) {
    tasks.push_back(guarded(s, "cross_pipeline c=" + c.str(), [o, c](Tally& t) {
      for (int n = 1; n <= o.max_n; ++n) {
        const std::vector<Rational> traces = S_trace_upto(o.max_m, n, c);
        for (int m = 1; m <= o.max_m; ++m) {
          const SumReport r = sum_report(m, n, c, all_sum_methods());
          t.expect(r.agree, [&] { return cat("methods disagree at m=", m, " n=", n); });
          t.expect(r.values.front().exact && *r.values.front().exact == traces[static_cast<std::size_t>(m)],
                   [&] { return cat("trace mismatch at m=", m, " n=", n); });
          t.expect(p_coeffs(m, n)(c) == traces[static_cast<std::size_t>(m)],
                   [&] { return cat("coefficient polynomial mismatch at m=", m, " n=", n); });
        }
      }
    }));
  }
  tasks.push_back(guarded(s, "coefficient_integrality", [o](Tally& t) {
    for (int m = 1; m <= o.max_m; ++m)
      for (int n = 1; n <= o.max_n; ++n) {
        const CotPolynomial p = p_coeffs(m, n);
        for (int r = m % 2; r <= m; r += 2) {
          const Rational& v = p.coeffs[static_cast<std::size_t>(r)];
          // For n = 1 only the leading coefficient survives.
          const bool ok = v.is_integer() && (n == 1 ? (r == m ? v == Rational(1) : v.is_zero()) : v.sign() > 0);
          t.expect(ok, [&] { return cat("p_{", m, ",", r, "}(", n, ") = ", v.str()); });
        }
      }
  }));
  tasks.push_back(guarded(s, "quarter_pi", [o](Tally& t) {
    for (int m = 1; m <= o.max_m; ++m)
      for (int n = 1; n <= 12; ++n) {
        const Rational v = S_quarter_pi(m, n);
        t.expect(v.is_integer(), [&] { return cat("S(", m, ",", n, ",pi/4) = ", v.str()); });
        t.expect(v == S_trace(m, n, 1), [&] { return cat("trace mismatch at m=", m, " n=", n); });
        const double f = byrne_smith_float(m, n);
        t.expect(close_relative(f, v.to_double(), kS0RelTol), [&] { return cat("float ", f, " vs ", v.str()); });
      }
  }));
  tasks.push_back(guarded(s, "half_pi_forms", [](Tally& t) {
    for (int m = 1; m <= 12; ++m)
      for (int n = 1; n <= 10; ++n) {
        const Rational a = S_half_pi(m, n, HalfPiMethod::TangentForm);
        const Rational b = S_half_pi(m, n, HalfPiMethod::BernoulliForm);
        t.expect(a == b && a == S_trace(m, n, 0), [&] { return cat("m=", m, " n=", n, ": ", a.str(), " vs ", b.str()); });
        if (m % 2 == 1) t.expect(a.is_zero(), [&] { return cat("odd m=", m, " not zero"); });
      }
  }));
  tasks.push_back(guarded(s, "lucas", [](Tally& t) {
    const std::vector<Rational> v = S_trace_upto(20, 2, Rational(1, 2));
    Integer a = 2, b = 1;
    for (int m = 0; m <= 20; ++m) {
      t.expect(v[static_cast<std::size_t>(m)] == Rational(a), [&] { return cat("L_", m, " = ", to_string(a)); });
      a = Integer(a + b);
      std::swap(a, b);
    }
  }));
  tasks.push_back(guarded(s, "berndt_yeap", [](Tally& t) {
    for (int m = 1; m <= 5; ++m)
      for (int n = 2; n <= 12; ++n) {
        const Rational v = S0_bernoulli(m, n);
        const double f = S0_float(2 * m, n);
        t.expect(close_relative(v.to_double(), f, kS0RelTol), [&] { return cat("m=", m, " n=", n, ": ", v.str(), " vs ", f); });
        if (m == 1)
          t.expect(v == Rational(Integer((n - 1) * (n - 2)), Integer(3)), [&] { return cat("m=1 n=", n, ": ", v.str()); });
      }
  }));
  tasks.push_back(guarded(s, "odd_parity", [o](Tally& t) {
    for (int m = 1; m <= o.max_m; m += 2)
      for (int n = 2; n <= 12; ++n) {
        double scale = 0.0;
        for (int k = 1; k < n; ++k) scale += std::pow(std::abs(1.0 / std::tan(k * std::numbers::pi / n)), m);
        const double v = S0_float(m, n);
        t.expect(std::abs(v) <= 1e-10 * std::max(1.0, scale), [&] { return cat("S0(", m, ",", n, ") = ", v); });
        t.expect(S_trace(m, n, 0).is_zero(), [&] { return cat("S(", m, ",", n, ",pi/2) nonzero"); });
      }
  }));
  tasks.push_back(guarded(s, "zeta", [](Tally& t) {
    for (int n : {10, 100, 1000}) {
      const double err = zeta_approx(1, n) - zeta_reference(1);
      const double expected = -zeta_reference(1) / n;
      t.expect(std::abs(err - expected) <= 1e-12, [&] { return cat("k=1 n=", n, " error ", err); });
    }
    for (int k : {2, 3}) {
      double previous = 0.0;
      for (int n : {10, 20, 40, 80}) {
        const double err = std::abs(zeta_approx(k, n) - zeta_reference(k));
        if (n > 10) {
          t.expect(err < previous, [&] { return cat("k=", k, " error not decreasing at n=", n); });
          if (n == 80) {
            const double ratio = previous / err;
            t.expect(ratio >= 3.5 && ratio <= 4.5, [&] { return cat("k=", k, " doubling ratio ", ratio); });
          }
        }
        previous = err;
      }
    }
  }));
  tasks.push_back(guarded(s, "asymptotics", [o](Tally& t) {
    for (const Rational& c : o.cot_values)
      for (int m = 1; m <= 6; ++m) {
        const double limit = asymptotic_limit(m, c).to_double();
        double previous = INFINITY;
        for (int n : {4, 8, 16, 32}) {
          const double gap = std::abs((S_trace(m, n, c) / Rational(n).pow(static_cast<unsigned>(m))).to_double() - limit);
          t.expect(gap <= previous, [&] { return cat("m=", m, " c=", c.str(), " gap grows at n=", n); });
          previous = gap;
        }
      }
  }));
}

void add_sequence_checks(std::vector<Task>& tasks) {
  const std::string s = "sequences";
  tasks.push_back(guarded(s, "monomial_inversion", [](Tally& t) {
    const ArctanTable a(14);
    const DerivativePolySet P = derivative_polys(13, DerivativePolyMethod::Recursion);
    for (int m = 1; m <= 14; ++m) {
      RationalPoly sum;
      for (int k = 1; k <= m; ++k) sum += P[k - 1] * Rational(a.at(m, k));
      sum = sum * Rational(Integer(1), factorial(static_cast<unsigned>(m - 1)));
      if (m % 2 == 0) sum += RationalPoly::constant((m / 2) % 2 == 0 ? Rational(1) : Rational(-1));
      t.expect(sum == RationalPoly::monomial(1, static_cast<std::size_t>(m)), [&] { return cat("m=", m); });
    }
  }));
  tasks.push_back(guarded(s, "tangent_poly_relations", [](Tally& t) {
    const DerivativePolySet P = derivative_polys(15, DerivativePolyMethod::Recursion);
    const std::vector<RationalPoly> T = tangent_polys(16);
    const RationalPoly x = RationalPoly::x();
    const RationalPoly one_plus_x2(std::vector<Rational>{1, 0, 1});
    for (int n = 0; n <= 15; ++n) {
      if (n >= 1)
        t.expect(x * P[n] == one_plus_x2 * T[static_cast<std::size_t>(n)], [&] { return cat("x P_n = (1+x^2) T_n at n=", n); });
      t.expect(x * P[n].derivative() == T[static_cast<std::size_t>(n + 1)], [&] { return cat("x P_n' = T_(n+1) at n=", n); });
    }
  }));
  tasks.push_back(guarded(s, "euler_identities", [](Tally& t) {
    const std::vector<Integer> E = euler_zigzag(15);
    const DerivativePolySet P = derivative_polys(15, DerivativePolyMethod::Recursion);
    const Stirling2Table st = stirling2_table(15);
    for (int n = 0; n <= 15; ++n) {
      const Rational lhs = Rational(2).pow(static_cast<unsigned>(n)) * Rational(E[static_cast<std::size_t>(n)]);
      t.expect(lhs == P[n](Rational(1)), [&] { return cat("2^n E_n = P_n(1) at n=", n); });
      if (n >= 1) {
        const GaussianRational g = euler_from_stirling(st, n);
        t.expect(g.is_real() && g.re() == Rational(E[static_cast<std::size_t>(n)]), [&] { return cat("Stirling form at n=", n, ": ", g.str()); });
      }
    }
  }));
  tasks.push_back(guarded(s, "geometric_bernoulli", [](Tally& t) {
    const Stirling2Table st = stirling2_table(13);
    const std::vector<Rational> B = bernoulli_numbers(14);
    for (int m = 1; m <= 13; ++m) {
      const Rational w = geometric_poly_value(st, m, Rational(-1, 2));
      const Rational expected =
          m % 2 == 0 ? Rational(0)
                     : Rational(2) * (Rational(1) - Rational(2).pow(static_cast<unsigned>(m + 1))) *
                           B[static_cast<std::size_t>(m + 1)] * Rational(1, m + 1);
      t.expect(w == expected, [&] { return cat("m=", m, ": ", w.str(), " vs ", expected.str()); });
    }
  }));
  tasks.push_back(guarded(s, "derivative_poly_methods", [](Tally& t) {
    const DerivativePolySet a = derivative_polys(15, DerivativePolyMethod::Recursion);
    const DerivativePolySet b = derivative_polys(15, DerivativePolyMethod::Explicit);
    const DerivativePolySet c = derivative_polys(15, DerivativePolyMethod::TangentExpansion);
    const TangentTable T(15);
    for (int n = 0; n <= 15; ++n) {
      t.expect(a[n] == b[n] && a[n] == c[n], [&] { return cat("n=", n); });
      t.expect(a[n](Rational(0)) == Rational(T.number(n)), [&] { return cat("P_n(0) = T_n at n=", n); });
    }
  }));
  tasks.push_back(guarded(s, "arctangent_signs", [](Tally& t) {
    const ArctanTable a(20);
    for (int n = 1; n <= 20; ++n) {
      t.expect(a.at(n, n) == 1, [&] { return cat("A_n^(n) at n=", n); });
      for (int k = 1; k <= n; ++k) {
        const bool ok = (n - k) % 2 != 0 ? (a.at(n, k) == 0 && a.hyperbolic(n, k) == 0)
                                         : (a.hyperbolic(n, k) >= 0 &&
                                            a.at(n, k) == (((n - k) / 2) % 2 == 0 ? a.hyperbolic(n, k) : Integer(-a.hyperbolic(n, k))));
        t.expect(ok, [&] { return cat("n=", n, " k=", k); });
      }
    }
  }));
  tasks.push_back(guarded(s, "tangent_diagonal", [](Tally& t) {
    const TangentTable T(20);
    for (int n = 1; n <= 20; ++n) t.expect(T.at(n, n) == factorial(static_cast<unsigned>(n)), [&] { return cat("n=", n); });
  }));
}

void add_matrix_checks(const VerifyOptions& o, std::vector<Task>& tasks) {
  tasks.push_back(guarded("sequences", "charpoly_methods", [o](Tally& t) {
    for (int n = 1; n <= o.max_n; ++n)
      for (const Rational& a : o.cot_values) {
        const RationalPoly r = charpoly(n, a, CharPolyMethod::Recurrence).real_poly();
        t.expect(r == charpoly(n, a, CharPolyMethod::Closed).real_poly() &&
                     r == charpoly(n, a, CharPolyMethod::CoeffFormula).real_poly(),
                 [&] { return cat("n=", n, " a=", a.str()); });
        for (int k = 1; k <= n; ++k) elementary_symmetric(n, a, k);
      }
  }));
}

void add_combinatorics_checks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string s = "combinatorics";
  const int max_n = std::min(o.max_n, 7);
  const int max_m = std::min(o.max_m, 6);
  tasks.push_back(guarded(s, "moment_routes", [max_n, max_m](Tally& t) {
    for (int n = 1; n <= max_n; ++n) {
      const RationalSeries q = Q_series(n, 2 * max_m, QMethod::Recursion);
      const auto table = d_table(n, max_m);
      for (int m = 0; m <= max_m; ++m) {
        const Rational d = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
        const Rational direct = m == 0 ? Rational(n) : mixed_moment(n, {{Letter::J, 1}, {Letter::B, 2 * m}});
        t.expect(d == d_dyck(n, m) && d == e_trees(n, m + 1) && d == direct && d == jb_moment_from_coefficients(n, m) &&
                     d == q[static_cast<std::size_t>(2 * m)],
                 [&] { return cat("n=", n, " m=", m); });
      }
    }
  }));
  tasks.push_back(guarded(s, "alternating_trace", [max_n, max_m](Tally& t) {
    for (int n = 1; n <= max_n; ++n) {
      const std::vector<Rational> traces = trace_powers(build_B(n), 2 * max_m);
      const RationalSeries mb = M_B_series(n, 2 * max_m);
      for (int m = 0; m <= max_m; ++m) {
        const Rational v = trace_B_alternating(n, m);
        t.expect(v == traces[static_cast<std::size_t>(2 * m)] && v == mb[static_cast<std::size_t>(2 * m)],
                 [&] { return cat("n=", n, " m=", m); });
      }
    }
  }));
  tasks.push_back(guarded(s, "forest_composition", [](Tally& t) {
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 6; ++n) {
        const CotPolynomial p = p_coeffs(m, n);
        for (int k = (m % 2 == 0 ? 2 : 1); k <= m; k += 2) {
          t.expect(p_forest(m, k, n) == p.coeffs[static_cast<std::size_t>(k)], [&] { return cat("m=", m, " k=", k, " n=", n); });
          if (m <= 5)
            t.expect(p_forest_enumerated(m, k, n) == p.coeffs[static_cast<std::size_t>(k)],
                     [&] { return cat("enumerated m=", m, " k=", k, " n=", n); });
        }
      }
  }));
  tasks.push_back(guarded(s, "dyck_high_levels", [max_n](Tally& t) {
    for (int n = 1; n <= max_n; ++n)
      for (const WeightedDyckPath& wp : weighted_dyck_paths(n, 6)) {
        int level = 0, peak = 0;
        for (Step st : wp.path.steps) peak = std::max(peak, level += (st == Step::Up ? 1 : -1));
        if (peak >= n) t.expect(wp.weight.is_zero(), [&] { return cat("n=", n, " path ", wp.path.str()); });
      }
  }));
}

void add_genfun_checks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string s = "genfun";
  tasks.push_back(guarded(s, "sum_series_vs_trace", [o](Tally& t) {
    for (int n = 1; n <= o.max_n; ++n)
      for (const Rational& c : o.cot_values) {
        const RationalSeries f = F_series(n, c, 16).coeffs;
        const std::vector<Rational> tr = S_trace_upto(16, n, c);
        for (int m = 0; m <= 16; ++m)
          t.expect(f[static_cast<std::size_t>(m)] == tr[static_cast<std::size_t>(m)], [&] { return cat("n=", n, " c=", c.str(), " m=", m); });
      }
  }));
  tasks.push_back(guarded(s, "functional_relation", [](Tally& t) {
    for (int n = 1; n <= 6; ++n)
      for (const Rational& x : relation_x_values())
        t.expect(verify_functional_relation(n, x, 12).is_zero(), [&] { return cat("n=", n, " x=", x.str()); });
  }));
  tasks.push_back(guarded(s, "tangent_reciprocal", [](Tally& t) {
    for (int n = 1; n <= 8; ++n)
      t.expect(tan_multiple_angle_series(n, 16) == tan_multiple_angle_from_reciprocal(n, 16), [&] { return cat("n=", n); });
  }));
  tasks.push_back(guarded(s, "cot_reciprocal", [o](Tally& t) {
    for (int n = 1; n <= 8; ++n)
      for (const Rational& c : o.cot_values) {
        const RationalSeries a = cot_shifted_from_reciprocal(n, c, 16);
        t.expect(a == cot_shifted_from_tangent(n, c, 16) && a == cot_shifted_from_sum_series(n, c, 16),
                 [&] { return cat("n=", n, " c=", c.str()); });
      }
  }));
  tasks.push_back(guarded(s, "q_methods", [](Tally& t) {
    for (int n = 1; n <= 8; ++n) {
      const RationalSeries q = Q_series(n, 16, QMethod::Recursion);
      t.expect(q == Q_series(n, 16, QMethod::ContinuedFraction) && q == Q_series(n, 16, QMethod::TanCompose),
               [&] { return cat("methods differ at n=", n); });
      t.expect(Q_continued_fraction(n, 16, n) == Q_continued_fraction(n, 16, n + 3), [&] { return cat("depth at n=", n); });
      const RationalSeries mb = M_B_series(n, 16);
      for (int k = 1; k <= 16; k += 2)
        t.expect(q[static_cast<std::size_t>(k)].is_zero() && mb[static_cast<std::size_t>(k)].is_zero(),
                 [&] { return cat("odd coefficient ", k, " at n=", n); });
    }
  }));
}

std::string naive_moment_diagnostic() {
  const Rational naive = jb_moment_naive_formula(3, 1);
  const Rational actual = d_recurrence(3, 1);
  return cat("moment formula read off the linear coefficient gives ", naive.str(), " for Tr(J_3 B_3^2) = ",
             actual.str(), naive == actual ? " (agrees)" : " (disagrees)");
}

}  // namespace

VerifySuite parse_verify_suite(std::string_view name) {
  if (name == "all") return VerifySuite::All;
  if (name == "sums") return VerifySuite::Sums;
  if (name == "sequences") return VerifySuite::Sequences;
  if (name == "combinatorics") return VerifySuite::Combinatorics;
  if (name == "genfun") return VerifySuite::GenFun;
  raise(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::string_view verify_suite_name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::All: return "all";
    case VerifySuite::Sums: return "sums";
    case VerifySuite::Sequences: return "sequences";
    case VerifySuite::Combinatorics: return "combinatorics";
    case VerifySuite::GenFun: return "genfun";
  }
  return "unknown";
}

bool VerifyResult::passed() const { return failures() == 0; }

std::size_t VerifyResult::failures() const {
  std::size_t count = 0;
  for (const CheckResult& c : checks) count += c.passed ? 0 : 1;
  return count;
}

VerifyResult run_verification(const VerifyOptions& options) {
  require(options.max_m >= 1, ErrorCode::InvalidArgument, "max-m must be >= 1");
  require(options.max_n >= 1, ErrorCode::InvalidArgument, "max-n must be >= 1");
  require(options.max_m <= 40, ErrorCode::TooLarge, "max-m must be <= 40");
  require(options.max_n <= 64, ErrorCode::TooLarge, "max-n must be <= 64");
  const auto want = [&](VerifySuite s) { return options.suite == VerifySuite::All || options.suite == s; };

  std::vector<Task> tasks;
  if (want(VerifySuite::Sums)) add_sum_checks(options, tasks);
  if (want(VerifySuite::Sequences)) {
    add_sequence_checks(tasks);
    add_matrix_checks(options, tasks);
  }
  if (want(VerifySuite::Combinatorics)) add_combinatorics_checks(options, tasks);
  if (want(VerifySuite::GenFun)) add_genfun_checks(options, tasks);

  VerifyResult result;
  if (options.parallel) {
    std::vector<std::future<CheckResult>> pending;
    pending.reserve(tasks.size());
    for (Task& task : tasks) pending.push_back(std::async(std::launch::async, task));
    for (auto& f : pending) result.checks.push_back(f.get());
  } else {
    for (Task& task : tasks) result.checks.push_back(task());
  }
  if (want(VerifySuite::Sums)) result.diagnostics.push_back(naive_moment_diagnostic());
  return result;
}

}  // namespace cotsum
