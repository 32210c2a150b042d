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

#include <cmath>
#include <numbers>

#include "cotsum/sumlab.hpp"
#include "oracle.hpp"

using namespace cotsum;
using oracle::q;

namespace {

const std::vector<Rational> kCots{q(0), q(1), q(1, 2), q(-2), q(3, 7)};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

Rational npoly(std::initializer_list<long> coeffs, long n) {
  Rational acc;
  Rational p = 1;
  for (long c : coeffs) {
    acc += Rational(c) * p;
    p *= Rational(n);
  }
  return acc;
}

}  // namespace

TEST_CASE("float sum") {
  const double pi = std::numbers::pi;
  CHECK(std::fabs(S_float(1, 4, pi / 4) - 4.0) < 1e-12);
  CHECK(std::fabs(S_float(2, 3, pi / 2) - 6.0) < 1e-12);
  CHECK(std::fabs(S_float(2, 5, pi / 2) - 20.0) < 1e-12);
  CHECK(code_of([&] { (void)S_float(2, 3, 0.0); }) == ErrorCode::SingularAlpha);
  CHECK(code_of([&] { (void)S_float(2, 3, pi); }) == ErrorCode::SingularAlpha);
  CHECK(arccot(q(1)) == doctest::Approx(pi / 4));
  CHECK(arccot(q(-1)) == doctest::Approx(3 * pi / 4));
  CHECK(arccot(q(0)) == doctest::Approx(pi / 2));
}

TEST_CASE("exact evaluators on small cases") {
  CHECK(S_trace(2, 3, q(1)) == q(15));
  CHECK(S_trace(3, 2, q(1)) == q(14));
  CHECK(S_trace(5, 1, q(2, 3)) == q(32, 243));
  CHECK(S_closed(1, 5, q(3, 7)) == q(15, 7));
  CHECK(S_closed(3, 3, q(1)) == q(51));
  CHECK(S_closed(0, 4, q(9)) == q(4));
  CHECK(S_faadibruno(1, 6, q(-2)) == q(-12));
  CHECK(S_faadibruno(4, 3, q(0)) == q(18));
  for (int n = 1; n <= 6; ++n)
    for (const Rational& c : kCots) {
      const Rational two = Rational(n * n) * c * c + Rational(n * n - n);
      CHECK(S_closed(2, n, c) == two);
      CHECK(S_faadibruno(2, n, c) == two);
    }
}

TEST_CASE("exact evaluators agree with each other and with the float oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const Rational& c : kCots) {
      const auto tr = S_trace_upto(10, n, c);
      const long double alpha = oracle::alpha_of(oracle::to_ld(c));
      for (int m = 1; m <= 10; ++m) {
        const Rational& t = tr[static_cast<std::size_t>(m)];
        CHECK(t == S_trace(m, n, c));
        CHECK(t == S_closed(m, n, c));
        CHECK(t == S_faadibruno(m, n, c));
        CHECK(t == S_faadibruno(m, n, c, PartitionRoute::Shapes));
        CHECK(t == p_coeffs(m, n)(c));
        CHECK(oracle::near(oracle::to_ld(t), oracle::cot_sum(m, n, alpha), 1e-9L));
      }
    }
  }
}

TEST_CASE("cot polynomial coefficients") {
  for (int n = 1; n <= 8; ++n) {
    const long N = n;
    CHECK(p_coeffs(1, n).coeffs[1] == Rational(n));
    CHECK(p_coeffs(2, n).coeffs[0] == npoly({0, -1, 1}, N));
    CHECK(p_coeffs(3, n).coeffs[1] == npoly({0, -1, 0, 1}, N));
    CHECK(p_coeffs(4, n).coeffs[2] == npoly({0, 0, -4, 0, 4}, N) / Rational(3));
    CHECK(p_coeffs(4, n).coeffs[0] == npoly({0, 3, -4, 0, 1}, N) / Rational(3));
    CHECK(p_coeffs(5, n).coeffs[3] == npoly({0, 0, 0, -5, 0, 5}, N) / Rational(3));
    CHECK(p_coeffs(5, n).coeffs[1] == npoly({0, 3, 0, -5, 0, 2}, N) / Rational(3));
  }
  CHECK(p_coeff_polynomial(5, 1) == RationalPoly({q(0), q(1), q(0), q(-5, 3), q(0), q(2, 3)}));
  // (2n^5 - 5n^3 + n)/3 is off by 2n/3
  CHECK(p_coeff_polynomial(5, 1) != RationalPoly({q(0), q(1, 3), q(0), q(-5, 3), q(0), q(2, 3)}));
  for (int m = 1; m <= 10; ++m) {
    for (int r = 0; r <= m; ++r) {
      const RationalPoly p = p_coeff_polynomial(m, r);
      for (int n = 1; n <= 8; ++n) {
        const Rational v = p(Rational(n));
        CHECK(v == p_coeffs(m, n).coeffs[static_cast<std::size_t>(r)]);
        if ((m - r) % 2) {
          CHECK(v == q(0));
        } else {
          CHECK(v.is_integer());
          if (n >= 2) CHECK(v > q(0));
          else CHECK(v == (r == m ? q(1) : q(0)));
        }
      }
    }
  }
}

TEST_CASE("half and quarter angles") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(S_half_pi(2, n) == Rational(n * n - n));
    CHECK(S_quarter_pi(1, n) == Rational(n));
    CHECK(S_quarter_pi(2, n) == Rational(2 * n * n - n));
    CHECK(S_quarter_pi(3, n) == Rational(2 * n * n * n - n));
    for (int m = 1; m <= 12; ++m) {
      if (m % 2) CHECK(S_half_pi(m, n) == q(0));
      CHECK(S_half_pi(m, n, HalfPiMethod::BernoulliForm) == S_half_pi(m, n, HalfPiMethod::TangentForm));
      CHECK(S_half_pi(m, n) == S_trace(m, n, q(0)));
      CHECK(S_quarter_pi(m, n) == S_trace(m, n, q(1)));
    }
  }
  CHECK(S_half_pi(4, 3) == q(18));
  CHECK(S_half_pi(4, 3, HalfPiMethod::BernoulliForm) == q(18));
  CHECK(parse_half_pi_method("bernoulli_form") == HalfPiMethod::BernoulliForm);
}

TEST_CASE("quarter angle sums against the shifted float sums") {
  for (int m = 1; m <= 10; ++m) {
    for (int n = 1; n <= 12; ++n) {
      const Rational v = S_quarter_pi(m, n);
      CHECK(v.is_integer());
      long double direct = 0;
      for (int k = 1; k <= n; ++k) {
        const long double t = (2 * k - 1) * std::numbers::pi_v<long double> / (4 * n);
        const long double ct = std::pow(std::cos(t) / std::sin(t), m);
        direct += (m % 2 && k % 2 == 0) ? -ct : ct;
      }
      CHECK(oracle::near(oracle::to_ld(v), direct, 1e-7L));
      CHECK(oracle::near(oracle::to_ld(v), byrne_smith_float(m, n), 1e-7L));
    }
  }
}

TEST_CASE("sums at zero offset") {
  CHECK(S0_bernoulli(1, 5) == q(4));
  CHECK(S0_bernoulli(1, 4) == q(2));
  CHECK(S0_bernoulli(2, 3) == q(2, 9));
  CHECK(std::fabs(S0_float(2, 4) - 2.0) < 1e-12);
  CHECK(std::fabs(S0_float(2, 5) - 4.0) < 1e-9);
  for (int n = 2; n <= 12; ++n) CHECK(std::fabs(S0_float(3, n)) < 1e-10);
  for (int mh = 1; mh <= 5; ++mh)
    for (int n = 2; n <= 12; ++n)
      CHECK(oracle::near(oracle::to_ld(S0_bernoulli(mh, n)), oracle::cot_sum_zero(2 * mh, n), 1e-7L));
  for (int n = 2; n <= 12; ++n) {
    CHECK(S0_bernoulli(1, n) == Rational((n - 1) * (n - 2)) / Rational(3));
    CHECK(oracle::near(oracle::cot_sum_zero(2, n), (n - 1) * (n - 2) / 3.0L, 1e-9L));
  }
  CHECK(code_of([] { (void)S0_bernoulli(1, 1); }) == ErrorCode::BadN);
  CHECK(code_of([] { (void)S0_float(2, 1); }) == ErrorCode::BadN);
}

TEST_CASE("asymptotics and zeta values") {
  CHECK(asymptotic_limit(2, q(0)) == q(1));
  CHECK(asymptotic_limit(1, q(5, 2)) == q(5, 2));
  CHECK(asymptotic_limit(4, q(0)) == q(1, 3));
  for (int m = 1; m <= 6; ++m) {
    for (const Rational& c : kCots) {
      const long double lim = oracle::to_ld(asymptotic_limit(m, c));
      const long double a = oracle::to_ld(S_trace(m, 40, c) / Rational(40).pow(static_cast<unsigned>(m)));
      const long double b = oracle::to_ld(S_trace(m, 80, c) / Rational(80).pow(static_cast<unsigned>(m)));
      CHECK(std::fabs(b - lim) <= std::fabs(a - lim) + 1e-15L);
      CHECK(std::fabs(b - lim) < 0.2L * std::fmax(1.0L, std::fabs(lim)));
    }
  }
  const double z2 = std::numbers::pi * std::numbers::pi / 6;
  CHECK(zeta_approx(1, 100) == doctest::Approx(z2 * 0.99).epsilon(1e-12));
  CHECK(std::fabs(zeta_approx(2, 50) - std::pow(std::numbers::pi, 4) / 90) < 0.01);
  CHECK(zeta_reference(1) == doctest::Approx(z2).epsilon(1e-14));
  CHECK(code_of([] { (void)zeta_approx(0, 10); }) == ErrorCode::BadK);
  CHECK(code_of([] { (void)zeta_approx(1, 0); }) == ErrorCode::BadN);
  CHECK(code_of([] { (void)zeta_reference(6); }) == ErrorCode::BadK);
}

TEST_CASE("moments from the linear coefficient") {
  CHECK(jb_moment_from_coefficients(3, 1) == q(8));
  CHECK(jb_moment_from_coefficients(3, 2) == q(24));
  CHECK(jb_moment_naive_formula(3, 1) != q(8));
}

TEST_CASE("method reports") {
  SumReport r = sum_report(2, 3, q(1), all_sum_methods());
  CHECK(r.agree);
  CHECK(r.values.size() == 5);
  for (const SumValue& v : r.values) {
    if (v.exact) CHECK(*v.exact == q(15));
    if (v.approx) CHECK(*v.approx == doctest::Approx(15.0));
  }
  r = sum_report_float(2, 3, std::numbers::pi / 2);
  CHECK(r.values.size() == 1);
  CHECK(*r.values[0].approx == doctest::Approx(6.0));
  CHECK(parse_sum_method("faa") == SumMethod::FaaDiBruno);
  CHECK(parse_sum_method("faadibruno") == SumMethod::FaaDiBruno);
  CHECK(sum_method_name(SumMethod::GenFun) == "genfun");
  CHECK_THROWS_AS(parse_sum_method("magic"), Error);
  CHECK(close_relative(1.0 + 1e-9, 1.0, kFloatRelTol));
  CHECK_FALSE(close_relative(1.0 + 1e-7, 1.0, kFloatRelTol));
}
