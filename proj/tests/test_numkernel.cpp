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

#include <random>

#include "cotsum/numkernel.hpp"
#include "oracle.hpp"

using namespace cotsum;
using oracle::q;

namespace {

RationalPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoly(v);
}

RationalSeries series(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  const int order = static_cast<int>(v.size()) - 1;
  return RationalSeries(v, order);
}

template <class E>
ErrorCode code_of(E&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK(q(6, 3).str() == "2");
  CHECK(q(6, 3).is_integer());
  CHECK(Rational::parse(" -3/6 ") == q(-1, 2));
  CHECK(Rational::parse("+7") == q(7));
  CHECK(code_of([] { (void)Rational::parse("1/x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)Rational::parse(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { (void)(q(1) / q(0)); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { (void)q(0).inverse(); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("rational arithmetic against cross multiplication") {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x = q(a, b), y = q(c, d);
    CHECK(x + y == q(a * d + b * c, b * d));
    CHECK(x - y == q(a * d - b * c, b * d));
    CHECK(x * y == q(a * c, b * d));
    if (c != 0) CHECK(x / y == q(a * d, b * c));
    CHECK((x < y) == (a * d < c * b));
    const Rational back = Rational::parse(x.str());
    CHECK(back == x);
    CHECK(back.str() == x.str());
  }
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(q(-2, 3).pow(3) == q(-8, 27));
  CHECK(q(-2, 3).abs() == q(2, 3));
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.pow(4) == GaussianRational(1));
  const GaussianRational z(q(1), q(2));
  CHECK(z * z.conj() == GaussianRational(z.norm()));
  CHECK((z / z) == GaussianRational(1));
  CHECK((GaussianRational(1) / i) == -i);
  CHECK(z.str() == "1+2i");
  CHECK(z.conj().str() == "1-2i");
  CHECK(code_of([&] { (void)z.real_value("test"); }) == ErrorCode::NonRealValue);
  CHECK(code_of([] { (void)(GaussianRational(1) / GaussianRational(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("polynomial evaluation and derivative") {
  CHECK(poly({-1, -1, 1})(q(2)) == q(1));
  CHECK(RationalPoly()(q(17, 3)) == q(0));
  CHECK(poly({0, 2, 0, 2})(q(1)) == q(4));
  CHECK(poly({-1, -1, 1}).derivative() == poly({-1, 2}));
  CHECK(poly({5}).derivative().is_zero());
  CHECK(poly({1, 0, 1}).derivative() == poly({0, 2}));
  CHECK(RationalPoly().degree() == -1);
  CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
  CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
  CHECK(poly({1, 2}).shifted(2) == poly({0, 0, 1, 2}));
}

TEST_CASE("polynomial product matches pointwise evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalPoly a = poly({c(rng), c(rng), c(rng)});
    const RationalPoly b = poly({c(rng), c(rng), c(rng), c(rng)});
    for (long x = -3; x <= 3; ++x) {
      CHECK((a * b)(q(x)) == a(q(x)) * b(q(x)));
      CHECK((a + b)(q(x)) == a(q(x)) + b(q(x)));
    }
  }
}

TEST_CASE("series division") {
  CHECK(series_div(RationalSeries::constant(q(1), 4), series({1, -1, 0, 0, 0})) == series({1, 1, 1, 1, 1}));
  CHECK(series_div(series({3, 0, -1, 0, 0, 0, 0}), series({1, 0, -3, 0, 0, 0, 0})) ==
        series({3, 0, 8, 0, 24, 0, 72}));
  const RationalSeries tan5 = series_div(sin_series(5), cos_series(5));
  CHECK(tan5 == RationalSeries({q(0), q(1), q(0), q(1, 3), q(0), q(2, 15)}, 5));
  CHECK(tan_series(5) == tan5);
  CHECK(code_of([] { (void)series_div(series({1, 1}), series({0, 1})); }) == ErrorCode::ZeroConstantTerm);
}

TEST_CASE("series composition") {
  const RationalSeries s = series({0, 2, -1, 5, 3});
  CHECK(series_compose(RationalSeries::variable(4), s) == s);
  CHECK(series_compose(tan_series(15), arctan_series(15)) == RationalSeries::variable(15));
  // n! [z^n] e^(e^z - 1) gives the Bell numbers.
  const RationalSeries e = exp_minus_one_series(8);
  const RationalSeries be = series_compose(e, e);
  const auto bell = oracle::bell(8);
  for (int n = 1; n <= 8; ++n) CHECK(be[static_cast<std::size_t>(n)] * Rational(factorial(static_cast<unsigned>(n))) == Rational(bell[static_cast<std::size_t>(n)]));
  CHECK(code_of([] { (void)series_compose(series({1, 1}), series({1, 1})); }) == ErrorCode::NonzeroInnerConstant);
}

TEST_CASE("rational function expansion") {
  CHECK(series_from_rational_function(poly({1}), poly({1, 0, 1}), 4) == series({1, 0, -1, 0, 1}));
  CHECK(series_from_rational_function(poly({-3, 0, 1}), poly({-1, 0, 3}), 10) ==
        series({3, 0, 8, 0, 24, 0, 72, 0, 216, 0, 648}));
  std::vector<long> fib{1, 1};
  while (fib.size() < 7) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const RationalSeries f = series_from_rational_function(poly({1}), poly({1, -1, -1}), 6);
  for (std::size_t k = 0; k < fib.size(); ++k) CHECK(f[k] == q(fib[k]));
  CHECK(code_of([] { (void)series_from_rational_function(poly({1}), poly({0, 1}), 3); }) == ErrorCode::PoleAtOrigin);
}

TEST_CASE("series basics") {
  CHECK(code_of([] { RationalSeries s(-1); }) == ErrorCode::InvalidArgument);
  const RationalSeries s = series({1, 2, 3});
  CHECK(s.derivative() == RationalSeries({q(2), q(6)}, 1));
  CHECK(s.shifted_up(1) == series({0, 1, 2}));
  CHECK(series({0, 4, 5}).shifted_down() == RationalSeries({q(4), q(5)}, 1));
  CHECK((s * series({1, -1, 0})) == series({1, 1, 1}));
  CHECK((s + RationalSeries(1)).order() == 1);
  CHECK(sec_series(6) * cos_series(6) == RationalSeries::constant(q(1), 6));
  CHECK(atanh_series(5) == RationalSeries({q(0), q(1), q(0), q(1, 3), q(0), q(1, 5)}, 5));
}
