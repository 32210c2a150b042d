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

#include "cotsum/specmat.hpp"
#include "oracle.hpp"

using namespace cotsum;
using oracle::q;

namespace {

const std::vector<Rational> kCots{q(0), q(1), q(1, 2), q(-2), q(3, 7)};

GaussianRational gi(long re, long im) { return {q(re), q(im)}; }

}  // namespace

TEST_CASE("matrix construction") {
  const SquareMatrix c1 = build_C(1, q(5));
  CHECK(c1.dim() == 1);
  CHECK(c1(0, 0) == GaussianRational(5));

  const SquareMatrix c2 = build_C(2, q(1, 2));
  CHECK(c2(0, 0) == GaussianRational(q(1, 2)));
  CHECK(c2(0, 1) == GaussianRational(q(1, 2), q(1)));
  CHECK(c2(1, 0) == GaussianRational(q(1, 2), q(-1)));
  CHECK(c2(1, 1) == GaussianRational(q(1, 2)));

  const SquareMatrix b3 = build_C(3, q(0));
  CHECK(b3 == build_B(3));
  CHECK(b3(0, 1) == gi(0, 1));
  CHECK(b3(0, 2) == gi(0, 1));
  CHECK(b3(1, 2) == gi(0, 1));
  CHECK(b3(2, 0) == gi(0, -1));
  for (int i = 0; i < 3; ++i) CHECK(b3(i, i) == GaussianRational(0));

  for (int n = 1; n <= 8; ++n)
    for (const Rational& a : kCots) CHECK(build_C(n, a).is_self_adjoint());

  CHECK_THROWS_AS(SquareMatrix(0), Error);
  try {
    build_J(0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDimension);
  }
}

TEST_CASE("trace powers") {
  CHECK(trace_power(build_C(2, q(1, 2)), 2) == q(3));
  CHECK(trace_power(build_C(3, q(1)), 2) == q(15));
  CHECK(trace_power(build_B(2), 4) == q(2));
  CHECK(trace_power(build_B(5), 0) == q(5));
  const auto tp = trace_powers(build_C(4, q(3, 7)), 6);
  for (int m = 0; m <= 6; ++m) CHECK(tp[static_cast<std::size_t>(m)] == trace_power(build_C(4, q(3, 7)), m));
}

TEST_CASE("trace powers match the eigenvalue sums") {
  for (int n = 1; n <= 8; ++n) {
    for (const Rational& a : kCots) {
      const long double alpha = oracle::alpha_of(oracle::to_ld(a));
      const auto tp = trace_powers(build_C(n, a), 10);
      for (int m = 0; m <= 10; ++m) {
        CHECK(oracle::near(oracle::to_ld(tp[static_cast<std::size_t>(m)]), oracle::cot_sum(m, n, alpha), 1e-6L));
      }
    }
  }
}

TEST_CASE("mixed moments") {
  for (int n = 1; n <= 6; ++n) CHECK(mixed_moment(n, {{Letter::J, 1}, {Letter::B, 1}, {Letter::J, 1}, {Letter::B, 1}}) == q(0));
  CHECK(mixed_moment(3, {{Letter::J, 1}, {Letter::B, 2}}) == q(8));
  // n^2 <xi, B^2 xi>^2 = 9 (8/3)^2
  CHECK(mixed_moment(3, {{Letter::J, 1}, {Letter::B, 2}, {Letter::J, 1}, {Letter::B, 2}}) == q(64));
  CHECK(state_moment(3, 2) == q(8, 3));
  CHECK(state_moment(4, 3) == q(0));
}

TEST_CASE("mixed moment factorisation over many words") {
  const std::vector<std::vector<std::pair<Letter, int>>> words{
      {{Letter::J, 1}, {Letter::B, 2}},
      {{Letter::B, 2}, {Letter::J, 2}, {Letter::B, 4}},
      {{Letter::J, 1}, {Letter::B, 2}, {Letter::J, 1}, {Letter::B, 4}, {Letter::J, 3}},
      {{Letter::B, 2}, {Letter::J, 1}, {Letter::B, 2}, {Letter::J, 1}, {Letter::B, 2}},
      {{Letter::J, 2}, {Letter::B, 3}, {Letter::J, 1}, {Letter::B, 1}},
      {{Letter::J, 1}, {Letter::B, 1}, {Letter::J, 1}, {Letter::B, 2}},
  };
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : words) {
      const Rational direct = mixed_moment(n, w);
      CHECK(direct == mixed_moment_factorized(n, w));
      bool all_even = true;
      for (const auto& [letter, e] : w)
        if (letter == Letter::B && e % 2) all_even = false;
      if (!all_even || n == 1) CHECK(direct == q(0));
      else CHECK(direct > q(0));
    }
  }
}

TEST_CASE("characteristic polynomials") {
  const RationalPoly golden({q(-1), q(-1), q(1)});
  const RationalPoly b2({q(-1), q(0), q(1)});
  for (auto method : {CharPolyMethod::Recurrence, CharPolyMethod::Closed, CharPolyMethod::CoeffFormula}) {
    CHECK(charpoly(2, q(1, 2), method).real_poly() == golden);
    CHECK(charpoly(1, q(7, 3), method).real_poly() == RationalPoly({q(-7, 3), q(1)}));
    CHECK(charpoly(2, q(0), method).real_poly() == b2);
  }
  for (int n = 1; n <= 8; ++n) {
    for (const Rational& a : kCots) {
      const RationalPoly r = charpoly(n, a, CharPolyMethod::Recurrence).real_poly();
      CHECK(r == charpoly(n, a, CharPolyMethod::Closed).real_poly());
      CHECK(r == charpoly(n, a, CharPolyMethod::CoeffFormula).real_poly());
      CHECK(r.degree() == n);
      CHECK(r.coefficient(static_cast<std::size_t>(n)) == q(1));
      const double alpha = static_cast<double>(oracle::alpha_of(oracle::to_ld(a)));
      for (double lambda : eigenvalues_float(n, alpha)) {
        long double v = 0, scale = 0;
        for (int d = n; d >= 0; --d) {
          const long double c = oracle::to_ld(r.coefficient(static_cast<std::size_t>(d)));
          v = v * lambda + c;
          scale = scale * std::fabs(lambda) + std::fabs(c);
        }
        // lambda carries one double rounding, so the residual scales with sum |c_k| |lambda|^k
        CHECK(std::fabs(v) < std::fmax(1e-6L, 1e-14L * scale));
      }
    }
  }
  CHECK(parse_charpoly_method("coeff_formula") == CharPolyMethod::CoeffFormula);
}

TEST_CASE("float eigenvalues") {
  const double pi = std::numbers::pi;
  auto e = eigenvalues_float(2, pi / 2);
  CHECK(e.size() == 2);
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(-1.0));
  e = eigenvalues_float(1, 0.3);
  CHECK(e[0] == doctest::Approx(1.0 / std::tan(0.3)));
  e = eigenvalues_float(3, pi / 2);
  CHECK(e[0] == doctest::Approx(std::sqrt(3.0)));
  CHECK(std::fabs(e[1]) < 1e-12);
  CHECK(e[2] == doctest::Approx(-std::sqrt(3.0)));
}

TEST_CASE("elementary symmetric functions of the eigenvalues") {
  for (const Rational& a : kCots) {
    CHECK(elementary_symmetric(3, a, 2) == q(-3));
    CHECK(elementary_symmetric(4, a, 4) == q(1));
    for (int n = 1; n <= 6; ++n) CHECK(elementary_symmetric(n, a, 1) == Rational(n) * a);
  }
  for (int n = 1; n <= 6; ++n) {
    for (const Rational& a : kCots) {
      const auto ev = eigenvalues_float(n, static_cast<double>(oracle::alpha_of(oracle::to_ld(a))));
      std::vector<long double> e(static_cast<std::size_t>(n) + 1, 0.0L);
      e[0] = 1;
      for (double l : ev)
        for (int k = n; k >= 1; --k) e[static_cast<std::size_t>(k)] += l * e[static_cast<std::size_t>(k - 1)];
      for (int k = 1; k <= n; ++k)
        CHECK(oracle::near(oracle::to_ld(elementary_symmetric(n, a, k)), e[static_cast<std::size_t>(k)], 1e-8L));
    }
  }
}
