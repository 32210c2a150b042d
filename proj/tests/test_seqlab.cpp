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

#include "cotsum/seqlab.hpp"
#include "oracle.hpp"

using namespace cotsum;
using oracle::q;

namespace {

RationalPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoly(v);
}

}  // namespace

TEST_CASE("tangent numbers") {
  const TangentTable t = tangent_numbers(20);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(3, 1) == 2);
  CHECK(t.at(5, 1) == 16);
  CHECK(t.at(2, 2) == 2);
  CHECK(t.at(3, 3) == 6);
  CHECK(t.at(3, 4) == 0);
  CHECK(t.number(0) == 0);
  const auto e = oracle::zigzag(20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(t.number(n) == (n % 2 ? e[static_cast<std::size_t>(n)] : Integer(0)));
    CHECK(t.at(n, n) == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("arctangent numbers") {
  const ArctanTable a = arctangent_numbers(20);
  CHECK(a.at(1, 1) == 1);
  CHECK(a.at(2, 2) == 1);
  CHECK(a.at(3, 1) == -2);
  CHECK(a.at(5, 1) == 24);
  CHECK(a.at(5, 3) == -20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(a.at(n, n) == 1);
    // (n-1)! [z^n] arctan z up to sign
    if (n % 2) {
      const Integer f = factorial(static_cast<unsigned>(n - 1));
      CHECK(a.at(n, 1) == ((n / 2) % 2 ? -f : f));
    }
    for (int k = 1; k <= n; ++k) {
      if ((n - k) % 2) {
        CHECK(a.at(n, k) == 0);
        CHECK(a.hyperbolic(n, k) == 0);
      } else {
        const Integer h = a.hyperbolic(n, k);
        CHECK(a.at(n, k) == (((n - k) / 2) % 2 ? -h : h));
        CHECK(h >= 0);
      }
    }
  }
}

TEST_CASE("zigzag, bernoulli and stirling against independent recurrences") {
  const auto e = euler_zigzag(25);
  CHECK(e[0] == 1);
  CHECK(e[1] == 1);
  CHECK(e[3] == 2);
  CHECK(e[4] == 5);
  CHECK(e == oracle::zigzag(25));

  const auto b = bernoulli_numbers(24);
  CHECK(b[0] == q(1));
  CHECK(b[2] == q(1, 6));
  CHECK(b[4] == q(-1, 30));
  const auto ref = oracle::bernoulli(24);
  for (int k = 2; k <= 24; k += 2) CHECK(b[static_cast<std::size_t>(k)] == ref[static_cast<std::size_t>(k)]);

  const Stirling2Table s = stirling2_table(20);
  CHECK(s.at(4, 2) == 7);
  CHECK(s.at(5, 3) == 25);
  for (int n = 1; n <= 20; ++n) {
    CHECK(s.at(n, n) == 1);
    CHECK(s.at(n, 1) == 1);
    for (int k = 1; k <= n; ++k) CHECK(s.at(n, k) == oracle::stirling2(n, k));
  }
}

TEST_CASE("derivative polynomials") {
  for (auto method : {DerivativePolyMethod::Recursion, DerivativePolyMethod::Explicit, DerivativePolyMethod::TangentExpansion}) {
    const DerivativePolySet p = derivative_polys(15, method);
    CHECK(p[0] == poly({0, 1}));
    CHECK(p[1] == poly({1, 0, 1}));
    CHECK(p[2] == poly({0, 2, 0, 2}));
    CHECK(p[3] == poly({2, 0, 8, 0, 6}));
  }
  const DerivativePolySet r = derivative_polys(15, DerivativePolyMethod::Recursion);
  const DerivativePolySet x = derivative_polys(15, DerivativePolyMethod::Explicit);
  const DerivativePolySet t = derivative_polys(15, DerivativePolyMethod::TangentExpansion);
  const TangentTable tn = tangent_numbers(16);
  for (int n = 0; n <= 15; ++n) {
    CHECK(r[n] == x[n]);
    CHECK(r[n] == t[n]);
    if (n >= 1) CHECK(r[n](q(0)) == Rational(tn.number(n)));
  }
  CHECK(parse_derivative_poly_method("tangent_expansion") == DerivativePolyMethod::TangentExpansion);
  CHECK_THROWS_AS(parse_derivative_poly_method("nope"), Error);
}

TEST_CASE("tangent polynomials and their relations") {
  const auto T = tangent_polys(16);
  CHECK(T[1] == poly({0, 1}));
  CHECK(T[2] == poly({0, 0, 2}));
  CHECK(T[3] == poly({0, 2, 0, 6}));
  const DerivativePolySet P = derivative_polys(16, DerivativePolyMethod::Recursion);
  const RationalPoly x = RationalPoly::x();
  const RationalPoly onex2 = poly({1, 0, 1});
  for (int n = 0; n <= 15; ++n) {
    if (n >= 1) CHECK(x * P[n] == onex2 * T[static_cast<std::size_t>(n)]);
    CHECK(x * P[n].derivative() == T[static_cast<std::size_t>(n + 1)]);
  }
}

TEST_CASE("euler numbers from derivative polynomials and from stirling sums") {
  const auto e = euler_zigzag(15);
  const DerivativePolySet P = derivative_polys(15, DerivativePolyMethod::Recursion);
  const Stirling2Table s = stirling2_table(15);
  for (int n = 0; n <= 15; ++n) {
    CHECK(P[n](q(1)) == Rational(Integer(e[static_cast<std::size_t>(n)] << n)));
    if (n >= 1) {
      const GaussianRational g = euler_from_stirling(s, n);
      CHECK(g.is_real());
      CHECK(g.re() == Rational(e[static_cast<std::size_t>(n)]));
    }
  }
}

TEST_CASE("monomials from arctangent numbers and derivative polynomials") {
  const ArctanTable a = arctangent_numbers(14);
  const DerivativePolySet P = derivative_polys(14, DerivativePolyMethod::Recursion);
  for (int m = 1; m <= 14; ++m) {
    RationalPoly acc;
    for (int k = 1; k <= m; ++k) acc += P[k - 1] * Rational(a.at(m, k));
    acc *= Rational(1) / Rational(factorial(static_cast<unsigned>(m - 1)));
    if (m % 2 == 0) acc += RationalPoly::constant(Rational((m / 2) % 2 ? -1 : 1));
    CHECK(acc == RationalPoly::monomial(Rational(1), static_cast<std::size_t>(m)));
  }
}

TEST_CASE("geometric polynomials at -1/2") {
  const Stirling2Table s = stirling2_table(13);
  const auto b = oracle::bernoulli(14);
  for (int m = 1; m <= 13; ++m) {
    // direct sum of Stirling numbers, compared with the library routine
    Rational direct;
    for (int k = 0; k <= m; ++k)
      direct += Rational(Integer(oracle::stirling2(m, k) * factorial(static_cast<unsigned>(k)))) * q(-1, 2).pow(static_cast<unsigned>(k));
    CHECK(geometric_poly_value(s, m, q(-1, 2)) == direct);
    if (m % 2 == 0) {
      CHECK(direct == q(0));
    } else {
      const Rational rhs = Rational(2) * (Rational(1) - Rational(Integer(Integer(1) << (m + 1)))) * b[static_cast<std::size_t>(m + 1)] / Rational(m + 1);
      CHECK(direct == rhs);
    }
  }
}
