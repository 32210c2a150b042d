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


#ifndef COTSUM_TESTS_ORACLE_HPP
#define COTSUM_TESTS_ORACLE_HPP

// Reference computations for the tests. Nothing here calls into the library
// except for the Rational type itself.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "cotsum/numkernel/rational.hpp"

namespace oracle {

using cotsum::Integer;
using cotsum::Rational;

inline Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

/// arccot c in (0, pi).
inline long double alpha_of(long double c) { return std::atan2(1.0L, c); }

/// sum_(k=0)^(n-1) cot^m((alpha + k pi)/n), directly.
inline long double cot_sum(int m, int n, long double alpha) {
  long double s = 0;
  for (int k = 0; k < n; ++k) {
    const long double t = (alpha + k * std::numbers::pi_v<long double>) / n;
    s += std::pow(std::cos(t) / std::sin(t), m);
  }
  return s;
}

/// sum_(k=1)^(n-1) cot^m(k pi / n).
inline long double cot_sum_zero(int m, int n) {
  long double s = 0;
  for (int k = 1; k < n; ++k) {
    const long double t = k * std::numbers::pi_v<long double> / n;
    s += std::pow(std::cos(t) / std::sin(t), m);
  }
  return s;
}

inline bool near(long double value, long double ref, long double tol) {
  return std::fabs(value - ref) <= tol * std::fmax(1.0L, std::fabs(ref));
}

inline long double to_ld(const Rational& r) {
  return static_cast<long double>(r.numerator().get_d()) / static_cast<long double>(r.denominator().get_d());
}

/// Bell numbers by the Bell triangle.
inline std::vector<Integer> bell(int max_n) {
  std::vector<Integer> out{1};
  std::vector<Integer> row{1};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Integer> next{row.back()};
    for (const Integer& x : row) next.push_back(next.back() + x);
    out.push_back(row.back());
    row = std::move(next);
  }
  return out;
}

/// Euler zigzag numbers by the Seidel boustrophedon.
inline std::vector<Integer> zigzag(int max_n) {
  std::vector<Integer> out{1};
  std::vector<Integer> row{1};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n) + 1);
    next[0] = 0;
    for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[static_cast<std::size_t>(n - k)];
    out.push_back(next[static_cast<std::size_t>(n)]);
    row = std::move(next);
  }
  return out;
}

/// Bernoulli numbers from sum_(k=0)^n binom(n+1, k) B_k = 0, B_1 = -1/2.
inline std::vector<Rational> bernoulli(int max_n) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n <= max_n; ++n) {
    Rational acc;
    for (int k = 0; k < n; ++k) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k));
      acc += Rational(c) * b[static_cast<std::size_t>(k)];
    }
    b.push_back(-acc / Rational(n + 1));
  }
  return b;
}

/// Stirling numbers of the second kind by inclusion-exclusion.
inline Integer stirling2(int n, int k) {
  Integer acc = 0;
  for (int j = 0; j <= k; ++j) {
    Integer c, p;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(n));
    if (j % 2) acc -= c * p;
    else acc += c * p;
  }
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Integer(acc / f);
}

/// L_0 = 2, L_1 = 1, L_m = L_(m-1) + L_(m-2).
inline std::vector<Integer> lucas(int max_m) {
  std::vector<Integer> l{2, 1};
  while (static_cast<int>(l.size()) <= max_m) l.push_back(l[l.size() - 1] + l[l.size() - 2]);
  l.resize(static_cast<std::size_t>(max_m) + 1);
  return l;
}

}  // namespace oracle

#endif  // COTSUM_TESTS_ORACLE_HPP
