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

#ifndef COTSUM_GENFUN_HPP
#define COTSUM_GENFUN_HPP

#include <string_view>

#include "cotsum/numkernel.hpp"

namespace cotsum {

/// Ordinary generating function of S(m, n, alpha) in z, with c = cot alpha.
struct SumSeries {
  int n = 0;
  Rational c;
  RationalSeries coeffs;
};

/// Expands n[(c+i)(1-iz)^(n-1) - (c-i)(1+iz)^(n-1)] / [(c+i)(1-iz)^n - (c-i)(1+iz)^n]
/// over Q(i) and checks that every coefficient is real.
SumSeries F_series(int n, const Rational& c, int order);

enum class QMethod { Recursion, ContinuedFraction, TanCompose };

QMethod parse_q_method(std::string_view name);

/// Q_n(z) = tan(n arctan z) / z, whose z^(2m) coefficient is Tr(J_n B_n^(2m)).
RationalSeries Q_series(int n, int order, QMethod method);

/// Q_n from its terminating continued fraction evaluated bottom-up from the
/// given depth; every depth >= n - 1 gives the same series.
RationalSeries Q_continued_fraction(int n, int order, int depth);

/// tan(n arctan z) via series composition.
RationalSeries tan_multiple_angle_series(int n, int order);

/// Tr((I - z B_n)^-1) = (n + n z^2 Q_n(z)) / (1 + z^2).
RationalSeries M_B_series(int n, int order);

/// Difference between the trace generating function of x J_n + B_n and its
/// reconstruction n x z g'(z) / (1 - n x g(z)) + M_B(z) with
/// g(z) = z Q_n(z) / n = tan(n arctan z) / n. The result is zero for a correct
/// build.
RationalSeries verify_functional_relation(int n, const Rational& x, int order);

/// p~_n(z) = ((1 - iz)^n + (1 + iz)^n) / 2 as a real polynomial.
RationalPoly reciprocal_even_poly(int n);

/// chi~_n(c; z) = ((c + i)(1 - iz)^n - (c - i)(1 + iz)^n) / (2i), real polynomial.
RationalPoly reciprocal_charpoly(int n, const Rational& c);

/// -(1/(n+1)) p~'_(n+1)(z) / p~_n(z) expanded to the given order.
RationalSeries tan_multiple_angle_from_reciprocal(int n, int order);

/// cot(n arctan z - alpha) from (1/(n+1)) chi~'_(n+1) / chi~_n.
RationalSeries cot_shifted_from_reciprocal(int n, const Rational& c, int order);

/// cot(n arctan z - alpha) = (c + T)/(c T - 1) with T = tan(n arctan z).
RationalSeries cot_shifted_from_tangent(int n, const Rational& c, int order);

/// cot(n arctan z - alpha) recovered from F_n: (1 - (1 + z^2) F_n / n) / z.
RationalSeries cot_shifted_from_sum_series(int n, const Rational& c, int order);

}  // namespace cotsum

#endif  // COTSUM_GENFUN_HPP
