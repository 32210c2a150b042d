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

#include "cotsum/genfun.hpp"

#include <string>

namespace cotsum {

namespace {

GaussianPoly one_minus_iz() { return GaussianPoly(std::vector<GaussianRational>{1, GaussianRational(0, -1)}); }
GaussianPoly one_plus_iz() { return GaussianPoly(std::vector<GaussianRational>{1, GaussianRational::i()}); }

RationalPoly real_part_checked(const GaussianPoly& p, const char* context) {
  return p.map([context](const GaussianRational& c) { return c.real_value(context); });
}

RationalSeries one_plus_z2_series(int order) {
  return RationalSeries::from_polynomial(RationalPoly(std::vector<Rational>{1, 0, 1}), order);
}

void check_n(int n) { require(n >= 1, ErrorCode::BadDimension, "generating functions need n >= 1"); }

}  // namespace

SumSeries F_series(int n, const Rational& c, int order) {
  check_n(n);
  const GaussianRational cp(c, 1);
  const GaussianRational cm(c, -1);
  const GaussianPoly u = one_minus_iz();
  const GaussianPoly v = one_plus_iz();
  const auto un = static_cast<unsigned>(n);
  const GaussianPoly num = (u.pow(un - 1) * cp - v.pow(un - 1) * cm) * GaussianRational(n);
  const GaussianPoly den = u.pow(un) * cp - v.pow(un) * cm;
  require(den.coefficient(0) == GaussianRational(0, 2), ErrorCode::Internal, "F_series: denominator at 0 must be 2i");
  const GaussianSeries expanded = series_from_rational_function(num, den, order);
  SumSeries out{n, c, RationalSeries(order)};
  for (int m = 0; m <= order; ++m) out.coeffs[m] = expanded[m].real_value("F_series coefficient");
  return out;
}

QMethod parse_q_method(std::string_view name) {
  if (name == "recursion") return QMethod::Recursion;
  if (name == "continued_fraction" || name == "continued-fraction") return QMethod::ContinuedFraction;
  if (name == "tan_compose" || name == "tan-compose") return QMethod::TanCompose;
  raise(ErrorCode::InvalidArgument, "unknown Q method '" + std::string(name) + "'");
}

RationalSeries tan_multiple_angle_series(int n, int order) {
  check_n(n);
  return series_compose(tan_series(order), arctan_series(order) * Rational(n));
}

RationalSeries Q_continued_fraction(int n, int order, int depth) {
  check_n(n);
  require(depth >= 0, ErrorCode::InvalidArgument, "continued fraction depth must be >= 0");
  const RationalSeries one = RationalSeries::constant(1, order);
  const RationalSeries z2 = RationalSeries::variable(order).pow(2);
  RationalSeries tail = one;
  for (int k = depth; k >= 1; --k) {
    // beta_k = (n+k)(n-k) / ((2k-1)(2k+1))
    const Rational beta(Integer((n + k) * (n - k)), Integer((2 * k - 1) * (2 * k + 1)));
    tail = one - series_div(z2 * beta, tail);
  }
  return series_div(RationalSeries::constant(n, order), tail);
}

RationalSeries Q_series(int n, int order, QMethod method) {
  check_n(n);
  switch (method) {
    case QMethod::Recursion: {
      const RationalSeries one = RationalSeries::constant(1, order);
      const RationalSeries z2 = RationalSeries::variable(order).pow(2);
      RationalSeries q = one;
      for (int k = 2; k <= n; ++k) q = series_div(one + q, one - z2 * q);
      return q;
    }
    case QMethod::ContinuedFraction:
      return Q_continued_fraction(n, order, n);
    case QMethod::TanCompose:
      return tan_multiple_angle_series(n, order + 1).shifted_down();
  }
  raise(ErrorCode::InvalidArgument, "unknown Q method");
}

RationalSeries M_B_series(int n, int order) {
  check_n(n);
  const RationalSeries q = Q_series(n, order, QMethod::Recursion);
  const RationalSeries num = RationalSeries::constant(n, order) + q.shifted_up(2) * Rational(n);
  return series_div(num, one_plus_z2_series(order));
}

RationalSeries verify_functional_relation(int n, const Rational& x, int order) {
  check_n(n);
  require(order >= 2, ErrorCode::InvalidArgument, "verify_functional_relation: order must be >= 2");
  const RationalSeries left = F_series(n, x, order).coeffs;
  // One extra order so that g' still reaches z^order.
  const RationalSeries g = tan_multiple_angle_series(n, order + 1) * Rational(1, n);
  const RationalSeries dg = g.derivative();
  const Rational nx = x * Rational(n);
  const RationalSeries numerator = dg.shifted_up(1) * nx;
  const RationalSeries denominator = RationalSeries::constant(1, order) - g.truncated(order) * nx;
  const RationalSeries right = series_div(numerator, denominator) + M_B_series(n, order);
  return left - right;
}

RationalPoly reciprocal_even_poly(int n) {
  require(n >= 0, ErrorCode::InvalidArgument, "reciprocal polynomial degree must be >= 0");
  const auto un = static_cast<unsigned>(n);
  const GaussianPoly p = (one_minus_iz().pow(un) + one_plus_iz().pow(un)) * GaussianRational(Rational(1, 2));
  return real_part_checked(p, "reciprocal_even_poly");
}

RationalPoly reciprocal_charpoly(int n, const Rational& c) {
  require(n >= 0, ErrorCode::InvalidArgument, "reciprocal polynomial degree must be >= 0");
  const auto un = static_cast<unsigned>(n);
  const GaussianPoly p = one_minus_iz().pow(un) * GaussianRational(c, 1) - one_plus_iz().pow(un) * GaussianRational(c, -1);
  return real_part_checked(p * (GaussianRational(1) / GaussianRational(0, 2)), "reciprocal_charpoly");
}

RationalSeries tan_multiple_angle_from_reciprocal(int n, int order) {
  check_n(n);
  const RationalPoly num = reciprocal_even_poly(n + 1).derivative() * Rational(-1, n + 1);
  return series_from_rational_function(num, reciprocal_even_poly(n), order);
}

RationalSeries cot_shifted_from_reciprocal(int n, const Rational& c, int order) {
  check_n(n);
  const RationalPoly num = reciprocal_charpoly(n + 1, c).derivative() * Rational(1, n + 1);
  return series_from_rational_function(num, reciprocal_charpoly(n, c), order);
}

RationalSeries cot_shifted_from_tangent(int n, const Rational& c, int order) {
  const RationalSeries t = tan_multiple_angle_series(n, order);
  const RationalSeries cs = RationalSeries::constant(c, order);
  return series_div(cs + t, t * c - RationalSeries::constant(1, order));
}

RationalSeries cot_shifted_from_sum_series(int n, const Rational& c, int order) {
  const RationalSeries f = F_series(n, c, order + 1).coeffs;
  const RationalSeries inner = RationalSeries::constant(1, order + 1) - one_plus_z2_series(order + 1) * f * Rational(1, n);
  return inner.shifted_down();
}

}  // namespace cotsum
