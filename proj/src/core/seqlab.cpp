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

#include "cotsum/seqlab.hpp"

#include <string>

namespace cotsum {

namespace {

void require_n(int max_n, int lowest, const char* what) {
  require(max_n >= lowest, ErrorCode::InvalidArgument, what);
}

// n! * c, which must be an integer.
Integer scaled_integer(const Rational& c, int n, const char* table) {
  const Rational v = c * Rational(factorial(static_cast<unsigned>(n)));
  if (!v.is_integer()) raise(ErrorCode::Internal, std::string(table) + ": non-integer entry " + v.str());
  return v.numerator();
}

Integer lookup(const std::vector<std::vector<Integer>>& rows, int n, int k) {
  if (n < 0 || k < 0 || n >= static_cast<int>(rows.size())) return 0;
  const auto& row = rows[static_cast<std::size_t>(n)];
  if (k >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

TangentTable::TangentTable(int max_n) : max_n_(max_n), rows_(static_cast<std::size_t>(max_n) + 1) {
  require_n(max_n, 0, "tangent table size must be nonnegative");
  for (int n = 0; n <= max_n; ++n) rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
  if (max_n == 0) return;
  const RationalSeries tan = tan_series(max_n);
  RationalSeries power = tan;
  for (int k = 1; k <= max_n; ++k) {
    for (int n = k; n <= max_n; ++n)
      rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = scaled_integer(power[n], n, "tangent table");
    power *= tan;
  }
}

Integer TangentTable::at(int n, int k) const { return k < 1 ? Integer(0) : lookup(rows_, n, k); }

ArctanTable::ArctanTable(int max_n)
    : max_n_(max_n),
      plain_(static_cast<std::size_t>(max_n) + 1),
      hyperbolic_(static_cast<std::size_t>(max_n) + 1) {
  require_n(max_n, 0, "arctangent table size must be nonnegative");
  for (int n = 0; n <= max_n; ++n) {
    plain_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    hyperbolic_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
  }
  if (max_n == 0) return;
  const RationalSeries atan = arctan_series(max_n);
  const RationalSeries atanh = atanh_series(max_n);
  RationalSeries p = atan;
  RationalSeries h = atanh;
  for (int k = 1; k <= max_n; ++k) {
    // p = atan^k / k!, h = atanh^k / k!
    for (int n = k; n <= max_n; ++n) {
      plain_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = scaled_integer(p[n], n, "arctangent table");
      hyperbolic_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          scaled_integer(h[n], n, "arctangent table");
    }
    const Rational step(1, k + 1);
    p = p * atan * step;
    h = h * atanh * step;
  }
}

Integer ArctanTable::at(int n, int k) const { return k < 1 ? Integer(0) : lookup(plain_, n, k); }
Integer ArctanTable::hyperbolic(int n, int k) const { return k < 1 ? Integer(0) : lookup(hyperbolic_, n, k); }

Stirling2Table::Stirling2Table(int max_n) : max_n_(max_n), rows_(static_cast<std::size_t>(max_n) + 1) {
  require_n(max_n, 0, "Stirling table size must be nonnegative");
  rows_[0] = {1};
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) row[static_cast<std::size_t>(k)] = k * lookup(rows_, n - 1, k) + lookup(rows_, n - 1, k - 1);
  }
}

Integer Stirling2Table::at(int n, int k) const { return lookup(rows_, n, k); }

TangentTable tangent_numbers(int max_n) {
  require_n(max_n, 1, "tangent_numbers: N must be >= 1");
  return TangentTable(max_n);
}

ArctanTable arctangent_numbers(int max_n) {
  require_n(max_n, 1, "arctangent_numbers: N must be >= 1");
  return ArctanTable(max_n);
}

Stirling2Table stirling2_table(int max_n) { return Stirling2Table(max_n); }

std::vector<Integer> euler_zigzag(int max_n) {
  require_n(max_n, 0, "euler_zigzag: N must be >= 0");
  const RationalSeries s = tan_series(max_n) + sec_series(max_n);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(scaled_integer(s[n], n, "euler_zigzag"));
  return out;
}

std::vector<Rational> bernoulli_numbers(int max_n) {
  require_n(max_n, 0, "bernoulli_numbers: N must be >= 0");
  // z cot z = cos z / (sin z / z) = sum_p (-1)^p 4^p B_2p / (2p)! z^2p
  const int order = max_n + (max_n % 2);
  const RationalSeries sinc = sin_series(order + 1).shifted_down();
  const RationalSeries zcot = series_div(cos_series(order), sinc);
  std::vector<Rational> out(static_cast<std::size_t>(max_n) + 1);
  for (int p = 0; 2 * p <= max_n; ++p) {
    Rational scale(factorial(static_cast<unsigned>(2 * p)));
    scale /= Rational(4).pow(static_cast<unsigned>(p));
    if (p % 2 == 1) scale = -scale;
    out[static_cast<std::size_t>(2 * p)] = zcot[2 * p] * scale;
  }
  if (max_n >= 1) out[1] = Rational(-1, 2);
  return out;
}

DerivativePolyMethod parse_derivative_poly_method(std::string_view name) {
  if (name == "recursion") return DerivativePolyMethod::Recursion;
  if (name == "explicit") return DerivativePolyMethod::Explicit;
  if (name == "tangent_expansion" || name == "tangent-expansion") return DerivativePolyMethod::TangentExpansion;
  raise(ErrorCode::InvalidArgument, "unknown derivative polynomial method '" + std::string(name) + "'");
}

namespace {

DerivativePolySet by_recursion(int max_n) {
  DerivativePolySet set;
  const RationalPoly one_plus_x2(std::vector<Rational>{1, 0, 1});
  set.polys.push_back(RationalPoly::x());
  for (int n = 1; n <= max_n; ++n) set.polys.push_back(one_plus_x2 * set.polys.back().derivative());
  return set;
}

// (-2i)^n (z - i) sum_k k!/2^k {n k} (iz - 1)^k, exact over Q(i). The formula
// covers n >= 1; P_0 = x is seeded directly.
DerivativePolySet by_explicit_formula(int max_n) {
  const Stirling2Table stirling(max_n);
  const GaussianRational i = GaussianRational::i();
  const GaussianPoly z_minus_i(std::vector<GaussianRational>{-i, 1});
  const GaussianPoly iz_minus_1(std::vector<GaussianRational>{-1, i});
  DerivativePolySet set;
  set.polys.push_back(RationalPoly::x());
  for (int n = 1; n <= max_n; ++n) {
    GaussianPoly sum;
    GaussianPoly power = GaussianPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
      const Rational weight = Rational(Integer(factorial(static_cast<unsigned>(k)) * stirling.at(n, k))) /
                              Rational(2).pow(static_cast<unsigned>(k));
      if (!weight.is_zero()) sum += power * GaussianRational(weight);
      power *= iz_minus_1;
    }
    const GaussianPoly p = z_minus_i * sum * GaussianRational(0, -2).pow(static_cast<unsigned>(n));
    set.polys.push_back(p.map([](const GaussianRational& c) { return c.real_value("derivative polynomial"); }));
  }
  return set;
}

// P_n(x) = T_n + sum_{k=1}^{n+1} T_{n+1}^(k)/k x^k
DerivativePolySet by_tangent_expansion(int max_n) {
  const TangentTable table(max_n + 1);
  DerivativePolySet set;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 2);
    coeffs[0] = Rational(table.number(n));
    for (int k = 1; k <= n + 1; ++k) coeffs[static_cast<std::size_t>(k)] = Rational(table.at(n + 1, k)) / Rational(k);
    set.polys.emplace_back(std::move(coeffs));
  }
  return set;
}

}  // namespace

DerivativePolySet derivative_polys(int max_n, DerivativePolyMethod method) {
  require_n(max_n, 0, "derivative_polys: N must be >= 0");
  switch (method) {
    case DerivativePolyMethod::Recursion: return by_recursion(max_n);
    case DerivativePolyMethod::Explicit: return by_explicit_formula(max_n);
    case DerivativePolyMethod::TangentExpansion: return by_tangent_expansion(max_n);
  }
  raise(ErrorCode::InvalidArgument, "unknown derivative polynomial method");
}

std::vector<RationalPoly> tangent_polys(int max_n) {
  require_n(max_n, 1, "tangent_polys: N must be >= 1");
  const TangentTable table(max_n);
  std::vector<RationalPoly> out(1);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = Rational(table.at(n, k));
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Rational geometric_poly_value(const Stirling2Table& stirling, int n, const Rational& x) {
  Rational acc;
  for (int k = 0; k <= n; ++k)
    acc += Rational(Integer(stirling.at(n, k) * factorial(static_cast<unsigned>(k)))) * x.pow(static_cast<unsigned>(k));
  return acc;
}

// -(-i)^n sum_k k!/2^k {n k} (i-1)^(k+1)
GaussianRational euler_from_stirling(const Stirling2Table& stirling, int n) {
  require(n >= 1 && n <= stirling.max_n(), ErrorCode::InvalidArgument, "euler_from_stirling: n out of range");
  const GaussianRational i_minus_1(-1, 1);
  GaussianRational sum;
  GaussianRational power = i_minus_1;
  for (int k = 0; k <= n; ++k) {
    const Rational weight =
        Rational(Integer(factorial(static_cast<unsigned>(k)) * stirling.at(n, k))) / Rational(2).pow(static_cast<unsigned>(k));
    sum += power * GaussianRational(weight);
    power *= i_minus_1;
  }
  return -(GaussianRational(0, -1).pow(static_cast<unsigned>(n)) * sum);
}

}  // namespace cotsum
