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

#ifndef COTSUM_SEQLAB_HPP
#define COTSUM_SEQLAB_HPP

#include <string_view>
#include <vector>

#include "cotsum/numkernel.hpp"

namespace cotsum {

/// Higher tangent numbers T_n^(k) = n! [z^n] tan^k z for 1 <= k <= n <= N.
class TangentTable {
 public:
  explicit TangentTable(int max_n);

  int max_n() const { return max_n_; }
  /// T_n^(k); zero outside 1 <= k <= n <= N.
  Integer at(int n, int k) const;
  /// The tangent number T_n = T_n^(1) (zero for even n, including n = 0).
  Integer number(int n) const { return n == 0 ? Integer(0) : at(n, 1); }

 private:
  int max_n_;
  std::vector<std::vector<Integer>> rows_;
};

/// Arctangent numbers A_n^(k) = n! [z^n] arctan^k(z)/k! and their
/// hyperbolic counterparts from atanh, for 1 <= k <= n <= N.
class ArctanTable {
 public:
  explicit ArctanTable(int max_n);

  int max_n() const { return max_n_; }
  Integer at(int n, int k) const;
  Integer hyperbolic(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<Integer>> plain_;
  std::vector<std::vector<Integer>> hyperbolic_;
};

/// Stirling numbers of the second kind {n k} for 0 <= k <= n <= N.
class Stirling2Table {
 public:
  explicit Stirling2Table(int max_n);

  int max_n() const { return max_n_; }
  Integer at(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<Integer>> rows_;
};

enum class DerivativePolyMethod { Recursion, Explicit, TangentExpansion };

DerivativePolyMethod parse_derivative_poly_method(std::string_view name);

/// P_0 .. P_N with d^n/dz^n tan z = P_n(tan z).
struct DerivativePolySet {
  std::vector<RationalPoly> polys;

  const RationalPoly& operator[](int n) const { return polys.at(static_cast<std::size_t>(n)); }
  int max_n() const { return static_cast<int>(polys.size()) - 1; }
};

TangentTable tangent_numbers(int max_n);
ArctanTable arctangent_numbers(int max_n);
Stirling2Table stirling2_table(int max_n);

/// Euler zigzag numbers E_0 .. E_N from tan z + sec z.
std::vector<Integer> euler_zigzag(int max_n);

/// B_0 .. B_N. Even-index values come from the Laurent expansion of cot z;
/// B_1 is -1/2 and the remaining odd-index values are zero.
std::vector<Rational> bernoulli_numbers(int max_n);

DerivativePolySet derivative_polys(int max_n, DerivativePolyMethod method);

/// T_0(x) .. T_N(x) with T_n(x) = sum_k T_n^(k) x^k (T_0 is zero).
std::vector<RationalPoly> tangent_polys(int max_n);

/// Geometric polynomial w_n(x) = sum_k {n k} k! x^k evaluated exactly.
Rational geometric_poly_value(const Stirling2Table& stirling, int n, const Rational& x);

/// E_n from the Stirling-number sum over the Gaussian rationals; the returned
/// value is complex so callers can check that the imaginary part vanishes.
/// Valid for n >= 1.
GaussianRational euler_from_stirling(const Stirling2Table& stirling, int n);

}  // namespace cotsum

#endif  // COTSUM_SEQLAB_HPP
