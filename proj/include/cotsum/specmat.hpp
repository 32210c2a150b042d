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

#ifndef COTSUM_SPECMAT_HPP
#define COTSUM_SPECMAT_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "cotsum/numkernel.hpp"

namespace cotsum {

/// Dense n x n matrix over the Gaussian rationals.
class SquareMatrix {
 public:
  /// Zero matrix; throws BadDimension when n < 1.
  explicit SquareMatrix(int n);

  static SquareMatrix identity(int n);

  int dim() const { return n_; }
  const GaussianRational& operator()(int row, int col) const { return entries_[index(row, col)]; }
  GaussianRational& operator()(int row, int col) { return entries_[index(row, col)]; }

  GaussianRational trace() const;
  bool is_self_adjoint() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row * n_ + col); }

  int n_;
  std::vector<GaussianRational> entries_;
};

/// All-ones matrix J_n.
SquareMatrix build_J(int n);
/// i times the antisymmetric matrix with +1 above and -1 below the diagonal.
SquareMatrix build_B(int n);
/// a J_n + B_n: diagonal a, a+i above, a-i below.
SquareMatrix build_C(int n, const Rational& a);

/// Tr(M^m), which must be real. Throws NonRealValue otherwise.
Rational trace_power(const SquareMatrix& m, int exponent);

/// Tr(M^0) .. Tr(M^max_exponent), reusing intermediate powers.
std::vector<Rational> trace_powers(const SquareMatrix& m, int max_exponent);

enum class Letter { J, B };
using Word = std::vector<std::pair<Letter, int>>;

/// Tr of the word product in J_n and B_n, by direct matrix multiplication.
Rational mixed_moment(int n, const Word& word);

/// The same trace via the rank-one factorisation of J_n: the word is rotated
/// to start with J and evaluated as n^(sum of J exponents) times the product
/// of the state moments <xi, B^l xi> of its B-runs.
Rational mixed_moment_factorized(int n, const Word& word);

/// <xi, B_n^l xi> with xi the normalised all-ones vector.
Rational state_moment(int n, int l);

enum class CharPolyMethod { Recurrence, Closed, CoeffFormula };

CharPolyMethod parse_charpoly_method(std::string_view name);

/// det(lambda I - C_n(a)) with Gaussian coefficients; for real a every
/// coefficient is real and the polynomial is monic of degree n.
struct CharPoly {
  GaussianPoly poly;
  int n = 0;
  Rational a;

  /// Real coefficients; throws NonRealValue if any imaginary part survives.
  RationalPoly real_poly() const;
};

CharPoly charpoly(int n, const Rational& a, CharPolyMethod method);

/// cot((alpha + k pi)/n) for k = 0 .. n-1.
std::vector<double> eigenvalues_float(int n, double alpha);

/// e_k of the eigenvalues of C_n(a). Computed from the closed case split and
/// from the characteristic polynomial; throws Internal if the routes differ.
Rational elementary_symmetric(int n, const Rational& a, int k);

}  // namespace cotsum

#endif  // COTSUM_SPECMAT_HPP
