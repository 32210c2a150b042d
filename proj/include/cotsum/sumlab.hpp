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

#ifndef COTSUM_SUMLAB_HPP
#define COTSUM_SUMLAB_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cotsum/numkernel.hpp"
#include "cotsum/partcalc.hpp"

namespace cotsum {

/// Direct double-precision sum of cot^m((alpha + k pi)/n), k = 0 .. n-1.
/// Throws SingularAlpha when alpha is a multiple of pi.
double S_float(int m, int n, double alpha);

/// arccot c in (0, pi).
double arccot(const Rational& c);

/// Tr((c J_n + B_n)^m).
Rational S_trace(int m, int n, const Rational& c);
/// S_trace for m = 0 .. max_m sharing the matrix powers.
std::vector<Rational> S_trace_upto(int max_m, int n, const Rational& c);

/// Closed form through arctangent numbers and derivative polynomials:
///   (-1)^(m/2) n [m even] + 1/(m-1)! sum_k n^k A_m^(k) P_(k-1)(c).
/// m = 0 gives n.
Rational S_closed(int m, int n, const Rational& c);

/// Sum over set partitions of {1..m} with odd blocks of
///   P_(|nu|-1)(c) (i n)^|nu| mu(0, nu), scaled by (-i)^m/(m-1)!,
/// evaluated over Q(i) with a realness check. m <= 13 for enumeration and
/// m <= 40 for the shape route.
Rational S_faadibruno(int m, int n, const Rational& c, PartitionRoute route = PartitionRoute::Enumeration);

/// Coefficients of S(m, n, alpha) as a polynomial in cot alpha.
struct CotPolynomial {
  int m = 0;
  int n = 0;
  std::vector<Rational> coeffs;  // index r, zero unless r = m (mod 2)

  Rational operator()(const Rational& c) const;
};

CotPolynomial p_coeffs(int m, int n);

/// p_(m,r) as a polynomial in n.
RationalPoly p_coeff_polynomial(int m, int r);

enum class HalfPiMethod { TangentForm, BernoulliForm };
HalfPiMethod parse_half_pi_method(std::string_view name);

/// S(m, n, pi/2). Odd m gives 0 without evaluating either formula.
Rational S_half_pi(int m, int n, HalfPiMethod method = HalfPiMethod::TangentForm);

/// S(m, n, pi/4) through the Euler zigzag numbers.
Rational S_quarter_pi(int m, int n);

/// The same sum over the angles (2k-1) pi / (4n), k = 1 .. n, in [0, pi/2):
/// plain for even m and with sign (-1)^(k-1) for odd m.
double byrne_smith_float(int m, int n);

/// sum_(k=1)^(n-1) cot^(2 m_half)(k pi / n) through Bernoulli numbers.
/// Throws BadN when n < 2.
Rational S0_bernoulli(int m_half, int n);

/// sum_(k=1)^(n-1) cot^m(k pi / n). Throws BadN when n < 2.
double S0_float(int m, int n);

/// lim S(m, n, alpha)/n^m = P_(m-1)(c)/(m-1)! for m > 1 and c for m = 1.
Rational asymptotic_limit(int m, const Rational& c);

/// pi^(2k) Tr(B_n^(2k)) / (2 n^(2k) (2^(2k) - 1)), trace computed exactly.
double zeta_approx(int k, int n);
/// Reference zeta(2k) for 1 <= k <= 5.
double zeta_reference(int k);

/// Tr(J_n B_n^(2m)) as p_(2m+1,1)(n) / (2m+1).
Rational jb_moment_from_coefficients(int n, int m);

/// The expression 1/(2m)! (A_(m+1)^(1) n + sum_(k=1)^(2m+1) T_(k-1)^(2) A_(2m+1)^(k) n^k)
/// read off the linear coefficient of the closed form. It does not reproduce
/// Tr(J_n B_n^(2m)); it is kept so the mismatch can be reported.
Rational jb_moment_naive_formula(int n, int m);

enum class SumMethod { Trace, Closed, FaaDiBruno, GenFun, Float };
SumMethod parse_sum_method(std::string_view name);
std::string_view sum_method_name(SumMethod method);
std::vector<SumMethod> all_sum_methods();

struct SumValue {
  SumMethod method;
  std::optional<Rational> exact;
  std::optional<double> approx;
  std::string error;  // set when the method is not applicable
};

struct SumReport {
  int m = 0;
  int n = 0;
  std::optional<Rational> c;
  std::optional<double> alpha;
  std::vector<SumValue> values;
  bool agree = true;
};

/// Evaluates S(m, n, arccot c) with every requested method and compares them.
/// Exact methods must match exactly; the float method must be within
/// 1e-8 relative of the exact value.
SumReport sum_report(int m, int n, const Rational& c, const std::vector<SumMethod>& methods);
/// Float-only report for an arbitrary angle.
SumReport sum_report_float(int m, int n, double alpha);

inline constexpr double kFloatRelTol = 1e-8;
inline constexpr double kS0RelTol = 1e-7;

bool close_relative(double value, double reference, double tol);

}  // namespace cotsum

#endif  // COTSUM_SUMLAB_HPP
