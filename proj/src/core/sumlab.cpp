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

#include "cotsum/sumlab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cotsum/genfun.hpp"
#include "cotsum/seqlab.hpp"
#include "cotsum/specmat.hpp"

namespace cotsum {

namespace {

void check_mn(int m, int n) {
  require(m >= 0, ErrorCode::InvalidArgument, "exponent m must be >= 0");
  require(n >= 1, ErrorCode::BadDimension, "n must be >= 1");
}

Rational even_sign(int m) { return (m / 2) % 2 == 0 ? Rational(1) : Rational(-1); }

Rational int_pow(const Rational& base, int e) { return base.pow(static_cast<unsigned>(e)); }

Rational inv_factorial(int k) { return Rational(Integer(1), factorial(static_cast<unsigned>(k))); }

// Product of (p-1)! over the parts, which is mu(0, nu) for odd parts.
Integer odd_shape_content(const std::vector<int>& parts) {
  Integer out = 1;
  for (int p : parts) out *= factorial(static_cast<unsigned>(p - 1));
  return out;
}

RationalPoly p_coeff_polynomial_with(int m, int r, const ArctanTable& arctan, const TangentTable& tangent) {
  if (m == 0) return r == 0 ? RationalPoly::x() : RationalPoly();
  if (r < 0 || r > m || (m - r) % 2 != 0) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
  if (r == 0) {
    coeffs[1] = even_sign(m);
    for (int k = 2; k <= m; k += 2)
      coeffs[static_cast<std::size_t>(k)] += Rational(Integer(arctan.at(m, k) * tangent.number(k - 1))) * inv_factorial(m - 1);
    return RationalPoly(std::move(coeffs));
  }
  const Rational scale = inv_factorial(m - 1) * Rational(1, r);
  for (int k = r; k <= m; ++k)
    coeffs[static_cast<std::size_t>(k)] = Rational(Integer(arctan.at(m, k) * tangent.at(k, r))) * scale;
  return RationalPoly(std::move(coeffs));
}

// cot^m(numerator / denominator) in extended precision; the float sums cancel
// heavily for odd m.
long double cot_power(long double numerator, int denominator, int m) {
  return std::pow(1.0L / std::tan(numerator / denominator), m);
}

}  // namespace

bool close_relative(double value, double reference, double tol) {
  return std::abs(value - reference) <= tol * std::max(1.0, std::abs(reference));
}

double S_float(int m, int n, double alpha) {
  check_mn(m, n);
  require(std::abs(std::sin(alpha)) >= 1e-12, ErrorCode::SingularAlpha, "alpha is a multiple of pi");
  long double total = 0.0L;
  for (int k = 0; k < n; ++k) total += cot_power(alpha + k * std::numbers::pi_v<long double>, n, m);
  return static_cast<double>(total);
}

double arccot(const Rational& c) { return std::atan2(1.0, c.to_double()); }

Rational S_trace(int m, int n, const Rational& c) {
  check_mn(m, n);
  return trace_power(build_C(n, c), m);
}

std::vector<Rational> S_trace_upto(int max_m, int n, const Rational& c) {
  check_mn(max_m, n);
  return trace_powers(build_C(n, c), max_m);
}

Rational S_closed(int m, int n, const Rational& c) {
  check_mn(m, n);
  if (m == 0) return n;
  const ArctanTable arctan(m);
  const DerivativePolySet P = derivative_polys(m - 1, DerivativePolyMethod::Recursion);
  Rational sum;
  for (int k = 1; k <= m; ++k) {
    const Integer a = arctan.at(m, k);
    if (a == 0) continue;
    sum += Rational(a) * int_pow(Rational(n), k) * P[k - 1](c);
  }
  Rational out = sum * inv_factorial(m - 1);
  if (m % 2 == 0) out += even_sign(m) * Rational(n);
  return out;
}

Rational S_faadibruno(int m, int n, const Rational& c, PartitionRoute route) {
  check_mn(m, n);
  if (m == 0) return n;
  // Aggregate mu(0, nu) by the number of blocks first.
  std::vector<Integer> mu_by_size(static_cast<std::size_t>(m) + 1, 0);
  if (route == PartitionRoute::Enumeration) {
    for (const SetPartition& nu : odd_partitions(m)) mu_by_size[nu.size()] += mobius_bottom(nu);
  } else {
    for (const PartitionShape& shape : odd_shapes(m))
      mu_by_size[shape.parts.size()] += shape.count * odd_shape_content(shape.parts);
  }
  const DerivativePolySet P = derivative_polys(m - 1, DerivativePolyMethod::Recursion);
  const GaussianRational in(Rational(0), Rational(n));
  GaussianRational sum;
  for (int k = 1; k <= m; ++k) {
    if (mu_by_size[static_cast<std::size_t>(k)] == 0) continue;
    sum += GaussianRational(P[k - 1](c) * Rational(mu_by_size[static_cast<std::size_t>(k)])) * in.pow(static_cast<unsigned>(k));
  }
  const GaussianRational prefactor = GaussianRational(Rational(0), Rational(-1)).pow(static_cast<unsigned>(m)) *
                                     GaussianRational(inv_factorial(m - 1));
  Rational out = (prefactor * sum).real_value("S_faadibruno");
  if (m % 2 == 0) out += even_sign(m) * Rational(n);
  return out;
}

Rational CotPolynomial::operator()(const Rational& c) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * c + *it;
  return acc;
}

CotPolynomial p_coeffs(int m, int n) {
  check_mn(m, n);
  CotPolynomial out{m, n, std::vector<Rational>(static_cast<std::size_t>(m) + 1)};
  if (m == 0) {
    out.coeffs[0] = n;
    return out;
  }
  const ArctanTable arctan(m);
  const TangentTable tangent(m);
  for (int r = m; r >= 1; r -= 2)
    out.coeffs[static_cast<std::size_t>(r)] = p_coeff_polynomial_with(m, r, arctan, tangent)(Rational(n));
  out.coeffs[0] = S_half_pi(m, n, HalfPiMethod::TangentForm);
  return out;
}

RationalPoly p_coeff_polynomial(int m, int r) {
  require(m >= 0, ErrorCode::InvalidArgument, "exponent m must be >= 0");
  const int size = std::max(m, 1);
  return p_coeff_polynomial_with(m, r, ArctanTable(size), TangentTable(size));
}

HalfPiMethod parse_half_pi_method(std::string_view name) {
  if (name == "tangent_form" || name == "tangent") return HalfPiMethod::TangentForm;
  if (name == "bernoulli_form" || name == "bernoulli") return HalfPiMethod::BernoulliForm;
  raise(ErrorCode::InvalidArgument, "unknown half-pi method '" + std::string(name) + "'");
}

Rational S_half_pi(int m, int n, HalfPiMethod method) {
  check_mn(m, n);
  if (m == 0) return n;
  if (m % 2 != 0) return 0;
  const Rational sign = even_sign(m);
  Rational out = sign * Rational(n);
  if (method == HalfPiMethod::TangentForm) {
    const ArctanTable arctan(m);
    const TangentTable tangent(m);
    Rational sum;
    for (int k = 2; k <= m; k += 2)
      sum += Rational(Integer(arctan.at(m, k) * tangent.number(k - 1))) * int_pow(Rational(n), k);
    return out + sum * inv_factorial(m - 1);
  }
  const std::vector<Rational> bernoulli = bernoulli_numbers(m);
  for (const PartitionShape& shape : odd_shapes(m)) {
    const int blocks = static_cast<int>(shape.parts.size());
    if (blocks % 2 != 0) continue;
    const Rational content(Integer(shape.count * odd_shape_content(shape.parts)));
    const Rational one_minus = Rational(1) - int_pow(Rational(2), blocks);
    out += sign * content * int_pow(Rational(2 * n), blocks) * one_minus * bernoulli[static_cast<std::size_t>(blocks)] *
           inv_factorial(m - 1) * Rational(1, blocks);
  }
  return out;
}

Rational S_quarter_pi(int m, int n) {
  check_mn(m, n);
  if (m == 0) return n;
  const ArctanTable arctan(m);
  const std::vector<Integer> euler = euler_zigzag(m);
  Rational sum;
  for (int k = 1; k <= m; ++k)
    sum += Rational(Integer(arctan.at(m, k) * euler[static_cast<std::size_t>(k - 1)])) * int_pow(Rational(2 * n), k);
  Rational out = sum * inv_factorial(m - 1) * Rational(1, 2);
  if (m % 2 == 0) out += even_sign(m) * Rational(n);
  return out;
}

double byrne_smith_float(int m, int n) {
  check_mn(m, n);
  long double total = 0.0L;
  for (int k = 1; k <= n; ++k) {
    const long double term = cot_power((2 * k - 1) * std::numbers::pi_v<long double>, 4 * n, m);
    total += (m % 2 == 1 && k % 2 == 0) ? -term : term;
  }
  return static_cast<double>(total);
}

Rational S0_bernoulli(int m_half, int n) {
  require(m_half >= 1, ErrorCode::InvalidArgument, "S0_bernoulli: m must be >= 1");
  require(n >= 2, ErrorCode::BadN, "S0_bernoulli: n must be >= 2");
  const int m2 = 2 * m_half;
  const ArctanTable arctan(m2);
  const std::vector<Rational> bernoulli = bernoulli_numbers(m2);
  Rational sum;
  for (int k = 1; k <= m_half; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    sum += sign * Rational(arctan.at(m2, 2 * k)) * int_pow(Rational(4), k) * bernoulli[static_cast<std::size_t>(2 * k)] *
           Rational(1, 2 * k) * (int_pow(Rational(n), 2 * k) - Rational(1));
  }
  const Rational lead = (m_half % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(n - 1);
  return lead - sum * inv_factorial(m2 - 1);
}

double S0_float(int m, int n) {
  require(m >= 0, ErrorCode::InvalidArgument, "exponent m must be >= 0");
  require(n >= 2, ErrorCode::BadN, "S0_float: n must be >= 2");
  long double total = 0.0L;
  for (int k = 1; k < n; ++k) total += cot_power(k * std::numbers::pi_v<long double>, n, m);
  return static_cast<double>(total);
}

Rational asymptotic_limit(int m, const Rational& c) {
  require(m >= 1, ErrorCode::InvalidArgument, "asymptotic_limit: m must be >= 1");
  if (m == 1) return c;
  return derivative_polys(m - 1, DerivativePolyMethod::Recursion)[m - 1](c) * inv_factorial(m - 1);
}

double zeta_approx(int k, int n) {
  require(k >= 1, ErrorCode::BadK, "zeta_approx: k must be >= 1");
  require(n >= 2, ErrorCode::BadN, "zeta_approx: n must be >= 2");
  const Rational trace = trace_power(build_B(n), 2 * k);
  const Rational ratio = trace / (Rational(2) * int_pow(Rational(n), 2 * k) * (int_pow(Rational(4), k) - Rational(1)));
  return std::pow(std::numbers::pi, 2 * k) * ratio.to_double();
}

double zeta_reference(int k) {
  static constexpr double kValues[] = {1.644934066848226, 1.082323233711138, 1.017343061984449, 1.004077356197944,
                                       1.000994575127818};
  require(k >= 1 && k <= 5, ErrorCode::BadK, "zeta_reference: k must be in 1..5");
  return kValues[k - 1];
}

Rational jb_moment_from_coefficients(int n, int m) {
  check_mn(m, n);
  return p_coeff_polynomial(2 * m + 1, 1)(Rational(n)) * Rational(1, 2 * m + 1);
}

Rational jb_moment_naive_formula(int n, int m) {
  check_mn(m, n);
  const ArctanTable arctan(2 * m + 1);
  const TangentTable tangent(std::max(2 * m, 1));
  Rational sum = Rational(arctan.at(m + 1, 1)) * Rational(n);
  for (int k = 1; k <= 2 * m + 1; ++k)
    sum += Rational(Integer(tangent.at(k - 1, 2) * arctan.at(2 * m + 1, k))) * int_pow(Rational(n), k);
  return sum * inv_factorial(2 * m);
}

SumMethod parse_sum_method(std::string_view name) {
  if (name == "trace") return SumMethod::Trace;
  if (name == "closed") return SumMethod::Closed;
  if (name == "faa" || name == "faadibruno") return SumMethod::FaaDiBruno;
  if (name == "genfun") return SumMethod::GenFun;
  if (name == "float") return SumMethod::Float;
  raise(ErrorCode::InvalidArgument, "unknown sum method '" + std::string(name) + "'");
}

std::string_view sum_method_name(SumMethod method) {
  switch (method) {
    case SumMethod::Trace: return "trace";
    case SumMethod::Closed: return "closed";
    case SumMethod::FaaDiBruno: return "faa";
    case SumMethod::GenFun: return "genfun";
    case SumMethod::Float: return "float";
  }
  return "unknown";
}

std::vector<SumMethod> all_sum_methods() {
  return {SumMethod::Trace, SumMethod::Closed, SumMethod::FaaDiBruno, SumMethod::GenFun, SumMethod::Float};
}

SumReport sum_report(int m, int n, const Rational& c, const std::vector<SumMethod>& methods) {
  check_mn(m, n);
  SumReport report;
  report.m = m;
  report.n = n;
  report.c = c;
  report.alpha = arccot(c);
  for (SumMethod method : methods) {
    SumValue value{method, std::nullopt, std::nullopt, {}};
    try {
      switch (method) {
        case SumMethod::Trace: value.exact = S_trace(m, n, c); break;
        case SumMethod::Closed: value.exact = S_closed(m, n, c); break;
        case SumMethod::FaaDiBruno:
          value.exact = S_faadibruno(
              m, n, c, m <= kMaxEnumeratedPartitionSize ? PartitionRoute::Enumeration : PartitionRoute::Shapes);
          break;
        case SumMethod::GenFun: value.exact = F_series(n, c, m).coeffs[static_cast<std::size_t>(m)]; break;
        case SumMethod::Float: value.approx = S_float(m, n, *report.alpha); break;
      }
      if (value.exact) value.approx = value.exact->to_double();
    } catch (const Error& e) {
      value.error = e.what();
    }
    report.values.push_back(std::move(value));
  }
  const SumValue* reference = nullptr;
  for (const SumValue& v : report.values)
    if (v.exact) {
      reference = &v;
      break;
    }
  for (const SumValue& v : report.values) {
    if (!v.error.empty()) continue;
    if (reference == nullptr) break;
    if (v.exact && !(*v.exact == *reference->exact)) report.agree = false;
    if (!v.exact && v.approx && !close_relative(*v.approx, reference->exact->to_double(), kFloatRelTol))
      report.agree = false;
  }
  return report;
}

SumReport sum_report_float(int m, int n, double alpha) {
  SumReport report;
  report.m = m;
  report.n = n;
  report.alpha = alpha;
  SumValue value{SumMethod::Float, std::nullopt, S_float(m, n, alpha), {}};
  report.values.push_back(std::move(value));
  return report;
}

}  // namespace cotsum
