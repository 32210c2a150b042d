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

#ifndef COTSUM_NUMKERNEL_SERIES_HPP
#define COTSUM_NUMKERNEL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cotsum/numkernel/error.hpp"
#include "cotsum/numkernel/polynomial.hpp"

namespace cotsum {

/// Formal power series truncated after z^order. Binary operations on series
/// of different orders produce a result of the smaller order.
template <class K>
class Series {
 public:
  using coefficient_type = K;

  explicit Series(int order = 0) : coeffs_(static_cast<std::size_t>(checked(order)) + 1) {}

  Series(std::vector<K> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(checked(order)) + 1);
  }

  static Series from_polynomial(const Polynomial<K>& p, int order) {
    Series s(order);
    for (std::size_t d = 0; d < s.coeffs_.size(); ++d) s.coeffs_[d] = p.coefficient(d);
    return s;
  }

  static Series constant(K value, int order) {
    Series s(order);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  /// The series z (zero when order is 0).
  static Series variable(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = K(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const K& operator[](std::size_t d) const { return coeffs_.at(d); }
  K& operator[](std::size_t d) { return coeffs_.at(d); }
  std::span<const K> coefficients() const { return coeffs_; }

  Series truncated(int order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  /// Formal derivative; the result has order one less.
  Series derivative() const {
    Series s(std::max(order() - 1, 0));
    for (std::size_t d = 1; d < coeffs_.size(); ++d) s.coeffs_[d - 1] = coeffs_[d] * K(static_cast<long>(d));
    return s;
  }

  /// Multiplication by z^k at the same order.
  Series shifted_up(std::size_t k) const {
    Series s(order());
    for (std::size_t d = 0; d + k < coeffs_.size(); ++d) s.coeffs_[d + k] = coeffs_[d];
    return s;
  }

  /// Division by z; requires a zero constant term and drops the order by one.
  Series shifted_down() const {
    require(coeffs_[0] == K{}, ErrorCode::InvalidArgument, "series has a nonzero constant term");
    Series s(std::max(order() - 1, 0));
    for (std::size_t d = 1; d < coeffs_.size(); ++d) s.coeffs_[d - 1] = coeffs_[d];
    return s;
  }

  Series pow(unsigned exponent) const {
    Series result = constant(K(1), order());
    for (unsigned e = 0; e < exponent; ++e) result *= *this;
    return result;
  }

  Series operator-() const {
    Series s(*this);
    for (K& c : s.coeffs_) c = -c;
    return s;
  }

  Series& operator+=(const Series& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
    return *this;
  }

  Series& operator-=(const Series& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
    return *this;
  }

  Series& operator*=(const Series& other) {
    const std::size_t len = std::min(coeffs_.size(), other.coeffs_.size());
    std::vector<K> out(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (coeffs_[i] == K{}) continue;
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
  }

  Series& operator*=(const K& scalar) {
    for (K& c : coeffs_) c *= scalar;
    return *this;
  }

  Series& operator/=(const Series& other);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const K& s) { return a *= s; }
  friend Series operator*(const K& s, Series a) { return a *= s; }
  friend Series operator/(Series a, const Series& b) { return a /= b; }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const K& c) { return c == K{}; });
  }

 private:
  static int checked(int order) {
    require(order >= 0, ErrorCode::InvalidArgument, "series order must be nonnegative");
    return order;
  }

  std::vector<K> coeffs_;
};

/// Returns c with b*c = a modulo z^(order+1). Throws ZeroConstantTerm when
/// b has no constant term.
template <class K>
Series<K> series_div(const Series<K>& a, const Series<K>& b) {
  require(!(b[0] == K{}), ErrorCode::ZeroConstantTerm, "series_div: divisor has zero constant term");
  const int order = std::min(a.order(), b.order());
  Series<K> c(order);
  const K inv = K(1) / b[0];
  for (int k = 0; k <= order; ++k) {
    K acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * c[k - j];
    c[k] = acc * inv;
  }
  return c;
}

template <class K>
Series<K>& Series<K>::operator/=(const Series<K>& other) {
  *this = series_div(*this, other);
  return *this;
}

/// outer(inner(z)) truncated to the common order. Throws NonzeroInnerConstant
/// unless inner has zero constant term.
template <class K>
Series<K> series_compose(const Series<K>& outer, const Series<K>& inner) {
  require(inner[0] == K{}, ErrorCode::NonzeroInnerConstant, "series_compose: inner series has a constant term");
  const int order = std::min(outer.order(), inner.order());
  const Series<K> in = inner.truncated(order);
  Series<K> acc = Series<K>::constant(outer[order], order);
  for (int k = order - 1; k >= 0; --k) {
    acc *= in;
    acc[0] += outer[k];
  }
  return acc;
}

/// Taylor expansion of num/den at the origin through z^order.
template <class K>
Series<K> series_from_rational_function(const Polynomial<K>& num, const Polynomial<K>& den, int order) {
  require(!(den.coefficient(0) == K{}), ErrorCode::PoleAtOrigin,
          "series_from_rational_function: denominator vanishes at 0");
  Series<K> c(order);
  const K inv = K(1) / den.coefficient(0);
  const int deg = den.degree();
  for (int k = 0; k <= order; ++k) {
    K acc = num.coefficient(static_cast<std::size_t>(k));
    for (int j = 1; j <= std::min(k, deg); ++j) acc -= den.coefficient(static_cast<std::size_t>(j)) * c[k - j];
    c[k] = acc * inv;
  }
  return c;
}

}  // namespace cotsum

#endif  // COTSUM_NUMKERNEL_SERIES_HPP
