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

#ifndef COTSUM_NUMKERNEL_POLYNOMIAL_HPP
#define COTSUM_NUMKERNEL_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cotsum {

/// Dense univariate polynomial over a coefficient ring K. Coefficients are
/// indexed by degree and trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and degree -1.
template <class K>
class Polynomial {
 public:
  using coefficient_type = K;

  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(K value) { return Polynomial(std::vector<K>{std::move(value)}); }

  static Polynomial monomial(K value, std::size_t degree) {
    std::vector<K> coeffs(degree + 1);
    coeffs[degree] = std::move(value);
    return Polynomial(std::move(coeffs));
  }

  /// The polynomial x.
  static Polynomial x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^d; zero beyond the degree.
  K coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : K{}; }
  std::span<const K> coefficients() const { return coeffs_; }

  K operator()(const K& x) const {
    K acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<K> out(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) out[d - 1] = coeffs_[d] * K(static_cast<long>(d));
    return Polynomial(std::move(out));
  }

  /// Multiplication by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<K> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(K(1));
    for (unsigned e = 0; e < exponent; ++e) result *= *this;
    return result;
  }

  template <class F>
  auto map(F&& f) const -> Polynomial<decltype(f(std::declval<const K&>()))> {
    using Out = decltype(f(std::declval<const K&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const K& c : coeffs_) out.push_back(f(c));
    return Polynomial<Out>(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<K> out(coeffs_);
    for (K& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<K> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == K{}) continue;
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  Polynomial& operator*=(const K& scalar) {
    for (K& c : coeffs_) c *= scalar;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
  friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == K{}) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

template <class K>
K poly_eval(const Polynomial<K>& p, const K& x) {
  return p(x);
}

template <class K>
Polynomial<K> poly_derivative(const Polynomial<K>& p) {
  return p.derivative();
}

}  // namespace cotsum

#endif  // COTSUM_NUMKERNEL_POLYNOMIAL_HPP
