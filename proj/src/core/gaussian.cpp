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

#include "cotsum/numkernel/gaussian.hpp"

#include <ostream>

namespace cotsum {

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

const Rational& GaussianRational::real_value(const char* context) const {
  if (!is_real()) raise(ErrorCode::NonRealValue, std::string(context) + ": nonzero imaginary part " + im_.str());
  return re_;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  if (im_.is_zero() && other.im_.is_zero()) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// Multiply by the conjugate and divide by the (rational) norm.
GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  const Rational n = other.norm();
  require(!n.is_zero(), ErrorCode::DivisionByZero, "gaussian division by zero");
  *this *= other.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + im_.abs().str() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << value.str(); }

}  // namespace cotsum
