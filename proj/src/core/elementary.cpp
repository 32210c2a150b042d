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

#include "cotsum/numkernel/elementary.hpp"

namespace cotsum {

RationalSeries sin_series(int order) {
  RationalSeries s(order);
  for (int d = 1; d <= order; d += 2) {
    const Rational term(Integer(1), factorial(static_cast<unsigned>(d)));
    s[d] = ((d / 2) % 2 == 0) ? term : -term;
  }
  return s;
}

RationalSeries cos_series(int order) {
  RationalSeries s(order);
  for (int d = 0; d <= order; d += 2) {
    const Rational term(Integer(1), factorial(static_cast<unsigned>(d)));
    s[d] = ((d / 2) % 2 == 0) ? term : -term;
  }
  return s;
}

RationalSeries exp_minus_one_series(int order) {
  RationalSeries s(order);
  for (int d = 1; d <= order; ++d) s[d] = Rational(Integer(1), factorial(static_cast<unsigned>(d)));
  return s;
}

RationalSeries arctan_series(int order) {
  RationalSeries s(order);
  for (int d = 1; d <= order; d += 2) s[d] = Rational(((d / 2) % 2 == 0) ? 1 : -1, d);
  return s;
}

RationalSeries atanh_series(int order) {
  RationalSeries s(order);
  for (int d = 1; d <= order; d += 2) s[d] = Rational(Integer(1), Integer(d));
  return s;
}

RationalSeries tan_series(int order) { return series_div(sin_series(order), cos_series(order)); }

RationalSeries sec_series(int order) {
  return series_div(RationalSeries::constant(Rational(1), order), cos_series(order));
}

}  // namespace cotsum
