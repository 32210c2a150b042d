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

#ifndef COTSUM_NUMKERNEL_ELEMENTARY_HPP
#define COTSUM_NUMKERNEL_ELEMENTARY_HPP

#include "cotsum/numkernel/rational.hpp"
#include "cotsum/numkernel/series.hpp"

namespace cotsum {

using RationalSeries = Series<Rational>;

// Maclaurin series of elementary functions through z^order.
RationalSeries sin_series(int order);
RationalSeries cos_series(int order);
RationalSeries exp_minus_one_series(int order);
RationalSeries arctan_series(int order);
RationalSeries atanh_series(int order);
/// sin/cos by long division.
RationalSeries tan_series(int order);
/// 1/cos by long division.
RationalSeries sec_series(int order);

}  // namespace cotsum

#endif  // COTSUM_NUMKERNEL_ELEMENTARY_HPP
