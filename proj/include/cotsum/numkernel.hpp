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

#ifndef COTSUM_NUMKERNEL_HPP
#define COTSUM_NUMKERNEL_HPP

#include "cotsum/numkernel/elementary.hpp"
#include "cotsum/numkernel/error.hpp"
#include "cotsum/numkernel/gaussian.hpp"
#include "cotsum/numkernel/polynomial.hpp"
#include "cotsum/numkernel/rational.hpp"
#include "cotsum/numkernel/series.hpp"

namespace cotsum {

using RationalPoly = Polynomial<Rational>;
using GaussianPoly = Polynomial<GaussianRational>;
using GaussianSeries = Series<GaussianRational>;

}  // namespace cotsum

#endif  // COTSUM_NUMKERNEL_HPP
