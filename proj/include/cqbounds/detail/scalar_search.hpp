// Copyright 2026 The cqbounds Authors
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

#ifndef CQBOUNDS_DETAIL_SCALAR_SEARCH_HPP_
#define CQBOUNDS_DETAIL_SCALAR_SEARCH_HPP_

#include <cmath>
#include <utility>

namespace cqbounds::detail {

struct ScalarOptimum {
  double arg;
  double value;
};

// Golden-section maximization of a unimodal f on [lo, hi]; the bracket is
// narrowed to width < tol and the endpoints are always compared.
template <class F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  ScalarOptimum best = fc >= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
  const double flo = f(lo), fhi = f(hi);
  if (flo > best.value) best = {lo, flo};
  if (fhi > best.value) best = {hi, fhi};
  return best;
}

template <class F>
ScalarOptimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
  auto r = golden_section_maximize([&](double x) { return -f(x); }, lo, hi, tol);
  return {r.arg, -r.value};
}

}  // namespace cqbounds::detail

#endif  // CQBOUNDS_DETAIL_SCALAR_SEARCH_HPP_
