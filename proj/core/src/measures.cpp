// Copyright 2026 The CMS Authors
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

#include "cms/measures.hpp"

#include <cmath>
#include <numeric>

#include "cms/error.hpp"

namespace cms {

MeasureReport entropy_compression(std::span<const double> sigmas,
                                  std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_order, "order must be >= 1");
  double total = 0.0;
  for (double s : sigmas) {
    if (s < 0.0 || !std::isfinite(s))
      throw Error(Errc::undefined_measure,
                  "singular values must be finite and non-negative");
    total += s;
  }
  if (!(total > 0.0))
    throw Error(Errc::undefined_measure,
                "entropy is undefined for an all-zero spectrum");

  MeasureReport r;
  r.normalized.reserve(sigmas.size());
  for (double s : sigmas) {
    const double p = s / total;
    r.normalized.push_back(p);
    if (p > 0.0) r.entropy -= p * std::log(p);
  }
  r.compression = n == 1 ? 100.0 : (1.0 - r.entropy / std::log(double(n))) * 100.0;
  return r;
}

IntSquareMatrix zero_based_shift(const IntSquareMatrix& m) {
  IntSquareMatrix out = m;
  out.add_scalar(-1);
  return out;
}

}  // namespace cms
