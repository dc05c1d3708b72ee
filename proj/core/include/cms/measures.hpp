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

#ifndef CMS_MEASURES_HPP_
#define CMS_MEASURES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cms/matrix.hpp"

namespace cms {

struct MeasureReport {
  std::vector<double> normalized;  // sigma_i / sum sigma; sums to 1
  double entropy = 0.0;            // H, nats
  double compression = 0.0;        // C, percent
};

/// H = -sum p_i ln p_i over p_i = sigma_i / sum sigma (0 ln 0 = 0) and
/// C = (1 - H / ln n) * 100. For n == 1 the single value is fully
/// compressed and C = 100. Throws Errc::undefined_measure when no sigma is
/// positive.
MeasureReport entropy_compression(std::span<const double> sigmas,
                                  std::size_t n);

/// Subtracts 1 from every entry, moving a 1..n^2 square onto 0..n^2-1.
IntSquareMatrix zero_based_shift(const IntSquareMatrix& m);

}  // namespace cms

#endif  // CMS_MEASURES_HPP_
