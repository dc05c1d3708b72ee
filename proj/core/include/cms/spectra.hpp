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

#ifndef CMS_SPECTRA_HPP_
#define CMS_SPECTRA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cms/construction.hpp"
#include "cms/matrix.hpp"

namespace cms {

/// A singular value counts toward the rank iff sigma_i > tol * sigma_1.
inline constexpr double kDefaultRankTolerance = 1e-9;

struct SpectralProfile {
  /// Descending, non-negative; one entry per row of the square.
  std::vector<double> sigmas;
  /// Descending exact squares of `sigmas`, when known in closed form or
  /// recovered exactly from a numeric run.
  std::optional<std::vector<BigInt>> sigma_sq_exact;
  std::size_t rank = 0;
  /// L = sum sigma_i^4. Always exact: it equals ||M M^T||_F^2.
  BigInt l_index;
  /// R = L - sigma_1^4, exact whenever sigma_1^2 is.
  std::optional<BigInt> r_index;
  double r_approx = 0.0;

  double sigma_total() const;
};

/// M M^T, exactly.
IntSquareMatrix gram(const IntSquareMatrix& m);

/// Singular values by cyclic Jacobi rotations, descending.
///
/// The rotations are the classical two-sided Jacobi rotations of the Gram
/// matrix, applied one-sidedly to the columns of M (Hestenes), so the Gram
/// matrix is never rounded to floating point. Zero singular values then
/// come out near machine epsilon times sigma_1 instead of its square root.
std::vector<double> jacobi_singular_values(const IntSquareMatrix& m);

std::size_t numeric_rank(std::span<const double> sigmas,
                         double rank_tol = kDefaultRankTolerance);

/// Numeric spectrum of any square. sigma_sq_exact is filled in when every
/// sigma_i^2 is within 1e-6 of an integer and the recovered values satisfy
/// the exact identities sum sigma^2 = ||M||_F^2 and sum sigma^4 = L. For a
/// non-negative square whose rows and columns all sum to S, sigma_1 = S is
/// used exactly.
SpectralProfile singular_values_numeric(
    const IntSquareMatrix& m, double rank_tol = kDefaultRankTolerance);

/// Closed-form spectrum of construct_frierson(spec): sigma_1 = n|k + sum of
/// members|, and each couple (a, b) contributes
/// sigma^2 = 3^(2l-1) (a+b)^2 and 3^(2l-1) (a-b)^2. The remaining values
/// are zero.
SpectralProfile closed_form_svs(const FriersonSpec& spec,
                                double rank_tol = kDefaultRankTolerance);

/// Closed-form spectrum of the order-4 most-perfect square compounded with
/// itself `level` times (order 4^level): sigma_1 = n(n^2+1)/2 and
/// sigma/sqrt(5) = 2^(6 level - 3), 2^(6 level - 5), ..., 2l terms.
SpectralProfile closed_form_svs_mppd(std::size_t level,
                                     double rank_tol = kDefaultRankTolerance);

struct FourthPowerIndices {
  BigInt l_index;
  BigInt r_index;
};

/// L = sum (sigma_i^2)^2 and R = L - (sigma_1^2)^2 for a descending list.
FourthPowerIndices fourth_power_indices(std::span<const BigInt> sigma_sq);

/// Monic cubic x^3 + c[0] x^2 + c[1] x + c[2].
using MonicCubic = std::array<BigInt, 3>;

/// det(x I - M) for a 3x3 matrix.
MonicCubic characteristic_polynomial_3x3(const IntSquareMatrix& m);

struct CharacteristicChecks {
  MonicCubic eigen_polynomial;       // of M_3
  std::array<double, 3> eigenvalues; // real roots, descending
  MonicCubic luoshu_polynomial;      // (x - 15)(x^2 + 24): complex pair
  IntSquareMatrix gram_matrix;       // M_3 M_3^T
  MonicCubic gram_polynomial;
  std::array<BigInt, 3> gram_roots;  // sigma^2, descending
  /// M_3 M_3^T with 71 instead of 101 in the last diagonal cell, and its
  /// polynomial X^3 - 255X^2 + 8556X - 29340, which has none of the
  /// roots above.
  IntSquareMatrix transcribed_gram;
  MonicCubic transcribed_gram_polynomial;
};

/// Exact checks on M_3: x^3 - 15x^2 - 24x + 360 = (x - 15)(x^2 - 24) and
/// the Gram polynomial factoring as (X - 225)(X - 48)(X - 12). Throws
/// Errc::verification_failure when either factorization does not hold.
CharacteristicChecks m3_characteristic_checks();

}  // namespace cms

#endif  // CMS_SPECTRA_HPP_
