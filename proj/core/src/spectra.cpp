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

#include "cms/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "cms/error.hpp"

namespace cms {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRotationThreshold = 1e-15;
constexpr double kExactRecoveryTolerance = 1e-6;

double to_double(const BigInt& v) { return v.convert_to<double>(); }

BigInt pow_int(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

BigInt frobenius_sq(const IntSquareMatrix& m) {
  BigInt s = 0;
  for (const BigInt& v : m.entries()) s += v * v;
  return s;
}

// Exact sigma_1 for non-negative squares with all row and column sums equal:
// ||M||_2 <= sqrt(||M||_1 ||M||_inf) = S and the all-ones vector attains S.
std::optional<BigInt> doubly_stochastic_scale(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> rows(n, BigInt(0)), cols(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) return std::nullopt;
      rows[i] += m(i, j);
      cols[j] += m(i, j);
    }
  const BigInt& s = rows.front();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i] != s || cols[i] != s) return std::nullopt;
  return s;
}

std::optional<BigInt> nearest_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) > kExactRecoveryTolerance) return std::nullopt;
  return BigInt(static_cast<long long>(r));
}

void fill_indices(SpectralProfile& p, const BigInt& sigma1_sq) {
  p.r_index = p.l_index - sigma1_sq * sigma1_sq;
  p.r_approx = to_double(*p.r_index);
}

SpectralProfile profile_from_exact(std::vector<BigInt> sq, double rank_tol) {
  std::sort(sq.begin(), sq.end(), std::greater<>());
  SpectralProfile p;
  p.sigmas.reserve(sq.size());
  for (const BigInt& v : sq) p.sigmas.push_back(std::sqrt(to_double(v)));
  p.rank = numeric_rank(p.sigmas, rank_tol);
  const auto idx = fourth_power_indices(sq);
  p.l_index = idx.l_index;
  p.r_index = idx.r_index;
  p.r_approx = to_double(idx.r_index);
  p.sigma_sq_exact = std::move(sq);
  return p;
}

}  // namespace

double SpectralProfile::sigma_total() const {
  return std::accumulate(sigmas.begin(), sigmas.end(), 0.0);
}

IntSquareMatrix gram(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  IntSquareMatrix g(n);
  BigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = m.row(i);
    for (std::size_t j = i; j < n; ++j) {
      const auto rj = m.row(j);
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += ri[k] * rj[k];
      g(i, j) = acc;
      g(j, i) = acc;
    }
  }
  return g;
}

std::vector<double> jacobi_singular_values(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  // Rows of M are rotated, which orthogonalizes M M^T.
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = to_double(m(i, j));
      frob += a[i][j] * a[i][j];
    }
  const double floor = frob * 1e-30;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(a[p], a[p]);
        const double beta = dot(a[q], a[q]);
        const double gamma = dot(a[p], a[q]);
        if (std::abs(gamma) <= floor ||
            std::abs(gamma) <= kRotationThreshold * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double x = a[p][k];
          const double y = a[q][k];
          a[p][k] = c * x - s * y;
          a[q][k] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigmas(n);
  for (std::size_t i = 0; i < n; ++i) sigmas[i] = std::sqrt(dot(a[i], a[i]));
  std::sort(sigmas.begin(), sigmas.end(), std::greater<>());
  return sigmas;
}

std::size_t numeric_rank(std::span<const double> sigmas, double rank_tol) {
  if (sigmas.empty()) return 0;
  const double top = *std::max_element(sigmas.begin(), sigmas.end());
  if (top <= 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(
      sigmas.begin(), sigmas.end(),
      [&](double s) { return s > rank_tol * top; }));
}

SpectralProfile singular_values_numeric(const IntSquareMatrix& m,
                                        double rank_tol) {
  SpectralProfile p;
  p.sigmas = jacobi_singular_values(m);
  p.rank = numeric_rank(p.sigmas, rank_tol);
  p.l_index = frobenius_sq(gram(m));

  std::optional<BigInt> sigma1_sq;
  if (auto s = doubly_stochastic_scale(m)) {
    sigma1_sq = (*s) * (*s);
  } else {
    sigma1_sq = nearest_integer(p.sigmas.front() * p.sigmas.front());
  }

  // Try to recover every sigma^2 exactly and validate against identities.
  std::vector<BigInt> sq;
  sq.reserve(p.sigmas.size());
  bool recovered = sigma1_sq.has_value();
  if (recovered) sq.push_back(*sigma1_sq);
  for (std::size_t i = 1; recovered && i < p.sigmas.size(); ++i) {
    auto v = nearest_integer(p.sigmas[i] * p.sigmas[i]);
    if (!v) recovered = false;
    else sq.push_back(*v);
  }
  if (recovered) {
    const BigInt sum = std::accumulate(sq.begin(), sq.end(), BigInt(0));
    recovered = sum == frobenius_sq(m) &&
                fourth_power_indices(sq).l_index == p.l_index &&
                std::is_sorted(sq.begin(), sq.end(), std::greater<>());
  }
  if (recovered) p.sigma_sq_exact = std::move(sq);

  if (sigma1_sq) {
    fill_indices(p, *sigma1_sq);
  } else {
    const double s1 = p.sigmas.front();
    p.r_approx = to_double(p.l_index) - s1 * s1 * s1 * s1;
  }
  return p;
}

SpectralProfile closed_form_svs(const FriersonSpec& spec, double rank_tol) {
  const std::size_t n = spec.order();
  const std::size_t level = spec.level();
  BigInt total = spec.k;
  for (const auto& c : spec.couples) total += c.a + c.b;
  const BigInt sigma1 = BigInt(n) * abs(total);
  const BigInt scale = pow_int(3, static_cast<unsigned>(2 * level - 1));

  std::vector<BigInt> sq;
  sq.reserve(n);
  sq.push_back(sigma1 * sigma1);
  for (const auto& c : spec.couples) {
    const BigInt plus = BigInt(c.a) + c.b;
    const BigInt minus = BigInt(c.a) - c.b;
    sq.push_back(scale * plus * plus);
    sq.push_back(scale * minus * minus);
  }
  sq.resize(n, BigInt(0));
  return profile_from_exact(std::move(sq), rank_tol);
}

SpectralProfile closed_form_svs_mppd(std::size_t level, double rank_tol) {
  if (level == 0) throw Error(Errc::invalid_level, "level must be >= 1");
  if (level > 8) throw Error(Errc::invalid_level, "level must be <= 8");
  const BigInt n = pow_int(4, static_cast<unsigned>(level));
  const BigInt sigma1 = n * (n * n + 1) / 2;
  std::vector<BigInt> sq;
  sq.push_back(sigma1 * sigma1);
  for (std::size_t i = 0; i < 2 * level; ++i) {
    const BigInt t = pow_int(2, static_cast<unsigned>(6 * level - 3 - 2 * i));
    sq.push_back(5 * t * t);
  }
  sq.resize(n.convert_to<std::size_t>(), BigInt(0));
  return profile_from_exact(std::move(sq), rank_tol);
}

FourthPowerIndices fourth_power_indices(std::span<const BigInt> sigma_sq) {
  FourthPowerIndices out;
  for (const BigInt& s : sigma_sq) out.l_index += s * s;
  out.r_index = sigma_sq.empty()
                    ? out.l_index
                    : out.l_index - sigma_sq.front() * sigma_sq.front();
  return out;
}

MonicCubic characteristic_polynomial_3x3(const IntSquareMatrix& m) {
  if (m.order() != 3) throw Error(Errc::shape, "expected a 3x3 matrix");
  const BigInt trace = m(0, 0) + m(1, 1) + m(2, 2);
  const BigInt minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) +
                        m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                        m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const BigInt det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                     m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                     m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return {-trace, minors, -det};
}

CharacteristicChecks m3_characteristic_checks() {
  const auto m3 = catalog("m3");
  const auto eigen = characteristic_polynomial_3x3(m3);
  // (x - 15)(x^2 - 24)
  const MonicCubic eigen_expected = {-15, -24, 360};
  if (eigen != eigen_expected)
    throw Error(Errc::verification_failure,
                "M_3 characteristic polynomial is not (x-15)(x^2-24)");

  const auto luoshu = characteristic_polynomial_3x3(catalog("luoshu"));
  if (luoshu != MonicCubic{-15, 24, -360})
    throw Error(Errc::verification_failure,
                "Luoshu characteristic polynomial is not (x-15)(x^2+24)");

  const auto g = gram(m3);
  const auto gram_poly = characteristic_polynomial_3x3(g);
  const std::array<BigInt, 3> roots = {225, 48, 12};
  for (const BigInt& x : roots) {
    if (x * x * x + gram_poly[0] * x * x + gram_poly[1] * x + gram_poly[2] != 0)
      throw Error(Errc::verification_failure,
                  "Gram polynomial of M_3 does not vanish at " + x.str());
  }

  const auto transcribed = IntSquareMatrix::from_rows(
      {{101, 71, 53}, {71, 83, 71}, {53, 71, 71}});

  const double r = std::sqrt(24.0);
  return CharacteristicChecks{
      .eigen_polynomial = eigen,
      .eigenvalues = {15.0, r, -r},
      .luoshu_polynomial = luoshu,
      .gram_matrix = g,
      .gram_polynomial = gram_poly,
      .gram_roots = roots,
      .transcribed_gram = transcribed,
      .transcribed_gram_polynomial = characteristic_polynomial_3x3(transcribed),
  };
}

}  // namespace cms
