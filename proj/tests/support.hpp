#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The boundiv Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Test-only helpers: random PMF generators and the exhaustive prefix-code
// oracle. Nothing here calls into the code under test.

#include "boundiv/pmf.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

namespace boundiv::testing {

/// Exponential weights normalised onto the simplex. With `zero_rate` > 0 some
/// letters are forced to probability 0 (at least one letter stays positive).
inline Pmf RandomPmf(std::mt19937_64 &rng, std::size_t n, double zero_rate = 0.0)
{
  std::exponential_distribution<double> weight(1.0);
  std::bernoulli_distribution           drop(zero_rate);
  std::uniform_int_distribution<std::size_t> keeper(0, n - 1);

  std::vector<double> w(n);
  for (auto &v : w)
  {
    v = drop(rng) ? 0.0 : weight(rng);
  }
  double sum = 0.0;
  for (double v : w)
  {
    sum += v;
  }
  if (sum == 0.0)
  {
    w[keeper(rng)] = 1.0;
    sum            = 1.0;
  }
  for (auto &v : w)
  {
    v /= sum;
  }
  return Pmf(std::move(w));
}

inline std::size_t RandomSize(std::mt19937_64 &rng, std::size_t lo, std::size_t hi)
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Minimum of sum q_i l_i over every integer length vector with
/// 1 <= l_i <= n-1 and sum 2^-l_i <= 1. Exhaustive; keep n small.
inline double BruteForceOptimalLength(Pmf const &q)
{
  std::size_t const n    = q.size();
  std::size_t const maxl = n - 1;
  std::vector<std::size_t> lengths(n, 1);
  double best = std::numeric_limits<double>::infinity();
  while (true)
  {
    double kraft = 0.0;
    double avg   = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      kraft += std::ldexp(1.0, -static_cast<int>(lengths[i]));
      avg += q[i] * static_cast<double>(lengths[i]);
    }
    if (kraft <= 1.0 && avg < best)
    {
      best = avg;
    }
    std::size_t i = 0;
    while (i < n && lengths[i] == maxl)
    {
      lengths[i++] = 1;
    }
    if (i == n)
    {
      break;
    }
    ++lengths[i];
  }
  return best;
}

/// Reference values computed once with 30-digit arithmetic (mpmath) by
/// direct summation of the defining sums.
namespace frozen {
inline constexpr double kEntropy_07_03         = 0.881290899230692618;
inline constexpr double kKl_095_005            = 3.823134762099226944;  // 0.9 log2 19
inline constexpr double kJs_095_005            = 0.713603042884043871;
inline constexpr double kKl_085_015_vs_07_03   = 0.088091731313825006;
inline constexpr double kLog2_1_3              = 0.378511623253729813;
inline constexpr double kLog2_1_15             = 0.201633861169650524;
inline constexpr double kLog2_1_09             = 0.124328135002201663;
inline constexpr double kLog2_1_5              = 0.584962500721156181;
inline constexpr double kLog2_1_9              = 0.925999418556223146;
inline constexpr double kDkl_1e_10             = 33.219280942085497785;
inline constexpr double kBenefitMisled         = 0.502779275976962806;
inline constexpr double kBenefitHalfInformed   = 0.679657038061042094;
}  // namespace frozen

}  // namespace boundiv::testing
