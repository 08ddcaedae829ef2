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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace boundiv {

/// Probability mass function over a finite alphabet of n >= 1 letters.
///
/// Construction validates: every entry in [0, 1] (negative entries are
/// rejected without tolerance), and the entries sum to 1 within kSumTolerance.
class Pmf
{
public:
  static constexpr double kSumTolerance = 1e-9;

  explicit Pmf(std::vector<double> probs);
  Pmf(std::initializer_list<double> probs);

  /// Uniform PMF over n letters.
  static Pmf Uniform(std::size_t n);
  /// All mass on letter `index` (0-based).
  static Pmf Degenerate(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  std::span<double const> probs() const noexcept { return probs_; }

  auto begin() const noexcept { return probs_.begin(); }
  auto end() const noexcept { return probs_.end(); }

  friend bool operator==(Pmf const &, Pmf const &) = default;

private:
  std::vector<double> probs_;
};

/// Throws ValidationError unless both PMFs have the same number of letters.
void RequireSameAlphabet(Pmf const &a, Pmf const &b);

}  // namespace boundiv
