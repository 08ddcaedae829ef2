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

#include "boundiv/pmf.hpp"

#include "boundiv/errors.hpp"

#include <cmath>
#include <string>

namespace boundiv {

Pmf::Pmf(std::vector<double> probs)
  : probs_(std::move(probs))
{
  if (probs_.empty())
  {
    throw ValidationError("PMF must have at least one letter");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i)
  {
    double const v = probs_[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
    {
      throw ValidationError("PMF entry " + std::to_string(i) + " is outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
  {
    throw ValidationError("PMF entries sum to " + std::to_string(sum) + ", expected 1");
  }
}

Pmf::Pmf(std::initializer_list<double> probs)
  : Pmf(std::vector<double>(probs))
{}

Pmf Pmf::Uniform(std::size_t n)
{
  if (n == 0)
  {
    throw ValidationError("uniform PMF needs n >= 1");
  }
  return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::Degenerate(std::size_t n, std::size_t index)
{
  if (index >= n)
  {
    throw ValidationError("degenerate PMF index out of range");
  }
  std::vector<double> probs(n, 0.0);
  probs[index] = 1.0;
  return Pmf(std::move(probs));
}

void RequireSameAlphabet(Pmf const &a, Pmf const &b)
{
  if (a.size() != b.size())
  {
    throw ValidationError("PMF length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

}  // namespace boundiv
