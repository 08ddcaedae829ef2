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

#include "boundiv/cost_benefit.hpp"

#include "boundiv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace boundiv {

double AlphabetCompression(Pmf const &input_pmf, Pmf const &output_pmf)
{
  return Entropy(input_pmf) - Entropy(output_pmf);
}

double PotentialDistortionKl(Pmf const &reconstructed, Pmf const &input_pmf, ClampPolicy clamp)
{
  return KlDivergence(reconstructed, input_pmf, clamp);
}

double PotentialDistortionBounded(Pmf const &reconstructed, Pmf const &input_pmf,
                                  DivergenceSpec const &spec)
{
  switch (spec.kind)
  {
  case DivergenceKind::kNew:
  case DivergenceKind::kNewG:
  case DivergenceKind::kNewGC:
  case DivergenceKind::kJS:
    break;
  default:
    throw ValidationError("bounded potential distortion supports new, newg, newgc and js only");
  }
  return MaxEntropy(input_pmf.size()) * Divergence(spec, reconstructed, input_pmf);
}

BenefitBreakdown BenefitAndCbr(CostBenefitInput const &input)
{
  if (!(input.cost > 0.0) || !std::isfinite(input.cost))
  {
    throw ValidationError("cost must be a positive finite number");
  }
  RequireSameAlphabet(input.reconstructed_pmf, input.input_pmf);
  input.measure.Validate();

  BenefitBreakdown out;
  out.alphabet_compression = AlphabetCompression(input.input_pmf, input.output_pmf);
  out.potential_distortion =
      input.measure.kind == DivergenceKind::kKL
          ? PotentialDistortionKl(input.reconstructed_pmf, input.input_pmf, input.measure.clamp)
          : PotentialDistortionBounded(input.reconstructed_pmf, input.input_pmf, input.measure);
  out.benefit = out.alphabet_compression - out.potential_distortion;
  out.cbr     = out.benefit / input.cost;
  return out;
}

Pmf Blend(Pmf const &a, Pmf const &b, double w)
{
  RequireSameAlphabet(a, b);
  if (!(w >= 0.0 && w <= 1.0))
  {
    throw ValidationError("blend weight must lie in [0, 1]");
  }
  std::vector<double> mixed(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    mixed[i] = std::clamp(w * a[i] + (1.0 - w) * b[i], 0.0, 1.0);
  }
  return Pmf(std::move(mixed));
}

}  // namespace boundiv
