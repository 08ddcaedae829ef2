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

#include "boundiv/measures.hpp"
#include "boundiv/pmf.hpp"

namespace boundiv {

/// Operands of the cost-benefit ratio for one process step.
///
/// `input_pmf` and `output_pmf` may live on alphabets of different sizes.
/// `reconstructed_pmf` is the audience's reconstruction of the input alphabet
/// and must have as many letters as `input_pmf`. `cost` is an opaque positive
/// scalar in whatever unit the caller uses.
struct CostBenefitInput
{
  Pmf            input_pmf;
  Pmf            output_pmf;
  Pmf            reconstructed_pmf;
  double         cost = 1.0;
  DivergenceSpec measure{};
};

struct BenefitBreakdown
{
  double alphabet_compression = 0.0;
  double potential_distortion = 0.0;
  double benefit              = 0.0;  ///< alphabet_compression - potential_distortion
  double cbr                  = 0.0;  ///< benefit / cost
};

/// H(input) - H(output). May be negative.
double AlphabetCompression(Pmf const &input_pmf, Pmf const &output_pmf);

/// Unbounded distortion term: KL(reconstructed || input). Reconstruction
/// comes first.
double PotentialDistortionKl(Pmf const &reconstructed, Pmf const &input_pmf,
                             ClampPolicy clamp = {});

/// Bounded distortion term: log2(n) * D(reconstructed || input) for
/// spec.kind in {New, NewG, NewGC, JS}; n is the input alphabet size.
double PotentialDistortionBounded(Pmf const &reconstructed, Pmf const &input_pmf,
                                  DivergenceSpec const &spec);

/// KL measures use the unscaled, possibly infinite, distortion term (benefit
/// becomes -inf). Every other supported measure uses the log2(n)-scaled
/// bounded term.
BenefitBreakdown BenefitAndCbr(CostBenefitInput const &input);

/// w a + (1 - w) b.
Pmf Blend(Pmf const &a, Pmf const &b, double w);

}  // namespace boundiv
