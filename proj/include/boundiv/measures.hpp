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

#include "boundiv/pmf.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

// All entropic quantities are in bits. Summations use 0 log 0 = 0 and
// 0 log (0/0) = 0.

namespace boundiv {

/// Optional floor applied to probabilities that end up in a logarithm
/// denominator (q_i in KL and cross entropy).
struct ClampPolicy
{
  bool   enabled = false;
  double epsilon = 1e-12;

  static ClampPolicy Off() { return {}; }
  static ClampPolicy Floor(double epsilon);
};

enum class DivergenceKind
{
  kKL,
  kJS,
  kNew,
  kNewG,
  kNewGC,
  kMinkowski,
};

/// Selects a measure. `k` is used by NewG, NewGC and Minkowski only.
/// `scale` is a display multiplier (e.g. 0.3 for the "0.3DKL" curve) and is
/// never applied by Divergence() itself.
struct DivergenceSpec
{
  DivergenceKind kind  = DivergenceKind::kNew;
  double         k     = 1.0;
  ClampPolicy    clamp = {};
  double         scale = 1.0;

  void Validate() const;
};

std::string_view              ToString(DivergenceKind kind);
std::optional<DivergenceKind> ParseDivergenceKind(std::string_view name);

double Entropy(Pmf const &p);
double MaxEntropy(std::size_t n);
double CrossEntropy(Pmf const &p, Pmf const &q, ClampPolicy clamp = {});
double KlDivergence(Pmf const &p, Pmf const &q, ClampPolicy clamp = {});
double JsDivergence(Pmf const &p, Pmf const &q);

/// sum_i p_i log2(|p_i - q_i| + 1). Bounded in [0, 1], not commutative.
double NewDivergence(Pmf const &p, Pmf const &q);
/// sum_i p_i log2(|p_i - q_i|^k + 1).
double NewDivergenceG(Pmf const &p, Pmf const &q, double k);
/// 1/2 sum_i (p_i + q_i) log2(|p_i - q_i|^k + 1). Commutative.
double NewDivergenceGC(Pmf const &p, Pmf const &q, double k);

/// (sum_i |p_i - q_i|^k)^(1/k), evaluated as m (sum_i (|p_i - q_i| / m)^k)^(1/k)
/// with m = max_i |p_i - q_i| so that large k does not underflow.
double Minkowski(Pmf const &p, Pmf const &q, double k);

/// Dispatch on spec.kind. The result is not multiplied by spec.scale.
double Divergence(DivergenceSpec const &spec, Pmf const &p, Pmf const &q);
/// spec.scale * Divergence(spec, p, q).
double ScaledDivergence(DivergenceSpec const &spec, Pmf const &p, Pmf const &q);

/// Single-letter summands of the divergences, as plotted per letter.
/// eNewG and eNewGC use the fixed exponent k = 2.
enum class ElementKind
{
  kDKL,
  kNew,
  kNewG,
  kNewC,
  kNewGC,
  kDJS,
};

std::string_view           ToString(ElementKind kind);
std::optional<ElementKind> ParseElementKind(std::string_view name);

double Element(ElementKind kind, double p, double q, ClampPolicy clamp = {});

}  // namespace boundiv
