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

#include "boundiv/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace boundiv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequirePositiveExponent(double k)
{
  if (!(k > 0.0) || !std::isfinite(k))
  {
    throw ValidationError("exponent k must be a positive finite number");
  }
}

void RequireProbability(double v, char const *name)
{
  if (!(v >= 0.0 && v <= 1.0))
  {
    throw ValidationError(std::string(name) + " must lie in [0, 1]");
  }
}

double Denominator(double q, ClampPolicy clamp)
{
  return clamp.enabled ? std::max(q, clamp.epsilon) : q;
}

// p log2(p / q) with the zero conventions; +inf when p > 0 and q == 0.
double KlTerm(double p, double q, ClampPolicy clamp)
{
  if (p == 0.0)
  {
    return 0.0;
  }
  double const d = Denominator(q, clamp);
  if (d == 0.0)
  {
    return kInf;
  }
  return p * std::log2(p / d);
}

// a log2(2a / (a + b)); zero when a == 0.
double JsHalfTerm(double a, double b)
{
  return a > 0.0 ? a * std::log2(2.0 * a / (a + b)) : 0.0;
}

// log2(|p - q|^k + 1) via log1p so tiny differences do not round to zero.
double BoundedLog(double p, double q, double k)
{
  return std::log1p(std::pow(std::abs(p - q), k)) / std::numbers::ln2;
}

std::string Lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr std::array<std::pair<DivergenceKind, std::string_view>, 6> kDivergenceNames{{
    {DivergenceKind::kKL, "kl"},
    {DivergenceKind::kJS, "js"},
    {DivergenceKind::kNew, "new"},
    {DivergenceKind::kNewG, "newg"},
    {DivergenceKind::kNewGC, "newgc"},
    {DivergenceKind::kMinkowski, "minkowski"},
}};

constexpr std::array<std::pair<ElementKind, std::string_view>, 6> kElementNames{{
    {ElementKind::kDKL, "eDKL"},
    {ElementKind::kNew, "eNew"},
    {ElementKind::kNewG, "eNewG"},
    {ElementKind::kNewC, "eNewC"},
    {ElementKind::kNewGC, "eNewGC"},
    {ElementKind::kDJS, "eDJS"},
}};

}  // namespace

ClampPolicy ClampPolicy::Floor(double epsilon)
{
  if (!(epsilon > 0.0 && epsilon < 1.0))
  {
    throw ValidationError("clamp epsilon must lie in (0, 1)");
  }
  return {true, epsilon};
}

void DivergenceSpec::Validate() const
{
  RequirePositiveExponent(k);
  if (!(scale > 0.0) || !std::isfinite(scale))
  {
    throw ValidationError("scale must be a positive finite number");
  }
  if (clamp.enabled && !(clamp.epsilon > 0.0 && clamp.epsilon < 1.0))
  {
    throw ValidationError("clamp epsilon must lie in (0, 1)");
  }
}

std::string_view ToString(DivergenceKind kind)
{
  for (auto const &[k, name] : kDivergenceNames)
  {
    if (k == kind)
    {
      return name;
    }
  }
  throw ValidationError("unknown divergence kind");
}

std::optional<DivergenceKind> ParseDivergenceKind(std::string_view name)
{
  auto const lowered = Lower(name);
  for (auto const &[kind, n] : kDivergenceNames)
  {
    if (lowered == n)
    {
      return kind;
    }
  }
  return std::nullopt;
}

double Entropy(Pmf const &p)
{
  double h = 0.0;
  for (double v : p)
  {
    if (v > 0.0)
    {
      h -= v * std::log2(v);
    }
  }
  // Rounding can leave -0 or a value a hair above log2 n.
  return std::clamp(h, 0.0, MaxEntropy(p.size()));
}

double MaxEntropy(std::size_t n)
{
  if (n == 0)
  {
    throw ValidationError("alphabet size must be >= 1");
  }
  return std::log2(static_cast<double>(n));
}

double CrossEntropy(Pmf const &p, Pmf const &q, ClampPolicy clamp)
{
  RequireSameAlphabet(p, q);
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    if (p[i] == 0.0)
    {
      continue;
    }
    double const d = Denominator(q[i], clamp);
    if (d == 0.0)
    {
      return kInf;
    }
    h -= p[i] * std::log2(d);
  }
  return h;
}

double KlDivergence(Pmf const &p, Pmf const &q, ClampPolicy clamp)
{
  RequireSameAlphabet(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    d += KlTerm(p[i], q[i], clamp);
  }
  return d;
}

double JsDivergence(Pmf const &p, Pmf const &q)
{
  RequireSameAlphabet(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    d += JsHalfTerm(p[i], q[i]) + JsHalfTerm(q[i], p[i]);
  }
  return std::clamp(0.5 * d, 0.0, 1.0);
}

double NewDivergence(Pmf const &p, Pmf const &q)
{
  return NewDivergenceG(p, q, 1.0);
}

double NewDivergenceG(Pmf const &p, Pmf const &q, double k)
{
  RequireSameAlphabet(p, q);
  RequirePositiveExponent(k);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    d += p[i] * BoundedLog(p[i], q[i], k);
  }
  return d;
}

double NewDivergenceGC(Pmf const &p, Pmf const &q, double k)
{
  RequireSameAlphabet(p, q);
  RequirePositiveExponent(k);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    d += (p[i] + q[i]) * BoundedLog(p[i], q[i], k);
  }
  return 0.5 * d;
}

double Minkowski(Pmf const &p, Pmf const &q, double k)
{
  RequireSameAlphabet(p, q);
  RequirePositiveExponent(k);
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    m = std::max(m, std::abs(p[i] - q[i]));
  }
  if (m == 0.0)
  {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    sum += std::pow(std::abs(p[i] - q[i]) / m, k);
  }
  return m * std::pow(sum, 1.0 / k);
}

double Divergence(DivergenceSpec const &spec, Pmf const &p, Pmf const &q)
{
  spec.Validate();
  switch (spec.kind)
  {
  case DivergenceKind::kKL:
    return KlDivergence(p, q, spec.clamp);
  case DivergenceKind::kJS:
    return JsDivergence(p, q);
  case DivergenceKind::kNew:
    return NewDivergence(p, q);
  case DivergenceKind::kNewG:
    return NewDivergenceG(p, q, spec.k);
  case DivergenceKind::kNewGC:
    return NewDivergenceGC(p, q, spec.k);
  case DivergenceKind::kMinkowski:
    return Minkowski(p, q, spec.k);
  }
  throw ValidationError("unknown divergence kind");
}

double ScaledDivergence(DivergenceSpec const &spec, Pmf const &p, Pmf const &q)
{
  return spec.scale * Divergence(spec, p, q);
}

std::string_view ToString(ElementKind kind)
{
  for (auto const &[k, name] : kElementNames)
  {
    if (k == kind)
    {
      return name;
    }
  }
  throw ValidationError("unknown element kind");
}

std::optional<ElementKind> ParseElementKind(std::string_view name)
{
  auto const lowered = Lower(name);
  for (auto const &[kind, n] : kElementNames)
  {
    if (lowered == Lower(n))
    {
      return kind;
    }
  }
  return std::nullopt;
}

double Element(ElementKind kind, double p, double q, ClampPolicy clamp)
{
  RequireProbability(p, "p_i");
  RequireProbability(q, "q_i");
  switch (kind)
  {
  case ElementKind::kDKL:
    return KlTerm(p, q, clamp);
  case ElementKind::kNew:
    return p * BoundedLog(p, q, 1.0);
  case ElementKind::kNewG:
    return p * BoundedLog(p, q, 2.0);
  case ElementKind::kNewC:
    return 0.5 * (p + q) * BoundedLog(p, q, 1.0);
  case ElementKind::kNewGC:
    return 0.5 * (p + q) * BoundedLog(p, q, 2.0);
  case ElementKind::kDJS:
    return 0.5 * (JsHalfTerm(p, q) + JsHalfTerm(q, p));
  }
  throw ValidationError("unknown element kind");
}

}  // namespace boundiv
