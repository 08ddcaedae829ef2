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

#include "boundiv/errors.hpp"
#include "boundiv/measures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace boundiv;
namespace frozen = boundiv::testing::frozen;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("Pmf validation")
{
  CHECK_NOTHROW(Pmf{1.0});
  CHECK_NOTHROW(Pmf{0.5, 0.5 + 5e-10});
  CHECK_THROWS_AS(Pmf(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS((Pmf{0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS((Pmf{1.0 + 1e-15, -1e-15}), ValidationError);
  CHECK_THROWS_AS((Pmf{std::nan(""), 1.0}), ValidationError);
  CHECK(Pmf::Uniform(4) == Pmf{0.25, 0.25, 0.25, 0.25});
  CHECK(Pmf::Degenerate(3, 2) == Pmf{0.0, 0.0, 1.0});
}

TEST_CASE("entropy")
{
  CHECK(Entropy(Pmf{0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(Entropy(Pmf{1.0, 0.0}) == 0.0);
  CHECK(std::abs(Entropy(Pmf{0.7, 0.3}) - 0.88) <= 0.005);
  CHECK(Entropy(Pmf{0.7, 0.3}) == doctest::Approx(frozen::kEntropy_07_03).epsilon(1e-14));
  CHECK(Entropy(Pmf::Uniform(64)) == doctest::Approx(6.0));
}

TEST_CASE("max entropy")
{
  CHECK(MaxEntropy(2) == 1.0);
  CHECK(MaxEntropy(1) == 0.0);
  CHECK(MaxEntropy(8) == 3.0);
  CHECK_THROWS_AS(MaxEntropy(0), ValidationError);
}

TEST_CASE("cross entropy")
{
  CHECK(CrossEntropy(Pmf{0.5, 0.5}, Pmf{0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(CrossEntropy(Pmf{1.0, 0.0}, Pmf{0.25, 0.75}) == doctest::Approx(2.0));
  CHECK(CrossEntropy(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}) == kInf);
  CHECK(CrossEntropy(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}, ClampPolicy::Floor(1e-12)) ==
        doctest::Approx(-std::log2(1e-12)));
  CHECK_THROWS_AS(CrossEntropy(Pmf{1.0}, Pmf{0.5, 0.5}), ValidationError);
}

TEST_CASE("KL divergence")
{
  CHECK(KlDivergence(Pmf{0.3, 0.7}, Pmf{0.3, 0.7}) == 0.0);
  CHECK(KlDivergence(Pmf{0.95, 0.05}, Pmf{0.05, 0.95}) ==
        doctest::Approx(frozen::kKl_095_005).epsilon(1e-13));
  CHECK(KlDivergence(Pmf{0.95, 0.05}, Pmf{0.05, 0.95}) ==
        doctest::Approx(0.9 * std::log2(19.0)).epsilon(1e-13));
  CHECK(KlDivergence(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}) == kInf);
  CHECK(std::isfinite(KlDivergence(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}, ClampPolicy::Floor(1e-9))));
  CHECK_THROWS_AS(ClampPolicy::Floor(0.0), ValidationError);
  CHECK_THROWS_AS(KlDivergence(Pmf{1.0}, Pmf{0.5, 0.5}), ValidationError);
}

TEST_CASE("JS divergence")
{
  CHECK(JsDivergence(Pmf{0.2, 0.8}, Pmf{0.2, 0.8}) == 0.0);
  CHECK(JsDivergence(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(JsDivergence(Pmf{0.95, 0.05}, Pmf{0.05, 0.95}) ==
        doctest::Approx(frozen::kJs_095_005).epsilon(1e-13));
  CHECK_THROWS_AS(JsDivergence(Pmf{1.0}, Pmf{0.5, 0.5}), ValidationError);
}

TEST_CASE("new divergence family")
{
  Pmf const told{1.0, 0.0};
  Pmf const truth{0.7, 0.3};

  CHECK(NewDivergence(told, truth) == doctest::Approx(frozen::kLog2_1_3).epsilon(1e-14));
  CHECK(NewDivergence(Pmf{0.85, 0.15}, truth) == doctest::Approx(frozen::kLog2_1_15).epsilon(1e-14));
  CHECK(NewDivergence(Pmf{0.0, 1.0}, Pmf{1.0, 0.0}) == 1.0);

  SUBCASE("non-commutative")
  {
    // On two letters |p_i - q_i| is the same for both letters, so the
    // asymmetry only shows up from three letters on.
    CHECK(NewDivergence(truth, told) == doctest::Approx(NewDivergence(told, truth)));

    Pmf const a{1.0, 0.0, 0.0};
    Pmf const b{0.4, 0.3, 0.3};
    CHECK(NewDivergence(a, b) == doctest::Approx(std::log2(1.6)));
    CHECK(NewDivergence(b, a) == doctest::Approx(0.4 * std::log2(1.6) + 0.6 * std::log2(1.3)));
    CHECK(NewDivergence(a, b) - NewDivergence(b, a) > 0.1);
  }

  SUBCASE("generalised")
  {
    CHECK(NewDivergenceG(told, truth, 1.0) == NewDivergence(told, truth));
    CHECK(NewDivergenceG(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}, 2.0) == 1.0);
    CHECK(NewDivergenceG(told, truth, 2.0) == doctest::Approx(frozen::kLog2_1_09).epsilon(1e-14));
    CHECK_THROWS_AS(NewDivergenceG(told, truth, 0.0), ValidationError);
    CHECK_THROWS_AS(NewDivergenceG(told, truth, -1.0), ValidationError);
  }

  SUBCASE("commutative")
  {
    CHECK(NewDivergenceGC(truth, truth, 2.0) == 0.0);
    CHECK(NewDivergenceGC(Pmf{1.0, 0.0}, Pmf{0.0, 1.0}, 2.0) == 1.0);
    CHECK(NewDivergenceGC(told, truth, 2.0) == doctest::Approx(frozen::kLog2_1_09).epsilon(1e-14));
    CHECK(NewDivergenceGC(told, truth, 2.0) == NewDivergenceGC(truth, told, 2.0));
    CHECK_THROWS_AS(NewDivergenceGC(told, Pmf{1.0}, 2.0), ValidationError);
  }
}

TEST_CASE("Minkowski")
{
  Pmf const p{0.9, 0.1};
  Pmf const q{0.1, 0.9};
  CHECK(Minkowski(p, q, 1.0) == doctest::Approx(1.6));
  CHECK(Minkowski(p, q, 2.0) == doctest::Approx(0.8 * std::sqrt(2.0)));
  for (double k : {0.5, 1.0, 1.6, 2.0, 4.0, 256.0})
  {
    CHECK(Minkowski(p, p, k) == 0.0);
  }
  CHECK_THROWS_AS(Minkowski(p, q, 0.0), ValidationError);

  SUBCASE("large exponent does not underflow")
  {
    // Naive (0.8^256 * 2)^(1/256) underflows the inner sum for smaller |d|.
    Pmf const a{0.51, 0.49};
    Pmf const b{0.49, 0.51};
    double const expected = 0.02 * std::pow(2.0, 1.0 / 256.0);
    CHECK(Minkowski(a, b, 256.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::pow(0.02, 256.0) == 0.0);
    CHECK(Minkowski(a, b, 4096.0) == doctest::Approx(0.02).epsilon(1e-3));
  }
}

TEST_CASE("divergence dispatch applies no display scale")
{
  Pmf const      p{0.95, 0.05};
  Pmf const      q{0.05, 0.95};
  DivergenceSpec spec{DivergenceKind::kKL, 1.0, {}, 0.3};
  CHECK(Divergence(spec, p, q) == doctest::Approx(frozen::kKl_095_005));
  CHECK(ScaledDivergence(spec, p, q) == doctest::Approx(0.3 * frozen::kKl_095_005));
  spec.scale = 0.0;
  CHECK_THROWS_AS(spec.Validate(), ValidationError);
  CHECK(ParseDivergenceKind("NewGC") == DivergenceKind::kNewGC);
  CHECK_FALSE(ParseDivergenceKind("bogus").has_value());
}

TEST_CASE("per-letter elements")
{
  CHECK(Element(ElementKind::kDKL, 0.5, 0.5) == 0.0);
  CHECK(Element(ElementKind::kDKL, 0.5, 0.0) == kInf);
  CHECK(Element(ElementKind::kDKL, 0.0, 0.0) == 0.0);
  CHECK(Element(ElementKind::kDKL, 0.5, 1.0) == doctest::Approx(-0.5));
  CHECK(Element(ElementKind::kNewC, 0.5, 1.0) == doctest::Approx(0.75 * frozen::kLog2_1_5));
  CHECK(Element(ElementKind::kNewC, 0.5, 0.0) == doctest::Approx(0.25 * frozen::kLog2_1_5));
  CHECK(Element(ElementKind::kDJS, 0.5, 0.0) == doctest::Approx(0.25));
  CHECK(Element(ElementKind::kNewG, 0.5, 1.0) == doctest::Approx(0.5 * std::log2(1.25)));
  CHECK(Element(ElementKind::kNewGC, 0.5, 1.0) == doctest::Approx(0.75 * std::log2(1.25)));
  CHECK_THROWS_AS(Element(ElementKind::kNew, 1.5, 0.0), ValidationError);
  CHECK_THROWS_AS(Element(static_cast<ElementKind>(99), 0.5, 0.5), ValidationError);
  CHECK(ParseElementKind("edjs") == ElementKind::kDJS);
}

TEST_CASE("element sums reproduce the whole divergences")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial)
  {
    auto const n = testing::RandomSize(rng, 2, 12);
    Pmf const  p = testing::RandomPmf(rng, n, 0.2);
    Pmf const  q = testing::RandomPmf(rng, n, 0.2);
    double     js = 0, newc = 0, newgc = 0, kl = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
      js += Element(ElementKind::kDJS, p[i], q[i]);
      newc += Element(ElementKind::kNewC, p[i], q[i]);
      newgc += Element(ElementKind::kNewGC, p[i], q[i]);
      kl += Element(ElementKind::kDKL, p[i], q[i]);
    }
    CHECK(JsDivergence(p, q) == doctest::Approx(js).epsilon(1e-12));
    CHECK(NewDivergenceGC(p, q, 1.0) == doctest::Approx(newc).epsilon(1e-12));
    CHECK(NewDivergenceGC(p, q, 2.0) == doctest::Approx(newgc).epsilon(1e-12));
    CHECK(KlDivergence(p, q) == kl);
  }
}

TEST_CASE("properties over random PMF pairs")
{
  std::mt19937_64 rng(20191);
  for (int trial = 0; trial < 2000; ++trial)
  {
    auto const n = testing::RandomSize(rng, 2, 64);
    Pmf const  p = testing::RandomPmf(rng, n, 0.1);
    Pmf const  q = testing::RandomPmf(rng, n, 0.1);

    double const h = Entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= MaxEntropy(n));

    CHECK(JsDivergence(p, q) == doctest::Approx(JsDivergence(q, p)).epsilon(1e-12));
    CHECK(Minkowski(p, q, 1.6) == doctest::Approx(Minkowski(q, p, 1.6)).epsilon(1e-12));
    for (double k : {0.5, 1.0, 2.0, 4.0})
    {
      double const gc = NewDivergenceGC(p, q, k);
      CHECK(std::abs(gc - NewDivergenceGC(q, p, k)) <= 1e-12);
      CHECK(gc >= 0.0);
      CHECK(gc <= 1.0);
    }

    // |d|^k decreases in k when every |d| < 1.
    double prev = std::numeric_limits<double>::infinity();
    for (double k : {0.5, 1.0, 1.6, 2.0, 4.0, 8.0})
    {
      double const g = NewDivergenceG(p, q, k);
      CHECK(g <= prev);
      prev = g;
    }
  }
}

TEST_CASE("entropy attains log2 n only at the uniform PMF")
{
  for (std::size_t n : {1u, 2u, 3u, 7u, 64u})
  {
    CHECK(Entropy(Pmf::Uniform(n)) == doctest::Approx(MaxEntropy(n)).epsilon(1e-12));
  }
  CHECK(Entropy(Pmf{0.5, 0.25, 0.25}) < MaxEntropy(3));
}
