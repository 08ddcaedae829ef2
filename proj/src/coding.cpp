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

#include "boundiv/coding.hpp"

#include "boundiv/errors.hpp"
#include "boundiv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <tuple>

namespace boundiv {
namespace {

void RequireAtLeastTwoLetters(std::size_t n)
{
  if (n < 2)
  {
    throw ValidationError("alphabet must have at least 2 letters");
  }
}

}  // namespace

CodeBook::CodeBook(std::vector<std::string> codewords)
  : codewords_(std::move(codewords))
{
  for (auto const &w : codewords_)
  {
    if (w.empty())
    {
      throw ValidationError("codewords must be nonempty");
    }
    if (w.find_first_not_of("01") != std::string::npos)
    {
      throw ValidationError("codeword '" + w + "' is not a binary string");
    }
  }
  // After sorting, any prefix relation shows up between neighbours.
  std::vector<std::string> sorted = codewords_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
  {
    if (sorted[i].starts_with(sorted[i - 1]))
    {
      throw ValidationError("code is not prefix-free: '" + sorted[i - 1] + "' prefixes '" +
                            sorted[i] + "'");
    }
  }
  if (KraftSum() > 1.0 + kKraftTolerance)
  {
    throw ValidationError("codeword lengths violate the Kraft inequality");
  }
}

std::vector<std::size_t> CodeBook::Lengths() const
{
  std::vector<std::size_t> lengths;
  lengths.reserve(codewords_.size());
  for (auto const &w : codewords_)
  {
    lengths.push_back(w.size());
  }
  return lengths;
}

std::size_t CodeBook::MaxLength() const
{
  std::size_t m = 0;
  for (auto const &w : codewords_)
  {
    m = std::max(m, w.size());
  }
  return m;
}

double CodeBook::KraftSum() const
{
  double sum = 0.0;
  for (auto const &w : codewords_)
  {
    sum += std::ldexp(1.0, -static_cast<int>(w.size()));
  }
  return sum;
}

Pmf Section2Pmf(std::size_t n, double epsilon)
{
  RequireAtLeastTwoLetters(n);
  double const upper = std::ldexp(1.0, -static_cast<int>(n - 1));
  if (!(epsilon > 0.0 && epsilon < upper))
  {
    throw ValidationError("epsilon must lie in (0, 2^-(n-1))");
  }
  std::vector<double> q(n);
  double const keep = 1.0 - epsilon;
  q[0]              = keep * (0.5 + upper);
  for (std::size_t i = 2; i <= n - 1; ++i)
  {
    q[i - 1] = keep * std::ldexp(1.0, -static_cast<int>(i));
  }
  q[n - 1] = epsilon;
  return Pmf(std::move(q));
}

CodeBook UnaryCode(std::size_t n)
{
  RequireAtLeastTwoLetters(n);
  std::vector<std::string> words;
  words.reserve(n);
  for (std::size_t i = 1; i < n; ++i)
  {
    words.push_back(std::string(i - 1, '1') + '0');
  }
  words.emplace_back(n - 1, '1');
  return CodeBook(std::move(words));
}

CodeBook Huffman(Pmf const &q)
{
  std::size_t const n = q.size();
  RequireAtLeastTwoLetters(n);

  struct Node
  {
    double      prob;
    std::size_t min_letter;
    int         zero_child = -1;
    int         one_child  = -1;
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i)
  {
    nodes.push_back({q[i], i});
  }

  // Min-heap on (probability, smallest letter index).
  auto const later = [&nodes](int a, int b) {
    return std::tie(nodes[a].prob, nodes[a].min_letter) >
           std::tie(nodes[b].prob, nodes[b].min_letter);
  };
  std::priority_queue<int, std::vector<int>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < n; ++i)
  {
    heap.push(static_cast<int>(i));
  }

  while (heap.size() > 1)
  {
    int const first = heap.top();
    heap.pop();
    int const second = heap.top();
    heap.pop();
    // The less probable subtree takes the '1' branch, which reproduces the
    // unary listing 0, 10, 110, ... on near-dyadic inputs.
    nodes.push_back({nodes[first].prob + nodes[second].prob,
                     std::min(nodes[first].min_letter, nodes[second].min_letter), second, first});
    heap.push(static_cast<int>(nodes.size() - 1));
  }

  std::vector<std::string> words(n);
  std::vector<std::pair<int, std::string>> stack{{heap.top(), std::string()}};
  while (!stack.empty())
  {
    auto [id, prefix] = std::move(stack.back());
    stack.pop_back();
    Node const &node = nodes[id];
    if (node.zero_child < 0)
    {
      words[node.min_letter] = std::move(prefix);
      continue;
    }
    stack.emplace_back(node.one_child, prefix + '1');
    stack.emplace_back(node.zero_child, prefix + '0');
  }
  return CodeBook(std::move(words));
}

double AvgCodeLength(Pmf const &p, CodeBook const &code)
{
  if (p.size() != code.size())
  {
    throw ValidationError("PMF and codebook sizes differ");
  }
  double avg = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    avg += p[i] * static_cast<double>(code[i].size());
  }
  return avg;
}

std::size_t CeUpperBound(std::size_t n)
{
  RequireAtLeastTwoLetters(n);
  return n - 1;
}

double KlUpperBound(std::size_t n, double min_entropy)
{
  RequireAtLeastTwoLetters(n);
  if (!(min_entropy >= 0.0 && min_entropy <= MaxEntropy(n)))
  {
    throw ValidationError("min_entropy must lie in [0, log2 n]");
  }
  return static_cast<double>(n - 1) - min_entropy;
}

std::pair<double, std::size_t> UniformQBound(std::size_t n)
{
  RequireAtLeastTwoLetters(n);
  // ceil(log2 n) without floating point: bits needed to index n letters.
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n)
  {
    ++bits;
  }
  return {MaxEntropy(n), bits};
}

CodingReport MakeCodingReport(Pmf const &p, Pmf const &q, CodeBook const &code)
{
  RequireSameAlphabet(p, q);
  CodingReport report;
  report.avg_length             = AvgCodeLength(p, code);
  report.max_length             = code.MaxLength();
  report.entropy_of_p           = Entropy(p);
  report.analytic_cross_entropy = CrossEntropy(p, q);
  report.bound                  = CeUpperBound(p.size());
  return report;
}

CodingReport WorstCaseReport(std::size_t n, double epsilon)
{
  Pmf const      q       = Section2Pmf(n, epsilon);
  CodeBook const code    = Huffman(q);
  auto const     lengths = code.Lengths();
  // Last letter among the longest codewords: z_n for the near-dyadic PMF.
  std::size_t worst = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (lengths[i] >= lengths[worst])
    {
      worst = i;
    }
  }
  return MakeCodingReport(Pmf::Degenerate(n, worst), q, code);
}

double SimulateTransmission(Pmf const &p, CodeBook const &code, std::size_t num_letters,
                            std::uint64_t seed)
{
  if (p.size() != code.size())
  {
    throw ValidationError("PMF and codebook sizes differ");
  }
  if (num_letters == 0)
  {
    throw ValidationError("num_letters must be >= 1");
  }
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  double const total = cdf.back();

  std::mt19937_64 rng(seed);
  std::uint64_t   bits = 0;
  for (std::size_t t = 0; t < num_letters; ++t)
  {
    // 53 random bits -> uniform in [0, 1); upper_bound never selects a
    // zero-probability letter.
    double const u      = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto const   it     = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto const   letter = static_cast<std::size_t>(it - cdf.begin());
    bits += code[std::min(letter, cdf.size() - 1)].size();
  }
  return static_cast<double>(bits) / static_cast<double>(num_letters);
}

}  // namespace boundiv
