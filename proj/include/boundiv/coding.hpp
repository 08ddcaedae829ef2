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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace boundiv {

/// Prefix-free binary code, one codeword per letter, stored as '0'/'1'
/// strings. The constructor rejects empty codewords, non-binary characters,
/// prefix collisions and Kraft sums above 1.
class CodeBook
{
public:
  static constexpr double kKraftTolerance = 1e-12;

  explicit CodeBook(std::vector<std::string> codewords);

  std::size_t              size() const noexcept { return codewords_.size(); }
  std::string const       &operator[](std::size_t i) const noexcept { return codewords_[i]; }
  std::vector<std::string> const &codewords() const noexcept { return codewords_; }

  std::vector<std::size_t> Lengths() const;
  std::size_t              MaxLength() const;
  double                   KraftSum() const;

private:
  std::vector<std::string> codewords_;
};

struct CodingReport
{
  double      avg_length             = 0.0;
  std::size_t max_length             = 0;
  double      entropy_of_p           = 0.0;
  double      analytic_cross_entropy = 0.0;  ///< -sum p log2 q; may be +inf
  std::size_t bound                  = 0;    ///< n - 1
};

/// The near-dyadic PMF whose optimal code is the unary listing:
/// q_n = eps, q_i = (1 - eps) 2^-i for 2 <= i <= n-1,
/// q_1 = (1 - eps)(2^-1 + 2^-(n-1)). Requires n >= 2 and 0 < eps < 2^-(n-1).
Pmf Section2Pmf(std::size_t n, double epsilon);

/// Letter i (1-based, i < n) gets (i-1) ones then a zero; letter n gets n-1 ones.
CodeBook UnaryCode(std::size_t n);

/// Optimal prefix code for q. Ties during merging go to the node holding
/// the smallest original letter index, so output is deterministic.
CodeBook Huffman(Pmf const &q);

/// sum_i p_i len_i.
double AvgCodeLength(Pmf const &p, CodeBook const &code);

/// Upper bound on realized bits per letter of any code built by Huffman or
/// UnaryCode over n letters: n - 1.
std::size_t CeUpperBound(std::size_t n);

/// (n - 1) - min_entropy, with 0 <= min_entropy <= log2 n.
double KlUpperBound(std::size_t n, double min_entropy = 0.0);

/// Worst-case inefficiency with a uniform Q: (log2 n, ceil(log2 n)).
std::pair<double, std::size_t> UniformQBound(std::size_t n);

/// Report for coding p with a code built for q.
CodingReport MakeCodingReport(Pmf const &p, Pmf const &q, CodeBook const &code);

/// Worst case: Huffman-code Section2Pmf(n, epsilon) and transmit a string
/// made only of the letter with the longest codeword.
CodingReport WorstCaseReport(std::size_t n, double epsilon);

/// Encodes `num_letters` letters drawn i.i.d. from p with a generator seeded
/// by `seed`; returns encoded bits per letter. Deterministic per seed.
double SimulateTransmission(Pmf const &p, CodeBook const &code, std::size_t num_letters,
                            std::uint64_t seed);

}  // namespace boundiv
