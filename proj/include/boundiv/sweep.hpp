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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace boundiv {

enum class FigureKind
{
  kFigure1,  ///< P = {1-e, e}, Q = {e, 1-e} on e in [0.05, 0.70]
  kFigure2,  ///< same pair, log-spaced e in [1e-10, 0.1]
  kFigure3,  ///< per-letter elements at p_i = 0.5, q_i in [0, 1]
};

std::string_view          ToString(FigureKind kind);
std::optional<FigureKind> ParseFigureKind(std::string_view name);

/// One output column: a whole divergence (figures 1 and 2) or a per-letter
/// element (figure 3).
using SweepMeasure = std::variant<DivergenceSpec, ElementKind>;

struct SweepSpec
{
  FigureKind                kind = FigureKind::kFigure1;
  std::vector<double>       grid;      ///< epsilon for figures 1-2, q_i for figure 3
  std::vector<SweepMeasure> measures;
  double                    kl_scale      = 0.3;
  ClampPolicy               element_clamp = {};  ///< applied to eDKL in figure 3

  /// Grid strictly increasing and inside the figure's domain; measure types
  /// match the figure.
  void Validate() const;
};

struct SweepRow
{
  double              abscissa = 0.0;  ///< epsilon, or delta = q_i - 0.5 for figure 3
  std::vector<double> values;
};

/// Grids: figure1 e = 0.05, 0.06, ..., 0.70; figure2 100 log-spaced points
/// on [1e-10, 0.1]; figure3 q_i = 0.00, 0.01, ..., 1.00.
std::vector<double> DefaultGrid(FigureKind kind);

/// Figures 1-2: DKL, kl_scale*DKL, New, NewGC(k=2), DJS, Minkowski
/// k in {0.5, 1, 1.6, 2, 4, 256}. Figure 3: eDKL, eNew, eNewG, eNewC, eNewGC, eDJS.
std::vector<SweepMeasure> DefaultMeasures(FigureKind kind, double kl_scale = 0.3);

SweepSpec DefaultSweepSpec(FigureKind kind);

/// Abscissa column name followed by one name per measure.
std::vector<std::string> ColumnNames(SweepSpec const &spec);

std::vector<SweepRow> SweepFigure1(SweepSpec const &spec);
std::vector<SweepRow> SweepFigure2(SweepSpec const &spec);
std::vector<SweepRow> SweepFigure3(SweepSpec const &spec);
/// Dispatches on spec.kind.
std::vector<SweepRow> RunSweep(SweepSpec const &spec);

/// Header line, then one line per row. Nine significant digits, `inf` for
/// infinities, LF endings. Returns the number of data rows written.
std::size_t WriteCsv(std::vector<SweepRow> const &rows, std::vector<std::string> const &column_names,
                     std::ostream &sink);

struct CsvTable
{
  std::vector<std::string> column_names;
  std::vector<SweepRow>    rows;
};

CsvTable ReadCsv(std::istream &source);

}  // namespace boundiv
