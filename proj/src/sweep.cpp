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

#include "boundiv/sweep.hpp"

#include "boundiv/errors.hpp"
#include "boundiv/format.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace boundiv {
namespace {

constexpr double kMinkowskiExponents[] = {0.5, 1.0, 1.6, 2.0, 4.0, 256.0};

std::string CompactNumber(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string MeasureName(SweepMeasure const &measure)
{
  if (auto const *element = std::get_if<ElementKind>(&measure))
  {
    return std::string(ToString(*element));
  }
  auto const &spec = std::get<DivergenceSpec>(measure);
  std::string name;
  switch (spec.kind)
  {
  case DivergenceKind::kKL:
    name = "DKL";
    break;
  case DivergenceKind::kJS:
    name = "DJS";
    break;
  case DivergenceKind::kNew:
    name = "New";
    break;
  case DivergenceKind::kNewG:
    name = spec.k == 2.0 ? "NewG" : "NewG_k" + CompactNumber(spec.k);
    break;
  case DivergenceKind::kNewGC:
    name = spec.k == 2.0 ? "NewGC" : "NewGC_k" + CompactNumber(spec.k);
    break;
  case DivergenceKind::kMinkowski:
    name = "Minkowski" + CompactNumber(spec.k);
    break;
  }
  return spec.scale == 1.0 ? name : CompactNumber(spec.scale) + name;
}

std::vector<SweepRow> SweepBinaryPair(SweepSpec const &spec)
{
  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double const eps : spec.grid)
  {
    Pmf const p{1.0 - eps, eps};
    Pmf const q{eps, 1.0 - eps};
    SweepRow  row{eps, {}};
    row.values.reserve(spec.measures.size());
    for (auto const &measure : spec.measures)
    {
      row.values.push_back(ScaledDivergence(std::get<DivergenceSpec>(measure), p, q));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void RequireKind(SweepSpec const &spec, FigureKind expected)
{
  if (spec.kind != expected)
  {
    throw ValidationError("sweep spec is for " + std::string(ToString(spec.kind)) + ", expected " +
                          std::string(ToString(expected)));
  }
  spec.Validate();
}

std::vector<std::string> SplitCsvLine(std::string const &line)
{
  std::vector<std::string> fields;
  std::stringstream        ss(line);
  std::string              field;
  while (std::getline(ss, field, ','))
  {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',')
  {
    fields.emplace_back();
  }
  return fields;
}

}  // namespace

std::string_view ToString(FigureKind kind)
{
  switch (kind)
  {
  case FigureKind::kFigure1:
    return "figure1";
  case FigureKind::kFigure2:
    return "figure2";
  case FigureKind::kFigure3:
    return "figure3";
  }
  throw ValidationError("unknown figure kind");
}

std::optional<FigureKind> ParseFigureKind(std::string_view name)
{
  for (auto kind : {FigureKind::kFigure1, FigureKind::kFigure2, FigureKind::kFigure3})
  {
    if (ToString(kind) == name)
    {
      return kind;
    }
  }
  return std::nullopt;
}

void SweepSpec::Validate() const
{
  if (!(kl_scale > 0.0) || !std::isfinite(kl_scale))
  {
    throw ValidationError("kl_scale must be a positive finite number");
  }
  if (measures.empty())
  {
    throw ValidationError("sweep needs at least one measure");
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    double const x = grid[i];
    bool         inside{};
    switch (kind)
    {
    case FigureKind::kFigure1:
      inside = x > 0.0 && x < 1.0;
      break;
    case FigureKind::kFigure2:
      inside = x > 0.0 && x < 0.5;
      break;
    case FigureKind::kFigure3:
      inside = x >= 0.0 && x <= 1.0;
      break;
    }
    if (!inside)
    {
      throw ValidationError("grid value " + FormatSig9(x) + " is outside the domain of " +
                            std::string(ToString(kind)));
    }
    if (i > 0 && !(grid[i] > grid[i - 1]))
    {
      throw ValidationError("sweep grid must be strictly increasing");
    }
  }
  bool const wants_elements = kind == FigureKind::kFigure3;
  for (auto const &measure : measures)
  {
    if (std::holds_alternative<ElementKind>(measure) != wants_elements)
    {
      throw ValidationError(wants_elements ? "figure3 columns must be element kinds"
                                           : "figure1/figure2 columns must be divergences");
    }
    if (auto const *spec = std::get_if<DivergenceSpec>(&measure))
    {
      spec->Validate();
    }
  }
}

std::vector<double> DefaultGrid(FigureKind kind)
{
  std::vector<double> grid;
  switch (kind)
  {
  case FigureKind::kFigure1:
    for (int i = 5; i <= 70; ++i)
    {
      grid.push_back(i / 100.0);
    }
    break;
  case FigureKind::kFigure2: {
    constexpr int kPoints = 100;
    for (int j = 0; j < kPoints; ++j)
    {
      grid.push_back(std::pow(10.0, -10.0 + 9.0 * j / (kPoints - 1)));
    }
    grid.front() = 1e-10;
    grid.back()  = 0.1;
    break;
  }
  case FigureKind::kFigure3:
    for (int i = 0; i <= 100; ++i)
    {
      grid.push_back(i / 100.0);
    }
    break;
  }
  return grid;
}

std::vector<SweepMeasure> DefaultMeasures(FigureKind kind, double kl_scale)
{
  if (kind == FigureKind::kFigure3)
  {
    return {ElementKind::kDKL,  ElementKind::kNew,   ElementKind::kNewG,
            ElementKind::kNewC, ElementKind::kNewGC, ElementKind::kDJS};
  }
  std::vector<SweepMeasure> measures{
      DivergenceSpec{DivergenceKind::kKL},
      DivergenceSpec{DivergenceKind::kKL, 1.0, {}, kl_scale},
      DivergenceSpec{DivergenceKind::kNew},
      DivergenceSpec{DivergenceKind::kNewGC, 2.0},
      DivergenceSpec{DivergenceKind::kJS},
  };
  for (double k : kMinkowskiExponents)
  {
    measures.emplace_back(DivergenceSpec{DivergenceKind::kMinkowski, k});
  }
  return measures;
}

SweepSpec DefaultSweepSpec(FigureKind kind)
{
  SweepSpec spec;
  spec.kind     = kind;
  spec.grid     = DefaultGrid(kind);
  spec.measures = DefaultMeasures(kind, spec.kl_scale);
  return spec;
}

std::vector<std::string> ColumnNames(SweepSpec const &spec)
{
  std::vector<std::string> names;
  names.reserve(spec.measures.size() + 1);
  names.emplace_back(spec.kind == FigureKind::kFigure3 ? "delta" : "epsilon");
  for (auto const &measure : spec.measures)
  {
    names.push_back(MeasureName(measure));
  }
  return names;
}

std::vector<SweepRow> SweepFigure1(SweepSpec const &spec)
{
  RequireKind(spec, FigureKind::kFigure1);
  return SweepBinaryPair(spec);
}

std::vector<SweepRow> SweepFigure2(SweepSpec const &spec)
{
  RequireKind(spec, FigureKind::kFigure2);
  return SweepBinaryPair(spec);
}

std::vector<SweepRow> SweepFigure3(SweepSpec const &spec)
{
  RequireKind(spec, FigureKind::kFigure3);
  constexpr double      kP = 0.5;
  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double const q : spec.grid)
  {
    SweepRow row{q - kP, {}};
    row.values.reserve(spec.measures.size());
    for (auto const &measure : spec.measures)
    {
      row.values.push_back(Element(std::get<ElementKind>(measure), kP, q, spec.element_clamp));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> RunSweep(SweepSpec const &spec)
{
  switch (spec.kind)
  {
  case FigureKind::kFigure1:
    return SweepFigure1(spec);
  case FigureKind::kFigure2:
    return SweepFigure2(spec);
  case FigureKind::kFigure3:
    return SweepFigure3(spec);
  }
  throw ValidationError("unknown figure kind");
}

std::size_t WriteCsv(std::vector<SweepRow> const &rows, std::vector<std::string> const &column_names,
                     std::ostream &sink)
{
  for (auto const &row : rows)
  {
    if (row.values.size() + 1 != column_names.size())
    {
      throw ValidationError("row width does not match the column names");
    }
  }
  std::string out;
  for (std::size_t i = 0; i < column_names.size(); ++i)
  {
    out += (i ? "," : "") + column_names[i];
  }
  out += '\n';
  for (auto const &row : rows)
  {
    out += FormatSig9(row.abscissa);
    for (double v : row.values)
    {
      out += ',';
      out += FormatSig9(v);
    }
    out += '\n';
  }
  sink << out;
  sink.flush();
  if (!sink)
  {
    throw IoError("failed to write CSV output");
  }
  return rows.size();
}

CsvTable ReadCsv(std::istream &source)
{
  CsvTable    table;
  std::string line;
  if (!std::getline(source, line))
  {
    throw ValidationError("CSV input has no header");
  }
  table.column_names = SplitCsvLine(line);
  while (std::getline(source, line))
  {
    if (line.empty())
    {
      continue;
    }
    auto const fields = SplitCsvLine(line);
    if (fields.size() != table.column_names.size())
    {
      throw ValidationError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(table.column_names.size()));
    }
    SweepRow row{ParseNumber(fields[0]), {}};
    for (std::size_t i = 1; i < fields.size(); ++i)
    {
      row.values.push_back(ParseNumber(fields[i]));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace boundiv
