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

#include "cli.hpp"

#include "boundiv/coding.hpp"
#include "boundiv/cost_benefit.hpp"
#include "boundiv/errors.hpp"
#include "boundiv/format.hpp"
#include "boundiv/measures.hpp"
#include "boundiv/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace boundiv::cli {
namespace {

using Json = nlohmann::ordered_json;

// Finite values are rounded to nine significant digits so the JSON printer
// emits them at that precision; infinities become "inf" / "-inf" strings.
Json Number(double v)
{
  if (!std::isfinite(v))
  {
    return FormatSig9(v);
  }
  return ParseNumber(FormatSig9(v));
}

Json Numbers(std::span<double const> values)
{
  Json arr = Json::array();
  for (double v : values)
  {
    arr.push_back(Number(v));
  }
  return arr;
}

Pmf PmfFromJson(Json const &j, std::string const &what)
{
  Json const &arr = j.is_object() && j.contains("probs") ? j.at("probs") : j;
  if (!arr.is_array())
  {
    throw ValidationError(what + " must be a JSON array or an object with a \"probs\" array");
  }
  std::vector<double> probs;
  for (auto const &v : arr)
  {
    if (!v.is_number())
    {
      throw ValidationError(what + " entries must be numbers");
    }
    probs.push_back(v.get<double>());
  }
  try
  {
    return Pmf(std::move(probs));
  }
  catch (ValidationError const &e)
  {
    throw ValidationError(what + ": " + e.what());
  }
}

Pmf ParsePmf(std::string const &text, std::string const &what)
{
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
  {
    throw ValidationError(what + " is not valid JSON: " + text);
  }
  return PmfFromJson(j, what);
}

void Emit(std::string const &text, std::string const &out_path, std::ostream &out)
{
  if (out_path.empty() || out_path == "-")
  {
    out << text;
    out.flush();
    if (!out)
    {
      throw IoError("failed to write to standard output");
    }
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file)
  {
    throw IoError("cannot open '" + out_path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file)
  {
    throw IoError("failed to write '" + out_path + "'");
  }
}

struct ComputeOptions
{
  std::string           measure;
  std::string           p;
  std::string           q;
  std::optional<double> k;
  std::optional<double> clamp;
  std::string           out;
};

std::string RunCompute(ComputeOptions const &opt)
{
  Pmf const         p     = ParsePmf(opt.p, "--p");
  ClampPolicy const clamp = opt.clamp ? ClampPolicy::Floor(*opt.clamp) : ClampPolicy::Off();
  double            value = 0.0;
  if (opt.measure == "entropy")
  {
    value = Entropy(p);
  }
  else
  {
    if (opt.q.empty())
    {
      throw ValidationError("--q is required for measure '" + opt.measure + "'");
    }
    Pmf const q = ParsePmf(opt.q, "--q");
    if (opt.measure == "cross-entropy")
    {
      value = CrossEntropy(p, q, clamp);
    }
    else
    {
      auto const kind = ParseDivergenceKind(opt.measure);
      if (!kind)
      {
        throw ValidationError("unknown measure '" + opt.measure + "'");
      }
      DivergenceSpec spec{*kind};
      // NewG, NewGC and Minkowski default to the squared exponent.
      spec.k     = opt.k.value_or(*kind == DivergenceKind::kNew ? 1.0 : 2.0);
      spec.clamp = clamp;
      value      = Divergence(spec, p, q);
    }
  }
  return FormatFixed9(value) + "\n";
}

DivergenceSpec MeasureFromJson(Json const &j)
{
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
  {
    throw ValidationError("\"measure\" must be an object with a string \"kind\"");
  }
  auto const kind = ParseDivergenceKind(j.at("kind").get<std::string>());
  if (!kind)
  {
    throw ValidationError("unknown measure kind '" + j.at("kind").get<std::string>() + "'");
  }
  DivergenceSpec spec{*kind};
  if (j.contains("k"))
  {
    if (!j.at("k").is_number())
    {
      throw ValidationError("\"k\" must be a number");
    }
    spec.k = j.at("k").get<double>();
  }
  else if (*kind == DivergenceKind::kNewG || *kind == DivergenceKind::kNewGC)
  {
    spec.k = 2.0;
  }
  if (j.contains("clamp") && !j.at("clamp").is_null())
  {
    if (!j.at("clamp").is_number())
    {
      throw ValidationError("\"clamp\" must be a number");
    }
    spec.clamp = ClampPolicy::Floor(j.at("clamp").get<double>());
  }
  return spec;
}

std::string RunCbr(std::string const &text)
{
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
  {
    throw ValidationError("cbr input must be a JSON object");
  }
  for (char const *field : {"input_pmf", "output_pmf", "reconstructed_pmf", "cost", "measure"})
  {
    if (!j.contains(field))
    {
      throw ValidationError(std::string("missing field \"") + field + "\"");
    }
  }
  if (!j.at("cost").is_number())
  {
    throw ValidationError("\"cost\" must be a number");
  }
  CostBenefitInput input{PmfFromJson(j.at("input_pmf"), "input_pmf"),
                         PmfFromJson(j.at("output_pmf"), "output_pmf"),
                         PmfFromJson(j.at("reconstructed_pmf"), "reconstructed_pmf"),
                         j.at("cost").get<double>(), MeasureFromJson(j.at("measure"))};
  auto const b = BenefitAndCbr(input);

  Json out;
  out["alphabet_compression"] = Number(b.alphabet_compression);
  out["potential_distortion"] = Number(b.potential_distortion);
  out["benefit"]              = Number(b.benefit);
  out["cbr"]                  = Number(b.cbr);
  return out.dump(2) + "\n";
}

std::string ReadAll(std::string const &path, std::istream &in)
{
  if (path == "-")
  {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file)
  {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

struct CodingOptions
{
  std::string           action;
  std::size_t           n = 0;
  std::optional<double> epsilon;
  std::size_t           trials = 1000000;
  std::uint64_t         seed   = 0;
  std::string           out;
};

std::string RunCoding(CodingOptions const &opt)
{
  if (opt.n < 2)
  {
    throw ValidationError("--n must be >= 2");
  }
  double const eps = opt.epsilon.value_or(std::ldexp(1.0, -static_cast<int>(opt.n)));

  Json out;
  out["n"] = opt.n;
  if (opt.action == "section2")
  {
    Pmf const q = Section2Pmf(opt.n, eps);
    out["epsilon"]  = Number(eps);
    out["pmf"]      = Numbers(q.probs());
    out["codebook"] = UnaryCode(opt.n).codewords();
    out["huffman"]  = Huffman(q).codewords();
  }
  else if (opt.action == "verify-bound")
  {
    auto const r = WorstCaseReport(opt.n, eps);
    out["epsilon"]                = Number(eps);
    out["avg_length"]             = Number(r.avg_length);
    out["max_length"]             = r.max_length;
    out["entropy_of_p"]           = Number(r.entropy_of_p);
    out["analytic_cross_entropy"] = Number(r.analytic_cross_entropy);
    out["bound"]                  = r.bound;
    out["within_bound"]           = r.avg_length <= static_cast<double>(r.bound);
  }
  else if (opt.action == "simulate")
  {
    if (opt.trials == 0)
    {
      throw ValidationError("--trials must be >= 1");
    }
    Pmf const      p    = Pmf::Uniform(opt.n);
    CodeBook const code = UnaryCode(opt.n);
    out["trials"]          = opt.trials;
    out["seed"]            = opt.seed;
    out["bits_per_letter"] = Number(SimulateTransmission(p, code, opt.trials, opt.seed));
    out["expected"]        = Number(AvgCodeLength(p, code));
  }
  else
  {
    throw ValidationError("unknown coding action '" + opt.action + "'");
  }
  return out.dump(2) + "\n";
}

}  // namespace

int Run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err,
        std::istream &in)
{
  CLI::App app{"Bounded divergence measures, cost-benefit ratio, coding bounds and sweeps",
               "boundiv"};
  app.require_subcommand(1, 1);

  ComputeOptions compute;
  auto          *compute_cmd = app.add_subcommand("compute", "Evaluate one measure on PMFs");
  compute_cmd
      ->add_option("--measure", compute.measure,
                   "kl, js, new, newg, newgc, minkowski, entropy, cross-entropy")
      ->required();
  compute_cmd->add_option("--p", compute.p, "PMF as a JSON array")->required();
  compute_cmd->add_option("--q", compute.q, "second PMF as a JSON array");
  compute_cmd->add_option("--k", compute.k, "exponent for newg, newgc, minkowski");
  compute_cmd->add_option("--clamp", compute.clamp, "probability floor for kl/cross-entropy");
  compute_cmd->add_option("--out", compute.out, "output path, '-' for stdout");

  std::string cbr_input = "-";
  std::string cbr_json;
  std::string cbr_out;
  auto       *cbr_cmd = app.add_subcommand("cbr", "Benefit and cost-benefit ratio from JSON");
  auto       *cbr_input_opt =
      cbr_cmd->add_option("--input", cbr_input, "JSON file, '-' for stdin (default)");
  cbr_cmd->add_option("--json", cbr_json, "inline JSON object")->excludes(cbr_input_opt);
  cbr_cmd->add_option("--out", cbr_out, "output path, '-' for stdout");

  std::string sweep_kind;
  std::string sweep_out;
  auto       *sweep_cmd = app.add_subcommand("sweep", "Write figure data as CSV");
  sweep_cmd->add_option("kind", sweep_kind, "figure1, figure2 or figure3")->required();
  sweep_cmd->add_option("--out", sweep_out, "output path, '-' for stdout");

  CodingOptions coding;
  auto         *coding_cmd = app.add_subcommand("coding", "Prefix-code bound experiments");
  coding_cmd->add_option("action", coding.action, "section2, verify-bound or simulate")
      ->required();
  coding_cmd->add_option("--n", coding.n, "alphabet size")->required();
  coding_cmd->add_option("--epsilon", coding.epsilon, "smallest probability (default 2^-n)");
  coding_cmd->add_option("--trials", coding.trials, "letters to simulate");
  coding_cmd->add_option("--seed", coding.seed, "generator seed");
  coding_cmd->add_option("--out", coding.out, "output path, '-' for stdout");

  std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try
  {
    app.parse(std::move(argv_rest));
  }
  catch (CLI::CallForHelp const &)
  {
    out << app.help();
    return kSuccess;
  }
  catch (CLI::ParseError const &e)
  {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try
  {
    if (compute_cmd->parsed())
    {
      Emit(RunCompute(compute), compute.out, out);
    }
    else if (cbr_cmd->parsed())
    {
      Emit(RunCbr(cbr_json.empty() ? ReadAll(cbr_input, in) : cbr_json), cbr_out, out);
    }
    else if (sweep_cmd->parsed())
    {
      auto const kind = ParseFigureKind(sweep_kind);
      if (!kind)
      {
        throw ValidationError("unknown sweep kind '" + sweep_kind + "'");
      }
      SweepSpec const    spec = DefaultSweepSpec(*kind);
      std::ostringstream csv;
      std::size_t const  rows = WriteCsv(RunSweep(spec), ColumnNames(spec), csv);
      Emit(csv.str(), sweep_out, out);
      err << rows << " rows\n";
    }
    else if (coding_cmd->parsed())
    {
      Emit(RunCoding(coding), coding.out, out);
    }
  }
  catch (ValidationError const &e)
  {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  catch (IoError const &e)
  {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  }
  return kSuccess;
}

}  // namespace boundiv::cli
