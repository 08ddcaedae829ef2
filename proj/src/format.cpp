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

#include "boundiv/format.hpp"

#include "boundiv/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace boundiv {
namespace {

std::string NonFinite(double value)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  return value > 0 ? "inf" : "-inf";
}

std::string Printf(char const *fmt, double value)
{
  char buf[64];
  int  len = std::snprintf(buf, sizeof(buf), fmt, value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string FormatSig9(double value)
{
  if (!std::isfinite(value))
  {
    return NonFinite(value);
  }
  // Avoid printing "-0".
  return Printf("%.9g", value == 0.0 ? 0.0 : value);
}

std::string FormatFixed9(double value)
{
  if (!std::isfinite(value))
  {
    return NonFinite(value);
  }
  std::string s = Printf("%.9f", value);
  if (s == "-0.000000000")
  {
    s.erase(0, 1);
  }
  return s;
}

double ParseNumber(std::string const &text)
{
  if (text.empty())
  {
    throw ValidationError("empty numeric field");
  }
  char const *begin = text.c_str();
  char       *end   = nullptr;
  double const v    = std::strtod(begin, &end);
  if (end != begin + text.size())
  {
    throw ValidationError("malformed number '" + text + "'");
  }
  return v;
}

}  // namespace boundiv
