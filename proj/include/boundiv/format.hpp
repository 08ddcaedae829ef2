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

#include <string>

namespace boundiv {

/// Nine significant digits ("%.9g"); infinities become "inf" / "-inf".
std::string FormatSig9(double value);

/// Nine digits after the decimal point; infinities become "inf" / "-inf".
std::string FormatFixed9(double value);

/// Inverse of the formatters above (accepts "inf", "-inf", "nan").
/// Throws ValidationError on malformed text.
double ParseNumber(std::string const &text);

}  // namespace boundiv
