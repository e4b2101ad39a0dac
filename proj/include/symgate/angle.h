// Copyright 2026 The Symgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SYMGATE_ANGLE_H
#define SYMGATE_ANGLE_H

#include <stdexcept>
#include <string_view>

namespace symgate {

class AngleParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Parses an angle in radians. Accepts plain decimals ("1.5707963", "-2e-3")
/// and products of decimals with the symbols pi, sqrt2 and sqrt3, optionally
/// divided by a decimal: "pi/2", "-3pi/4", "sqrt3*pi/2", "2*pi", "-pi".
double parse_angle(std::string_view text);

}  // namespace symgate

#endif  // SYMGATE_ANGLE_H
