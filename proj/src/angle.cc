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


#include "symgate/angle.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

namespace symgate {

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    double parse() {
        double sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = text_[pos_++] == '-' ? -1 : 1;
        }
        double value = factor();
        while (!done() && peek() != '/') {
            if (peek() == '*') {
                ++pos_;
            } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                fail("expected '*', '/' or a symbol");
            }
            value *= factor();
        }
        if (!done()) {
            ++pos_;
            double d = number();
            if (d == 0) {
                fail("division by zero");
            }
            value /= d;
        }
        if (!done()) {
            fail("unexpected trailing characters");
        }
        if (!std::isfinite(value)) {
            fail("angle is not finite");
        }
        return sign * value;
    }

   private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const char *why) const {
        throw AngleParseError(fmt::format("bad angle '{}' at position {}: {}", text_, pos_, why));
    }

    double factor() {
        for (auto [name, value] : {std::pair<std::string_view, double>{"pi", std::numbers::pi},
                                   {"sqrt2", std::numbers::sqrt2},
                                   {"sqrt3", std::numbers::sqrt3}}) {
            if (text_.substr(pos_, name.size()) == name) {
                pos_ += name.size();
                return value;
            }
        }
        return number();
    }

    double number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.') {
            fail("expected a number, pi, sqrt2 or sqrt3");
        }
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + text_.size();
        double value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
            fail("expected a number, pi, sqrt2 or sqrt3");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

double parse_angle(std::string_view text) {
    if (text.empty()) {
        throw AngleParseError("empty angle");
    }
    return Parser(text).parse();
}

}  // namespace symgate
