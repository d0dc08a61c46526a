/* Copyright 2026 The powerlab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "powerlab/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "powerlab/word.hpp"

namespace powerlab {

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::uint64_t parse_unsigned(std::string_view text, std::size_t offset) {
    if (text.empty()) {
        throw ParseError("expected digits at index " + std::to_string(offset), offset);
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - text.data());
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("number out of range at index " + std::to_string(offset), offset);
    }
    if (ec != std::errc() || consumed != text.size()) {
        const std::size_t bad = offset + consumed;
        throw ParseError("unexpected character at index " + std::to_string(bad), bad);
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_unsigned(text, 0));
    }
    const std::uint64_t p = parse_unsigned(text.substr(0, slash), 0);
    const std::uint64_t q = parse_unsigned(text.substr(slash + 1), slash + 1);
    if (q == 0) {
        throw ParseError("zero denominator at index " + std::to_string(slash + 1), slash + 1);
    }
    return Rational(p, q);
}

} // namespace powerlab
