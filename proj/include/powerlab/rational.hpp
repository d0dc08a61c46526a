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
// Non-negative exact fractions, enough for exponents length/period.

#ifndef POWERLAB_RATIONAL_HPP
#define POWERLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace powerlab {

namespace detail {
__extension__ using uint128 = unsigned __int128;
} // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    // Reduces to lowest terms; a zero denominator throws std::domain_error.
    Rational(std::uint64_t numerator, std::uint64_t denominator = 1);

    constexpr std::uint64_t numerator() const noexcept { return num_; }
    constexpr std::uint64_t denominator() const noexcept { return den_; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const auto lhs = static_cast<detail::uint128>(a.num_) * b.den_;
        const auto rhs = static_cast<detail::uint128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

// Accepts "p/q" or "p" with decimal digits; throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace powerlab

#endif // POWERLAB_RATIONAL_HPP
