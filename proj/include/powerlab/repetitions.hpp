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
// Fractional powers: exact exponents, occurrences and freeness tests.
//
// A factor f of length L that has period p (f[i] == f[i+p] wherever both are
// defined) is an (L/p)-power. A word is free for a weak threshold a if it has
// no factor of exponent >= a, and free for a strict threshold a+ if it has no
// factor of exponent > a.
//
// The fast paths work on maximal repetitions ("runs"): for each period p every
// interval of length >= 2p with period p contains an alignment (j, j+p) with j
// a multiple of p, so probing those alignments with longest-common-extension
// queries finds every run of exponent >= 2. Thresholds below 2 fall back to a
// quadratic scan of all periodic intervals.

#ifndef POWERLAB_REPETITIONS_HPP
#define POWERLAB_REPETITIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerlab/rational.hpp"
#include "powerlab/word.hpp"

namespace powerlab {

class ExponentThreshold {
public:
    // Rejects thresholds <= 1 with std::invalid_argument.
    ExponentThreshold(std::uint64_t numerator, std::uint64_t denominator, bool strict = false);
    ExponentThreshold(Rational value, bool strict = false)
        : ExponentThreshold(value.numerator(), value.denominator(), strict) {}

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }
    bool strict() const noexcept { return strict_; }
    Rational value() const { return Rational(num_, den_); }

    // Whether a factor of this length with this period is forbidden.
    bool violated_by(std::size_t length, std::size_t period) const noexcept;
    bool forbids(const Rational& exponent) const noexcept;

    // "p/q" for weak, "p/q+" for strict; integers print without "/1".
    std::string to_string() const;

    friend bool operator==(const ExponentThreshold&, const ExponentThreshold&) = default;

private:
    std::uint64_t num_;
    std::uint64_t den_;
    bool strict_;
};

// "7/3", "7/3+", "2+", "3". Throws ParseError.
ExponentThreshold parse_threshold(std::string_view text);

namespace thresholds {
inline ExponentThreshold seven_thirds() { return {7, 3, false}; }
inline ExponentThreshold seven_thirds_plus() { return {7, 3, true}; }
inline ExponentThreshold overlap() { return {2, 1, true}; }
} // namespace thresholds

struct PowerOccurrence {
    std::size_t start = 0;
    std::size_t period = 0;
    std::size_t length = 0;

    Rational exponent() const { return Rational(length, period); }

    friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

// The shortest factor with this period that the threshold forbids.
std::size_t minimal_violation_length(std::size_t period, const ExponentThreshold& t);

struct MaxExponent {
    Rational exponent;
    PowerOccurrence witness;
};

/* Largest exponent over all factors and all of their periods.
 * The witness is the occurrence with the smallest start, then smallest period,
 * among those achieving the maximum. Throws std::invalid_argument on the empty word. */
MaxExponent max_exponent(const BinaryWord& w);

// Brute force over (start, period, length); shares no code with max_exponent.
Rational max_exponent_oracle(const BinaryWord& w);

bool is_power_free(const BinaryWord& w, const ExponentThreshold& t);

// Some forbidden occurrence, if any (not necessarily the leftmost).
std::optional<PowerOccurrence> find_violation(const BinaryWord& w, const ExponentThreshold& t);

/* Every forbidden maximal repetition: for each period the interval is extended
 * as far as it goes in both directions, and an interval that is periodic for
 * several periods is reported once, with its smallest period. Sorted by start,
 * then period. Empty iff the word is free. */
std::vector<PowerOccurrence> find_occurrences(const BinaryWord& w, const ExponentThreshold& t);

// No factor axaxa with a a letter. Direct pattern scan, independent of the run machinery.
bool is_overlap_free(const BinaryWord& w);

/* Whether w·s is free, given that w is. Only repetitions ending at the
 * appended symbol are examined. */
bool freeness_step(const BinaryWord& w, Symbol s, const ExponentThreshold& t);

/* Feeds a word in pieces and checks each piece only for repetitions that end
 * inside it. Once a violation is seen the checker stops accepting input. */
class StreamingChecker {
public:
    explicit StreamingChecker(ExponentThreshold t) : threshold_(t) {}

    bool push(Symbol s);
    bool append(const BinaryWord& chunk);

    bool free() const noexcept { return !violation_.has_value(); }
    const std::optional<PowerOccurrence>& violation() const noexcept { return violation_; }
    std::size_t size() const noexcept { return buffer_.size(); }
    BinaryWord word() const { return buffer_.word(); }
    const ExponentThreshold& threshold() const noexcept { return threshold_; }

private:
    ExponentThreshold threshold_;
    WordBuilder buffer_;
    std::optional<PowerOccurrence> violation_;
};

namespace detail {

// Longest repetition ending at the last symbol that the threshold forbids, if any.
std::optional<PowerOccurrence> suffix_violation(PackedView v, const ExponentThreshold& t);

// A forbidden repetition ending after position `checked` (exclusive end > checked).
std::optional<PowerOccurrence> tail_violation(PackedView v, std::size_t checked, const ExponentThreshold& t);

} // namespace detail

} // namespace powerlab

#endif // POWERLAB_REPETITIONS_HPP
