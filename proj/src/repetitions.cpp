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

#include "powerlab/repetitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace powerlab {

ExponentThreshold::ExponentThreshold(std::uint64_t numerator, std::uint64_t denominator, bool strict)
    : num_(numerator), den_(denominator), strict_(strict) {
    if (denominator == 0) {
        throw std::invalid_argument("threshold denominator must be positive");
    }
    if (numerator <= denominator) {
        throw std::invalid_argument("threshold " + std::to_string(numerator) + "/" + std::to_string(denominator) +
                                    " must exceed 1");
    }
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

bool ExponentThreshold::violated_by(std::size_t length, std::size_t period) const noexcept {
    const auto lhs = static_cast<detail::uint128>(length) * den_;
    const auto rhs = static_cast<detail::uint128>(num_) * period;
    return strict_ ? lhs > rhs : lhs >= rhs;
}

bool ExponentThreshold::forbids(const Rational& exponent) const noexcept {
    const auto cmp = exponent <=> Rational(num_, den_);
    return strict_ ? cmp > 0 : cmp >= 0;
}

std::string ExponentThreshold::to_string() const {
    return Rational(num_, den_).to_string() + (strict_ ? "+" : "");
}

ExponentThreshold parse_threshold(std::string_view text) {
    bool strict = false;
    if (!text.empty() && text.back() == '+') {
        strict = true;
        text.remove_suffix(1);
    }
    const Rational value = parse_rational(text);
    if (value <= Rational(1)) {
        throw ParseError("threshold " + value.to_string() + " must exceed 1", 0);
    }
    return ExponentThreshold(value, strict);
}

std::size_t minimal_violation_length(std::size_t period, const ExponentThreshold& t) {
    const auto scaled = static_cast<detail::uint128>(t.numerator()) * period;
    const auto q = scaled / t.denominator();
    const auto r = scaled % t.denominator();
    if (t.strict()) {
        return static_cast<std::size_t>(q + 1);
    }
    return static_cast<std::size_t>(r == 0 ? q : q + 1);
}

namespace {

using detail::PackedView;

// Number of k in [0, limit) with v[i+k] == v[j+k].
std::size_t forward_extension(PackedView v, std::size_t i, std::size_t j, std::size_t limit) {
    std::size_t k = 0;
    while (k < limit) {
        const std::uint64_t d = v.load64(static_cast<std::int64_t>(i + k)) ^ v.load64(static_cast<std::int64_t>(j + k));
        if (d != 0) {
            k += static_cast<std::size_t>(std::countr_zero(d));
            break;
        }
        k += 64;
    }
    return std::min(k, limit);
}

// Number of k in [0, limit) with v[i-k] == v[j-k].
std::size_t backward_extension(PackedView v, std::size_t i, std::size_t j, std::size_t limit) {
    std::size_t k = 0;
    while (k < limit) {
        const auto a = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(k) - 63;
        const auto b = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k) - 63;
        const std::uint64_t d = v.load64(a) ^ v.load64(b);
        if (d != 0) {
            k += static_cast<std::size_t>(std::countl_zero(d));
            break;
        }
        k += 64;
    }
    return std::min(k, limit);
}

struct Run {
    std::size_t start;
    std::size_t end;
    std::size_t period;
};

/* Calls visit(run) for every maximal repetition of exponent >= 2 that ends
 * after position `checked`, possibly including some earlier ones. Stops early
 * when visit returns true. */
template <typename Visit>
bool for_each_run(PackedView v, std::size_t checked, Visit&& visit) {
    const std::size_t n = v.size;
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t j = checked + 1 > 2 * p ? checked + 1 - 2 * p : 0;
        j = (j + p - 1) / p * p;
        while (j + p < n) {
            const std::size_t ahead = forward_extension(v, j, j + p, n - (j + p));
            const std::size_t behind = j == 0 ? 0 : backward_extension(v, j - 1, j + p - 1, j);
            const Run run{j - behind, j + p + ahead, p};
            if (run.end - run.start >= 2 * p && visit(run)) {
                return true;
            }
            // Alignments before end - p lie inside the same run.
            const std::size_t next = std::max(j + p, run.end + 1 > p ? run.end + 1 - p : 0);
            j = (next + p - 1) / p * p;
        }
    }
    return false;
}

/* Calls visit(run) for every maximal interval [start, end) that has period p
 * and is longer than p, for all p. Quadratic. */
template <typename Visit>
bool for_each_periodic_interval(PackedView v, Visit&& visit) {
    const std::size_t n = v.size;
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t i = 0;
        while (i + p < n) {
            if (v.at(i) != v.at(i + p)) {
                ++i;
                continue;
            }
            const std::size_t ahead = forward_extension(v, i, i + p, n - (i + p));
            if (visit(Run{i, i + p + ahead, p})) {
                return true;
            }
            i += ahead;
        }
    }
    return false;
}

bool below_two(const ExponentThreshold& t) { return t.numerator() < 2 * t.denominator(); }

PowerOccurrence to_occurrence(const Run& r) { return {r.start, r.period, r.end - r.start}; }

// Drops repeats of one interval under a larger period, then sorts.
std::vector<PowerOccurrence> normalize(std::vector<Run> runs) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_interval;
    for (const auto& r : runs) {
        auto [it, inserted] = by_interval.try_emplace({r.start, r.end}, r.period);
        if (!inserted) {
            it->second = std::min(it->second, r.period);
        }
    }
    std::vector<PowerOccurrence> out;
    out.reserve(by_interval.size());
    for (const auto& [interval, period] : by_interval) {
        out.push_back({interval.first, period, interval.second - interval.first});
    }
    std::sort(out.begin(), out.end(), [](const PowerOccurrence& a, const PowerOccurrence& b) {
        return std::pair(a.start, a.period) < std::pair(b.start, b.period);
    });
    return out;
}

} // namespace

namespace detail {

std::optional<PowerOccurrence> suffix_violation(PackedView v, const ExponentThreshold& t) {
    const std::size_t n = v.size;
    for (std::size_t p = 1; p < n && t.violated_by(n, p); ++p) {
        const std::size_t length = p + backward_extension(v, n - 1, n - 1 - p, n - p);
        if (t.violated_by(length, p)) {
            return PowerOccurrence{n - length, p, length};
        }
    }
    return std::nullopt;
}

std::optional<PowerOccurrence> tail_violation(PackedView v, std::size_t checked, const ExponentThreshold& t) {
    if (below_two(t)) {
        for (std::size_t end = checked + 1; end <= v.size; ++end) {
            if (auto occ = suffix_violation(PackedView{v.blocks, end}, t)) {
                return occ;
            }
        }
        return std::nullopt;
    }
    std::optional<PowerOccurrence> found;
    for_each_run(v, checked, [&](const Run& r) {
        if (t.violated_by(r.end - r.start, r.period)) {
            found = to_occurrence(r);
            return true;
        }
        return false;
    });
    return found;
}

} // namespace detail

MaxExponent max_exponent(const BinaryWord& w) {
    if (w.empty()) {
        throw std::invalid_argument("max_exponent of the empty word");
    }
    // Exponent 1 is always attained by a single letter.
    MaxExponent best{Rational(1), PowerOccurrence{0, 1, 1}};
    auto consider = [&](const Run& r) {
        const PowerOccurrence occ = to_occurrence(r);
        const Rational e = occ.exponent();
        const auto cmp = e <=> best.exponent;
        if (cmp > 0 || (cmp == 0 && std::pair(occ.start, occ.period) < std::pair(best.witness.start, best.witness.period))) {
            best = {e, occ};
        }
        return false;
    };
    const auto v = w.view();
    for_each_run(v, 0, consider);
    if (best.exponent < Rational(2)) {
        for_each_periodic_interval(v, consider);
    }
    return best;
}

Rational max_exponent_oracle(const BinaryWord& w) {
    const std::size_t n = w.size();
    if (n == 0) {
        throw std::invalid_argument("max_exponent_oracle of the empty word");
    }
    std::uint64_t best_len = 1;
    std::uint64_t best_period = 1;
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t period = 1; start + period <= n; ++period) {
            std::size_t length = period;
            while (start + length < n && w[start + length] == w[start + length - period]) {
                ++length;
            }
            if (static_cast<detail::uint128>(length) * best_period >
                static_cast<detail::uint128>(best_len) * period) {
                best_len = length;
                best_period = period;
            }
        }
    }
    return Rational(best_len, best_period);
}

bool is_power_free(const BinaryWord& w, const ExponentThreshold& t) { return !find_violation(w, t).has_value(); }

std::optional<PowerOccurrence> find_violation(const BinaryWord& w, const ExponentThreshold& t) {
    if (w.empty()) {
        return std::nullopt;
    }
    return detail::tail_violation(w.view(), 0, t);
}

std::vector<PowerOccurrence> find_occurrences(const BinaryWord& w, const ExponentThreshold& t) {
    std::vector<Run> runs;
    auto collect = [&](const Run& r) {
        if (t.violated_by(r.end - r.start, r.period)) {
            runs.push_back(r);
        }
        return false;
    };
    if (below_two(t)) {
        for_each_periodic_interval(w.view(), collect);
    } else {
        for_each_run(w.view(), 0, collect);
    }
    return normalize(std::move(runs));
}

bool is_overlap_free(const BinaryWord& w) {
    // axaxa with |ax| = p is a stretch of p + 1 consecutive positions i with w[i] == w[i + p].
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
        std::size_t matched = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            matched = w[i] == w[i + p] ? matched + 1 : 0;
            if (matched == p + 1) {
                return false;
            }
        }
    }
    return true;
}

bool freeness_step(const BinaryWord& w, Symbol s, const ExponentThreshold& t) {
    WordBuilder b(w);
    b.push_back(s);
    return !detail::suffix_violation(b.view(), t).has_value();
}

bool StreamingChecker::push(Symbol s) {
    if (violation_) {
        return false;
    }
    buffer_.push_back(s);
    violation_ = detail::suffix_violation(buffer_.view(), threshold_);
    return !violation_;
}

bool StreamingChecker::append(const BinaryWord& chunk) {
    if (violation_) {
        return false;
    }
    const std::size_t checked = buffer_.size();
    buffer_.append(chunk);
    if (buffer_.size() > checked) {
        violation_ = detail::tail_violation(buffer_.view(), checked, threshold_);
    }
    return !violation_;
}

} // namespace powerlab
