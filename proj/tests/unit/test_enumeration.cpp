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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "powerlab/enumeration.hpp"

using namespace powerlab;

namespace {

const ExponentThreshold weak73 = thresholds::seven_thirds();
const ExponentThreshold strict73 = thresholds::seven_thirds_plus();

// Repetitions ending at the last symbol only, checked directly on a string.
bool naive_suffix_free(const std::string& s, const ExponentThreshold& t) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t len = p;
        while (len < n && s[n - 1 - len] == s[n - 1 - len + p]) {
            ++len;
        }
        const auto lhs = len * t.denominator();
        const auto rhs = t.numerator() * p;
        if (t.strict() ? lhs > rhs : lhs >= rhs) {
            return false;
        }
    }
    return true;
}

void naive_counts(std::string& s, std::size_t target, const ExponentThreshold& t, std::vector<std::uint64_t>& out) {
    ++out[s.size()];
    if (s.size() == target) {
        return;
    }
    for (char c : {'0', '1'}) {
        s.push_back(c);
        if (naive_suffix_free(s, t)) {
            naive_counts(s, target, t, out);
        }
        s.pop_back();
    }
}

std::vector<std::string> strings(const std::vector<BinaryWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) {
        out.push_back(w.to_string());
    }
    return out;
}

} // namespace

TEST_CASE("enumerate examples") {
    EnumerationQuery q;
    q.length = 6;
    q.excluded_prefixes = {"11"_w};
    q.excluded_suffixes = {"11"_w};
    CHECK(enumerate(q).size() == 13);

    EnumerationQuery strict;
    strict.length = 6;
    strict.threshold = strict73;
    CHECK(enumerate(strict).size() == 20);

    EnumerationQuery cubes;
    cubes.length = 1;
    cubes.threshold = ExponentThreshold(3, 1);
    CHECK(strings(enumerate(cubes)) == std::vector<std::string>{"0", "1"});

    EnumerationQuery empty;
    CHECK(strings(enumerate(empty)) == std::vector<std::string>{""});
}

TEST_CASE("count examples") {
    const auto c = count(0, 4, weak73);
    CHECK(c.at(0) == 1);
    CHECK(c.at(3) == 6);
    CHECK(c.at(4) == 10);
    CHECK(count(5, 4, weak73).empty());
}

TEST_CASE("counts agree with brute force up to length 14") {
    for (const auto& t : {weak73, strict73, ExponentThreshold(2, 1, true), ExponentThreshold(5, 2)}) {
        const auto table = count(0, 14, t);
        for (std::size_t n = 0; n <= 14; ++n) {
            const auto expected = oracle::free_strings(n, t.numerator(), t.denominator(), t.strict()).size();
            CHECK(table.at(n) == expected);
        }
    }
}

TEST_CASE("enumerated words equal the brute-force list in order") {
    for (std::size_t n = 0; n <= 12; ++n) {
        EnumerationQuery q;
        q.length = n;
        CHECK(strings(enumerate(q)) == oracle::free_strings(n, 7, 3, false));
    }
}

TEST_CASE("counts at longer lengths match an independent string search") {
    std::vector<std::uint64_t> naive(53, 0);
    std::string s;
    naive_counts(s, 52, weak73, naive);
    const auto table = count(0, 52, weak73);
    for (std::size_t n = 0; n <= 52; ++n) {
        CHECK(table.at(n) == naive[n]);
    }
    // Frozen from the independent search above.
    CHECK(naive[20] == 172);
    CHECK(naive[52] == 1060);
}

TEST_CASE("filters") {
    EnumerationQuery q;
    q.length = 10;
    q.required_prefix = "01"_w;
    q.required_suffix = "10"_w;
    for (const auto& w : enumerate(q)) {
        CHECK(w.starts_with("01"_w));
        CHECK(w.ends_with("10"_w));
    }
    q.required_prefix.reset();
    q.required_suffix.reset();
    q.excluded_prefixes = {"0"_w, "111"_w};
    for (const auto& w : enumerate(q)) {
        CHECK(w[0] == Symbol::One);
    }
    q.excluded_prefixes.clear();
    q.first_symbol = Symbol::Zero;
    const auto zeros = enumerate(q);
    q.first_symbol.reset();
    CHECK(2 * zeros.size() == enumerate(q).size());

    EnumerationQuery bad;
    bad.length = 2;
    bad.required_prefix = "010"_w;
    CHECK_THROWS_AS(enumerate(bad), std::invalid_argument);
}

TEST_CASE("filters match the census predicate over all words") {
    const auto by_filter = [] {
        EnumerationQuery q;
        q.length = 6;
        q.excluded_prefixes = {"11"_w};
        q.excluded_suffixes = {"11"_w};
        return enumerate(q);
    }();
    const auto by_predicate = all_words_with_property(6, [](const BinaryWord& w) {
        return is_power_free(w, weak73) && !w.starts_with("11"_w) && !w.ends_with("11"_w);
    });
    CHECK(by_filter == by_predicate);
}

TEST_CASE("complement, reversal and prefix closure") {
    for (const auto& t : {weak73, strict73}) {
        std::set<std::string> previous{""};
        for (std::size_t n = 1; n <= 16; ++n) {
            EnumerationQuery q;
            q.length = n;
            q.threshold = t;
            const auto words = strings(enumerate(q));
            const std::set<std::string> set(words.begin(), words.end());
            CHECK(words.size() % 2 == 0);
            for (const auto& w : words) {
                CHECK(set.count(oracle::complement(w)) == 1);
                CHECK(set.count(std::string(w.rbegin(), w.rend())) == 1);
                CHECK(previous.count(w.substr(0, n - 1)) == 1);
            }
            previous = set;
        }
    }
}

TEST_CASE("parallel runs are identical to sequential runs") {
    for (unsigned workers : {2u, 3u, 4u}) {
        for (std::size_t split : {1u, 4u, 8u, 30u}) {
            EnumerationQuery q;
            q.length = 30;
            EnumerationOptions o;
            o.workers = workers;
            o.split_depth = split;
            CHECK(enumerate(q, o) == enumerate(q));
            CountOptions c;
            c.workers = workers;
            c.split_depth = split;
            CHECK(count(0, 30, weak73, c) == count(0, 30, weak73));
        }
    }
}

TEST_CASE("symmetry-reduced counts equal unreduced counts") {
    for (const auto& t : {weak73, strict73}) {
        CountOptions reduced;
        reduced.symmetry_reduced = true;
        CHECK(count(0, 20, t, reduced) == count(0, 20, t));
        reduced.workers = 3;
        CHECK(count(0, 20, t, reduced) == count(0, 20, t));
    }
}

TEST_CASE("all_words_with_property") {
    const auto all = all_words_with_property(2, [](const BinaryWord& w) {
        return is_power_free(w, ExponentThreshold(3, 1));
    });
    CHECK(strings(all) == std::vector<std::string>{"00", "01", "10", "11"});
    const auto cubes = all_words_with_property(4, [](const BinaryWord& w) { return contains_subword(w, "000"_w); });
    CHECK(strings(cubes) == std::vector<std::string>{"0000", "0001", "1000"});
    CHECK_THROWS_AS(all_words_with_property(25, [](const BinaryWord&) { return true; }), std::invalid_argument);
    CHECK(all_words_with_property(3, [](const BinaryWord&) { return true; }, 3).size() == 8);
}

TEST_CASE("for_each_word streams the same words as enumerate") {
    EnumerationQuery q;
    q.length = 18;
    q.threshold = strict73;
    std::vector<BinaryWord> streamed;
    for_each_word(q, [&](const BinaryWord& w) { streamed.push_back(w); });
    CHECK(streamed == enumerate(q));
}
