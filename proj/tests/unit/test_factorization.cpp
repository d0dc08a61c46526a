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
#include <string>
#include <tuple>
#include <vector>

#include "oracle.hpp"
#include "powerlab/enumeration.hpp"
#include "powerlab/factorization.hpp"
#include "powerlab/morphism.hpp"

using namespace powerlab;

namespace {

const ExponentThreshold weak73 = thresholds::seven_thirds();

bool contains(const std::vector<MuFactorization>& fs, const MuFactorization& f) {
    return std::find(fs.begin(), fs.end(), f) != fs.end();
}

} // namespace

TEST_CASE("admissible borders") {
    const auto& b = admissible_borders();
    CHECK(b.size() == 5);
    CHECK(b[0] == ""_w);
    CHECK(b[3] == "00"_w);
    CHECK(b[4] == "11"_w);
}

TEST_CASE("inverse_mu") {
    CHECK(inverse_mu("01101001"_w) == "0110"_w);
    CHECK(inverse_mu(""_w) == ""_w);
    CHECK_FALSE(inverse_mu("00"_w).has_value());
    CHECK_FALSE(inverse_mu("011"_w).has_value());
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& w : all_words(n)) {
            CHECK(inverse_mu(apply(morphisms::thue_morse(), w)) == w);
        }
    }
}

TEST_CASE("factorize examples") {
    const auto tm = factorize("01101001"_w, weak73);
    REQUIRE_FALSE(tm.empty());
    CHECK(tm.front() == MuFactorization{""_w, "0110"_w, ""_w});

    const auto single = factorize("0"_w, weak73);
    CHECK(contains(single, {""_w, ""_w, "0"_w}));
    CHECK(contains(single, {"0"_w, ""_w, ""_w}));

    // 0 mu(01) 0 = 001100 is not this word; the valid splits are these two.
    const auto f = factorize("00100"_w, weak73);
    CHECK(f.size() == 2);
    CHECK(contains(f, {"0"_w, "0"_w, "00"_w}));
    CHECK(contains(f, {"00"_w, "1"_w, "0"_w}));
    CHECK_FALSE(contains(f, {"0"_w, "01"_w, "0"_w}));
}

TEST_CASE("factorize preconditions") {
    CHECK_THROWS_AS(factorize("000"_w, weak73), std::invalid_argument);
    CHECK_THROWS_AS(factorize("01"_w, ExponentThreshold(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(factorize("01"_w, ExponentThreshold(5, 2)), std::invalid_argument);
    CHECK_NOTHROW(factorize("01"_w, thresholds::seven_thirds_plus()));
    CHECK_NOTHROW(factorize("01"_w, ExponentThreshold(9, 4)));
}

TEST_CASE("factorize matches the brute-force oracle on every free word up to length 16") {
    for (const auto& t : {weak73, thresholds::seven_thirds_plus()}) {
        for (std::size_t n = 0; n <= 16; ++n) {
            for (const auto& s : oracle::free_strings(n, t.numerator(), t.denominator(), t.strict())) {
                const BinaryWord w = parse_word(s);
                const auto fs = factorize(w, t);
                const auto expected = oracle::factorizations(s, t.numerator(), t.denominator(), t.strict());
                if (!t.strict()) {
                    CHECK_FALSE(fs.empty());
                }
                REQUIRE(fs.size() == expected.size());
                for (const auto& f : fs) {
                    CHECK(f.reconstruct() == w);
                    CHECK(is_power_free(f.y, t));
                    const auto key = std::make_tuple(f.u.to_string(), f.y.to_string(), f.v.to_string());
                    CHECK(std::find(expected.begin(), expected.end(), key) != expected.end());
                }
                for (std::size_t k = 1; k < fs.size(); ++k) {
                    const auto prev = std::make_pair(fs[k - 1].u.size(), fs[k - 1].v.size());
                    const auto cur = std::make_pair(fs[k].u.size(), fs[k].v.size());
                    CHECK(prev <= cur);
                }
            }
        }
    }
}

TEST_CASE("strict thresholds admit words with no factorization") {
    // An exact 7/3-power is allowed at 7/3+ but has no admissible split.
    CHECK(factorize("1001001"_w, thresholds::seven_thirds_plus()).empty());
    CHECK(oracle::factorizations("1001001", 7, 3, true).empty());
}

TEST_CASE("decomposition tower examples") {
    const auto tower = decomposition_tower("01101001"_w, weak73, 1);
    CHECK(tower.levels.size() == 3);
    for (const auto& level : tower.levels) {
        CHECK(level == TowerLevel{""_w, ""_w});
    }
    CHECK(tower.core == "0"_w);
    CHECK(tower.reconstruct() == "01101001"_w);

    const auto trivial = decomposition_tower("0"_w, weak73);
    CHECK(trivial.levels.empty());
    CHECK(trivial.core == "0"_w);
    CHECK_THROWS_AS(decomposition_tower("000"_w, weak73), std::invalid_argument);
}

TEST_CASE("towers reconstruct and shrink by at most the border bound") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (const auto& w : all_words_with_property(n, [](const BinaryWord& x) { return is_power_free(x, weak73); })) {
            for (std::size_t min_core : {0u, 1u, 7u}) {
                const auto tower = decomposition_tower(w, weak73, min_core);
                CHECK(tower.reconstruct() == w);
                CHECK(tower.core.size() <= min_core);
                const auto cores = tower.cores();
                REQUIRE(cores.size() == tower.levels.size() + 1);
                CHECK(cores.front() == w);
                CHECK(cores.back() == tower.core);
                for (std::size_t i = 0; i + 1 < cores.size(); ++i) {
                    CHECK(2 * cores[i + 1].size() + 4 >= cores[i].size());
                    CHECK(cores[i + 1].size() < cores[i].size());
                    CHECK(is_power_free(cores[i + 1], weak73));
                }
            }
        }
    }
}

TEST_CASE("towers of length-52 free words reach depth three with a core of length at least three") {
    EnumerationQuery q;
    q.length = 52;
    std::size_t checked = 0;
    for_each_word(q, [&](const BinaryWord& w) {
        if (checked++ % 50 != 0) {
            return;
        }
        const auto tower = decomposition_tower(w, weak73);
        REQUIRE(tower.levels.size() >= 3);
        CHECK(tower.cores()[3].size() >= 3);
        CHECK(tower.reconstruct() == w);
    });
    CHECK(checked == 1060);
}
