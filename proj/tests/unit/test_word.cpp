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

#include <random>
#include <string>

#include "oracle.hpp"
#include "powerlab/rational.hpp"
#include "powerlab/word.hpp"

using namespace powerlab;

TEST_CASE("parse and render round trip") {
    CHECK(parse_word("011").to_string() == "011");
    CHECK(parse_word("").empty());
    CHECK(parse_word("").size() == 0);
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 63u, 64u, 65u, 127u, 128u, 129u, 1000u}) {
        const std::string s = oracle::random_string(rng, n);
        CHECK(parse_word(s).to_string() == s);
    }
}

TEST_CASE("parse errors name the offending index") {
    try {
        parse_word("012");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_word("x"), ParseError);
    CHECK_THROWS_AS(parse_word("01 1"), ParseError);
}

TEST_CASE("indexing and counts") {
    const BinaryWord w = "0110"_w;
    CHECK(w.size() == 4);
    CHECK(w[0] == Symbol::Zero);
    CHECK(w[1] == Symbol::One);
    CHECK(w.count(Symbol::One) == 2);
    CHECK(w.count(Symbol::Zero) == 2);
}

TEST_CASE("complement") {
    CHECK(complement("01101001"_w) == "10010110"_w);
    CHECK(complement(""_w) == ""_w);
    CHECK(complement("000"_w) == "111"_w);
}

TEST_CASE("reverse") {
    CHECK(reverse("100"_w) == "001"_w);
    CHECK(reverse(""_w) == ""_w);
    CHECK(reverse("0110"_w) == "0110"_w);
}

TEST_CASE("contains_subword") {
    CHECK(contains_subword("1001001"_w, "0010"_w));
    CHECK_FALSE(contains_subword("0110"_w, "00"_w));
    CHECK(contains_subword("0110"_w, ""_w));
    CHECK(contains_subword(""_w, ""_w));
    CHECK_FALSE(contains_subword(""_w, "0"_w));
    CHECK_FALSE(contains_subword("01"_w, "010"_w));
}

TEST_CASE("contains_subword agrees with std::string::find across block boundaries") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::string hay = oracle::random_string(rng, 1 + rng() % 300);
        const std::string needle = oracle::random_string(rng, 1 + rng() % 12);
        CHECK(contains_subword(parse_word(hay), parse_word(needle)) == (hay.find(needle) != std::string::npos));
        // A long needle cut from the haystack itself.
        const std::size_t start = rng() % hay.size();
        const std::size_t len = 1 + rng() % (hay.size() - start);
        CHECK(contains_subword(parse_word(hay), parse_word(hay.substr(start, len))));
    }
}

TEST_CASE("involutions and monotonicity over all words up to length 10") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& w : all_words(n)) {
            CHECK(complement(complement(w)) == w);
            CHECK(reverse(reverse(w)) == w);
            CHECK(contains_subword(w, w));
            CHECK(contains_subword("1"_w + w + "0"_w, w));
        }
    }
}

TEST_CASE("factor, prefix, suffix and concatenation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string s = oracle::random_string(rng, 1 + rng() % 200);
        const BinaryWord w = parse_word(s);
        const std::size_t start = rng() % s.size();
        const std::size_t len = rng() % (s.size() - start + 1);
        CHECK(w.factor(start, len).to_string() == s.substr(start, len));
        CHECK(w.prefix(len).to_string() == s.substr(0, len));
        CHECK(w.suffix(len).to_string() == s.substr(s.size() - len));
        CHECK((w.prefix(start) + w.suffix(s.size() - start)) == w);
        CHECK(w.starts_with(w.prefix(len)));
        CHECK(w.ends_with(w.suffix(len)));
    }
    CHECK_THROWS(("01"_w).factor(1, 2));
    CHECK(("01"_w + Symbol::One) == "011"_w);
    CHECK((Symbol::One + "01"_w) == "101"_w);
    CHECK(repeat("01"_w, 3) == "010101"_w);
}

TEST_CASE("ordering is lexicographic") {
    CHECK("0"_w < "1"_w);
    CHECK("01"_w < "1"_w);
    CHECK(""_w < "0"_w);
    CHECK("0110"_w < "0111"_w);
    const auto words = all_words(5);
    CHECK(words.size() == 32);
    for (std::size_t i = 1; i < words.size(); ++i) {
        CHECK(words[i - 1] < words[i]);
    }
    CHECK(word_from_bits(0b011, 3) == "011"_w);
}

TEST_CASE("WordBuilder push and pop") {
    WordBuilder b;
    for (int i = 0; i < 130; ++i) {
        b.push_back(symbol_of(i % 3 == 0));
    }
    CHECK(b.size() == 130);
    for (int i = 0; i < 70; ++i) {
        b.pop_back();
    }
    const BinaryWord w = std::move(b).build();
    CHECK(w.size() == 60);
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i] == symbol_of(i % 3 == 0));
    }
    // Popped bits must not leak into equality.
    WordBuilder c;
    c.push_back(Symbol::One);
    c.pop_back();
    c.push_back(Symbol::Zero);
    CHECK(c.word() == "0"_w);
}

TEST_CASE("large words keep O(1) access") {
    WordBuilder b;
    b.reserve(1000000);
    for (std::size_t i = 0; i < 1000000; ++i) {
        b.push_back(symbol_of((i * 2654435761u) >> 7 & 1));
    }
    const BinaryWord w = std::move(b).build();
    CHECK(w.size() == 1000000);
    CHECK(w[999999] == symbol_of((999999ull * 2654435761u) >> 7 & 1));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(14, 6) == Rational(7, 3));
    CHECK(Rational(7, 3).to_string() == "7/3");
    CHECK(Rational(6, 2).to_string() == "3");
    CHECK(Rational(7, 3) > Rational(2, 1));
    CHECK(Rational(7, 3) < Rational(5, 2));
    CHECK(Rational(9, 4) < Rational(7, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("7/"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/3"), ParseError);
}
