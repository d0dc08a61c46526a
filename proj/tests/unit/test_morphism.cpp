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

#include <string>
#include <vector>

#include "oracle.hpp"
#include "powerlab/morphism.hpp"

using namespace powerlab;

namespace {

const BinaryMorphism mu = morphisms::thue_morse();
const BinaryMorphism E = morphisms::exchange();

} // namespace

TEST_CASE("named morphisms and flags") {
    CHECK(mu.image0() == "01"_w);
    CHECK(mu.image1() == "10"_w);
    CHECK(morphisms::seebold19().image0() == "0110100110110010110"_w);
    CHECK(morphisms::seebold19().image1() == "1001011001001101001"_w);
    CHECK(morphisms::seebold19().uniform());
    CHECK(BinaryMorphism(""_w, "1"_w).non_erasing() == false);
    CHECK_FALSE(BinaryMorphism("0"_w, "11"_w).uniform());
    CHECK(BinaryMorphism{} == morphisms::identity());
}

TEST_CASE("parse_morphism") {
    CHECK(parse_morphism("mu") == mu);
    CHECK(parse_morphism("E") == E);
    CHECK(parse_morphism("id") == morphisms::identity());
    CHECK(parse_morphism("h-seebold19") == morphisms::seebold19());
    CHECK(parse_morphism("0->01;1->10") == mu);
    CHECK(parse_morphism(" 1 -> 0 ; 0 -> 1 ") == E);
    CHECK(parse_morphism("0->;1->1") == BinaryMorphism(""_w, "1"_w));
    CHECK(parse_morphism(mu.to_string()) == mu);
    CHECK_THROWS_AS(parse_morphism("0->01"), ParseError);
    CHECK_THROWS_AS(parse_morphism("0->01;0->10"), ParseError);
    CHECK_THROWS_AS(parse_morphism("2->01;1->10"), ParseError);
    CHECK_THROWS_AS(parse_morphism("nonsense"), ParseError);
    try {
        parse_morphism("0->0x;1->1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("apply") {
    CHECK(apply(mu, "0110"_w) == "01101001"_w);
    CHECK(apply(mu, ""_w) == ""_w);
    CHECK(apply(morphisms::seebold19(), ""_w) == ""_w);
    CHECK(apply(E, "0011"_w) == "1100"_w);
    const BinaryMorphism h("0"_w, "011"_w);
    const BinaryWord w = "0110"_w;
    CHECK(apply(h, w).size() == w.count(Symbol::Zero) * 1 + w.count(Symbol::One) * 3);
}

TEST_CASE("compose and power") {
    CHECK(compose(E, mu) == BinaryMorphism("10"_w, "01"_w));
    CHECK(compose(mu, E) == BinaryMorphism("10"_w, "01"_w));
    CHECK(compose(morphisms::identity(), morphisms::seebold19()) == morphisms::seebold19());
    CHECK(compose(mu, mu) == BinaryMorphism("0110"_w, "1001"_w));
    CHECK(power(mu, 3).image0() == "01101001"_w);
    CHECK(power(mu, 2).image0() == "0110"_w);
    CHECK(power(morphisms::seebold19(), 0) == morphisms::identity());
}

TEST_CASE("homomorphism property over short words") {
    for (const auto& h : {mu, E, power(mu, 2), morphisms::seebold19()}) {
        for (std::size_t a = 0; a <= 6; ++a) {
            for (const auto& u : all_words(a)) {
                for (std::size_t b = 0; b <= 6; b += 2) {
                    for (const auto& v : all_words(b)) {
                        CHECK(apply(h, u + v) == apply(h, u) + apply(h, v));
                    }
                }
            }
        }
    }
}

TEST_CASE("composition is application in sequence, and E commutes with mu") {
    const BinaryMorphism g("011"_w, "0"_w);
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& w : all_words(n)) {
            CHECK(apply(compose(E, mu), w) == apply(compose(mu, E), w));
            if (n <= 8) {
                CHECK(apply(compose(g, mu), w) == apply(g, apply(mu, w)));
            }
        }
    }
}

TEST_CASE("is_prolongable") {
    CHECK(is_prolongable(mu, Symbol::Zero));
    CHECK(is_prolongable(mu, Symbol::One));
    CHECK_FALSE(is_prolongable(E, Symbol::Zero));
    CHECK_FALSE(is_prolongable(morphisms::identity(), Symbol::Zero));
    CHECK(is_prolongable(morphisms::seebold19(), Symbol::Zero));
}

TEST_CASE("fixed_point_prefix") {
    CHECK(fixed_point_prefix(mu, Symbol::Zero, 8) == "01101001"_w);
    CHECK(fixed_point_prefix(mu, Symbol::One, 8) == "10010110"_w);
    CHECK(fixed_point_prefix(morphisms::seebold19(), Symbol::Zero, 19) == "0110100110110010110"_w);
    CHECK(fixed_point_prefix(mu, Symbol::Zero, 1) == "0"_w);
    CHECK_THROWS_AS(fixed_point_prefix(E, Symbol::Zero, 4), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_prefix(morphisms::identity(), Symbol::Zero, 4), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_prefix(BinaryMorphism("01"_w, ""_w), Symbol::Zero, 4), std::invalid_argument);
}

TEST_CASE("fixed point prefixes are stable and match iterated images") {
    const BinaryMorphism h = morphisms::seebold19();
    const BinaryWord long_prefix = fixed_point_prefix(h, Symbol::Zero, 7000);
    for (std::size_t m : {1u, 18u, 19u, 20u, 361u, 6859u}) {
        CHECK(fixed_point_prefix(h, Symbol::Zero, m) == long_prefix.prefix(m));
    }
    CHECK(apply(power(h, 2), "0"_w) == long_prefix.prefix(361));
    // h of a prefix is again a prefix.
    CHECK(apply(h, long_prefix.prefix(300)) == long_prefix.prefix(300 * 19).prefix(5700));
    const BinaryMorphism g("001"_w, "10"_w);
    const BinaryWord gp = fixed_point_prefix(g, Symbol::Zero, 500);
    CHECK(apply(power(g, 12), "0"_w).prefix(500) == gp);
}

TEST_CASE("thue_morse_direct") {
    CHECK(thue_morse_direct(8) == "01101001"_w);
    CHECK(thue_morse_direct(1) == "0"_w);
    CHECK(thue_morse_direct(16) == "0110100110010110"_w);
    CHECK(thue_morse_direct(0).empty());
    CHECK(fixed_point_prefix(mu, Symbol::Zero, 1 << 12) == thue_morse_direct(1 << 12));
}

TEST_CASE("classify_form") {
    CHECK(classify_form(morphisms::identity()) == MorphismForm{MorphismForm::Kind::MuPower, 0});
    CHECK(classify_form(BinaryMorphism("10"_w, "01"_w)).to_string() == "EComposeMuPower(1)");
    CHECK(classify_form(morphisms::seebold19()).to_string() == "Other");
    CHECK(classify_form(E).to_string() == "EComposeMuPower(0)");
    CHECK(classify_form(parse_morphism("0->01;1->10")).to_string() == "MuPower(1)");
    CHECK(classify_form(BinaryMorphism("0110"_w, "0110"_w)).kind == MorphismForm::Kind::Other);
    CHECK(classify_form(BinaryMorphism("011"_w, "100"_w)).kind == MorphismForm::Kind::Other);
    CHECK(classify_form(BinaryMorphism(""_w, ""_w)).kind == MorphismForm::Kind::Other);
    for (unsigned k = 0; k <= 10; ++k) {
        CHECK(classify_form(power(mu, k)) == MorphismForm{MorphismForm::Kind::MuPower, k});
        CHECK(classify_form(compose(E, power(mu, k))) == MorphismForm{MorphismForm::Kind::EComposeMuPower, k});
    }
}
