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
// Morphisms of {0,1}*, their iteration, and the Thue-Morse family.

#ifndef POWERLAB_MORPHISM_HPP
#define POWERLAB_MORPHISM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "powerlab/word.hpp"

namespace powerlab {

/* A morphism is fixed by the images of 0 and 1. Erasing morphisms (an empty
 * image) can be built and applied, but iteration refuses them. */
class BinaryMorphism {
public:
    BinaryMorphism() : BinaryMorphism("0"_w, "1"_w) {}
    BinaryMorphism(BinaryWord image0, BinaryWord image1)
        : image0_(std::move(image0)), image1_(std::move(image1)) {}

    const BinaryWord& image0() const noexcept { return image0_; }
    const BinaryWord& image1() const noexcept { return image1_; }
    const BinaryWord& image(Symbol a) const noexcept { return a == Symbol::Zero ? image0_ : image1_; }

    bool non_erasing() const noexcept { return !image0_.empty() && !image1_.empty(); }
    bool uniform() const noexcept { return image0_.size() == image1_.size(); }

    // "0->w0;1->w1"
    std::string to_string() const;

    friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;

private:
    BinaryWord image0_;
    BinaryWord image1_;
};

namespace morphisms {
// 0 -> 01, 1 -> 10
BinaryMorphism thue_morse();
// 0 -> 1, 1 -> 0
BinaryMorphism exchange();
BinaryMorphism identity();
// The 19-uniform morphism whose fixed point from 0 avoids 7/3+ powers.
BinaryMorphism seebold19();
} // namespace morphisms

/* "0->word;1->word" with optional spaces, or one of the names
 * mu, E, id, h-seebold19. Throws ParseError. */
BinaryMorphism parse_morphism(std::string_view text);

BinaryWord apply(const BinaryMorphism& h, const BinaryWord& w);
// (g o h)(a) = g(h(a))
BinaryMorphism compose(const BinaryMorphism& g, const BinaryMorphism& h);
BinaryMorphism power(const BinaryMorphism& h, unsigned k);

// h(a) begins with a and has length at least 2.
bool is_prolongable(const BinaryMorphism& h, Symbol a);

/* First n symbols of the fixed point of h starting from a, produced by
 * expanding a single growing buffer. Requires h non-erasing and prolongable
 * on a (std::invalid_argument otherwise). */
BinaryWord fixed_point_prefix(const BinaryMorphism& h, Symbol a, std::size_t n);

// Symbol i is the parity of the number of ones in the binary expansion of i.
BinaryWord thue_morse_direct(std::size_t n);

struct MorphismForm {
    enum class Kind { MuPower, EComposeMuPower, Other };

    Kind kind = Kind::Other;
    unsigned k = 0;

    // "MuPower(k)", "EComposeMuPower(k)" or "Other"
    std::string to_string() const;

    friend bool operator==(const MorphismForm&, const MorphismForm&) = default;
};

MorphismForm classify_form(const BinaryMorphism& h);

} // namespace powerlab

#endif // POWERLAB_MORPHISM_HPP
