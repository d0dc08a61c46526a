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

#include "powerlab/morphism.hpp"

#include <bit>
#include <stdexcept>

namespace powerlab {

std::string BinaryMorphism::to_string() const {
    return "0->" + image0_.to_string() + ";1->" + image1_.to_string();
}

namespace morphisms {

BinaryMorphism thue_morse() { return {"01"_w, "10"_w}; }
BinaryMorphism exchange() { return {"1"_w, "0"_w}; }
BinaryMorphism identity() { return {"0"_w, "1"_w}; }
BinaryMorphism seebold19() { return {"0110100110110010110"_w, "1001011001001101001"_w}; }

} // namespace morphisms

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

BinaryMorphism parse_morphism(std::string_view text) {
    const std::string_view name = trim(text);
    if (name == "mu") {
        return morphisms::thue_morse();
    }
    if (name == "E") {
        return morphisms::exchange();
    }
    if (name == "id") {
        return morphisms::identity();
    }
    if (name == "h-seebold19") {
        return morphisms::seebold19();
    }

    BinaryWord images[2];
    bool seen[2] = {false, false};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view rule = text.substr(pos, end - pos);
        const std::size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos) {
            throw ParseError("expected 'a->word' at index " + std::to_string(pos), pos);
        }
        const std::string_view letter = trim(rule.substr(0, arrow));
        if (letter != "0" && letter != "1") {
            throw ParseError("expected letter 0 or 1 at index " + std::to_string(pos), pos);
        }
        const int a = letter == "0" ? 0 : 1;
        if (seen[a]) {
            throw ParseError("duplicate rule for letter " + std::string(letter) + " at index " + std::to_string(pos),
                             pos);
        }
        const std::size_t body_start = pos + arrow + 2;
        std::string_view body = rule.substr(arrow + 2);
        std::size_t lead = 0;
        while (lead < body.size() && body[lead] == ' ') {
            ++lead;
        }
        body = trim(body);
        try {
            images[a] = parse_word(body);
        } catch (const ParseError& e) {
            const std::size_t at = body_start + lead + e.position();
            throw ParseError("invalid character in image of " + std::string(letter) + " at index " +
                                 std::to_string(at),
                             at);
        }
        seen[a] = true;
        pos = end + 1;
    }
    if (!seen[0] || !seen[1]) {
        throw ParseError("morphism must give images for both 0 and 1", text.size());
    }
    return {images[0], images[1]};
}

BinaryWord apply(const BinaryMorphism& h, const BinaryWord& w) {
    WordBuilder out;
    out.reserve(w.count(Symbol::Zero) * h.image0().size() + w.count(Symbol::One) * h.image1().size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.append(h.image(w[i]));
    }
    return std::move(out).build();
}

BinaryMorphism compose(const BinaryMorphism& g, const BinaryMorphism& h) {
    return {apply(g, h.image0()), apply(g, h.image1())};
}

BinaryMorphism power(const BinaryMorphism& h, unsigned k) {
    BinaryMorphism result = morphisms::identity();
    for (unsigned i = 0; i < k; ++i) {
        result = compose(h, result);
    }
    return result;
}

bool is_prolongable(const BinaryMorphism& h, Symbol a) {
    const BinaryWord& img = h.image(a);
    return img.size() >= 2 && img[0] == a;
}

BinaryWord fixed_point_prefix(const BinaryMorphism& h, Symbol a, std::size_t n) {
    if (!h.non_erasing()) {
        throw std::invalid_argument("fixed point requested for erasing morphism " + h.to_string());
    }
    if (!is_prolongable(h, a)) {
        throw std::invalid_argument("morphism " + h.to_string() + " is not prolongable on " +
                                    std::string(1, to_char(a)));
    }
    // buffer = a x h(x) h^2(x) ...; symbol i (i >= 1) expands into the next block.
    WordBuilder buffer;
    buffer.reserve(n + h.image0().size() + h.image1().size());
    buffer.append(h.image(a));
    for (std::size_t i = 1; buffer.size() < n; ++i) {
        buffer.append(h.image(buffer[i]));
    }
    return std::move(buffer).build().prefix(n);
}

BinaryWord thue_morse_direct(std::size_t n) {
    WordBuilder out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(symbol_of(std::popcount(i) & 1));
    }
    return std::move(out).build();
}

std::string MorphismForm::to_string() const {
    switch (kind) {
    case Kind::MuPower: return "MuPower(" + std::to_string(k) + ")";
    case Kind::EComposeMuPower: return "EComposeMuPower(" + std::to_string(k) + ")";
    case Kind::Other: break;
    }
    return "Other";
}

MorphismForm classify_form(const BinaryMorphism& h) {
    const std::size_t len = h.image0().size();
    if (len == 0 || !h.uniform() || !std::has_single_bit(len)) {
        return {};
    }
    const auto k = static_cast<unsigned>(std::countr_zero(len));
    // mu^k(0) is the length-2^k prefix of the Thue-Morse word; mu^k(1) is its complement.
    const BinaryWord mu0 = len == 1 ? "0"_w : fixed_point_prefix(morphisms::thue_morse(), Symbol::Zero, len);
    const BinaryWord mu1 = complement(mu0);
    if (h.image0() == mu0 && h.image1() == mu1) {
        return {MorphismForm::Kind::MuPower, k};
    }
    if (h.image0() == mu1 && h.image1() == mu0) {
        return {MorphismForm::Kind::EComposeMuPower, k};
    }
    return {};
}

} // namespace powerlab
