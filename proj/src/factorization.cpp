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

#include "powerlab/factorization.hpp"

#include <stdexcept>

#include "powerlab/morphism.hpp"

namespace powerlab {

const std::array<BinaryWord, 5>& admissible_borders() {
    static const std::array<BinaryWord, 5> borders{BinaryWord{}, "0"_w, "1"_w, "00"_w, "11"_w};
    return borders;
}

BinaryWord MuFactorization::reconstruct() const {
    return u + apply(morphisms::thue_morse(), y) + v;
}

std::optional<BinaryWord> inverse_mu(const BinaryWord& w) {
    if (w.size() % 2 != 0) {
        return std::nullopt;
    }
    WordBuilder y;
    y.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        if (w[i] == w[i + 1]) {
            return std::nullopt;
        }
        y.push_back(w[i]);
    }
    return std::move(y).build();
}

namespace {

void require_factorizable(const BinaryWord& w, const ExponentThreshold& t) {
    const bool in_range = t.value() > Rational(2) && t.value() <= Rational(7, 3);
    if (!in_range) {
        throw std::invalid_argument("factorization needs a threshold in (2, 7/3], got " + t.to_string());
    }
    if (!is_power_free(w, t)) {
        throw std::invalid_argument("word " + w.to_string() + " is not " + t.to_string() + "-free");
    }
}

} // namespace

std::vector<MuFactorization> factorize(const BinaryWord& w, const ExponentThreshold& t) {
    require_factorizable(w, t);
    std::vector<MuFactorization> out;
    // Borders are listed by length, so this nesting yields (|u|, |v|) order.
    for (const auto& u : admissible_borders()) {
        for (const auto& v : admissible_borders()) {
            if (u.size() + v.size() > w.size() || !w.starts_with(u) || !w.ends_with(v)) {
                continue;
            }
            auto y = inverse_mu(w.factor(u.size(), w.size() - u.size() - v.size()));
            if (y && is_power_free(*y, t)) {
                out.push_back({u, std::move(*y), v});
            }
        }
    }
    return out;
}

BinaryWord DecompositionTower::reconstruct() const {
    BinaryWord w = core;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        w = it->u + apply(morphisms::thue_morse(), w) + it->v;
    }
    return w;
}

std::vector<BinaryWord> DecompositionTower::cores() const {
    std::vector<BinaryWord> out{core};
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        out.insert(out.begin(), it->u + apply(morphisms::thue_morse(), out.front()) + it->v);
    }
    return out;
}

DecompositionTower decomposition_tower(const BinaryWord& w, const ExponentThreshold& t, std::size_t min_core) {
    require_factorizable(w, t);
    DecompositionTower tower{{}, w};
    while (tower.core.size() > min_core) {
        auto found = factorize(tower.core, t);
        // A nonempty word always shrinks: |y| <= |w| / 2.
        if (found.empty()) {
            break;
        }
        tower.levels.push_back({found.front().u, found.front().v});
        tower.core = std::move(found.front().y);
    }
    return tower;
}

} // namespace powerlab
