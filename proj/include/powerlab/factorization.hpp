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
// Factorizations w = u mu(y) v with u, v in {e, 0, 1, 00, 11}, and towers of them.

#ifndef POWERLAB_FACTORIZATION_HPP
#define POWERLAB_FACTORIZATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "powerlab/repetitions.hpp"
#include "powerlab/word.hpp"

namespace powerlab {

// The five admissible borders, shortest first: e, 0, 1, 00, 11.
const std::array<BinaryWord, 5>& admissible_borders();

struct MuFactorization {
    BinaryWord u;
    BinaryWord y;
    BinaryWord v;

    // u mu(y) v
    BinaryWord reconstruct() const;

    friend bool operator==(const MuFactorization&, const MuFactorization&) = default;
};

// The y with mu(y) = w, if w is a concatenation of blocks 01 and 10.
std::optional<BinaryWord> inverse_mu(const BinaryWord& w);

/* All factorizations of w with a t-free core, ordered by (|u|, |v|).
 * Requires w t-free and 2 < t <= 7/3; otherwise throws std::invalid_argument. */
std::vector<MuFactorization> factorize(const BinaryWord& w, const ExponentThreshold& t);

struct TowerLevel {
    BinaryWord u;
    BinaryWord v;

    friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

/* w = u0 mu(u1) mu^2(u2) ... mu^d(core) ... mu^2(v2) mu(v1) v0 for levels
 * (u0, v0), (u1, v1), ..., (u_{d-1}, v_{d-1}). */
struct DecompositionTower {
    std::vector<TowerLevel> levels;
    BinaryWord core;

    BinaryWord reconstruct() const;
    // Core after each level: cores()[0] is the source word, cores().back() == core.
    std::vector<BinaryWord> cores() const;
};

/* Factorizes the core with the first factorization of each level while the
 * core is longer than min_core. Same preconditions as factorize. */
DecompositionTower decomposition_tower(const BinaryWord& w, const ExponentThreshold& t, std::size_t min_core = 7);

} // namespace powerlab

#endif // POWERLAB_FACTORIZATION_HPP
