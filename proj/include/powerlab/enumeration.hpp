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
// Exhaustive generation of power-free binary words.
//
// Power-freeness is prefix-closed, so a depth-first search that extends one
// symbol at a time and only checks repetitions ending at the new symbol visits
// exactly the free words of every length up to the target.

#ifndef POWERLAB_ENUMERATION_HPP
#define POWERLAB_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "powerlab/repetitions.hpp"
#include "powerlab/word.hpp"

namespace powerlab {

struct EnumerationQuery {
    std::size_t length = 0;
    ExponentThreshold threshold = thresholds::seven_thirds();
    std::optional<BinaryWord> required_prefix;
    std::optional<BinaryWord> required_suffix;
    std::vector<BinaryWord> excluded_prefixes;
    std::vector<BinaryWord> excluded_suffixes;
    std::optional<Symbol> first_symbol;

    // Throws std::invalid_argument if a required filter is longer than `length`.
    void validate() const;
};

struct EnumerationOptions {
    // Worker threads; 1 runs inline.
    unsigned workers = 1;
    // Depth of the prefixes handed out to workers.
    std::size_t split_depth = 8;
};

// Streams the matching words in lexicographic order. Sequential.
void for_each_word(const EnumerationQuery& q, const std::function<void(const BinaryWord&)>& visit);

// Same words as for_each_word, identical order for any worker count.
std::vector<BinaryWord> enumerate(const EnumerationQuery& q, const EnumerationOptions& options = {});

using CountTable = std::map<std::size_t, std::uint64_t>;

struct CountOptions {
    unsigned workers = 1;
    std::size_t split_depth = 8;
    // Count words starting with 0 only and double; sound because complement preserves freeness.
    bool symmetry_reduced = false;
};

// Number of t-free words of each length in [first, last].
CountTable count(std::size_t first, std::size_t last, const ExponentThreshold& t, const CountOptions& options = {});

inline constexpr std::size_t default_exhaustive_ceiling = 24;

/* Brute force over all 2^length words, lexicographic. Lengths above `ceiling`
 * throw std::invalid_argument. */
std::vector<BinaryWord> all_words_with_property(std::size_t length,
                                                const std::function<bool(const BinaryWord&)>& predicate,
                                                std::size_t ceiling = default_exhaustive_ceiling);

} // namespace powerlab

#endif // POWERLAB_ENUMERATION_HPP
