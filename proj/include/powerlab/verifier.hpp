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
// Finite, exhaustive checks of the computational claims about 7/3-power-free
// words and morphisms. Every check runs a bounded slice of a universally
// quantified statement and reports which slice it ran.
//
// Each check compares a small `expected` summary with the `observed` one and
// passes only on exact equality. Supporting numbers go in `details`; concrete
// counterexamples (words, morphisms) go in `witnesses`.

#ifndef POWERLAB_VERIFIER_HPP
#define POWERLAB_VERIFIER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "powerlab/morphism.hpp"
#include "powerlab/word.hpp"

namespace powerlab {

namespace claim_ids {
inline constexpr std::string_view theorem1 = "theorem1-mu-preservation";
inline constexpr std::string_view theorem2 = "theorem2-factorization";
inline constexpr std::string_view lemma1 = "lemma1-subwords-52";
inline constexpr std::string_view lemma2 = "lemma2-abb-pattern";
inline constexpr std::string_view lemma3_census = "lemma3-census-13";
inline constexpr std::string_view lemma3_base = "lemma3-base";
inline constexpr std::string_view lemma4_base = "lemma4-base";
inline constexpr std::string_view lemma5_base = "lemma5-base";
inline constexpr std::string_view lemma6 = "lemma6-integer-forms";
inline constexpr std::string_view theorem7_base = "theorem7-base-census";
inline constexpr std::string_view case5bi = "theorem7-case5bi-wordset";
inline constexpr std::string_view corollary8 = "corollary8-erasing-counterexample";
inline constexpr std::string_view lemma8 = "lemma8-inclusions";
inline constexpr std::string_view theorem9_case1 = "theorem9-case1-census";
inline constexpr std::string_view theorem9_prefix = "theorem9-prefix";
inline constexpr std::string_view intro_example = "intro-example-001001";

// In run order.
const std::vector<std::string_view>& all();
} // namespace claim_ids

struct ClaimResult {
    std::string claim_id;
    bool passed = false;
    nlohmann::json expected;
    nlohmann::json observed;
    std::vector<std::string> witnesses;
    nlohmann::json details;
    std::chrono::duration<double, std::milli> elapsed{0};
};

struct VerificationReport {
    std::vector<ClaimResult> results;
    bool overall = false;
};

struct VerifierConfig {
    std::size_t lemma1_length = 52;
    bool lemma1_symmetry_reduced = false;
    std::size_t lemma2_max_length = 8;
    std::size_t lemma3_census_length = 6;
    std::string lemma3_census_threshold = "7/3";
    std::size_t lemma3_max_j = 3;
    std::vector<std::size_t> lemma5_lengths = {3, 5, 7, 11};
    std::uint64_t lemma6_bound = 10000;
    std::size_t theorem1_max_length = 12;
    std::size_t theorem2_max_length = 16;
    std::size_t theorem7_max_image = 6;
    std::size_t theorem9_prefix = 100000;
    std::size_t intro_prefix = 4096;
    std::string corollary8_image1 = "1";
    unsigned workers = 1;
};

// n = 2^i - 1, 3*2^i - 1, 5*2^i - 1 or (7+2j)*2^i - 1.
struct IntegerForm {
    enum class Family { PowerOfTwo, ThreeTimes, FiveTimes, SevenPlus };

    Family family = Family::PowerOfTwo;
    unsigned i = 0;
    std::uint64_t j = 0;

    std::uint64_t value() const;
    std::string to_string() const;
};

// Uses the odd part of n + 1. Requires n >= 1.
IntegerForm integer_form(std::uint64_t n);

ClaimResult verify_theorem1_slice(std::size_t max_length = 12);
ClaimResult verify_theorem2_slice(std::size_t max_length = 16);
ClaimResult verify_lemma1_subwords(std::size_t length = 52, bool symmetry_reduced = false, unsigned workers = 1);
ClaimResult verify_lemma2_pattern(std::size_t max_length = 8);
ClaimResult verify_lemma3_census(std::size_t length = 6, std::string_view threshold = "7/3");
ClaimResult verify_lemma3_base(std::size_t max_j = 3);
ClaimResult verify_lemma4_base();
ClaimResult verify_lemma5_base(const std::vector<std::size_t>& lengths = {3, 5, 7, 11});
ClaimResult verify_lemma6(std::uint64_t bound = 10000);
ClaimResult verify_theorem7_base(std::size_t max_image = 6);
ClaimResult verify_case5bi_wordset();
ClaimResult verify_corollary8_d_to_a_counterexample(std::string_view image1 = "1");
ClaimResult verify_lemma8(const BinaryMorphism& h = morphisms::seebold19());
ClaimResult verify_theorem9_case1();
ClaimResult verify_theorem9_prefix(std::size_t n = 100000);
ClaimResult verify_intro_example(std::size_t n = 4096);

// Runs the selected claims (all when `ids` is empty) in the canonical order.
// Unknown ids throw std::invalid_argument before anything runs.
VerificationReport run_all(const VerifierConfig& config = {}, const std::vector<std::string>& ids = {});

// {claims:[{claim_id, passed, expected, observed, witnesses, details?, elapsed_ms?}], overall}
nlohmann::json to_json(const VerificationReport& report, bool include_timings = false);

} // namespace powerlab

#endif // POWERLAB_VERIFIER_HPP
