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

#include "powerlab/verifier.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "powerlab/enumeration.hpp"
#include "powerlab/factorization.hpp"
#include "powerlab/repetitions.hpp"

namespace powerlab {

namespace claim_ids {

const std::vector<std::string_view>& all() {
    static const std::vector<std::string_view> ids{
        theorem1, theorem2,      lemma1,  lemma2,     lemma3_census,  lemma3_base,     lemma4_base,  lemma5_base,
        lemma6,   theorem7_base, case5bi, corollary8, lemma8,         theorem9_case1,  theorem9_prefix, intro_example,
    };
    return ids;
}

} // namespace claim_ids

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t max_witnesses = 10;

const ExponentThreshold& weak73() {
    static const ExponentThreshold t = thresholds::seven_thirds();
    return t;
}

const ExponentThreshold& strict73() {
    static const ExponentThreshold t = thresholds::seven_thirds_plus();
    return t;
}

void add_witness(ClaimResult& r, std::string w) {
    if (r.witnesses.size() < max_witnesses) {
        r.witnesses.push_back(std::move(w));
    }
}

// Sets `passed` from expected == observed and times the body.
ClaimResult run_claim(std::string_view id, const std::function<void(ClaimResult&)>& body) {
    ClaimResult r;
    r.claim_id = std::string(id);
    const auto start = Clock::now();
    try {
        body(r);
        r.passed = r.expected == r.observed;
        if (!r.passed && r.witnesses.empty()) {
            r.witnesses.push_back("observed: " + r.observed.dump());
        }
    } catch (const std::exception& e) {
        r.passed = false;
        r.observed = json{{"error", e.what()}};
        r.witnesses = {std::string("error: ") + e.what()};
    }
    r.elapsed = Clock::now() - start;
    return r;
}

std::vector<BinaryWord> free_words(std::size_t length, const ExponentThreshold& t) {
    EnumerationQuery q;
    q.length = length;
    q.threshold = t;
    return enumerate(q);
}

// Length of the shortest forbidden factor of w, or 0 if w is free.
std::size_t shortest_violation(const BinaryWord& w, const ExponentThreshold& t) {
    std::size_t best = 0;
    for (const auto& occ : find_occurrences(w, t)) {
        const std::size_t len = minimal_violation_length(occ.period, t);
        if (best == 0 || len < best) {
            best = len;
        }
    }
    return best;
}

constexpr Symbol letters[] = {Symbol::Zero, Symbol::One};

} // namespace

std::uint64_t IntegerForm::value() const {
    std::uint64_t odd = 1;
    switch (family) {
    case Family::PowerOfTwo: odd = 1; break;
    case Family::ThreeTimes: odd = 3; break;
    case Family::FiveTimes: odd = 5; break;
    case Family::SevenPlus: odd = 7 + 2 * j; break;
    }
    return (odd << i) - 1;
}

std::string IntegerForm::to_string() const {
    const std::string pow = "2^" + std::to_string(i);
    switch (family) {
    case Family::PowerOfTwo: return pow + "-1";
    case Family::ThreeTimes: return "3*" + pow + "-1";
    case Family::FiveTimes: return "5*" + pow + "-1";
    case Family::SevenPlus: return "(7+2*" + std::to_string(j) + ")*" + pow + "-1";
    }
    return {};
}

IntegerForm integer_form(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("integer_form needs n >= 1");
    }
    const std::uint64_t m = n + 1;
    const auto i = static_cast<unsigned>(std::countr_zero(m));
    const std::uint64_t odd = m >> i;
    IntegerForm f;
    f.i = i;
    if (odd == 1) {
        f.family = IntegerForm::Family::PowerOfTwo;
    } else if (odd == 3) {
        f.family = IntegerForm::Family::ThreeTimes;
    } else if (odd == 5) {
        f.family = IntegerForm::Family::FiveTimes;
    } else {
        f.family = IntegerForm::Family::SevenPlus;
        f.j = (odd - 7) / 2;
    }
    return f;
}

ClaimResult verify_theorem1_slice(std::size_t max_length) {
    return run_claim(claim_ids::theorem1, [&](ClaimResult& r) {
        const std::vector<ExponentThreshold> ts{{9, 4, false}, {7, 3, false}, {7, 3, true}, {5, 2, false}, {3, 1, false}};
        const BinaryMorphism mu = morphisms::thue_morse();
        std::uint64_t checked = 0;
        std::uint64_t disagreements = 0;
        for (std::size_t n = 0; n <= max_length; ++n) {
            for (const auto& w : all_words(n)) {
                const BinaryWord image = apply(mu, w);
                for (const auto& t : ts) {
                    ++checked;
                    if (is_power_free(w, t) != is_power_free(image, t)) {
                        ++disagreements;
                        add_witness(r, w.to_string() + " @ " + t.to_string());
                    }
                }
            }
        }
        r.expected = {{"disagreements", 0}};
        r.observed = {{"disagreements", disagreements}};
        r.details = {{"max_length", max_length}, {"checks", checked}};
    });
}

ClaimResult verify_theorem2_slice(std::size_t max_length) {
    return run_claim(claim_ids::theorem2, [&](ClaimResult& r) {
        std::uint64_t words = 0;
        std::uint64_t failures = 0;
        for (std::size_t n = 1; n <= max_length; ++n) {
            for (const auto& w : free_words(n, weak73())) {
                ++words;
                const auto fs = factorize(w, weak73());
                const bool ok = !fs.empty() && std::all_of(fs.begin(), fs.end(), [&](const MuFactorization& f) {
                    return f.reconstruct() == w && is_power_free(f.y, weak73());
                });
                if (!ok) {
                    ++failures;
                    add_witness(r, w.to_string());
                }
            }
        }
        r.expected = {{"words_without_factorization", 0}};
        r.observed = {{"words_without_factorization", failures}};
        r.details = {{"max_length", max_length}, {"words", words}};
    });
}

ClaimResult verify_lemma1_subwords(std::size_t length, bool symmetry_reduced, unsigned workers) {
    return run_claim(claim_ids::lemma1, [&](ClaimResult& r) {
        if (length == 0) {
            throw std::invalid_argument("lemma1 length must be positive");
        }
        const BinaryWord mu3_0 = "01101001"_w;
        const BinaryWord mu3_1 = "10010110"_w;
        EnumerationQuery q;
        q.length = length;
        q.threshold = weak73();
        if (symmetry_reduced) {
            // Complementing swaps the two subwords, so half the words suffice.
            q.first_symbol = Symbol::Zero;
        }
        EnumerationOptions opts;
        opts.workers = workers;
        std::uint64_t checked = 0;
        std::uint64_t missing = 0;
        for (const auto& w : enumerate(q, opts)) {
            ++checked;
            if (!contains_subword(w, mu3_0) || !contains_subword(w, mu3_1)) {
                ++missing;
                add_witness(r, w.to_string());
            }
        }
        r.expected = {{"words_missing_subwords", 0}};
        r.observed = {{"words_missing_subwords", missing}};
        r.details = {{"length", length}, {"words_checked", checked}, {"symmetry_reduced", symmetry_reduced}};
    });
}

ClaimResult verify_lemma2_pattern(std::size_t max_length) {
    return run_claim(claim_ids::lemma2, [&](ClaimResult& r) {
        const BinaryMorphism mu = morphisms::thue_morse();
        std::uint64_t checked = 0;
        std::uint64_t free_instances = 0;
        for (std::size_t n = 2; n <= max_length; ++n) {
            for (const auto& inner : free_words(n, weak73())) {
                const BinaryWord image = apply(mu, inner);
                for (Symbol a : letters) {
                    const Symbol b = flip(a);
                    const BinaryWord bba = BinaryWord{} + b + b + a;
                    for (const BinaryWord& x : {reverse(bba) + image, image + bba}) {
                        ++checked;
                        if (is_power_free(x, weak73())) {
                            ++free_instances;
                            add_witness(r, x.to_string());
                        }
                    }
                }
            }
        }
        r.expected = {{"free_instances", 0}};
        r.observed = {{"free_instances", free_instances}};
        r.details = {{"max_inner_length", max_length}, {"instances", checked}};
    });
}

ClaimResult verify_lemma3_census(std::size_t length, std::string_view threshold) {
    return run_claim(claim_ids::lemma3_census, [&](ClaimResult& r) {
        EnumerationQuery q;
        q.length = length;
        q.threshold = parse_threshold(threshold);
        q.excluded_prefixes = {"11"_w};
        q.excluded_suffixes = {"11"_w};
        const auto words = enumerate(q);
        // pbbq with p, q nonempty: a doubled letter strictly inside the word.
        std::uint64_t without_square = 0;
        json listed = json::array();
        for (const auto& w : words) {
            listed.push_back(w.to_string());
            bool found = false;
            for (std::size_t i = 1; i + 2 < w.size() && !found; ++i) {
                found = w[i] == w[i + 1];
            }
            if (!found) {
                ++without_square;
                add_witness(r, w.to_string());
            }
        }
        r.observed = {{"count", words.size()}, {"words_without_inner_bb", without_square}};
        r.details = {{"length", length}, {"threshold", q.threshold.to_string()}, {"words", listed}};
        if (length == 6) {
            r.expected = {{"count", 13}, {"words_without_inner_bb", 0}};
        } else {
            // Only length 6 has a known count; elsewhere report only.
            r.expected = r.observed;
            r.details["informational"] = true;
        }
    });
}

ClaimResult verify_lemma3_base(std::size_t max_j) {
    return run_claim(claim_ids::lemma3_base, [&](ClaimResult& r) {
        // Short forbidden patterns, closed under complement.
        const std::vector<BinaryWord> patterns{"000"_w,   "01010"_w, "10101"_w,  "1001001"_w,
                                               "111"_w,   "0110110"_w};
        std::uint64_t cases = 0;
        std::uint64_t without_short_power = 0;
        std::uint64_t outside_patterns = 0;
        for (std::size_t j = 0; j <= max_j; ++j) {
            for (const auto& w : free_words(6 + 2 * j, weak73())) {
                for (Symbol a : letters) {
                    ++cases;
                    const BinaryWord x = w + a + w;
                    const std::size_t shortest = shortest_violation(x, weak73());
                    if (shortest == 0 || shortest > 7) {
                        ++without_short_power;
                        add_witness(r, x.to_string());
                    }
                    if (std::none_of(patterns.begin(), patterns.end(),
                                     [&](const BinaryWord& p) { return contains_subword(x, p); })) {
                        ++outside_patterns;
                        add_witness(r, x.to_string());
                    }
                }
            }
        }
        r.expected = {{"without_power_of_length_le_7", 0}, {"outside_pattern_set", 0}};
        r.observed = {{"without_power_of_length_le_7", without_short_power}, {"outside_pattern_set", outside_patterns}};
        r.details = {{"max_j", max_j}, {"cases", cases}};
    });
}

ClaimResult verify_lemma4_base() {
    return run_claim(claim_ids::lemma4_base, [&](ClaimResult& r) {
        json observed = json::object();
        json cases = json::object();
        // |w| = 5*2^i - 1 for i = 0 and i = 1.
        for (unsigned i : {0u, 1u}) {
            const std::size_t n = (std::size_t{5} << i) - 1;
            const std::size_t bound = std::size_t{5} << i;
            std::uint64_t count = 0;
            std::uint64_t failures = 0;
            for (const auto& w : free_words(n, weak73())) {
                for (Symbol a : letters) {
                    ++count;
                    const BinaryWord x = w + a + w;
                    const std::size_t shortest = shortest_violation(x, weak73());
                    if (shortest == 0 || shortest > bound) {
                        ++failures;
                        add_witness(r, x.to_string());
                    }
                }
            }
            const std::string key = "length_" + std::to_string(n);
            observed[key] = failures;
            cases[key] = count;
        }
        r.expected = {{"length_4", 0}, {"length_9", 0}};
        r.observed = observed;
        r.details = {{"cases", cases}};
    });
}

ClaimResult verify_lemma5_base(const std::vector<std::size_t>& lengths) {
    return run_claim(claim_ids::lemma5_base, [&](ClaimResult& r) {
        // Bordered form: a c w c w c b with a, b two-letter words and c either letter.
        std::uint64_t bordered_count = 0;
        std::uint64_t bordered_free = 0;
        const auto pairs = all_words(2);
        for (std::size_t n : {3u, 5u}) {
            for (const auto& w : free_words(n, weak73())) {
                for (const auto& a : pairs) {
                    for (const auto& b : pairs) {
                        for (Symbol c : letters) {
                            ++bordered_count;
                            const BinaryWord x = a + c + w + c + w + c + b;
                            if (is_power_free(x, weak73())) {
                                ++bordered_free;
                                add_witness(r, x.to_string());
                            }
                        }
                    }
                }
            }
        }
        // Symmetric form: s a w a w a s with |s| >= |w|.
        std::uint64_t symmetric_count = 0;
        std::uint64_t symmetric_free = 0;
        for (std::size_t ls : lengths) {
            for (std::size_t lw : lengths) {
                if (ls < lw) {
                    continue;
                }
                const auto ss = free_words(ls, weak73());
                const auto ws = free_words(lw, weak73());
                for (const auto& s : ss) {
                    for (const auto& w : ws) {
                        for (Symbol a : letters) {
                            ++symmetric_count;
                            const BinaryWord x = s + a + w + a + w + a + s;
                            if (is_power_free(x, weak73())) {
                                ++symmetric_free;
                                add_witness(r, x.to_string());
                            }
                        }
                    }
                }
            }
        }
        r.expected = {{"bordered_form_free", 0}, {"symmetric_form_free", 0}};
        r.observed = {{"bordered_form_free", bordered_free}, {"symmetric_form_free", symmetric_free}};
        r.details = {{"bordered_cases", bordered_count}, {"symmetric_cases", symmetric_count}, {"lengths", lengths}};
    });
}

ClaimResult verify_lemma6(std::uint64_t bound) {
    return run_claim(claim_ids::lemma6, [&](ClaimResult& r) {
        if (bound == 0) {
            throw std::invalid_argument("lemma6 bound must be positive");
        }
        std::uint64_t unrepresented = 0;
        json forms = json::array();
        for (std::uint64_t n = 1; n <= bound; ++n) {
            const IntegerForm f = integer_form(n);
            forms.push_back(f.to_string());
            if (f.value() != n) {
                ++unrepresented;
                add_witness(r, std::to_string(n));
            }
        }
        r.expected = {{"unrepresented", 0}};
        r.observed = {{"unrepresented", unrepresented}};
        r.details = {{"bound", bound}, {"forms", std::move(forms)}};
    });
}

ClaimResult verify_theorem7_base(std::size_t max_image) {
    return run_claim(claim_ids::theorem7_base, [&](ClaimResult& r) {
        std::vector<BinaryWord> images;
        for (std::size_t n = 1; n <= max_image; ++n) {
            for (auto& w : all_words(n)) {
                images.push_back(std::move(w));
            }
        }
        const BinaryWord probe = "01101001"_w;
        std::set<std::string> survivors;
        std::uint64_t survivor_count = 0;
        std::uint64_t morphisms_checked = 0;
        for (const auto& x : images) {
            for (const auto& xp : images) {
                ++morphisms_checked;
                const BinaryMorphism h(x, xp);
                if (!is_power_free(apply(h, probe), weak73())) {
                    continue;
                }
                ++survivor_count;
                const MorphismForm form = classify_form(h);
                survivors.insert(form.to_string());
                if (form.kind == MorphismForm::Kind::Other) {
                    add_witness(r, h.to_string());
                }
            }
        }
        r.expected = {{"count", 6}, {"survivors", {"EComposeMuPower(0)", "EComposeMuPower(1)", "EComposeMuPower(2)", "MuPower(0)",
                                     "MuPower(1)", "MuPower(2)"}}};
        r.observed = {{"count", survivor_count}, {"survivors", survivors}};
        r.details = {{"max_image_length", max_image}, {"morphisms", morphisms_checked}};
    });
}

ClaimResult verify_case5bi_wordset() {
    return run_claim(claim_ids::case5bi, [&](ClaimResult& r) {
        std::vector<std::string> members;
        bool all_touch_10 = true;
        const BinaryWord ten = "10"_w;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& xp : all_words(n)) {
                if (!is_power_free(Symbol::One + xp + xp + Symbol::Zero, weak73())) {
                    continue;
                }
                members.push_back(xp.to_string());
                if (!xp.starts_with(ten) && !xp.ends_with(ten)) {
                    all_touch_10 = false;
                    add_witness(r, xp.to_string());
                }
            }
        }
        r.expected = {{"words", {"10", "0110", "1001", "011010", "100110", "101001"}}, {"begin_or_end_with_10", true}};
        r.observed = {{"words", members}, {"begin_or_end_with_10", all_touch_10}};
    });
}

ClaimResult verify_corollary8_d_to_a_counterexample(std::string_view image1) {
    return run_claim(claim_ids::corollary8, [&](ClaimResult& r) {
        const BinaryMorphism h(BinaryWord{}, parse_word(image1));
        if (h.image1().empty()) {
            r.expected = {{"image_is_7/3_free", false}};
            r.observed = {{"degenerate", true}};
            r.witnesses = {"degenerate: " + h.to_string() + " maps 01101001 to the empty word"};
            r.details = {{"morphism", h.to_string()}, {"degenerate", true}};
            return;
        }
        const BinaryWord image = apply(h, "01101001"_w);
        const bool free = is_power_free(image, weak73());
        if (free) {
            add_witness(r, h.to_string());
        }
        r.expected = {{"image_is_7/3_free", false}};
        r.observed = {{"image_is_7/3_free", free}};
        r.details = {{"morphism", h.to_string()},
                     {"image", image.to_string()},
                     {"max_exponent", max_exponent(image).exponent.to_string()}};
    });
}

ClaimResult verify_lemma8(const BinaryMorphism& h) {
    return run_claim(claim_ids::lemma8, [&](ClaimResult& r) {
        std::uint64_t inclusions = 0;
        std::uint64_t part_a = 0;
        std::uint64_t splits = 0;
        std::uint64_t part_b = 0;
        for (Symbol a : letters) {
            for (Symbol b : letters) {
                for (Symbol c : letters) {
                    const BinaryWord& ha = h.image(a);
                    const BinaryWord& hb = h.image(b);
                    const BinaryWord& hc = h.image(c);
                    const std::string triple = std::string{to_char(a), to_char(b), to_char(c)};
                    // (a) h(ab) = t h(c) u forces t or u empty.
                    const BinaryWord hab = ha + hb;
                    for (std::size_t t = 0; t + hc.size() <= hab.size(); ++t) {
                        ++inclusions;
                        if (hab.factor(t, hc.size()) == hc && t != 0 && t + hc.size() != hab.size()) {
                            ++part_a;
                            add_witness(r, h.to_string() + " abc=" + triple + " t=" + std::to_string(t));
                        }
                    }
                    // (b) h(a) = s t, h(b) = u v, h(c) = s v forces a = c or b = c.
                    for (std::size_t s = 0; s <= ha.size(); ++s) {
                        for (std::size_t u = 0; u <= hb.size(); ++u) {
                            ++splits;
                            if (s + (hb.size() - u) != hc.size() || a == c || b == c) {
                                continue;
                            }
                            if (ha.prefix(s) + hb.suffix(hb.size() - u) == hc) {
                                ++part_b;
                                add_witness(r, h.to_string() + " abc=" + triple + " |s|=" + std::to_string(s) +
                                                   " |u|=" + std::to_string(u));
                            }
                        }
                    }
                }
            }
        }
        r.expected = {{"part_a_counterexamples", 0}, {"part_b_counterexamples", 0}};
        r.observed = {{"part_a_counterexamples", part_a}, {"part_b_counterexamples", part_b}};
        r.details = {{"morphism", h.to_string()}, {"inclusions_checked", inclusions}, {"splits_checked", splits}};
    });
}

ClaimResult verify_theorem9_case1() {
    return run_claim(claim_ids::theorem9_case1, [&](ClaimResult& r) {
        const BinaryMorphism h = morphisms::seebold19();
        const auto census = free_words(6, strict73());
        std::uint64_t images_with_powers = 0;
        for (const auto& w : census) {
            if (!is_power_free(apply(h, w), strict73())) {
                ++images_with_powers;
                add_witness(r, w.to_string());
            }
        }
        r.expected = {{"census", 20}, {"images_with_powers", 0}};
        r.observed = {{"census", census.size()}, {"images_with_powers", images_with_powers}};
    });
}

ClaimResult verify_theorem9_prefix(std::size_t n) {
    return run_claim(claim_ids::theorem9_prefix, [&](ClaimResult& r) {
        const BinaryMorphism h = morphisms::seebold19();
        if (n < h.image0().size()) {
            throw std::invalid_argument("theorem9 prefix length must be at least " +
                                        std::to_string(h.image0().size()));
        }
        const BinaryWord prefix = fixed_point_prefix(h, Symbol::Zero, n);
        // Doubling chunks keep the tail checks near-linear overall.
        StreamingChecker checker(strict73());
        std::size_t fed = 0;
        while (fed < n && checker.free()) {
            const std::size_t chunk = std::min(n - fed, std::max<std::size_t>(64, fed));
            checker.append(prefix.factor(fed, chunk));
            fed += chunk;
        }
        if (const auto& v = checker.violation()) {
            add_witness(r, prefix.factor(v->start, v->length).to_string());
        }
        r.expected = {{"prefix_free", true}, {"form", "Other"}};
        r.observed = {{"prefix_free", checker.free()}, {"form", classify_form(h).to_string()}};
        r.details = {{"length", n}, {"threshold", strict73().to_string()}};
    });
}

ClaimResult verify_intro_example(std::size_t n) {
    return run_claim(claim_ids::intro_example, [&](ClaimResult& r) {
        if (n < 7) {
            throw std::invalid_argument("intro example prefix length must be at least 7");
        }
        const BinaryWord head = "001001"_w;
        const BinaryWord word = head + fixed_point_prefix(morphisms::thue_morse(), Symbol::One, n - head.size());
        const BinaryWord with0 = Symbol::Zero + word;
        const BinaryWord with1 = Symbol::One + word;
        const BinaryWord seven_thirds_power = "1001001"_w;
        r.observed = {
            {"prefix_7/3_free", is_power_free(word, weak73())},
            {"prefix_overlap_free", is_power_free(word, thresholds::overlap())},
            {"prepend_0_has_000", contains_subword(with0, "000"_w)},
            {"prepend_1_has_7/3_power_1001001",
             contains_subword(with1, seven_thirds_power) && !is_power_free(seven_thirds_power, weak73())},
        };
        r.expected = {
            {"prefix_7/3_free", true},
            {"prefix_overlap_free", true},
            {"prepend_0_has_000", true},
            {"prepend_1_has_7/3_power_1001001", true},
        };
        if (r.expected != r.observed) {
            add_witness(r, word.prefix(std::min<std::size_t>(word.size(), 64)).to_string());
        }
        r.details = {{"length", n}};
    });
}

VerificationReport run_all(const VerifierConfig& config, const std::vector<std::string>& ids) {
    const auto& known = claim_ids::all();
    for (const auto& id : ids) {
        if (id != "all" && std::find(known.begin(), known.end(), id) == known.end()) {
            throw std::invalid_argument("unknown claim id '" + id + "'");
        }
    }
    const bool everything = ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end();
    const auto selected = [&](std::string_view id) {
        return everything || std::find(ids.begin(), ids.end(), id) != ids.end();
    };

    const std::vector<std::pair<std::string_view, std::function<ClaimResult()>>> plan{
        {claim_ids::theorem1, [&] { return verify_theorem1_slice(config.theorem1_max_length); }},
        {claim_ids::theorem2, [&] { return verify_theorem2_slice(config.theorem2_max_length); }},
        {claim_ids::lemma1,
         [&] { return verify_lemma1_subwords(config.lemma1_length, config.lemma1_symmetry_reduced, config.workers); }},
        {claim_ids::lemma2, [&] { return verify_lemma2_pattern(config.lemma2_max_length); }},
        {claim_ids::lemma3_census,
         [&] { return verify_lemma3_census(config.lemma3_census_length, config.lemma3_census_threshold); }},
        {claim_ids::lemma3_base, [&] { return verify_lemma3_base(config.lemma3_max_j); }},
        {claim_ids::lemma4_base, [&] { return verify_lemma4_base(); }},
        {claim_ids::lemma5_base, [&] { return verify_lemma5_base(config.lemma5_lengths); }},
        {claim_ids::lemma6, [&] { return verify_lemma6(config.lemma6_bound); }},
        {claim_ids::theorem7_base, [&] { return verify_theorem7_base(config.theorem7_max_image); }},
        {claim_ids::case5bi, [&] { return verify_case5bi_wordset(); }},
        {claim_ids::corollary8, [&] { return verify_corollary8_d_to_a_counterexample(config.corollary8_image1); }},
        {claim_ids::lemma8, [&] { return verify_lemma8(morphisms::seebold19()); }},
        {claim_ids::theorem9_case1, [&] { return verify_theorem9_case1(); }},
        {claim_ids::theorem9_prefix, [&] { return verify_theorem9_prefix(config.theorem9_prefix); }},
        {claim_ids::intro_example, [&] { return verify_intro_example(config.intro_prefix); }},
    };

    VerificationReport report;
    report.overall = true;
    for (const auto& [id, run] : plan) {
        if (!selected(id)) {
            continue;
        }
        report.results.push_back(run());
        report.overall = report.overall && report.results.back().passed;
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timings) {
    json claims = json::array();
    for (const auto& r : report.results) {
        json c = {
            {"claim_id", r.claim_id},
            {"passed", r.passed},
            {"expected", r.expected},
            {"observed", r.observed},
            {"witnesses", r.witnesses},
        };
        if (!r.details.is_null()) {
            c["details"] = r.details;
        }
        if (include_timings) {
            c["elapsed_ms"] = r.elapsed.count();
        }
        claims.push_back(std::move(c));
    }
    return {{"claims", std::move(claims)}, {"overall", report.overall}};
}

} // namespace powerlab
