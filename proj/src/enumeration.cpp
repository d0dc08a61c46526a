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

#include "powerlab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace powerlab {

void EnumerationQuery::validate() const {
    const auto too_long = [&](const std::optional<BinaryWord>& f) { return f && f->size() > length; };
    if (too_long(required_prefix) || too_long(required_suffix)) {
        throw std::invalid_argument("filter longer than requested length " + std::to_string(length));
    }
}

namespace {

bool matches_at(const WordBuilder& b, const BinaryWord& p, std::size_t offset) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (b[offset + i] != p[i]) {
            return false;
        }
    }
    return true;
}

/* Depth-first search over free words. Prefix constraints are applied as soon as
 * the buffer reaches their length; suffix constraints only at full length. */
class Search {
public:
    Search(const EnumerationQuery& q, std::size_t target) : q_(q), target_(target) {}

    // Visits every admissible node below `seed` (seed included), depth-first.
    template <typename OnNode>
    void run(const BinaryWord& seed, OnNode&& on_node) {
        WordBuilder buffer(seed);
        buffer.reserve(target_);
        descend(buffer, on_node);
    }

    // Whether the node's last symbol keeps it inside the search space.
    bool admissible(const WordBuilder& b) const {
        const std::size_t depth = b.size();
        if (depth == 0) {
            return true;
        }
        if (depth == 1 && q_.first_symbol && b[0] != *q_.first_symbol) {
            return false;
        }
        if (q_.required_prefix && depth <= q_.required_prefix->size() &&
            b[depth - 1] != (*q_.required_prefix)[depth - 1]) {
            return false;
        }
        for (const auto& p : q_.excluded_prefixes) {
            if (p.size() == depth && matches_at(b, p, 0)) {
                return false;
            }
        }
        return !detail::suffix_violation(b.view(), q_.threshold).has_value();
    }

    bool accepts_leaf(const WordBuilder& b) const {
        const std::size_t n = b.size();
        if (q_.required_suffix && !matches_at(b, *q_.required_suffix, n - q_.required_suffix->size())) {
            return false;
        }
        for (const auto& s : q_.excluded_suffixes) {
            if (s.size() <= n && matches_at(b, s, n - s.size())) {
                return false;
            }
        }
        // An excluded prefix longer than the word can never match; shorter ones were pruned.
        return true;
    }

private:
    template <typename OnNode>
    void descend(WordBuilder& b, OnNode& on_node) {
        on_node(b);
        if (b.size() == target_) {
            return;
        }
        for (Symbol s : {Symbol::Zero, Symbol::One}) {
            b.push_back(s);
            if (admissible(b)) {
                descend(b, on_node);
            }
            b.pop_back();
        }
    }

    const EnumerationQuery& q_;
    std::size_t target_;
};

// Admissible nodes at exactly `depth`, in lexicographic order.
std::vector<BinaryWord> frontier(const EnumerationQuery& q, std::size_t depth) {
    std::vector<BinaryWord> out;
    Search(q, depth).run(BinaryWord{}, [&](const WordBuilder& b) {
        if (b.size() == depth) {
            out.push_back(b.word());
        }
    });
    return out;
}

template <typename Work>
void parallel_for(std::size_t n, unsigned workers, Work&& work) {
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            work(i);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < workers; ++k) {
        pool.emplace_back(loop);
    }
    loop();
}

} // namespace

void for_each_word(const EnumerationQuery& q, const std::function<void(const BinaryWord&)>& visit) {
    q.validate();
    Search search(q, q.length);
    search.run(BinaryWord{}, [&](const WordBuilder& b) {
        if (b.size() == q.length && search.accepts_leaf(b)) {
            visit(b.word());
        }
    });
}

std::vector<BinaryWord> enumerate(const EnumerationQuery& q, const EnumerationOptions& options) {
    q.validate();
    if (options.workers <= 1 || q.length <= options.split_depth) {
        std::vector<BinaryWord> out;
        for_each_word(q, [&](const BinaryWord& w) { out.push_back(w); });
        return out;
    }
    const std::vector<BinaryWord> seeds = frontier(q, options.split_depth);
    std::vector<std::vector<BinaryWord>> parts(seeds.size());
    parallel_for(seeds.size(), options.workers, [&](std::size_t i) {
        Search search(q, q.length);
        search.run(seeds[i], [&](const WordBuilder& b) {
            if (b.size() == q.length && search.accepts_leaf(b)) {
                parts[i].push_back(b.word());
            }
        });
    });
    // Seeds are in lexicographic order and each part is a contiguous subtree.
    std::vector<BinaryWord> out;
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

CountTable count(std::size_t first, std::size_t last, const ExponentThreshold& t, const CountOptions& options) {
    CountTable table;
    if (first > last) {
        return table;
    }
    EnumerationQuery q;
    q.length = last;
    q.threshold = t;
    if (options.symmetry_reduced) {
        q.first_symbol = Symbol::Zero;
    }
    std::vector<std::uint64_t> per_depth(last + 1, 0);
    const auto tally = [](std::vector<std::uint64_t>& counts) {
        return [&counts](const WordBuilder& b) { ++counts[b.size()]; };
    };

    const std::size_t split = std::min(options.split_depth, last);
    if (options.workers <= 1 || split == last) {
        Search(q, last).run(BinaryWord{}, tally(per_depth));
    } else {
        // Shallow levels are counted while building the frontier; subtrees add the rest.
        std::vector<std::uint64_t> shallow(last + 1, 0);
        std::vector<BinaryWord> seeds;
        Search(q, split).run(BinaryWord{}, [&](const WordBuilder& b) {
            ++shallow[b.size()];
            if (b.size() == split) {
                seeds.push_back(b.word());
            }
        });
        std::vector<std::vector<std::uint64_t>> parts(seeds.size(), std::vector<std::uint64_t>(last + 1, 0));
        parallel_for(seeds.size(), options.workers, [&](std::size_t i) {
            Search(q, last).run(seeds[i], tally(parts[i]));
        });
        per_depth = shallow;
        for (const auto& part : parts) {
            for (std::size_t d = split + 1; d <= last; ++d) {
                per_depth[d] += part[d];
            }
        }
    }

    for (std::size_t n = first; n <= last; ++n) {
        std::uint64_t c = per_depth[n];
        if (options.symmetry_reduced && n > 0) {
            c *= 2;
        }
        table[n] = c;
    }
    return table;
}

std::vector<BinaryWord> all_words_with_property(std::size_t length,
                                                const std::function<bool(const BinaryWord&)>& predicate,
                                                std::size_t ceiling) {
    if (length > ceiling) {
        throw std::invalid_argument("length " + std::to_string(length) + " exceeds the exhaustive-search ceiling " +
                                    std::to_string(ceiling));
    }
    std::vector<BinaryWord> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        BinaryWord w = word_from_bits(bits, length);
        if (predicate(w)) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace powerlab
