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

#include "powerlab/word.hpp"

#include <algorithm>
#include <bit>

namespace powerlab {

namespace detail {

std::uint64_t PackedView::load64(std::int64_t start) const noexcept {
    if (start <= -64 || start >= static_cast<std::int64_t>(size)) {
        return 0;
    }
    if (start < 0) {
        return load64(0) << static_cast<unsigned>(-start);
    }
    const auto pos = static_cast<std::size_t>(start);
    const std::size_t block = pos >> 6;
    const unsigned offset = pos & 63;
    std::uint64_t bits = blocks[block] >> offset;
    if (offset != 0 && block + 1 < blocks.size()) {
        bits |= blocks[block + 1] << (64 - offset);
    }
    return bits;
}

} // namespace detail

std::size_t BinaryWord::count(Symbol s) const noexcept {
    std::size_t ones = 0;
    for (auto b : blocks_) {
        ones += static_cast<std::size_t>(std::popcount(b));
    }
    return s == Symbol::One ? ones : size_ - ones;
}

BinaryWord BinaryWord::factor(std::size_t start, std::size_t length) const {
    if (start > size_ || length > size_ - start) {
        throw std::out_of_range("factor [" + std::to_string(start) + ", +" + std::to_string(length) +
                                ") outside word of length " + std::to_string(size_));
    }
    BinaryWord out;
    out.size_ = length;
    out.blocks_.assign((length + 63) / 64, 0);
    const auto v = view();
    for (std::size_t k = 0; k < out.blocks_.size(); ++k) {
        out.blocks_[k] = v.load64(static_cast<std::int64_t>(start + 64 * k));
    }
    if (length % 64 != 0) {
        out.blocks_.back() &= (std::uint64_t{1} << (length % 64)) - 1;
    }
    return out;
}

bool BinaryWord::starts_with(const BinaryWord& p) const noexcept {
    if (p.size_ > size_) {
        return false;
    }
    const auto v = view();
    const auto pv = p.view();
    for (std::size_t k = 0; k < p.size_; k += 64) {
        const std::size_t n = std::min<std::size_t>(64, p.size_ - k);
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const auto pos = static_cast<std::int64_t>(k);
        if (((v.load64(pos) ^ pv.load64(pos)) & mask) != 0) {
            return false;
        }
    }
    return true;
}

bool BinaryWord::ends_with(const BinaryWord& p) const noexcept {
    if (p.size_ > size_) {
        return false;
    }
    const auto v = view();
    const auto pv = p.view();
    const std::size_t shift = size_ - p.size_;
    for (std::size_t k = 0; k < p.size_; k += 64) {
        const std::size_t n = std::min<std::size_t>(64, p.size_ - k);
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        if (((v.load64(static_cast<std::int64_t>(shift + k)) ^ pv.load64(static_cast<std::int64_t>(k))) & mask) != 0) {
            return false;
        }
    }
    return true;
}

std::string BinaryWord::to_string() const {
    std::string s(size_, '0');
    const auto v = view();
    for (std::size_t i = 0; i < size_; ++i) {
        if (v.at(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
    const std::size_t n = std::min(a.size_, b.size_);
    const auto av = a.view();
    const auto bv = b.view();
    for (std::size_t k = 0; k < n; k += 64) {
        const std::size_t len = std::min<std::size_t>(64, n - k);
        const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
        const std::uint64_t x = av.load64(static_cast<std::int64_t>(k));
        const std::uint64_t y = bv.load64(static_cast<std::int64_t>(k));
        const std::uint64_t diff = (x ^ y) & mask;
        if (diff != 0) {
            const int bit = std::countr_zero(diff);
            return ((x >> bit) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.size_ <=> b.size_;
}

void WordBuilder::push_back(Symbol s) {
    if (size_ % 64 == 0) {
        blocks_.push_back(0);
    }
    if (s == Symbol::One) {
        blocks_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
    }
    ++size_;
}

void WordBuilder::pop_back() noexcept {
    if (size_ == 0) {
        return;
    }
    --size_;
    blocks_[size_ >> 6] &= ~(std::uint64_t{1} << (size_ & 63));
    if (size_ % 64 == 0) {
        blocks_.pop_back();
    }
}

void WordBuilder::append(const BinaryWord& w) { append(w.view()); }

void WordBuilder::append(detail::PackedView v) {
    if (v.size == 0) {
        return;
    }
    const std::size_t offset = size_ & 63;
    if (offset == 0) {
        blocks_.insert(blocks_.end(), v.blocks.begin(), v.blocks.begin() + static_cast<std::ptrdiff_t>((v.size + 63) / 64));
    } else {
        for (std::size_t k = 0; k < (v.size + 63) / 64; ++k) {
            const std::uint64_t b = v.blocks[k];
            blocks_.back() |= b << offset;
            blocks_.push_back(b >> (64 - offset));
        }
    }
    size_ += v.size;
    blocks_.resize((size_ + 63) / 64);
}

BinaryWord WordBuilder::word() const {
    BinaryWord w;
    w.blocks_ = blocks_;
    w.size_ = size_;
    return w;
}

BinaryWord WordBuilder::build() && {
    BinaryWord w;
    w.blocks_ = std::move(blocks_);
    w.size_ = size_;
    size_ = 0;
    return w;
}

BinaryWord parse_word(std::string_view text) {
    WordBuilder b;
    b.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0': b.push_back(Symbol::Zero); break;
        case '1': b.push_back(Symbol::One); break;
        default:
            throw ParseError("invalid character '" + std::string(1, text[i]) + "' at index " + std::to_string(i) +
                                 " (expected '0' or '1')",
                             i);
        }
    }
    return std::move(b).build();
}

BinaryWord complement(const BinaryWord& w) {
    WordBuilder b;
    b.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        b.push_back(flip(w[i]));
    }
    return std::move(b).build();
}

BinaryWord reverse(const BinaryWord& w) {
    WordBuilder b;
    b.reserve(w.size());
    for (std::size_t i = w.size(); i-- > 0;) {
        b.push_back(w[i]);
    }
    return std::move(b).build();
}

BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
    WordBuilder out(a);
    out.append(b);
    return std::move(out).build();
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) { return concat(a, b); }

BinaryWord operator+(const BinaryWord& a, Symbol s) {
    WordBuilder out(a);
    out.push_back(s);
    return std::move(out).build();
}

BinaryWord operator+(Symbol s, const BinaryWord& b) {
    WordBuilder out;
    out.reserve(b.size() + 1);
    out.push_back(s);
    out.append(b);
    return std::move(out).build();
}

BinaryWord repeat(const BinaryWord& w, std::size_t times) {
    WordBuilder out;
    out.reserve(w.size() * times);
    for (std::size_t k = 0; k < times; ++k) {
        out.append(w);
    }
    return std::move(out).build();
}

bool contains_subword(const BinaryWord& w, const BinaryWord& p) {
    if (p.empty()) {
        return true;
    }
    if (p.size() > w.size()) {
        return false;
    }
    const auto wv = w.view();
    const auto pv = p.view();
    const std::uint64_t head = pv.load64(0);
    const std::size_t head_len = std::min<std::size_t>(64, p.size());
    const std::uint64_t head_mask = head_len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << head_len) - 1;
    for (std::size_t start = 0; start + p.size() <= w.size(); ++start) {
        if (((wv.load64(static_cast<std::int64_t>(start)) ^ head) & head_mask) != 0) {
            continue;
        }
        bool match = true;
        for (std::size_t k = 64; k < p.size() && match; k += 64) {
            const std::size_t n = std::min<std::size_t>(64, p.size() - k);
            const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
            match = ((wv.load64(static_cast<std::int64_t>(start + k)) ^ pv.load64(static_cast<std::int64_t>(k))) &
                     mask) == 0;
        }
        if (match) {
            return true;
        }
    }
    return false;
}

std::vector<BinaryWord> all_words(std::size_t length) {
    if (length >= 63) {
        throw std::invalid_argument("all_words: length " + std::to_string(length) + " too large");
    }
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << length);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        out.push_back(word_from_bits(bits, length));
    }
    return out;
}

BinaryWord word_from_bits(std::uint64_t bits, std::size_t length) {
    WordBuilder b;
    b.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        b.push_back(symbol_of((bits >> (length - 1 - i)) & 1u));
    }
    return std::move(b).build();
}

} // namespace powerlab
