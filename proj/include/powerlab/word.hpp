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
// Binary words: packed, immutable values over the alphabet {0, 1}.

#ifndef POWERLAB_WORD_HPP
#define POWERLAB_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powerlab {

enum class Symbol : std::uint8_t { Zero = 0, One = 1 };

constexpr Symbol flip(Symbol s) noexcept {
    return s == Symbol::Zero ? Symbol::One : Symbol::Zero;
}

constexpr char to_char(Symbol s) noexcept { return s == Symbol::Zero ? '0' : '1'; }

constexpr Symbol symbol_of(bool bit) noexcept { return bit ? Symbol::One : Symbol::Zero; }

// Thrown by the text parsers; carries the 0-based index of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

/* Read-only view over packed symbols. Bit k of block k/64 holds symbol k.
 * Bits past `size` are always zero. */
struct PackedView {
    std::span<const std::uint64_t> blocks;
    std::size_t size = 0;

    bool at(std::size_t i) const noexcept { return (blocks[i >> 6] >> (i & 63)) & 1u; }

    // 64 symbols starting at `start` (bit 0 = symbol `start`); positions outside [0, size) read as 0.
    std::uint64_t load64(std::int64_t start) const noexcept;
};

} // namespace detail

class WordBuilder;

/* A finite word over {0, 1}.
 *
 * Symbols are packed one bit each. Instances never change after construction;
 * WordBuilder is the only way to assemble one symbol at a time. */
class BinaryWord {
public:
    BinaryWord() = default;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    Symbol operator[](std::size_t i) const noexcept { return symbol_of(view().at(i)); }

    std::size_t count(Symbol s) const noexcept;

    BinaryWord factor(std::size_t start, std::size_t length) const;
    BinaryWord prefix(std::size_t length) const { return factor(0, length); }
    BinaryWord suffix(std::size_t length) const { return factor(size_ - length, length); }

    bool starts_with(const BinaryWord& p) const noexcept;
    bool ends_with(const BinaryWord& p) const noexcept;

    std::string to_string() const;

    detail::PackedView view() const noexcept { return {blocks_, size_}; }

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) noexcept {
        return a.size_ == b.size_ && a.blocks_ == b.blocks_;
    }
    // Lexicographic; a proper prefix orders first.
    friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept;

private:
    friend class WordBuilder;

    std::vector<std::uint64_t> blocks_;
    std::size_t size_ = 0;
};

class WordBuilder {
public:
    WordBuilder() = default;
    explicit WordBuilder(const BinaryWord& w) : blocks_(w.blocks_), size_(w.size_) {}

    void reserve(std::size_t n) { blocks_.reserve((n + 63) / 64); }

    void push_back(Symbol s);
    void pop_back() noexcept;
    void append(const BinaryWord& w);
    void append(detail::PackedView v);

    std::size_t size() const noexcept { return size_; }
    Symbol operator[](std::size_t i) const noexcept { return symbol_of(view().at(i)); }
    detail::PackedView view() const noexcept { return {blocks_, size_}; }

    // Snapshot of the current contents; the builder stays usable.
    BinaryWord word() const;
    BinaryWord build() &&;

private:
    std::vector<std::uint64_t> blocks_;
    std::size_t size_ = 0;
};

// Accepts only '0' and '1'; anything else raises ParseError at its index.
BinaryWord parse_word(std::string_view text);

// Shorthand for literals known to be valid.
inline BinaryWord operator""_w(const char* text, std::size_t n) {
    return parse_word(std::string_view(text, n));
}

BinaryWord complement(const BinaryWord& w);
BinaryWord reverse(const BinaryWord& w);
BinaryWord concat(const BinaryWord& a, const BinaryWord& b);
BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);
BinaryWord operator+(const BinaryWord& a, Symbol s);
BinaryWord operator+(Symbol s, const BinaryWord& b);
BinaryWord repeat(const BinaryWord& w, std::size_t times);

bool contains_subword(const BinaryWord& w, const BinaryWord& p);

// Every word of the given length, in lexicographic order. Only sensible for small n.
std::vector<BinaryWord> all_words(std::size_t length);

// The word whose i-th symbol is bit (length-1-i) of `bits`, so that lexicographic
// order of words matches numeric order of `bits`.
BinaryWord word_from_bits(std::uint64_t bits, std::size_t length);

} // namespace powerlab

#endif // POWERLAB_WORD_HPP
