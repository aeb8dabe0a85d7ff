// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgraph::gf2 {

/// Packed vector over GF(2). Bits past `size()` are always zero.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t len);
    BitVector(std::initializer_list<int> bits);
    static BitVector from_string(std::string_view bits);  // "0110"

    std::size_t size() const {
        return len_;
    }
    std::size_t num_words() const {
        return words_.size();
    }
    std::span<Word> words() {
        return words_;
    }
    std::span<const Word> words() const {
        return words_;
    }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    void set(std::size_t i, bool value) {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
    }
    bool operator[](std::size_t i) const {
        return get(i);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector &operator&=(const BitVector &other);
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    /// Mod-2 inner product.
    bool dot(const BitVector &other) const;
    std::size_t popcount() const;
    bool any() const;
    /// Index of the lowest set bit at or after `start`, or size() if none.
    std::size_t find_next(std::size_t start) const;

    void push_back(bool bit);
    /// Removes bit `i`, shifting higher bits down by one.
    void erase(std::size_t i);
    /// Appends `other` after the current bits.
    BitVector concat(const BitVector &other) const;
    BitVector slice(std::size_t start, std::size_t count) const;

    std::string str() const;

   private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);
    static BitMatrix identity(std::size_t n);
    /// Throws std::invalid_argument unless `rows` is square and symmetric.
    static BitMatrix symmetric(std::vector<BitVector> rows);
    static BitMatrix from_rows(std::vector<BitVector> rows);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool get(std::size_t r, std::size_t c) const {
        return data_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool v) {
        data_[r].set(c, v);
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r].flip(c);
    }
    BitVector &row(std::size_t r) {
        return data_[r];
    }
    const BitVector &row(std::size_t r) const {
        return data_[r];
    }
    BitVector column(std::size_t c) const;

    BitMatrix transposed() const;
    BitVector operator*(const BitVector &x) const;
    bool is_symmetric() const;
    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Row rank. The argument is not modified.
std::size_t rank(const BitMatrix &m);

/// Some x with A x = b, or nullopt when inconsistent. Unique when rank(A) == cols.
std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b);

/// Basis (as rows) of { c : sum_i c_i * row_i(M) = 0 }.
BitMatrix left_kernel(const BitMatrix &m);

/// Exact value of sum_x (-1)^{Q(x)}: either zero or sign * 2^exponent.
struct CharSum {
    bool zero = true;
    int sign = 1;
    std::uint32_t exponent = 0;

    static CharSum make_zero() {
        return {};
    }
    static CharSum make(int sign, std::uint32_t exponent) {
        return {false, sign, exponent};
    }
    bool operator==(const CharSum &other) const = default;
};

/// Character sum of Q(x) = x^T U x + d.x over all x in F_2^n, where U is
/// strictly upper triangular. Eliminates variables pairwise, so the cost is
/// polynomial in n. Throws std::invalid_argument on a malformed U.
CharSum quad_char_sum(const BitMatrix &upper, const BitVector &linear);

}  // namespace qgraph::gf2
