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

#include "qgraph/gf2.h"

#include <stdexcept>
#include <utility>

namespace qgraph::gf2 {

namespace {

std::size_t words_for(std::size_t bits) {
    return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {
}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) {
        set(i++, b != 0);
    }
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected only '0' and '1'");
        }
    }
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector result = *this;
    result &= other;
    return result;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (Word w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

std::size_t BitVector::find_next(std::size_t start) const {
    if (start >= len_) {
        return len_;
    }
    std::size_t w = start / kWordBits;
    Word cur = words_[w] & (~Word{0} << (start % kWordBits));
    while (true) {
        if (cur) {
            return w * kWordBits + std::countr_zero(cur);
        }
        if (++w >= words_.size()) {
            return len_;
        }
        cur = words_[w];
    }
}

void BitVector::push_back(bool bit) {
    if (len_ % kWordBits == 0) {
        words_.push_back(0);
    }
    len_++;
    set(len_ - 1, bit);
}

void BitVector::erase(std::size_t i) {
    if (i >= len_) {
        throw std::out_of_range("BitVector::erase index out of range");
    }
    std::size_t w = i / kWordBits;
    std::size_t b = i % kWordBits;
    Word low = words_[w] & ((Word{1} << b) - 1);
    Word high = b + 1 < kWordBits ? (words_[w] >> (b + 1)) << b : 0;
    words_[w] = low | high;
    for (std::size_t k = w + 1; k < words_.size(); k++) {
        words_[k - 1] |= words_[k] << (kWordBits - 1);
        words_[k] >>= 1;
    }
    len_--;
    if (words_.size() > words_for(len_)) {
        words_.pop_back();
    }
}

BitVector BitVector::concat(const BitVector &other) const {
    BitVector result(len_ + other.len_);
    result.words_.assign(result.words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); w++) {
        result.words_[w] = words_[w];
    }
    for (std::size_t i = other.find_next(0); i < other.len_; i = other.find_next(i + 1)) {
        result.set(len_ + i, true);
    }
    return result;
}

BitVector BitVector::slice(std::size_t start, std::size_t count) const {
    if (start + count > len_) {
        throw std::out_of_range("BitVector::slice out of range");
    }
    BitVector result(count);
    for (std::size_t i = find_next(start); i < start + count; i = find_next(i + 1)) {
        result.set(i - start, true);
    }
    return result;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("BitMatrix rows must have identical length");
        }
        data_.emplace_back(r);
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto &r : rows) {
        if (r.size() != m.cols_) {
            throw std::invalid_argument("BitMatrix rows must have identical length");
        }
    }
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::symmetric(std::vector<BitVector> rows) {
    BitMatrix m = from_rows(std::move(rows));
    if (m.rows_ != m.cols_ || !m.is_symmetric()) {
        throw std::invalid_argument("BitMatrix::symmetric: matrix is not symmetric");
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector result(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        result.set(r, get(r, c));
    }
    return result;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = data_[r].find_next(0); c < cols_; c = data_[r].find_next(c + 1)) {
            t.set(c, r, true);
        }
    }
    return t;
}

BitVector BitMatrix::operator*(const BitVector &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("BitMatrix * BitVector: shape mismatch");
    }
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        y.set(r, data_[r].dot(x));
    }
    return y;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = r + 1; c < cols_; c++) {
            if (get(r, c) != get(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::size_t rank(const BitMatrix &m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < rows.size(); c++) {
        std::size_t pivot = rk;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rk], rows[pivot]);
        for (std::size_t r = rk + 1; r < rows.size(); r++) {
            if (rows[r].get(c)) {
                rows[r] ^= rows[rk];
            }
        }
        rk++;
    }
    return rk;
}

std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b) {
    if (a.rows() != b.size()) {
        throw std::invalid_argument("solve: A.rows != b.len");
    }
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); r++) {
        rows.push_back(a.row(r));
    }
    BitVector rhs = b;

    std::vector<std::size_t> pivot_cols;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < a.cols() && rk < rows.size(); c++) {
        std::size_t pivot = rk;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rk], rows[pivot]);
        bool tmp = rhs.get(rk);
        rhs.set(rk, rhs.get(pivot));
        rhs.set(pivot, tmp);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != rk && rows[r].get(c)) {
                rows[r] ^= rows[rk];
                rhs.set(r, rhs.get(r) ^ rhs.get(rk));
            }
        }
        pivot_cols.push_back(c);
        rk++;
    }
    for (std::size_t r = rk; r < rows.size(); r++) {
        if (rhs.get(r)) {
            return std::nullopt;
        }
    }
    BitVector x(a.cols());
    for (std::size_t r = 0; r < rk; r++) {
        x.set(pivot_cols[r], rhs.get(r));
    }
    return x;
}

BitMatrix left_kernel(const BitMatrix &m) {
    std::size_t n = m.rows();
    std::vector<BitVector> rows;
    std::vector<BitVector> track;
    rows.reserve(n);
    track.reserve(n);
    for (std::size_t r = 0; r < n; r++) {
        rows.push_back(m.row(r));
        BitVector t(n);
        t.set(r, true);
        track.push_back(std::move(t));
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < n; c++) {
        std::size_t pivot = rk;
        while (pivot < n && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(rows[rk], rows[pivot]);
        std::swap(track[rk], track[pivot]);
        for (std::size_t r = rk + 1; r < n; r++) {
            if (rows[r].get(c)) {
                rows[r] ^= rows[rk];
                track[r] ^= track[rk];
            }
        }
        rk++;
    }
    std::vector<BitVector> basis(track.begin() + static_cast<std::ptrdiff_t>(rk), track.end());
    if (basis.empty()) {
        return BitMatrix(0, n);
    }
    return BitMatrix::from_rows(std::move(basis));
}

CharSum quad_char_sum(const BitMatrix &upper, const BitVector &linear) {
    std::size_t n = linear.size();
    if (upper.rows() != n || upper.cols() != n) {
        throw std::invalid_argument("quad_char_sum: U must be square with dimension d.len");
    }
    // Symmetrize: adj[i][j] = 1 iff the monomial x_i x_j appears.
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; i++) {
        const BitVector &row = upper.row(i);
        for (std::size_t j = row.find_next(0); j < n; j = row.find_next(j + 1)) {
            if (j <= i) {
                throw std::invalid_argument("quad_char_sum: U must be strictly upper triangular");
            }
            adj.set(i, j, true);
            adj.set(j, i, true);
        }
    }
    BitVector lin = linear;
    bool constant = false;
    std::uint32_t exponent = 0;

    auto detach = [&](std::size_t v) {
        BitVector &row = adj.row(v);
        for (std::size_t u = row.find_next(0); u < n; u = row.find_next(u + 1)) {
            adj.set(u, v, false);
        }
        row = BitVector(n);
        lin.set(v, false);
    };

    std::vector<bool> eliminated(n, false);
    for (std::size_t k = 0; k < n; k++) {
        if (eliminated[k]) {
            continue;
        }
        eliminated[k] = true;
        const BitVector &row_k = adj.row(k);
        std::size_t j = row_k.find_next(0);
        if (j == n) {
            // x_k appears at most linearly.
            if (lin.get(k)) {
                return CharSum::make_zero();
            }
            exponent++;
            continue;
        }
        // Summing x_k forces x_j = lin_k + sum_{i != j} adj[k][i] x_i.
        BitVector subst = row_k;
        subst.set(j, false);
        bool subst_const = lin.get(k);
        detach(k);

        // Replace x_j * (m . x + lin_j) by (subst . x + subst_const) * (m . x + lin_j).
        eliminated[j] = true;
        BitVector m = adj.row(j);
        bool lin_j = lin.get(j);
        detach(j);
        for (std::size_t i = subst.find_next(0); i < n; i = subst.find_next(i + 1)) {
            adj.row(i) ^= m;
        }
        for (std::size_t i = m.find_next(0); i < n; i = m.find_next(i + 1)) {
            adj.row(i) ^= subst;
        }
        lin ^= subst & m;
        if (lin_j) {
            lin ^= subst;
        }
        if (subst_const) {
            lin ^= m;
        }
        constant ^= subst_const && lin_j;
        exponent++;
    }
    return CharSum::make(constant ? -1 : 1, exponent);
}

}  // namespace qgraph::gf2
