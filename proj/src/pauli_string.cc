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

#include "qgraph/pauli_string.h"

#include <bit>
#include <stdexcept>

#include "qgraph/errors.h"

namespace qgraph {

PauliString PauliString::from_str(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.negative = negative;
    for (std::size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.xs.set(q, true);
                break;
            case 'Y':
                p.xs.set(q, true);
                p.zs.set(q, true);
                break;
            case 'Z':
                p.zs.set(q, true);
                break;
            default:
                throw std::invalid_argument("PauliString::from_str: unexpected character '" + std::string(1, text[q]) + "'");
        }
    }
    return p;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t q, char pauli) {
    if (q >= num_qubits) {
        throw IndexError("PauliString::single: qubit " + std::to_string(q) + " out of range");
    }
    PauliString p(num_qubits);
    if (pauli == 'X' || pauli == 'Y') {
        p.xs.set(q, true);
    }
    if (pauli == 'Z' || pauli == 'Y') {
        p.zs.set(q, true);
    }
    if (pauli != 'X' && pauli != 'Y' && pauli != 'Z' && pauli != 'I') {
        throw std::invalid_argument("PauliString::single: pauli must be one of IXYZ");
    }
    return p;
}

char PauliString::pauli_at(std::size_t q) const {
    static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
    return kNames[xs.get(q) | (zs.get(q) << 1)];
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw ShapeError("PauliString::commutes: size mismatch");
    }
    return xs.dot(other.zs) == zs.dot(other.xs);
}

std::uint8_t PauliString::inplace_right_mul(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw ShapeError("PauliString multiplication: size mismatch");
    }
    auto x1 = xs.words();
    auto z1 = zs.words();
    auto x2 = rhs.xs.words();
    auto z2 = rhs.zs.words();
    int log_i = 0;
    for (std::size_t w = 0; w < x1.size(); w++) {
        gf2::BitVector::Word a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        // YZ=iX, XY=iZ, ZX=iY contribute +i; the reversed orders contribute -i.
        gf2::BitVector::Word plus = (a & b & d & ~c) | (a & ~b & c & d) | (~a & b & c & ~d);
        gf2::BitVector::Word minus = (a & b & c & ~d) | (a & ~b & ~c & d) | (~a & b & c & d);
        log_i += std::popcount(plus) - std::popcount(minus);
        x1[w] = a ^ c;
        z1[w] = b ^ d;
    }
    negative ^= rhs.negative;
    return static_cast<std::uint8_t>(((log_i % 4) + 4) % 4);
}

std::string PauliString::str() const {
    std::string s(1, negative ? '-' : '+');
    for (std::size_t q = 0; q < num_qubits(); q++) {
        char c = pauli_at(q);
        s.push_back(c == 'I' ? '_' : c);
    }
    return s;
}

PauliString multiply_commuting(const PauliString &a, const PauliString &b) {
    PauliString result = a;
    std::uint8_t log_i = result.inplace_right_mul(b);
    if (log_i & 1) {
        throw IntegrityError("multiply_commuting: operands anticommute");
    }
    result.negative ^= (log_i == 2);
    return result;
}

}  // namespace qgraph
