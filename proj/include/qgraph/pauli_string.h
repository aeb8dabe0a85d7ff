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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qgraph/gf2.h"

namespace qgraph {

/// A signed Hermitian Pauli product on n qubits. A qubit with both x and z bits
/// set holds Y (not XZ), so the sign alone carries the phase.
struct PauliString {
    gf2::BitVector xs;
    gf2::BitVector zs;
    bool negative = false;

    PauliString() = default;
    explicit PauliString(std::size_t num_qubits) : xs(num_qubits), zs(num_qubits) {
    }
    /// Parses strings like "+XZ_Y" or "-IXX". Leading sign is optional.
    static PauliString from_str(std::string_view text);
    /// `pauli` on qubit `q` and identity elsewhere.
    static PauliString single(std::size_t num_qubits, std::size_t q, char pauli);

    std::size_t num_qubits() const {
        return xs.size();
    }
    int sign() const {
        return negative ? -1 : 1;
    }
    char pauli_at(std::size_t q) const;
    bool is_identity() const {
        return !xs.any() && !zs.any();
    }

    bool commutes(const PauliString &other) const;

    /// this <- this * rhs. The sign bits are combined, but the extra power of i
    /// (mod 4) produced by the single-qubit products is returned rather than
    /// applied. It is 0 or 2 whenever the operands commute.
    std::uint8_t inplace_right_mul(const PauliString &rhs);

    /// Bits only: x part then z part, 2n long.
    gf2::BitVector symplectic() const {
        return xs.concat(zs);
    }

    std::string str() const;
    bool operator==(const PauliString &other) const = default;
};

/// Product of two commuting Pauli strings. Throws IntegrityError if they anticommute.
PauliString multiply_commuting(const PauliString &a, const PauliString &b);

}  // namespace qgraph
