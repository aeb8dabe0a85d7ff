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
#include <limits>
#include <span>
#include <vector>

#include "qgraph/gf2.h"
#include "qgraph/graph_state.h"

namespace qgraph {

/// Supplies identically prepared copies of one graph state.
class CopySource {
   public:
    virtual ~CopySource() = default;
    virtual std::size_t num_vertices() const = 0;
    /// A fresh copy. Throws ResourceExhausted when none are left.
    virtual GraphRegister take() = 0;
};

/// Prepares copy i with seed + i, up to `max_copies` copies.
class PreparedCopies : public CopySource {
   public:
    PreparedCopies(Graph g, std::uint64_t seed,
                   std::size_t max_copies = std::numeric_limits<std::size_t>::max());

    std::size_t num_vertices() const override {
        return graph_.num_vertices();
    }
    GraphRegister take() override;
    std::size_t copies_taken() const {
        return taken_;
    }

   private:
    Graph graph_;
    std::uint64_t seed_;
    std::size_t max_copies_;
    std::size_t taken_ = 0;
};

/// Copies of an existing register's state, copy i reseeded with seed + i.
class RegisterCopies : public CopySource {
   public:
    RegisterCopies(GraphRegister source, std::uint64_t seed,
                   std::size_t max_copies = std::numeric_limits<std::size_t>::max());

    std::size_t num_vertices() const override {
        return source_.num_vertices();
    }
    GraphRegister take() override;
    std::size_t copies_taken() const {
        return taken_;
    }

   private:
    GraphRegister source_;
    std::uint64_t seed_;
    std::size_t max_copies_;
    std::size_t taken_ = 0;
};

/// X-measurement records of one linked round. Bit 1 means outcome -1.
struct ReadoutRound {
    gf2::BitVector a;
    gf2::BitVector b;
    gf2::BitVector c;
};

struct ReadoutRun {
    Graph recovered;
    std::size_t copies_used = 0;
    /// Linked rounds executed, retained or not.
    std::size_t iterations = 0;
    /// The retained rounds; their b vectors form a basis.
    std::vector<ReadoutRound> rounds;
    gf2::BitVector d;
    /// Linking CZs, the final disentangling CZs, and every X measurement.
    GateCounters counters;
};

/// Links two copies through |+>^n with CZ(A_i, B_i) CZ(B_i, C_i) and measures
/// A_i, B_i, C_i in the X basis, qubit by qubit. Consumes two copies.
ReadoutRound linked_round(CopySource &source, std::uint64_t seed);

/// Lambda with column i solving b_k . x_i = a_k^i + c_k^i for every retained k.
/// Throws IntegrityError if the solution is not a symmetric zero-diagonal matrix.
gf2::BitMatrix recover_lambda(std::span<const ReadoutRound> rounds);

/// Full reconstruction. Rounds whose b does not raise the rank are discarded.
/// Throws ResourceExhausted after `max_rounds` rounds (0 selects 50n).
ReadoutRun readout(CopySource &source, std::uint64_t seed, std::size_t max_rounds = 0);

}  // namespace qgraph
