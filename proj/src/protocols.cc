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

#include "qgraph/protocols.h"

#include <exception>
#include <string>

#include "qgraph/errors.h"
#include "qgraph/gf2.h"

namespace qgraph {

namespace {

constexpr std::uint64_t kSecondCopySalt = 0x9E3779B97F4A7C15ULL;

Dyadic one() {
    return Dyadic(1);
}

// Outcome law of a Pauli measurement on a stabilizer state.
std::pair<Dyadic, Dyadic> plus_minus_law(const Tableau &t, const PauliString &p) {
    switch (t.contains(p)) {
        case Membership::kPlus:
            return {one(), Dyadic(0)};
        case Membership::kMinus:
            return {Dyadic(0), one()};
        default:
            return {Dyadic::inverse_pow2(1), Dyadic::inverse_pow2(1)};
    }
}

std::string sign_name(int sign) {
    return sign > 0 ? "+1" : "-1";
}

std::string consistent_name(int sign) {
    return "Consistent(" + sign_name(sign) + ")";
}

PauliString parity_observable(std::size_t n, ParityKind kind) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; q++) {
        p.xs.set(q, true);
        if (kind == ParityKind::kOdd) {
            p.zs.set(q, true);
        }
    }
    return p;
}

TrialRecord two_outcome_record(std::string protocol, std::string yes, std::string no, const Dyadic &p_no,
                               std::uint64_t seed, std::size_t copies) {
    TrialRecord rec;
    rec.protocol = std::move(protocol);
    rec.seed = seed;
    rec.copies = copies;
    rec.probabilities = {{yes, one() - p_no}, {no, p_no}};
    rec.deterministic = p_no.is_zero() || p_no == one();
    std::mt19937_64 rng(seed);
    rec.outcome = sample_bernoulli(p_no, rng) ? no : yes;
    return rec;
}

void finish_law(TrialRecord &rec) {
    for (const auto &[name, p] : rec.probabilities) {
        if (p == one()) {
            rec.deterministic = true;
        }
    }
}

}  // namespace

Dyadic TrialRecord::probability_of(std::string_view outcome_name) const {
    for (const auto &[name, p] : probabilities) {
        if (name == outcome_name) {
            return p;
        }
    }
    return Dyadic(0);
}

OverlapResult overlap_mag2(const GraphRegister &r1, const GraphRegister &r2) {
    if (r1.num_vertices() != r2.num_vertices()) {
        return {Dyadic(0), true};
    }
    return {inner_product_mag2(r1.tableau(), r2.tableau()), false};
}

Dyadic overlap_via_char_sum(const Graph &g1, const Graph &g2) {
    std::size_t n = g1.num_vertices();
    if (g2.num_vertices() != n) {
        return Dyadic(0);
    }
    gf2::BitMatrix upper(n, n);
    gf2::BitVector linear(n);
    for (std::size_t u = 0; u < n; u++) {
        linear.set(u, g1.has_loop(u) != g2.has_loop(u));
        for (std::size_t v = u + 1; v < n; v++) {
            upper.set(u, v, g1.has_edge(u, v) != g2.has_edge(u, v));
        }
    }
    gf2::CharSum sum = gf2::quad_char_sum(upper, linear);
    if (sum.zero) {
        return Dyadic(0);
    }
    return Dyadic::inverse_pow2(static_cast<std::uint32_t>(2 * n - 2 * sum.exponent));
}

bool sample_bernoulli(const Dyadic &p, std::mt19937_64 &rng) {
    if (p.is_zero()) {
        return false;
    }
    if (p >= one()) {
        return true;
    }
    Dyadic::Int r = 0;
    std::uint32_t k = p.exponent();
    for (std::uint32_t bits = 0; bits < k; bits += 64) {
        r <<= 64;
        r += rng();
    }
    std::uint32_t excess = (k + 63) / 64 * 64 - k;
    r >>= excess;
    return r < p.numerator();
}

TrialRecord equality_test(const GraphRegister &r1, const GraphRegister &r2, std::uint64_t seed) {
    OverlapResult ov = overlap_mag2(r1, r2);
    Dyadic p_diff = ov.size_mismatch ? one() : (one() - ov.mag2).half();
    return two_outcome_record("equality", "Equal", "Different", p_diff, seed, 2);
}

TrialRecord automorphism_test(const GraphRegister &r, std::span<const std::size_t> perm, std::uint64_t seed) {
    check_permutation(perm, r.num_vertices());
    Dyadic ov = inner_product_mag2(r.tableau(), r.tableau().permuted(perm));
    return two_outcome_record("automorphism", "+1", "-1", (one() - ov).half(), seed, 1);
}

TrialRecord vertex_compare(GraphRegister &r, std::size_t a, std::size_t b, std::uint64_t seed) {
    r.shadow().check_vertex(a);
    r.shadow().check_vertex(b);
    if (a == b) {
        throw PreconditionError("vcompare needs two distinct vertices");
    }
    char axis = r.shadow().has_edge(a, b) ? 'Y' : 'X';
    PauliString p(r.num_vertices());
    for (std::size_t q : {a, b}) {
        p.xs.set(q, true);
        p.zs.set(q, axis == 'Y');
    }
    Tableau &t = r.mutable_tableau();
    auto [plus, minus] = plus_minus_law(t, p);
    t.reseed(seed);
    MeasureResult m = t.measure(p);

    TrialRecord rec;
    rec.protocol = std::string("vcompare_") + axis + axis;
    rec.outcome = sign_name(m.outcome);
    rec.probabilities = {{"+1", plus}, {"-1", minus}};
    rec.seed = seed;
    rec.copies = 1;
    finish_law(rec);
    return rec;
}

int parity_sign(const Graph &g, ParityKind kind) {
    std::size_t exponent = g.num_loops();
    if (kind == ParityKind::kEven) {
        exponent += g.num_edges();
    } else {
        for (std::size_t v = 0; v < g.num_vertices(); v++) {
            exponent += g.degree(v) % 4 == 1;
        }
    }
    return exponent % 2 == 0 ? 1 : -1;
}

TrialRecord degree_parity_test(GraphRegister &r1, GraphRegister &r2, ParityKind kind, std::uint64_t seed) {
    if (r1.num_vertices() != r2.num_vertices()) {
        throw ShapeError("parity test copies have " + std::to_string(r1.num_vertices()) + " and " +
                         std::to_string(r2.num_vertices()) + " vertices");
    }
    PauliString p = parity_observable(r1.num_vertices(), kind);
    auto [p1, m1] = plus_minus_law(r1.tableau(), p);
    auto [p2, m2] = plus_minus_law(r2.tableau(), p);
    r1.mutable_tableau().reseed(seed);
    r2.mutable_tableau().reseed(seed ^ kSecondCopySalt);
    int o1 = r1.mutable_tableau().measure(p).outcome;
    int o2 = r2.mutable_tableau().measure(p).outcome;

    TrialRecord rec;
    rec.protocol = kind == ParityKind::kEven ? "parity_euler" : "parity_odd";
    rec.outcome = o1 == o2 ? consistent_name(o1) : "Mismatch";
    rec.probabilities = {{consistent_name(1), p1 * p2}, {consistent_name(-1), m1 * m2}, {"Mismatch", p1 * m2 + m1 * p2}};
    rec.seed = seed;
    rec.copies = 2;
    finish_law(rec);
    return rec;
}

TrialRecord degree_parity_single(GraphRegister &r, ParityKind kind, int expected_sign, std::uint64_t seed) {
    if (expected_sign != 1 && expected_sign != -1) {
        throw PreconditionError("expected sign must be +1 or -1");
    }
    PauliString p = parity_observable(r.num_vertices(), kind);
    auto [plus, minus] = plus_minus_law(r.tableau(), p);
    r.mutable_tableau().reseed(seed);
    int o = r.mutable_tableau().measure(p).outcome;

    TrialRecord rec;
    rec.protocol = kind == ParityKind::kEven ? "parity_euler_single" : "parity_odd_single";
    rec.outcome = o == expected_sign ? consistent_name(o) : "Mismatch";
    Dyadic hit = expected_sign > 0 ? plus : minus;
    rec.probabilities = {{consistent_name(expected_sign), hit}, {"Mismatch", one() - hit}};
    rec.seed = seed;
    rec.copies = 1;
    finish_law(rec);
    return rec;
}

std::vector<TrialRecord> run_trials(std::size_t trials, std::uint64_t seed,
                                    const std::function<TrialRecord(std::uint64_t)> &trial) {
    std::vector<TrialRecord> out(trials);
    std::vector<std::exception_ptr> errors(trials);
    const std::int64_t count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; i++) {
        try {
            out[i] = trial(seed + static_cast<std::uint64_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

std::vector<TrialRecord> run_trials_serial(std::size_t trials, std::uint64_t seed,
                                           const std::function<TrialRecord(std::uint64_t)> &trial) {
    std::vector<TrialRecord> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; i++) {
        out.push_back(trial(seed + i));
    }
    return out;
}

}  // namespace qgraph
