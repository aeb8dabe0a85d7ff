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

// Acceptance checks. Prints one PASS/FAIL line per check and exits non-zero
// if any check fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qgraph/cli/bench.h"
#include "qgraph/cli/runner.h"
#include "qgraph/dense_sim.h"
#include "qgraph/errors.h"
#include "qgraph/graph_io.h"
#include "qgraph/graph_state.h"
#include "qgraph/protocols.h"
#include "qgraph/readout.h"
#include "test_util.h"

namespace qgraph {
namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using Set = std::vector<std::size_t>;

constexpr std::size_t kTrials = 10000;

int failures = 0;

void report(const std::string &id, bool ok, const std::string &detail) {
    std::printf("%s %-4s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Graph make(std::size_t n, Edges edges, Set loops = {}) {
    return Graph::from_edges(n, edges, loops);
}

double sigma(double p, std::size_t n) {
    return std::sqrt(p * (1 - p) / static_cast<double>(n));
}

double frequency(const std::vector<TrialRecord> &records, const std::string &outcome) {
    std::size_t hits = 0;
    for (const auto &r : records) {
        hits += r.outcome == outcome;
    }
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

Set random_subset(std::size_t n, std::mt19937_64 &rng) {
    Set s;
    for (std::size_t v = 0; v < n; v++) {
        if (rng() & 1) {
            s.push_back(v);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

void correspondence_fuzz() {
    std::mt19937_64 rng(1001);
    std::size_t steps = 0;
    std::string failure;
    for (int seq = 0; seq < 1000 && failure.empty(); seq++) {
        std::size_t n = 1 + rng() % 12;
        GraphRegister r = GraphRegister::prepare(testing::random_graph(n, rng), seq);
        std::size_t length = 1 + rng() % 50;
        for (std::size_t step = 0; step < length; step++) {
            std::size_t m = r.num_vertices();
            if (m == 0) {
                r.add_vertex();
                m = 1;
            }
            std::size_t a = rng() % m;
            std::size_t b = m > 1 ? (a + 1 + rng() % (m - 1)) % m : a;
            switch (rng() % 11) {
                case 0:
                    r.cz(a, b);
                    break;
                case 1:
                    if (a != b) {
                        r.cnot(a, b);
                    }
                    break;
                case 2:
                    if (a != b && !r.shadow().has_edge(a, b)) {
                        r.fx(a, b);
                    }
                    break;
                case 3:
                    if (a != b) {
                        r.fx_wrapped(a, b);
                    }
                    break;
                case 4:
                    r.apply_pauli(static_cast<PauliKind>(rng() % 3), a);
                    break;
                case 5:
                    r.local_complement(a);
                    break;
                case 6: {
                    Set s1;
                    Set s2;
                    for (std::size_t v = 0; v < m; v++) {
                        switch (rng() % 3) {
                            case 0:
                                s1.push_back(v);
                                break;
                            case 1:
                                s2.push_back(v);
                                break;
                            default:
                                break;
                        }
                    }
                    r.interset_complement(s1, s2);
                    break;
                }
                case 7:
                    r.intraset_complement(random_subset(m, rng));
                    break;
                case 8:
                    if (m < 12) {
                        r.add_vertex();
                    }
                    break;
                case 9:
                    r.delete_vertex(a, DeleteMode::kBlind);
                    break;
                default:
                    r.delete_vertex(a, DeleteMode::kCorrected);
                    break;
            }
            steps++;
            if (!r.verify()) {
                failure = fmt("sequence %d step %zu", seq, step);
                break;
            }
        }
    }
    report("1", failure.empty(),
            failure.empty() ? fmt("correspondence fuzz: 1000 sequences, %zu steps, verify() held after every step", steps)
                            : "correspondence fuzz: verify() failed at " + failure);
}

// ---------------------------------------------------------------------------

enum class Manip { kX, kY, kZ, kCz, kCnot, kFx, kFxw, kLocalComp, kIac, kIec, kDeleteBlind, kDeleteCorrected };

const char *manip_name(Manip m) {
    static const char *names[] = {"x", "y", "z", "cz", "cnot", "fx", "fxw", "localcomp", "iac", "iec", "delete-blind",
                                  "delete-corrected"};
    return names[static_cast<int>(m)];
}

// Applies one manipulation to a register and its circuit to a dense state.
// Returns false when the manipulation does not apply to these arguments.
bool apply_both(Manip m, GraphRegister &r, dense::StateVector &v, std::size_t a, std::size_t b, const Set &s1,
                const Set &s2) {
    const Graph g = r.shadow();
    switch (m) {
        case Manip::kX:
        case Manip::kY:
        case Manip::kZ: {
            Gate gate = m == Manip::kX ? Gate::X : m == Manip::kY ? Gate::Y : Gate::Z;
            r.apply_pauli(m == Manip::kX ? PauliKind::X : m == Manip::kY ? PauliKind::Y : PauliKind::Z, a);
            dense::apply_gate(v, gate, a);
            return true;
        }
        case Manip::kCz:
            if (a == b) {
                return false;
            }
            r.cz(a, b);
            dense::apply_gate(v, Gate::CZ, a, b);
            return true;
        case Manip::kCnot:
            if (a == b) {
                return false;
            }
            r.cnot(a, b);
            dense::apply_gate(v, Gate::CNOT, a, b);
            return true;
        case Manip::kFx:
        case Manip::kFxw: {
            bool adjacent = g.has_edge(a, b);
            if (a == b || (m == Manip::kFx && adjacent)) {
                return false;
            }
            if (m == Manip::kFx) {
                r.fx(a, b);
            } else {
                r.fx_wrapped(a, b);
            }
            if (adjacent) {
                dense::apply_gate(v, Gate::CZ, a, b);
            }
            dense::apply_gate(v, Gate::H, a);
            dense::apply_gate(v, Gate::H, b);
            dense::apply_gate(v, Gate::CZ, a, b);
            dense::apply_gate(v, Gate::H, a);
            dense::apply_gate(v, Gate::H, b);
            if (adjacent) {
                dense::apply_gate(v, Gate::CZ, a, b);
            }
            return true;
        }
        case Manip::kLocalComp:
            r.local_complement(a);
            dense::apply_gate(v, Gate::SQRT_MINUS_IX, a);
            for (std::size_t u : g.neighbor_list(a)) {
                dense::apply_gate(v, Gate::SQRT_IZ, u);
            }
            return true;
        case Manip::kIac:
            r.interset_complement(s1, s2);
            for (std::size_t x : s1) {
                for (std::size_t y : s2) {
                    dense::apply_gate(v, Gate::CZ, x, y);
                }
            }
            return true;
        case Manip::kIec:
            r.intraset_complement(s1);
            for (std::size_t i = 0; i < s1.size(); i++) {
                for (std::size_t j = i + 1; j < s1.size(); j++) {
                    dense::apply_gate(v, Gate::CZ, s1[i], s1[j]);
                }
            }
            return true;
        case Manip::kDeleteBlind:
        case Manip::kDeleteCorrected: {
            if (g.num_vertices() < 2) {
                return false;
            }
            bool corrected = m == Manip::kDeleteCorrected;
            int bit = r.delete_vertex(a, corrected ? DeleteMode::kCorrected : DeleteMode::kBlind);
            if (corrected && bit == 1) {
                for (std::size_t u : g.neighbor_list(a)) {
                    dense::apply_gate(v, Gate::Z, u);
                }
            }
            dense::project_and_remove(v, a, bit);
            return true;
        }
    }
    return false;
}

constexpr Manip kAllManips[] = {Manip::kX,   Manip::kY,   Manip::kZ,         Manip::kCz,
                                Manip::kCnot, Manip::kFx,  Manip::kFxw,       Manip::kLocalComp,
                                Manip::kIac,  Manip::kIec, Manip::kDeleteBlind, Manip::kDeleteCorrected};

struct OracleTally {
    std::size_t cases = 0;
    std::string failure;

    void check(Manip m, const Graph &g, GraphRegister &r, const dense::StateVector &v, std::size_t a, std::size_t b) {
        cases++;
        if (!failure.empty()) {
            return;
        }
        bool tableau_ok = false;
        bool shadow_ok = false;
        try {
            tableau_ok = dense::equal_up_to_phase(dense::tableau_state(r.tableau()), v, 1e-9);
            shadow_ok = dense::equal_up_to_phase(dense::graph_state_vector(r.shadow()), v, 1e-9);
        } catch (const std::exception &) {
        }
        if (!tableau_ok || !shadow_ok) {
            failure = fmt("%s(%zu,%zu) on %s (%s)", manip_name(m), a, b, format_graph(g).c_str(),
                          tableau_ok ? "shadow" : "tableau");
        }
    }
};

void oracle_equivalence() {
    OracleTally tally;
    std::mt19937_64 rng(2002);
    std::uint64_t seed = 0;
    for (std::size_t n = 1; n <= 4; n++) {
        for (const Graph &g : testing::all_graphs(n)) {
            for (Manip m : kAllManips) {
                for (std::size_t a = 0; a < n; a++) {
                    for (std::size_t b = 0; b < n; b++) {
                        bool pair_op = m == Manip::kCz || m == Manip::kCnot || m == Manip::kFx || m == Manip::kFxw;
                        if (!pair_op && b > 0) {
                            break;
                        }
                        Set s1 = random_subset(n, rng);
                        Set s2;
                        if (m == Manip::kIac) {
                            for (std::size_t v = 0; v < n; v++) {
                                if (std::find(s1.begin(), s1.end(), v) == s1.end() && (rng() & 1)) {
                                    s2.push_back(v);
                                }
                            }
                        }
                        GraphRegister r = GraphRegister::prepare(g, seed++);
                        dense::StateVector v = dense::graph_state_vector(g);
                        if (apply_both(m, r, v, a, b, s1, s2)) {
                            tally.check(m, g, r, v, a, b);
                        }
                    }
                }
            }
        }
    }
    std::size_t exhaustive = tally.cases;
    std::size_t random_cases = 0;
    while (random_cases < 200) {
        std::size_t n = 2 + rng() % 7;
        Graph g = testing::random_graph(n, rng);
        Manip m = kAllManips[rng() % std::size(kAllManips)];
        std::size_t a = rng() % n;
        std::size_t b = (a + 1 + rng() % (n - 1)) % n;
        Set s1 = random_subset(n, rng);
        Set s2;
        for (std::size_t v = 0; v < n; v++) {
            if (std::find(s1.begin(), s1.end(), v) == s1.end() && (rng() & 1)) {
                s2.push_back(v);
            }
        }
        GraphRegister r = GraphRegister::prepare(g, seed++);
        dense::StateVector v = dense::graph_state_vector(g);
        if (apply_both(m, r, v, a, b, s1, s2)) {
            tally.check(m, g, r, v, a, b);
            random_cases++;
        }
    }
    report("2", tally.failure.empty(),
            tally.failure.empty()
                ? fmt("oracle equivalence: %zu exhaustive cases (n<=4) and %zu random cases (n<=8); tableau and "
                      "shadow match dense up to phase (tol 1e-9)",
                      exhaustive, random_cases)
                : "oracle equivalence: mismatch in " + tally.failure);
}

// ---------------------------------------------------------------------------

bool is_zero_or_inverse_power(const Dyadic &d) {
    if (d.is_zero()) {
        return true;
    }
    return d.numerator() == 1 && d.exponent() >= 1;
}

void overlap_law() {
    std::mt19937_64 rng(3003);
    std::string failure;
    std::size_t dense_checked = 0;
    for (int pair = 0; pair < 500 && failure.empty(); pair++) {
        std::size_t n = 1 + pair % 10;
        Graph a = testing::random_graph(n, rng);
        Graph b = testing::random_graph(n, rng);
        while (b == a) {
            b = testing::random_graph(n, rng);
        }
        Dyadic mag2 = overlap_mag2(GraphRegister::prepare(a, pair), GraphRegister::prepare(b, pair)).mag2;
        if (!is_zero_or_inverse_power(mag2) || mag2 > Dyadic::inverse_pow2(1)) {
            failure = fmt("pair %d has |<G1|G2>|^2 = %s", pair, mag2.str().c_str());
        } else if (n <= 8) {
            dense_checked++;
            double d = testing::dense_overlap_mag2(a, b);
            // Denominators are at most 2^16 here, far coarser than the tolerance.
            if (std::abs(d - mag2.to_double()) > 1e-12) {
                failure = fmt("pair %d: exact %s vs dense %.17g", pair, mag2.str().c_str(), d);
            }
        }
    }
    report("3", failure.empty(),
            failure.empty() ? fmt("overlap law: 500 distinct pairs (n<=10) in {0} u {2^-s : s>=1}, all <= 1/2; "
                                  "%zu pairs (n<=8) equal the dense value exactly",
                                  dense_checked)
                            : "overlap law: " + failure);
}

// ---------------------------------------------------------------------------

std::vector<TrialRecord> trials(std::uint64_t seed, const std::function<TrialRecord(std::uint64_t)> &f) {
    return run_trials(kTrials, seed, f);
}

void one_sided_bounds() {
    // 4a: equal graphs are always Equal.
    {
        std::mt19937_64 rng(4001);
        Graph g = testing::random_graph(8, rng);
        GraphRegister r = GraphRegister::prepare(g, 0);
        auto recs = trials(40000, [&](std::uint64_t s) { return equality_test(r, r, s); });
        double f = frequency(recs, "Equal");
        report("4a", f == 1.0, fmt("equality_test on equal graphs: Equal in %.4f of %zu trials", f, kTrials));
    }
    // 4b: empty vs single edge.
    {
        GraphRegister e = GraphRegister::prepare(Graph(2), 0);
        GraphRegister k2 = GraphRegister::prepare(make(2, {{0, 1}}), 0);
        auto recs = trials(41000, [&](std::uint64_t s) { return equality_test(e, k2, s); });
        double f = frequency(recs, "Different");
        double sd = sigma(0.375, kTrials);
        bool ok = std::abs(f - 0.375) <= 3 * sd && f >= 0.25 - 3 * sd;
        report("4b", ok,
               fmt("equality_test empty vs edge: Different %.4f, target 3/8 +- %.4f (3 sigma), floor 1/4 - 3 sigma", f,
                   3 * sd));
    }
    // 4c: automorphism test.
    {
        Graph k3 = Graph::complete(3);
        Set cyc{1, 2, 0};
        Graph p4 = make(4, {{0, 1}, {1, 2}, {2, 3}});
        Set rev{3, 2, 1, 0};
        GraphRegister rk3 = GraphRegister::prepare(k3, 0);
        GraphRegister rp4 = GraphRegister::prepare(p4, 0);
        auto t1 = trials(42000, [&](std::uint64_t s) { return automorphism_test(rk3, cyc, s); });
        auto t2 = trials(43000, [&](std::uint64_t s) { return automorphism_test(rp4, rev, s); });
        bool true_ok = frequency(t1, "+1") == 1.0 && frequency(t2, "+1") == 1.0 && t1[0].deterministic &&
                       t2[0].deterministic;

        // Not an automorphism, and the permuted state is orthogonal: -1 law is exactly 1/2.
        Graph lone = make(2, {}, {0});
        Set swap{1, 0};
        GraphRegister rl = GraphRegister::prepare(lone, 0);
        auto t3 = trials(44000, [&](std::uint64_t s) { return automorphism_test(rl, swap, s); });
        double f3 = frequency(t3, "-1");
        double sd = sigma(0.5, kTrials);
        bool half_ok = std::abs(f3 - 0.5) <= 3 * sd;

        // Not an automorphism with a non-orthogonal image: -1 law is (1 - |<G|PG>|^2) / 2.
        Graph p3 = make(3, {{0, 1}, {1, 2}});
        Set mid{1, 0, 2};
        GraphRegister rp3 = GraphRegister::prepare(p3, 0);
        Dyadic ov = overlap_via_char_sum(p3, permute(p3, mid));
        double law = (Dyadic(1) - ov).half().to_double();
        auto t4 = trials(45000, [&](std::uint64_t s) { return automorphism_test(rp3, mid, s); });
        double f4 = frequency(t4, "-1");
        bool law_ok = std::abs(f4 - law) <= 3 * sigma(law, kTrials);
        report("4c", true_ok && half_ok && law_ok,
               fmt("automorphism_test: deterministic +1 on true automorphisms; -1 frequency %.4f vs 1/2 +- %.4f on an "
                   "orthogonal image; %.4f vs exact law %.4f otherwise",
                   f3, 3 * sd, f4, law));
    }
    // 4d: vertex compare.
    {
        Graph g = make(5, {{0, 2}, {1, 2}, {3, 4}, {3, 2}, {4, 2}});
        GraphRegister r = GraphRegister::prepare(g, 0);
        auto xx = trials(46000, [&](std::uint64_t s) {
            GraphRegister c = r;
            return vertex_compare(c, 0, 1, s);
        });
        auto yy = trials(47000, [&](std::uint64_t s) {
            GraphRegister c = r;
            return vertex_compare(c, 3, 4, s);
        });
        auto no = trials(48000, [&](std::uint64_t s) {
            GraphRegister c = r;
            return vertex_compare(c, 0, 3, s);
        });
        bool twins_ok = frequency(xx, "+1") == 1.0 && frequency(yy, "+1") == 1.0;
        double f = frequency(no, "-1");
        double sd = sigma(0.5, kTrials);
        report("4d", twins_ok && std::abs(f - 0.5) <= 3 * sd,
               fmt("vertex_compare: deterministic +1 on twins (XX and YY); -1 frequency %.4f vs 1/2 +- %.4f otherwise",
                   f, 3 * sd));
    }
    // 4e-4g: degree parity on Euler and non-Euler graphs.
    {
        std::vector<Graph> euler = {Graph::complete(3), Graph::complete(5), make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                    make(3, {{0, 1}, {1, 2}, {2, 0}}, {1}), make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 2})};
        std::size_t mismatches = 0;
        std::size_t sign_wrong = 0;
        std::string sign_detail;
        for (std::size_t i = 0; i < euler.size(); i++) {
            const Graph &g = euler[i];
            GraphRegister r = GraphRegister::prepare(g, 0);
            auto recs = trials(49000 + 1000 * i, [&](std::uint64_t s) {
                GraphRegister a = r;
                GraphRegister b = r;
                return degree_parity_test(a, b, ParityKind::kEven, s);
            });
            std::size_t loops = 0;
            for (std::size_t v = 0; v < g.num_vertices(); v++) {
                loops += g.has_loop(v);
            }
            const std::string want = loops % 2 == 0 ? "Consistent(+1)" : "Consistent(-1)";
            for (const auto &rec : recs) {
                mismatches += rec.outcome == "Mismatch";
                if (rec.outcome != "Mismatch" && rec.outcome != want) {
                    sign_wrong++;
                    if (sign_detail.empty()) {
                        sign_detail = fmt("|E|=%zu s=%zu gave %s", g.num_edges(), loops, rec.outcome.c_str());
                    }
                }
            }
        }
        report("4e", mismatches == 0,
               fmt("degree_parity_test: %zu mismatches over %zu trials on %zu Euler graphs", mismatches,
                   kTrials * euler.size(), euler.size()));
        report("4f", sign_wrong == 0,
               fmt("degree_parity_test: Consistent sign (-1)^s on Euler graphs; %zu of %zu trials differ%s%s", sign_wrong,
                   kTrials * euler.size(), sign_detail.empty() ? "" : ", e.g. ", sign_detail.c_str()));

        Graph path = make(4, {{0, 1}, {1, 2}, {2, 3}});
        GraphRegister r = GraphRegister::prepare(path, 0);
        auto recs = trials(60000, [&](std::uint64_t s) {
            GraphRegister a = r;
            GraphRegister b = r;
            return degree_parity_test(a, b, ParityKind::kEven, s);
        });
        double f = frequency(recs, "Mismatch");
        double sd = sigma(0.5, kTrials);
        report("4g", std::abs(f - 0.5) <= 3 * sd,
               fmt("degree_parity_test on a non-Euler graph: Mismatch %.4f vs 1/2 +- %.4f", f, 3 * sd));
    }
}

// ---------------------------------------------------------------------------

void readout_round_trip() {
    std::string failure;
    std::size_t exhaustive = 0;
    std::uint64_t seed = 5000;
    for (std::size_t n = 1; n <= 4 && failure.empty(); n++) {
        for (const Graph &g : testing::all_graphs(n)) {
            PreparedCopies copies(g, seed);
            ReadoutRun run = readout(copies, seed + 1);
            seed += 2;
            exhaustive++;
            if (run.recovered != g) {
                failure = "n<=4 graph " + format_graph(g);
                break;
            }
        }
    }
    std::mt19937_64 rng(5005);
    std::string stats;
    bool bounds_ok = true;
    for (std::size_t n : {8u, 12u, 16u}) {
        double sum_c = 0;
        double sum_c2 = 0;
        double sum_i = 0;
        double sum_i2 = 0;
        const int graphs = 200;
        for (int k = 0; k < graphs; k++) {
            Graph g = testing::random_graph(n, rng);
            PreparedCopies copies(g, seed);
            ReadoutRun run = readout(copies, seed + 1);
            seed += 2;
            if (run.recovered != g && failure.empty()) {
                failure = fmt("n=%zu graph %d", n, k);
            }
            double c = static_cast<double>(run.copies_used);
            double it = static_cast<double>(run.iterations);
            sum_c += c;
            sum_c2 += c * c;
            sum_i += it;
            sum_i2 += it * it;
        }
        double mc = sum_c / graphs;
        double mi = sum_i / graphs;
        double se_c = std::sqrt((sum_c2 / graphs - mc * mc) / (graphs - 1));
        double se_i = std::sqrt((sum_i2 / graphs - mi * mi) / (graphs - 1));
        bool ok = mc - 3 * se_c <= 4.0 * n + 1 && mi - 3 * se_i <= 2.0 * n;
        bounds_ok = bounds_ok && ok;
        stats += fmt("; n=%zu copies %.2f (se %.2f, bound %zu) iterations %.2f (bound %zu)", n, mc, se_c, 4 * n + 1,
                     mi, 2 * n);
    }
    report("5", failure.empty() && bounds_ok,
           (failure.empty() ? fmt("readout round-trip: %zu exhaustive graphs and 600 random graphs recovered exactly",
                                  exhaustive)
                            : "readout round-trip: recovery failed for " + failure) +
               stats);
}

// ---------------------------------------------------------------------------

void gate_counts() {
    std::mt19937_64 rng(6006);
    std::string failure;
    for (int trial = 0; trial < 200 && failure.empty(); trial++) {
        std::size_t n = 1 + trial % 16;
        Graph g = testing::random_graph(n, rng);
        GraphRegister r = GraphRegister::prepare(g, trial);
        std::size_t loops = 0;
        for (std::size_t v = 0; v < n; v++) {
            loops += g.has_loop(v);
        }
        const GateCounters &c = r.counters();
        if (c.two_qubit_gates != g.num_edges() || c.one_qubit_gates != loops) {
            failure = fmt("prepare on n=%zu", n);
            break;
        }
        Set s1;
        Set s2;
        for (std::size_t v = 0; v < n; v++) {
            switch (rng() % 3) {
                case 0:
                    s1.push_back(v);
                    break;
                case 1:
                    s2.push_back(v);
                    break;
                default:
                    break;
            }
        }
        GateCounters before = r.counters();
        r.interset_complement(s1, s2);
        GateCounters d = r.counters() - before;
        std::size_t k = s1.size() + s2.size();
        if (d.two_qubit_gates != 2 * k + 1 || d.one_qubit_gates + d.two_qubit_gates != 2 * k + 5) {
            failure = fmt("interset with |S1|+|S2|=%zu: %zu two-qubit, %zu one-qubit", k, d.two_qubit_gates,
                          d.one_qubit_gates);
            break;
        }
        Set s = random_subset(n, rng);
        before = r.counters();
        r.intraset_complement(s);
        d = r.counters() - before;
        if (d.two_qubit_gates != 2 * s.size() || d.one_qubit_gates != s.size() + 1) {
            failure = fmt("intraset with |S|=%zu", s.size());
        }
    }
    for (std::size_t n = 1; n <= 64 && failure.empty(); n++) {
        GraphRegister k = GraphRegister::prepare_complete(n, 0);
        if (k.shadow() != Graph::complete(n) || k.counters().two_qubit_gates > 2 * n + 1) {
            failure = fmt("prepare_complete(%zu)", n);
        }
    }

    // The same closed forms in the benchmark CSV.
    cli::BenchOptions options;
    options.ns = {4, 8, 16, 32};
    options.workload = "all";
    options.trials = 10;
    std::ostringstream csv;
    cli::run_bench(options, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    std::size_t rows = 0;
    while (std::getline(lines, line) && failure.empty()) {
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            f.push_back(cell);
        }
        std::size_t n = std::stoul(f[1]);
        std::size_t one = f[0] == "readout_copies" ? 0 : std::stoul(f[3]);
        std::size_t two = f[0] == "readout_copies" ? 0 : std::stoul(f[4]);
        rows++;
        if (f[0] == "prepare_constructive" && two != n * (n - 1) / 2) {
            failure = "bench prepare_constructive " + line;
        } else if (f[0] == "prepare_complete_iec" && (two > 2 * n + 1 || one != n + 1)) {
            failure = "bench prepare_complete_iec " + line;
        } else if (f[0] == "iac_sweep" && (two != 2 * n + 1 || one + two != 2 * n + 5)) {
            failure = "bench iac_sweep " + line;
        }
    }
    report("6", failure.empty() && rows == 16,
           failure.empty() ? fmt("gate counts: prepare |E|+s, interset 2(|S1|+|S2|)+1 two-qubit (total +5), intraset "
                                 "2|S| + (|S|+1), prepare_complete <= 2n+1 for n<=64; %zu bench rows agree",
                                 rows)
                           : "gate counts: " + failure);
}

// ---------------------------------------------------------------------------

void oracle_query_preparation() {
    dense::StateVector minus(1);
    dense::apply_gate(minus, Gate::X, 0);
    dense::apply_gate(minus, Gate::H, 0);
    std::size_t cases = 0;
    std::string failure;
    auto check = [&](const Graph &g) {
        cases++;
        if (failure.empty() &&
            !dense::equal_up_to_phase(dense::oracle_prepare(g),
                                      dense::tensor_product(dense::graph_state_vector(g), minus), 1e-9)) {
            failure = format_graph(g);
        }
    };
    for (std::size_t n = 1; n <= 4; n++) {
        for (const Graph &g : testing::all_graphs(n)) {
            check(g);
        }
    }
    std::mt19937_64 rng(7007);
    for (int trial = 0; trial < 200; trial++) {
        check(testing::random_graph(5 + trial % 4, rng));
    }
    report("7", failure.empty(),
           failure.empty() ? fmt("oracle-query preparation: %zu graphs (n<=8) equal |G> (x) |-> up to phase", cases)
                           : "oracle-query preparation: mismatch on " + failure);
}

// ---------------------------------------------------------------------------

void cli_determinism() {
    std::mt19937_64 rng(8008);
    Graph g = testing::random_graph(7, rng);
    cli::OpScript script = cli::parse_script(
        "op localcomp 2\nop iac {0,1} {3,4}\nop iec {2,5,6}\nop delete 6 blind\nassert verify\n"
        "vcompare 0 1\nmeasure euler\nautomorphism (0 1)\nreadout\n");
    cli::RunOptions options;
    options.seed = 1234;
    options.trials = 25;
    std::string first = cli::execute(g, script, options).dump(2);
    std::string second = cli::execute(g, script, options).dump(2);
    bool same = first == second;

    bool fixed_point = true;
    for (int trial = 0; trial < 200; trial++) {
        Graph h = testing::random_graph(trial % 20, rng);
        std::string text = format_graph(h);
        fixed_point = fixed_point && parse_graph(text) == h && format_graph(parse_graph(text)) == text;
    }
    report("8", same && fixed_point,
           fmt("CLI determinism: repeated run %s byte-identical JSON (%zu bytes); graph format round-trip %s",
               same ? "gives" : "does NOT give", first.size(), fixed_point ? "is a fixed point" : "is NOT a fixed point"));
}

}  // namespace
}  // namespace qgraph

int main() {
    using namespace qgraph;
    correspondence_fuzz();
    oracle_equivalence();
    overlap_law();
    one_sided_bounds();
    readout_round_trip();
    gate_counts();
    oracle_query_preparation();
    cli_determinism();
    std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
