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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgraph/cli/bench.h"
#include "qgraph/cli/runner.h"
#include "qgraph/cli/script.h"
#include "qgraph/errors.h"
#include "qgraph/graph_io.h"

namespace qgraph::cli {
namespace {

namespace fs = std::filesystem;

std::size_t error_line(const std::string &text, std::size_t n = 0, bool check = false) {
    try {
        OpScript s = parse_script(text, "s.txt");
        if (check) {
            check_script(s, n, "s.txt");
        }
    } catch (const ParseError &e) {
        EXPECT_EQ(std::string(e.what()).rfind("s.txt:", 0), 0u) << e.what();
        return e.line();
    }
    return 0;
}

class TempDir {
   public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("qgraph_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string write(const std::string &name, const std::string &text) const {
        fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

   private:
    fs::path path_;
};

TEST(ParseScript, Grammar) {
    OpScript s = parse_script(
        "# header\n"
        "op cz 0 1\n"
        "op iac {0,1} {2}\n"
        "op iec { 0, 2 }\n"
        "op delete 1 corrected\n"
        "assert verify\n"
        "measure odd\n"
        "automorphism (0 1)(2 3)\n"
        "automorphism ()\n"
        "vcompare 0 2\n"
        "readout\n"
        "compare other.g\n");
    ASSERT_EQ(s.commands.size(), 11u);
    EXPECT_EQ(s.commands[0].line, 2u);
    EXPECT_EQ(s.commands[0].name, "cz");
    EXPECT_TRUE(s.commands[0].is_op);
    EXPECT_EQ(s.commands[1].set1, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(s.commands[1].set2, (std::vector<std::size_t>{2}));
    EXPECT_EQ(s.commands[2].set1, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(s.commands[3].word, "corrected");
    EXPECT_EQ(s.commands[4].name, "verify");
    EXPECT_FALSE(s.commands[4].is_op);
    EXPECT_EQ(s.commands[5].word, "odd");
    EXPECT_EQ(s.commands[6].cycles.size(), 2u);
    EXPECT_TRUE(s.commands[7].cycles.empty());
    EXPECT_EQ(s.commands[8].vertices, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(s.commands[10].word, "other.g");
}

TEST(ParseScript, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("op cz 0\n"), 1u);
    EXPECT_EQ(error_line("op cz 0 1\nop bogus 1\n"), 2u);
    EXPECT_EQ(error_line("\n\nop delete 0 maybe\n"), 3u);
    EXPECT_EQ(error_line("measure sideways\n"), 1u);
    EXPECT_EQ(error_line("op iac {0,1 {2}\n"), 1u);
    EXPECT_EQ(error_line("op x -1\n"), 1u);
    EXPECT_EQ(error_line("teleport 0\n"), 1u);
    EXPECT_EQ(error_line("assert nothing\n"), 1u);
}

TEST(CheckScript, TracksVertexCount) {
    EXPECT_EQ(error_line("op cz 0 2\n", 2, true), 1u);
    EXPECT_EQ(error_line("op addvertex\nop cz 0 2\n", 2, true), 0u);
    EXPECT_EQ(error_line("op delete 0 blind\nop x 1\nop x 1\nop x 2\n", 3, true), 4u);
    EXPECT_EQ(error_line("op delete 0 blind\nop x 2\n", 3, true), 2u);
    EXPECT_EQ(error_line("automorphism (0 5)\n", 3, true), 1u);
}

TEST(CyclesToPermutation, Examples) {
    EXPECT_EQ(cycles_to_permutation({{0, 1, 2}}, 4), (std::vector<std::size_t>{1, 2, 0, 3}));
    EXPECT_EQ(cycles_to_permutation({}, 2), (std::vector<std::size_t>{0, 1}));
    EXPECT_THROW(cycles_to_permutation({{0, 1}, {1, 2}}, 3), PreconditionError);
    EXPECT_THROW(cycles_to_permutation({{0, 3}}, 3), PreconditionError);
}

TEST(Execute, EmptyScriptHasZeroCounters) {
    Graph g = Graph::complete(4);
    RunOptions options;
    nlohmann::ordered_json report = execute(g, OpScript{}, options);
    EXPECT_EQ(report["counters"]["one_qubit_gates"], 0);
    EXPECT_EQ(report["counters"]["two_qubit_gates"], 0);
    EXPECT_EQ(report["preparation_counters"]["two_qubit_gates"], 6);
    EXPECT_EQ(report["final_graph"], format_graph(g));
    EXPECT_TRUE(report["commands"].empty());
}

TEST(Execute, OpsAndProtocols) {
    RunOptions options;
    options.trials = 3;
    options.seed = 5;
    OpScript s = parse_script("op cz 0 1\nassert verify\nvcompare 0 1\nmeasure euler\nreadout\n");
    nlohmann::ordered_json report = execute(Graph(2), s, options);
    EXPECT_EQ(report["final_graph"], "graph 2\nedge 0 1\n");
    EXPECT_EQ(report["commands"][0]["counters"]["two_qubit_gates"], 1);
    EXPECT_EQ(report["commands"][1]["verify"], true);
    EXPECT_EQ(report["commands"][4]["recovered"], "graph 2\nedge 0 1\n");
    ASSERT_EQ(report["trials"].size(), 9u);
    EXPECT_EQ(report["trials"][6]["line"], 5);
    EXPECT_EQ(report["trials"][0]["protocol"], "vcompare_YY");
    EXPECT_EQ(report["trials"][0]["seed"], 5);
    EXPECT_EQ(report["trials"][2]["seed"], 7);
    EXPECT_EQ(report["trials"][0]["probabilities"]["-1"], "0/1");
    EXPECT_EQ(report["counters"]["two_qubit_gates"], 1);
}

TEST(Execute, FxOnAnEdgeFailsWithItsLine) {
    OpScript s = parse_script("op cz 0 1\nop fx 0 1\n");
    RunOptions options;
    options.script_path = "ops.txt";
    try {
        execute(Graph(2), s, options);
        FAIL();
    } catch (const ScriptError &e) {
        EXPECT_EQ(e.exit_code(), kExitPrecondition);
        EXPECT_EQ(std::string(e.what()).rfind("ops.txt:2:", 0), 0u) << e.what();
        EXPECT_NE(std::string(e.what()).find("fxw"), std::string::npos);
    }
}

TEST(Run, ExitCodesAndDeterminism) {
    TempDir dir;
    RunOptions options;
    options.graph_path = dir.write("g.txt", "graph 3\nedge 0 1\nedge 1 2\n");
    options.script_path = dir.write("s.txt", "op localcomp 1\nvcompare 0 2\ncompare other.txt\nautomorphism (0 2)\n");
    dir.write("other.txt", "graph 3\nedge 0 2\n");
    options.seed = 11;
    options.trials = 20;
    std::ostringstream out1;
    std::ostringstream out2;
    std::ostringstream err;
    EXPECT_EQ(run(options, out1, err), kExitOk) << err.str();
    EXPECT_EQ(run(options, out2, err), kExitOk);
    EXPECT_EQ(out1.str(), out2.str());
    EXPECT_FALSE(out1.str().empty());

    options.format = "text";
    std::ostringstream text;
    EXPECT_EQ(run(options, text, err), kExitOk);
    EXPECT_NE(text.str().find("final graph"), std::string::npos) << text.str();

    options.script_path = dir.write("bad.txt", "op cz 0\n");
    std::ostringstream e2;
    EXPECT_EQ(run(options, out1, e2), kExitParse);
    EXPECT_NE(e2.str().find("bad.txt:1"), std::string::npos) << e2.str();

    options.script_path = dir.write("exhaust.txt", "readout\n");
    options.max_copies = 2;
    EXPECT_EQ(run(options, out1, err), kExitExhausted);

    options.max_copies = std::numeric_limits<std::size_t>::max();
    options.graph_path = dir.write("broken.txt", "graph 2\nedge 0 5\n");
    EXPECT_EQ(run(options, out1, err), kExitParse);
}

TEST(Bench, WorkloadsEmitClosedForms) {
    BenchOptions options;
    options.ns = {4, 8};
    options.trials = 5;
    std::ostringstream out;
    run_bench(options, out);
    std::string csv = out.str();
    EXPECT_EQ(csv.rfind(kBenchHeader, 0), 0u);
    EXPECT_NE(csv.find("prepare_constructive,8,28,0,28,0,0"), std::string::npos) << csv;
    EXPECT_NE(csv.find("prepare_complete_iec,8,8,9,16,0,0"), std::string::npos) << csv;
    EXPECT_NE(csv.find("iac_sweep,8,8,4,17,0,0"), std::string::npos) << csv;
}

}  // namespace
}  // namespace qgraph::cli
