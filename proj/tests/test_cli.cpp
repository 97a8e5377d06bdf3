#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "powgraph/graph.hpp"
#include "powgraph/verify.hpp"

using namespace powgraph;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("powgraph_cli_test_" + name);
}

}  // namespace

TEST_CASE("gen emits graphs") {
    const RunResult undirected = run_cli("gen \"cyclic(6)\"");
    CHECK(undirected.status == 0);
    const ParsedGraph pu = read_graph(undirected.output);
    REQUIRE(!pu.directed);
    CHECK(pu.ugraph.order() == 6);
    CHECK(pu.ugraph.edges().size() == 13);

    const RunResult directed = run_cli("gen \"cyclic(6)\" --directed");
    CHECK(directed.status == 0);
    const ParsedGraph pd = read_graph(directed.output);
    REQUIRE(pd.directed);
    CHECK(pd.digraph.arc_count() == 15);

    const RunResult window = run_cli("gen \"z_window(10)\"");
    CHECK(window.status == 0);
    CHECK(read_graph(window.output).ugraph.order() == 21);
}

TEST_CASE("gen writes files and dot output") {
    const fs::path out = temp_file("gen.json");
    const RunResult r = run_cli("gen \"dihedral(4)\" --dot -o " + out.string());
    CHECK(r.status == 0);
    CHECK(fs::exists(out));
    CHECK(fs::exists(out.string() + ".dot"));
    std::ifstream dot(out.string() + ".dot");
    std::string text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    CHECK(text.find("--") != std::string::npos);
    fs::remove(out);
    fs::remove(out.string() + ".dot");
}

TEST_CASE("malformed specs exit with status 2") {
    CHECK(run_cli("gen \"nonsense(3)\"").status == 2);
    CHECK(run_cli("gen no_such_file.json").status == 2);
}

TEST_CASE("verify round trip") {
    const RunResult ok = run_cli("verify \"dihedral(9)\"");
    CHECK(ok.status == 0);
    CHECK(ok.output.find("PASS") == 0);
    CHECK(ok.output.find("TrivialCenter") != std::string::npos);
}

TEST_CASE("analyze prints center case and classes") {
    const fs::path g = temp_file("analyze.json");
    REQUIRE(run_cli("gen \"dihedral(9)\" -o " + g.string()).status == 0);
    const RunResult r = run_cli("analyze " + g.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("center_case TrivialCenter") != std::string::npos);
    CHECK(r.output.find("kind=Complex p=3 s=1 r=2") != std::string::npos);
    fs::remove(g);
}

TEST_CASE("reconstruct rejects non power graphs") {
    UGraph pentagon(5);
    for (std::size_t i = 0; i < 5; ++i) pentagon.add_edge(i, (i + 1) % 5);
    const fs::path g = temp_file("pentagon.json");
    std::ofstream(g) << write_ugraph(pentagon);
    const RunResult r = run_cli("reconstruct " + g.string());
    CHECK(r.status == 1);
    CHECK(r.output.find("NotFiniteOrderComponent") != std::string::npos);
    fs::remove(g);
}

TEST_CASE("reconstruct orients a generated graph") {
    const fs::path g = temp_file("z12.json");
    const fs::path plan = temp_file("z12.plan");
    REQUIRE(run_cli("gen \"cyclic(12)\" -o " + g.string()).status == 0);
    const RunResult r = run_cli("reconstruct " + g.string() + " --plan " + plan.string());
    CHECK(r.status == 0);
    const ParsedGraph pd = read_graph(r.output);
    REQUIRE(pd.directed);
    CHECK(pd.digraph.order() == 12);
    std::ifstream pf(plan);
    std::string ptext((std::istreambuf_iterator<char>(pf)), std::istreambuf_iterator<char>());
    CHECK(ptext.find("CyclicComposite") != std::string::npos);
    fs::remove(g);
    fs::remove(plan);
}

TEST_CASE("window checks") {
    const RunResult lemma = run_cli("window \"z_window(200)\" --check lemma4 --x 4");
    CHECK(lemma.status == 0);
    CHECK(lemma.output.find("verdict=true") != std::string::npos);

    const RunResult almost = run_cli("window \"z_window(120)\" --check almost --x 4 --y 6");
    CHECK(almost.status == 0);
    CHECK(almost.output.find("verdict=true") != std::string::npos);
    CHECK(almost.output.find("12") != std::string::npos);

    const RunResult prop5 = run_cli("window \"amalgam(2,3,24)\" --check prop5 --x a --y b --tau 3");
    CHECK(prop5.status == 0);
    CHECK(prop5.output.find("undecided=0") != std::string::npos);

    CHECK(run_cli("window \"z_window(50)\" --check prop6").status == 0);
    const RunResult prop6 = run_cli("window \"amalgam(2,3,12)\" --check prop6");
    CHECK(prop6.status == 1);
    CHECK(prop6.output.find("verdict=false") != std::string::npos);
}

TEST_CASE("corpus runs a manifest") {
    std::vector<ManifestEntry> manifest{{"a", GroupSpec::cyclic(6)},
                                        {"b", GroupSpec::dihedral(5)},
                                        {"c", GroupSpec::dicyclic(2)}};
    const fs::path m = temp_file("manifest.json");
    std::ofstream(m) << manifest_to_json_text(manifest);
    const RunResult r = run_cli("corpus " + m.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("3/3 passed") != std::string::npos);
    fs::remove(m);
}
