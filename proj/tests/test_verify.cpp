#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"
#include "powgraph/verify.hpp"

using namespace powgraph;

TEST_CASE("oracle digraph counts") {
    CHECK(oracle_digraph(*build_group(GroupSpec::cyclic(4))).arc_count() == 7);
    CHECK(oracle_digraph(*build_group(GroupSpec::abelian({2, 2}))).arc_count() == 3);
    CHECK(oracle_digraph(*build_group(GroupSpec::cyclic(1))).arc_count() == 0);

    // underlying oracle graph equals the undirected power graph
    for (const GroupSpec& spec : {GroupSpec::dihedral(6), GroupSpec::dicyclic(3)}) {
        auto g = build_group(spec);
        CHECK(oracle_digraph(*g).underlying().edges() == zpm_power_graph(*g).edges());
    }
}

TEST_CASE("digraph isomorphism finds a witness") {
    const DiGraph d = oracle_digraph(*build_group(GroupSpec::cyclic(5)));

    // relabel by a fixed permutation
    std::vector<std::size_t> perm{3, 0, 4, 1, 2};
    DiGraph shuffled(5);
    for (auto [u, v] : d.arcs()) shuffled.add_arc(perm[u], perm[v]);

    const IsoResult res = digraph_isomorphic(d, shuffled);
    REQUIRE(res.isomorphic);
    REQUIRE(res.witness.size() == 5);
    // replay the witness: every arc must map to an arc and counts agree
    for (auto [u, v] : d.arcs()) CHECK(shuffled.arc(res.witness[u], res.witness[v]));
    std::set<std::size_t> image(res.witness.begin(), res.witness.end());
    CHECK(image.size() == 5);
}

TEST_CASE("digraph isomorphism rejects mismatches") {
    const DiGraph a = oracle_digraph(*build_group(GroupSpec::cyclic(4)));
    const DiGraph b = oracle_digraph(*build_group(GroupSpec::abelian({2, 2})));
    const IsoResult res = digraph_isomorphic(a, b);
    CHECK(!res.isomorphic);
    CHECK(!res.failure.empty());

    DiGraph big1(513), big2(513);
    try {
        digraph_isomorphic(big1, big2);
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.code() == errc::size_limit);
    }
}

TEST_CASE("undirected isomorphism on shuffled power graphs") {
    const UGraph g = zpm_power_graph(*build_group(GroupSpec::dihedral(5)));
    std::vector<std::size_t> perm(g.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937 rng(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    UGraph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    const auto wit = graph_isomorphism(g, h);
    REQUIRE(wit.has_value());
    for (auto [u, v] : g.edges()) CHECK(h.adjacent((*wit)[u], (*wit)[v]));

    UGraph path(3), tri(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK(!graph_isomorphism(path, tri).has_value());
}

TEST_CASE("verify_group passes on known groups") {
    for (const GroupSpec& spec : {GroupSpec::dihedral(9), GroupSpec::dicyclic(3),
                                  GroupSpec::cyclic(36), GroupSpec::abelian({2, 4})}) {
        const VerifyReport rep = verify_group(spec, "t");
        CHECK(rep.error.empty());
        CHECK(rep.isomorphic);
        CHECK(rep.vertex_count == build_group(spec)->size());
        CHECK(!rep.center_case.empty());
    }
    const VerifyReport d9 = verify_group(GroupSpec::dihedral(9), "d9");
    CHECK(d9.center_case == "TrivialCenter");
    CHECK(d9.class_table.find("Complex") != std::string::npos);
    const std::string line = report_to_text(d9);
    CHECK(line.find("PASS") == 0);
    CHECK(line.find("d9") != std::string::npos);
}

TEST_CASE("run_corpus keeps going past a bad entry") {
    // order-5 table with an identity but a non-associative product
    std::vector<std::vector<int>> t{{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}};
    std::vector<ManifestEntry> manifest{{"ok1", GroupSpec::cyclic(6)},
                                        {"bad", GroupSpec::from_table(t)},
                                        {"ok2", GroupSpec::dihedral(4)}};
    const auto reports = run_corpus(manifest);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].id == "ok1");
    CHECK(reports[0].isomorphic);
    CHECK(!reports[1].error.empty());
    CHECK(report_to_text(reports[1]).find("ERROR") == 0);
    CHECK(reports[2].isomorphic);

    CHECK(run_corpus({}).empty());
}

TEST_CASE("manifest json round trip") {
    std::vector<ManifestEntry> manifest{{"a", GroupSpec::cyclic(6)},
                                        {"b", GroupSpec::z_window(4)}};
    const std::string text = manifest_to_json_text(manifest);
    const auto back = manifest_from_json_text(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "a");
    CHECK(back[1].id == "b");
    CHECK(manifest_to_json_text(back) == text);

    CHECK_THROWS_AS(manifest_from_json_text("[1,2]"), Error);
}

TEST_CASE("default corpus shape") {
    const auto corpus = default_corpus();
    CHECK(corpus.size() > 150);
    std::set<std::string> ids;
    for (const auto& e : corpus) ids.insert(e.id);
    CHECK(ids.size() == corpus.size());  // ids unique
    CHECK(ids.count("cyclic_1"));
    CHECK(ids.count("cyclic_100"));
    CHECK(ids.count("dihedral_50"));
    CHECK(ids.count("dicyclic_25"));
    CHECK(ids.count("perm_s4"));
}
