#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "powgraph/error.hpp"
#include "powgraph/group.hpp"

using namespace powgraph;

namespace {

std::size_t by_label(const GroupModel& g, const std::string& lab) {
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.label(v) == lab) return v;
    FAIL("no element labeled ", lab);
    return 0;
}

std::set<std::string> subgroup_labels(const GroupModel& g, std::size_t x, bool* truncated = nullptr) {
    std::set<std::string> out;
    for (std::size_t v : g.cyclic_subgroup(x, truncated)) out.insert(g.label(v));
    return out;
}

}  // namespace

TEST_CASE("cyclic enumeration and orders") {
    auto g = build_group(GroupSpec::cyclic(6));
    REQUIRE(g->size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(g->label(i) == std::to_string(i));
    CHECK(g->element_order(0) == Card::fin(1));
    CHECK(g->element_order(2) == Card::fin(3));
    CHECK(g->element_order(1) == Card::fin(6));
    CHECK(g->inverse(2) == 4);
}

TEST_CASE("dihedral and dicyclic sizes and orders") {
    auto d3 = build_group(GroupSpec::dihedral(3));
    CHECK(d3->size() == 6);
    auto dic3 = build_group(GroupSpec::dicyclic(3));
    REQUIRE(dic3->size() == 12);
    const std::size_t b = by_label(*dic3, "a0b");
    CHECK(dic3->element_order(b) == Card::fin(4));
}

TEST_CASE("Lagrange: element orders divide the group order") {
    for (const GroupSpec& spec :
         {GroupSpec::cyclic(12), GroupSpec::dihedral(7), GroupSpec::dicyclic(4),
          GroupSpec::abelian({2, 4, 3}), GroupSpec::permutation(3, {{1, 0, 2}, {1, 2, 0}})}) {
        auto g = build_group(spec);
        for (std::size_t x = 0; x < g->size(); ++x) {
            const Card o = g->element_order(x);
            REQUIRE(o.is_finite());
            CHECK(g->size() % o.value() == 0);
        }
    }
}

TEST_CASE("cyclic subgroup examples") {
    auto z12 = build_group(GroupSpec::cyclic(12));
    CHECK(subgroup_labels(*z12, 4) == std::set<std::string>{"0", "4", "8"});

    auto zw = build_group(GroupSpec::z_window(30));
    bool truncated = false;
    CHECK(subgroup_labels(*zw, by_label(*zw, "7"), &truncated) ==
          std::set<std::string>{"0", "7", "-7", "14", "-14", "21", "-21", "28", "-28"});
    CHECK(truncated);
}

TEST_CASE("cyclic subgroup of x equals that of its inverse") {
    for (const GroupSpec& spec : {GroupSpec::cyclic(15), GroupSpec::dicyclic(3),
                                  GroupSpec::z_window(20), GroupSpec::amalgam(2, 3, 8)}) {
        auto g = build_group(spec);
        for (std::size_t x = 0; x < g->size(); ++x)
            CHECK(g->cyclic_subgroup(x) == g->cyclic_subgroup(g->inverse(x)));
    }
}

TEST_CASE("z window arithmetic") {
    auto zw = build_group(GroupSpec::z_window(30));
    CHECK(zw->size() == 61);
    CHECK(!zw->finite_model());
    CHECK(zw->element_order(0) == Card::fin(1));
    CHECK(zw->element_order(by_label(*zw, "5")) == Card::aleph0());
    CHECK(zw->is_power_member(by_label(*zw, "4"), by_label(*zw, "12")));
    CHECK(!zw->is_power_member(by_label(*zw, "4"), by_label(*zw, "6")));
    // <e> = {e}
    CHECK(zw->is_power_member(0, 0));
    CHECK(!zw->is_power_member(0, by_label(*zw, "3")));
    // e = x^n only for n = 0 when x has infinite order
    CHECK(zw->is_power_member(by_label(*zw, "3"), 0));
    CHECK(!zw->is_nonzero_power(by_label(*zw, "3"), 0));
}

TEST_CASE("membership transitivity sample") {
    for (const GroupSpec& spec : {GroupSpec::cyclic(24), GroupSpec::z_window(12)}) {
        auto g = build_group(spec);
        for (std::size_t x = 0; x < g->size(); ++x)
            for (std::size_t y = 0; y < g->size(); ++y) {
                if (!g->is_power_member(x, y)) continue;
                for (std::size_t z = 0; z < g->size(); ++z)
                    if (g->is_power_member(y, z)) CHECK(g->is_power_member(x, z));
            }
    }
}

TEST_CASE("amalgam window") {
    // The spec's stated derivation (words a^i, b^j with |i|,|j| <= 2, merged
    // pairs a^{+-2} = b^{+-3} out of range) yields 9 distinct elements.
    auto small = build_group(GroupSpec::amalgam(2, 3, 2));
    CHECK(small->size() == 9);
    CHECK(small->label(0) == "e");

    auto g = build_group(GroupSpec::amalgam(2, 3, 6));
    const std::size_t a2 = by_label(*g, "a^2");
    CHECK(subgroup_labels(*g, a2) ==
          std::set<std::string>{"e", "a^2", "a^-2", "a^4", "a^-4", "a^6", "a^-6"});

    auto g9 = build_group(GroupSpec::amalgam(2, 3, 9));
    CHECK(!g9->is_power_member(by_label(*g9, "a"), by_label(*g9, "b")));
    CHECK(!g9->is_power_member(by_label(*g9, "b"), by_label(*g9, "a")));
    // identification consistency: a^{2k} = b^{3k}, so a^{2k} is a power of b
    CHECK(g9->is_power_member(by_label(*g9, "b"), by_label(*g9, "a^2")));
    CHECK(g9->is_power_member(by_label(*g9, "b"), by_label(*g9, "a^4")));
    CHECK(g9->is_power_member(by_label(*g9, "b^2"), by_label(*g9, "a^4")));
    CHECK(!g9->is_power_member(by_label(*g9, "b^2"), by_label(*g9, "a^2")));
    CHECK(g9->element_order(by_label(*g9, "b")) == Card::aleph0());
}

TEST_CASE("q subgroup window") {
    auto q = build_group(GroupSpec::q_subgroup_window({{2, 2}, {3, 1}}, 48));
    CHECK(q->size() == 97);
    CHECK(q->label(0) == "0");
    const std::size_t unit = by_label(*q, "1/12");
    CHECK(q->element_order(unit) == Card::aleph0());
    CHECK(q->is_power_member(unit, by_label(*q, "5/12")));
    CHECK_THROWS_AS(build_group(GroupSpec::q_subgroup_window({{4, 1}}, 10)), Error);
}

TEST_CASE("table specs") {
    auto z3 = std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    auto g = build_group(GroupSpec::from_table(z3));
    CHECK(g->size() == 3);
    CHECK(g->element_order(1) == Card::fin(3));

    // Not a Latin square in every row/column with identity at 0.
    auto bad = std::vector<std::vector<int>>{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}};
    try {
        build_group(GroupSpec::from_table(bad));
        FAIL("expected TableNotGroup");
    } catch (const Error& e) {
        CHECK(e.code() == errc::table_not_group);
    }

    // Latin square with identity but broken associativity: order-5 loop.
    auto loop = std::vector<std::vector<int>>{{0, 1, 2, 3, 4},
                                              {1, 0, 3, 4, 2},
                                              {2, 4, 0, 1, 3},
                                              {3, 2, 4, 0, 1},
                                              {4, 3, 1, 2, 0}};
    try {
        build_group(GroupSpec::from_table(loop));
        FAIL("expected TableNotGroup");
    } catch (const Error& e) {
        CHECK(e.code() == errc::table_not_group);
    }
}

TEST_CASE("spec json round trip is byte stable") {
    for (const GroupSpec& spec :
         {GroupSpec::cyclic(6), GroupSpec::dihedral(9), GroupSpec::dicyclic(2),
          GroupSpec::abelian({2, 2}), GroupSpec::permutation(3, {{1, 0, 2}}),
          GroupSpec::from_table({{0, 1}, {1, 0}}), GroupSpec::z_window(10),
          GroupSpec::q_subgroup_window({{2, 1}}, 8), GroupSpec::amalgam(2, 3, 4)}) {
        const std::string once = spec.to_json_text();
        CHECK(GroupSpec::parse_json_text(once).to_json_text() == once);
    }
    CHECK_THROWS_AS(GroupSpec::parse_json_text("{not json"), Error);
    CHECK_THROWS_AS(GroupSpec::parse_json_text(R"({"kind":"nope"})"), Error);
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(build_group(GroupSpec::cyclic(0)), Error);
    CHECK_THROWS_AS(build_group(GroupSpec::amalgam(1, 3, 4)), Error);
    CHECK_THROWS_AS(build_group(GroupSpec::z_window(0)), Error);
    CHECK_THROWS_AS(build_group(GroupSpec::permutation(3, {{0, 0, 1}})), Error);
}
