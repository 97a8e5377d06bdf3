#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "powgraph/class_analysis.hpp"
#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"
#include "powgraph/totient.hpp"

using namespace powgraph;

namespace {

UGraph pg_of(const GroupSpec& spec) {
    UGraph u = power_graph(*build_group(spec));
    u.strip_labels();
    return u;
}

const GroupSpec s3 = GroupSpec::permutation(3, {{1, 0, 2}, {1, 2, 0}});

}  // namespace

TEST_CASE("center extraction") {
    CHECK(center(pg_of(GroupSpec::cyclic(6))) == std::vector<std::size_t>{0, 1, 5});
    CHECK(center(pg_of(s3)) == std::vector<std::size_t>{0});
    CHECK(center(pg_of(GroupSpec::cyclic(8))).size() == 8);

    UGraph pentagon(5);
    for (std::size_t i = 0; i < 5; ++i) pentagon.add_edge(i, (i + 1) % 5);
    try {
        center(pentagon);
        FAIL("expected NotFiniteOrderComponent");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_finite_order_component);
    }
}

TEST_CASE("center case classification") {
    CHECK(classify_center_case(pg_of(GroupSpec::cyclic(8))).kind == CenterCase::CyclicPrimePower);
    CHECK(classify_center_case(pg_of(GroupSpec::cyclic(12))).kind == CenterCase::CyclicComposite);
    CHECK(classify_center_case(pg_of(GroupSpec::cyclic(6))).kind == CenterCase::CyclicPQ);
    CHECK(classify_center_case(pg_of(GroupSpec::dicyclic(2))).kind == CenterCase::PGroupNoncyclic);
    CHECK(classify_center_case(pg_of(s3)).kind == CenterCase::TrivialCenter);

    const CenterReport q8 = classify_center_case(pg_of(GroupSpec::dicyclic(2)));
    CHECK(q8.center_size == Card::fin(2));

    // |S| = (p-1)(q-1)+1 for cyclic pq
    for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {2, 7}, {5, 7}}) {
        const CenterReport rep = classify_center_case(pg_of(GroupSpec::cyclic(p * q)));
        CHECK(rep.kind == CenterCase::CyclicPQ);
        CHECK(rep.center.size() == static_cast<std::size_t>((p - 1) * (q - 1) + 1));
    }
}

TEST_CASE("class recognition on dihedral(9)") {
    const UGraph phi = pg_of(GroupSpec::dihedral(9));
    REQUIRE(classify_center_case(phi).kind == CenterCase::TrivialCenter);
    std::vector<std::size_t> rotations;
    for (std::size_t v = 1; v < 9; ++v) rotations.push_back(v);
    const EquivClassInfo info = classify_class(phi, rotations);
    CHECK(info.kind == ClassKind::Complex);
    CHECK(info.p == 3);
    CHECK(info.s == 1);
    CHECK(info.r == 2);
    CHECK(info.hat_size == Card::fin(9));
}

TEST_CASE("class recognition on S3") {
    const UGraph phi = pg_of(s3);
    const auto part = equiv_classes(phi);
    for (const auto& block : part.blocks) {
        if (block.size() == 1 && block.front() == center(phi).front()) continue;
        CHECK(classify_class(phi, block).kind == ClassKind::Simple);
    }
}

TEST_CASE("classify_class input validation") {
    const UGraph phi = pg_of(s3);
    try {
        classify_class(phi, {1, 2});
        FAIL("expected NotAnEquivClass");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_an_equiv_class);
    }
    // outside the trivial-center branch the call is rejected
    const UGraph z12 = pg_of(GroupSpec::cyclic(12));
    try {
        classify_class(z12, equiv_classes(z12).blocks.back());
        FAIL("expected StructureError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::structure_error);
    }
}

TEST_CASE("complex class identity holds on recognized classes") {
    for (const GroupSpec& spec : {GroupSpec::dihedral(9), GroupSpec::dihedral(8),
                                  GroupSpec::dihedral(27), GroupSpec::dihedral(25)}) {
        const UGraph phi = pg_of(spec);
        if (classify_center_case(phi).kind != CenterCase::TrivialCenter) continue;
        const std::size_t e = center(phi).front();
        for (const auto& block : equiv_classes(phi).blocks) {
            if (block.size() == 1 && block.front() == e) continue;
            const EquivClassInfo info = classify_class(phi, block);
            if (info.kind != ClassKind::Complex) continue;
            std::uint64_t sum = 0;
            for (int k = info.s; k <= info.r; ++k) sum += totient(ipow(info.p, k));
            CHECK(sum == block.size());
            CHECK(ipow(info.p, info.r) - ipow(info.p, info.s - 1) == block.size());
        }
    }
}

TEST_CASE("profile classification") {
    ClassProfile prof;
    prof.classes = {{Card::aleph0(), 2}, {Card::fin(1), 0}};
    prof.adjacency = {{true, true}, {true, true}};
    CHECK(classify_profile_center(prof) == CenterCase::PruferLike);

    const EquivClassInfo a = classify_profile_class(prof, 0);
    CHECK(a.kind == ClassKind::InfinitelyComplex);
    CHECK(a.p == 2);
    CHECK(a.s == 2);

    ClassProfile down;
    down.classes = {{Card::aleph0(), 1}};
    down.adjacency = {{true}};
    const EquivClassInfo b = classify_profile_class(down, 0);
    CHECK(b.s == 1);
    CHECK(b.p == 0);  // prime not determined by a hat-delta of 1

    ClassProfile bad;
    bad.classes = {{Card::aleph0(), 6}};
    bad.adjacency = {{true}};
    try {
        classify_profile_class(bad, 0);
        FAIL("expected ProfileInconsistent");
    } catch (const Error& e) {
        CHECK(e.code() == errc::profile_inconsistent);
    }

    try {
        classify_profile_class(prof, 1);  // finite class
        FAIL("expected ProfileInconsistent");
    } catch (const Error& e) {
        CHECK(e.code() == errc::profile_inconsistent);
    }
}

TEST_CASE("profile json round trip") {
    ClassProfile prof;
    prof.classes = {{Card::aleph0(), 2}, {Card::fin(4), 1}};
    prof.adjacency = {{true, true}, {true, false}};
    const std::string text = prof.to_json_text();
    const ClassProfile back = ClassProfile::parse_json_text(text);
    CHECK(back.to_json_text() == text);

    CHECK_THROWS_AS(ClassProfile::parse_json_text("{oops"), Error);
    try {
        // asymmetric adjacency
        ClassProfile::parse_json_text(
            R"({"classes":[{"card":1,"hat_delta":0},{"card":1,"hat_delta":0}],"adjacency":[[false,true],[false,false]]})");
        FAIL("expected ProfileInconsistent");
    } catch (const Error& e) {
        CHECK(e.code() == errc::profile_inconsistent);
    }
}

TEST_CASE("order multisets") {
    EquivClassInfo c;
    c.kind = ClassKind::Complex;
    c.p = 3;
    c.s = 1;
    c.r = 2;
    OrderMultiset m = class_order_multiset(c);
    CHECK(m.orders == std::vector<Card>{Card::fin(3), Card::fin(9)});
    CHECK(m.block_sizes == std::vector<std::uint64_t>{2, 6});
    CHECK(std::accumulate(m.block_sizes.begin(), m.block_sizes.end(), 0ull) == 8);

    c.p = 2;
    c.s = 2;
    c.r = 4;
    m = class_order_multiset(c);
    CHECK(m.orders == std::vector<Card>{Card::fin(4), Card::fin(8), Card::fin(16)});
    CHECK(m.block_sizes == std::vector<std::uint64_t>{2, 4, 8});

    EquivClassInfo inf;
    inf.kind = ClassKind::InfinitelyComplex;
    inf.p = 2;
    inf.s = 1;
    m = class_order_multiset(inf);
    CHECK(m.unbounded);
    CHECK(m.orders == std::vector<Card>{Card::fin(2), Card::fin(4), Card::fin(8)});

    EquivClassInfo simple;
    simple.kind = ClassKind::Simple;
    simple.card = Card::fin(2);
    CHECK_THROWS_AS(class_order_multiset(simple), Error);
    m = class_order_multiset(simple, 5);
    CHECK(m.orders == std::vector<Card>{Card::fin(5)});
}
