#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <rdom/enumerate.hh>
#include <rdom/family.hh>
#include <rdom/graph6.hh>
#include <rdom/solver.hh>

#include <fstream>
#include <map>
#include <random>

using namespace rdom;

namespace
{
    // Second transcription of the drawings, written from their vertex
    // names (1-based) and draw commands, independent of the catalog source.
    auto drawn(int n, std::vector<std::vector<int>> strokes) -> Graph
    {
        Graph g(n);
        for (auto & stroke : strokes)
            for (std::size_t i = 0; i + 1 < stroke.size(); ++i)
                g.add_edge(stroke[i] - 1, stroke[i + 1] - 1);
        return g;
    }

    auto drawings() -> std::map<MemberId, Graph>
    {
        std::vector<int> octagon{1, 2, 3, 4, 5, 6, 7, 8, 1};
        return {
            {MemberId::R1, drawn(5, {{1, 2, 3, 4, 5, 1}})},
            {MemberId::R2, drawn(6, {{1, 2, 3, 4, 5, 1}, {1, 6, 3}})},
            {MemberId::R3, drawn(8, {octagon, {1, 5}})},
            {MemberId::R4, drawn(8, {octagon, {1, 5}, {3, 7}})},
            {MemberId::R5, drawn(8, {octagon, {1, 5}, {2, 6}})},
            {MemberId::R6, drawn(11, {{1, 2}, {3, 4, 5}, {7, 8, 9}, {10, 11}, {1, 3, 7, 10}, {2, 5, 9, 11}, {4, 6, 8}})},
            // the drawn segment x5--x9 is covered by the path x5--x6--x9
            {MemberId::R7, drawn(11, {{1, 2}, {3, 4, 5}, {7, 11, 8, 9}, {1, 3, 7, 10}, {2, 5}, {9, 10}, {5, 6, 9}, {4, 8}})},
            {MemberId::R8, drawn(11, {{1, 2}, {3, 6}, {4, 5}, {7, 8}, {1, 3, 5, 7, 9, 11}, {2, 4, 6, 8, 10, 11}})},
            {MemberId::R9, drawn(11, {{3, 4, 5}, {7, 11, 8, 9}, {1, 3, 7, 10}, {9, 10}, {5, 6, 9}, {4, 8}, {1, 2}, {1, 6}, {2, 10}})},
            // vertices f3..f9 renumbered 1..7
            {MemberId::R10, drawn(7, {{1, 2, 3}, {5, 6, 7}, {1, 5}, {3, 7}, {2, 4, 6}, {3, 5}, {1, 7}})},
        };
    }
}

TEST_CASE("catalog matches an independent second transcription")
{
    auto fig = drawings();
    for (auto & m : family())
        CHECK_MESSAGE(m.graph == fig.at(m.id), member_name(m.id));
}

TEST_CASE("catalog matches the golden graph6 file")
{
    std::ifstream in(std::string{RDOM_TEST_DATA} + "/family.g6");
    REQUIRE(in);
    auto stream = read_graph6_stream(in);
    REQUIRE(stream.failures.empty());
    REQUIRE(stream.graphs.size() == 10);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(stream.graphs[i].graph == family()[i].graph);
}

TEST_CASE("member invariants")
{
    std::map<MemberId, int> order{{MemberId::R1, 5}, {MemberId::R2, 6}, {MemberId::R3, 8}, {MemberId::R4, 8}, {MemberId::R5, 8},
        {MemberId::R6, 11}, {MemberId::R7, 11}, {MemberId::R8, 11}, {MemberId::R9, 11}, {MemberId::R10, 7}};
    std::map<MemberId, int> omega{{MemberId::R1, 5}, {MemberId::R2, 2}, {MemberId::R3, 2}, {MemberId::R4, 4}, {MemberId::R5, 4},
        {MemberId::R6, 1}, {MemberId::R7, 1}, {MemberId::R8, 1}, {MemberId::R9, 3}, {MemberId::R10, 1}};
    // restrained domination numbers
    std::map<MemberId, int> gamma{{MemberId::R1, 3}, {MemberId::R2, 3}, {MemberId::R3, 4}, {MemberId::R4, 4}, {MemberId::R5, 4},
        {MemberId::R6, 5}, {MemberId::R7, 5}, {MemberId::R8, 5}, {MemberId::R9, 5}, {MemberId::R10, 3}};

    REQUIRE(family().size() == 10);
    for (auto & m : family()) {
        INFO(member_name(m.id));
        CHECK(m.graph.order() == order.at(m.id));
        CHECK(m.omega_class == omega.at(m.id));
        CHECK(m.gamma_r == gamma.at(m.id));
        CHECK(oracle::naive_gamma_r(m.graph) == gamma.at(m.id));
        CHECK(is_connected(m.graph));
        CHECK(is_special_subcubic(m.graph));
        auto p = degree_profile(m.graph);
        CHECK(p == m.profile);
        CHECK(p.n2 >= 1);
        if (m.id == MemberId::R9)
            CHECK(p.n2 == 3);
        else if (m.id == MemberId::R10)
            CHECK(p.n2 == 1);
        else
            CHECK(p.n2 >= 4);
        CHECK(10 * m.gamma_r == 5 * p.n2 + 4 * p.n3 + m.omega_class);
        CHECK(10 * gamma_r_exact(m.graph).size == weight(m.graph).w);
    }
}

TEST_CASE("degree-2 open twins occur only in R2")
{
    for (auto & m : family()) {
        std::vector<Edge> small_twins;
        for (auto [u, v] : open_twins(m.graph))
            if (degree(m.graph, u) == 2)
                small_twins.emplace_back(u, v);
        if (m.id == MemberId::R2)
            CHECK(small_twins == std::vector<Edge>{{1, 5}});
        else
            CHECK_MESSAGE(small_twins.empty(), member_name(m.id));
    }
    // R10 is K_{3,3} with one edge subdivided, so the four large vertices off that edge pair up as twins
    CHECK(open_twins(family_member(MemberId::R10).graph) == std::vector<Edge>{{0, 2}, {4, 6}});
}

TEST_CASE("names round trip")
{
    for (auto id : all_members)
        CHECK(parse_member_name(member_name(id)) == id);
    CHECK(! parse_member_name("R11").has_value());
    CHECK(! parse_member_name("r1").has_value());
}

TEST_CASE("classification is invariant under relabelling")
{
    std::mt19937_64 rng(99);
    for (auto & m : family()) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> p(m.graph.order());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            auto c = classify_brdom(relabel(m.graph, p));
            REQUIRE(c.has_value());
            CHECK(c->id == m.id);
            CHECK(c->omega_class == m.omega_class);
        }
    }
    auto r1 = classify_brdom(named::cycle(5));
    REQUIRE(r1.has_value());
    CHECK(r1->id == MemberId::R1);
    CHECK(r1->omega_class == 5);
    CHECK(! classify_brdom(named::petersen()).has_value());
    CHECK(! classify_brdom(named::cycle(6)).has_value());
    CHECK(! classify_brdom(named::complete(4)).has_value());
    auto r4 = named::cycle(8);
    r4.add_edge(0, 4);
    r4.add_edge(2, 6);
    REQUIRE(classify_brdom(r4).has_value());
    CHECK(classify_brdom(r4)->id == MemberId::R4);
}

TEST_CASE("weight function")
{
    auto pet = weight(named::petersen());
    CHECK(pet.n2 == 0);
    CHECK(pet.n3 == 10);
    CHECK(pet.omega == 0);
    CHECK(pet.w == 40);

    auto r1 = weight(family_member(MemberId::R1).graph);
    CHECK(r1.w == 30);
    CHECK(r1.f[4] == 1);

    auto both = weight(disjoint_union(family_member(MemberId::R2).graph, family_member(MemberId::R9).graph));
    CHECK(both.omega == 5);
    CHECK(both.f[1] == 1);
    CHECK(both.f[2] == 1);
    CHECK(both.w == 80);

    auto c6 = weight(named::cycle(6));
    CHECK(c6.w == 30);
    CHECK(c6.per_vertex == std::vector<int>(6, 5));
    CHECK(10 * gamma_r_exact(named::cycle(6)).size == 20);

    CHECK_THROWS_AS(weight(named::path(4)), GraphError);
    CHECK_THROWS_AS(weight(named::star(3)), GraphError);
}

TEST_CASE("weight is additive over components")
{
    std::vector<Graph> parts{named::cycle(5), named::complete(4), family_member(MemberId::R5).graph, named::cycle(7),
        family_member(MemberId::R10).graph};
    for (auto & a : parts)
        for (auto & b : parts) {
            auto u = disjoint_union(a, b);
            CHECK(weight(u).w == weight(a).w + weight(b).w);
            CHECK(weight(u).omega == weight(a).omega + weight(b).omega);
        }
}

TEST_CASE("members are the only small violators of the omega-free inequality")
{
    for (int n = 3; n <= 8; ++n)
        for (auto & g : enumerate(EnumSpec{n, GraphClass::SpecialSubcubic, true})) {
            auto p = degree_profile(g);
            bool violates = 10 * gamma_r_exact(g).size > 5 * p.n2 + 4 * p.n3;
            CHECK_MESSAGE(violates == classify_brdom(g).has_value(), write_graph6(g));
        }
}
