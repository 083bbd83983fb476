#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <rdom/enumerate.hh>
#include <rdom/graph6.hh>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace rdom;

namespace
{
    auto certificates(const std::vector<Graph> & graphs) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (auto & g : graphs)
            out.insert(canonical_certificate(g));
        return out;
    }

    auto stream_text(const EnumSpec & spec) -> std::string
    {
        std::string text;
        enumerate(spec, [&](const Graph & g) { text += write_graph6(g) + "\n"; });
        return text;
    }

    auto degree_two_or_three(int d) -> bool { return d == 2 || d == 3; }

    auto cubic_predicate(const Graph & g) -> bool { return is_cubic(g); }
}

TEST_CASE("connected cubic graphs match the labelled census")
{
    // 19355 labelled cubic graphs on 8 vertices, less the 35 copies of 2K4
    std::vector<long> labelled{1, 70, 19320};
    std::vector<std::size_t> classes{1, 2, 5};
    for (int i = 0; i < 3; ++i) {
        int n = 4 + 2 * i;
        auto census = oracle::labelled_cubic_census(n, true);
        CHECK(census.labelled == labelled[i]);
        CHECK(census.classes.size() == classes[i]);
        auto got = enumerate(EnumSpec{n, GraphClass::Cubic, true});
        CHECK(got.size() == classes[i]);
        CHECK(certificates(got) == census.classes);
    }
}

TEST_CASE("cubic graphs without the connectivity filter")
{
    auto census = oracle::labelled_cubic_census(8, false);
    CHECK(census.labelled == 19355);
    auto got = enumerate(EnumSpec{8, GraphClass::Cubic, false});
    CHECK(got.size() == 6);
    CHECK(certificates(got) == census.classes);
    CHECK(enumerate(EnumSpec{5, GraphClass::Cubic, true}).empty());
}

TEST_CASE("larger cubic counts")
{
    CHECK(enumerate(EnumSpec{10, GraphClass::Cubic, true}).size() == 19);
    CHECK(enumerate(EnumSpec{12, GraphClass::Cubic, true}).size() == 85);
}

TEST_CASE("special subcubic graphs match the labelled census")
{
    for (int n = 3; n <= 7; ++n) {
        INFO("n=", n);
        auto census = oracle::labelled_census(n, degree_two_or_three, true);
        auto got = enumerate(EnumSpec{n, GraphClass::SpecialSubcubic, true});
        CHECK(certificates(got) == census.classes);
        CHECK(got.size() == census.classes.size());
    }
    auto c3 = enumerate(EnumSpec{3, GraphClass::SpecialSubcubic, true});
    REQUIRE(c3.size() == 1);
    CHECK(are_isomorphic(c3[0], named::cycle(3)));
}

TEST_CASE("connected graphs of any kind match the labelled census")
{
    for (int n = 1; n <= 6; ++n) {
        auto census = oracle::labelled_census(n, [](int) { return true; }, true);
        auto got = enumerate(EnumSpec{n, GraphClass::Any, true});
        CHECK(certificates(got) == census.classes);
        if (n == 5)
            CHECK(census.labelled == 728);
        if (n == 6)
            CHECK(census.labelled == 26704);
    }
}

TEST_CASE("degree-bipartite graphs match the filtered census")
{
    auto census = oracle::labelled_census(5, degree_two_or_three, true);
    std::set<std::string> expected;
    for (auto & cert : census.classes) {
        auto g = parse_graph6(cert);
        bool split = true;
        for (auto [u, v] : g.edges())
            split = split && degree(g, u) != degree(g, v);
        if (split)
            expected.insert(cert);
    }
    auto got = enumerate(EnumSpec{5, GraphClass::DegreeBipartite, true});
    CHECK(certificates(got) == expected);
    REQUIRE(got.size() == 1);
    CHECK(are_isomorphic(got[0], named::complete_bipartite(2, 3)));
    CHECK(enumerate(EnumSpec{10, GraphClass::DegreeBipartite, true}).size() == 2);
    CHECK(enumerate(EnumSpec{7, GraphClass::DegreeBipartite, true}).empty());
}

TEST_CASE("outputs are canonical, distinct, in class and sorted")
{
    for (auto spec : {EnumSpec{10, GraphClass::Cubic, true}, EnumSpec{8, GraphClass::SpecialSubcubic, true},
             EnumSpec{10, GraphClass::DegreeBipartite, true}, EnumSpec{7, GraphClass::Any, true}}) {
        auto got = enumerate(spec);
        std::vector<std::string> texts;
        for (auto & g : got) {
            CHECK(in_class(spec.graph_class, g));
            CHECK(is_connected(g));
            CHECK(g.order() == spec.n);
            CHECK(canonical_certificate(g) == write_graph6(g));
            texts.push_back(write_graph6(g));
        }
        CHECK(std::is_sorted(texts.begin(), texts.end()));
        CHECK(certificates(got).size() == got.size());
    }
}

TEST_CASE("reruns give byte-identical streams")
{
    EnumSpec spec{9, GraphClass::SpecialSubcubic, true};
    auto first = stream_text(spec);
    CHECK(! first.empty());
    CHECK(stream_text(spec) == first);
}

TEST_CASE("caps and class names")
{
    CHECK_THROWS_AS(enumerate(EnumSpec{16, GraphClass::Cubic, true}), EnumerationError);
    CHECK_THROWS_AS(enumerate(EnumSpec{12, GraphClass::SpecialSubcubic, true}), EnumerationError);
    CHECK_THROWS_AS(enumerate(EnumSpec{10, GraphClass::Any, true}), EnumerationError);
    CHECK_THROWS_AS(enumerate(EnumSpec{-1, GraphClass::Cubic, true}), EnumerationError);
    CHECK(enumeration_cap(GraphClass::Cubic) == 14);
    CHECK(enumeration_cap(GraphClass::SpecialSubcubic) == 11);
    for (auto c : {GraphClass::Cubic, GraphClass::SpecialSubcubic, GraphClass::DegreeBipartite, GraphClass::Any})
        CHECK(parse_graph_class(graph_class_name(c)) == c);
    CHECK(! parse_graph_class("planar").has_value());
}

TEST_CASE("ingesting external graph6")
{
    std::istringstream k4("C~\n");
    auto a = enumerate_from_stream(k4, cubic_predicate);
    REQUIRE(a.graphs.size() == 1);
    CHECK(a.graphs[0].graph == named::complete(4));

    std::istringstream empty("");
    auto b = enumerate_from_stream(empty, cubic_predicate);
    CHECK(b.graphs.empty());
    CHECK(b.failures.empty());

    std::istringstream p3(write_graph6(named::path(3)) + "\n");
    auto c = enumerate_from_stream(p3, cubic_predicate);
    CHECK(c.graphs.empty());
    CHECK(c.failures.empty());
    CHECK(c.filtered == 1);

    std::istringstream mixed("C~\nbroken line\nBw\nDhc\n");
    auto d = enumerate_from_stream(mixed, cubic_predicate);
    CHECK(d.graphs.size() == 1);
    REQUIRE(d.failures.size() == 1);
    CHECK(d.failures[0].line_number == 2);
    CHECK(d.filtered == 2);

    std::istringstream strict("C~\nbroken line\n");
    CHECK_THROWS_AS(enumerate_from_stream(strict, cubic_predicate, true), EnumerationError);
}

TEST_CASE("ingesting from a file preserves order")
{
    std::string path = "rdom_test_ingest.g6";
    {
        std::ofstream out(path);
        for (auto & m : {named::petersen(), named::complete(4), named::prism(3)})
            out << write_graph6(m) << "\n";
    }
    auto r = enumerate_from_file(path, cubic_predicate);
    std::remove(path.c_str());
    REQUIRE(r.graphs.size() == 3);
    CHECK(r.graphs[0].graph == named::petersen());
    CHECK(r.graphs[1].line_number == 2);
    CHECK(r.graphs[2].graph == named::prism(3));
    CHECK_THROWS_AS(enumerate_from_file("/nonexistent/dir/none.g6", cubic_predicate), EnumerationError);
}
