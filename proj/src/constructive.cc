#include <rdom/constructive.hh>
#include <rdom/solver.hh>

using std::string;
using std::vector;

namespace rdom
{
    auto gamma_r_path(int n) -> int
    {
        if (n < 1)
            throw GraphError{"path formula needs n >= 1"};
        return n - 2 * ((n - 1) / 3);
    }

    auto gamma_r_cycle(int n) -> int
    {
        if (n < 3)
            throw GraphError{"cycle formula needs n >= 3"};
        return n - 2 * (n / 3);
    }

    auto lemma1_construct(const Graph & g) -> Lemma1Result
    {
        if (! is_degree_bipartite(g))
            throw GraphError{"construction needs a special subcubic graph whose degree-2 and degree-3 vertices form a bipartition"};

        Lemma1Trace t;
        t.small = vertices_of_degree(g, 2);
        t.large = vertices_of_degree(g, 3);

        // neighbours of each large vertex in the auxiliary graph
        vector<VertexSet> auxiliary(g.order());
        t.large.for_each([&](int v) {
            g.neighbours(v).for_each([&](int s) { auxiliary[v] |= g.neighbours(s); });
            auxiliary[v].erase(v);
        });

        VertexSet blocked;
        t.large.for_each([&](int v) {
            if (! blocked.contains(v)) {
                t.l1.insert(v);
                blocked |= auxiliary[v] | VertexSet::singleton(v);
            }
        });
        t.l2 = t.large - t.l1;

        t.l1.for_each([&](int v) { t.s1 |= g.neighbours(v); });
        t.s2 = t.small - t.s1;

        t.l2.for_each([&](int v) {
            int k = (g.neighbours(v) & t.s1).size();
            if (k < 1 || k > 3)
                throw GraphError{"large vertex outside L1 is not dominated by S1; L1 is not maximal"};
            t.l2_by_count[k - 1].insert(v);
        });

        t.l2_by_count[2].for_each([&](int v) { t.s11.insert((g.neighbours(v) & t.s1).lowest()); });
        t.s12 = t.s1 - t.s11;
        t.d = t.l1 | t.s11 | t.s2;
        return Lemma1Result{t.d, t};
    }

    auto check_lemma1_trace(const Graph & g, const Lemma1Trace & t) -> vector<string>
    {
        vector<string> failures;
        auto fail = [&](string message) { failures.push_back(std::move(message)); };

        t.s1.for_each([&](int s) {
            if ((g.neighbours(s) & t.l1).size() != 1)
                fail("S1 vertex " + std::to_string(s) + " does not have exactly one neighbour in L1");
        });

        // G[L1 + S1] is l1 disjoint stars K_{1,3} centred in L1
        auto star_part = t.l1 | t.s1;
        t.l1.for_each([&](int v) {
            auto inside = g.neighbours(v) & star_part;
            if (inside.size() != 3 || ! inside.subset_of(t.s1))
                fail("L1 vertex " + std::to_string(v) + " is not the centre of a K_{1,3} on S1");
        });
        t.s1.for_each([&](int s) {
            if ((g.neighbours(s) & star_part).size() != 1)
                fail("S1 vertex " + std::to_string(s) + " is not a leaf in G[L1 + S1]");
        });
        if (t.s1.size() != 3 * t.l1.size())
            fail("|S1| != 3 |L1|");

        auto low_l2 = t.l2_by_count[0] | t.l2_by_count[1];
        t.s2.for_each([&](int s) {
            if (! g.neighbours(s).subset_of(low_l2))
                fail("S2 vertex " + std::to_string(s) + " has a neighbour outside L2.1 + L2.2");
        });
        if (2 * t.s2.size() != 2 * t.l2_by_count[0].size() + t.l2_by_count[1].size())
            fail("2|S2| != 2 l2.1 + l2.2");
        if (t.s11.size() != t.l2_by_count[2].size())
            fail("|S11| != l2.3");
        if ((t.l2_by_count[0] | t.l2_by_count[1] | t.l2_by_count[2]) != t.l2)
            fail("L2 is not partitioned by S1-neighbour count");
        if (t.d != (t.l1 | t.s11 | t.s2))
            fail("D != L1 + S11 + S2");
        if ((g.vertices() - t.d) != (t.s12 | t.l2))
            fail("complement of D != S12 + L2");
        if (! is_restrained_dominating(g, t.d))
            fail("D is not a restrained dominating set");
        if (t.d.size() > t.large.size())
            fail("|D| > |L|");
        return failures;
    }
}
