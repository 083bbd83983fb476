#include <rdom/family.hh>
#include <rdom/isomorphism.hh>

using std::optional;
using std::string;
using std::vector;

namespace rdom
{
    namespace
    {
        // Vertex i here is the (i+1)-th labelled vertex of the drawing, so
        // R3 edge {0,4} is the chord v1v5.
        auto cycle_with_chords(int n, const vector<Edge> & chords) -> Graph
        {
            Graph g = named::cycle(n);
            for (auto [u, v] : chords)
                g.add_edge(u, v);
            return g;
        }

        auto build(MemberId id) -> Graph
        {
            switch (id) {
                case MemberId::R1:
                    return named::cycle(5);
                case MemberId::R2:
                    // w1..w5 on a 5-cycle, w6 joined to w1 and w3
                    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 2}});
                case MemberId::R3:
                    return cycle_with_chords(8, {{0, 4}});
                case MemberId::R4:
                    return cycle_with_chords(8, {{0, 4}, {2, 6}});
                case MemberId::R5:
                    return cycle_with_chords(8, {{0, 4}, {1, 5}});
                case MemberId::R6:
                    // u1..u11
                    return Graph(11, {{0, 1}, {2, 3}, {3, 4}, {6, 7}, {7, 8}, {9, 10}, {0, 2}, {2, 6}, {6, 9}, {1, 4},
                                         {4, 8}, {8, 10}, {3, 5}, {5, 7}});
                case MemberId::R7:
                    // x1..x11; the top row runs x2 x5 x6 x9 x10
                    return Graph(11, {{0, 1}, {2, 3}, {3, 4}, {6, 10}, {10, 7}, {7, 8}, {0, 2}, {2, 6}, {6, 9}, {1, 4},
                                         {8, 9}, {4, 5}, {5, 8}, {3, 7}});
                case MemberId::R8:
                    // v1..v11
                    return Graph(11, {{0, 1}, {2, 5}, {3, 4}, {6, 7}, {0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {1, 3},
                                         {3, 5}, {5, 7}, {7, 9}, {9, 10}});
                case MemberId::R9:
                    // x1..x11; the top row runs x5 x6 x9 x10
                    return Graph(11, {{2, 3}, {3, 4}, {6, 10}, {10, 7}, {7, 8}, {0, 2}, {2, 6}, {6, 9}, {8, 9}, {4, 5},
                                         {5, 8}, {3, 7}, {0, 1}, {0, 5}, {1, 9}});
                case MemberId::R10:
                    // f3..f9
                    return Graph(7, {{0, 1}, {1, 2}, {4, 5}, {5, 6}, {0, 4}, {2, 6}, {1, 3}, {3, 5}, {2, 4}, {0, 6}});
            }
            throw GraphError{"unknown family member"};
        }

        auto omega_class_of(MemberId id) -> int
        {
            switch (id) {
                case MemberId::R6:
                case MemberId::R7:
                case MemberId::R8:
                case MemberId::R10: return 1;
                case MemberId::R2:
                case MemberId::R3: return 2;
                case MemberId::R9: return 3;
                case MemberId::R4:
                case MemberId::R5: return 4;
                case MemberId::R1: return 5;
            }
            return 0;
        }

        auto tabulated_gamma_r(MemberId id) -> int
        {
            switch (id) {
                case MemberId::R1:
                case MemberId::R2:
                case MemberId::R10: return 3;
                case MemberId::R3:
                case MemberId::R4:
                case MemberId::R5: return 4;
                default: return 5;
            }
        }

        auto make_family() -> vector<FamilyMember>
        {
            vector<FamilyMember> result;
            for (auto id : all_members) {
                auto g = build(id);
                auto profile = degree_profile(g);
                result.push_back(FamilyMember{id, std::move(g), omega_class_of(id), tabulated_gamma_r(id), profile});
            }
            return result;
        }
    }

    auto member_name(MemberId id) -> string
    {
        return "R" + std::to_string(static_cast<int>(id));
    }

    auto parse_member_name(const string & name) -> optional<MemberId>
    {
        for (auto id : all_members)
            if (member_name(id) == name)
                return id;
        return std::nullopt;
    }

    auto family() -> const vector<FamilyMember> &
    {
        static const vector<FamilyMember> members = make_family();
        return members;
    }

    auto family_member(MemberId id) -> const FamilyMember &
    {
        return family()[static_cast<int>(id) - 1];
    }

    auto classify_brdom(const Graph & g) -> optional<Classification>
    {
        if (g.order() > 11 || g.order() < 5)
            return std::nullopt;
        auto profile = degree_profile(g);
        for (auto & m : family()) {
            if (m.graph.order() != g.order() || ! (m.profile == profile))
                continue;
            if (are_isomorphic(m.graph, g))
                return Classification{m.id, m.omega_class};
        }
        return std::nullopt;
    }

    auto weight(const Graph & g) -> WeightReport
    {
        WeightReport report;
        report.per_vertex.resize(g.order());
        for (int v = 0; v < g.order(); ++v) {
            int d = g.neighbours(v).size();
            if (d == 2) {
                ++report.n2;
                report.per_vertex[v] = 5;
            }
            else if (d == 3) {
                ++report.n3;
                report.per_vertex[v] = 4;
            }
            else
                throw GraphError{"weight needs every vertex of degree 2 or 3; vertex " + std::to_string(v) + " has degree "
                    + std::to_string(d)};
        }
        for (auto & c : components(g))
            if (auto hit = classify_brdom(c.graph))
                ++report.f[hit->omega_class - 1];
        for (int i = 0; i < 5; ++i)
            report.omega += (i + 1) * report.f[i];
        report.w = 5 * report.n2 + 4 * report.n3 + report.omega;
        return report;
    }
}
