#include <rdom/constructive.hh>
#include <rdom/enumerate.hh>
#include <rdom/isomorphism.hh>
#include <rdom/verify.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace rdom
{
    namespace
    {
        class Stopwatch
        {
            private:
                std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();

            public:
                [[nodiscard]] auto seconds() const -> double
                {
                    return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
                }
        };

        auto set_text(VertexSet s) -> string
        {
            string out = "{";
            bool first = true;
            s.for_each([&](int v) {
                out += (first ? "" : ",") + to_string(v);
                first = false;
            });
            return out + "}";
        }

        auto edge_text(int x, int y) -> string
        {
            return "edge {" + to_string(x) + "," + to_string(y) + "}";
        }

        auto finish(VerificationReport & r, const Stopwatch & clock) -> void
        {
            std::sort(r.violations.begin(), r.violations.end(), [](const Violation & a, const Violation & b) {
                return std::tie(a.graph6, a.details) < std::tie(b.graph6, b.details);
            });
            std::sort(r.extremal.begin(), r.extremal.end());
            r.elapsed_seconds = clock.seconds();
        }

        auto exhaustive_gamma_r(const Graph & g) -> int
        {
            // V(G) is always restrained dominating
            return exhaustive_search(g, Requirement::restrained(g), g.order())->size();
        }

        auto nerd_requirement(const Graph & g, VertexSet x, NerdVariant variant) -> Requirement
        {
            return Requirement::nerd(g, NerdQuery{x, variant});
        }

        auto with_forced(Requirement r, VertexSet in, VertexSet out) -> Requirement
        {
            r.forced_in |= in;
            r.forced_out |= out;
            return r;
        }

        /// Member id plus its restrained domination number, both derived from the graph itself.
        struct MemberContext
        {
            const Graph & g;
            MemberId id;
            int gamma_r;
        };

        using ClaimCheck = void (*)(const MemberContext &, VerificationReport &);

        auto small_vertices(const Graph & g) -> vector<int>
        {
            return vertices_of_degree(g, 2).to_vector();
        }

        auto violate(VerificationReport & r, const MemberContext & m, const string & details) -> void
        {
            r.violations.push_back(Violation{write_graph6(m.g), member_name(m.id) + ": " + details});
        }

        auto obs1a(const MemberContext & m, VerificationReport & r) -> void
        {
            ++r.checked;
            int tabulated = family_member(m.id).gamma_r;
            int solved = gamma_r_exact(m.g).size;
            if (solved != tabulated || m.gamma_r != tabulated)
                violate(r, m, "gamma_r tabulated " + to_string(tabulated) + ", branch and bound " + to_string(solved)
                    + ", exhaustive " + to_string(m.gamma_r));
        }

        auto obs1b(const MemberContext & m, VerificationReport & r) -> void
        {
            for (int v : small_vertices(m.g)) {
                ++r.checked;
                if (! exhaustive_search(m.g, with_forced(Requirement::restrained(m.g), VertexSet::singleton(v), {}), m.gamma_r))
                    violate(r, m, "no gamma_r-set contains vertex " + to_string(v));
            }
        }

        auto obs1c(const MemberContext & m, VerificationReport & r) -> void
        {
            for (int v : small_vertices(m.g)) {
                ++r.checked;
                if (! exhaustive_search(m.g, with_forced(Requirement::restrained(m.g), {}, VertexSet::singleton(v)), m.gamma_r))
                    violate(r, m, "every gamma_r-set contains vertex " + to_string(v));
            }
        }

        auto obs1d(const MemberContext & m, VerificationReport & r) -> void
        {
            for (int v : small_vertices(m.g)) {
                ++r.checked;
                if (! exhaustive_search(m.g, nerd_requirement(m.g, VertexSet::singleton(v), NerdVariant::Type1), m.gamma_r - 1))
                    violate(r, m, "type-1 NeRD number for vertex " + to_string(v) + " exceeds gamma_r - 1");
            }
        }

        auto obs1e(const MemberContext & m, VerificationReport & r) -> void
        {
            for (int v : small_vertices(m.g)) {
                auto req = nerd_requirement(m.g, VertexSet::singleton(v), NerdVariant::Type2);
                if (m.id == MemberId::R2 && is_open_twin(m.g, v)) {
                    auto found = exhaustive_search(m.g, req, m.g.order());
                    r.notes.push_back("exception hit: R2 open twin " + to_string(v) + ", type-2 NeRD number "
                        + (found ? to_string(found->size()) : string{"infeasible"}) + " (gamma_r - 1 = " + to_string(m.gamma_r - 1) + ")");
                    continue;
                }
                ++r.checked;
                if (! exhaustive_search(m.g, req, m.gamma_r - 1))
                    violate(r, m, "type-2 NeRD number for vertex " + to_string(v) + " exceeds gamma_r - 1");
            }
        }

        auto obs1f(const MemberContext & m, VerificationReport & r) -> void
        {
            auto small = small_vertices(m.g);
            for (std::size_t i = 0; i < small.size(); ++i)
                for (std::size_t j = i + 1; j < small.size(); ++j) {
                    ++r.checked;
                    auto x = VertexSet::of({small[i], small[j]});
                    auto req = nerd_requirement(m.g, x, NerdVariant::Type2);
                    if (exhaustive_search(m.g, req, m.gamma_r - 1))
                        continue;
                    req.forced_out = {};
                    bool relaxed = exhaustive_search(m.g, req, m.gamma_r - 1).has_value();
                    violate(r, m, "type-2 NeRD number for X = " + set_text(x) + (m.g.adjacent(small[i], small[j]) ? " (adjacent)" : " (non-adjacent)")
                        + " exceeds gamma_r - 1");
                    r.notes.push_back(member_name(m.id) + " X = " + set_text(x) + ": bound " + (relaxed ? "holds" : "still fails")
                        + " when X may meet the set");
                }
        }

        // Subdivided edge {x,y}: the new path vertices are n, n+1, ... starting next to x.
        template <typename F_>
        auto for_each_subdivision(const MemberContext & m, int t, F_ && f) -> void
        {
            for (auto [x, y] : m.g.edges())
                f(x, y, subdivide(m.g, {x, y}, t), m.g.order());
        }

        auto record_orientations(VerificationReport & r, const MemberContext & m, int one_sided) -> void
        {
            r.notes.push_back(member_name(m.id) + ": edges holding for only one orientation of the subdivision path: " + to_string(one_sided));
        }

        auto obs2(const MemberContext & m, VerificationReport & r) -> void
        {
            for_each_subdivision(m, 1, [&](int x, int y, const Graph & star, int base) {
                ++r.checked;
                int k = exhaustive_gamma_r(star);
                if (k > m.gamma_r)
                    violate(r, m, edge_text(x, y) + ": gamma_r after one subdivision is " + to_string(k));
                auto req = with_forced(Requirement::restrained(star), VertexSet::singleton(base), VertexSet::of({x, y}));
                if (! exhaustive_search(star, req, k)) {
                    violate(r, m, edge_text(x, y) + ": no gamma_r-set contains the new vertex and avoids both ends (gamma_r drops to "
                        + to_string(k) + ")");
                    bool sized = exhaustive_search(star, req, m.gamma_r).has_value();
                    r.notes.push_back(member_name(m.id) + " " + edge_text(x, y) + ": an RD-set of size <= " + to_string(m.gamma_r)
                        + (sized ? " with" : " without") + " the stated membership exists");
                }
            });
        }

        auto obs3(const MemberContext & m, VerificationReport & r) -> void
        {
            int one_sided = 0;
            for_each_subdivision(m, 2, [&](int x, int y, const Graph & star, int base) {
                ++r.checked;
                int k = exhaustive_gamma_r(star);
                if (k > m.gamma_r)
                    violate(r, m, edge_text(x, y) + ": gamma_r after two subdivisions is " + to_string(k));
                auto near_x = VertexSet::singleton(base), near_y = VertexSet::singleton(base + 1);
                bool forward = exhaustive_search(star, with_forced(Requirement::restrained(star), near_x, near_y), k).has_value();
                bool backward = exhaustive_search(star, with_forced(Requirement::restrained(star), near_y, near_x), k).has_value();
                if (! forward && ! backward)
                    violate(r, m, edge_text(x, y) + ": no gamma_r-set contains exactly one prescribed path vertex in either orientation");
                else if (! (forward && backward))
                    ++one_sided;
            });
            record_orientations(r, m, one_sided);
        }

        auto obs4a(const MemberContext & m, VerificationReport & r) -> void
        {
            int one_sided = 0;
            for_each_subdivision(m, 3, [&](int x, int y, const Graph & star, int base) {
                ++r.checked;
                auto holds = [&](int v1) {
                    auto x_set = VertexSet::singleton(v1);
                    return exhaustive_search(star, nerd_requirement(star, x_set, NerdVariant::Type2), m.gamma_r).has_value()
                        && exhaustive_search(star, nerd_requirement(star, x_set, NerdVariant::Type1), m.gamma_r).has_value();
                };
                bool forward = holds(base), backward = holds(base + 2);
                if (! forward && ! backward) {
                    auto value = [&](int v1, NerdVariant variant) {
                        return exhaustive_search(star, nerd_requirement(star, VertexSet::singleton(v1), variant), star.order())->size();
                    };
                    violate(r, m, edge_text(x, y) + ": NeRD bound gamma_r = " + to_string(m.gamma_r)
                        + " at the path vertex next to an end fails in both orientations (type-2 " + to_string(value(base, NerdVariant::Type2)) + "/"
                        + to_string(value(base + 2, NerdVariant::Type2)) + ", type-1 " + to_string(value(base, NerdVariant::Type1)) + "/"
                        + to_string(value(base + 2, NerdVariant::Type1)) + ")");
                }
                else if (! (forward && backward))
                    ++one_sided;
            });
            record_orientations(r, m, one_sided);
        }

        auto obs4b(const MemberContext & m, VerificationReport & r) -> void
        {
            if (m.id != MemberId::R4 && m.id != MemberId::R5 && m.id != MemberId::R9)
                return;
            for_each_subdivision(m, 3, [&](int x, int y, const Graph & star, int base) {
                ++r.checked;
                if (! exhaustive_search(star, nerd_requirement(star, VertexSet::singleton(base + 1), NerdVariant::Type2), m.gamma_r))
                    violate(r, m, edge_text(x, y) + ": type-2 NeRD number for the middle path vertex exceeds gamma_r");
            });
        }

        auto obs5(const MemberContext & m, VerificationReport & r, int slack) -> void
        {
            for_each_subdivision(m, 4, [&](int x, int y, const Graph & star, int base) {
                ++r.checked;
                auto in = VertexSet::of({base, base + 3}), out = VertexSet::of({base + 1, base + 2});
                if (! exhaustive_search(star, with_forced(Requirement::restrained(star), in, out), m.gamma_r + slack))
                    violate(r, m, edge_text(x, y) + ": no RD-set meets the path in its two inner ends with size <= gamma_r + "
                        + to_string(slack));
            });
        }

        auto obs5a(const MemberContext & m, VerificationReport & r) -> void
        {
            if (m.id != MemberId::R4 && m.id != MemberId::R5)
                obs5(m, r, 1);
        }

        auto obs5b(const MemberContext & m, VerificationReport & r) -> void
        {
            if (m.id == MemberId::R4 || m.id == MemberId::R5)
                obs5(m, r, 0);
        }

        auto obs6(const MemberContext & m, VerificationReport & r, bool twin_edges) -> void
        {
            int one_sided = 0;
            for_each_subdivision(m, 4, [&](int x, int y, const Graph & star, int base) {
                bool twin_end = m.id == MemberId::R2 && (is_open_twin(m.g, x) || is_open_twin(m.g, y));
                if (twin_end != twin_edges)
                    return;
                ++r.checked;
                int limit = m.gamma_r + (twin_edges ? 1 : 0);
                auto holds = [&](int v2) {
                    return exhaustive_search(star, with_forced(Requirement::restrained(star), VertexSet::singleton(v2), {}), limit).has_value();
                };
                bool forward = holds(base + 1), backward = holds(base + 2);
                if (! forward && ! backward) {
                    auto least = exhaustive_search(star, with_forced(Requirement::restrained(star), VertexSet::singleton(base + 1), {}), star.order());
                    violate(r, m, edge_text(x, y) + ": no RD-set of size <= " + to_string(limit)
                        + " contains the second path vertex in either orientation (least such size " + to_string(least->size()) + ")");
                }
                else if (! (forward && backward))
                    ++one_sided;
            });
            record_orientations(r, m, one_sided);
        }

        auto obs6a(const MemberContext & m, VerificationReport & r) -> void { obs6(m, r, false); }
        auto obs6b(const MemberContext & m, VerificationReport & r) -> void { obs6(m, r, true); }

        struct ClaimEntry
        {
            const char * id;
            const char * scope;
            ClaimCheck check;
        };

        const vector<ClaimEntry> & claims()
        {
            static const vector<ClaimEntry> table{
                {"obs1a", "gamma_r of R1..R10", obs1a},
                {"obs1b", "every degree-2 vertex of every member lies in some gamma_r-set", obs1b},
                {"obs1c", "every degree-2 vertex of every member avoids some gamma_r-set", obs1c},
                {"obs1d", "type-1 NeRD number <= gamma_r - 1 at every degree-2 vertex", obs1d},
                {"obs1e", "type-2 NeRD number <= gamma_r - 1 at every degree-2 vertex except the open twins of R2", obs1e},
                {"obs1f", "type-2 NeRD number <= gamma_r - 1 for every pair of degree-2 vertices", obs1f},
                {"obs2", "every edge subdivided once", obs2},
                {"obs3", "every edge subdivided twice", obs3},
                {"obs4a", "every edge subdivided three times, path vertex next to an end", obs4a},
                {"obs4b", "every edge of R4, R5, R9 subdivided three times, middle path vertex", obs4b},
                {"obs5a", "every edge subdivided four times, members other than R4, R5", obs5a},
                {"obs5b", "every edge of R4, R5 subdivided four times", obs5b},
                {"obs6a", "every edge subdivided four times, excluding R2 edges at an open twin", obs6a},
                {"obs6b", "every edge of R2 at an open twin subdivided four times", obs6b},
            };
            return table;
        }

        auto run_claims(const string & prefix_filter) -> vector<VerificationReport>
        {
            vector<VerificationReport> reports;
            for (auto & entry : claims()) {
                string id = entry.id;
                bool wanted = prefix_filter == "obs1" ? id.starts_with("obs1") : ! id.starts_with("obs1");
                if (! wanted)
                    continue;
                Stopwatch clock;
                VerificationReport report;
                report.claim_id = id;
                report.scope = entry.scope;
                for (auto & member : family())
                    entry.check(MemberContext{member.graph, member.id, exhaustive_gamma_r(member.graph)}, report);
                finish(report, clock);
                reports.push_back(std::move(report));
            }
            return reports;
        }

        auto is_star(const Graph & g) -> bool
        {
            return g.order() >= 2 && g.size() == g.order() - 1 && max_degree(g) == g.order() - 1;
        }

        template <typename F_>
        auto sweep(VerificationReport & report, const vector<Graph> & graphs, int jobs, F_ && check) -> void
        {
            auto outcomes = parallel_map(graphs.size(), jobs, [&](std::size_t i) { return check(graphs[i]); });
            report.checked += static_cast<long>(graphs.size());
            for (std::size_t i = 0; i < graphs.size(); ++i)
                if (outcomes[i])
                    report.violations.push_back(Violation{write_graph6(graphs[i]), *outcomes[i]});
        }

        struct KeyOutcome
        {
            optional<string> violation;
            bool tight = false;
        };

        auto key_theorem_outcome(const Graph & g) -> KeyOutcome
        {
            KeyOutcome out;
            if (! is_special_subcubic(g)) {
                out.violation = "not special subcubic";
                return out;
            }
            int gamma = gamma_r_exact(g).size;
            auto w = weight(g);
            out.tight = 10 * gamma == w.w;
            if (10 * gamma > w.w)
                out.violation = "10 gamma_r = " + to_string(10 * gamma) + " > w = " + to_string(w.w);
            else if (w.omega > 0 && is_connected(g) && ! out.tight)
                out.violation = "family member with 10 gamma_r = " + to_string(10 * gamma) + " < w = " + to_string(w.w);
            return out;
        }

        auto cubic_outcome(const Graph & g, int & gamma_out) -> optional<string>
        {
            if (! is_cubic(g))
                return "not cubic";
            int n = g.order();
            int gamma = gamma_r_exact(g).size;
            gamma_out = gamma;
            bool bound = gamma <= 2 * n / 5;
            auto w = weight(g);
            bool via_weight = 10 * gamma <= w.w;
            if (w.w != 4 * n)
                return "weight of a cubic graph is " + to_string(w.w) + ", expected 4n = " + to_string(4 * n);
            if (bound != via_weight)
                return "bound check and weight check disagree";
            if (! bound)
                return "gamma_r = " + to_string(gamma) + " > floor(2n/5) = " + to_string(2 * n / 5);
            return std::nullopt;
        }

        auto cubic_report(const vector<Graph> & graphs, int jobs, VerificationReport & report) -> void
        {
            vector<int> gamma(graphs.size(), 0);
            auto outcomes = parallel_map(graphs.size(), jobs, [&](std::size_t i) { return cubic_outcome(graphs[i], gamma[i]); });
            report.checked += static_cast<long>(graphs.size());
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (outcomes[i])
                    report.violations.push_back(Violation{write_graph6(graphs[i]), *outcomes[i]});
                else if (gamma[i] == 2 * graphs[i].order() / 5)
                    report.extremal.push_back(write_graph6(graphs[i]));
            }
        }
    }

    auto exhaustive_search(const Graph & g, const Requirement & r, int max_size) -> optional<VertexSet>
    {
        if (r.forced_in.intersects(r.forced_out))
            return std::nullopt;
        auto free = (g.vertices() - r.forced_in - r.forced_out).to_vector();
        int free_count = static_cast<int>(free.size());
        for (int k = r.forced_in.size(); k <= std::min(max_size, r.forced_in.size() + free_count); ++k) {
            int pick = k - r.forced_in.size();
            if (pick == 0) {
                if (satisfies(g, r.forced_in, r))
                    return r.forced_in;
                continue;
            }
            // Gosper's hack over index masks of the free vertices
            std::uint64_t mask = (std::uint64_t{1} << pick) - 1, limit = std::uint64_t{1} << free_count;
            while (mask < limit) {
                VertexSet s = r.forced_in;
                VertexSet{mask}.for_each([&](int i) { s.insert(free[i]); });
                if (satisfies(g, s, r))
                    return s;
                std::uint64_t low = mask & -mask, ripple = mask + low;
                mask = (((ripple ^ mask) >> 2) / low) | ripple;
            }
        }
        return std::nullopt;
    }

    auto verify_observation_1() -> vector<VerificationReport>
    {
        return run_claims("obs1");
    }

    auto verify_observations_2_to_6() -> vector<VerificationReport>
    {
        return run_claims("subdivisions");
    }

    auto check_observation_instance(const string & claim_id, const Graph & g) -> VerificationReport
    {
        auto entry = std::find_if(claims().begin(), claims().end(), [&](const ClaimEntry & e) { return claim_id == e.id; });
        if (entry == claims().end())
            throw VerificationError{"unknown claim " + claim_id};
        auto hit = classify_brdom(g);
        if (! hit)
            throw VerificationError{"graph " + write_graph6(g) + " is not a family member"};
        Stopwatch clock;
        VerificationReport report;
        report.claim_id = claim_id;
        report.scope = entry->scope;
        entry->check(MemberContext{g, hit->id, exhaustive_gamma_r(g)}, report);
        finish(report, clock);
        return report;
    }

    auto check_key_theorem_instance(const Graph & g) -> optional<string>
    {
        return key_theorem_outcome(g).violation;
    }

    auto verify_key_theorem(int max_n, int jobs) -> VerificationReport
    {
        Stopwatch clock;
        VerificationReport report;
        report.claim_id = "thm-key";
        report.scope = "connected special subcubic graphs of order 3.." + to_string(max_n);
        for (int n = 3; n <= max_n; ++n) {
            auto graphs = enumerate(EnumSpec{n, GraphClass::SpecialSubcubic, true});
            vector<KeyOutcome> outcomes(graphs.size());
            parallel_map(graphs.size(), jobs, [&](std::size_t i) {
                outcomes[i] = key_theorem_outcome(graphs[i]);
                return std::nullopt;
            });
            int tight = 0;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                ++report.checked;
                if (outcomes[i].violation)
                    report.violations.push_back(Violation{write_graph6(graphs[i]), *outcomes[i].violation});
                if (outcomes[i].tight) {
                    ++tight;
                    report.extremal.push_back(write_graph6(graphs[i]));
                }
            }
            report.notes.push_back("n=" + to_string(n) + ": " + to_string(graphs.size()) + " graphs, " + to_string(tight) + " with equality");
        }
        finish(report, clock);
        return report;
    }

    auto check_cubic_bound_instance(const Graph & g) -> optional<string>
    {
        int gamma = 0;
        return cubic_outcome(g, gamma);
    }

    auto verify_cubic_bound(int max_n, int jobs) -> VerificationReport
    {
        Stopwatch clock;
        VerificationReport report;
        report.claim_id = "thm-cubic-2over5";
        report.scope = "connected cubic graphs of order 4.." + to_string(max_n);
        for (int n = 4; n <= max_n; n += 2) {
            auto graphs = enumerate(EnumSpec{n, GraphClass::Cubic, true});
            report.notes.push_back("n=" + to_string(n) + ": " + to_string(graphs.size()) + " graphs");
            cubic_report(graphs, jobs, report);
        }
        finish(report, clock);
        return report;
    }

    auto verify_cubic_bound(const vector<Graph6Line> & inputs, int jobs) -> VerificationReport
    {
        Stopwatch clock;
        vector<Graph> graphs;
        for (auto & line : inputs) {
            if (! is_cubic(line.graph))
                throw VerificationError{"line " + to_string(line.line_number) + ": graph is not cubic"};
            graphs.push_back(line.graph);
        }
        VerificationReport report;
        report.claim_id = "thm-cubic-2over5";
        report.scope = to_string(inputs.size()) + " supplied cubic graphs";
        cubic_report(graphs, jobs, report);
        finish(report, clock);
        return report;
    }

    auto check_known_bounds_instance(const Graph & g) -> optional<string>
    {
        int n = g.order();
        if (n < 2 || ! is_connected(g))
            return "needs a connected graph of order >= 2";
        int gamma = gamma_r_exact(g).size;
        if (is_star(g)) {
            if (gamma != n)
                return "star with gamma_r = " + to_string(gamma) + " != n";
        }
        else if (gamma > n - 2)
            return "non-star with gamma_r = " + to_string(gamma) + " > n - 2";
        if (min_degree(g) >= 2 && ! are_isomorphic(g, named::cycle(5)) && 2 * gamma > n)
            return "minimum degree >= 2 with gamma_r = " + to_string(gamma) + " > n/2";
        return std::nullopt;
    }

    auto verify_known_bounds(int max_n, int jobs) -> VerificationReport
    {
        Stopwatch clock;
        VerificationReport report;
        report.claim_id = "known-bounds";
        report.scope = "connected graphs of order 2.." + to_string(max_n);
        for (int n = 2; n <= max_n; ++n) {
            auto graphs = enumerate(EnumSpec{n, GraphClass::Any, true});
            sweep(report, graphs, jobs, check_known_bounds_instance);
            long stars = std::count_if(graphs.begin(), graphs.end(), is_star);
            long delta2 = std::count_if(graphs.begin(), graphs.end(), [](const Graph & g) { return min_degree(g) >= 2; });
            report.notes.push_back("n=" + to_string(n) + ": " + to_string(graphs.size()) + " graphs, " + to_string(stars) + " star, "
                + to_string(delta2) + " with minimum degree >= 2");
        }
        if (max_n >= 5) {
            int c5 = gamma_r_exact(named::cycle(5)).size;
            report.notes.push_back("C5 excluded from the half bound: gamma_r(C5) = " + to_string(c5) + " > 5/2");
            if (2 * c5 <= 5)
                report.violations.push_back(Violation{write_graph6(named::cycle(5)), "C5 exception is not needed"});
        }
        finish(report, clock);
        return report;
    }

    auto check_lemma1_instance(const Graph & g) -> optional<string>
    {
        Lemma1Result result;
        try {
            result = lemma1_construct(g);
        }
        catch (const GraphError & e) {
            return string{"construction failed: "} + e.what();
        }
        auto failures = check_lemma1_trace(g, result.trace);
        int gamma = gamma_r_exact(g).size;
        if (gamma > result.trace.large.size())
            failures.push_back("gamma_r = " + to_string(gamma) + " > |L|");
        if (failures.empty())
            return std::nullopt;
        string joined;
        for (auto & f : failures)
            joined += (joined.empty() ? "" : "; ") + f;
        return joined;
    }

    auto verify_lemma1(int max_n) -> VerificationReport
    {
        Stopwatch clock;
        VerificationReport report;
        report.claim_id = "lemma1";
        report.scope = "connected degree-bipartite special subcubic graphs of order <= " + to_string(max_n);
        for (int n = 1; n <= max_n; ++n) {
            auto graphs = enumerate(EnumSpec{n, GraphClass::DegreeBipartite, true});
            if (graphs.empty())
                continue;
            sweep(report, graphs, 1, check_lemma1_instance);
            for (auto & g : graphs) {
                auto built = lemma1_construct(g);
                report.notes.push_back(write_graph6(g) + ": |D| = " + to_string(built.d.size()) + ", |L| = "
                    + to_string(built.trace.large.size()) + ", gamma_r = " + to_string(gamma_r_exact(g).size));
            }
        }
        finish(report, clock);
        return report;
    }

    auto extremal_cubic(int n, int jobs) -> vector<ExtremalGraph>
    {
        auto graphs = enumerate(EnumSpec{n, GraphClass::Cubic, true});
        vector<int> gamma(graphs.size());
        parallel_map(graphs.size(), jobs, [&](std::size_t i) {
            gamma[i] = gamma_r_exact(graphs[i]).size;
            return std::nullopt;
        });
        vector<ExtremalGraph> result;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (gamma[i] == 2 * n / 5)
                result.push_back(ExtremalGraph{graphs[i], gamma[i]});
        return result;
    }

    auto parallel_map(std::size_t count, int jobs, const std::function<optional<string>(std::size_t)> & f) -> vector<optional<string>>
    {
        vector<optional<string>> results(count);
        int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
        if (workers == 1) {
            for (std::size_t i = 0; i < count; ++i)
                results[i] = f(i);
            return results;
        }
        std::atomic<std::size_t> next{0};
        vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (auto i = next++; i < count; i = next++)
                    results[i] = f(i);
            });
        for (auto & t : pool)
            t.join();
        return results;
    }
}
