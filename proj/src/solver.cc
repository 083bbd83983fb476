#include <rdom/solver.hh>

#include <algorithm>

namespace rdom
{
    auto Requirement::dominating(const Graph & g) -> Requirement
    {
        return Requirement{g.vertices(), VertexSet{}, VertexSet{}, VertexSet{}};
    }

    auto Requirement::restrained(const Graph & g) -> Requirement
    {
        return Requirement{g.vertices(), g.vertices(), VertexSet{}, VertexSet{}};
    }

    auto Requirement::nerd(const Graph & g, const NerdQuery & q) -> Requirement
    {
        if (! q.x.subset_of(g.vertices()))
            throw GraphError{"exempt set names vertices outside the graph"};
        switch (q.variant) {
            case NerdVariant::Type1:
                return Requirement{g.vertices() - q.x, g.vertices(), VertexSet{}, VertexSet{}};
            case NerdVariant::Type2:
                return Requirement{g.vertices(), g.vertices() - q.x, VertexSet{}, q.x};
        }
        throw GraphError{"unknown NeRD variant"};
    }

    auto satisfies(const Graph & g, VertexSet s, const Requirement & r) -> bool
    {
        if (! s.subset_of(g.vertices()) || ! r.forced_in.subset_of(s) || s.intersects(r.forced_out))
            return false;
        auto outside = g.vertices() - s;
        bool ok = true;
        outside.for_each([&](int v) {
            if (r.must_dominate.contains(v) && ! g.neighbours(v).intersects(s))
                ok = false;
            if (r.must_restrain.contains(v) && ! g.neighbours(v).intersects(outside))
                ok = false;
        });
        return ok;
    }

    auto is_dominating(const Graph & g, VertexSet s) -> bool
    {
        return satisfies(g, s, Requirement::dominating(g));
    }

    auto is_restrained_dominating(const Graph & g, VertexSet s) -> bool
    {
        return satisfies(g, s, Requirement::restrained(g));
    }

    auto is_nerd(const Graph & g, VertexSet s, const NerdQuery & q) -> bool
    {
        return satisfies(g, s, Requirement::nerd(g, q));
    }

    namespace
    {
        struct Analysis
        {
            bool dead = false;
            int lower_bound = 0;
            /// Undecided vertices touching a constraint that is not yet met.
            VertexSet candidates;
        };

        class Search
        {
            private:
                const Graph & _g;
                const Requirement & _r;
                VertexSet _all;

            public:
                long nodes = 0;
                int best_size;
                VertexSet best;

                Search(const Graph & g, const Requirement & r) : _g(g), _r(r), _all(g.vertices()), best_size(g.order() + 1) {}

                auto analyse(VertexSet in, VertexSet out) const -> Analysis
                {
                    Analysis a;
                    auto undecided = _all - in - out;

                    VertexSet dominated = in;
                    in.for_each([&](int v) { dominated |= _g.neighbours(v); });

                    out.for_each([&](int v) {
                        auto nbrs = _g.neighbours(v);
                        if (_r.must_dominate.contains(v) && ! nbrs.intersects(in | undecided))
                            a.dead = true;
                        if (_r.must_restrain.contains(v)) {
                            if (! nbrs.intersects(out | undecided))
                                a.dead = true;
                            else if (! nbrs.intersects(out))
                                a.candidates |= nbrs & undecided;
                        }
                    });
                    if (a.dead)
                        return a;

                    auto undominated = _r.must_dominate - dominated;
                    if (! undominated.empty()) {
                        int cover = 0;
                        undecided.for_each([&](int x) { cover = std::max(cover, (_g.closed_neighbours(x) & undominated).size()); });
                        if (cover == 0) {
                            a.dead = true;
                            return a;
                        }
                        a.lower_bound = (undominated.size() + cover - 1) / cover;
                        undominated.for_each([&](int u) { a.candidates |= _g.closed_neighbours(u) & undecided; });
                    }

                    // an undecided vertex with every neighbour inside must itself go inside
                    (undecided & _r.must_restrain).for_each([&](int w) {
                        if (_g.neighbours(w).subset_of(in))
                            a.candidates.insert(w);
                    });
                    return a;
                }

                auto minimise(VertexSet in, VertexSet out) -> void
                {
                    ++nodes;
                    auto a = analyse(in, out);
                    if (a.dead || in.size() + a.lower_bound >= best_size)
                        return;
                    if (a.candidates.empty()) {
                        best_size = in.size();
                        best = in;
                        return;
                    }
                    int v = a.candidates.lowest();
                    minimise(in | VertexSet::singleton(v), out);
                    minimise(in, out | VertexSet::singleton(v));
                }

                /// First solution of size <= limit in increasing integer order of the set.
                auto least(VertexSet in, VertexSet out, int limit) -> bool
                {
                    ++nodes;
                    auto a = analyse(in, out);
                    if (a.dead || in.size() + a.lower_bound > limit)
                        return false;
                    if (a.candidates.empty()) {
                        best = in;
                        best_size = in.size();
                        return true;
                    }
                    int v = (_all - in - out).highest();
                    return least(in, out | VertexSet::singleton(v), limit) || least(in | VertexSet::singleton(v), out, limit);
                }
        };
    }

    auto solve_minimum(const Graph & g, const Requirement & r) -> SolveOutcome
    {
        SolveOutcome outcome;
        auto all = g.vertices();
        if (r.forced_in.intersects(r.forced_out) || ! (r.forced_in | r.forced_out).subset_of(all))
            return outcome;

        Search search(g, r);
        search.minimise(r.forced_in, r.forced_out);
        outcome.nodes = search.nodes;
        if (search.best_size > g.order())
            return outcome;

        int optimum = search.best_size;
        Search tie_break(g, r);
        tie_break.least(r.forced_in, r.forced_out, optimum);
        outcome.nodes += tie_break.nodes;
        outcome.status = SolveStatus::Optimal;
        outcome.size = optimum;
        outcome.witness = tie_break.best;
        return outcome;
    }

    auto gamma_r_exact(const Graph & g) -> SolveOutcome
    {
        return solve_minimum(g, Requirement::restrained(g));
    }

    auto gamma_r_nerd_exact(const Graph & g, const NerdQuery & q) -> SolveOutcome
    {
        return solve_minimum(g, Requirement::nerd(g, q));
    }

    auto gamma_exact(const Graph & g) -> SolveOutcome
    {
        return solve_minimum(g, Requirement::dominating(g));
    }
}
