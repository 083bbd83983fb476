#include <rdom/graph6.hh>
#include <rdom/report_json.hh>

using nlohmann::json;

namespace rdom
{
    auto to_json(const VerificationReport & r) -> json
    {
        json violations = json::array();
        for (auto & v : r.violations)
            violations.push_back({{"graph6", v.graph6}, {"details", v.details}});
        return json{
            {"claim_id", r.claim_id},
            {"scope", r.scope},
            {"checked", r.checked},
            {"passed", r.passed()},
            {"violations", violations},
            {"extremal", r.extremal},
            {"notes", r.notes},
            {"elapsed_seconds", r.elapsed_seconds},
        };
    }

    auto to_json(const FamilyMember & m) -> json
    {
        return json{
            {"id", member_name(m.id)},
            {"order", m.graph.order()},
            {"n2", m.profile.n2},
            {"n3", m.profile.n3},
            {"omega_class", m.omega_class},
            {"gamma_r", m.gamma_r},
        };
    }

    auto to_json(const Lemma1Trace & t) -> json
    {
        return json{
            {"L", t.large.to_vector()},
            {"S", t.small.to_vector()},
            {"L1", t.l1.to_vector()},
            {"L2", t.l2.to_vector()},
            {"L2_1", t.l2_by_count[0].to_vector()},
            {"L2_2", t.l2_by_count[1].to_vector()},
            {"L2_3", t.l2_by_count[2].to_vector()},
            {"S1", t.s1.to_vector()},
            {"S2", t.s2.to_vector()},
            {"S11", t.s11.to_vector()},
            {"S12", t.s12.to_vector()},
            {"D", t.d.to_vector()},
        };
    }

    auto solve_record(const Graph & g, const SolveOutcome & outcome, long micros) -> json
    {
        bool optimal = outcome.status == SolveStatus::Optimal;
        return json{
            {"n", g.order()},
            {"m", g.size()},
            {"status", optimal ? "optimal" : "infeasible"},
            {"value", optimal ? json(outcome.size) : json(nullptr)},
            {"witness", optimal ? json(outcome.witness.to_vector()) : json::array()},
            {"micros", micros},
        };
    }
}
