#ifndef RDOM_REPORT_JSON_HH
#define RDOM_REPORT_JSON_HH 1

#include <rdom/constructive.hh>
#include <rdom/family.hh>
#include <rdom/solver.hh>
#include <rdom/verify.hh>

#include <json.hpp>

namespace rdom
{
    auto to_json(const VerificationReport & r) -> nlohmann::json;
    auto to_json(const FamilyMember & m) -> nlohmann::json;
    auto to_json(const Lemma1Trace & t) -> nlohmann::json;

    /// {n, m, status, value, witness, micros}
    auto solve_record(const Graph & g, const SolveOutcome & outcome, long micros) -> nlohmann::json;
}

#endif
