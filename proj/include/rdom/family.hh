#ifndef RDOM_FAMILY_HH
#define RDOM_FAMILY_HH 1

#include <rdom/graph.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rdom
{
    enum class MemberId
    {
        R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10
    };

    inline constexpr std::array<MemberId, 10> all_members{MemberId::R1, MemberId::R2, MemberId::R3, MemberId::R4,
        MemberId::R5, MemberId::R6, MemberId::R7, MemberId::R8, MemberId::R9, MemberId::R10};

    auto member_name(MemberId id) -> std::string;
    auto parse_member_name(const std::string & name) -> std::optional<MemberId>;

    /**
     * One of the ten exceptional special subcubic graphs. The graph carries a
     * fixed reference labelling; the stated restrained domination number is
     * the tabulated value, which the test suite re-derives with the solver.
     */
    struct FamilyMember
    {
        MemberId id;
        Graph graph;
        int omega_class;
        int gamma_r;
        DegreeProfile profile;
    };

    auto family_member(MemberId id) -> const FamilyMember &;
    auto family() -> const std::vector<FamilyMember> &;

    struct Classification
    {
        MemberId id;
        int omega_class;
    };

    /// Identifies g (up to isomorphism) as a family member, if it is one.
    auto classify_brdom(const Graph & g) -> std::optional<Classification>;

    struct WeightReport
    {
        int n2 = 0;
        int n3 = 0;
        /// f[i-1] counts components in omega class i.
        std::array<int, 5> f{};
        int omega = 0;
        int w = 0;
        std::vector<int> per_vertex;
    };

    /// Weight 5 n2 + 4 n3 + Omega. Throws GraphError if some vertex has degree outside {2,3}.
    auto weight(const Graph & g) -> WeightReport;
}

#endif
