#ifndef RDOM_VERIFY_HH
#define RDOM_VERIFY_HH 1

#include <rdom/family.hh>
#include <rdom/graph.hh>
#include <rdom/graph6.hh>
#include <rdom/solver.hh>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdom
{
    class VerificationError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct Violation
    {
        /// The instance the failed check ran on; re-checkable on its own.
        std::string graph6;
        std::string details;
    };

    struct VerificationReport
    {
        std::string claim_id;
        std::string scope;
        long checked = 0;
        std::vector<Violation> violations;
        /// Instances meeting the bound with equality, as graph6.
        std::vector<std::string> extremal;
        /// Informational lines: exception hits, per-order counts, orientation records.
        std::vector<std::string> notes;
        double elapsed_seconds = 0.0;

        [[nodiscard]] auto passed() const -> bool { return violations.empty(); }
    };

    /**
     * Smallest set satisfying r found by scanning every subset in order of
     * size, never exceeding max_size. Independent of the branch-and-bound
     * solver; intended for graphs of at most about 16 vertices.
     */
    auto exhaustive_search(const Graph & g, const Requirement & r, int max_size) -> std::optional<VertexSet>;

    /// Member-level claims, one report each: "obs1a" .. "obs1f".
    auto verify_observation_1() -> std::vector<VerificationReport>;

    /// Subdivision observations: "obs2", "obs3", "obs4a", "obs4b", "obs5a", "obs5b", "obs6a", "obs6b".
    auto verify_observations_2_to_6() -> std::vector<VerificationReport>;

    /// Runs one observation claim on one graph, which must be a family member up to isomorphism.
    auto check_observation_instance(const std::string & claim_id, const Graph & g) -> VerificationReport;

    /// 10 gamma_r <= w over connected special subcubic graphs of order 3..max_n.
    auto verify_key_theorem(int max_n, int jobs = 1) -> VerificationReport;
    auto check_key_theorem_instance(const Graph & g) -> std::optional<std::string>;

    /// gamma_r <= floor(2n/5) over connected cubic graphs of order 4..max_n.
    auto verify_cubic_bound(int max_n, int jobs = 1) -> VerificationReport;
    /// Same check on externally supplied graphs; throws VerificationError naming the first non-cubic line.
    auto verify_cubic_bound(const std::vector<Graph6Line> & inputs, int jobs = 1) -> VerificationReport;
    auto check_cubic_bound_instance(const Graph & g) -> std::optional<std::string>;

    /// Star exception and the half bound for minimum degree 2 (C_5 excepted) over connected graphs of order 2..max_n.
    auto verify_known_bounds(int max_n, int jobs = 1) -> VerificationReport;
    auto check_known_bounds_instance(const Graph & g) -> std::optional<std::string>;

    /// The RD-set construction on every connected degree-bipartite special subcubic graph of order <= max_n.
    auto verify_lemma1(int max_n) -> VerificationReport;
    auto check_lemma1_instance(const Graph & g) -> std::optional<std::string>;

    struct ExtremalGraph
    {
        Graph graph;
        int gamma_r;
    };

    /// Connected cubic graphs of order n with gamma_r = floor(2n/5).
    auto extremal_cubic(int n, int jobs = 1) -> std::vector<ExtremalGraph>;

    /// Applies f to 0..count-1 on up to jobs threads; results keep index order.
    auto parallel_map(std::size_t count, int jobs, const std::function<std::optional<std::string>(std::size_t)> & f)
        -> std::vector<std::optional<std::string>>;
}

#endif
