#ifndef TTM_RANDOM_LAB_HH
#define TTM_RANDOM_LAB_HH 1

#include <ttm/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ttm
{
    /// G(n, p) from a generator seeded by (seed, trial); the same arguments give the same graph.
    auto sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t trial = 0) -> Digraph;

    enum class Predicate
    {
        nice,
        tt_rigid_bounded
    };

    auto parse_predicate(const std::string & name) -> Predicate;
    auto to_string(Predicate p) -> std::string;

    struct Experiment
    {
        int n = 10;
        double p = 0.5;
        int trials = 100;
        std::uint64_t seed = 1;
        Predicate predicate = Predicate::nice;
        std::uint64_t nodes_per_trial = 1000000; // rigidity only
        int threads = 1;
    };

    struct TrialFailure
    {
        int trial;
        std::string graph6;
        std::string reason;
    };

    struct ExperimentReport
    {
        int hits = 0, misses = 0, unknown = 0;
        double fraction = 0, lower = 0, upper = 1;   // fraction of decided trials, 95% Wilson interval
        std::vector<TrialFailure> failures;
    };

    auto wilson_interval(int hits, int total, double z = 1.959963984540054) -> std::pair<double, double>;

    auto estimate_fraction(const Experiment & experiment) -> ExperimentReport;
}

#endif
