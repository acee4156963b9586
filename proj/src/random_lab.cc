#include <ttm/cayley.hh>
#include <ttm/graph_io.hh>
#include <ttm/hom.hh>
#include <ttm/random_lab.hh>

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

using std::optional;
using std::uint64_t;
using std::vector;

namespace ttm
{
    auto sample_gnp(int n, double p, uint64_t seed, uint64_t trial) -> Digraph
    {
        if (n < 0 || ! (p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("G(n,p) needs n >= 0 and 0 <= p <= 1");
        std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        std::mt19937_64 rng(sequence);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p)
                    edges.push_back({i, j});
        return Digraph(n, std::move(edges), true, "gnp");
    }

    auto parse_predicate(const std::string & name) -> Predicate
    {
        if (name == "nice")
            return Predicate::nice;
        if (name == "tt-rigid-bounded")
            return Predicate::tt_rigid_bounded;
        throw std::invalid_argument("unknown predicate '" + name + "'");
    }

    auto to_string(Predicate p) -> std::string
    {
        return p == Predicate::nice ? "nice" : "tt-rigid-bounded";
    }

    auto wilson_interval(int hits, int total, double z) -> std::pair<double, double>
    {
        if (total == 0)
            return {0.0, 1.0};
        double phat = static_cast<double>(hits) / total, z2 = z * z;
        double centre = (phat + z2 / (2 * total)) / (1 + z2 / total);
        double half = z * std::sqrt(phat * (1 - phat) / total + z2 / (4.0 * total * total)) / (1 + z2 / total);
        return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
    }

    auto estimate_fraction(const Experiment & experiment) -> ExperimentReport
    {
        if (experiment.trials < 1)
            throw std::invalid_argument("an experiment needs at least one trial");
        if (experiment.predicate == Predicate::tt_rigid_bounded && experiment.n > 8)
            throw std::invalid_argument("rigidity sampling is limited to 8 vertices");

        struct Outcome
        {
            optional<bool> hit;
            std::string reason;
        };
        vector<Outcome> outcomes(experiment.trials);

        auto run_trial = [&](int trial) {
            auto g = sample_gnp(experiment.n, experiment.p, experiment.seed, static_cast<uint64_t>(trial));
            auto & out = outcomes[trial];
            if (experiment.predicate == Predicate::nice) {
                auto report = is_nice(g);
                out.hit = report.nice;
                if (! report.nice) {
                    out.reason = "condition " + std::to_string(report.failed_condition) + " fails at";
                    for (auto v : report.witness)
                        out.reason += " " + std::to_string(v);
                }
            }
            else {
                SearchLimits limits;
                limits.max_nodes = experiment.nodes_per_trial;
                out.hit = is_tt_rigid(g, Cyclic{2}, limits);
                if (out.hit && ! *out.hit)
                    out.reason = "non-identity TT_2 self-map";
                else if (! out.hit)
                    out.reason = "budget exhausted";
            }
        };

        int threads = std::max(1, experiment.threads);
        std::atomic<int> next{0};
        vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int trial; (trial = next.fetch_add(1)) < experiment.trials;)
                    run_trial(trial);
            });
        for (auto & t : pool)
            t.join();

        ExperimentReport report;
        for (int trial = 0; trial < experiment.trials; ++trial) {
            auto & out = outcomes[trial];
            if (! out.hit)
                ++report.unknown;
            else if (*out.hit)
                ++report.hits;
            else
                ++report.misses;
            if (! out.hit || ! *out.hit)
                report.failures.push_back({trial,
                    format_graph6(sample_gnp(experiment.n, experiment.p, experiment.seed, static_cast<uint64_t>(trial))), out.reason});
        }
        int decided = report.hits + report.misses;
        report.fraction = decided ? static_cast<double>(report.hits) / decided : 0.0;
        std::tie(report.lower, report.upper) = wilson_interval(report.hits, decided);
        return report;
    }
}
