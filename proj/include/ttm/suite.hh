#ifndef TTM_SUITE_HH
#define TTM_SUITE_HH 1

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ttm
{
    struct CriterionResult
    {
        int id = 0;
        std::string title;
        bool pass = false;
        std::string detail;
        double seconds = 0;
        double limit_seconds = 0;
    };

    struct SuiteOptions
    {
        std::string rigid_base_path;       // empty: look for data/rigid_base.txt next to the sources
        std::uint64_t seed = 20240601;
        int threads = 1;
        std::vector<int> only;             // empty runs everything
    };

    /// Runs the acceptance battery. Each result is reported as soon as it is known;
    /// the witness invariant (7) is evaluated last since it inspects everything else.
    auto run_suite(const SuiteOptions & options, const std::function<void(const CriterionResult &)> & report = {})
        -> std::vector<CriterionResult>;

    /// "[PASS]  3  title  (1.2 s / 120 s)  detail"
    auto format_result(const CriterionResult & r) -> std::string;
}

#endif
