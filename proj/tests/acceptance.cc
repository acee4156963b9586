// Acceptance battery: one line per criterion. Exit status is 0 once every line has been
// printed; --strict makes any failure fatal.
#include <ttm/suite.hh>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

auto main(int argc, char * argv[]) -> int
{
    ttm::SuiteOptions options;
    bool strict = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0)
            strict = true;
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            options.only.push_back(std::atoi(argv[++i]));
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            options.threads = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--base") == 0 && i + 1 < argc)
            options.rigid_base_path = argv[++i];
        else {
            std::cerr << "usage: acceptance [--strict] [--only ID]... [--threads N] [--base FILE]\n";
            return 1;
        }
    }

    auto results = ttm::run_suite(options, [](const ttm::CriterionResult & r) {
        std::cout << ttm::format_result(r) << std::endl;
    });
    int failed = 0;
    for (auto & r : results)
        failed += ! r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
    return strict && failed ? 1 : 0;
}
