// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "weldlab/suite.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    std::uint64_t seed = 7;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::string(argv[k]) == "--seed")
            seed = std::strtoull(argv[k + 1], nullptr, 10);

    int failures = 0;
    for (int id = 1; id <= 10; ++id)
    {
        const weldlab::suite::CriterionResult c = weldlab::suite::run_criterion(id, seed);
        std::cout << weldlab::suite::format_line(c) << std::endl;
        failures += c.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criterion(s) FAILED") << std::endl;
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
