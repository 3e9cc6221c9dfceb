#ifndef WELDLAB_SUITE_HPP
#define WELDLAB_SUITE_HPP

#include "weldlab/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weldlab::suite
{
struct CriterionResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    io::Json metrics;
};

struct SuiteReport
{
    std::uint64_t seed = 0;
    std::vector< CriterionResult > criteria;

    bool all_pass() const;
};

/// Runs acceptance criteria 1..10 (or only the listed ids).
SuiteReport run(std::uint64_t seed, const std::vector< int >& only = {});
CriterionResult run_criterion(int id, std::uint64_t seed);

io::Json to_json(const SuiteReport& r);
/// "PASS 3 grunsky-vanishing: ..." per criterion.
std::string format_line(const CriterionResult& c);
} // namespace weldlab::suite

#endif // WELDLAB_SUITE_HPP
