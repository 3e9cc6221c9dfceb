#include "weldlab/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weldlab
{
const char* to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::invalid_input:
        return "invalid-input";
    case ErrorKind::resolution:
        return "resolution";
    case ErrorKind::non_convergence:
        return "non-convergence";
    case ErrorKind::near_singularity:
        return "near-singularity";
    case ErrorKind::ambiguous_rank:
        return "ambiguous-rank";
    case ErrorKind::invalid_result:
        return "invalid-result";
    case ErrorKind::internal:
        return "internal";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::invalid_input:
        return 2;
    case ErrorKind::resolution:
    case ErrorKind::non_convergence:
    case ErrorKind::near_singularity:
    case ErrorKind::ambiguous_rank:
        return 3;
    case ErrorKind::invalid_result:
    case ErrorKind::internal:
        return 4;
    }
    return 4;
}

void fail(ErrorKind kind, const std::string& what, double detail)
{
    throw Error(kind, what, detail);
}

int thread_count()
{
    int n = static_cast< int >(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("WELDLAB_THREADS"))
    {
        const int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, cap);
    }
    return n;
}

namespace
{
thread_local bool inside_worker = false;
}

void parallel_for(std::ptrdiff_t n, const std::function< void(std::ptrdiff_t) >& body)
{
    // nested calls run inline on the calling worker
    const std::ptrdiff_t workers = inside_worker ? 1 : std::min< std::ptrdiff_t >(thread_count(), n);
    if (workers <= 1)
    {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector< std::thread > pool;
    pool.reserve(static_cast< std::size_t >(workers));
    const std::ptrdiff_t chunk = (n + workers - 1) / workers;
    for (std::ptrdiff_t w = 0; w < workers; ++w)
    {
        const std::ptrdiff_t lo = w * chunk;
        const std::ptrdiff_t hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &body, &error, &error_mutex] {
            inside_worker = true;
            try
            {
                for (std::ptrdiff_t i = lo; i < hi; ++i)
                    body(i);
            }
            catch (...)
            {
                const std::lock_guard< std::mutex > lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}
} // namespace weldlab
