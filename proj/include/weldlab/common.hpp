#ifndef WELDLAB_COMMON_HPP
#define WELDLAB_COMMON_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weldlab
{
using Real = double;
using Complex = std::complex< Real >;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr Real pi = std::numbers::pi_v< Real >;
inline constexpr Real two_pi = 2 * std::numbers::pi_v< Real >;
inline constexpr Complex I{0.0, 1.0};

/// Failure categories. Each maps to one CLI exit status.
enum class ErrorKind
{
    invalid_input,    // exit 2
    resolution,       // exit 3: grid/truncation too coarse, extrapolation unstable
    non_convergence,  // exit 3
    near_singularity, // exit 3
    ambiguous_rank,   // exit 3
    invalid_result,   // exit 4: a computed object breaks its own invariant
    internal          // exit 4
};

const char* to_string(ErrorKind kind) noexcept;
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what, double detail = 0.0)
        : std::runtime_error(what), kind_(kind), detail_(detail)
    {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Numeric payload: last residual, condition number, offending singular value...
    double detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    double detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what, double detail = 0.0);

inline void require(bool condition, const std::string& what)
{
    if (!condition)
        fail(ErrorKind::invalid_input, what);
}

/// Number of worker threads for data-parallel loops. Capped by WELDLAB_THREADS.
int thread_count();

/// Runs body(i) for i in [0, n). Each index must write only its own output slot.
void parallel_for(std::ptrdiff_t n, const std::function< void(std::ptrdiff_t) >& body);

inline bool all_finite(const VectorXcd& v)
{
    return v.array().isFinite().all();
}
} // namespace weldlab

#endif // WELDLAB_COMMON_HPP
