#ifndef WELDLAB_QUADRATURE_HPP
#define WELDLAB_QUADRATURE_HPP

#include "weldlab/common.hpp"

#include <vector>

namespace weldlab
{
struct GaussRule
{
    VectorXd nodes;
    VectorXd weights;
};

/// Gauss-Legendre rule on [lo, hi] (Golub-Welsch).
GaussRule gauss_legendre(int n, Real lo = -1.0, Real hi = 1.0);

/// Polynomial extrapolation of samples f(x_i) to x = 0 (Neville).
/// Returns the table diagonal, last entry is the best estimate.
std::vector< Complex > neville_to_zero(const std::vector< Real >& x, const std::vector< Complex >& f);
} // namespace weldlab

#endif // WELDLAB_QUADRATURE_HPP
