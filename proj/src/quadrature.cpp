#include "weldlab/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace weldlab
{
GaussRule gauss_legendre(int n, Real lo, Real hi)
{
    require(n >= 1, "gauss_legendre: n must be positive");
    MatrixXd jac = MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k)
    {
        const Real b = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k - 1, k) = b;
        jac(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver< MatrixXd > eig(jac);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real half = 0.5 * (hi - lo);
    for (int k = 0; k < n; ++k)
    {
        const Real v = eig.eigenvectors()(0, k);
        rule.nodes[k] = lo + half * (eig.eigenvalues()[k] + 1.0);
        rule.weights[k] = 2.0 * v * v * half;
    }
    return rule;
}

std::vector< Complex > neville_to_zero(const std::vector< Real >& x, const std::vector< Complex >& f)
{
    const std::size_t n = x.size();
    std::vector< Complex > p(f);
    std::vector< Complex > diag;
    diag.reserve(n);
    diag.push_back(p[0]);
    // p[i] after stage m holds the interpolant through points i-m..i at 0
    for (std::size_t m = 1; m < n; ++m)
    {
        for (std::size_t i = n - 1; i >= m; --i)
        {
            p[i] = (x[i - m] * p[i] - x[i] * p[i - 1]) / (x[i - m] - x[i]);
            if (i == m)
                break;
        }
        diag.push_back(p[m]);
    }
    return diag;
}
} // namespace weldlab
