#ifndef WELDLAB_CAUCHY_HPP
#define WELDLAB_CAUCHY_HPP

#include "weldlab/fourier.hpp"
#include "weldlab/power_series_map.hpp"

#include <vector>

namespace weldlab
{
/// Function on the curve F(unit circle), stored through its pullback t -> h(F(e^{it})).
struct BoundaryFunction
{
    FourierFunction companion;

    VectorXcd values(int m) const { return companion.samples(m); }
};

struct CauchyOptions
{
    Real delta0 = 1.0 / 16; // first offset of the contour r = 1 -/+ delta
    int levels = 12;        // radii delta0 * 2^{-k}, k < levels
    int quadrature = 0;     // 0 chooses automatically
};

struct CauchyValue
{
    Complex value = 0.0;
    bool inside = false;
    Real extrapolation_error = 0.0;
    std::vector< Complex > estimates; // Neville diagonal
    std::vector< Real > radii;
};

/// Limiting Cauchy integral (1/2 pi i) int_{f(|w| = r)} h(zeta)/(zeta - z) dzeta as r -> 1,
/// with r < 1 for a disk_plus map and r > 1 for a disk_minus map.
CauchyValue cauchy_transform_report(const PowerSeriesMap& f, const BoundaryFunction& h, Complex z,
                                    const CauchyOptions& opts = {});
Complex cauchy_transform(const PowerSeriesMap& f, const BoundaryFunction& h, Complex z, const CauchyOptions& opts = {});

struct JumpOptions
{
    Real condition_target = 100.0; // ring radii chosen so rho^{-N} is about this
    Real max_condition = 1e8;
    int ring_samples = 0;
    int quadrature = 0;
};

/// h = h_plus - h_minus on the curve.
///  plus:  Taylor coefficients of h_plus o F on the unit disk (constant included)
///  minus: coefficients of z^{-n} in the Laurent expansion of h_minus o F near the circle,
///         i.e. h_minus = sum_n minus_n I_F(z^{-n})
///  regular: nonnegative Laurent part of h_minus o F
struct JumpResult
{
    DiskSeries plus;
    DiskSeries minus;
    VectorXcd regular;
    Real condition = 1.0;
    Real rho_plus = 0.0;
    Real rho_minus = 0.0;
    int order = 0;
};

JumpResult jump_decompose(const PowerSeriesMap& F, const BoundaryFunction& h, int N, const JumpOptions& opts = {});

/// Pullback of h_plus - h_minus to the circle from the jump data.
FourierFunction reconstruct_boundary(const JumpResult& j);

/// Pullback C_F I_F q_n of the Faber-type functions, as columns of Fourier modes -N..N.
MatrixXcd faber_boundary_modes(const PowerSeriesMap& F, int N, const JumpOptions& opts = {});

struct NormComparison
{
    std::vector< Real > ratios; // inside norm / outside norm
    Real max_ratio = 1.0;       // max over max(r, 1/r)
    int order = 0;
};

NormComparison norm_comparison(const PowerSeriesMap& F, const std::vector< BoundaryFunction >& hs, int N,
                               const JumpOptions& opts = {});
} // namespace weldlab

#endif // WELDLAB_CAUCHY_HPP
