#ifndef WELDLAB_WELDING_HPP
#define WELDLAB_WELDING_HPP

#include "weldlab/circle_map.hpp"
#include "weldlab/power_series_map.hpp"

#include <optional>

namespace weldlab
{
struct WeldingResult
{
    PowerSeriesMap F; // disk_plus, F(0) = 0, F'(0) = 1
    PowerSeriesMap G; // disk_minus
    Real residual = 0.0;
    int iterations = 0;
    int grid = 0;
};

struct WeldOptions
{
    int grid = 0; // collocation points; 0 picks max(16N, h.grid, 8(K+1)), at least 256
    int max_iterations = 8;
    /// Optional starting vector (a_2..a_N, c_1, c_0, c_-1..c_-N).
    std::optional< VectorXcd > seed;
};

/// Solve F = G o h on the circle with F(0) = 0, F'(0) = 1, G(inf) = inf.
WeldingResult weld(const CircleHomeo& h, int N, Real tol, const WeldOptions& opts = {});

/// sup_j |F(e^{it_j}) - G(e^{i L_h(t_j)})| on grid points t_j = 2 pi j / grid.
Real welding_residual(const PowerSeriesMap& F, const PowerSeriesMap& G, const CircleHomeo& h, int grid);

/// Newton solve of f(w) = target starting from guess.
Complex solve_preimage(const PowerSeriesMap& f, Complex target, Complex guess, Real tol = 1e-14);

/// t -> arg G^{-1}(F(e^{it})) sampled and fit with K modes.
CircleHomeo homeo_from_pair(const PowerSeriesMap& F, const PowerSeriesMap& G, int K, int grid);

struct ExteriorMap
{
    PowerSeriesMap G;   // conformal map of |w| > 1 onto the exterior of F(unit circle), c_1 > 0
    CircleHomeo alpha;  // G(e^{it}) = F(e^{i alpha(t)})
    Real residual = 0.0; // largest unresolved mode >= 2 of F(e^{i alpha})
    int iterations = 0;
};

struct ExteriorOptions
{
    int modes = 64;  // K of alpha
    int order = 64;  // Laurent order of G
    int grid = 0;    // 0 picks 8K
    Real tol = 1e-13;
    int max_iterations = 60;
};

/// Exterior partner of an interior map: Gauss-Newton on the boundary correspondence alpha.
ExteriorMap exterior_map(const PowerSeriesMap& F, const ExteriorOptions& opts = {});

struct CurveSamples
{
    VectorXcd points;
    VectorXd params;
    PowerSeriesMap source;
    Real radius = 1.0;
    bool closed = true;
    bool simple = false;
};

/// F(r e^{2 pi i k / m}); throws invalid-result when the polygon self-intersects.
CurveSamples quasicircle_samples(const PowerSeriesMap& F, int m, Real r = 1.0);

struct MapDiagnostics
{
    Real a1inf_norm = 0.0;   // sup (1 - |z|^2) |f''/f'|
    Real a12_norm = 0.0;     // sqrt of the area integral of |f''/f'|^2, fine grid
    Real a12_norm_coarse = 0.0;
    Real a12_relative_change = 0.0;
    Complex fprime0 = 0.0;
    VectorXcd phi_series;    // Taylor coefficients of f''/f'
};

struct DiagnosticsGrid
{
    int radial = 48;
    int angular = 128;
};

MapDiagnostics map_diagnostics(const PowerSeriesMap& F, const DiagnosticsGrid& grid = {});
} // namespace weldlab

#endif // WELDLAB_WELDING_HPP
