#ifndef WELDLAB_SEWING_HPP
#define WELDLAB_SEWING_HPP

#include "weldlab/sphere.hpp"
#include "weldlab/welding.hpp"

#include <functional>
#include <vector>

namespace weldlab
{
struct SewOptions
{
    ExteriorOptions exterior;
    int homeo_modes = 128;     // K of the sewing homeomorphism
    Real sample_radius = 0.6;  // riggings are re-expanded from samples on |z| = r
    int samples = 128;
    int rigging_order = 48;
    int seam_samples = 512;
};

/// Inverse of a univalent map by table lookup followed by Newton.
class PreimageSolver
{
public:
    explicit PreimageSolver(const PowerSeriesMap& f);
    /// w with f(w) = q; infinity maps to infinity for a disk_minus map.
    SpherePoint operator()(const SpherePoint& q) const;

private:
    PowerSeriesMap f_;
    std::vector< Complex > nodes_;
    std::vector< Complex > values_;
};

struct SewResult
{
    RiggedSphere sphere;          // remaining punctures of S1, then of S2
    ModuliInvariants invariants;
    WeldingResult welding;        // F_w on the S2 side, G_w on the S1 side
    ExteriorMap left;             // exterior map of T1 o f_i
    ExteriorMap right;            // exterior map of T2 o f_j
    Mobius left_chart;            // T1: p_i -> 0
    Mobius right_chart;           // T2: p_j -> 0
    CircleHomeo homeo;            // alpha_1^{-1}(-alpha_2(-t))
    CurveSamples seam;            // F_w(unit circle)
    int seam_winding = 0;         // winding of the seam around F_w(0)
    std::size_t left_count = 0;   // punctures of S1 kept in the sewn sphere
    std::size_t left_index = 0;
    std::size_t right_index = 0;
    SurfaceModel left_model = SurfaceModel::puncture;
};

/// Sews boundary i of S1 to boundary j of S2 through z -> 1/z and welding.
SewResult sew_two(const RiggedSphere& S1, std::size_t i, const RiggedSphere& S2, std::size_t j, int N, Real tol,
                  const SewOptions& opts = {});

/// Cuts the sewn sphere along the seam and recovers the S1 piece (up to a global Moebius map).
RiggedSphere cut_seam(const SewResult& sewn, int N, Real tol, const SewOptions& opts = {});

struct ProbeReport
{
    std::vector< Real > steps;
    std::vector< Real > residuals; // max over cross-ratios of |d chi / d conj(t)| estimates
    std::vector< Complex > values; // cross-ratios at the base point
    Real slope = 0.0;              // log-log slope of residual against step
};

using SphereFamily = std::function< RiggedSphere(Complex) >;

/// Finite-difference Cauchy-Riemann residual of the sewn cross-ratios at t0 for steps s, s/2, s/4.
ProbeReport holomorphy_probe(const SphereFamily& family, std::size_t i, const RiggedSphere& S2, std::size_t j,
                             Complex t0, Real step, int N, Real tol, const SewOptions& opts = {});
} // namespace weldlab

#endif // WELDLAB_SEWING_HPP
