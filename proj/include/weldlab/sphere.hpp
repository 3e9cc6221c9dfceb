#ifndef WELDLAB_SPHERE_HPP
#define WELDLAB_SPHERE_HPP

#include "weldlab/power_series_map.hpp"

#include <string>
#include <vector>

namespace weldlab
{
/// Point of the Riemann sphere.
struct SpherePoint
{
    bool infinite = false;
    Complex z = 0.0;

    static SpherePoint finite(Complex z) { return {false, z}; }
    static SpherePoint infinity() { return {true, 0.0}; }
    bool operator==(const SpherePoint& o) const { return infinite == o.infinite && (infinite || z == o.z); }
};

/// zeta -> (a zeta + b) / (c zeta + d)
struct Mobius
{
    Complex a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mobius identity() { return {}; }
    /// Sends p to 0 and q to infinity.
    static Mobius zero_infinity(const SpherePoint& p, const SpherePoint& q);
    SpherePoint operator()(const SpherePoint& p) const;
    Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
    Mobius after(const Mobius& inner) const; // this o inner
    Mobius inverse() const { return {d, -b, -c, a}; }
};

/// Germ f = num / den of a rigging at its puncture; Moebius maps act linearly on (num, den).
struct Germ
{
    VectorXcd num;
    VectorXcd den;

    SpherePoint at_zero() const;
    SpherePoint operator()(Complex z) const;
    Germ transformed(const Mobius& m) const;
    /// Taylor series of f - f(0) (finite image) or of 1/f (image at infinity), length order+1, entry 0 zero.
    VectorXcd local_series(int order) const;
};

enum class SurfaceModel
{
    puncture,
    border
};

const char* to_string(SurfaceModel m);

/// Genus-zero sphere with n punctures and riggings f_i: unit disk -> sphere, f_i(0) = p_i.
/// Storage: riggings[i] holds a_1, a_2, ... with f_i(z) = p_i + sum a_k z^k for finite p_i,
/// and f_i(z) = 1 / (sum a_k z^k) when p_i is infinity.
struct RiggedSphere
{
    std::vector< SpherePoint > punctures;
    std::vector< PowerSeriesMap > riggings;
    SurfaceModel model = SurfaceModel::puncture;

    std::size_t size() const { return punctures.size(); }
    Germ germ(std::size_t i) const;
    /// Distinct punctures, univalent riggings, disjoint closed rigging disks.
    void validate() const;
    bool operator==(const RiggedSphere& o) const = default;
};

/// Sphere whose riggings are the given germs, re-expanded to the given order.
RiggedSphere make_rigged(const std::vector< Germ >& germs, int order, SurfaceModel model);

/// Image of every datum of S under m; riggings re-expanded to the given order.
RiggedSphere apply_mobius(const RiggedSphere& S, const Mobius& m, int order = 24);

/// Cross-ratio sending (z1, z2, z3) to (0, 1, inf), evaluated at z4.
Complex cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3, const SpherePoint& z4);

struct ModuliInvariants
{
    std::vector< Complex > cross_ratios;
    /// Per puncture: normalized image point and the first K Taylor coefficients of the normalized rigging
    /// (in the chart 1/zeta when the normalized puncture is infinity).
    std::vector< SpherePoint > points;
    std::vector< VectorXcd > jets;
};

/// Invariants after the normalization T(p_1) = 0, (T o f_1)'(0) = 1, (T o f_1)''(0) = 0.
ModuliInvariants moduli_invariants(const RiggedSphere& S, int K = 4);
/// Largest entrywise difference; infinite if the structures differ.
Real invariants_distance(const ModuliInvariants& a, const ModuliInvariants& b);

/// Border model -> puncture model (the map E). At genus zero only the model tag changes.
RiggedSphere sew_caps(const RiggedSphere& S);
/// Puncture model -> border model (E^{-1}).
RiggedSphere cut_caps(const RiggedSphere& S);
} // namespace weldlab

#endif // WELDLAB_SPHERE_HPP
