#ifndef WELDLAB_FIXTURES_HPP
#define WELDLAB_FIXTURES_HPP

#include "weldlab/circle_map.hpp"
#include "weldlab/power_series_map.hpp"
#include "weldlab/sphere.hpp"

#include <random>
#include <string>
#include <vector>

namespace weldlab::fixtures
{
struct NamedMap
{
    std::string name;
    PowerSeriesMap map;
};

/// Interior map from its Taylor coefficients a_1, a_2, ...
PowerSeriesMap polynomial(const std::vector< Complex >& a);
/// z / (1 - t z) truncated at the given order.
PowerSeriesMap mobius_map(Real t, int order = 64);
/// z exp(t z) truncated at the given order.
PowerSeriesMap exp_map(Real t, int order = 40);

/// z, z/(1 - 0.3z), z + 0.2z^2, z + 0.1z^2 + 0.05z^3, z exp(0.2z).
std::vector< NamedMap > standard_maps();

/// Welding fixture pair F0 = z + 0.1 z^2, G0 = w + 0.05/w.
PowerSeriesMap fixture_interior();
PowerSeriesMap fixture_exterior();

/// Band-limited function with coefficients uniform in the unit square.
FourierFunction random_band_limited(std::mt19937_64& rng, int N);
/// Analytic circle homeomorphism p = sum (a_k cos kt + b_k sin kt) with |a_k|, |b_k| <= amp r^k.
CircleHomeo random_analytic_homeo(std::mt19937_64& rng, int K, Real amp, Real r, int grid = 256);

/// Piecewise Moebius homeomorphism: M_t on the upper half circle, M_{-t} on the lower one,
/// M_t(z) = (z + t)/(1 + t z). Quasisymmetric with corners at +-1; lift fit with K modes.
CircleHomeo corner_homeo(Real t = 0.3, int K = 2048);

/// Sphere {0: z + t z^2, 3: 3 + 0.3 z, inf: 1/(0.2 z)}.
RiggedSphere probe_left(Complex t);
/// Sphere {inf: 1/z, 0: 0.2 z, 0.5: 0.5 + 0.1 z}.
RiggedSphere probe_right();
/// Sphere {0: z, inf: 1/(z/2)}.
RiggedSphere annulus_piece();
} // namespace weldlab::fixtures

#endif // WELDLAB_FIXTURES_HPP
