#include "weldlab/fixtures.hpp"

#include "weldlab/fft.hpp"

#include <cmath>

namespace weldlab::fixtures
{
PowerSeriesMap polynomial(const std::vector< Complex >& a)
{
    VectorXcd c = VectorXcd::Zero(static_cast< Eigen::Index >(a.size()) + 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        c[static_cast< Eigen::Index >(k) + 1] = a[k];
    return PowerSeriesMap::disk_plus(c);
}

PowerSeriesMap mobius_map(Real t, int order)
{
    VectorXcd c = VectorXcd::Zero(order + 1);
    for (int k = 1; k <= order; ++k)
        c[k] = std::pow(t, k - 1);
    return PowerSeriesMap::disk_plus(c);
}

PowerSeriesMap exp_map(Real t, int order)
{
    VectorXcd c = VectorXcd::Zero(order + 1);
    Real term = 1.0;
    for (int k = 1; k <= order; ++k)
    {
        c[k] = term;
        term *= t / k;
    }
    return PowerSeriesMap::disk_plus(c);
}

std::vector< NamedMap > standard_maps()
{
    return {{"z", polynomial({1.0})},
            {"z/(1-0.3z)", mobius_map(0.3, 64)},
            {"z+0.2z^2", polynomial({1.0, 0.2})},
            {"z+0.1z^2+0.05z^3", polynomial({1.0, 0.1, 0.05})},
            {"z*exp(0.2z)", exp_map(0.2, 40)}};
}

PowerSeriesMap fixture_interior()
{
    return polynomial({1.0, 0.1});
}

PowerSeriesMap fixture_exterior()
{
    VectorXcd m = VectorXcd::Zero(2);
    m[1] = 0.05;
    return PowerSeriesMap::disk_minus(1.0, m);
}

FourierFunction random_band_limited(std::mt19937_64& rng, int N)
{
    std::uniform_real_distribution< Real > u(-1.0, 1.0);
    FourierFunction f(N);
    for (int n = -N; n <= N; ++n)
    {
        const Real re = u(rng);
        const Real im = u(rng);
        f.set_coeff(n, {re, im});
    }
    return f;
}

CircleHomeo random_analytic_homeo(std::mt19937_64& rng, int K, Real amp, Real r, int grid)
{
    std::uniform_real_distribution< Real > u(-1.0, 1.0);
    VectorXd a = VectorXd::Zero(K + 1), b = VectorXd::Zero(K + 1);
    a[0] = u(rng);
    Real scale = amp;
    for (int k = 1; k <= K; ++k)
    {
        scale *= r;
        a[k] = scale * u(rng);
        b[k] = scale * u(rng);
    }
    CircleHomeo h(a, b, grid);
    h.check_monotone();
    return h;
}

CircleHomeo corner_homeo(Real t, int K)
{
    require(std::abs(t) < 1 && K >= 1, "corner_homeo: need |t| < 1 and K >= 1");
    const int m = next_pow2(8 * (K + 1));
    VectorXd p(m);
    for (int j = 0; j < m; ++j)
    {
        const Real theta = two_pi * j / m;
        const Complex z = std::polar(1.0, theta);
        const Real s = theta < pi ? t : -t;
        const Complex w = (z + s) / (1.0 + s * z);
        // both halves are preserved, so the increment stays in (-pi, pi)
        p[j] = std::arg(w / z);
    }
    return CircleHomeo::from_p_samples(p, K, m);
}

namespace
{
RiggedSphere sphere(std::vector< SpherePoint > p, std::vector< PowerSeriesMap > f)
{
    RiggedSphere s;
    s.punctures = std::move(p);
    s.riggings = std::move(f);
    s.model = SurfaceModel::puncture;
    return s;
}
} // namespace

RiggedSphere probe_left(Complex t)
{
    return sphere({SpherePoint::finite(0.0), SpherePoint::finite(3.0), SpherePoint::infinity()},
                  {polynomial({1.0, t}), polynomial({0.3}), polynomial({0.2})});
}

RiggedSphere probe_right()
{
    return sphere({SpherePoint::infinity(), SpherePoint::finite(0.0), SpherePoint::finite(0.5)},
                  {polynomial({1.0}), polynomial({0.2}), polynomial({0.1})});
}

RiggedSphere annulus_piece()
{
    return sphere({SpherePoint::finite(0.0), SpherePoint::infinity()}, {polynomial({1.0}), polynomial({0.5})});
}
} // namespace weldlab::fixtures
