#include "weldlab/sewing.hpp"

#include "weldlab/fft.hpp"

#include <algorithm>
#include <cmath>

namespace weldlab
{
namespace
{
/// Chart sending p to 0 and, when possible, another puncture to infinity.
Mobius piece_chart(const RiggedSphere& S, std::size_t i)
{
    const SpherePoint& p = S.punctures[i];
    for (std::size_t k = 0; k < S.size(); ++k)
        if (k != i)
            return Mobius::zero_infinity(p, S.punctures[k]);
    return p.infinite ? Mobius{0.0, 1.0, 1.0, 0.0} : Mobius{1.0, -p.z, 0.0, 1.0};
}

/// Taylor series of the map T o f_i (value 0 at 0).
PowerSeriesMap boundary_map(const RiggedSphere& S, std::size_t i, const Mobius& T, int order)
{
    const Germ g = S.germ(i).transformed(T);
    if (g.at_zero().infinite || std::abs(g.at_zero().z) > 1e-12)
        fail(ErrorKind::internal, "sew: chart does not send the puncture to 0");
    return PowerSeriesMap::disk_plus(g.local_series(order));
}

/// Taylor coefficients about 0 of a map known through samples on |z| = r; chart at infinity if needed.
Germ germ_from_samples(const std::vector< SpherePoint >& vals, const SpherePoint& centre, Real r, int order)
{
    const int P = static_cast< int >(vals.size());
    VectorXcd s(P);
    for (int k = 0; k < P; ++k)
    {
        if (centre.infinite)
        {
            if (vals[k].infinite || vals[k].z == Complex(0))
                fail(ErrorKind::resolution, "sew: rigging image passes through the chart pole");
            s[k] = 1.0 / vals[k].z;
        }
        else
        {
            if (vals[k].infinite)
                fail(ErrorKind::resolution, "sew: rigging image passes through infinity");
            s[k] = vals[k].z - centre.z;
        }
    }
    const VectorXcd modes = fft_modes(s);
    VectorXcd c = VectorXcd::Zero(order + 1);
    for (int n = 1; n <= order && n < P / 2; ++n)
        c[n] = mode_at(modes, n) / std::pow(r, n);
    Germ g;
    if (centre.infinite)
    {
        g.num = VectorXcd::Unit(order + 1, 0);
        g.den = c;
    }
    else
    {
        g.num = c;
        g.num[0] = centre.z;
        g.den = VectorXcd::Unit(order + 1, 0);
    }
    return g;
}

/// Rigging of puncture k carried by a pointwise map, re-expanded from samples.
template < typename Map >
Germ transport_germ(const RiggedSphere& S, std::size_t k, const Map& map, const SewOptions& opts)
{
    const Germ g = S.germ(k);
    const SpherePoint centre = map(S.punctures[k]);
    std::vector< SpherePoint > vals(opts.samples);
    for (int m = 0; m < opts.samples; ++m)
        vals[m] = map(g(std::polar(opts.sample_radius, two_pi * m / opts.samples)));
    return germ_from_samples(vals, centre, opts.sample_radius, opts.rigging_order);
}

SpherePoint apply(const PowerSeriesMap& f, const SpherePoint& w)
{
    if (w.infinite)
    {
        if (f.kind() == MapKind::disk_minus)
            return SpherePoint::infinity();
        fail(ErrorKind::internal, "sew: interior map evaluated at infinity");
    }
    return SpherePoint::finite(f(w.z));
}

SpherePoint reciprocal(const SpherePoint& w)
{
    if (w.infinite)
        return SpherePoint::finite(0.0);
    if (w.z == Complex(0))
        return SpherePoint::infinity();
    return SpherePoint::finite(1.0 / w.z);
}

void check_distinct(const RiggedSphere& S)
{
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
        {
            const SpherePoint& p = S.punctures[a];
            const SpherePoint& q = S.punctures[b];
            if (p.infinite == q.infinite && (p.infinite || std::abs(p.z - q.z) <= 1e-10 * (1.0 + std::abs(p.z))))
                fail(ErrorKind::invalid_result, "sew: sewn punctures collide");
        }
}
} // namespace

PreimageSolver::PreimageSolver(const PowerSeriesMap& f) : f_(f)
{
    require(f.kind() == MapKind::disk_minus, "PreimageSolver: expects a disk_minus map");
    const Real radii[] = {1.0, 1.01, 1.03, 1.06, 1.1, 1.15, 1.22, 1.3, 1.4, 1.55, 1.75, 2.0, 2.4, 3.0, 4.0, 6.0, 10.0};
    const int m = 256;
    for (const Real r : radii)
        for (int k = 0; k < m; ++k)
        {
            const Complex w = std::polar(r, two_pi * k / m);
            nodes_.push_back(w);
            values_.push_back(f(w));
        }
}

SpherePoint PreimageSolver::operator()(const SpherePoint& q) const
{
    if (q.infinite)
        return SpherePoint::infinity();
    Complex guess = q.z / f_.lead();
    if (std::abs(guess) < 10.0)
    {
        Real best = std::abs(values_[0] - q.z);
        guess = nodes_[0];
        for (std::size_t k = 1; k < values_.size(); ++k)
        {
            const Real d = std::abs(values_[k] - q.z);
            if (d < best)
            {
                best = d;
                guess = nodes_[k];
            }
        }
    }
    const Complex w = solve_preimage(f_, q.z, guess);
    if (std::abs(w) < 1.0 - 1e-9 || std::abs(f_(w) - q.z) > 1e-9 * (1.0 + std::abs(q.z)))
        fail(ErrorKind::resolution, "PreimageSolver: point is not in the exterior domain", std::abs(w));
    return SpherePoint::finite(w);
}

SewResult sew_two(const RiggedSphere& S1, std::size_t i, const RiggedSphere& S2, std::size_t j, int N, Real tol,
                  const SewOptions& opts)
{
    require(i < S1.size() && j < S2.size(), "sew_two: boundary index out of range");
    require(N >= 1 && tol > 0, "sew_two: invalid order or tolerance");
    require(opts.samples >= 16 && opts.sample_radius > 0 && opts.sample_radius < 1 && opts.rigging_order >= 2,
            "sew_two: invalid rigging resampling options");
    S1.validate();
    S2.validate();

    SewResult out;
    out.left_index = i;
    out.right_index = j;
    out.left_model = S1.model;
    out.left_chart = piece_chart(S1, i);
    out.right_chart = piece_chart(S2, j);
    const int series_order = std::max(opts.exterior.order, 2 * opts.exterior.modes);
    const PowerSeriesMap F1 = boundary_map(S1, i, out.left_chart, series_order);
    const PowerSeriesMap F2 = boundary_map(S2, j, out.right_chart, series_order);
    out.left = exterior_map(F1, opts.exterior);
    out.right = exterior_map(F2, opts.exterior);

    // boundary parameter of piece 2 seen from piece 1 through z -> 1/z
    const CircleHomeo inv1 = invert(out.left.alpha);
    const int m = next_pow2(std::max(8 * opts.homeo_modes, 1024));
    VectorXd p(m);
    for (int k = 0; k < m; ++k)
    {
        const Real t = two_pi * k / m;
        p[k] = inv1.lift(-out.right.alpha.lift(-t)) - t;
    }
    out.homeo = CircleHomeo::from_p_samples(p, opts.homeo_modes, m);
    out.welding = weld(out.homeo, N, tol);

    const PreimageSolver E1(out.left.G);
    const PreimageSolver E2(out.right.G);
    const PowerSeriesMap& Fw = out.welding.F;
    const PowerSeriesMap& Gw = out.welding.G;
    auto map1 = [&](const SpherePoint& q) { return apply(Gw, E1(out.left_chart(q))); };
    auto map2 = [&](const SpherePoint& q) { return apply(Fw, reciprocal(E2(out.right_chart(q)))); };

    std::vector< Germ > germs;
    for (std::size_t k = 0; k < S1.size(); ++k)
        if (k != i)
            germs.push_back(transport_germ(S1, k, map1, opts));
    out.left_count = germs.size();
    for (std::size_t k = 0; k < S2.size(); ++k)
        if (k != j)
            germs.push_back(transport_germ(S2, k, map2, opts));
    require(!germs.empty(), "sew_two: sewing two once-punctured spheres leaves no puncture");
    out.sphere = make_rigged(germs, opts.rigging_order, SurfaceModel::puncture);
    check_distinct(out.sphere);
    out.invariants = moduli_invariants(out.sphere);
    out.seam = quasicircle_samples(Fw, opts.seam_samples);
    out.seam_winding = winding_number(out.seam.points, Fw(0.0));
    return out;
}

RiggedSphere cut_seam(const SewResult& sewn, int N, Real tol, const SewOptions& opts)
{
    require(N >= 1 && tol > 0, "cut_seam: invalid order or tolerance");
    const WeldingResult cap = weld(invert(sewn.left.alpha), N, tol);
    const PreimageSolver Gw_inv(sewn.welding.G);
    auto map = [&](const SpherePoint& Z) { return apply(cap.G, Gw_inv(Z)); };

    std::vector< Germ > germs;
    for (std::size_t k = 0; k < sewn.left_count; ++k)
        germs.push_back(transport_germ(sewn.sphere, k, map, opts));
    Germ seam;
    seam.num = cap.F.coeffs();
    seam.den = VectorXcd::Unit(seam.num.size(), 0);
    germs.insert(germs.begin() + static_cast< std::ptrdiff_t >(sewn.left_index), seam);
    RiggedSphere out = make_rigged(germs, opts.rigging_order, sewn.left_model);
    check_distinct(out);
    return out;
}

ProbeReport holomorphy_probe(const SphereFamily& family, std::size_t i, const RiggedSphere& S2, std::size_t j,
                             Complex t0, Real step, int N, Real tol, const SewOptions& opts)
{
    require(step > 0, "holomorphy_probe: step must be positive");
    const int levels = 3;
    const Complex dirs[] = {1.0, -1.0, I, -I};
    std::vector< std::vector< Complex > > chi(4 * levels + 1);
    parallel_for(4 * levels + 1, [&](std::ptrdiff_t idx) {
        Complex t = t0;
        if (idx > 0)
        {
            const std::ptrdiff_t level = (idx - 1) / 4;
            t += std::ldexp(step, -static_cast< int >(level)) * dirs[(idx - 1) % 4];
        }
        chi[idx] = sew_two(family(t), i, S2, j, N, tol, opts).invariants.cross_ratios;
    });
    require(!chi[0].empty(), "holomorphy_probe: the sewn sphere has no cross-ratio");

    ProbeReport out;
    out.values = chi[0];
    for (int level = 0; level < levels; ++level)
    {
        const Real s = std::ldexp(step, -level);
        const auto& px = chi[1 + 4 * level];
        const auto& mx = chi[2 + 4 * level];
        const auto& py = chi[3 + 4 * level];
        const auto& my = chi[4 + 4 * level];
        Real r = 0.0;
        for (std::size_t k = 0; k < chi[0].size(); ++k)
        {
            const Complex dx = (px[k] - mx[k]) / (2 * s);
            const Complex dy = (py[k] - my[k]) / (2 * s);
            r = std::max(r, std::abs(0.5 * (dx + I * dy)));
        }
        out.steps.push_back(s);
        out.residuals.push_back(r);
    }
    // least-squares slope of log r against log s
    Real mx = 0, my = 0;
    for (int k = 0; k < levels; ++k)
    {
        mx += std::log(out.steps[k]) / levels;
        my += std::log(std::max(out.residuals[k], 1e-300)) / levels;
    }
    Real sxy = 0, sxx = 0;
    for (int k = 0; k < levels; ++k)
    {
        const Real dx = std::log(out.steps[k]) - mx;
        sxy += dx * (std::log(std::max(out.residuals[k], 1e-300)) - my);
        sxx += dx * dx;
    }
    out.slope = sxy / sxx;
    return out;
}
} // namespace weldlab
