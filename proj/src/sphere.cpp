#include "weldlab/sphere.hpp"

#include "weldlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weldlab
{
namespace
{
constexpr Real pole_rel_tol = 1e-14;

bool is_pole(Complex num, Complex den)
{
    return std::abs(den) <= pole_rel_tol * std::abs(num);
}

VectorXcd padded(const VectorXcd& v, Eigen::Index n)
{
    return series::truncate< Complex >(v, n);
}

/// Point of the closed rigging disk i in its own chart test: finite puncture -> inside f_i(S^1);
/// puncture at infinity -> 1/z inside g_i(S^1).
bool inside_rigging(const VectorXcd& curve, bool at_infinity, const SpherePoint& q)
{
    if (!at_infinity)
        return !q.infinite && winding_number(curve, q.z) != 0;
    if (q.infinite)
        return true;
    if (q.z == Complex(0))
        return false;
    return winding_number(curve, 1.0 / q.z) != 0;
}
} // namespace

const char* to_string(SurfaceModel m)
{
    return m == SurfaceModel::puncture ? "puncture" : "border";
}

Mobius Mobius::zero_infinity(const SpherePoint& p, const SpherePoint& q)
{
    require(!(p == q), "Mobius::zero_infinity: points must differ");
    if (p.infinite)
        return {0.0, 1.0, 1.0, -q.z};
    if (q.infinite)
        return {1.0, -p.z, 0.0, 1.0};
    return {1.0, -p.z, 1.0, -q.z};
}

SpherePoint Mobius::operator()(const SpherePoint& p) const
{
    const Complex num = p.infinite ? a : a * p.z + b;
    const Complex den = p.infinite ? c : c * p.z + d;
    if (den == Complex(0))
        return SpherePoint::infinity();
    return SpherePoint::finite(num / den);
}

Mobius Mobius::after(const Mobius& in) const
{
    return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

SpherePoint Germ::at_zero() const
{
    if (is_pole(num[0], den[0]))
        return SpherePoint::infinity();
    return SpherePoint::finite(num[0] / den[0]);
}

SpherePoint Germ::operator()(Complex z) const
{
    const Complex n = series::eval< Complex >(num, z);
    const Complex d = series::eval< Complex >(den, z);
    if (d == Complex(0))
        return SpherePoint::infinity();
    return SpherePoint::finite(n / d);
}

Germ Germ::transformed(const Mobius& m) const
{
    const Eigen::Index n = std::max(num.size(), den.size());
    const VectorXcd N = padded(num, n);
    const VectorXcd D = padded(den, n);
    return {m.a * N + m.b * D, m.c * N + m.d * D};
}

VectorXcd Germ::local_series(int order) const
{
    require(order >= 1, "Germ::local_series: order must be >= 1");
    const Eigen::Index n = order + 1;
    VectorXcd s = is_pole(num[0], den[0]) ? series::divide< Complex >(den, num, n) : series::divide< Complex >(num, den, n);
    s[0] = 0.0;
    return s;
}

Germ RiggedSphere::germ(std::size_t i) const
{
    require(i < size(), "RiggedSphere::germ: index out of range");
    const VectorXcd& a = riggings[i].coeffs();
    Germ g;
    if (punctures[i].infinite)
    {
        g.num = VectorXcd::Unit(a.size(), 0);
        g.den = a;
        g.den[0] = 0.0;
    }
    else
    {
        g.num = a;
        g.num[0] = punctures[i].z;
        g.den = VectorXcd::Unit(a.size(), 0);
    }
    return g;
}

void RiggedSphere::validate() const
{
    require(!punctures.empty(), "RiggedSphere: at least one puncture is required");
    require(punctures.size() == riggings.size(), "RiggedSphere: punctures and riggings differ in count");
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const PowerSeriesMap& f = riggings[i];
        require(f.kind() == MapKind::disk_plus, "RiggedSphere: riggings must be disk_plus series");
        require(all_finite(f.coeffs()) && std::abs(f.lead()) > 0, "RiggedSphere: rigging has no valid derivative at 0");
        require(punctures[i].infinite || std::isfinite(std::abs(punctures[i].z)), "RiggedSphere: non-finite puncture");
        if (!univalence_check(f).ok)
            fail(ErrorKind::invalid_input, "RiggedSphere: rigging is not univalent on the closed disk");
        for (std::size_t j = 0; j < i; ++j)
            if (punctures[i] == punctures[j])
                fail(ErrorKind::invalid_input, "RiggedSphere: punctures are not distinct");
    }

    std::vector< VectorXcd > curves(n);
    std::vector< std::vector< SpherePoint > > boundary(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const int m = std::max(256, 8 * riggings[i].order());
        const Germ g = germ(i);
        curves[i].resize(m);
        for (int k = 0; k < m; ++k)
        {
            const Complex w = std::polar(1.0, two_pi * k / m);
            curves[i][k] = riggings[i](w) + (punctures[i].infinite ? Complex(0) : punctures[i].z);
            boundary[i].push_back(g(w));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i == j)
                continue;
            bool overlap = inside_rigging(curves[i], punctures[i].infinite, punctures[j]);
            for (const SpherePoint& q : boundary[j])
                overlap = overlap || inside_rigging(curves[i], punctures[i].infinite, q);
            if (overlap)
                fail(ErrorKind::invalid_input, "RiggedSphere: rigging disks overlap");
        }
}

RiggedSphere make_rigged(const std::vector< Germ >& germs, int order, SurfaceModel model)
{
    RiggedSphere S;
    S.model = model;
    for (const Germ& g : germs)
    {
        S.punctures.push_back(g.at_zero());
        S.riggings.push_back(PowerSeriesMap::disk_plus(g.local_series(order)));
    }
    return S;
}

RiggedSphere apply_mobius(const RiggedSphere& S, const Mobius& m, int order)
{
    std::vector< Germ > germs;
    for (std::size_t i = 0; i < S.size(); ++i)
        germs.push_back(S.germ(i).transformed(m));
    return make_rigged(germs, order, S.model);
}

Complex cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3, const SpherePoint& z4)
{
    auto diff = [](const SpherePoint& x, const SpherePoint& y) -> Complex {
        return (x.infinite || y.infinite) ? Complex(1.0) : x.z - y.z;
    };
    const Complex num = diff(z4, z1) * diff(z2, z3);
    const Complex den = diff(z4, z3) * diff(z2, z1);
    if (den == Complex(0))
        return {std::numeric_limits< Real >::infinity(), 0.0};
    return num / den;
}

ModuliInvariants moduli_invariants(const RiggedSphere& S, int K)
{
    require(S.size() >= 1 && S.size() == S.riggings.size(), "moduli_invariants: malformed sphere");
    require(K >= 1, "moduli_invariants: K must be >= 1");
    const SpherePoint p1 = S.punctures[0];
    const Mobius T0 = p1.infinite ? Mobius{0.0, 1.0, 1.0, 0.0} : Mobius{1.0, -p1.z, 0.0, 1.0};
    const VectorXcd b = S.germ(0).transformed(T0).local_series(2);
    const Mobius Sn{1.0, 0.0, b[2] / b[1], b[1]};
    const Mobius T = Sn.after(T0);

    ModuliInvariants out;
    for (std::size_t k = 0; k < S.size(); ++k)
    {
        const Germ g = S.germ(k).transformed(T);
        out.points.push_back(g.at_zero());
        out.jets.push_back(g.local_series(K).segment(1, K));
    }
    for (std::size_t k = 3; k < S.size(); ++k)
        out.cross_ratios.push_back(cross_ratio(S.punctures[0], S.punctures[1], S.punctures[2], S.punctures[k]));
    return out;
}

Real invariants_distance(const ModuliInvariants& a, const ModuliInvariants& b)
{
    constexpr Real inf = std::numeric_limits< Real >::infinity();
    if (a.points.size() != b.points.size() || a.cross_ratios.size() != b.cross_ratios.size())
        return inf;
    Real d = 0.0;
    for (std::size_t k = 0; k < a.cross_ratios.size(); ++k)
        d = std::max(d, std::abs(a.cross_ratios[k] - b.cross_ratios[k]));
    for (std::size_t k = 0; k < a.points.size(); ++k)
    {
        if (a.points[k].infinite != b.points[k].infinite || a.jets[k].size() != b.jets[k].size())
            return inf;
        if (!a.points[k].infinite)
            d = std::max(d, std::abs(a.points[k].z - b.points[k].z));
        d = std::max(d, (a.jets[k] - b.jets[k]).cwiseAbs().maxCoeff());
    }
    return d;
}

RiggedSphere sew_caps(const RiggedSphere& S)
{
    require(S.model == SurfaceModel::border, "sew_caps: expects a border-model sphere");
    S.validate();
    RiggedSphere out = S;
    out.model = SurfaceModel::puncture;
    return out;
}

RiggedSphere cut_caps(const RiggedSphere& S)
{
    require(S.model == SurfaceModel::puncture, "cut_caps: expects a puncture-model sphere");
    S.validate();
    RiggedSphere out = S;
    out.model = SurfaceModel::border;
    return out;
}
} // namespace weldlab
