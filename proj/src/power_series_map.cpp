#include "weldlab/power_series_map.hpp"

#include "weldlab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace weldlab
{
const char* to_string(MapKind kind)
{
    return kind == MapKind::disk_plus ? "disk_plus" : "disk_minus";
}

PowerSeriesMap::PowerSeriesMap() : kind_(MapKind::disk_plus), lead_(0.0), coeffs_(VectorXcd::Unit(2, 1)) {}

PowerSeriesMap PowerSeriesMap::disk_plus(const VectorXcd& a)
{
    require(a.size() >= 2, "PowerSeriesMap: need at least the linear coefficient");
    require(a[0] == Complex(0.0), "PowerSeriesMap: disk_plus map must vanish at 0");
    require(std::abs(a[1]) > 0.0, "PowerSeriesMap: a_1 must be nonzero");
    require(all_finite(a), "PowerSeriesMap: non-finite coefficient");
    PowerSeriesMap f;
    f.kind_ = MapKind::disk_plus;
    f.coeffs_ = a;
    return f;
}

PowerSeriesMap PowerSeriesMap::disk_minus(Complex c1, const VectorXcd& minus)
{
    require(std::abs(c1) > 0.0, "PowerSeriesMap: c_1 must be nonzero");
    require(minus.size() >= 1, "PowerSeriesMap: missing constant term");
    require(all_finite(minus) && std::isfinite(std::abs(c1)), "PowerSeriesMap: non-finite coefficient");
    PowerSeriesMap f;
    f.kind_ = MapKind::disk_minus;
    f.lead_ = c1;
    f.coeffs_ = minus;
    return f;
}

Complex PowerSeriesMap::coeff(int k) const
{
    if (kind_ == MapKind::disk_plus)
        return k >= 0 && k <= order() ? coeffs_[k] : Complex(0.0);
    if (k == 1)
        return lead_;
    return k <= 0 && -k <= order() ? coeffs_[-k] : Complex(0.0);
}

Complex PowerSeriesMap::operator()(Complex z) const
{
    if (kind_ == MapKind::disk_plus)
    {
        Complex s = 0.0;
        for (int k = order(); k >= 1; --k)
            s = (s + coeffs_[k]) * z;
        return s;
    }
    const Complex x = 1.0 / z;
    Complex s = 0.0;
    for (int k = order(); k >= 0; --k)
        s = s * x + coeffs_[k];
    return lead_ * z + s;
}

Complex PowerSeriesMap::derivative(Complex z) const
{
    if (kind_ == MapKind::disk_plus)
    {
        Complex s = 0.0;
        for (int k = order(); k >= 1; --k)
            s = s * z + static_cast< Real >(k) * coeffs_[k];
        return s;
    }
    const Complex x = 1.0 / z;
    Complex s = 0.0;
    // d/dw c_{-k} w^{-k} = -k c_{-k} w^{-k-1}
    for (int k = order(); k >= 1; --k)
        s = s * x - static_cast< Real >(k) * coeffs_[k];
    return lead_ + s * x * x;
}

Complex PowerSeriesMap::second_derivative(Complex z) const
{
    if (kind_ == MapKind::disk_plus)
    {
        Complex s = 0.0;
        for (int k = order(); k >= 2; --k)
            s = s * z + static_cast< Real >(k * (k - 1)) * coeffs_[k];
        return s;
    }
    const Complex x = 1.0 / z;
    Complex s = 0.0;
    for (int k = order(); k >= 1; --k)
        s = s * x + static_cast< Real >(k * (k + 1)) * coeffs_[k];
    return s * x * x * x;
}

PowerSeriesMap PowerSeriesMap::scaled(Real r) const
{
    require(kind_ == MapKind::disk_plus, "scaled: only defined for disk_plus maps");
    VectorXcd a = coeffs_;
    Real rk = 1.0;
    for (int k = 0; k <= order(); ++k)
    {
        a[k] *= rk;
        rk *= r;
    }
    return disk_plus(a);
}

namespace
{
Real cross(Complex a, Complex b)
{
    return a.real() * b.imag() - a.imag() * b.real();
}

int sign(Real v)
{
    return (v > 0) - (v < 0);
}

bool on_segment(Complex a, Complex b, Complex p)
{
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_cross(Complex p1, Complex p2, Complex q1, Complex q2)
{
    const int o1 = sign(cross(p2 - p1, q1 - p1));
    const int o2 = sign(cross(p2 - p1, q2 - p1));
    const int o3 = sign(cross(q2 - q1, p1 - q1));
    const int o4 = sign(cross(q2 - q1, p2 - q1));
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && on_segment(p1, p2, q1)) || (o2 == 0 && on_segment(p1, p2, q2)) ||
           (o3 == 0 && on_segment(q1, q2, p1)) || (o4 == 0 && on_segment(q1, q2, p2));
}
} // namespace

bool polygon_is_simple(const VectorXcd& pts)
{
    const auto m = static_cast< int >(pts.size());
    if (m < 3)
        return false;
    // sweep by min-x of each edge
    std::vector< int > order(static_cast< std::size_t >(m));
    std::iota(order.begin(), order.end(), 0);
    auto lo = [&](int e) { return std::min(pts[e].real(), pts[(e + 1) % m].real()); };
    auto hi = [&](int e) { return std::max(pts[e].real(), pts[(e + 1) % m].real()); };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return lo(x) < lo(y); });
    for (std::size_t i = 0; i < order.size(); ++i)
    {
        const int e = order[i];
        const Real ehi = hi(e);
        for (std::size_t j = i + 1; j < order.size() && lo(order[j]) <= ehi; ++j)
        {
            const int f = order[j];
            const int gap = std::abs(e - f);
            if (gap == 1 || gap == m - 1)
                continue;
            const Real ylo1 = std::min(pts[e].imag(), pts[(e + 1) % m].imag());
            const Real yhi1 = std::max(pts[e].imag(), pts[(e + 1) % m].imag());
            const Real ylo2 = std::min(pts[f].imag(), pts[(f + 1) % m].imag());
            const Real yhi2 = std::max(pts[f].imag(), pts[(f + 1) % m].imag());
            if (yhi1 < ylo2 || yhi2 < ylo1)
                continue;
            if (segments_cross(pts[e], pts[(e + 1) % m], pts[f], pts[(f + 1) % m]))
                return false;
        }
    }
    // adjacent edges folding back onto each other
    for (int e = 0; e < m; ++e)
    {
        if (std::abs(pts[(e + 1) % m] - pts[e]) == 0.0)
            return false;
    }
    return true;
}

int winding_number(const VectorXcd& pts, Complex z)
{
    Real total = 0.0;
    const auto m = pts.size();
    for (Eigen::Index j = 0; j < m; ++j)
        total += std::arg((pts[(j + 1) % m] - z) / (pts[j] - z));
    return static_cast< int >(std::lround(total / two_pi));
}

UnivalenceReport univalence_check(const PowerSeriesMap& f, int m, Real r)
{
    if (m <= 0)
        m = std::max(512, 8 * (f.order() + 1));
    VectorXcd pts(m), der(m);
    for (int j = 0; j < m; ++j)
    {
        const Complex z = std::polar(r, two_pi * j / m);
        pts[j] = f(z);
        der[j] = f.derivative(z);
    }
    UnivalenceReport rep;
    rep.simple_boundary = polygon_is_simple(pts);
    rep.min_derivative = der.cwiseAbs().minCoeff();
    const Real scale = std::abs(f.lead());
    rep.derivative_winding = rep.min_derivative > 0 ? winding_number(der, 0.0) : 1;
    rep.ok = rep.simple_boundary && rep.derivative_winding == 0 && rep.min_derivative > 1e-8 * scale &&
             all_finite(pts);
    return rep;
}

void require_univalent(const PowerSeriesMap& f, const std::string& what)
{
    const UnivalenceReport rep = univalence_check(f);
    if (!rep.ok)
        fail(ErrorKind::invalid_result, what + ": univalence check failed (boundary self-intersection, cusp or critical point)",
             rep.min_derivative);
}
} // namespace weldlab
