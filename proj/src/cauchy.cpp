#include "weldlab/cauchy.hpp"

#include "weldlab/fft.hpp"
#include "weldlab/quadrature.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace weldlab
{
namespace
{
VectorXcd contour_points(const PowerSeriesMap& f, Real r, int m)
{
    VectorXcd pts(m);
    for (int j = 0; j < m; ++j)
        pts[j] = f(std::polar(r, two_pi * j / m));
    return pts;
}

/// Distance from z to the polygon nodes, and spacing of the polygon near the closest node.
std::pair< Real, Real > distance_and_spacing(const VectorXcd& pts, Complex z)
{
    const auto m = pts.size();
    Eigen::Index best = 0;
    Real d = std::abs(pts[0] - z);
    for (Eigen::Index j = 1; j < m; ++j)
    {
        const Real dj = std::abs(pts[j] - z);
        if (dj < d)
        {
            d = dj;
            best = j;
        }
    }
    const Real h = std::max(std::abs(pts[(best + 1) % m] - pts[best]), std::abs(pts[best] - pts[(best + m - 1) % m]));
    return {d, h};
}

Complex contour_integral(const PowerSeriesMap& f, const FourierFunction& h, Real r, Complex z, int m)
{
    const Real rho = std::min(r, 1.0 / r);
    FourierFunction hr(h);
    for (int n = -h.order(); n <= h.order(); ++n)
        hr.set_coeff(n, h.coeff(n) * std::pow(rho, std::abs(n)));
    const VectorXcd vals = hr.samples(m);
    Complex s = 0.0;
    for (int j = 0; j < m; ++j)
    {
        const Complex w = std::polar(r, two_pi * j / m);
        s += vals[j] * f.derivative(w) * w / (f(w) - z);
    }
    return s / static_cast< Real >(m);
}

/// (1/2 pi i) int over F(unit circle) of h(zeta)/(zeta - z), trapezoid with q nodes.
VectorXcd on_curve_transform(const PowerSeriesMap& F, const FourierFunction& H, const VectorXcd& targets, int q)
{
    const VectorXcd vals = H.samples(q);
    VectorXcd nodes(q), weights(q);
    for (int j = 0; j < q; ++j)
    {
        const Complex w = std::polar(1.0, two_pi * j / q);
        nodes[j] = F(w);
        weights[j] = vals[j] * F.derivative(w) * w / static_cast< Real >(q);
    }
    VectorXcd out(targets.size());
    parallel_for(targets.size(), [&](std::ptrdiff_t i) {
        Complex s = 0.0;
        for (int j = 0; j < q; ++j)
            s += weights[j] / (nodes[j] - targets[i]);
        out[i] = s;
    });
    return out;
}
} // namespace

CauchyValue cauchy_transform_report(const PowerSeriesMap& f, const BoundaryFunction& h, Complex z,
                                    const CauchyOptions& opts)
{
    require(opts.levels >= 2 && opts.delta0 > 0 && opts.delta0 < 0.5, "cauchy_transform: invalid radii");
    const int hn = h.companion.order();
    int m = opts.quadrature > 0 ? opts.quadrature : next_pow2(std::max({512, 16 * hn, 16 * f.order()}));
    const VectorXcd gamma = contour_points(f, 1.0, std::max(m, 1024));
    const auto [dist, spacing] = distance_and_spacing(gamma, z);
    if (dist < 4.0 * spacing)
        fail(ErrorKind::near_singularity, "cauchy_transform: point is too close to the curve", dist);
    const int wind = winding_number(gamma, z);
    CauchyValue out;
    out.inside = wind != 0;

    const Real sgn = f.kind() == MapKind::disk_plus ? -1.0 : 1.0;
    Real delta0 = opts.delta0;
    for (int tries = 0;; ++tries)
    {
        const VectorXcd c = contour_points(f, 1.0 + sgn * delta0, std::max(m, 1024));
        const auto [dc, hc] = distance_and_spacing(c, z);
        if (winding_number(c, z) == wind && dc >= 4.0 * hc)
            break;
        if (tries > 40)
            fail(ErrorKind::near_singularity, "cauchy_transform: no admissible contour offset");
        delta0 *= 0.5;
    }
    // resolve the contour near z: nodes must be fine relative to the distance
    const Real length = [&] {
        Real l = 0.0;
        for (Eigen::Index j = 0; j < gamma.size(); ++j)
            l += std::abs(gamma[(j + 1) % gamma.size()] - gamma[j]);
        return l;
    }();
    if (opts.quadrature <= 0)
        m = next_pow2(std::max(m, static_cast< int >(std::ceil(8.0 * length / std::max(dist, 1e-3)))));

    std::vector< Complex > vals;
    for (int k = 0; k < opts.levels; ++k)
    {
        const Real d = delta0 * std::ldexp(1.0, -k);
        out.radii.push_back(d);
        vals.push_back(contour_integral(f, h.companion, 1.0 + sgn * d, z, m));
    }
    out.estimates = neville_to_zero(out.radii, vals);
    out.value = out.estimates.back();
    const std::size_t n = out.estimates.size();
    out.extrapolation_error = std::abs(out.estimates[n - 1] - out.estimates[n - 2]);
    const Real scale = 1.0 + std::abs(out.value);
    const Real prev_err = std::abs(out.estimates[n - 2] - out.estimates[n - 3]);
    if (out.extrapolation_error > 1e-6 * scale && out.extrapolation_error > prev_err)
        fail(ErrorKind::resolution, "cauchy_transform: extrapolation is not settling", out.extrapolation_error);
    return out;
}

Complex cauchy_transform(const PowerSeriesMap& f, const BoundaryFunction& h, Complex z, const CauchyOptions& opts)
{
    return cauchy_transform_report(f, h, z, opts).value;
}

JumpResult jump_decompose(const PowerSeriesMap& F, const BoundaryFunction& h, int N, const JumpOptions& opts)
{
    require(F.kind() == MapKind::disk_plus, "jump_decompose: expects a disk_plus map");
    require(N >= 1, "jump_decompose: N must be >= 1");
    require(opts.condition_target > 1, "jump_decompose: condition target must exceed 1");
    const int hn = h.companion.order();
    Real rho_plus = std::clamp(std::pow(opts.condition_target, -1.0 / N), 0.5, 0.9);
    Real rho_minus = std::clamp(std::pow(opts.condition_target, 1.0 / N), 1.05, 1.5);
    for (int tries = 0; !univalence_check(F.scaled(rho_minus)).ok; ++tries)
    {
        if (tries > 20)
            fail(ErrorKind::resolution, "jump_decompose: map is not univalent on any exterior ring");
        rho_minus = 1.0 + 0.5 * (rho_minus - 1.0);
    }
    JumpResult out;
    out.order = N;
    out.rho_plus = rho_plus;
    out.rho_minus = rho_minus;
    out.condition = std::max(std::pow(rho_plus, -N), std::pow(rho_minus, N));
    if (out.condition > opts.max_condition)
        fail(ErrorKind::resolution, "jump_decompose: ring fit is ill-conditioned", out.condition);

    const int P = opts.ring_samples > 0 ? opts.ring_samples : next_pow2(std::max({8 * N, 128, 4 * hn + 4}));
    const Real gap = std::min(1.0 - rho_plus, std::log(rho_minus));
    const int Q = opts.quadrature > 0
                      ? opts.quadrature
                      : next_pow2(std::max({1024, 32 * std::max(N, hn), 8 * F.order(), static_cast< int >(40.0 / gap)}));

    VectorXcd targets(2 * P);
    for (int j = 0; j < P; ++j)
    {
        targets[j] = F(std::polar(rho_plus, two_pi * j / P));
        targets[P + j] = F(std::polar(rho_minus, two_pi * j / P));
    }
    const VectorXcd J = on_curve_transform(F, h.companion, targets, Q);
    const VectorXcd cp = fft_modes(J.head(P));
    const VectorXcd cm = fft_modes(J.tail(P));

    out.plus = DiskSeries(Side::plus, N);
    out.minus = DiskSeries(Side::minus, N);
    out.regular = VectorXcd::Zero(N + 1);
    for (int k = 0; k <= N; ++k)
    {
        out.plus.set_mode(k, mode_at(cp, k) * std::pow(rho_plus, -k));
        out.regular[k] = mode_at(cm, k) * std::pow(rho_minus, -k);
        if (k >= 1)
            out.minus.set_mode(-k, mode_at(cm, -k) * std::pow(rho_minus, k));
    }
    return out;
}

FourierFunction reconstruct_boundary(const JumpResult& j)
{
    FourierFunction f(j.order);
    for (int k = 0; k <= j.order; ++k)
        f.set_coeff(k, j.plus.mode(k) - j.regular[k]);
    for (int k = 1; k <= j.order; ++k)
        f.set_coeff(-k, -j.minus.mode(-k));
    return f;
}

MatrixXcd faber_boundary_modes(const PowerSeriesMap& F, int N, const JumpOptions& opts)
{
    MatrixXcd E = MatrixXcd::Zero(2 * N + 1, N);
    parallel_for(N, [&](std::ptrdiff_t c) {
        const int n = static_cast< int >(c) + 1;
        const BoundaryFunction q{FourierFunction::monomial(-n, 1.0 / std::sqrt(Real(n)))};
        const JumpResult j = jump_decompose(F, q, N, opts);
        // C_F I_F q_n = -(h_minus o F)
        for (int k = 0; k <= N; ++k)
            E(N + k, c) = -j.regular[k];
        for (int k = 1; k <= N; ++k)
            E(N - k, c) = -j.minus.mode(-k);
    });
    return E;
}

NormComparison norm_comparison(const PowerSeriesMap& F, const std::vector< BoundaryFunction >& hs, int N,
                               const JumpOptions& opts)
{
    require(!hs.empty(), "norm_comparison: empty function set");
    const MatrixXcd E = faber_boundary_modes(F, N, opts);
    const int D = 2 * N + 1;
    MatrixXcd Ec(D, N); // modes of conj(e_n)
    for (int k = -N; k <= N; ++k)
        Ec.row(N + k) = E.row(N - k).conjugate();
    MatrixXcd A(D, D);
    A.col(0) = VectorXcd::Unit(D, N);
    A.middleCols(1, N) = E;
    A.middleCols(N + 1, N) = Ec;
    const Eigen::FullPivLU< MatrixXcd > lu(A);
    auto energy = [N](const VectorXcd& v) {
        Real e = 0.0;
        for (int k = -N; k <= N; ++k)
            e -= k * std::norm(v[N + k]);
        return e;
    };

    NormComparison out;
    out.order = N;
    out.max_ratio = 1.0;
    for (const BoundaryFunction& h : hs)
    {
        VectorXcd rhs(D);
        for (int k = -N; k <= N; ++k)
            rhs[N + k] = h.companion.coeff(k);
        const VectorXcd x = lu.solve(rhs);
        const Complex kappa = x[0];
        const VectorXcd v = E * x.segment(1, N);
        const VectorXcd w = E * x.segment(N + 1, N).conjugate();
        const Real outside = std::norm(kappa) + energy(v) + energy(w);
        Real inside = std::norm(h.companion.coeff(0));
        for (int k = 1; k <= h.companion.order(); ++k)
            inside += k * (std::norm(h.companion.coeff(k)) + std::norm(h.companion.coeff(-k)));
        Real r = 1.0;
        if (outside > 1e-300 || inside > 1e-300)
        {
            if (!(outside > 0))
                fail(ErrorKind::resolution, "norm_comparison: exterior energy is not positive", outside);
            r = std::sqrt(inside / outside);
        }
        out.ratios.push_back(r);
        out.max_ratio = std::max(out.max_ratio, std::max(r, 1.0 / r));
    }
    return out;
}
} // namespace weldlab
