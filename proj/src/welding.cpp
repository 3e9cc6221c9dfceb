#include "weldlab/welding.hpp"

#include "weldlab/fft.hpp"
#include "weldlab/quadrature.hpp"
#include "weldlab/series.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace weldlab
{
WeldingResult weld(const CircleHomeo& h, int N, Real tol, const WeldOptions& opts)
{
    require(N >= 1, "weld: order N must be >= 1");
    require(tol > 0, "weld: tolerance must be positive");
    h.check_monotone();
    const int M = opts.grid > 0 ? opts.grid : next_pow2(std::max({16 * N, h.grid(), 8 * (h.modes() + 1), 256}));
    require(M >= 2 * N + 1, "weld: grid too small for the requested order");
    const VectorXd theta = uniform_angles(M);
    const VectorXd lift = theta + h.p_samples(M);

    const int n_unknowns = 2 * N + 1;
    MatrixXcd A(M, n_unknowns);
    VectorXcd rhs(M);
    for (int j = 0; j < M; ++j)
    {
        for (int k = 2; k <= N; ++k)
            A(j, k - 2) = std::polar(1.0, k * theta[j]);
        A(j, N - 1) = -std::polar(1.0, lift[j]);
        A(j, N) = -1.0;
        for (int k = 1; k <= N; ++k)
            A(j, N + k) = -std::polar(1.0, -k * lift[j]);
        rhs[j] = -std::polar(1.0, theta[j]);
    }

    VectorXcd x = VectorXcd::Zero(n_unknowns);
    x[N - 1] = 1.0;
    if (opts.seed)
    {
        require(opts.seed->size() == n_unknowns, "weld: seed vector has the wrong length");
        x = *opts.seed;
    }
    const Eigen::ColPivHouseholderQR< MatrixXcd > qr(A);
    int it = 0;
    for (; it < opts.max_iterations;)
    {
        const VectorXcd r = A * x - rhs;
        const VectorXcd step = qr.solve(r);
        x -= step;
        ++it;
        if (step.norm() <= 1e-13 * (1.0 + x.norm()))
            break;
    }

    VectorXcd a = VectorXcd::Zero(N + 1);
    a[1] = 1.0;
    for (int k = 2; k <= N; ++k)
        a[k] = x[k - 2];
    VectorXcd minus(N + 1);
    minus[0] = x[N];
    for (int k = 1; k <= N; ++k)
        minus[k] = x[N + k];
    if (!all_finite(x) || std::abs(x[N - 1]) == 0.0)
        fail(ErrorKind::non_convergence, "weld: solve produced a degenerate G");

    WeldingResult out{PowerSeriesMap::disk_plus(a), PowerSeriesMap::disk_minus(x[N - 1], minus), 0.0, it, M};
    out.residual = welding_residual(out.F, out.G, h, 2 * M);
    if (!(out.residual < tol))
        fail(ErrorKind::non_convergence, "weld: residual above tolerance", out.residual);
    require_univalent(out.F, "weld: F");
    require_univalent(out.G, "weld: G");
    return out;
}

Real welding_residual(const PowerSeriesMap& F, const PowerSeriesMap& G, const CircleHomeo& h, int grid)
{
    require(grid >= 1, "welding_residual: grid must be positive");
    const VectorXd lift = uniform_angles(grid) + h.p_samples(grid);
    Real worst = 0.0;
    for (int j = 0; j < grid; ++j)
    {
        const Real t = two_pi * j / grid;
        worst = std::max(worst, std::abs(F(std::polar(1.0, t)) - G(std::polar(1.0, lift[j]))));
    }
    return worst;
}

Complex solve_preimage(const PowerSeriesMap& f, Complex target, Complex guess, Real tol)
{
    Complex w = guess;
    Real err = std::abs(f(w) - target);
    for (int it = 0; it < 100; ++it)
    {
        const Complex step = (f(w) - target) / f.derivative(w);
        Real t = 1.0;
        Complex trial = w - step;
        Real trial_err = std::abs(f(trial) - target);
        while (!(trial_err <= err) && t > 1e-6)
        {
            t *= 0.5;
            trial = w - t * step;
            trial_err = std::abs(f(trial) - target);
        }
        w = trial;
        err = trial_err;
        if (std::abs(t * step) <= tol * (1.0 + std::abs(w)))
            return w;
    }
    if (err <= 1e3 * tol * (1.0 + std::abs(target)))
        return w;
    fail(ErrorKind::non_convergence, "solve_preimage: Newton did not converge", err);
}

CircleHomeo homeo_from_pair(const PowerSeriesMap& F, const PowerSeriesMap& G, int K, int grid)
{
    require(F.kind() == MapKind::disk_plus && G.kind() == MapKind::disk_minus, "homeo_from_pair: expects (disk_plus, disk_minus)");
    const int m = next_pow2(std::max({grid, 4 * K + 4, 64}));
    VectorXd p(m);
    Complex w = F(1.0) / G.lead();
    Real prev = 0.0;
    for (int j = 0; j < m; ++j)
    {
        const Real t = two_pi * j / m;
        w = solve_preimage(G, F(std::polar(1.0, t)), w);
        Real v = std::arg(w * std::polar(1.0, -t));
        if (j > 0)
            v += two_pi * std::round((prev - v) / two_pi);
        p[j] = v;
        prev = v;
    }
    return CircleHomeo::from_p_samples(p, K, grid);
}

ExteriorMap exterior_map(const PowerSeriesMap& F, const ExteriorOptions& opts)
{
    require(F.kind() == MapKind::disk_plus, "exterior_map: expects a disk_plus map");
    require(opts.modes >= 1 && opts.order >= 0, "exterior_map: invalid truncation");
    require_univalent(F, "exterior_map: F");
    const int K = opts.modes;
    const int M = opts.grid > 0 ? opts.grid : next_pow2(std::max({8 * K, 8 * (F.order() + 1), 256, 2 * opts.order + 2}));
    require(M >= 4 * K + 4, "exterior_map: grid too small for the requested modes");
    const int n = 2 * K + 1;
    const VectorXd theta = uniform_angles(M);

    auto alpha_samples = [&](const VectorXd& x) -> VectorXd {
        VectorXd a = x.head(K + 1);
        VectorXd b = VectorXd::Zero(K + 1);
        b.tail(K) = x.tail(K);
        return CircleHomeo(a, b, M).p_samples(M) + theta;
    };
    auto residual_of = [&](const VectorXcd& modes) {
        VectorXd r(n);
        for (int k = 2; k <= K + 1; ++k)
        {
            const Complex c = mode_at(modes, k);
            r[2 * (k - 2)] = c.real();
            r[2 * (k - 2) + 1] = c.imag();
        }
        r[n - 1] = mode_at(modes, 1).imag();
        return r;
    };
    auto boundary_modes = [&](const VectorXd& alpha) {
        VectorXcd vals(M);
        for (int j = 0; j < M; ++j)
            vals[j] = F(std::polar(1.0, alpha[j]));
        return fft_modes(vals);
    };

    VectorXd x = VectorXd::Zero(n);
    VectorXd alpha = alpha_samples(x);
    VectorXcd modes = boundary_modes(alpha);
    VectorXd res = residual_of(modes);
    const Real target = opts.tol * std::abs(F.lead());
    int it = 0;
    for (; it < opts.max_iterations && res.norm() > target; ++it)
    {
        VectorXcd dF(M);
        for (int j = 0; j < M; ++j)
        {
            const Complex z = std::polar(1.0, alpha[j]);
            dF[j] = F.derivative(z) * I * z;
        }
        MatrixXd J(n, n);
        parallel_for(n, [&](std::ptrdiff_t i) {
            VectorXcd col(M);
            for (int j = 0; j < M; ++j)
            {
                Real basis = 1.0;
                if (i >= 1 && i <= K)
                    basis = std::cos(static_cast< Real >(i) * theta[j]);
                else if (i > K)
                    basis = std::sin(static_cast< Real >(i - K) * theta[j]);
                col[j] = dF[j] * basis;
            }
            J.col(i) = residual_of(fft_modes(col));
        });
        const VectorXd step = J.colPivHouseholderQr().solve(-res);
        Real t = 1.0;
        for (int ls = 0; ls < 30; ++ls, t *= 0.5)
        {
            const VectorXd xt = x + t * step;
            const VectorXd at = alpha_samples(xt);
            const VectorXcd mt = boundary_modes(at);
            const VectorXd rt = residual_of(mt);
            if (rt.norm() < res.norm())
            {
                x = xt;
                alpha = at;
                modes = mt;
                res = rt;
                break;
            }
        }
        if (t < 1e-8)
            break;
    }
    Real tail = 0.0;
    for (int k = 2; k < M / 2; ++k)
        tail = std::max(tail, std::abs(mode_at(modes, k)));
    if (!(res.norm() <= std::max(target, 10.0 * tail)) || !all_finite(modes))
        fail(ErrorKind::non_convergence, "exterior_map: Gauss-Newton did not converge", res.norm());

    VectorXd a = x.head(K + 1);
    VectorXd b = VectorXd::Zero(K + 1);
    b.tail(K) = x.tail(K);
    CircleHomeo alpha_map(a, b, M);
    alpha_map.check_monotone();
    const int order = std::min(opts.order, M / 2 - 1);
    VectorXcd minus(order + 1);
    for (int k = 0; k <= order; ++k)
        minus[k] = mode_at(modes, -k);
    ExteriorMap out{PowerSeriesMap::disk_minus(mode_at(modes, 1), minus), alpha_map, tail, it};
    return out;
}

CurveSamples quasicircle_samples(const PowerSeriesMap& F, int m, Real r)
{
    require(m >= 3, "quasicircle_samples: need at least 3 points");
    CurveSamples c;
    c.points.resize(m);
    c.params = uniform_angles(m);
    for (int j = 0; j < m; ++j)
        c.points[j] = F(std::polar(r, c.params[j]));
    c.source = F;
    c.radius = r;
    c.closed = true;
    const UnivalenceReport rep = univalence_check(F, std::max(m, 8 * (F.order() + 1)), r);
    c.simple = polygon_is_simple(c.points) && rep.ok;
    if (!c.simple)
        fail(ErrorKind::invalid_result, "quasicircle_samples: boundary curve is not simple");
    return c;
}

namespace
{
Real a12_squared(const PowerSeriesMap& F, int radial, int angular)
{
    const GaussRule rule = gauss_legendre(radial, 0.0, 1.0);
    Real total = 0.0;
    for (int i = 0; i < radial; ++i)
    {
        const Real r = rule.nodes[i];
        Real row = 0.0;
        for (int j = 0; j < angular; ++j)
        {
            const Complex z = std::polar(r, two_pi * j / angular);
            row += std::norm(F.second_derivative(z) / F.derivative(z));
        }
        total += rule.weights[i] * r * row * (two_pi / angular);
    }
    return total;
}
} // namespace

MapDiagnostics map_diagnostics(const PowerSeriesMap& F, const DiagnosticsGrid& grid)
{
    require(F.kind() == MapKind::disk_plus, "map_diagnostics: expects a disk_plus map");
    if (std::abs(F.lead()) < 1e-14)
        fail(ErrorKind::invalid_input, "map_diagnostics: a_1 vanishes, f''/f' undefined");
    MapDiagnostics d;
    d.fprime0 = F.lead();
    const int L = std::max(4 * F.order(), 128);
    series::Series< Complex > fp(F.order());
    for (int k = 0; k < F.order(); ++k)
        fp[k] = static_cast< Real >(k + 1) * F.coeffs()[k + 1];
    d.phi_series = series::divide(series::derivative(fp), fp, L);

    const int nr = 4 * grid.radial;
    const int nt = 2 * grid.angular;
    for (int i = 0; i < nr; ++i)
    {
        const Real r = static_cast< Real >(i) / nr;
        for (int j = 0; j < nt; ++j)
        {
            const Complex z = std::polar(r, two_pi * j / nt);
            d.a1inf_norm = std::max(d.a1inf_norm, (1 - r * r) * std::abs(F.second_derivative(z) / F.derivative(z)));
        }
    }
    d.a12_norm_coarse = std::sqrt(a12_squared(F, grid.radial, grid.angular));
    d.a12_norm = std::sqrt(a12_squared(F, 2 * grid.radial, 2 * grid.angular));
    d.a12_relative_change = d.a12_norm > 0 ? std::abs(d.a12_norm - d.a12_norm_coarse) / d.a12_norm : 0.0;
    if (!std::isfinite(d.a12_norm) || !std::isfinite(d.a1inf_norm))
        fail(ErrorKind::resolution, "map_diagnostics: non-finite norm estimate (critical point on the grid?)");
    return d;
}
} // namespace weldlab
