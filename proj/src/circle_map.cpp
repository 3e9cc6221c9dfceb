#include "weldlab/circle_map.hpp"

#include "weldlab/fft.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace weldlab
{
namespace
{
int eval_grid(const CircleHomeo& phi, int at_least)
{
    return next_pow2(std::max({at_least, phi.grid(), 8 * (phi.modes() + 1), 64}));
}

VectorXd trim_tail(const VectorXd& v, Real scale)
{
    Eigen::Index last = 0;
    for (Eigen::Index k = 1; k < v.size(); ++k)
    {
        if (std::abs(v[k]) > 1e-17 * scale)
            last = k;
    }
    return v.head(last + 1);
}

CircleHomeo from_modes(const VectorXcd& modes, int K, int grid)
{
    const int m = static_cast< int >(modes.size());
    K = std::min(K, m / 2 - 1);
    VectorXd a = VectorXd::Zero(K + 1);
    VectorXd b = VectorXd::Zero(K + 1);
    a[0] = modes[0].real();
    for (int k = 1; k <= K; ++k)
    {
        const Complex c = mode_at(modes, k);
        a[k] = 2.0 * c.real();
        b[k] = -2.0 * c.imag();
    }
    const Real scale = 1.0 + std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    VectorXd at = trim_tail(a, scale);
    VectorXd bt = trim_tail(b, scale);
    const Eigen::Index n = std::max(at.size(), bt.size());
    return CircleHomeo(a.head(n), b.head(n), grid);
}
} // namespace

CircleHomeo::CircleHomeo(const VectorXd& a, const VectorXd& b, int grid) : a_(a), b_(b), grid_(grid)
{
    require(a.size() >= 1 && a.size() == b.size(), "CircleHomeo: cos/sin coefficient lengths differ");
    require(grid >= 8, "CircleHomeo: grid too small");
    require(a.allFinite() && b.allFinite(), "CircleHomeo: non-finite coefficient");
    b_[0] = 0.0;
}

CircleHomeo CircleHomeo::identity(int grid)
{
    return CircleHomeo(VectorXd::Zero(1), VectorXd::Zero(1), grid);
}

CircleHomeo CircleHomeo::rotation(Real alpha, int grid)
{
    VectorXd a = VectorXd::Zero(1);
    a[0] = alpha;
    return CircleHomeo(a, VectorXd::Zero(1), grid);
}

CircleHomeo CircleHomeo::from_p_samples(const VectorXd& p, int K, int grid)
{
    const VectorXcd modes = fft_modes(p.cast< Complex >());
    CircleHomeo h = from_modes(modes, K, grid);
    h.check_monotone();
    return h;
}

Real CircleHomeo::p(Real t) const
{
    Real s = a_[0];
    for (int k = 1; k <= modes(); ++k)
        s += a_[k] * std::cos(k * t) + b_[k] * std::sin(k * t);
    return s;
}

Real CircleHomeo::dp(Real t) const
{
    Real s = 0.0;
    for (int k = 1; k <= modes(); ++k)
        s += k * (b_[k] * std::cos(k * t) - a_[k] * std::sin(k * t));
    return s;
}

VectorXd CircleHomeo::p_samples(int m) const
{
    if (m <= 2 * modes())
    {
        VectorXd out(m);
        for (int j = 0; j < m; ++j)
            out[j] = p(two_pi * j / m);
        return out;
    }
    VectorXcd modes_v = VectorXcd::Zero(m);
    modes_v[0] = a_[0];
    for (int k = 1; k <= modes(); ++k)
    {
        modes_v[k] = 0.5 * Complex(a_[k], -b_[k]);
        modes_v[m - k] = 0.5 * Complex(a_[k], b_[k]);
    }
    return fft_samples(modes_v).real();
}

VectorXd CircleHomeo::derivative_samples(int m) const
{
    if (m <= 2 * modes())
    {
        VectorXd out(m);
        for (int j = 0; j < m; ++j)
            out[j] = derivative(two_pi * j / m);
        return out;
    }
    VectorXcd modes_v = VectorXcd::Zero(m);
    for (int k = 1; k <= modes(); ++k)
    {
        // d/dt of (a - i b)/2 e^{ikt} is ik (a - i b)/2 e^{ikt}
        modes_v[k] = Complex(0.0, k) * 0.5 * Complex(a_[k], -b_[k]);
        modes_v[m - k] = Complex(0.0, -k) * 0.5 * Complex(a_[k], b_[k]);
    }
    return (fft_samples(modes_v).real().array() + 1.0).matrix();
}

bool CircleHomeo::is_rotation() const
{
    return (a_.tail(a_.size() - 1).array() == 0.0).all() && (b_.array() == 0.0).all();
}

Real CircleHomeo::min_derivative(int m) const
{
    return derivative_samples(m).minCoeff();
}

void CircleHomeo::check_monotone() const
{
    const int m = next_pow2(std::max(grid_, 4 * (modes() + 1)));
    const Real d = min_derivative(m);
    if (!(d > 0.0))
        fail(ErrorKind::resolution, "circle map is not monotone on the evaluation grid; raise grid or truncation", d);
}

CircleHomeo compose(const CircleHomeo& phi, const CircleHomeo& psi)
{
    if (phi.is_rotation() && psi.is_rotation())
        return CircleHomeo::rotation(phi.cos_coeffs()[0] + psi.cos_coeffs()[0], std::max(phi.grid(), psi.grid()));
    const int grid = std::max(phi.grid(), psi.grid());
    const int m = next_pow2(std::max({grid, 16 * (phi.modes() + psi.modes() + 4)}));
    const VectorXd ppsi = psi.p_samples(m);
    VectorXd out(m);
    parallel_for(m, [&](std::ptrdiff_t j) {
        const Real t = two_pi * static_cast< Real >(j) / m;
        out[j] = ppsi[j] + phi.p(t + ppsi[j]);
    });
    CircleHomeo r = from_modes(fft_modes(out.cast< Complex >()), m / 2 - 1, grid);
    r.check_monotone();
    return r;
}

CircleHomeo invert(const CircleHomeo& phi)
{
    phi.check_monotone();
    if (phi.is_rotation())
        return CircleHomeo::rotation(-phi.cos_coeffs()[0], phi.grid());
    const int m = eval_grid(phi, 8 * (phi.modes() + 1));
    const Real bound = phi.cos_coeffs().cwiseAbs().sum() + phi.sin_coeffs().cwiseAbs().sum() + 1e-12;
    VectorXd q(m);
    bool ok = true;
    parallel_for(m, [&](std::ptrdiff_t j) {
        const Real y = two_pi * static_cast< Real >(j) / m;
        Real lo = y - bound;
        Real hi = y + bound;
        Real t = y - phi.p(y);
        bool converged = false;
        for (int it = 0; it < 200; ++it)
        {
            if (!(t > lo && t < hi))
                t = 0.5 * (lo + hi);
            const Real f = phi.lift(t) - y;
            if (f > 0)
                hi = t;
            else
                lo = t;
            const Real step = f / phi.derivative(t);
            t -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(y)) || hi - lo < 1e-15)
            {
                converged = true;
                break;
            }
        }
        if (!converged)
            ok = false;
        q[j] = t - y;
    });
    if (!ok)
        fail(ErrorKind::resolution, "invert: bracketed root find did not converge");
    CircleHomeo r = from_modes(fft_modes(q.cast< Complex >()), m / 2 - 1, phi.grid());
    r.check_monotone();
    return r;
}

Real qs_ratio(const CircleHomeo& phi, const QsGrid& grid)
{
    require(grid.n_alpha >= 1 && grid.n_beta >= 1, "qs_ratio: empty grid");
    const Real beta_min = grid.beta_min > 0 ? grid.beta_min : pi / grid.n_beta;
    require(beta_min < pi, "qs_ratio: beta_min must be below pi");
    std::vector< Real > worst(static_cast< std::size_t >(grid.n_alpha), 1.0);
    bool degenerate = false;
    parallel_for(grid.n_alpha, [&](std::ptrdiff_t i) {
        const Real alpha = two_pi * static_cast< Real >(i) / grid.n_alpha;
        const Real l0 = phi.lift(alpha);
        Real w = 1.0;
        for (int j = 0; j < grid.n_beta; ++j)
        {
            const Real beta = grid.n_beta == 1 ? beta_min : beta_min + (pi - beta_min) * j / (grid.n_beta - 1);
            const Real num = std::abs(std::sin(0.5 * (phi.lift(alpha + beta) - l0)));
            const Real den = std::abs(std::sin(0.5 * (l0 - phi.lift(alpha - beta))));
            if (den < 1e-14 || num < 1e-14)
            {
                degenerate = true;
                continue;
            }
            const Real r = num / den;
            w = std::max({w, r, 1.0 / r});
        }
        worst[static_cast< std::size_t >(i)] = w;
    });
    if (degenerate)
        fail(ErrorKind::resolution, "qs_ratio: degenerate denominator");
    return *std::max_element(worst.begin(), worst.end());
}

FourierFunction compose_function(const FourierFunction& h, const CircleHomeo& phi, int order)
{
    const int m = eval_grid(phi, 8 * std::max(order, h.order()) + 8);
    const VectorXd lift = phi.p_samples(m) + uniform_angles(m);
    VectorXcd vals(m);
    parallel_for(m, [&](std::ptrdiff_t j) { vals[j] = h(lift[j]); });
    return FourierFunction::from_samples(vals, order).zero_mean();
}

OperatorMatrix comp_operator_matrix(const CircleHomeo& phi, int N)
{
    require(N >= 1, "comp_operator_matrix: N must be >= 1");
    OperatorMatrix out;
    out.order = N;
    out.rows = Basis::circle(N);
    out.cols = Basis::circle(N);
    out.entries = MatrixXcd::Zero(2 * N, 2 * N);
    auto index = [N](int n) { return n < 0 ? -n - 1 : N + n - 1; };
    if (phi.is_rotation())
    {
        const Real alpha = phi.cos_coeffs()[0];
        for (int n = -N; n <= N; ++n)
        {
            if (n != 0)
                out.entries(index(n), index(n)) = std::polar(1.0, n * alpha);
        }
        return out;
    }
    const int m = eval_grid(phi, 16 * N + 16 * (phi.modes() + 1));
    const VectorXd lift = phi.p_samples(m) + uniform_angles(m);
    std::vector< int > cols;
    for (int n = -N; n <= N; ++n)
    {
        if (n != 0)
            cols.push_back(n);
    }
    parallel_for(static_cast< std::ptrdiff_t >(cols.size()), [&](std::ptrdiff_t c) {
        const int n = cols[static_cast< std::size_t >(c)];
        VectorXcd vals(m);
        for (int j = 0; j < m; ++j)
            vals[j] = std::polar(1.0, n * lift[j]);
        const VectorXcd modes = fft_modes(vals);
        for (int k = -N; k <= N; ++k)
        {
            if (k != 0)
                out.entries(index(k), index(n)) = std::sqrt(std::abs(Real(k)) / std::abs(Real(n))) * mode_at(modes, k);
        }
    });
    out.validate();
    return out;
}

MatrixXcd pairing_matrix(int N)
{
    MatrixXcd omega = MatrixXcd::Zero(2 * N, 2 * N);
    // (u_m, u_n) = i sign(n) when m = -n
    for (int k = 1; k <= N; ++k)
    {
        omega(k - 1, N + k - 1) = I;        // m = -k, n = +k
        omega(N + k - 1, k - 1) = -I;       // m = +k, n = -k
    }
    return omega;
}

MatrixXcd BlockDecomposition::assemble() const
{
    const int N = order();
    MatrixXcd m(2 * N, 2 * N);
    m.topLeftCorner(N, N) = a;
    m.topRightCorner(N, N) = b;
    m.bottomLeftCorner(N, N) = c();
    m.bottomRightCorner(N, N) = d();
    return m;
}

BlockDecomposition block_decompose(const OperatorMatrix& m)
{
    require(m.rows.kind == "u" && m.cols.kind == "u", "block_decompose: expects circle-basis matrix");
    const auto N = m.order;
    require(m.entries.rows() == 2 * N && m.entries.cols() == 2 * N, "block_decompose: dimension mismatch");
    return BlockDecomposition{m.entries.topLeftCorner(N, N), m.entries.topRightCorner(N, N)};
}

BlockDecomposition compose_blocks(const BlockDecomposition& m1, const BlockDecomposition& m2)
{
    require(m1.order() == m2.order(), "compose_blocks: order mismatch");
    BlockDecomposition r;
    r.a = m1.a * m2.a + m1.b * m2.c();
    r.b = m1.a * m2.b + m1.b * m2.d();
    return r;
}

MatrixXcd gr_from_blocks(const BlockDecomposition& blocks)
{
    // X a = conj(b)  <=>  a^T X^T = conj(b)^T
    Eigen::PartialPivLU< MatrixXcd > lut(blocks.a.transpose());
    return lut.solve(blocks.c().transpose()).transpose();
}

namespace
{
struct BaDerivatives
{
    Real ux, uy, vx, vy;
};

Complex mu_from(const BaDerivatives& d)
{
    const Complex ez_bar = 0.5 * Complex(d.ux - d.vy, d.vx + d.uy);
    const Complex ez = 0.5 * Complex(d.ux + d.vy, d.vx - d.uy);
    return ez_bar / ez;
}

Real sinc_slope(Real t)
{
    // (t cos t - sin t) / t^2
    if (std::abs(t) < 1e-3)
        return -t / 3.0 + t * t * t / 30.0;
    return (t * std::cos(t) - std::sin(t)) / (t * t);
}
} // namespace

Complex beurling_ahlfors_mu(const CircleHomeo& phi, Complex zeta)
{
    const Real r = std::abs(zeta);
    require(r > 1.0, "beurling_ahlfors_mu: point must satisfy |zeta| > 1");
    const Real x = std::arg(zeta);
    const Real y = std::log(r);
    BaDerivatives d{1.0, 0.0, 0.0, 1.0};
    const VectorXd& a = phi.cos_coeffs();
    const VectorXd& b = phi.sin_coeffs();
    for (int k = 1; k <= phi.modes(); ++k)
    {
        const Real ck = a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
        const Real sk = a[k] * std::sin(k * x) - b[k] * std::cos(k * x);
        const Real ky = k * y;
        const Real s2 = std::sin(0.5 * ky);
        d.ux -= sk * std::sin(ky) / y;
        d.uy += ck * k * sinc_slope(ky);
        d.vx -= 4.0 * s2 * s2 * ck / y;
        d.vy -= sk * (2.0 * std::sin(ky) / y - 4.0 * s2 * s2 / (ky * y));
    }
    const Complex mu_e = mu_from(d);
    const Complex mu = -std::conj(mu_e) * zeta / std::conj(zeta);
    if (!(std::abs(mu) < 1.0))
        fail(ErrorKind::resolution, "beurling_ahlfors_mu: |mu| >= 1 at evaluation point", std::abs(mu));
    return mu;
}

Real wp_energy(const CircleHomeo& phi, const WpEnergyGrid& grid)
{
    require(grid.radial >= 2 && grid.angular >= 8, "wp_energy: grid too small");
    require(grid.y_min > 0 && grid.y_max > grid.y_min, "wp_energy: invalid radial range");
    if (phi.is_rotation())
        return 0.0;
    const int K = phi.modes();
    const int nx = next_pow2(std::max(grid.angular, 2 * K + 2));
    const VectorXd& a = phi.cos_coeffs();
    const VectorXd& b = phi.sin_coeffs();
    const Real s0 = std::log(grid.y_min);
    const Real ds = (std::log(grid.y_max) - s0) / grid.radial;
    std::vector< Real > rows(static_cast< std::size_t >(grid.radial), 0.0);
    bool bad = false;
    parallel_for(grid.radial, [&](std::ptrdiff_t iy) {
        const Real y = std::exp(s0 + (static_cast< Real >(iy) + 0.5) * ds);
        // sum_k f_k (a_k - i b_k) e^{ikx} = sum f_k C_k + i sum f_k S_k
        VectorXcd fs = VectorXcd::Zero(nx), fz = VectorXcd::Zero(nx), fg = VectorXcd::Zero(nx),
                  fw = VectorXcd::Zero(nx);
        for (int k = 1; k <= K; ++k)
        {
            const Complex ab(a[k], -b[k]);
            const Real ky = k * y;
            const Real s2 = std::sin(0.5 * ky);
            fs[k] = ab * (std::sin(ky) / y);
            fz[k] = ab * (2.0 * std::sin(ky) / y - 4.0 * s2 * s2 / (ky * y));
            fg[k] = ab * (k * sinc_slope(ky));
            fw[k] = ab * (4.0 * s2 * s2 / y);
        }
        const VectorXcd vs = fft_samples(fs), vz = fft_samples(fz), vg = fft_samples(fg), vw = fft_samples(fw);
        Real acc = 0.0;
        for (int j = 0; j < nx; ++j)
        {
            const BaDerivatives d{1.0 - vs[j].imag(), vg[j].real(), -vw[j].real(), 1.0 - vz[j].imag()};
            const Real m2 = std::norm(mu_from(d));
            if (!(m2 < 1.0))
                bad = true;
            acc += m2;
        }
        const Real sh = std::sinh(y);
        rows[static_cast< std::size_t >(iy)] = acc * (two_pi / nx) * y * ds / (4.0 * sh * sh);
    });
    if (bad)
        fail(ErrorKind::resolution, "wp_energy: |mu| >= 1 on the grid");
    Real e = 0.0;
    for (Real r : rows)
        e += r;
    return e;
}

WpEnergyReport wp_energy_estimate(const CircleHomeo& phi, const WpEnergyGrid& grid)
{
    WpEnergyReport rep;
    rep.coarse_grid = grid;
    rep.fine_grid = grid;
    rep.fine_grid.radial *= 2;
    rep.fine_grid.angular *= 2;
    rep.fine_grid.y_min *= 0.5;
    rep.coarse = wp_energy(phi, rep.coarse_grid);
    rep.fine = wp_energy(phi, rep.fine_grid);
    const Real scale = std::max(std::abs(rep.fine), 1e-300);
    rep.relative_change = rep.fine == rep.coarse ? 0.0 : std::abs(rep.fine - rep.coarse) / scale;
    return rep;
}
} // namespace weldlab
