#include "weldlab/circle_map.hpp"
#include "weldlab/fixtures.hpp"
#include "weldlab/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weldlab;

namespace
{
int index_of(int n, int N)
{
    return n < 0 ? -n - 1 : N + n - 1;
}

CircleHomeo sample_homeo(unsigned seed)
{
    std::mt19937_64 rng(seed);
    return fixtures::random_analytic_homeo(rng, 6, 0.3, 0.5);
}

// Extension exp(V + iU) with U, V the strip averages of the lift, by Gauss-Legendre.
Complex ba_extension(const CircleHomeo& phi, Complex zeta)
{
    const Real x = std::arg(zeta);
    const Real y = std::log(std::abs(zeta));
    const GaussRule g = gauss_legendre(40, 0.0, y);
    Real u = 0.0, v = 0.0;
    for (Eigen::Index k = 0; k < g.nodes.size(); ++k)
    {
        const Real s = g.nodes[k];
        const Real lp = phi.lift(x + s), lm = phi.lift(x - s);
        u += g.weights[k] * (lp + lm) / (2.0 * y);
        v += g.weights[k] * (lp - lm) / y;
    }
    return std::exp(Complex(v, u));
}
} // namespace

TEST(CircleMap, RotationMatrixIsDiagonal)
{
    const Real alpha = 0.37;
    const int N = 6;
    const OperatorMatrix m = comp_operator_matrix(CircleHomeo::rotation(alpha), N);
    for (int n = -N; n <= N; ++n)
    {
        if (n == 0)
            continue;
        EXPECT_LT(std::abs(m.entries(index_of(n, N), index_of(n, N)) - std::polar(1.0, n * alpha)), 1e-15);
    }
    const MatrixXcd off = m.entries - MatrixXcd(m.entries.diagonal().asDiagonal());
    EXPECT_EQ(off.cwiseAbs().maxCoeff(), 0.0);
}

TEST(CircleMap, MatrixEntriesMatchDirectQuadrature)
{
    const CircleHomeo phi = sample_homeo(2);
    const int N = 5;
    const OperatorMatrix m = comp_operator_matrix(phi, N);
    const int q = 2048;
    for (int k : {-3, -1, 2, 5})
    {
        for (int n : {-2, 1, 4})
        {
            Complex acc = 0.0;
            for (int j = 0; j < q; ++j)
            {
                const Real t = two_pi * j / q;
                acc += std::exp(Complex(0, n * phi.lift(t) - k * t)) / Real(q);
            }
            const Complex expect = std::sqrt(std::abs(Real(k)) / std::abs(Real(n))) * acc;
            EXPECT_LT(std::abs(m.entries(index_of(k, N), index_of(n, N)) - expect), 1e-12);
        }
    }
}

TEST(CircleMap, CompositionPreservesPairing)
{
    const CircleHomeo phi = sample_homeo(4);
    const int N = 40, low = 8;
    const MatrixXcd M = comp_operator_matrix(phi, N).entries;
    const MatrixXcd omega = pairing_matrix(N);
    const MatrixXcd lhs = M.transpose() * omega * M;
    for (int m = -low; m <= low; ++m)
    {
        for (int n = -low; n <= low; ++n)
        {
            if (m == 0 || n == 0)
                continue;
            const int i = index_of(m, N), j = index_of(n, N);
            EXPECT_LT(std::abs(lhs(i, j) - omega(i, j)), 1e-10) << m << " " << n;
        }
    }
}

TEST(CircleMap, ComposeWithInverseIsIdentity)
{
    const CircleHomeo phi = sample_homeo(6);
    const CircleHomeo id = compose(phi, invert(phi));
    for (int j = 0; j < 64; ++j)
    {
        const Real t = two_pi * j / 64;
        EXPECT_NEAR(id.p(t), 0.0, 1e-10);
        EXPECT_NEAR(phi.lift(invert(phi).lift(t)), t, 1e-10);
    }
}

TEST(CircleMap, ComposeMatchesPointwise)
{
    const CircleHomeo phi = sample_homeo(8), psi = sample_homeo(9);
    const CircleHomeo c = compose(phi, psi);
    for (int j = 0; j < 32; ++j)
    {
        const Real t = 0.1 + two_pi * j / 32;
        EXPECT_NEAR(c.lift(t), phi.lift(psi.lift(t)), 1e-10);
    }
}

TEST(CircleMap, ComposeFunctionOfRotation)
{
    const Real alpha = 0.8;
    const FourierFunction h = FourierFunction::monomial(3) + FourierFunction::monomial(-2, 0.5);
    const FourierFunction g = compose_function(h, CircleHomeo::rotation(alpha), 4);
    EXPECT_LT(std::abs(g.coeff(3) - std::polar(1.0, 3 * alpha)), 1e-14);
    EXPECT_LT(std::abs(g.coeff(-2) - 0.5 * std::polar(1.0, -2 * alpha)), 1e-14);
    EXPECT_LT(std::abs(g.coeff(1)), 1e-14);
}

TEST(CircleMap, QuasisymmetryOfRotationIsOne)
{
    EXPECT_NEAR(qs_ratio(CircleHomeo::rotation(1.1)), 1.0, 1e-12);
    EXPECT_GT(qs_ratio(sample_homeo(10)), 1.0);
}

TEST(CircleMap, BlocksRoundTrip)
{
    const OperatorMatrix m = comp_operator_matrix(sample_homeo(12), 10);
    const BlockDecomposition b = block_decompose(m);
    EXPECT_LT((b.assemble() - m.entries).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(CircleMap, BlockProductMatchesComposition)
{
    const CircleHomeo phi = sample_homeo(14), psi = sample_homeo(15);
    const int N = 32;
    const BlockDecomposition p = block_decompose(comp_operator_matrix(psi, N));
    const BlockDecomposition f = block_decompose(comp_operator_matrix(phi, N));
    // h o (phi o psi) = C_{phi o psi} h = C_psi C_phi h
    const BlockDecomposition prod = compose_blocks(p, f);
    const BlockDecomposition direct = block_decompose(comp_operator_matrix(compose(phi, psi), N));
    EXPECT_LT((prod.a - direct.a).topLeftCorner(8, 8).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((prod.b - direct.b).topLeftCorner(8, 8).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(CircleMap, BeurlingAhlforsMatchesFiniteDifferences)
{
    const CircleHomeo phi = sample_homeo(16);
    const Real h = 1e-5;
    for (Complex zeta : {Complex(1.3, 0.4), Complex(-0.9, 1.6), Complex(0.2, -2.5), Complex(-1.02, -0.05)})
    {
        const Complex fx = (ba_extension(phi, zeta + h) - ba_extension(phi, zeta - h)) / (2 * h);
        const Complex fy = (ba_extension(phi, zeta + I * h) - ba_extension(phi, zeta - I * h)) / (2 * h);
        const Complex dz = 0.5 * (fx - I * fy), dzb = 0.5 * (fx + I * fy);
        EXPECT_LT(std::abs(beurling_ahlfors_mu(phi, zeta) - dzb / dz), 1e-6) << zeta;
    }
}

TEST(CircleMap, BeurlingAhlforsRejectsInteriorPoints)
{
    EXPECT_THROW(beurling_ahlfors_mu(sample_homeo(17), Complex(0.5, 0.0)), Error);
}

TEST(CircleMap, EnergyVanishesOnRotationsAndScalesQuadratically)
{
    EXPECT_EQ(wp_energy(CircleHomeo::rotation(0.4), {}), 0.0);
    VectorXd a = VectorXd::Zero(4), b = VectorXd::Zero(4);
    a[2] = 1e-3;
    b[3] = 5e-4;
    const Real e1 = wp_energy(CircleHomeo(a, b, 256), {});
    const Real e2 = wp_energy(CircleHomeo(a / 2, b / 2, 256), {});
    EXPECT_GT(e1, 0.0);
    EXPECT_NEAR(e1 / e2, 4.0, 1e-2);
}

TEST(CircleMap, CornerHomeoIsQuasisymmetric)
{
    const CircleHomeo c = fixtures::corner_homeo(0.3, 512);
    const Real k = qs_ratio(c);
    EXPECT_GT(k, 1.0);
    EXPECT_LT(k, 10.0);
}
