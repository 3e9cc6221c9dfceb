#include "weldlab/fixtures.hpp"
#include "weldlab/fourier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weldlab;

TEST(Fourier, SamplesRoundTrip)
{
    std::mt19937_64 rng(3);
    const FourierFunction f = fixtures::random_band_limited(rng, 12);
    const FourierFunction g = FourierFunction::from_samples(f.samples(64), 12);
    EXPECT_LT((f.coeffs() - g.coeffs()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Fourier, PointEvaluationMatchesSum)
{
    FourierFunction f(2);
    f.set_coeff(-2, {0.5, 0.0});
    f.set_coeff(1, {0.0, 1.0});
    const Real t = 0.7;
    const Complex expect = 0.5 * std::exp(Complex(0, -2 * t)) + I * std::exp(Complex(0, t));
    EXPECT_LT(std::abs(f(t) - expect), 1e-15);
}

TEST(Fourier, H12NormOfMonomials)
{
    EXPECT_DOUBLE_EQ(h12_norm(FourierFunction::monomial(0, 2.0)), 2.0);
    EXPECT_DOUBLE_EQ(h12_norm(FourierFunction::monomial(3)), std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(h12_norm(FourierFunction::monomial(-4)), 2.0);
}

TEST(Fourier, H12NormRejectsNonFinite)
{
    FourierFunction f(1);
    f.set_coeff(1, {std::nan(""), 0.0});
    EXPECT_THROW(h12_norm(f), Error);
}

TEST(Fourier, ProjectionSplitsAndReassembles)
{
    std::mt19937_64 rng(5);
    const FourierFunction f = fixtures::random_band_limited(rng, 10);
    const DiskSeries p = project(f, Side::plus);
    const DiskSeries m = project(f, Side::minus);
    const FourierFunction back = p.boundary() + m.boundary();
    EXPECT_LT((back.coeffs() - f.coeffs()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(p.mode(0), f.coeff(0));
}

TEST(Fourier, DirichletEnergyMatchesAreaQuadrature)
{
    DiskSeries s(Side::plus, 3);
    s.set_mode(1, {1.0, 0.5});
    s.set_mode(3, {0.0, -0.2});
    // (1/pi) int_D |s'|^2 by polar quadrature
    const int nr = 200, nt = 64;
    Real acc = 0.0;
    for (int i = 0; i < nr; ++i)
    {
        const Real r = (i + 0.5) / nr;
        for (int j = 0; j < nt; ++j)
        {
            const Complex z = std::polar(r, two_pi * j / nt);
            const Complex d = s.mode(1) + 3.0 * s.mode(3) * z * z;
            acc += std::norm(d) * r * (1.0 / nr) * (two_pi / nt);
        }
    }
    EXPECT_NEAR(dirichlet_energy(s), acc / pi, 1e-4);
}

TEST(Fourier, PairingMatchesBoundaryIntegral)
{
    std::mt19937_64 rng(11);
    const FourierFunction g = fixtures::random_band_limited(rng, 6);
    const FourierFunction h = fixtures::random_band_limited(rng, 6);
    // (1/2 pi) int g dh with trapezoid on 64 points
    const int m = 64;
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j)
    {
        const Real t = two_pi * j / m;
        Complex dh = 0.0;
        for (int n = -6; n <= 6; ++n)
            dh += I * Real(n) * h.coeff(n) * std::exp(Complex(0, n * t));
        acc += g(t) * dh / Real(m);
    }
    EXPECT_LT(std::abs(symplectic_pairing(g, h) - acc), 1e-12);
}

TEST(Fourier, PairingIsAntisymmetric)
{
    std::mt19937_64 rng(13);
    const FourierFunction g = fixtures::random_band_limited(rng, 9);
    const FourierFunction h = fixtures::random_band_limited(rng, 9);
    EXPECT_LT(std::abs(symplectic_pairing(g, h) + symplectic_pairing(h, g)), 1e-13);
    EXPECT_LT(std::abs(symplectic_pairing(g, g)), 1e-13);
}

TEST(Fourier, DiskSeriesEvaluation)
{
    DiskSeries m(Side::minus, 2);
    m.set_mode(-1, 2.0);
    m.set_mode(-2, {0.0, 1.0});
    const Complex w(1.5, -0.5);
    EXPECT_LT(std::abs(m(w) - (2.0 / w + I / (w * w))), 1e-15);
}
