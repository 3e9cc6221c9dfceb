#include "weldlab/quadrature.hpp"
#include "weldlab/series.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weldlab;
namespace ws = weldlab::series;

namespace
{
VectorXcd geometric(Complex t, int n)
{
    VectorXcd a(n);
    for (int k = 0; k < n; ++k)
        a[k] = std::pow(t, k);
    return a;
}
} // namespace

TEST(Series, InverseOfOneMinusTz)
{
    VectorXcd a = VectorXcd::Zero(2);
    a[0] = 1.0;
    a[1] = -0.3;
    const VectorXcd inv = ws::inverse< Complex >(a, 20);
    EXPECT_LT((inv - geometric(0.3, 20)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Series, LogOfOnePlusTzMatchesMercator)
{
    const Complex t(0.2, 0.1);
    VectorXcd a = VectorXcd::Zero(2);
    a[0] = 1.0;
    a[1] = t;
    const VectorXcd l = ws::log< Complex >(a, 12);
    EXPECT_EQ(l[0], Complex(0.0));
    for (int k = 1; k < 12; ++k)
        EXPECT_LT(std::abs(l[k] - std::pow(-1.0, k + 1) * std::pow(t, k) / Real(k)), 1e-16);
}

TEST(Series, ExpInvertsLog)
{
    VectorXcd a(6);
    a << 2.0, Complex(0.1, 0.3), -0.2, 0.05, Complex(0, 0.01), 0.3;
    const VectorXcd back = ws::exp< Complex >(ws::log< Complex >(a, 16), 16);
    EXPECT_LT((back - ws::truncate< Complex >(a, 16)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Series, PowMatchesBinomialSeries)
{
    VectorXcd a = VectorXcd::Zero(2);
    a[0] = 1.0;
    a[1] = 0.5;
    const VectorXcd s = ws::pow< Complex >(a, 0.5, 8);
    Real binom = 1.0;
    for (int k = 0; k < 8; ++k)
    {
        EXPECT_NEAR(s[k].real(), binom * std::pow(0.5, k), 1e-15);
        binom *= (0.5 - k) / (k + 1);
    }
}

TEST(Series, RevertMobius)
{
    // z/(1 - t z) has inverse z/(1 + t z)
    const Real t = 0.3;
    VectorXcd a = VectorXcd::Zero(24);
    for (int k = 1; k < 24; ++k)
        a[k] = std::pow(t, k - 1);
    const VectorXcd b = ws::revert< Complex >(a, 24);
    for (int k = 1; k < 24; ++k)
        EXPECT_NEAR(std::abs(b[k] - std::pow(-t, k - 1)), 0.0, 1e-14);
}

TEST(Series, ComposeRequiresZeroConstant)
{
    VectorXcd a = VectorXcd::Ones(3), b = VectorXcd::Ones(3);
    EXPECT_THROW(ws::compose< Complex >(a, b, 3), Error);
}

TEST(Series, ZeroConstantRejected)
{
    VectorXcd a = VectorXcd::Zero(3);
    a[1] = 1.0;
    EXPECT_THROW(ws::inverse< Complex >(a, 3), Error);
    EXPECT_THROW(ws::log< Complex >(a, 3), Error);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly)
{
    const GaussRule g = gauss_legendre(6, 0.0, 2.0);
    Real s = 0.0;
    for (Eigen::Index k = 0; k < g.nodes.size(); ++k)
        s += g.weights[k] * std::pow(g.nodes[k], 11);
    EXPECT_NEAR(s, std::pow(2.0, 12) / 12.0, 1e-10);
}

TEST(Quadrature, NevilleRecoversLinearLimit)
{
    std::vector< Real > x = {0.4, 0.2, 0.1};
    std::vector< Complex > f;
    for (Real v : x)
        f.push_back(Complex(3.0 + 2.0 * v, -v));
    const std::vector< Complex > est = neville_to_zero(x, f);
    EXPECT_LT(std::abs(est.back() - Complex(3.0)), 1e-14);
}
