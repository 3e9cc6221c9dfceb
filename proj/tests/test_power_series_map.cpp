#include "weldlab/fixtures.hpp"
#include "weldlab/power_series_map.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weldlab;

TEST(PowerSeriesMap, PlusEvaluationAndDerivatives)
{
    const PowerSeriesMap f = fixtures::polynomial({1.0, 0.2, Complex(0, 0.05)});
    const Complex z(0.3, -0.4);
    EXPECT_LT(std::abs(f(z) - (z + 0.2 * z * z + I * 0.05 * z * z * z)), 1e-16);
    EXPECT_LT(std::abs(f.derivative(z) - (1.0 + 0.4 * z + I * 0.15 * z * z)), 1e-16);
    EXPECT_LT(std::abs(f.second_derivative(z) - (0.4 + I * 0.3 * z)), 1e-16);
}

TEST(PowerSeriesMap, MinusEvaluation)
{
    VectorXcd minus(3);
    minus << 0.5, 0.1, Complex(0, -0.02);
    const PowerSeriesMap g = PowerSeriesMap::disk_minus(2.0, minus);
    const Complex w(1.2, 0.7);
    EXPECT_LT(std::abs(g(w) - (2.0 * w + 0.5 + 0.1 / w - I * 0.02 / (w * w))), 1e-15);
    EXPECT_EQ(g.coeff(1), Complex(2.0));
    EXPECT_EQ(g.coeff(0), Complex(0.5));
    EXPECT_EQ(g.coeff(-2), Complex(0, -0.02));
}

TEST(PowerSeriesMap, MobiusFixtureMatchesClosedForm)
{
    const PowerSeriesMap f = fixtures::mobius_map(0.3, 64);
    const Complex z(0.5, 0.2);
    EXPECT_LT(std::abs(f(z) - z / (1.0 - 0.3 * z)), 1e-14);
}

TEST(PowerSeriesMap, ScaledComposesWithDilation)
{
    const PowerSeriesMap f = fixtures::exp_map(0.2, 40);
    const PowerSeriesMap g = f.scaled(0.5);
    const Complex z(0.6, -0.3);
    EXPECT_LT(std::abs(g(z) - f(0.5 * z)), 1e-15);
}

TEST(PowerSeriesMap, RejectsNonzeroConstant)
{
    VectorXcd a(3);
    a << 1.0, 1.0, 0.0;
    EXPECT_THROW(PowerSeriesMap::disk_plus(a), Error);
}

TEST(PowerSeriesMap, StandardMapsAreUnivalent)
{
    for (const auto& nm : fixtures::standard_maps())
        EXPECT_TRUE(univalence_check(nm.map).ok) << nm.name;
}

TEST(PowerSeriesMap, CriticalPointOnCircleFailsUnivalence)
{
    // z + z^2/2 has f'(-1) = 0
    EXPECT_FALSE(univalence_check(fixtures::polynomial({1.0, 0.5})).ok);
    EXPECT_FALSE(univalence_check(fixtures::polynomial({1.0, 1.0})).ok);
    EXPECT_THROW(require_univalent(fixtures::polynomial({1.0, 1.0}), "test"), Error);
    // inside the smaller disk the same map is univalent
    EXPECT_TRUE(univalence_check(fixtures::polynomial({1.0, 1.0}), 0, 0.4).ok);
}

TEST(PowerSeriesMap, PolygonTools)
{
    VectorXcd square(4);
    square << Complex(1, 1), Complex(-1, 1), Complex(-1, -1), Complex(1, -1);
    EXPECT_TRUE(polygon_is_simple(square));
    EXPECT_EQ(winding_number(square, 0.0), 1);
    EXPECT_EQ(winding_number(square, 3.0), 0);
    VectorXcd bow(4);
    bow << Complex(1, 1), Complex(-1, -1), Complex(-1, 1), Complex(1, -1);
    EXPECT_FALSE(polygon_is_simple(bow));
}
