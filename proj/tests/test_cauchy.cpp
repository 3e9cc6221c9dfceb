#include "weldlab/cauchy.hpp"
#include "weldlab/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weldlab;

namespace
{
// Pullback t -> g(F(e^{it})) of a function given on the curve.
template < typename Fn >
BoundaryFunction pullback(const PowerSeriesMap& F, Fn g, int order)
{
    const int m = 4 * order + 64;
    VectorXcd v(m);
    for (int j = 0; j < m; ++j)
        v[j] = g(F(std::polar(1.0, two_pi * j / m)));
    return {FourierFunction::from_samples(v, order)};
}
} // namespace

TEST(Cauchy, UnitCircleMonomials)
{
    const PowerSeriesMap id = PowerSeriesMap::identity_plus();
    const BoundaryFunction one{FourierFunction::monomial(0)};
    const BoundaryFunction inv{FourierFunction::monomial(-1)};
    const Complex zin(0.3, 0.2), zout(1.5, -0.8);
    EXPECT_LT(std::abs(cauchy_transform(id, one, zin) - 1.0), 1e-10);
    EXPECT_LT(std::abs(cauchy_transform(id, one, zout)), 1e-10);
    EXPECT_LT(std::abs(cauchy_transform(id, inv, zin)), 1e-10);
    EXPECT_LT(std::abs(cauchy_transform(id, inv, zout) + 1.0 / zout), 1e-10);
    EXPECT_TRUE(cauchy_transform_report(id, one, zin).inside);
    EXPECT_FALSE(cauchy_transform_report(id, one, zout).inside);
}

TEST(Cauchy, ReproducesHolomorphicDataOnQuasicircle)
{
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.2});
    const BoundaryFunction sq = pullback(F, [](Complex z) { return z * z; }, 16);
    const BoundaryFunction rec = pullback(F, [](Complex z) { return 1.0 / z; }, 64);
    const Complex zin = F(Complex(0.2, 0.3)), zout(2.0, 1.0);
    EXPECT_LT(std::abs(cauchy_transform(F, sq, zin) - zin * zin), 1e-9);
    EXPECT_LT(std::abs(cauchy_transform(F, sq, zout)), 1e-9);
    EXPECT_LT(std::abs(cauchy_transform(F, rec, zin)), 1e-8);
    EXPECT_LT(std::abs(cauchy_transform(F, rec, zout) + 1.0 / zout), 1e-8);
}

TEST(Cauchy, PointOnCurveIsNearSingular)
{
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.2});
    const BoundaryFunction one{FourierFunction::monomial(0)};
    try
    {
        cauchy_transform(F, one, F(Complex(1.0, 0.0)));
        FAIL() << "expected near-singularity";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::near_singularity);
    }
}

TEST(Cauchy, JumpOnCircleSplitsModes)
{
    std::mt19937_64 rng(31);
    const FourierFunction h = fixtures::random_band_limited(rng, 8);
    const JumpResult j = jump_decompose(PowerSeriesMap::identity_plus(), {h}, 8);
    for (int n = 0; n <= 8; ++n)
        EXPECT_LT(std::abs(j.plus.mode(n) - h.coeff(n)), 1e-10);
    for (int n = 1; n <= 8; ++n)
        EXPECT_LT(std::abs(j.minus.mode(-n) + h.coeff(-n)), 1e-10);
}

TEST(Cauchy, JumpOfInteriorDataHasNoMinusPart)
{
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.2});
    const BoundaryFunction sq = pullback(F, [](Complex z) { return z * z; }, 16);
    const JumpResult j = jump_decompose(F, sq, 8);
    // plus part is (z + 0.2 z^2)^2 = z^2 + 0.4 z^3 + 0.04 z^4
    EXPECT_LT(std::abs(j.plus.mode(2) - 1.0), 1e-9);
    EXPECT_LT(std::abs(j.plus.mode(3) - 0.4), 1e-9);
    EXPECT_LT(std::abs(j.plus.mode(4) - 0.04), 1e-9);
    for (int n = 1; n <= 8; ++n)
        EXPECT_LT(std::abs(j.minus.mode(-n)), 1e-9);
}

TEST(Cauchy, JumpReconstructsBoundary)
{
    std::mt19937_64 rng(32);
    const PowerSeriesMap F = fixtures::mobius_map(0.2, 48);
    const FourierFunction h = fixtures::random_band_limited(rng, 6);
    const JumpResult j = jump_decompose(F, {h}, 12);
    const FourierFunction back = reconstruct_boundary(j);
    for (int n = -6; n <= 6; ++n)
        EXPECT_LT(std::abs(back.coeff(n) - h.coeff(n)), 1e-8) << n;
}

TEST(Cauchy, NormComparisonIsTrivialOnCircle)
{
    std::mt19937_64 rng(33);
    std::vector< BoundaryFunction > hs;
    for (int k = 0; k < 3; ++k)
        hs.push_back({fixtures::random_band_limited(rng, 5)});
    const NormComparison c = norm_comparison(PowerSeriesMap::identity_plus(), hs, 5);
    EXPECT_NEAR(c.max_ratio, 1.0, 1e-10);
    const NormComparison q = norm_comparison(fixtures::polynomial({1.0, 0.2}), hs, 8);
    EXPECT_GE(q.max_ratio, 1.0);
    EXPECT_LT(q.max_ratio, 10.0);
}
