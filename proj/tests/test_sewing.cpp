#include "weldlab/fixtures.hpp"
#include "weldlab/sewing.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weldlab;

namespace
{
constexpr int order = 32;
constexpr Real tol = 1e-8;

// Round annulus piece {0: z, inf: 1/(c z)}.
RiggedSphere round_annulus(Complex c)
{
    RiggedSphere S;
    S.punctures = {SpherePoint::finite(0.0), SpherePoint::infinity()};
    S.riggings = {fixtures::polynomial({1.0}), fixtures::polynomial({c})};
    return S;
}
} // namespace

TEST(Sewing, AnnuliComposeModuli)
{
    // 1 < |zeta| < 2 glued to a second copy along |zeta| = 2 gives 1 < |zeta| < 4
    const RiggedSphere A = fixtures::annulus_piece();
    const SewResult s = sew_two(A, 1, A, 0, order, tol);
    ASSERT_EQ(s.sphere.size(), 2u);
    EXPECT_EQ(s.seam_winding, 1);
    EXPECT_LT(invariants_distance(s.invariants, moduli_invariants(round_annulus(0.25))), 1e-8);
}

TEST(Sewing, TwistRotatesTheFarRigging)
{
    const Real th = 0.3;
    RiggedSphere B = fixtures::annulus_piece();
    B.riggings[0] = fixtures::polynomial({std::polar(1.0, th)});
    const SewResult s = sew_two(fixtures::annulus_piece(), 1, B, 0, order, tol);
    EXPECT_LT(invariants_distance(s.invariants, moduli_invariants(round_annulus(0.25 * std::polar(1.0, th)))), 1e-8);
}

TEST(Sewing, SewThenCutRecoversPiece)
{
    const RiggedSphere P = fixtures::probe_left(0.1);
    const SewResult s = sew_two(P, 0, fixtures::probe_right(), 0, order, tol);
    EXPECT_EQ(s.seam_winding, 1);
    EXPECT_EQ(s.sphere.size(), 4u);
    EXPECT_NO_THROW(s.sphere.validate());
    const RiggedSphere back = cut_seam(s, order, tol);
    EXPECT_LT(invariants_distance(moduli_invariants(P), moduli_invariants(back)), 1e-6);
}

TEST(Sewing, SewnCrossRatioIsMobiusInvariant)
{
    const SewResult s = sew_two(fixtures::probe_left(0.1), 0, fixtures::probe_right(), 0, order, tol);
    const Mobius m{Complex(1, 0.5), 0.3, Complex(0.2, -0.1), 1.0};
    const RiggedSphere T = apply_mobius(s.sphere, m, 24);
    ASSERT_EQ(s.invariants.cross_ratios.size(), 1u);
    EXPECT_LT(std::abs(moduli_invariants(T).cross_ratios[0] - s.invariants.cross_ratios[0]), 1e-10);
}

TEST(Sewing, PreimageSolverInvertsExteriorMap)
{
    const ExteriorMap e = exterior_map(fixtures::polynomial({1.0, 0.2}));
    const PreimageSolver inv(e.G);
    for (Complex w : {Complex(1.5, 0.2), Complex(-3.0, 1.0), Complex(0.1, -1.2)})
    {
        const SpherePoint q = inv(SpherePoint::finite(e.G(w)));
        ASSERT_FALSE(q.infinite);
        EXPECT_LT(std::abs(q.z - w), 1e-12);
    }
    EXPECT_TRUE(inv(SpherePoint::infinity()).infinite);
}

TEST(Sewing, ConstantFamilyHasZeroProbeResidual)
{
    const RiggedSphere P = fixtures::probe_left(0.1);
    const ProbeReport r = holomorphy_probe([&P](Complex) { return P; }, 0, fixtures::probe_right(), 0, 0.1, 0.02,
                                           order, tol);
    ASSERT_EQ(r.residuals.size(), 3u);
    for (Real v : r.residuals)
        EXPECT_LT(v, 1e-12);
}

TEST(Sewing, OutOfRangeBoundaryIsRejected)
{
    EXPECT_THROW(sew_two(fixtures::probe_left(0.1), 5, fixtures::probe_right(), 0, order, tol), Error);
}
