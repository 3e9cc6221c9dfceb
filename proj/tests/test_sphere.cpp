#include "weldlab/fixtures.hpp"
#include "weldlab/sphere.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weldlab;

namespace
{
Mobius random_mobius(std::mt19937_64& rng)
{
    std::uniform_real_distribution< Real > u(-1.0, 1.0);
    Mobius m{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    return m;
}
} // namespace

TEST(Sphere, MobiusActionOnPoints)
{
    const Mobius m{1.0, 2.0, 1.0, -1.0};
    EXPECT_TRUE(m(SpherePoint::infinity()) == SpherePoint::finite(1.0));
    EXPECT_TRUE(m(SpherePoint::finite(1.0)).infinite);
    EXPECT_LT(std::abs(m(SpherePoint::finite(3.0)).z - 2.5), 1e-15);
    const Mobius zi = Mobius::zero_infinity(SpherePoint::finite(2.0), SpherePoint::finite(-1.0));
    EXPECT_LT(std::abs(zi(SpherePoint::finite(2.0)).z), 1e-15);
    EXPECT_TRUE(zi(SpherePoint::finite(-1.0)).infinite);
    EXPECT_THROW(Mobius::zero_infinity(SpherePoint::infinity(), SpherePoint::infinity()), Error);
}

TEST(Sphere, MobiusCompositionAndInverse)
{
    std::mt19937_64 rng(51);
    const Mobius a = random_mobius(rng), b = random_mobius(rng);
    const Complex z(0.3, -0.2);
    EXPECT_LT(std::abs(a.after(b)(z) - a(b(z))), 1e-12);
    EXPECT_LT(std::abs(a.inverse()(a(z)) - z), 1e-12);
}

TEST(Sphere, CrossRatioInvariance)
{
    std::mt19937_64 rng(52);
    const std::vector< SpherePoint > p = {SpherePoint::finite(0.1), SpherePoint::finite(Complex(1, 1)),
                                          SpherePoint::finite(-2.0), SpherePoint::finite(Complex(0.5, -3))};
    const Complex cr = cross_ratio(p[0], p[1], p[2], p[3]);
    for (int k = 0; k < 5; ++k)
    {
        const Mobius m = random_mobius(rng);
        EXPECT_LT(std::abs(cross_ratio(m(p[0]), m(p[1]), m(p[2]), m(p[3])) - cr), 1e-11);
    }
    // normalization (0, 1, inf) -> (0, 1, inf)
    const SpherePoint zero = SpherePoint::finite(0.0), one = SpherePoint::finite(1.0);
    EXPECT_EQ(cross_ratio(zero, one, SpherePoint::infinity(), SpherePoint::finite(Complex(2, 3))), Complex(2, 3));
}

TEST(Sphere, GermEvaluation)
{
    const RiggedSphere S = fixtures::probe_left(0.1);
    const Complex z(0.2, 0.1);
    EXPECT_LT(std::abs(S.germ(0)(z).z - (z + 0.1 * z * z)), 1e-15);
    EXPECT_LT(std::abs(S.germ(1)(z).z - (3.0 + 0.3 * z)), 1e-15);
    EXPECT_LT(std::abs(S.germ(2)(z).z - 1.0 / (0.2 * z)), 1e-12);
    EXPECT_TRUE(S.germ(2).at_zero().infinite);
}

TEST(Sphere, ValidationErrors)
{
    RiggedSphere S = fixtures::probe_left(0.1);
    EXPECT_NO_THROW(S.validate());

    RiggedSphere dup = S;
    dup.punctures[1] = SpherePoint::finite(0.0);
    EXPECT_THROW(dup.validate(), Error);

    RiggedSphere overlap = S;
    overlap.punctures[1] = SpherePoint::finite(1.2);
    EXPECT_THROW(overlap.validate(), Error);

    RiggedSphere bad = S;
    bad.riggings[0] = fixtures::polynomial({1.0, 1.0});
    EXPECT_THROW(bad.validate(), Error);

    RiggedSphere mismatch = S;
    mismatch.riggings.pop_back();
    EXPECT_THROW(mismatch.validate(), Error);
}

TEST(Sphere, InvariantsAreMobiusInvariant)
{
    std::mt19937_64 rng(53);
    const RiggedSphere S = fixtures::probe_left(Complex(0.1, 0.05));
    const ModuliInvariants base = moduli_invariants(S);
    for (int k = 0; k < 3; ++k)
    {
        const RiggedSphere T = apply_mobius(S, random_mobius(rng), 24);
        EXPECT_LT(invariants_distance(base, moduli_invariants(T)), 1e-9);
    }
}

TEST(Sphere, InvariantsSeparateDifferentSpheres)
{
    const ModuliInvariants a = moduli_invariants(fixtures::probe_left(0.1));
    const ModuliInvariants b = moduli_invariants(fixtures::probe_left(0.12));
    EXPECT_GT(invariants_distance(a, b), 1e-3);
}

TEST(Sphere, NormalizationConditions)
{
    const ModuliInvariants inv = moduli_invariants(fixtures::probe_left(Complex(0.1, 0.05)));
    EXPECT_FALSE(inv.points[0].infinite);
    EXPECT_LT(std::abs(inv.points[0].z), 1e-15);
    EXPECT_LT(std::abs(inv.jets[0][0] - 1.0), 1e-14);
    EXPECT_LT(std::abs(inv.jets[0][1]), 1e-14);
}

TEST(Sphere, CapsRoundTripBitExact)
{
    RiggedSphere S = fixtures::probe_right();
    const RiggedSphere B = cut_caps(S);
    EXPECT_EQ(B.model, SurfaceModel::border);
    EXPECT_TRUE(sew_caps(B) == S);
    EXPECT_THROW(sew_caps(S), Error);
    EXPECT_THROW(cut_caps(B), Error);
}

TEST(Sphere, MakeRiggedFromGerms)
{
    const RiggedSphere S = fixtures::probe_left(0.1);
    std::vector< Germ > g;
    for (std::size_t i = 0; i < S.size(); ++i)
        g.push_back(S.germ(i));
    const RiggedSphere T = make_rigged(g, 8, SurfaceModel::puncture);
    EXPECT_LT(invariants_distance(moduli_invariants(S), moduli_invariants(T)), 1e-14);
}
