#include "weldlab/fixtures.hpp"
#include "weldlab/grunsky.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace weldlab;

namespace
{
Real binomial(int n, int k)
{
    return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
}

struct Rigging
{
    Complex value;
    Complex derivative;
};

// f_i and f_i' evaluated directly from the stored rigging.
Rigging evaluate(const RiggedSphere& S, std::size_t i, Complex z)
{
    const PowerSeriesMap& g = S.riggings[i];
    if (S.punctures[i].infinite)
        return {1.0 / g(z), -g.derivative(z) / (g(z) * g(z))};
    return {S.punctures[i].z + g(z), g.derivative(z)};
}

// Block (i, j) of the Grunsky matrix from d_z d_w log(f_i(z) - f_j(w)), sampled on the torus
// |z| = 0.5, |w| = 0.3 (the diagonal singularity 1/(z - w)^2 is subtracted when i = j).
MatrixXcd torus_block(const RiggedSphere& S, std::size_t i, std::size_t j, int N)
{
    const int M = 64;
    const Real r1 = 0.5, r2 = 0.3;
    MatrixXcd D(M, M);
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b)
        {
            const Complex z = std::polar(r1, two_pi * a / M), w = std::polar(r2, two_pi * b / M);
            const Rigging fz = evaluate(S, i, z), fw = evaluate(S, j, w);
            const Complex d = fz.value - fw.value;
            Complex v = fz.derivative * fw.derivative / (d * d);
            if (i == j)
                v -= 1.0 / ((z - w) * (z - w));
            D(a, b) = v;
        }
    MatrixXcd out(N, N);
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
        {
            Complex acc = 0.0;
            for (int a = 0; a < M; ++a)
                for (int b = 0; b < M; ++b)
                    acc += D(a, b) * std::polar(std::pow(r1, -(m - 1)), -two_pi * a * (m - 1) / M) *
                           std::polar(std::pow(r2, -(n - 1)), -two_pi * b * (n - 1) / M);
            const Complex c = acc / Real(M * M) / Real(m * n);
            out(m - 1, n - 1) = -std::sqrt(Real(m * n)) * c;
        }
    return out;
}
} // namespace

TEST(Grunsky, QuadraticMapMatchesBinomialClosedForm)
{
    const Real t = 0.2;
    const MatrixXcd c = grunsky_log_coefficients(fixtures::polynomial({1.0, t}), 8);
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
        {
            if (m + n == 0)
                continue;
            const Real expect = std::pow(-1.0, m + n + 1) * std::pow(t, m + n) * binomial(m + n, m) / (m + n);
            EXPECT_LT(std::abs(c(m, n) - expect), 1e-15) << m << " " << n;
        }
}

TEST(Grunsky, MobiusMapHasZeroMatrix)
{
    const OperatorMatrix g = grunsky_matrix_coeff(fixtures::mobius_map(0.4, 64), 10);
    EXPECT_LT(g.entries.cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(wp_kahler_potential(fixtures::mobius_map(0.4, 64), 10), 0.0, 1e-15);
}

TEST(Grunsky, MatrixIsSymmetric)
{
    for (const auto& nm : fixtures::standard_maps())
    {
        const MatrixXcd g = grunsky_matrix_coeff(nm.map, 12).entries;
        EXPECT_LT((g - g.transpose()).cwiseAbs().maxCoeff(), 1e-15) << nm.name;
    }
}

TEST(Grunsky, InvariantUnderScaling)
{
    const PowerSeriesMap F = fixtures::exp_map(0.2);
    VectorXcd a = F.coeffs() * Complex(2.0, -1.0);
    const MatrixXcd g1 = grunsky_matrix_coeff(F, 10).entries;
    const MatrixXcd g2 = grunsky_matrix_coeff(PowerSeriesMap::disk_plus(a), 10).entries;
    EXPECT_LT((g1 - g2).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Grunsky, RotationConjugation)
{
    // F_theta(z) = e^{-i theta} F(e^{i theta} z) has Gr_mn multiplied by e^{i (m + n) theta}
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.1, 0.05});
    const Real th = 0.7;
    VectorXcd a = F.coeffs();
    for (int k = 0; k < a.size(); ++k)
        a[k] *= std::polar(1.0, (k - 1) * th);
    const MatrixXcd g1 = grunsky_matrix_coeff(F, 8).entries;
    const MatrixXcd g2 = grunsky_matrix_coeff(PowerSeriesMap::disk_plus(a), 8).entries;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n)
            EXPECT_LT(std::abs(g2(m - 1, n - 1) - std::polar(1.0, (m + n) * th) * g1(m - 1, n - 1)), 1e-15);
}

TEST(Grunsky, RoutesAgree)
{
    for (const auto& nm : fixtures::standard_maps())
    {
        const MatrixXcd a = grunsky_matrix_coeff(nm.map, 10).entries;
        const MatrixXcd b = grunsky_matrix_proj(nm.map, 10).entries;
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10) << nm.name;
    }
}

TEST(Grunsky, GraphSubspace)
{
    const GraphCheck g = graph_subspace_check(fixtures::polynomial({1.0, 0.2}), 10);
    EXPECT_LT(g.id_residual, 1e-10);
    EXPECT_LT(g.graph_residual, 1e-10);
}

TEST(Grunsky, ContractionBelowOne)
{
    for (const auto& nm : fixtures::standard_maps())
        EXPECT_LT(operator_norm(grunsky_matrix_coeff(nm.map, 16).entries), 1.0) << nm.name;
}

TEST(Grunsky, DetLineOfUnivalentMap)
{
    const DetLineReport r = pi_report(fixtures::exp_map(0.2), 8);
    EXPECT_EQ(r.dim_kernel, 1);
    EXPECT_EQ(r.dim_cokernel, 0);
    EXPECT_EQ(r.index, 1);
    EXPECT_LT(r.fiber_residual, 1e-10);
    EXPECT_EQ(r.pi.entries.col(0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Grunsky, AmbiguousRankIsReported)
{
    try
    {
        pi_report(fixtures::exp_map(0.2), 8, 1.0);
        FAIL() << "expected ambiguous rank";
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::ambiguous_rank);
    }
}

TEST(Grunsky, PotentialConvergesInTruncation)
{
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.2});
    const Real p16 = wp_kahler_potential(F, 16), p32 = wp_kahler_potential(F, 32);
    EXPECT_LT(p16, 0.0);
    EXPECT_NEAR(p16, p32, 1e-12);
}

TEST(Grunsky, CocycleIsTrivialForRotations)
{
    std::mt19937_64 rng(41);
    const BlockDecomposition A = block_decompose(comp_operator_matrix(fixtures::random_analytic_homeo(rng, 4, 0.2, 0.5), 8));
    const BlockDecomposition R = block_decompose(comp_operator_matrix(CircleHomeo::rotation(0.3), 8));
    EXPECT_EQ(shale_cocycle_det(A, R), Complex(1.0));
    EXPECT_EQ(shale_cocycle_det(R, A), Complex(1.0));
}

TEST(Grunsky, CocycleMatchesDeterminantRatio)
{
    std::mt19937_64 rng(42);
    const int N = 8;
    const BlockDecomposition A1 = block_decompose(comp_operator_matrix(fixtures::random_analytic_homeo(rng, 4, 0.2, 0.5), N));
    const BlockDecomposition A2 = block_decompose(comp_operator_matrix(fixtures::random_analytic_homeo(rng, 4, 0.2, 0.5), N));
    const MatrixXcd a3 = A1.a * A2.a + A1.b * A2.c();
    const Complex ratio = (A1.a.determinant() * A2.a.determinant()) / a3.determinant();
    EXPECT_LT(std::abs(shale_cocycle_det(A1, A2) - ratio), 1e-12);
}

TEST(Grunsky, CocycleRejectsSingularProduct)
{
    BlockDecomposition Z{MatrixXcd::Zero(3, 3), MatrixXcd::Zero(3, 3)};
    EXPECT_THROW(shale_cocycle_det(Z, Z), Error);
}

TEST(Grunsky, SinglePunctureMatchesSingleMap)
{
    const PowerSeriesMap F = fixtures::polynomial({1.0, 0.2, 0.05});
    RiggedSphere S;
    S.punctures = {SpherePoint::finite(0.0)};
    S.riggings = {F};
    const MatrixXcd a = multi_grunsky(S, 8).entries;
    EXPECT_LT((a - grunsky_matrix_coeff(F, 8).entries).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Grunsky, MultiBlocksMatchTorusQuadrature)
{
    const RiggedSphere S = fixtures::probe_left(0.1);
    const int N = 6;
    const MatrixXcd G = multi_grunsky(S, N).entries;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j)
        {
            const MatrixXcd expect = torus_block(S, i, j, N);
            const MatrixXcd got = G.block(static_cast< Eigen::Index >(i) * N, static_cast< Eigen::Index >(j) * N, N, N);
            EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-10) << i << " " << j;
        }
}

TEST(Grunsky, OffDiagonalBlocksDecayWithSeparation)
{
    Real prev = std::numeric_limits< Real >::infinity();
    for (Real d : {3.0, 6.0, 12.0})
    {
        RiggedSphere S;
        S.punctures = {SpherePoint::finite(0.0), SpherePoint::finite(d)};
        S.riggings = {fixtures::polynomial({0.5}), fixtures::polynomial({0.5})};
        const MatrixXcd G = multi_grunsky(S, 4).entries;
        const Real off = G.topRightCorner(4, 4).cwiseAbs().maxCoeff();
        EXPECT_LT(off, prev);
        // leading entry -[z w] log(0.5 z - 0.5 w - d) = -0.25 / d^2
        EXPECT_NEAR(std::abs(G(0, 4)), 0.25 / (d * d), 1e-14);
        prev = off;
    }
}
