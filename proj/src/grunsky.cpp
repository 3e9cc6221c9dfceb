#include "weldlab/grunsky.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace weldlab
{
namespace
{
OperatorMatrix grunsky_from_log(const MatrixXcd& L, int N)
{
    OperatorMatrix out;
    out.entries = MatrixXcd::Zero(N, N);
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            out.entries(m - 1, n - 1) = -std::sqrt(Real(m) * n) * L(m, n);
    out.rows = Basis::disk("p", N);
    out.cols = Basis::disk("q", N);
    out.order = N;
    return out;
}

/// Coefficients 0..N of the stored local series of rigging i (zero constant term).
VectorXcd local_coefficients(const PowerSeriesMap& f, int N)
{
    VectorXcd s = VectorXcd::Zero(N + 1);
    const int m = std::min(N, f.order());
    s.head(m + 1) = f.coeffs().head(m + 1);
    s[0] = 0.0;
    return s;
}
} // namespace

MatrixXcd bivariate_log(const MatrixXcd& K)
{
    require(K.rows() == K.cols() && K.rows() >= 1, "bivariate_log: square coefficient array expected");
    const Complex k00 = K(0, 0);
    if (std::abs(k00) == 0 || !K.array().isFinite().all())
        fail(ErrorKind::invalid_input, "bivariate_log: zero or non-finite constant term");
    const Eigen::Index D = K.rows();
    MatrixXcd L = MatrixXcd::Zero(D, D);
    L(0, 0) = std::log(k00);
    // Euler relation for the total-degree operator: s K L_s = s K_s - sum (s - i - j) K_ij L_{m-i, n-j}
    for (Eigen::Index s = 1; s <= 2 * (D - 1); ++s)
    {
        for (Eigen::Index m = std::max< Eigen::Index >(0, s - D + 1); m <= std::min(s, D - 1); ++m)
        {
            const Eigen::Index n = s - m;
            Complex acc = Real(s) * K(m, n);
            for (Eigen::Index i = 0; i <= m; ++i)
                for (Eigen::Index j = 0; j <= n; ++j)
                {
                    if ((i == 0 && j == 0) || (i == m && j == n) || K(i, j) == Complex(0))
                        continue;
                    acc -= Real(s - i - j) * K(i, j) * L(m - i, n - j);
                }
            L(m, n) = acc / (Real(s) * k00);
        }
    }
    if (!L.array().isFinite().all())
        fail(ErrorKind::invalid_input, "bivariate_log: series logarithm broke down");
    return L;
}

MatrixXcd grunsky_log_coefficients(const PowerSeriesMap& F, int N)
{
    require(F.kind() == MapKind::disk_plus, "grunsky: expects a disk_plus map");
    require(N >= 1, "grunsky: N must be >= 1");
    require(std::abs(F.lead()) > 0, "grunsky: a_1 must be nonzero");
    // (F(z) - F(w)) / (z - w) = sum a_{j+l+1} z^j w^l
    MatrixXcd K = MatrixXcd::Zero(N + 1, N + 1);
    for (int j = 0; j <= N; ++j)
        for (int l = 0; l <= N; ++l)
            if (j + l + 1 <= F.order())
                K(j, l) = F.coeff(j + l + 1);
    return bivariate_log(K);
}

OperatorMatrix grunsky_matrix_coeff(const PowerSeriesMap& F, int N)
{
    return grunsky_from_log(grunsky_log_coefficients(F, N), N);
}

ProjectionBlocks projection_blocks(const PowerSeriesMap& F, int N, const JumpOptions& opts)
{
    require(F.kind() == MapKind::disk_plus, "grunsky: expects a disk_plus map");
    require(N >= 1, "grunsky: N must be >= 1");
    const MatrixXcd E = faber_boundary_modes(F, N, opts);
    ProjectionBlocks out{MatrixXcd(N, N), MatrixXcd(N, N)};
    for (int k = 1; k <= N; ++k)
    {
        const Real w = std::sqrt(Real(k));
        out.plus.row(k - 1) = w * E.row(N + k);
        out.minus.row(k - 1) = w * E.row(N - k);
    }
    return out;
}

OperatorMatrix grunsky_matrix_proj(const PowerSeriesMap& F, int N, const JumpOptions& opts)
{
    OperatorMatrix out;
    out.entries = projection_blocks(F, N, opts).plus;
    out.rows = Basis::disk("p", N);
    out.cols = Basis::disk("q", N);
    out.order = N;
    return out;
}

GraphCheck graph_subspace_check(const PowerSeriesMap& F, int N, const JumpOptions& opts)
{
    const ProjectionBlocks pb = projection_blocks(F, N, opts);
    const OperatorMatrix gr = grunsky_matrix_coeff(F, N);
    GraphCheck out;
    out.id_residual = operator_norm(pb.minus - MatrixXcd::Identity(N, N));
    out.graph_residual = operator_norm(pb.plus - gr.entries);
    return out;
}

DetLineReport pi_report(const PowerSeriesMap& F, int N, Real rank_tol, const JumpOptions& opts)
{
    require(rank_tol > 0, "pi_report: rank_tol must be positive");
    const ProjectionBlocks pb = projection_blocks(F, N, opts);
    DetLineReport out;
    out.rank_tol = rank_tol;
    out.pi.entries = MatrixXcd::Zero(N, N + 1);
    out.pi.entries.rightCols(N) = pb.minus; // constants are annihilated
    out.pi.rows = Basis::disk("q", N);
    out.pi.cols = Basis::faber_with_constant(N);
    out.pi.order = N;
    out.fiber_residual = operator_norm(pb.minus - MatrixXcd::Identity(N, N));

    const Eigen::JacobiSVD< MatrixXcd > svd(out.pi.entries);
    const VectorXd sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
    {
        out.singular_values.push_back(sv[k]);
        if (sv[k] >= rank_tol / 10 && sv[k] <= 10 * rank_tol)
            fail(ErrorKind::ambiguous_rank, "pi_report: singular value within a decade of rank_tol", sv[k]);
        if (sv[k] > rank_tol)
            ++rank;
    }
    out.dim_kernel = (N + 1) - rank;
    out.dim_cokernel = N - rank;
    out.index = out.dim_kernel - out.dim_cokernel;
    return out;
}

Complex shale_cocycle_det(const BlockDecomposition& A1, const BlockDecomposition& A2, Real max_condition)
{
    require(A1.order() == A2.order() && A1.order() >= 1, "shale_cocycle_det: block sizes differ");
    const MatrixXcd c2 = A2.c();
    const MatrixXcd bc = A1.b * c2;
    const MatrixXcd a3 = A1.a * A2.a + bc;
    const Eigen::JacobiSVD< MatrixXcd > svd(a3);
    const VectorXd sv = svd.singularValues();
    const Real cond = sv[sv.size() - 1] > 0 ? sv[0] / sv[sv.size() - 1] : std::numeric_limits< Real >::infinity();
    if (!(cond <= max_condition))
        fail(ErrorKind::invalid_input, "shale_cocycle_det: a3 is singular or ill-conditioned", cond);
    if (A1.b.isZero(0.0) || c2.isZero(0.0))
        return 1.0;
    // X = bc a3^{-1}  <=>  a3^T X^T = (bc)^T
    const Eigen::PartialPivLU< MatrixXcd > lu(a3.transpose());
    const MatrixXcd X = lu.solve(bc.transpose()).transpose();
    const Eigen::Index n = X.rows();
    return Eigen::PartialPivLU< MatrixXcd >(MatrixXcd::Identity(n, n) - X).determinant();
}

Real wp_kahler_potential(const PowerSeriesMap& F, int N)
{
    const OperatorMatrix gr = grunsky_matrix_coeff(F, N);
    const Eigen::JacobiSVD< MatrixXcd > svd(gr.entries);
    const VectorXd sv = svd.singularValues();
    if (sv.size() > 0 && !(sv[0] < 1.0))
        fail(ErrorKind::invalid_input, "wp_kahler_potential: Grunsky norm is not below 1", sv[0]);
    Real s = 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        s += std::log1p(-sv[k] * sv[k]);
    return s;
}

OperatorMatrix multi_grunsky(const RiggedSphere& S, int N)
{
    require(N >= 1, "multi_grunsky: N must be >= 1");
    S.validate();
    const int n = static_cast< int >(S.size());
    std::vector< VectorXcd > local(n);
    for (int i = 0; i < n; ++i)
        local[i] = local_coefficients(S.riggings[i], N);

    OperatorMatrix out;
    out.entries = MatrixXcd::Zero(n * N, n * N);
    out.order = N;
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= N; ++k)
        {
            out.rows.modes.push_back(k);
            out.cols.modes.push_back(k);
        }
    out.rows.kind = "p";
    out.cols.kind = "q";

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            MatrixXcd L;
            if (i == j)
                L = grunsky_log_coefficients(S.riggings[i], N);
            else
            {
                const SpherePoint& pi_ = S.punctures[i];
                const SpherePoint& pj = S.punctures[j];
                MatrixXcd K = MatrixXcd::Zero(N + 1, N + 1);
                if (!pi_.infinite && !pj.infinite)
                {
                    // f_i(z) - f_j(w)
                    K(0, 0) = pi_.z - pj.z;
                    for (int m = 1; m <= N; ++m)
                    {
                        K(m, 0) = local[i][m];
                        K(0, m) = -local[j][m];
                    }
                }
                else
                {
                    // 1 - g(z) f(w) with g the chart at infinity; mixed terms agree with log(f_i(z) - f_j(w))
                    VectorXcd g = pi_.infinite ? local[i] : local[j];
                    VectorXcd f = pi_.infinite ? local[j] : local[i];
                    f[0] = pi_.infinite ? pj.z : pi_.z;
                    K(0, 0) = 1.0;
                    for (int a = 1; a <= N; ++a)
                        for (int b = 0; b <= N; ++b)
                        {
                            const Complex v = -g[a] * f[b];
                            if (pi_.infinite)
                                K(a, b) = v;
                            else
                                K(b, a) = v;
                        }
                }
                L = bivariate_log(K);
            }
            for (int m = 1; m <= N; ++m)
                for (int q = 1; q <= N; ++q)
                    out.entries(i * N + m - 1, j * N + q - 1) = -std::sqrt(Real(m) * q) * L(m, q);
        }
    return out;
}
} // namespace weldlab
