#ifndef WELDLAB_GRUNSKY_HPP
#define WELDLAB_GRUNSKY_HPP

#include "weldlab/cauchy.hpp"
#include "weldlab/circle_map.hpp"
#include "weldlab/operator_matrix.hpp"
#include "weldlab/power_series_map.hpp"
#include "weldlab/sphere.hpp"

#include <vector>

namespace weldlab
{
/// Coefficients L_{mn}, 0 <= m, n < K.rows(), of log K(z, w) for a bivariate series K with K_00 != 0.
MatrixXcd bivariate_log(const MatrixXcd& K);

/// c_{mn} with log((F(z) - F(w)) / (z - w)) = sum c_{mn} z^m w^n, 0 <= m, n <= N.
MatrixXcd grunsky_log_coefficients(const PowerSeriesMap& F, int N);

/// [Gr]_{mn} = -sqrt(mn) c_{mn}, m, n = 1..N (rows p_m, columns q_n).
OperatorMatrix grunsky_matrix_coeff(const PowerSeriesMap& F, int N);

/// Blocks of C_F I_F on q_1..q_N obtained from the Cauchy jump:
///  plus: P(D+) C_F I_F (rows p_m), minus: P(D-) C_F I_F (rows q_k).
struct ProjectionBlocks
{
    MatrixXcd plus;
    MatrixXcd minus;
};

ProjectionBlocks projection_blocks(const PowerSeriesMap& F, int N, const JumpOptions& opts = {});
OperatorMatrix grunsky_matrix_proj(const PowerSeriesMap& F, int N, const JumpOptions& opts = {});

struct GraphCheck
{
    Real id_residual = 0.0;    // |P(D-) C_F I_F - Id|
    Real graph_residual = 0.0; // |P(D+) C_F I_F - Gr_F| against the coefficient route
};

GraphCheck graph_subspace_check(const PowerSeriesMap& F, int N, const JumpOptions& opts = {});

struct DetLineReport
{
    int dim_kernel = 0;
    int dim_cokernel = 0;
    int index = 0;
    std::vector< Real > singular_values;
    Real rank_tol = 0.0;
    Real fiber_residual = 0.0; // |C_F pi I_F - Id| on q_1..q_N
    OperatorMatrix pi;         // rows q_1..q_N, columns {1} u {I_F q_n}
};

/// pi = C_{F^-1} P(D-) C_F on the basis {1} u {I_F q_n}; ranks from singular values against rank_tol.
DetLineReport pi_report(const PowerSeriesMap& F, int N, Real rank_tol = 1e-8, const JumpOptions& opts = {});

/// det(a1 a2 a3^{-1}) = det(I - b1 c2 a3^{-1}) with a3 = a1 a2 + b1 c2.
Complex shale_cocycle_det(const BlockDecomposition& A1, const BlockDecomposition& A2, Real max_condition = 1e12);

/// log det(I - Gr^* Gr) from the coefficient route.
Real wp_kahler_potential(const PowerSeriesMap& F, int N);

/// Block Grunsky matrix of the riggings of S, blocks (i, j) of size N x N, rows/columns ordered
/// puncture-major. Riggings at infinity use the coordinate 1/f.
OperatorMatrix multi_grunsky(const RiggedSphere& S, int N);
} // namespace weldlab

#endif // WELDLAB_GRUNSKY_HPP
