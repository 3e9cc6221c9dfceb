#ifndef WELDLAB_CIRCLE_MAP_HPP
#define WELDLAB_CIRCLE_MAP_HPP

#include "weldlab/common.hpp"
#include "weldlab/fourier.hpp"
#include "weldlab/operator_matrix.hpp"

namespace weldlab
{
/// Orientation-preserving circle homeomorphism e^{it} -> e^{i L(t)},
/// L(t) = t + p(t), p(t) = a_0 + sum_{k=1}^K a_k cos kt + b_k sin kt.
class CircleHomeo
{
public:
    CircleHomeo() : CircleHomeo(VectorXd::Zero(1), VectorXd::Zero(1), 256) {}
    CircleHomeo(const VectorXd& a, const VectorXd& b, int grid);

    static CircleHomeo identity(int grid = 256);
    static CircleHomeo rotation(Real alpha, int grid = 256);
    /// Fit p from samples p(2 pi j / m), keeping K modes; checks monotonicity.
    static CircleHomeo from_p_samples(const VectorXd& p, int K, int grid);

    int modes() const { return static_cast< int >(a_.size()) - 1; }
    int grid() const { return grid_; }
    const VectorXd& cos_coeffs() const { return a_; }
    const VectorXd& sin_coeffs() const { return b_; }

    Real p(Real t) const;
    Real dp(Real t) const;
    Real lift(Real t) const { return t + p(t); }
    Real derivative(Real t) const { return 1.0 + dp(t); }
    /// p at 2 pi j / m.
    VectorXd p_samples(int m) const;
    /// L' at 2 pi j / m.
    VectorXd derivative_samples(int m) const;

    /// True when only a_0 may be nonzero.
    bool is_rotation() const;
    Real min_derivative(int m) const;
    /// Throws resolution error if L' <= 0 on a grid of max(grid, 4K) points.
    void check_monotone() const;

private:
    VectorXd a_;
    VectorXd b_;
    int grid_;
};

/// phi o psi
CircleHomeo compose(const CircleHomeo& phi, const CircleHomeo& psi);
CircleHomeo invert(const CircleHomeo& phi);

struct QsGrid
{
    int n_alpha = 256;
    int n_beta = 128;
    Real beta_min = 0.0; // 0 selects pi / n_beta
};

/// Grid lower bound for the quasisymmetry constant.
Real qs_ratio(const CircleHomeo& phi, const QsGrid& grid = {});

/// C_phi h = h o phi - mean, returned with the given truncation.
FourierFunction compose_function(const FourierFunction& h, const CircleHomeo& phi, int order);

/// Matrix of C_phi on H_* in the basis u_n = e^{int}/sqrt|n|, order [-1..-N, +1..+N].
OperatorMatrix comp_operator_matrix(const CircleHomeo& phi, int N);

/// Pairing matrix Omega with (g, h) = g^T Omega h in the u basis.
MatrixXcd pairing_matrix(int N);

/// Blocks of a C_phi matrix, N x N each:
///  a: minus -> minus (row j <-> mode -j, col k <-> mode -k)
///  b: plus  -> minus (row j <-> mode -j, col k <-> mode +k)
/// c = conj(b) and d = conj(a) are implied.
struct BlockDecomposition
{
    MatrixXcd a;
    MatrixXcd b;

    int order() const { return static_cast< int >(a.rows()); }
    MatrixXcd c() const { return b.conjugate(); }
    MatrixXcd d() const { return a.conjugate(); }
    MatrixXcd assemble() const;
};

BlockDecomposition block_decompose(const OperatorMatrix& m);
/// Blocks of the matrix product M1 M2.
BlockDecomposition compose_blocks(const BlockDecomposition& m1, const BlockDecomposition& m2);

/// conj(b) a^{-1}
MatrixXcd gr_from_blocks(const BlockDecomposition& blocks);

/// Beltrami coefficient of the Beurling-Ahlfors extension of phi into |zeta| > 1.
Complex beurling_ahlfors_mu(const CircleHomeo& phi, Complex zeta);

struct WpEnergyGrid
{
    int radial = 96;   // log-spaced rows in y = log|zeta|
    int angular = 256; // columns in arg zeta
    Real y_min = 1e-3;
    Real y_max = 20.0;
};

struct WpEnergyReport
{
    Real coarse = 0.0;
    Real fine = 0.0;
    Real relative_change = 0.0;
    WpEnergyGrid coarse_grid;
    WpEnergyGrid fine_grid;
};

/// Single quadrature of the hyperbolic L^2 energy of mu on one grid.
Real wp_energy(const CircleHomeo& phi, const WpEnergyGrid& grid);
/// Energy on grid and on its refinement (twice the nodes, half of y_min).
WpEnergyReport wp_energy_estimate(const CircleHomeo& phi, const WpEnergyGrid& grid = {});
} // namespace weldlab

#endif // WELDLAB_CIRCLE_MAP_HPP
