#include "weldlab/operator_matrix.hpp"

#include <Eigen/SVD>

namespace weldlab
{
Basis Basis::circle(int order)
{
    Basis b{"u", {}};
    for (int k = 1; k <= order; ++k)
        b.modes.push_back(-k);
    for (int k = 1; k <= order; ++k)
        b.modes.push_back(k);
    return b;
}

Basis Basis::disk(const std::string& kind, int order)
{
    Basis b{kind, {}};
    for (int k = 1; k <= order; ++k)
        b.modes.push_back(k);
    return b;
}

Basis Basis::faber_with_constant(int order)
{
    Basis b{"faber", {0}};
    for (int k = 1; k <= order; ++k)
        b.modes.push_back(k);
    return b;
}

void OperatorMatrix::validate() const
{
    if (entries.rows() != rows.size() || entries.cols() != cols.size())
        fail(ErrorKind::internal, "OperatorMatrix: basis labels do not match dimensions");
    if (!entries.array().isFinite().all())
        fail(ErrorKind::invalid_result, "OperatorMatrix: non-finite entry");
}

Real hs_norm(const MatrixXcd& m)
{
    return m.norm();
}

Real hs_norm(const OperatorMatrix& m)
{
    return m.entries.norm();
}

Real operator_norm(const MatrixXcd& m)
{
    if (m.size() == 0)
        return 0.0;
    Eigen::JacobiSVD< MatrixXcd > svd(m);
    return svd.singularValues()[0];
}
} // namespace weldlab
