#ifndef WELDLAB_OPERATOR_MATRIX_HPP
#define WELDLAB_OPERATOR_MATRIX_HPP

#include "weldlab/common.hpp"

#include <string>
#include <vector>

namespace weldlab
{
/// Labeled basis of a truncated operator.
///  "u": e^{int}/sqrt|n| on the circle, "q": z^{-n}/sqrt n, "p": z^n/sqrt n,
///  "faber": I_F q_n, with mode 0 meaning the constant function.
struct Basis
{
    std::string kind;
    std::vector< int > modes;

    static Basis circle(int order);              // -1..-N, +1..+N
    static Basis disk(const std::string& kind, int order); // 1..N
    static Basis faber_with_constant(int order);  // 0, 1..N

    Eigen::Index size() const { return static_cast< Eigen::Index >(modes.size()); }
    bool operator==(const Basis& o) const = default;
};

struct OperatorMatrix
{
    MatrixXcd entries;
    Basis rows;
    Basis cols;
    int order = 0;

    void validate() const;
};

/// Frobenius norm.
Real hs_norm(const OperatorMatrix& m);
Real hs_norm(const MatrixXcd& m);
Real operator_norm(const MatrixXcd& m);
} // namespace weldlab

#endif // WELDLAB_OPERATOR_MATRIX_HPP
