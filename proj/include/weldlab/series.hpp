#ifndef WELDLAB_SERIES_HPP
#define WELDLAB_SERIES_HPP

// Truncated power series sum_k c_k z^k stored as dense vectors, index = power.

#include "weldlab/common.hpp"

#include <algorithm>
#include <cmath>

namespace weldlab::series
{
template < typename Scalar >
using Series = Eigen::Matrix< Scalar, Eigen::Dynamic, 1 >;

template < typename Scalar >
Series< Scalar > truncate(const Series< Scalar >& a, Eigen::Index n)
{
    Series< Scalar > out = Series< Scalar >::Zero(n);
    const Eigen::Index m = std::min(n, a.size());
    out.head(m) = a.head(m);
    return out;
}

template < typename Scalar >
Series< Scalar > mul(const Series< Scalar >& a, const Series< Scalar >& b, Eigen::Index n)
{
    Series< Scalar > out = Series< Scalar >::Zero(n);
    for (Eigen::Index i = 0; i < std::min(n, a.size()); ++i)
    {
        if (a[i] == Scalar(0))
            continue;
        const Eigen::Index jmax = std::min(n - i, b.size());
        for (Eigen::Index j = 0; j < jmax; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

template < typename Scalar >
Series< Scalar > inverse(const Series< Scalar >& a, Eigen::Index n)
{
    if (a.size() == 0 || std::abs(a[0]) == 0)
        fail(ErrorKind::invalid_input, "series inverse: zero constant term");
    Series< Scalar > out = Series< Scalar >::Zero(n);
    const Scalar inv0 = Scalar(1) / a[0];
    if (n > 0)
        out[0] = inv0;
    for (Eigen::Index k = 1; k < n; ++k)
    {
        Scalar s(0);
        for (Eigen::Index j = 1; j <= std::min(k, a.size() - 1); ++j)
            s += a[j] * out[k - j];
        out[k] = -s * inv0;
    }
    return out;
}

template < typename Scalar >
Series< Scalar > divide(const Series< Scalar >& a, const Series< Scalar >& b, Eigen::Index n)
{
    return mul(a, inverse(b, n), n);
}

template < typename Scalar >
Series< Scalar > derivative(const Series< Scalar >& a)
{
    if (a.size() <= 1)
        return Series< Scalar >::Zero(1);
    Series< Scalar > out(a.size() - 1);
    for (Eigen::Index k = 1; k < a.size(); ++k)
        out[k - 1] = a[k] * Scalar(static_cast< double >(k));
    return out;
}

/// log(a) with the principal branch for the constant term.
template < typename Scalar >
Series< Scalar > log(const Series< Scalar >& a, Eigen::Index n)
{
    if (a.size() == 0 || std::abs(a[0]) == 0)
        fail(ErrorKind::invalid_input, "series log: zero constant term");
    Series< Scalar > q = divide(derivative(a), a, n);
    Series< Scalar > out = Series< Scalar >::Zero(n);
    if (n > 0)
        out[0] = std::log(a[0]);
    for (Eigen::Index k = 1; k < n; ++k)
        out[k] = q[k - 1] / Scalar(static_cast< double >(k));
    return out;
}

template < typename Scalar >
Series< Scalar > exp(const Series< Scalar >& a, Eigen::Index n)
{
    Series< Scalar > out = Series< Scalar >::Zero(n);
    if (n == 0)
        return out;
    out[0] = std::exp(a.size() > 0 ? a[0] : Scalar(0));
    // E' = a' E
    for (Eigen::Index k = 1; k < n; ++k)
    {
        Scalar s(0);
        for (Eigen::Index j = 1; j <= std::min(k, a.size() - 1); ++j)
            s += Scalar(static_cast< double >(j)) * a[j] * out[k - j];
        out[k] = s / Scalar(static_cast< double >(k));
    }
    return out;
}

/// a^alpha for a[0] != 0 (Miller recurrence), principal branch at the constant.
template < typename Scalar >
Series< Scalar > pow(const Series< Scalar >& a, Scalar alpha, Eigen::Index n)
{
    if (a.size() == 0 || std::abs(a[0]) == 0)
        fail(ErrorKind::invalid_input, "series pow: zero constant term");
    Series< Scalar > out = Series< Scalar >::Zero(n);
    if (n == 0)
        return out;
    out[0] = std::pow(a[0], alpha);
    for (Eigen::Index k = 1; k < n; ++k)
    {
        Scalar s(0);
        for (Eigen::Index j = 1; j <= std::min(k, a.size() - 1); ++j)
        {
            const Scalar jk(static_cast< double >(j));
            s += (alpha * jk - Scalar(static_cast< double >(k - j))) * a[j] * out[k - j];
        }
        out[k] = s / (Scalar(static_cast< double >(k)) * a[0]);
    }
    return out;
}

/// a(b(z)), requires b[0] == 0.
template < typename Scalar >
Series< Scalar > compose(const Series< Scalar >& a, const Series< Scalar >& b, Eigen::Index n)
{
    if (b.size() > 0 && std::abs(b[0]) != 0)
        fail(ErrorKind::invalid_input, "series compose: inner series must vanish at 0");
    Series< Scalar > out = Series< Scalar >::Zero(n);
    for (Eigen::Index k = std::min(a.size(), n) - 1; k >= 0; --k)
    {
        out = mul(out, b, n);
        out[0] += a[k];
    }
    return out;
}

/// Compositional inverse of a with a[0] == 0, a[1] != 0 (Newton on a(b) = z).
template < typename Scalar >
Series< Scalar > revert(const Series< Scalar >& a, Eigen::Index n)
{
    if (a.size() < 2 || std::abs(a[1]) == 0 || std::abs(a[0]) != 0)
        fail(ErrorKind::invalid_input, "series revert: need a0 = 0, a1 != 0");
    Series< Scalar > b = Series< Scalar >::Zero(n);
    if (n > 1)
        b[1] = Scalar(1) / a[1];
    const Series< Scalar > da = derivative(a);
    for (Eigen::Index prec = 2; prec < 2 * n; prec *= 2)
    {
        const Eigen::Index m = std::min(prec + 1, n);
        Series< Scalar > r = compose(a, truncate(b, m), m);
        if (m > 1)
            r[1] -= Scalar(1);
        const Series< Scalar > d = compose(da, truncate(b, m), m);
        const Series< Scalar > step = divide(r, d, m);
        b.head(m) -= step;
        if (m == n)
        {
            r = compose(a, b, n);
            r[1] -= Scalar(1);
            b -= divide(r, compose(da, b, n), n);
            break;
        }
    }
    return b;
}

template < typename Scalar >
Scalar eval(const Series< Scalar >& a, Scalar z)
{
    Scalar s(0);
    for (Eigen::Index k = a.size() - 1; k >= 0; --k)
        s = s * z + a[k];
    return s;
}
} // namespace weldlab::series

#endif // WELDLAB_SERIES_HPP
