#ifndef WELDLAB_FOURIER_HPP
#define WELDLAB_FOURIER_HPP

#include "weldlab/common.hpp"

namespace weldlab
{
/// Truncated Fourier series h(t) = sum_{|n| <= N} h_n e^{int}.
class FourierFunction
{
public:
    FourierFunction() : FourierFunction(0) {}
    explicit FourierFunction(int order);
    FourierFunction(int order, const VectorXcd& coeffs);

    /// Fourier projection of equispaced samples, keeping |n| <= order.
    static FourierFunction from_samples(const VectorXcd& samples, int order);
    static FourierFunction monomial(int n, Complex c = 1.0);

    int order() const { return order_; }
    Complex coeff(int n) const;
    void set_coeff(int n, Complex c);
    const VectorXcd& coeffs() const { return coeffs_; }

    Complex operator()(Real t) const;
    /// Values at t_j = 2 pi j / m (m > 2N for exactness).
    VectorXcd samples(int m) const;
    FourierFunction resized(int order) const;
    Complex mean() const { return coeff(0); }
    FourierFunction zero_mean() const;
    FourierFunction conj() const;

    FourierFunction operator+(const FourierFunction& o) const;
    FourierFunction operator-(const FourierFunction& o) const;
    FourierFunction operator*(Complex s) const;

    bool operator==(const FourierFunction& o) const
    {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

private:
    int order_;
    VectorXcd coeffs_; // index n + order
};

enum class Side
{
    plus,
    minus
};

const char* to_string(Side side);

/// Holomorphic series on one side of the circle.
/// plus: sum_{n >= 0} a_n z^n; minus: sum_{n >= 1} a_{-n} z^{-n}.
/// coeffs[k] is the coefficient of z^k (plus) or z^{-k} (minus), coeffs[0] = 0 on the minus side.
class DiskSeries
{
public:
    DiskSeries() : DiskSeries(Side::plus, 0) {}
    DiskSeries(Side side, int order);
    DiskSeries(Side side, int order, const VectorXcd& coeffs);

    Side side() const { return side_; }
    int order() const { return order_; }
    const VectorXcd& coeffs() const { return coeffs_; }
    /// Coefficient by signed mode n (n >= 0 on plus, n <= -1 on minus).
    Complex mode(int n) const;
    void set_mode(int n, Complex c);

    Complex operator()(Complex z) const;
    FourierFunction boundary() const;

    bool operator==(const DiskSeries& o) const
    {
        return side_ == o.side_ && order_ == o.order_ && coeffs_ == o.coeffs_;
    }

private:
    Side side_;
    int order_;
    VectorXcd coeffs_;
};

/// sqrt(|h_0|^2 + sum |n||h_n|^2)
Real h12_norm(const FourierFunction& h);

DiskSeries project(const FourierFunction& h, Side side);

/// sum |n||a_n|^2, i.e. the area integral of |s'|^2 divided by pi.
Real dirichlet_energy(const DiskSeries& s);

/// i sum_n n g_{-n} h_n after removing both means.
Complex symplectic_pairing(const FourierFunction& g, const FourierFunction& h);
} // namespace weldlab

#endif // WELDLAB_FOURIER_HPP
