#include "weldlab/fourier.hpp"

#include "weldlab/fft.hpp"

#include <algorithm>
#include <cmath>

namespace weldlab
{
FourierFunction::FourierFunction(int order) : order_(order), coeffs_(VectorXcd::Zero(2 * order + 1))
{
    require(order >= 0, "FourierFunction: negative truncation order");
}

FourierFunction::FourierFunction(int order, const VectorXcd& coeffs) : order_(order), coeffs_(coeffs)
{
    require(order >= 0, "FourierFunction: negative truncation order");
    require(coeffs.size() == 2 * order + 1, "FourierFunction: coefficient count must be 2N+1");
}

FourierFunction FourierFunction::from_samples(const VectorXcd& samples, int order)
{
    const VectorXcd modes = fft_modes(samples);
    const int m = static_cast< int >(samples.size());
    FourierFunction f(order);
    for (int n = -order; n <= order; ++n)
    {
        if (2 * std::abs(n) < m)
            f.coeffs_[n + order] = mode_at(modes, n);
    }
    return f;
}

FourierFunction FourierFunction::monomial(int n, Complex c)
{
    FourierFunction f(std::abs(n));
    f.set_coeff(n, c);
    return f;
}

Complex FourierFunction::coeff(int n) const
{
    if (std::abs(n) > order_)
        return 0.0;
    return coeffs_[n + order_];
}

void FourierFunction::set_coeff(int n, Complex c)
{
    require(std::abs(n) <= order_, "FourierFunction: mode outside truncation");
    coeffs_[n + order_] = c;
}

Complex FourierFunction::operator()(Real t) const
{
    Complex s = 0.0;
    for (int n = -order_; n <= order_; ++n)
        s += coeffs_[n + order_] * std::polar(1.0, n * t);
    return s;
}

VectorXcd FourierFunction::samples(int m) const
{
    VectorXcd modes = VectorXcd::Zero(m);
    for (int n = -order_; n <= order_; ++n)
        modes[((n % m) + m) % m] += coeffs_[n + order_];
    return fft_samples(modes);
}

FourierFunction FourierFunction::resized(int order) const
{
    FourierFunction f(order);
    for (int n = -std::min(order, order_); n <= std::min(order, order_); ++n)
        f.coeffs_[n + order] = coeff(n);
    return f;
}

FourierFunction FourierFunction::zero_mean() const
{
    FourierFunction f(*this);
    f.coeffs_[order_] = 0.0;
    return f;
}

FourierFunction FourierFunction::conj() const
{
    FourierFunction f(order_);
    for (int n = -order_; n <= order_; ++n)
        f.coeffs_[n + order_] = std::conj(coeff(-n));
    return f;
}

FourierFunction FourierFunction::operator+(const FourierFunction& o) const
{
    const int n = std::max(order_, o.order_);
    FourierFunction a = resized(n);
    a.coeffs_ += o.resized(n).coeffs_;
    return a;
}

FourierFunction FourierFunction::operator-(const FourierFunction& o) const
{
    const int n = std::max(order_, o.order_);
    FourierFunction a = resized(n);
    a.coeffs_ -= o.resized(n).coeffs_;
    return a;
}

FourierFunction FourierFunction::operator*(Complex s) const
{
    FourierFunction a(*this);
    a.coeffs_ *= s;
    return a;
}

const char* to_string(Side side)
{
    return side == Side::plus ? "plus" : "minus";
}

DiskSeries::DiskSeries(Side side, int order) : side_(side), order_(order), coeffs_(VectorXcd::Zero(order + 1))
{
    require(order >= 0, "DiskSeries: negative truncation order");
}

DiskSeries::DiskSeries(Side side, int order, const VectorXcd& coeffs) : side_(side), order_(order), coeffs_(coeffs)
{
    require(coeffs.size() == order + 1, "DiskSeries: coefficient count must be N+1");
    require(side == Side::plus || coeffs[0] == Complex(0.0), "DiskSeries: minus side has no constant term");
}

Complex DiskSeries::mode(int n) const
{
    const int k = side_ == Side::plus ? n : -n;
    if (k < 0 || k > order_ || (side_ == Side::minus && k == 0))
        return 0.0;
    return coeffs_[k];
}

void DiskSeries::set_mode(int n, Complex c)
{
    const int k = side_ == Side::plus ? n : -n;
    require(k >= 0 && k <= order_, "DiskSeries: mode outside truncation");
    require(side_ == Side::plus || k >= 1, "DiskSeries: minus side has no constant term");
    coeffs_[k] = c;
}

Complex DiskSeries::operator()(Complex z) const
{
    const Complex x = side_ == Side::plus ? z : 1.0 / z;
    Complex s = 0.0;
    for (int k = order_; k >= 0; --k)
        s = s * x + coeffs_[k];
    return s;
}

FourierFunction DiskSeries::boundary() const
{
    FourierFunction f(order_);
    for (int k = 0; k <= order_; ++k)
        f.set_coeff(side_ == Side::plus ? k : -k, f.coeff(side_ == Side::plus ? k : -k) + coeffs_[k]);
    return f;
}

Real h12_norm(const FourierFunction& h)
{
    if (!all_finite(h.coeffs()))
        fail(ErrorKind::invalid_input, "h12_norm: non-finite coefficient");
    Real s = std::norm(h.coeff(0));
    for (int n = 1; n <= h.order(); ++n)
        s += n * (std::norm(h.coeff(n)) + std::norm(h.coeff(-n)));
    return std::sqrt(s);
}

DiskSeries project(const FourierFunction& h, Side side)
{
    DiskSeries s(side, h.order());
    if (side == Side::plus)
    {
        for (int n = 0; n <= h.order(); ++n)
            s.set_mode(n, h.coeff(n));
    }
    else
    {
        for (int n = 1; n <= h.order(); ++n)
            s.set_mode(-n, h.coeff(-n));
    }
    return s;
}

Real dirichlet_energy(const DiskSeries& s)
{
    Real e = 0.0;
    for (int k = 1; k <= s.order(); ++k)
        e += k * std::norm(s.coeffs()[k]);
    return e;
}

Complex symplectic_pairing(const FourierFunction& g, const FourierFunction& h)
{
    const int n = std::min(g.order(), h.order());
    Complex s = 0.0;
    for (int k = 1; k <= n; ++k)
        s += static_cast< Real >(k) * (g.coeff(-k) * h.coeff(k) - g.coeff(k) * h.coeff(-k));
    return I * s;
}
} // namespace weldlab
