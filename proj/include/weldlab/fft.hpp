#ifndef WELDLAB_FFT_HPP
#define WELDLAB_FFT_HPP

#include "weldlab/common.hpp"

#include <unsupported/Eigen/FFT>

namespace weldlab
{
/// Fourier modes of equispaced samples x_j = f(2 pi j / M).
/// Entry k holds mode k for 0 <= k < M/2 and mode k - M above.
inline VectorXcd fft_modes(const VectorXcd& samples)
{
    Eigen::FFT< Real > fft;
    VectorXcd out(samples.size());
    fft.fwd(out, samples);
    return out / static_cast< Real >(samples.size());
}

/// Inverse of fft_modes.
inline VectorXcd fft_samples(const VectorXcd& modes)
{
    Eigen::FFT< Real > fft;
    VectorXcd out(modes.size());
    fft.inv(out, modes);
    return out * static_cast< Real >(modes.size());
}

inline Complex mode_at(const VectorXcd& modes, int k)
{
    const auto m = static_cast< int >(modes.size());
    return modes[((k % m) + m) % m];
}

inline void set_mode(VectorXcd& modes, int k, Complex v)
{
    const auto m = static_cast< int >(modes.size());
    modes[((k % m) + m) % m] = v;
}

inline int next_pow2(int n)
{
    int p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

inline VectorXd uniform_angles(int m)
{
    VectorXd t(m);
    for (int j = 0; j < m; ++j)
        t[j] = two_pi * j / m;
    return t;
}
} // namespace weldlab

#endif // WELDLAB_FFT_HPP
