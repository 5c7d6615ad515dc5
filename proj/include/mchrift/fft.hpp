#pragma once

#include <vector>

#include "mchrift/common.hpp"

namespace mchrift {

// Iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse (inverse is
// normalized by 1/N). Sizes must be powers of two; grids in this project are.
inline void fft_inplace(std::vector<cx>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw numeric_error("fft: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / double(len);
        const cx wl{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            cx w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                cx u = a[i + k];
                cx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (sign > 0) {
        const double inv = 1.0 / double(n);
        for (auto& z : a) z *= inv;
    }
}

// FFT wavenumbers for a periodic domain of total width 2*half_width
inline std::vector<double> fft_wavenumbers(std::size_t n, double half_width) {
    std::vector<double> k(n);
    const double dk = pi / half_width;
    for (std::size_t j = 0; j < n; ++j) {
        double m = (j <= n / 2) ? double(j) : double(j) - double(n);
        k[j] = dk * m;
    }
    return k;
}

}  // namespace mchrift
