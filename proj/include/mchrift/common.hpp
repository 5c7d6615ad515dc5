#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mchrift {

using cx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr cx I{0.0, 1.0};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2x2 complex matrix, the workhorse of the Lax/RH side.
struct Mat2 {
    cx a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator*(cx s) const { return {s * a11, s * a12, s * a21, s * a22}; }
    friend Mat2 operator*(cx s, const Mat2& m) { return m * s; }

    cx det() const { return a11 * a22 - a12 * a21; }
    cx trace() const { return a11 + a22; }
    cx entry_sum() const { return a11 + a12 + a21 + a22; }

    Mat2 inv() const {
        cx d = det();
        if (std::abs(d) < 1e-300) throw numeric_error("Mat2::inv: singular matrix");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

// phase of the oscillatory jump, written in the (y,t) variables:
// t*theta(z) = -(1/4)(z - 1/z) (y - 8t/(z + 1/z)^2)
inline cx t_theta(cx z, double y, double t) {
    cx w = z + 1.0 / z;
    return -0.25 * (z - 1.0 / z) * (y - 8.0 * t / (w * w));
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// trapezoid rule on a uniform or non-uniform grid
inline double trapezoid(const std::vector<double>& x, const std::vector<double>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
    return s;
}

inline cx trapezoid_cx(const std::vector<double>& x, const std::vector<cx>& f) {
    cx s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
    return s;
}

}  // namespace mchrift
