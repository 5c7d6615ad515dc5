#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "mchrift/common.hpp"

namespace mchrift {

// Dormand-Prince 5(4) with standard PI-free step control. State is a small
// complex vector; rhs signature f(t, y, dydt). Integrates from t0 to t1
// (either direction). Throws on step-size underflow.
template <class F>
inline void dp54_integrate(F&& f, double t0, double t1, std::vector<cx>& y,
                           double rtol = 1e-10, double atol = 1e-12,
                           std::size_t max_steps = 2000000) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const std::size_t n = y.size();
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return;

    std::vector<cx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);
    double t = t0;
    double h = dir * std::min(span, 1e-2 * span + 1e-4);
    f(t, y, k1);

    for (std::size_t step = 0; step < max_steps; ++step) {
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + h, yt, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = std::abs(e) / sc;
            err = std::max(err, r);
        }
        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            if (dir * (t1 - t) <= 0.0 || std::abs(t1 - t) < 1e-14 * span) return;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        h *= fac;
        if (std::abs(h) < 1e-14 * span)
            throw numeric_error("dp54: step size underflow at t=" + std::to_string(t));
    }
    throw numeric_error("dp54: max step count exceeded");
}

// Classical fixed-step RK4 with a per-step observer (used by the Painleve
// integration which wants values on a uniform grid).
template <class F, class Obs>
inline void rk4_fixed(F&& f, double t0, double t1, std::vector<double>& y,
                      std::size_t nsteps, Obs&& obs) {
    const std::size_t n = y.size();
    const double h = (t1 - t0) / double(nsteps);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), yt(n);
    obs(t0, y);
    double t = t0;
    for (std::size_t s = 0; s < nsteps; ++s) {
        f(t, y, k1);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + 0.5 * h * k1[i];
        f(t + 0.5 * h, yt, k2);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + 0.5 * h * k2[i];
        f(t + 0.5 * h, yt, k3);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * k3[i];
        f(t + h, yt, k4);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + double(s + 1) * h;
        obs(t, y);
    }
}

}  // namespace mchrift
