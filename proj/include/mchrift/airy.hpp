#pragma once

#include <boost/math/special_functions/airy.hpp>
#include <cmath>

#include "mchrift/common.hpp"

namespace mchrift {

namespace detail {

// Maclaurin series near the origin, accumulated in long double. Both the
// classical f/g basis functions and their derivatives share term recurrences.
inline void airy_series(double s, double& ai, double& aip) {
    const long double c1 = 0.35502805388781723926L;   // Ai(0)
    const long double c2 = 0.25881940379280679841L;   // -Ai'(0)
    const long double x = s;
    if (std::abs(s) < 1e-300) { ai = (double)c1; aip = (double)(-c2); return; }
    const long double x3 = x * x * x;
    long double f = 1.0L, fp = 0.0L;       // f = sum x^{3k}/..., fp = f'
    long double g = x, gp = 1.0L;          // g = sum x^{3k+1}/...
    long double tf = 1.0L, tg = x;
    for (int k = 0; k < 40; ++k) {
        const long double kf = 3.0L * k;
        tf *= x3 / ((kf + 2.0L) * (kf + 3.0L));
        tg *= x3 / ((kf + 3.0L) * (kf + 4.0L));
        f += tf;
        g += tg;
        fp += tf * (kf + 3.0L) / x;        // d/dx of x^{3k+3} term
        gp += tg * (kf + 4.0L) / x;
        if (std::abs((double)tf) < 1e-20 && std::abs((double)tg) < 1e-20) break;
    }
    ai = (double)(c1 * f - c2 * g);
    aip = (double)(c1 * fp - c2 * gp);
}

}  // namespace detail

// Ai(s) and Ai'(s) for real s, |s| <= 30. Series near the origin, Boost's
// Bessel-based evaluation on the branches; the two agree to ~1e-12 at the
// seam (checked in the test suite).
inline std::pair<double, double> airy_ai(double s) {
    if (!std::isfinite(s)) throw numeric_error("airy_ai: non-finite argument");
    if (std::abs(s) > 30.0) throw numeric_error("airy_ai: |s| > 30 outside supported range");
    if (std::abs(s) <= 4.5) {
        double ai, aip;
        detail::airy_series(s, ai, aip);
        return {ai, aip};
    }
    return {boost::math::airy_ai(s), boost::math::airy_ai_prime(s)};
}

}  // namespace mchrift
