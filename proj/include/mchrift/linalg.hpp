#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mchrift/common.hpp"

namespace mchrift {

// Dense complex solve by partial-pivot Gaussian elimination. A is n x n
// row-major and is destroyed. Returns x with A x = b. Also reports a cheap
// conditioning proxy (max/min pivot magnitude) through *pivot_ratio if given.
inline std::vector<cx> solve_dense(std::vector<cx> A, std::vector<cx> b,
                                   double* pivot_ratio = nullptr) {
    const std::size_t n = b.size();
    if (A.size() != n * n) throw numeric_error("solve_dense: shape mismatch");
    double pmax = 0.0, pmin = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        double best = std::abs(A[c * n + c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            double v = std::abs(A[r * n + c]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) throw numeric_error("solve_dense: singular system");
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(A[c * n + k], A[piv * n + k]);
            std::swap(b[c], b[piv]);
        }
        pmax = std::max(pmax, best);
        pmin = (c == 0) ? best : std::min(pmin, best);
        const cx d = A[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            cx f = A[r * n + c] / d;
            if (f == cx{}) continue;
            A[r * n + c] = 0.0;
            for (std::size_t k = c + 1; k < n; ++k) A[r * n + k] -= f * A[c * n + k];
            b[r] -= f * b[c];
        }
    }
    std::vector<cx> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        cx s = b[ri];
        for (std::size_t k = ri + 1; k < n; ++k) s -= A[ri * n + k] * x[k];
        x[ri] = s / A[ri * n + ri];
    }
    if (pivot_ratio) *pivot_ratio = (pmin > 0.0) ? pmax / pmin : 1e300;
    return x;
}

}  // namespace mchrift
