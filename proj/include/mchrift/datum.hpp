#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mchrift/common.hpp"
#include "mchrift/fft.hpp"

namespace mchrift {

enum class DatumKind { zero, gaussian, sech, table };

struct DatumSpec {
    DatumKind kind = DatumKind::zero;
    double A = 0.0;
    double w = 1.0;
    std::string path;  // table only
};

// Initial profile on [-L, L] with the derived fields used by the scattering
// side. The analytic closures (fu0, fm0, fm0x) are what the adaptive Jost
// integrator samples; the arrays are the exported grid view.
struct InitialDatum {
    double L = 0.0;
    int N = 0;
    std::vector<double> xs, u0, m0, q, c_minus, c_plus;
    std::function<double(double)> fu0, fm0, fm0x;
    double p0 = 0.0;    // -int_0^L (q-1)
    double intq = 0.0;  // int_{-L}^{L} (q-1)

    double q_of(double x) const {
        double m = fm0(x);
        return std::sqrt(m * m + 1.0);
    }
};

namespace detail {

// natural cubic spline for tabulated data
struct CubicSpline {
    std::vector<double> x, y, y2;

    void build(std::vector<double> xi, std::vector<double> yi) {
        x = std::move(xi);
        y = std::move(yi);
        const std::size_t n = x.size();
        y2.assign(n, 0.0);
        std::vector<double> u(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
            double p = sig * y2[i - 1] + 2.0;
            y2[i] = (sig - 1.0) / p;
            u[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) - (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
            u[i] = (6.0 * u[i] / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
        }
        for (std::size_t i = n - 1; i-- > 0;) y2[i] = y2[i] * y2[i + 1] + u[i];
    }

    double eval(double xq, int deriv = 0) const {
        auto it = std::upper_bound(x.begin(), x.end(), xq);
        std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - x.begin(), 1), x.size() - 1);
        std::size_t lo = hi - 1;
        double h = x[hi] - x[lo];
        double a = (x[hi] - xq) / h, b = (xq - x[lo]) / h;
        if (deriv == 0)
            return a * y[lo] + b * y[hi] +
                   ((a * a * a - a) * y2[lo] + (b * b * b - b) * y2[hi]) * h * h / 6.0;
        if (deriv == 1)
            return (y[hi] - y[lo]) / h -
                   (3.0 * a * a - 1.0) / 6.0 * h * y2[lo] + (3.0 * b * b - 1.0) / 6.0 * h * y2[hi];
        return a * y2[lo] + b * y2[hi];  // second derivative
    }
};

inline double simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                               int depth, double fa, double fm, double fb, double whole,
                               double tol) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_adaptive(f, a, m, depth - 1, fa, flm, fm, left, tol / 2) +
           simpson_adaptive(f, m, b, depth - 1, fm, frm, fb, right, tol / 2);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_adaptive(f, a, b, 40, fa, fm, fb, whole, tol);
}

}  // namespace detail

inline InitialDatum build_initial_datum(const DatumSpec& spec, double L, int N) {
    if (N < 256 || (N & (N - 1)) != 0)
        throw numeric_error("build_initial_datum: N must be a power of two >= 256");
    InitialDatum d;
    d.L = L;
    d.N = N;

    switch (spec.kind) {
        case DatumKind::zero: {
            d.fu0 = [](double) { return 0.0; };
            d.fm0 = [](double) { return 0.0; };
            d.fm0x = [](double) { return 0.0; };
            break;
        }
        case DatumKind::gaussian: {
            double A = spec.A, w = spec.w;
            d.fu0 = [A, w](double x) { return A * std::exp(-(x / w) * (x / w)); };
            d.fm0 = [A, w](double x) {
                double u = A * std::exp(-(x / w) * (x / w));
                return u * (1.0 + 2.0 / (w * w) - 4.0 * x * x / (w * w * w * w));
            };
            d.fm0x = [A, w](double x) {
                double u = A * std::exp(-(x / w) * (x / w));
                double poly = 1.0 + 2.0 / (w * w) - 4.0 * x * x / (w * w * w * w);
                return u * (-2.0 * x / (w * w)) * poly + u * (-8.0 * x / (w * w * w * w));
            };
            break;
        }
        case DatumKind::sech: {
            double A = spec.A, w = spec.w;
            // u = A sech(x/w); u_xx = (A/w^2)(sech - 2 sech^3)
            d.fu0 = [A, w](double x) { return A / std::cosh(x / w); };
            d.fm0 = [A, w](double x) {
                double s = 1.0 / std::cosh(x / w);
                return A * s * (1.0 - 1.0 / (w * w)) + (2.0 * A / (w * w)) * s * s * s;
            };
            d.fm0x = [A, w](double x) {
                double s = 1.0 / std::cosh(x / w);
                double th = std::tanh(x / w);
                return (-th / w) * s * (A * (1.0 - 1.0 / (w * w)) + (6.0 * A / (w * w)) * s * s);
            };
            break;
        }
        case DatumKind::table: {
            std::ifstream in(spec.path);
            if (!in) throw numeric_error("build_initial_datum: cannot open " + spec.path);
            std::vector<double> tx, tu;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
                std::istringstream ss(line);
                double xv, uv;
                char comma;
                if (ss >> xv >> comma >> uv) {
                    if (!tx.empty() && xv <= tx.back())
                        throw numeric_error("build_initial_datum: table x not strictly increasing");
                    tx.push_back(xv);
                    tu.push_back(uv);
                }
            }
            if (tx.size() < 8) throw numeric_error("build_initial_datum: table too short");
            auto su = std::make_shared<detail::CubicSpline>();
            su->build(tx, tu);
            double lo = tx.front(), hi = tx.back();
            auto clampx = [lo, hi](double x) { return std::min(std::max(x, lo), hi); };
            d.fu0 = [su, clampx](double x) { return su->eval(clampx(x)); };
            d.fm0 = [su, clampx](double x) {
                double xc = clampx(x);
                return su->eval(xc) - su->eval(xc, 2);
            };
            d.fm0x = [su, clampx](double x) {
                // m' = u' - u'''; third derivative of a cubic spline is the
                // piecewise-constant slope of y2, use a small central difference
                double h = 1e-4;
                double xm = clampx(x - h), xp = clampx(x + h);
                double mp = (su->eval(xp) - su->eval(xp, 2)) - (su->eval(xm) - su->eval(xm, 2));
                return mp / (xp - xm);
            };
            break;
        }
    }

    // boundary decay check
    double bmag = std::max(std::abs(d.fu0(-L)), std::abs(d.fu0(L)));
    if (spec.kind != DatumKind::zero && bmag > 1e-10)
        throw numeric_error("build_initial_datum: datum not decayed at +-L, |u0| = " +
                            std::to_string(bmag));

    d.xs.resize(N);
    d.u0.resize(N);
    d.q.resize(N);
    const double dx = 2.0 * L / N;
    for (int i = 0; i < N; ++i) {
        d.xs[i] = -L + i * dx;
        d.u0[i] = d.fu0(d.xs[i]);
        if (!is_finite(d.u0[i])) throw numeric_error("build_initial_datum: non-finite sample");
    }

    // m0 by spectral differentiation of the periodic extension
    {
        std::vector<cx> uh(d.u0.begin(), d.u0.end());
        fft_inplace(uh, -1);
        auto k = fft_wavenumbers(N, L);
        for (int i = 0; i < N; ++i) uh[i] *= (1.0 + k[i] * k[i]);
        fft_inplace(uh, +1);
        d.m0.resize(N);
        for (int i = 0; i < N; ++i) {
            d.m0[i] = uh[i].real();
            d.q[i] = std::sqrt(d.m0[i] * d.m0[i] + 1.0);
        }
    }

    // cumulative trapezoid of q-1 from each end
    d.c_minus.assign(N, 0.0);
    d.c_plus.assign(N, 0.0);
    for (int i = 1; i < N; ++i)
        d.c_minus[i] = d.c_minus[i - 1] + 0.5 * dx * ((d.q[i - 1] - 1.0) + (d.q[i] - 1.0));
    for (int i = N - 2; i >= 0; --i)
        d.c_plus[i] = d.c_plus[i + 1] + 0.5 * dx * ((d.q[i] - 1.0) + (d.q[i + 1] - 1.0));

    auto qm1 = [&d](double x) { return d.q_of(x) - 1.0; };
    d.p0 = -detail::integrate(qm1, 0.0, L);
    d.intq = detail::integrate(qm1, -L, L);
    return d;
}

}  // namespace mchrift
