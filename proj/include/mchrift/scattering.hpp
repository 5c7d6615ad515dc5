#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mchrift/common.hpp"
#include "mchrift/datum.hpp"
#include "mchrift/ode.hpp"

namespace mchrift {

struct SpectralSample {
    double z = 0.0;
    cx a{}, b{}, r{};
};

struct DiscreteEigen {
    cx zeta{};  // upper half plane
    cx C{};     // norming constant (user supplied)
};

struct ScatteringData {
    std::vector<SpectralSample> samples;
    std::vector<DiscreteEigen> eigens;
};

// zero-order coefficient of the transformed spatial Lax equation
inline Mat2 lax_pmat(const InitialDatum& d, double x, cx z) {
    const double m = d.fm0(x);
    const double mx = d.fm0x(x);
    const double q = std::sqrt(m * m + 1.0);
    const cx s1f = I * mx / (2.0 * q * q);
    const cx bf = m / (2.0 * z * q);
    // s1f*sigma1 + bf*[[-im, 1], [-1, im]]
    return {bf * cx(0.0, -m), s1f + bf,
            s1f - bf, bf * cx(0.0, m)};
}

// Fundamental solutions normalized to I at the decayed ends, integrated to a
// common matching abscissa (default x = 0). Phase-conjugated form: the
// oscillation enters only through the off-diagonal commutator term, so the
// matrices stay O(1) on the real axis.
inline std::pair<Mat2, Mat2> jost_integrate(const InitialDatum& d, cx z,
                                            double x_match = 0.0, double rtol = 1e-10) {
    if (std::abs(z) < 1e-6) throw numeric_error("jost_integrate: |z| below guard radius");
    const cx kfac = -0.25 * I * (z - 1.0 / z);
    auto rhs = [&](double x, const std::vector<cx>& y, std::vector<cx>& dy) {
        const double q = d.q_of(x);
        const Mat2 mu{y[0], y[1], y[2], y[3]};
        const Mat2 P = lax_pmat(d, x, z);
        const Mat2 comm{0.0, 2.0 * mu.a12, -2.0 * mu.a21, 0.0};
        const Mat2 r = kfac * q * comm + P * mu;
        dy = {r.a11, r.a12, r.a21, r.a22};
    };
    std::vector<cx> ym = {1.0, 0.0, 0.0, 1.0};
    dp54_integrate(rhs, -d.L, x_match, ym, rtol, 1e-12);
    std::vector<cx> yp = {1.0, 0.0, 0.0, 1.0};
    dp54_integrate(rhs, d.L, x_match, yp, rtol, 1e-12);
    return {Mat2{ym[0], ym[1], ym[2], ym[3]}, Mat2{yp[0], yp[1], yp[2], yp[3]}};
}

inline SpectralSample scattering_pair(const InitialDatum& d, double z, double rtol = 1e-10) {
    if (std::abs(z) < 1e-3) throw numeric_error("scattering_pair: |z| below guard radius");
    auto [mum, mup] = jost_integrate(d, z, 0.0, rtol);
    const Mat2 W = mup.inv() * mum;
    SpectralSample s;
    s.z = z;
    s.a = W.a11;
    s.b = W.a21 * std::exp(-0.5 * I * (z - 1.0 / z) * d.p0);
    s.r = (std::abs(s.a) > 1e-10) ? s.b / s.a : cx{};
    return s;
}

inline ScatteringData reflection_grid(const InitialDatum& d, const std::vector<double>& grid) {
    ScatteringData out;
    out.samples.reserve(grid.size());
    for (double z : grid) {
        if (std::abs(z) < 1e-3) continue;
        out.samples.push_back(scattering_pair(d, z));
    }
    return out;
}

// a(z) for z off the real axis (upper half plane) by the stable column
// formulation: column 1 of mu_- forward, column 2 of mu_+ backward, with only
// the decaying exponential retained in each.
inline cx a_direct(const InitialDatum& d, cx z, double rtol = 1e-11) {
    if (std::abs(z) < 1e-6) throw numeric_error("a_direct: |z| below guard radius");
    const cx kk = 0.5 * I * (z - 1.0 / z);
    auto rhs1 = [&](double x, const std::vector<cx>& c, std::vector<cx>& dc) {
        const double q = d.q_of(x);
        const Mat2 P = lax_pmat(d, x, z);
        dc = {P.a11 * c[0] + P.a12 * c[1],
              kk * q * c[1] + P.a21 * c[0] + P.a22 * c[1]};
    };
    auto rhs2 = [&](double x, const std::vector<cx>& c, std::vector<cx>& dc) {
        const double q = d.q_of(x);
        const Mat2 P = lax_pmat(d, x, z);
        dc = {-kk * q * c[0] + P.a11 * c[0] + P.a12 * c[1],
              P.a21 * c[0] + P.a22 * c[1]};
    };
    std::vector<cx> c1 = {1.0, 0.0};
    dp54_integrate(rhs1, -d.L, 0.0, c1, rtol, 1e-13);
    std::vector<cx> c2 = {0.0, 1.0};
    dp54_integrate(rhs2, d.L, 0.0, c2, rtol, 1e-13);
    return c1[0] * c2[1] - c1[1] * c2[0];
}

// a(z) from its zeros and the reflection modulus:
// a(z) = prod (z - zeta_j)/(z - conj(zeta_j)) * exp{ -(1/2pi i) int log(1+|r|^2)/(s-z) ds }
inline cx trace_formula_eval(const ScatteringData& data, cx z) {
    if (std::abs(z.imag()) < 1e-12) throw numeric_error("trace_formula_eval: z must be off-axis");
    cx prod = 1.0;
    for (const auto& e : data.eigens) {
        if (std::abs(z - std::conj(e.zeta)) < 1e-6)
            throw numeric_error("trace_formula_eval: z at a pole");
        prod *= (z - e.zeta) / (z - std::conj(e.zeta));
    }
    cx integral = 0.0;
    const auto& smp = data.samples;
    for (std::size_t i = 0; i + 1 < smp.size(); ++i) {
        const double s0 = smp[i].z, s1 = smp[i + 1].z;
        const double f0 = std::log1p(std::norm(smp[i].r));
        const double f1 = std::log1p(std::norm(smp[i + 1].r));
        integral += 0.5 * (s1 - s0) * (f0 / (s0 - z) + f1 / (s1 - z));
    }
    return prod * std::exp(-integral / (2.0 * pi * I));
}

struct SymmetryAudit {
    double unitarity = 0.0;    // max | |a|^2+|b|^2 - 1 |
    double sym_recip = 0.0;    // max | r(z) - conj(r(1/z)) |
    double sym_neg_recip = 0.0;// max | r(z) + r(-1/z) |
    double sym_neg = 0.0;      // max | r(z) + conj(r(-z)) |
};

// Audits the grid against fresh scattering solves at the reflected abscissas.
inline SymmetryAudit symmetry_audit(const InitialDatum& d, const ScatteringData& data) {
    SymmetryAudit a;
    for (const auto& s : data.samples) {
        a.unitarity = std::max(a.unitarity,
                               std::abs(std::norm(s.a) + std::norm(s.b) - 1.0));
        const double zr = 1.0 / s.z;
        const cx r_recip = scattering_pair(d, zr).r;
        const cx r_nrecip = scattering_pair(d, -zr).r;
        // r(-z): symmetric grids carry it, fall back to a solve if absent
        cx r_neg{};
        bool found = false;
        for (const auto& o : data.samples)
            if (std::abs(o.z + s.z) < 1e-12) { r_neg = o.r; found = true; break; }
        if (!found) r_neg = scattering_pair(d, -s.z).r;
        a.sym_recip = std::max(a.sym_recip, std::abs(s.r - std::conj(r_recip)));
        a.sym_neg_recip = std::max(a.sym_neg_recip, std::abs(s.r + r_nrecip));
        a.sym_neg = std::max(a.sym_neg, std::abs(s.r + std::conj(r_neg)));
    }
    return a;
}

// pure grid report (no new solves): unitarity and the r(z) vs -conj(r(-z))
// relation only, the reciprocal relations need off-grid values
inline SymmetryAudit symmetry_audit(const ScatteringData& data) {
    SymmetryAudit a;
    for (const auto& s : data.samples) {
        a.unitarity = std::max(a.unitarity,
                               std::abs(std::norm(s.a) + std::norm(s.b) - 1.0));
        for (const auto& o : data.samples)
            if (std::abs(o.z + s.z) < 1e-12)
                a.sym_neg = std::max(a.sym_neg, std::abs(s.r + std::conj(o.r)));
    }
    return a;
}

// Argument-principle zero search for a user-supplied analytic function on a
// rectangle in the upper half plane, with local polishing.
struct SearchBox {
    double re_lo, re_hi, im_lo, im_hi;
};

namespace detail {

inline int winding_number(const std::function<cx(cx)>& f, const SearchBox& b, int per_side) {
    std::vector<cx> pts;
    pts.reserve(4 * per_side);
    for (int i = 0; i < per_side; ++i)
        pts.push_back({b.re_lo + (b.re_hi - b.re_lo) * i / per_side, b.im_lo});
    for (int i = 0; i < per_side; ++i)
        pts.push_back({b.re_hi, b.im_lo + (b.im_hi - b.im_lo) * i / per_side});
    for (int i = 0; i < per_side; ++i)
        pts.push_back({b.re_hi - (b.re_hi - b.re_lo) * i / per_side, b.im_hi});
    for (int i = 0; i < per_side; ++i)
        pts.push_back({b.re_lo, b.im_hi - (b.im_hi - b.im_lo) * i / per_side});
    double total = 0.0;
    cx prev = f(pts[0]);
    for (std::size_t i = 1; i <= pts.size(); ++i) {
        cx cur = f(pts[i % pts.size()]);
        total += std::arg(cur / prev);
        prev = cur;
    }
    return (int)std::lround(total / (2.0 * pi));
}

inline cx polish_root(const std::function<cx(cx)>& f, cx z0, int iters = 60) {
    cx z = z0;
    for (int it = 0; it < iters; ++it) {
        const double h = 1e-6 * std::max(1.0, std::abs(z));
        cx df = (f(z + h) - f(z - h)) / (2.0 * h);
        if (std::abs(df) < 1e-300) break;
        cx step = f(z) / df;
        z -= step;
        if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

inline void subdivide_search(const std::function<cx(cx)>& f, const SearchBox& b, int depth,
                             std::vector<cx>& roots) {
    int w = winding_number(f, b, 24);
    if (w == 0) return;
    const double tiny = 1e-4;
    if ((b.re_hi - b.re_lo < tiny && b.im_hi - b.im_lo < tiny) || depth <= 0) {
        cx guess{0.5 * (b.re_lo + b.re_hi), 0.5 * (b.im_lo + b.im_hi)};
        cx r = polish_root(f, guess);
        if (std::abs(f(r)) < 1e-8) roots.push_back(r);
        return;
    }
    double rm = 0.5 * (b.re_lo + b.re_hi), im = 0.5 * (b.im_lo + b.im_hi);
    subdivide_search(f, {b.re_lo, rm, b.im_lo, im}, depth - 1, roots);
    subdivide_search(f, {rm, b.re_hi, b.im_lo, im}, depth - 1, roots);
    subdivide_search(f, {b.re_lo, rm, im, b.im_hi}, depth - 1, roots);
    subdivide_search(f, {rm, b.re_hi, im, b.im_hi}, depth - 1, roots);
}

}  // namespace detail

inline std::vector<DiscreteEigen> locate_discrete_spectrum(const std::function<cx(cx)>& a,
                                                           const SearchBox& box) {
    if (box.im_lo <= 0.0)
        throw numeric_error("locate_discrete_spectrum: box must lie in the upper half plane");
    std::vector<cx> roots;
    detail::subdivide_search(a, box, 18, roots);
    // dedupe
    std::vector<DiscreteEigen> out;
    for (cx r : roots) {
        bool dup = false;
        for (const auto& e : out)
            if (std::abs(e.zeta - r) < 1e-7) { dup = true; break; }
        if (!dup) out.push_back({r, cx{}});
    }
    return out;
}

inline std::vector<DiscreteEigen> locate_discrete_spectrum(const InitialDatum& d,
                                                           const SearchBox& box) {
    return locate_discrete_spectrum([&d](cx z) { return a_direct(d, z); }, box);
}

}  // namespace mchrift
