#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "mchrift/common.hpp"
#include "mchrift/painleve2.hpp"
#include "mchrift/scattering.hpp"
#include "mchrift/soliton.hpp"

namespace mchrift {

enum class Region { none, P1, P2 };
enum class Scaling { corrected, paper };
enum class Boundary { none, plus, minus };

// the two transition wedges around the fan edges x/t = 2 and x/t = -1/4
inline Region classify_region(double x, double t, double C_cap) {
    if (t <= 0.0) throw numeric_error("classify_region: t must be positive");
    const double sc = std::pow(t, 2.0 / 3.0);
    const bool p1 = std::abs(x / t - 2.0) * sc <= C_cap;
    const bool p2 = std::abs(x / t + 0.25) * sc <= C_cap;
    if (p1 && p2) throw numeric_error("classify_region: ambiguous membership");
    if (p1) return Region::P1;
    if (p2) return Region::P2;
    return Region::none;
}

// theta(z; xi) = -(1/4)(z - 1/z)(xi - 8/(z + 1/z)^2)
inline cx theta_eval(double xi, cx z) {
    if (std::abs(z) < 1e-9) throw numeric_error("theta_eval: z too close to 0");
    if (std::abs(z - I) < 1e-9 || std::abs(z + I) < 1e-9)
        throw numeric_error("theta_eval: z too close to +-i");
    const cx w = z + 1.0 / z;
    return -0.25 * (z - 1.0 / z) * (xi - 8.0 / (w * w));
}

struct StationarySet {
    Region region = Region::none;
    std::vector<double> points;  // 4 in P1 (z1..z4), 8 in P2 (z1..z8)
    double s_plus = 0.0, s_minus = 0.0;
};

inline StationarySet stationary_points(double xi, Region region) {
    if (1.0 + 4.0 * xi < 0.0) throw numeric_error("stationary_points: negative discriminant");
    StationarySet st;
    st.region = region;
    const double root = std::sqrt(1.0 + 4.0 * xi);
    auto s_branch = [&](double sign) {
        if (std::abs(xi) < 1e-14) throw numeric_error("stationary_points: xi = 0");
        return (-xi - 1.0 + sign * root) / (4.0 * xi);
    };
    auto z_of = [](double s) {
        const double sq = std::sqrt(std::max(s, 0.0));
        const double rt = std::sqrt(4.0 * std::max(s, 0.0) + 1.0);
        return std::array<double, 2>{2.0 * sq + rt, -2.0 * sq + rt};
    };
    if (region == Region::P1) {
        st.s_plus = std::max(s_branch(+1.0), 0.0);
        auto [z1, z2] = std::array<double, 2>(z_of(st.s_plus));
        st.points = {z1, z2, -z2, -z1};  // z3 = -z2, z4 = -z1
    } else if (region == Region::P2) {
        st.s_plus = s_branch(+1.0);
        st.s_minus = s_branch(-1.0);
        auto [z1, z4] = std::array<double, 2>(z_of(st.s_plus));
        auto [z2, z3] = std::array<double, 2>(z_of(st.s_minus));
        st.points = {z1, z2, z3, z4, -z4, -z3, -z2, -z1};
    } else {
        throw numeric_error("stationary_points: region must be P1 or P2");
    }
    return st;
}

// partial transmission function
// T(z) = prod_{n in Delta} (z - zeta_n)/(zeta_n_bar^{-1} z - 1)
//        * exp{ -(1/2pi i) int_{I(xi)} log(1+|r(s)|^2)/(s-z) ds }
// with I(xi) empty in region I and all of R in region II.
struct TFunctionContext {
    std::vector<DiscreteEigen> delta;
    const ScatteringData* rgrid = nullptr;  // needed in region II
    Region region = Region::P1;
};

namespace detail {

// 4-point Lagrange interpolation of r on the sample grid. Inside the unit
// circle the grid under-resolves r (features near 1/z compress by 1/z^2), so
// lean on the exact reciprocal symmetry r(z) = conj(r(1/z)) there.
inline cx interp_r(const ScatteringData& data, double z) {
    const auto& s = data.samples;
    if (s.size() < 4) throw numeric_error("interp_r: grid too small");
    if (std::abs(z) < 0.9 && std::abs(z) > 1e-12) {
        const double zr = 1.0 / z;
        if (zr >= s.front().z && zr <= s.back().z) return std::conj(interp_r(data, zr));
    }
    std::size_t hi = 0;
    while (hi < s.size() && s[hi].z < z) ++hi;
    std::size_t i0 = (hi >= 2) ? hi - 2 : 0;
    if (i0 + 3 >= s.size()) i0 = s.size() - 4;
    cx acc = 0.0;
    for (std::size_t j = i0; j < i0 + 4; ++j) {
        double lj = 1.0;
        for (std::size_t k = i0; k < i0 + 4; ++k)
            if (k != j) lj *= (z - s[k].z) / (s[j].z - s[k].z);
        acc += lj * s[j].r;
    }
    return acc;
}

// Cauchy integral int lg(s)/(s-z) ds of the piecewise-linear interpolant of
// lg = log(1+|r|^2), in closed form per segment. Exact for the interpolant at
// any distance from the axis, so it remains accurate for |Im z| far below the
// grid step (plain quadrature would need |Im z| >> h).
inline cx cauchy_log_integral(const ScatteringData& data, cx z) {
    if (std::abs(z.imag()) < 1e-14)
        throw numeric_error("cauchy_log_integral: z must be off the real axis");
    const auto& smp = data.samples;
    cx acc = 0.0;
    for (std::size_t i = 0; i + 1 < smp.size(); ++i) {
        const double s0 = smp[i].z, s1 = smp[i + 1].z;
        const double f0 = std::log1p(std::norm(smp[i].r));
        const double f1 = std::log1p(std::norm(smp[i + 1].r));
        const double slope = (f1 - f0) / (s1 - s0);
        // f(s) = slope (s - z) + f0 + slope (z - s0)
        const cx l = std::log(s1 - z) - std::log(s0 - z);
        acc += slope * (s1 - s0) + (f0 + slope * (z - s0)) * l;
    }
    return acc;
}

}  // namespace detail

inline cx t_function(const TFunctionContext& ctx, cx z, Boundary boundary = Boundary::none) {
    cx prod = 1.0;
    for (const auto& e : ctx.delta) {
        const cx den = z / std::conj(e.zeta) - 1.0;
        if (std::abs(z - e.zeta) < 1e-8 || std::abs(den) < 1e-8)
            throw numeric_error("t_function: z at a product zero/pole");
        prod *= (z - e.zeta) / den;
    }
    if (ctx.region != Region::P2) return prod;
    if (!ctx.rgrid || ctx.rgrid->samples.size() < 4)
        throw numeric_error("t_function: region II requires a reflection grid");

    cx expo = 0.0;
    if (boundary == Boundary::none) {
        expo = -detail::cauchy_log_integral(*ctx.rgrid, z) / (2.0 * pi * I);
    } else {
        // real z: principal value plus the Plemelj half-jump. The PV is the real
        // part of the closed-form off-axis integral in the limit, which is exact
        // for the interpolant, so a tiny offset suffices.
        const double zr = z.real();
        const double lg0 = std::log1p(std::norm(detail::interp_r(*ctx.rgrid, zr)));
        const double pv = detail::cauchy_log_integral(*ctx.rgrid, cx(zr, 1e-9)).real();
        const double half = (boundary == Boundary::plus) ? 1.0 : -1.0;
        expo = -(pv + half * I * pi * lg0) / (2.0 * pi * I);
    }
    return prod * std::exp(expo);
}

// I0 = (1/2pi i) int log(1+|r(s)|^2)/(s-i)^2 ds (region II coordinate-shift datum)
inline cx i0_integral(const ScatteringData& data) {
    cx acc = 0.0;
    const auto& smp = data.samples;
    for (std::size_t i = 0; i + 1 < smp.size(); ++i) {
        const double s0 = smp[i].z, s1 = smp[i + 1].z;
        const cx d0 = (s0 - I) * (s0 - I), d1 = (s1 - I) * (s1 - I);
        acc += 0.5 * (s1 - s0) *
               (std::log1p(std::norm(smp[i].r)) / d0 + std::log1p(std::norm(smp[i + 1].r)) / d1);
    }
    return acc / (2.0 * pi * I);
}

// merge points of region II in the order (a, b, c, d)
inline std::array<double, 4> p2_merge_points() {
    const double r3 = std::sqrt(3.0);
    return {2.0 + r3, 2.0 - r3, -2.0 + r3, -2.0 - r3};
}

struct PhaseOffsets {
    std::array<double, 4> phi{};  // phi_a..phi_d
    std::array<cx, 4> d{};
    cx I0{};
    double Ti = 1.0;
    bool defined = false;
};

// phi_j = arg d(p_j) + 2 t theta(p_j), d per the region II jump factorization
// d(z) = conj(r) T_+^{-2} / (1 + |r|^2)
inline PhaseOffsets phase_offsets(const ScatteringData& data, double xi, double t,
                                  const TFunctionContext& ctx) {
    PhaseOffsets out;
    out.I0 = i0_integral(data);
    out.Ti = t_function(ctx, I).real();
    const auto pts = p2_merge_points();
    bool any = false;
    for (int j = 0; j < 4; ++j) {
        const cx r = detail::interp_r(data, pts[j]);
        if (std::abs(r) < 1e-12) { out.d[j] = 0.0; continue; }
        const cx Tp = t_function(ctx, cx(pts[j], 0.0), Boundary::plus);
        out.d[j] = std::conj(r) / (Tp * Tp * (1.0 + std::norm(r)));
        double phi = std::arg(out.d[j]) + 2.0 * t * theta_eval(xi, pts[j]).real();
        phi = std::remainder(phi, 2.0 * pi);
        out.phi[j] = phi;
        any = true;
    }
    out.defined = any;
    return out;
}

// local parametrix expansion coefficients
// region I (merge at z = +1 / z = -1): diag (i/2)(-T, +T); off-diagonals carry
// v with the sign pattern of the chosen convention. The verbatim forms have
// antisymmetric off-diagonals (entry sum 0); the corrected forms are
// sigma_1-symmetric, which is what the direct PDE front actually follows.
inline Mat2 local_matrix_p1(double v, double tail, bool at_plus_one, Scaling scaling) {
    const cx ih = 0.5 * I;
    if (scaling == Scaling::paper) {
        return at_plus_one ? Mat2{-ih * tail, ih * v, -ih * v, ih * tail}
                           : Mat2{-ih * tail, -ih * v, ih * v, ih * tail};
    }
    return at_plus_one ? Mat2{-ih * tail, ih * v, ih * v, ih * tail}
                       : Mat2{-ih * tail, -ih * v, -ih * v, ih * tail};
}

// region II (Prop.-4.13-style): (i/2) [[tail, -v e^{i phi}], [v e^{-i phi}, -tail]]
inline Mat2 local_matrix_p2(double v, double tail, double phi) {
    const cx ih = 0.5 * I;
    const cx ph = std::exp(I * phi);
    return {ih * tail, -ih * v * ph, ih * v / ph, -ih * tail};
}

struct CorrectionBundle {
    Region region = Region::none;
    Scaling scaling = Scaling::corrected;
    double s_scaled = 0.0;
    Mat2 A0{}, A1{};  // H^(0)/H^(1) in region I, N^(0)/N^(1) in region II
    cx f11{}, f12{};  // h11/h12 in region II
    PhaseOffsets phases;
};

// conjugation scale factors in front of the local coefficients
inline double p1_prefactor(Scaling scaling) {
    return (scaling == Scaling::paper) ? std::cbrt(2.0 / 9.0) : std::cbrt(4.0 / 3.0);
}

inline std::array<double, 4> p2_prefactors(Scaling scaling) {
    const double r3 = std::sqrt(3.0);
    // scale for merge points +-(2+sqrt3) uses (2-sqrt3)^3 = 26-15 sqrt3 and
    // vice versa; the reciprocal cube root is (2+sqrt3) respectively (2-sqrt3)
    double base = (scaling == Scaling::paper) ? std::cbrt(8.0 / 9.0) : std::cbrt(16.0 / 3.0);
    return {base * (2.0 + r3), base * (2.0 - r3), base * (2.0 - r3), base * (2.0 + r3)};
}

namespace detail {

inline Mat2 conjugate_sum(const std::array<Mat2, 4>& mout, const std::array<Mat2, 4>& local,
                          const std::array<double, 4>& scale, const std::array<cx, 4>& pole,
                          int pow, int count) {
    Mat2 acc{};
    for (int j = 0; j < count; ++j) {
        Mat2 conj = mout[j] * local[j] * mout[j].inv();
        cx den = pole[j] - I;
        if (pow == 2) den *= den;
        acc = acc - scale[j] * (conj * (1.0 / den));
    }
    return acc;
}

}  // namespace detail

// Region I bundle: H^(0)/H^(1) and (f11, f12). mout_plus/minus are
// M_out evaluated at the merge points +-1; ev supplies M_out(i), its (z-i)
// coefficient, u_p and c_plus.
inline CorrectionBundle correction_bundle_p1(double s, const PainleveSolution& sol,
                                             const SolitonEvaluation& ev, double Ti,
                                             const Mat2& mout_plus, const Mat2& mout_minus,
                                             Scaling scaling) {
    CorrectionBundle cb;
    cb.region = Region::P1;
    cb.scaling = scaling;
    cb.s_scaled = s;
    const double v = sol.eval_v(s);
    const double tail = sol.eval_tail(s);
    const double c = p1_prefactor(scaling);
    std::array<Mat2, 4> mo{mout_plus, mout_minus, Mat2{}, Mat2{}};
    std::array<Mat2, 4> loc{local_matrix_p1(v, tail, true, scaling),
                            local_matrix_p1(v, tail, false, scaling), Mat2{}, Mat2{}};
    std::array<double, 4> sc{c, c, 0.0, 0.0};
    std::array<cx, 4> poles{cx(1.0, 0.0), cx(-1.0, 0.0), cx{}, cx{}};
    cb.A0 = detail::conjugate_sum(mo, loc, sc, poles, 1, 2);
    cb.A1 = detail::conjugate_sum(mo, loc, sc, poles, 2, 2);

    const cx g1 = ev.Mout_at_i.a11 + ev.Mout_at_i.a21;
    const cx tfac = Ti * Ti * std::exp(ev.c_plus_out);
    const Mat2& M1 = ev.Mout1_at_i;
    cb.f11 = -ev.u_p * cb.A0.entry_sum() + cb.A1.entry_sum() +
             (cb.A0.a11 + cb.A0.a21) * (M1.a11 + tfac * M1.a12) / g1 +
             (cb.A0.a12 + cb.A0.a22) * (M1.a21 + tfac * M1.a22) / g1;
    cb.f12 = (cb.A0.a11 + cb.A0.a21 - cb.A0.a12 - cb.A0.a22) *
             (ev.Mout_at_i.a21 - ev.Mout_at_i.a11);
    return cb;
}

// Region II bundle: N^(0)/N^(1) and (h11, h12); mout[j] are M_out at the four
// merge points in the order of p2_merge_points().
// flip_cd selects the variant convention that conjugates the phase at the two
// negative merge points; the default keeps one phase pattern at all four.
inline CorrectionBundle correction_bundle_p2(double s, const PainleveSolution& sol,
                                             const SolitonEvaluation& ev,
                                             const PhaseOffsets& phases,
                                             const std::array<Mat2, 4>& mout, Scaling scaling,
                                             bool flip_cd = false) {
    CorrectionBundle cb;
    cb.region = Region::P2;
    cb.scaling = scaling;
    cb.s_scaled = s;
    cb.phases = phases;
    const double v = sol.eval_v(s);
    const double tail = sol.eval_tail(s);
    std::array<Mat2, 4> loc;
    for (int j = 0; j < 4; ++j) {
        const double sgn = (flip_cd && j >= 2) ? -1.0 : 1.0;
        loc[j] = phases.defined ? local_matrix_p2(v, tail, sgn * phases.phi[j])
                                : Mat2{0.5 * I * tail, 0.0, 0.0, -0.5 * I * tail};
    }
    const auto sc = p2_prefactors(scaling);
    const auto pts = p2_merge_points();
    std::array<cx, 4> poles;
    for (int j = 0; j < 4; ++j) poles[j] = cx(pts[j], 0.0);
    cb.A0 = detail::conjugate_sum(mout, loc, sc, poles, 1, 4);
    cb.A1 = detail::conjugate_sum(mout, loc, sc, poles, 2, 4);

    const double Ti = phases.Ti;
    const cx I0 = phases.I0;
    const cx g1 = ev.Mout_at_i.a11 + ev.Mout_at_i.a21;
    const cx ec = std::exp(ev.c_plus_out);
    const cx tfac = Ti * Ti * ec;
    const cx root = Ti * std::exp(0.5 * ev.c_plus_out);
    const Mat2& M0 = ev.Mout_at_i;
    const Mat2& M1 = ev.Mout1_at_i;
    const cx rowA = cb.A0.a11 + cb.A0.a21;
    const cx rowB = cb.A0.a12 + cb.A0.a22;
    cb.f11 = -ev.u_p * cb.A0.entry_sum() + cb.A1.entry_sum() +
             rowA * (M1.a11 + tfac * M1.a12) / g1 +
             rowA * I0 * (M0.a11 - tfac * M0.a21) / (root * g1) +
             rowB * (M1.a21 + tfac * M1.a22) / g1 +
             rowB * I0 * (M0.a21 - tfac * M0.a11) / (root * g1);
    cb.f12 = (cb.A0.a11 + cb.A0.a21 - cb.A0.a12 - cb.A0.a22) * (M0.a21 - M0.a11);
    return cb;
}

inline double scaled_variable(Region region, double xi, double t, Scaling scaling) {
    const double t23 = std::pow(t, 2.0 / 3.0);
    if (region == Region::P1) {
        const double c = (scaling == Scaling::paper) ? std::pow(6.0, -2.0 / 3.0)
                                                     : std::pow(6.0, -1.0 / 3.0);
        return c * (xi - 2.0) * t23;
    }
    const double c = (scaling == Scaling::paper) ? std::cbrt(8.0 / 9.0) : std::cbrt(16.0 / 3.0);
    return -c * (xi + 0.25) * t23;
}

struct AsymptoticExpansion {
    double u_value = 0.0;
    double u_p = 0.0;
    double corr_re = 0.0, corr_im = 0.0;
    double s_scaled = 0.0;
    Region region = Region::none;
    double err_order = 0.0;
    double x = 0.0, t = 0.0, y = 0.0;
};

struct AsymptoticProblem {
    ModifiedDiscreteData lambda;          // reflectionless records (may be empty)
    ScatteringData rdata;                 // reflection samples (region II)
    PainleveSolution pii_p1;              // local model family at the x/t = 2 edge
    PainleveSolution pii_p2;              // local model family at the x/t = -1/4 edge
    Scaling scaling = Scaling::corrected;
    double C_cap = 3.0;
    double delta = 1.0 / 16.0;
    bool flip_cd = false;  // alternate phase convention at the negative merge points
};

inline AsymptoticExpansion evaluate_solution(double x, double t, const AsymptoticProblem& pr) {
    AsymptoticExpansion out;
    out.x = x;
    out.t = t;
    out.region = classify_region(x, t, pr.C_cap);
    if (out.region == Region::none)
        throw numeric_error("evaluate_solution: (x,t) outside both transition windows");
    out.err_order = -2.0 / 3.0 + 4.0 * pr.delta;

    TFunctionContext tctx;
    tctx.region = out.region;
    tctx.rgrid = &pr.rdata;
    for (std::size_t k = 0; k < pr.lambda.size(); ++k)
        tctx.delta.push_back({pr.lambda.zeta[k], pr.lambda.coeff[k]});

    const PainleveSolution& sol = (out.region == Region::P1) ? pr.pii_p1 : pr.pii_p2;

    double y = x;
    CorrectionBundle cb;
    SolitonEvaluation ev;
    double Ti = 1.0;
    const double t13 = std::cbrt(t);
    for (int it = 0; it < 50; ++it) {
        const double xi = y / t;
        const double s = scaled_variable(out.region, xi, t, pr.scaling);
        ev = evaluate_soliton(pr.lambda, y, t);
        if (out.region == Region::P1) {
            Ti = t_function(tctx, I).real();
            Mat2 mp = Mat2::identity(), mm = Mat2::identity();
            if (!pr.lambda.empty()) {
                DressingState st = solve_dressing_system(pr.lambda, y, t);
                mp = mout_eval(pr.lambda, st, cx(1.0, 0.0));
                mm = mout_eval(pr.lambda, st, cx(-1.0, 0.0));
            }
            cb = correction_bundle_p1(s, sol, ev, Ti, mp, mm, pr.scaling);
        } else {
            PhaseOffsets ph = phase_offsets(pr.rdata, xi, t, tctx);
            Ti = ph.Ti;
            std::array<Mat2, 4> mo{Mat2::identity(), Mat2::identity(), Mat2::identity(),
                                   Mat2::identity()};
            if (!pr.lambda.empty()) {
                DressingState st = solve_dressing_system(pr.lambda, y, t);
                const auto pts = p2_merge_points();
                for (int j = 0; j < 4; ++j) mo[j] = mout_eval(pr.lambda, st, cx(pts[j], 0.0));
            }
            cb = correction_bundle_p2(s, sol, ev, ph, mo, pr.scaling, pr.flip_cd);
        }
        const double x_model =
            y - 2.0 * std::log(Ti) + ev.c_plus_out + cb.f12.real() / t13;
        const double gap = x - x_model;
        y += gap;
        if (std::abs(gap) < 1e-12) break;
        if (it == 49) throw numeric_error("evaluate_solution: coordinate fixed point stalled");
    }
    out.y = y;
    out.u_p = ev.u_p;
    out.corr_re = cb.f11.real();
    out.corr_im = cb.f11.imag();
    out.s_scaled = cb.s_scaled;
    out.u_value = ev.u_p + cb.f11.real() / t13;
    return out;
}

}  // namespace mchrift
