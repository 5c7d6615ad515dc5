#pragma once

#include <cmath>
#include <vector>

#include "mchrift/common.hpp"
#include "mchrift/linalg.hpp"
#include "mchrift/scattering.hpp"

namespace mchrift {

// reflectionless sector: records (zeta_k, coeff_k) with coeff = C_n T^2(zeta_n)
struct ModifiedDiscreteData {
    std::vector<cx> zeta;
    std::vector<cx> coeff;

    std::size_t size() const { return zeta.size(); }
    bool empty() const { return zeta.empty(); }
};

// Symmetry closure of a set of base records. Off the unit circle and off the
// imaginary axis a record generates a quadruple; on the circle or the axis a
// pair. Coefficients follow the closure rules validated against reality of u
// and the travelling-wave property:
//   quadruple {zeta: C, -conj(zeta): conj(C), -1/zeta: -C/zeta^2, 1/conj(zeta): -conj(C)/conj(zeta)^2}
//   axis pair {i nu: C (real), i/nu: C/nu^2}
//   circle pair {e^{i phi}: C, e^{i(pi-phi)}: conj(C)}
inline ModifiedDiscreteData close_orbits(const std::vector<DiscreteEigen>& base) {
    ModifiedDiscreteData out;
    auto push_unique = [&out](cx z, cx c) {
        for (const auto& e : out.zeta)
            if (std::abs(e - z) < 1e-10) return;
        out.zeta.push_back(z);
        out.coeff.push_back(c);
    };
    for (const auto& e : base) {
        const cx z = e.zeta;
        const cx c = e.C;
        if (z.imag() <= 0.0) throw numeric_error("close_orbits: zeta must be in C+");
        const bool on_circle = std::abs(std::abs(z) - 1.0) < 1e-10;
        const bool on_axis = std::abs(z.real()) < 1e-10;
        if (on_circle) {
            push_unique(z, c);
            push_unique(-std::conj(z), std::conj(c));
        } else if (on_axis) {
            const double nu = z.imag();
            push_unique(z, c);
            push_unique(cx(0.0, 1.0 / nu), c / (nu * nu));
        } else {
            push_unique(z, c);
            push_unique(-std::conj(z), std::conj(c));
            push_unique(-1.0 / z, -c / (z * z));
            push_unique(1.0 / std::conj(z), -std::conj(c) / std::conj(z * z));
        }
    }
    return out;
}

struct DressingState {
    std::vector<cx> alpha, beta;
    double y = 0.0, t = 0.0;
    double residual = 0.0;
    double pivot_ratio = 0.0;
};

// Assembles and solves the 2s x 2s linear system for (alpha, conj(beta)).
// With gamma_k = coeff_k e^{-2i t theta(zeta_k)} and A_kh = 1/(zeta_k - conj(zeta_h)):
//   alpha_k - gamma_k sum_h A_kh conj(beta_h) = gamma_k
//   conj(beta_k) + conj(gamma_k) sum_h conj(A_kh) alpha_h = 0
template <class ThetaAt>
inline DressingState solve_dressing_system(const ModifiedDiscreteData& data, double y, double t,
                                           ThetaAt&& theta_at) {
    const std::size_t s = data.size();
    if (s == 0) throw numeric_error("solve_dressing_system: empty record set");
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t h = k + 1; h < s; ++h)
            if (std::abs(data.zeta[k] - data.zeta[h]) < 1e-8)
                throw numeric_error("solve_dressing_system: records not distinct");

    std::vector<cx> gam(s);
    for (std::size_t k = 0; k < s; ++k)
        gam[k] = data.coeff[k] * std::exp(-2.0 * I * theta_at(data.zeta[k]));

    const std::size_t n = 2 * s;
    std::vector<cx> M(n * n, cx{}), rhs(n, cx{});
    for (std::size_t k = 0; k < s; ++k) {
        M[k * n + k] = 1.0;
        for (std::size_t h = 0; h < s; ++h) {
            const cx A = 1.0 / (data.zeta[k] - std::conj(data.zeta[h]));
            M[k * n + (s + h)] = -gam[k] * A;
            M[(s + k) * n + h] = std::conj(gam[k]) * std::conj(A);
        }
        M[(s + k) * n + (s + k)] += 1.0;
        rhs[k] = gam[k];
    }

    DressingState st;
    st.y = y;
    st.t = t;
    std::vector<cx> Mcopy = M, rcopy = rhs;
    std::vector<cx> x = solve_dense(std::move(M), std::move(rhs), &st.pivot_ratio);
    if (st.pivot_ratio > 1e12)
        throw numeric_error("solve_dressing_system: system ill conditioned, pivot ratio " +
                            std::to_string(st.pivot_ratio));
    // residual of the solve against the untouched copy
    double res = 0.0, scale = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        cx acc = -rcopy[r];
        for (std::size_t c2 = 0; c2 < n; ++c2) acc += Mcopy[r * n + c2] * x[c2];
        res = std::max(res, std::abs(acc));
        scale = std::max(scale, std::abs(rcopy[r]));
    }
    st.residual = res / std::max(scale, 1e-300);

    st.alpha.assign(x.begin(), x.begin() + s);
    st.beta.resize(s);
    for (std::size_t k = 0; k < s; ++k) st.beta[k] = std::conj(x[s + k]);
    return st;
}

inline DressingState solve_dressing_system(const ModifiedDiscreteData& data, double y, double t) {
    return solve_dressing_system(data, y, t, [y, t](cx z) { return t_theta(z, y, t); });
}

struct SolitonEvaluation {
    double u_p = 0.0;
    double c_plus_out = 0.0;
    double x_of_y = 0.0;
    Mat2 Mout_at_i = Mat2::identity();
    Mat2 Mout1_at_i{};  // (z - i) expansion coefficient
    double im_defect = 0.0;
};

// M_out(z) = I + sum_k [[beta_k/(z-zeta_k), -conj(alpha_k)/(z-conj(zeta_k))],
//                       [alpha_k/(z-zeta_k),  conj(beta_k)/(z-conj(zeta_k))]]
inline Mat2 mout_eval(const ModifiedDiscreteData& data, const DressingState& st, cx z) {
    Mat2 m = Mat2::identity();
    for (std::size_t k = 0; k < data.size(); ++k) {
        const cx dz = z - data.zeta[k];
        const cx dzb = z - std::conj(data.zeta[k]);
        if (std::abs(dz) < 1e-8 || std::abs(dzb) < 1e-8)
            throw numeric_error("mout_eval: z at a pole");
        m.a11 += st.beta[k] / dz;
        m.a12 += -std::conj(st.alpha[k]) / dzb;
        m.a21 += st.alpha[k] / dz;
        m.a22 += std::conj(st.beta[k]) / dzb;
    }
    return m;
}

inline SolitonEvaluation evaluate_soliton(const ModifiedDiscreteData& data, double y, double t) {
    SolitonEvaluation ev;
    if (data.empty()) {
        ev.x_of_y = y;
        return ev;
    }
    DressingState st = solve_dressing_system(data, y, t);
    const cx zi = I;
    cx g1 = 1.0, g2 = 1.0, g1p = 0.0, g2p = 0.0;
    for (std::size_t k = 0; k < data.size(); ++k) {
        const cx dz = zi - data.zeta[k];
        const cx dzb = zi - std::conj(data.zeta[k]);
        g1 += (st.beta[k] + st.alpha[k]) / dz;
        g2 += (std::conj(st.beta[k]) - std::conj(st.alpha[k])) / dzb;
        g1p += (st.beta[k] + st.alpha[k]) / (dz * dz);
        g2p += (std::conj(st.beta[k]) - std::conj(st.alpha[k])) / (dzb * dzb);
    }
    if (std::abs(g1) < 1e-10 || std::abs(g2) < 1e-10)
        throw numeric_error("evaluate_soliton: dressing degeneracy (vanishing denominator)");
    const cx up = g1p / g1 + g2p / g2;
    const cx shift = -std::log(g2 / g1);
    ev.u_p = up.real();
    ev.c_plus_out = shift.real();
    ev.x_of_y = y + shift.real();
    ev.im_defect = std::max(std::abs(up.imag()), std::abs(shift.imag()));

    ev.Mout_at_i = mout_eval(data, st, zi);
    Mat2 m1{};
    for (std::size_t k = 0; k < data.size(); ++k) {
        const cx dz = zi - data.zeta[k];
        const cx dzb = zi - std::conj(data.zeta[k]);
        m1.a11 += -st.beta[k] / (dz * dz);
        m1.a12 += std::conj(st.alpha[k]) / (dzb * dzb);
        m1.a21 += -st.alpha[k] / (dz * dz);
        m1.a22 += -std::conj(st.beta[k]) / (dzb * dzb);
    }
    ev.Mout1_at_i = m1;
    return ev;
}

// Solves x = y + shift + c_plus_out(y, t) for y by safeguarded Newton with a
// bisection fallback; the forward map is monotone for admissible data.
inline double invert_coordinate(const ModifiedDiscreteData& data, double x, double t,
                                double shift) {
    if (!std::isfinite(shift)) throw numeric_error("invert_coordinate: non-finite shift");
    auto fwd = [&](double y) { return evaluate_soliton(data, y, t).x_of_y + shift - x; };
    if (data.empty()) return x - shift;

    double lo = x - 50.0, hi = x + 50.0;
    double flo = fwd(lo), fhi = fwd(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw numeric_error("invert_coordinate: bracket not found within |y-x| <= 50");
    double y = x - shift;
    for (int it = 0; it < 80; ++it) {
        double f = fwd(y);
        if (std::abs(f) <= 1e-10) return y;
        if (f > 0.0) hi = y; else lo = y;
        double h = 1e-6;
        double df = (fwd(y + h) - fwd(y - h)) / (2.0 * h);
        double ynew = (df > 1e-12) ? y - f / df : 0.5 * (lo + hi);
        if (ynew <= lo || ynew >= hi) ynew = 0.5 * (lo + hi);
        y = ynew;
    }
    if (std::abs(fwd(y)) > 1e-10)
        throw numeric_error("invert_coordinate: did not converge");
    return y;
}

}  // namespace mchrift
