#pragma once

#include <cmath>
#include <vector>

#include "mchrift/airy.hpp"
#include "mchrift/common.hpp"
#include "mchrift/ode.hpp"

namespace mchrift {

// v'' = s v + cubic_sign * 2 v^3 with v ~ kappa Ai(s) as s -> +infinity.
// cubic_sign = +1 is the textbook Ablowitz-Segur normalization; -1 is the
// opposite-sign family (see README on which one the transition front uses).
// tail[i] = int_{s_i}^{inf} v^2, propagated alongside and seeded with the
// closed-form Airy tail kappa^2 (Ai'^2 - s Ai^2) at s_max.
struct PainleveSolution {
    double kappa = 0.0;
    int cubic_sign = +1;
    double s_min = 0.0, s_max = 0.0, ds = 0.0;
    std::vector<double> s, v, v_prime, tail;  // ascending in s
    bool truncated = false;                   // blow-up guard tripped
    double reached_s = 0.0;

    std::size_t index_below(double sq) const {
        if (sq < s.front() || sq > s.back())
            throw numeric_error("PainleveSolution: s outside solved grid");
        std::size_t i = (std::size_t)((sq - s.front()) / ds);
        if (i + 1 >= s.size()) i = s.size() - 2;
        return i;
    }

    // cubic Hermite using the stored derivative
    double eval_v(double sq) const {
        std::size_t i = index_below(sq);
        double h = s[i + 1] - s[i];
        double u = (sq - s[i]) / h;
        double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
        double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
        return h00 * v[i] + h * h10 * v_prime[i] + h01 * v[i + 1] + h * h11 * v_prime[i + 1];
    }

    double eval_vp(double sq) const {
        std::size_t i = index_below(sq);
        double h = s[i + 1] - s[i];
        double u = (sq - s[i]) / h;
        // derivative via the second-derivative values from the ODE itself
        auto acc = [this](std::size_t j) {
            return s[j] * v[j] + cubic_sign * 2.0 * v[j] * v[j] * v[j];
        };
        double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
        double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
        return h00 * v_prime[i] + h * h10 * acc(i) + h01 * v_prime[i + 1] + h * h11 * acc(i + 1);
    }

    double eval_tail(double sq) const {
        std::size_t i = index_below(sq);
        double h = s[i + 1] - s[i];
        double u = (sq - s[i]) / h;
        double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
        double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
        // tail' = -v^2
        return h00 * tail[i] + h * h10 * (-v[i] * v[i]) + h01 * tail[i + 1] +
               h * h11 * (-v[i + 1] * v[i + 1]);
    }
};

inline PainleveSolution solve_pii(double kappa, double s_min, double s_max,
                                  int cubic_sign = +1, double ds = 1e-3) {
    if (std::abs(kappa) >= 1.0) throw numeric_error("solve_pii: |kappa| must be < 1");
    if (s_max < 6.0) throw numeric_error("solve_pii: s_max must be >= 6");
    if (s_min < -14.0) throw numeric_error("solve_pii: s_min below supported range");
    if (cubic_sign != 1 && cubic_sign != -1) throw numeric_error("solve_pii: bad cubic sign");

    PainleveSolution sol;
    sol.kappa = kappa;
    sol.cubic_sign = cubic_sign;
    sol.s_min = s_min;
    sol.s_max = s_max;

    const std::size_t nsteps = (std::size_t)std::ceil((s_max - s_min) / ds);
    sol.ds = (s_max - s_min) / double(nsteps);

    auto [ai, aip] = airy_ai(s_max);
    std::vector<double> y = {kappa * ai, kappa * aip,
                             kappa * kappa * (aip * aip - s_max * ai * ai)};
    const int sgn = cubic_sign;
    auto rhs = [sgn](double sv, const std::vector<double>& yv, std::vector<double>& dy) {
        dy[0] = yv[1];
        dy[1] = sv * yv[0] + sgn * 2.0 * yv[0] * yv[0] * yv[0];
        dy[2] = -yv[0] * yv[0];
    };

    std::vector<double> ss, vv, vp, tl;
    ss.reserve(nsteps + 1);
    vv.reserve(nsteps + 1);
    vp.reserve(nsteps + 1);
    tl.reserve(nsteps + 1);
    bool blown = false;
    double reached = s_min;
    auto obs = [&](double sv, const std::vector<double>& yv) {
        if (blown) return;
        if (std::abs(yv[0]) > 50.0 || !std::isfinite(yv[0])) {
            blown = true;
            reached = sv;
            return;
        }
        ss.push_back(sv);
        vv.push_back(yv[0]);
        vp.push_back(yv[1]);
        tl.push_back(yv[2]);
    };
    rk4_fixed(rhs, s_max, s_min, y, nsteps, obs);

    // stored backward, flip to ascending
    sol.truncated = blown;
    sol.reached_s = blown ? reached : s_min;
    sol.s.assign(ss.rbegin(), ss.rend());
    sol.v.assign(vv.rbegin(), vv.rend());
    sol.v_prime.assign(vp.rbegin(), vp.rend());
    sol.tail.assign(tl.rbegin(), tl.rend());
    if (sol.s.size() < 5) throw numeric_error("solve_pii: integration failed immediately");
    return sol;
}

inline double tail_integral(const PainleveSolution& sol, double s) { return sol.eval_tail(s); }

// max |v'' - s v - sign*2 v^3| over interior nodes, v'' from 4th-order
// central differences of the stored values
inline double pii_residual(const PainleveSolution& sol) {
    const auto& s = sol.s;
    const auto& v = sol.v;
    if (s.size() < 5) throw numeric_error("pii_residual: need at least 5 nodes");
    const double h2 = sol.ds * sol.ds;
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
        double vpp = (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] - v[i + 2]) /
                     (12.0 * h2);
        double res = std::abs(vpp - s[i] * v[i] - sol.cubic_sign * 2.0 * v[i] * v[i] * v[i]);
        worst = std::max(worst, res);
    }
    return worst;
}

}  // namespace mchrift
