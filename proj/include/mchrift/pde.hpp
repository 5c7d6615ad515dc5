#pragma once

#include <cmath>
#include <vector>

#include "mchrift/common.hpp"
#include "mchrift/fft.hpp"

namespace mchrift {

// Direct pseudospectral integrator for
//   m_t = -((u^2 - u_x^2) m)_x - kappa u_x,  m = u - u_xx
// on a periodic domain [center - half_width, center + half_width). m is the
// prognostic field, u is recovered spectrally each stage, the cubic flux is
// dealiased with the 2/3 rule.
struct PdeState {
    double center = 0.0, half_width = 0.0;
    int N = 0;
    double kappa_eq = 2.0;
    double t = 0.0;
    std::vector<double> x, u, m;
};

class PdeOracle {
  public:
    PdeOracle(double center, double half_width, int N, double kappa = 2.0)
        : center_(center), hw_(half_width), N_(N), kappa_(kappa) {
        if (N < 16 || (N & (N - 1)) != 0) throw numeric_error("PdeOracle: N must be a power of two");
        k_ = fft_wavenumbers(N, half_width);
        double kmax = 0.0;
        for (double kk : k_) kmax = std::max(kmax, std::abs(kk));
        dealias_.resize(N);
        for (int i = 0; i < N; ++i) dealias_[i] = (std::abs(k_[i]) <= (2.0 / 3.0) * kmax) ? 1.0 : 0.0;
        x_.resize(N);
        const double dx = 2.0 * half_width / N;
        for (int i = 0; i < N; ++i) x_[i] = center - half_width + i * dx;
    }

    const std::vector<double>& grid() const { return x_; }
    double dx() const { return 2.0 * hw_ / N_; }

    std::vector<double> helmholtz_invert(const std::vector<double>& m) const {
        std::vector<cx> mh(m.begin(), m.end());
        fft_inplace(mh, -1);
        for (int i = 0; i < N_; ++i) mh[i] /= (1.0 + k_[i] * k_[i]);
        fft_inplace(mh, +1);
        std::vector<double> u(N_);
        for (int i = 0; i < N_; ++i) u[i] = mh[i].real();
        return u;
    }

    std::vector<double> deriv(const std::vector<double>& f) const {
        std::vector<cx> fh(f.begin(), f.end());
        fft_inplace(fh, -1);
        for (int i = 0; i < N_; ++i) fh[i] *= I * k_[i];
        fft_inplace(fh, +1);
        std::vector<double> g(N_);
        for (int i = 0; i < N_; ++i) g[i] = fh[i].real();
        return g;
    }

    std::vector<double> rhs_eval(const std::vector<double>& m) const {
        std::vector<cx> mh(m.begin(), m.end());
        fft_inplace(mh, -1);
        std::vector<cx> uh(mh), uxh(mh);
        for (int i = 0; i < N_; ++i) {
            uh[i] = mh[i] / (1.0 + k_[i] * k_[i]);
            uxh[i] = uh[i] * I * k_[i];
        }
        std::vector<cx> uw(uh), uxw(uxh);
        fft_inplace(uw, +1);
        fft_inplace(uxw, +1);
        std::vector<cx> flux(N_);
        for (int i = 0; i < N_; ++i) {
            double u = uw[i].real(), ux = uxw[i].real();
            flux[i] = (u * u - ux * ux) * m[i];
            if (!std::isfinite(flux[i].real())) throw numeric_error("rhs_eval: non-finite flux");
        }
        fft_inplace(flux, -1);
        for (int i = 0; i < N_; ++i) flux[i] *= dealias_[i] * I * k_[i];
        fft_inplace(flux, +1);
        std::vector<double> out(N_);
        for (int i = 0; i < N_; ++i) out[i] = -flux[i].real() - kappa_ * uxw[i].real();
        return out;
    }

    // RK4 in time; returns the final m. Monitors the conserved int m dx.
    std::vector<double> evolve(std::vector<double> m, double t_final, double dt,
                               double* monitor_drift = nullptr) const {
        const int nst = (int)std::lround(t_final / dt);
        if (nst <= 0) return m;
        const double h = t_final / nst;
        // CFL guard on the initial state
        {
            auto u = helmholtz_invert(m);
            auto ux = deriv(u);
            double sp = 1.0;
            for (int i = 0; i < N_; ++i) sp = std::max(sp, std::abs(u[i] * u[i] - ux[i] * ux[i]));
            if (h > 0.5 * dx() / sp)
                throw numeric_error("evolve: dt exceeds CFL estimate");
        }
        double mass0 = 0.0;
        for (double v : m) mass0 += v;
        mass0 *= dx();
        std::vector<double> k1, k2, k3, k4, yt(N_);
        for (int s = 0; s < nst; ++s) {
            k1 = rhs_eval(m);
            for (int i = 0; i < N_; ++i) yt[i] = m[i] + 0.5 * h * k1[i];
            k2 = rhs_eval(yt);
            for (int i = 0; i < N_; ++i) yt[i] = m[i] + 0.5 * h * k2[i];
            k3 = rhs_eval(yt);
            for (int i = 0; i < N_; ++i) yt[i] = m[i] + h * k3[i];
            k4 = rhs_eval(yt);
            for (int i = 0; i < N_; ++i)
                m[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        double mass1 = 0.0;
        for (double v : m) mass1 += v;
        mass1 *= dx();
        const double drift = std::abs(mass1 - mass0);
        if (monitor_drift) *monitor_drift = drift;
        if (drift > 1e-6) throw numeric_error("evolve: mass monitor drift " + std::to_string(drift));
        for (double v : m)
            if (!std::isfinite(v)) throw numeric_error("evolve: non-finite state");
        return m;
    }

  private:
    double center_, hw_;
    int N_;
    double kappa_;
    std::vector<double> k_, x_, dealias_;
};

}  // namespace mchrift
