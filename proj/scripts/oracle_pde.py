#!/usr/bin/env python3
"""Independent pseudospectral oracle (numpy rfft).

Same semidiscretization as the C++ PdeOracle, written against a different FFT
backend; used to freeze the transition-window reference snapshots.
"""
import numpy as np


class MchPde:
    """m_t = -((u^2 - u_x^2) m)_x - kappa u_x, m = u - u_xx, periodic."""

    def __init__(self, center, half_width, N, kappa=2.0):
        self.N = N
        self.x = center + np.linspace(-half_width, half_width, N, endpoint=False)
        self.k = 2 * np.pi * np.fft.rfftfreq(N, d=2 * half_width / N)
        self.dealias = np.where(self.k <= (2.0 / 3.0) * self.k.max(), 1.0, 0.0)

    def dx(self, f):
        return np.fft.irfft(1j * self.k * np.fft.rfft(f), n=self.N)

    def helmholtz(self, m):
        return np.fft.irfft(np.fft.rfft(m) / (1 + self.k**2), n=self.N)

    def rhs(self, m):
        u = self.helmholtz(m)
        ux = self.dx(u)
        fh = np.fft.rfft((u * u - ux * ux) * m) * self.dealias
        return -np.fft.irfft(1j * self.k * fh, n=self.N) - 2.0 * ux

    def evolve(self, m, t_final, dt):
        nst = int(round(t_final / dt))
        dt = t_final / nst
        for _ in range(nst):
            k1 = self.rhs(m)
            k2 = self.rhs(m + 0.5 * dt * k1)
            k3 = self.rhs(m + 0.5 * dt * k2)
            k4 = self.rhs(m + dt * k3)
            m = m + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        return m


if __name__ == "__main__":
    A, W = 0.3, 2.0
    pde = MchPde(224.0, 384.0, 16384)
    u = A * np.exp(-((pde.x / W) ** 2)) * (np.abs(pde.x) < 40.0)
    m = u * (1 + 2 / W**2 - 4 * pde.x**2 / W**4) * (np.abs(pde.x) < 40.0)

    tcur = 0.0
    for t in (64.0, 128.0, 256.0):
        m = pde.evolve(m, t - tcur, 0.02)
        tcur = t
        u = pde.helmholtz(m)
        for name, edge in (("leading", 2.0 * t), ("trailing", -0.25 * t)):
            half = 3.0 * t ** (1.0 / 3.0)
            sel = np.abs(pde.x - edge) <= half
            print(f"t={t:.0f} {name}: window max |u| = {np.abs(u[sel]).max():.6e}")
        print(f"t={t:.0f}: mass = {m.sum() * (pde.x[1] - pde.x[0]):.12e}")
