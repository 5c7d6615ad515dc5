#!/usr/bin/env python3
"""Independent forward-scattering oracle (numpy/scipy).

Cross-checks the C++ Jost solver: unitarity, reflection symmetries, the
frozen r values used in the test suite, and the a(i) area identity.
"""
import numpy as np
from scipy.integrate import quad, solve_ivp

A, W, L = 0.3, 2.0, 40.0


def u0(x):
    return A * np.exp(-((x / W) ** 2))


def m0(x):
    return u0(x) * (1 + 2 / W**2 - 4 * x**2 / W**4)


def m0x(x):
    u = u0(x)
    return u * (-2 * x / W**2) * (1 + 2 / W**2 - 4 * x**2 / W**4) + u * (-8 * x / W**4)


def q0(x):
    return np.sqrt(m0(x) ** 2 + 1)


def pmat(x, z):
    m, mx, q = m0(x), m0x(x), q0(x)
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    B = np.array([[-1j * m, 1], [-1, 1j * m]], dtype=complex)
    return (1j * mx / (2 * q * q)) * s1 + (m / (2 * z * q)) * B


def jost_matrices(z, rtol=1e-11):
    # phase-conjugated form: the oscillation enters only through the
    # off-diagonal commutator, so both fundamental solutions stay O(1)
    kfac = -0.25j * (z - 1 / z)

    def rhs(x, yv):
        mu = yv.reshape(2, 2)
        comm = np.array([[0, 2 * mu[0, 1]], [-2 * mu[1, 0], 0]], dtype=complex)
        return (kfac * q0(x) * comm + pmat(x, z) @ mu).reshape(-1)

    ident = np.eye(2, dtype=complex).reshape(-1)
    sm = solve_ivp(rhs, (-L, 0.0), ident, rtol=rtol, atol=1e-13, method="DOP853")
    sp = solve_ivp(rhs, (L, 0.0), ident, rtol=rtol, atol=1e-13, method="DOP853")
    return sm.y[:, -1].reshape(2, 2), sp.y[:, -1].reshape(2, 2)


P0 = -quad(lambda s: q0(s) - 1, 0, L, epsabs=1e-13, epsrel=1e-13)[0]


def scattering(z):
    mum, mup = jost_matrices(z)
    Wm = np.linalg.solve(mup, mum)
    a = Wm[0, 0]
    b = Wm[1, 0] * np.exp(-0.5j * (z - 1 / z) * P0)
    return a, b


def a_columns(z, rtol=1e-11):
    # stable column formulation for z off the real axis
    kk = 0.5j * (z - 1 / z)

    def rhs1(x, c):
        P = pmat(x, z)
        return np.array([P[0, 0] * c[0] + P[0, 1] * c[1],
                         kk * q0(x) * c[1] + P[1, 0] * c[0] + P[1, 1] * c[1]])

    def rhs2(x, c):
        P = pmat(x, z)
        return np.array([-kk * q0(x) * c[0] + P[0, 0] * c[0] + P[0, 1] * c[1],
                         P[1, 0] * c[0] + P[1, 1] * c[1]])

    s1 = solve_ivp(rhs1, (-L, 0.0), np.array([1, 0], dtype=complex), rtol=rtol,
                   atol=1e-13, method="DOP853")
    s2 = solve_ivp(rhs2, (L, 0.0), np.array([0, 1], dtype=complex), rtol=rtol,
                   atol=1e-13, method="DOP853")
    c1, c2 = s1.y[:, -1], s2.y[:, -1]
    return c1[0] * c2[1] - c1[1] * c2[0]


if __name__ == "__main__":
    for z in (1.0, 2 + np.sqrt(3), 1.7):
        a, b = scattering(z)
        print(f"z={z:.6f}  r={b/a:.8f}  | |a|^2+|b|^2-1 = {abs(a)**2+abs(b)**2-1:.2e}")
    a1, b1 = scattering(1.7)
    a2, b2 = scattering(-1.7)
    a3, b3 = scattering(1 / 1.7)
    print("symmetry defects:",
          abs(b1 / a1 + np.conj(b2 / a2)), abs(b1 / a1 - np.conj(b3 / a3)))
    intq = quad(lambda s: q0(s) - 1, -L, L, epsabs=1e-13, epsrel=1e-13)[0]
    print("a(i) direct  :", a_columns(1j))
    print("exp(-intq/2) :", np.exp(-0.5 * intq))
