"""Pure-Python RK4 kernel; mirrors heunpoly._rk4 operation for operation.

Kept in lockstep with the Cython source so both paths produce the same
doubles: identical expression order, math.pow for powers, grid points
computed as x0 + i*h.
"""

from __future__ import annotations

from math import pow as _pow


def rk4_max_deviation(gamma, delta, epsilon, alpha_beta, q, c, sigma,
                      x0, x1, steps, exps, cfs, y0, yp0):
    """Integrate the Heun ODE and return max |y_rk4 - candidate| on the grid."""
    n = len(exps)

    def cand(x):
        total = 0.0
        for j in range(n):
            total += cfs[j] * _pow(x, exps[j])
        return total

    def accel(x, y, yp):
        pterm = gamma / x + delta / (x - 1.0) + epsilon / (x - c)
        rterm = (alpha_beta * x - q - sigma / x) / (x * (x - 1.0) * (x - c))
        return -pterm * yp - rterm * y

    h = (x1 - x0) / steps
    y = y0
    yp = yp0
    dev = abs(y - cand(x0))
    for i in range(steps):
        x = x0 + i * h
        a1 = yp
        b1 = accel(x, y, yp)
        a2 = yp + 0.5 * h * b1
        b2 = accel(x + 0.5 * h, y + 0.5 * h * a1, yp + 0.5 * h * b1)
        a3 = yp + 0.5 * h * b2
        b3 = accel(x + 0.5 * h, y + 0.5 * h * a2, yp + 0.5 * h * b2)
        a4 = yp + h * b3
        b4 = accel(x + h, y + h * a3, yp + h * b3)
        y = y + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        yp = yp + (h / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        xn = x0 + (i + 1) * h
        d = abs(y - cand(xn))
        if d > dev:
            dev = d
    return dev
