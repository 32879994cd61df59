# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled RK4 kernel; mirrors heunpoly._rk4_fallback operation for operation."""

from libc.math cimport fabs, pow


cdef double _cand(double[:] exps, double[:] cfs, Py_ssize_t n, double x) noexcept nogil:
    cdef double total = 0.0
    cdef Py_ssize_t j
    for j in range(n):
        total += cfs[j] * pow(x, exps[j])
    return total


cdef double _accel(double gamma, double delta, double epsilon, double alpha_beta,
                   double q, double c, double sigma,
                   double x, double y, double yp) noexcept nogil:
    cdef double pterm = gamma / x + delta / (x - 1.0) + epsilon / (x - c)
    cdef double rterm = (alpha_beta * x - q - sigma / x) / (x * (x - 1.0) * (x - c))
    return -pterm * yp - rterm * y


def rk4_max_deviation(double gamma, double delta, double epsilon, double alpha_beta,
                      double q, double c, double sigma,
                      double x0, double x1, long steps,
                      double[:] exps, double[:] cfs, double y0, double yp0):
    """Integrate the Heun ODE and return max |y_rk4 - candidate| on the grid."""
    cdef Py_ssize_t n = exps.shape[0]
    cdef double h = (x1 - x0) / steps
    cdef double y = y0
    cdef double yp = yp0
    cdef double dev = fabs(y - _cand(exps, cfs, n, x0))
    cdef double x, xn, d
    cdef double a1, a2, a3, a4, b1, b2, b3, b4
    cdef long i
    with nogil:
        for i in range(steps):
            x = x0 + i * h
            a1 = yp
            b1 = _accel(gamma, delta, epsilon, alpha_beta, q, c, sigma, x, y, yp)
            a2 = yp + 0.5 * h * b1
            b2 = _accel(gamma, delta, epsilon, alpha_beta, q, c, sigma,
                        x + 0.5 * h, y + 0.5 * h * a1, yp + 0.5 * h * b1)
            a3 = yp + 0.5 * h * b2
            b3 = _accel(gamma, delta, epsilon, alpha_beta, q, c, sigma,
                        x + 0.5 * h, y + 0.5 * h * a2, yp + 0.5 * h * b2)
            a4 = yp + h * b3
            b4 = _accel(gamma, delta, epsilon, alpha_beta, q, c, sigma,
                        x + h, y + h * a3, yp + h * b3)
            y = y + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
            yp = yp + (h / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
            xn = x0 + (i + 1) * h
            d = fabs(y - _cand(exps, cfs, n, xn))
            if d > dev:
                dev = d
    return dev
