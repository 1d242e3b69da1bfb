# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels: same API and semantics as `_kernels_py`.

Scalar digamma via reflection + recurrence shift to |z| >= 20 + 10-term
Bernoulli asymptotic, applied in tight C loops.  Head sums use Kahan
compensation and return ``(value, abs_sum)``.
"""

import numpy as np

from libc.math cimport atan2, cos, exp, log, sin, sqrt, M_PI

cdef double complex J = 1j

cdef double[10] PSI_TAIL
PSI_TAIL[0] = 1.0 / 12
PSI_TAIL[1] = -1.0 / 120
PSI_TAIL[2] = 1.0 / 252
PSI_TAIL[3] = -1.0 / 240
PSI_TAIL[4] = 1.0 / 132
PSI_TAIL[5] = -691.0 / 32760
PSI_TAIL[6] = 1.0 / 12
PSI_TAIL[7] = -3617.0 / 8160
PSI_TAIL[8] = 43867.0 / 14364
PSI_TAIL[9] = -174611.0 / 6600


cdef inline double cabs_(double complex z):
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef inline double complex conj_(double complex z):
    return z.real - J * z.imag


cdef inline double complex clog_(double complex z):
    return log(cabs_(z)) + J * atan2(z.imag, z.real)


cdef inline double complex cexp_(double complex z):
    cdef double m = exp(z.real)
    return m * cos(z.imag) + J * (m * sin(z.imag))


cdef inline double complex cot_pi_(double complex z):
    cdef double b = z.imag
    cdef double complex w, e, c
    if b == 0.0:
        return cos(M_PI * z.real) / sin(M_PI * z.real) + 0.0 * J
    w = z if b > 0 else conj_(z)
    e = cexp_(2.0 * J * M_PI * w)
    c = J * (e + 1.0) / (e - 1.0)
    return c if b > 0 else conj_(c)


cdef inline double complex psi_(double complex z):
    cdef bint refl = z.real < 0.5
    cdef double complex w = 1.0 - z if refl else z
    cdef double complex acc = 0
    cdef double complex r, r2, s, out
    cdef int i
    if cabs_(w) < 20.0:
        for i in range(20):
            acc = acc - 1.0 / (w + i)
        w = w + 20.0
    r = 1.0 / w
    r2 = r * r
    s = 0
    for i in range(9, -1, -1):
        s = (s + PSI_TAIL[i]) * r2
    out = acc + clog_(w) - 0.5 * r - s
    if refl:
        out = out - M_PI * cot_pi_(z)
    return out


def psi_vec(z):
    """Digamma on a complex array (see `_kernels_py.psi_vec`)."""
    z = np.asarray(z, dtype=np.complex128)
    scalar_in = z.ndim == 0
    za = np.atleast_1d(z)
    zf = np.ascontiguousarray(za.ravel())
    out = np.empty_like(zf)
    cdef double complex[::1] zv = zf
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = zv.shape[0]
    for i in range(n):
        ov[i] = psi_(zv[i])
    res = out.reshape(za.shape)
    return res[0] if scalar_in else res


def fkn_head(double k, double N, x, long M):
    """sum_{n=1}^{M} (psi(n^N x) - N log n - log x) / n^k."""
    cdef double complex xc = x
    cdef double complex lx = clog_(xc)
    cdef double complex tot = 0, comp = 0, t, y, tmp
    cdef double atot = 0, ln_n, scale
    cdef long n
    for n in range(1, M + 1):
        ln_n = log(<double> n)
        scale = exp(N * ln_n)
        t = (psi_(scale * xc) - N * ln_n - lx) * exp(-k * ln_n)
        y = t - comp
        tmp = tot + y
        comp = (tmp - tot) - y
        tot = tmp
        atot += cabs_(t)
    return complex(tot), atot


def pair_head(double s, c, double b, double q, double theta, long M):
    """sum_{n=1}^{M} n^{-s} [psi(i c (b n)^q e^{i theta}) + psi(-...)]."""
    cdef double complex rot = J * (<double complex> c) * cexp_(J * theta)
    cdef double complex tot = 0, comp = 0, t, y, tmp, zz
    cdef double atot = 0, g
    cdef long n
    for n in range(1, M + 1):
        g = exp(q * log(b * n))
        zz = rot * g
        t = psi_(zz) + psi_(-zz)
        if s != 0.0:
            t = t * exp(-s * log(<double> n))
        y = t - comp
        tmp = tot + y
        comp = (tmp - tot) - y
        tot = tmp
        atot += cabs_(t)
    return complex(tot), atot


def pair_head_sin(double s, c, double b, double q, double theta, double a,
                  long M):
    """`pair_head` with each term weighted by sin(2 pi a n)."""
    cdef double complex rot = J * (<double complex> c) * cexp_(J * theta)
    cdef double complex tot = 0, comp = 0, t, y, tmp, zz
    cdef double atot = 0, g
    cdef long n
    for n in range(1, M + 1):
        g = exp(q * log(b * n))
        zz = rot * g
        t = (psi_(zz) + psi_(-zz)) * sin(2.0 * M_PI * a * n)
        if s != 0.0:
            t = t * exp(-s * log(<double> n))
        y = t - comp
        tmp = tot + y
        comp = (tmp - tot) - y
        tot = tmp
        atot += cabs_(t)
    return complex(tot), atot
