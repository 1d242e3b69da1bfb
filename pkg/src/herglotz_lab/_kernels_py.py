"""Pure-Python (numpy) compute kernels.

These are the hot inner loops shared by the series evaluators: a vectorized
digamma on complex arrays, the head sum of the extended Herglotz series, and
head sums of digamma-pair series psi(i w) + psi(-i w) sampled along power-law
nodes.  `herglotz_lab._kernels` is the compiled twin with the same API; the
active implementation is chosen in `herglotz_lab._backend`.

All head sums return ``(value, abs_sum)`` where ``abs_sum`` is the sum of the
absolute values of the accumulated terms, used upstream for honest rounding
error estimates.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

_CHUNK = 1 << 16

# B_{2n}/(2n) for the asymptotic tail of psi, n = 1..10: valid to ~7e-27
# relative once |z| >= 20.
_PSI_TAIL = np.array([
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132,
    -691.0 / 32760, 1.0 / 12, -3617.0 / 8160, 43867.0 / 14364,
    -174611.0 / 6600,
])

_SHIFT = 20.0


def _cot_pi(z: np.ndarray) -> np.ndarray:
    """cot(pi z) elementwise, stable for large |Im z|."""
    b = z.imag
    up = b > 0
    w = np.where(up, z, np.conj(z))
    # Im w >= 0 here, so |exp(2 pi i w)| <= 1 and the quotient is stable.
    e = np.exp(2j * np.pi * w)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = 1j * (e + 1.0) / (e - 1.0)
    c = np.where(up, c, np.conj(c))
    real = b == 0
    if np.any(real):
        zr = z.real[real]
        c[real] = np.cos(np.pi * zr) / np.sin(np.pi * zr)
    return c


def psi_vec(z) -> np.ndarray:
    """Digamma on a complex array: reflection + recurrence shift + asymptotic.

    Accurate to ~1e-15 relative away from the poles (z = 0, -1, -2, ...).
    """
    z = np.asarray(z, dtype=np.complex128)
    scalar_in = z.ndim == 0
    z = np.atleast_1d(z)
    refl = z.real < 0.5
    w = np.where(refl, 1.0 - z, z)
    acc = np.zeros_like(w)
    small = np.abs(w) < _SHIFT
    if np.any(small):
        ws = w[small]
        a = np.zeros_like(ws)
        for i in range(int(_SHIFT)):
            a -= 1.0 / (ws + i)
        acc[small] = a
        w = np.where(small, w + _SHIFT, w)
    r = 1.0 / w
    r2 = r * r
    s = np.zeros_like(w)
    for c in _PSI_TAIL[::-1]:
        s = (s + c) * r2
    out = acc + np.log(w) - 0.5 * r - s
    if np.any(refl):
        out[refl] -= np.pi * _cot_pi(z[refl])
    return out[0] if scalar_in else out


def fkn_head(k: float, N: float, x: complex, M: int):
    """sum_{n=1}^{M} (psi(n^N x) - N log n - log x) / n^k."""
    lx = cmath.log(x)
    tot = 0.0 + 0.0j
    atot = 0.0
    for lo in range(1, M + 1, _CHUNK):
        n = np.arange(lo, min(M, lo + _CHUNK - 1) + 1, dtype=np.float64)
        ln_n = np.log(n)
        t = (psi_vec(np.exp(N * ln_n) * complex(x)) - N * ln_n - lx)
        t *= np.exp(-k * ln_n)
        tot += t.sum()
        atot += float(np.abs(t).sum())
    return complex(tot), atot


def pair_head(s: float, c: complex, b: float, q: float, theta: float, M: int):
    """sum_{n=1}^{M} n^{-s} [psi(i c (b n)^q e^{i theta})
                             + psi(-i c (b n)^q e^{i theta})]."""
    rot = 1j * complex(c) * cmath.exp(1j * theta)
    tot = 0.0 + 0.0j
    atot = 0.0
    for lo in range(1, M + 1, _CHUNK):
        n = np.arange(lo, min(M, lo + _CHUNK - 1) + 1, dtype=np.float64)
        g = np.exp(q * np.log(b * n))
        zz = rot * g
        t = psi_vec(zz) + psi_vec(-zz)
        if s != 0.0:
            t *= np.exp(-s * np.log(n))
        tot += t.sum()
        atot += float(np.abs(t).sum())
    return complex(tot), atot


def pair_head_sin(s: float, c: complex, b: float, q: float, theta: float,
                  a: float, M: int):
    """Same as `pair_head` but with each term weighted by sin(2 pi a n)."""
    rot = 1j * complex(c) * cmath.exp(1j * theta)
    tot = 0.0 + 0.0j
    atot = 0.0
    for lo in range(1, M + 1, _CHUNK):
        n = np.arange(lo, min(M, lo + _CHUNK - 1) + 1, dtype=np.float64)
        g = np.exp(q * np.log(b * n))
        zz = rot * g
        t = psi_vec(zz) + psi_vec(-zz)
        t *= np.sin(2.0 * np.pi * a * n)
        if s != 0.0:
            t *= np.exp(-s * np.log(n))
        tot += t.sum()
        atot += float(np.abs(t).sum())
    return complex(tot), atot
