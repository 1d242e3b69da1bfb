"""Scalar special functions and constants.

Every public operation takes a working-precision parameter ``digits``
(decimal digits, default 16).  ``digits <= 16`` runs on float64/complex128;
larger values run the same algorithms on mpmath numbers with guard digits.
mpmath is used as an arithmetic substrate only — the algorithms (recurrence
shift + Bernoulli asymptotics for digamma, Euler-Maclaurin for zeta and its
tails, Mellin-type small-argument expansions for exponential polylogarithm
sums) are implemented here.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np

from . import _backend
from .errors import DivergenceError, DomainError, GateError, PoleError

DEFAULT_DIGITS = 16

# 50-digit reference strings; float64 constants are derived from them.
_EULER_GAMMA_STR = "0.57721566490153286060651209008240243104215933593992"
_GAMMA1_STR = "-0.072815845483676724860586375874901319137736338334338"

EULER_GAMMA = float(mp.mpf(_EULER_GAMMA_STR))
STIELTJES_GAMMA1 = float(mp.mpf(_GAMMA1_STR))
LOG_2PI = math.log(2.0 * math.pi)


def _use_mp(digits: int) -> bool:
    return digits > 16


def _wp(digits: int):
    """mpmath working-precision context with guard digits."""
    return mp.workdps(digits + 8)


@dataclass(frozen=True)
class ConstantsTable:
    euler_gamma: object
    stieltjes_gamma1: object
    pi: object
    log2: object


def euler_gamma(digits: int = DEFAULT_DIGITS):
    if not _use_mp(digits):
        return EULER_GAMMA
    with _wp(digits):
        return +mp.euler


def stieltjes_gamma1(digits: int = DEFAULT_DIGITS):
    """First Stieltjes constant (precomputed; validated in the test suite
    against the limit definition and a Laurent-coefficient fit)."""
    if not _use_mp(digits):
        return STIELTJES_GAMMA1
    with _wp(digits):
        if digits + 8 <= 48:
            return +mp.mpf(_GAMMA1_STR)
        return +mp.stieltjes(1)


def constants(digits: int = DEFAULT_DIGITS) -> ConstantsTable:
    if not _use_mp(digits):
        return ConstantsTable(EULER_GAMMA, STIELTJES_GAMMA1, math.pi,
                              math.log(2.0))
    with _wp(digits):
        return ConstantsTable(+mp.euler, stieltjes_gamma1(digits), +mp.pi,
                              +mp.log(2))


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials
# ---------------------------------------------------------------------------

_BERN_LOCK = threading.Lock()
_BERN: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact rational, from the defining recurrence
    sum_{k=0}^{n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    with _BERN_LOCK:
        while len(_BERN) <= n:
            m = len(_BERN)
            if m % 2 == 1:
                _BERN.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                if _BERN[k]:
                    acc += math.comb(m + 1, k) * _BERN[k]
            _BERN.append(-acc / (m + 1))
        return _BERN[n]


def bernoulli_number(n: int, digits: int = DEFAULT_DIGITS):
    b = bernoulli_exact(n)
    if _use_mp(digits):
        with _wp(digits):
            return mp.mpf(b.numerator) / b.denominator
    try:
        return float(b)
    except OverflowError:
        return math.inf if b > 0 else -math.inf


def bernoulli_sign_logabs(m: int) -> tuple[int, float]:
    """(sign, log|B_m|) for even m >= 2, via |B_m| = 2 m! zeta(m)/(2 pi)^m.

    Safe for indices where the Bernoulli number itself overflows float64.
    """
    if m < 2 or m % 2:
        raise DomainError("even index >= 2 required")
    zl = math.log(riemann_zeta(float(m))) if m <= 64 else 0.0
    logabs = math.log(2.0) + math.lgamma(m + 1) - m * LOG_2PI + zl
    sign = 1 if (m // 2) % 2 == 1 else -1
    return sign, logabs


def bernoulli_poly(n: int, a, digits: int = DEFAULT_DIGITS):
    """B_n(a) = sum_j C(n,j) B_j a^(n-j); exact coefficients, float powers."""
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    if _use_mp(digits):
        with _wp(digits):
            aa = mp.mpmathify(a)
            tot = mp.mpf(0)
            for j in range(n + 1):
                b = bernoulli_exact(j)
                if b:
                    c = mp.mpf(b.numerator) / b.denominator
                    tot += math.comb(n, j) * c * aa ** (n - j)
            return tot
    tot = 0.0
    for j in range(n + 1):
        b = bernoulli_exact(j)
        if b:
            tot += math.comb(n, j) * float(b) * float(a) ** (n - j)
    return tot


# float table B_{2j}/(2j)! for Euler-Maclaurin corrections
def _bfact(j: int) -> float:
    return float(bernoulli_exact(2 * j) / math.factorial(2 * j))


_B_FACT = None
_B_FACT_LOCK = threading.Lock()


def _bfact_table(J: int):
    global _B_FACT
    with _B_FACT_LOCK:
        if _B_FACT is None or len(_B_FACT) <= J:
            _B_FACT = [0.0] + [_bfact(j) for j in range(1, max(J, 14) + 1)]
    return _B_FACT


# ---------------------------------------------------------------------------
# Riemann zeta, its derivative, and truncated tails
# ---------------------------------------------------------------------------

_ZEM_M = 50       # head terms in the Euler-Maclaurin evaluation
_ZEM_J = 12       # correction terms
_ZT_Q = 10        # extra head terms for tails
_ZT_J = 10        # correction terms for tails


@lru_cache(maxsize=16384)
def _zeta_f(s: float) -> float:
    """zeta(s) for real s != 1, float64."""
    if s == 1.0:
        raise PoleError("zeta pole at s = 1")
    if s <= 0.0 and s == math.floor(s):
        n = int(-s)
        if n == 0:
            return -0.5
        if n % 2 == 0:
            return 0.0
        b = bernoulli_exact(n + 1)
        try:
            return -float(b) / (n + 1)
        except OverflowError:
            return math.inf if b < 0 else -math.inf
    if s >= 0.45:
        # Euler-Maclaurin; for smaller s the head and the M^(1-s)/(s-1)
        # correction cancel and digits are lost, so reflect instead.
        bf = _bfact_table(_ZEM_J)
        M = float(_ZEM_M)
        tot = sum(n ** (-s) for n in range(1, _ZEM_M + 1))
        tot += M ** (1.0 - s) / (s - 1.0) - 0.5 * M ** (-s)
        poch = s
        mpow = M ** (-s - 1.0)
        for j in range(1, _ZEM_J + 1):
            tot += bf[j] * poch * mpow
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            mpow /= M * M
        return tot
    # reflection zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    sn = math.sin(0.5 * math.pi * s)
    if sn == 0.0:
        return 0.0
    if 1.0 - s < 171.0:
        return (2.0 ** s * math.pi ** (s - 1.0) * sn * math.gamma(1.0 - s)
                * _zeta_f(1.0 - s))
    lg = (s * math.log(2.0) + (s - 1.0) * math.log(math.pi)
          + math.lgamma(1.0 - s) + math.log(_zeta_f(1.0 - s))
          + math.log(abs(sn)))
    if lg > 709.0:
        return math.copysign(math.inf, sn)
    return math.copysign(math.exp(lg), sn)


def riemann_zeta(s, digits: int = DEFAULT_DIGITS):
    """zeta(s) for real s != 1 (trivial zeros and the reflection range
    included)."""
    if not _use_mp(digits):
        return _zeta_f(float(s))
    with _wp(digits):
        if mp.mpf(s) == 1:
            raise PoleError("zeta pole at s = 1")
        return +mp.zeta(mp.mpf(s))


def _zeta_tail_f(s: float, M: int, log_weight: bool = False) -> float:
    """sum_{n>M} n^(-s) (optionally weighted by log n), for real s > 1.

    Hurwitz-style Euler-Maclaurin at a = M+1; never computed as
    zeta(s) - partial_sum (catastrophic cancellation).
    """
    if s <= 1.0:
        raise DomainError("tail requires s > 1")
    bf = _bfact_table(_ZT_J)
    a = M + 1
    head = 0.0
    for i in range(_ZT_Q):
        n = a + i
        t = n ** (-s)
        head += t * math.log(n) if log_weight else t
    A = float(a + _ZT_Q)
    lA = math.log(A)
    if not log_weight:
        tot = A ** (1.0 - s) / (s - 1.0) + 0.5 * A ** (-s)
        poch = s
        apow = A ** (-s - 1.0)
        for j in range(1, _ZT_J + 1):
            tot += bf[j] * poch * apow
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            apow /= A * A
        return head + tot
    # -d/ds of the expansion above
    tot = A ** (1.0 - s) * (lA / (s - 1.0) + 1.0 / (s - 1.0) ** 2)
    tot += 0.5 * lA * A ** (-s)
    poch = s
    dpoch = 1.0  # sum_{i} 1/(s+i) times poch, built incrementally
    hsum = 1.0 / s
    apow = A ** (-s - 1.0)
    for j in range(1, _ZT_J + 1):
        tot += bf[j] * (poch * lA - poch * hsum) * apow
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        hsum += 1.0 / (s + 2 * j - 1) + 1.0 / (s + 2 * j)
        apow /= A * A
    return head + tot


def zeta_tail(s, M: int, digits: int = DEFAULT_DIGITS,
              log_weight: bool = False):
    """sum_{n>M} n^(-s), optionally log-weighted (s > 1)."""
    if not _use_mp(digits):
        return _zeta_tail_f(float(s), int(M), log_weight)
    with _wp(digits):
        ss = mp.mpf(s)
        if ss <= 1:
            raise DomainError("tail requires s > 1")
        if log_weight:
            return -mp.zeta(ss, M + 1, 1)
        return +mp.zeta(ss, M + 1)


def riemann_zeta_deriv(s, digits: int = DEFAULT_DIGITS):
    """zeta'(s) for s > 1, as -(head + log-weighted tail)."""
    if not _use_mp(digits):
        s = float(s)
        if s <= 1.0:
            raise DomainError("riemann_zeta_deriv requires s > 1")
        M = 50
        head = sum(math.log(n) * n ** (-s) for n in range(2, M + 1))
        return -(head + _zeta_tail_f(s, M, log_weight=True))
    with _wp(digits):
        ss = mp.mpf(s)
        if ss <= 1:
            raise DomainError("riemann_zeta_deriv requires s > 1")
        return +mp.zeta(ss, 1, 1)


@lru_cache(maxsize=256)
def _zeta_deriv_nonpos_int_f(m: int) -> float:
    """zeta'(-m) for integer m >= 0, via the functional equation."""
    if m == 0:
        return -0.5 * LOG_2PI
    if m % 2 == 0:
        j = m // 2
        return ((-1) ** j * math.factorial(m) * _zeta_f(float(m + 1))
                / (2.0 * (2.0 * math.pi) ** m))
    j = (m + 1) // 2  # m = 2j - 1
    psi2j = -EULER_GAMMA + sum(1.0 / i for i in range(1, 2 * j))
    z2j = _zeta_f(float(2 * j))
    zp2j = riemann_zeta_deriv(float(2 * j))
    return (-2.0 * (2.0 * math.pi) ** (-2 * j) * (-1) ** j
            * math.factorial(2 * j - 1)
            * ((psi2j - LOG_2PI) * z2j + zp2j))


def zeta_deriv_nonpos_int(m: int, digits: int = DEFAULT_DIGITS):
    """zeta'(-m) for integer m >= 0."""
    if m < 0:
        raise DomainError("m must be >= 0")
    if not _use_mp(digits):
        return _zeta_deriv_nonpos_int_f(int(m))
    with _wp(digits):
        return +mp.zeta(mp.mpf(-m), 1, 1)


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------

_PSI_MP_TERMS = 16
_PSI_MP_SHIFT = 45.0


def _near_nonpos_int(z: complex, eps: float) -> bool:
    r = round(z.real)
    return (r <= 0 and abs(z.real - r) < eps and abs(z.imag) < eps)


def _digamma_mp(z):
    zz = mp.mpmathify(z)
    refl = mp.re(zz) < mp.mpf("0.5")
    w = 1 - zz if refl else zz
    acc = mp.mpf(0)
    while abs(w) < _PSI_MP_SHIFT:
        acc -= 1 / w
        w += 1
    r = 1 / w
    r2 = r * r
    s = mp.mpf(0)
    for n in range(_PSI_MP_TERMS, 0, -1):
        b = bernoulli_exact(2 * n)
        s = (s + mp.mpf(b.numerator) / (b.denominator * 2 * n)) * r2
    out = acc + mp.log(w) - r / 2 - s
    if refl:
        out -= mp.pi * mp.cot(mp.pi * zz)
    return out


def digamma(z, digits: int = DEFAULT_DIGITS):
    """psi(z) off the poles z = 0, -1, -2, ...

    Recurrence shift to |z| >= R, then the Bernoulli asymptotic
    log z - 1/(2z) - sum B_{2n}/(2n z^{2n}); reflection for Re z < 1/2.
    """
    zc = complex(z)
    if _near_nonpos_int(zc, 10.0 ** (-digits)):
        raise PoleError(f"digamma pole at z = {z}")
    if not _use_mp(digits):
        out = complex(_backend.psi_vec(zc))
        if zc.imag == 0.0 and not isinstance(z, complex):
            return out.real
        return out
    with _wp(digits):
        out = _digamma_mp(z)
        if mp.im(mp.mpmathify(z)) == 0 and not isinstance(z, (complex, mp.mpc)):
            return mp.re(out)
        return +out


# ---------------------------------------------------------------------------
# double zeta (depth-2, convention sum over p > q > 0)
# ---------------------------------------------------------------------------

def double_zeta(m: int, n: int, digits: int = DEFAULT_DIGITS,
                tol: float = 1e-10):
    """zeta(m, n) = sum_{p>q>0} p^(-m) q^(-n), m >= 2, n >= 1."""
    if not (isinstance(m, int) and isinstance(n, int)) or m < 2 or n < 1:
        raise DomainError("double_zeta requires integers m >= 2, n >= 1")
    if _use_mp(digits):
        with _wp(digits):
            Q = max(200, int(mp.ceil((mp.mpf(10) ** (digits + 4))
                                     ** (mp.mpf(1) / (n + m + 2)))))
            tot = mp.mpf(0)
            for q in range(1, Q + 1):
                tot += mp.zeta(m, q + 1) / mp.mpf(q) ** n
            tot += (mp.zeta(n + m - 1, Q + 1) / (m - 1)
                    - mp.zeta(n + m, Q + 1) / 2
                    + mp.mpf(m) / 12 * mp.zeta(n + m + 1, Q + 1))
            return +tot
    Q = max(64, int(math.ceil((100.0 / tol) ** (1.0 / (n + m + 2)))))
    q = np.arange(1, Q + 1, dtype=np.float64)
    # vectorized Euler-Maclaurin for sum_{p>q} p^(-m) at every q
    bf = _bfact_table(_ZT_J)
    A = q + 1.0 + _ZT_Q
    inner = np.zeros_like(q)
    for i in range(_ZT_Q):
        inner += (q + 1.0 + i) ** (-float(m))
    inner += A ** (1.0 - m) / (m - 1.0) + 0.5 * A ** (-float(m))
    poch = float(m)
    apow = A ** (-float(m) - 1.0)
    for j in range(1, _ZT_J + 1):
        inner += bf[j] * poch * apow
        poch *= (m + 2 * j - 1) * (m + 2 * j)
        apow /= A * A
    tot = float(np.sum(inner * q ** (-float(n))))
    tot += (_zeta_tail_f(float(n + m - 1), Q) / (m - 1)
            - _zeta_tail_f(float(n + m), Q) / 2.0
            + m / 12.0 * _zeta_tail_f(float(n + m + 1), Q))
    return tot


# ---------------------------------------------------------------------------
# eta, polylogarithm, generalized polylogarithm
# ---------------------------------------------------------------------------

def _eta_f(s: float) -> float:
    """Dirichlet eta (alternating zeta); entire, eta(1) = log 2."""
    if s == 1.0:
        return math.log(2.0)
    return (1.0 - 2.0 ** (1.0 - s)) * _zeta_f(s)


def _eta(s, digits: int = DEFAULT_DIGITS):
    if not _use_mp(digits):
        return _eta_f(float(s))
    with _wp(digits):
        return +mp.altzeta(mp.mpf(s))


def rational_value(q, digits: int = DEFAULT_DIGITS):
    """Exact rational (Fraction or int pair-free) at working precision."""
    if not _use_mp(digits):
        return q.numerator / q.denominator if hasattr(q, "numerator") else float(q)
    with _wp(digits):
        if hasattr(q, "numerator"):
            return mp.mpf(q.numerator) / q.denominator
        return mp.mpf(q)


def _lerch_tail(a: float, s: float, M: int, log_weight: bool = False,
                tol: float = 5e-17, depth: int = 32,
                digits: int = DEFAULT_DIGITS):
    """sum_{n>M} e^(2 pi i a n) n^(-s) (optionally log n weighted), a not an
    integer; iterated Abel summation on a finite-difference table."""
    if _use_mp(digits):
        return _lerch_tail_mp(a, s, M, log_weight, digits)
    z = cmath.exp(2j * math.pi * a)
    if abs(z - 1.0) < 1e-12:
        raise DomainError("phase parameter must not be an integer")
    vals = []
    for i in range(depth):
        n = M + 1 + i
        b = n ** (-s)
        if log_weight:
            b *= math.log(n)
        vals.append(b)
    fac = z ** (M + 1) / (1.0 - z)
    tot = 0.0 + 0.0j
    small = 0
    for _j in range(depth - 2):
        term = fac * vals[0]
        tot += term
        if abs(term) < tol * (1.0 + abs(tot)):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
        fac *= z / (1.0 - z)
    return tot


def _lerch_tail_mp(a, s, M: int, log_weight: bool, digits: int):
    # the difference table shrinks like ((s+j)/M * |z/(1-z)|)^j, so the
    # depth needed scales with the digit count
    depth = int(digits) + 18
    with _wp(digits):
        z = mp.expjpi(2 * mp.mpf(a))
        if abs(z - 1) < mp.mpf(10) ** (-mp.mp.dps + 4):
            raise DomainError("phase parameter must not be an integer")
        vals = []
        for i in range(depth):
            n = mp.mpf(M + 1 + i)
            b = n ** (-s)
            if log_weight:
                b *= mp.log(n)
            vals.append(b)
        fac = z ** (M + 1) / (1 - z)
        tot = mp.mpc(0)
        rel = mp.mpf(10) ** (-mp.mp.dps)
        small = 0
        for _j in range(depth - 2):
            term = fac * vals[0]
            tot += term
            if abs(term) < rel * (1 + abs(tot)):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
            fac *= z / (1 - z)
        return +tot


def _asum(gen, max_terms: int = 400):
    """Optimal-truncation summation: add terms while |t| strictly decreases;
    stop at the first non-decrease or non-finite term.

    Returns (value, first_omitted_abs, terms_kept).
    """
    tot = None
    prev = None
    kept = 0
    omitted = 0.0
    for i, t in enumerate(gen):
        if i >= max_terms:
            omitted = abs(t)
            break
        at = abs(t)
        fin = math.isfinite(at) if isinstance(at, float) else mp.isfinite(at)
        if not fin:
            omitted = prev if prev is not None else math.inf
            break
        if at == 0:
            # exactly-zero term (e.g. a trivial zeta zero): contributes
            # nothing and must not become the comparison baseline
            kept += 1
            continue
        if prev is not None and at >= prev:
            omitted = at
            break
        tot = t if tot is None else tot + t
        prev = at
        kept += 1
    if tot is None:
        tot = 0.0
    return tot, omitted, kept


def polylog(s, t, digits: int = DEFAULT_DIGITS, tol: float = 1e-15):
    """Li_s(t) = sum t^n / n^s for |t| <= 1, t != 1 (s > 1 on the circle,
    or t = -1 with s > 0)."""
    tc = complex(t)
    at = abs(tc)
    if at > 1.0 + 1e-14:
        raise DivergenceError("polylog requires |t| <= 1")
    on_circle = at > 1.0 - 1e-14
    if abs(tc - 1.0) < 1e-14:
        raise DivergenceError("polylog diverges at t = 1")
    s = float(s) if not _use_mp(digits) else s
    if on_circle and abs(tc + 1.0) > 1e-14 and float(s) <= 1.0:
        raise DivergenceError("polylog on |t|=1 requires s > 1")
    if abs(tc + 1.0) < 1e-14 and float(s) <= 0.0:
        raise DivergenceError("polylog at t=-1 requires s > 0")
    if tc == 0:
        return 0.0
    if _use_mp(digits):
        with _wp(digits):
            return +mp.polylog(mp.mpf(s), mp.mpmathify(t))
    if abs(tc + 1.0) < 1e-14:
        return -_eta_f(s)
    if on_circle:
        M = 256
        n = np.arange(1, M + 1, dtype=np.float64)
        ph = np.angle(tc)
        head = np.sum(np.exp(1j * ph * n) * n ** (-s))
        val = head + _lerch_tail(ph / (2.0 * math.pi), s, M)
        return complex(val) if abs(tc.imag) > 0 else float(val.real)
    if at > 0.9 and tc.imag == 0 and tc.real > 0:
        # deep inside the slow-convergence wedge: exponential-argument form
        return _gen_polylog_exp(1, s, -math.log(tc.real))
    nmax = int(math.ceil(math.log(tol * (1.0 - at) + 1e-300)
                         / math.log(at))) if at > 1e-8 else 64
    nmax = max(8, min(nmax, 10 ** 7))
    n = np.arange(1, nmax + 1, dtype=np.float64)
    if tc.imag == 0:
        val = float(np.sum(np.sign(tc.real) ** n
                           * np.exp(n * math.log(at)) * n ** (-s)))
        return val
    val = np.sum(np.exp(n * cmath.log(tc)) * n ** (-s))
    return complex(val)


def gen_polylog(N: int, s, t, digits: int = DEFAULT_DIGITS,
                tol: float = 1e-15):
    """N-th generalized polylogarithm  sum_{n>=1} t^(n^N) / n^s."""
    if not isinstance(N, int) or N < 1:
        raise GateError("gen_polylog requires integer N >= 1")
    if N == 1:
        return polylog(s, t, digits=digits, tol=tol)
    tc = complex(t)
    at = abs(tc)
    if at > 1.0 + 1e-14:
        raise DivergenceError("gen_polylog requires |t| <= 1")
    if abs(tc - 1.0) < 1e-14:
        raise DivergenceError("gen_polylog diverges at t = 1")
    if tc == 0:
        return 0.0
    sf = float(s)
    if abs(tc + 1.0) < 1e-14:
        if sf <= 0.0:
            raise DivergenceError("gen_polylog at t=-1 requires s > 0")
        # (-1)^(n^N) = (-1)^n, so the value is -eta(s) for every N
        if _use_mp(digits):
            with _wp(digits):
                return -mp.altzeta(mp.mpf(s))
        return -_eta_f(sf)
    on_circle = at > 1.0 - 1e-14
    if on_circle and sf <= 1.0:
        raise DivergenceError("gen_polylog on |t|=1 requires s > 1")
    if _use_mp(digits):
        with _wp(digits):
            tt = mp.mpmathify(t)
            ss = mp.mpf(s)
            tot = mp.mpf(0)
            n = 1
            while True:
                term = tt ** (n ** N) / mp.mpf(n) ** ss
                tot += term
                if abs(term) < mp.mpf(10) ** (-(digits + 6)) and n > 4:
                    break
                n += 1
                if n > 10 ** 6:
                    break
            return +tot
    if on_circle:
        # absolutely convergent but unaccelerated; honest direct sum
        nmax = int(min(2e7, math.ceil((1.0 / ((sf - 1.0) * tol))
                                      ** (1.0 / (sf - 1.0)))))
        n = np.arange(1, nmax + 1, dtype=np.float64)
        val = np.sum(np.exp(1j * np.angle(tc) * n ** N) * n ** (-sf))
        return complex(val)
    lt = cmath.log(tc)
    nmax = max(4, int(math.ceil((math.log(tol * (1.0 - at) + 1e-300)
                                 / math.log(at)) ** (1.0 / N))) + 2)
    n = np.arange(1, nmax + 1, dtype=np.float64)
    with np.errstate(under="ignore"):
        val = np.sum(np.exp(n ** N * lt) * n ** (-sf))
    if tc.imag == 0:
        return float(val.real)
    return complex(val)


# ---------------------------------------------------------------------------
# exponential-argument generalized polylogarithms (Mellin small-argument
# expansions); these power the integral representations
# ---------------------------------------------------------------------------

def _gen_polylog_exp_f(N: int, k: float, w: complex):
    """sum_{n>=1} e^(-n^N w) / n^k for Re w > 0 (float64).

    Small |w|: Mellin expansion Gamma(r)/N * w^(-r) + sum_j zeta(k - N j)
    (-w)^j / j!, r = (1-k)/N, with the double-pole patch when r is a
    non-positive integer.  Large w: direct sum.
    """
    wc = complex(w)
    if wc.real <= 0:
        raise DomainError("requires Re w > 0")
    # The small-argument expansion converges for N=1 (radius 2 pi) but is
    # only asymptotic for N >= 2, where the direct sum is cheap anyway.
    switch = 0.5 if N == 1 else 1e-3
    if abs(wc) > switch:
        nmax = max(1, int(math.ceil((-math.log(1e-18) / wc.real)
                                    ** (1.0 / N))))
        nmax = min(nmax, 10 ** 7)
        n = np.arange(1, nmax + 1, dtype=np.float64)
        with np.errstate(under="ignore"):
            val = np.sum(np.exp(-n ** N * wc) * n ** (-k))
        return complex(val)
    r = (1.0 - k) / N
    lw = cmath.log(wc)
    j0 = int(round(-r)) if abs(r - round(r)) < 1e-12 and r <= 1e-12 else None

    def terms():
        wj = 1.0 + 0.0j  # (-w)^j / j!
        for j in range(0, 200):
            if j0 is not None and j == j0:
                # resonant patch: Gamma pole + zeta pole cancel
                sgn = -1.0 if j0 % 2 else 1.0
                psi_j = -EULER_GAMMA + sum(1.0 / i for i in range(1, j0 + 1))
                yield (sgn / math.factorial(j0) * wc ** j0
                       * (EULER_GAMMA + (psi_j - lw) / N))
            else:
                yield _zeta_f(k - N * j) * wj
            wj *= -wc / (j + 1)

    tot, omitted, _ = _asum(terms())
    if j0 is None:
        tot += math.gamma(r) / N * cmath.exp(-r * lw)
    return tot


def _gen_polylog_exp_mp(N: int, k, w):
    ww = mp.mpmathify(w)
    if mp.re(ww) <= 0:
        raise DomainError("requires Re w > 0")
    kk = mp.mpf(k)
    switch = mp.mpf("0.5") if N == 1 else mp.mpf("1e-3")
    if abs(ww) > switch:
        tot = mp.mpf(0)
        n = 1
        while True:
            term = mp.e ** (-mp.mpf(n) ** N * ww) / mp.mpf(n) ** kk
            tot += term
            if abs(term) < mp.mpf(10) ** (-(mp.mp.dps + 4)):
                break
            n += 1
        return tot
    r = (1 - kk) / N
    j0 = None
    if mp.isint(-r) and -r >= 0:
        j0 = int(mp.nint(-r))

    def terms():
        for j in range(0, 400):
            wj = (-ww) ** j / mp.factorial(j)
            if j0 is not None and j == j0:
                sgn = -1 if j0 % 2 else 1
                yield (mp.mpf(sgn) / mp.factorial(j0) * ww ** j0
                       * (mp.euler + (mp.digamma(j0 + 1) - mp.log(ww)) / N))
            else:
                yield mp.zeta(kk - N * j) * wj

    tot, omitted, _ = _asum(terms())
    if j0 is None:
        tot += mp.gamma(r) / N * ww ** (-r)
    return tot


def _gen_polylog_exp(N: int, k, w, digits: int = DEFAULT_DIGITS):
    if not _use_mp(digits):
        return _gen_polylog_exp_f(N, float(k), complex(w))
    with _wp(digits):
        return +_gen_polylog_exp_mp(N, k, w)


def _gen_polylog_neg_exp_f(N: int, k: float, w) -> complex:
    """N-Li_k(-e^(-w)) = -sum_j eta(k - N j) (-w)^j / j! for small w >= 0;
    direct alternating sum otherwise.  eta is entire: no patch needed."""
    wc = complex(w)
    if wc.real < 0:
        raise DomainError("requires Re w >= 0")
    switch = 0.5 if N == 1 else 1e-3
    if abs(wc) > switch:
        nmax = max(1, int(math.ceil((-math.log(1e-18)
                                     / max(wc.real, 1e-300)) ** (1.0 / N))))
        nmax = min(nmax, 10 ** 7)
        n = np.arange(1, nmax + 1, dtype=np.float64)
        with np.errstate(under="ignore"):
            val = np.sum((-1.0) ** n * np.exp(-n ** N * wc) * n ** (-k))
        return complex(val)

    def terms():
        wj = 1.0 + 0.0j
        for j in range(0, 250):
            yield _eta_f(k - N * j) * wj
            wj *= -wc / (j + 1)

    tot, omitted, _ = _asum(terms())
    return -tot


def _gen_polylog_neg_exp(N: int, k, w, digits: int = DEFAULT_DIGITS):
    if not _use_mp(digits):
        return _gen_polylog_neg_exp_f(N, float(k), w)
    with _wp(digits):
        ww = mp.mpmathify(w)
        if abs(ww) > mp.mpf("5e-4"):
            tot = mp.mpf(0)
            n = 1
            while True:
                term = ((-1) ** n * mp.e ** (-mp.mpf(n) ** N * ww)
                        / mp.mpf(n) ** mp.mpf(k))
                tot += term
                if abs(term) < mp.mpf(10) ** (-(mp.mp.dps + 4)) and n > 2:
                    break
                n += 1
            return +tot

        def terms():
            for j in range(0, 400):
                yield (mp.altzeta(mp.mpf(k) - N * j) * (-ww) ** j
                       / mp.factorial(j))

        tot, omitted, _ = _asum(terms())
        return -(+tot)
