"""Herglotz-type series evaluators.

The central object is the two-parameter series

    sum_{n>=1} (psi(n^N x) - log(n^N x)) / n^k ,   k, N > 0,  k + N > 1,

for x off the cut (-inf, 0].  Three independent evaluation routes are
provided: a tail-corrected head sum (``ext_F``), an exponential-kernel
integral (``ext_F_via_integral``), and a Binet-style integral against a
generalized Lambert series (``ext_F_via_binet``).  The classical Herglotz
function F and the higher F_k are thin wrappers around the first route;
``zagier_P`` composes F into the two-variable P(x, y).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp

from . import _backend, special
from ._quad_core import adaptive, span_points
from .errors import DivergenceError, DomainError, GateError
from .lambert import _z_req_mp, lambert_kernel_sum
from .reporting import EvalOutcome

__all__ = [
    "HerglotzParams",
    "ext_F",
    "herglotz_F",
    "higher_F_k",
    "ext_F_via_integral",
    "ext_F_via_binet",
    "zagier_P",
]

_EPS = 2.2e-16
_PI = math.pi

# head length is grown until every tail argument n^N x (n > M) has modulus
# at least this, so the digamma asymptotic used for the tail is deep inside
# its useful range
_HEAD_RADIUS_F = 10.0
_HEAD_RADIUS_MP = 45.0
_HEAD_CAP_F = 2 ** 24
_HEAD_CAP_MP = 30000
_TAIL_ORDERS_F = 14


@dataclass(frozen=True)
class HerglotzParams:
    """Exponent pair (k, N); both positive with k + N > 1."""

    k: float
    N: float

    def __post_init__(self):
        kf, nf = float(self.k), float(self.N)
        if not (math.isfinite(kf) and math.isfinite(nf)):
            raise GateError("k and N must be finite")
        if kf <= 0.0 or nf <= 0.0:
            raise GateError("k and N must be positive")
        if kf + nf <= 1.0:
            raise GateError("k + N must exceed 1")

    @property
    def k_integer(self) -> bool:
        return float(self.k) == int(self.k)

    @property
    def N_integer(self) -> bool:
        return float(self.N) == int(self.N)

    @property
    def k_odd(self) -> bool:
        return self.k_integer and int(self.k) % 2 == 1

    @property
    def N_odd(self) -> bool:
        return self.N_integer and int(self.N) % 2 == 1


def _params(p) -> HerglotzParams:
    if isinstance(p, HerglotzParams):
        return p
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return HerglotzParams(float(p[0]), float(p[1]))
    raise GateError("expected HerglotzParams or a (k, N) pair")


def _off_cut(x) -> complex:
    xc = complex(x)
    if not (math.isfinite(xc.real) and math.isfinite(xc.imag)):
        raise DomainError("x must be finite")
    if xc.imag == 0.0 and xc.real <= 0.0:
        raise DomainError("x must avoid the cut (-inf, 0]")
    return xc


# -- route 1: head sum + digamma-asymptotic tail -----------------------------

def _tail_f(k: float, N: float, x: complex, M: int):
    """Tail sum_{n>M} (psi(n^N x) - log(n^N x))/n^k from the asymptotic
    psi(z) - log z ~ -1/(2z) - sum_m B_{2m}/(2m) z^{-2m}.

    Returns (value, first_omitted_bound, abs_size)."""
    t0 = -special._zeta_tail_f(k + N, M) / (2.0 * x)
    tot = t0
    size = abs(t0)
    prev = math.inf
    fot = 0.0
    for m in range(1, _TAIL_ORDERS_F + 1):
        b = float(special.bernoulli_exact(2 * m)) / (2 * m)
        term = -b * x ** (-2 * m) * special._zeta_tail_f(k + 2 * m * N, M)
        mag = abs(term)
        fot = mag
        if mag >= prev or mag == 0.0:
            break
        tot += term
        size += mag
        prev = mag
    return tot, fot, size


def _ext_F_f(k: float, N: float, x: complex, tol) -> EvalOutcome:
    ax = abs(x)
    M = max(2, math.ceil((_HEAD_RADIUS_F / ax) ** (1.0 / N)))
    while True:
        if M > _HEAD_CAP_F:
            raise DivergenceError(
                "head sum would exceed 2^24 terms; x is too close to 0 "
                "for this (k, N)")
        head, abs_sum = _backend.fkn_head(k, N, x, M)
        tail, fot, tail_size = _tail_f(k, N, x, M)
        err = fot + _EPS * (abs_sum + tail_size)
        if tol is None or err <= tol:
            break
        M *= 2
    return EvalOutcome(value=head + tail, abs_err=err, terms_used=M,
                       method="series_tail")


def _ext_F_mp(k, N, x, tol, digits: int) -> EvalOutcome:
    with special._wp(digits):
        xm = mp.mpmathify(x)
        # mpmathify (not mp.mpf) so exact Fraction exponents convert at
        # working precision; callers rely on this for rational k, N
        kk = mp.mpmathify(k)
        NN = mp.mpmathify(N)
        radius = max(_HEAD_RADIUS_MP, _z_req_mp(digits))
        M = max(2, int(mp.ceil((radius / abs(xm)) ** (1.0 / NN))))
        M = min(M, _HEAD_CAP_MP)
        lx = mp.log(xm)
        head = mp.mpc(0)
        abs_sum = mp.mpf(0)
        for n in range(1, M + 1):
            nn = mp.mpf(n)
            t = (mp.psi(0, nn ** NN * xm) - NN * mp.log(nn) - lx) / nn ** kk
            head += t
            abs_sum += abs(t)
        tot = -special.zeta_tail(kk + NN, M, digits) / (2 * xm)
        size = abs(tot)
        prev = mp.inf
        fot = mp.mpf(0)
        orders = max(24, int(2.6 * _z_req_mp(digits)))
        for m in range(1, orders + 1):
            term = (-mp.bernoulli(2 * m) / (2 * m) * xm ** (-2 * m)
                    * special.zeta_tail(kk + 2 * m * NN, M, digits))
            mag = abs(term)
            fot = mag
            if mag >= prev or mag == 0:
                break
            tot += term
            size += mag
            prev = mag
        val = head + tot
        # fot is an honest bound even when M hit the cap: the order loop
        # stops at the optimal truncation for the head length actually used
        err = float(fot) + float(abs_sum + size) * 10.0 ** (-digits)
        if val.imag == 0:
            val = +val.real
        else:
            val = +val
        return EvalOutcome(value=val, abs_err=err, terms_used=M,
                           method="series_tail")


def ext_F(p, x, tol: float | None = None,
          digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Head sum of M terms plus digamma-asymptotic tail.

    The tail is -zt(k+N)/(2x) - sum_m B_{2m}/(2m) x^{-2m} zt(k+2mN) with
    zt(s) = sum_{n>M} n^{-s}; the order count adapts by optimal truncation
    and M is doubled until the first omitted order is below ``tol`` (when
    one is requested).
    """
    pp = _params(p)
    _off_cut(x)
    if not special._use_mp(digits):
        return _ext_F_f(float(pp.k), float(pp.N), complex(x), tol)
    return _ext_F_mp(pp.k, pp.N, x, tol, digits)


def herglotz_F(x, tol: float | None = None,
               digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """F(x) = sum_n (psi(nx) - log(nx))/n, the (k, N) = (1, 1) case."""
    return ext_F(HerglotzParams(1.0, 1.0), x, tol, digits)


def higher_F_k(k: int, x, tol: float | None = None,
               digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """F_k(x) = sum_n psi(nx)/n^k for integer k >= 2.

    Evaluated through the tail-corrected series: the log part of the
    summand contributes zeta'(k) - zeta(k) Log x, so
    F_k(x) = extF_{k,1}(x) - zeta'(k) + zeta(k) Log x.
    """
    if int(k) != k or int(k) < 2:
        raise GateError("k must be an integer >= 2")
    k = int(k)
    base = ext_F(HerglotzParams(float(k), 1.0), x, tol, digits)
    if not special._use_mp(digits):
        zk = special.riemann_zeta(float(k))
        zdk = special.riemann_zeta_deriv(float(k))
        corr = -zdk + zk * cmath.log(complex(x))
        val = base.value + corr
        err = base.abs_err + _EPS * (abs(zdk) + abs(corr))
        return EvalOutcome(value=val, abs_err=err,
                           terms_used=base.terms_used, method=base.method)
    with special._wp(digits):
        xm = mp.mpmathify(x)
        corr = (-special.riemann_zeta_deriv(k, digits)
                + special.riemann_zeta(k, digits) * mp.log(xm))
        val = base.value + corr
        if hasattr(val, "imag") and val.imag == 0:
            val = +val.real
        err = base.abs_err + float(abs(corr)) * 10.0 ** (-digits)
        return EvalOutcome(value=val, abs_err=err,
                           terms_used=base.terms_used, method=base.method)


# -- route 2: exponential-kernel integral ------------------------------------

@lru_cache(maxsize=1)
def _kernel_coeffs_f():
    # B_{2j} / (2j)! for the small-t expansion of 1/(1-e^{-t}) - 1/t
    return tuple(float(special.bernoulli_exact(2 * j))
                 / math.factorial(2 * j) for j in range(1, 7))


def _kernel_K_f(t: float) -> float:
    """1/(1 - e^{-t}) - 1/t, series below t = 0.1 to dodge the cancellation."""
    if t < 0.1:
        acc = 0.5
        tp = t
        for c in _kernel_coeffs_f():
            acc += c * tp
            tp *= t * t
        return acc
    return 1.0 / (-math.expm1(-t)) - 1.0 / t


def _kernel_K_mp(t):
    if t < mp.mpf("0.1"):
        acc = mp.mpf(1) / 2
        tp = +t
        target = mp.mpf(10) ** (-(mp.dps + 4))
        j = 1
        while True:
            term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * tp
            acc += term
            if abs(term) < target:
                break
            tp *= t * t
            j += 1
        return acc
    return 1 / (-mp.expm1(-t)) - 1 / t


def ext_F_via_integral(p, x, tol: float = 1e-12,
                       digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """-integral_0^inf (1/(1-e^{-t}) - 1/t) * Li(e^{-xt}) dt, Re x > 0,
    where Li is the exponential form of the generalized polylogarithm
    sum_n n^{-k} e^{-n^N x t}.

    The integrand has at worst an integrable t^{-(1-k)/N} (or log)
    singularity at 0 — handled by the substitution t = e^{-v} — and decays
    like e^{-Re(x) t} at infinity.
    """
    pp = _params(p)
    xc = _off_cut(x)
    if xc.real <= 0.0:
        raise DomainError("integral route requires Re(x) > 0")
    k, N = float(pp.k), float(pp.N)

    if special._use_mp(digits):
        with special._wp(digits):
            xm = mp.mpmathify(x)

            def f(t):
                if t <= 0:
                    return mp.mpf(0)
                return -_kernel_K_mp(t) * special._gen_polylog_exp(
                    N, k, xm * t, digits)

            T = (mp.dps * mp.log(10) + 10) / mp.re(xm)
            val, qerr = mp.quad(
                f, [0, mp.mpf("0.05"), 2, 10, T], error=True)
            if hasattr(val, "imag") and val.imag == 0:
                val = +val.real
            return EvalOutcome(value=val, abs_err=float(qerr) + 10.0 ** (-digits),
                               terms_used=0, method="integral_kernel")

    def f(t: float):
        return -_kernel_K_f(t) * special._gen_polylog_exp(N, k, xc * t)

    # (0, t0]: t = e^{-v}; the integrand's t^{-a} edge (a < 1 since k+N > 1)
    # becomes e^{-(1-a)v}
    t0 = 0.05
    a_edge = max(0.0, (1.0 - k) / N)
    v0 = -math.log(t0)
    V = min(1500.0, 50.0 / max(0.05, 1.0 - a_edge))

    def g(v: float):
        t = math.exp(-v)
        return f(t) * t

    q1 = adaptive(g, span_points(v0, V, (8.0, 20.0, 120.0)), tol=tol / 2.0)
    T = max(5.0, 48.0 / xc.real)
    q2 = adaptive(f, span_points(t0, T, (2.0, 10.0)), tol=tol / 2.0)
    tail = 2.0 * math.exp(-xc.real * T)
    val = q1.value + q2.value
    err = q1.abs_err + q2.abs_err + tail
    return EvalOutcome(value=val, abs_err=err,
                       terms_used=q1.panels + q2.panels,
                       method="integral_kernel")


# -- route 3: Binet-style integral against a Lambert kernel ------------------

def ext_F_via_binet(p, x, tol: float = 1e-12,
                    digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """-integral_0^inf L(t) * 2t/(t^2 + x^2) dt  -  zeta(k+N)/(2x), Re x > 0,
    with L(t) = sum_n n^{-k} / (e^{2 pi n^N t} - 1).
    """
    pp = _params(p)
    xc = _off_cut(x)
    if xc.real <= 0.0:
        raise DomainError("integral route requires Re(x) > 0")
    k, N = float(pp.k), float(pp.N)

    if special._use_mp(digits):
        with special._wp(digits):
            xm = mp.mpmathify(x)
            x2 = xm * xm

            def f(t):
                if t <= 0:
                    return mp.mpf(0)
                return (-2 * t * lambert_kernel_sum(k, N, t, digits)
                        / (t * t + x2))

            T = (mp.dps * mp.log(10) + 10) / (2 * mp.pi)
            pts = sorted({mp.mpf(0), mp.mpf("0.05"), mp.mpf("0.5"),
                          mp.mpf(2), mp.mpf(10), abs(xm), T})
            pts = [q for q in pts if q <= T]
            val, qerr = mp.quad(f, pts, error=True)
            val = val - special.riemann_zeta(k + N, digits) / (2 * xm)
            if hasattr(val, "imag") and val.imag == 0:
                val = +val.real
            return EvalOutcome(value=val,
                               abs_err=float(qerr) + 10.0 ** (-digits),
                               terms_used=0, method="binet_lambert")

    x2 = xc * xc

    def f(t: float):
        return -2.0 * t * lambert_kernel_sum(k, N, t) / (t * t + x2)

    # e^{-2 pi T} ~ 3e-25 at T = 9; widen if the 1/(t^2+x^2) pole shadow
    # (near t = |x| for x leaning imaginary) sits further out
    T = max(9.0, 1.5 * abs(xc))
    pts = sorted({0.0, 0.05, 0.5, 2.0, abs(xc), 10.0, T})
    pts = [q for q in pts if q <= T]
    quad = adaptive(f, pts, tol=tol)
    zkn = special.riemann_zeta(k + N)
    val = quad.value - zkn / (2.0 * xc)
    tail = math.exp(-2.0 * _PI * T) * special.riemann_zeta(max(k, 1.1))
    err = quad.abs_err + tail + _EPS * abs(zkn / (2.0 * xc))
    return EvalOutcome(value=val, abs_err=err, terms_used=quad.panels,
                       method="binet_lambert")


# -- Zagier's two-variable P -------------------------------------------------

def zagier_P(x: float, y: float,
             digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """P(x, y) = F(x) - F(y) + Li_2(y/x) - pi^2/6
               + log(x/y) (gamma - log(x-y)/2 + log(x/y)/4)  for x > y > 0."""
    xf, yf = float(x), float(y)
    if not (xf > yf > 0.0):
        raise DomainError("requires x > y > 0")
    Fx = herglotz_F(x, digits=digits)
    Fy = herglotz_F(y, digits=digits)
    if not special._use_mp(digits):
        li = special.polylog(2.0, yf / xf)
        lr = math.log(xf / yf)
        g = special.EULER_GAMMA
        val = (complex(Fx.value).real - complex(Fy.value).real
               + complex(li).real - _PI * _PI / 6.0
               + lr * (g - 0.5 * math.log(xf - yf) + 0.25 * lr))
        err = Fx.abs_err + Fy.abs_err + _EPS * (abs(complex(li)) + 10.0)
        return EvalOutcome(value=val, abs_err=err,
                           terms_used=Fx.terms_used + Fy.terms_used,
                           method="series_tail")
    with special._wp(digits):
        xm, ym = mp.mpf(x), mp.mpf(y)
        li = special.polylog(2, ym / xm, digits)
        lr = mp.log(xm / ym)
        g = special.euler_gamma(digits)
        val = (mp.re(mp.mpmathify(Fx.value)) - mp.re(mp.mpmathify(Fy.value))
               + mp.re(mp.mpmathify(li)) - mp.pi ** 2 / 6
               + lr * (g - mp.log(xm - ym) / 2 + lr / 4))
        err = Fx.abs_err + Fy.abs_err + float(abs(li)) * 10.0 ** (-digits)
        return EvalOutcome(value=+val, abs_err=err,
                           terms_used=Fx.terms_used + Fy.terms_used,
                           method="series_tail")
