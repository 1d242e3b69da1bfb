"""J-type integrals over (0, 1) and the adaptive engine behind them.

``J_integral`` is int_0^1 log(1+t^x)/(1+t) dt.  ``J_kN`` integrates a
three-pole kernel (all poles at u = 1, jointly cancelling) against the
alternating exponential polylogarithm; the kernel is evaluated through an
exact-coefficient Taylor patch near u = 1 and a regrouped two-difference
form elsewhere.  ``check_thm28`` / ``check_cor29`` / ``check_cor210``
compare these integrals with their series-side counterparts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from . import special
from ._quad_core import QuadResult, adaptive, span_points
from .errors import DomainError, GateError
from .herglotz import ext_F, higher_F_k
from .reporting import IdentityReport, make_report

__all__ = [
    "QuadResult",
    "integrate_01",
    "J_integral",
    "J_kN",
    "check_thm28",
    "check_cor29",
    "check_cor210",
]

_EPS = 2.2e-16
_PI = math.pi


# -- generic (0,1) integration with endpoint policies ------------------------

def integrate_01(f, tol: float = 1e-12, endpoint_policy: str = "none",
                 budget: int = 2048) -> QuadResult:
    """Integrate ``f`` over (0, 1).

    endpoint_policy:
      * ``none``     — plain adaptive panels;
      * ``log_sub_0`` — substitute u = e^{-v} on (0, 0.1] so power/log
        endpoint behavior at 0 becomes exponential decay;
      * ``cancel_1`` — substitute 1-u = e^{-w} on [0.9, 1) for integrable
        endpoint behavior at 1.
    """
    if endpoint_policy == "none":
        return adaptive(f, [0.0, 0.3, 0.7, 1.0], tol=tol, budget=budget)
    if endpoint_policy == "log_sub_0":
        u0 = 0.1
        v0 = -math.log(u0)

        def g(v: float):
            u = math.exp(-v)
            return f(u) * u

        q1 = adaptive(g, [v0, 8.0, 30.0, 120.0, 700.0],
                      tol=tol / 2, budget=budget // 2)
        q2 = adaptive(f, [u0, 0.5, 1.0], tol=tol / 2, budget=budget // 2)
        return QuadResult(value=q1.value + q2.value,
                          abs_err=q1.abs_err + q2.abs_err,
                          panels=q1.panels + q2.panels)
    if endpoint_policy == "cancel_1":
        u1 = 0.9
        w0 = -math.log(1.0 - u1)

        def g(w: float):
            e = math.exp(-w)
            return f(1.0 - e) * e

        # beyond w = 34 the argument 1 - e^{-w} is no longer distinguishable
        # from 1.0 in binary64, so f cannot be sampled there; the un-swept
        # mass is O(e^{-34}) for integrable singularities
        q1 = adaptive(f, [0.0, 0.5, u1], tol=tol / 2, budget=budget // 2)
        q2 = adaptive(g, [w0, 8.0, 20.0, 34.0], tol=tol / 2, budget=budget // 2)
        return QuadResult(value=q1.value + q2.value,
                          abs_err=q1.abs_err + q2.abs_err,
                          panels=q1.panels + q2.panels)
    raise GateError("endpoint_policy must be one of none/log_sub_0/cancel_1")


# -- J(x) ---------------------------------------------------------------------

def J_integral(x: float, tol: float = 1e-13,
               digits: int = special.DEFAULT_DIGITS) -> QuadResult:
    """J(x) = int_0^1 log(1+t^x)/(1+t) dt for x > 0."""
    xf = float(x)
    if not (xf > 0.0) or not math.isfinite(xf):
        raise DomainError("requires x > 0")

    if special._use_mp(digits):
        with special._wp(digits):
            xm = mp.mpf(x)

            def f(t):
                if t <= 0:
                    return mp.mpf(0)
                return mp.log(1 + t ** xm) / (1 + t)

            val, qerr = mp.quad(f, [0, mp.mpf("0.1"), 1], error=True)
            return QuadResult(value=+val,
                              abs_err=float(qerr) + 10.0 ** (-digits),
                              panels=0)

    def f(t: float):
        return math.log1p(t ** xf) / (1.0 + t)

    # t^x at the left edge: exponential in v after t = e^{-v}
    v_top = min(700.0, max(14.0, 55.0 / xf))

    def g(v: float):
        t = math.exp(-v)
        return math.log1p(t ** xf) / (1.0 + t) * t

    q1 = adaptive(g, span_points(math.log(10.0), v_top, (8.0, 30.0, 120.0)),
                  tol=tol / 2)
    q2 = adaptive(f, [0.1, 0.5, 1.0], tol=tol / 2)
    return QuadResult(value=q1.value + q2.value,
                      abs_err=q1.abs_err + q2.abs_err,
                      panels=q1.panels + q2.panels)


# -- J_{k,N}(x) ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _log_deriv_series(coeffs, order: int):
    """Exact Taylor coefficients of -P'(h)/P(h) for P given by ``coeffs``
    (a tuple of Fractions with nonzero constant term), through h^order."""
    num = tuple(-Fraction(j + 1) * coeffs[j + 1]
                for j in range(min(order + 1, len(coeffs) - 1)))
    acc = list(num) + [Fraction(0)] * (order + 1 - len(num))
    out = []
    for j in range(order + 1):
        c = acc[j] / coeffs[0]
        out.append(c)
        for i in range(1, len(coeffs)):
            if j + i > order:
                break
            acc[j + i] -= c * coeffs[i]
    return tuple(out)


@lru_cache(maxsize=None)
def _patch_coeffs(q: int, order: int):
    """Float Taylor coefficients (about u = 1) of the two cancelling kernel
    blocks: A = 1/(u-1) - 1/(u log u) and B = 1/(u-1) - q u^{q-1}/(u^q-1)."""
    lam = tuple(Fraction((-1) ** j, j + 1) for j in range(order + 3))
    A = _log_deriv_series(lam, order)
    qc = tuple(Fraction(math.comb(q, j + 1), q) for j in range(min(q, order + 3)))
    B = _log_deriv_series(qc, order)
    return tuple(float(c) for c in A), tuple(float(c) for c in B)


def _kern(u: float, k2: float, q: int, delta: float, order: int) -> float:
    """2^{k-1}/(u-1) - q u^{q-1}/(u^q-1) - (2^{k-1}-1)/(u log u).

    Regrouped as (2^{k-1}-1) A + B with A, B the cancelling differences of
    `_patch_coeffs`; Taylor patch for u within ``delta`` of 1.
    """
    h = u - 1.0
    if -delta < h:
        ca, cb = _patch_coeffs(q, order)
        a = 0.0
        b = 0.0
        hp = 1.0
        for j in range(order + 1):
            a += ca[j] * hp
            b += cb[j] * hp
            hp *= h
        return (k2 - 1.0) * a + b
    lg = math.log(u)
    A0 = 1.0 / h - 1.0 / (u * lg)
    B0 = 1.0 / h - q * u ** (q - 1) / (u ** q - 1.0)
    return (k2 - 1.0) * A0 + B0


def J_kN(k: int, N: int, x: float, tol: float = 1e-12,
         digits: int = special.DEFAULT_DIGITS,
         patch_delta: float | None = None, patch_order: int = 6) -> QuadResult:
    """int_0^1 (2^{k-1}/(u-1) - 2^N u^{2^N-1}/(u^{2^N}-1)
               - (2^{k-1}-1)/(u log u)) * Li(-u^x) du

    with Li the alternating exponential polylogarithm sum_n (-1)^n n^{-k}
    e^{n^N x log u}.  All three kernel poles at u = 1 cancel.
    """
    if int(k) != k or int(N) != N or k < 1 or N < 1:
        raise GateError("k and N must be integers >= 1")
    k, N = int(k), int(N)
    xf = float(x)
    if not (xf > 0.0) or not math.isfinite(xf):
        raise DomainError("requires x > 0")
    q = 2 ** N
    k2 = 2.0 ** (k - 1)
    delta = patch_delta if patch_delta is not None else 1e-2 / max(q, 10)

    if special._use_mp(digits):
        return _J_kN_mp(k, N, xf, q, digits, delta, patch_order)

    def nli(w: float) -> float:
        return complex(special._gen_polylog_neg_exp(N, float(k), w)).real

    def f(u: float) -> float:
        return _kern(u, k2, q, delta, patch_order) * nli(-xf * math.log(u))

    # u = e^{-v} on (0, 0.05]: fold 1/log u into the Jacobian so nothing
    # overflows at large v
    def g(v: float) -> float:
        u = math.exp(-v)
        uq = u ** q
        block = k2 * u / (u - 1.0) - q * uq / (uq - 1.0) + (k2 - 1.0) / v
        return block * nli(xf * v)

    v_top = min(700.0, max(14.0, 55.0 / xf))
    q1 = adaptive(g, span_points(math.log(20.0), v_top, (8.0, 30.0, 120.0)),
                  tol=tol / 2)
    q2 = adaptive(f, [0.05, 0.3, 0.7, 1.0], tol=tol / 2)
    return QuadResult(value=q1.value + q2.value,
                      abs_err=q1.abs_err + q2.abs_err,
                      panels=q1.panels + q2.panels)


def _J_kN_mp(k: int, N: int, xf: float, q: int, digits: int,
             delta: float, order: int) -> QuadResult:
    with special._wp(digits):
        xm = mp.mpf(xf)
        k2 = mp.mpf(2) ** (k - 1)

        def kern(u):
            h = u - 1
            if h > -delta:
                # exact-Fraction patch coefficients at working precision
                lam = tuple(Fraction((-1) ** j, j + 1) for j in range(order + 3))
                qc = tuple(Fraction(math.comb(q, j + 1), q)
                           for j in range(min(q, order + 3)))
                ca = _log_deriv_series(lam, order)
                cb = _log_deriv_series(qc, order)
                a = sum(special.rational_value(c, digits) * h ** j
                        for j, c in enumerate(ca))
                b = sum(special.rational_value(c, digits) * h ** j
                        for j, c in enumerate(cb))
                return (k2 - 1) * a + b
            lg = mp.log(u)
            return ((k2 - 1) * (1 / h - 1 / (u * lg))
                    + 1 / h - q * u ** (q - 1) / (u ** q - 1))

        def f(u):
            if u <= 0 or u >= 1:
                return mp.mpf(0)
            return kern(u) * special._gen_polylog_neg_exp(
                N, k, -xm * mp.log(u), digits)

        val, qerr = mp.quad(f, [0, mp.mpf("0.1"), mp.mpf("0.9"), 1],
                            error=True)
        return QuadResult(value=+mp.re(val),
                          abs_err=float(qerr) + 10.0 ** (-digits),
                          panels=0)


# -- residual checks ----------------------------------------------------------

def check_thm28(k: int, N: int, x: float,
                digits: int = special.DEFAULT_DIGITS) -> IdentityReport:
    """J_{k,N}(x) against its four-term series side:

    F(2^N x) - (2^{k-1}+2^{1-k}) F(x) + F(x/2^N)
    + (2^N + 2^{-N} - 2^{k-1} - 2^{1-k}) zeta(k+N)/x,
    writing F for the two-parameter series at (k, N).
    """
    if int(k) != k or int(N) != N or k < 1 or N < 1:
        raise GateError("k and N must be integers >= 1")
    k, N = int(k), int(N)
    xf = float(x)
    if not (xf > 0.0):
        raise DomainError("requires x > 0")
    jq = J_kN(k, N, xf, digits=digits)
    use = special._use_mp(digits)
    q = 2 ** N
    with special._wp(digits):
        xx = mp.mpf(xf) if use else xf
        c = (2 ** (k - 1) + mp.mpf(2) ** (1 - k) if use
             else 2.0 ** (k - 1) + 2.0 ** (1 - k))
        d = (q + mp.mpf(1) / q - c) if use else (q + 1.0 / q - c)
        e1 = ext_F((k, N), q * xx, digits=digits)
        e2 = ext_F((k, N), xx, digits=digits)
        e3 = ext_F((k, N), xx / q, digits=digits)
        zt = special.riemann_zeta(k + N, digits)
        rhs = (e1.value - c * e2.value + e3.value + d * zt / xx)
        err = (jq.abs_err + e1.abs_err + float(abs(c)) * e2.abs_err
               + e3.abs_err + _EPS * float(abs(d * zt / xx)))
        terms = e1.terms_used + e2.terms_used + e3.terms_used
    return make_report("zagintevalgeneqn", {"k": k, "N": N, "x": xf},
                       jq.value, rhs, err, terms_used=terms)


def check_cor29(k: int, x: float,
                digits: int = special.DEFAULT_DIGITS) -> IdentityReport:
    """J_{k,1}(x) against the higher-F_k side:

    F_k(2x) - (2^{k-1}+2^{1-k}) F_k(x) + F_k(x/2)
    + (2 - 2^{k-1} - 2^{1-k}) (zeta'(k) - zeta(k) log x + zeta(k+1)/x)
    + zeta(k+1)/(2x).
    """
    if int(k) != k or k < 2:
        raise GateError("k must be an integer >= 2")
    k = int(k)
    xf = float(x)
    if not (xf > 0.0):
        raise DomainError("requires x > 0")
    jq = J_kN(k, 1, xf, digits=digits)
    use = special._use_mp(digits)
    with special._wp(digits):
        xx = mp.mpf(xf) if use else xf
        c = (2 ** (k - 1) + mp.mpf(2) ** (1 - k) if use
             else 2.0 ** (k - 1) + 2.0 ** (1 - k))
        f1 = higher_F_k(k, 2 * xx, digits=digits)
        f2 = higher_F_k(k, xx, digits=digits)
        f3 = higher_F_k(k, xx / 2, digits=digits)
        zk = special.riemann_zeta(k, digits)
        zk1 = special.riemann_zeta(k + 1, digits)
        zdk = special.riemann_zeta_deriv(k, digits)
        lx = mp.log(xx) if use else math.log(xx)
        rhs = (f1.value - c * f2.value + f3.value
               + (2 - c) * (zdk - zk * lx + zk1 / xx)
               + zk1 / (2 * xx))
        err = (jq.abs_err + f1.abs_err + float(abs(c)) * f2.abs_err
               + f3.abs_err + _EPS * 30.0)
        terms = f1.terms_used + f2.terms_used + f3.terms_used
    return make_report("n1jk", {"k": k, "x": xf},
                       jq.value, rhs, err, terms_used=terms)


def check_cor210(k: int,
                 digits: int = special.DEFAULT_DIGITS) -> IdentityReport:
    """J_{k,1}(1) against the closed combination

    (1-2^{1-k}) F_k(2) + (2^{k-1}-1) gamma zeta(k) + (1/2-2^{-k}) zeta(k+1)
    + (2-2^{k-1}-2^{1-k}) zeta'(k)
    + sum_{r=2}^{k-1} (-1)^{r-1} (2^{k-2}+2^{-k}-2^{r-k}) zeta(r) zeta(k+1-r)
    for odd k >= 3.
    """
    if int(k) != k or k < 3 or k % 2 == 0:
        raise GateError("k must be an odd integer >= 3")
    k = int(k)
    jq = J_kN(k, 1, 1.0, digits=digits)
    use = special._use_mp(digits)
    with special._wp(digits):
        two = mp.mpf(2) if use else 2.0
        fk2 = higher_F_k(k, two, digits=digits)
        g = special.euler_gamma(digits)
        zk = special.riemann_zeta(k, digits)
        zk1 = special.riemann_zeta(k + 1, digits)
        zdk = special.riemann_zeta_deriv(k, digits)
        half = special.rational_value(Fraction(1, 2), digits)
        rhs = ((1 - two ** (1 - k)) * fk2.value
               + (two ** (k - 1) - 1) * g * zk
               + (half - two ** (-k)) * zk1
               + (2 - two ** (k - 1) - two ** (1 - k)) * zdk)
        for r in range(2, k):
            rhs += ((-1) ** (r - 1)
                    * (two ** (k - 2) + two ** (-k) - two ** (r - k))
                    * special.riemann_zeta(r, digits)
                    * special.riemann_zeta(k + 1 - r, digits))
        err = jq.abs_err + fk2.abs_err * float(abs(1 - 2.0 ** (1 - k))) \
            + _EPS * (2.0 ** (k - 1) * 10.0)
    return make_report("n1x1eqn", {"k": k},
                       jq.value, rhs, err, terms_used=fk2.terms_used)
