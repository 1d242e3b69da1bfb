"""Truncated asymptotic expansions for the extended Herglotz family.

Four expansion families live here: ``ext_F`` for ``|x| -> oo`` and
``x -> 0``, the conjugate pair ``ext_F(ix/2pi) + ext_F(-ix/2pi)`` at both
ends, and the generalized Lambert series for ``alpha -> 0``.  None of them
converge: term magnitudes fall to a minimum and then grow without bound.
Every evaluator truncates at that minimum -- the first index whose
successor term is no smaller, a tie stopping at the smaller index -- and
reports the magnitude of the first omitted term as ``abs_err``.  That is
the standard superasymptotic stopping rule, and the reported remainder is
a heuristic, not a rigorous bound: past the minimum each expansion is
blind to an exponentially small oscillatory residual.  ``residual_floor``
models the measured size of that residual so callers comparing an
expansion against direct summation can pick a tolerance that is actually
attainable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from mpmath import mp

from . import special
from .errors import DomainError, GateError
from .herglotz import HerglotzParams, _off_cut, ext_F
from .identities import CorrectionB, CorrectionC, _clog, _int_gate, _re_pos
from .lambert import LambertSpec, _mode, _ratio, lambert_sum
from .reporting import EvalOutcome

__all__ = [
    "AsymSeries",
    "ext_F_asym_inf",
    "ext_F_asym_zero",
    "pair_asym_inf",
    "pair_asym_zero",
    "lambert_asym",
    "pair_direct",
    "lambert_direct",
    "residual_floor",
]

_PI = math.pi


# ---------------------------------------------------------------------------
# truncation engine
# ---------------------------------------------------------------------------

@dataclass
class AsymSeries:
    """One asymptotic tail, truncated at its smallest term.

    ``term_generator`` maps the 1-based index to the term value at
    ``variable``.  Construction scans terms in order and keeps them while
    their magnitudes strictly decrease: the first index whose term is no
    smaller than its predecessor is left out, so a tie truncates at the
    smaller index, and a term that is exactly zero (a trivial zero of a
    zeta coefficient, or a terminating series) stops the scan at the zero.
    ``truncation_index`` is the number of terms kept, ``partial_sum``
    their sum, and ``remainder_bound`` the magnitude of the first omitted
    term -- zero exactly when the series terminates inside the scan
    window.  ``max_terms`` bounds the scan; if the minimum has not been
    reached by then, the scan window is reported as the truncation point
    and the bound is the next term's magnitude.
    """

    term_generator: Callable[[int], complex]
    variable: complex
    max_terms: int = 60
    truncation_index: int = field(init=False, default=0)
    remainder_bound: float = field(init=False, default=0.0)
    partial_sum: complex = field(init=False, default=0)

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 0:
            raise GateError("max_terms must be a non-negative integer")
        total = None
        prev = None
        kept = 0
        for n in range(1, int(self.max_terms) + 2):
            t = self.term_generator(n)
            a = abs(t)
            if n > self.max_terms or (prev is not None and a >= prev):
                self.remainder_bound = float(a)
                break
            total = t if total is None else total + t
            prev = a
            kept = n
        self.truncation_index = kept
        if total is not None:
            self.partial_sum = total


def _terms_gate(terms):
    if int(terms) != terms or terms < 0:
        raise GateError("terms must be a non-negative integer")
    return int(terms)


def _hparams(p) -> HerglotzParams:
    return p if isinstance(p, HerglotzParams) else HerglotzParams(*p)


# ---------------------------------------------------------------------------
# single-function expansions
# ---------------------------------------------------------------------------

def ext_F_asym_inf(p, x, terms: int = 60,
                   digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Large-argument expansion of ``ext_F``.

    -zeta(k+N)/(2x) - sum_{n>=1} B_{2n}/(2n) zeta(k+2nN) x^{-2n},
    truncated at the smallest term.  Valid for any parameters ``ext_F``
    itself accepts; the caller is responsible for |x| being large enough
    that the truncated remainder is meaningful.  ``terms = 0`` keeps the
    leading 1/x term alone and reports the n = 1 term as the remainder.
    """
    pp = _hparams(p)
    _off_cut(x)
    terms = _terms_gate(terms)
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        xx = conv(x)
        k, N = (mp.mpmathify(pp.k), mp.mpmathify(pp.N)) if use \
            else (float(pp.k), float(pp.N))

        def term(n):
            return (-special.bernoulli_number(2 * n, digits) / (2 * n)
                    * special.riemann_zeta(k + 2 * n * N, digits)
                    * xx ** (-2 * n))

        ser = AsymSeries(term, xx, max_terms=terms)
        value = -special.riemann_zeta(k + N, digits) / (2 * xx) \
            + ser.partial_sum
    return EvalOutcome(value=value, abs_err=ser.remainder_bound,
                       terms_used=ser.truncation_index, method="asym_series")


def ext_F_asym_zero(p, x, terms: int = 60,
                    digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Small-argument expansion of ``ext_F`` for integer parameters.

    Two shapes: for 1 < k <= N the singular part is -zeta(k+N)/x plus a
    gamma/log block, a fractional power x^((k-1)/N) with its zeta/sine
    prefactor and diagonal correction, and an integer-power tail
    (-1)^k sum_m (-1)^{m(N+1)} zeta(k-mN) zeta(1+m) x^m; for k = 1 the
    fractional power degenerates into a log^2 block and the tail flips
    sign.  Other integer parameter ranges have no expansion of this shape
    and are rejected.  Terms whose zeta coefficient sits at a trivial zero
    vanish and stop the truncation scan there (the scan rule treats a zero
    term as the smallest-term minimum).
    """
    pp = _hparams(p)
    _off_cut(x)
    terms = _terms_gate(terms)
    k, N = float(pp.k), float(pp.N)
    if not (k.is_integer() and N.is_integer()):
        raise GateError("small-x expansion requires integer k and N")
    k, N = int(k), int(N)
    if not (k == 1 or 1 < k <= N):
        raise GateError("small-x expansion requires 1 < k <= N or k = 1")
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        xx = conv(x)
        lx = _clog(xx, use)
        g = special.euler_gamma(digits)
        if k == 1:
            g1 = special.stieltjes_gamma1(digits)
            base = -special.riemann_zeta(N + 1, digits) / xx \
                + (pi ** 2 / 6 - (N - 1) * g * lx + lx ** 2 / 2
                   - N * g ** 2 - (N ** 2 + 1) * g1) / N \
                + CorrectionB(1, N).value(x, digits)

            def term(m):
                return (-(-1) ** (m * (N + 1))
                        * special.riemann_zeta(1 - m * N, digits)
                        * special.riemann_zeta(1 + m, digits) * xx ** m)
        else:
            r = _ratio(k - 1, N, use)
            sn = mp.sinpi(r) if use else math.sin(_PI * (k - 1) / N)
            base = -special.riemann_zeta(k + N, digits) / xx \
                - (g + lx) * special.riemann_zeta(k, digits) \
                + N * special.riemann_zeta_deriv(k, digits) \
                + (pi / N) * special.riemann_zeta(1 + r, digits) / sn \
                * xx ** r \
                + xx ** r * CorrectionB(k, N).value(x, digits)

            def term(m):
                return ((-1) ** k * (-1) ** (m * (N + 1))
                        * special.riemann_zeta(k - m * N, digits)
                        * special.riemann_zeta(1 + m, digits) * xx ** m)

        ser = AsymSeries(term, xx, max_terms=terms)
        value = base + ser.partial_sum
    return EvalOutcome(value=value, abs_err=ser.remainder_bound,
                       terms_used=ser.truncation_index, method="asym_series")


# ---------------------------------------------------------------------------
# conjugate-pair expansions
# ---------------------------------------------------------------------------

def pair_direct(p, x, tol=None, digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Direct evaluation of ``ext_F(ix/2pi) + ext_F(-ix/2pi)``.

    Reference route for the pair expansions; requires Re(x) > 0 so both
    rotated arguments stay off the cut.
    """
    pp = _hparams(p)
    _re_pos(x, "x")
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        xx = conv(x)
        u = (mp.mpc(0, 1) if use else 1j) * xx / (2 * pi)
        a = ext_F(pp, u, tol=tol, digits=digits)
        b = ext_F(pp, -u, tol=tol, digits=digits)
    return EvalOutcome(value=a.value + b.value,
                       abs_err=a.abs_err + b.abs_err,
                       terms_used=a.terms_used + b.terms_used,
                       method=a.method)


def pair_asym_inf(p, x, terms: int = 60,
                  digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Large-argument expansion of the conjugate pair.

    sum_{n>=1} (-1)^{n+1}/n B_{2n} zeta(k+2nN) (2pi/x)^{2n}: the rotated
    singular parts cancel, leaving a pure power tail.  Real parameters
    with k + N > 1 and Re(x) > 0.
    """
    pp = _hparams(p)
    _re_pos(x, "x")
    terms = _terms_gate(terms)
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        xx = conv(x)
        k, N = (mp.mpmathify(pp.k), mp.mpmathify(pp.N)) if use \
            else (float(pp.k), float(pp.N))

        def term(n):
            return ((-1) ** (n + 1) / n * special.bernoulli_number(2 * n, digits)
                    * special.riemann_zeta(k + 2 * n * N, digits)
                    * (2 * pi / xx) ** (2 * n))

        ser = AsymSeries(term, xx, max_terms=terms)
    return EvalOutcome(value=ser.partial_sum, abs_err=ser.remainder_bound,
                       terms_used=ser.truncation_index, method="asym_series")


def pair_asym_zero(p, x, terms: int = 60,
                   digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Small-argument expansion of the conjugate pair, odd k and N.

    For odd k >= 3 the finite part is 2{(log(2pi/x) - gamma) zeta(k)
    + N zeta'(k)} minus the second-kind correction, and the tail runs in
    integer powers -2 (-1)^m zeta(k-2Nm) zeta(2m+1) (x/2pi)^{2m} starting
    just past the correction's own finite sum (m > floor(k/2N)).  For
    k = 1 the finite part is the log-squared bracket of the triple-pole
    identity and the tail is (-1)^l B_{2Nl}/(lN) zeta(2l+1) (x/2pi)^{2l}.
    Both tails are real for real x; a constant-phase fractional-power
    rearrangement of the same coefficient data is complex-valued off the
    diagonal and cannot equal the pair, so it is not used.
    """
    pp = _hparams(p)
    _re_pos(x, "x")
    terms = _terms_gate(terms)
    k, N = float(pp.k), float(pp.N)
    if not (k.is_integer() and N.is_integer()):
        raise GateError("small-x pair expansion requires integer k and N")
    k, N = int(k), int(N)
    if k % 2 == 0 or N % 2 == 0:
        raise GateError("small-x pair expansion requires odd k and odd N")
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        xx = conv(x)
        g = special.euler_gamma(digits)
        lg = _clog(2 * pi / xx, use)
        if k == 1:
            g1 = special.stieltjes_gamma1(digits)
            lx = _clog(xx, use)
            l2p = _clog(2 * pi, use) if use else math.log(2 * _PI)
            base = (pi ** 2 / 12 - 2 * N * g ** 2 + 2 * (N - 1) * g * lg
                    + l2p ** 2 - (2 * l2p - lx) * lx
                    - 2 * (N ** 2 + 1) * g1) / N

            def term(n):
                return (special.bernoulli_number(2 * N * n, digits) / (n * N)
                        * (-1) ** n * special.riemann_zeta(2 * n + 1, digits)
                        * (xx / (2 * pi)) ** (2 * n))
        else:
            base = 2 * ((lg - g) * special.riemann_zeta(k, digits)
                        + N * special.riemann_zeta_deriv(k, digits)) \
                - CorrectionC(k, N).value(x, digits)
            m0 = k // (2 * N)

            def term(n):
                m = m0 + n
                return (-2 * (-1) ** m
                        * special.riemann_zeta(k - 2 * N * m, digits)
                        * special.riemann_zeta(2 * m + 1, digits)
                        * (xx / (2 * pi)) ** (2 * m))

        ser = AsymSeries(term, xx, max_terms=terms)
        value = base + ser.partial_sum
    return EvalOutcome(value=value, abs_err=ser.remainder_bound,
                       terms_used=ser.truncation_index, method="asym_series")


# ---------------------------------------------------------------------------
# generalized Lambert series, alpha -> 0
# ---------------------------------------------------------------------------

def lambert_direct(m: int, N: int, alpha,
                   digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Direct sum of n^{-(2Nm+1-N)} / (e^{(2n)^N alpha} - 1)."""
    m = _int_gate(m, "m", 1)
    return lambert_sum(LambertSpec(power=-(2 * N * m + 1 - N), N=N,
                                   alpha=alpha), digits=digits)


def lambert_asym(m: int, N: int, alpha, terms: int = 60,
                 digits: int = special.DEFAULT_DIGITS) -> EvalOutcome:
    """Small-alpha expansion of the generalized Lambert series above.

    zeta(2Nm+1)/(2^N alpha) - zeta(2Nm+1-N)/2 + a gamma/log bracket, a
    finite Bernoulli block (empty for m = 1), and the truncated tail
    sum_l (-1)^{l+1} B_{2lN}/(2l) zeta(2m+2l) (2^{N-1} alpha/pi)^{2l},
    all carried by the prefactor
    (-1)^{m+1} 2^{(2m-1)(N-1)} alpha^{2m-1} / (N pi^{2m}).  The tail
    coefficient divides by 2l: the variant dividing by l leaves a residual
    equal to exactly half the l = 1 term at N = 1 and fails at every
    tested (m, alpha), which is how it survives leading-order spot checks.
    Odd N, integer m >= 1, real alpha > 0.
    """
    m = _int_gate(m, "m", 1)
    N = _int_gate(N, "N", 1)
    if N % 2 == 0:
        raise GateError("the expansion holds for odd N only")
    if isinstance(alpha, complex) or not float(alpha) > 0:
        raise DomainError("alpha must be a positive real number")
    terms = _terms_gate(terms)
    use, pi, conv = _mode(digits)
    with special._wp(digits):
        aa = mp.mpmathify(alpha) if use else float(alpha)
        two = mp.mpf(2) if use else 2.0
        pref = ((-1) ** (m + 1) * two ** ((2 * m - 1) * (N - 1))
                * aa ** (2 * m - 1) / (N * pi ** (2 * m)))
        g = special.euler_gamma(digits)
        la = mp.log(aa * two ** (N - 1) / pi) if use \
            else math.log(aa * 2.0 ** (N - 1) / _PI)
        bracket = special.riemann_zeta(2 * m, digits) * (N * g - la) \
            - special.riemann_zeta_deriv(2 * m, digits)
        head = special.riemann_zeta(2 * N * m + 1, digits) / (2 ** N * aa) \
            - special.riemann_zeta(2 * N * m + 1 - N, digits) / 2
        for j in range(1, m):
            head += (special.bernoulli_number(2 * j, digits)
                     * special.riemann_zeta(2 * N * m + 1 - 2 * N * j, digits)
                     / math.factorial(2 * j)
                     * 2 ** (N * (2 * j - 1)) * aa ** (2 * j - 1))

        def term(n):
            return ((-1) ** (n + 1)
                    * special.bernoulli_number(2 * n * N, digits) / (2 * n)
                    * special.riemann_zeta(2 * m + 2 * n, digits)
                    * (2 ** (N - 1) * aa / pi) ** (2 * n))

        ser = AsymSeries(term, aa, max_terms=terms)
        value = head + pref * (bracket + ser.partial_sum)
    return EvalOutcome(value=value,
                       abs_err=abs(pref) * ser.remainder_bound,
                       terms_used=ser.truncation_index, method="asym_series")


# ---------------------------------------------------------------------------
# post-truncation residual model
# ---------------------------------------------------------------------------

def residual_floor(family: str, N, x) -> float:
    """Envelope of the exponentially small residual left past the optimal
    truncation point, for the expansion ``family`` at scale ``x``.

    The power series cannot see these residuals, so a comparison of
    asymptotic against direct values needs max(remainder, floor) as its
    allowance.  Envelopes were fitted against 30-digit references:

    - ``FkN-zero``: e^{-4 pi^2/x} at N = 1, e^{-2 pi/sqrt(x)} at N = 2,
      and e^{-2 pi (2pi/x)^{1/N} cos(pi(N-1)/2N)} for N >= 3 (the N = 3
      anchor e^{-pi (2pi/x)^{1/3}} was measured; larger N uses the same
      rotated-saddle scale).
    - ``pair-zero``: the rotated-saddle scale at every N; the measured
      N = 3 envelope tops out near 0.6 of it, oscillating with a node
      close to x = 0.4, so coefficient 1 is a safe cap.
    - ``lambert``: 0.1 e^{-b u}, u = alpha^{-1/N},
      b = 2^{1/N} pi^{(N+1)/N} sin(pi/2N); the measured N = 3 residual is
      one oscillatory harmonic of amplitude ~0.05 e^{-bu} whose sign
      tracks cos(w u + phi) with w the conjugate frequency, and N = 1
      reduces to the dead floor e^{-2 pi^2/alpha}.
    - ``FkN-inf`` / ``pair-inf``: no floor was resolvable above direct
      evaluation noise at any tested point; returns 0.
    """
    v = float(abs(x))
    if v <= 0:
        raise DomainError("the floor model needs a positive scale")
    N = int(N)
    if family in ("FkN-inf", "pair-inf"):
        return 0.0
    if family == "FkN-zero":
        if N == 1:
            return math.exp(-4 * _PI ** 2 / v)
        if N == 2:
            return math.exp(-2 * _PI / math.sqrt(v))
        return math.exp(-2 * _PI * (2 * _PI / v) ** (1 / N)
                        * math.cos(_PI * (N - 1) / (2 * N)))
    if family == "pair-zero":
        return math.exp(-2 * _PI * (2 * _PI / v) ** (1 / N)
                        * math.cos(_PI * (N - 1) / (2 * N)))
    if family == "lambert":
        b = 2 ** (1 / N) * _PI ** ((N + 1) / N) * math.sin(_PI / (2 * N))
        return 0.1 * math.exp(-b * v ** (-1 / N))
    raise DomainError(f"unknown expansion family {family!r}")
