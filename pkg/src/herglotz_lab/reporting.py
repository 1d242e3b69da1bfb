"""Result containers shared by the evaluators and the identity checkers.

Two kinds of results flow through the package:

* :class:`EvalOutcome` — a single numerical evaluation together with an
  honest error estimate and a tag for the method that produced it.
* :class:`IdentityReport` — the residual of one functional-equation check,
  carrying both sides, the tolerance actually applied, and a verdict.

Keeping these here (rather than with the evaluators) lets every module
produce reports without import cycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

__all__ = [
    "EvalOutcome",
    "IdentityReport",
    "make_report",
    "report_to_dict",
    "report_from_dict",
    "TOLERANCE_FLOOR",
]

# Default floor for identity tolerances: residuals below this are treated as
# numerically indistinguishable from zero at double precision.
TOLERANCE_FLOOR = 1e-9

_TINY = 1e-300


@dataclass(frozen=True)
class EvalOutcome:
    """One numerical evaluation.

    ``abs_err`` is an estimate that is kept >= the first-omitted-term bound
    of whatever truncation produced the value; ``method`` identifies the
    evaluation route (``series_tail``, ``integral_kernel``, ``binet_lambert``
    or ``asym_series``).
    """

    value: complex
    abs_err: float
    terms_used: int
    method: str

    def __post_init__(self):
        if not math.isfinite(self.abs_err):
            raise ValueError("abs_err must be finite")


@dataclass(frozen=True)
class IdentityReport:
    """Residual record for one identity check.

    ``passed`` (serialized as ``"pass"``, which is reserved in Python) is
    true iff ``abs_residual <= tolerance`` or ``rel_residual <= tolerance``.
    ``notes`` carries free-text flags (e.g. an alternate printed reading of
    an identity that was checked against).
    """

    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool
    terms_used: int
    notes: Optional[str] = field(default=None)


def make_report(identity_id, params, lhs, rhs, err_sum, terms_used,
                tol_floor=TOLERANCE_FLOOR, tolerance=None, notes=None):
    """Assemble an :class:`IdentityReport` from both sides of an identity.

    ``err_sum`` is the sum of the absolute error estimates of every
    evaluation that entered either side.  Unless an explicit ``tolerance``
    is given, the applied tolerance is ``max(tol_floor, 3 * err_sum)`` so
    that a failure is attributable to the identity and not to method error.
    """
    # residuals are measured before any down-conversion so that
    # higher-precision evaluations keep their full cancellation depth
    abs_residual = float(abs(lhs - rhs))
    rel_residual = float(abs_residual / float(max(abs(lhs), abs(rhs), _TINY)))
    lhs = complex(lhs)
    rhs = complex(rhs)
    if tolerance is None:
        tolerance = max(tol_floor, 3.0 * float(err_sum))
    passed = bool(abs_residual <= tolerance or rel_residual <= tolerance)
    return IdentityReport(
        identity_id=str(identity_id),
        params=dict(params),
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_residual,
        rel_residual=rel_residual,
        tolerance=float(tolerance),
        passed=passed,
        terms_used=int(terms_used),
        notes=notes,
    )


def _encode_value(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    try:
        return float(v)  # mpf, Fraction
    except (TypeError, ValueError):
        pass
    try:
        c = complex(v)  # mpc
        return [c.real, c.imag]
    except (TypeError, ValueError):
        return str(v)


def report_to_dict(report: IdentityReport) -> dict:
    """JSON-ready dict in the fixed report schema (keys in schema order)."""
    d = {
        "identity": report.identity_id,
        "params": {k: _encode_value(v) for k, v in report.params.items()},
        "lhs": [report.lhs.real, report.lhs.imag],
        "rhs": [report.rhs.real, report.rhs.imag],
        "abs_residual": report.abs_residual,
        "rel_residual": report.rel_residual,
        "tolerance": report.tolerance,
        "pass": report.passed,
        "terms_used": report.terms_used,
    }
    if report.notes is not None:
        d["notes"] = report.notes
    return d


def _decode_value(v):
    if isinstance(v, list) and len(v) == 2:
        return complex(v[0], v[1])
    return v


def report_from_dict(d: dict) -> IdentityReport:
    """Inverse of :func:`report_to_dict` (complex values come back as
    ``complex``; two-element numeric lists in params are read as complex)."""
    return IdentityReport(
        identity_id=d["identity"],
        params={k: _decode_value(v) for k, v in d["params"].items()},
        lhs=complex(d["lhs"][0], d["lhs"][1]),
        rhs=complex(d["rhs"][0], d["rhs"][1]),
        abs_residual=float(d["abs_residual"]),
        rel_residual=float(d["rel_residual"]),
        tolerance=float(d["tolerance"]),
        passed=bool(d["pass"]),
        terms_used=int(d["terms_used"]),
        notes=d.get("notes"),
    )
