"""Symmetrized combinations, their completed forms, and residual checks.

The two-term combinations L± pair the value at (s,a,c) with the reflected
point (s,1-a,1-c); multiplied by the archimedean factor
pi^{-(s+k)/2} Gamma((s+k)/2) (k = 0 for PLUS, 1 for MINUS) they satisfy
exact reflection identities relating s to 1-s, which this module turns into
numerical residuals.  Near (or at) poles of the archimedean factor the
residuals switch to a normalized form so the checks remain meaningful.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .branching import complex_gamma, is_nonpositive_integer, reciprocal_gamma
from .continuation import evaluate_principal
from .domain import SymKind

_TWO_PI = 2.0 * math.pi
_OVERFLOW_SCALE = 1e8
_POLE_MARGIN = 0.05


def l_pm(kind: SymKind | str, s: complex, a: complex, c: complex, target_abs_err: float = 1e-11) -> complex:
    """zeta(s,a,c) +/- e^{-2*pi*i*a} zeta(s,1-a,1-c), both terms on the principal sheet."""
    kind = SymKind(kind)
    s, a, c = complex(s), complex(a), complex(c)
    sign = 1.0 if kind is SymKind.PLUS else -1.0
    coef = cmath.exp(-2j * math.pi * a)
    v1 = evaluate_principal(s, a, c, 0.5 * target_abs_err)
    v2 = evaluate_principal(s, 1.0 - a, 1.0 - c, 0.5 * target_abs_err / max(abs(coef), 1e-300))
    return v1.value + sign * coef * v2.value


@dataclass(frozen=True)
class CompletedL:
    """A symmetrized value multiplied by its archimedean factor.

    scale_overflow is set when |factor| is so large that absolute residuals
    against this value are meaningless and callers should compare relatively.
    """

    kind: SymKind
    value: complex
    factor: complex
    scale_overflow: bool


def archimedean_factor(kind: SymKind | str, s: complex) -> complex:
    """pi^{-(s+k)/2} Gamma((s+k)/2); poles at s+k in {0, -2, -4, ...}."""
    k = SymKind(kind).k
    half = 0.5 * (complex(s) + k)
    return cmath.exp(-half * math.log(math.pi)) * complex_gamma(half)


def completed_l(kind: SymKind | str, s: complex, a: complex, c: complex, target_abs_err: float = 1e-11) -> CompletedL:
    """The completed combination: archimedean factor times l_pm."""
    kind = SymKind(kind)
    factor = archimedean_factor(kind, s)
    raw = l_pm(kind, s, a, c, target_abs_err / max(abs(factor), 1.0))
    return CompletedL(kind, factor * raw, factor, abs(factor) > _OVERFLOW_SCALE)


def _near_pole(half: complex) -> bool:
    n = round(half.real)
    return n <= 0 and abs(half - n) < _POLE_MARGIN


def fe_residual(kind: SymKind | str, s: complex, a: complex, c: complex, target_abs_err: float = 1e-10) -> float:
    """Residual of the reflection identity sending (s,a,c) to (1-s,1-c,a).

    Absolute in the generic case; relative when either archimedean factor is
    within 0.05 of a pole; at an exact pole the identity is divided by the
    singular factor (whose reciprocal is exactly zero), which reduces the
    check to the vanishing of the surviving side.
    """
    kind = SymKind(kind)
    s, a, c = complex(s), complex(a), complex(c)
    k = kind.k
    phase = (1j**k) * cmath.exp(-2j * math.pi * a * c)
    half_l = 0.5 * (s + k)
    half_r = 0.5 * (1.0 - s + k)
    tgt = 0.5 * target_abs_err

    if is_nonpositive_integer(half_l):
        lhs = cmath.exp(-half_l * math.log(math.pi)) * l_pm(kind, s, a, c, tgt)
        rhs = (
            phase
            * cmath.exp(-half_r * math.log(math.pi))
            * complex_gamma(half_r)
            * reciprocal_gamma(half_l)
            * l_pm(kind, 1.0 - s, 1.0 - c, a, tgt)
        )
        return abs(lhs - rhs)
    if is_nonpositive_integer(half_r):
        lhs = (
            cmath.exp(-half_l * math.log(math.pi))
            * complex_gamma(half_l)
            * reciprocal_gamma(half_r)
            * l_pm(kind, s, a, c, tgt)
        )
        rhs = phase * cmath.exp(-half_r * math.log(math.pi)) * l_pm(kind, 1.0 - s, 1.0 - c, a, tgt)
        return abs(lhs - rhs)

    left = completed_l(kind, s, a, c, tgt)
    right_val = phase * completed_l(kind, 1.0 - s, 1.0 - c, a, tgt).value
    resid = abs(left.value - right_val)
    if left.scale_overflow or _near_pole(half_l) or _near_pole(half_r):
        return resid / max(1.0, abs(left.value), abs(right_val))
    return resid


class IteratedVariant(str, Enum):
    A_REFLECT = "a_reflect"
    QUARTER_TURN = "quarter_turn"


def fe_iterated_residual(
    kind: SymKind | str,
    variant: IteratedVariant | str,
    s: complex,
    a: complex,
    c: complex,
    target_abs_err: float = 1e-10,
) -> float:
    """Residuals of the iterated reflections.

    A_REFLECT relates (s,a,c) to (s,1-a,1-c) with factor (-1)^k e^{-2*pi*i*a}
    (same archimedean factor on both sides, so it is checked in divided
    form at and near the factor's poles).  QUARTER_TURN relates (s,a,c) to
    (1-s,c,1-a) with factor (-i)^k e^{-2*pi*i*a*c + 2*pi*i*c}.
    """
    kind = SymKind(kind)
    variant = IteratedVariant(variant)
    s, a, c = complex(s), complex(a), complex(c)
    k = kind.k
    tgt = 0.5 * target_abs_err

    if variant is IteratedVariant.A_REFLECT:
        phase = ((-1.0) ** k) * cmath.exp(-2j * math.pi * a)
        n1 = l_pm(kind, s, a, c, tgt)
        n2 = l_pm(kind, s, 1.0 - a, 1.0 - c, tgt)
        half = 0.5 * (s + k)
        if is_nonpositive_integer(half):
            return abs(n1 - phase * n2)
        factor = archimedean_factor(kind, s)
        resid = abs(factor) * abs(n1 - phase * n2)
        if abs(factor) > _OVERFLOW_SCALE or _near_pole(half):
            return resid / max(1.0, abs(factor * n1), abs(factor * n2))
        return resid

    phase = ((-1j) ** k) * cmath.exp(-2j * math.pi * a * c + 2j * math.pi * c)
    half_l = 0.5 * (s + k)
    half_r = 0.5 * (1.0 - s + k)
    if is_nonpositive_integer(half_l):
        lhs = cmath.exp(-half_l * math.log(math.pi)) * l_pm(kind, s, a, c, tgt)
        rhs = (
            phase
            * cmath.exp(-half_r * math.log(math.pi))
            * complex_gamma(half_r)
            * reciprocal_gamma(half_l)
            * l_pm(kind, 1.0 - s, c, 1.0 - a, tgt)
        )
        return abs(lhs - rhs)
    if is_nonpositive_integer(half_r):
        lhs = (
            cmath.exp(-half_l * math.log(math.pi))
            * complex_gamma(half_l)
            * reciprocal_gamma(half_r)
            * l_pm(kind, s, a, c, tgt)
        )
        rhs = phase * cmath.exp(-half_r * math.log(math.pi)) * l_pm(kind, 1.0 - s, c, 1.0 - a, tgt)
        return abs(lhs - rhs)
    left = completed_l(kind, s, a, c, tgt)
    right_val = phase * completed_l(kind, 1.0 - s, c, 1.0 - a, tgt).value
    resid = abs(left.value - right_val)
    if left.scale_overflow or _near_pole(half_l) or _near_pole(half_r):
        return resid / max(1.0, abs(left.value), abs(right_val))
    return resid


def three_term_residual(sp: complex, a: complex, c: complex, target_abs_err: float = 1e-10) -> float:
    """Residual of the asymmetric three-term transformation at exponent sp.

    Compares the directly evaluated value at (1-sp, a, c) against
    (2*pi)^{-sp} Gamma(sp) [ e^{i*pi*sp/2} e^{-2*pi*i*a*c} zeta(sp, 1-c, a)
    + e^{-i*pi*sp/2} e^{2*pi*i*c*(1-a)} zeta(sp, c, 1-a) ].
    Requires Re sp > 0 and (a, c) in the open unit strips.
    """
    sp, a, c = complex(sp), complex(a), complex(c)
    lhs = evaluate_principal(1.0 - sp, a, c, 0.5 * target_abs_err).value
    pref = cmath.exp(-sp * math.log(_TWO_PI)) * complex_gamma(sp)
    coef1 = pref * cmath.exp(0.5j * math.pi * sp - 2j * math.pi * a * c)
    coef2 = pref * cmath.exp(-0.5j * math.pi * sp + 2j * math.pi * c * (1.0 - a))
    v1 = evaluate_principal(sp, 1.0 - c, a, 0.25 * target_abs_err / max(abs(coef1), 1e-300)).value
    v2 = evaluate_principal(sp, c, 1.0 - a, 0.25 * target_abs_err / max(abs(coef2), 1e-300)).value
    return abs(lhs - (coef1 * v1 + coef2 * v2))
