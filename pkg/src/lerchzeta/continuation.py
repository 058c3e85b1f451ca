"""Evaluation anywhere on the maximal abelian cover of the punctured domain.

The principal sheet is anchored at the base point (1/2, 1/2, 1/2) through the
cut a-plane (downward rays below every integer) and cut c-plane (rays below
the nonpositive integers).  A principal-sheet value is produced by the
cheapest applicable route: series, straight-contour integral, the three-term
transformation formula inside the polycylinder, or a differential-difference
ladder in s; points with awkward Re c are first moved by the exact index
shift in c.  The cover value adds the closed-form monodromy of the winding
vector.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from typing import Callable

from .branching import branched_pow, complex_gamma
from .domain import (
    ContourSpec,
    Point3,
    a_puncture_distance,
    a_ray_clearance,
    c_puncture_distance,
    c_ray_clearance,
    on_a_cut_ray,
    on_c_cut_ray,
)
from .errors import (
    CutViolation,
    DerivativeCircleLeavesDomain,
    InvalidRegion,
    LerchError,
    NonConvergence,
    SZero,
)
from .evaluator import LerchValue, Method, _integral_eval_raw, dirichlet_series
from .monodromy import monodromy_of_branch
from .words import BranchState

_TWO_PI = 2.0 * math.pi
_EPS = 2.220446049250313e-16


class RegionTag(Enum):
    U_SERIES = "u_series"
    U_PLUS_INTEGRAL = "u_plus_integral"
    OMEGA_TILDE = "omega_tilde"
    TRANSFORM_NEEDED = "transform_needed"
    DDE_NEEDED = "dde_needed"


class ShiftDirection(str, Enum):
    RAISE = "raise"
    LOWER = "lower"


def classify(p: Point3) -> RegionTag:
    """Cheapest applicable strategy family for a valid point."""
    s, a, c = p.s, p.a, p.c
    if p.in_u:
        return RegionTag.U_SERIES
    if s.real > 0.0 and c.real > 0.0 and not on_a_cut_ray(a):
        return RegionTag.U_PLUS_INTEGRAL
    if p.in_omega_tilde:
        return RegionTag.OMEGA_TILDE
    if s.real < 1.0 and 0.0 < a.real < 1.0 and c.real != math.floor(c.real):
        return RegionTag.TRANSFORM_NEEDED
    return RegionTag.DDE_NEEDED


def _anchor_check(a: complex, c: complex) -> None:
    if on_a_cut_ray(a):
        raise CutViolation(f"a = {a!r} lies on a downward cut ray below an integer")
    if on_c_cut_ray(c):
        raise CutViolation(f"c = {c!r} lies on a downward cut ray below a nonpositive integer")


def _core_eval(s: complex, a: complex, c: complex, target: float, depth: int) -> LerchValue:
    """Dispatch for an anchored point with Re c > 0."""
    if depth > 8:
        raise NonConvergence("evaluation strategy recursion exceeded its depth budget")
    if a.imag > 0.0:
        best: LerchValue | None = None
        try:
            best = dirichlet_series(s, a, c, target)
            if best.abs_err_estimate <= target:
                return best
        except NonConvergence:
            best = None
        fallback = _core_fallback(s, a, c, target, depth)
        if fallback is not None and (best is None or fallback.abs_err_estimate < best.abs_err_estimate):
            return fallback
        if best is None:
            raise NonConvergence("no strategy reached the target at this point")
        return best
    if s.real > 0.0:
        return _integral_eval_raw(s, a, c, ContourSpec.STRAIGHT, target)
    if 0.0 < a.real < 1.0 and 0.0 < c.real < 1.0:
        return _transform_value(s, a, c, target, depth)
    return _ladder_value(s, a, c, target, depth)


def _core_fallback(s: complex, a: complex, c: complex, target: float, depth: int) -> LerchValue | None:
    if s.real > 0.0:
        return _integral_eval_raw(s, a, c, ContourSpec.STRAIGHT, target)
    if 0.0 < a.real < 1.0 and 0.0 < c.real < 1.0:
        return _transform_value(s, a, c, target, depth)
    try:
        return _ladder_value(s, a, c, target, depth)
    except LerchError:
        return None


def _shift_terms(s: complex, a: complex, c_base: complex, count: int) -> tuple[complex, float]:
    total = 0j
    absum = 0.0
    for j in range(count):
        term = cmath.exp(2j * math.pi * a * j) * branched_pow(j + c_base, -s)
        total += term
        absum += abs(term)
    return total, absum


def evaluate_principal(s: complex, a: complex, c: complex, target_abs_err: float = 1e-10) -> LerchValue:
    """Principal-sheet value at an anchored point of the extended domain."""
    s, a, c = complex(s), complex(a), complex(c)
    Point3(s, a, c)  # validity
    _anchor_check(a, c)

    transform_route = (
        a.imag <= 0.0 and s.real <= 0.0 and 0.0 < a.real < 1.0 and c.real != math.floor(c.real)
    )
    if transform_route:
        n_shift = -int(math.floor(c.real))  # lands Re(c + n_shift) in (0, 1)
    elif c.real > 0.05:
        n_shift = 0
    else:
        n_shift = int(math.ceil(0.6 - c.real))

    if n_shift == 0:
        return _core_eval(s, a, c, target_abs_err, 0)

    if n_shift > 0:
        # zeta(s,a,c) = sum_{j<n} e^{2pi i j a}(j+c)^{-s} + e^{2pi i n a} zeta(s,a,c+n)
        phase = cmath.exp(2j * math.pi * a * n_shift)
        scale = abs(phase)
        inner = _core_eval(s, a, c + n_shift, 0.5 * target_abs_err / scale, 0)
        partial, absum = _shift_terms(s, a, c, n_shift)
        value = partial + phase * inner.value
        err = scale * inner.abs_err_estimate + 8.0 * _EPS * (absum + abs(value))
        return LerchValue(value, inner.method, err)

    # lower c: zeta(s,a,c) = e^{-2pi i m a} (zeta(s,a,c-m) - sum_{j<m} e^{2pi i j a}(j+c-m)^{-s})
    m = -n_shift
    phase = cmath.exp(-2j * math.pi * a * m)
    scale = abs(phase)
    inner = _core_eval(s, a, c - m, 0.5 * target_abs_err / max(scale, 1e-300), 0)
    partial, absum = _shift_terms(s, a, c - m, m)
    value = phase * (inner.value - partial)
    err = scale * (inner.abs_err_estimate + 8.0 * _EPS * absum) + 8.0 * _EPS * abs(value)
    return LerchValue(value, inner.method, err)


def transform_eval(p: Point3, target_abs_err: float = 1e-10) -> LerchValue:
    """Polycylinder evaluation of the left half s-plane via the three-term formula.

    Requires 0 < Re a < 1, 0 < Re c < 1 and Re s < 1; the two right-hand
    terms are evaluated at 1 - s (where Re > 0) by the series or integral
    route at a quarter of the target each.
    """
    s, a, c = p.s, p.a, p.c
    if not (0.0 < a.real < 1.0 and 0.0 < c.real < 1.0):
        raise InvalidRegion("transformation formula needs 0 < Re a < 1 and 0 < Re c < 1")
    if not s.real < 1.0:
        raise InvalidRegion("transformation route expects Re s < 1 (use series/integral otherwise)")
    return _transform_value(s, a, c, target_abs_err, 0)


def _transform_value(s: complex, a: complex, c: complex, target: float, depth: int) -> LerchValue:
    """Three-term transformation: the value at s from two evaluations at 1 - s."""
    sp = 1.0 - s  # Re sp >= 1 here
    pref = cmath.exp(-sp * math.log(_TWO_PI)) * complex_gamma(sp)
    coef1 = pref * cmath.exp(0.5j * math.pi * sp - 2j * math.pi * a * c)
    coef2 = pref * cmath.exp(-0.5j * math.pi * sp + 2j * math.pi * c * (1.0 - a))
    t1 = 0.25 * target / max(abs(coef1), 1e-300)
    t2 = 0.25 * target / max(abs(coef2), 1e-300)
    v1 = _core_eval(sp, 1.0 - c, a, t1, depth + 1)
    v2 = _core_eval(sp, c, 1.0 - a, t2, depth + 1)
    value = coef1 * v1.value + coef2 * v2.value
    err = (
        abs(coef1) * v1.abs_err_estimate
        + abs(coef2) * v2.abs_err_estimate
        + 4e-13 * (abs(coef1 * v1.value) + abs(coef2 * v2.value))
    )
    return LerchValue(value, Method.TRANSFORM, err)


def _circle_coefficients(
    values: list[complex], orders: int
) -> list[complex]:
    m = len(values)
    out = []
    for j in range(orders + 1):
        acc = 0j
        for i, v in enumerate(values):
            acc += v * cmath.exp(-2j * math.pi * j * i / m)
        out.append(acc / m)
    return out


def _ladder_value(s: complex, a: complex, c: complex, target: float, depth: int) -> LerchValue:
    """Descend in s with the lowering operator expanded to order k.

    Z(s,a,c) = sum_j C(k,j) c^{k-j} (2*pi*i)^{-j} d^j/da^j Z(s+k,a,c), all
    derivatives taken from one Cauchy circle around a.
    """
    k = max(1, int(math.ceil(0.6 - s.real)))
    sk = s + k
    clearance = a_ray_clearance(a)
    punct = a_puncture_distance(a)
    if clearance < 5e-3:
        raise DerivativeCircleLeavesDomain(
            f"a = {a!r} is only {clearance:.2e} from a cut ray; no differentiation circle fits"
        )
    # the circle must stay on the principal sheet (inside the ray clearance);
    # the sampled element is analytic out to the nearest puncture
    radius = min(0.2, 0.45 * clearance, 0.22 * punct)
    nodes = max(32, 4 * k + 8)

    amp = sum(
        math.comb(k, j) * abs(c) ** (k - j) * (_TWO_PI**-j) * math.factorial(j) * radius**-j
        for j in range(k + 1)
    )
    node_target = max(target / (6.0 * amp), 1e-14)
    values = []
    max_node_err = 0.0
    for i in range(nodes):
        node = a + radius * cmath.exp(2j * math.pi * i / nodes)
        lv = _core_eval(sk, node, c, node_target, depth + 1)
        values.append(lv.value)
        max_node_err = max(max_node_err, lv.abs_err_estimate)
    coeffs = _circle_coefficients(values, k)

    max_abs = max(abs(v) for v in values)
    analytic_radius = 0.9 * punct
    value = 0j
    err = 0.0
    for j in range(k + 1):
        deriv = math.factorial(j) * coeffs[j] / radius**j
        weight = math.comb(k, j) * c ** (k - j) * (2j * math.pi) ** -j
        value += weight * deriv
        alias = math.factorial(j) * 4.0 * max_abs * radius**nodes / analytic_radius ** (j + nodes)
        err += abs(weight) * (
            math.factorial(j) * (max_node_err + 4.0 * _EPS * max_abs) / radius**j + alias
        )
    return LerchValue(value, Method.DDE_SHIFT, err + 4e-13 * abs(value))


def _cauchy_derivative(
    f: Callable[[complex], complex], center: complex, radius: float, nodes: int = 24
) -> tuple[complex, complex, float]:
    """(f(center), f'(center), max |f| on the circle) by the trapezoid rule."""
    values = [f(center + radius * cmath.exp(2j * math.pi * i / nodes)) for i in range(nodes)]
    coeffs = _circle_coefficients(values, 1)
    return coeffs[0], coeffs[1] / radius, max(abs(v) for v in values)


def dde_shift(
    p: Point3,
    direction: ShiftDirection | str,
    target_abs_err: float = 1e-9,
    radius: float = 1e-2,
) -> LerchValue:
    """One differential-difference step away from p = (s, a, c).

    LOWER returns the value at (s-1, a, c) via (1/(2*pi*i) d/da + c) applied
    at s; RAISE returns the value at (s+1, a, c) via -(1/s) d/dc, undefined at
    s = 0.  Derivatives are Cauchy-circle based; the circle is clipped to the
    domain clearance and must not leave the valid region.
    """
    direction = ShiftDirection(direction)
    s, a, c = p.s, p.a, p.c
    _anchor_check(a, c)
    nodes = 24
    if direction is ShiftDirection.RAISE and s == 0:
        raise SZero("the raising relation degenerates at s = 0")

    if direction is ShiftDirection.LOWER:
        clearance = a_ray_clearance(a)
        punct = a_puncture_distance(a)
    else:
        clearance = c_ray_clearance(c)
        punct = c_puncture_distance(c)
    if clearance < 5e-3:
        raise DerivativeCircleLeavesDomain(
            f"differentiation circle of any useful radius leaves the domain (clearance {clearance:.2e})"
        )
    r = min(radius, 0.45 * clearance, 0.22 * punct)
    analytic_radius = 0.9 * punct
    node_target = max(target_abs_err * r / 8.0, 1e-14)

    if direction is ShiftDirection.LOWER:
        f = lambda aa: evaluate_principal(s, aa, c, node_target).value
        z0, d1, max_abs = _cauchy_derivative(f, a, r, nodes)
        value = d1 / (2j * math.pi) + c * z0
        amp = 1.0 / (_TWO_PI * r) + abs(c)
    else:
        f = lambda cc: evaluate_principal(s, a, cc, node_target).value
        z0, d1, max_abs = _cauchy_derivative(f, c, r, nodes)
        value = -d1 / s
        amp = 1.0 / (abs(s) * r)
    alias = 4.0 * max_abs * (r / analytic_radius) ** (nodes - 1) / analytic_radius
    err = amp * (node_target + 4.0 * _EPS * max_abs) + alias + 4e-13 * abs(value)
    return LerchValue(value, Method.DDE_SHIFT, err)


def evaluate_on_cover(p: Point3, b: BranchState, target_abs_err: float = 1e-10) -> LerchValue:
    """Value on the sheet addressed by the winding vector b.

    Principal-sheet value plus the closed-form monodromy of b; entries
    ky[n] with n >= 1 contribute nothing.  Requires the endpoint to be off
    the anchoring cut rays in both the a- and c-planes.
    """
    z0 = evaluate_principal(p.s, p.a, p.c, target_abs_err)
    if b.is_zero:
        return z0
    extra = monodromy_of_branch(b, p.s, p.a, p.c)
    value = z0.value + extra
    return LerchValue(value, z0.method, z0.abs_err_estimate + 4.0 * _EPS * abs(extra))


def _cover_value(s: complex, a: complex, c: complex, b: BranchState, target: float) -> complex:
    v = evaluate_principal(s, a, c, target).value
    if not b.is_zero:
        v += monodromy_of_branch(b, s, a, c)
    return v


def _a_circle_radius(a: complex, cap: float = 0.05) -> float:
    r = min(cap, 0.4 * a_ray_clearance(a), 0.22 * a_puncture_distance(a))
    if r < 2e-3:
        raise DerivativeCircleLeavesDomain("point too close to an a-plane cut ray or puncture")
    return r


def _c_circle_radius(c: complex, cap: float = 0.05) -> float:
    r = min(cap, 0.4 * c_ray_clearance(c), 0.22 * c_puncture_distance(c))
    if r < 2e-3:
        raise DerivativeCircleLeavesDomain("point too close to a c-plane cut ray or puncture")
    return r


def dde_lower_residual(p: Point3, b: BranchState, node_target: float = 1e-12) -> float:
    """| (1/(2*pi*i) d/da + c) Z(s) - Z(s-1) | on the sheet b."""
    s, a, c = p.s, p.a, p.c
    _anchor_check(a, c)
    r = _a_circle_radius(a)
    z0, d1, _ = _cauchy_derivative(lambda aa: _cover_value(s, aa, c, b, node_target), a, r)
    low = _cover_value(s - 1, a, c, b, node_target)
    return abs(d1 / (2j * math.pi) + c * z0 - low)


def dde_raise_residual(p: Point3, b: BranchState, node_target: float = 1e-12) -> float:
    """| d/dc Z(s) + s Z(s+1) | on the sheet b."""
    s, a, c = p.s, p.a, p.c
    _anchor_check(a, c)
    r = _c_circle_radius(c)
    _, d1, _ = _cauchy_derivative(lambda cc: _cover_value(s, a, cc, b, node_target), c, r)
    high = _cover_value(s + 1, a, c, b, node_target)
    return abs(d1 + s * high)


def pde_residual(p: Point3, b: BranchState, node_target: float = 1e-12, nodes: int = 24) -> float:
    """Residual of the second-order relation tying the mixed derivative to -s Z.

    Computes | (1/(2*pi*i) d/da + c) dZ/dc + s Z | by nested Cauchy circles
    around a and c on the sheet addressed by b.
    """
    s, a, c = p.s, p.a, p.c
    _anchor_check(a, c)
    r_a = _a_circle_radius(a)
    r_c = _c_circle_radius(c)

    def dz_dc(aa: complex) -> complex:
        _, d1, _ = _cauchy_derivative(
            lambda cc: _cover_value(s, aa, cc, b, node_target), c, r_c, nodes
        )
        return d1

    g0, dg_da, _ = _cauchy_derivative(dz_dc, a, r_a, nodes)
    z0 = _cover_value(s, a, c, b, node_target)
    return abs(dg_da / (2j * math.pi) + c * g0 + s * z0)
