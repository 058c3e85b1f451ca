"""Direct evaluation on the native convergence regions.

Two routes: the three-variable Dirichlet series (with Euler-Maclaurin tail
acceleration, including the conditionally convergent real-a case) and the
real-axis integral representation over straight or detoured contours.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import quadrature
from .branching import complex_gamma
from .domain import ContourSpec, Point3, SymKind, is_real_integer
from .errors import (
    ContourHitsPole,
    DivergentSeries,
    InvalidRegion,
    NonConvergence,
)

_EPS = 2.220446049250313e-16
_TWO_PI = 2.0 * math.pi

def _make_em_coeffs(count: int) -> tuple[float, ...]:
    """B_{2j}/(2j)! for j = 1..count, via (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}."""
    exact = (
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
        1.0 / 74724249600.0,
        -3617.0 / 10670622842880000.0,
    )
    out = list(exact[:count])
    for j in range(len(out) + 1, count + 1):
        zeta2j = sum(k ** (-2.0 * j) for k in range(1, 40))
        out.append((1.0 if j % 2 == 1 else -1.0) * 2.0 * zeta2j / (2.0 * math.pi) ** (2 * j))
    return tuple(out)


# Oscillatory boundary corrections shrink like |reduced a|^2 per order, so a
# phase near 1/2 needs ~27 orders to reach 1e-12; the table is cheap.
_EM_COEFFS = _make_em_coeffs(32)


class Method(str, Enum):
    SERIES = "series"
    INTEGRAL = "integral"
    TRANSFORM = "transform"
    DDE_SHIFT = "dde_shift"


@dataclass(frozen=True)
class LerchValue:
    """A computed value with its evaluation route and error estimate.

    abs_err_estimate comes from the tail/quadrature estimators plus roundoff
    accounting; it is an estimate in the upper-bound style, not a guess.
    """

    value: complex
    method: Method
    abs_err_estimate: float


def _pochhammer(s: complex, r: int) -> complex:
    out = 1.0 + 0j
    for i in range(r):
        out *= s + i
    return out


def _reduce_a(a: complex) -> complex:
    """Shift a by an integer so Re lands in [-1/2, 1/2]; exact in binary64."""
    return complex(a.real - round(a.real), a.imag)


# ---------------------------------------------------------------------------
# series route
# ---------------------------------------------------------------------------


def _hurwitz_series(s: complex, c: complex, target: float) -> tuple[complex, float]:
    """sum_{n>=0} (n+c)^{-s} for Re s > 1, Re c > 0 (Euler-Maclaurin tail)."""
    sigma, rc = s.real, c.real
    terms_j = 6
    mag_s = abs(s)

    def tail_bound(n: int) -> float:
        p = abs(_pochhammer(s, 2 * terms_j + 1))
        safety = abs(s + 2 * terms_j + 1) / (sigma + 2 * terms_j + 1)
        return abs(_EM_COEFFS[terms_j]) * p * (n + rc) ** (-(sigma + 2 * terms_j + 1)) * safety

    n_terms = max(16, int(math.ceil(0.8 * abs(s.imag))), int(math.ceil(1.4 * (mag_s + 2 * terms_j + 2))))
    while tail_bound(n_terms) > 0.5 * target and n_terms < 4_000_000:
        n_terms *= 2
    n = np.arange(n_terms, dtype=np.float64)
    terms = np.exp(-s * np.log(n + c))
    partial = complex(np.sum(terms))
    w = n_terms + c
    logw = cmath.log(w)
    tail = cmath.exp((1 - s) * logw) / (s - 1) + 0.5 * cmath.exp(-s * logw)
    for j in range(1, terms_j + 1):
        tail += _EM_COEFFS[j - 1] * _pochhammer(s, 2 * j - 1) * cmath.exp((-s - (2 * j - 1)) * logw)
    err = tail_bound(n_terms) + 4.0 * _EPS * (float(np.sum(np.abs(terms))) + abs(tail))
    return partial + tail, err


def _g_derivative(s: complex, alpha: complex, c: complex, n: int, m: int) -> complex:
    """m-th derivative of exp(2*pi*i*alpha*x) * (x+c)^{-s} at x = n."""
    w = 2j * math.pi * alpha
    base = cmath.exp(w * n - s * cmath.log(n + c))
    inv = 1.0 / (n + c)
    tot = 0j
    for r in range(m + 1):
        tot += math.comb(m, r) * w ** (m - r) * (-1) ** r * _pochhammer(s, r) * inv**r
    return base * tot


def _osc_tail(
    s: complex, alpha: complex, c: complex, n0: int, target: float, em_terms: int = 30
) -> tuple[complex, float]:
    """sum_{n>=n0} exp(2*pi*i*alpha*n) (n+c)^{-s}; alpha reduced, Im alpha >= 0, alpha != 0.

    Euler-Maclaurin with the remainder integral taken on a rotated contour so
    the integrand decays exponentially.
    """
    x0, beta = alpha.real, alpha.imag
    sigma = s.real
    decay = _TWO_PI * (abs(x0) if x0 != 0.0 else beta)
    if decay < 1e-6:
        raise NonConvergence(f"tail oscillation too slow at reduced a = {alpha!r}")

    grow = max(0.0, -sigma)
    scale0 = math.exp(-_TWO_PI * beta * n0)

    def trunc_bound(y: float) -> float:
        return scale0 * math.exp(-decay * y) * (n0 + abs(c) + y + 2.0) ** grow / decay

    y_max = (40.0 + 2.0 * abs(sigma)) / decay
    while trunc_bound(y_max) > 0.125 * target and y_max < 1e9:
        y_max *= 2.0

    w = 2j * math.pi * alpha
    if x0 > 0.0:

        def f(y: np.ndarray) -> np.ndarray:
            t = n0 + 1j * y
            return np.exp(w * t - s * np.log(t + c))

        rot = 1j
    elif x0 < 0.0:

        def f(y: np.ndarray) -> np.ndarray:
            t = n0 - 1j * y
            return np.exp(w * t - s * np.log(t + c))

        rot = -1j
    else:  # alpha purely imaginary: no oscillation, integrate along the real axis

        def f(y: np.ndarray) -> np.ndarray:
            t = n0 + y
            return np.exp(w * t - s * np.log(t + c))

        rot = 1.0

    integral, quad_err, _ = quadrature.integrate(f, 0.0, y_max, 0.125 * target)
    integral *= rot

    # asymptotic boundary series: sum to its smallest term, which also sets
    # the error estimate
    max_order = min(em_terms, len(_EM_COEFFS))
    corrections = [
        _EM_COEFFS[j - 1] * _g_derivative(s, alpha, c, n0, 2 * j - 1)
        for j in range(1, max_order + 1)
    ]
    sizes = [abs(cj) for cj in corrections]
    j_stop = sizes.index(min(sizes)) + 1
    corr = 0.5 * _g_derivative(s, alpha, c, n0, 0)
    for cj in corrections[:j_stop]:
        corr -= cj
    next_size = sizes[j_stop] if j_stop < len(sizes) else sizes[j_stop - 1]
    err = quad_err + trunc_bound(y_max) + 2.0 * next_size
    return integral + corr, err


def _partial_sum(s: complex, alpha: complex, c: complex, n_terms: int) -> tuple[complex, float]:
    n = np.arange(n_terms, dtype=np.float64)
    terms = np.exp((2j * math.pi * alpha) * n - s * np.log(n + c))
    return complex(np.sum(terms)), float(np.sum(np.abs(terms)))


def dirichlet_series(s: complex, a: complex, c: complex, target_abs_err: float = 1e-12) -> LerchValue:
    """Dirichlet-series value of the three-variable zeta at (s, a, c).

    Converges for Im a > 0 (any s), and for real non-integral a when
    Re s > 0 (conditionally for Re s <= 1; Euler-Maclaurin acceleration).
    Real integer a is accepted only on the absolutely convergent Re s > 1
    path.  Requires Re c > 0.
    """
    s, a, c = complex(s), complex(a), complex(c)
    if c.real <= 0.0:
        raise DivergentSeries(f"series needs Re c > 0, got c = {c!r}")
    if is_real_integer(a):
        if s.real <= 1.0:
            raise DivergentSeries("integer a requires Re s > 1")
        value, err = _hurwitz_series(s, c, target_abs_err)
        return LerchValue(value, Method.SERIES, err)
    if a.imag < 0.0:
        raise DivergentSeries("series diverges for Im a < 0")
    if a.imag == 0.0 and s.real <= 0.0:
        raise DivergentSeries("real a requires Re s > 0")

    alpha = _reduce_a(a)
    sigma, beta = s.real, alpha.imag

    # direct summation when the geometric decay reaches the target cheaply
    if beta > 0.0:
        rc = c.real
        hi = c.real + abs(c.imag)

        def tail_bound(n: int) -> float:
            # |term(n)| / (1 - ratio); term(n) is the first excluded term, and
            # |(n+c)^{-s}| carries an extra exp(Im s * arg(n+c)) factor
            ratio = math.exp(-_TWO_PI * beta) * (1.0 + 1.0 / (n + rc)) ** max(0.0, -sigma)
            if ratio >= 0.999:
                return math.inf
            mag = math.exp(
                -_TWO_PI * beta * n
                - sigma * math.log(n + (rc if sigma >= 0 else hi))
                + abs(s.imag) * abs(c.imag) / (n + rc)
            )
            return mag / (1.0 - ratio)

        n_direct = None
        n = 16
        while n <= 300_000:
            if tail_bound(n) < 0.5 * target_abs_err:
                n_direct = n
                break
            n *= 2
        if n_direct is not None:
            value, absum = _partial_sum(s, alpha, c, n_direct)
            err = tail_bound(n_direct) + 4.0 * _EPS * absum
            return LerchValue(value, Method.SERIES, err)

    # Euler-Maclaurin tail from a moderate split point
    n0 = max(32, int(math.ceil((abs(s) + 64.0) / 3.5)), int(math.ceil(0.75 * abs(s.imag))))
    best: tuple[complex, float] | None = None
    for _ in range(4):
        tail, tail_err = _osc_tail(s, alpha, c, n0, 0.5 * target_abs_err)
        partial, absum = _partial_sum(s, alpha, c, n0)
        err = tail_err + 4.0 * _EPS * (absum + abs(tail))
        value = partial + tail
        if best is None or err < best[1]:
            best = (value, err)
        if err <= target_abs_err or n0 > 40_000:
            break
        n0 *= 2
    value, err = best
    if err > max(1e6 * target_abs_err, 1e-6):
        raise NonConvergence(f"series error estimate {err:.3e} far above target {target_abs_err:.3e}")
    return LerchValue(value, Method.SERIES, err)


def series_eval(p: Point3, target_abs_err: float = 1e-12) -> LerchValue:
    """Series evaluation at a valid point (see :func:`dirichlet_series`)."""
    return dirichlet_series(p.s, p.a, p.c, target_abs_err)


# ---------------------------------------------------------------------------
# integral route
# ---------------------------------------------------------------------------


def _seg_dist(p: complex, z0: complex, z1: complex) -> float:
    d = z1 - z0
    denom = abs(d) ** 2
    if denom == 0.0:
        return abs(p - z0)
    t = ((p - z0).real * d.real + (p - z0).imag * d.imag) / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (z0 + t * d))


def _arc_dist(p: complex, u: float, eps: float) -> float:
    d = p - u
    ang = math.atan2(d.imag, d.real)
    if 0.0 <= ang <= math.pi:
        return abs(abs(d) - eps)
    return min(abs(p - (u - eps)), abs(p - (u + eps)))


def _contour_distance(pole: complex, contour: ContourSpec, t_max: float) -> float:
    if contour.is_straight:
        return _seg_dist(pole, 0j, complex(t_max))
    u, eps = contour.u, contour.epsilon
    return min(
        _seg_dist(pole, 0j, complex(u - eps)),
        _arc_dist(pole, u, eps),
        _seg_dist(pole, complex(u + eps), complex(t_max)),
    )


def _check_poles(a: complex, contour: ContourSpec, t_max: float, clearance: float) -> None:
    col = -_TWO_PI * a.imag  # real part shared by every pole 2*pi*i*(a - k)
    if col < -(clearance + 1.0) or col > t_max + clearance + 1.0:
        return
    k0 = round(a.real)
    for k in range(k0 - 2, k0 + 3):
        pole = 2j * math.pi * (a - k)
        d = _contour_distance(pole, contour, t_max)
        if d < clearance:
            raise ContourHitsPole(
                f"integrand pole at t = {pole!r} (a-plane index {k}) is {d:.2e} from the contour"
            )


def _pick_t_max(s: complex, a: complex, c: complex, target: float) -> tuple[float, float]:
    """Cutoff T with a certified bound on the discarded [T, inf) piece."""
    sigma, rc = s.real, c.real
    log_abs_z = -_TWO_PI * a.imag

    def bound(t: float) -> float | None:
        if t < log_abs_z + math.log(2.0):
            return None
        if sigma > 1.0 and rc * t < 2.0 * (sigma - 1.0):
            return None
        d = 1.0 - math.exp(log_abs_z - t)
        base = math.exp((sigma - 1.0) * math.log(t) - rc * t) / rc
        return (2.0 if sigma > 1.0 else 1.0) * base / d

    t = max(2.0, log_abs_z + 1.0, 2.0 * (sigma - 1.0) / rc if sigma > 1.0 else 0.0)
    for _ in range(400):
        b = bound(t)
        if b is not None and b <= target:
            return t, b
        t *= 1.3
    raise NonConvergence("could not certify an integral cutoff")


def _contour_integral(
    s: complex, a: complex, c: complex, contour: ContourSpec, tol: float, clearance: float
) -> tuple[complex, float]:
    """Integral of t^{s-1} e^{-ct} / (1 - e^{2*pi*i*a} e^{-t}) over the contour."""
    za = 2j * math.pi * a
    sm1 = s - 1.0

    def core(t: np.ndarray) -> np.ndarray:
        w = za - t
        w = w - (2j * math.pi) * np.round(w.imag / _TWO_PI)
        return np.exp(sm1 * np.log(t) - c * t) / (-np.expm1(w))

    t_max, tail_err = _pick_t_max(s, a, c, 0.1 * tol)
    _check_poles(a, contour, t_max, clearance)

    t0 = min(0.5, 0.25 * t_max)
    if not contour.is_straight:
        t0 = min(t0, 0.5 * (contour.u - contour.epsilon))

    # endpoint piece (0, t0] on a log scale: t = e^v, integrand becomes e^{s v} g(e^v)
    sample = np.exp(np.linspace(math.log(t0) - 14.0, math.log(t0), 24))
    wv = za - sample
    wv = wv - (2j * math.pi) * np.round(wv.imag / _TWO_PI)
    g0 = 8.0 * float(np.max(np.abs(np.exp(-c * sample) / (-np.expm1(wv)))))
    sigma = s.real
    v_min = min(math.log(t0) - 2.0, math.log(0.1 * tol * sigma / g0) / sigma)
    trunc_err = g0 * math.exp(sigma * v_min) / sigma

    def f_log(v: np.ndarray) -> np.ndarray:
        t = np.exp(v)
        w = za - t
        w = w - (2j * math.pi) * np.round(w.imag / _TWO_PI)
        return np.exp(s * v - c * t) / (-np.expm1(w))

    piece_tol = 0.2 * tol
    total, err, _ = quadrature.integrate(f_log, v_min, math.log(t0), piece_tol)
    err += trunc_err + tail_err

    if contour.is_straight:
        val, e, _ = quadrature.integrate(core, t0, t_max, 2.0 * piece_tol, max_panels=3000)
        total += val
        err += e
    else:
        u, eps = contour.u, contour.epsilon
        val, e, _ = quadrature.integrate(core, t0, u - eps, piece_tol)
        total += val
        err += e

        def f_arc(phi: np.ndarray) -> np.ndarray:
            ring = np.exp(1j * phi)
            return core(u + eps * ring) * (1j * eps * ring)

        # clockwise over the top: phi runs pi -> 0
        val, e, _ = quadrature.integrate(f_arc, 0.0, math.pi, piece_tol)
        total -= val
        err += e
        val, e, _ = quadrature.integrate(core, u + eps, t_max, piece_tol, max_panels=3000)
        total += val
        err += e
    return total, err


def integral_eval(
    p: Point3,
    contour: ContourSpec = ContourSpec.STRAIGHT,
    target_abs_err: float = 1e-10,
    clearance: float = 1e-3,
) -> LerchValue:
    """Contour-integral evaluation, valid for Re s > 0, Re c > 0.

    The straight contour runs along the positive real t-axis; a detoured
    contour makes a clockwise semicircular excursion of radius epsilon over
    u.  The integrand's t^{s-1} uses the principal branch continued along the
    contour.  Poles of the integrand sit at t = 2*pi*i*(a - k), k integer;
    any of them closer than `clearance` to the contour raises ContourHitsPole.
    """
    return _integral_eval_raw(p.s, p.a, p.c, contour, target_abs_err, clearance)


def _integral_eval_raw(
    s: complex,
    a: complex,
    c: complex,
    contour: ContourSpec = ContourSpec.STRAIGHT,
    target_abs_err: float = 1e-10,
    clearance: float = 1e-3,
) -> LerchValue:
    s, a, c = complex(s), complex(a), complex(c)
    if s.real <= 0.0:
        raise InvalidRegion(f"integral needs Re s > 0, got s = {s!r}")
    if c.real <= 0.0:
        raise InvalidRegion(f"integral needs Re c > 0, got c = {c!r}")
    gam = complex_gamma(s)
    scale = abs(gam)
    raw, raw_err = _contour_integral(s, a, c, contour, 0.9 * target_abs_err * scale, clearance)
    value = raw / gam
    err = raw_err / scale + 4e-13 * abs(value)
    return LerchValue(value, Method.INTEGRAL, err)


def residue_discrepancy(
    s: complex,
    a: complex,
    c: complex,
    n: int,
    u: float,
    epsilon: float,
    target_abs_err: float = 1e-10,
) -> complex:
    """Detoured-minus-straight integral value at the same point.

    Defined when a sits in the half-disk between the straight and detoured
    cuts below the puncture at n, i.e. a = (n - i*u/(2*pi)) + delta with
    Re delta > 0 and 2*pi*|delta| < epsilon, so the contour deformation
    crosses exactly the k = n pole.  Equals
    -(2*pi*i)^s / Gamma(s) * (a-n)^{s-1} * exp(-2*pi*i*c*(a-n)) up to the
    combined quadrature error.
    """
    s, a, c = complex(s), complex(a), complex(c)
    delta = a - (n - 1j * u / _TWO_PI)
    if delta.real <= 0.0 or _TWO_PI * abs(delta) >= 0.95 * epsilon:
        raise InvalidRegion(
            "a must lie in the enclosed half-disk: Re(a - (n - i u/2pi)) > 0 and 2pi|a - (n - i u/2pi)| < epsilon"
        )
    detoured = _integral_eval_raw(s, a, c, ContourSpec(u, epsilon), 0.5 * target_abs_err)
    straight = _integral_eval_raw(s, a, c, ContourSpec.STRAIGHT, 0.5 * target_abs_err)
    return detoured.value - straight.value


# ---------------------------------------------------------------------------
# two-sided series
# ---------------------------------------------------------------------------


def two_sided_series(kind: SymKind | str, s: complex, a: float, c: float) -> complex:
    """Literal two-sided sum over all integers n of e^{2*pi*i*n*a} |n+c|^{-s},
    with an extra sgn(n+c) factor for the MINUS kind.

    Requires Re s > 1 (absolute convergence) and real 0 < a < 1, 0 < c < 1.
    Tails on both sides are Euler-Maclaurin accelerated; no symmetrized-zeta
    identity is used, so this is an independent oracle for those identities.
    """
    kind = SymKind(kind)
    s = complex(s)
    a, c = float(a), float(c)
    if s.real <= 1.0:
        raise DivergentSeries("two-sided series needs Re s > 1")
    if not (0.0 < a < 1.0 and 0.0 < c < 1.0):
        raise InvalidRegion("two-sided series needs real 0 < a < 1 and 0 < c < 1")
    sign = -1.0 if kind is SymKind.MINUS else 1.0
    target = 1e-12

    n_split = 48
    n = np.arange(-n_split, n_split, dtype=np.float64)
    x = n + c
    terms = np.exp(2j * math.pi * a * n - s * np.log(np.abs(x)))
    if kind is SymKind.MINUS:
        terms = terms * np.sign(x)
    partial = complex(np.sum(terms))

    right, _ = _osc_tail(s, _reduce_a(complex(a)), complex(c), n_split, target)
    left, _ = _osc_tail(s, _reduce_a(complex(-a)), complex(1.0 - c), n_split, target)
    left *= sign * cmath.exp(-2j * math.pi * a)
    return partial + right + left
