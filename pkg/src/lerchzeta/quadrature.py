"""Adaptive Gauss-Kronrod (G7/K15) panels for complex-valued integrands.

Integrands map a real-parameter numpy array to a complex array; contour
pieces are handled by the callers via parameterization.  The returned error
is the accumulated |K15 - G7| panel estimate plus a roundoff floor, intended
as an upper-bound style estimate, not a proof.
"""

from __future__ import annotations

import heapq
from typing import Callable

import numpy as np

# QUADPACK dqk15 nodes and weights.
_XGK_POS = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK_POS = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG_POS = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_XGK = np.array([-x for x in _XGK_POS[:-1]] + [0.0] + [x for x in reversed(_XGK_POS[:-1])])
_WGK = np.array(list(_WGK_POS[:-1]) + [_WGK_POS[-1]] + list(reversed(_WGK_POS[:-1])))
# Gauss-7 nodes sit at the odd Kronrod positions 1,3,...,13.
_WG = np.array(
    [_WG_POS[0], _WG_POS[1], _WG_POS[2], _WG_POS[3], _WG_POS[2], _WG_POS[1], _WG_POS[0]]
)

_EPS = 2.220446049250313e-16

Integrand = Callable[[np.ndarray], np.ndarray]


def _panel(f: Integrand, lo: float, hi: float) -> tuple[complex, float, float]:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid + half * _XGK
    y = np.asarray(f(x), dtype=np.complex128)
    k15 = half * complex(np.sum(_WGK * y))
    g7 = half * complex(np.sum(_WG * y[1::2]))
    resabs = half * float(np.sum(_WGK * np.abs(y)))
    err = abs(k15 - g7) + 4.0 * _EPS * resabs
    return k15, err, resabs


def integrate(
    f: Integrand,
    lo: float,
    hi: float,
    tol: float,
    max_panels: int = 1500,
) -> tuple[complex, float, int]:
    """Integrate f over [lo, hi] adaptively; returns (value, err_estimate, n_panels)."""
    if hi == lo:
        return 0j, 0.0, 0
    val, err, resabs = _panel(f, lo, hi)
    heap: list[tuple[float, int, float, float, complex, float]] = []
    counter = 0
    heapq.heappush(heap, (-err, counter, lo, hi, val, err))
    total_val, total_err = val, err
    floor = 8.0 * _EPS * resabs
    n = 1
    min_width = 1e-14 * (abs(hi - lo) + 1.0)
    while total_err > max(tol, floor) and n < max_panels:
        neg_err, _, a, b, v, e = heapq.heappop(heap)
        if b - a < min_width or e <= 0.25 * max(tol, floor) / max(len(heap) + 1, 1):
            # refining this panel cannot help any more
            heapq.heappush(heap, (0.0, counter + 1, a, b, v, e))
            counter += 1
            if all(item[0] == 0.0 for item in heap):
                break
            continue
        m = 0.5 * (a + b)
        v1, e1, r1 = _panel(f, a, m)
        v2, e2, r2 = _panel(f, m, b)
        total_val += v1 + v2 - v
        total_err += e1 + e2 - e
        floor = max(floor, 8.0 * _EPS * (r1 + r2))
        counter += 1
        heapq.heappush(heap, (-e1, counter, a, m, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, m, b, v2, e2))
        n += 2
    return total_val, max(total_err, floor), n
