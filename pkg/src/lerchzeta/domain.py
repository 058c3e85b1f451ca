"""Points, regions, and contour specifications.

The punctured domain keeps a off the integers and c off the nonpositive
integers; positive integer c is allowed (those punctures are removable).
Downward rays {n - i*t : t >= 0} below the punctures play the role of cuts
anchoring the principal sheet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

from .errors import InvalidPoint


class SymKind(str, Enum):
    """Sign selector shared by the symmetrized combinations (k = 0 resp. 1)."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def k(self) -> int:
        return 0 if self is SymKind.PLUS else 1


def is_real_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real == round(z.real)


def is_nonpositive_real_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def on_a_cut_ray(a: complex) -> bool:
    """True if a lies on a downward ray {n - i*t : t >= 0} below some integer n."""
    a = complex(a)
    return a.imag <= 0.0 and a.real == round(a.real)


def on_c_cut_ray(c: complex) -> bool:
    """True if c lies on a downward ray below some nonpositive integer."""
    c = complex(c)
    return c.imag <= 0.0 and c.real <= 0.0 and c.real == round(c.real)


def _ray_distance(x: float, y: float, n: float) -> float:
    # distance from (x, y) to the ray {(n, t) : t <= 0}
    if y <= 0.0:
        return abs(x - n)
    return math.hypot(x - n, y)


def a_ray_clearance(a: complex) -> float:
    """Distance from a to the union of downward rays below the integers."""
    a = complex(a)
    n = round(a.real)
    return min(_ray_distance(a.real, a.imag, n - 1), _ray_distance(a.real, a.imag, n), _ray_distance(a.real, a.imag, n + 1))


def c_ray_clearance(c: complex) -> float:
    """Distance from c to the union of downward rays below the nonpositive integers."""
    c = complex(c)
    n = min(0, round(c.real))
    best = math.inf
    for m in (n - 1, n, min(0, n + 1)):
        best = min(best, _ray_distance(c.real, c.imag, m))
    return best


def a_puncture_distance(a: complex) -> float:
    """Distance from a to the nearest integer puncture."""
    a = complex(a)
    n = round(a.real)
    return min(abs(a - (n - 1)), abs(a - n), abs(a - (n + 1)))


def c_puncture_distance(c: complex) -> float:
    """Distance from c to the nearest nonpositive-integer puncture."""
    c = complex(c)
    n = min(0, round(c.real))
    best = math.inf
    for m in (n - 1, n, min(0, n + 1)):
        best = min(best, abs(c - m))
    return best


@dataclass(frozen=True)
class Point3:
    """A point (s, a, c) in the punctured three-variable domain.

    Raises InvalidPoint if a is an integer or c is a nonpositive integer.
    """

    s: complex
    a: complex
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "c", complex(self.c))
        if is_real_integer(self.a):
            raise InvalidPoint(f"a = {self.a!r} is an integer puncture")
        if is_nonpositive_real_integer(self.c):
            raise InvalidPoint(f"c = {self.c!r} is a nonpositive integer puncture")

    @property
    def in_u(self) -> bool:
        """Series region: Im a > 0, Re c > 0 (s unrestricted)."""
        return self.a.imag > 0.0 and self.c.real > 0.0

    @property
    def in_u_plus(self) -> bool:
        """Integral region restricted to the upper a half-plane: adds Re s > 0."""
        return self.s.real > 0.0 and self.in_u

    @property
    def in_omega_tilde(self) -> bool:
        """Extended fundamental polycylinder: 0 < Re a < 1, 0 < Re c < 1, s free."""
        return 0.0 < self.a.real < 1.0 and 0.0 < self.c.real < 1.0


@dataclass(frozen=True)
class ContourSpec:
    """Integration path for the real-axis integral: straight, or detoured.

    The detour replaces [u - epsilon, u + epsilon] with a clockwise semicircle
    of radius epsilon over the top of u; requires 0 < epsilon < min(u, 1/2).
    """

    u: float | None = None
    epsilon: float | None = None

    STRAIGHT: ClassVar["ContourSpec"]

    def __post_init__(self) -> None:
        if (self.u is None) != (self.epsilon is None):
            raise ValueError("give both u and epsilon, or neither")
        if self.u is not None:
            u, eps = float(self.u), float(self.epsilon)
            if not u > 0.0:
                raise ValueError("detour center u must be positive")
            if not 0.0 < eps < min(u, 0.5):
                raise ValueError("need 0 < epsilon < min(u, 1/2)")
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "epsilon", eps)

    @property
    def is_straight(self) -> bool:
        return self.u is None


ContourSpec.STRAIGHT = ContourSpec()
