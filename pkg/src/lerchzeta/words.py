"""Free-group loop words and their abelianization.

Loops around the punctures are generated by X_n (a small counterclockwise
loop around a = n reached through the upper half a-plane) and Y_n (the same
around c = n).  Words are stored in reduced syllable form, the unique normal
form in a free group, so equality of words is literal equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import WordParseError

_TOKEN_RE = re.compile(r"^([XY])(-?\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True, order=True)
class Generator:
    """One free-group generator: axis "X" (a-plane) or "Y" (c-plane), integer index."""

    axis: str
    index: int

    def __post_init__(self) -> None:
        if self.axis not in ("X", "Y"):
            raise ValueError(f"axis must be 'X' or 'Y', got {self.axis!r}")

    def theta(self) -> "Generator":
        """Order-4 automorphism on generators: X_n -> Y_n, Y_n -> X_{1-n}."""
        if self.axis == "X":
            return Generator("Y", self.index)
        return Generator("X", 1 - self.index)

    def __str__(self) -> str:
        return f"{self.axis}{self.index}"


Syllable = tuple[Generator, int]


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[list] = []
    for gen, exp in syllables:
        exp = int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


class Word:
    """A reduced word in the free group on {X_n} u {Y_n}; immutable and hashable."""

    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[Syllable] = ()) -> None:
        object.__setattr__(self, "_syllables", _reduce(syllables))

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def generator(cls, axis: str, index: int, exponent: int = 1) -> "Word":
        return cls([(Generator(axis, index), exponent)])

    @property
    def syllables(self) -> tuple[Syllable, ...]:
        return self._syllables

    @property
    def is_identity(self) -> bool:
        return not self._syllables

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self._syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self._syllables)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._syllables + other._syllables)

    def __pow__(self, n: int) -> "Word":
        n = int(n)
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self) -> "Word":
        return Word([(g, -e) for g, e in reversed(self._syllables)])

    def commutator(self, other: "Word") -> "Word":
        return self.inverse() * other.inverse() * self * other

    def theta(self, power: int = 1) -> "Word":
        """Image under the order-4 automorphism, applied `power` times."""
        w = self._syllables
        for _ in range(power % 4):
            w = tuple((g.theta(), e) for g, e in w)
        return Word(w)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __str__(self) -> str:
        if not self._syllables:
            return ""
        return " ".join(f"{g}" if e == 1 else f"{g}^{e}" for g, e in self._syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the CLI grammar: whitespace-separated `X<n>`/`Y<n>` with optional `^k`.

        Round-trips exactly with str() on reduced words.
        """
        syllables: list[Syllable] = []
        for token in text.split():
            m = _TOKEN_RE.match(token)
            if m is None:
                raise WordParseError(f"bad word token {token!r}")
            axis, index, exp = m.group(1), int(m.group(2)), m.group(3)
            e = 1 if exp is None else int(exp)
            if e == 0 and exp is not None:
                raise WordParseError(f"zero exponent in token {token!r}")
            syllables.append((Generator(axis, index), e))
        return cls(syllables)


def rep_apply(sigma: Word, tau: Word) -> Word:
    """Word-level action of the monodromy representation: tau -> sigma^{-1} tau."""
    return sigma.inverse() * tau


@dataclass(frozen=True)
class BranchState:
    """Finitely supported winding vector: one integer per generator.

    Addresses a sheet of the maximal abelian cover.  Entries ky[n] with n >= 1
    are accepted but contribute no monodromy (those punctures are removable).
    Stored as sorted (index, count) tuples with zero counts dropped.
    """

    kx: tuple[tuple[int, int], ...] = ()
    ky: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "kx", _canonical(self.kx))
        object.__setattr__(self, "ky", _canonical(self.ky))

    @classmethod
    def zero(cls) -> "BranchState":
        return cls()

    @classmethod
    def from_dicts(cls, kx: Mapping[int, int] | None = None, ky: Mapping[int, int] | None = None) -> "BranchState":
        return cls(tuple((kx or {}).items()), tuple((ky or {}).items()))

    @property
    def kx_dict(self) -> dict[int, int]:
        return dict(self.kx)

    @property
    def ky_dict(self) -> dict[int, int]:
        return dict(self.ky)

    @property
    def is_zero(self) -> bool:
        return not self.kx and not self.ky

    def winding(self, gen: Generator) -> int:
        table = self.kx_dict if gen.axis == "X" else self.ky_dict
        return table.get(gen.index, 0)

    def __add__(self, other: "BranchState") -> "BranchState":
        kx = self.kx_dict
        for n, k in other.kx:
            kx[n] = kx.get(n, 0) + k
        ky = self.ky_dict
        for n, k in other.ky:
            ky[n] = ky.get(n, 0) + k
        return BranchState.from_dicts(kx, ky)

    def __neg__(self) -> "BranchState":
        return BranchState(tuple((n, -k) for n, k in self.kx), tuple((n, -k) for n, k in self.ky))


def _canonical(items: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for n, k in items:
        acc[int(n)] = acc.get(int(n), 0) + int(k)
    return tuple(sorted((n, k) for n, k in acc.items() if k != 0))


def abelianize(word: Word) -> BranchState:
    """Signed letter counts per generator (the image in the abelianization)."""
    kx: dict[int, int] = {}
    ky: dict[int, int] = {}
    for gen, exp in word:
        table = kx if gen.axis == "X" else ky
        table[gen.index] = table.get(gen.index, 0) + exp
    return BranchState.from_dicts(kx, ky)


def parse_branch(text: str) -> BranchState:
    """Parse a CLI branch argument: either a loop word or kx/ky assignments.

    Assignment grammar: whitespace/comma-separated `kx[<n>]=<k>` / `ky[<n>]=<k>`.
    """
    text = text.strip()
    if not text:
        return BranchState.zero()
    if "=" not in text:
        return abelianize(Word.parse(text))
    kx: dict[int, int] = {}
    ky: dict[int, int] = {}
    assign_re = re.compile(r"^k([xy])\[(-?\d+)\]=(-?\d+)$")
    for token in re.split(r"[\s,]+", text):
        if not token:
            continue
        m = assign_re.match(token)
        if m is None:
            raise WordParseError(f"bad branch token {token!r}")
        table = kx if m.group(1) == "x" else ky
        n = int(m.group(2))
        table[n] = table.get(n, 0) + int(m.group(3))
    return BranchState.from_dicts(kx, ky)
