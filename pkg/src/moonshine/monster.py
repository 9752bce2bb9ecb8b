"""Decomposition of expansion coefficients into Monster representation
dimensions.

The bundled table holds the smallest irreducible-representation
dimensions of the Fischer-Griess Monster, ascending, one per line; it
can be extended toward all 194 degrees without code changes. Because 1
(the trivial representation) is in the table, every non-negative
integer decomposes; the canonical decomposition produced here is greedy
largest-first, which reproduces the classical identities for the first
j coefficients (196884 = 196883 + 1 and so on).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from importlib import resources

from .errors import NegativeCoefficient, NegativeValue, XDependentCoefficient
from .series import IntPoly, LaurentSeries


@dataclass(frozen=True)
class MonsterDims:
    """Ascending representation dimensions, starting with 1."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise ValueError("dimension table must start with 1")
        if any(a >= b for a, b in zip(self.dims, self.dims[1:])):
            raise ValueError("dimension table must be strictly increasing")

    @classmethod
    def from_text(cls, text: str) -> MonsterDims:
        values = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                values.append(int(line))
        return cls(tuple(values))


_BUNDLED: MonsterDims | None = None


def bundled_dims() -> MonsterDims:
    """The packaged dimension table."""
    global _BUNDLED
    if _BUNDLED is None:
        text = resources.files("moonshine").joinpath("data/monster_dims.txt").read_text()
        _BUNDLED = MonsterDims.from_text(text)
    return _BUNDLED


@dataclass(frozen=True)
class Decomposition:
    """target = sum of multiplicity * dimension, dimensions descending."""

    target: int
    multiplicities: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        if not self.multiplicities:
            return f"{self.target} = 0"
        body = " + ".join(f"{m}*{d}" for d, m in self.multiplicities)
        return f"{self.target} = {body}"


def greedy_decompose(value: int, dims: MonsterDims | None = None) -> Decomposition:
    """Largest-first decomposition of a non-negative integer."""
    if value < 0:
        raise NegativeValue(f"cannot decompose negative value {value}")
    table = (dims or bundled_dims()).dims
    remaining = value
    parts = []
    while remaining > 0:
        d = table[bisect_right(table, remaining) - 1]
        mult = remaining // d
        parts.append((d, mult))
        remaining -= mult * d
    return Decomposition(target=value, multiplicities=tuple(parts))


def verify(d: Decomposition, dims: MonsterDims | None = None) -> bool:
    """True iff the decomposition sums to its target and every entry is
    a known dimension with positive multiplicity."""
    table = set((dims or bundled_dims()).dims)
    total = 0
    for dim, mult in d.multiplicities:
        if dim not in table or mult <= 0:
            return False
        total += dim * mult
    return total == d.target


def _int_coefficient(c, exponent: int) -> int:
    if isinstance(c, IntPoly):
        if not c.is_constant:
            raise XDependentCoefficient(
                f"coefficient at exponent {exponent} depends on x: {c}"
            )
        return c.constant_term
    return c


def decompose_series(
    s: LaurentSeries,
    n_from: int,
    n_to: int,
    dims: MonsterDims | None = None,
) -> list[tuple[int, Decomposition]]:
    """Greedy decomposition of each coefficient in an exponent range.

    Exponents are internal units; each targeted coefficient must be a
    non-negative integer.
    """
    table = dims or bundled_dims()
    out = []
    for n in range(n_from, n_to + 1):
        value = _int_coefficient(s.coefficient(n), n)
        if value < 0:
            raise NegativeCoefficient(n, value)
        out.append((n, greedy_decompose(value, table)))
    return out
