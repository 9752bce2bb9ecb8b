"""One-parameter families of extremal partition-function candidates.

For central charge 24k the candidate expansions are k-fold products
prod_{i=1..k} (J + 24 + x_i). Choosing k-1 of the shift parameters so
that every negative power strictly between the lowest one and the
constant term vanishes leaves a single free parameter x, and the result
is a Laurent series whose coefficients are integer polynomials in x.

The elimination is done in the elementary-symmetric-function basis:
writing y_i = 24 + x_i and the product as sum_m e_m(y) J^(k-m), the
vanishing condition at exponent -(k-1) is linear in e_1 with unit pivot,
the next one linear in e_2, and so on, so the whole solve is triangular
over integer polynomials and never divides.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import forms
from .errors import BeyondTruncation, NonIntegralSolve, XDependentCoefficient
from .series import IntPoly, LaurentSeries


@dataclass(frozen=True)
class ExtremalFamily:
    """A solved family: series coefficients are polynomials in the one
    surviving parameter x.

    ``symfuncs`` holds the solved elementary symmetric functions
    e_1..e_{k-1} of the shifted parameters y_i = 24 + x_i; ``g0_poly``
    is the constant-term polynomial, degree k with unit leading
    coefficient up to sign.
    """

    k: int
    order: int
    series: LaurentSeries
    g0_poly: IntPoly
    symfuncs: tuple[IntPoly, ...]


def build_family(k: int, order: int, catalog: forms.FormCatalog | None = None) -> ExtremalFamily:
    """Eliminate the intermediate negative-power coefficients and return
    the one-parameter family for central charge 24k.

    ``order`` is the truncation of the resulting series in internal
    units (exponent n = q^(2n)).
    """
    if not 1 <= k <= 6:
        raise ValueError(f"k must be in 1..6, got {k}")
    if order < 1:
        raise ValueError("order must be >= 1")
    cat = catalog if catalog is not None else forms.DEFAULT

    # J^p for p = 0..k, all truncated to the family order.
    jp = [cat.j_power(p, order) for p in range(k + 1)]

    # Triangular solve for e_1..e_{k-1}: the condition that the
    # coefficient at exponent -(k-m) vanishes determines e_m, because
    # J^(k-m) is the lowest power reaching that exponent and its leading
    # coefficient there is 1.
    e: list[IntPoly] = [IntPoly.constant(1)]
    for m in range(1, k):
        target = -(k - m)
        pivot = jp[k - m].coefficient(-(k - m))
        if not (pivot == 1 or pivot == -1):
            raise NonIntegralSolve(f"pivot {pivot} at exponent {target} is not a unit")
        acc: IntPoly = IntPoly()
        for mm in range(m):
            acc = acc + e[mm] * jp[k - mm].coefficient(target)
        e.append(-acc if pivot == 1 else acc)

    # Split off the symbolic factor y = 24 + x: with E_m the elementary
    # symmetric functions of the other k-1 shifts, e_m = E_m + y E_{m-1},
    # and the top one is e_k = y E_{k-1}.
    y = IntPoly((24, 1))
    big_e = IntPoly.constant(1)
    for m in range(1, k):
        big_e = e[m] - y * big_e
    e.append(y * big_e)

    series = LaurentSeries.zero(order)
    for m in range(k + 1):
        series = series + jp[k - m].scale(e[m])

    for n in range(-(k - 1), 0):
        assert not series.coefficient(n), f"elimination left a term at exponent {n}"
    assert series.coefficient(-k) == 1

    g0 = _as_poly(series.coefficient(0))
    return ExtremalFamily(k=k, order=order, series=series, g0_poly=g0, symfuncs=tuple(e[1:k]))


def _as_poly(c) -> IntPoly:
    return c if isinstance(c, IntPoly) else IntPoly.constant(c)


def coefficient_poly(family: ExtremalFamily, n: int) -> IntPoly:
    """Exact polynomial-in-x coefficient at internal exponent n."""
    if n > family.order:
        raise BeyondTruncation(f"exponent {n} beyond family order {family.order}")
    return _as_poly(family.series.coefficient(n))


def coefficient_value(family: ExtremalFamily, n: int) -> int:
    """Coefficient at exponent n as a plain integer; raises
    XDependentCoefficient when it still involves x."""
    p = coefficient_poly(family, n)
    if not p.is_constant:
        raise XDependentCoefficient(f"coefficient at exponent {n} depends on x: {p}")
    return p.constant_term


def specialize(family: ExtremalFamily, x_value: int) -> LaurentSeries:
    """Substitute an integer for the free parameter."""
    return family.series.specialize(x_value)


def allowed_count(family: ExtremalFamily) -> int:
    """Number of allowed integer constant terms: one more than the
    first massive coefficient."""
    return coefficient_value(family, 1) + 1


def _divisors(n: int) -> list[int]:
    """Positive divisors of n > 0, ascending."""
    small, large = [], []
    d = 1
    while d <= isqrt(n):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def integer_roots(p: IntPoly) -> list[int]:
    """All distinct integer roots of a nonzero polynomial.

    Rational-root search: 0 is checked by the low coefficient, every
    other integer root divides the lowest nonzero coefficient.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every root")
    roots = []
    v = 0
    while p.coeffs[v] == 0:
        v += 1
    if v > 0:
        roots.append(0)
    if p.degree == 0:
        return roots
    for d in _divisors(abs(p.coeffs[v])):
        for r in (d, -d):
            if p(r) == 0 and r not in roots:
                roots.append(r)
    roots.sort(key=lambda r: (abs(r), r < 0))
    return roots


def solve_g0(family: ExtremalFamily, target: int) -> list[int]:
    """Integer values of x whose constant term equals ``target``."""
    return integer_roots(family.g0_poly - target)
