"""Constructors for the modular objects used throughout the package.

Everything lives in the squared nome: internal exponent n means q^(2n).
The discriminant form is built from its Euler product, the weight-4
Eisenstein series from divisor sums, and the j-function by exact series
division; the theta series of the 24 even self-dual 24-dimensional
lattices come out of the closed form (J + 24(h+1)) * Delta indexed by
the Coxeter number h of each root system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownForm
from .series import LaurentSeries


@dataclass(frozen=True)
class NiemeierRecord:
    """One even self-dual 24-dimensional lattice: root-system label and
    Coxeter number."""

    name: str
    coxeter_h: int

    @property
    def massless(self) -> int:
        """Count of massless states of the associated theory, 24(h+1)."""
        return 24 * (self.coxeter_h + 1)


# The full classification: 23 root lattices plus the rootless one (h=0),
# ordered by Coxeter number. Only h values appear in the theta formula;
# the names follow the usual root-system labels.
_CATALOG: tuple[NiemeierRecord, ...] = tuple(
    NiemeierRecord(name, h)
    for name, h in [
        ("Leech", 0),
        ("A1^24", 2),
        ("A2^12", 3),
        ("A3^8", 4),
        ("A4^6", 5),
        ("D4^6", 6),
        ("A5^4D4", 6),
        ("A6^4", 7),
        ("A7^2D5^2", 8),
        ("A8^3", 9),
        ("D6^4", 10),
        ("A9^2D6", 10),
        ("E6^4", 12),
        ("A11D7E6", 12),
        ("A12^2", 13),
        ("D8^3", 14),
        ("A15D9", 16),
        ("E7^2D10", 18),
        ("A17E7", 18),
        ("D12^2", 22),
        ("A24", 25),
        ("D16E8", 30),
        ("E8^3", 30),
        ("D24", 46),
    ]
)

_BY_NAME = {rec.name: rec for rec in _CATALOG}


def catalog() -> tuple[NiemeierRecord, ...]:
    """All 24 records, ordered by Coxeter number."""
    return _CATALOG


def lookup(name: str) -> NiemeierRecord:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownForm(f"unknown Niemeier lattice {name!r}") from None


def _sigma3_table(order: int) -> list[int]:
    """sigma_3(n) for n = 0..order by a divisor sieve."""
    sig = [0] * (order + 1)
    for d in range(1, order + 1):
        cube = d * d * d
        for m in range(d, order + 1, d):
            sig[m] += cube
    return sig


class FormCatalog:
    """Shared constructors with a memo for expensive series.

    All methods are pure: repeated calls return equal values, and the
    cache only ever grows monotonically (a stale read recomputes, never
    returns something inconsistent).
    """

    def __init__(self):
        self._euler: LaurentSeries | None = None
        self._delta: LaurentSeries | None = None
        self._e4: LaurentSeries | None = None
        self._j: LaurentSeries | None = None  # zero-constant-term normalization
        self._j_powers: dict[int, LaurentSeries] = {}

    # -- building blocks -------------------------------------------------

    def _euler_product(self, order: int) -> LaurentSeries:
        """prod_{m>=1} (1 - v^m) truncated at ``order``."""
        cached = self._euler
        if cached is None or cached.order < order:
            acc = LaurentSeries.one(order)
            for m in range(1, order + 1):
                acc = acc * LaurentSeries({0: 1, m: -1}, order)
            self._euler = acc
            return acc
        return cached.truncate(order)

    def delta(self, order: int) -> LaurentSeries:
        """The discriminant cusp form: v * prod_{m>=1} (1 - v^m)^24."""
        if order < 1:
            raise ValueError("delta needs order >= 1")
        cached = self._delta
        if cached is None or cached.order < order:
            euler = self._euler_product(order - 1)
            cached = (euler ** 24).shift(1)
            self._delta = cached
        return cached.truncate(order)

    def eisenstein4(self, order: int) -> LaurentSeries:
        """E4 = 1 + 240 * sum sigma_3(n) v^n."""
        if order < 0:
            raise ValueError("eisenstein4 needs order >= 0")
        cached = self._e4
        if cached is None or cached.order < order:
            sig = _sigma3_table(order)
            coeffs = {0: 1}
            for n in range(1, order + 1):
                coeffs[n] = 240 * sig[n]
            cached = LaurentSeries(coeffs, order)
            self._e4 = cached
        return cached.truncate(order)

    def j_normalized(self, order: int) -> LaurentSeries:
        """The modular function with zero constant term:
        E4^3 / Delta - 744 = v^-1 + 196884 v + 21493760 v^2 + ...
        """
        if order < -1:
            raise ValueError("j needs order >= -1")
        cached = self._j
        if cached is None or cached.order < order:
            # The inverse of Delta known to order N is determined to N-2,
            # so the quotient at ``order`` needs Delta two steps further.
            e4cubed = self.eisenstein4(order + 1) ** 3
            delta = self.delta(order + 2)
            j_classical = e4cubed * delta.invert()
            cached = j_classical - LaurentSeries.monomial(0, 744, order=j_classical.order)
            self._j = cached
        return cached.truncate(order)

    def j_classical(self, order: int) -> LaurentSeries:
        """Same function with the classical constant term 744."""
        j = self.j_normalized(order)
        return j + LaurentSeries.monomial(0, 744, order=order)

    def j_power(self, m: int, order: int) -> LaurentSeries:
        """The m-th power of the zero-constant-term j, memoized."""
        if m < 0:
            raise ValueError("j_power needs m >= 0")
        if m == 0:
            return LaurentSeries.one(order)
        cached = self._j_powers.get(m)
        if cached is None or cached.order < order:
            # Each multiplication by j lowers the order by one.
            cached = self.j_normalized(order + m - 1) ** m
            self._j_powers[m] = cached
        return cached.truncate(order)

    def niemeier_theta(self, record: NiemeierRecord | str, order: int) -> LaurentSeries:
        """Theta series of a Niemeier lattice: (J + 24(h+1)) * Delta.

        Constant term 1 (the zero vector); the coefficient at v^1 counts
        the 24h roots.
        """
        if isinstance(record, str):
            record = lookup(record)
        j = self.j_normalized(order - 1)
        bracket = j + LaurentSeries.monomial(0, record.massless, order=order - 1)
        return bracket * self.delta(order + 1)


# Default shared instance; the module-level functions delegate to it.
DEFAULT = FormCatalog()


def delta(order: int) -> LaurentSeries:
    return DEFAULT.delta(order)


def eisenstein4(order: int) -> LaurentSeries:
    return DEFAULT.eisenstein4(order)


def j_normalized(order: int) -> LaurentSeries:
    return DEFAULT.j_normalized(order)


def j_classical(order: int) -> LaurentSeries:
    return DEFAULT.j_classical(order)


def j_power(m: int, order: int) -> LaurentSeries:
    return DEFAULT.j_power(m, order)


def niemeier_theta(record: NiemeierRecord | str, order: int) -> LaurentSeries:
    return DEFAULT.niemeier_theta(record, order)


def by_name(form: str, order: int, catalog: FormCatalog | None = None) -> LaurentSeries:
    """Series for an external form name: ``delta``, ``e4``, ``j``
    (classical, constant 744), ``J`` (zero constant term), or
    ``niemeier:<name>``."""
    cat = catalog if catalog is not None else DEFAULT
    if form == "delta":
        return cat.delta(max(order, 1))
    if form == "e4":
        return cat.eisenstein4(order)
    if form == "j":
        return cat.j_classical(order)
    if form == "J":
        return cat.j_normalized(order)
    if form.startswith("niemeier:"):
        return cat.niemeier_theta(lookup(form[len("niemeier:"):]), order)
    raise UnknownForm(f"unknown form {form!r}")
