"""Exact truncated Laurent series and dense integer polynomials.

All arithmetic is exact over Python's arbitrary-precision integers.
Every series carries a truncation order: coefficients are known exactly
for exponents up to ``order`` and unknown beyond it, and every operation
propagates the order so that no unknown coefficient is ever reported as
known.

The formal variable is the square of the nome. An internal exponent n
stands for q^(2n) in the usual q-expansion conventions; conversion to
plain q-exponents happens only at serialization boundaries.

Coefficients are either plain ``int`` or :class:`IntPoly`, a univariate
integer polynomial in the free parameter x. The two domains mix freely:
``int`` promotes to a constant polynomial on contact.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import BeyondTruncation, NonUnitLeadingCoefficient

Coeff = Union[int, "IntPoly"]


class IntPoly:
    """Dense univariate polynomial over the integers.

    ``coeffs[d]`` is the coefficient of x^d. The representation is
    normalized: no trailing zeros, and the zero polynomial is the empty
    tuple. Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def gen(cls) -> IntPoly:
        """The indeterminate x."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def as_int(self) -> int:
        """The value of a constant polynomial as a plain integer."""
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.constant_term

    def __call__(self, value: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    @staticmethod
    def _promote(other) -> IntPoly | None:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return None

    def __add__(self, other) -> IntPoly:
        p = self._promote(other)
        if p is None:
            return NotImplemented
        a, b = self.coeffs, p.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> IntPoly:
        p = self._promote(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other) -> IntPoly:
        p = self._promote(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other) -> IntPoly:
        p = self._promote(other)
        if p is None:
            return NotImplemented
        a, b = self.coeffs, p.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        p = self._promote(other)
        if p is None:
            return NotImplemented
        return self.coeffs == p.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}x" if d == 1 else f"{mag}x^{d}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _is_zero_coeff(c: Coeff) -> bool:
    return not c


def _as_poly(c: Coeff) -> IntPoly:
    return c if isinstance(c, IntPoly) else IntPoly.constant(c)


class LaurentSeries:
    """Truncated Laurent series with exact coefficients.

    ``coeffs`` maps exponent -> nonzero coefficient; ``order`` is the
    largest exponent whose coefficient is known. The zero series is an
    empty map (its minimal exponent is undefined and must not be read).
    Instances are immutable by convention: no method mutates state.
    """

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Mapping[int, Coeff], order: int):
        cleaned = {n: c for n, c in coeffs.items() if n <= order and not _is_zero_coeff(c)}
        object.__setattr__(self, "_coeffs", cleaned)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> LaurentSeries:
        return cls({}, order)

    @classmethod
    def one(cls, order: int) -> LaurentSeries:
        return cls({0: 1}, order)

    @classmethod
    def monomial(cls, exponent: int, coeff: Coeff = 1, *, order: int) -> LaurentSeries:
        return cls({exponent: coeff}, order)

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero series has no minimal exponent")
        return min(self._coeffs)

    def _floor(self) -> int:
        # Lowest exponent at which the series can still carry anything:
        # min_exp when nonzero, otherwise the first unknown slot.
        return min(self._coeffs) if self._coeffs else self.order + 1

    def coefficient(self, n: int) -> Coeff:
        """Exact coefficient of the n-th power, zero if absent.

        Raises BeyondTruncation past the known order.
        """
        if n > self.order:
            raise BeyondTruncation(f"coefficient {n} requested, series known to order {self.order}")
        return self._coeffs.get(n, 0)

    def terms(self) -> list[tuple[int, Coeff]]:
        """Sorted (exponent, coefficient) pairs of the nonzero terms."""
        return sorted(self._coeffs.items())

    def items(self) -> Iterator[tuple[int, Coeff]]:
        return iter(self._coeffs.items())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = dict(self._coeffs)
        for n, c in other._coeffs.items():
            s = out.get(n, 0) + c
            if _is_zero_coeff(s):
                out.pop(n, None)
            else:
                out[n] = s
        return LaurentSeries(out, order)

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries({n: -c for n, c in self._coeffs.items()}, self.order)

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # Truncation rule: the unknown tail of one factor, which starts at
        # order+1, meets the other factor no lower than its floor.
        order = min(self.order + other._floor(), other.order + self._floor())
        out: dict[int, Coeff] = {}
        for n1, c1 in self._coeffs.items():
            for n2, c2 in other._coeffs.items():
                n = n1 + n2
                if n > order:
                    continue
                s = out.get(n, 0) + c1 * c2
                if _is_zero_coeff(s):
                    out.pop(n, None)
                else:
                    out[n] = s
        return LaurentSeries(out, order)

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            raise ValueError("negative powers: use invert() explicitly")
        result: LaurentSeries | None = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return LaurentSeries.one(self.order) if result is None else result

    def scale(self, c: Coeff) -> LaurentSeries:
        """Coefficient-wise product with a scalar (int or IntPoly)."""
        if _is_zero_coeff(c):
            return LaurentSeries.zero(self.order)
        return LaurentSeries({n: c * v for n, v in self._coeffs.items()}, self.order)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by the k-th power of the variable."""
        return LaurentSeries({n + k: c for n, c in self._coeffs.items()}, self.order + k)

    def invert(self, order: int | None = None) -> LaurentSeries:
        """Multiplicative inverse, exact over the coefficient domain.

        The lowest coefficient must be a unit (+-1), otherwise the
        inverse is not integral and NonUnitLeadingCoefficient is raised.
        ``order`` is the truncation order of the result; it defaults to
        the highest order the input determines, which is
        ``self.order - 2 * self.min_exp``.
        """
        if self.is_zero:
            raise NonUnitLeadingCoefficient("zero series is not invertible")
        v = self.min_exp
        c0 = self._coeffs[v]
        if not (c0 == 1 or c0 == -1):
            raise NonUnitLeadingCoefficient(f"lowest coefficient {c0} is not a unit")
        sign = 1 if c0 == 1 else -1

        max_order = self.order - 2 * v
        if order is None:
            order = max_order
        elif order > max_order:
            raise BeyondTruncation(
                f"inverse requested to order {order} but input determines it only to {max_order}"
            )

        # Write self = c0 * v-shift * (1 + u); then the inverse of (1 + u)
        # has coefficients w with w_0 = 1, w_j = -sum_{i<=j} u_i w_{j-i}.
        jmax = order + v
        u = {n - v: c * sign for n, c in self._coeffs.items() if n != v}
        w: dict[int, Coeff] = {0: 1}
        for j in range(1, jmax + 1):
            acc: Coeff = 0
            for i, ui in u.items():
                if i <= j:
                    wj = w.get(j - i)
                    if wj is not None:
                        acc = acc + ui * wj
            if not _is_zero_coeff(acc):
                w[j] = -acc
        return LaurentSeries({j - v: c * sign for j, c in w.items()}, order)

    # -- reshaping -----------------------------------------------------

    def truncate(self, order: int) -> LaurentSeries:
        """Restrict to a smaller truncation order."""
        if order > self.order:
            raise BeyondTruncation(
                f"cannot extend truncation from {self.order} to {order}"
            )
        return LaurentSeries(self._coeffs, order)

    def map_coefficients(self, fn: Callable[[Coeff], Coeff]) -> LaurentSeries:
        """Apply ``fn`` to every stored coefficient (zeros are dropped)."""
        return LaurentSeries({n: fn(c) for n, c in self._coeffs.items()}, self.order)

    def specialize(self, x_value: int) -> LaurentSeries:
        """Substitute an integer for x in every polynomial coefficient."""
        def ev(c: Coeff) -> int:
            return c(x_value) if isinstance(c, IntPoly) else c
        return self.map_coefficients(ev)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self._coeffs.items())))

    def agrees_with(self, other: LaurentSeries, up_to: int | None = None) -> bool:
        """Coefficient-wise equality up to the common truncation order."""
        bound = min(self.order, other.order)
        if up_to is not None:
            if up_to > bound:
                raise BeyondTruncation(f"comparison to {up_to} exceeds known order {bound}")
            bound = up_to
        lo = min(self._floor(), other._floor())
        return all(self.coefficient(n) == other.coefficient(n) for n in range(lo, bound + 1))

    def __repr__(self) -> str:
        return f"LaurentSeries({dict(sorted(self._coeffs.items()))!r}, order={self.order})"

    def __str__(self) -> str:
        # Human-readable form; exponent n is shown as q^2n.
        if not self._coeffs:
            return f"O(q^{2 * (self.order + 1)})"
        parts = []
        for n, c in self.terms():
            cs = str(c) if isinstance(c, int) else f"({c})"
            if n == 0:
                parts.append(cs)
            else:
                parts.append(f"{cs}*q^{2 * n}")
        parts.append(f"O(q^{2 * (self.order + 1)})")
        return " + ".join(parts)
