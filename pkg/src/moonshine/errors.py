"""Exception types shared across the package."""


class MoonshineError(Exception):
    """Base class for all errors raised by this package."""


class BeyondTruncation(MoonshineError):
    """A coefficient past the known truncation order was requested.

    The caller must recompute the underlying series at a higher order.
    """


class NonUnitLeadingCoefficient(MoonshineError):
    """A series whose lowest coefficient is not +-1 cannot be inverted
    over the integers."""


class NonIntegralSolve(MoonshineError):
    """The triangular elimination hit a pivot that is not a unit, so the
    solve cannot proceed over integer polynomials."""


class XDependentCoefficient(MoonshineError):
    """A coefficient expected to be a plain integer still depends on the
    free parameter x."""


class NegativeValue(MoonshineError):
    """A negative integer cannot be decomposed into representation
    dimensions."""


class NegativeCoefficient(MoonshineError):
    """A series coefficient targeted for decomposition is negative."""

    def __init__(self, exponent, value):
        super().__init__(f"coefficient at exponent {exponent} is negative: {value}")
        self.exponent = exponent
        self.value = value


class UnknownForm(MoonshineError):
    """An unrecognized modular-form or lattice name."""


class IdentitySyntaxError(MoonshineError):
    """Malformed identity text. ``position`` is the 1-based character
    offset where parsing failed."""

    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class NonAffineIndex(MoonshineError):
    """An identity index expression is not affine in i after expansion."""


class OddSubscript(MoonshineError):
    """An identity index evaluated to an odd or non-positive subscript;
    subscripts label even powers of the nome."""


_EXIT_CODES = [
    (UnknownForm, 2),
    (BeyondTruncation, 3),
    (XDependentCoefficient, 4),
    ((NegativeValue, NegativeCoefficient), 5),
    ((IdentitySyntaxError, NonAffineIndex, OddSubscript), 6),
    ((NonUnitLeadingCoefficient, NonIntegralSolve), 7),
]


def exit_code(exc: MoonshineError) -> int:
    """Process exit code / machine error code for an error, as
    documented on the CLI."""
    for types, code in _EXIT_CODES:
        if isinstance(exc, types):
            return code
    return 1
