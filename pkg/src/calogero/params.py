"""Model family and exact coupling constants."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from gmpy2 import mpq

from .exactpoly import Q

FAMILIES = ("A", "B")


@dataclass(frozen=True)
class Params:
    """Couplings of the A_{N-1} (``family="A"``) or B_N (``family="B"``) model.

    ``a`` and ``omega`` must be positive, ``b`` non-negative.  ``b`` is kept
    but ignored for family A.  Values are converted to :class:`gmpy2.mpq`,
    so ``Params("A", "3/7", omega="1/2")`` is exact.
    """

    family: str
    a: mpq
    b: mpq = field(default=mpq(0))
    omega: mpq = field(default=mpq(1, 2))

    def __post_init__(self):
        family = str(self.family).upper()
        if family not in FAMILIES:
            raise ValueError(f"family must be 'A' or 'B', got {self.family!r}")
        a, b, omega = Q(self.a), Q(self.b), Q(self.omega)
        if a <= 0:
            raise ValueError("coupling a must be positive (a = 0 is degenerate)")
        if b < 0:
            raise ValueError("coupling b must be non-negative")
        if omega <= 0:
            raise ValueError("omega must be positive")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "omega", omega)

    @property
    def is_B(self) -> bool:
        return self.family == "B"

    def shifted(self, da=0, db=0) -> "Params":
        return replace(self, a=self.a + Q(da), b=self.b + Q(db))

    def to_dict(self):
        def s(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {"family": self.family, "a": s(self.a), "b": s(self.b), "omega": s(self.omega)}

    def __str__(self):
        d = self.to_dict()
        if self.family == "A":
            return f"A(a={d['a']}, omega={d['omega']})"
        return f"B(a={d['a']}, b={d['b']}, omega={d['omega']})"


# generic points used throughout the test-suite and the verification runner
GENERIC_POINTS = (
    ("3/7", "2/5", "1/2"),
    ("5/3", "1/4", "1"),
    ("7/11", "3/2", "2/3"),
)


def generic_params(family: str):
    """The three generic (a, b, omega) points as :class:`Params` of ``family``."""
    return [Params(family, a, b, w) for a, b, w in GENERIC_POINTS]
