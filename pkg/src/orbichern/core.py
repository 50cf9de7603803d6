"""Exact arithmetic helpers and the data model for orbifold surface configurations.

Every numeric quantity is a :class:`fractions.Fraction`.  Floating point never
enters a verdict path; decimal rendering is only available through
:func:`render_approx` and is meant for human eyes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]


class OrbichernError(Exception):
    """Base class for input errors raised by this package."""


class ValidationError(OrbichernError, ValueError):
    pass


class DimensionMismatch(ValidationError):
    pass


class AsymmetricMatrix(ValidationError):
    pass


class NegativeOffDiagonal(ValidationError):
    pass


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected so that a rounded value can never sneak in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {text!r}") from None


def render_rational(q: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_approx(q: Fraction, digits: int = 6) -> str:
    return f"{float(q):.{digits}g}"


@dataclass(frozen=True, order=False)
class Multiplicity:
    """A ramification multiplicity: a positive integer or infinity.

    ``Multiplicity(None)`` is the infinite multiplicity, used for
    logarithmic (removed) boundary components.
    """

    value: int | None

    def __post_init__(self) -> None:
        if self.value is not None:
            if isinstance(self.value, bool) or not isinstance(self.value, int):
                raise ValidationError(f"multiplicity must be an integer, got {self.value!r}")
            if self.value < 1:
                raise ValidationError(f"multiplicity must be >= 1, got {self.value}")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def reciprocal(self) -> Fraction:
        return reciprocal_mult(self)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "Multiplicity":
        s = text.strip().lower()
        if s in ("inf", "infinity", "oo"):
            return INFINITY
        try:
            return cls(int(s))
        except ValueError:
            raise ValidationError(f"not a multiplicity: {text!r}") from None


INFINITY = Multiplicity(None)


def as_multiplicity(value) -> Multiplicity:
    if isinstance(value, Multiplicity):
        return value
    if isinstance(value, str):
        return Multiplicity.parse(value)
    if isinstance(value, float) and value == float("inf"):
        return INFINITY
    return Multiplicity(value)


def reciprocal_mult(m: Multiplicity) -> Fraction:
    """1/m for finite m, 0 at infinity."""
    if m.value is None:
        return Fraction(0)
    return Fraction(1, m.value)


@dataclass(frozen=True)
class CurveComponent:
    genus: int
    multiplicity: Multiplicity
    label: str = ""

    def __post_init__(self) -> None:
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 0:
            raise ValidationError(f"genus must be a nonnegative integer, got {self.genus!r}")
        object.__setattr__(self, "multiplicity", as_multiplicity(self.multiplicity))

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric integer matrix: off-diagonal entries C_i.C_j, diagonal C_i^2."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntersectionMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def empty(cls) -> "IntersectionMatrix":
        return cls(())

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def validate(self) -> None:
        n = self.size
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise DimensionMismatch(f"intersection matrix row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise AsymmetricMatrix(
                        f"intersection matrix not symmetric at ({i},{j}): "
                        f"{self.entries[i][j]} != {self.entries[j][i]}"
                    )
                if self.entries[i][j] < 0:
                    raise NegativeOffDiagonal(
                        f"intersection number C{i}.C{j} = {self.entries[i][j]} is negative at ({i},{j})"
                    )


def _check_dims(components: Sequence[CurveComponent], intersections: IntersectionMatrix) -> None:
    intersections.validate()
    if len(components) != intersections.size:
        raise DimensionMismatch(
            f"{len(components)} components but a {intersections.size}x{intersections.size} "
            f"intersection matrix (first unmatched index {min(len(components), intersections.size)})"
        )


@dataclass(frozen=True)
class SmoothOrbifoldSurface:
    """A smooth orbifold surface (X, sum (1 - 1/m_i) C_i) with normal crossing boundary.

    ``log_c1_sq`` and ``log_c2`` are the logarithmic Chern numbers of the
    pair (X, C_1 + ... + C_n).
    """

    log_c1_sq: Fraction
    log_c2: Fraction
    components: tuple[CurveComponent, ...] = ()
    intersections: IntersectionMatrix = field(default_factory=IntersectionMatrix.empty)

    def __post_init__(self) -> None:
        object.__setattr__(self, "log_c1_sq", as_rational(self.log_c1_sq))
        object.__setattr__(self, "log_c2", as_rational(self.log_c2))
        object.__setattr__(self, "components", tuple(self.components))
        if not isinstance(self.intersections, IntersectionMatrix):
            object.__setattr__(self, "intersections", IntersectionMatrix.from_rows(self.intersections))

    @property
    def has_infinite_components(self) -> bool:
        return any(c.multiplicity.is_infinite for c in self.components)


@dataclass(frozen=True)
class AmbientSurfaceData:
    """Chern numbers of the ambient smooth surface X plus the boundary curves."""

    c1_sq: Fraction
    c2: Fraction
    components: tuple[CurveComponent, ...] = ()
    intersections: IntersectionMatrix = field(default_factory=IntersectionMatrix.empty)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1_sq", as_rational(self.c1_sq))
        object.__setattr__(self, "c2", as_rational(self.c2))
        object.__setattr__(self, "components", tuple(self.components))
        if not isinstance(self.intersections, IntersectionMatrix):
            object.__setattr__(self, "intersections", IntersectionMatrix.from_rows(self.intersections))

    @property
    def has_infinite_components(self) -> bool:
        return any(c.multiplicity.is_infinite for c in self.components)


def validate_surface(cfg):
    """Check dimension, symmetry and sign invariants; return ``cfg`` unchanged.

    Works for both :class:`SmoothOrbifoldSurface` and :class:`AmbientSurfaceData`.
    """
    _check_dims(cfg.components, cfg.intersections)
    return cfg


@dataclass(frozen=True)
class ChernNumbers:
    c1_sq: Fraction
    c2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1_sq", as_rational(self.c1_sq))
        object.__setattr__(self, "c2", as_rational(self.c2))


class TheoremTag(enum.Enum):
    TheoremA = "TheoremA"
    RemarkForm = "RemarkForm"
    PlanePair = "PlanePair"
    NodesCusps = "NodesCusps"
    NodalSurface = "NodalSurface"
    Nevanlinna = "Nevanlinna"
    BogomolovStack = "BogomolovStack"
    Jet2 = "Jet2"
    Jet3 = "Jet3"


CITATIONS = {
    TheoremTag.TheoremA: "Theorem A: algebraic degeneracy of orbifold entire curves on smooth orbifold surfaces",
    TheoremTag.RemarkForm: "Theorem A, ambient Chern class form (d1^2 - d2 + 2K.D + D^2 + chi(D))",
    TheoremTag.PlanePair: "two smooth plane curves of degree >= 4 with normal crossings",
    TheoremTag.NodesCusps: "Theorem B: complements of plane curves with nodes and cusps (m=5)",
    TheoremTag.NodalSurface: "nodal surfaces in P^3: l > (8/3)(d^2 - 5d/2)",
    TheoremTag.Nevanlinna: "Nevanlinna: sum (1 - 1/m_i) > 2 on P^1",
    TheoremTag.BogomolovStack: "klt orbifold surfaces: c1^2 - c2 > 0 on the associated stack",
    TheoremTag.Jet2: "nodal surfaces: global 2-jet differentials when 7 c1^2 - 5 c2 > 0",
    TheoremTag.Jet3: "nodal surfaces: global 3-jet differentials when 85 c1^2 - 49 c2 > 0 (Theorem C)",
}


@dataclass(frozen=True)
class CriterionVerdict:
    """Exact left-hand side of a strict positivity criterion and its verdict."""

    theorem_tag: TheoremTag
    lhs: Fraction
    holds: bool = field(init=False)
    normalization: Fraction | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", as_rational(self.lhs))
        object.__setattr__(self, "holds", self.lhs > 0)

    @property
    def citation(self) -> str:
        return CITATIONS[self.theorem_tag]
