"""Chern numbers of orbifold surfaces.

Covers three situations:

* smooth orbifold surfaces with normal crossing boundary, starting either from
  logarithmic Chern numbers or from the ambient surface via adjunction;
* the stacky Gauss-Bonnet sum over a stratification by ramification order;
* two explicit families: plane curves with nodes and cusps, and nodal
  surfaces in P^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    AmbientSurfaceData,
    ChernNumbers,
    OrbichernError,
    SmoothOrbifoldSurface,
    ValidationError,
    as_rational,
    validate_surface,
)


class EmptyStratification(OrbichernError, ValueError):
    pass


class InvalidMultiplicity(OrbichernError, ValueError):
    pass


class OutsideKltRange(OrbichernError, ValueError):
    pass


class NegativeGenus(OrbichernError, ValueError):
    pass


@dataclass(frozen=True)
class Stratum:
    euler_char: int
    order: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", as_rational(self.order))
        if self.order <= 0:
            raise ValidationError(f"stratum order must be positive, got {self.order}")


@dataclass(frozen=True)
class PlaneNodeCuspCurve:
    degree: int
    nodes: int = 0
    cusps: int = 0
    multiplicity: int = 5

    def __post_init__(self) -> None:
        if self.degree < 4:
            raise ValidationError(f"degree must be >= 4, got {self.degree}")
        if self.nodes < 0 or self.cusps < 0:
            raise ValidationError("node and cusp counts must be nonnegative")
        if not 2 <= self.multiplicity <= 5:
            raise OutsideKltRange(
                f"multiplicity {self.multiplicity} outside the klt range [2, 5] for nodal-cuspidal curves"
            )
        normalization_genus(self.degree, self.nodes, self.cusps)


@dataclass(frozen=True)
class NodalSurface:
    degree: int
    nodes: int = 0

    def __post_init__(self) -> None:
        if self.degree < 5:
            raise ValidationError(f"nodal surface must have degree >= 5 to be of general type, got {self.degree}")
        if self.nodes < 0:
            raise ValidationError(f"node count must be nonnegative, got {self.nodes}")


def _mults(components) -> list[Fraction]:
    return [c.multiplicity.reciprocal() for c in components]


def log_chern_from_ambient(amb: AmbientSurfaceData) -> tuple[Fraction, Fraction]:
    """Logarithmic Chern numbers of (X, sum C_i) from those of X.

    Uses adjunction K_X.C_i = 2g_i - 2 - C_i^2 and assumes normal crossings.
    """
    validate_surface(amb)
    comps = amb.components
    M = amb.intersections
    n = len(comps)
    c1_sq = amb.c1_sq
    for i, c in enumerate(comps):
        c1_sq += 2 * (2 * c.genus - 2 - M[i, i])
    c1_sq += sum(M[i, j] for i in range(n) for j in range(n))
    # Euler characteristic of the union: sum chi(C_i) minus one per crossing point
    chi_union = sum(c.euler_char for c in comps) - sum(M[i, j] for i in range(n) for j in range(i + 1, n))
    c2 = amb.c2 - chi_union
    return Fraction(c1_sq), Fraction(c2)


def surface_from_ambient(amb: AmbientSurfaceData) -> SmoothOrbifoldSurface:
    log_c1_sq, log_c2 = log_chern_from_ambient(amb)
    return SmoothOrbifoldSurface(log_c1_sq, log_c2, amb.components, amb.intersections)


def stack_c1_sq(s: SmoothOrbifoldSurface) -> Fraction:
    validate_surface(s)
    M = s.intersections
    u = _mults(s.components)
    n = len(u)
    total = s.log_c1_sq
    for i, c in enumerate(s.components):
        total -= 2 * u[i] * (2 * c.genus - 2)
        total += M[i, i] * u[i] ** 2
    for i in range(n):
        for j in range(i + 1, n):
            total += 2 * M[i, j] * u[i] * u[j]
    for j in range(n):
        for i in range(n):
            if i != j:
                total -= 2 * M[i, j] * u[j]
    return total


def stack_c2(s: SmoothOrbifoldSurface) -> Fraction:
    validate_surface(s)
    M = s.intersections
    u = _mults(s.components)
    n = len(u)
    total = s.log_c2
    for i, c in enumerate(s.components):
        total -= u[i] * (2 * c.genus - 2)
    for j in range(n):
        for i in range(n):
            if i != j:
                total -= M[i, j] * u[j]
    for i in range(n):
        for j in range(i + 1, n):
            total += M[i, j] * u[i] * u[j]
    return total


def stack_chern(s: SmoothOrbifoldSurface) -> ChernNumbers:
    return ChernNumbers(stack_c1_sq(s), stack_c2(s))


def gauss_bonnet(strata: Iterable[Stratum]) -> Fraction:
    """Top Chern number of a stack as sum of chi(M_i) / order_i over strata."""
    strata = list(strata)
    if not strata:
        raise EmptyStratification("Gauss-Bonnet needs at least one stratum")
    return sum((Fraction(s.euler_char) / s.order for s in strata), Fraction(0))


def node_order(m: int) -> int:
    """Order of the local orbifold group at a node of a curve with multiplicity m."""
    if m < 2:
        raise InvalidMultiplicity(f"node order needs m >= 2, got {m}")
    return m * m


def cusp_order(m: int) -> Fraction:
    """Order of the local orbifold group at a cusp: (2/3) (1/m - 1/6)^-2.

    The pole at m = 6 is where the pair stops being klt.
    """
    if not 2 <= m <= 5:
        raise OutsideKltRange(f"cusp order is only defined for 2 <= m <= 5, got {m}")
    return Fraction(2, 3) / (Fraction(1, m) - Fraction(1, 6)) ** 2


def normalization_genus(d: int, n: int, c: int) -> tuple[int, int]:
    """Genus and Euler characteristic of the normalization of a plane curve.

    >>> normalization_genus(6, 0, 9)
    (1, 0)
    """
    g = (d - 1) * (d - 2) // 2 - n - c
    if g < 0:
        raise NegativeGenus(
            f"degree {d} curve with {n} nodes and {c} cusps would have normalization genus {g} < 0"
        )
    return g, 2 - 2 * g


def plane_nc_strata(cfg: PlaneNodeCuspCurve) -> list[Stratum]:
    d, n, c, m = cfg.degree, cfg.nodes, cfg.cusps, cfg.multiplicity
    _, chi_norm = normalization_genus(d, n, c)
    # removing a node drops two points of the normalization, a cusp one
    chi_smooth_part = chi_norm - 2 * n - c
    chi_curve = chi_smooth_part + n + c
    return [
        Stratum(3 - chi_curve, Fraction(1)),
        Stratum(chi_smooth_part, Fraction(m)),
        Stratum(n, Fraction(node_order(m))),
        Stratum(c, cusp_order(m)),
    ]


def plane_nc_curve_chern(cfg: PlaneNodeCuspCurve) -> ChernNumbers:
    """Stack Chern numbers of (P^2, (1 - 1/m) C) for a curve with nodes and cusps."""
    coeff = 1 - Fraction(1, cfg.multiplicity)
    c1_sq = (-3 + coeff * cfg.degree) ** 2
    return ChernNumbers(c1_sq, gauss_bonnet(plane_nc_strata(cfg)))


def nodal_surface_chern(cfg: NodalSurface) -> ChernNumbers:
    """Stack Chern numbers of a nodal surface of degree d in P^3 with l nodes.

    The minimal resolution deforms to a smooth degree-d surface; each node
    trades an exceptional (-2)-curve of Euler characteristic 2 for a point
    of order 2.
    """
    d, l = cfg.degree, cfg.nodes
    c1_sq = Fraction(d * (d - 4) ** 2)
    c2 = Fraction(d * (d * d - 4 * d + 6)) - Fraction(3 * l, 2)
    return ChernNumbers(c1_sq, c2)
