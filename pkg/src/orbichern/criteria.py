"""Positivity criteria for degeneracy of orbifold entire curves.

Each function returns a :class:`CriterionVerdict` carrying the exact
left-hand side; ``holds`` is strict positivity, so a zero left-hand side fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import chern
from .core import (
    AmbientSurfaceData,
    ChernNumbers,
    CriterionVerdict,
    CurveComponent,
    IntersectionMatrix,
    Multiplicity,
    OrbichernError,
    SmoothOrbifoldSurface,
    TheoremTag,
    ValidationError,
    as_multiplicity,
    validate_surface,
)

INFINITE_NOTE = "evaluated with 1/m = 0 for infinite multiplicities (logarithmic limit)"
QUINTIC_NODE_NOTE = "degree 5: the strict bound l > 100/3 needs at least 34 nodes; the quintic maximum is 31"

# Leading term of chi(E_{k,N}) is (alpha c1^2 - beta c2) N^(2k+1) / denominator.
# The denominators are (k!)^2 (2k+1)!, as recomputed by the oracle module; the
# values 384 and 7776 found in the literature for k = 2, 3 are too small by
# factors 5 and 840, which rescales the bound but never changes a verdict.
JET_FORMS = {
    2: (7, 5, 1920),
    3: (85, 49, 6531840),
}
LITERATURE_DENOMINATORS = {2: 384, 3: 7776}


class UnsupportedJetOrder(OrbichernError, ValueError):
    pass


@dataclass(frozen=True)
class NevanlinnaConfig:
    multiplicities: tuple[Multiplicity, ...]

    def __post_init__(self) -> None:
        mults = tuple(as_multiplicity(m) for m in self.multiplicities)
        if not mults:
            raise ValidationError("Nevanlinna criterion needs at least one point")
        object.__setattr__(self, "multiplicities", mults)


@dataclass(frozen=True)
class PlanePairConfig:
    d1: int
    d2: int
    m1: Multiplicity
    m2: Multiplicity

    def __post_init__(self) -> None:
        for name in ("d1", "d2"):
            if getattr(self, name) < 4:
                raise ValidationError(f"{name} must be >= 4, got {getattr(self, name)}")
        object.__setattr__(self, "m1", as_multiplicity(self.m1))
        object.__setattr__(self, "m2", as_multiplicity(self.m2))

    def to_surface(self) -> SmoothOrbifoldSurface:
        """The P^2 configuration of two smooth curves meeting transversally."""
        d1, d2 = self.d1, self.d2
        amb = AmbientSurfaceData(
            9,
            3,
            (
                CurveComponent((d1 - 1) * (d1 - 2) // 2, self.m1, "C1"),
                CurveComponent((d2 - 1) * (d2 - 2) // 2, self.m2, "C2"),
            ),
            IntersectionMatrix.from_rows([[d1 * d1, d1 * d2], [d1 * d2, d2 * d2]]),
        )
        return chern.surface_from_ambient(amb)


def _infinite_notes(has_inf: bool) -> tuple[str, ...]:
    return (INFINITE_NOTE,) if has_inf else ()


def theorem_a_lhs(s: SmoothOrbifoldSurface) -> CriterionVerdict:
    validate_surface(s)
    M = s.intersections
    u = [c.multiplicity.reciprocal() for c in s.components]
    n = len(u)
    lhs = s.log_c1_sq - s.log_c2
    for i, c in enumerate(s.components):
        crossings = sum(M[i, j] for j in range(n) if j != i)
        lhs -= u[i] * (2 * c.genus - 2 + crossings)
    for i in range(n):
        for j in range(i, n):
            lhs += M[i, j] * u[i] * u[j]
    return CriterionVerdict(TheoremTag.TheoremA, lhs, notes=_infinite_notes(s.has_infinite_components))


def remark_form_lhs(amb: AmbientSurfaceData) -> CriterionVerdict:
    """The same inequality written with the ambient Chern numbers and Delta."""
    validate_surface(amb)
    M = amb.intersections
    comps = amb.components
    n = len(comps)
    coeff = [1 - c.multiplicity.reciprocal() for c in comps]
    k_dot_delta = sum(coeff[i] * (2 * c.genus - 2 - M[i, i]) for i, c in enumerate(comps))
    delta_sq = sum(coeff[i] * coeff[j] * M[i, j] for i in range(n) for j in range(n))
    chi_delta = sum(coeff[i] * c.euler_char for i, c in enumerate(comps))
    chi_delta -= sum(coeff[i] * coeff[j] * M[i, j] for i in range(n) for j in range(i + 1, n))
    lhs = amb.c1_sq - amb.c2 + 2 * k_dot_delta + delta_sq + chi_delta
    return CriterionVerdict(TheoremTag.RemarkForm, lhs, notes=_infinite_notes(amb.has_infinite_components))


def bogomolov_stack(ch: ChernNumbers) -> CriterionVerdict:
    return CriterionVerdict(TheoremTag.BogomolovStack, ch.c1_sq - ch.c2)


def plane_pair_lhs(cfg: PlanePairConfig) -> CriterionVerdict:
    u1, u2 = cfg.m1.reciprocal(), cfg.m2.reciprocal()
    d = cfg.d1 + cfg.d2
    deg_delta = (1 - u1) * cfg.d1 + (1 - u2) * cfg.d2
    lhs = deg_delta**2 - deg_delta * (d + 3) + cfg.d1 * cfg.d2 * (1 - u1 * u2) + 6
    return CriterionVerdict(
        TheoremTag.PlanePair, lhs, notes=_infinite_notes(cfg.m1.is_infinite or cfg.m2.is_infinite)
    )


def nodes_cusps_lhs(d: int, n: int, c: int) -> CriterionVerdict:
    if d < 4:
        raise ValidationError(f"degree must be >= 4, got {d}")
    chern.normalization_genus(d, n, c)
    lhs = -d * d - 15 * d + Fraction(75, 2) + Fraction(1079, 96) * c + 6 * n
    return CriterionVerdict(TheoremTag.NodesCusps, lhs)


def nodal_surface_lhs(d: int, l: int) -> CriterionVerdict:
    if d < 5:
        raise ValidationError(f"nodal surface must have degree >= 5, got {d}")
    lhs = Fraction(3, 2) * (l - Fraction(8, 3) * (d * d - Fraction(5, 2) * d))
    notes = (QUINTIC_NODE_NOTE,) if d == 5 else ()
    return CriterionVerdict(TheoremTag.NodalSurface, lhs, notes=notes)


def nevanlinna_excess(cfg: NevanlinnaConfig | Sequence) -> CriterionVerdict:
    if not isinstance(cfg, NevanlinnaConfig):
        cfg = NevanlinnaConfig(tuple(cfg))
    lhs = sum((1 - m.reciprocal() for m in cfg.multiplicities), Fraction(0)) - 2
    return CriterionVerdict(
        TheoremTag.Nevanlinna, lhs, notes=_infinite_notes(any(m.is_infinite for m in cfg.multiplicities))
    )


def jet_h0_coefficient(k: int, d: int, l: int) -> CriterionVerdict:
    """Leading Riemann-Roch coefficient of k-jet differentials on a nodal surface.

    This is alpha*c1^2 - beta*c2 on the nodal surface stack: for k=2,
    15l/2 + 2d^3 - 36d^2 + 82d, for k=3, 147l/2 + 36d^3 - 484d^2 + 1066d.
    ``normalization`` on the verdict is the denominator of the N^(2k+1)
    term.  Only the Euler characteristic is computed; turning it into an
    h^0 bound needs the vanishing of h^2, which is assumed.
    """
    if k == 2:
        lhs = Fraction(15 * l, 2) + 2 * d**3 - 36 * d**2 + 82 * d
        tag = TheoremTag.Jet2
    elif k == 3:
        lhs = Fraction(147 * l, 2) + 36 * d**3 - 484 * d**2 + 1066 * d
        tag = TheoremTag.Jet3
    else:
        raise UnsupportedJetOrder(f"jet criteria exist only for k in (2, 3), got {k}")
    if d < 5:
        raise ValidationError(f"nodal surface must have degree >= 5, got {d}")
    return CriterionVerdict(tag, lhs, normalization=Fraction(JET_FORMS[k][2]))


def sym_chi_leading(ch: ChernNumbers) -> Fraction:
    """N^3 coefficient of chi(S^N Omega) on the stack."""
    return (ch.c1_sq - ch.c2) / 6
