"""Linear parameter sweeps over the criteria.

No monotonicity is assumed: every swept value is evaluated in increasing
order, and the first passing one is the minimum.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import chern, criteria
from .core import INFINITY, CriterionVerdict, Multiplicity, OrbichernError, TheoremTag, ValidationError


class ScanFamily(enum.Enum):
    PlanePair = "plane-pair"
    NodesCusps = "nodes-cusps"
    NodalSurface = "nodal-surface"
    NodalJet = "nodal-jet"


class ScanEvaluationError(OrbichernError, ValueError):
    def __init__(self, param: str, value, cause: Exception):
        self.param = param
        self.value = value
        super().__init__(f"evaluation failed at {param}={value}: {cause}")


PARAMETERS = {
    ScanFamily.PlanePair: ("d1", "d2", "m1", "m2", "m"),
    ScanFamily.NodesCusps: ("d", "n", "c"),
    ScanFamily.NodalSurface: ("d", "l"),
    ScanFamily.NodalJet: ("k", "d", "l"),
}

MULTIPLICITY_PARAMS = {"m", "m1", "m2"}

ALLOWED_CRITERIA = {
    ScanFamily.PlanePair: (TheoremTag.PlanePair, TheoremTag.TheoremA),
    ScanFamily.NodesCusps: (TheoremTag.NodesCusps, TheoremTag.BogomolovStack),
    ScanFamily.NodalSurface: (TheoremTag.NodalSurface, TheoremTag.BogomolovStack),
    ScanFamily.NodalJet: (TheoremTag.Jet2, TheoremTag.Jet3),
}


@dataclass(frozen=True)
class SweptRange:
    name: str
    start: int
    stop: int
    include_infinity: bool = False

    def __post_init__(self) -> None:
        if self.stop < self.start:
            raise ValidationError(f"empty sweep range {self.name}={self.start}..{self.stop}")
        if self.include_infinity and self.name not in MULTIPLICITY_PARAMS:
            raise ValidationError(f"only multiplicity parameters may sweep to infinity, not {self.name!r}")

    def values(self) -> list:
        vals: list = list(range(self.start, self.stop + 1))
        if self.include_infinity:
            vals.append(INFINITY)
        return vals

    @classmethod
    def parse(cls, text: str) -> "SweptRange":
        """Parse ``name=lo..hi`` with an optional trailing ``,inf``."""
        name, eq, rng = text.partition("=")
        if not eq:
            raise ValidationError(f"sweep must look like name=lo..hi, got {text!r}")
        include_inf = False
        if rng.endswith(",inf"):
            include_inf = True
            rng = rng[: -len(",inf")]
        lo, dots, hi = rng.partition("..")
        if not dots:
            raise ValidationError(f"sweep must look like name=lo..hi, got {text!r}")
        try:
            return cls(name.strip(), int(lo), int(hi), include_inf)
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"sweep bounds must be integers (explicit upper bound required): {text!r}") from None


@dataclass(frozen=True)
class ScanRequest:
    family: ScanFamily
    swept: SweptRange
    fixed: Mapping[str, object] = field(default_factory=dict)
    criterion: TheoremTag | None = None

    def __post_init__(self) -> None:
        allowed = PARAMETERS[self.family]
        for name in list(self.fixed) + [self.swept.name]:
            if name not in allowed:
                raise ValidationError(f"unknown parameter {name!r} for family {self.family.value}")
        if self.swept.name in self.fixed:
            raise ValidationError(f"parameter {self.swept.name!r} is both fixed and swept")
        crit = self.criterion or self.default_criterion()
        if crit not in ALLOWED_CRITERIA[self.family]:
            raise ValidationError(f"criterion {crit.value} does not apply to family {self.family.value}")
        object.__setattr__(self, "criterion", crit)

    def default_criterion(self) -> TheoremTag:
        if self.family is ScanFamily.NodalJet:
            k = self.fixed.get("k", 3)
            return TheoremTag.Jet2 if k == 2 else TheoremTag.Jet3
        return ALLOWED_CRITERIA[self.family][0]


@dataclass(frozen=True)
class ScanRow:
    value: int | Multiplicity
    lhs: Fraction
    holds: bool


def _require(params: dict, *names: str) -> list:
    missing = [n for n in names if n not in params]
    if missing:
        raise ValidationError(f"missing fixed parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def _evaluate(req: ScanRequest, params: dict) -> CriterionVerdict:
    fam, crit = req.family, req.criterion
    if fam is ScanFamily.PlanePair:
        if "m" in params:
            params.setdefault("m1", params["m"])
            params.setdefault("m2", params["m"])
        d1, d2, m1, m2 = _require(params, "d1", "d2", "m1", "m2")
        cfg = criteria.PlanePairConfig(d1, d2, m1, m2)
        if crit is TheoremTag.TheoremA:
            return criteria.theorem_a_lhs(cfg.to_surface())
        return criteria.plane_pair_lhs(cfg)
    if fam is ScanFamily.NodesCusps:
        d, n, c = _require(params, "d", "n", "c")
        if crit is TheoremTag.BogomolovStack:
            return criteria.bogomolov_stack(chern.plane_nc_curve_chern(chern.PlaneNodeCuspCurve(d, n, c, 5)))
        return criteria.nodes_cusps_lhs(d, n, c)
    if fam is ScanFamily.NodalSurface:
        d, l = _require(params, "d", "l")
        if crit is TheoremTag.BogomolovStack:
            return criteria.bogomolov_stack(chern.nodal_surface_chern(chern.NodalSurface(d, l)))
        return criteria.nodal_surface_lhs(d, l)
    k, d, l = _require(params, "k", "d", "l")
    verdict = criteria.jet_h0_coefficient(k, d, l)
    if verdict.theorem_tag is not crit:
        raise ValidationError(f"criterion {crit.value} does not match jet order k={k}")
    return verdict


def _row(req: ScanRequest) -> Callable[[object], ScanRow]:
    def evaluate(value) -> ScanRow:
        params = dict(req.fixed)
        params[req.swept.name] = value
        try:
            verdict = _evaluate(req, params)
        except (OrbichernError, ValueError) as exc:
            raise ScanEvaluationError(req.swept.name, value, exc) from exc
        return ScanRow(value, verdict.lhs, verdict.holds)

    return evaluate


def grid_scan(req: ScanRequest, workers: int = 1) -> list[ScanRow]:
    """One row per swept value, in sweep order regardless of ``workers``."""
    evaluate = _row(req)
    values = req.swept.values()
    if workers <= 1:
        return [evaluate(v) for v in values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, values))


def minimal_passing(req: ScanRequest):
    """Smallest swept value whose verdict holds, or None if none in range."""
    evaluate = _row(req)
    for value in req.swept.values():
        if evaluate(value).holds:
            return value
    return None
