"""YAML configuration files for the command line tool.

A file holds exactly one top-level configuration.  Either a surface::

    surface:
      ambient_c1_sq: 9        # or log_c1_sq / log_c2, as "p/q" strings or ints
      ambient_c2: 3
    components:
      - {genus: 6, multiplicity: 69, label: C1}
      - {genus: 6, multiplicity: inf}
    intersections:
      matrix: [[25, 25], [25, 25]]

or one family shortcut: ``plane_pair {d1, d2, m1, m2}``,
``nodes_cusps {d, n, c[, m]}``, ``nodal_surface {d, l}`` or
``nevanlinna {multiplicities}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import yaml

from . import chern, criteria
from .core import (
    AmbientSurfaceData,
    CurveComponent,
    IntersectionMatrix,
    OrbichernError,
    SmoothOrbifoldSurface,
    ValidationError,
    as_multiplicity,
    parse_rational,
    validate_surface,
)

FAMILY_KEYS = ("plane_pair", "nodes_cusps", "nodal_surface", "nevanlinna")


class ParseError(OrbichernError, ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class _Node:
    """A plain YAML value paired with the line it came from (1-based)."""

    __slots__ = ("value", "line")

    def __init__(self, value, line):
        self.value = value
        self.line = line


def _wrap(node: yaml.Node) -> _Node:
    line = node.start_mark.line + 1
    if isinstance(node, yaml.MappingNode):
        out = {}
        for k, v in node.value:
            out[str(k.value)] = _wrap(v)
        return _Node(out, line)
    if isinstance(node, yaml.SequenceNode):
        return _Node([_wrap(v) for v in node.value], line)
    return _Node(yaml.safe_load(yaml.serialize(node)), line)


def _get(block: _Node, key: str, path: str, required: bool = True) -> _Node | None:
    if not isinstance(block.value, dict):
        raise ParseError("expected a mapping", block.line, path)
    if key not in block.value:
        if required:
            raise ParseError("missing required field", block.line, f"{path}.{key}" if path else key)
        return None
    return block.value[key]


def _int(n: _Node, field: str) -> int:
    v = n.value
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer, got {v!r}", n.line, field)
    return v


def _rational(n: _Node, field: str) -> Fraction:
    v = n.value
    if isinstance(v, bool) or isinstance(v, float):
        raise ParseError(f"expected an exact rational such as \"75/2\", got {v!r}", n.line, field)
    try:
        return Fraction(v) if isinstance(v, int) else parse_rational(str(v))
    except ValueError as exc:
        raise ParseError(str(exc), n.line, field) from None


def _mult(n: _Node, field: str):
    v = n.value
    if isinstance(v, float) and v == float("inf"):
        return as_multiplicity(v)
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected an integer or \"inf\", got {v!r}", n.line, field)
    try:
        return as_multiplicity(v)
    except ValidationError as exc:
        raise ParseError(str(exc), n.line, field) from None


def _surface(root: _Node):
    surf = _get(root, "surface", "")
    comps_node = _get(root, "components", "", required=False)
    comps = []
    if comps_node is not None:
        if not isinstance(comps_node.value, list):
            raise ParseError("expected a list of component blocks", comps_node.line, "components")
        for idx, c in enumerate(comps_node.value):
            path = f"components[{idx}]"
            genus = _int(_get(c, "genus", path), f"{path}.genus")
            mult = _mult(_get(c, "multiplicity", path), f"{path}.multiplicity")
            label_node = _get(c, "label", path, required=False)
            label = str(label_node.value) if label_node is not None else f"C{idx + 1}"
            try:
                comps.append(CurveComponent(genus, mult, label))
            except ValidationError as exc:
                raise ParseError(str(exc), c.line, path) from None
    inter = _get(root, "intersections", "", required=bool(comps))
    rows: list[list[int]] = []
    if inter is not None:
        matrix = _get(inter, "matrix", "intersections")
        if not isinstance(matrix.value, list):
            raise ParseError("expected a list of rows", matrix.line, "intersections.matrix")
        for i, row in enumerate(matrix.value):
            if not isinstance(row.value, list):
                raise ParseError("expected a list of integers", row.line, f"intersections.matrix[{i}]")
            rows.append([_int(x, f"intersections.matrix[{i}]") for x in row.value])

    has_log = "log_c1_sq" in surf.value if isinstance(surf.value, dict) else False
    has_amb = "ambient_c1_sq" in surf.value if isinstance(surf.value, dict) else False
    if has_log == has_amb:
        raise ParseError("give exactly one of log_c1_sq/log_c2 or ambient_c1_sq/ambient_c2", surf.line, "surface")
    prefix = "log" if has_log else "ambient"
    c1 = _rational(_get(surf, f"{prefix}_c1_sq", "surface"), f"surface.{prefix}_c1_sq")
    c2 = _rational(_get(surf, f"{prefix}_c2", "surface"), f"surface.{prefix}_c2")
    cls = SmoothOrbifoldSurface if has_log else AmbientSurfaceData
    cfg = cls(c1, c2, tuple(comps), IntersectionMatrix.from_rows(rows))
    return validate_surface(cfg)


def _family(root: _Node, key: str):
    block = root.value[key]
    ints = {}
    try:
        if key == "plane_pair":
            for f in ("d1", "d2"):
                ints[f] = _int(_get(block, f, key), f"{key}.{f}")
            m1 = _mult(_get(block, "m1", key), f"{key}.m1")
            m2 = _mult(_get(block, "m2", key), f"{key}.m2")
            return criteria.PlanePairConfig(ints["d1"], ints["d2"], m1, m2)
        if key == "nodes_cusps":
            d = _int(_get(block, "d", key), f"{key}.d")
            n = _int(_get(block, "n", key), f"{key}.n")
            c = _int(_get(block, "c", key), f"{key}.c")
            m_node = _get(block, "m", key, required=False)
            m = _int(m_node, f"{key}.m") if m_node is not None else 5
            return chern.PlaneNodeCuspCurve(d, n, c, m)
        if key == "nodal_surface":
            d = _int(_get(block, "d", key), f"{key}.d")
            l = _int(_get(block, "l", key), f"{key}.l")
            return chern.NodalSurface(d, l)
        mults = _get(block, "multiplicities", key)
        if not isinstance(mults.value, list):
            raise ParseError("expected a list", mults.line, f"{key}.multiplicities")
        return criteria.NevanlinnaConfig(
            tuple(_mult(m, f"{key}.multiplicities[{i}]") for i, m in enumerate(mults.value))
        )
    except ParseError:
        raise
    except (ValidationError, chern.NegativeGenus, chern.OutsideKltRange) as exc:
        raise ParseError(str(exc), block.line, key) from None


def parse_config(text: str):
    """Parse configuration text into a validated configuration object.

    Returns a :class:`SmoothOrbifoldSurface`, :class:`AmbientSurfaceData`,
    :class:`~orbichern.criteria.PlanePairConfig`,
    :class:`~orbichern.chern.PlaneNodeCuspCurve`,
    :class:`~orbichern.chern.NodalSurface` or
    :class:`~orbichern.criteria.NevanlinnaConfig`.
    Dimension and symmetry problems of surfaces surface as the core
    validation errors; everything else is a :class:`ParseError`.
    """
    try:
        node = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ParseError(f"malformed YAML: {getattr(exc, 'problem', exc)}", mark.line + 1 if mark else None) from None
    if node is None:
        raise ParseError("empty configuration")
    root = _wrap(node)
    if not isinstance(root.value, dict):
        raise ParseError("top level must be a mapping", root.line)
    families = [k for k in FAMILY_KEYS if k in root.value]
    if len(families) > 1:
        raise ParseError(f"more than one configuration block: {', '.join(families)}", root.line)
    if families:
        return _family(root, families[0])
    if "surface" not in root.value:
        raise ParseError(
            "no configuration block found (expected surface or one of " + ", ".join(FAMILY_KEYS) + ")",
            root.line,
        )
    return _surface(root)


def load_config(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
