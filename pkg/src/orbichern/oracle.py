"""Symbolic Riemann-Roch for Green-Griffiths jet bundles on surfaces.

The bundle E_{k,N} of jet differentials of order k and weighted degree N is
filtered with graded pieces S^{l_1} Omega (x) ... (x) S^{l_k} Omega, one for
every tuple l with l_1 + 2 l_2 + ... + k l_k = N.  Writing a, b for the Chern
roots of Omega, each graded piece splits into line bundles p*a + q*b, and
Riemann-Roch for a line bundle on a surface,

    chi(L) = L.(L - K)/2 + chi(O),

summed over the splitting, only depends on the power sums of the weights
(p, q).  The total is therefore a linear form in c1^2, c2 and chi(O), which
this module computes exactly for every N.

The leading term in N is recovered by exact interpolation on each residue
class of N modulo lcm(1, ..., k), since chi(E_{k,N}) is a quasi-polynomial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core import Multiplicity, OrbichernError, as_multiplicity, render_rational

DEFAULT_MAX_ORDER = 4


class OracleInconsistency(OrbichernError, AssertionError):
    """The oracle's own consistency checks failed; this is an internal error."""


class DegreeMismatch(OracleInconsistency):
    pass


class ClassDisagreement(OracleInconsistency):
    pass


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValueError(f"composition parts must be nonnegative: {self.parts}")

    @property
    def order(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(j * l for j, l in enumerate(self.parts, start=1))


@dataclass(frozen=True)
class CoeffForm:
    """alpha * c1^2 + beta * c2 + gamma * chi(O), exact."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "CoeffForm") -> "CoeffForm":
        return CoeffForm(self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma)

    def __sub__(self, other: "CoeffForm") -> "CoeffForm":
        return CoeffForm(self.alpha - other.alpha, self.beta - other.beta, self.gamma - other.gamma)

    def scale(self, factor) -> "CoeffForm":
        return CoeffForm(self.alpha * factor, self.beta * factor, self.gamma * factor)

    def evaluate(self, c1_sq, c2, chi_o=None) -> Fraction:
        """Plug in Chern numbers; chi(O) defaults to Noether's (c1^2 + c2)/12."""
        c1_sq, c2 = Fraction(c1_sq), Fraction(c2)
        if chi_o is None:
            chi_o = (c1_sq + c2) / 12
        return self.alpha * c1_sq + self.beta * c2 + self.gamma * Fraction(chi_o)

    def __str__(self) -> str:
        terms = []
        for coeff, symbol in ((self.alpha, "c1^2"), (self.beta, "c2"), (self.gamma, "chi(O)")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = symbol if mag == 1 else f"{render_rational(mag)}*{symbol}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def compositions(k: int, N: int) -> list[Composition]:
    """All (l_1, ..., l_k) >= 0 with sum j*l_j = N, larger l_1 first.

    >>> [c.parts for c in compositions(2, 3)]
    [(3, 0), (1, 1)]
    """
    if k < 1 or N < 0:
        raise ValueError(f"need k >= 1 and N >= 0, got k={k}, N={N}")
    return [Composition(p) for p in _weighted_tuples(k, N)]


def _weighted_tuples(k: int, N: int, j: int = 1) -> Iterator[tuple[int, ...]]:
    if j == k:
        if N % k == 0:
            yield (N // k,)
        return
    for l in range(N // j, -1, -1):
        for tail in _weighted_tuples(k, N - j * l, j + 1):
            yield (l,) + tail


def weight_power_sums(parts: Sequence[int]) -> tuple[int, int, int, int]:
    """Power sums (T, S1, S2, S11) of the splitting weights of S^{l_1} (x) ... (x) S^{l_k}.

    Each factor S^l contributes a weight p in {0, ..., l} (with q = l - p);
    the weights of the tensor product are sums of independent choices, so
    the count, first and second moments fold factor by factor.
    """
    T, S1, S2 = 1, 0, 0
    for l in parts:
        t = l + 1
        s1 = l * (l + 1) // 2
        s2 = l * (l + 1) * (2 * l + 1) // 6
        T, S1, S2 = T * t, S1 * t + s1 * T, S2 * t + 2 * S1 * s1 + s2 * T
    total = sum(parts)
    S11 = total * S1 - S2
    return T, S1, S2, S11


def _form_from_sums(T: int, S1: int, S2: int, S11: int) -> CoeffForm:
    # sum L^2 = S2 (c1^2 - 2 c2) + 2 S11 c2 and sum L.K = S1 c1^2
    return CoeffForm(Fraction(S2 - S1, 2), Fraction(-(S2 - S1) + (S11 - S1)), Fraction(T))


def chi_graded_term(comp: Composition | Sequence[int]) -> CoeffForm:
    parts = comp.parts if isinstance(comp, Composition) else tuple(comp)
    return _form_from_sums(*weight_power_sums(parts))


@lru_cache(maxsize=4096)
def chi_jet_exact(k: int, N: int) -> CoeffForm:
    """chi(E_{k,N}) as an exact linear form in (c1^2, c2, chi(O))."""
    if k < 1 or N < 0:
        raise ValueError(f"need k >= 1 and N >= 0, got k={k}, N={N}")
    A = B = T_tot = 0
    for parts in _weighted_tuples(k, N):
        T, S1, S2, S11 = weight_power_sums(parts)
        A += S2 - S1
        B += S11 - S1
        T_tot += T
    return CoeffForm(Fraction(A, 2), Fraction(B - A), Fraction(T_tot))


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Monomial coefficients (constant first) of the interpolating polynomial."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form from the innermost term outward
    coeffs = [dd[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for p in range(len(coeffs)):
            shifted[p] -= xs[i] * coeffs[p]
        shifted[0] += dd[i]
        coeffs = shifted
    return coeffs


def _horner(coeffs: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomialFit:
    """Per-residue-class polynomial fits of N -> chi_jet_exact(k, N)."""

    k: int
    period: int
    degree: int
    classes: tuple[tuple[CoeffForm, ...], ...]

    def evaluate(self, N: int) -> CoeffForm:
        coeffs = self.classes[N % self.period]
        return CoeffForm(
            _horner([c.alpha for c in coeffs], N),
            _horner([c.beta for c in coeffs], N),
            _horner([c.gamma for c in coeffs], N),
        )

    def leading(self, residue: int = 0) -> CoeffForm:
        return self.classes[residue][self.degree]


def _check_order(k: int, max_order: int) -> None:
    if k < 1:
        raise ValueError(f"jet order must be >= 1, got {k}")
    if k > max_order:
        raise ValueError(f"jet order {k} exceeds the configured cap {max_order}")


@lru_cache(maxsize=16)
def fit_quasi_polynomial(k: int, max_order: int = DEFAULT_MAX_ORDER, extra: int = 2) -> QuasiPolynomialFit:
    _check_order(k, max_order)
    period = math.lcm(*range(1, k + 1))
    degree = 2 * k + 1
    npts = degree + 1
    classes = []
    for r in range(period):
        Ns = [r + period * t for t in range(npts + extra)]
        forms = [chi_jet_exact(k, N) for N in Ns]
        per_component = []
        for attr in ("alpha", "beta", "gamma"):
            ys = [getattr(f, attr) for f in forms]
            coeffs = _interpolate(Ns[:npts], ys[:npts])
            for N, y in zip(Ns[npts:], ys[npts:]):
                if _horner(coeffs, N) != y:
                    raise DegreeMismatch(
                        f"k={k}, N={N} (class {r} mod {period}): degree-{degree} fit of the "
                        f"{attr} component does not reproduce the exact value"
                    )
            per_component.append(coeffs)
        classes.append(tuple(CoeffForm(a, b, g) for a, b, g in zip(*per_component)))
    return QuasiPolynomialFit(k, period, degree, tuple(classes))


def leading_coefficient(k: int, max_order: int = DEFAULT_MAX_ORDER) -> tuple[CoeffForm, int]:
    """Coefficient of N^(2k+1) in chi(E_{k,N}), checked on every residue class.

    >>> form, deg = leading_coefficient(1)
    >>> str(form), deg
    ('1/6*c1^2 - 1/6*c2', 3)
    """
    fit = fit_quasi_polynomial(k, max_order)
    top = fit.leading(0)
    for r in range(1, fit.period):
        if fit.leading(r) != top:
            raise ClassDisagreement(
                f"k={k}: residue class {r} mod {fit.period} has leading term {fit.leading(r)}, "
                f"class 0 has {top}"
            )
    if top.gamma != 0:
        raise DegreeMismatch(f"k={k}: leading term carries a chi(O) part {top.gamma}")
    return top, fit.degree


@dataclass(frozen=True)
class JetMonomial:
    """A local generator of the orbifold jet sheaf.

    ``exponents[i][j-1]`` is the power of d^j x_i / x_i and ``ceil_powers[i]``
    the power of x_i in front.
    """

    exponents: tuple[tuple[int, ...], ...]
    ceil_powers: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(j * a for row in self.exponents for j, a in enumerate(row, start=1))


def _splits(total: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _splits(total - first, n - 1):
            yield (first,) + rest


def count_orbifold_jet_generators(
    k: int, N: int, multiplicities: Sequence[Multiplicity | int]
) -> tuple[int, list[JetMonomial]]:
    """Enumerate the local generators of E_{k,N} on (C^n, sum (1 - 1/m_i){x_i = 0}).

    Each variable carries weight w_i = alpha_{i,1} + 2 alpha_{i,2} + ... + k alpha_{i,k}
    and is multiplied by x_i^ceil(w_i / m_i).
    """
    mults = [as_multiplicity(m) for m in multiplicities]
    if k < 1 or N < 0 or not mults:
        raise ValueError("need k >= 1, N >= 0 and at least one variable")
    if any(m.is_infinite for m in mults):
        raise ValueError("jet generators are only enumerated for finite multiplicities")
    out: list[JetMonomial] = []
    for weights in _splits(N, len(mults)):
        per_var = [list(_weighted_tuples(k, w)) for w in weights]
        ceil = tuple(-(-w // m.value) for w, m in zip(weights, mults))
        for rows in itertools.product(*per_var):
            out.append(JetMonomial(rows, ceil))
    return len(out), out

