from fractions import Fraction

import pytest

from orbichern import (
    INFINITY,
    AmbientSurfaceData,
    ChernNumbers,
    Multiplicity,
    NodalSurface,
    PlaneNodeCuspCurve,
    PlanePairConfig,
    SmoothOrbifoldSurface,
    TheoremTag,
    bogomolov_stack,
    jet_h0_coefficient,
    nevanlinna_excess,
    nodal_surface_chern,
    nodal_surface_lhs,
    nodes_cusps_lhs,
    plane_nc_curve_chern,
    plane_pair_lhs,
    remark_form_lhs,
    stack_c1_sq,
    stack_c2,
    surface_from_ambient,
    sym_chi_leading,
    theorem_a_lhs,
)
from orbichern.chern import NegativeGenus
from orbichern.criteria import JET_FORMS, UnsupportedJetOrder
from orbichern.oracle import leading_coefficient

from conftest import random_configs


def test_theorem_a_two_quintics(two_quintics):
    v = theorem_a_lhs(two_quintics)
    assert v.theorem_tag is TheoremTag.TheoremA
    assert v.lhs == Fraction(6, 4761)
    assert v.holds


def test_theorem_a_two_quintics_68(two_quintics):
    s = PlanePairConfig(5, 5, 68, 68).to_surface()
    v = theorem_a_lhs(s)
    assert v.lhs == Fraction(-61, 4624)
    assert not v.holds


def test_theorem_a_no_components():
    v = theorem_a_lhs(SmoothOrbifoldSurface(Fraction(11, 3), 2))
    assert v.lhs == Fraction(5, 3)


def test_remark_form_examples(two_quintics_ambient):
    assert remark_form_lhs(AmbientSurfaceData(9, 3)).lhs == 6
    assert remark_form_lhs(two_quintics_ambient).lhs == Fraction(6, 4761)


@pytest.mark.parametrize("amb", random_configs(seed=2024, count=150, allow_infinite=True))
def test_identities_on_random_configs(amb):
    s = surface_from_ambient(amb)
    a = theorem_a_lhs(s).lhs
    assert remark_form_lhs(amb).lhs == a
    assert stack_c1_sq(s) - stack_c2(s) == a


def test_infinite_components_are_flagged():
    v = plane_pair_lhs(PlanePairConfig(5, 5, INFINITY, 69))
    assert any("1/m = 0" in n for n in v.notes)
    assert not plane_pair_lhs(PlanePairConfig(5, 5, 69, 69)).notes


@pytest.mark.parametrize(
    "ch, lhs, holds",
    [((5, Fraction(17, 2)), Fraction(-7, 2), False), ((24, Fraction(45, 2)), Fraction(3, 2), True), ((7, 7), 0, False)],
)
def test_bogomolov_stack(ch, lhs, holds):
    v = bogomolov_stack(ChernNumbers(*ch))
    assert (v.lhs, v.holds) == (lhs, holds)


def test_plane_pair_examples():
    assert plane_pair_lhs(PlanePairConfig(5, 5, 69, 69)).lhs == Fraction(6, 4761)
    assert plane_pair_lhs(PlanePairConfig(5, 5, 68, 68)).lhs == Fraction(-61, 4624)
    for d1, d2 in [(4, 4), (5, 7), (10, 6)]:
        d = d1 + d2
        assert plane_pair_lhs(PlanePairConfig(d1, d2, INFINITY, INFINITY)).lhs == -3 * d + d1 * d2 + 6


def test_plane_pair_degree_bound():
    with pytest.raises(ValueError):
        PlanePairConfig(3, 5, 2, 2)


def test_plane_pair_equals_theorem_a_grid():
    mults = [Multiplicity(m) for m in range(2, 101)] + [INFINITY]
    for d1 in range(4, 11):
        for d2 in range(4, 11):
            for m1 in mults[::7] + [INFINITY]:
                for m2 in mults[::5] + [INFINITY]:
                    cfg = PlanePairConfig(d1, d2, m1, m2)
                    assert plane_pair_lhs(cfg).lhs == theorem_a_lhs(cfg.to_surface()).lhs


@pytest.mark.parametrize("args, lhs, holds", [((6, 0, 9), Fraction(405, 32), True), ((4, 0, 0), Fraction(-77, 2), False)])
def test_nodes_cusps(args, lhs, holds):
    v = nodes_cusps_lhs(*args)
    assert (v.lhs, v.holds) == (lhs, holds)


def test_nodes_cusps_rejects_unrealizable():
    with pytest.raises(NegativeGenus):
        nodes_cusps_lhs(4, 4, 0)


def test_nodes_cusps_chain():
    for d in range(4, 13):
        for n in range(0, 21, 3):
            for c in range(0, 21, 2):
                if (d - 1) * (d - 2) // 2 - n - c < 0:
                    continue
                lhs = nodes_cusps_lhs(d, n, c).lhs
                assert lhs * Fraction(4, 25) == bogomolov_stack(plane_nc_curve_chern(PlaneNodeCuspCurve(d, n, c))).lhs


@pytest.mark.parametrize("d, l, lhs", [(5, 31, Fraction(-7, 2)), (6, 57, Fraction(3, 2))])
def test_nodal_surface_lhs(d, l, lhs):
    assert nodal_surface_lhs(d, l).lhs == lhs
    assert nodal_surface_lhs(d, l).lhs == bogomolov_stack(nodal_surface_chern(NodalSurface(d, l))).lhs


def test_nodal_surface_lhs_no_nodes_always_fails():
    for d in range(5, 30):
        v = nodal_surface_lhs(d, 0)
        assert v.lhs == d * (10 - 4 * d)
        assert not v.holds


def test_quintic_note_mentions_34():
    assert any("34" in n for n in nodal_surface_lhs(5, 31).notes)


@pytest.mark.parametrize(
    "mults, lhs, holds",
    [((2, 3, 7), Fraction(1, 42), True), ((2, 3, 6), 0, False), ((INFINITY,) * 3, 1, True)],
)
def test_nevanlinna(mults, lhs, holds):
    v = nevanlinna_excess(mults)
    assert (v.lhs, v.holds) == (lhs, holds)


def test_nevanlinna_empty():
    with pytest.raises(ValueError):
        nevanlinna_excess([])


@pytest.mark.parametrize(
    "k, d, l, lhs, holds",
    [(2, 5, 31, Fraction(-15, 2), False), (3, 5, 31, Fraction(17, 2), True), (2, 6, 57, Fraction(111, 2), True)],
)
def test_jet_coefficient(k, d, l, lhs, holds):
    v = jet_h0_coefficient(k, d, l)
    assert (v.lhs, v.holds) == (lhs, holds)


def test_jet_unsupported_order():
    with pytest.raises(UnsupportedJetOrder):
        jet_h0_coefficient(4, 5, 31)


@pytest.mark.parametrize("k", [2, 3])
def test_jet_coefficient_is_oracle_form_on_nodal_stack(k):
    form, _ = leading_coefficient(k)
    alpha, beta, denom = JET_FORMS[k]
    assert form.alpha == Fraction(alpha, denom)
    assert form.beta == Fraction(-beta, denom)
    for d in range(5, 10):
        for l in range(0, 60, 7):
            ch = nodal_surface_chern(NodalSurface(d, l))
            v = jet_h0_coefficient(k, d, l)
            assert v.lhs == alpha * ch.c1_sq - beta * ch.c2
            assert v.lhs * v.normalization ** -1 == form.evaluate(ch.c1_sq, ch.c2, 0)


def test_sym_chi_leading():
    assert sym_chi_leading(ChernNumbers(9, 3)) == 1
    assert sym_chi_leading(ChernNumbers(5, Fraction(17, 2))) == Fraction(-7, 12)
    form, _ = leading_coefficient(1)
    for c1, c2 in [(9, 3), (5, Fraction(17, 2)), (Fraction(223729, 4761), Fraction(223723, 4761))]:
        assert sym_chi_leading(ChernNumbers(c1, c2)) == form.evaluate(c1, c2, 0)
