from fractions import Fraction

import pytest

from orbichern.core import INFINITY, TheoremTag, ValidationError
from orbichern.scan import (
    ScanEvaluationError,
    ScanFamily,
    ScanRequest,
    SweptRange,
    grid_scan,
    minimal_passing,
)


def plane_pair_request(**kw):
    return ScanRequest(ScanFamily.PlanePair, SweptRange("m", 2, 100), {"d1": 5, "d2": 5}, **kw)


def test_plane_pair_minimum_is_69():
    assert minimal_passing(plane_pair_request()) == 69


def test_plane_pair_minimum_agrees_with_theorem_a():
    assert minimal_passing(plane_pair_request(criterion=TheoremTag.TheoremA)) == 69


def test_minimum_matches_first_holding_row():
    for req in (
        plane_pair_request(),
        ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 0, 60), {"d": 6}),
        ScanRequest(ScanFamily.NodesCusps, SweptRange("c", 0, 9), {"d": 6, "n": 0}),
    ):
        rows = grid_scan(req)
        first = next((r.value for r in rows if r.holds), None)
        assert minimal_passing(req) == first


def test_nodal_surface_quintic_needs_34_nodes():
    req = ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 0, 40), {"d": 5})
    assert minimal_passing(req) == 34
    rows = {r.value: r for r in grid_scan(req)}
    assert rows[33].lhs == Fraction(-1, 2)
    assert rows[34].lhs == Fraction(1)


def test_nodal_jet_cubic_order_quintic_minimum():
    req = ScanRequest(ScanFamily.NodalJet, SweptRange("l", 0, 40), {"k": 3, "d": 5})
    assert req.criterion is TheoremTag.Jet3
    assert minimal_passing(req) == 31


def test_nodal_jet_order_two_has_no_quintic_pass():
    req = ScanRequest(ScanFamily.NodalJet, SweptRange("l", 0, 31), {"k": 2, "d": 5})
    assert req.criterion is TheoremTag.Jet2
    rows = grid_scan(req)
    assert not any(r.holds for r in rows)
    assert rows[-1].lhs == Fraction(-15, 2)
    assert minimal_passing(req) is None


def test_sextic_nodal_surface_rows():
    req = ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 55, 58), {"d": 6})
    rows = grid_scan(req)
    assert [r.value for r in rows] == [55, 56, 57, 58]
    assert [r.holds for r in rows] == [False, False, True, True]
    assert [r.lhs for r in rows] == [Fraction(-3, 2), 0, Fraction(3, 2), 3]


def test_nodes_cusps_sextic():
    req = ScanRequest(ScanFamily.NodesCusps, SweptRange("c", 0, 9), {"d": 6, "n": 0})
    rows = grid_scan(req)
    assert [r.holds for r in rows] == [c >= 8 for c in range(10)]


def test_workers_preserve_order():
    req = plane_pair_request()
    serial = grid_scan(req)
    assert grid_scan(req, workers=4) == serial
    assert grid_scan(req) == serial


def test_infinity_endpoint():
    req = ScanRequest(ScanFamily.PlanePair, SweptRange("m", 2, 5, include_infinity=True), {"d1": 5, "d2": 5})
    rows = grid_scan(req)
    assert rows[-1].value is INFINITY
    assert rows[-1].holds
    # logarithmic limit: log c1^2 - log c2 = 49 - 48
    assert rows[-1].lhs == 1


def test_swept_range_parse():
    r = SweptRange.parse("m=2..100")
    assert (r.name, r.start, r.stop, r.include_infinity) == ("m", 2, 100, False)
    r = SweptRange.parse("m1=3..7,inf")
    assert r.values() == [3, 4, 5, 6, 7, INFINITY]


@pytest.mark.parametrize("text", ["m=2..", "m2..5", "m=a..b", "l=5..3", "l=1..4,inf"])
def test_swept_range_rejects(text):
    with pytest.raises(ValidationError):
        SweptRange.parse(text)


def test_request_validation():
    with pytest.raises(ValidationError):
        ScanRequest(ScanFamily.NodalSurface, SweptRange("m", 2, 5), {"d": 5})
    with pytest.raises(ValidationError):
        ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 2, 5), {"d": 5, "l": 3})
    with pytest.raises(ValidationError):
        ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 2, 5), {"d": 5}, criterion=TheoremTag.Jet2)


def test_missing_fixed_parameter_reports_value():
    req = ScanRequest(ScanFamily.NodalSurface, SweptRange("l", 2, 5), {})
    with pytest.raises(ScanEvaluationError) as info:
        grid_scan(req)
    assert info.value.param == "l" and info.value.value == 2


def test_unrealizable_curve_propagates_with_value():
    # a smooth quartic has genus 3, so four cusps push the normalization genus negative
    req = ScanRequest(ScanFamily.NodesCusps, SweptRange("c", 0, 6), {"d": 4, "n": 0})
    with pytest.raises(ScanEvaluationError) as info:
        grid_scan(req)
    assert info.value.param == "c" and info.value.value == 4


def test_scan_is_deterministic():
    req = ScanRequest(ScanFamily.NodalJet, SweptRange("l", 0, 40), {"k": 3, "d": 6})
    assert grid_scan(req) == grid_scan(req)
