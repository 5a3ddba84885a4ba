import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribsq.identities import (
    IdentityTemplate,
    builtin_identities,
    dump_catalog,
    load_catalog,
    residual,
    verify_range,
)
from tribsq.sequence import TRIBONACCI, SequenceSpec

from conftest import naive_terms

CAT = builtin_identities()
seeds = st.integers(-999, 999)
specs = st.builds(SequenceSpec, seeds, seeds, seeds)


def test_catalog_contents():
    assert list(CAT) == ["S1", "S2", "S3", "S4", "S5", "P1", "P2", "P3", "P4", "C1"]
    assert CAT["S1"].coefficient_vector() == (1, -2, -3, -6, 1, 0, 1)
    assert CAT["S1"].window == (0, 6)
    assert CAT["S2"].window == (-2, 8)
    c1 = CAT["C1"].coefficient_vector()
    assert c1 == (1, -4, -9, -34, 24, -2, 40, -14, -1, -2, 1)
    assert sum(c1) == 0
    assert CAT["C1"].power == 3


def test_p1_as_printed():
    # 4 T[r-1] T[r] = 4 T[r-1]^2 - T[r-4]^2 + T[r]^2
    t = naive_terms(TRIBONACCI, -10, 40)
    for r in range(-5, 40):
        lhs = 4 * t[r - 1] * t[r]
        rhs = 4 * t[r - 1] ** 2 - t[r - 4] ** 2 + t[r] ** 2
        assert lhs == rhs
        assert residual(CAT["P1"], TRIBONACCI, r) == rhs - lhs


@pytest.mark.parametrize(
    "tid, spec, r",
    [("S1", TRIBONACCI, 6), ("S1", SequenceSpec(0, 0, 0), 5), ("C1", TRIBONACCI, 12), ("S4", TRIBONACCI, 0)],
)
def test_residual_examples(tid, spec, r):
    assert residual(CAT[tid], spec, r) == 0


def test_s1_worked_value():
    assert 13**2 - 2 * 7**2 - 3 * 4**2 - 6 * 2**2 + 1**2 + 0**2 == 0


def test_verify_range_examples():
    assert verify_range(CAT["S2"], TRIBONACCI, -20, 50).passed
    assert verify_range(CAT["P3"], SequenceSpec(3, 1, 4), -10, 10).passed
    bad = CAT["S1"].with_coefficient(1, -1, "S1_bad")
    report = verify_range(bad, TRIBONACCI, 0, 10)
    assert not report.passed
    assert dict(report.failures)[6] == 49


def test_verify_range_rejects_empty():
    with pytest.raises(ValueError):
        verify_range(CAT["S1"], TRIBONACCI, 5, 4)


def test_report_pass_iff_no_failures():
    rep = verify_range(CAT["S1"].with_coefficient(0, 2), TRIBONACCI, 0, 3)
    assert rep.passed == (not rep.failures)
    assert rep.to_dict()["pass"] is False


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(-100, 300), st.sampled_from(sorted(CAT)))
def test_builtin_identities_hold(spec, r, tid):
    assert residual(CAT[tid], spec, r) == 0


@settings(max_examples=30, deadline=None)
@given(specs, st.integers(-50, 50), st.integers(-5, 5), st.sampled_from(sorted(CAT)))
def test_shift_invariance(spec, r, k, tid):
    tpl = CAT[tid].with_coefficient(2, 5, "perturbed") if tid.startswith("S") else CAT[tid]
    assert residual(tpl, spec, r) == residual(tpl.shifted(k), spec, r + k)


@pytest.mark.parametrize("offset", range(0, 7))
@pytest.mark.parametrize("delta", [1, -1])
def test_s1_is_tight(offset, delta):
    tpl = CAT["S1"]
    coeff = dict(tpl.terms).get(offset, 0) + delta
    bad = tpl.with_coefficient(offset, coeff)
    assert any(residual(bad, TRIBONACCI, r) != 0 for r in range(0, 13))


def test_json_round_trip():
    text = dump_catalog(CAT.values())
    back = load_catalog(text)
    assert back == list(CAT.values())
    data = json.loads(text)
    assert set(data[0]) == {"id", "power", "terms", "cross_terms"}
    assert data[5]["cross_terms"] == [{"a": 1, "b": 0, "coeff": -4}]


def test_template_validation():
    with pytest.raises(ValueError):
        IdentityTemplate("x", 2, ())
    with pytest.raises(ValueError):
        IdentityTemplate("x", 2, ((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        IdentityTemplate("x", 0, ((0, 1),))
