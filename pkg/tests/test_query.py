import pytest
from hypothesis import given

from conftest import base_and_query
from occlogic.formula import parse, parse_query
from occlogic.query import RELATIONS, Limits, decide, decide_all, violations
from occlogic.semantics import CapExceeded


def test_unknown_relation():
    with pytest.raises(ValueError):
        decide(parse("p"), parse_query("p"), "m3")


def test_violations_flags_each_broken_claim():
    row = dict.fromkeys(RELATIONS, False)
    row["m2"] = True
    assert violations(row) == ["m2 ⊆ m1", "m2 ⊆ mb2", "a2 = m2"]
    assert violations(dict.fromkeys(RELATIONS, True)) == []


def test_limits_are_forwarded():
    base = parse("p & q & r")
    with pytest.raises(CapExceeded):
        decide(base, parse_query("p"), "lpm", Limits(lpm_cap=2))
    with pytest.raises(CapExceeded):
        decide(base, parse_query("p"), "a1", Limits(bool_cap=2))
    with pytest.raises(CapExceeded):
        decide(base, parse_query("p"), "m1", Limits(occ_cap=2))


@given(base_and_query())
def test_no_containment_violations(pair):
    base, phi = pair
    assert violations(decide_all(base, phi)) == []
