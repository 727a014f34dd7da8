from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import base_and_query, core_formulas, small_bases
from occlogic.formula import Var, _walk_vars, parse, parse_query, substitute_occurrence
from occlogic.inference import infer1, infer1b
from occlogic.lpm import (
    BOTH, FALSE, TRUE, LPmInterp, is_lpm_model, lpm_entails, lpm_eval, lpm_from_o_interp,
    mcr_from_lpm, minimal_lpm_models, o_interp_from_lpm,
)
from occlogic.osem import OInterp, a_minimal_omodels, infer_a1, infer_b1, om, omodels
from occlogic.relations import canonical_relation, enumerate_mcrs
from occlogic.semantics import CapExceeded

values = st.sampled_from([FALSE, TRUE, BOTH])
interps = st.fixed_dictionaries({"p": values, "q": values, "r": values})

p = Var("p")


def test_eval_examples():
    assert lpm_eval({"p": BOTH}, parse_query("p & !p")) == BOTH
    assert lpm_eval({"p": TRUE}, parse_query("!p")) == FALSE
    assert lpm_eval({"p": BOTH}, parse_query("!p")) == BOTH
    assert lpm_eval({}, p) == FALSE


def test_minimal_models_of_contradiction():
    (lam,) = minimal_lpm_models(parse("p\n!p"))
    assert lam.gluts == {"p"}


def test_minimal_models_of_consistent_base():
    assert minimal_lpm_models(parse("p")) == [LPmInterp.of({"p": TRUE})]


@pytest.mark.parametrize("base, query, expected", [
    ("p\n!p", "p & !p", True),
    ("p\n!p\n!p | q", "q", False),
    ("p\n!p\n!q", "(p | q) & !p", True),
    ("p\n!p\n!q", "q & !p", False),
])
def test_entailment_witnesses(base, query, expected):
    assert lpm_entails(parse(base), parse_query(query)).holds is expected


def test_off_base_query_variable_is_crisp_and_free():
    base = parse("p")
    assert not lpm_entails(base, parse_query("t"))
    assert lpm_entails(base, parse_query("t | !t"))


def test_cap():
    with pytest.raises(CapExceeded):
        minimal_lpm_models(parse("p & q & r"), cap=2)


def test_mcr_from_lpm():
    base = parse("p\n!p")
    rel = mcr_from_lpm(base, LPmInterp.of({"p": BOTH}))
    assert rel.blocks == ((1,), (2,))
    with pytest.raises(ValueError):
        mcr_from_lpm(base, LPmInterp.of({"p": TRUE}))
    consistent = parse("p & !q")
    assert mcr_from_lpm(consistent, LPmInterp.of({"p": TRUE, "q": FALSE})) == canonical_relation(consistent)


def test_bridges_between_interpretations():
    base = parse("p\n!p")
    assert o_interp_from_lpm(base, LPmInterp.of({"p": BOTH})) == OInterp((1, 0))
    assert o_interp_from_lpm(base, LPmInterp.of({"p": TRUE})) == OInterp((1, 1))
    sep = parse("p\n!p\nq | r")
    mu1 = OInterp((1, 0, 1, 0))
    assert lpm_from_o_interp(sep, mu1) == LPmInterp.of({"p": BOTH, "q": TRUE, "r": FALSE})


def test_a_minimal_o_model_can_give_non_minimal_lpm_model():
    base = parse("p\np -> !p & q\np -> !q")
    # classes {p1+, p2-, p4-}, {p3-}, {q1+}, {q2-}
    (mcr,) = [m for m in enumerate_mcrs(base) if (2, 5) in m.pairs and (1, 2) in m.pairs]
    lam = LPmInterp.of({"p": BOTH, "q": BOTH})
    assert is_lpm_model(lam, base.formulas)
    assert lam not in minimal_lpm_models(base)
    assert is_lpm_model(LPmInterp.of({"p": BOTH, "q": TRUE}), base.formulas)
    assert any(lpm_from_o_interp(base, mu) == lam for mu in om(base, mcr))


def test_non_containment_witnesses():
    k = parse("p\n!p")
    phi = parse_query("p & !p")
    assert lpm_entails(k, phi) and not infer1b(k, phi)
    k = parse("p\n!p\n!p | q")
    q = parse_query("q")
    assert infer1b(k, q) and not lpm_entails(k, q)
    assert infer_b1(k, q) and not lpm_entails(k, q)
    assert lpm_entails(parse("p\n!p"), phi) and not infer_b1(parse("p\n!p"), phi)


@given(core_formulas(), interps, st.sampled_from("pqr"))
def test_glutting_a_variable_keeps_values(f, table, name):
    before = lpm_eval(table, f)
    assert before <= lpm_eval({**table, name: BOTH}, f)


@given(core_formulas(), interps, st.data())
def test_occurrence_replacement_by_fresh_variable(f, table, data):
    occs = list(_walk_vars(f))
    i = data.draw(st.integers(0, len(occs) - 1))
    name, positive = occs[i]
    index = sum(1 for v, _ in occs[: i + 1] if v == name)
    g = substitute_occurrence(f, (name, index), Var("z"))
    v = lpm_eval(table, f)
    with_one = lpm_eval({**table, "z": TRUE}, g)
    with_zero = lpm_eval({**table, "z": FALSE}, g)
    if positive:
        assert 1 not in v or 1 in with_one
        assert 0 not in v or 0 in with_zero
    else:
        assert 0 not in v or 0 in with_one
        assert 1 not in v or 1 in with_zero


@given(small_bases())
def test_o_models_give_lpm_models(base):
    for mu in omodels(base):
        assert is_lpm_model(lpm_from_o_interp(base, mu), base.formulas)


@given(small_bases())
def test_minimal_lpm_models_give_mcrs(base):
    mcrs = set(enumerate_mcrs(base))
    for lam in minimal_lpm_models(base):
        assert mcr_from_lpm(base, lam) in mcrs


@given(small_bases())
def test_minimal_lpm_model_gives_a_minimal_o_model(base):
    amin = set(a_minimal_omodels(base))
    for lam in minimal_lpm_models(base):
        assert o_interp_from_lpm(base, lam) in amin


@given(small_bases())
def test_minimal_models_by_exhaustive_scan(base):
    names = base.variables
    models = [dict(zip(names, vs)) for vs in product((FALSE, TRUE, BOTH), repeat=len(names))
              if is_lpm_model(dict(zip(names, vs)), base.formulas)]
    gl = [frozenset(v for v, s in m.items() if s == BOTH) for m in models]
    expected = {LPmInterp.of(m) for m, g in zip(models, gl) if not any(h < g for h in gl)}
    assert set(minimal_lpm_models(base)) == expected


def test_a_minimal_image_of_non_minimal_lpm_model():
    """A glut on a single-polarity variable is invisible to the occurrence view."""
    base = parse("p")
    lam = LPmInterp.of({"p": BOTH})
    assert lam not in minimal_lpm_models(base)
    assert o_interp_from_lpm(base, lam) in a_minimal_omodels(base)


@given(base_and_query())
def test_m1_and_a1_are_within_lpm(pair):
    base, phi = pair
    lpm = lpm_entails(base, phi).holds
    assert not infer1(base, phi).holds or lpm
    assert not infer_a1(base, phi).holds or lpm
