import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _checks import inflate
from eirep import corpus
from eirep import linfield as lf
from eirep.fincat import CategoryError, FiniteCategory
from eirep.presentations import QuiverPresentation
from eirep.reptype import (Context, TwoSimplesParameters, candidate_parameters, classify,
                           coprime_field, parameters_finite, recheck, rule_oracle_family)

# verdict and deciding rule at p = 2, 3, 5
TABLE = {
    "a2": [("Finite", "endotrivialization")] * 3,
    "c": [("Infinite", "two-simples"), ("Infinite", "coprime-hereditary"), ("Infinite", "coprime-hereditary")],
    "c_prime": [("Finite", "string"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "case1": [("Finite", "string"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "case2": [("Finite", "string"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "case3": [("Finite", "string"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "case4": [("Finite", "two-simples"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "case5": [("Infinite", "string-band"), ("Infinite", "coprime-hereditary"), ("Infinite", "coprime-hereditary")],
    "diamond": [("Infinite", "parallel-kronecker")] * 3,
    "diamond_poset": [("Unknown", None)] * 3,
    "kronecker": [("Infinite", "parallel-kronecker")] * 3,
    "s3": [("Finite", "string"), ("Finite", "two-simples"), ("Finite", "coprime-hereditary")],
    "z2_z3_triple": [("Infinite", "separated-quiver"), ("Finite", "two-simples-blocks"), ("Finite", "coprime-hereditary")],
    "z2": [("Finite", "string"), ("Finite", "coprime-hereditary"), ("Finite", "coprime-hereditary")],
    "z3": [("Finite", "coprime-hereditary"), ("Finite", "string"), ("Finite", "coprime-hereditary")],
}
FAMILY = [C for _, C in corpus.two_object_family()]


@pytest.mark.parametrize("name", sorted(TABLE))
@pytest.mark.parametrize("i,p", list(enumerate((2, 3, 5))))
def test_corpus_verdicts(name, i, p):
    v = classify(corpus.get(name), p)
    assert (v.verdict, v.rule) == TABLE[name][i]
    assert recheck(corpus.get(name), v)


@pytest.mark.parametrize("name", sorted(TABLE))
def test_no_conflicts_and_duality(name):
    C = corpus.get(name)
    for p in (2, 3):
        v = classify(C, p, all_rules=True)
        assert not v.conflicts()
        assert classify(C.opposite(), p).verdict == v.verdict


def test_unknown_lists_every_rule():
    v = classify(corpus.diamond_poset(), 2)
    assert v.verdict == "Unknown" and len(v.attempted) == 9
    assert all(o.reason for o in v.attempted)


def test_non_ei_rejected():
    # {1, e} with e idempotent: an endomorphism that is not invertible
    C = FiniteCategory(["x"], [("1", "x", "x"), ("e", "x", "x")], {"x": "1"},
                       {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"})
    with pytest.raises(CategoryError):
        classify(C, 2)


def test_verdict_json_shape():
    d = json.loads(classify(corpus.case(5), 2).dumps())
    assert {"verdict", "rule", "witness", "field", "notes"} <= set(d)
    assert d["field"] == {"p": 2, "k": 1}


def test_characteristic_zero_substitute():
    F = coprime_field(corpus.z2_z3_triple())
    assert F.p not in (2, 3) and (F.q - 1) % 6 == 0


@pytest.mark.parametrize("params,finite", [
    ((4, 1, 1, 1), True),     # C'
    ((4, 4, 1, 1), False),    # C
    ((2, 1, 1, 2), True),     # case (1)
    ((2, 2, 2, 2), False),    # case (5)
    ((2, 2, 1, 4), True),
    ((4, 2, 2, 4), False),
    ((4, 1, 1, 4), True),
])
def test_finite_lists(params, finite):
    assert parameters_finite(TwoSimplesParameters(*params, p=2)) is finite


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, 2, 4, 8]), st.sampled_from([1, 2, 4, 8]))
def test_finite_lists_are_self_dual(m, t):
    for P in candidate_parameters(m, t, 2):
        assert parameters_finite(P) == parameters_finite(P.dual())
        assert P.presentation().quiver.vertices == ("x", "y")


def test_parameter_validation():
    with pytest.raises(ValueError):
        TwoSimplesParameters(4, 3, 1, 1, 2)
    with pytest.raises(ValueError):
        TwoSimplesParameters(4, 2, 2, 4, 2, e=1)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(FAMILY))
def test_family_classify_is_stable_under_skeletalize(C):
    v = classify(C, 2)
    w = classify(inflate(C, "y", "y_copy"), 2)
    assert (v.verdict, v.rule) == (w.verdict, w.rule)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(FAMILY))
def test_family_certificates_recheck(C):
    v = classify(C, 2, all_rules=True)
    assert not v.conflicts() and recheck(C, v)


def test_oracle_rule_on_kronecker():
    ctx = Context(corpus.kronecker(), lf.field_make(2))
    out = rule_oracle_family(ctx, [1, 1])
    assert out.verdict == "Infinite" and out.witness["counts"] == {"F2": 3, "F4": 5}
    assert rule_oracle_family(Context(corpus.a2(), lf.field_make(2)), [1, 1]).verdict is None


@pytest.mark.slow
def test_oracle_rule_on_triple_arrow_radical_square_quotient():
    ctx = Context(corpus.z2_z3_triple(), lf.field_make(2))
    out = rule_oracle_family(ctx, [3, 1, 1, 1])
    assert out.witness["source"] == "radical-square quotient"
    assert out.witness["counts"] == {"F2": 6, "F4": 8}
    assert out.verdict == "Infinite"


def test_oracle_rule_budget_declines():
    ctx = Context(corpus.case(5), lf.field_make(2))
    out = rule_oracle_family(ctx, [3, 3], budget=10)
    assert out.verdict is None and "budget" in out.reason


def test_presentation_of_template_ii():
    P = TwoSimplesParameters(3, 3, 3, 3, 3, e=1, f=1)
    assert P.template == "ii"
    assert isinstance(P.presentation(), QuiverPresentation)
