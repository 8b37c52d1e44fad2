import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _checks import category_axioms, inflate
from eirep import corpus
from eirep.fincat import (CategoryError, DomainMismatch, IdentityViolation, NonAssociative,
                          action_properties, hom_action, is_ei, is_isomorphic, is_skeletal,
                          object_poset, path_category, poset_category, skeletalize,
                          validate_category)

NAMES = sorted(corpus.CORPUS)


def _raw(C):
    return json.loads(json.dumps(C.to_json()))


@pytest.mark.parametrize("name", NAMES)
def test_corpus_satisfies_axioms(name):
    C = corpus.get(name)
    assert category_axioms(C)
    assert is_ei(C)


@pytest.mark.parametrize("name", NAMES)
def test_json_roundtrip_is_byte_stable(name):
    C = corpus.get(name)
    assert validate_category(C.dumps()).dumps() == C.dumps()


def test_missing_composite_reports_pair():
    raw = _raw(corpus.a2())
    raw["compose"] = [c for c in raw["compose"] if c[:2] != ["a", "1_1"]]
    with pytest.raises(DomainMismatch) as err:
        validate_category(raw)
    assert "a" in str(err.value) and "1_1" in str(err.value)


def test_bad_identity_detected():
    raw = _raw(corpus.z(2))
    raw["compose"] = [[g, f, "1x" if (g, f) == ("1x", "g") else gf] for g, f, gf in raw["compose"]]
    with pytest.raises(IdentityViolation):
        validate_category(raw)


def test_non_associative_detected():
    # a three-element monoid table that fails associativity but keeps identities
    objs = ["x"]
    mors = [{"id": m, "dom": "x", "cod": "x"} for m in ("e", "a", "b")]
    table = {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
    comp = [["e", m, m] for m in ("e", "a", "b")] + [[m, "e", m] for m in ("a", "b")]
    comp += [[g, f, h] for (g, f), h in table.items()]
    with pytest.raises(NonAssociative):
        validate_category({"objects": objs, "morphisms": mors, "identities": {"x": "e"}, "compose": comp})


def test_unknown_endpoint_and_duplicates():
    raw = _raw(corpus.a2())
    raw["morphisms"].append({"id": "zz", "dom": "1", "cod": "9"})
    with pytest.raises(CategoryError):
        validate_category(raw)
    raw = _raw(corpus.a2())
    raw["morphisms"].append(dict(raw["morphisms"][0]))
    with pytest.raises(CategoryError):
        validate_category(raw)


def test_path_category_names_compose_in_order():
    C = path_category(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert C.comp("b", "a") == "b.a"
    assert len(C.morphisms) == 6


def test_poset_structure_and_union_of_chains():
    P = object_poset(corpus.diamond_poset())
    assert P.hasse() == [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    assert not P.is_union_of_chains()
    Q = object_poset(poset_category(["u", "v", "w"], [("u", "v")]))
    assert Q.is_union_of_chains() and Q.components() == [["u", "v"], ["w"]]


def test_hom_actions_on_case_table():
    assert action_properties(hom_action(corpus.case(5), "x", "y"))["is_free"]
    assert not action_properties(hom_action(corpus.case(1), "x", "y"))["is_free"]
    a3 = action_properties(hom_action(corpus.case(3), "x", "y"))
    assert a3["orbit_count"] == 1 and not a3["is_free"]


def test_skeletalize_recovers_original():
    C = corpus.case(4)
    S, retraction = skeletalize(inflate(C, "y", "y2"))
    assert retraction["y2"] == "y" and is_skeletal(S)
    assert is_isomorphic(S, C) is not None


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.data())
def test_random_posets_are_valid_categories(n, data):
    els = [f"p{i}" for i in range(n)]
    pairs = [(els[i], els[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    C = poset_category(els, chosen)
    assert category_axioms(C) and is_ei(C) and is_skeletal(C)
    P = object_poset(C)
    for a, b in chosen:
        assert P.leq(a, b)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(NAMES), st.randoms(use_true_random=False))
def test_relabelling_gives_isomorphic_category(name, rnd):
    C = corpus.get(name)
    ms = list(C.morphisms)
    shuffled = ms[:]
    rnd.shuffle(shuffled)
    D = C.relabel(mor_map={m: f"m{i}" for i, m in enumerate(shuffled)})
    assert is_isomorphic(C, D) is not None
