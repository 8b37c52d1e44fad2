import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eirep import corpus
from eirep import linfield as lf
from eirep.algebra import category_algebra
from eirep.presentations import (PresentationError, Quiver, QuiverPresentation,
                                 finite_string_count, has_band, is_string_algebra, parse_relation,
                                 presented_algebra, separated_quiver, strings_are_finite,
                                 symmetric_cartan, underlying_graph_class, verify_presentation)

F2 = lf.field_make(2)
CASE_ARROWS = [("a", "x", "x"), ("b", "x", "y"), ("g", "y", "y")]


def case_pres(*rels):
    return QuiverPresentation.build(["x", "y"], CASE_ARROWS, rels)


@pytest.mark.parametrize("text", ["g^2 b - b a^3", "2*b a + a b", "a a", "- b a"])
def test_relation_text_roundtrip(text):
    r = parse_relation(text)
    assert parse_relation(r.text()) == r


def test_parse_errors():
    with pytest.raises(PresentationError):
        parse_relation("a + + b")
    with pytest.raises(PresentationError):
        case_pres("a b")  # b then a is not composable
    with pytest.raises(PresentationError):
        case_pres("b")


@pytest.mark.parametrize("rels,dim", [
    (["a a", "g g", "b a", "g b"], 5), (["a a", "g g", "b a"], 6),
    (["a a", "g g", "b a - g b"], 6), (["a a", "g g"], 8),
])
def test_presented_dimensions(rels, dim):
    assert presented_algebra(case_pres(*rels), F2).dim == dim


def test_dimension_stable_in_length_bound():
    P = case_pres("a a", "g g", "b a - g b")
    dims = {presented_algebra(P, F2, L=L).dim for L in (4, 6, 9)}
    assert dims == {6}


def test_path_algebra_of_a3():
    Q = QuiverPresentation.build(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert presented_algebra(Q, lf.field_make(3)).dim == 6


def test_verification_rejects_wrong_relations():
    A = category_algebra(corpus.case(1), F2)
    assert not verify_presentation(A, case_pres("a a", "g g"))
    assert not verify_presentation(A, case_pres("a a", "g g", "b a"))
    assert verify_presentation(A, case_pres("a a", "g g", "b a", "g b"))


def test_string_algebra_and_bands():
    five = case_pres("a a", "g g")
    assert is_string_algebra(five) and not strings_are_finite(five)
    assert has_band(five).found
    one = case_pres("a a", "g g", "b a", "g b")
    assert strings_are_finite(one) and not has_band(one).found
    assert finite_string_count(one) is not None
    assert not is_string_algebra(case_pres("a a", "g g", "b a - g b"))


def test_kronecker_has_band():
    K = QuiverPresentation.build(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    band = has_band(K)
    assert band.found and set(band.text().split()) == {"a", "b^-"}


def test_separated_quiver_of_loop_is_a2():
    Q = Quiver(("x",), (("a", "x", "x"),))
    S = separated_quiver(Q)
    assert underlying_graph_class(S).names() == ["A2"]


@pytest.mark.parametrize("edges,name", [
    ([(0, 1), (1, 2), (2, 3)], "A4"),
    ([(0, 1), (0, 2), (0, 3)], "D4"),
    ([(0, 1), (0, 2), (0, 3), (0, 4)], "D~4"),
    ([(0, 1), (1, 2), (2, 3), (3, 0)], "A~3"),
    ([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], "E6"),
    ([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)], "E~6"),
])
def test_named_graphs(edges, name):
    n = 1 + max(max(e) for e in edges)
    Q = Quiver(tuple(range(n)), tuple((f"e{i}", s, t) for i, (s, t) in enumerate(edges)))
    assert underlying_graph_class(Q).names() == [name]


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(1, 8))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2))
    return n, edges + extra


@settings(max_examples=150, deadline=None)
@given(connected_graphs())
def test_graph_class_matches_cartan_form(graph):
    n, edges = graph
    Q = Quiver(tuple(range(n)), tuple((f"e{i}", s, t) for i, (s, t) in enumerate(edges)))
    ev = np.linalg.eigvalsh(symmetric_cartan(Q))
    tag = underlying_graph_class(Q).tag
    if ev.min() > 1e-9:
        assert tag == "DynkinADE"
    elif ev.min() > -1e-9 and np.sum(np.abs(ev) < 1e-9) == 1:
        assert tag == "Euclidean"
    else:
        assert tag == "Other"
