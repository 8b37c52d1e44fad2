import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _checks import sim_compatible
from eirep import corpus
from eirep.endotriv import (check_universal_property, endotrivialize, equivalence_classes,
                            to_terminal)
from eirep.fincat import Functor, is_endotrivial, is_isomorphic

FAMILY = [C for _, C in corpus.two_object_family()]


def test_group_collapses_to_terminal():
    E = endotrivialize(corpus.symmetric_group(3))
    assert len(E.quotient.morphisms) == 1 and len(E.classes) == 1


def test_endotrivial_category_is_fixed():
    for C in (corpus.a2(), corpus.kronecker(), corpus.diamond_poset()):
        E = endotrivialize(C)
        assert is_isomorphic(E.quotient, C) is not None


@pytest.mark.parametrize("name", ["c", "c_prime"])
def test_c_and_c_prime_collapse_to_a2(name):
    E = endotrivialize(corpus.get(name))
    assert is_isomorphic(E.quotient, corpus.a2()) is not None


def test_classes_of_case_five():
    classes = equivalence_classes(corpus.case(5))
    hom_class = [ms for ms in classes.values() if "i1" in ms][0]
    assert hom_class == ["i1", "i2", "i3", "i4"]


def test_universal_property_against_terminal_and_identity():
    C = corpus.z2_z3_triple()
    E = endotrivialize(C)
    assert check_universal_property(E, to_terminal(C))
    assert check_universal_property(E, E.functor)


def test_functor_to_non_endotrivial_target_is_refused():
    C = corpus.z(2)
    ident = Functor(C, C, {"x": "x"}, {m: m for m in C.morphisms})
    assert not check_universal_property(endotrivialize(C), ident)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FAMILY))
def test_family_quotients_are_compatible(C):
    assert sim_compatible(C)
    E = endotrivialize(C)
    assert is_endotrivial(E.quotient)
    assert check_universal_property(E, to_terminal(C))
