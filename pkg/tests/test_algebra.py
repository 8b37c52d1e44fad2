import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _checks import idempotents_ok, radical_nilpotent
from eirep import corpus
from eirep import linfield as lf
from eirep.algebra import (NotAssociative, StructureAlgebra, basic_algebra, category_algebra,
                           center, ext_quiver, extend_scalars, group_algebra, incidence_algebra,
                           is_local, nilpotency_index, primitive_idempotents, radical,
                           radical_oracle, same_subspace, simple_count)
from eirep.fincat import object_poset
from eirep.groups import Group

FAMILY = [C for _, C in corpus.two_object_family()]


def test_non_associative_tensor_rejected():
    F = lf.field_make(3)
    T = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        T[0, i, i] = T[i, 0, i] = 1
    T[1, 2, 1] = 1  # x*y = x
    T[2, 1, 2] = 1  # y*x = y
    with pytest.raises(NotAssociative):
        StructureAlgebra(F, ["1", "x", "y"], T, [1, 0, 0])


@pytest.mark.parametrize("name,p,dim_rad", [
    ("case1", 2, 3), ("case5", 3, 4), ("z2_z3_triple", 3, 5), ("z2_z3_triple", 2, 4),
    ("kronecker", 2, 2), ("z3", 3, 2), ("s3", 5, 0),
])
def test_radical_dimension(name, p, dim_rad):
    A = category_algebra(corpus.get(name), lf.field_make(p))
    assert len(radical(A)) == dim_rad


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(FAMILY), st.sampled_from([2, 3]))
def test_radical_matches_exhaustive_oracle(C, p):
    A = category_algebra(C, lf.field_make(p))
    if p ** A.dim > 4096:
        return
    assert same_subspace(A.F, radical(A), radical_oracle(A, limit=4096))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(FAMILY), st.sampled_from([2, 3, 5]))
def test_radical_nilpotent_and_idempotents_complete(C, p):
    A = category_algebra(C, lf.field_make(p))
    assert radical_nilpotent(A)
    assert idempotents_ok(A)


def test_nilpotency_index_uniserial_group():
    A = category_algebra(corpus.z(2), lf.field_make(2))
    assert nilpotency_index(A) == 2
    B = group_algebra(Group.cyclic(4), lf.field_make(2))
    assert nilpotency_index(B) == 4 and is_local(B)


def test_group_algebra_simple_counts():
    S3 = Group.symmetric(3)
    assert simple_count(group_algebra(S3, lf.field_make(2))) == 2
    assert simple_count(group_algebra(S3, lf.field_make(3))) == 2
    assert simple_count(group_algebra(S3, lf.field_make(5))) == 3


def test_non_split_quotient_is_extended():
    # Z3 over F2: A/rad = F2 x F4 needs the extension for primitive idempotents
    D = primitive_idempotents(group_algebra(Group.cyclic(3), lf.field_make(2)))
    assert D.field.q == 4 and len(D.idempotents) == 3


def test_incidence_algebra_of_diamond():
    P = object_poset(corpus.diamond_poset())
    A = incidence_algebra(P, lf.field_make(3))
    assert A.dim == 9
    Q = ext_quiver(primitive_idempotents(A))
    assert Q.arrow_count() == 4


def test_kronecker_ext_quiver_and_basic_algebra():
    A = category_algebra(corpus.kronecker(), lf.field_make(2))
    Q = ext_quiver(primitive_idempotents(A))
    assert Q.arrow_count() == 2 and len(Q.vertices) == 2
    assert basic_algebra(primitive_idempotents(A)).algebra.dim == 4


def test_extend_scalars_preserves_structure():
    A = category_algebra(corpus.case(3), lf.field_make(2))
    B = extend_scalars(A, lf.field_make(2, 2))
    assert B.dim == A.dim and len(radical(B)) == len(radical(A))


def test_center_of_commutative_algebra_is_everything():
    A = group_algebra(Group.cyclic(4), lf.field_make(3))
    assert len(center(A)) == 4
    S = group_algebra(Group.symmetric(3), lf.field_make(5))
    assert len(center(S)) == 3
