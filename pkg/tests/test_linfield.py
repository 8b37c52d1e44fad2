import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eirep import linfield as lf

FIELDS = [lf.field_make(p, k) for p, k in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)]]
field_st = st.sampled_from(FIELDS)


def elems(F):
    return st.integers(0, F.q - 1)


@st.composite
def field_and_matrix(draw, rows=(1, 5), cols=(1, 5), square=False):
    F = draw(field_st)
    r = draw(st.integers(*rows))
    c = r if square else draw(st.integers(*cols))
    M = np.array(draw(st.lists(elems(F), min_size=r * c, max_size=r * c)), dtype=np.int64).reshape(r, c)
    return F, M


def ref_matmul(F, A, B):
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for t in range(A.shape[1]):
                acc = F.add[acc, F.mul[A[i, t], B[t, j]]]
            out[i, j] = acc
    return out


def test_rejects_composite_characteristic():
    with pytest.raises(lf.NotPrime):
        lf.field_make(4)


def test_rejects_reducible_modulus():
    with pytest.raises(lf.FieldError):
        lf.GF(2, 2, modulus=(1, 0, 1))


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms_exhaustive(F):
    idx = np.arange(F.q)
    assert np.array_equal(F.add, F.add.T) and np.array_equal(F.mul, F.mul.T)
    assert np.array_equal(F.add[0], idx) and np.array_equal(F.mul[1], idx)
    assert np.array_equal(F.add[F.add[idx][:, :, None], idx], F.add[idx[:, None, None], F.add[idx][None]])
    lhs = F.mul[idx[:, None, None], F.add[idx][None]]
    rhs = F.add[F.mul[idx][:, :, None], F.mul[idx][:, None, :]]
    assert np.array_equal(lhs, rhs)
    for a in range(1, F.q):
        assert F.mul[a, F.inv(a)] == 1


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_multiplicative_group_is_cyclic(F):
    assert F.order(F.primitive_element) == F.q - 1


def test_inverse_of_zero_raises():
    with pytest.raises(lf.ZeroInverse):
        FIELDS[0].inv(0)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_matmul_matches_reference(data):
    F = data.draw(field_st)
    r, m, c = (data.draw(st.integers(1, 6)) for _ in range(3))
    A = np.array(data.draw(st.lists(elems(F), min_size=r * m, max_size=r * m))).reshape(r, m)
    B = np.array(data.draw(st.lists(elems(F), min_size=m * c, max_size=m * c))).reshape(m, c)
    assert np.array_equal(F.matmul(A, B), ref_matmul(F, A, B))


@settings(max_examples=40, deadline=None)
@given(field_and_matrix())
def test_rref_nullspace_rank(fm):
    F, M = fm
    N = lf.nullspace(F, M)
    assert N.shape[0] == M.shape[1] - lf.rank(F, M)
    if len(N):
        assert not np.any(F.matmul(M, N.T))
    R, piv = lf.rref(F, M)
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and np.count_nonzero(R[:, c]) == 1


@settings(max_examples=40, deadline=None)
@given(field_and_matrix(square=True))
def test_inverse_roundtrip(fm):
    F, M = fm
    if lf.is_invertible(F, M):
        assert np.array_equal(F.matmul(M, lf.inverse(F, M)), F.identity(len(M)))
    else:
        with pytest.raises(lf.ZeroInverse):
            lf.inverse(F, M)


@settings(max_examples=40, deadline=None)
@given(field_and_matrix(square=True))
def test_min_poly_annihilates(fm):
    F, M = fm
    f = lf.min_poly(F, M)
    assert f[-1] == 1 and len(f) - 1 <= len(M)
    acc = F.zeros(len(M), len(M))
    P = F.identity(len(M))
    for c in f:
        acc = F.vadd(acc, F.scale(c, P))
        P = F.matmul(P, M)
    assert not np.any(acc)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_factor_expands_back(data):
    F = data.draw(field_st)
    f = data.draw(st.lists(elems(F), min_size=2, max_size=7))
    f = lf.ptrim(f)
    if lf.pdeg(f) < 1:
        return
    lead, facs = lf.factor(F, f)
    assert lf.expand(F, lead, facs) == f
    for g, _ in facs:
        assert g[-1] == 1 and lf.is_irreducible(F, g)


def test_known_factorisations():
    F = lf.field_make(2)
    _, facs = lf.factor(F, [1, 0, 0, 0, 1])  # x^4 + 1 = (x + 1)^4
    assert facs == [([1, 1], 4)]
    F3 = lf.field_make(3)
    assert not lf.is_irreducible(F3, [0, 1, 0, 1]) and lf.is_irreducible(F3, [1, 0, 1])


@settings(max_examples=40, deadline=None)
@given(field_and_matrix(rows=(1, 4), cols=(1, 4)), st.data())
def test_solve_finds_a_solution(fm, data):
    F, M = fm
    x = np.array(data.draw(st.lists(elems(F), min_size=M.shape[1], max_size=M.shape[1])))
    b = F.matvec(M, x)
    y = lf.solve(F, M, b)
    assert y is not None and np.array_equal(F.matvec(M, y), b)
