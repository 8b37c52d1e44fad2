"""Invariant checks shared by the property tests and the acceptance suite."""
import numpy as np

from eirep import linfield as lf
from eirep.algebra import (category_algebra, corner_algebra, is_local, primitive_idempotents,
                           radical, radical_oracle, radical_powers, same_subspace)
from eirep.endotriv import endotrivialize
from eirep.fincat import FiniteCategory, is_endotrivial, skeletalize, validate_category
from eirep.reptype import classify


def category_axioms(C):
    again = FiniteCategory(C.objects, [(m, C.dom[m], C.cod[m]) for m in C.morphisms],
                           C.identities, C.compose_table)
    back = validate_category(C.to_json())
    return again.compose_table == C.compose_table and back.to_json() == C.to_json()


def sim_compatible(C):
    E = endotrivialize(C)
    if not (E.functor.is_valid() and is_endotrivial(E.quotient)):
        return False
    rep = E.functor.on_morphisms
    for (g, f), gf in C.compose_table.items():
        if E.quotient.comp(rep[g], rep[f]) != rep[gf]:
            return False
    return True


def radical_nilpotent(A, oracle_limit=4096):
    R = radical(A)
    powers = radical_powers(A, R)
    if len(powers[-1]) != 0:
        return False
    if A.F.q ** A.dim <= oracle_limit:
        return same_subspace(A.F, R, radical_oracle(A, limit=oracle_limit))
    return True


def idempotents_ok(A, seed=0):
    D = primitive_idempotents(A, seed=seed)
    B = D.algebra
    es = D.idempotents
    total = np.zeros(B.dim, dtype=np.int64)
    for e in es:
        total = B.add(total, e)
    if not np.array_equal(total, B.unit):
        return False
    for i, e in enumerate(es):
        for j, f in enumerate(es):
            prod = B.mul(e, f)
            want = e if i == j else np.zeros_like(e)
            if not np.array_equal(prod, want):
                return False
    return all(is_local(corner_algebra(B, e).algebra) for e in es)


def classify_skeleton_stable(C, p):
    S, _ = skeletalize(C)
    a, b = classify(C, p), classify(S, p)
    return a.verdict == b.verdict and a.rule == b.rule


def algebra_invariants(C, p, k=1):
    A = category_algebra(C, lf.field_make(p, k))
    return radical_nilpotent(A) and idempotents_ok(A)


def inflate(C, x, new):
    """An equivalent category with ``new`` added as an isomorphic copy of ``x``."""
    objs = list(C.objects) + [new]
    pi = {o: o for o in C.objects}
    pi[new] = x

    def name(m, u, v):
        return m if new not in (u, v) else f"{m}@{u}>{v}"

    mors, comp = [], {}
    for u in objs:
        for v in objs:
            for m in C.hom(pi[u], pi[v]):
                mors.append((name(m, u, v), u, v))
                for w in objs:
                    for g in C.hom(pi[v], pi[w]):
                        comp[(name(g, v, w), name(m, u, v))] = name(C.comp(g, m), u, w)
    ids = {u: name(C.identities[pi[u]], u, u) for u in objs}
    return FiniteCategory(objs, mors, ids, comp)
