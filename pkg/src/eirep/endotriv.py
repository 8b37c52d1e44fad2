"""Endotrivialization: the quotient of an EI-category that kills all endomorphisms."""
from __future__ import annotations

from dataclasses import dataclass

from .fincat import CategoryError, FiniteCategory, Functor, is_endotrivial  # noqa: F401


class IncompatibleQuotient(CategoryError):
    pass


@dataclass
class Endotrivialization:
    source: FiniteCategory
    quotient: FiniteCategory
    functor: Functor
    classes: dict  # representative -> sorted members

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "quotient": self.quotient.to_json(),
            "morphism_map": dict(sorted(self.functor.on_morphisms.items())),
        }


def equivalence_classes(C: FiniteCategory) -> dict:
    """Classes of the transitive hull of f''∘h1∘f' ~ f''∘h2∘f', with h1, h2
    endomorphisms of the middle object."""
    parent = {m: m for m in C.morphisms}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the lexicographically least id at the root
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    for w in C.objects:
        ends = C.endo(w)
        ins = C.into(w)
        outs = C.out_of(w)
        for f1 in ins:
            for f2 in outs:
                base = C.comp(f2, f1)
                for h in ends:
                    union(base, C.comp(f2, C.comp(h, f1)))
    classes: dict = {}
    for m in C.morphisms:
        classes.setdefault(find(m), []).append(m)
    return {min(v): sorted(v) for v in classes.values()}


def endotrivialize(C: FiniteCategory) -> Endotrivialization:
    classes = equivalence_classes(C)
    rep = {m: r for r, ms in classes.items() for m in ms}
    comp = {}
    for (g, f), gf in C.compose_table.items():
        key = (rep[g], rep[f])
        if key in comp and comp[key] != rep[gf]:
            raise IncompatibleQuotient(f"class of {g}∘{f} is not determined by the classes of {g} and {f}")
        comp[key] = rep[gf]
    Q = FiniteCategory(
        C.objects,
        [(r, C.dom[r], C.cod[r]) for r in sorted(classes)],
        {x: rep[C.identities[x]] for x in C.objects},
        comp,
    )
    F = Functor(C, Q, {x: x for x in C.objects}, rep)
    return Endotrivialization(C, Q, F, classes)


def factorization(e: Endotrivialization, F: Functor) -> Functor | None:
    """The functor ``Ĉ -> D`` through which ``F`` factors, or None.

    Surjectivity of the quotient functor forces the candidate; what remains is
    to check that it is well defined on classes and is a functor."""
    if F.source != e.source:
        return None
    mor = {}
    for r, members in e.classes.items():
        images = {F.on_morphisms[m] for m in members}
        if len(images) != 1:
            return None
        mor[r] = images.pop()
    G = Functor(e.quotient, F.target, dict(F.on_objects), mor)
    return G if G.is_valid() else None


def check_universal_property(e: Endotrivialization, F: Functor) -> bool:
    """True iff ``F`` (into an endotrivial category) factors uniquely through
    the quotient functor.  Uniqueness is automatic once a factorization exists,
    and is confirmed by checking the triangle on every morphism."""
    if not is_endotrivial(F.target) or not F.is_valid():
        return False
    G = factorization(e, F)
    if G is None:
        return False
    q = e.functor.on_morphisms
    return all(G.on_morphisms[q[m]] == F.on_morphisms[m] for m in e.source.morphisms)


def terminal_category(obj="*", mor="1") -> FiniteCategory:
    return FiniteCategory([obj], [(mor, obj, obj)], {obj: mor}, {(mor, mor): mor})


def to_terminal(C: FiniteCategory) -> Functor:
    T = terminal_category()
    return Functor(C, T, {x: "*" for x in C.objects}, {m: "1" for m in C.morphisms})
