"""Finite categories given by full composition tables.

A category is stored as its objects, its morphisms with domain and codomain,
the identity of each object and the table ``(g, f) -> g∘f`` defined exactly
on composable pairs (``cod f == dom g``).  Morphism ids are opaque strings and
are ordered lexicographically wherever an order matters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .groups import Group


class CategoryError(ValueError):
    pass


class NonAssociative(CategoryError):
    def __init__(self, h, g, f):
        super().__init__(f"({h}∘{g})∘{f} != {h}∘({g}∘{f})")
        self.witness = (h, g, f)


class IdentityViolation(CategoryError):
    def __init__(self, f, detail=""):
        super().__init__(f"identity law fails for {f}{': ' + detail if detail else ''}")
        self.witness = (f,)


class DomainMismatch(CategoryError):
    def __init__(self, g, f, detail=""):
        super().__init__(f"composite {g}∘{f} {detail}")
        self.witness = (g, f)


class NotAPartialOrder(CategoryError):
    pass


class FiniteCategory:
    """A validated finite category.  Instances are treated as immutable."""

    def __init__(self, objects, morphisms, identities, compose, *, check: bool = True):
        self.objects = tuple(objects)
        self.dom = {}
        self.cod = {}
        for m, d, c in morphisms:
            if m in self.dom:
                raise CategoryError(f"duplicate morphism id {m!r}")
            self.dom[m] = d
            self.cod[m] = c
        self.morphisms = tuple(sorted(self.dom))
        self.identities = dict(identities)
        self._comp = dict(compose)
        if check:
            self._validate()

    # -- validation ---------------------------------------------------------

    def _validate(self):
        if len(set(self.objects)) != len(self.objects):
            raise CategoryError("duplicate object ids")
        obj = set(self.objects)
        for m in self.morphisms:
            if self.dom[m] not in obj or self.cod[m] not in obj:
                raise CategoryError(f"morphism {m} has an unknown endpoint")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.dom.get(i) != x or self.cod.get(i) != x:
                raise CategoryError(f"object {x} lacks an identity endomorphism")
        for (g, f), gf in self._comp.items():
            if g not in self.dom or f not in self.dom or gf not in self.dom:
                raise CategoryError(f"composite {g}∘{f} = {gf} mentions an unknown morphism")
            if self.cod[f] != self.dom[g]:
                raise DomainMismatch(g, f, "is defined on a non-composable pair")
        for f in self.morphisms:
            for g in self.out_of(self.cod[f]):
                if (g, f) not in self._comp:
                    raise DomainMismatch(g, f, "is missing from the table")
                gf = self._comp[(g, f)]
                if self.dom[gf] != self.dom[f] or self.cod[gf] != self.cod[g]:
                    raise DomainMismatch(g, f, f"has wrong endpoints ({gf})")
        for f in self.morphisms:
            if self._comp[(self.identities[self.cod[f]], f)] != f:
                raise IdentityViolation(f, "on the left")
            if self._comp[(f, self.identities[self.dom[f]])] != f:
                raise IdentityViolation(f, "on the right")
        for f in self.morphisms:
            for g in self.out_of(self.cod[f]):
                gf = self._comp[(g, f)]
                for h in self.out_of(self.cod[g]):
                    if self._comp[(h, gf)] != self._comp[(self._comp[(h, g)], f)]:
                        raise NonAssociative(h, g, f)

    # -- basic access -------------------------------------------------------

    @cached_property
    def _hom(self):
        hom = {(x, y): [] for x in self.objects for y in self.objects}
        for m in self.morphisms:
            hom[(self.dom[m], self.cod[m])].append(m)
        return hom

    def hom(self, x, y) -> list[str]:
        return self._hom[(x, y)]

    def out_of(self, x) -> list[str]:
        return [m for m in self.morphisms if self.dom[m] == x]

    def into(self, y) -> list[str]:
        return [m for m in self.morphisms if self.cod[m] == y]

    def endo(self, x) -> list[str]:
        return self.hom(x, x)

    def comp(self, g, f) -> str:
        """``g∘f``; raises for a non-composable pair."""
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise DomainMismatch(g, f, "is not composable") from None

    def compose_path(self, *ms) -> str:
        """``ms[0]∘ms[1]∘...``"""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.comp(m, out)
        return out

    def is_identity(self, m) -> bool:
        return self.identities[self.dom[m]] == m

    @property
    def compose_table(self) -> dict:
        return dict(self._comp)

    def __len__(self):
        return len(self.morphisms)

    def __repr__(self):
        return f"FiniteCategory(objects={list(self.objects)}, |Mor|={len(self.morphisms)})"

    def __eq__(self, other):
        return (isinstance(other, FiniteCategory) and set(self.objects) == set(other.objects)
                and self.dom == other.dom and self.cod == other.cod
                and self.identities == other.identities and self._comp == other._comp)

    def __hash__(self):
        return hash((frozenset(self.objects), frozenset(self.dom.items())))

    # -- structure -------------------------------------------------------------

    def inverse_of(self, f):
        x, y = self.dom[f], self.cod[f]
        for g in self.hom(y, x):
            if self._comp[(g, f)] == self.identities[x] and self._comp[(f, g)] == self.identities[y]:
                return g
        return None

    def automorphism_group(self, x) -> tuple[Group, list[str]]:
        """``Aut(x)`` as a :class:`Group` on the indices of ``endo(x)``;
        requires every endomorphism of ``x`` to be invertible."""
        elems = self.endo(x)
        index = {m: i for i, m in enumerate(elems)}
        table = [[index[self._comp[(a, b)]] for b in elems] for a in elems]
        return Group(table, elems), elems

    def opposite(self) -> "FiniteCategory":
        return FiniteCategory(
            self.objects,
            [(m, self.cod[m], self.dom[m]) for m in self.morphisms],
            self.identities,
            {(f, g): gf for (g, f), gf in self._comp.items()},
            check=False,
        )

    def full_subcategory(self, objs) -> "FiniteCategory":
        keep = [x for x in self.objects if x in set(objs)]
        ks = set(keep)
        morph = [m for m in self.morphisms if self.dom[m] in ks and self.cod[m] in ks]
        ms = set(morph)
        return FiniteCategory(
            keep,
            [(m, self.dom[m], self.cod[m]) for m in morph],
            {x: self.identities[x] for x in keep},
            {k: v for k, v in self._comp.items() if k[0] in ms and k[1] in ms},
            check=False,
        )

    def relabel(self, obj_map=None, mor_map=None) -> "FiniteCategory":
        om = obj_map or {x: x for x in self.objects}
        mm = mor_map or {m: m for m in self.morphisms}
        return FiniteCategory(
            [om[x] for x in self.objects],
            [(mm[m], om[self.dom[m]], om[self.cod[m]]) for m in self.morphisms],
            {om[x]: mm[i] for x, i in self.identities.items()},
            {(mm[g], mm[f]): mm[gf] for (g, f), gf in self._comp.items()},
            check=False,
        )

    # -- serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": m, "dom": self.dom[m], "cod": self.cod[m]} for m in self.morphisms],
            "identities": {x: self.identities[x] for x in self.objects},
            "compose": [[g, f, gf] for (g, f), gf in sorted(self._comp.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def validate_category(raw) -> FiniteCategory:
    """Build a category from a raw description (dict or JSON string), raising
    the first violated axiom with its witnesses."""
    if isinstance(raw, str):
        raw = json.loads(raw)
    if "two_object" in raw:
        spec = raw["two_object"]
        return two_object_category(
            _group_spec(spec["G"]), _group_spec(spec["H"]), spec.get("hom", []),
            spec.get("right_action", {}), spec.get("left_action", {}),
            objects=tuple(spec.get("objects", ("x", "y"))),
        )
    morphisms = [(m["id"], m["dom"], m["cod"]) for m in raw["morphisms"]]
    compose = {}
    for g, f, gf in raw["compose"]:
        if (g, f) in compose and compose[(g, f)] != gf:
            raise CategoryError(f"composite {g}∘{f} given twice")
        compose[(g, f)] = gf
    return FiniteCategory(raw["objects"], morphisms, raw["identities"], compose)


def load_category(path) -> FiniteCategory:
    with open(path, encoding="utf-8") as fh:
        return validate_category(json.load(fh))


def _group_spec(g):
    """``{"elements": [...], "table": [[...]]}`` or a bare table of names."""
    if isinstance(g, dict):
        elems = list(g["elements"])
        table = g["table"]
    else:
        # bare table with the identity listed first, so row 0 names the elements
        table = g
        elems = list(table[0])
    index = {e: i for i, e in enumerate(elems)}
    itable = [[index[c] for c in row] for row in table]
    return elems, itable


# ---------------------------------------------------------------------------
# builders


def group_category(G: Group, obj="x", names=None) -> FiniteCategory:
    names = list(names) if names is not None else list(G.names)
    comp = {(names[a], names[b]): names[G.table[a][b]] for a in range(G.order) for b in range(G.order)}
    return FiniteCategory([obj], [(n, obj, obj) for n in names], {obj: names[G.identity]}, comp)


def two_object_category(G, H, hom, right_action, left_action, objects=("x", "y")) -> FiniteCategory:
    """Two-object category with ``Aut(x) = G``, ``Aut(y) = H`` and ``C(x, y) = hom``.

    ``G`` and ``H`` are ``(element names, index table)`` pairs.
    ``right_action[f][g]`` is ``f∘g`` and ``left_action[h][f]`` is ``h∘f``;
    missing entries for group identities default to the trivial action.
    """
    x, y = objects
    (gn, gt), (hn, ht) = G, H
    g_id = next(gn[e] for e in range(len(gn)) if all(gt[e][b] == b for b in range(len(gn))))
    h_id = next(hn[e] for e in range(len(hn)) if all(ht[e][b] == b for b in range(len(hn))))
    morph = [(g, x, x) for g in gn] + [(h, y, y) for h in hn] + [(f, x, y) for f in hom]
    comp = {}
    for a in range(len(gn)):
        for b in range(len(gn)):
            comp[(gn[a], gn[b])] = gn[gt[a][b]]
    for a in range(len(hn)):
        for b in range(len(hn)):
            comp[(hn[a], hn[b])] = hn[ht[a][b]]
    for f in hom:
        for g in gn:
            comp[(f, g)] = f if g == g_id else right_action[f][g]
        for h in hn:
            comp[(h, f)] = f if h == h_id else left_action[h][f]
    return FiniteCategory([x, y], morph, {x: g_id, y: h_id}, comp)


def poset_category(elements, leq) -> FiniteCategory:
    """Category of a finite poset; ``leq`` lists the pairs ``(a, b)`` with
    ``a <= b`` (reflexive-transitive closure is taken)."""
    elements = list(elements)
    rel = {(a, a) for a in elements} | {tuple(p) for p in leq}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    name = {(a, b): (f"1_{a}" if a == b else f"{a}<{b}") for a, b in rel}
    comp = {}
    for (a, b) in rel:
        for (c, d) in rel:
            if b == c:
                comp[(name[(c, d)], name[(a, b)])] = name[(a, d)]
    return FiniteCategory(elements, [(name[r], r[0], r[1]) for r in rel],
                          {a: name[(a, a)] for a in elements}, comp)


def path_category(vertices, arrows) -> FiniteCategory:
    """Path category of an acyclic quiver; ``arrows`` is ``[(id, src, tgt)]``.

    A path is named by its arrows in composition order joined with ``.``
    (``"b.a"`` is ``a`` followed by ``b``)."""
    vertices = list(vertices)
    out = {v: [] for v in vertices}
    for a, s, t in arrows:
        out[s].append((a, t))
    paths = [((), v, v) for v in vertices]
    frontier = list(paths)
    while frontier:
        new = []
        for word, s, t in frontier:
            for a, t2 in out[t]:
                new.append(((a,) + word, s, t2))
        if len(paths) + len(new) > 10000:
            raise CategoryError("quiver has oriented cycles or too many paths")
        paths.extend(new)
        frontier = new

    def nm(word, s):
        return ".".join(word) if word else f"1_{s}"

    comp = {}
    for w1, s1, t1 in paths:
        for w2, s2, t2 in paths:
            if t2 == s1:
                comp[(nm(w1, s1), nm(w2, s2))] = nm(w1 + w2, s2)
    return FiniteCategory(vertices, [(nm(w, s), s, t) for w, s, t in paths],
                          {v: f"1_{v}" for v in vertices}, comp)


def disjoint_union(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    if set(C.objects) & set(D.objects) or set(C.morphisms) & set(D.morphisms):
        raise CategoryError("disjoint union needs disjoint ids")
    return FiniteCategory(
        C.objects + D.objects,
        [(m, C.dom[m], C.cod[m]) for m in C.morphisms] + [(m, D.dom[m], D.cod[m]) for m in D.morphisms],
        {**C.identities, **D.identities},
        {**C.compose_table, **D.compose_table},
    )


# ---------------------------------------------------------------------------
# EI, skeleton, poset


def is_ei(C: FiniteCategory) -> bool:
    return all(C.inverse_of(f) is not None for x in C.objects for f in C.endo(x))


def is_endotrivial(C: FiniteCategory) -> bool:
    return all(len(C.endo(x)) == 1 for x in C.objects)


def isomorphism_classes(C: FiniteCategory) -> list[list]:
    classes: list[list] = []
    for x in C.objects:
        for cls in classes:
            y = cls[0]
            if any(C.inverse_of(f) is not None for f in C.hom(x, y)):
                cls.append(x)
                break
        else:
            classes.append([x])
    return classes


def is_skeletal(C: FiniteCategory) -> bool:
    return all(len(c) == 1 for c in isomorphism_classes(C))


def skeletalize(C: FiniteCategory) -> tuple[FiniteCategory, dict]:
    """Full subcategory on the least object id of each isomorphism class, and
    the map sending every object to its representative."""
    retraction = {}
    reps = []
    for cls in isomorphism_classes(C):
        r = min(cls)
        reps.append(r)
        for x in cls:
            retraction[x] = r
    if len(reps) == len(C.objects):
        return C, retraction
    return C.full_subcategory(reps), retraction


def full_subcategories(C: FiniteCategory, objs) -> FiniteCategory:
    return C.full_subcategory(objs)


@dataclass(frozen=True)
class ObjectPoset:
    elements: tuple
    relation: frozenset  # pairs (a, b) with a <= b

    def __post_init__(self):
        els = set(self.elements)
        rel = self.relation
        for a in els:
            if (a, a) not in rel:
                raise NotAPartialOrder(f"not reflexive at {a}")
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise NotAPartialOrder(f"antisymmetry fails for {a}, {b}")
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise NotAPartialOrder(f"transitivity fails for {a} <= {b} <= {d}")

    def leq(self, a, b) -> bool:
        return (a, b) in self.relation

    def pairs(self) -> list:
        return sorted(self.relation)

    def hasse(self) -> list:
        """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
        strict = [(a, b) for a, b in self.relation if a != b]
        return sorted((a, b) for a, b in strict
                      if not any((a, c) in self.relation and (c, b) in self.relation
                                 for c in self.elements if c not in (a, b)))

    def components(self) -> list[list]:
        parent = {x: x for x in self.elements}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.relation:
            parent[find(a)] = find(b)
        comps: dict = {}
        for x in self.elements:
            comps.setdefault(find(x), []).append(x)
        return sorted(sorted(c) for c in comps.values())

    def is_chain(self, subset=None) -> bool:
        els = list(self.elements if subset is None else subset)
        return all(self.leq(a, b) or self.leq(b, a) for a in els for b in els)

    def is_union_of_chains(self) -> bool:
        return all(self.is_chain(c) for c in self.components())


def object_poset(C: FiniteCategory) -> ObjectPoset:
    rel = frozenset((x, y) for x in C.objects for y in C.objects if C.hom(x, y))
    return ObjectPoset(tuple(C.objects), rel)


# ---------------------------------------------------------------------------
# hom-set actions


@dataclass(frozen=True)
class HomAction:
    """``Aut(y)`` acting on the left and ``Aut(x)`` on the right of ``C(x, y)``."""

    source: str
    target: str
    hom: tuple
    aut_source: tuple
    aut_target: tuple
    left: dict = field(hash=False)   # (h, f) -> h∘f
    right: dict = field(hash=False)  # (f, g) -> f∘g

    def orbits(self) -> list[list]:
        """Orbits of the product action, by union-find over generator moves."""
        parent = {f: f for f in self.hom}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (h, f), hf in self.left.items():
            parent[find(f)] = find(hf)
        for (f, g), fg in self.right.items():
            parent[find(f)] = find(fg)
        out: dict = {}
        for f in self.hom:
            out.setdefault(find(f), []).append(f)
        return sorted(sorted(o) for o in out.values())

    def stabilizer(self, f) -> list[tuple]:
        """Pairs ``(h, g)`` with ``h∘f∘g = f``; (h, g) acts as f ↦ h∘f∘g^{-1},
        which has the same stabiliser size."""
        return [(h, g) for h in self.aut_target for g in self.aut_source
                if self.left[(h, self.right[(f, g)])] == f]


def hom_action(C: FiniteCategory, x, y) -> HomAction:
    hom = tuple(C.hom(x, y))
    ax = tuple(C.endo(x))
    ay = tuple(C.endo(y))
    left = {(h, f): C.comp(h, f) for h in ay for f in hom}
    right = {(f, g): C.comp(f, g) for f in hom for g in ax}
    return HomAction(x, y, hom, ax, ay, left, right)


def action_properties(a: HomAction) -> dict:
    orbits = a.orbits()
    free = all(len(a.stabilizer(f)) == 1 for f in a.hom)
    return {"is_free": free, "is_transitive": len(orbits) == 1, "orbit_count": len(orbits)}


# ---------------------------------------------------------------------------
# functors and isomorphism


@dataclass
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    on_objects: dict
    on_morphisms: dict

    def is_valid(self) -> bool:
        S, T = self.source, self.target
        for x in S.objects:
            if self.on_morphisms.get(S.identities[x]) != T.identities.get(self.on_objects.get(x)):
                return False
        for m in S.morphisms:
            im = self.on_morphisms.get(m)
            if im is None or T.dom[im] != self.on_objects[S.dom[m]] or T.cod[im] != self.on_objects[S.cod[m]]:
                return False
        for (g, f), gf in S.compose_table.items():
            if T.comp(self.on_morphisms[g], self.on_morphisms[f]) != self.on_morphisms[gf]:
                return False
        return True


def is_isomorphic(C: FiniteCategory, D: FiniteCategory) -> dict | None:
    """Brute-force search for an isomorphism; returns the morphism map or None."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    for perm in permutations(D.objects):
        om = dict(zip(C.objects, perm))
        if any(len(C.hom(a, b)) != len(D.hom(om[a], om[b])) for a in C.objects for b in C.objects):
            continue
        result = _match_morphisms(C, D, om)
        if result is not None:
            return result
    return None


def _match_morphisms(C, D, om):
    order = list(C.morphisms)
    mm: dict = {}
    used: set = set()

    def consistent(m):
        for (g, f), gf in C.compose_table.items():
            if g in mm and f in mm and gf in mm and D.comp(mm[g], mm[f]) != mm[gf]:
                return False
        return True

    def bt(i):
        if i == len(order):
            return True
        m = order[i]
        for cand in D.hom(om[C.dom[m]], om[C.cod[m]]):
            if cand in used:
                continue
            if C.is_identity(m) != D.is_identity(cand):
                continue
            mm[m] = cand
            used.add(cand)
            if consistent(m) and bt(i + 1):
                return True
            used.discard(cand)
            del mm[m]
        return False

    return dict(mm) if bt(0) else None
