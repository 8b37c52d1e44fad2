"""Named example categories used by the tests, the CLI and the docs."""
from __future__ import annotations

import json
from math import gcd

from .fincat import (FiniteCategory, group_category, path_category, poset_category,
                     two_object_category)
from .groups import Group


def cyclic_names(n: int, gen: str, one: str) -> list[str]:
    return [one] + [gen if i == 1 else f"{gen}^{i}" for i in range(1, n)]


def _cyclic(n, gen, one):
    names = cyclic_names(n, gen, one)
    return names, [[(a + b) % n for b in range(n)] for a in range(n)]


def _z2_pair():
    return _cyclic(2, "f", "1x"), _cyclic(2, "g", "1y")


def case(n: int) -> FiniteCategory:
    """The five two-object categories with both automorphism groups of order 2."""
    G, H = _z2_pair()
    swap = {"i1": "i2", "i2": "i1"}
    fix = {"i1": "i1", "i2": "i2"}
    if n == 1:
        return two_object_category(G, H, ["i"], {"i": {"f": "i"}}, {"g": {"i": "i"}})
    if n in (2, 3, 4):
        f_act = swap if n in (3, 4) else fix
        g_act = swap if n in (2, 4) else fix
        right = {i: {"f": f_act[i]} for i in ("i1", "i2")}
        return two_object_category(G, H, ["i1", "i2"], right, {"g": g_act})
    if n == 5:
        right = {"i1": {"f": "i2"}, "i2": {"f": "i1"}, "i3": {"f": "i4"}, "i4": {"f": "i3"}}
        left = {"g": {"i1": "i3", "i2": "i4", "i3": "i1", "i4": "i2"}}
        return two_object_category(G, H, ["i1", "i2", "i3", "i4"], right, left)
    raise ValueError(f"no case {n}")


def z2_z3_triple() -> FiniteCategory:
    """Aut(x) = Z2 = <g> fixing three arrows x -> y, Aut(y) = Z3 = <h> permuting them."""
    G = _cyclic(2, "g", "1x")
    H = _cyclic(3, "h", "1y")
    hom = ["f1", "f2", "f3"]
    right = {f: {"g": f} for f in hom}
    left = {"h": {"f1": "f2", "f2": "f3", "f3": "f1"},
            "h^2": {"f1": "f3", "f2": "f1", "f3": "f2"}}
    return two_object_category(G, H, hom, right, left)


def cat_c() -> FiniteCategory:
    """Z4 acting regularly on four arrows x -> y; Aut(y) trivial."""
    G = _cyclic(4, "f", "1x")
    H = _cyclic(1, "-", "1y")
    hom = ["i1", "i2", "i3", "i4"]
    names = G[0]
    right = {hom[j]: {names[e]: hom[(j + e) % 4] for e in range(1, 4)} for j in range(4)}
    return two_object_category(G, H, hom, right, {})


def cat_c_prime() -> FiniteCategory:
    """Z4 fixing a single arrow a -> b; Aut(b) trivial."""
    G = _cyclic(4, "g", "1a")
    H = _cyclic(1, "-", "1b")
    right = {"h": {n: "h" for n in G[0][1:]}}
    return two_object_category(G, H, ["h"], right, {}, objects=("a", "b"))


def a2() -> FiniteCategory:
    return path_category(["1", "2"], [("a", "1", "2")])


def kronecker() -> FiniteCategory:
    return path_category(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


def diamond() -> FiniteCategory:
    """Path category of a -> b -> d, a -> c -> d with no commutativity."""
    return path_category(["a", "b", "c", "d"], [("alpha", "a", "b"), ("beta", "a", "c"),
                                                ("gamma", "b", "d"), ("delta", "c", "d")])


def diamond_poset() -> FiniteCategory:
    return poset_category(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def z(n: int) -> FiniteCategory:
    return group_category(Group.cyclic(n), names=cyclic_names(n, "g", "1x"))


def symmetric_group(n: int) -> FiniteCategory:
    G = Group.symmetric(n)
    return group_category(G, names=["1x" if i == G.identity else f"s{nm}" for i, nm in enumerate(G.names)])


def _generated(m, t, gens) -> frozenset:
    K = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        a, b = frontier.pop()
        for u, v in gens:
            c = ((a + u) % m, (b + v) % t)
            if c not in K:
                K.add(c)
                frontier.append(c)
    return frozenset(K)


def subgroups(m: int, t: int) -> list[frozenset]:
    """All subgroups of Z_m x Z_t (each is generated by at most two elements)."""
    els = [(a, b) for a in range(m) for b in range(t)]
    seen = {}
    for u in els:
        for v in els:
            K = _generated(m, t, [u, v])
            seen.setdefault(K, None)
    return sorted(seen, key=lambda K: (len(K), sorted(K)))


def two_object_from_orbits(m: int, t: int, orbit_stabs) -> FiniteCategory:
    """Aut(x) = Z_m, Aut(y) = Z_t and C(x, y) the disjoint union of the coset
    spaces (Z_m x Z_t)/K, one per entry of ``orbit_stabs`` (generator lists or
    subgroups).  The action is (h, g): [a, b] -> [a + g, b + h]."""
    hom, index = [], {}
    for o, stab in enumerate(orbit_stabs):
        K = stab if isinstance(stab, frozenset) else _generated(m, t, stab)
        for a in range(m):
            for b in range(t):
                if (o, a, b) in index:
                    continue
                cls = sorted(((a + u) % m, (b + v) % t) for u, v in K)
                for e in cls:
                    index[(o,) + e] = len(hom)
                tag = f"{o}_" if len(orbit_stabs) > 1 else ""
                hom.append((o, cls[0], f"i{tag}{cls[0][0]}_{cls[0][1]}"))
    names = [h[2] for h in hom]
    G = _cyclic(m, "f", "1x")
    H = _cyclic(t, "g", "1y")
    right = {nm: {G[0][e]: names[index[(o, (a + e) % m, b)]] for e in range(1, m)}
             for o, (a, b), nm in hom}
    left = {H[0][e]: {nm: names[index[(o, a, (b + e) % t)]] for o, (a, b), nm in hom}
            for e in range(1, t)}
    return two_object_category(G, H, names, right, left)


def transitive_two_object(m: int, t: int, stab=()) -> FiniteCategory:
    """Aut(x) = Z_m, Aut(y) = Z_t and C(x, y) = (Z_m x Z_t)/K where K is
    generated by ``stab``."""
    return two_object_from_orbits(m, t, [stab])


def two_object_family(orders=(1, 2, 4), max_hom: int = 4):
    """Every two-object EI-category with cyclic automorphism groups of the
    given orders and 1 <= |C(x, y)| <= max_hom, up to isomorphism of the
    biset C(x, y).  Yields ((m, t, subgroup list), category)."""
    from itertools import combinations_with_replacement
    for m in orders:
        for t in orders:
            subs = [K for K in subgroups(m, t) if m * t // len(K) <= max_hom]
            for r in range(1, max_hom + 1):
                for combo in combinations_with_replacement(range(len(subs)), r):
                    size = sum(m * t // len(subs[i]) for i in combo)
                    if size <= max_hom:
                        Ks = [subs[i] for i in combo]
                        yield (m, t, [sorted(K) for K in Ks]), two_object_from_orbits(m, t, Ks)


def single_morphism(m: int, t: int) -> FiniteCategory:
    """Z_m and Z_t with one arrow x -> y fixed by both."""
    return transitive_two_object(m, t, [(1, 0), (0, 1)])


def free_two_object(m: int, t: int) -> FiniteCategory:
    """Z_m x Z_t acting regularly on C(x, y)."""
    return transitive_two_object(m, t, [])


def regular_two_object(G: Group, H: Group) -> FiniteCategory:
    """C(x, y) = G x H with Aut(x) = G acting on the right of the first factor
    and Aut(y) = H on the left of the second: a free, transitive action."""
    gn = ["1x" if i == G.identity else f"x{nm}" for i, nm in enumerate(G.names)]
    hn = ["1y" if i == H.identity else f"y{nm}" for i, nm in enumerate(H.names)]
    hom = [f"i{a}_{b}" for a in range(G.order) for b in range(H.order)]

    def nm(a, b):
        return f"i{a}_{b}"

    right = {nm(a, b): {gn[g]: nm(G.table[a][g], b) for g in range(G.order) if g != G.identity}
             for a in range(G.order) for b in range(H.order)}
    left = {hn[h]: {nm(a, b): nm(a, H.table[h][b]) for a in range(G.order) for b in range(H.order)}
            for h in range(H.order) if h != H.identity}
    return two_object_category((gn, G.table), (hn, H.table), hom, right, left)


CORPUS = {
    "case1": lambda: case(1),
    "case2": lambda: case(2),
    "case3": lambda: case(3),
    "case4": lambda: case(4),
    "case5": lambda: case(5),
    "z2_z3_triple": z2_z3_triple,
    "c": cat_c,
    "c_prime": cat_c_prime,
    "a2": a2,
    "kronecker": kronecker,
    "diamond": diamond,
    "diamond_poset": diamond_poset,
    "z2": lambda: z(2),
    "z3": lambda: z(3),
    "s3": lambda: symmetric_group(3),
}


def get(name: str) -> FiniteCategory:
    try:
        return CORPUS[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(CORPUS))}") from None


def dump_bundle() -> str:
    """All examples as one byte-stable JSON document."""
    data = {name: CORPUS[name]().to_json() for name in sorted(CORPUS)}
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _lcm(a, b):
    return a * b // gcd(a, b)
