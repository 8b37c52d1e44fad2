"""Quivers with relations.

Paths are written in composition order: the word ``("b", "a")`` (text
``"b a"``) is the path that runs along ``a`` and then along ``b``.  A path is a
pair ``(source vertex, word)``; the trivial path at ``v`` has the empty word.
Relation coefficients are integers read in the prime field.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from . import linfield as lf
from .algebra import (StructureAlgebra, basic_algebra, ideal_product, primitive_idempotents)


class PresentationError(ValueError):
    pass


class NotFiniteDimensionalWithinBound(PresentationError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# quivers


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (id, src, tgt)

    def __post_init__(self):
        vs = set(self.vertices)
        ids = [a for a, _, _ in self.arrows]
        if len(set(ids)) != len(ids):
            raise PresentationError("duplicate arrow ids")
        for a, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise PresentationError(f"arrow {a} has an unknown endpoint")

    @classmethod
    def from_multiplicities(cls, vertices, mult: dict, prefix="a"):
        arrows = []
        for (i, j), m in sorted(mult.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
            for r in range(m):
                arrows.append((f"{prefix}{len(arrows)}", i, j))
        return cls(tuple(vertices), tuple(arrows))

    @property
    def src(self):
        return {a: s for a, s, _ in self.arrows}

    @property
    def tgt(self):
        return {a: t for a, _, t in self.arrows}

    def multiplicities(self) -> dict:
        out: dict = {}
        for _, s, t in self.arrows:
            out[(s, t)] = out.get((s, t), 0) + 1
        return out

    def components(self) -> list[list]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        for _, s, t in self.arrows:
            parent[find(s)] = find(t)
        comps: dict = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        return list(comps.values())

    def subquiver(self, verts) -> "Quiver":
        vs = set(verts)
        return Quiver(tuple(v for v in self.vertices if v in vs),
                      tuple(a for a in self.arrows if a[1] in vs and a[2] in vs))

    def is_acyclic(self) -> bool:
        out = {v: [t for _, s, t in self.arrows if s == v] for v in self.vertices}
        state = {v: 0 for v in self.vertices}

        def dfs(v):
            state[v] = 1
            for w in out[v]:
                if state[w] == 1 or (state[w] == 0 and not dfs(w)):
                    return False
            state[v] = 2
            return True

        return all(state[v] or dfs(v) for v in self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple((a, t, s) for a, s, t in self.arrows))


def separated_quiver(Q: Quiver) -> Quiver:
    """Vertices ``v`` and ``v'``; an arrow ``i -> j'`` for every arrow ``i -> j``."""
    verts = tuple(Q.vertices) + tuple(f"{v}'" for v in Q.vertices)
    return Quiver(verts, tuple((a, s, f"{t}'") for a, s, t in Q.arrows))


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Relation:
    terms: tuple  # (integer coefficient, word in composition order)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def arrows(self) -> set:
        return {a for _, w in self.terms for a in w}

    def text(self) -> str:
        parts = []
        for c, w in self.terms:
            body = _compress(w)
            if c == 1:
                parts.append(f"+ {body}")
            elif c == -1:
                parts.append(f"- {body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}*{body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _compress(word) -> str:
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return " ".join(out)


_TOKEN = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?)?\s*((?:[A-Za-z_][\w']*(?:\^\d+)?(?:\s*[*.·]?\s*)?)+)")


def parse_relation(text: str) -> Relation:
    """Parse e.g. ``"g^2 b - b a^3"`` or ``"2*b a + a b"``."""
    terms = []
    s = text.strip()
    pos = 0
    first = True
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise PresentationError(f"cannot parse relation {text!r} at {s[pos:]!r}")
        sign, coeff, body = m.groups()
        if sign is None and not first:
            raise PresentationError(f"missing operator in {text!r}")
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        word = []
        for f in re.findall(r"([A-Za-z_][\w']*)(?:\^(\d+))?", body):
            word.extend([f[0]] * (int(f[1]) if f[1] else 1))
        terms.append((c, tuple(word)))
        pos = m.end()
        first = False
    return Relation(tuple(terms))


class QuiverPresentation:
    def __init__(self, quiver: Quiver, relations=()):
        self.quiver = quiver
        rels = []
        for r in relations:
            rels.append(parse_relation(r) if isinstance(r, str) else r)
        self.relations = tuple(rels)
        self._check()

    @classmethod
    def build(cls, vertices, arrows, relations=()):
        return cls(Quiver(tuple(vertices), tuple(tuple(a) for a in arrows)), relations)

    def _check(self):
        src, tgt = self.quiver.src, self.quiver.tgt
        for r in self.relations:
            ends = set()
            for _, w in r.terms:
                if len(w) < 2:
                    raise PresentationError(f"relation {r.text()} has a term outside the square of the arrow ideal")
                for a in w:
                    if a not in src:
                        raise PresentationError(f"unknown arrow {a} in {r.text()}")
                for later, earlier in zip(w, w[1:]):
                    if src[later] != tgt[earlier]:
                        raise PresentationError(f"non-composable word {' '.join(w)}")
                ends.add((src[w[-1]], tgt[w[0]]))
            if len(ends) > 1:
                raise PresentationError(f"terms of {r.text()} have different endpoints")

    def is_monomial(self) -> bool:
        return all(r.is_monomial() for r in self.relations)

    def zero_words(self) -> list:
        return [r.terms[0][1] for r in self.relations if r.is_monomial()]

    def opposite(self) -> "QuiverPresentation":
        return QuiverPresentation(self.quiver.opposite(),
                                  [Relation(tuple((c, tuple(reversed(w))) for c, w in r.terms))
                                   for r in self.relations])

    def to_json(self) -> dict:
        return {
            "vertices": list(self.quiver.vertices),
            "arrows": [{"id": a, "src": s, "tgt": t} for a, s, t in self.quiver.arrows],
            "relations": [[{"coeff": c, "path": list(w)} for c, w in r.terms] for r in self.relations],
        }

    @classmethod
    def from_json(cls, data) -> "QuiverPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        rels = []
        for r in data.get("relations", []):
            if isinstance(r, str):
                rels.append(parse_relation(r))
            else:
                rels.append(Relation(tuple((int(t.get("coeff", 1)), tuple(t["path"])) for t in r)))
        return cls.build(data["vertices"], [(a["id"], a["src"], a["tgt"]) for a in data["arrows"]], rels)

    def __repr__(self):
        rels = ", ".join(r.text() for r in self.relations)
        return f"QuiverPresentation({len(self.quiver.vertices)} vertices, {len(self.quiver.arrows)} arrows, <{rels}>)"


# ---------------------------------------------------------------------------
# the presented algebra


def _paths_up_to(Q: Quiver, L: int):
    out_arrows = {v: [(a, t) for a, s, t in Q.arrows if s == v] for v in Q.vertices}
    paths = [(v, ()) for v in Q.vertices]
    tgt = {(v, ()): v for v in Q.vertices}
    frontier = list(paths)
    for _ in range(L):
        new = []
        for p in frontier:
            for a, t in out_arrows[tgt[p]]:
                q = (p[0], (a,) + p[1])
                tgt[q] = t
                new.append(q)
        paths.extend(new)
        frontier = new
        if len(paths) > 20000:
            raise NotFiniteDimensionalWithinBound("too many paths; raise L only for small quivers")
    return paths, tgt


def path_label(path) -> str:
    v, w = path
    return f"e_{v}" if not w else _compress(w)


class PresentedAlgebra(StructureAlgebra):
    """``kQ/I`` with basis a set of path classes."""

    def __init__(self, pres, F, L, paths, index, normal, basis_paths, T, unit, base):
        super().__init__(F, [path_label(p) for p in basis_paths], T, unit, base, check=False)
        self.presentation = pres
        self.length_bound = L
        self.paths = paths
        self.path_index = index
        self.normal = normal          # (#paths, dim): normal form of each path
        self.basis_paths = basis_paths

    def path_vector(self, path):
        i = self.path_index.get(path)
        if i is None:
            return np.zeros(self.dim, dtype=np.int64)
        return self.normal[i].copy()


def presented_algebra(pres: QuiverPresentation, F: lf.GF, L: int | None = None,
                      max_length: int = 16) -> PresentedAlgebra:
    """``kQ/I`` computed on paths of length at most ``L``.  With ``L`` omitted
    the bound is raised (up to ``max_length``) until no path of the top length
    survives and the dimension is stable."""
    if L is not None:
        return _presented(pres, F, L)
    L = max([2] + [len(w) for r in pres.relations for _, w in r.terms])
    prev = None
    while L <= max_length:
        try:
            A = _presented(pres, F, L)
        except NotFiniteDimensionalWithinBound:
            L += 1
            continue
        if prev is not None and prev.dim == A.dim:
            return prev
        prev = A
        L += 1
    raise NotFiniteDimensionalWithinBound(f"no finite-dimensional quotient found up to length {max_length}")


def _presented(pres, F, L):
    Q = pres.quiver
    paths, tgt = _paths_up_to(Q, L)
    index = {p: i for i, p in enumerate(paths)}
    P = len(paths)
    src = Q.src

    def rel_vector(r, left=(), right=()):
        v = np.zeros(P, dtype=np.int64)
        for c, w in r.terms:
            word = tuple(left) + w + tuple(right)
            if len(word) > L:
                continue
            s = src[word[-1]]
            i = index.get((s, word))
            if i is not None:
                v[i] = F.add[v[i], F.from_int(c)]
        return v

    rows = [rel_vector(r) for r in pres.relations]
    # closure under multiplication by arrows on both sides
    left_maps, right_maps = [], []
    for a, s, t in Q.arrows:
        Ml = np.zeros((P, P), dtype=np.int64)
        Mr = np.zeros((P, P), dtype=np.int64)
        for i, (v, w) in enumerate(paths):
            if tgt[(v, w)] == s and len(w) < L:
                Ml[i, index[(v, (a,) + w)]] = 1
            if v == t and len(w) < L:
                Mr[i, index[(s, w + (a,))]] = 1
        left_maps.append(Ml)
        right_maps.append(Mr)
    V = lf.row_basis(F, np.array(rows)) if rows else np.zeros((0, P), dtype=np.int64)
    while True:
        grown = [V] + [F.matmul(V, M) for M in left_maps + right_maps] if len(V) else [V]
        W = lf.row_basis(F, np.vstack(grown)) if len(V) else V
        if len(W) == len(V):
            break
        V = W
    # longer paths first as pivots, so basis paths are as short as possible
    order = sorted(range(P), key=lambda i: (-len(paths[i][1]), i))
    if len(V):
        R, piv = lf.rref(F, V, col_order=order)
    else:
        R, piv = V, []
    pivset = set(piv)
    basis_idx = [i for i in range(P) if i not in pivset]
    if any(len(paths[i][1]) == L for i in basis_idx):
        raise NotFiniteDimensionalWithinBound(f"paths of length {L} survive")
    col = {i: j for j, i in enumerate(basis_idx)}
    n = len(basis_idx)
    normal = np.zeros((P, n), dtype=np.int64)
    for i in basis_idx:
        normal[i, col[i]] = 1
    for r, pc in enumerate(piv):
        for i in basis_idx:
            if R[r, i]:
                normal[pc, col[i]] = F.neg[R[r, i]]
    basis_paths = [paths[i] for i in basis_idx]
    T = np.zeros((n, n, n), dtype=np.int64)
    for a, (va, wa) in enumerate(basis_paths):
        for b, (vb, wb) in enumerate(basis_paths):
            if tgt[(vb, wb)] != va:
                continue
            word = wa + wb
            if len(word) > L:
                continue
            T[a, b] = normal[index[(vb, word)]]
    unit = np.zeros(n, dtype=np.int64)
    base = []
    for v in Q.vertices:
        e = normal[index[(v, ())]]
        unit = F.add[unit, e]
        base.append((v, e))
    return PresentedAlgebra(pres, F, L, paths, index, normal, basis_paths, T, unit, base)


# ---------------------------------------------------------------------------
# verification against a computed algebra


@dataclass
class Verification:
    ok: bool | None
    vertex_map: dict = field(default_factory=dict)
    arrow_images: dict = field(default_factory=dict)
    reason: str = ""
    nodes: int = 0

    def __bool__(self):
        return bool(self.ok)


def _candidates(F, B, basis, R2, limit):
    """Prime-field combinations of ``basis`` rows that are nonzero modulo R2."""
    d = len(basis)
    p = F.p
    out = []
    if p**d <= limit:
        combos = product(range(p), repeat=d)
    else:
        combos = []
        for i in range(d):
            for c in (1, p - 1):
                v = [0] * d
                v[i] = c
                combos.append(tuple(v))
        for i in range(d):
            for j in range(i + 1, d):
                for ci in (1, p - 1):
                    for cj in (1, p - 1):
                        v = [0] * d
                        v[i], v[j] = ci, cj
                        combos.append(tuple(v))
    for c in combos:
        if not any(c):
            continue
        x = F.matmul(np.array(c, dtype=np.int64)[None, :], basis)[0]
        if len(R2) and lf.in_span(F, R2, x):
            continue
        out.append(x)
    return out


def verify_presentation(A: StructureAlgebra, pres: QuiverPresentation, *, budget: int = 200000,
                        candidate_limit: int = 729, seed: int = 0) -> Verification:
    """Search for an isomorphism ``kQ/I -> A`` sending vertices to primitive
    idempotents and arrows to elements of ``e_w rad e_v`` outside ``rad^2``."""
    D = primitive_idempotents(A, seed=seed)
    basic = basic_algebra(D)
    B = basic.algebra
    F = B.F
    try:
        P = presented_algebra(pres, F)
    except NotFiniteDimensionalWithinBound as err:
        return Verification(False, reason=f"presentation is not finite-dimensional: {err}")
    if P.dim != B.dim:
        return Verification(False, reason=f"dimension {P.dim} of kQ/I differs from {B.dim}")
    Qv = list(pres.quiver.vertices)
    Bv = basic.vertices
    if len(Qv) != len(Bv):
        return Verification(False, reason="vertex counts differ")
    from .algebra import radical
    R = radical(B)
    R2 = ideal_product(B, R, R) if len(R) else R
    idem = dict(B.base_idempotents)
    eye = np.eye(B.dim, dtype=np.int64)
    qmult = pres.quiver.multiplicities()

    def fiber(w, v, U):
        if len(U) == 0:
            return U
        rows = B.products(B.products(idem[w][None, :], U), idem[v][None, :])
        return lf.row_basis(F, rows) if np.any(rows) else np.zeros((0, B.dim), dtype=np.int64)

    def ext_mult(v, w):
        return len(fiber(w, v, R)) - len(fiber(w, v, R2))

    arrows = list(pres.quiver.arrows)
    nodes = 0
    for perm in permutations(Bv):
        sigma = dict(zip(Qv, perm))
        if any(qmult.get((s, t), 0) != ext_mult(sigma[s], sigma[t]) for s in Qv for t in Qv):
            continue
        cands = {}
        for a, s, t in arrows:
            cands[a] = _candidates(F, B, fiber(sigma[t], sigma[s], R), fiber(sigma[t], sigma[s], R2),
                                   candidate_limit)
        order = sorted(arrows, key=lambda x: len(cands[x[0]]))
        # relations become checkable once all their arrows are placed
        check_at = {}
        placed = set()
        for k, (a, _, _) in enumerate(order):
            placed.add(a)
            check_at[k] = [r for r in pres.relations if r.arrows() <= placed
                           and a in r.arrows()]
        img: dict = {}

        def word_image(word, start):
            x = idem[sigma[start]]
            for a in reversed(word):
                x = B.mul(img[a], x)
            return x

        def holds(r):
            acc = np.zeros(B.dim, dtype=np.int64)
            s = pres.quiver.src[r.terms[0][1][-1]]
            for c, w in r.terms:
                acc = F.add[acc, F.mul[F.from_int(c), word_image(w, s)]]
            return not np.any(acc)

        def surjective():
            imgs = np.array([word_image(w, v) for v, w in P.basis_paths])
            return lf.rank(F, imgs) == B.dim

        def bt(k):
            nonlocal nodes
            if k == len(order):
                return surjective()
            a = order[k][0]
            for x in cands[a]:
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(budget)
                img[a] = x
                if all(holds(r) for r in check_at[k]) and bt(k + 1):
                    return True
            img.pop(a, None)
            return False

        try:
            if bt(0):
                amb = D.algebra
                return Verification(True, sigma,
                                    {a: amb.format(basic.corner.to_ambient(v)) for a, v in img.items()},
                                    "isomorphism found", nodes)
        except SearchBudgetExceeded:
            return Verification(None, reason=f"search budget of {budget} nodes exceeded", nodes=nodes)
    return Verification(False, reason="no vertex and arrow assignment satisfies the relations", nodes=nodes)


# ---------------------------------------------------------------------------
# string algebras


def is_string_algebra(pres: QuiverPresentation) -> bool:
    if not pres.is_monomial():
        return False
    Q = pres.quiver
    for v in Q.vertices:
        if sum(1 for _, s, _ in Q.arrows if s == v) > 2 or sum(1 for _, _, t in Q.arrows if t == v) > 2:
            return False
    zero2 = {w for w in pres.zero_words() if len(w) == 2}
    for b, sb, tb in Q.arrows:
        after = [g for g, sg, _ in Q.arrows if sg == tb and (g, b) not in zero2]
        before = [d for d, _, td in Q.arrows if td == sb and (b, d) not in zero2]
        if len(after) > 1 or len(before) > 1:
            return False
    return True


# a letter is (arrow, +1) for traversing it forwards or (arrow, -1) backwards


def _letter_ends(Q, letter):
    a, d = letter
    s, t = Q.src[a], Q.tgt[a]
    return (s, t) if d == 1 else (t, s)


def _violates(zero_words, walk) -> bool:
    """Does the end of ``walk`` contain a zero relation in one direction run?"""
    if len(walk) >= 2 and walk[-1][0] == walk[-2][0] and walk[-1][1] == -walk[-2][1]:
        return True
    d = walk[-1][1]
    run = []
    for a, dd in reversed(walk):
        if dd != d:
            break
        run.append(a)
    # run lists arrows from the end backwards; as a composition word a forward
    # run is read last-traversed first, a backward run the other way round
    word = tuple(run) if d == 1 else tuple(reversed(run))
    for z in zero_words:
        k = len(z)
        if len(word) >= k and ((d == 1 and word[:k] == z) or (d == -1 and word[-k:] == z)):
            return True
    return False


def _letters_from(Q):
    out = {v: [] for v in Q.vertices}
    for a, s, t in Q.arrows:
        out[s].append((a, 1))
        out[t].append((a, -1))
    return out


def string_levels(pres: QuiverPresentation, max_length: int):
    """Yield the lists of strings of length 1, 2, ... (as (start, letters)),
    stopping early when a level is empty."""
    Q = pres.quiver
    zw = pres.zero_words()
    letters_from = _letters_from(Q)
    level = [(v, ()) for v in Q.vertices]
    for _ in range(max_length):
        nxt = []
        for v, walk in level:
            end = _letter_ends(Q, walk[-1])[1] if walk else v
            for letter in letters_from[end]:
                w2 = walk + (letter,)
                if not _violates(zw, w2):
                    nxt.append((v, w2))
        if not nxt:
            return
        yield nxt
        level = nxt


def strings(pres: QuiverPresentation, max_length: int):
    """All nontrivial strings of length <= max_length, as (start, letters)."""
    return [s for level in string_levels(pres, max_length) for s in level]


def strings_are_finite(pres: QuiverPresentation) -> bool:
    """Exact test: whether a string can be extended can be read off its last
    ``max(longest zero relation - 1, 1)`` letters, so the set of strings is
    infinite iff the automaton on such suffixes has a reachable cycle."""
    Q = pres.quiver
    zw = pres.zero_words()
    K = max([len(z) - 1 for z in zw] + [1])
    letters_from = _letters_from(Q)

    def succ(state):
        end = _letter_ends(Q, state[-1])[1]
        for letter in letters_from[end]:
            w2 = state + (letter,)
            if not _violates(zw, w2):
                yield w2[-K:]

    starts = {(l,) for v in Q.vertices for l in letters_from[v]}
    # a one-letter walk never violates a relation of length >= 2
    colour: dict = {}
    for s0 in sorted(starts):
        if s0 in colour:
            continue
        stack = [(s0, iter(list(succ(s0))))]
        colour[s0] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = 2
                stack.pop()
                continue
            c = colour.get(nxt, 0)
            if c == 1:
                return False
            if c == 0:
                colour[nxt] = 1
                stack.append((nxt, iter(list(succ(nxt)))))
    return True


def finite_string_count(pres: QuiverPresentation):
    """Number of strings up to inversion (trivial ones included) when there
    are finitely many, else None."""
    if not strings_are_finite(pres):
        return None
    seen = set()
    for level in string_levels(pres, 10**6):
        for _, w in level:
            inv = tuple((a, -d) for a, d in reversed(w))
            seen.add(min(w, inv))
    return len(seen) + len(pres.quiver.vertices)


@dataclass
class BandSearch:
    found: bool
    witness: tuple | None
    bound: int

    def text(self):
        if not self.witness:
            return ""
        return " ".join(a if d == 1 else f"{a}^-" for a, d in self.witness)


def _is_proper_power(w) -> bool:
    n = len(w)
    return any(n % k == 0 and w == w[:k] * (n // k) for k in range(1, n))


def has_band(pres: QuiverPresentation, max_length: int | None = None) -> BandSearch:
    """Search for a band of length up to the bound (default
    2 * #arrows * longest zero relation)."""
    Q = pres.quiver
    zw = pres.zero_words()
    longest = max([len(z) for z in zw] + [2])
    bound = max_length if max_length is not None else 2 * len(Q.arrows) * longest
    for level in string_levels(pres, bound):
        for v, w in sorted(level):
            if _letter_ends(Q, w[-1])[1] != v or _is_proper_power(w):
                continue
            reps = -(-(longest + len(w)) // len(w)) + 1
            walk: tuple = ()
            ok = True
            for letter in w * reps:
                walk = walk + (letter,)
                if _violates(zw, walk):
                    ok = False
                    break
            if ok:
                return BandSearch(True, w, bound)
    return BandSearch(False, None, bound)


# ---------------------------------------------------------------------------
# underlying graphs


@dataclass
class GraphClass:
    tag: str                 # "DynkinADE", "Euclidean" or "Other"
    components: list         # (vertices, name, tag)

    def names(self):
        return [name for _, name, _ in self.components]


def _classify_component(verts, edges):
    n = len(verts)
    loops = sum(1 for s, t in edges if s == t)
    pair_count: dict = {}
    for s, t in edges:
        if s != t:
            key = frozenset((s, t))
            pair_count[key] = pair_count.get(key, 0) + 1
    if loops:
        return ("A~0", "Euclidean") if n == 1 and loops == 1 and not pair_count else ("wild", "Other")
    if any(m > 1 for m in pair_count.values()):
        if n == 2 and list(pair_count.values()) == [2]:
            return ("A~1", "Euclidean")
        return ("wild", "Other")
    m = len(pair_count)
    deg = {v: 0 for v in verts}
    adj = {v: [] for v in verts}
    for key in pair_count:
        s, t = tuple(key)
        deg[s] += 1
        deg[t] += 1
        adj[s].append(t)
        adj[t].append(s)
    if m == n:  # one cycle
        if all(d == 2 for d in deg.values()):
            return (f"A~{n - 1}", "Euclidean")
        return ("wild", "Other")
    if m > n - 1:
        return ("wild", "Other")
    if n == 1:
        return ("A1", "DynkinADE")
    branch = [v for v in verts if deg[v] >= 3]
    if not branch:
        return (f"A{n}", "DynkinADE")
    if len(branch) == 1:
        c = branch[0]
        if deg[c] == 4:
            return ("D~4", "Euclidean") if n == 5 else ("wild", "Other")
        if deg[c] > 4:
            return ("wild", "Other")
        arms = []
        for start in adj[c]:
            length, prev, cur = 1, c, start
            while deg[cur] == 2:
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        a, b, cc = sorted(arms)
        s = Fraction(1, a + 1) + Fraction(1, b + 1) + Fraction(1, cc + 1)
        if s > 1:
            if a == 1 and b == 1:
                return (f"D{n}", "DynkinADE")
            return (f"E{n}", "DynkinADE")
        if s == 1:
            return ({(2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8"}[(a, b, cc)], "Euclidean")
        return ("wild", "Other")
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        leaves_ok = all(sum(1 for w in adj[v] if deg[w] == 1) == 2 for v in branch)
        if leaves_ok:
            return (f"D~{n - 1}", "Euclidean")
    return ("wild", "Other")


def underlying_graph_class(Q: Quiver) -> GraphClass:
    comps = []
    for verts in Q.components():
        vs = set(verts)
        edges = [(s, t) for _, s, t in Q.arrows if s in vs]
        name, tag = _classify_component(verts, edges)
        comps.append((sorted(verts, key=str), name, tag))
    tags = {t for _, _, t in comps}
    overall = "Other" if "Other" in tags else ("Euclidean" if "Euclidean" in tags else "DynkinADE")
    return GraphClass(overall, comps)


def symmetric_cartan(Q: Quiver):
    """``2I - (adjacency + adjacency^T)`` of the underlying graph."""
    idx = {v: i for i, v in enumerate(Q.vertices)}
    n = len(idx)
    C = 2 * np.eye(n)
    for _, s, t in Q.arrows:
        C[idx[s], idx[t]] -= 1
        C[idx[t], idx[s]] -= 1
    return C
