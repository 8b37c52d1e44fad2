"""Brute-force representation oracle over small finite fields.

Representations are enumerated at a fixed dimension vector by assigning
matrices to a generating set (automorphism-group generators come from their
conjugacy classes, other generators range over all matrices), filtering by the
relations, and grouping into isomorphism classes as orbits of the product of
general linear groups.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import linfield as lf
from .algebra import is_local, matrix_algebra
from .fincat import FiniteCategory, is_ei
from .presentations import QuiverPresentation

DEFAULT_BUDGET = 2**30
CHUNK = 1 << 21


class OracleError(Exception):
    pass


class BudgetExceeded(OracleError):
    def __init__(self, size, budget=None):
        self.size = size
        super().__init__(f"search space {size} exceeds budget {budget}")


class RegimeMismatch(OracleError):
    pass


class ActionNotFree(OracleError):
    pass


# ---------------------------------------------------------------------------
# problems: generators, words and relations


@dataclass
class Problem:
    """Vertices, generators (name, src, tgt, annihilating polynomial or None),
    the word of every named morphism and linear relations between words.

    Words are in composition order: ("g", "f") is g after f.  A relation is a
    list of (coefficient, src, tgt, word) summing to zero; the empty word is
    the identity at src.
    """

    vertices: tuple
    gens: list
    words: dict           # morphism name -> (src, tgt, word)
    relations: list
    source: object = None

    @property
    def gen_index(self):
        return {g[0]: i for i, g in enumerate(self.gens)}


def _closure(C: FiniteCategory, gens):
    words = {C.identities[x]: () for x in C.objects}
    frontier = list(words)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                if C.dom[g] == C.cod[m]:
                    gm = C.comp(g, m)
                    if gm not in words:
                        words[gm] = (g,) + words[m]
                        nxt.append(gm)
        frontier = nxt
    return words


def _heights(C: FiniteCategory):
    nonisos = [m for m in C.morphisms if C.inverse_of(m) is None]
    ni = set(nonisos)
    fact = {m: [] for m in nonisos}
    for (b, a), ba in C.compose_table.items():
        if a in ni and b in ni:
            fact[ba].append((a, b))
    memo = {}

    def h(m):
        if m not in memo:
            memo[m] = 0
            memo[m] = max([h(a) + h(b) + 1 for a, b in fact[m]], default=0)
        return memo[m]

    return {m: h(m) for m in nonisos}


def category_problem(C: FiniteCategory) -> Problem:
    if not is_ei(C):
        raise OracleError("the oracle needs an EI-category")
    gens = []
    polys = {}
    for x in C.objects:
        G, elems = C.automorphism_group(x)
        for g in G.generators:
            gens.append(elems[g])
            polys[elems[g]] = G.element_order(g)
    heights = _heights(C)
    isos = [m for m in C.morphisms if C.dom[m] != C.cod[m] and C.inverse_of(m) is not None]
    words = _closure(C, gens)
    for m in isos + sorted(heights, key=lambda m: (heights[m], C.morphisms.index(m))):
        if m not in words:
            gens.append(m)
            words = _closure(C, gens)
    relations = []
    seen = set()
    for (g, f), gf in C.compose_table.items():
        w1, w2 = words[gf], words[g] + words[f]
        if w1 == w2:
            continue
        key = (w1, w2) if w1 <= w2 else (w2, w1)
        if key in seen:
            continue
        seen.add(key)
        s, t = C.dom[f], C.cod[g]
        relations.append([(1, s, t, w1), (-1, s, t, w2)])
    glist = [(g, C.dom[g], C.cod[g], ("unit", polys[g]) if g in polys else None) for g in gens]
    wd = {m: (C.dom[m], C.cod[m], w) for m, w in words.items()}
    return Problem(tuple(C.objects), glist, wd, relations, C)


def presentation_problem(pres: QuiverPresentation) -> Problem:
    Q = pres.quiver
    src, tgt = Q.src, Q.tgt
    ann = {}
    for r in pres.relations:
        if r.is_monomial():
            c, w = r.terms[0]
            if len(set(w)) == 1 and src[w[0]] == tgt[w[0]]:
                a = w[0]
                ann[a] = min(ann.get(a, len(w)), len(w))
    gens = [(a, s, t, ("nil", ann[a]) if a in ann else None) for a, s, t in Q.arrows]
    relations = []
    for r in pres.relations:
        terms = []
        for c, w in r.terms:
            s, t = src[w[-1]], tgt[w[0]]
            terms.append((c, s, t, tuple(w)))
        relations.append(terms)
    words = {a: (s, t, (a,)) for a, s, t in Q.arrows}
    for v in Q.vertices:
        words[f"1_{v}"] = (v, v, ())
    return Problem(tuple(Q.vertices), gens, words, relations, pres)


def as_problem(source) -> Problem:
    if isinstance(source, Problem):
        return source
    if isinstance(source, FiniteCategory):
        return category_problem(source)
    if isinstance(source, QuiverPresentation):
        return presentation_problem(source)
    raise TypeError(f"cannot build representations of {type(source).__name__}")


# ---------------------------------------------------------------------------
# matrices


def _all_matrices(F: lf.GF, r: int, c: int) -> np.ndarray:
    n = r * c
    if n == 0:
        return np.zeros((1, r, c), dtype=np.int64)
    idx = np.arange(F.q**n, dtype=np.int64)
    digits = (idx[:, None] // (F.q ** np.arange(n, dtype=np.int64))[None, :]) % F.q
    return digits.reshape(-1, r, c)


def gl_generators(F: lf.GF, d: int) -> list[np.ndarray]:
    """diag(w, 1, ..., 1) for a primitive w, the transvection I + E_12, a
    transposition and a d-cycle.  Conjugating the transvection by the other
    generators gives every I + c E_ij, so together they generate GL_d(F)."""
    gens = []
    if d == 0:
        return gens
    if F.q > 2:
        D = np.eye(d, dtype=np.int64)
        D[0, 0] = F.primitive_element
        gens.append(D)
    if d >= 2:
        T = np.eye(d, dtype=np.int64)
        T[0, 1] = 1
        gens.append(T)
        gens.append(np.eye(d, dtype=np.int64)[[1, 0] + list(range(2, d))])
    if d >= 3:
        gens.append(np.eye(d, dtype=np.int64)[list(range(1, d)) + [0]])
    return gens


def _codes(F: lf.GF, flat: np.ndarray):
    """Integer code per row when it fits in 62 bits, else a row-unique id
    (consistent only within one call)."""
    n = flat.shape[1]
    if n == 0:
        return np.zeros(len(flat), dtype=np.int64)
    if n * np.log2(F.q) <= 62:
        w = F.q ** np.arange(n, dtype=np.int64)
        return flat @ w
    raise OracleError("state too large for integer codes")


def _companion(F: lf.GF, poly) -> np.ndarray:
    n = len(poly) - 1
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        M[i, i - 1] = 1
    for i in range(n):
        M[i, n - 1] = F.neg[poly[i]]
    return M


def _divisor_chains(F: lf.GF, f, d: int):
    """Invariant-factor sequences d_1 | ... | d_r | f with total degree d."""
    _, facs = lf.factor(F, f)
    facs = [(list(g), e) for g, e in facs]
    exps = list(itertools.product(*[range(e + 1) for _, e in facs]))

    def degree(ex):
        return sum(len(g) - 1 for (g, _), k in zip(facs, ex) for _ in range(k))

    def poly(ex):
        out = [1]
        for (g, _), k in zip(facs, ex):
            for _ in range(k):
                out = lf.pmul(F, out, g)
        return out

    nonconst = [ex for ex in exps if degree(ex) > 0]
    out = []

    def rec(bound, remaining, acc):
        if remaining == 0:
            out.append([poly(ex) for ex in acc])
            return
        for ex in nonconst:
            if all(a <= b for a, b in zip(ex, bound)) and degree(ex) <= remaining:
                rec(ex, remaining - degree(ex), acc + [ex])

    top = tuple(e for _, e in facs)
    rec(top, d, [])
    return out


def _conjugacy_orbit(F: lf.GF, A: np.ndarray, gens) -> np.ndarray:
    d = A.shape[0]
    pairs = [(P, lf.inverse(F, P)) for P in gens]
    seen = {int(_codes(F, A.reshape(1, -1))[0])}
    frontier = A[None]
    found = [A[None]]
    while len(frontier) and pairs:
        X = np.concatenate([F.matmul(F.matmul(P[None], frontier), Pi[None]) for P, Pi in pairs])
        codes, first = np.unique(_codes(F, X.reshape(len(X), -1)), return_index=True)
        keep = [i for c, i in zip(codes.tolist(), first.tolist()) if c not in seen]
        seen.update(c for c in codes.tolist())
        frontier = X[keep]
        if len(frontier):
            found.append(frontier)
    return np.concatenate(found).reshape(-1, d, d)


def matrices_annihilated(F: lf.GF, f, d: int) -> np.ndarray:
    """All d x d matrices M with f(M) = 0, as a union of conjugacy classes."""
    if d == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    gens = gl_generators(F, d)
    blocks = []
    for chain in _divisor_chains(F, f, d):
        A = np.zeros((d, d), dtype=np.int64)
        o = 0
        for g in chain:
            n = len(g) - 1
            A[o:o + n, o:o + n] = _companion(F, g)
            o += n
        blocks.append(_conjugacy_orbit(F, A, gens))
    return np.concatenate(blocks)


def _candidates(F: lf.GF, gen, dims) -> np.ndarray:
    _name, s, t, ann = gen
    r, c = dims[t], dims[s]
    if ann is not None and r == c:
        kind, n = ann
        if kind == "unit":
            poly = [F.neg[1]] + [0] * (n - 1) + [1]
        else:
            poly = [0] * n + [1]
        return matrices_annihilated(F, poly, r)
    return _all_matrices(F, r, c)


def _candidate_count(F, gen, dims) -> int:
    _name, s, t, ann = gen
    r, c = dims[t], dims[s]
    if ann is not None and r == c:
        return len(_candidates(F, gen, dims))
    return F.q ** (r * c)


# ---------------------------------------------------------------------------
# batched evaluation


def _eval_word(F, batch, gi, dims, s, word, n):
    if not word:
        return np.broadcast_to(np.eye(dims[s], dtype=np.int64), (n, dims[s], dims[s]))
    M = batch[gi[word[-1]]]
    for g in reversed(word[:-1]):
        M = F.matmul(batch[gi[g]], M)
    return M


def _eval_relation(F, batch, gi, dims, terms, n):
    acc = None
    for c, s, t, w in terms:
        M = _eval_word(F, batch, gi, dims, s, w, n)
        cf = F.from_int(c) if isinstance(c, int) else c
        M = F.mul[cf, M]
        acc = M if acc is None else F.add[acc, M]
    return acc


@dataclass
class RepBatch:
    """Every representation at a dimension vector, one row per representation,
    stored as indices into per-generator candidate lists."""

    problem: Problem
    F: lf.GF
    dims: dict
    cands: list           # per generator: array (K, rows, cols)
    idx: np.ndarray       # (N, number of generators)

    @property
    def size(self) -> int:
        return len(self.idx)

    @property
    def mats(self) -> list:
        return [c[self.idx[:, j]] for j, c in enumerate(self.cands)]

    def representation(self, i: int) -> "Representation":
        gens = {g[0]: self.cands[j][self.idx[i, j]] for j, g in enumerate(self.problem.gens)}
        return Representation.from_generators(self.problem, self.F, self.dims, gens)


def _dims_dict(problem: Problem, dimvector) -> dict:
    if isinstance(dimvector, dict):
        dims = {v: int(dimvector.get(v, 0)) for v in problem.vertices}
    else:
        dimvector = list(dimvector)
        if len(dimvector) != len(problem.vertices):
            raise OracleError(f"dimension vector needs {len(problem.vertices)} entries")
        dims = {v: int(d) for v, d in zip(problem.vertices, dimvector)}
    if any(d < 0 for d in dims.values()):
        raise OracleError("negative dimension")
    return dims


def search_space(source, dimvector, F: lf.GF) -> int:
    pb = as_problem(source)
    dims = _dims_dict(pb, dimvector)
    size = 1
    for g in pb.gens:
        size *= _candidate_count(F, g, dims)
    return size


def enumerate_batch(source, dimvector, F: lf.GF, budget: int = DEFAULT_BUDGET) -> RepBatch:
    pb = as_problem(source)
    dims = _dims_dict(pb, dimvector)
    gi = pb.gen_index
    # generators with candidates from conjugacy classes first, so they filter early
    order = sorted(range(len(pb.gens)), key=lambda j: (pb.gens[j][3] is None, j))
    size = 1
    for j in order:
        g = pb.gens[j]
        r, c = dims[g[2]], dims[g[1]]
        if g[3] is None or r != c:
            size *= F.q ** (r * c)
            if size > budget:
                raise BudgetExceeded(size, budget)
    cands = {}
    for j in order:
        cands[j] = _candidates(F, pb.gens[j], dims)
        g = pb.gens[j]
        if g[3] is not None and dims[g[1]] == dims[g[2]]:
            size *= len(cands[j])
            if size > budget:
                raise BudgetExceeded(size, budget)
    pos = {j: k for k, j in enumerate(order)}
    stage_of = []
    for terms in pb.relations:
        used = {gi[a] for _, _, _, w in terms for a in w}
        stage_of.append(max((pos[u] for u in used), default=-1))
    idx = np.zeros((1, 0), dtype=np.int64)
    cols = []
    for k, j in enumerate(order):
        K = len(cands[j])
        rels = [pb.relations[i] for i, st in enumerate(stage_of) if st == k]
        N = len(idx)
        step = max(1, CHUNK // max(K, 1))
        kept = []
        for lo in range(0, N, step):
            hi = min(N, lo + step)
            n = (hi - lo) * K
            trial = np.concatenate([np.repeat(idx[lo:hi], K, axis=0),
                                    np.tile(np.arange(K), hi - lo)[:, None]], axis=1)
            if rels:
                named = {pb.gens[jj][0]: cands[jj][trial[:, c]] for c, jj in enumerate(cols + [j])}
                ok = np.ones(n, dtype=bool)
                for terms in rels:
                    R = _eval_relation(F, named, {a: a for a in named}, dims, terms, n)
                    ok &= ~np.any(R.reshape(n, -1), axis=1)
                trial = trial[ok]
            kept.append(trial)
        idx = np.concatenate(kept)
        cols.append(j)
    if pb.gens:
        perm = np.argsort(cols)
        idx = idx[:, perm]
    for terms in (r for r, st in zip(pb.relations, stage_of) if st < 0):
        if np.any(_eval_relation(F, {}, {}, dims, terms, 1)):
            idx = idx[:0]
    clist = [cands[j] for j in range(len(pb.gens))]
    return RepBatch(pb, F, dims, clist, idx)


def enumerate_reps(source, dimvector, F: lf.GF, budget: int = DEFAULT_BUDGET):
    """Every representation at the dimension vector, each exactly once."""
    B = enumerate_batch(source, dimvector, F, budget)
    for i in range(B.size):
        yield B.representation(i)


def _candidate_perm(F, cand, P, Pi, left: bool, right: bool) -> np.ndarray:
    """Index map of the candidate list under M -> P M (left), M P^-1 (right)."""
    M = cand
    if left:
        M = F.matmul(P[None], M)
    if right:
        M = F.matmul(M, Pi[None])
    base = _codes(F, cand.reshape(len(cand), -1))
    order = np.argsort(base)
    new = _codes(F, M.reshape(len(M), -1))
    return order[np.searchsorted(base[order], new)]


def iso_classes(B: RepBatch) -> list[np.ndarray]:
    """Row indices of each isomorphism class (orbits of the product of GL's)."""
    F, pb, dims = B.F, B.problem, B.dims
    N = B.size
    if N == 0:
        return []
    radix = np.array([len(c) for c in B.cands], dtype=np.int64)
    weights = np.concatenate([[1], np.cumprod(radix)[:-1]]).astype(np.int64) if len(radix) else radix
    codes = B.idx @ weights if len(radix) else np.zeros(N, dtype=np.int64)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    rows, cols = [], []
    for v in pb.vertices:
        for P in gl_generators(F, dims[v]):
            Pi = lf.inverse(F, P)
            new = B.idx.copy()
            for j, (name, s, t, _) in enumerate(pb.gens):
                if s == v or t == v:
                    perm = _candidate_perm(F, B.cands[j], P, Pi, t == v, s == v)
                    new[:, j] = perm[B.idx[:, j]]
            idx = order[np.searchsorted(sorted_codes, new @ weights)]
            rows.append(np.arange(N))
            cols.append(idx)
    if not rows:
        return [np.array([i]) for i in range(N)]
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    G = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(N, N))
    n, labels = connected_components(G, directed=True, connection="weak")
    first = np.full(n, N)
    np.minimum.at(first, labels, np.arange(N))
    rank = np.argsort(np.argsort(first))
    groups = [[] for _ in range(n)]
    for i, lab in enumerate(rank[labels].tolist()):
        groups[lab].append(i)
    return [np.array(o) for o in groups]


@dataclass
class OracleReport:
    dimvector: list
    field: lf.GF
    total_reps: int
    iso_classes: int
    indecomposable_classes: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"dimvector": self.dimvector, "field": {"p": self.field.p, "k": self.field.k},
                "total_reps": self.total_reps, "iso_classes": self.iso_classes,
                "indecomposable_classes": self.indecomposable_classes,
                "witnesses": self.witnesses}


def oracle_report(source, dimvector, F: lf.GF, budget: int = DEFAULT_BUDGET,
                  witnesses: bool = False) -> OracleReport:
    B = enumerate_batch(source, dimvector, F, budget)
    classes = iso_classes(B)
    ind = 0
    wit = []
    for cls in classes:
        V = B.representation(int(cls[0]))
        if is_indecomposable(V):
            ind += 1
            if witnesses:
                wit.append(V.to_json())
    dv = [B.dims[v] for v in B.problem.vertices]
    return OracleReport(dv, F, B.size, len(classes), ind, wit)


def count_indecomposables(source, dimvector, F: lf.GF, budget: int = DEFAULT_BUDGET) -> int:
    return oracle_report(source, dimvector, F, budget).indecomposable_classes


# ---------------------------------------------------------------------------
# single representations


@dataclass
class Representation:
    problem: Problem
    F: lf.GF
    dims: dict
    mats: dict            # every named morphism (or arrow) -> matrix

    @classmethod
    def from_generators(cls, problem, F, dims, gens: dict) -> "Representation":
        gens = {k: np.asarray(v, dtype=np.int64) for k, v in gens.items()}
        mats = {}
        for name, (s, t, w) in problem.words.items():
            if not w:
                mats[name] = np.eye(dims[s], dtype=np.int64)
                continue
            M = gens[w[-1]]
            for g in reversed(w[:-1]):
                M = F.matmul(gens[g], M)
            mats[name] = M
        return cls(problem, F, dict(dims), mats)

    @classmethod
    def from_morphisms(cls, source, F, dims, mats: dict) -> "Representation":
        pb = as_problem(source)
        dims = _dims_dict(pb, dims)
        gens = {g[0]: mats[g[0]] for g in pb.gens}
        V = cls.from_generators(pb, F, dims, gens)
        for k, M in mats.items():
            V.mats[k] = np.asarray(M, dtype=np.int64)
        return V

    @property
    def dimvector(self) -> list:
        return [self.dims[v] for v in self.problem.vertices]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def generator_matrices(self) -> list:
        return [(g[0], g[1], g[2], self.mats[g[0]]) for g in self.problem.gens]

    def is_functorial(self) -> bool:
        """Every stored matrix has the right shape and every relation holds;
        for categories this is V(g∘f) = V(g)V(f) and V(1) = 1 over the whole
        composition table."""
        F, pb = self.F, self.problem
        for name, (s, t, w) in pb.words.items():
            M = self.mats.get(name)
            if M is None or M.shape != (self.dims[t], self.dims[s]):
                return False
        C = pb.source
        if isinstance(C, FiniteCategory):
            for x in C.objects:
                if not np.array_equal(self.mats[C.identities[x]], np.eye(self.dims[x], dtype=np.int64)):
                    return False
            for (g, f), gf in C.compose_table.items():
                if not np.array_equal(self.mats[gf], F.matmul(self.mats[g], self.mats[f])):
                    return False
            return True
        gens = {g[0]: self.mats[g[0]][None] for g in pb.gens}
        for terms in pb.relations:
            if np.any(_eval_relation(F, gens, {a: a for a in gens}, self.dims, terms, 1)):
                return False
        return True

    def direct_sum(self, other: "Representation") -> "Representation":
        F = self.F
        dims = {v: self.dims[v] + other.dims[v] for v in self.dims}
        mats = {}
        for k, A in self.mats.items():
            B = other.mats[k]
            M = np.zeros((A.shape[0] + B.shape[0], A.shape[1] + B.shape[1]), dtype=np.int64)
            M[:A.shape[0], :A.shape[1]] = A
            M[A.shape[0]:, A.shape[1]:] = B
            mats[k] = M
        return Representation(self.problem, F, dims, mats)

    def conjugate(self, P: dict) -> "Representation":
        """Change of basis by invertible P[v] at each vertex."""
        F, pb = self.F, self.problem
        Pi = {v: lf.inverse(F, P[v]) if self.dims[v] else P[v] for v in P}
        mats = {}
        for k, M in self.mats.items():
            s, t, _ = pb.words[k]
            mats[k] = F.matmul(F.matmul(P[t], M), Pi[s]) if M.size else M
        return Representation(pb, F, dict(self.dims), mats)

    def to_json(self) -> dict:
        return {"dimvector": self.dimvector,
                "matrices": {g[0]: self.mats[g[0]].tolist() for g in self.problem.gens}}


def _hom_basis(V: Representation, W: Representation) -> list[dict]:
    """Basis of the natural transformations V -> W."""
    F, pb = V.F, V.problem
    verts = list(pb.vertices)
    offs, o = {}, 0
    for v in verts:
        offs[v] = o
        o += W.dims[v] * V.dims[v]
    n = o
    rows = []
    for name, s, t, _ in pb.gens:
        A, B = V.mats[name], W.mats[name]
        # X_t A - B X_s = 0, entry (i, j)
        for i in range(W.dims[t]):
            for j in range(V.dims[s]):
                row = np.zeros(n, dtype=np.int64)
                for l in range(V.dims[t]):
                    idx = offs[t] + i * V.dims[t] + l
                    row[idx] = F.add[row[idx], A[l, j]]
                for l in range(W.dims[s]):
                    idx = offs[s] + l * V.dims[s] + j
                    row[idx] = F.sub[row[idx], B[i, l]]
                rows.append(row)
    if n == 0:
        return []
    basis = lf.nullspace(F, np.array(rows).reshape(len(rows), n)) if rows else np.eye(n, dtype=np.int64)
    out = []
    for vec in basis:
        out.append({v: vec[offs[v]:offs[v] + W.dims[v] * V.dims[v]].reshape(W.dims[v], V.dims[v])
                    for v in verts})
    return out


def _block(F, X: dict, verts) -> np.ndarray:
    rs = sum(X[v].shape[0] for v in verts)
    cs = sum(X[v].shape[1] for v in verts)
    M = np.zeros((rs, cs), dtype=np.int64)
    r = c = 0
    for v in verts:
        a, b = X[v].shape
        M[r:r + a, c:c + b] = X[v]
        r += a
        c += b
    return M


def endomorphism_algebra(V: Representation):
    verts = list(V.problem.vertices)
    mats = [_block(V.F, X, verts) for X in _hom_basis(V, V)]
    return matrix_algebra(V.F, mats)


def is_indecomposable(V: Representation) -> bool:
    """Nonzero with local endomorphism algebra."""
    if V.total_dim == 0:
        return False
    return is_local(endomorphism_algebra(V))


def are_isomorphic(V: Representation, W: Representation, budget: int = 1 << 20, seed: int = 0) -> bool:
    if V.dims != W.dims:
        return False
    F = V.F
    verts = list(V.problem.vertices)
    basis = _hom_basis(V, W)
    if V.total_dim == 0:
        return True
    if not basis:
        return False
    mats = np.array([_block(F, X, verts) for X in basis])

    def combo(coefs):
        acc = np.zeros_like(mats[0])
        for c, M in zip(coefs, mats):
            if c:
                acc = F.add[acc, F.mul[c, M]]
        return acc

    rng = np.random.default_rng(seed)
    for _ in range(64):
        if lf.is_invertible(F, combo(rng.integers(0, F.q, len(mats)))):
            return True
    if F.q ** len(mats) > budget:
        raise BudgetExceeded(F.q ** len(mats), budget)
    for coefs in itertools.product(range(F.q), repeat=len(mats)):
        if lf.is_invertible(F, combo(coefs)):
            return True
    return False


def _restrict(V: Representation, E: dict) -> Representation:
    """The summand E V for an idempotent endomorphism E (per vertex)."""
    F, pb = V.F, V.problem
    bases, pivs = {}, {}
    for v in pb.vertices:
        if V.dims[v] == 0:
            bases[v] = np.zeros((0, 0), dtype=np.int64)
            pivs[v] = []
            continue
        Bt = lf.row_basis(F, E[v].T)            # rows span the image
        bases[v] = Bt.T
        pivs[v] = lf.rref(F, Bt)[1] if len(Bt) else []
    dims = {v: bases[v].shape[1] for v in pb.vertices}
    mats = {}
    for k, M in V.mats.items():
        s, t, _ = pb.words[k]
        Bs, Bt = bases[s], bases[t]
        if dims[s] == 0 or dims[t] == 0:
            mats[k] = np.zeros((dims[t], dims[s]), dtype=np.int64)
            continue
        img = F.matmul(M, Bs)
        # coordinates in Bt: rows of Bt at its row-pivots form an invertible block
        rows = lf.rref(F, Bt.T)[1]
        sub = lf.inverse(F, Bt[rows])
        mats[k] = F.matmul(sub, img[rows])
    return Representation(pb, F, dims, mats)


def split(V: Representation, seed: int = 0, tries: int = 500):
    """(V1, V2) with V = V1 ⊕ V2 both nonzero, or None if V is indecomposable."""
    if is_indecomposable(V) or V.total_dim == 0:
        return None
    F = V.F
    verts = list(V.problem.vertices)
    basis = _hom_basis(V, V)
    rng = np.random.default_rng(seed)
    sizes = [V.dims[v] for v in verts]
    for _ in range(tries):
        coefs = rng.integers(0, F.q, len(basis))
        X = {v: np.zeros((V.dims[v], V.dims[v]), dtype=np.int64) for v in verts}
        for c, B in zip(coefs, basis):
            for v in verts:
                X[v] = F.add[X[v], F.mul[c, B[v]]]
        M = _block(F, X, verts)
        mu = lf.min_poly(F, M)
        _, facs = lf.factor(F, mu)
        if len(facs) < 2:
            continue
        g, e = facs[0]
        u = [1]
        for _ in range(e):
            u = lf.pmul(F, u, list(g))
        w = lf.pdivmod(F, mu, u)[0]
        d, s_, t_ = lf.pxgcd(F, u, w)
        # 1 = s u + t w; t w(M) projects onto ker u(M)
        Eb = _eval_poly_matrix(F, lf.pmul(F, t_, w), M)
        E, off = {}, 0
        for v, n in zip(verts, sizes):
            E[v] = Eb[off:off + n, off:off + n]
            off += n
        Ec = {v: F.sub[np.eye(V.dims[v], dtype=np.int64), E[v]] for v in verts}
        V1, V2 = _restrict(V, E), _restrict(V, Ec)
        if V1.total_dim and V2.total_dim:
            return V1, V2
    raise OracleError("no splitting idempotent found")


def _eval_poly_matrix(F, poly, M):
    n = M.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in reversed(list(poly)):
        acc = F.matmul(acc, M)
        acc = F.add[acc, F.mul[c, np.eye(n, dtype=np.int64)]]
    return acc


# ---------------------------------------------------------------------------
# explicit families for two-object categories


def _two_objects(C: FiniteCategory):
    if len(C.objects) != 2:
        raise RegimeMismatch("need a two-object category")
    x, y = C.objects
    if not C.hom(x, y):
        x, y = y, x
    if not C.hom(x, y) or C.hom(y, x):
        raise RegimeMismatch("need morphisms in exactly one direction")
    return x, y


def _factorizations(C: FiniteCategory, x, y):
    """f -> (orbit base, g, h) with f = h∘base∘g; requires a free action."""
    out = {}
    ax, ay = C.endo(x), C.endo(y)
    for f in C.hom(x, y):
        if f in out:
            continue
        for g in ax:
            for h in ay:
                hfg = C.comp(h, C.comp(f, g))
                if hfg in out:
                    raise ActionNotFree(f"{hfg} is reached twice from {f}")
                out[hfg] = (f, g, h)
    for f in C.hom(x, y):
        base = out[f][0]
        stab = [(g, h) for g in ax for h in ay if C.comp(h, C.comp(base, g)) == base]
        if len(stab) != 1:
            raise ActionNotFree(f"stabilizer of {base} has order {len(stab)}")
    return out


def equivariant_representation(C: FiniteCategory, F: lf.GF, rho_x: dict, rho_y: dict,
                               base_map) -> Representation:
    """V(x), V(y) carry the automorphism actions rho_x, rho_y and every
    f = h∘base∘g in C(x, y) acts by rho_y(h) A rho_x(g), where A = base_map
    (one matrix, or a dict per orbit base)."""
    x, y = _two_objects(C)
    fac = _factorizations(C, x, y)
    mats = {}
    for g, M in rho_x.items():
        mats[g] = np.asarray(M, dtype=np.int64)
    for h, M in rho_y.items():
        mats[h] = np.asarray(M, dtype=np.int64)
    for f, (base, g, h) in fac.items():
        A = base_map[base] if isinstance(base_map, dict) else base_map
        mats[f] = F.matmul(F.matmul(mats[h], np.asarray(A, dtype=np.int64)), mats[g])
    dims = {x: mats[C.identities[x]].shape[0], y: mats[C.identities[y]].shape[0]}
    return Representation.from_morphisms(C, F, dims, mats)


def regular_product_module(C: FiniteCategory, F: lf.GF):
    """The regular k(Aut(x) x Aut(y))-module as a pair of commuting actions."""
    x, y = _two_objects(C)
    G, gx = C.automorphism_group(x)
    H, hy = C.automorphism_group(y)
    n = G.order * H.order

    def idx(a, b):
        return a * H.order + b

    rho_x, rho_y = {}, {}
    for g in range(G.order):
        M = np.zeros((n, n), dtype=np.int64)
        for a in range(G.order):
            for b in range(H.order):
                M[idx(G.table[g][a], b), idx(a, b)] = 1
        rho_x[gx[g]] = M
    for h in range(H.order):
        M = np.zeros((n, n), dtype=np.int64)
        for a in range(G.order):
            for b in range(H.order):
                M[idx(a, H.table[h][b]), idx(a, b)] = 1
        rho_y[hy[h]] = M
    return {"G": rho_x, "H": rho_y}


def trivial_product_module(C: FiniteCategory, F: lf.GF, dim: int = 1):
    x, y = _two_objects(C)
    one = np.eye(dim, dtype=np.int64)
    return {"G": {g: one for g in C.endo(x)}, "H": {h: one for h in C.endo(y)}}


def induce_from_product(M: dict, C: FiniteCategory, F: lf.GF) -> Representation:
    """The embedding of k(G x H)-modules: both objects carry M, automorphisms
    act through the two factors and h∘base∘g acts by M(g, h)."""
    rho_x, rho_y = M["G"], M["H"]
    n = next(iter(rho_x.values())).shape[0]
    return equivariant_representation(C, F, rho_x, rho_y, np.eye(n, dtype=np.int64))


def a_lambda(F: lf.GF, lam: int, rows: int, cols: int) -> np.ndarray:
    """1, 1 on the diagonal and lambda below it in the leading 2 x 2 block."""
    A = np.zeros((rows, cols), dtype=np.int64)
    A[0, 0] = A[1, 1] = 1
    A[1, 0] = lam
    return A


def group_characters(G, F: lf.GF) -> list[list[int]]:
    """All homomorphisms G -> F^* as value lists."""
    gens = G.generators
    out = []
    for vals in itertools.product(range(1, F.q), repeat=len(gens)):
        chi = {G.identity: 1}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for g, v in zip(gens, vals):
                    b = G.table[g][a]
                    val = int(F.mul[v, chi[a]])
                    if b not in chi:
                        chi[b] = val
                        nxt.append(b)
                    elif chi[b] != val:
                        ok = False
            frontier = nxt
        if ok and all(chi[G.table[a][b]] == F.mul[chi[a], chi[b]] for a in range(G.order) for b in range(G.order)):
            out.append([chi[a] for a in range(G.order)])
    uniq = []
    for c in out:
        if c not in uniq:
            uniq.append(c)
    return uniq


def simple_module(G, F: lf.GF, min_dim: int = 2) -> list:
    """Matrices (indexed like G) of a simple module of dimension >= min_dim,
    for a semisimple group algebra split over F."""
    from .algebra import group_algebra, primitive_idempotents
    A = group_algebra(G, F)
    D = primitive_idempotents(A, auto_extend=False)
    for e in D.idempotents:
        span = np.array([A.mul(A.basis_vector(i), e) for i in range(A.dim)])
        B = lf.row_basis(F, span)
        if len(B) < min_dim:
            continue
        basis = B.T                                   # columns
        rows = lf.rref(F, B)[1]
        sub = lf.inverse(F, basis[rows])
        mats = []
        for g in range(G.order):
            img = F.matmul(A.left_matrix(A.basis_vector(g)), basis)
            mats.append(F.matmul(sub, img[rows]))
        return mats
    raise RegimeMismatch(f"no simple module of dimension >= {min_dim}")


def _sylow_generator(G, p):
    from .groups import p_part
    pp = p_part(G.order, p)
    for a in range(G.order):
        if G.element_order(a) == pp:
            return a
    raise RegimeMismatch("Sylow p-subgroup is not cyclic")


def _jordan_basis(F, M, p):
    """Change of basis putting a Jordan block of size p of M (unipotent) in the
    leading position, or None."""
    d = M.shape[0]
    N = F.sub[M, np.eye(d, dtype=np.int64)]
    Np = np.eye(d, dtype=np.int64)
    powers = [Np]
    for _ in range(p + 1):
        Np = F.matmul(N, Np)
        powers.append(Np)
    r = [lf.rank(F, P) for P in powers]
    if r[p - 1] - 2 * r[p] + r[p + 1] <= 0:
        return None
    for v in lf.nullspace(F, powers[p]):
        top = F.matmul(powers[p - 1], v[:, None])[:, 0]
        if np.any(top):
            cols = [F.matmul(powers[p - i], v[:, None])[:, 0] for i in range(1, p + 1)]
            B = np.array(cols).T
            for j in range(d):
                if B.shape[1] == d:
                    break
                e = np.zeros(d, dtype=np.int64)
                e[j] = 1
                if not lf.in_span(F, B.T, e):
                    B = np.concatenate([B, e[:, None]], axis=1)
            return B
    return None


def modular_block_module(G, F: lf.GF, max_dim: int | None = None, budget: int = DEFAULT_BUDGET):
    """An indecomposable kG-module whose Sylow generator has a Jordan block of
    size p, in a basis starting with that block.  Brute force over dimensions
    p .. max_dim."""
    from .fincat import group_category
    p = F.p
    delta = _sylow_generator(G, p)
    C = group_category(G)
    x = C.objects[0]
    elems = C.endo(x)
    max_dim = max_dim or p + 2
    for d in range(p, max_dim + 1):
        B = enumerate_batch(C, (d,), F, budget)
        for cls in iso_classes(B):
            V = B.representation(int(cls[0]))
            if not is_indecomposable(V):
                continue
            J = _jordan_basis(F, V.mats[elems[delta]], p)
            if J is None:
                continue
            Ji = lf.inverse(F, J)
            return [F.matmul(F.matmul(Ji, V.mats[elems[g]]), J) for g in range(G.order)]
    raise RegimeMismatch(f"no module with a Jordan block of size {p} up to dimension {max_dim}")


@dataclass
class FamilyWitness:
    lam: int
    representation: Representation
    A: np.ndarray
    M: list
    N: list
    regime: str

    def to_json(self) -> dict:
        return {"lambda": self.lam, "regime": self.regime, "A": self.A.tolist(),
                "representation": self.representation.to_json()}


def _side_module(G, F):
    from .groups import p_part
    if G.order % F.p == 0:
        return "modular", modular_block_module(G, F)
    if not G.is_abelian():
        return "simple", simple_module(G, F)
    chars = group_characters(G, F)
    if len(chars) < 2:
        raise RegimeMismatch("fewer than two one-dimensional modules over this field")
    c1, c2 = chars[0], chars[1]
    return "characters", [np.diag([c1[g], c2[g]]).astype(np.int64) for g in range(G.order)]


def detect_regime(C: FiniteCategory, F: lf.GF) -> str:
    x, y = _two_objects(C)
    G, _ = C.automorphism_group(x)
    H, _ = C.automorphism_group(y)
    mod = [K.order % F.p == 0 for K in (G, H)]
    if all(mod):
        raise RegimeMismatch("both group algebras are modular")
    if any(mod):
        return "b"
    ab = [K.is_abelian() for K in (G, H)]
    if all(ab):
        raise RegimeMismatch("both groups abelian and semisimple")
    return "a-ii" if any(ab) else "a-i"


def build_family(C: FiniteCategory, lam: int, F: lf.GF, regime: str | None = None) -> FamilyWitness:
    """V_lambda: modules M, N at the two objects linked by A_lambda."""
    found = detect_regime(C, F)
    if regime is not None and regime != found:
        raise RegimeMismatch(f"category is in regime {found}, not {regime}")
    x, y = _two_objects(C)
    _factorizations(C, x, y)
    G, gx = C.automorphism_group(x)
    H, hy = C.automorphism_group(y)
    _, M = _side_module(G, F)
    _, N = _side_module(H, F)
    A = a_lambda(F, int(lam), N[0].shape[0], M[0].shape[0])
    rho_x = {gx[g]: M[g] for g in range(G.order)}
    rho_y = {hy[h]: N[h] for h in range(H.order)}
    V = equivariant_representation(C, F, rho_x, rho_y, A)
    return FamilyWitness(int(lam), V, A, M, N, found)
