"""Finite-dimensional algebras over finite fields given by structure constants.

Elements are coefficient vectors (encoded field elements) on a labelled basis,
and ``T[a, b]`` is the vector of ``e_a * e_b``.  Category algebras use the
morphisms as basis with ``g * f = g∘f`` when composable and 0 otherwise, so a
morphism ``f: x -> y`` spans part of ``1_y A 1_x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linfield as lf
from .fincat import FiniteCategory, ObjectPoset
from .groups import Group

DEFAULT_DIMENSION_BOUND = 128
DEFAULT_SEED = 0


class AlgebraError(ValueError):
    pass


class NotAssociative(AlgebraError):
    pass


class DimensionBoundExceeded(AlgebraError):
    pass


class NonSplitSemisimpleQuotient(AlgebraError):
    """A/rad needs a field extension of the given degree to split."""

    def __init__(self, degree: int):
        super().__init__(f"A/rad does not split; extend by degree {degree}")
        self.degree = degree


def _vec(x):
    return np.asarray(x, dtype=np.int64)


class StructureAlgebra:
    """Associative unital algebra over ``F`` with structure tensor ``T``."""

    def __init__(self, F: lf.GF, labels, T, unit, base_idempotents=None, *, check=True):
        self.F = F
        self.labels = list(labels)
        self.T = _vec(T)
        n = len(self.labels)
        if self.T.shape != (n, n, n):
            raise AlgebraError(f"structure tensor has shape {self.T.shape}, expected {(n, n, n)}")
        self.unit = _vec(unit)
        if base_idempotents is None:
            base_idempotents = [("1", self.unit)]
        self.base_idempotents = [(lab, _vec(v)) for lab, v in base_idempotents]
        if check:
            self._check()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, field={self.F})"

    # -- arithmetic -------------------------------------------------------

    def left_table(self, x):
        """``M[b, c]`` = coefficient of ``e_c`` in ``x * e_b``."""
        n = self.dim
        return self.F.matmul(_vec(x)[None, :], self.T.reshape(n, n * n)).reshape(n, n)

    def right_table(self, y):
        """``M[a, c]`` = coefficient of ``e_c`` in ``e_a * y``."""
        n = self.dim
        Tt = np.ascontiguousarray(self.T.transpose(0, 2, 1)).reshape(n * n, n)
        return self.F.matmul(Tt, _vec(y)[:, None]).reshape(n, n)

    def left_matrix(self, x):
        """Matrix of ``v -> x v`` acting on column coordinate vectors."""
        return self.left_table(x).T.copy()

    def mul(self, x, y):
        return self.F.matmul(_vec(y)[None, :], self.left_table(x))[0]

    def add(self, x, y):
        return self.F.add[_vec(x), _vec(y)]

    def sub(self, x, y):
        return self.F.sub[_vec(x), _vec(y)]

    def scale(self, c, x):
        return self.F.mul[int(c), _vec(x)]

    def power(self, x, n: int, unit=None):
        r = self.unit.copy() if unit is None else _vec(unit)
        base = _vec(x)
        while n:
            if n & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            n >>= 1
        return r

    def basis_vector(self, i: int):
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def element(self, terms: dict):
        """Vector from ``{label: coefficient}`` (coefficients are encoded ints)."""
        v = np.zeros(self.dim, dtype=np.int64)
        index = {lab: i for i, lab in enumerate(self.labels)}
        for lab, c in terms.items():
            i = index[lab]
            v[i] = self.F.add[v[i], int(c) % self.F.q]
        return v

    def products(self, U, V):
        """All products ``u * v`` for rows ``u`` of U and ``v`` of V, as rows."""
        U, V = _vec(U), _vec(V)
        n = self.dim
        if len(U) == 0 or len(V) == 0:
            return np.zeros((0, n), dtype=np.int64)
        # (u*v)_c = sum_ab u_a v_b T[a,b,c]
        left = self.F.matmul(U, self.T.reshape(n, n * n)).reshape(len(U), n, n)
        return self.F.matmul(V[None, :, :], left).reshape(len(U) * len(V), n)

    def is_idempotent(self, e) -> bool:
        return np.array_equal(self.mul(e, e), _vec(e))

    def is_commutative(self) -> bool:
        return np.array_equal(self.T, self.T.transpose(1, 0, 2))

    def _check(self):
        F, n, T = self.F, self.dim, self.T
        if n == 0:
            return
        flat = T.reshape(n, n * n)
        pairs = T.reshape(n * n, n)
        for a in range(n):
            lhs = F.matmul(T[a], flat).reshape(n, n, n)    # (e_a e_b) e_c
            rhs = F.matmul(pairs, T[a]).reshape(n, n, n)   # e_a (e_b e_c)
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(np.any(lhs != rhs, axis=2))[0])
                raise NotAssociative(f"({self.labels[a]}*{self.labels[b]})*{self.labels[c]} differs")
        for i in range(n):
            ei = self.basis_vector(i)
            if not (np.array_equal(self.mul(self.unit, ei), ei) and np.array_equal(self.mul(ei, self.unit), ei)):
                raise AlgebraError(f"unit is not an identity for {self.labels[i]}")

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        nz = np.argwhere(self.T)
        return {
            "dim": self.dim,
            "field": self.F.to_json(),
            "basis": self.labels,
            "unit": self.unit.tolist(),
            "structure_constants": [[self.labels[a], self.labels[b], self.labels[c], int(self.T[a, b, c])]
                                    for a, b, c in nz],
        }

    def format(self, v) -> str:
        """Readable form of a vector, e.g. ``1x + 2*g`` (extension elements as
        their integer codes)."""
        terms = []
        for lab, c in zip(self.labels, _vec(v)):
            if c:
                terms.append(lab if c == 1 else f"{int(c)}*{lab}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# builders


def category_algebra(C: FiniteCategory, F: lf.GF) -> StructureAlgebra:
    labels = list(C.morphisms)
    index = {m: i for i, m in enumerate(labels)}
    n = len(labels)
    T = np.zeros((n, n, n), dtype=np.int64)
    for (g, f), gf in C.compose_table.items():
        T[index[g], index[f], index[gf]] = 1
    unit = np.zeros(n, dtype=np.int64)
    base = []
    for x in C.objects:
        unit[index[C.identities[x]]] = 1
        v = np.zeros(n, dtype=np.int64)
        v[index[C.identities[x]]] = 1
        base.append((x, v))
    return StructureAlgebra(F, labels, T, unit, base, check=n <= 48)


def group_algebra(G: Group, F: lf.GF, names=None) -> StructureAlgebra:
    names = list(names) if names is not None else list(G.names)
    n = G.order
    T = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            T[a, b, G.table[a][b]] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[G.identity] = 1
    return StructureAlgebra(F, names, T, unit, check=n <= 48)


def incidence_algebra(P: ObjectPoset, F: lf.GF) -> StructureAlgebra:
    """Basis ``e_{x,y}`` for ``x <= y`` with ``e_{y,z} e_{x,y} = e_{x,z}``."""
    pairs = P.pairs()
    index = {pr: i for i, pr in enumerate(pairs)}
    n = len(pairs)
    T = np.zeros((n, n, n), dtype=np.int64)
    for (y, z) in pairs:
        for (x, y2) in pairs:
            if y == y2:
                T[index[(y, z)], index[(x, y2)], index[(x, z)]] = 1
    unit = np.zeros(n, dtype=np.int64)
    base = []
    for x in P.elements:
        unit[index[(x, x)]] = 1
        v = np.zeros(n, dtype=np.int64)
        v[index[(x, x)]] = 1
        base.append((x, v))
    return StructureAlgebra(F, [f"e_{x},{y}" for x, y in pairs], T, unit, base)


def matrix_algebra(F: lf.GF, mats, labels=None) -> StructureAlgebra:
    """Subalgebra of ``M_d(F)`` spanned by linearly independent ``mats``
    (which must contain the identity in their span and be closed under
    products)."""
    mats = _vec(mats)
    r, d, _ = mats.shape
    flat = mats.reshape(r, d * d)
    T = np.zeros((r, r, r), dtype=np.int64)
    prods = F.matmul(mats[:, None], mats[None, :]).reshape(r * r, d * d)
    # coordinates of every product in one elimination
    aug = np.concatenate([flat.T, prods.T], axis=1)
    R, piv = lf.rref(F, aug)
    if any(p >= r for p in piv) or len(piv) < r:
        raise AlgebraError("matrices are dependent or not closed under multiplication")
    T = R[:r, r:].T.reshape(r, r, r)
    unit = lf.coordinates(F, flat, np.eye(d, dtype=np.int64).reshape(-1))
    if unit is None:
        raise AlgebraError("identity matrix is not in the span")
    labels = labels or [f"m{i}" for i in range(r)]
    return StructureAlgebra(F, labels, T, unit, check=False)


def field_embedding(F: lf.GF, E: lf.GF) -> np.ndarray:
    """Image in ``E`` of every element of ``F`` (requires ``F.k | E.k``)."""
    if F.p != E.p or E.k % F.k:
        raise AlgebraError(f"{F} does not embed in {E}")
    if F.k == 1:
        return np.arange(F.q, dtype=np.int64)
    mod = list(F.modulus)
    root = next(a for a in range(E.q) if lf.peval(E, mod, a) == 0)
    powers = [E.power(root, i) for i in range(F.k)]
    out = np.zeros(F.q, dtype=np.int64)
    for a in range(F.q):
        acc = 0
        for c, pw in zip(F.coeffs(a), powers):
            acc = int(E.add[acc, E.mul[c, pw]])
        out[a] = acc
    return out


def extend_scalars(A: StructureAlgebra, E: lf.GF) -> StructureAlgebra:
    emb = field_embedding(A.F, E)
    return StructureAlgebra(E, A.labels, emb[A.T], emb[A.unit],
                            [(lab, emb[v]) for lab, v in A.base_idempotents], check=False)


# ---------------------------------------------------------------------------
# subspaces, ideals, quotients


def span(F, rows, n):
    rows = _vec(rows).reshape(-1, n)
    if len(rows) == 0:
        return rows
    return lf.row_basis(F, rows)


def ideal_product(A: StructureAlgebra, U, V):
    return span(A.F, A.products(U, V), A.dim)


def radical_powers(A: StructureAlgebra, R=None):
    """``[rad, rad^2, ...]`` up to and including the zero space."""
    R = radical(A) if R is None else R
    out = [R]
    while len(out[-1]):
        out.append(ideal_product(A, out[-1], R))
    return out


def nilpotency_index(A, R=None) -> int:
    """Least n >= 1 with rad^n = 0."""
    return len(radical_powers(A, R))


@dataclass
class Quotient:
    algebra: StructureAlgebra
    complement: list  # A-coordinates lifted to form the quotient basis
    ideal: np.ndarray
    reduce: object = field(repr=False)  # A-vector -> quotient coordinates


def quotient_algebra(A: StructureAlgebra, ideal) -> Quotient:
    F, n = A.F, A.dim
    ideal = span(F, ideal, n)
    if len(ideal):
        _, piv = lf.rref(F, ideal)
    else:
        piv = []
    comp = [i for i in range(n) if i not in set(piv)]
    # express a vector as ideal part + complement coordinates
    basis = np.vstack([ideal.reshape(-1, n), np.eye(n, dtype=np.int64)[comp]])
    inv = lf.inverse(F, basis.T) if len(basis) else basis

    def reduce(v):
        c = F.matvec(inv, _vec(v))
        return c[len(ideal):]

    m = len(comp)
    T = np.zeros((m, m, m), dtype=np.int64)
    for a, ia in enumerate(comp):
        for b, ib in enumerate(comp):
            T[a, b] = reduce(A.T[ia, ib])
    Q = StructureAlgebra(F, [A.labels[i] for i in comp], T, reduce(A.unit),
                         [(lab, reduce(v)) for lab, v in A.base_idempotents], check=False)
    return Quotient(Q, comp, ideal, reduce)


# ---------------------------------------------------------------------------
# radical


def _prime_blocks(F: lf.GF):
    """``M[a]`` = matrix over F_p of multiplication by ``a`` on F_q = F_p^k."""
    k = F.k
    M = np.zeros((F.q, k, k), dtype=np.int64)
    for a in range(F.q):
        for j in range(k):
            M[a, :, j] = F.coeffs(int(F.mul[a, F.p**j]))
    return M


def _to_prime_matrix(F, blocks, L):
    n = L.shape[0]
    k = F.k
    big = blocks[L]  # (n, n, k, k)
    return big.transpose(0, 2, 1, 3).reshape(n * k, n * k)


def radical(A: StructureAlgebra, *, bound: int = DEFAULT_DIMENSION_BOUND):
    """Basis (rows) of the Jacobson radical.

    Works over the prime field: with ``L~_a`` an integer lift of left
    multiplication on the F_p-regular representation (dimension N),
    ``I_{-1} = A`` and ``I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}`` where
    ``g_i(a) = (Tr(L~_a^(p^i)) mod p^(i+1)) / p^i``; the radical is ``I_l`` with
    ``l = floor(log_p N)``.
    """
    F, n = A.F, A.dim
    if n > bound:
        raise DimensionBoundExceeded(f"dimension {n} exceeds bound {bound}")
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    p, k = F.p, F.k
    N = n * k
    blocks = _prime_blocks(F) if k > 1 else None
    # left multiplication by each F_p-basis element t^i e_a, as N x N over F_p
    B = np.zeros((N, N, N), dtype=np.int64)
    for a in range(n):
        La = A.left_matrix(A.basis_vector(a))
        for i in range(k):
            Lt = F.mul[p**i if k > 1 else 1, La]
            B[a * k + i] = _to_prime_matrix(F, blocks, Lt) if k > 1 else Lt
    ell = 0
    while p ** (ell + 1) <= N:
        ell += 1
    U = np.eye(N, dtype=np.int64)
    Fp = lf.field_make(p, 1)
    for i in range(ell + 1):
        if len(U) == 0:
            break
        mod = p ** (i + 1)
        Lu = np.einsum("rs,sxy->rxy", U, B) % p      # left mult by the ideal basis
        G = np.zeros((len(U), N), dtype=np.int64)
        for r in range(len(U)):
            W = Lu[r].T                                # W[j] = coords of U_r * b_j
            Lw = np.einsum("js,sxy->jxy", W, B) % p
            P = _batched_power(Lw, p**i, mod)
            tr = np.trace(P, axis1=1, axis2=2) % mod
            G[r] = (tr // p**i) % p
        lam = lf.nullspace(Fp, G.T) if N else np.zeros((0, len(U)), dtype=np.int64)
        U = lf.row_basis(Fp, Fp.matmul(lam, U)) if len(lam) else np.zeros((0, N), dtype=np.int64)
    if len(U) == 0:
        return np.zeros((0, n), dtype=np.int64)
    if k == 1:
        return lf.row_basis(F, U)
    packed = np.array([[F.from_coeffs(row[a * k:(a + 1) * k]) for a in range(n)] for row in U])
    return lf.row_basis(F, packed)


def _batched_power(M, e, mod):
    M = M % mod
    R = None
    while e:
        if e & 1:
            R = M if R is None else np.matmul(R, M) % mod
        e >>= 1
        if e:
            M = np.matmul(M, M) % mod
    return R


def radical_oracle(A: StructureAlgebra, limit: int = 20000):
    """Radical as the largest nilpotent ideal, by exhaustive enumeration.

    Every element ``a`` is tried in turn; ``J + AaA`` is kept when it is
    nilpotent.  Sums of nilpotent ideals are nilpotent and the radical is the
    largest one, so the result is exactly the radical."""
    F, n = A.F, A.dim
    if F.q**n > limit:
        raise DimensionBoundExceeded(f"{F.q}^{n} elements exceed the enumeration limit")
    J = np.zeros((0, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for code in range(1, F.q**n):
        a = np.array([(code // F.q**i) % F.q for i in range(n)], dtype=np.int64)
        if len(J) and lf.in_span(F, J, a):
            continue
        gen = A.products(A.products(eye, a[None, :]), eye)
        cand = span(F, np.vstack([J, gen]), n)
        if _is_nilpotent_subspace(A, cand):
            J = cand
    return J


def _is_nilpotent_subspace(A, S) -> bool:
    P = S
    for _ in range(A.dim + 1):
        if len(P) == 0:
            return True
        P = span(A.F, A.products(P, S), A.dim)
    return len(P) == 0


def same_subspace(F, U, V) -> bool:
    U, V = _vec(U), _vec(V)
    ru = lf.rank(F, U) if len(U) else 0
    rv = lf.rank(F, V) if len(V) else 0
    if ru != rv:
        return False
    if ru == 0:
        return True
    return lf.rank(F, np.vstack([U, V])) == ru


# ---------------------------------------------------------------------------
# corners and idempotents


def rref_basis(F, rows, n):
    """Row basis in reduced echelon form plus its pivot columns; the
    coordinates of a vector of the span are its entries at the pivots."""
    rows = _vec(rows).reshape(-1, n)
    if len(rows) == 0:
        return rows, []
    R, piv = lf.rref(F, rows)
    return R[: len(piv)], list(piv)


@dataclass
class Corner:
    algebra: StructureAlgebra
    basis: np.ndarray  # rows: corner basis in ambient coordinates
    pivots: list

    def to_ambient(self, v):
        return self.algebra.F.matmul(_vec(v)[None, :], self.basis)[0]

    def from_ambient(self, v):
        return _vec(v)[self.pivots]


def corner_algebra(A: StructureAlgebra, e, idempotents=()) -> Corner:
    """``eAe`` with unit ``e``; ``idempotents`` are (label, vector) pairs
    inside ``eAe`` to carry along as its base idempotents."""
    F, n = A.F, A.dim
    eye = np.eye(n, dtype=np.int64)
    e = _vec(e)
    gens = A.products(A.products(e[None, :], eye), e[None, :])
    basis, piv = rref_basis(F, gens, n)
    m = len(basis)
    prods = A.products(basis, basis)[:, piv].reshape(m, m, m)
    base = [(lab, _vec(v)[piv]) for lab, v in idempotents] or None
    B = StructureAlgebra(F, [f"b{i}" for i in range(m)], prods, e[piv], base, check=False)
    return Corner(B, basis, piv)


def center(A: StructureAlgebra):
    n = A.dim
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    D = A.F.sub[A.T, A.T.transpose(1, 0, 2)].reshape(n, n * n)
    return lf.nullspace(A.F, D.T)


def element_min_poly(A: StructureAlgebra, x, unit=None):
    """Monic minimal polynomial of ``x`` over the field (ascending)."""
    F = A.F
    unit = A.unit if unit is None else _vec(unit)
    powers = [unit]
    while True:
        nxt = A.mul(powers[-1], x)
        c = lf.coordinates(F, np.array(powers), nxt)
        if c is not None:
            return [int(F.neg[v]) for v in c] + [1]
        powers.append(nxt)


def eval_poly(A: StructureAlgebra, f, x, unit=None):
    unit = A.unit if unit is None else _vec(unit)
    acc = np.zeros(A.dim, dtype=np.int64)
    for c in reversed(lf.ptrim(f)):
        acc = A.add(A.mul(acc, x), A.scale(c, unit))
    return acc


def _lagrange_idempotents(S, y, roots):
    F = S.F
    out = []
    for lam in roots:
        e = S.unit.copy()
        for mu in roots:
            if mu == lam:
                continue
            factor = S.sub(y, S.scale(mu, S.unit))
            e = S.scale(F.inv(int(F.sub[lam, mu])), S.mul(e, factor))
        out.append(e)
    return out


def _split_central_simple(S, rng, tries=400):
    """Two orthogonal idempotents summing to 1 in a split central simple
    algebra of dimension > 1, from a random element with reducible minimal
    polynomial."""
    F = S.F
    for _ in range(tries):
        y = rng.integers(0, F.q, S.dim)
        mu = element_min_poly(S, y)
        _, facs = lf.factor(F, mu, seed=int(rng.integers(0, 2**31)))
        if len(facs) < 2:
            continue
        g0, m0 = facs[0]
        f = [1]
        for _i in range(m0):
            f = lf.pmul(F, f, g0)
        rest = lf.pdivmod(F, mu, f)[0]
        d, u, _v = lf.pxgcd(F, f, rest)
        # u f + v rest = d (a unit); e1 = (u f / d)(y) is 0 on f-part, 1 on rest
        uf = lf.pscale(F, F.inv(int(d[0])), lf.pmul(F, u, f))
        e1 = eval_poly(S, uf, y)
        return [e1, S.sub(S.unit, e1)]
    raise AlgebraError("failed to split a central simple algebra")  # pragma: no cover


def decompose_semisimple(S: StructureAlgebra, rng=None):
    """Primitive orthogonal idempotents of a semisimple algebra summing to 1.
    Raises NonSplitSemisimpleQuotient when some simple factor is not split."""
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED)
    F = S.F
    if S.dim <= 1:
        return [S.unit.copy()] if S.dim else []
    Z = center(S)
    if len(Z) > 1:
        D = np.array([S.sub(S.power(z, F.q), z) for z in Z])
        lam = lf.nullspace(F, D.T)
        K = F.matmul(lam, Z)
        if len(K) == 1:
            raise NonSplitSemisimpleQuotient(len(Z))
        y = next(v for v in K if not lf.in_span(F, S.unit[None, :], v))
        roots = [a for a in range(F.q) if lf.peval(F, element_min_poly(S, y), a) == 0]
        pieces = _lagrange_idempotents(S, y, roots)
    else:
        pieces = _split_central_simple(S, rng)
    out = []
    for e in pieces:
        cor = corner_algebra(S, e)
        for f in decompose_semisimple(cor.algebra, rng):
            out.append(cor.to_ambient(f))
    return out


def lift_idempotent(A: StructureAlgebra, x, max_iter: int = 64):
    """Iterate ``x <- 3x^2 - 2x^3`` until idempotent; valid whenever
    ``x^2 - x`` is nilpotent, in every characteristic."""
    three, two = A.F.from_int(3), A.F.from_int(2)
    for _ in range(max_iter):
        x2 = A.mul(x, x)
        if np.array_equal(x2, x):
            return x
        x3 = A.mul(x2, x)
        x = A.sub(A.scale(three, x2), A.scale(two, x3))
    raise AlgebraError("idempotent lifting did not converge")


@dataclass
class IdempotentDecomposition:
    algebra: StructureAlgebra
    idempotents: list
    labels: list
    classes: list  # lists of indices into idempotents
    radical: np.ndarray
    extension_degree: int = 1  # relative to the input field

    @property
    def field(self):
        return self.algebra.F

    @property
    def class_labels(self):
        return [self.labels[c[0]] for c in self.classes]

    @property
    def representatives(self):
        return [self.idempotents[c[0]] for c in self.classes]

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "extension_degree": self.extension_degree,
            "idempotents": [{"label": lab, "vector": e.tolist(), "text": self.algebra.format(e)}
                            for lab, e in zip(self.labels, self.idempotents)],
            "classes": [[self.labels[i] for i in c] for c in self.classes],
        }


def _in_subspace(F, basis, rows) -> bool:
    rows = _vec(rows)
    if not np.any(rows):
        return True
    if len(basis) == 0:
        return False
    return lf.rank(F, np.vstack([basis, rows])) == lf.rank(F, basis)


def _decompose(A: StructureAlgebra, seed: int) -> IdempotentDecomposition:
    F, n = A.F, A.dim
    rng = np.random.default_rng(seed)
    R = radical(A)
    Q = quotient_algebra(A, R)
    S = Q.algebra
    idems, labels = [], []
    for (lab, b), (_, bbar) in zip(A.base_idempotents, S.base_idempotents):
        if not np.any(b):
            continue
        cor = corner_algebra(S, bbar)
        prims = [cor.to_ambient(f) for f in decompose_semisimple(cor.algebra, rng)]
        lifted = []
        for eps in prims[:-1]:
            x0 = np.zeros(n, dtype=np.int64)
            x0[Q.complement] = eps
            c = b.copy()
            for f in lifted:
                c = A.sub(c, f)
            lifted.append(lift_idempotent(A, A.mul(A.mul(c, x0), c)))
        last = b.copy()
        for f in lifted:
            last = A.sub(last, f)
        lifted.append(last)
        idems.extend(lifted)
        labels.extend([lab] if len(lifted) == 1 else [f"{lab}.{i}" for i in range(len(lifted))])
    eye = np.eye(n, dtype=np.int64)
    mid = [A.products(e[None, :], eye) for e in idems]
    parent = list(range(len(idems)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            if find(i) == find(j):
                continue
            if not _in_subspace(F, R, A.products(mid[i], idems[j][None, :])):
                parent[find(j)] = find(i)
    groups: dict = {}
    for i in range(len(idems)):
        groups.setdefault(find(i), []).append(i)
    classes = sorted(groups.values())
    return IdempotentDecomposition(A, idems, labels, classes, R)


def primitive_idempotents(A: StructureAlgebra, *, seed: int = DEFAULT_SEED,
                          auto_extend: bool = True) -> IdempotentDecomposition:
    """Complete set of primitive orthogonal idempotents grouped by the
    isomorphism class of the simple top.  When A/rad does not split over the
    field, the computation is redone over the smallest extension that the
    obstruction calls for (repeatedly if needed)."""
    ext = 1
    while True:
        try:
            D = _decompose(A, seed)
            D.extension_degree = ext
            return D
        except NonSplitSemisimpleQuotient as err:
            if not auto_extend:
                raise
            ext *= err.degree
            A = extend_scalars(A, lf.field_make(A.F.p, A.F.k * err.degree))


def simple_count(A: StructureAlgebra, **kw) -> int:
    return len(primitive_idempotents(A, **kw).classes)


def is_local(A: StructureAlgebra) -> bool:
    """``A/rad`` is a field (not necessarily the ground field)."""
    R = radical(A)
    if A.dim - len(R) == 1:
        return True
    S = quotient_algebra(A, R).algebra
    if not S.is_commutative():
        return False
    D = np.array([S.sub(S.power(S.basis_vector(i), S.F.q), S.basis_vector(i)) for i in range(S.dim)])
    return len(lf.nullspace(S.F, D.T)) == 1


# ---------------------------------------------------------------------------
# Ext-quiver and basic algebra


@dataclass
class ExtQuiver:
    vertices: list
    arrows: dict  # (i, j) -> multiplicity of arrows i -> j

    def multiplicity(self, i, j) -> int:
        return self.arrows.get((i, j), 0)

    def arrow_count(self) -> int:
        return sum(self.arrows.values())

    def loops(self, v) -> int:
        return self.multiplicity(v, v)

    def components(self) -> list[list]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        for (i, j), m in self.arrows.items():
            if m:
                parent[find(i)] = find(j)
        comps: dict = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        return list(comps.values())

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for (i, j), m in self.arrows.items():
            if m:
                indeg[j] += 1
        stack = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for (i, j), m in self.arrows.items():
                if i == v and m:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        stack.append(j)
        return seen == len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "arrows": [[i, j, m] for (i, j), m in sorted(self.arrows.items()) if m]}


def ext_quiver(A_or_D, **kw) -> ExtQuiver:
    D = A_or_D if isinstance(A_or_D, IdempotentDecomposition) else primitive_idempotents(A_or_D, **kw)
    A, R = D.algebra, D.radical
    F, n = A.F, A.dim
    R2 = ideal_product(A, R, R) if len(R) else R
    reps = D.representatives
    verts = D.class_labels

    def dim_between(U, ej, ei):
        if len(U) == 0:
            return 0
        rows = A.products(A.products(ej[None, :], U), ei[None, :])
        return lf.rank(F, rows) if np.any(rows) else 0

    arrows = {}
    for a, ei in zip(verts, reps):
        for b, ej in zip(verts, reps):
            m = dim_between(R, ej, ei) - dim_between(R2, ej, ei)
            if m:
                arrows[(a, b)] = m
    return ExtQuiver(verts, arrows)


@dataclass
class BasicAlgebra:
    algebra: StructureAlgebra     # base idempotents are the vertex idempotents
    corner: Corner
    decomposition: IdempotentDecomposition

    @property
    def vertices(self):
        return [lab for lab, _ in self.algebra.base_idempotents]


def basic_algebra(A_or_D, **kw) -> BasicAlgebra:
    D = A_or_D if isinstance(A_or_D, IdempotentDecomposition) else primitive_idempotents(A_or_D, **kw)
    A = D.algebra
    e = np.zeros(A.dim, dtype=np.int64)
    for r in D.representatives:
        e = A.add(e, r)
    cor = corner_algebra(A, e, list(zip(D.class_labels, D.representatives)))
    return BasicAlgebra(cor.algebra, cor, D)


def analysis_report(A: StructureAlgebra, **kw) -> dict:
    D = primitive_idempotents(A, **kw)
    B = D.algebra
    R = D.radical
    powers = radical_powers(B, R)
    return {
        "algebra": {"dim": A.dim, "field": A.F.to_json(), "basis": A.labels},
        "analysis_field": B.F.to_json(),
        "radical": {"dim": len(R), "basis": [B.format(r) for r in R]},
        "radical_power_dims": [len(P) for P in powers],
        "idempotents": D.to_json(),
        "ext_quiver": ext_quiver(D).to_json(),
        "seed": kw.get("seed", DEFAULT_SEED),
    }
