"""Exact arithmetic and linear algebra over finite fields F_{p^k}.

Field elements are encoded as integers ``0 <= a < q``: the coefficient vector
``(c_0, ..., c_{k-1})`` of the residue polynomial is read as the base-``p``
digits of ``a``.  Prime-field elements therefore have the same encoding in every
extension of the prime field, which is what scalar extension relies on.

Matrices and vectors are ``numpy`` int64 arrays of such encodings.  All
arithmetic goes through the precomputed ``add``/``mul`` tables of a
:class:`GF`, with a plain ``mod p`` fast path when ``k == 1``.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class ZeroInverse(ZeroDivisionError):
    pass


class ZeroPolynomial(FieldError):
    pass


class DimensionMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# prime-field polynomials (used only to build the extension tables)


def _pp_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mod(f, g, p):
    f = _pp_trim(f)
    g = _pp_trim(g)
    inv = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        f = _pp_trim(f)
    return f


def _pp_irreducible(f, p):
    """Irreducibility over F_p by trial division with every monic polynomial of
    degree at most deg(f)/2."""
    n = len(f) - 1
    if n <= 1:
        return True
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            if _pp_mod(f, list(tail) + [1], p) == []:
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree ``k`` over F_p whose lower
    coefficients, read as a base-``p`` integer, are smallest."""
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        tail = [(n // p**i) % p for i in range(k)]
        f = tail + [1]
        if tail[0] != 0 and _pp_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


class GF:
    """The finite field F_{p^k} = F_p[t]/(modulus)."""

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be positive")
        if modulus is None:
            modulus = least_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not _pp_irreducible(list(modulus), p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._build_tables()

    def _digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def _encode(self, coeffs):
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _build_tables(self):
        p, q, k = self.p, self.q, self.k
        idx = np.arange(q)
        if k == 1:
            self.add = (idx[:, None] + idx[None, :]) % p
            self.mul = (idx[:, None] * idx[None, :]) % p
        else:
            digits = np.array([self._digits(a) for a in range(q)])
            weights = p ** np.arange(k)
            self.add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                da = digits[a]
                for b in range(a, q):
                    prod = np.convolve(da, digits[b]) % p
                    r = _pp_mod(list(prod), list(self.modulus), p)
                    mul[a, b] = mul[b, a] = self._encode(r)
            self.mul = mul
        self.add = self.add.astype(np.int64)
        self.mul = self.mul.astype(np.int64)
        self.neg = np.array([int(np.nonzero(self.add[a] == 0)[0][0]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(self.mul[a] == 1)[0][0])
        self._inv = inv
        self.sub = self.add[:, self.neg]
        self._digit_arr = np.array([self._digits(a) for a in range(q)], dtype=np.int64).reshape(q, k)
        self._weights = (p ** np.arange(k)).astype(np.int64)
        reduce = np.zeros((2 * k - 1, k), dtype=np.int64)
        for i in range(2 * k - 1):
            e = [0] * i + [1]
            reduce[i] = (_pp_mod(e, list(self.modulus), p) + [0] * k)[:k]
        self._reduce = reduce

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def to_json(self):
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    # -- scalars ---------------------------------------------------------------

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroInverse("inverse of zero")
        return int(self._inv[a])

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def coeffs(self, a: int) -> list[int]:
        return self._digits(int(a))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _pp_mod(coeffs, list(self.modulus), self.p)
        return self._encode(coeffs)

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = int(self.mul[r, a])
            a = int(self.mul[a, a])
            n >>= 1
        return r

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
        return n

    @property
    def generator(self) -> int:
        """The class of t (the prime-field generator 1 when k == 1)."""
        return self.p if self.k > 1 else 1

    @property
    def primitive_element(self) -> int:
        for a in range(1, self.q):
            if self.order(a) == self.q - 1:
                return a
        raise FieldError("no primitive element")  # pragma: no cover

    def elements(self):
        return range(self.q)

    def root_of_unity(self, n: int) -> int:
        """A primitive n-th root of unity; requires n | q - 1."""
        if (self.q - 1) % n:
            raise FieldError(f"{self} has no primitive {n}-th root of unity")
        return self.power(self.primitive_element, (self.q - 1) // n)

    # -- vectorised helpers ---------------------------------------------------

    def vadd(self, a, b):
        return self.add[a, b]

    def vsub(self, a, b):
        return self.sub[a, b]

    def vneg(self, a):
        return self.neg[a]

    def vmul(self, a, b):
        return self.mul[a, b]

    def sum(self, arr, axis=None):
        arr = np.asarray(arr, dtype=np.int64)
        if self.k == 1:
            return np.sum(arr, axis=axis) % self.p
        if axis is None:
            arr = arr.reshape(-1)
            axis = 0
        arr = np.moveaxis(arr, axis, 0)
        acc = np.zeros(arr.shape[1:], dtype=np.int64)
        for row in arr:
            acc = self.add[acc, row]
        return acc

    def matmul(self, A, B):
        """Matrix product; batched over leading axes like ``numpy.matmul``."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[-1] != B.shape[-2]:
            raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
        if self.k == 1:
            return _imatmul(A, B) % self.p
        if self.p == 2 and A.shape[-1] <= 16:
            # addition is XOR of the codes
            n = A.shape[-1]
            shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (A.shape[-2], B.shape[-1])
            acc = np.zeros(shape, dtype=np.int64)
            for j in range(n):
                acc ^= self.mul[A[..., :, j, None], B[..., None, j, :]]
            return acc
        # digit-wise integer products, then reduction modulo the modulus
        dA, dB = self._digit_arr[A], self._digit_arr[B]
        k, p = self.k, self.p
        conv = None
        for a in range(k):
            for b in range(k):
                prod = _imatmul(dA[..., a], dB[..., b])
                if conv is None:
                    conv = np.zeros(prod.shape + (2 * k - 1,), dtype=np.int64)
                conv[..., a + b] += prod
        red = _imatmul(conv % p, self._reduce) % p
        return _imatmul(red, self._weights[:, None])[..., 0]

    def matvec(self, A, v):
        return self.matmul(A, np.asarray(v, dtype=np.int64)[:, None])[:, 0]

    def scale(self, c, A):
        return self.mul[c, np.asarray(A, dtype=np.int64)]

    def identity(self, n: int):
        return np.eye(n, dtype=np.int64)

    def zeros(self, *shape):
        return np.zeros(shape, dtype=np.int64)


def _imatmul(A, B):
    """Exact integer matmul through float64 BLAS (entries stay far below 2^53);
    a single matrix against a stack is done as one 2-D product."""
    if A.shape[-1] == 0 or A.size == 0 or B.size == 0:
        return np.matmul(A, B)
    Af, Bf = A.astype(np.float64), B.astype(np.float64)
    if all(d == 1 for d in B.shape[:-2]) and A.ndim >= 2:
        Bm = Bf.reshape(B.shape[-2:])
        out = Af.reshape(-1, A.shape[-1]) @ Bm
        lead = np.broadcast_shapes(A.shape[:-2], B.shape[:-2])
        out = out.reshape(A.shape[:-2] + (A.shape[-2], B.shape[-1]))
        return np.broadcast_to(out, lead + out.shape[-2:]).astype(np.int64)
    if all(d == 1 for d in A.shape[:-2]):
        Am = Af.reshape(A.shape[-2:])
        lead = B.shape[:-2]
        Bt = np.moveaxis(Bf, -2, 0).reshape(B.shape[-2], -1)
        out = (Am @ Bt).reshape((A.shape[-2],) + lead + (B.shape[-1],))
        out = np.moveaxis(out, 0, -2)
        lead2 = np.broadcast_shapes(A.shape[:-2], lead)
        return np.broadcast_to(out, lead2 + out.shape[-2:]).astype(np.int64)
    return np.rint(np.matmul(Af, Bf)).astype(np.int64)


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> GF:
    """Field with the deterministic modulus for (p, k)."""
    return GF(p, k)


class FieldElement:
    """User-facing wrapper around an encoded element."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value):
        if isinstance(value, FieldElement):
            value = value.value
        elif isinstance(value, (list, tuple)):
            value = field.from_coeffs(value)
        else:
            value = int(value)
            if not 0 <= value < field.q:
                value = field.from_int(value)
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements of different fields")
            return other.value
        return self.field.from_int(int(other))

    def __add__(self, other):
        return FieldElement(self.field, int(self.field.add[self.value, self._coerce(other)]))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, int(self.field.sub[self.value, self._coerce(other)]))

    def __rsub__(self, other):
        return FieldElement(self.field, int(self.field.sub[self._coerce(other), self.value]))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg[self.value]))

    def __mul__(self, other):
        return FieldElement(self.field, int(self.field.mul[self.value, self._coerce(other)]))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._coerce(other)).inverse()

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.power(self.value, n))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def coeffs(self):
        return self.field.coeffs(self.value)

    def __repr__(self):
        return f"{self.field}({self.coeffs()})"


# ---------------------------------------------------------------------------
# linear algebra


def _as_matrix(M):
    M = np.array(M, dtype=np.int64)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    return M


def rref(F: GF, M, col_order=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` has the nonzero rows first and
    ``pivots[i]`` is the pivot column of row ``i``.  ``col_order`` changes the
    order in which columns are tried as pivots.
    """
    R = _as_matrix(M).copy()
    rows, cols = R.shape
    order = range(cols) if col_order is None else col_order
    pivots = []
    r = 0
    for c in order:
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul[F.inv(int(R[r, c])), R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if len(hit):
            R[hit] = F.sub[R[hit], F.mul[factors[hit, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, M) -> int:
    M = _as_matrix(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def row_basis(F: GF, M):
    """Basis (as rows) of the row space of ``M``."""
    M = _as_matrix(M)
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1])
    R, piv = rref(F, M)
    return R[: len(piv)]


def nullspace(F: GF, M):
    """Basis of ``{x : M x = 0}`` as rows of an array of shape (d, cols)."""
    M = _as_matrix(M)
    rows, cols = M.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref(F, M)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[j, fc] = 1
        for i, pc in enumerate(piv):
            basis[j, pc] = F.neg[R[i, fc]]
    return basis


nullspace_basis = nullspace


def solve(F: GF, M, b):
    """One solution ``x`` of ``M x = b`` or ``None``."""
    M = _as_matrix(M)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if M.shape[0] != len(b):
        raise DimensionMismatch("right-hand side has wrong length")
    aug = np.concatenate([M, b[:, None]], axis=1)
    R, piv = rref(F, aug)
    cols = M.shape[1]
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, cols]
    return x


def inverse(F: GF, M):
    M = _as_matrix(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionMismatch("inverse of a non-square matrix")
    R, piv = rref(F, np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1))
    if piv[:n] != list(range(n)):
        raise ZeroInverse("singular matrix")
    return R[:, n:]


def is_invertible(F: GF, M) -> bool:
    M = _as_matrix(M)
    return M.shape[0] == M.shape[1] and rank(F, M) == M.shape[0]


def in_span(F: GF, basis, v) -> bool:
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape[0] == 0:
        return not np.any(v)
    return rank(F, np.vstack([basis, v])) == rank(F, basis)


def coordinates(F: GF, basis, v):
    """Coordinates of ``v`` in the (row) ``basis``; ``None`` if outside the span."""
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(v) else None
    return solve(F, basis.T, v)


def min_poly(F: GF, M) -> list[int]:
    """Monic minimal polynomial of a square matrix (ascending coefficients)."""
    M = _as_matrix(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionMismatch("min_poly of a non-square matrix")
    powers = [np.eye(n, dtype=np.int64).reshape(-1)]
    P = np.eye(n, dtype=np.int64)
    while True:
        P = F.matmul(P, M)
        v = P.reshape(-1)
        c = coordinates(F, np.array(powers), v)
        if c is not None:
            return [int(F.neg[x]) for x in c] + [1]
        powers.append(v)


# ---------------------------------------------------------------------------
# univariate polynomials over F (lists of encoded elements, ascending)


def ptrim(f):
    f = [int(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def pdeg(f) -> int:
    return len(ptrim(f)) - 1


def padd(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return ptrim(int(F.add[a, b]) for a, b in zip(f, g))


def psub(F, f, g):
    return padd(F, f, [int(F.neg[c]) for c in g])


def pscale(F, c, f):
    return ptrim(int(F.mul[c, a]) for a in f)


def pmul(F, f, g):
    f, g = ptrim(f), ptrim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = int(F.add[out[i + j], F.mul[a, b]])
    return ptrim(out)


def pdivmod(F, f, g):
    f, g = ptrim(f), ptrim(g)
    if not g:
        raise ZeroPolynomial("division by the zero polynomial")
    inv = F.inv(g[-1])
    quo = [0] * max(len(f) - len(g) + 1, 0)
    f = list(f)
    while len(f) >= len(g):
        c = int(F.mul[f[-1], inv])
        shift = len(f) - len(g)
        quo[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] = int(F.sub[f[shift + i], F.mul[c, gi]])
        f = ptrim(f)
    return ptrim(quo), f


def pmod(F, f, g):
    return pdivmod(F, f, g)[1]


def pmonic(F, f):
    f = ptrim(f)
    if not f:
        return f
    return pscale(F, F.inv(f[-1]), f)


def pgcd(F, f, g):
    f, g = ptrim(f), ptrim(g)
    while g:
        f, g = g, pmod(F, f, g)
    return pmonic(F, f)


def pxgcd(F, f, g):
    """``(d, u, v)`` with ``u f + v g = d`` monic."""
    r0, r1 = ptrim(f), ptrim(g)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        quo, rem = pdivmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, psub(F, s0, pmul(F, quo, s1))
        t0, t1 = t1, psub(F, t0, pmul(F, quo, t1))
    c = F.inv(r0[-1])
    return pscale(F, c, r0), pscale(F, c, s0), pscale(F, c, t0)


def ppowmod(F, f, n: int, m):
    result = [1]
    base = pmod(F, f, m)
    while n:
        if n & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        n >>= 1
    return result


def pderiv(F, f):
    return ptrim(int(F.mul[F.from_int(i), c]) for i, c in enumerate(f) if i > 0)


def peval(F, f, x: int) -> int:
    acc = 0
    for c in reversed(ptrim(f)):
        acc = int(F.add[F.mul[acc, x], c])
    return acc


def _pth_root(F, f):
    # f is a polynomial in x^p; the p-th root of a field element a is a^(q/p)
    e = F.q // F.p
    return ptrim(F.power(c, e) for c in f[:: F.p])


def _squarefree(F, f):
    f = pmonic(F, f)
    out = []
    if pdeg(f) < 1:
        return out
    d = pderiv(F, f)
    if not d:
        return [(g, m * F.p) for g, m in _squarefree(F, _pth_root(F, f))]
    c = pgcd(F, f, d)
    w = pdivmod(F, f, c)[0]
    i = 1
    while pdeg(w) > 0:
        y = pgcd(F, w, c)
        z = pdivmod(F, w, y)[0]
        if pdeg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = pdivmod(F, c, y)[0]
    if pdeg(c) > 0:
        out.extend((g, m * F.p) for g, m in _squarefree(F, _pth_root(F, c)))
    return out


def _ddf(F, f):
    out = []
    h = [0, 1]
    d = 0
    while pdeg(f) >= 2 * (d + 1):
        d += 1
        h = ppowmod(F, h, F.q, f)
        g = pgcd(F, f, psub(F, h, [0, 1]))
        if pdeg(g) > 0:
            out.append((g, d))
            f = pdivmod(F, f, g)[0]
            h = pmod(F, h, f)
    if pdeg(f) > 0:
        out.append((f, pdeg(f)))
    return out


def _monic_polys(F, d):
    for tail in product(range(F.q), repeat=d):
        yield list(tail) + [1]


def _edf(F, f, d, rng):
    n = pdeg(f)
    if n == d:
        return [f]
    for _ in range(64):
        a = ptrim(rng.randrange(F.q) for _ in range(n))
        if pdeg(a) < 1:
            continue
        if F.p == 2:
            b, t = a, a
            for _ in range(F.k * d - 1):
                t = pmod(F, pmul(F, t, t), f)
                b = padd(F, b, t)
        else:
            b = psub(F, ppowmod(F, a, (F.q**d - 1) // 2, f), [1])
        g = pgcd(F, f, b)
        if 0 < pdeg(g) < n:
            return _edf(F, g, d, rng) + _edf(F, pdivmod(F, f, g)[0], d, rng)
    # exhaustive fallback for the tiny degrees used here
    for g in _monic_polys(F, d):
        if not pmod(F, f, g):
            return [g] + _edf(F, pdivmod(F, f, g)[0], d, rng)
    raise FieldError("equal-degree factorisation failed")  # pragma: no cover


def factor(F: GF, f, seed: int = 0):
    """Factor ``f`` into monic irreducibles: returns ``(lead, [(g, mult), ...])``.

    Squarefree decomposition, distinct-degree, then equal-degree splitting
    with a seeded generator and an exhaustive fallback.
    """
    f = ptrim(f)
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    lead = f[-1]
    rng = random.Random(seed)
    factors = []
    for g, m in _squarefree(F, f):
        for h, d in _ddf(F, g):
            for irr in _edf(F, pmonic(F, h), d, rng):
                factors.append((irr, m))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0][::-1], fm[1]))
    return lead, factors


def factor_squarefree(F: GF, f, seed: int = 0):
    """Irreducible factors with multiplicity (leading unit dropped)."""
    return factor(F, f, seed)[1]


def is_irreducible(F: GF, f) -> bool:
    f = ptrim(f)
    if pdeg(f) < 1:
        return False
    _, fs = factor(F, f)
    return len(fs) == 1 and fs[0][1] == 1


def expand(F: GF, lead: int, factors) -> list[int]:
    out = [lead]
    for g, m in factors:
        for _ in range(m):
            out = pmul(F, out, g)
    return out


def extension_degree_for_exponent(p: int, exponent: int) -> int:
    """Least k with exponent | p^k - 1 (exponent coprime to p)."""
    if exponent % p == 0:
        raise FieldError("exponent must be coprime to the characteristic")
    k = 1
    while (p**k - 1) % exponent:
        k += 1
    return k


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
