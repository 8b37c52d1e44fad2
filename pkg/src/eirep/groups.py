"""Finite groups given by Cayley tables (elements 0..n-1)."""
from __future__ import annotations

from functools import cached_property
from math import gcd


class GroupError(ValueError):
    pass


class Group:
    """A finite group as a multiplication table ``table[a][b] = a*b``."""

    def __init__(self, table, names=None):
        self.table = [list(map(int, row)) for row in table]
        n = len(self.table)
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        if any(len(row) != n for row in self.table):
            raise GroupError("Cayley table must be square")
        ids = [e for e in range(n) if all(self.table[e][b] == b == self.table[b][e] for b in range(n))]
        if not ids:
            raise GroupError("no identity element")
        self.identity = ids[0]
        for a in range(n):
            if sorted(self.table[a]) != list(range(n)):
                raise GroupError(f"row {a} is not a permutation")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupError(f"not associative at {a},{b},{c}")

    @classmethod
    def cyclic(cls, n: int) -> "Group":
        return cls([[(a + b) % n for b in range(n)] for a in range(n)])

    @classmethod
    def direct_product(cls, G: "Group", H: "Group") -> "Group":
        m = H.order
        table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.order * m)]
                 for a in range(G.order * m)]
        names = [f"({g},{h})" for g in G.names for h in H.names]
        return cls(table, names)

    @classmethod
    def symmetric(cls, n: int) -> "Group":
        from itertools import permutations
        perms = sorted(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # (a*b)(i) = a(b(i))
        table = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
        return cls(table, ["".join(map(str, p)) for p in perms])

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> list[int]:
        return [self.table[a].index(self.identity) for a in range(self.order)]

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in range(self.order))

    @cached_property
    def conjugacy_classes(self) -> list[list[int]]:
        seen, classes = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.table[self.table[g][a]][self.inverses[g]] for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def subgroup_generated(self, gens) -> set[int]:
        sub = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
        return sub

    @cached_property
    def generators(self) -> list[int]:
        """A small generating set, chosen greedily in element order (larger
        element orders first)."""
        gens: list[int] = []
        sub = {self.identity}
        for a in sorted(range(self.order), key=lambda a: (-self.element_order(a), a)):
            if a not in sub:
                gens.append(a)
                sub = self.subgroup_generated(gens)
        return gens


def p_part(n: int, p: int) -> int:
    if p == 0:
        return 1
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def group_simple_count(G: Group, p: int) -> int:
    """Number of conjugacy classes of p-regular elements (all elements when p = 0)."""
    return sum(1 for cls in G.conjugacy_classes if p == 0 or G.element_order(cls[0]) % p != 0)


def is_trivial_or_p_group(G: Group, p: int) -> bool:
    return G.order == 1 or (p > 1 and p_part(G.order, p) == G.order)


def sylow_p_cyclic(G: Group, p: int) -> bool:
    """A Sylow p-subgroup is cyclic iff some element has order |G|_p."""
    target = p_part(G.order, p)
    if target == 1:
        return True
    return any(G.element_order(a) == target for a in range(G.order))
