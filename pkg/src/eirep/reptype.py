"""Representation type of finite EI-categories: an ordered list of rules, each
either conclusive (Finite / Infinite with a witness) or declining with a reason.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linfield as lf
from .algebra import (basic_algebra, category_algebra, corner_algebra, ext_quiver, ideal_product,
                      primitive_idempotents, StructureAlgebra)
from .endotriv import endotrivialize
from .fincat import (CategoryError, FiniteCategory, action_properties, hom_action, is_ei,
                     is_endotrivial, object_poset, skeletalize)
from .groups import p_part, sylow_p_cyclic
from .presentations import (NotFiniteDimensionalWithinBound, Quiver, QuiverPresentation,
                            finite_string_count, has_band, is_string_algebra, presented_algebra,
                            separated_quiver, underlying_graph_class, verify_presentation)

FINITE, INFINITE, UNKNOWN = "Finite", "Infinite", "Unknown"

RULE_ORDER = (
    "group-objects",
    "parallel-kronecker",
    "endotrivialization",
    "coprime-hereditary",
    "string",
    "two-simples",
    "free-action",
    "separated-quiver",
    "oracle-family",
)


@dataclass
class RuleOutcome:
    rule: str
    verdict: str | None          # None when the rule declines
    witness: dict = field(default_factory=dict)
    reason: str = ""

    def to_json(self) -> dict:
        return {"rule": self.rule, "verdict": self.verdict, "witness": self.witness, "reason": self.reason}


@dataclass
class RepTypeVerdict:
    verdict: str
    rule: str | None
    witness: dict
    field: lf.GF
    regime: str
    notes: list = field(default_factory=list)
    attempted: list = field(default_factory=list)   # RuleOutcome for every rule tried

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "rule": self.rule,
            "witness": self.witness,
            "field": {"p": self.field.p, "k": self.field.k},
            "regime": self.regime,
            "notes": list(self.notes),
            "attempted": [o.to_json() for o in self.attempted],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False, default=str)

    def conflicts(self) -> list:
        """Pairs of conclusive rules that disagree (all-rules mode)."""
        concl = [o for o in self.attempted if o.verdict in (FINITE, INFINITE)]
        return [(a.rule, b.rule) for i, a in enumerate(concl) for b in concl[i + 1:] if a.verdict != b.verdict]


# ---------------------------------------------------------------------------
# two-simples parameters and finite lists


@dataclass(frozen=True)
class TwoSimplesParameters:
    """Bound quiver with a loop α at x (α^m = 0), an arrow β: x -> y and a loop
    γ at y (γ^t = 0), with zero relations βα^n and γ^sβ and, in template (ii),
    the commutation relation γ^e β = β α^f."""

    m: int
    n: int
    s: int
    t: int
    p: int
    e: int | None = None
    f: int | None = None

    def __post_init__(self):
        for big, small in ((self.m, self.n), (self.t, self.s)):
            if small < 1 or big % small:
                raise ValueError(f"{small} does not divide {big}")
        if (self.e is None) != (self.f is None):
            raise ValueError("e and f come together")
        if self.e is not None and (self.t % self.e or self.m % self.f):
            raise ValueError("need e | t and f | m")

    @property
    def template(self) -> str:
        if self.e is not None:
            return "ii"
        return "i" if self.m > 1 and self.t > 1 else "one-loop"

    def dual(self) -> "TwoSimplesParameters":
        return TwoSimplesParameters(self.t, self.s, self.n, self.m, self.p, self.f, self.e)

    def presentation(self) -> QuiverPresentation:
        arrows = [("b", "x", "y")]
        rels = []
        if self.m > 1:
            arrows.append(("a", "x", "x"))
            rels.append(f"a^{self.m}")
            if self.n < self.m:
                rels.append(f"b a^{self.n}")
        if self.t > 1:
            arrows.append(("g", "y", "y"))
            rels.append(f"g^{self.t}")
            if self.s < self.t:
                rels.append(f"g^{self.s} b")
        if self.e is not None:
            rels.append(f"g^{self.e} b - b a^{self.f}")
        return QuiverPresentation.build(["x", "y"], arrows, rels)

    def to_json(self) -> dict:
        d = {"m": self.m, "n": self.n, "s": self.s, "t": self.t, "p": self.p, "template": self.template}
        if self.e is not None:
            d.update(e=self.e, f=self.f)
        return d


def _one_loop_finite(m, n) -> bool:
    if m == 1:
        return True
    if m == 2:
        return n in (1, 2)
    if m == 3:
        return n in (1, 3)
    if m == 4:
        return n in (1, 2)
    return n == 1


def _is_power_of_two(t) -> bool:
    return t >= 1 and t & (t - 1) == 0


def _small_side(m, n, s, t) -> bool:
    return m in (1, 2) and n in (1, 2) and s in (1, 2) and _is_power_of_two(t)


def parameters_finite(P: TwoSimplesParameters) -> bool:
    """Membership of the parameters (or their dual) in the finite lists."""
    cands = [P, P.dual()]
    if P.m == 1 or P.t == 1:
        return any(c.t == 1 and _one_loop_finite(c.m, c.n) for c in cands)
    if P.e is None:
        for c in cands:
            free = c.n == c.m >= 2 and c.s == c.t >= 2
            if c.n == 1 and c.s == 1:
                return True
            if _small_side(c.m, c.n, c.s, c.t) and not free:
                return True
        return False
    if (P.m, P.n, P.s, P.t) == (3, 3, 3, 3):
        return True
    return any(_small_side(c.m, c.n, c.s, c.t) for c in cands)


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def _is_p_power(m, p) -> bool:
    return m >= 1 and p_part(m, p) == m


def candidate_parameters(m: int, t: int, p: int):
    """Template (i) first, then (ii); smaller parameters first."""
    out = []
    for n in _divisors(m):
        for s in _divisors(t):
            out.append(TwoSimplesParameters(m, n, s, t, p))
    for n in _divisors(m):
        for s in _divisors(t):
            for e in _divisors(t):
                for f in _divisors(m):
                    if e < s and f < n:
                        out.append(TwoSimplesParameters(m, n, s, t, p, e, f))
    return out


# ---------------------------------------------------------------------------
# analysis context


class Context:
    """Lazily computed data shared by the rules."""

    def __init__(self, C: FiniteCategory, F: lf.GF, seed: int = 0):
        self.C = C
        self.F = F
        self.p = F.p
        self.seed = seed

    @cached_property
    def algebra(self) -> StructureAlgebra:
        return category_algebra(self.C, self.F)

    @cached_property
    def decomposition(self):
        return primitive_idempotents(self.algebra, seed=self.seed)

    @cached_property
    def quiver(self):
        return ext_quiver(self.decomposition)

    @cached_property
    def basic(self):
        return basic_algebra(self.decomposition)

    @cached_property
    def rad_square_zero(self) -> bool:
        R = self.decomposition.radical
        return len(R) == 0 or len(ideal_product(self.decomposition.algebra, R, R)) == 0

    @cached_property
    def aut_orders(self) -> dict:
        return {x: len(self.C.endo(x)) for x in self.C.objects}

    @cached_property
    def ext_as_quiver(self) -> Quiver:
        return Quiver.from_multiplicities(self.quiver.vertices, self.quiver.arrows)

    def block_algebras(self):
        """(vertex labels, block algebra) for each connected component of the
        Ext-quiver, taken as corners of the basic algebra."""
        B = self.basic.algebra
        idem = dict(B.base_idempotents)
        out = []
        for comp in self.quiver.components():
            e = np.zeros(B.dim, dtype=np.int64)
            for v in comp:
                e = B.add(e, idem[v])
            cor = corner_algebra(B, e, [(v, idem[v]) for v in comp])
            out.append((comp, cor.algebra))
        return out


def _regime(C, p) -> str:
    div = [x for x in C.objects if len(C.endo(x)) % p == 0]
    if not div:
        return f"p={p} divides no automorphism group order"
    return f"p={p} divides |Aut| at {', '.join(map(str, div))}"


# ---------------------------------------------------------------------------
# rules


def rule_group_objects(ctx: Context) -> RuleOutcome:
    name = "group-objects"
    for x in ctx.C.objects:
        G, _ = ctx.C.automorphism_group(x)
        if G.order % ctx.p == 0 and not sylow_p_cyclic(G, ctx.p):
            return RuleOutcome(name, INFINITE, {"object": x, "aut_order": G.order, "p": ctx.p,
                                                "sylow_p_order": p_part(G.order, ctx.p)},
                               "group algebra of Aut(x) has a non-cyclic Sylow p-subgroup")
    return RuleOutcome(name, None, reason="every automorphism group has cyclic Sylow p-subgroups")


def rule_parallel_kronecker(ctx: Context) -> RuleOutcome:
    name = "parallel-kronecker"
    Q = endotrivialize(ctx.C).quotient
    for x in Q.objects:
        for y in Q.objects:
            if x != y and len(Q.hom(x, y)) >= 2:
                return RuleOutcome(name, INFINITE, {"x": x, "y": y, "classes": Q.hom(x, y)[:2]},
                                   "two parallel morphisms in the endotrivialization")
    return RuleOutcome(name, None, reason="the endotrivialization has no parallel morphisms")


def rule_endotrivialization(ctx: Context) -> RuleOutcome:
    name = "endotrivialization"
    C = ctx.C
    if not is_endotrivial(C):
        return RuleOutcome(name, None, reason="C has non-trivial automorphisms")
    if any(len(C.hom(x, y)) > 1 for x in C.objects for y in C.objects if x != y):
        return RuleOutcome(name, None, reason="parallel morphisms; C is not a poset")
    P = object_poset(C)
    if P.is_union_of_chains():
        return RuleOutcome(name, FINITE, {"poset": "disjoint union of chains",
                                          "components": P.components()},
                           "incidence algebra of a union of chains is a product of A_n path algebras")
    hasse = P.hasse()
    Hq = Quiver(tuple(P.elements), tuple((f"{a}<{b}", a, b) for a, b in hasse))
    forest = all(len([h for h in hasse if h[0] in comp and h[1] in comp]) == len(comp) - 1
                 for comp in P.components())
    if forest:
        gc = underlying_graph_class(Hq)
        verdict = FINITE if gc.tag == "DynkinADE" else INFINITE
        return RuleOutcome(name, verdict, {"hasse_graph": gc.names(), "graph_class": gc.tag},
                           "Hasse diagram is a forest, so the incidence algebra is its path algebra")
    return RuleOutcome(name, None, reason="Hasse diagram has cycles; incidence algebra not decided")


def rule_coprime_hereditary(ctx: Context) -> RuleOutcome:
    name = "coprime-hereditary"
    bad = [x for x, o in ctx.aut_orders.items() if o % ctx.p == 0]
    if bad:
        return RuleOutcome(name, None, reason=f"p divides |Aut| at {bad}")
    Q = ctx.ext_as_quiver
    if not Q.is_acyclic():
        return RuleOutcome(name, None, reason="Ext-quiver has oriented cycles")
    pres = QuiverPresentation(Q, [])
    v = verify_presentation(ctx.algebra, pres, seed=ctx.seed)
    if not v.ok:
        return RuleOutcome(name, None, reason=f"not the path algebra of its Ext-quiver: {v.reason}")
    gc = underlying_graph_class(Q)
    verdict = FINITE if gc.tag == "DynkinADE" else INFINITE
    return RuleOutcome(name, verdict, {"graph_class": gc.tag, "components": gc.names(),
                                       "presentation": pres.to_json()},
                       "hereditary; Gabriel's theorem on the Ext-quiver")


def _candidate_presentations(ctx: Context):
    """Presentations worth verifying for the whole basic algebra."""
    Q = ctx.ext_as_quiver
    out = []
    if Q.is_acyclic():
        out.append(("path-algebra", QuiverPresentation(Q, []), None))
    if ctx.rad_square_zero:
        rels = []
        for b, sb, tb in Q.arrows:
            for a, sa, ta in Q.arrows:
                if ta == sb:
                    rels.append(f"{b} {a}")
        out.append(("radical-square-zero", QuiverPresentation(Q, rels), None))
    two = _two_vertex_shape(ctx.quiver)
    if two is not None:
        x, y = two
        B = ctx.basic.algebra
        idem = dict(B.base_idempotents)
        m = _corner_dim(B, idem[x])
        t = _corner_dim(B, idem[y])
        if _is_p_power(m, ctx.p) and _is_p_power(t, ctx.p):
            for P in candidate_parameters(m, t, ctx.p):
                out.append(("two-simples", P.presentation(), P))
    one = _one_vertex_shape(ctx.quiver)
    if one is not None:
        B = ctx.basic.algebra
        m = B.dim
        pres = QuiverPresentation.build(["x"], [("a", "x", "x")], [f"a^{m}"]) if m > 1 else \
            QuiverPresentation.build(["x"], [], [])
        out.append(("uniserial", pres, None))
    return out


def _corner_dim(B, e) -> int:
    return corner_algebra(B, e).algebra.dim


def _two_vertex_shape(EQ):
    """(source, target) when the quiver has two vertices, one arrow between
    them and at most one loop at each vertex."""
    if len(EQ.vertices) != 2:
        return None
    u, v = EQ.vertices
    if any(EQ.loops(w) > 1 for w in (u, v)):
        return None
    fw, bw = EQ.multiplicity(u, v), EQ.multiplicity(v, u)
    if (fw, bw) == (1, 0):
        return u, v
    if (fw, bw) == (0, 1):
        return v, u
    return None


def _one_vertex_shape(EQ):
    if len(EQ.vertices) == 1 and EQ.loops(EQ.vertices[0]) <= 1:
        return EQ.vertices[0]
    return None


def _find_presentation(ctx: Context, algebra=None, monomial_only=False):
    algebra = ctx.algebra if algebra is None else algebra
    B = ctx.basic.algebra
    for kind, pres, params in _candidate_presentations(ctx):
        if monomial_only and not pres.is_monomial():
            continue
        try:
            P = presented_algebra(pres, B.F)
        except NotFiniteDimensionalWithinBound:
            continue
        if P.dim != B.dim:
            continue
        v = verify_presentation(algebra, pres, seed=ctx.seed)
        if v.ok:
            return kind, pres, params, v
    return None


def rule_string(ctx: Context) -> RuleOutcome:
    name = "string"
    found = _find_presentation(ctx, monomial_only=True)
    if found is None:
        return RuleOutcome(name, None, reason="no verified monomial presentation among the candidates")
    kind, pres, params, _v = found
    if not is_string_algebra(pres):
        return RuleOutcome(name, None, reason="verified monomial presentation is not a string algebra")
    wit = {"presentation": pres.to_json(), "source": kind}
    count = finite_string_count(pres)
    if count is not None:
        wit["string_count"] = count
        return RuleOutcome(name, FINITE, wit, "string algebra with finitely many strings, hence no bands")
    band = has_band(pres)
    if band.found:
        wit["band"] = band.text()
        return RuleOutcome("string-band", INFINITE, wit, "string algebra with a band")
    return RuleOutcome(name, None, reason=f"infinitely many strings but no band up to length {band.bound}")


def _simple_total(ctx: Context) -> int:
    from .groups import group_simple_count
    return sum(group_simple_count(ctx.C.automorphism_group(x)[0], ctx.p) for x in ctx.C.objects)


def rule_two_simples(ctx: Context) -> RuleOutcome:
    name = "two-simples"
    C, p = ctx.C, ctx.p
    total = _simple_total(ctx)
    if total == 2 and len(C.objects) == 1:
        x = C.objects[0]
        G, _ = C.automorphism_group(x)
        ok = sylow_p_cyclic(G, p)
        return RuleOutcome(name, FINITE if ok else INFINITE,
                           {"object": x, "p_regular_classes": 2, "sylow_cyclic": ok},
                           "one object with two simple modules")
    if total == 2 and len(C.objects) == 2:
        x, y = C.objects
        if not C.hom(x, y):
            x, y = y, x
        if C.hom(x, y):
            orbits = hom_action(C, x, y).orbits()
            if len(orbits) > 1:
                return RuleOutcome(name, INFINITE, {"x": x, "y": y, "orbits": orbits},
                                   "more than one orbit on C(x, y)")
        found = _find_presentation(ctx)
        if found is None or found[2] is None:
            return RuleOutcome(name, None, reason="no verified two-simples presentation")
        P = found[2]
        fin = parameters_finite(P)
        return RuleOutcome(name, FINITE if fin else INFINITE,
                           {"parameters": P.to_json(), "presentation": found[1].to_json()},
                           "parameters " + ("in" if fin else "outside") + " the finite lists")
    return _two_simples_blocks(ctx)


def _two_simples_blocks(ctx: Context) -> RuleOutcome:
    name = "two-simples-blocks"
    blocks = ctx.block_algebras()
    if any(len(verts) > 2 for verts, _ in blocks):
        return RuleOutcome("two-simples", None, reason="a block has more than two simple modules")
    EQ = ctx.quiver
    results = []
    for verts, Bb in blocks:
        if len(verts) == 1:
            loops = EQ.loops(verts[0])
            if loops == 0:
                results.append({"block": verts, "kind": "simple", "finite": True})
                continue
            if loops > 1:
                return RuleOutcome("two-simples", None, reason=f"block {verts} has several loops")
            pres = QuiverPresentation.build(["x"], [("a", "x", "x")], [f"a^{Bb.dim}"])
            v = verify_presentation(Bb, pres, seed=ctx.seed)
            if not v.ok:
                return RuleOutcome("two-simples", None, reason=f"block {verts} is not uniserial")
            results.append({"block": verts, "kind": "uniserial", "length": Bb.dim, "finite": True})
            continue
        sub = type(EQ)(verts, {k: m for k, m in EQ.arrows.items() if k[0] in verts and k[1] in verts})
        shape = _two_vertex_shape(sub)
        if shape is None:
            return RuleOutcome("two-simples", None, reason=f"block {verts} is not of two-simples shape")
        idem = dict(Bb.base_idempotents)
        m = _corner_dim(Bb, idem[shape[0]])
        t = _corner_dim(Bb, idem[shape[1]])
        if not (_is_p_power(m, ctx.p) and _is_p_power(t, ctx.p)):
            return RuleOutcome("two-simples", None, reason=f"block {verts}: loop lengths {m}, {t} not powers of p")
        hit = None
        for P in candidate_parameters(m, t, ctx.p):
            pres = P.presentation()
            if presented_algebra(pres, Bb.F).dim != Bb.dim:
                continue
            if verify_presentation(Bb, pres, seed=ctx.seed).ok:
                hit = P
                break
        if hit is None:
            return RuleOutcome("two-simples", None, reason=f"block {verts}: no verified template")
        results.append({"block": verts, "kind": "two-simples", "parameters": hit.to_json(),
                        "finite": parameters_finite(hit)})
    fin = all(r["finite"] for r in results)
    return RuleOutcome(name, FINITE if fin else INFINITE, {"blocks": results},
                       "every block has at most two simples and is classified by the finite lists")


def rule_free_action(ctx: Context) -> RuleOutcome:
    name = "free-action"
    C = ctx.C
    for x in C.objects:
        for y in C.objects:
            if x == y or not C.hom(x, y):
                continue
            if len(C.endo(x)) == 1 or len(C.endo(y)) == 1:
                continue
            a = hom_action(C, x, y)
            props = action_properties(a)
            if props["is_free"]:
                return RuleOutcome(name, INFINITE, {"x": x, "y": y, **props,
                                                    "stabilizer_sizes": [len(a.stabilizer(f)) for f in a.hom]},
                                   "Aut(x) x Aut(y) acts freely on C(x, y)")
    return RuleOutcome(name, None, reason="no pair of non-trivial automorphism groups acts freely")


def rule_separated_quiver(ctx: Context) -> RuleOutcome:
    name = "separated-quiver"
    S = separated_quiver(ctx.ext_as_quiver)
    gc = underlying_graph_class(S)
    wit = {"separated_components": gc.names(), "graph_class": gc.tag}
    if gc.tag != "DynkinADE":
        return RuleOutcome(name, INFINITE, wit, "A/rad^2 has a non-Dynkin separated quiver")
    if ctx.rad_square_zero:
        return RuleOutcome(name, FINITE, wit, "rad^2 = 0 and the separated quiver is Dynkin")
    return RuleOutcome(name, None, reason="separated quiver is Dynkin but rad^2 != 0")


def oracle_source(ctx: Context, dimvector):
    """The category itself for a per-object dimension vector; the presentation
    of A/rad^2 on the Ext-quiver for a per-vertex one (a quotient of kC, so
    growth there is growth for kC)."""
    if len(dimvector) == len(ctx.C.objects):
        return ctx.C, "category"
    Q = ctx.ext_as_quiver
    if len(dimvector) != len(Q.vertices):
        raise ValueError(f"dimension vector must have {len(ctx.C.objects)} or {len(Q.vertices)} entries")
    rels = [f"{b} {a}" for b, sb, tb in Q.arrows for a, sa, ta in Q.arrows if ta == sb]
    return QuiverPresentation(Q, rels), "radical-square quotient"


def rule_oracle_family(ctx: Context, dimvector=None, threshold: int = 2, budget: int = 2**30) -> RuleOutcome:
    name = "oracle-family"
    if dimvector is None:
        return RuleOutcome(name, None, reason="no dimension vector requested")
    from .oracle import BudgetExceeded, count_indecomposables
    source, kind = oracle_source(ctx, dimvector)
    F1 = ctx.F
    F2 = lf.field_make(F1.p, 2 * F1.k)
    try:
        c1 = count_indecomposables(source, dimvector, F1, budget=budget)
        c2 = count_indecomposables(source, dimvector, F2, budget=budget)
    except BudgetExceeded as err:
        return RuleOutcome(name, None, reason=f"oracle budget exceeded: {err}")
    wit = {"dimvector": list(dimvector), "source": kind,
           "counts": {f"F{F1.q}": c1, f"F{F2.q}": c2}}
    if c2 - c1 >= threshold:
        return RuleOutcome(name, INFINITE, wit, "indecomposable count grows with the field")
    return RuleOutcome(name, None, wit, "no growth beyond the threshold")


RULES = {
    "group-objects": rule_group_objects,
    "parallel-kronecker": rule_parallel_kronecker,
    "endotrivialization": rule_endotrivialization,
    "coprime-hereditary": rule_coprime_hereditary,
    "string": rule_string,
    "two-simples": rule_two_simples,
    "free-action": rule_free_action,
    "separated-quiver": rule_separated_quiver,
    "oracle-family": rule_oracle_family,
}


# ---------------------------------------------------------------------------
# engine


def coprime_field(C: FiniteCategory) -> lf.GF:
    """Smallest prime dividing no |Aut(x)|, extended until it contains the
    roots of unity needed by every automorphism group."""
    exps = 1
    orders = []
    for x in C.objects:
        G, _ = C.automorphism_group(x)
        orders.append(G.order)
        exps = lf.lcm(exps, G.exponent)
    p = 2
    while any(o % p == 0 for o in orders) or not lf.is_prime(p):
        p += 1
    return lf.field_make(p, lf.extension_degree_for_exponent(p, exps))


def resolve_field(C: FiniteCategory, p: int, k: int = 1):
    if p == 0:
        F = coprime_field(C)
        return F, f"characteristic 0 substituted by F_{F.q} (p={F.p} divides no |Aut|)"
    F = lf.field_make(p, k)
    return F, _regime(C, p)


def classify(C: FiniteCategory, p: int | lf.GF, k: int = 1, *, all_rules: bool = False,
             oracle_dim=None, seed: int = 0) -> RepTypeVerdict:
    """Apply the rules in order; the first conclusive one decides.  With
    ``all_rules`` every rule is run and recorded (for conflict checks)."""
    if not is_ei(C):
        raise CategoryError("classification needs an EI-category")
    S, _ = skeletalize(C)
    if isinstance(p, lf.GF):
        F = p
        regime = _regime(S, F.p)
    else:
        F, regime = resolve_field(S, p, k)
    ctx = Context(S, F, seed)
    attempted = []
    decided = None
    for name in RULE_ORDER:
        if name == "oracle-family":
            out = rule_oracle_family(ctx, oracle_dim)
        else:
            out = RULES[name](ctx)
        attempted.append(out)
        if out.verdict is not None and decided is None:
            decided = out
            if not all_rules:
                break
    notes = []
    if S is not C:
        notes.append(f"skeleton on objects {list(S.objects)}")
    if any(o.rule.startswith("two-simples") and o.verdict for o in attempted):
        notes.append("template (ii) list includes the literal (3,3,3,3) configuration only")
    if decided is None:
        return RepTypeVerdict(UNKNOWN, None, {}, F, regime, notes, attempted)
    return RepTypeVerdict(decided.verdict, decided.rule, decided.witness, F, regime, notes, attempted)


def recheck(C: FiniteCategory, verdict: RepTypeVerdict, seed: int = 0) -> bool:
    """Re-derive the deciding rule's outcome from the input alone."""
    if verdict.rule is None:
        return verdict.verdict == UNKNOWN
    S, _ = skeletalize(C)
    ctx = Context(S, verdict.field, seed)
    base = {"string-band": "string", "two-simples-blocks": "two-simples"}.get(verdict.rule, verdict.rule)
    if base == "oracle-family":
        out = rule_oracle_family(ctx, verdict.witness.get("dimvector"))
    else:
        out = RULES[base](ctx)
    return out.verdict == verdict.verdict and out.witness == verdict.witness
