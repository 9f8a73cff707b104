"""Seeded generation of small test instances.

Everything is driven by one :class:`random.Random`, so a seed and a config
determine the instance stream exactly.  Sizes are kept at desk scale: finite
monoids of order at most 4, at most 3 free generators.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .category import ChaoticCat, DeloopCat, DiscreteCat, InducedCat, Morphism, PermCat, terminal
from .monoid import (
    CoproductMonoid, FiniteMonoid, FreeMonoid, Monoid, MonoidHom, additive_group, codiagonal,
    compose_homs, constant_unit_hom, cyclic_group, free_monoid, identity_hom, inclusions,
    product_monoid, trivial_monoid,
)
from .modelcat import FreeCofibrationDatum, free_cofibration, payload_inclusion
from .smfunctor import SmFunctor, transport_lambda


@dataclass
class GeneratorConfig:
    seed: int = 0
    max_finite_order: int = 4
    max_free_generators: int = 3
    depth: int = 3
    weights: dict = field(default_factory=lambda: {"discrete": 1, "chaotic": 2, "deloop": 2,
                                                   "induced": 1})

    def __post_init__(self):
        if not 1 <= self.max_finite_order <= 4:
            raise ValueError("max_finite_order must be between 1 and 4")
        if not 0 <= self.max_free_generators <= 3:
            raise ValueError("max_free_generators must be between 0 and 3")
        if not 0 <= self.depth <= 4:
            raise ValueError("depth must be between 0 and 4")
        self.seed &= (1 << 64) - 1


# ------------------------------------------------------------ monoid library


def semilattice() -> FiniteMonoid:
    return FiniteMonoid(["e", "z"], "e", {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z",
                                          ("z", "z"): "z"}, name="S2")


def left_zero() -> FiniteMonoid:
    """``{e, l, r}`` with ``xy = x`` for non-units; not commutative."""
    els = ["e", "l", "r"]
    table = {}
    for x in els:
        for y in els:
            table[x, y] = y if x == "e" else x
    return FiniteMonoid(els, "e", table, name="L2")


@lru_cache(maxsize=None)
def finite_library() -> tuple:
    z2 = cyclic_group(2)
    return (trivial_monoid(), z2, semilattice(), cyclic_group(3), left_zero(), cyclic_group(4),
            product_monoid(z2, z2))


def groups() -> tuple:
    return (additive_group(1), additive_group(2), additive_group(3))


def _order(m: Monoid) -> int:
    return len(m.elements) if isinstance(m, FiniteMonoid) else 0


@lru_cache(maxsize=None)
def _homs_cached(dom: FiniteMonoid, cod: FiniteMonoid) -> tuple:
    others = [x for x in dom.elements if x != dom.unit]
    found = []
    for images in itertools.product(cod.elements, repeat=len(others)):
        table = {dom.unit: cod.unit, **dict(zip(others, images))}
        h = MonoidHom(dom, cod, table)
        if h.law_violation() is None:
            found.append(h)
    return tuple(found)


def finite_homs(dom: FiniteMonoid, cod: FiniteMonoid, surjective=False) -> list:
    """All homs by brute force (orders <= 4)."""
    homs = list(_homs_cached(dom, cod))
    if surjective:
        homs = [h for h in homs if set(h.assignment.values()) >= set(cod.elements)]
    return homs


def _surjections() -> list:
    lib = finite_library()
    return [(m, n, h) for m in lib for n in lib for h in finite_homs(m, n, surjective=True)]


class InstanceGenerator:
    def __init__(self, cfg: GeneratorConfig | None = None):
        self.cfg = cfg or GeneratorConfig()
        self.rng = random.Random(self.cfg.seed)

    # -- monoids
    def finite_monoid(self, commutative=False, max_order=None) -> FiniteMonoid:
        cap = min(max_order or 4, self.cfg.max_finite_order)
        pool = [m for m in finite_library() if _order(m) <= cap
                and (not commutative or m.is_commutative())]
        return self.rng.choice(pool)

    def generators(self, k_max=None, prefix="v") -> list:
        k_max = min(k_max or self.cfg.max_free_generators, self.cfg.max_free_generators)
        k = self.rng.randint(1, max(1, k_max)) if k_max else 0
        return [f"{prefix}{i}" if k > 1 else prefix for i in range(k)]

    def group(self, max_order=3) -> FiniteMonoid:
        return self.rng.choice([g for g in groups() if len(g.elements) <= max_order])

    # -- categories
    def category(self) -> PermCat:
        w = self.cfg.weights
        kinds = sorted(w)
        kind = self.rng.choices(kinds, weights=[w[k] for k in kinds])[0]
        if kind == "discrete":
            if self.rng.random() < 0.5 or not self.cfg.max_free_generators:
                return DiscreteCat(self.finite_monoid(commutative=True))
            return DiscreteCat(free_monoid(["s"]))
        if kind == "chaotic":
            r = self.rng.random()
            if r < 0.5 or not self.cfg.max_free_generators:
                return ChaoticCat(self.finite_monoid())
            if r < 0.75:
                return ChaoticCat(free_monoid(self.generators(2, "x")))
            return ChaoticCat(CoproductMonoid(self.finite_monoid(max_order=2), free_monoid(["v"])))
        if kind == "deloop":
            H = self.group()
            if self.rng.random() < 0.5:
                M = self.finite_monoid(commutative=True, max_order=max(1, 6 // len(H.elements)))
                return DeloopCat(M, H)
            M = self.finite_monoid(max_order=max(1, 6 // len(H.elements)))
            return DeloopCat(M, H, connected=True)
        D = self.small_target()
        M = self.finite_monoid(max_order=3)
        homs = finite_homs(M, D.objects) if isinstance(D.objects, FiniteMonoid) else []
        q = self.rng.choice(homs) if homs else constant_unit_hom(M, D.objects)
        return InducedCat(M, D, q, None, name=f"Induced({M!r} over {D!r})")

    def small_target(self) -> PermCat:
        H = self.group()
        N = self.finite_monoid(max_order=2)
        return self.rng.choice([ChaoticCat(N), DeloopCat(N, H, connected=True), terminal()])

    # -- functors
    def strict_functor(self) -> SmFunctor:
        """A strict functor between finite-object categories of one family."""
        kind = self.rng.choice(["chaotic", "deloop", "chaotic_deloop", "discrete"])
        M = self.finite_monoid(commutative=kind in ("deloop", "discrete"))
        N = self.finite_monoid(commutative=kind in ("deloop", "discrete"))
        h = self.rng.choice(finite_homs(M, N))
        if kind == "chaotic":
            C, D = ChaoticCat(M), ChaoticCat(N)
            return SmFunctor(C, D, h, lambda f: Morphism(h(f.source), h(f.target)), None, name="F")
        if kind == "discrete":
            D = self.rng.choice([DiscreteCat(N), ChaoticCat(N)])
            return SmFunctor(DiscreteCat(M), D, h, lambda f: D.identity(h(f.source)), None,
                             name="F")
        H = self.group()
        phi = self.rng.choice(finite_homs(H, H))
        connected = kind == "chaotic_deloop"
        C, D = DeloopCat(M, H, connected), DeloopCat(N, H, connected)
        return SmFunctor(C, D, h, lambda f: Morphism(h(f.source), h(f.target), phi(f.payload)),
                         None, name="F")

    def transported(self, F: SmFunctor, free_objects=True) -> tuple[SmFunctor, object]:
        """Conjugate ``F`` by random unital isomorphism components; returns the
        unital functor and the transformation ``F ⇒ G``."""
        C, D = F.domain, F.codomain
        obs = C.objects.enumerate(self.cfg.depth)
        connected = isinstance(D, ChaoticCat) or (isinstance(D, DeloopCat) and D.connected)
        target, comps = {}, {}
        for c in obs:
            if c == C.unit:
                target[c] = D.unit
                comps[c] = D.identity(D.unit)
                continue
            t = self.rng.choice(D.objects.enumerate(self.cfg.depth)) \
                if connected and free_objects else F.obj(c)
            target[c] = t
            isos = [m for m in D.hom(F.obj(c), t) if D.inverse(m) is not None]
            comps[c] = self.rng.choice(isos)

        def G_mor(f):
            return D.compose_all(comps[f.target], F.mor(f), D.invert(comps[f.source]))

        G, alpha = transport_lambda(F, target.__getitem__, G_mor, comps.__getitem__, name="G")
        return G, alpha

    def unital_functor(self) -> SmFunctor:
        F = self.strict_functor()
        if self.rng.random() < 0.3:
            return F
        return self.transported(F)[0]

    def deloop_functor(self) -> SmFunctor:
        """Strict functor between Deloop-family categories."""
        connected = self.rng.random() < 0.5
        M = self.finite_monoid(commutative=not connected)
        N = self.finite_monoid(commutative=not connected)
        h = self.rng.choice(finite_homs(M, N))
        H = self.group()
        # a trivial codomain group would leave no coherence alternatives to probe
        K = self.rng.choice(groups()[1:])
        phi = self.rng.choice(finite_homs(H, K))
        C, D = DeloopCat(M, H, connected), DeloopCat(N, K, connected)
        return SmFunctor(C, D, h, lambda f: Morphism(h(f.source), h(f.target), phi(f.payload)),
                         None, name="F")

    # -- model-category inputs
    def acyclic_fibration(self) -> SmFunctor:
        """A strict collapse along a surjective hom; sections always exist."""
        # the pushout category lives over Ob(B) ∨ V, so B stays small
        M, N, h = self.rng.choice([s for s in _surjections()
                                   if _order(s[0]) <= self.cfg.max_finite_order and _order(s[1]) <= 2])
        kind = self.rng.choice(["chaotic", "chaotic_deloop", "terminal"])
        if kind == "terminal":
            A, B = ChaoticCat(M), terminal()
            u = constant_unit_hom(M, B.objects)
            return SmFunctor(A, B, u, lambda f: B.identity(B.unit), None, name="G")
        if kind == "chaotic":
            A, B = ChaoticCat(M), ChaoticCat(N)
            return SmFunctor(A, B, h, lambda f: Morphism(h(f.source), h(f.target)), None, name="G")
        H = self.group(max_order=2 if _order(M) > 2 else 3)
        A, B = DeloopCat(M, H, connected=True), DeloopCat(N, H, connected=True)
        return SmFunctor(A, B, h, lambda f: Morphism(h(f.source), h(f.target), f.payload), None,
                         name="G")

    def free_cofibration_over(self, A: PermCat, k_max=1) -> FreeCofibrationDatum:
        V = free_monoid(self.generators(k_max))
        ob = CoproductMonoid(A.objects, V)
        if isinstance(A, DeloopCat):
            C = DeloopCat(ob, A.group, connected=True)
        else:
            C = ChaoticCat(ob)
        return free_cofibration(A, C)

    def pushout_square(self, k_max=1) -> tuple[SmFunctor, FreeCofibrationDatum]:
        G = self.acyclic_fibration()
        return G, self.free_cofibration_over(G.domain, k_max)

    def cocone(self, G: SmFunctor, cof: FreeCofibrationDatum, result=None):
        """Strict ``R : C -> X`` and ``T : B -> X`` with ``R i_A = T G``.

        Either the collapse to the terminal category, or the category of the
        same family over ``Ob(B) ∨ V`` with payloads kept; when ``result`` is
        given, the pushout's own legs are a third option.
        """
        A, B, C = G.domain, G.codomain, cof.C
        options = ["terminal", "family"] + (["canonical"] if result is not None else [])
        choice = self.rng.choice(options)
        if choice == "canonical":
            return result.P, result.gamma, result.category
        if choice == "terminal":
            X = terminal()
            R = SmFunctor(C, X, constant_unit_hom(C.objects, X.objects),
                          lambda f: X.identity(X.unit), None, name="R")
            T = SmFunctor(B, X, constant_unit_hom(B.objects, X.objects),
                          lambda f: X.identity(X.unit), None, name="T")
            return R, T, X
        V = C.objects.right
        ob = CoproductMonoid(B.objects, V)
        in_b, in_v = inclusions(ob)
        if isinstance(B, DeloopCat):
            X = DeloopCat(ob, B.group, connected=True)
        elif isinstance(B, ChaoticCat):
            X = ChaoticCat(ob)
        else:
            X = ChaoticCat(ob)
        R_obj = codiagonal(compose_homs(in_b, G.obj), in_v)
        keep = isinstance(X, DeloopCat)
        R = SmFunctor(C, X, R_obj, lambda f: Morphism(R_obj(f.source), R_obj(f.target),
                                                      f.payload if keep else None), None, name="R")
        T = SmFunctor(B, X, in_b, lambda f: Morphism(in_b(f.source), in_b(f.target),
                                                     f.payload if keep else None), None, name="T")
        return R, T, X

    def certified_cofibration(self) -> SmFunctor:
        """Strict functors that are cofibrations by construction: free
        cofibrations, identities, and isomorphisms."""
        r = self.rng.random()
        if r < 0.5:
            A = self.rng.choice([terminal(), ChaoticCat(self.finite_monoid(max_order=2)),
                                 DeloopCat(self.finite_monoid(max_order=2), self.group(2),
                                           connected=True)])
            return self.free_cofibration_over(A).inclusion
        if r < 0.75:
            C = self.rng.choice([ChaoticCat(self.finite_monoid(max_order=3)),
                                 DeloopCat(self.finite_monoid(max_order=2, commutative=True),
                                           self.group(2)),
                                 DiscreteCat(free_monoid(["s"]))])
            return SmFunctor(C, C, identity_hom(C.objects), lambda f: f, None, name="id")
        D = DiscreteCat(free_monoid(self.generators(1, "s")))
        one = terminal()
        return SmFunctor(one, D, MonoidHom(one.objects, D.objects, {"e": ()}),
                         lambda f: D.identity(()), None, name="F")


def lifting_square(gen: "InstanceGenerator"):
    """A commuting square ``A -> N``, ``A -> M``, ``N -> Q``, ``M -> Q`` with
    ``M`` free, ``A`` free on a subset of its generators, and ``N -> Q`` a
    surjection of finite monoids."""
    rng = gen.rng
    N, Q, right = rng.choice(_surjections())
    k = rng.randint(1, max(1, gen.cfg.max_free_generators))
    M = free_monoid([f"x{i}" for i in range(k)])
    shared = [g for g in M.generators if rng.random() < 0.5]
    A = free_monoid(shared)
    left = MonoidHom(A, M, {g: (g,) for g in shared})
    top = MonoidHom(A, N, {g: rng.choice(N.elements) for g in shared})
    bottom = MonoidHom(M, Q, {g: right(top((g,))) if g in shared else rng.choice(Q.elements)
                              for g in M.generators})
    return top, left, right, bottom


def generate_instance(cfg: GeneratorConfig, kind: str = "category"):
    gen = InstanceGenerator(cfg)
    return {
        "category": gen.category,
        "functor": gen.unital_functor,
        "fibration": gen.acyclic_fibration,
        "cofibration": gen.certified_cofibration,
        "square": gen.pushout_square,
    }[kind]()
