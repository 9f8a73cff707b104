"""Permutative categories with decidable finite hom-sets.

A category exposes its object monoid plus ``hom``, ``identity``, ``compose``,
``tensor`` and ``symmetry``.  Objects are monoid elements; morphisms are
:class:`Morphism` triples compared structurally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Optional

from .monoid import (
    CoproductMonoid, FiniteMonoid, Monoid, MonoidError, MonoidHom, identity_hom, inclusions,
    trivial_monoid,
)


class CategoryError(ValueError):
    pass


class NotComposable(CategoryError):
    pass


class ForeignMorphism(CategoryError):
    pass


class NotIsomorphism(CategoryError):
    pass


@dataclass(frozen=True)
class Morphism:
    source: Hashable
    target: Hashable
    payload: Hashable = None

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.source, self.target, self.payload)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Morphism) or self._hash != other._hash:
            return False
        return (self.source == other.source and self.target == other.target
                and self.payload == other.payload)

    def __repr__(self):
        return f"<{_fmt(self.payload)}: {_fmt(self.source)} -> {_fmt(self.target)}>"


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, Morphism):
        return repr(x)
    if x is None:
        return "*"
    if isinstance(x, tuple):
        if not x:
            return "1"
        return "(" + " ".join(_fmt(y) for y in x) + ")"
    return repr(x)


class PermCat:
    """Base class.  Subclasses implement the underscored hooks."""

    kind = ""

    def __init__(self, objects: Monoid, name: str | None = None):
        self.objects = objects
        self.name = name
        self._homs: dict = {}
        self._hom_sets: dict = {}
        self._inverses: dict = {}

    # -- hooks
    def _hom(self, c1, c2) -> tuple:
        raise NotImplementedError

    def _identity(self, c) -> Morphism:
        raise NotImplementedError

    def _compose(self, g: Morphism, f: Morphism) -> Morphism:
        raise NotImplementedError

    def _tensor(self, f: Morphism, g: Morphism) -> Morphism:
        raise NotImplementedError

    def _symmetry(self, c1, c2) -> Morphism:
        raise NotImplementedError

    # -- public surface
    @property
    def unit(self):
        return self.objects.unit

    def tensor_obj(self, c1, c2):
        return self.objects.multiply(c1, c2)

    def hom(self, c1, c2) -> tuple:
        key = (c1, c2)
        try:
            return self._homs[key]
        except KeyError:
            self.objects.check(c1)
            self.objects.check(c2)
            h = self._homs[key] = tuple(self._hom(c1, c2))
            return h

    def contains(self, f) -> bool:
        if not isinstance(f, Morphism):
            return False
        key = (f.source, f.target)
        try:
            members = self._hom_sets[key]
        except KeyError:
            try:
                members = self._hom_sets[key] = frozenset(self.hom(f.source, f.target))
            except (MonoidError, TypeError):
                return False
        return f in members

    def check(self, f) -> Morphism:
        if not self.contains(f):
            raise ForeignMorphism(f"{f!r} is not a morphism of {self!r}")
        return f

    def identity(self, c) -> Morphism:
        self.objects.check(c)
        return self._identity(c)

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """``g ∘ f``."""
        self.check(f)
        self.check(g)
        if f.target != g.source:
            raise NotComposable(f"cannot compose {g!r} after {f!r}")
        return self._compose(g, f)

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        self.check(f)
        self.check(g)
        return self._tensor(f, g)

    def symmetry(self, c1, c2) -> Morphism:
        self.objects.check(c1)
        self.objects.check(c2)
        return self._symmetry(c1, c2)

    def compose_all(self, *fs: Morphism) -> Morphism:
        """``fs[0] ∘ fs[1] ∘ ...``."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def tensor_all(self, *fs: Morphism) -> Morphism:
        out = fs[0]
        for g in fs[1:]:
            out = self.tensor(out, g)
        return out

    def is_identity(self, f: Morphism) -> bool:
        return f.source == f.target and f == self.identity(f.source)

    def inverse(self, f: Morphism) -> Optional[Morphism]:
        """The two-sided inverse of ``f`` or None."""
        try:
            return self._inverses[f]
        except KeyError:
            pass
        self.check(f)
        inv = None
        ids, idt = self.identity(f.source), self.identity(f.target)
        for g in self.hom(f.target, f.source):
            if self._compose(g, f) == ids and self._compose(f, g) == idt:
                inv = g
                break
        self._inverses[f] = inv
        return inv

    def invert(self, f: Morphism) -> Morphism:
        inv = self.inverse(f)
        if inv is None:
            raise NotIsomorphism(f"{f!r} is not an isomorphism")
        return inv

    def morphisms(self, depth: int):
        obs = self.objects.enumerate(depth)
        for c1 in obs:
            for c2 in obs:
                yield from self.hom(c1, c2)

    def __repr__(self):
        return self.name or f"{type(self).__name__}({self.objects!r})"


# ------------------------------------------------------------------ families


class DiscreteCat(PermCat):
    kind = "discrete"

    def __init__(self, objects: Monoid, name=None):
        if not objects.is_commutative():
            raise CategoryError(f"discrete permutative category needs a commutative monoid, "
                                f"{objects!r} is not")
        super().__init__(objects, name or f"Discrete({objects!r})")

    def _hom(self, c1, c2):
        return (Morphism(c1, c1),) if c1 == c2 else ()

    def _identity(self, c):
        return Morphism(c, c)

    def _compose(self, g, f):
        return f

    def _tensor(self, f, g):
        c = self.tensor_obj(f.source, g.source)
        return Morphism(c, c)

    def _symmetry(self, c1, c2):
        c = self.tensor_obj(c1, c2)
        return Morphism(c, c)


class ChaoticCat(PermCat):
    """Exactly one morphism in every hom-set."""

    kind = "chaotic"

    def __init__(self, objects: Monoid, name=None):
        super().__init__(objects, name or f"Chaotic({objects!r})")

    def _hom(self, c1, c2):
        return (Morphism(c1, c2),)

    def _identity(self, c):
        return Morphism(c, c)

    def _compose(self, g, f):
        return Morphism(f.source, g.target)

    def _tensor(self, f, g):
        return Morphism(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target))

    def _symmetry(self, c1, c2):
        return Morphism(self.tensor_obj(c1, c2), self.tensor_obj(c2, c1))


class DeloopCat(PermCat):
    """Endomorphisms form a finite abelian group ``H``; composition and tensor
    are both the group operation and the symmetry is the group unit.

    With ``connected=True`` every hom-set (not only endomorphisms) is a copy of
    ``H``; this is ``Chaotic(M) × BH`` and accepts any object monoid.
    """

    kind = "deloop"

    def __init__(self, objects: Monoid, group: FiniteMonoid, connected: bool = False, name=None):
        if not group.is_commutative():
            raise CategoryError(f"{group!r} is not abelian")
        for x in group.elements:
            if not any(group.multiply(x, y) == group.unit for y in group.elements):
                raise CategoryError(f"{group!r} is not a group: {x} has no inverse")
        if not connected and not objects.is_commutative():
            raise CategoryError(f"Deloop needs a commutative object monoid, {objects!r} is not")
        self.group = group
        self.connected = connected
        label = "ChaoticDeloop" if connected else "Deloop"
        super().__init__(objects, name or f"{label}({objects!r}, {group!r})")

    def _hom(self, c1, c2):
        if c1 != c2 and not self.connected:
            return ()
        return tuple(Morphism(c1, c2, h) for h in self.group.elements)

    def _identity(self, c):
        return Morphism(c, c, self.group.unit)

    def _compose(self, g, f):
        return Morphism(f.source, g.target, self.group.multiply(g.payload, f.payload))

    def _tensor(self, f, g):
        return Morphism(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target),
                        self.group.multiply(f.payload, g.payload))

    def _symmetry(self, c1, c2):
        return Morphism(self.tensor_obj(c1, c2), self.tensor_obj(c2, c1), self.group.unit)


class TableCat(PermCat):
    """A finite permutative category given by explicit tables.

    Payloads are morphism names.  No laws are enforced at construction;
    run :func:`validate` for that.
    """

    kind = "table"

    def __init__(self, objects: FiniteMonoid, morphisms: dict, identity: dict, compose: dict,
                 tensor: dict, symmetry: dict, name=None):
        super().__init__(objects, name or f"Table({objects!r})")
        self.morphism_types = {n: tuple(st) for n, st in morphisms.items()}
        for n, (s, t) in self.morphism_types.items():
            objects.check(s)
            objects.check(t)
        self.identity_table = dict(identity)
        self.compose_table = dict(compose)
        self.tensor_table = dict(tensor)
        self.symmetry_table = dict(symmetry)
        for table in (self.identity_table, self.compose_table, self.tensor_table,
                      self.symmetry_table):
            for v in table.values():
                if v not in self.morphism_types:
                    raise CategoryError(f"unknown morphism name {v!r}")
        for c in objects.elements:
            if c not in self.identity_table:
                raise CategoryError(f"no identity for {c}")
        for c1 in objects.elements:
            for c2 in objects.elements:
                if (c1, c2) not in self.symmetry_table:
                    raise CategoryError(f"no symmetry for ({c1}, {c2})")
        names = list(self.morphism_types)
        for f in names:
            for g in names:
                if (f, g) not in self.tensor_table:
                    raise CategoryError(f"no tensor entry for ({f}, {g})")
                if self.morphism_types[f][1] == self.morphism_types[g][0] \
                        and (g, f) not in self.compose_table:
                    raise CategoryError(f"no composite for ({g}, {f})")

    def _named(self, n) -> Morphism:
        s, t = self.morphism_types[n]
        return Morphism(s, t, n)

    def _hom(self, c1, c2):
        return tuple(Morphism(c1, c2, n) for n, st in self.morphism_types.items() if st == (c1, c2))

    def _identity(self, c):
        return self._named(self.identity_table[c])

    def _compose(self, g, f):
        return self._named(self.compose_table[g.payload, f.payload])

    def _tensor(self, f, g):
        return self._named(self.tensor_table[f.payload, g.payload])

    def _symmetry(self, c1, c2):
        return self._named(self.symmetry_table[c1, c2])


class InducedCat(PermCat):
    """Objects from ``M``; ``hom(m1, m2) = D(q m1, q m2)``.

    ``coherence(m1, m2)`` is a D-isomorphism ``q(m1 m2) -> q m1 ⊗ q m2``;
    ``None`` means q is a monoid hom and the coherence is the identity.  A
    morphism's payload is its underlying D-morphism, so the triple
    ``(source, target, payload)`` is the pullback element ``((m1, m2), g)``.
    """

    kind = "induced"

    def __init__(self, objects: Monoid, base: PermCat, object_map: Callable,
                 coherence: Callable | None = None, name=None):
        super().__init__(objects, name or f"Induced({objects!r} over {base!r})")
        self.base = base
        self.object_map = object_map
        self.coherence = coherence
        self._lam_cache: dict = {}
        if object_map(objects.unit) != base.unit:
            raise CategoryError("object map does not preserve the unit")

    def q(self, m):
        return self.object_map(m)

    def lam(self, m1, m2) -> Morphism:
        key = (m1, m2)
        try:
            return self._lam_cache[key]
        except KeyError:
            pass
        if self.coherence is None:
            qm, qs = self.q(self.tensor_obj(m1, m2)), self.base.tensor_obj(self.q(m1), self.q(m2))
            if qm != qs:
                raise CategoryError(f"object map is not multiplicative at ({m1!r}, {m2!r}) "
                                    f"and no coherence was given")
            out = self.base.identity(qm)
        else:
            out = self.coherence(m1, m2)
        self._lam_cache[key] = out
        return out

    def lift(self, m1, m2, g: Morphism) -> Morphism:
        return Morphism(m1, m2, g)

    def _hom(self, m1, m2):
        return tuple(Morphism(m1, m2, g) for g in self.base.hom(self.q(m1), self.q(m2)))

    def _identity(self, m):
        return Morphism(m, m, self.base.identity(self.q(m)))

    def _compose(self, g, f):
        return Morphism(f.source, g.target, self.base.compose(g.payload, f.payload))

    def _tensor(self, f1, f2):
        src = self.tensor_obj(f1.source, f2.source)
        tgt = self.tensor_obj(f1.target, f2.target)
        core = self.base.tensor(f1.payload, f2.payload)
        if self.coherence is not None:
            D = self.base
            core = D.compose_all(D.invert(self.lam(f1.target, f2.target)), core,
                                 self.lam(f1.source, f2.source))
        return Morphism(src, tgt, core)

    def _symmetry(self, m1, m2):
        D = self.base
        core = D.symmetry(self.q(m1), self.q(m2))
        if self.coherence is not None:
            core = D.compose_all(D.invert(self.lam(m2, m1)), core, self.lam(m1, m2))
        return Morphism(self.tensor_obj(m1, m2), self.tensor_obj(m2, m1), core)


class FullSubcategory(PermCat):
    """Full subcategory on a submonoid ``V`` embedded by ``embed``."""

    kind = "full_subcategory"

    def __init__(self, base: PermCat, objects: Monoid, embed: MonoidHom, name=None):
        super().__init__(objects, name or f"Full({base!r}; {objects!r})")
        self.base = base
        self.embed = embed

    def up(self, f: Morphism) -> Morphism:
        return Morphism(self.embed(f.source), self.embed(f.target), f.payload)

    def _hom(self, v1, v2):
        return tuple(Morphism(v1, v2, m.payload)
                     for m in self.base.hom(self.embed(v1), self.embed(v2)))

    def _identity(self, v):
        return Morphism(v, v, self.base.identity(self.embed(v)).payload)

    def _compose(self, g, f):
        return Morphism(f.source, g.target, self.base.compose(self.up(g), self.up(f)).payload)

    def _tensor(self, f, g):
        h = self.base.tensor(self.up(f), self.up(g))
        return Morphism(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target),
                        h.payload)

    def _symmetry(self, v1, v2):
        h = self.base.symmetry(self.embed(v1), self.embed(v2))
        return Morphism(self.tensor_obj(v1, v2), self.tensor_obj(v2, v1), h.payload)


def full_subcategory(C: PermCat, V: Monoid) -> FullSubcategory:
    """Full subcategory on ``V``: the whole object monoid, a coproduct factor,
    or the trivial monoid."""
    ob = C.objects
    if V == ob:
        embed = identity_hom(ob)
    elif isinstance(ob, CoproductMonoid) and V == ob.right:
        embed = inclusions(ob)[1]
    elif isinstance(ob, CoproductMonoid) and V == ob.left:
        embed = inclusions(ob)[0]
    elif V.is_trivial():
        embed = MonoidHom(V, ob, {x: ob.unit for x in V.elements}) \
            if isinstance(V, FiniteMonoid) else MonoidHom(V, ob, {})
    else:
        raise CategoryError(f"{V!r} is not a closed submonoid presentation of {ob!r}")
    return FullSubcategory(C, V, embed)


def standard_category(kind: str, objects: Monoid, group: FiniteMonoid | None = None) -> PermCat:
    kind = kind.lower()
    if kind == "discrete":
        return DiscreteCat(objects)
    if kind == "chaotic":
        return ChaoticCat(objects)
    if kind == "deloop":
        return DeloopCat(objects, group)
    if kind in ("chaotic_deloop", "connected_deloop"):
        return DeloopCat(objects, group, connected=True)
    raise CategoryError(f"unknown family {kind!r}")


def terminal() -> DiscreteCat:
    return DiscreteCat(trivial_monoid(), name="𝟙")


# ------------------------------------------------------------------ validation


PERMCAT_LAWS = (
    "hom_typing",
    "identity",
    "associativity",
    "tensor_monoid",
    "interchange",
    "symmetry_typing",
    "symmetry_involution",
    "symmetry_naturality",
    "symmetry_coherence",
)


class _Undefined(CategoryError):
    """An instance uses an ill-typed or failing structure map; skipped."""


class _Ops:
    """Memoised structure maps that refuse ill-typed results."""

    def __init__(self, C: PermCat):
        self.C = C
        self._c: dict = {}
        self._t: dict = {}
        self._g: dict = {}
        self._i: dict = {}
        # canonical instances make cache hits identity comparisons
        self._intern: dict = {}

    def typed(self, m, s, t):
        if not isinstance(m, Morphism) or m.source != s or m.target != t or not self.C.contains(m):
            raise _Undefined
        return self._intern.setdefault(m, m)

    def id(self, c):
        try:
            return self._i[c]
        except KeyError:
            pass
        try:
            v = self.typed(self.C.identity(c), c, c)
        except (_Undefined, CategoryError, MonoidError, KeyError):
            v = None
        self._i[c] = v
        if v is None:
            raise _Undefined
        return v

    def comp(self, g, f):
        key = (g, f)
        try:
            v = self._c[key]
        except KeyError:
            try:
                if f.target != g.source:
                    raise _Undefined
                v = self.typed(self.C.compose(g, f), f.source, g.target)
            except (_Undefined, CategoryError, MonoidError, KeyError):
                v = None
            self._c[key] = v
        if v is None:
            raise _Undefined
        return v

    def tens(self, f, g):
        key = (f, g)
        try:
            v = self._t[key]
        except KeyError:
            C = self.C
            try:
                v = self.typed(C.tensor(f, g), C.tensor_obj(f.source, g.source),
                               C.tensor_obj(f.target, g.target))
            except (_Undefined, CategoryError, MonoidError, KeyError):
                v = None
            self._t[key] = v
        if v is None:
            raise _Undefined
        return v

    def sym(self, c1, c2):
        key = (c1, c2)
        try:
            v = self._g[key]
        except KeyError:
            C = self.C
            try:
                v = self.typed(C.symmetry(c1, c2), C.tensor_obj(c1, c2), C.tensor_obj(c2, c1))
            except (_Undefined, CategoryError, MonoidError, KeyError):
                v = None
            self._g[key] = v
        if v is None:
            raise _Undefined
        return v


def _attempt(law, ok_fn, describe):
    try:
        ok = ok_fn()
    except _Undefined:
        return
    law.check(ok, describe)


def validate(C: PermCat, depth: int):
    """Check every permutative-category law on objects of word length <= depth.

    Instances are restricted to those whose objects (including tensor
    products) stay inside the enumerated set; a law instance that needs an
    ill-typed structure map is left to the typing laws.
    """
    from .report import CheckReport, Law

    obs = C.objects.enumerate(depth)
    inside = set(obs)
    mul = C.tensor_obj
    ops = _Ops(C)
    laws = {name: Law(name) for name in PERMCAT_LAWS}

    # hom_typing ---------------------------------------------------------
    typing = laws["hom_typing"]
    homs: dict = {}
    for c1 in obs:
        for c2 in obs:
            good = []
            for m in C.hom(c1, c2):
                if typing.check(isinstance(m, Morphism) and m.source == c1 and m.target == c2,
                                lambda: f"{m!r} listed in hom({_fmt(c1)}, {_fmt(c2)})"):
                    good.append(m)
            homs[c1, c2] = good
    mors = [m for h in homs.values() for m in h]
    for m in mors:
        ops._intern.setdefault(m, m)
    for c in obs:
        typing.check(_safe(lambda: C.identity(c) in C.hom(c, c)),
                     lambda: f"identity({_fmt(c)}) = {_safe(lambda: C.identity(c))!r} not in hom")
    composable = []
    for (c1, c2), fs in homs.items():
        for c3 in obs:
            for f in fs:
                for g in homs[c2, c3]:
                    composable.append((g, f))
                    r = _safe(lambda: C.compose(g, f))
                    typing.check(r is not None and r in C.hom(c1, c3),
                                 lambda: f"{g!r} ∘ {f!r} = {r!r} has the wrong type")
    # object pairs whose product stays inside the enumerated set
    partners: dict = {c: [] for c in obs}
    for c1 in obs:
        for c2 in obs:
            if mul(c1, c2) in inside:
                partners[c1].append(c2)
    in_pairs = [(c1, c2) for c1 in obs for c2 in partners[c1]]
    tensorable = [(f, g) for s1, s2 in in_pairs for t1 in obs for t2 in partners[t1]
                  for f in homs[s1, t1] for g in homs[s2, t2]]
    for f, g in tensorable:
        r = _safe(lambda: C.tensor(f, g))
        typing.check(r is not None and r in C.hom(mul(f.source, g.source), mul(f.target, g.target)),
                     lambda: f"{f!r} ⊗ {g!r} = {r!r} has the wrong type")

    # identity -------------------------------------------------------------
    law = laws["identity"]
    for f in mors:
        _attempt(law, lambda: ops.comp(ops.id(f.target), f) == f and ops.comp(f, ops.id(f.source)) == f,
                 lambda: f"identity fails for {f!r}")

    # associativity --------------------------------------------------------
    law = laws["associativity"]
    for g, f in composable:
        for c4 in obs:
            for h in homs[g.target, c4]:
                _attempt(law, lambda: ops.comp(ops.comp(h, g), f) == ops.comp(h, ops.comp(g, f)),
                         lambda: f"({h!r} ∘ {g!r}) ∘ {f!r} ≠ {h!r} ∘ ({g!r} ∘ {f!r})")

    # tensor_monoid --------------------------------------------------------
    law = laws["tensor_monoid"]
    e = C.unit
    for f in mors:
        _attempt(law, lambda: ops.tens(ops.id(e), f) == f and ops.tens(f, ops.id(e)) == f,
                 lambda: f"id_unit is not a tensor unit for {f!r}")
    for c1 in obs:
        for c2 in obs:
            if mul(c1, c2) in inside:
                _attempt(law, lambda: ops.tens(ops.id(c1), ops.id(c2)) == ops.id(mul(c1, c2)),
                         lambda: f"id_{_fmt(c1)} ⊗ id_{_fmt(c2)} ≠ id_{_fmt(mul(c1, c2))}")
    mors_from: dict = {}
    for m in mors:
        mors_from.setdefault(m.source, []).append(m)
    for f, g in tensorable:
        fg_s, fg_t = mul(f.source, g.source), mul(f.target, g.target)
        for hs in partners[fg_s]:
            for h in mors_from.get(hs, ()):
                if mul(fg_t, h.target) not in inside:
                    continue
                _attempt(law, lambda: ops.tens(ops.tens(f, g), h) == ops.tens(f, ops.tens(g, h)),
                         lambda: f"({f!r} ⊗ {g!r}) ⊗ {h!r} ≠ {f!r} ⊗ ({g!r} ⊗ {h!r})")

    # interchange ----------------------------------------------------------
    law = laws["interchange"]
    chains: dict = {}

    def chain(c1, c2, c3):
        key = (c1, c2, c3)
        if key not in chains:
            out = []
            for f2 in homs[c1, c2]:
                for f1 in homs[c2, c3]:
                    try:
                        out.append((f1, f2, ops.comp(f1, f2)))
                    except _Undefined:
                        pass
            chains[key] = out
        return chains[key]

    comp, tens = ops.comp, ops.tens
    for c1, c4 in in_pairs:
        for c2, c5 in in_pairs:
            for c3, c6 in in_pairs:
                gs = chain(c4, c5, c6)
                for f1, f2, f12 in chain(c1, c2, c3):
                    for g1, g2, g12 in gs:
                        try:
                            lhs = comp(tens(f1, g1), tens(f2, g2))
                            rhs = tens(f12, g12)
                        except _Undefined:
                            continue
                        if lhs is rhs or lhs == rhs:
                            law.checked += 1
                        else:
                            law.check(False, lambda: f"interchange fails for f=({f1!r}, {f2!r}), "
                                                     f"g=({g1!r}, {g2!r})")

    # symmetry -------------------------------------------------------------
    pairs = [(c1, c2) for c1 in obs for c2 in obs
             if mul(c1, c2) in inside and mul(c2, c1) in inside]
    law = laws["symmetry_typing"]
    for c1, c2 in pairs:
        r = _safe(lambda: C.symmetry(c1, c2))
        law.check(r is not None and r.source == mul(c1, c2) and r.target == mul(c2, c1)
                  and r in C.hom(mul(c1, c2), mul(c2, c1)),
                  lambda: f"γ({_fmt(c1)}, {_fmt(c2)}) = {r!r} is not in "
                          f"hom({_fmt(mul(c1, c2))}, {_fmt(mul(c2, c1))})")
    law = laws["symmetry_involution"]
    for c1, c2 in pairs:
        _attempt(law, lambda: ops.comp(ops.sym(c2, c1), ops.sym(c1, c2)) == ops.id(mul(c1, c2)),
                 lambda: f"γ({_fmt(c2)}, {_fmt(c1)}) ∘ γ({_fmt(c1)}, {_fmt(c2)}) ≠ id")
    law = laws["symmetry_naturality"]
    for f, g in tensorable:
        if mul(g.source, f.source) not in inside or mul(g.target, f.target) not in inside:
            continue
        _attempt(law, lambda: ops.comp(ops.sym(f.target, g.target), ops.tens(f, g))
                 == ops.comp(ops.tens(g, f), ops.sym(f.source, g.source)),
                 lambda: f"γ is not natural at f={f!r}, g={g!r}")
    law = laws["symmetry_coherence"]
    for c in obs:
        _attempt(law, lambda: ops.sym(c, e) == ops.id(c) and ops.sym(e, c) == ops.id(c),
                 lambda: f"γ with the unit is not the identity at {_fmt(c)}")
    for c1 in obs:
        for c2 in obs:
            for c3 in obs:
                objs = [mul(mul(c1, c2), c3), mul(mul(c3, c1), c2), mul(mul(c1, c3), c2),
                        mul(c1, c2), mul(c1, c3), mul(c3, c1), mul(c2, c3), mul(c3, c2)]
                if not all(o in inside for o in objs):
                    continue
                _attempt(law, lambda: ops.sym(mul(c1, c2), c3)
                         == ops.comp(ops.tens(ops.sym(c1, c3), ops.id(c2)),
                                     ops.tens(ops.id(c1), ops.sym(c2, c3))),
                         lambda: f"hexagon fails at ({_fmt(c1)}, {_fmt(c2)}, {_fmt(c3)})")

    report = CheckReport()
    for name in PERMCAT_LAWS:
        laws[name].into(report, depth)
    return report


def _safe(fn):
    try:
        return fn()
    except (CategoryError, MonoidError, KeyError):
        return None
