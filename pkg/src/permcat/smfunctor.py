"""Unital and strict symmetric monoidal functors between permutative categories,
monoidal natural transformations, transport of coherence along a natural
isomorphism, equivalence checks and sections of acyclic fibrations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .category import (
    CategoryError, Morphism, NotIsomorphism, PermCat, _Ops, _fmt, _safe,
)
from .monoid import MonoidError, MonoidHom, identity_hom
from .report import CheckReport, Law

YES = "Yes"
NO = "No"
NOT_WITHIN_DEPTH = "NotWithinDepth"


class FunctorError(ValueError):
    pass


class DepthExhausted(FunctorError):
    pass


def _memo(fn: Callable) -> Callable:
    cache: dict = {}

    def wrapped(*args):
        try:
            return cache[args]
        except KeyError:
            v = cache[args] = fn(*args)
            return v

    wrapped.__wrapped__ = fn
    return wrapped


class SmFunctor:
    """A unital symmetric monoidal functor.

    ``obj`` is a :class:`MonoidHom` in the strict case or any unit-preserving
    callable; ``mor`` maps morphisms; ``lam(c1, c2)`` is the coherence
    ``F(c1 ⊗ c2) -> F c1 ⊗ F c2``.  ``lam=None`` stands for the identity family.
    """

    def __init__(self, domain: PermCat, codomain: PermCat, obj: Callable, mor: Callable,
                 lam: Callable | None = None, name: str | None = None):
        self.domain = domain
        self.codomain = codomain
        self.obj = obj
        self.mor = mor
        self.lam = lam
        self.name = name

    def __call__(self, x):
        if isinstance(x, Morphism):
            return self.mor(x)
        return self.obj(x)

    def coherence(self, c1, c2) -> Morphism:
        if self.lam is None:
            return self.codomain.identity(self.obj(self.domain.tensor_obj(c1, c2)))
        return self.lam(c1, c2)

    def __repr__(self):
        return self.name or f"SmFunctor({self.domain!r} -> {self.codomain!r})"


def identity_functor(C: PermCat) -> SmFunctor:
    return SmFunctor(C, C, identity_hom(C.objects), lambda f: f, None, name=f"id_{C!r}")


def compose_functors(G: SmFunctor, F: SmFunctor, name=None) -> SmFunctor:
    """``G ∘ F`` with ``λ(c1, c2) = λ_G(F c1, F c2) ∘ G(λ_F(c1, c2))``."""
    if F.codomain is not G.domain and F.codomain != G.domain:
        raise FunctorError(f"cannot compose {G!r} after {F!r}")
    if isinstance(F.obj, MonoidHom) and isinstance(G.obj, MonoidHom):
        from .monoid import compose_homs
        obj = compose_homs(G.obj, F.obj)
    else:
        obj = _memo(lambda c: G.obj(F.obj(c)))
    mor = _memo(lambda f: G.mor(F.mor(f)))
    lam = None
    if F.lam is not None or G.lam is not None:
        D = G.codomain

        def lam(c1, c2):
            return D.compose(G.coherence(F.obj(c1), F.obj(c2)), G.mor(F.coherence(c1, c2)))
        lam = _memo(lam)
    return SmFunctor(F.domain, G.codomain, obj, mor, lam,
                     name=name or f"{G!r}∘{F!r}")


def is_strict(F: SmFunctor, depth: int) -> bool:
    """Object map multiplicative and every coherence an identity, on
    objects of word length <= depth."""
    C, D = F.domain, F.codomain
    obs = C.objects.enumerate(depth)
    if F.obj(C.unit) != D.unit:
        return False
    for c1 in obs:
        for c2 in obs:
            c = C.tensor_obj(c1, c2)
            if F.obj(c) != D.tensor_obj(F.obj(c1), F.obj(c2)):
                return False
            if F.lam is not None and not D.is_identity(F.lam(c1, c2)):
                return False
    return True


# ------------------------------------------------------------ validation


FUNCTOR_LAWS = (
    "morphism_typing",
    "unit",
    "identities",
    "composition",
    "coherence_typing",
    "coherence_unital",
    "coherence_naturality",
    "coherence_symmetry",
    "coherence_associativity",
)


class _Skip(Exception):
    pass


def _try(law: Law, ok_fn, describe):
    try:
        ok = ok_fn()
    except (_Skip, CategoryError, MonoidError, FunctorError, KeyError):
        return
    law.check(ok, describe)


def _enum(C: PermCat, depth: int):
    obs = C.objects.enumerate(depth)
    inside = set(obs)
    homs = {(a, b): C.hom(a, b) for a in obs for b in obs}
    return obs, inside, homs


def validate_functor(F: SmFunctor, depth: int) -> CheckReport:
    C, D = F.domain, F.codomain
    obs, inside, homs = _enum(C, depth)
    mul = C.tensor_obj
    laws = {n: Law(n) for n in FUNCTOR_LAWS}
    mors = [f for h in homs.values() for f in h]
    Cx, Dx = _Ops(C), _Ops(D)

    good = set()
    law = laws["morphism_typing"]
    for f in mors:
        r = _safe(lambda: F.mor(f))
        ok = r is not None and _safe(lambda: r in D.hom(F.obj(f.source), F.obj(f.target)))
        if law.check(bool(ok), lambda: f"F({f!r}) = {r!r} is not in "
                                       f"hom(F{_fmt(f.source)}, F{_fmt(f.target)})"):
            good.add(f)

    images: dict = {}

    def Fm(f):
        try:
            return images[f]
        except KeyError:
            pass
        if f not in good:
            raise _Skip
        v = images[f] = Dx._intern.setdefault(F.mor(f), F.mor(f))
        return v

    laws["unit"].check(F.obj(C.unit) == D.unit, lambda: f"F(unit) = {_fmt(F.obj(C.unit))}")

    law = laws["identities"]
    for c in obs:
        _try(law, lambda: Fm(Cx.id(c)) == Dx.id(F.obj(c)),
             lambda: f"F(id_{_fmt(c)}) ≠ id_F{_fmt(c)}")

    law = laws["composition"]
    for (c1, c2), fs in homs.items():
        for c3 in obs:
            for f in fs:
                for g in homs[c2, c3]:
                    _try(law, lambda: Fm(Cx.comp(g, f)) == Dx.comp(Fm(g), Fm(f)),
                         lambda: f"F({g!r} ∘ {f!r}) ≠ F{g!r} ∘ F{f!r}")

    pairs = [(c1, c2) for c1 in obs for c2 in obs if mul(c1, c2) in inside]
    good_lam = set()
    law = laws["coherence_typing"]
    for c1, c2 in pairs:
        lam = _safe(lambda: F.coherence(c1, c2))
        src = F.obj(mul(c1, c2))
        tgt = _safe(lambda: D.tensor_obj(F.obj(c1), F.obj(c2)))
        ok = (lam is not None and tgt is not None and lam.source == src and lam.target == tgt
              and D.contains(lam) and D.inverse(lam) is not None)
        if law.check(ok, lambda: f"λ({_fmt(c1)}, {_fmt(c2)}) = {lam!r} is not an isomorphism "
                                 f"F({_fmt(mul(c1, c2))}) -> F{_fmt(c1)} ⊗ F{_fmt(c2)}"):
            good_lam.add((c1, c2))

    lams: dict = {}

    def lam(c1, c2):
        if (c1, c2) not in good_lam:
            raise _Skip
        try:
            return lams[c1, c2]
        except KeyError:
            v = lams[c1, c2] = Dx._intern.setdefault(F.coherence(c1, c2), F.coherence(c1, c2))
            return v

    e = C.unit
    law = laws["coherence_unital"]
    for c in obs:
        _try(law, lambda: D.is_identity(lam(c, e)) and D.is_identity(lam(e, c)),
             lambda: f"λ with the unit is not the identity at {_fmt(c)}")

    law = laws["coherence_naturality"]
    for s1, s2 in pairs:
        for t1 in obs:
            for t2 in obs:
                if mul(t1, t2) not in inside:
                    continue
                for f in homs[s1, t1]:
                    for g in homs[s2, t2]:
                        _try(law, lambda: Dx.comp(lam(t1, t2), Fm(Cx.tens(f, g)))
                             == Dx.comp(Dx.tens(Fm(f), Fm(g)), lam(s1, s2)),
                             lambda: f"λ is not natural at f={f!r}, g={g!r}")

    law = laws["coherence_symmetry"]
    for c1, c2 in pairs:
        if mul(c2, c1) not in inside:
            continue
        _try(law, lambda: Dx.comp(Dx.sym(F.obj(c1), F.obj(c2)), lam(c1, c2))
             == Dx.comp(lam(c2, c1), Fm(Cx.sym(c1, c2))),
             lambda: f"symmetry coherence fails at ({_fmt(c1)}, {_fmt(c2)})")

    law = laws["coherence_associativity"]
    for c1, c2 in pairs:
        c12 = mul(c1, c2)
        for c3 in obs:
            if mul(c12, c3) not in inside or mul(c2, c3) not in inside:
                continue
            _try(law, lambda: Dx.comp(Dx.tens(lam(c1, c2), Dx.id(F.obj(c3))), lam(c12, c3))
                 == Dx.comp(Dx.tens(Dx.id(F.obj(c1)), lam(c2, c3)), lam(c1, mul(c2, c3))),
                 lambda: f"associativity coherence fails at ({_fmt(c1)}, {_fmt(c2)}, {_fmt(c3)})")

    report = CheckReport()
    for n in FUNCTOR_LAWS:
        laws[n].into(report, depth)
    return report


# ------------------------------------------------------------ transformations


class MonoidalNatTrans:
    """Components ``c -> (source(c) -> target(c))`` between functors with a
    shared domain and codomain."""

    def __init__(self, source: SmFunctor, target: SmFunctor, components: Callable, name=None):
        self.source = source
        self.target = target
        self.components = components
        self.name = name

    def __call__(self, c) -> Morphism:
        return self.components(c)

    def __repr__(self):
        return self.name or f"NatTrans({self.source!r} => {self.target!r})"


def identity_transformation(F: SmFunctor) -> MonoidalNatTrans:
    D = F.codomain
    return MonoidalNatTrans(F, F, lambda c: D.identity(F.obj(c)), name=f"id_{F!r}")


NAT_TRANS_LAWS = ("component_typing", "invertible", "naturality", "unital", "monoidality")


def validate_nat_trans(alpha: MonoidalNatTrans, depth: int) -> CheckReport:
    F, G = alpha.source, alpha.target
    C, D = F.domain, F.codomain
    obs, inside, homs = _enum(C, depth)
    mul = C.tensor_obj
    laws = {n: Law(n) for n in NAT_TRANS_LAWS}

    good = set()
    law = laws["component_typing"]
    for c in obs:
        a = _safe(lambda: alpha(c))
        ok = a is not None and a.source == F.obj(c) and a.target == G.obj(c) and D.contains(a)
        if law.check(ok, lambda: f"α({_fmt(c)}) = {a!r} is not in hom(F{_fmt(c)}, G{_fmt(c)})"):
            good.add(c)

    def comp(c):
        if c not in good:
            raise _Skip
        return alpha(c)

    law = laws["invertible"]
    for c in obs:
        _try(law, lambda: D.inverse(comp(c)) is not None, lambda: f"α({_fmt(c)}) is not invertible")

    law = laws["naturality"]
    for (c1, c2), fs in homs.items():
        for f in fs:
            _try(law, lambda: D.compose(comp(c2), F.mor(f)) == D.compose(G.mor(f), comp(c1)),
                 lambda: f"naturality square fails at {f!r}")

    laws["unital"].check(_safe(lambda: D.is_identity(alpha(C.unit))) is True,
                         lambda: f"α(unit) = {_safe(lambda: alpha(C.unit))!r} is not the identity")

    law = laws["monoidality"]
    for c1 in obs:
        for c2 in obs:
            c = mul(c1, c2)
            if c not in inside:
                continue
            _try(law, lambda: D.compose(G.coherence(c1, c2), comp(c))
                 == D.compose(D.tensor(comp(c1), comp(c2)), F.coherence(c1, c2)),
                 lambda: f"monoidality square fails at ({_fmt(c1)}, {_fmt(c2)})")

    report = CheckReport()
    for n in NAT_TRANS_LAWS:
        laws[n].into(report, depth)
    return report


# ------------------------------------------------------------ transport


def transport_lambda(F: SmFunctor, G_obj: Callable, G_mor: Callable, alpha: Callable,
                     name=None) -> tuple[SmFunctor, MonoidalNatTrans]:
    """Give ``G`` the coherence making ``alpha : F ≅ G`` monoidal:

        λ_G(c1, c2) = (α c1 ⊗ α c2) ∘ λ_F(c1, c2) ∘ α(c1 ⊗ c2)^-1
    """
    C, D = F.domain, F.codomain
    alpha = _memo(alpha)

    def lam(c1, c2):
        a = alpha(C.tensor_obj(c1, c2))
        inv = D.inverse(a)
        if inv is None:
            raise NotIsomorphism(f"α({_fmt(C.tensor_obj(c1, c2))}) = {a!r} is not invertible")
        return D.compose_all(D.tensor(alpha(c1), alpha(c2)), F.coherence(c1, c2), inv)

    G = SmFunctor(C, D, G_obj, G_mor, _memo(lam), name=name)
    return G, MonoidalNatTrans(F, G, alpha, name="α")


def coherence_uniqueness(alpha: MonoidalNatTrans, depth: int) -> Law:
    """Replace each coherence component of the target functor by every other
    morphism of the same hom; each replacement must break monoidality."""
    F, G = alpha.source, alpha.target
    C, D = F.domain, F.codomain
    obs = C.objects.enumerate(depth)
    inside = set(obs)
    law = Law("coherence_unique")
    for c1 in obs:
        for c2 in obs:
            c = C.tensor_obj(c1, c2)
            if c not in inside:
                continue
            actual = G.coherence(c1, c2)
            rhs = D.compose(D.tensor(alpha(c1), alpha(c2)), F.coherence(c1, c2))
            for other in D.hom(actual.source, actual.target):
                if other != actual:
                    law.check(D.compose(other, alpha(c)) != rhs,
                              lambda: f"λ at ({_fmt(c1)}, {_fmt(c2)}) could be {other!r}")
    return law


def conjugate(C: PermCat, components: Callable, f: Morphism, D: PermCat | None = None,
              mor: Callable | None = None) -> Morphism:
    """``components(t) ∘ mor(f) ∘ components(s)^-1``."""
    D = D or C
    image = mor(f) if mor else f
    return D.compose_all(components(f.target), image, D.invert(components(f.source)))


def transport_functor(C: PermCat, obj_target: Callable, delta: Callable,
                      name="S_C") -> tuple[SmFunctor, MonoidalNatTrans]:
    """The functor ``S_C`` conjugate to the identity along ``δ : id ≅ S_C``."""
    delta = _memo(delta)
    ident = identity_functor(C)

    def mor(f):
        return conjugate(C, delta, f)

    S, d = transport_lambda(ident, obj_target, _memo(mor), delta, name=name)
    d.name = "δ"
    return S, d


# ------------------------------------------------------------ equivalences


def is_fully_faithful(F: SmFunctor, depth: int):
    """First hom pair where F is not bijective, or None."""
    C, D = F.domain, F.codomain
    obs = C.objects.enumerate(depth)
    for c1 in obs:
        for c2 in obs:
            src = C.hom(c1, c2)
            tgt = D.hom(F.obj(c1), F.obj(c2))
            images = {F.mor(f) for f in src}
            if len(images) != len(src) or len(images) != len(tgt) or not images <= set(tgt):
                return (c1, c2)
    return None


def check_equivalence(F: SmFunctor, depth: int) -> dict:
    C, D = F.domain, F.codomain
    ff = YES if is_fully_faithful(F, depth) is None else NO
    images = {F.obj(c) for c in C.objects.enumerate(depth)}
    es = YES
    for d in D.objects.enumerate(depth):
        if d in images:
            continue
        if not any(D.inverse(m) is not None for x in images for m in D.hom(d, x)):
            es = NOT_WITHIN_DEPTH
            break
    return {"fully_faithful": ff, "essentially_surjective": es}


def is_acyclic_fibration(F: SmFunctor, depth: int) -> str:
    """Surjective on objects and fully faithful, both within ``depth``."""
    if not is_strict(F, depth):
        raise FunctorError(f"{F!r} is not strict")
    if is_fully_faithful(F, depth) is not None:
        return NO
    images = {F.obj(c) for c in F.domain.objects.enumerate(depth)}
    if not all(d in images for d in F.codomain.objects.enumerate(depth)):
        return NOT_WITHIN_DEPTH
    return YES


# ------------------------------------------------------------ sections


@dataclass
class SectionDatum:
    fibration: SmFunctor
    section: SmFunctor
    counit: MonoidalNatTrans
    object_section: Callable


def find_section(G: SmFunctor, depth: int) -> SectionDatum:
    """A unital symmetric monoidal section ``S`` with ``G S = id`` and counit
    ``ε : S G ≅ id``.

    Object preimages are the first in canonical enumeration order; morphisms
    and counit components are the unique preimages under the hom bijections.
    """
    verdict = is_acyclic_fibration(G, depth)
    if verdict != YES:
        raise FunctorError(f"{G!r} is not an acyclic fibration at depth {depth} ({verdict})")
    A, B = G.domain, G.codomain
    table: dict = {}
    for a in A.objects.enumerate(depth):
        table.setdefault(G.obj(a), a)
    if table.get(B.unit) != A.unit:
        raise FunctorError("no unit-preserving object section")

    def s(b):
        try:
            return table[b]
        except KeyError:
            pass
        for a in A.objects.enumerate(depth + B.objects.length(b)):
            if G.obj(a) == b:
                table[b] = a
                return a
        raise DepthExhausted(f"no preimage of {_fmt(b)} within depth")

    def unique_preimage(src, tgt, g: Morphism) -> Morphism:
        found = [f for f in A.hom(src, tgt) if G.mor(f) == g]
        if len(found) != 1:
            raise FunctorError(f"{len(found)} preimages of {g!r} in hom({_fmt(src)}, {_fmt(tgt)})")
        return found[0]

    def S_mor(f):
        return unique_preimage(s(f.source), s(f.target), f)

    def eps(a):
        return unique_preimage(s(G.obj(a)), a, B.identity(G.obj(a)))

    eps = _memo(eps)

    def lam(b1, b2):
        return eps(A.tensor_obj(s(b1), s(b2)))

    S = SmFunctor(B, A, s, _memo(S_mor), _memo(lam), name="S")
    SG = compose_functors(S, G, name="SG")
    counit = MonoidalNatTrans(SG, identity_functor(A), eps, name="ε_S")
    return SectionDatum(G, S, counit, s)


def validate_section(datum: SectionDatum, depth: int) -> CheckReport:
    G, S, eps = datum.fibration, datum.section, datum.counit
    A, B = G.domain, G.codomain
    report = CheckReport()
    bobs = B.objects.enumerate(depth)
    aobs = A.objects.enumerate(depth)

    law = Law("section_identity")
    for b in bobs:
        law.check(G.obj(S.obj(b)) == b, lambda: f"G S({_fmt(b)}) ≠ {_fmt(b)}")
    for f in B.morphisms(depth):
        law.check(G.mor(S.mor(f)) == f, lambda: f"G S({f!r}) ≠ {f!r}")
    law.into(report, depth)

    law = Law("counit_image")
    for a in aobs:
        law.check(G.mor(eps(a)) == B.identity(G.obj(a)), lambda: f"G ε({_fmt(a)}) is not an identity")
    law.into(report, depth)

    law = Law("lambda_is_counit")
    law_img = Law("lambda_image")
    for b1 in bobs:
        for b2 in bobs:
            l = S.coherence(b1, b2)
            law.check(l == eps(A.tensor_obj(S.obj(b1), S.obj(b2))),
                      lambda: f"λ^S({_fmt(b1)}, {_fmt(b2)}) ≠ ε(S b1 ⊗ S b2)")
            law_img.check(B.is_identity(G.mor(l)),
                          lambda: f"G λ^S({_fmt(b1)}, {_fmt(b2)}) is not an identity")
    law.into(report, depth)
    law_img.into(report, depth)

    report.extend(validate_functor(S, depth), prefix="section.")
    report.extend(validate_nat_trans(eps, depth), prefix="counit.")
    return report
