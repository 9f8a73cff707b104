"""Free cofibrations, cofibration certificates via monoid lifting, the retract
decomposition of a cofibration, pushouts along free cofibrations and the
left-properness harness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .category import CategoryError, InducedCat, Morphism, PermCat, _fmt, _safe
from .monoid import (
    CoproductMonoid, FreeMonoid, MonoidError, MonoidHom, codiagonal, compose_homs, counit,
    constant_unit_hom, coproduct, coproduct_map, identity_hom, inclusions, solve_lifting,
)
from .report import CheckReport, Law
from .smfunctor import (
    NO, NOT_WITHIN_DEPTH, YES, FunctorError, MonoidalNatTrans, SectionDatum, SmFunctor,
    check_equivalence, compose_functors, find_section, is_acyclic_fibration,
    is_fully_faithful, is_strict, transport_functor, validate_functor,
)


class CofibrationError(ValueError):
    pass


# ------------------------------------------------------------ free cofibrations


@dataclass
class FreeCofibrationDatum:
    A: PermCat
    generators: tuple
    C: PermCat
    inclusion: SmFunctor


def payload_inclusion(A: PermCat, C: PermCat, name="i_A") -> SmFunctor:
    """The strict functor ``A -> C`` that is the left coproduct inclusion on
    objects and keeps morphism payloads.  Suitable when ``C`` is the same
    family as ``A`` over ``Ob(A) ∨ F(V)``."""
    ob = C.objects
    if not isinstance(ob, CoproductMonoid) or ob.left != A.objects:
        raise CofibrationError(f"{C!r} does not have objects Ob(A) ∨ M")
    inc = inclusions(ob)[0]
    return SmFunctor(A, C, inc, lambda f: Morphism(inc(f.source), inc(f.target), f.payload),
                     None, name=name)


def free_cofibration(A: PermCat, C: PermCat, inclusion: SmFunctor | None = None
                     ) -> FreeCofibrationDatum:
    ob = C.objects
    if not isinstance(ob, CoproductMonoid) or not isinstance(ob.right, FreeMonoid):
        raise CofibrationError(f"objects of {C!r} are not of the form Ob(A) ∨ F(V)")
    inclusion = inclusion or payload_inclusion(A, C)
    return FreeCofibrationDatum(A, ob.right.generators, C, inclusion)


def is_free_cofibration(F: SmFunctor, datum: FreeCofibrationDatum | None = None,
                        depth: int = 2) -> str:
    """Yes iff the object map is the coproduct inclusion into ``Ob(A) ∨ F(V)``
    and F preserves all structure strictly (checked to ``depth``)."""
    A, C = F.domain, F.codomain
    ob = C.objects
    if datum is not None and (datum.A is not A or datum.C is not C):
        return NO
    if isinstance(ob, FreeMonoid) and A.objects.is_trivial():
        # 1 ∨ F(V) presented directly as F(V)
        inc = constant_unit_hom(A.objects, ob)
    elif (isinstance(ob, CoproductMonoid) and isinstance(ob.right, FreeMonoid)
          and ob.left == A.objects):
        inc = inclusions(ob)[0]
    else:
        return NO
    try:
        if any(F.obj(a) != inc(a) for a in A.objects.enumerate(depth)):
            return NO
        if not is_strict(F, depth):
            return NO
    except (CategoryError, MonoidError, FunctorError):
        return NO
    return YES if validate_functor(F, depth).ok else NO


# ------------------------------------------------------------ recognition


def letter_generators(D: PermCat) -> list:
    """Objects of ``D`` of word length <= 1: they generate ``Ob(D)``."""
    return D.objects.enumerate(1)


def _cofibration_square(F: SmFunctor, X: list):
    C, D = F.domain, F.codomain
    if not isinstance(F.obj, MonoidHom):
        raise CofibrationError("the object map of a strict functor must be a MonoidHom")
    eps = counit(D.objects, X)
    N, i, _ = coproduct(C.objects, eps.domain)
    p = codiagonal(F.obj, eps)
    return N, i, p, eps


def recognize_cofibration(F: SmFunctor, depth: int, generators: list | None = None
                          ) -> Optional[MonoidHom]:
    """Lift in the square ``i : Ob C -> Ob C ∨ F(X)`` over ``p = Ob F ∨ ε``
    against ``Ob F : Ob C -> Ob D`` and ``id``.  Iterative deepening makes the
    returned lift the shallowest one."""
    D = F.codomain
    X = generators if generators is not None else letter_generators(D)
    N, i, p, _ = _cofibration_square(F, X)
    for d in range(1, depth + 1):
        lift = solve_lifting(i, F.obj, p, identity_hom(D.objects), d)
        if lift is not None:
            lift.name = "L_obj"
            return lift
    return None


# ------------------------------------------------------------ retract


@dataclass
class RetractWitness:
    F: SmFunctor
    E: InducedCat
    I: SmFunctor
    P: SmFunctor
    L: SmFunctor
    L_obj: MonoidHom
    p: MonoidHom
    generators: tuple


def build_retract(F: SmFunctor, L_obj: MonoidHom, generators: list | None = None
                  ) -> RetractWitness:
    C, D = F.domain, F.codomain
    X = generators if generators is not None else letter_generators(D)
    N, i, p, _ = _cofibration_square(F, X)
    if L_obj.domain != D.objects or L_obj.codomain != N:
        raise CofibrationError("object lift has the wrong domain or codomain")
    for d in D.objects.enumerate(2):
        if p(L_obj(d)) != d:
            raise CofibrationError(f"object lift is not a section of p at {_fmt(d)}")
    for c in C.objects.enumerate(2):
        if L_obj(F.obj(c)) != i(c):
            raise CofibrationError(f"object lift does not extend the inclusion at {_fmt(c)}")

    E = InducedCat(N, D, p, None, name=f"E({F!r})")
    I = SmFunctor(C, E, i, lambda f: Morphism(i(f.source), i(f.target), F.mor(f)), None, name="I")
    P = SmFunctor(E, D, p, lambda m: m.payload, None, name="P")
    L = SmFunctor(D, E, L_obj, lambda f: Morphism(L_obj(f.source), L_obj(f.target), f),
                  None, name="L")
    return RetractWitness(F, E, I, P, L, L_obj, p, tuple(N.right.generators))


RETRACT_CHECKS = ("P_after_I", "L_after_F", "P_after_L", "I_free_cofibration",
                  "P_acyclic_fibration")


def _agree(law: Law, first: Callable, second: Callable, C: PermCat, depth: int, label: str):
    for c in C.objects.enumerate(depth):
        law.check(first(c) == second(c), lambda: f"{label} differs at object {_fmt(c)}")
    for f in C.morphisms(depth):
        law.check(first(f) == second(f), lambda: f"{label} differs at {f!r}")


def verify_retract(w: RetractWitness, depth: int) -> CheckReport:
    F, I, P, L = w.F, w.I, w.P, w.L
    C, D = F.domain, F.codomain
    report = CheckReport()

    law = Law("P_after_I")
    _agree(law, lambda x: P(I(x)), F, C, depth, "P∘I vs F")
    law.into(report, depth)

    law = Law("L_after_F")
    _agree(law, lambda x: L(F(x)), I, C, depth, "L∘F vs I")
    law.into(report, depth)

    law = Law("P_after_L")
    _agree(law, lambda x: P(L(x)), lambda x: x, D, depth, "P∘L vs id")
    law.into(report, depth)

    law = Law("I_free_cofibration")
    law.check(is_free_cofibration(I, depth=min(depth, 2)) == YES,
              "I is not the coproduct inclusion or not strict")
    law.into(report, depth)

    law = Law("P_acyclic_fibration")
    try:
        verdict = is_acyclic_fibration(P, depth)
    except FunctorError as exc:
        verdict = str(exc)
    law.check(verdict == YES, lambda: f"P: {verdict}")
    law.into(report, depth)
    return report


# ------------------------------------------------------------ pushout


@dataclass
class PushoutResult:
    fibration: SmFunctor
    section: SectionDatum
    cofibration: FreeCofibrationDatum
    category: InducedCat
    gamma: SmFunctor
    P: SmFunctor
    q: Callable
    lam: Callable
    S_C: SmFunctor
    delta: MonoidalNatTrans


def pushout_free(G: SmFunctor, cof: FreeCofibrationDatum, depth: int,
                 section: SectionDatum | None = None) -> PushoutResult:
    """Pushout of the acyclic fibration ``G : A -> B`` along the free
    cofibration ``i_A : A -> C``, realised as the induced category over
    ``Ob(B) ∨ F(V)`` with base ``C``."""
    A, B = G.domain, G.codomain
    C, iA = cof.C, cof.inclusion
    if A is not cof.A:
        raise CofibrationError("the cofibration does not start at the domain of G")
    if not isinstance(G.obj, MonoidHom):
        raise FunctorError("G must be strict with a MonoidHom object map")
    if section is None:
        section = find_section(G, depth)
    s, S, eps = section.object_section, section.section, section.counit

    obC = C.objects
    V = obC.right
    Z, z_left, _ = coproduct(B.objects, V)
    inc_A, inc_V = inclusions(obC)

    def q_letter(side, x):
        return iA.obj(s(x)) if side == 0 else inc_V(x)

    def q(z):
        return obC.product(q_letter(side, x) for side, x in z)

    def lam(z1, z2):
        if z1 and z2 and z1[-1][0] == 0 and z2[0][0] == 0:
            b1, b2 = z1[-1][1], z2[0][1]
            u, w = z1[:-1], z2[1:]
            core = iA.mor(S.coherence(b1, b2))
            return C.tensor_all(C.identity(q(u)), core, C.identity(q(w)))
        return C.identity(q(Z.multiply(z1, z2)))

    GSF = InducedCat(Z, C, q, lam, name="G(S^F)")

    gamma = SmFunctor(B, GSF, z_left,
                      lambda f: Morphism(z_left(f.source), z_left(f.target), iA.mor(S.mor(f))),
                      None, name="Γ")

    def obj_target(c):
        return obC.product(iA.obj(s(G.obj(x))) if side == 0 else inc_V(x) for side, x in c)

    def delta(c):
        parts = [C.invert(iA.mor(eps(x))) if side == 0 else C.identity(inc_V(x))
                 for side, x in c]
        return C.tensor_all(*parts) if parts else C.identity(obC.unit)

    S_C, d = transport_functor(C, obj_target, delta)
    P_obj = coproduct_map(G.obj, identity_hom(V))
    if P_obj.codomain != Z:
        raise CofibrationError("object monoids of the pushout legs disagree")
    P = SmFunctor(C, GSF, P_obj,
                  lambda f: Morphism(P_obj(f.source), P_obj(f.target), S_C.mor(f)),
                  None, name="P")
    return PushoutResult(G, section, cof, GSF, gamma, P, q, lam, S_C, d)


def check_square(res: PushoutResult, depth: int) -> Law:
    law = Law("square_commutes")
    iA, G = res.cofibration.inclusion, res.fibration
    _agree(law, lambda x: res.P(iA(x)), lambda x: res.gamma(G(x)), res.fibration.domain,
           depth, "P∘i_A vs Γ∘G")
    return law


def _agree_law(name, first, second, C, depth, label):
    law = Law(name)
    _agree(law, first, second, C, depth, label)
    return law


def _preimage_object(res: PushoutResult, z):
    """``(s ∨ id)(z)``: an object of C sent to ``z`` by P."""
    C = res.cofibration.C
    inc_A, inc_V = inclusions(C.objects)
    s = res.section.object_section
    return C.objects.product(inc_A(s(x)) if side == 0 else inc_V(x) for side, x in z)


def universal_lift(res: PushoutResult, R: SmFunctor, T: SmFunctor, depth: int) -> SmFunctor:
    """The unique strict ``L : G(S^F) -> X`` with ``L Γ = T`` and ``L P = R``."""
    A, C, X = res.fibration.domain, res.cofibration.C, R.codomain
    iA, G = res.cofibration.inclusion, res.fibration
    if T.codomain is not X and T.codomain != X:
        raise CofibrationError("R and T have different codomains")
    law = Law("cocone")
    _agree(law, lambda x: R(iA(x)), lambda x: T(G(x)), A, depth, "R∘i_A vs T∘G")
    if law.counterexample:
        raise CofibrationError(f"cocone does not commute: {law.counterexample}")
    if not isinstance(R.obj, MonoidHom) or not isinstance(T.obj, MonoidHom):
        raise FunctorError("R and T must be strict")
    inc_V = inclusions(C.objects)[1]
    L_obj = codiagonal(T.obj, compose_homs(R.obj, inc_V))
    GSF = res.category
    for z1 in GSF.objects.enumerate(depth):
        for z2 in GSF.objects.enumerate(depth):
            image = R.mor(GSF.lam(z1, z2))
            if not X.is_identity(image):
                raise CofibrationError(f"R(λ({_fmt(z1)}, {_fmt(z2)})) = {image!r} is not an identity")
    return SmFunctor(GSF, X, L_obj, lambda m: R.mor(m.payload), None, name="L")


def verify_lift(res: PushoutResult, L: SmFunctor, R: SmFunctor, T: SmFunctor,
                depth: int) -> CheckReport:
    GSF, X = res.category, L.codomain
    report = CheckReport()
    law = Law("lambda_to_identity")
    for z1 in GSF.objects.enumerate(depth):
        for z2 in GSF.objects.enumerate(depth):
            law.check(X.is_identity(R.mor(GSF.lam(z1, z2))),
                      lambda: f"R(λ({_fmt(z1)}, {_fmt(z2)})) is not an identity")
    law.into(report, depth)

    law = Law("lift_strict")
    law.check(is_strict(L, depth), "object map of L is not multiplicative")
    law.into(report, depth)
    report.extend(validate_functor(L, depth), prefix="lift.")

    _agree_law("triangle_gamma", lambda x: L(res.gamma(x)), T, res.fibration.codomain, depth,
               "L∘Γ vs T").into(report, depth)
    _agree_law("triangle_P", lambda x: L(res.P(x)), R, res.cofibration.C, depth,
               "L∘P vs R").into(report, depth)

    # Every morphism of G(S^F) is P(f) for some f, so changing L at a single
    # morphism to any other value breaks L∘P = R there.
    law = Law("uniqueness")
    C = res.cofibration.C
    for m in GSF.morphisms(depth):
        c1, c2 = _preimage_object(res, m.source), _preimage_object(res, m.target)
        pre = [f for f in C.hom(c1, c2) if res.P.mor(f) == m]
        if not law.check(len(pre) >= 1, lambda: f"{m!r} is not in the image of P"):
            continue
        f = pre[0]
        for other in X.hom(L.obj(m.source), L.obj(m.target)):
            if other != L.mor(m):
                law.check(other != R.mor(f),
                          lambda: f"perturbing L at {m!r} to {other!r} keeps L∘P = R")
    law.into(report, depth)
    return report


def properness_check(G: SmFunctor, cof: FreeCofibrationDatum, depth: int,
                     result: PushoutResult | None = None) -> CheckReport:
    """Cobase change of the acyclic fibration ``G`` along ``cof`` is an
    equivalence."""
    report = CheckReport()
    try:
        res = result or pushout_free(G, cof, depth)
    except (FunctorError, CofibrationError, CategoryError, MonoidError) as exc:
        report.add("pushout_constructed", False, depth, 1, str(exc))
        return report
    report.add("pushout_constructed", True, depth, 1)
    check_square(res, depth).into(report, depth)

    law = Law("P_strict")
    law.check(is_strict(res.P, depth), "P is not strict")
    law.into(report, depth)

    law = Law("P_fully_faithful")
    bad = is_fully_faithful(res.P, depth)
    law.check(bad is None, lambda: f"P is not bijective on hom{tuple(_fmt(c) for c in bad)}")
    law.into(report, depth)

    law = Law("P_essentially_surjective")
    verdict = check_equivalence(res.P, depth)["essentially_surjective"]
    law.check(verdict == YES, lambda: f"P essentially surjective: {verdict}")
    law.into(report, depth)
    return report
