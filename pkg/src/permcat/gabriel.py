"""Induced categories and the factorization of a unital symmetric monoidal
functor into a strict identity-on-objects part followed by a fully faithful
part."""

from __future__ import annotations

from typing import Callable, NamedTuple

from .category import InducedCat, Morphism, PermCat, validate
from .monoid import Monoid, MonoidHom, identity_hom
from .report import CheckReport, Law
from .smfunctor import (
    FunctorError, SmFunctor, compose_functors, is_fully_faithful, is_strict, validate_functor,
)


def induced_category(M: Monoid, D: PermCat, q: Callable, lam: Callable | None = None,
                     name=None) -> InducedCat:
    """``hom(m1, m2) = D(q m1, q m2)``; ``lam`` is required unless q is
    multiplicative (checked lazily, per pair)."""
    return InducedCat(M, D, q, lam, name=name)


class Factorization(NamedTuple):
    category: InducedCat
    gamma: SmFunctor
    delta: SmFunctor


def gabriel_factorize(F: SmFunctor, depth: int | None = None) -> Factorization:
    """``F = Δ ∘ Γ`` with Γ strict and the identity on objects, Δ fully faithful.

    When ``depth`` is given, F is validated first and rejected on any failure.
    """
    if depth is not None:
        report = validate_functor(F, depth)
        if not report.ok:
            raise FunctorError(f"invalid functor: {report.failed()}")
    C, D = F.domain, F.codomain
    G = InducedCat(C.objects, D, F.obj, F.lam, name=f"G({F!r})")

    def gamma_mor(f: Morphism) -> Morphism:
        return Morphism(f.source, f.target, F.mor(f))

    def delta_mor(m: Morphism) -> Morphism:
        return m.payload

    gamma = SmFunctor(C, G, identity_hom(C.objects), gamma_mor, None, name="Γ")
    delta = SmFunctor(G, D, F.obj, delta_mor, F.lam, name="Δ")
    return Factorization(G, gamma, delta)


def verify_factorization(F: SmFunctor, fac: Factorization, depth: int) -> CheckReport:
    G, gamma, delta = fac
    C = F.domain
    report = CheckReport()

    law = Law("composite_equals_functor")
    for c in C.objects.enumerate(depth):
        law.check(delta.obj(gamma.obj(c)) == F.obj(c), lambda: f"ΔΓ differs from F at object {c!r}")
    for f in C.morphisms(depth):
        law.check(delta.mor(gamma.mor(f)) == F.mor(f), lambda: f"ΔΓ({f!r}) ≠ F({f!r})")
    law.into(report, depth)

    law = Law("gamma_identity_on_objects")
    for c in C.objects.enumerate(depth):
        law.check(gamma.obj(c) == c, lambda: f"Γ moves object {c!r}")
    law.check(G.objects == C.objects, "object monoids differ")
    law.into(report, depth)

    law = Law("gamma_strict")
    law.check(is_strict(gamma, depth), "Γ is not strict on objects")
    gr = validate_functor(gamma, depth)
    for e in gr.entries:
        law.check(e.passed, lambda: f"{e.law}: {e.counterexample}")
    law.into(report, depth)

    law = Law("delta_fully_faithful")
    bad = is_fully_faithful(delta, depth)
    law.check(bad is None, lambda: f"Δ is not bijective on hom{bad!r}")
    law.into(report, depth)

    report.extend(validate_functor(delta, depth), prefix="delta.")
    report.extend(validate(G, depth), prefix="induced.")
    return report
