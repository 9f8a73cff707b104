import pytest
from hypothesis import given, settings, strategies as st

from permcat.category import (
    CategoryError, ChaoticCat, DeloopCat, DiscreteCat, Morphism, TableCat, terminal, validate,
)
from permcat.generator import GeneratorConfig, InstanceGenerator
from permcat.monoid import (
    FiniteMonoid, MonoidHom, additive_group, constant_unit_hom, cyclic_group, free_monoid,
    identity_hom, product_monoid, trivial_monoid,
)
from permcat.smfunctor import (
    FUNCTOR_LAWS, NO, YES, FunctorError, MonoidalNatTrans, SmFunctor, check_equivalence,
    coherence_uniqueness, compose_functors, find_section, identity_functor,
    identity_transformation, is_acyclic_fibration, transport_functor, transport_lambda,
    validate_functor, validate_nat_trans, validate_section,
)

Z2, Z3, H2 = cyclic_group(2), additive_group(3), additive_group(2)
one = trivial_monoid()
T = terminal()


def idempotent_category():
    """Objects {e, a} with a·a = a; hom(a, a) = {1, x}, x idempotent, and
    ⊗ on hom(a, a) equal to composition."""
    S2 = FiniteMonoid(["e", "a"], "e", {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a",
                                        ("a", "a"): "a"})
    ends = ["1", "x"]
    compose = {("i", "i"): "i"}
    compose.update({(g, f): "1" if g == f == "1" else "x" for g in ends for f in ends})
    tensor = dict(compose)
    tensor.update({("i", f): f for f in ends})
    tensor.update({(f, "i"): f for f in ends})
    return TableCat(S2, {"i": ("e", "e"), "1": ("a", "a"), "x": ("a", "a")},
                    {"e": "i", "a": "1"}, compose, tensor,
                    {("e", "e"): "i", ("e", "a"): "1", ("a", "e"): "1", ("a", "a"): "1"})


def collapse(C):
    """The unique strict functor into the terminal category."""
    return SmFunctor(C, T, constant_unit_hom(C.objects, one), lambda f: T.identity("e"))


def unique_map(C, D, h):
    """Strict functor between chaotic categories over a monoid hom."""
    return SmFunctor(C, D, h, lambda f: D.hom(h(f.source), h(f.target))[0])


class TestValidateFunctor:
    def test_identity(self):
        r = validate_functor(identity_functor(DeloopCat(Z2, Z3)), 3)
        assert r.ok and [e.law for e in r.entries] == list(FUNCTOR_LAWS)

    def test_strict_collapse_of_free(self):
        S = free_monoid(["s"])
        F = SmFunctor(DiscreteCat(S), DiscreteCat(one), constant_unit_hom(S, one),
                      lambda f: Morphism("e", "e"))
        assert validate_functor(F, 3).ok

    def test_repointed_morphism_breaks_composition(self):
        D = DeloopCat(one, Z3)

        def mor(f):
            return Morphism("e", "e", "2") if f.payload == "1" else f

        r = validate_functor(SmFunctor(D, D, identity_hom(one), mor), 3)
        assert "composition" in r.failed()


class TestNatTrans:
    def test_identity(self):
        assert validate_nat_trans(identity_transformation(identity_functor(ChaoticCat(Z2))), 3).ok

    def test_counit_of_chaotic_collapse(self):
        sd = find_section(collapse(ChaoticCat(Z2)), 3)
        assert validate_nat_trans(sd.counit, 3).ok

    def test_wrong_hom_component(self):
        C = ChaoticCat(Z2)
        sd = find_section(collapse(C), 3)
        eps = sd.counit
        bad = MonoidalNatTrans(eps.source, eps.target,
                               lambda c: C.hom("a", "e")[0] if c == "a" else eps.components(c))
        assert validate_nat_trans(bad, 3).failed() == ["component_typing"]

    def test_unnatural_components(self):
        C = DeloopCat(Z2, H2, connected=True)
        F = identity_functor(C)
        alpha = MonoidalNatTrans(F, F, lambda c: Morphism(c, c, "1" if c == "a" else "0"))
        assert validate_nat_trans(alpha, 3).failed() == ["naturality"]


class TestTransport:
    def test_identity_alpha_keeps_lambda(self):
        D = DeloopCat(one, Z3)
        F = identity_functor(D)
        G, alpha = transport_lambda(F, F.obj, F.mor, D.identity)
        assert G.coherence("e", "e") == F.coherence("e", "e")
        assert validate_functor(G, 3).ok and validate_nat_trans(alpha, 3).ok

    @pytest.mark.parametrize("k", ["0", "1", "2"])
    def test_conjugation_formula_in_z3(self, k):
        # (k + k) + 0 - k = k
        D = DeloopCat(one, Z3)
        F = identity_functor(D)
        G, alpha = transport_lambda(F, F.obj, F.mor, lambda c: Morphism(c, c, k))
        assert G.coherence("e", "e") == Morphism("e", "e", k)
        r = validate_functor(G, 3)
        assert r.failed() == ([] if k == "0" else ["coherence_unital"])

    def test_uniqueness_probe(self):
        D = DeloopCat(Z2, Z3)
        F = identity_functor(D)
        G, alpha = transport_lambda(F, F.obj, F.mor,
                                    lambda c: Morphism(c, c, "0" if c == "e" else "2"))
        law = coherence_uniqueness(alpha, 3)
        assert law.counterexample is None and law.checked > 0

    def test_non_iso_component(self):
        C = idempotent_category()
        assert validate(C, 3).ok
        F = identity_functor(C)
        x = Morphism("a", "a", "x")
        G, alpha = transport_lambda(F, F.obj, F.mor, lambda c: x if c == "a" else C.identity(c))
        with pytest.raises(CategoryError, match="not invertible"):
            G.coherence("a", "e")
        assert "invertible" in validate_nat_trans(alpha, 3).failed()

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 2**64 - 1))
    def test_generated_transport(self, seed):
        gen = InstanceGenerator(GeneratorConfig(seed=seed))
        G, alpha = gen.transported(gen.deloop_functor())
        assert validate_functor(G, 3).ok
        assert validate_nat_trans(alpha, 3).ok


class TestTransportFunctor:
    def test_identity_delta(self):
        C = DeloopCat(Z2, Z3)
        S, delta = transport_functor(C, lambda c: c, C.identity)
        f = Morphism("a", "a", "2")
        assert S.mor(f) == f and validate_nat_trans(delta, 3).ok

    def test_chaotic_unique(self):
        C = ChaoticCat(Z2)
        S, delta = transport_functor(C, lambda c: c, lambda c: C.hom(c, c)[0])
        assert all(S.mor(f) == f for f in C.morphisms(2))

    def test_deloop_conjugation(self):
        D = DeloopCat(one, Z3)
        S, delta = transport_functor(D, lambda c: c, lambda c: Morphism(c, c, "1"))
        assert all(S.mor(f) == f for f in D.hom("e", "e"))
        assert S.coherence("e", "e") == Morphism("e", "e", "1")


class TestEquivalence:
    def test_identity(self):
        assert check_equivalence(identity_functor(ChaoticCat(Z2)), 3) == {
            "fully_faithful": YES, "essentially_surjective": YES}

    def test_chaotic_collapse(self):
        assert check_equivalence(collapse(ChaoticCat(Z2)), 3) == {
            "fully_faithful": YES, "essentially_surjective": YES}

    def test_discrete_collapse_not_full(self):
        assert check_equivalence(collapse(DiscreteCat(Z2)), 3)["fully_faithful"] == NO

    def test_acyclic(self):
        assert is_acyclic_fibration(identity_functor(DeloopCat(Z2, Z3)), 3) == YES
        assert is_acyclic_fibration(collapse(ChaoticCat(Z2)), 3) == YES
        assert is_acyclic_fibration(collapse(DiscreteCat(free_monoid(["s"]))), 3) == NO

    def test_acyclic_needs_strict(self):
        D = DeloopCat(one, Z3)
        F = identity_functor(D)
        G, _ = transport_lambda(F, F.obj, F.mor, lambda c: Morphism(c, c, "1"))
        with pytest.raises(FunctorError):
            is_acyclic_fibration(G, 3)


def _equivalences():
    z4 = cyclic_group(4)
    mod = MonoidHom(z4, Z2, {"e": "e", "a": "a", "a2": "e", "a3": "a"})
    c4, c2, c1 = ChaoticCat(z4), ChaoticCat(Z2), ChaoticCat(one)
    return [
        identity_functor(c4), unique_map(c4, c2, mod), unique_map(c2, c1, constant_unit_hom(Z2, one)),
        unique_map(c1, c2, MonoidHom(one, Z2, {"e": "e"})), identity_functor(c2),
    ]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_composites_of_equivalences(picks):
    eqs = _equivalences()
    F = None
    for i in picks:
        G = eqs[i]
        if F is None:
            F = G
        elif G.domain is F.codomain:
            F = compose_functors(G, F)
    assert check_equivalence(F, 3) == {"fully_faithful": YES, "essentially_surjective": YES}


class TestSection:
    def test_identity(self):
        C = DeloopCat(Z2, Z3)
        sd = find_section(identity_functor(C), 3)
        assert all(sd.section.mor(f) == f for f in C.morphisms(2))
        assert all(C.is_identity(sd.counit.components(c)) for c in C.objects.enumerate(2))

    def test_chaotic_collapse(self):
        sd = find_section(collapse(ChaoticCat(Z2)), 3)
        assert sd.object_section("e") == "e"
        assert validate_section(sd, 3).ok

    def test_projection(self):
        V4 = product_monoid(Z2, Z2)
        proj = MonoidHom(V4, Z2, {x: x.split(",")[0] for x in V4.elements})
        A, B = ChaoticCat(V4), ChaoticCat(Z2)
        G = unique_map(A, B, proj)
        sd = find_section(G, 3)
        assert [sd.object_section(b) for b in ("e", "a")] == ["e,e", "a,e"]
        for x in V4.elements:
            assert B.is_identity(G.mor(sd.counit.components(x)))
        assert validate_section(sd, 3).ok

    def test_not_acyclic(self):
        with pytest.raises(FunctorError):
            find_section(collapse(DiscreteCat(Z2)), 3)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**64 - 1))
    def test_generated_acyclic_fibrations(self, seed):
        G = InstanceGenerator(GeneratorConfig(seed=seed)).acyclic_fibration()
        assert is_acyclic_fibration(G, 3) == YES
        sd = find_section(G, 3)
        assert validate_section(sd, 3).ok
        B = G.codomain
        for b1 in B.objects.enumerate(2):
            for b2 in B.objects.enumerate(2):
                assert B.is_identity(G.mor(sd.section.coherence(b1, b2)))
