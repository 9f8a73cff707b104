import pytest
from hypothesis import given, settings, strategies as st

from permcat.category import (
    CategoryError, ChaoticCat, DeloopCat, DiscreteCat, InducedCat, Morphism, terminal,
)
from permcat.gabriel import gabriel_factorize, induced_category, verify_factorization
from permcat.generator import GeneratorConfig, InstanceGenerator
from permcat.monoid import (
    CoproductMonoid, MonoidHom, additive_group, constant_unit_hom, cyclic_group, free_monoid,
    identity_hom, trivial_monoid,
)
from permcat.smfunctor import FunctorError, SmFunctor, identity_functor, transport_lambda

Z2, Z3 = cyclic_group(2), additive_group(3)
one = trivial_monoid()


def hom_sizes(C, depth=2):
    obs = C.objects.enumerate(depth)
    return {(x, y): len(C.hom(x, y)) for x in obs for y in obs}


class TestInducedCategory:
    def test_identity_object_map(self):
        D = DeloopCat(Z2, Z3)
        E = induced_category(Z2, D, identity_hom(Z2))
        assert hom_sizes(E) == hom_sizes(D)
        f = Morphism("a", "a", "1")
        lifted = E.lift("a", "a", f)
        assert E.compose(lifted, lifted).payload == D.compose(f, f)

    def test_collapse_onto_deloop(self):
        E = induced_category(Z2, DeloopCat(one, Z3), constant_unit_hom(Z2, one))
        assert set(hom_sizes(E).values()) == {3} and len(hom_sizes(E)) == 4

    def test_collapse_onto_terminal(self):
        M = CoproductMonoid(Z2, free_monoid(["v"]))
        E = induced_category(M, terminal(), constant_unit_hom(M, one))
        assert set(hom_sizes(E).values()) == {1}

    def test_pullback_law(self):
        # morphisms of E <-> ((m1, m2), g) with g : q m1 -> q m2
        D = DeloopCat(Z2, additive_group(2), connected=True)
        z4 = cyclic_group(4)
        q = MonoidHom(z4, Z2, {"e": "e", "a": "a", "a2": "e", "a3": "a"})
        E = induced_category(z4, D, q)
        pairs = {(m1, m2, g) for m1 in z4.elements for m2 in z4.elements
                 for g in D.hom(q(m1), q(m2))}
        assert {(f.source, f.target, f.payload) for f in E.morphisms(1)} == pairs
        for f in E.morphisms(1):
            assert (f.payload.source, f.payload.target) == (q(f.source), q(f.target))

    def test_pullback_cone(self):
        # a cone N -> M x M, N -> Mor(D) factors uniquely through Mor(E)
        D = DeloopCat(one, additive_group(2))
        E = induced_category(Z2, D, constant_unit_hom(Z2, one))
        N = Z2
        u = {"e": ("e", "e"), "a": ("a", "a")}
        w = {"e": Morphism("e", "e", "0"), "a": Morphism("e", "e", "1")}
        induced = {n: E.lift(*u[n], w[n]) for n in N.elements}
        for n in N.elements:
            assert E.contains(induced[n])
            assert [m for m in E.hom(*u[n]) if m.payload == w[n]] == [induced[n]]
        for n1 in N.elements:
            for n2 in N.elements:
                assert E.tensor(induced[n1], induced[n2]) == induced[N.multiply(n1, n2)]

    def test_missing_coherence_for_non_hom(self):
        # Z3 -> Z2 sending both non-units to a is not multiplicative
        E = InducedCat(cyclic_group(3), DeloopCat(Z2, Z3),
                       lambda m: "a" if m != "e" else "e")
        with pytest.raises(CategoryError):
            E.lam("a", "a")


class TestFactorize:
    def test_identity(self):
        C = DeloopCat(Z2, Z3)
        F = identity_functor(C)
        fac = gabriel_factorize(F, 3)
        assert hom_sizes(fac.category) == hom_sizes(C)
        assert verify_factorization(F, fac, 3).ok

    def test_discrete_into_chaotic(self):
        C, D = DiscreteCat(Z2), ChaoticCat(Z2)
        F = SmFunctor(C, D, identity_hom(Z2), lambda f: D.hom(f.source, f.target)[0])
        fac = gabriel_factorize(F, 3)
        assert set(hom_sizes(fac.category).values()) == {1}
        assert all(fac.gamma.mor(f).payload == F.mor(f) for f in C.morphisms(2))
        assert all(fac.delta.obj(c) == c for c in "ea")
        assert verify_factorization(F, fac, 3).ok

    def test_point_into_deloop(self):
        D = DeloopCat(one, Z3)
        F = SmFunctor(terminal(), D, identity_hom(one), lambda f: D.identity("e"))
        fac = gabriel_factorize(F, 3)
        assert len(fac.category.hom("e", "e")) == 3
        r = verify_factorization(F, fac, 3)
        assert r.ok and r["delta_fully_faithful"].passed

    def test_non_strict_input(self):
        D = DeloopCat(Z2, Z3)
        F = identity_functor(D)
        G, _ = transport_lambda(F, F.obj, F.mor,
                                lambda c: Morphism(c, c, "0" if c == "e" else "1"))
        fac = gabriel_factorize(G, 3)
        G_F = fac.category
        for c1 in Z2.elements:
            for c2 in Z2.elements:
                assert G_F.symmetry(c1, c2).payload == G.mor(D.symmetry(c1, c2))
        assert verify_factorization(G, fac, 3).ok

    def test_perturbed_delta(self):
        D = DeloopCat(one, Z3)
        F = SmFunctor(terminal(), D, identity_hom(one), lambda f: D.identity("e"))
        fac = gabriel_factorize(F)
        bad = SmFunctor(fac.category, D, fac.delta.obj, lambda m: Morphism("e", "e", "1"))
        r = verify_factorization(F, fac._replace(delta=bad), 3)
        assert not r["composite_equals_functor"].passed

    def test_invalid_functor_rejected(self):
        D = DeloopCat(one, Z3)
        F = SmFunctor(D, D, identity_hom(one),
                      lambda f: Morphism("e", "e", "2") if f.payload == "1" else f)
        with pytest.raises(FunctorError):
            gabriel_factorize(F, 3)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_generated_factorizations(seed):
    F = InstanceGenerator(GeneratorConfig(seed=seed)).unital_functor()
    fac = gabriel_factorize(F)
    assert verify_factorization(F, fac, 2).ok
