import itertools
import os

import pytest
from hypothesis import given, settings, strategies as st

from permcat import documents as docs
from permcat.category import (
    PERMCAT_LAWS, CategoryError, ChaoticCat, DeloopCat, DiscreteCat, InducedCat, Morphism,
    full_subcategory, standard_category, terminal, validate,
)
from permcat.generator import GeneratorConfig, InstanceGenerator, left_zero
from permcat.monoid import (
    CoproductMonoid, additive_group, constant_unit_hom, cyclic_group, free_monoid, trivial_monoid,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
Z2, Z3 = cyclic_group(2), additive_group(3)
one = trivial_monoid()


class TestFamilies:
    def test_discrete_trivial_is_terminal(self):
        C = standard_category("discrete", one)
        assert C.objects.enumerate(3) == ["e"]
        assert len(C.hom("e", "e")) == 1
        assert validate(C, 3).ok

    def test_chaotic_singleton_homs(self):
        C = ChaoticCat(Z2)
        assert all(len(C.hom(x, y)) == 1 for x in "ea" for y in "ea")

    def test_deloop_z3(self):
        D = DeloopCat(one, Z3)
        assert len(D.hom("e", "e")) == 3
        one_ = Morphism("e", "e", "1")
        assert D.tensor(one_, one_) == Morphism("e", "e", "2")
        two = Morphism("e", "e", "2")
        assert D.compose(two, two) == one_

    def test_discrete_symmetry_is_identity(self):
        assert DiscreteCat(Z2).symmetry("a", "a") == DiscreteCat(Z2).identity("e")

    def test_discrete_needs_commutative(self):
        with pytest.raises(CategoryError):
            DiscreteCat(left_zero())

    def test_deloop_needs_abelian(self):
        with pytest.raises(CategoryError):
            DeloopCat(one, left_zero())

    def test_compose_with_identity(self):
        C = DeloopCat(Z2, Z3)
        f = Morphism("a", "a", "2")
        assert C.compose(C.identity("a"), f) == f == C.compose(f, C.identity("a"))

    def test_not_composable(self):
        C = ChaoticCat(Z2)
        with pytest.raises(CategoryError):
            C.compose(C.hom("e", "a")[0], C.hom("e", "a")[0])

    def test_foreign_morphism(self):
        with pytest.raises(CategoryError):
            DeloopCat(one, Z3).compose(Morphism("e", "e", "7"), Morphism("e", "e", "0"))


class TestFullSubcategory:
    def test_unit_only(self):
        C = DeloopCat(Z2, Z3)
        sub = full_subcategory(C, one)
        assert len(sub.hom("e", "e")) == len(C.hom("e", "e"))

    def test_free_part_of_chaotic(self):
        V = free_monoid(["v"])
        C = ChaoticCat(CoproductMonoid(Z2, V))
        sub = full_subcategory(C, V)
        assert len(sub.hom(("v",), ("v", "v"))) == 1
        assert validate(sub, 2).ok

    def test_whole_category(self):
        V = free_monoid(["v"])
        C = DiscreteCat(V)
        sub = full_subcategory(C, V)
        for x in V.enumerate(3):
            for y in V.enumerate(3):
                assert len(sub.hom(x, y)) == len(C.hom(x, y))


SHIPPED = [
    terminal(), DeloopCat(one, Z3), ChaoticCat(Z2), DiscreteCat(Z2),
    ChaoticCat(CoproductMonoid(Z2, free_monoid(["v"]))), DeloopCat(cyclic_group(4), Z3, True),
    DiscreteCat(free_monoid(["s"])), DeloopCat(free_monoid(["s"]), additive_group(2)),
    InducedCat(Z2, DeloopCat(one, Z3), constant_unit_hom(Z2, one)),
]


@pytest.mark.parametrize("C", SHIPPED, ids=repr)
def test_shipped_families_validate(C):
    report = validate(C, 3)
    assert report.ok, report.summary()
    assert [e.law for e in report.entries] == list(PERMCAT_LAWS)
    assert all(e.depth == 3 for e in report.entries)


def test_induced_collapse_counts():
    E = InducedCat(Z2, DeloopCat(one, Z3), constant_unit_hom(Z2, one))
    assert all(len(E.hom(x, y)) == 3 for x in "ea" for y in "ea")


def test_induced_over_terminal_is_chaotic():
    M = CoproductMonoid(Z2, free_monoid(["v"]))
    E = InducedCat(M, terminal(), constant_unit_hom(M, one))
    for x in M.enumerate(2):
        for y in M.enumerate(2):
            assert len(E.hom(x, y)) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_generated_categories_validate(seed):
    C = InstanceGenerator(GeneratorConfig(seed=seed)).category()
    assert validate(C, 2).ok


def test_interchange_exhaustive_depth_two():
    C = DeloopCat(cyclic_group(3), additive_group(2), connected=True)
    obs = C.objects.enumerate(2)
    mors = [f for x in obs for y in obs for f in C.hom(x, y)]
    for f1, f2, g1, g2 in itertools.product(mors, repeat=4):
        if f2.target != f1.source or g2.target != g1.source:
            continue
        lhs = C.compose(C.tensor(f1, g1), C.tensor(f2, g2))
        assert lhs == C.tensor(C.compose(f1, f2), C.compose(g1, g2))


NEGATIVE = sorted(f[:-5] for f in os.listdir(os.path.join(FIXTURES, "negative")))


def test_every_law_has_a_negative_control():
    assert sorted(PERMCAT_LAWS) == NEGATIVE


@pytest.mark.parametrize("law", NEGATIVE)
def test_negative_control_fails_only_its_law(law):
    C = docs.load(os.path.join(FIXTURES, "negative", f"{law}.json"))["value"]
    report = validate(C, 3)
    assert report.failed() == [law]
    assert report[law].counterexample
