import glob
import json
import os

import pytest
from hypothesis import given, settings, strategies as st

from permcat import documents as docs
from permcat.category import validate
from permcat.generator import GeneratorConfig, InstanceGenerator
from permcat.monoid import FiniteMonoid
from permcat.smfunctor import validate_functor

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
SHIPPED = sorted(glob.glob(os.path.join(FIXTURES, "**", "*.json"), recursive=True))
LOADABLE = [p for p in SHIPPED if not p.endswith("not_associative.json")]


def read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@pytest.mark.parametrize("path", LOADABLE, ids=os.path.basename)
def test_fixture_round_trip(path):
    text = read(path)
    doc = docs.parse(text)
    assert docs.serialize(doc) == text
    again = docs.parse(docs.serialize(doc))
    assert json.loads(docs.serialize(again)) == json.loads(text)


def test_z2_fixture():
    M = docs.load(os.path.join(FIXTURES, "z2.json"))["value"]
    assert isinstance(M, FiniteMonoid) and M.order == 2


def test_non_associative_rejected_with_triple():
    with pytest.raises(docs.DocumentError, match=r"associativity fails at \(x, x, x\)"):
        docs.load(os.path.join(FIXTURES, "not_associative.json"))


def test_unknown_field_rejected():
    raw = json.loads(read(os.path.join(FIXTURES, "z2.json")))
    raw["body"]["colour"] = "red"
    with pytest.raises(docs.DocumentError, match="colour"):
        docs.parse(json.dumps(raw))


def test_unknown_envelope_field():
    raw = json.loads(read(os.path.join(FIXTURES, "z2.json")))
    raw["extra"] = 1
    with pytest.raises(docs.DocumentError):
        docs.parse(json.dumps(raw))


def test_bad_version():
    raw = json.loads(read(os.path.join(FIXTURES, "z2.json")))
    raw["schema_version"] = 99
    with pytest.raises(docs.DocumentError, match="schema_version"):
        docs.parse(json.dumps(raw))


def test_syntax_error_has_position():
    with pytest.raises(docs.DocumentError, match="line 2 column"):
        docs.parse('{"kind": "monoid",\n "body": }')


def test_path_in_nested_error():
    raw = json.loads(read(os.path.join(FIXTURES, "disc_to_chaotic.json")))
    raw["body"]["objects"]["map"]["a"] = "zz"
    with pytest.raises(docs.DocumentError, match=r"\$\.body\.objects"):
        docs.parse(json.dumps(raw))


def test_square_shares_categories():
    sq = docs.load(os.path.join(FIXTURES, "z2_collapse_square.json"))["value"]
    assert sq["fibration"].domain is sq["cofibration"].domain


def _reparse(kind, body):
    return docs.parse(docs.serialize({"kind": kind, "body": body}))["value"]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_generated_categories_round_trip(seed):
    C = InstanceGenerator(GeneratorConfig(seed=seed)).category()
    body = docs.category_body(C, 2)
    C2 = _reparse("category", body)
    assert docs.category_body(C2, 2) == body
    obs = C.objects.enumerate(2)
    for x in obs:
        for y in obs:
            assert len(C2.hom(x, y)) == len(C.hom(x, y))
    assert validate(C2, 2).ok


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_generated_functors_round_trip(seed):
    F = InstanceGenerator(GeneratorConfig(seed=seed)).unital_functor()
    body = docs.functor_body(F, 2)
    F2 = _reparse("functor", body)
    assert docs.functor_body(F2, 2) == body
    for f in F.domain.morphisms(1):
        assert docs.morphism_json(F2.codomain, F2.mor(f)) == docs.morphism_json(F.codomain, F.mor(f))
    assert validate_functor(F2, 1).ok
