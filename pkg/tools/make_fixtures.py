"""Regenerate the JSON files under fixtures/.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from permcat import documents as docs  # noqa: E402
from permcat.monoid import (  # noqa: E402
    CoproductMonoid, FiniteMonoid, additive_group, cyclic_group, free_monoid, product_monoid,
    trivial_monoid,
)

ROOT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def write(name, kind, body):
    path = os.path.join(ROOT, name)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(docs.serialize({"kind": kind, "body": body}))


def mb(m):
    return docs.monoid_body(m)


def table_category(objects, morphisms, identity, compose, tensor, symmetry, name):
    """Tabulate callables into a table-category body.

    ``morphisms``: name -> (source, target); ``compose(g, f)``, ``tensor(f, g)``
    return names; ``symmetry(c1, c2)`` returns a name.
    """
    names = list(morphisms)
    comp = [[g, f, compose(g, f)] for f in names for g in names
            if morphisms[f][1] == morphisms[g][0]]
    tens = [[f, g, tensor(f, g)] for f in names for g in names]
    sym = [[a, b, symmetry(a, b)] for a in objects.elements for b in objects.elements]
    return {"type": "table", "objects": mb(objects),
            "morphisms": {n: list(st) for n, st in morphisms.items()},
            "identity": dict(identity), "compose": comp, "tensor": tens, "symmetry": sym,
            "name": name}


def semilattice():
    return FiniteMonoid(["e", "a"], "e", {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a",
                                          ("a", "a"): "a"}, name="S2")


def over_semilattice(name, endo_a, identity_a, compose_a, tensor_a, gamma_aa, tensor_e=None):
    """Semilattice objects {e, a}; hom(e, e) = {i}; hom(a, a) = endo_a."""
    S = semilattice()
    morphisms = {"i": ("e", "e"), **{m: ("a", "a") for m in endo_a}}

    def compose(g, f):
        if g == "i":
            return f
        return compose_a(g, f)

    def tensor(f, g):
        if tensor_e is not None:
            r = tensor_e(f, g)
            if r is not None:
                return r
        if f == "i":
            return g
        if g == "i":
            return f
        return tensor_a(f, g)

    def symmetry(c1, c2):
        if c1 == "a" and c2 == "a":
            return gamma_aa
        return "i" if (c1, c2) == ("e", "e") else identity_a

    return table_category(S, morphisms, {"e": "i", "a": identity_a}, compose, tensor, symmetry,
                          name)


def deloop_table(objects, group, gamma, connected=False, name=None):
    """Deloop-style table: hom(c1, c2) = group (c1 = c2 unless connected),
    composition and tensor are the group law, symmetry from ``gamma``."""
    morphisms, ident = {}, {}
    for c1 in objects.elements:
        for c2 in objects.elements:
            if c1 != c2 and not connected:
                continue
            for h in group.elements:
                morphisms[f"{c1}>{c2}:{h}"] = (c1, c2)
            if c1 == c2:
                ident[c1] = f"{c1}>{c1}:{group.unit}"

    def parts(n):
        st, h = n.rsplit(":", 1)
        s, t = st.split(">")
        return s, t, h

    def compose(g, f):
        s, _, hf = parts(f)
        _, t, hg = parts(g)
        return f"{s}>{t}:{group.multiply(hg, hf)}"

    def tensor(f, g):
        s1, t1, h1 = parts(f)
        s2, t2, h2 = parts(g)
        return f"{objects.multiply(s1, s2)}>{objects.multiply(t1, t2)}:{group.multiply(h1, h2)}"

    def symmetry(c1, c2):
        return f"{objects.multiply(c1, c2)}>{objects.multiply(c2, c1)}:{gamma(c1, c2)}"

    return table_category(objects, morphisms, ident, compose, tensor, symmetry, name)


def negative_controls():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    h2 = additive_group(2)

    # hom_typing: Discrete(Z2) with a ⊗ a sent to the wrong identity
    body = deloop_table(z2, trivial_monoid(), lambda a, b: "e", name="bad tensor typing")
    for row in body["tensor"]:
        if row[0] == "a>a:e" and row[1] == "a>a:e":
            row[2] = "a>a:e"
    write("negative/hom_typing.json", "category", body)

    # identity: the declared identity at a is an idempotent, not the unit
    write("negative/identity.json", "category", over_semilattice(
        "bad identity", ["1", "x"], "x",
        lambda g, f: "1" if (g, f) == ("1", "1") else "x",
        lambda f, g: "x", "x"))

    # associativity: a unital but non-associative composition on hom(a, a)
    magma = {("x", "x"): "y", ("x", "y"): "1", ("y", "x"): "x", ("y", "y"): "1"}
    write("negative/associativity.json", "category", over_semilattice(
        "bad associativity", ["1", "x", "y"], "1",
        lambda g, f: f if g == "1" else g if f == "1" else magma[g, f],
        lambda f, g: "1", "1"))

    # tensor_monoid: tensoring with id_e collapses x
    write("negative/tensor_monoid.json", "category", over_semilattice(
        "bad tensor unit", ["1", "x"], "1",
        lambda g, f: "1" if (g, f) == ("1", "1") else "x",
        lambda f, g: "1", "1",
        tensor_e=lambda f, g: "1" if "x" in (f, g) else None))

    # interchange: composition is a semilattice, tensor is Z2
    write("negative/interchange.json", "category", over_semilattice(
        "bad interchange", ["1", "x"], "1",
        lambda g, f: "1" if (g, f) == ("1", "1") else "x",
        lambda f, g: "1" if f == g else "x", "1"))

    # symmetry_typing: Chaotic(Z2) with γ(a, a) re-pointed into hom(e, a)
    C = {f"{s}{t}": (s, t) for s in z2.elements for t in z2.elements}
    body = table_category(
        z2, C, {"e": "ee", "a": "aa"},
        lambda g, f: f"{C[f][0]}{C[g][1]}",
        lambda f, g: f"{z2.multiply(C[f][0], C[g][0])}{z2.multiply(C[f][1], C[g][1])}",
        lambda a, b: "ea" if (a, b) == ("a", "a") else
        f"{z2.multiply(a, b)}{z2.multiply(b, a)}",
        "Chaotic(Z2) with a bad symmetry")
    write("negative/symmetry_typing.json", "category", body)

    # symmetry_involution: bilinear but not antisymmetric-compatible γ
    v4 = product_monoid(z2, z2)

    def bit(c, i):
        return 1 if c.split(",")[i] == "a" else 0

    write("negative/symmetry_involution.json", "category", deloop_table(
        v4, h2, lambda x, y: str(bit(x, 0) * bit(y, 1)), name="bad involution"))

    # symmetry_naturality: γ(a, a) = 1 in Chaotic(Z2) × BZ2
    write("negative/symmetry_naturality.json", "category", deloop_table(
        z2, h2, lambda x, y: "1" if (x, y) == ("a", "a") else "0", connected=True,
        name="bad naturality"))

    # symmetry_coherence: γ not additive in its first argument
    write("negative/symmetry_coherence.json", "category", deloop_table(
        z3, h2, lambda x, y: "1" if {x, y} == {"a", "a2"} else "0", name="bad hexagon"))


def main():
    z2, z3 = cyclic_group(2), additive_group(3)
    one = trivial_monoid()
    write("z2.json", "monoid", mb(z2))
    # unital but (x·x)·x ≠ x·(x·x)
    magma = {("x", "x"): "y", ("x", "y"): "e", ("y", "x"): "x", ("y", "y"): "e"}
    write("not_associative.json", "monoid", {
        "kind": "finite", "elements": ["e", "x", "y"], "unit": "e", "name": "not a monoid",
        "table": {f"{p},{q}": (q if p == "e" else p if q == "e" else magma[p, q])
                  for p in "exy" for q in "exy"}})
    write("deloop_z3.json", "category", {"type": "deloop", "objects": mb(one), "group": mb(z3)})

    terminal = {"type": "discrete", "objects": mb(one), "name": "𝟙"}
    write("disc_to_chaotic.json", "functor", {
        "domain": {"type": "discrete", "objects": mb(z2)},
        "codomain": {"type": "chaotic", "objects": mb(z2)},
        "objects": {"map": {"e": "e", "a": "a"}}, "morphisms": "unique"})
    write("not_a_cofibration.json", "functor", {
        "domain": terminal, "codomain": {"type": "discrete", "objects": mb(z2)},
        "objects": {"map": {"e": "e"}}, "morphisms": "identity"})
    sv = free_monoid(["s"])
    write("point_to_free.json", "functor", {
        "domain": terminal, "codomain": {"type": "discrete", "objects": mb(sv)},
        "objects": {"map": {"e": []}}, "morphisms": "identity"})

    zv = CoproductMonoid(z2, free_monoid(["v"]))
    chaotic_z2 = {"type": "chaotic", "objects": mb(z2)}
    chaotic_zv = {"type": "chaotic", "objects": mb(zv)}
    inclusion = {"domain": chaotic_z2, "codomain": chaotic_zv,
                 "objects": {"map": {"e": [], "a": [[0, "a"]]}}, "morphisms": "payload"}
    write("free_cofibration.json", "functor", inclusion)

    ov = CoproductMonoid(one, free_monoid(["v"]))
    chaotic_ov = {"type": "chaotic", "objects": mb(ov)}
    collapse = {"domain": chaotic_z2, "codomain": terminal,
                "objects": {"map": {"e": "e", "a": "e"}}, "morphisms": "unique"}
    write("z2_collapse_square.json", "square", {
        "fibration": collapse, "cofibration": inclusion,
        "cocone": {
            "R": {"domain": chaotic_zv, "codomain": chaotic_ov,
                  "objects": {"left": {"map": {"e": [], "a": []}},
                              "right": {"map": {"v": [[1, ["v"]]]}}},
                  "morphisms": "unique"},
            "T": {"domain": terminal, "codomain": chaotic_ov,
                  "objects": {"map": {"e": []}}, "morphisms": "unique"}}})
    negative_controls()


if __name__ == "__main__":
    main()
