"""JSON documents for monoids, categories, functors, transformations and
pushout squares.

Every document is an envelope ``{"schema_version", "kind", "body"}``.  Parsing
rejects unknown fields and reports the JSON path of the offending value.
Functors are serialized with explicit morphism tables over a bounded set of
objects; on parse, a morphism outside the table raises ``KeyError``.
"""

from __future__ import annotations

import contextlib
import contextvars
import json

from .category import (
    CategoryError, ChaoticCat, DeloopCat, DiscreteCat, InducedCat, Morphism, PermCat, TableCat,
)
from .monoid import (
    CoproductMonoid, FiniteMonoid, FreeMonoid, Monoid, MonoidError, MonoidHom,
)
from .smfunctor import MonoidalNatTrans, SmFunctor

SCHEMA_VERSION = 1
KINDS = ("monoid", "category", "functor", "nat_trans", "square", "instance")


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _fields(obj, path, required=(), optional=()):
    if not isinstance(obj, dict):
        raise DocumentError(path, f"expected an object, got {type(obj).__name__}")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise DocumentError(path, f"unknown field(s) {sorted(unknown)}")
    for k in required:
        if k not in obj:
            raise DocumentError(path, f"missing field {k!r}")


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except DocumentError:
        raise
    except (MonoidError, CategoryError, KeyError, TypeError, ValueError) as exc:
        raise DocumentError(path, str(exc)) from None


# ------------------------------------------------------------ envelope


def parse(text: str) -> dict:
    """Parse envelope text; returns ``{"kind", "body", "value"}`` where value
    is the constructed object."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return parse_envelope(raw)


def parse_envelope(raw, path="$") -> dict:
    _fields(raw, path, ("schema_version", "kind", "body"))
    if raw["schema_version"] != SCHEMA_VERSION:
        raise DocumentError(f"{path}.schema_version", f"unsupported version {raw['schema_version']!r}")
    kind = raw["kind"]
    if kind not in KINDS:
        raise DocumentError(f"{path}.kind", f"unknown kind {kind!r}")
    body = raw["body"]
    bp = f"{path}.body"
    parser = {
        "monoid": parse_monoid,
        "category": parse_category,
        "functor": parse_functor,
        "nat_trans": parse_nat_trans,
        "square": parse_square,
        "instance": parse_instance,
    }[kind]
    if _SHARED.get() is None:
        with _shared_categories():
            value = parser(body, bp)
    else:
        value = parser(body, bp)
    return {"kind": kind, "body": body, "value": value}


def envelope(kind: str, body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "body": body}


def serialize(doc: dict) -> str:
    """Canonical text of an envelope (``{"kind", "body"}`` or a parse result)."""
    return json.dumps(envelope(doc["kind"], doc["body"]), sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def load(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())

_SHARED: contextvars.ContextVar = contextvars.ContextVar("shared_categories", default=None)


# ------------------------------------------------------------ monoids


def _split_pair(key: str, elements, path):
    hits = []
    for i, ch in enumerate(key):
        if ch == "," and key[:i] in elements and key[i + 1:] in elements:
            hits.append((key[:i], key[i + 1:]))
    if len(hits) != 1:
        raise DocumentError(path, f"cannot split table key {key!r} into two elements")
    return hits[0]


def parse_monoid(body, path="$") -> Monoid:
    if not isinstance(body, dict) or "kind" not in body:
        raise DocumentError(path, "monoid needs a 'kind'")
    kind = body["kind"]
    if kind == "finite":
        _fields(body, path, ("kind", "elements", "unit", "table"), ("name",))
        elements = body["elements"]
        if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
            raise DocumentError(f"{path}.elements", "expected a list of strings")
        if len(set(elements)) != len(elements):
            raise DocumentError(f"{path}.elements", "duplicate element names")
        if not isinstance(body["table"], dict):
            raise DocumentError(f"{path}.table", "expected an object")
        table = {}
        for key, val in body["table"].items():
            table[_split_pair(key, elements, f"{path}.table")] = val
        return _wrap(path, FiniteMonoid, elements, body["unit"], table, body.get("name"))
    if kind == "free":
        _fields(body, path, ("kind", "generators"))
        gens = body["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise DocumentError(f"{path}.generators", "expected a list of strings")
        return _wrap(path, FreeMonoid, gens)
    if kind == "coproduct":
        _fields(body, path, ("kind", "left", "right"))
        return CoproductMonoid(parse_monoid(body["left"], f"{path}.left"),
                               parse_monoid(body["right"], f"{path}.right"))
    raise DocumentError(f"{path}.kind", f"unknown monoid kind {kind!r}")


def monoid_body(m: Monoid) -> dict:
    if isinstance(m, FiniteMonoid):
        body = {"kind": "finite", "elements": list(m.elements), "unit": m.unit,
                "table": {f"{x},{y}": m.multiply(x, y) for x in m.elements for y in m.elements}}
        if m.name:
            body["name"] = m.name
        return body
    if isinstance(m, FreeMonoid):
        return {"kind": "free", "generators": list(m.generators)}
    return {"kind": "coproduct", "left": monoid_body(m.left), "right": monoid_body(m.right)}


def parse_element(m: Monoid, j, path):
    return _wrap(path, m.from_json, j)


def parse_hom(body, dom: Monoid, cod: Monoid, path) -> MonoidHom:
    """Body: ``{"map": {key: element}}`` (keys are elements of a finite domain
    or generators of a free one) or ``{"left": ..., "right": ...}``."""
    if isinstance(dom, CoproductMonoid):
        _fields(body, path, ("left", "right"))
        return _wrap(path, MonoidHom, dom, cod, (parse_hom(body["left"], dom.left, cod, f"{path}.left"),
                                                 parse_hom(body["right"], dom.right, cod, f"{path}.right")))
    _fields(body, path, ("map",))
    if not isinstance(body["map"], dict):
        raise DocumentError(f"{path}.map", "expected an object")
    table = {k: parse_element(cod, v, f"{path}.map.{k}") for k, v in body["map"].items()}
    return _wrap(path, MonoidHom, dom, cod, table)


def parse_object_map(body, dom: Monoid, cod: Monoid, path):
    """A hom body, or ``{"table": [[object, image], ...]}`` for a plain
    unit-preserving assignment (only the listed objects are defined)."""
    if isinstance(body, dict) and "table" in body:
        _fields(body, path, ("table",))
        rows = body["table"]
        if not isinstance(rows, list):
            raise DocumentError(f"{path}.table", "expected a list of [object, image]")
        table = {}
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != 2:
                raise DocumentError(f"{path}.table[{i}]", "expected [object, image]")
            table[parse_element(dom, row[0], f"{path}.table[{i}][0]")] = \
                parse_element(cod, row[1], f"{path}.table[{i}][1]")
        if table.get(dom.unit, cod.unit) != cod.unit:
            raise DocumentError(f"{path}.table", "the unit is not sent to the unit")
        table.setdefault(dom.unit, cod.unit)

        def assign(x):
            try:
                return table[x]
            except KeyError:
                raise KeyError(f"object map undefined at {x!r}") from None
        assign.table = table
        return assign
    return parse_hom(body, dom, cod, path)


def object_map_body(fn, dom: Monoid, cod: Monoid, depth: int) -> dict:
    if isinstance(fn, MonoidHom):
        return hom_body(fn)
    return {"table": [[dom.to_json(x), cod.to_json(fn(x))] for x in dom.enumerate(depth)]}


def hom_body(h: MonoidHom) -> dict:
    if isinstance(h.domain, CoproductMonoid):
        left, right = h.assignment
        return {"left": hom_body(left), "right": hom_body(right)}
    return {"map": {k: h.codomain.to_json(v) for k, v in h.assignment.items()}}


# ------------------------------------------------------------ categories


def _payload_json(C: PermCat, p):
    if isinstance(C, InducedCat):
        return morphism_json(C.base, p)
    return p


def morphism_json(C: PermCat, f: Morphism) -> dict:
    return {"source": C.objects.to_json(f.source), "target": C.objects.to_json(f.target),
            "payload": _payload_json(C, f.payload)}


def parse_morphism(C: PermCat, j, path) -> Morphism:
    _fields(j, path, ("source", "target"), ("payload",))
    s = parse_element(C.objects, j["source"], f"{path}.source")
    t = parse_element(C.objects, j["target"], f"{path}.target")
    p = j.get("payload")
    if isinstance(C, InducedCat):
        p = parse_morphism(C.base, p, f"{path}.payload")
    f = Morphism(s, t, p)
    if not C.contains(f):
        raise DocumentError(path, f"{f!r} is not a morphism of {C!r}")
    return f


@contextlib.contextmanager
def _shared_categories():
    """Within the block, equal category bodies parse to one shared object."""
    token = _SHARED.set({})
    try:
        yield
    finally:
        _SHARED.reset(token)


def parse_category(body, path="$") -> PermCat:
    cache = _SHARED.get()
    if cache is None:
        return _parse_category(body, path)
    key = json.dumps(body, sort_keys=True)
    if key not in cache:
        cache[key] = _parse_category(body, path)
    return cache[key]


def _parse_category(body, path="$") -> PermCat:
    if not isinstance(body, dict) or "type" not in body:
        raise DocumentError(path, "category needs a 'type'")
    kind = body["type"]
    if kind in ("discrete", "chaotic"):
        _fields(body, path, ("type", "objects"), ("name",))
        M = parse_monoid(body["objects"], f"{path}.objects")
        cls = DiscreteCat if kind == "discrete" else ChaoticCat
        return _wrap(path, cls, M, body.get("name"))
    if kind in ("deloop", "chaotic_deloop"):
        _fields(body, path, ("type", "objects", "group"), ("name",))
        M = parse_monoid(body["objects"], f"{path}.objects")
        H = parse_monoid(body["group"], f"{path}.group")
        if not isinstance(H, FiniteMonoid):
            raise DocumentError(f"{path}.group", "group must be finite")
        return _wrap(path, DeloopCat, M, H, kind == "chaotic_deloop", body.get("name"))
    if kind == "table":
        _fields(body, path, ("type", "objects", "morphisms", "identity", "compose", "tensor",
                             "symmetry"), ("name",))
        M = parse_monoid(body["objects"], f"{path}.objects")
        if not isinstance(M, FiniteMonoid):
            raise DocumentError(f"{path}.objects", "table categories need finite objects")

        def triples(key, n):
            rows = body[key]
            if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == n for r in rows):
                raise DocumentError(f"{path}.{key}", f"expected a list of {n}-element lists")
            return rows

        morphisms = body["morphisms"]
        if not isinstance(morphisms, dict):
            raise DocumentError(f"{path}.morphisms", "expected an object name -> [source, target]")
        compose = {(g, f): h for g, f, h in triples("compose", 3)}
        tensor = {(f, g): h for f, g, h in triples("tensor", 3)}
        symmetry = {(a, b): n for a, b, n in triples("symmetry", 3)}
        return _wrap(path, TableCat, M, morphisms, body["identity"], compose, tensor, symmetry,
                     body.get("name"))
    if kind == "induced":
        _fields(body, path, ("type", "objects", "base", "object_map"), ("coherence", "name"))
        M = parse_monoid(body["objects"], f"{path}.objects")
        D = parse_category(body["base"], f"{path}.base")
        q = parse_object_map(body["object_map"], M, D.objects, f"{path}.object_map")
        coherence = None
        if "coherence" in body:
            coherence = _parse_pair_table(body["coherence"], M, D, q, f"{path}.coherence")
        return _wrap(path, InducedCat, M, D, q, coherence, body.get("name"))
    raise DocumentError(f"{path}.type", f"unknown category type {kind!r}")


def _parse_pair_table(rows, M, D, q, path):
    if not isinstance(rows, list):
        raise DocumentError(path, "expected a list of [c1, c2, morphism]")
    table = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 3:
            raise DocumentError(f"{path}[{i}]", "expected [c1, c2, morphism]")
        c1 = parse_element(M, row[0], f"{path}[{i}][0]")
        c2 = parse_element(M, row[1], f"{path}[{i}][1]")
        table[c1, c2] = parse_morphism(D, row[2], f"{path}[{i}][2]")

    # pairs involving the unit are identities and are never listed
    def lookup(c1, c2):
        if (c1, c2) in table:
            return table[c1, c2]
        if c1 == M.unit or c2 == M.unit:
            return D.identity(q(M.multiply(c1, c2)))
        raise KeyError(f"no coherence entry for ({c1!r}, {c2!r})")
    return lookup


def category_body(C: PermCat, depth: int = 2) -> dict:
    name = {"name": C.name} if C.name else {}
    if isinstance(C, DiscreteCat):
        return {"type": "discrete", "objects": monoid_body(C.objects), **name}
    if isinstance(C, ChaoticCat):
        return {"type": "chaotic", "objects": monoid_body(C.objects), **name}
    if isinstance(C, DeloopCat):
        return {"type": "chaotic_deloop" if C.connected else "deloop",
                "objects": monoid_body(C.objects), "group": monoid_body(C.group), **name}
    if isinstance(C, TableCat):
        return {"type": "table", "objects": monoid_body(C.objects),
                "morphisms": {n: list(st) for n, st in C.morphism_types.items()},
                "identity": dict(C.identity_table),
                "compose": [[g, f, h] for (g, f), h in C.compose_table.items()],
                "tensor": [[f, g, h] for (f, g), h in C.tensor_table.items()],
                "symmetry": [[a, b, n] for (a, b), n in C.symmetry_table.items()], **name}
    if isinstance(C, InducedCat):
        body = {"type": "induced", "objects": monoid_body(C.objects),
                "base": category_body(C.base, depth),
                "object_map": object_map_body(C.object_map, C.objects, C.base.objects, depth),
                **name}
        if C.coherence is not None:
            obs = C.objects.enumerate(depth)
            body["coherence"] = [[C.objects.to_json(a), C.objects.to_json(b),
                                  morphism_json(C.base, C.lam(a, b))]
                                 for a in obs for b in obs
                                 if a != C.objects.unit and b != C.objects.unit]
        return body
    raise DocumentError("$", f"cannot serialize {type(C).__name__}")


# ------------------------------------------------------------ functors


def parse_functor(body, path="$") -> SmFunctor:
    _fields(body, path, ("domain", "codomain", "objects", "morphisms"), ("lambda", "name"))
    C = parse_category(body["domain"], f"{path}.domain")
    D = parse_category(body["codomain"], f"{path}.codomain")
    obj = parse_object_map(body["objects"], C.objects, D.objects, f"{path}.objects")
    mor = _parse_morphism_rule(body["morphisms"], C, D, obj, f"{path}.morphisms")
    lam = None
    if "lambda" in body:
        table = {}
        rows = body["lambda"]
        if not isinstance(rows, list):
            raise DocumentError(f"{path}.lambda", "expected a list of [c1, c2, morphism]")
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != 3:
                raise DocumentError(f"{path}.lambda[{i}]", "expected [c1, c2, morphism]")
            c1 = parse_element(C.objects, row[0], f"{path}.lambda[{i}][0]")
            c2 = parse_element(C.objects, row[1], f"{path}.lambda[{i}][1]")
            table[c1, c2] = parse_morphism(D, row[2], f"{path}.lambda[{i}][2]")

        def lam(c1, c2):
            if (c1, c2) in table:
                return table[c1, c2]
            return D.identity(obj(C.tensor_obj(c1, c2)))
        lam.table = table
    F = SmFunctor(C, D, obj, mor, lam, name=body.get("name"))
    F.document = body
    return F


def _parse_morphism_rule(rule, C, D, obj, path):
    """``"payload"`` keeps payloads, ``"unique"`` picks the only morphism of
    the target hom, ``"identity"`` sends everything to identities; a list of
    ``[morphism, image]`` pairs is an explicit table."""
    if rule == "payload":
        return lambda f: Morphism(obj(f.source), obj(f.target), f.payload)
    if rule == "unique":
        def unique(f):
            h = D.hom(obj(f.source), obj(f.target))
            if len(h) != 1:
                raise CategoryError(f"target hom of {f!r} has {len(h)} morphisms")
            return h[0]
        return unique
    if rule == "identity":
        return lambda f: D.identity(obj(f.source))
    if not isinstance(rule, list):
        raise DocumentError(path, "expected 'payload', 'unique', 'identity' or a table")
    table = {}
    for i, row in enumerate(rule):
        if not isinstance(row, list) or len(row) != 2:
            raise DocumentError(f"{path}[{i}]", "expected [morphism, image]")
        table[parse_morphism(C, row[0], f"{path}[{i}][0]")] = \
            parse_morphism(D, row[1], f"{path}[{i}][1]")
    return lambda f: table[f]


def functor_body(F: SmFunctor, depth: int = 2, rule=None) -> dict:
    """Tabulate ``F`` on objects of word length <= depth.  ``rule`` names a
    closed-form morphism rule to emit instead of a table."""
    if getattr(F, "document", None) is not None and rule is None:
        return F.document
    C, D = F.domain, F.codomain
    body: dict = {"domain": category_body(C, depth), "codomain": category_body(D, depth),
                  "objects": object_map_body(F.obj, C.objects, D.objects, depth)}
    if rule is not None:
        body["morphisms"] = rule
    else:
        body["morphisms"] = [[morphism_json(C, f), morphism_json(D, F.mor(f))]
                             for f in C.morphisms(depth)]
    if F.lam is not None:
        obs = C.objects.enumerate(depth)
        body["lambda"] = [[C.objects.to_json(a), C.objects.to_json(b),
                           morphism_json(D, F.coherence(a, b))]
                          for a in obs for b in obs
                          if not D.is_identity(F.coherence(a, b))]
    if F.name:
        body["name"] = F.name
    return body


# ------------------------------------------------------------ the rest


def parse_nat_trans(body, path="$") -> MonoidalNatTrans:
    _fields(body, path, ("source", "target", "components"), ("name",))
    F = parse_functor(body["source"], f"{path}.source")
    G = parse_functor(body["target"], f"{path}.target")
    rows = body["components"]
    if not isinstance(rows, list):
        raise DocumentError(f"{path}.components", "expected a list of [object, morphism]")
    table = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 2:
            raise DocumentError(f"{path}.components[{i}]", "expected [object, morphism]")
        c = parse_element(F.domain.objects, row[0], f"{path}.components[{i}][0]")
        table[c] = parse_morphism(F.codomain, row[1], f"{path}.components[{i}][1]")

    def comp(c):
        if c in table:
            return table[c]
        raise KeyError(f"no component at {c!r}")
    return MonoidalNatTrans(F, G, comp, name=body.get("name"))


def parse_square(body, path="$") -> dict:
    """``{"fibration": functor, "cofibration": functor, "cocone"?: {"R", "T"}}``."""
    _fields(body, path, ("fibration", "cofibration"), ("cocone", "name"))
    out = {"fibration": parse_functor(body["fibration"], f"{path}.fibration"),
           "cofibration": parse_functor(body["cofibration"], f"{path}.cofibration")}
    if "cocone" in body:
        cp = f"{path}.cocone"
        _fields(body["cocone"], cp, ("R", "T"))
        out["R"] = parse_functor(body["cocone"]["R"], f"{cp}.R")
        out["T"] = parse_functor(body["cocone"]["T"], f"{cp}.T")
    return out


def parse_instance(body, path="$") -> dict:
    _fields(body, path, ("label", "items"))
    items = body["items"]
    if not isinstance(items, dict):
        raise DocumentError(f"{path}.items", "expected an object of documents")
    return {"label": body["label"],
            "items": {k: parse_envelope(v, f"{path}.items.{k}") for k, v in items.items()}}
