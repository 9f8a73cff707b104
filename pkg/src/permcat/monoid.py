"""Finitely presented monoids: finite tables, free monoids and free products.

Elements are plain hashable values kept in normal form:

* finite monoid   -> the element name (``str``)
* free monoid     -> a tuple of generator names (``()`` is the unit)
* coproduct       -> a tuple of ``(side, letter)`` pairs, ``side`` 0 for the
  left factor and 1 for the right, each letter a non-unit element of that
  factor and no two adjacent letters on the same side.
"""

from __future__ import annotations

import itertools
import json
from typing import Callable, Hashable, Iterable, Optional, Sequence

Element = Hashable


class MonoidError(ValueError):
    pass


class Monoid:
    """Common interface; see the three concrete presentations below."""

    kind = ""

    @property
    def unit(self) -> Element:
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def length(self, x) -> int:
        """Word length used for depth truncation."""
        raise NotImplementedError

    def enumerate(self, depth: int) -> list:
        raise NotImplementedError

    def sort_key(self, x):
        raise NotImplementedError

    def is_commutative(self) -> bool:
        raise NotImplementedError

    def is_trivial(self) -> bool:
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, j):
        raise NotImplementedError

    def check(self, x):
        if not self.contains(x):
            raise MonoidError(f"{x!r} is not an element of {self}")
        return x

    def product(self, xs: Iterable) -> Element:
        acc = self.unit
        for x in xs:
            acc = self.multiply(acc, x)
        return acc

    def symbol(self, x) -> str:
        """An unambiguous string naming ``x`` (used as a free generator)."""
        return json.dumps(self.to_json(x), separators=(",", ":"))


class FiniteMonoid(Monoid):
    kind = "finite"

    def __init__(self, elements: Sequence[str], unit: str, table: dict, name: str | None = None,
                 check: bool = True):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise MonoidError("duplicate elements")
        if unit not in self.elements:
            raise MonoidError(f"unit {unit!r} is not an element")
        self._unit = unit
        self.table = dict(table)
        self.name = name
        self._index = {x: i for i, x in enumerate(self.elements)}
        for x in self.elements:
            for y in self.elements:
                z = self.table.get((x, y))
                if z is None:
                    raise MonoidError(f"table has no entry for ({x}, {y})")
                if z not in self._index:
                    raise MonoidError(f"table entry ({x}, {y}) -> {z!r} is not an element")
        if check:
            bad = self.law_violation()
            if bad is not None:
                raise MonoidError(bad)

    def law_violation(self) -> Optional[str]:
        """First failure of unitality or associativity, or None."""
        e, m = self._unit, self.table
        for x in self.elements:
            if m[e, x] != x or m[x, e] != x:
                return f"unit law fails at {x}"
        for x, y, z in itertools.product(self.elements, repeat=3):
            if m[m[x, y], z] != m[x, m[y, z]]:
                return f"associativity fails at ({x}, {y}, {z})"
        return None

    @property
    def unit(self):
        return self._unit

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, x):
        return isinstance(x, str) and x in self._index

    def multiply(self, x, y):
        try:
            return self.table[x, y]
        except KeyError:
            raise MonoidError(f"({x!r}, {y!r}) not in {self}") from None

    def length(self, x):
        return 0 if x == self._unit else 1

    def enumerate(self, depth):
        # finite monoids are listed in full regardless of depth
        return [self._unit] + [x for x in self.elements if x != self._unit]

    def sort_key(self, x):
        return (self.length(x), self._index[x])

    def is_commutative(self):
        return all(self.table[x, y] == self.table[y, x]
                   for x, y in itertools.combinations(self.elements, 2))

    def is_trivial(self):
        return len(self.elements) == 1

    def to_json(self, x):
        return self.check(x)

    def from_json(self, j):
        return self.check(j)

    def _key(self):
        return ("finite", self.elements, self._unit, frozenset(self.table.items()))

    def __eq__(self, other):
        return isinstance(other, FiniteMonoid) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name or f"Finite{list(self.elements)}"


class FreeMonoid(Monoid):
    kind = "free"

    def __init__(self, generators: Iterable[str]):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise MonoidError(f"duplicate generators in {list(gens)}")
        for g in gens:
            if not isinstance(g, str):
                raise MonoidError(f"generator {g!r} is not a string")
        self.generators = gens
        self._index = {g: i for i, g in enumerate(gens)}

    @property
    def unit(self):
        return ()

    def contains(self, x):
        return isinstance(x, tuple) and all(isinstance(g, str) and g in self._index for g in x)

    def multiply(self, x, y):
        return self.check(x) + self.check(y)

    def gen(self, g) -> tuple:
        if g not in self._index:
            raise MonoidError(f"{g!r} is not a generator of {self}")
        return (g,)

    def length(self, x):
        return len(x)

    def enumerate(self, depth):
        out = []
        for n in range(depth + 1):
            out.extend(itertools.product(self.generators, repeat=n))
        return out

    def sort_key(self, x):
        return (len(x), tuple(self._index[g] for g in x))

    def is_commutative(self):
        return len(self.generators) <= 1

    def is_trivial(self):
        return not self.generators

    def to_json(self, x):
        return list(self.check(x))

    def from_json(self, j):
        if not isinstance(j, list):
            raise MonoidError(f"free monoid element must be a list, got {j!r}")
        return self.check(tuple(j))

    def __eq__(self, other):
        return isinstance(other, FreeMonoid) and self.generators == other.generators

    def __hash__(self):
        return hash(("free", self.generators))

    def __repr__(self):
        return "Free{" + ",".join(self.generators) + "}"


class CoproductMonoid(Monoid):
    """Free product ``left ∨ right`` with reduced alternating words."""

    kind = "coproduct"

    def __init__(self, left: Monoid, right: Monoid):
        self.left = left
        self.right = right
        self.factors = (left, right)
        self._products: dict = {}

    @property
    def unit(self):
        return ()

    def letter(self, side: int, x) -> tuple:
        return self.normalize([(side, x)])

    def normalize(self, raw: Iterable) -> tuple:
        out: list = []
        for item in raw:
            try:
                side, letter = item
            except (TypeError, ValueError):
                raise MonoidError(f"{item!r} is not a (side, letter) pair") from None
            if side not in (0, 1):
                raise MonoidError(f"bad side {side!r}")
            factor = self.factors[side]
            factor.check(letter)
            if letter == factor.unit:
                continue
            if out and out[-1][0] == side:
                merged = factor.multiply(out.pop()[1], letter)
                if merged != factor.unit:
                    out.append((side, merged))
            else:
                out.append((side, letter))
        return tuple(out)

    def contains(self, x):
        if not isinstance(x, tuple):
            return False
        last = None
        for item in x:
            if not (isinstance(item, tuple) and len(item) == 2 and item[0] in (0, 1)):
                return False
            side, letter = item
            factor = self.factors[side]
            if side == last or not factor.contains(letter) or letter == factor.unit:
                return False
            last = side
        return True

    def multiply(self, x, y):
        key = (x, y)
        try:
            return self._products[key]
        except KeyError:
            pass
        z = self._products[key] = self.normalize(self.check(x) + self.check(y))
        return z

    def length(self, x):
        return sum(self.factors[s].length(l) for s, l in x)

    def enumerate(self, depth):
        pools = []
        for factor in self.factors:
            pools.append([(x, factor.length(x)) for x in factor.enumerate(depth)
                          if x != factor.unit and factor.length(x) <= depth])
        out = []

        def grow(word, last, budget):
            out.append(tuple(word))
            for side in (0, 1):
                if side == last:
                    continue
                for x, n in pools[side]:
                    if n <= budget:
                        word.append((side, x))
                        grow(word, side, budget - n)
                        word.pop()

        grow([], None, depth)
        out.sort(key=self.sort_key)
        return out

    def sort_key(self, x):
        return (self.length(x), tuple((s, self.factors[s].sort_key(l)) for s, l in x))

    def is_commutative(self):
        if self.left.is_trivial():
            return self.right.is_commutative()
        if self.right.is_trivial():
            return self.left.is_commutative()
        return False

    def is_trivial(self):
        return self.left.is_trivial() and self.right.is_trivial()

    def to_json(self, x):
        return [[s, self.factors[s].to_json(l)] for s, l in self.check(x)]

    def from_json(self, j):
        if not isinstance(j, list):
            raise MonoidError(f"coproduct element must be a list, got {j!r}")
        x = tuple((s, self.factors[s].from_json(l)) for s, l in j)
        return self.check(x)

    def __eq__(self, other):
        return (isinstance(other, CoproductMonoid)
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash(("coproduct", self.left, self.right))

    def __repr__(self):
        return f"({self.left!r} ∨ {self.right!r})"


# ---------------------------------------------------------------- homomorphisms


class MonoidHom:
    """A homomorphism stored by its values on generators.

    ``assignment`` is a dict on elements (finite domain), a dict on generators
    (free domain) or a pair of component homs (coproduct domain).
    """

    def __init__(self, domain: Monoid, codomain: Monoid, assignment, name: str | None = None):
        self.domain = domain
        self.codomain = codomain
        self.name = name
        if isinstance(domain, CoproductMonoid):
            left, right = assignment
            if left.domain != domain.left or right.domain != domain.right:
                raise MonoidError("component homs do not match the coproduct factors")
            if left.codomain != codomain or right.codomain != codomain:
                raise MonoidError("component homs must share the codomain")
            self.assignment = (left, right)
        else:
            table = dict(assignment)
            keys = domain.elements if isinstance(domain, FiniteMonoid) else domain.generators
            missing = [k for k in keys if k not in table]
            if missing:
                raise MonoidError(f"no image for {missing[0]!r}")
            for k, v in table.items():
                if k not in keys:
                    raise MonoidError(f"{k!r} is not a generator of {domain}")
                codomain.check(v)
            self.assignment = table
        self._cache: dict = {}

    def __call__(self, x):
        try:
            return self._cache[x]
        except KeyError:
            pass
        dom = self.domain
        dom.check(x)
        if isinstance(dom, FiniteMonoid):
            y = self.assignment[x]
        elif isinstance(dom, FreeMonoid):
            y = self.codomain.product(self.assignment[g] for g in x)
        else:
            y = self.codomain.product(self.assignment[s](l) for s, l in x)
        self._cache[x] = y
        return y

    def generator_images(self):
        """Flat, comparable description of the hom."""
        if isinstance(self.domain, CoproductMonoid):
            return tuple(c.generator_images() for c in self.assignment)
        return tuple(sorted(((k, self.assignment[k]) for k in self.assignment), key=repr))

    def __eq__(self, other):
        return (isinstance(other, MonoidHom) and self.domain == other.domain
                and self.codomain == other.codomain
                and self.generator_images() == other.generator_images())

    def __hash__(self):
        return hash((self.domain, self.codomain, self.generator_images()))

    def law_violation(self) -> Optional[str]:
        """Exact check: finite domains are checked on every pair, free domains
        are homs by construction, coproducts componentwise."""
        if isinstance(self.domain, CoproductMonoid):
            for c in self.assignment:
                bad = c.law_violation()
                if bad:
                    return bad
            return None
        if self(self.domain.unit) != self.codomain.unit:
            return "unit is not sent to the unit"
        if isinstance(self.domain, FiniteMonoid):
            d = self.domain
            for x, y in itertools.product(d.elements, repeat=2):
                if self(d.multiply(x, y)) != self.codomain.multiply(self(x), self(y)):
                    return f"not multiplicative at ({x}, {y})"
        return None

    def __repr__(self):
        return self.name or f"MonoidHom({self.domain!r} -> {self.codomain!r})"


def identity_hom(m: Monoid) -> MonoidHom:
    if isinstance(m, FiniteMonoid):
        return MonoidHom(m, m, {x: x for x in m.elements}, name=f"id_{m!r}")
    if isinstance(m, FreeMonoid):
        return MonoidHom(m, m, {g: (g,) for g in m.generators}, name=f"id_{m!r}")
    return MonoidHom(m, m, inclusions(m), name=f"id_{m!r}")


def compose_homs(second: MonoidHom, first: MonoidHom) -> MonoidHom:
    """``second ∘ first``."""
    if first.codomain != second.domain:
        raise MonoidError(f"cannot compose {second!r} after {first!r}")
    dom = first.domain
    if isinstance(dom, CoproductMonoid):
        return MonoidHom(dom, second.codomain,
                         tuple(compose_homs(second, c) for c in first.assignment))
    return MonoidHom(dom, second.codomain,
                     {k: second(v) for k, v in first.assignment.items()})


def constant_unit_hom(dom: Monoid, cod: Monoid) -> MonoidHom:
    if isinstance(dom, CoproductMonoid):
        return MonoidHom(dom, cod, (constant_unit_hom(dom.left, cod),
                                    constant_unit_hom(dom.right, cod)))
    keys = dom.elements if isinstance(dom, FiniteMonoid) else dom.generators
    return MonoidHom(dom, cod, {k: cod.unit for k in keys})


def hom_from_function(dom: Monoid, cod: Monoid, f: Callable, name=None) -> MonoidHom:
    """Tabulate ``f`` on the generators of ``dom``; the result is a hom only
    if ``f`` is one (use :meth:`MonoidHom.law_violation`)."""
    if isinstance(dom, CoproductMonoid):
        return MonoidHom(dom, cod, (hom_from_function(dom.left, cod, lambda x: f(dom.letter(0, x))),
                                    hom_from_function(dom.right, cod, lambda x: f(dom.letter(1, x)))),
                         name=name)
    if isinstance(dom, FiniteMonoid):
        return MonoidHom(dom, cod, {x: f(x) for x in dom.elements}, name=name)
    return MonoidHom(dom, cod, {g: f((g,)) for g in dom.generators}, name=name)


# ---------------------------------------------------------------- constructors


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(["e"], "e", {("e", "e"): "e"}, name="1")


def cyclic_group(n: int, prefix: str = "") -> FiniteMonoid:
    """Z/n with elements ``e, a, a2, ...`` (or ``prefix0, prefix1, ...``)."""
    if prefix:
        names = [f"{prefix}{i}" for i in range(n)]
    else:
        names = ["e"] + ["a" if i == 1 else f"a{i}" for i in range(1, n)]
    table = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
    return FiniteMonoid(names, names[0], table, name=f"Z{n}")


def additive_group(n: int) -> FiniteMonoid:
    """Z/n with elements ``"0", "1", ...``; used for hom-set groups."""
    names = [str(i) for i in range(n)]
    table = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
    return FiniteMonoid(names, "0", table, name=f"Z{n}")


def product_monoid(m: FiniteMonoid, n: FiniteMonoid) -> FiniteMonoid:
    """Cartesian product; element ``(x, y)`` is named ``"x,y"``."""
    pairs = [(x, y) for x in m.elements for y in n.elements]
    name = {p: f"{p[0]},{p[1]}" for p in pairs}
    table = {(name[p], name[q]): name[(m.multiply(p[0], q[0]), n.multiply(p[1], q[1]))]
             for p in pairs for q in pairs}
    unit = (m.unit, n.unit)
    # unit first keeps enumeration order natural
    ordered = [name[unit]] + [name[p] for p in pairs if p != unit]
    return FiniteMonoid(ordered, name[unit], table, name=f"{m!r}×{n!r}")


def free_monoid(symbols: Iterable[str]) -> FreeMonoid:
    return FreeMonoid(symbols)


def coproduct(m: Monoid, n: Monoid) -> tuple[CoproductMonoid, MonoidHom, MonoidHom]:
    c = CoproductMonoid(m, n)
    left, right = inclusions(c)
    return c, left, right


def inclusions(c: CoproductMonoid) -> tuple[MonoidHom, MonoidHom]:
    return (hom_from_function(c.left, c, lambda x: c.letter(0, x), name="in_left"),
            hom_from_function(c.right, c, lambda x: c.letter(1, x), name="in_right"))


def counit(m: Monoid, elements: Iterable | None = None, depth: int = 1) -> MonoidHom:
    """``F_m(X) -> m`` sending each symbol to the element it names.

    ``X`` defaults to all elements of a finite monoid (or the elements of
    word length <= depth otherwise).
    """
    if elements is None:
        elements = m.enumerate(depth)
    elements = list(elements)
    symbols = [m.symbol(x) if not isinstance(m, FiniteMonoid) else x for x in elements]
    free = FreeMonoid(symbols)
    return MonoidHom(free, m, dict(zip(symbols, elements)), name="counit")


def codiagonal(f: MonoidHom, g: MonoidHom) -> MonoidHom:
    """``f ∨ g : dom f ∨ dom g -> Q``."""
    if f.codomain != g.codomain:
        raise MonoidError(f"codomain mismatch: {f.codomain!r} vs {g.codomain!r}")
    c = CoproductMonoid(f.domain, g.domain)
    return MonoidHom(c, f.codomain, (f, g), name=f"({f!r} ∨ {g!r})")


def coproduct_map(f: MonoidHom, g: MonoidHom) -> MonoidHom:
    """``f ∨ g : dom f ∨ dom g -> cod f ∨ cod g``."""
    target, in_l, in_r = coproduct(f.codomain, g.codomain)
    return codiagonal(compose_homs(in_l, f), compose_homs(in_r, g))


def normalize(raw: Iterable, m: CoproductMonoid) -> tuple:
    return m.normalize(raw)


def multiply(m: Monoid, x, y):
    m.check(x)
    m.check(y)
    return m.multiply(x, y)


def enumerate_monoid(m: Monoid, depth: int) -> list:
    if depth < 0:
        raise MonoidError("depth must be non-negative")
    return m.enumerate(depth)


# ---------------------------------------------------------------- surjectivity


YES = "Yes"
NOT_WITHIN_DEPTH = "NotWithinDepth"


def image(h: MonoidHom, depth: int) -> set:
    return {h(x) for x in h.domain.enumerate(depth)}


def is_surjective(h: MonoidHom, depth: int) -> str:
    if not isinstance(h.codomain, FiniteMonoid):
        raise MonoidError("surjectivity is only decided for finite codomains")
    return YES if image(h, depth) >= set(h.codomain.elements) else NOT_WITHIN_DEPTH


# ---------------------------------------------------------------- lifting


def _atoms(m: Monoid) -> list:
    """Letters that determine a hom out of ``m``."""
    if isinstance(m, FiniteMonoid):
        return [("el", x) for x in m.elements if x != m.unit]
    if isinstance(m, FreeMonoid):
        return [("gen", g) for g in m.generators]
    return [(side, a) for side in (0, 1) for a in _atoms(m.factors[side])]


def _atom_element(m: Monoid, atom):
    if isinstance(m, FiniteMonoid):
        return atom[1]
    if isinstance(m, FreeMonoid):
        return (atom[1],)
    side, inner = atom
    return m.letter(side, _atom_element(m.factors[side], inner))


def _partial_eval(m: Monoid, x, assigned: dict, cod: Monoid, prefix=()):
    """Value of ``x`` under a partial atom assignment, or None if undetermined."""
    if isinstance(m, FiniteMonoid):
        if x == m.unit:
            return cod.unit
        return assigned.get(prefix + (("el", x),))
    if isinstance(m, FreeMonoid):
        vals = []
        for g in x:
            key = prefix + (("gen", g),)
            if key not in assigned:
                return None
            vals.append(assigned[key])
        return cod.product(vals)
    vals = []
    for side, letter in x:
        v = _partial_eval(m.factors[side], letter, assigned, cod, prefix + (side,))
        if v is None:
            return None
        vals.append(v)
    return cod.product(vals)


def _flat(atom):
    """(0, ("gen", g)) -> (0, "gen", g) style key used in assignments."""
    if atom[0] in (0, 1):
        return (atom[0],) + _flat(atom[1])
    return (atom,)


def _build_hom(m: Monoid, cod: Monoid, assigned: dict, prefix=()) -> MonoidHom:
    if isinstance(m, CoproductMonoid):
        return MonoidHom(m, cod, tuple(_build_hom(m.factors[s], cod, assigned, prefix + (s,))
                                       for s in (0, 1)))
    if isinstance(m, FiniteMonoid):
        table = {m.unit: cod.unit}
        table.update({x: assigned[prefix + (("el", x),)] for x in m.elements if x != m.unit})
        return MonoidHom(m, cod, table)
    return MonoidHom(m, cod, {g: assigned[prefix + (("gen", g),)] for g in m.generators})


def _finite_factors(m: Monoid, prefix=()):
    if isinstance(m, FiniteMonoid):
        yield prefix, m
    elif isinstance(m, CoproductMonoid):
        for s in (0, 1):
            yield from _finite_factors(m.factors[s], prefix + (s,))


class LiftingError(MonoidError):
    pass


def solve_lifting(top: MonoidHom, left: MonoidHom, right: MonoidHom, bottom: MonoidHom,
                  depth: int) -> Optional[MonoidHom]:
    """Search for ``L : M -> N`` with ``L ∘ left = top`` and ``right ∘ L = bottom``.

    Square::

        A --top--> N
        |          |
       left      right
        v          v
        M -bottom-> Q

    Letter images are drawn from ``enumerate(N, depth)`` in canonical order,
    so the first lift found is deterministic.  ``None`` means no lift whose
    letter images have word length <= depth.
    """
    A, N = top.domain, top.codomain
    M, Q = bottom.domain, bottom.codomain
    if left.domain != A or left.codomain != M or right.domain != N or right.codomain != Q:
        raise LiftingError("the four maps do not form a square")
    for a in A.enumerate(depth):
        if right(top(a)) != bottom(left(a)):
            raise LiftingError(f"square does not commute at {a!r}")

    atoms = [_flat(a) for a in _atoms(M)]
    candidates_by_target: dict = {}
    pool = N.enumerate(depth)
    for n in pool:
        candidates_by_target.setdefault(right(n), []).append(n)
    atom_elements = {k: _atom_element(M, a) for k, a in zip(atoms, _atoms(M))}
    choices = [candidates_by_target.get(bottom(atom_elements[k]), []) for k in atoms]
    if any(not c for c in choices):
        return None

    finite = list(_finite_factors(M))
    a_elems = [(a, left(a)) for a in A.enumerate(depth)]
    if isinstance(A, FreeMonoid):
        a_elems = [((g,), left((g,))) for g in A.generators]
    elif isinstance(A, CoproductMonoid):
        a_elems = [(A_atom, left(A_atom)) for A_atom in
                   (_atom_element(A, at) for at in _atoms(A))]

    assigned: dict = {}

    def consistent() -> bool:
        for prefix, fm in finite:
            def val(x):
                if x == fm.unit:
                    return N.unit
                return assigned.get(prefix + (("el", x),))
            for x in fm.elements:
                vx = val(x)
                if vx is None:
                    continue
                for y in fm.elements:
                    vy = val(y)
                    if vy is None:
                        continue
                    vxy = val(fm.multiply(x, y))
                    if vxy is not None and vxy != N.multiply(vx, vy):
                        return False
        for a, m in a_elems:
            v = _partial_eval(M, m, assigned, N)
            if v is not None and v != top(a):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(atoms):
            return True
        for n in choices[i]:
            assigned[atoms[i]] = n
            if consistent() and search(i + 1):
                return True
            del assigned[atoms[i]]
        return False

    if not search(0):
        return None
    lift = _build_hom(M, N, assigned)
    lift.name = "lift"
    return lift
