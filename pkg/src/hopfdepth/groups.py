"""Finite groups given by multiplication tables.

Elements are the integers ``0..n-1`` with the identity at index 0.  The
table convention is ``table[a][b] = a*b``.  Permutations compose as
functions: ``(s*t)(i) = s(t(i))``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property


class GroupError(ValueError):
    """Raised for an invalid group table; the message names a witness."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    names: tuple
    table: tuple

    def __post_init__(self):
        validate_table(self.names, self.table)

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def _inverses(self) -> tuple:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GroupError(f"{self.name} has no element named {name!r}") from None

    def elements(self) -> range:
        return range(self.order)


def validate_table(names, table) -> None:
    n = len(names)
    if n == 0:
        raise GroupError("a group needs at least one element")
    if len(set(names)) != n:
        raise GroupError("element names are not distinct")
    if len(table) != n or any(len(r) != n for r in table):
        raise GroupError(f"table must be {n}x{n}")
    for a in range(n):
        for b in range(n):
            if not (isinstance(table[a][b], int) and 0 <= table[a][b] < n):
                raise GroupError(f"entry table[{a}][{b}] out of range")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise GroupError(f"index 0 is not a two-sided identity (fails at {names[a]})")
    for a in range(n):
        if len(set(table[a])) != n:
            raise GroupError(f"row of {names[a]} is not a permutation")
        if len({table[b][a] for b in range(n)}) != n:
            raise GroupError(f"column of {names[a]} is not a permutation")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rb = table[b]
            for c in range(n):
                if table[ab][c] != ra[rb[c]]:
                    raise GroupError(
                        f"associativity fails at ({names[a]}, {names[b]}, {names[c]})")


def group_from_elements(name: str, elements: list, mul, label) -> FiniteGroup:
    """Build a table from concrete elements; ``elements[0]`` must be the identity."""
    idx = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(idx[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(name, tuple(label(e) for e in elements), table)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    names = ["e"] + [("g" if k == 1 else f"g{k}") for k in range(1, n)]
    return FiniteGroup(f"C{n}", tuple(names),
                       tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n): r^a s^b with s r s = r^-1."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")
    els = [(a, b) for b in (0, 1) for a in range(n)]

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % n, (b + d) % 2)

    def label(x):
        a, b = x
        r = "" if a == 0 else ("r" if a == 1 else f"r{a}")
        s = "s" if b else ""
        return (r + s) or "e"

    return group_from_elements(f"D{n}", els, mul, label)


def _cycle_name(perm: tuple) -> str:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = perm[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric groups are provided for n <= 5")
    els = list(itertools.permutations(range(n)))
    return group_from_elements(
        f"S{n}", els, lambda s, t: tuple(s[t[i]] for i in range(n)), _cycle_name)


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    axes = "1ijk"
    prod = {("1", x): (1, x) for x in axes}
    prod.update({(x, "1"): (1, x) for x in axes})
    prod.update({(x, x): (-1, "1") for x in "ijk"})
    prod.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    els = [(s, x) for x in axes for s in (1, -1)]

    def mul(p, q):
        s, x = prod[(p[1], q[1])]
        return (p[0] * q[0] * s, x)

    return group_from_elements("Q8", els, mul, lambda p: ("" if p[0] == 1 else "-") + p[1])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    els = [(a, b) for a in G.elements() for b in H.elements()]

    def label(p):
        return f"({G.names[p[0]]},{H.names[p[1]]})"

    return group_from_elements(f"{G.name}x{H.name}", els,
                               lambda p, q: (G.mul(p[0], q[0]), H.mul(p[1], q[1])), label)


_BUILTIN = re.compile(r"^(C|D|S)(\d+)$")


def builtin_group(name: str) -> FiniteGroup:
    """Named groups: ``Cn``, ``Dn`` (order 2n), ``Sn``, ``Q8`` and products ``AxB``."""
    parts = name.split("x")
    if len(parts) > 1:
        G = builtin_group(parts[0])
        for p in parts[1:]:
            G = direct_product(G, builtin_group(p))
        return G
    if name == "Q8":
        return quaternion()
    m = _BUILTIN.match(name)
    if not m:
        raise GroupError(f"unknown group {name!r}")
    kind, k = m.group(1), int(m.group(2))
    return {"C": cyclic, "D": dihedral, "S": symmetric}[kind](k)


# ---------------------------------------------------------------- structure

def conjugate(G: FiniteGroup, g: int, x: int) -> int:
    """g x g^-1."""
    return G.mul(G.mul(g, x), G.inv(g))


def is_abelian(G: FiniteGroup) -> bool:
    return all(G.mul(a, b) == G.mul(b, a) for a in G.elements() for b in G.elements())


def centralizer_of(G: FiniteGroup, x: int) -> tuple:
    return tuple(g for g in G.elements() if G.mul(g, x) == G.mul(x, g))


def center(G: FiniteGroup) -> tuple:
    return tuple(z for z in G.elements() if len(centralizer_of(G, z)) == G.order)


@dataclass(frozen=True)
class ConjugacyData:
    classes: tuple            # each class sorted; classes ordered by smallest member
    centralizer_orders: tuple  # |C_G(x)| for a representative of each class

    def class_of(self, x: int) -> int:
        return next(i for i, c in enumerate(self.classes) if x in c)


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    seen, classes = set(), []
    for x in G.elements():
        if x in seen:
            continue
        cls = sorted({conjugate(G, g, x) for g in G.elements()})
        seen.update(cls)
        classes.append(tuple(cls))
    orders = tuple(G.order // len(c) for c in classes)
    return ConjugacyData(tuple(classes), orders)


def generated_subgroup(G: FiniteGroup, gens) -> tuple:
    """Sorted element indices of the subgroup generated by ``gens``."""
    sub = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in sub:
                    sub.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(sub))


def is_subgroup(G: FiniteGroup, elements) -> bool:
    s = set(elements)
    return 0 in s and all(G.mul(a, G.inv(b)) in s for a in s for b in s)


def is_normal_subgroup(G: FiniteGroup, elements) -> bool:
    s = set(elements)
    return is_subgroup(G, s) and all(conjugate(G, g, x) in s for g in G.elements() for x in s)


def subgroup(G: FiniteGroup, elements, name: str | None = None) -> FiniteGroup:
    """The subgroup on ``elements`` (sorted, identity first) as a group of its own."""
    els = sorted(set(elements))
    if not is_subgroup(G, els):
        raise GroupError("elements do not form a subgroup")
    pos = {g: i for i, g in enumerate(els)}
    table = tuple(tuple(pos[G.mul(a, b)] for b in els) for a in els)
    return FiniteGroup(name or f"{G.name}<{len(els)}>", tuple(G.names[g] for g in els), table)
