"""Finite groups as explicit multiplication tables, with subgroups and left cosets.

Elements are indices ``0..order-1``.  All constructions used by the rest of
the library (cyclic groups, direct products, raw tables) go through
:class:`FiniteGroup`, which is immutable and validates its table on
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_ORDER_CAP = 4096

# exhaustive associativity checks are cubic; keep them to small tables
_ASSOC_CHECK_LIMIT = 64


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i][j]`` is the index of the product ``i * j``.  ``names`` holds a
    display string per element (integers for cyclic groups, comma-separated
    tuples for products).
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity: int = field(init=False, default=0)
    _inverse: tuple[int, ...] = field(init=False, default=())

    def __post_init__(self):
        if self.order < 1:
            raise GroupError("group order must be positive")
        if len(self.table) != self.order or len(self.names) != self.order:
            raise GroupError("table/name size does not match order")
        rng = range(self.order)
        for row in self.table:
            if len(row) != self.order or sorted(row) != list(rng):
                raise GroupError("each table row must be a permutation of 0..order-1")
        for j in rng:
            col = [self.table[i][j] for i in rng]
            if sorted(col) != list(rng):
                raise GroupError("each table column must be a permutation of 0..order-1")
        ident = None
        for e in rng:
            if all(self.table[e][x] == x and self.table[x][e] == x for x in rng):
                ident = e
                break
        if ident is None:
            raise GroupError("no two-sided identity element")
        if ident != 0:
            raise GroupError("identity element must be index 0")
        inv = []
        for x in rng:
            xi = next((y for y in rng if self.table[x][y] == 0), None)
            if xi is None or self.table[xi][x] != 0:
                raise GroupError(f"element {x} has no two-sided inverse")
            inv.append(xi)
        object.__setattr__(self, "_inverse", tuple(inv))
        if self.order <= _ASSOC_CHECK_LIMIT:
            t = self.table
            for a in rng:
                for b in rng:
                    ab = t[a][b]
                    for c in rng:
                        if t[ab][c] != t[a][t[b][c]]:
                            raise GroupError(f"table is not associative at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def name(self, a: int) -> str:
        return self.names[a]

    def elements(self) -> range:
        return range(self.order)

    def product(self, elems: Iterable[int]) -> int:
        acc = 0
        for x in elems:
            acc = self.table[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self._inverse[a], -k)
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def element_order(self, a: int) -> int:
        """Smallest k >= 1 with a^k = identity."""
        if not 0 <= a < self.order:
            raise GroupError(f"element {a} out of range")
        k = 1
        acc = a
        while acc != 0:
            acc = self.table[acc][a]
            k += 1
        return k

    def parse_element(self, text: str) -> int:
        try:
            return self.names.index(text)
        except ValueError:
            raise GroupError(f"unknown group element {text!r}") from None


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent``, stored as a sorted element list."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = self.elements
        if list(elems) != sorted(set(elems)):
            raise GroupError("subgroup elements must be sorted and distinct")
        eset = set(elems)
        if 0 not in eset:
            raise GroupError("subgroup must contain the identity")
        g = self.parent
        for a in elems:
            if g.inv(a) not in eset:
                raise GroupError("subgroup not closed under inverse")
            for b in elems:
                if g.mul(a, b) not in eset:
                    raise GroupError("subgroup not closed under multiplication")
        if g.order % len(elems) != 0:
            raise GroupError("subgroup order does not divide group order")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in set(self.elements)

    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)


@dataclass(frozen=True)
class CosetPartition:
    """Left cosets aH partitioning a superset, ordered by minimal representative."""

    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def coset_of(self, a: int) -> tuple[int, ...]:
        for c in self.cosets:
            if a in c:
                return c
        raise GroupError(f"element {a} not in the partitioned set")

    def __len__(self) -> int:
        return len(self.cosets)


def make_cyclic(n: int) -> FiniteGroup:
    """The cyclic group Z_n with addition mod n."""
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(n, table, tuple(str(i) for i in range(n)))


def direct_product(g1: FiniteGroup, g2: FiniteGroup,
                   order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Componentwise product; element (i, j) is encoded as i * |g2| + j."""
    n = g1.order * g2.order
    if n > order_cap:
        raise GroupError(f"product order {n} exceeds cap {order_cap}")
    n2 = g2.order
    table = []
    for i1 in range(g1.order):
        for j1 in range(n2):
            row = []
            for i2 in range(g1.order):
                for j2 in range(n2):
                    row.append(g1.mul(i1, i2) * n2 + g2.mul(j1, j2))
            table.append(tuple(row))
    names = tuple(f"{g1.name(i)},{g2.name(j)}"
                  for i in range(g1.order) for j in range(n2))
    return FiniteGroup(n, tuple(table), names)


def make_table(rows: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    n = len(rows)
    table = tuple(tuple(r) for r in rows)
    if names is None:
        names = tuple(str(i) for i in range(n))
    return FiniteGroup(n, table, tuple(names))


def subgroup_generated(g: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``, by closure under multiplication."""
    gens = list(gens)
    for a in gens:
        if not 0 <= a < g.order:
            raise GroupError(f"generator {a} out of range")
    elems = {0}
    frontier = [0]
    gen_set = set(gens) | {g.inv(a) for a in gens}
    while frontier:
        x = frontier.pop()
        for a in gen_set:
            y = g.mul(x, a)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return Subgroup(g, tuple(sorted(elems)))


def left_cosets(superset: Sequence[int], h: Subgroup) -> CosetPartition:
    """Partition ``superset`` into left cosets aH.

    The caller guarantees that the superset is a union of such cosets (it is
    in practice a left coset of a larger subgroup); divisibility and exact
    coverage are validated.
    """
    g = h.parent
    sset = set(superset)
    if len(sset) % len(h) != 0:
        raise GroupError("superset size not divisible by subgroup order")
    remaining = set(sset)
    cosets = []
    while remaining:
        a = min(remaining)
        coset = sorted(g.mul(a, x) for x in h.elements)
        if not set(coset) <= sset:
            raise GroupError("superset is not a union of left cosets")
        remaining -= set(coset)
        cosets.append(tuple(coset))
    cosets.sort(key=lambda c: c[0])
    return CosetPartition(h, tuple(cosets))


def element_order(g: FiniteGroup, a: int) -> int:
    return g.element_order(a)
