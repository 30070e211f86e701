"""Finite abelian groups in invariant-factor form.

A group is described by its invariant factors (d1, ..., dk) with
d1 | d2 | ... | dk and every d_i >= 2; the empty tuple is the trivial
group. Elements are coordinate tuples, one coordinate per factor,
reduced modulo that factor. Elements are indexed lexicographically by
their coordinates, so the zero element always has index 0.

>>> G = AbelianGroup((4, 4))
>>> G.add((3, 2), (2, 3))
(1, 1)
>>> G.element_order((2, 0))
2
>>> [g.factors for g in enumerate_groups(12)]
[(12,), (2, 6)]
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

Element = tuple[int, ...]


class ShapeError(ValueError):
    """An element does not match the shape of the group it is used with."""


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group given by its invariant factors."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        for d in self.factors:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
        for a, b in itertools.pairwise(self.factors):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain, got {self.factors}"
                )

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        # mixed-radix strides for lexicographic indexing, most significant first
        strides = []
        acc = 1
        for d in reversed(self.factors):
            strides.append(acc)
            acc *= d
        return tuple(reversed(strides))

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic coordinate order."""
        return tuple(itertools.product(*(range(d) for d in self.factors)))

    def index(self, x: Element) -> int:
        self.check_element(x)
        return sum(c * s for c, s in zip(x, self._strides))

    def element(self, i: int) -> Element:
        return self.elements[i]

    def check_element(self, x: Element) -> None:
        if len(x) != len(self.factors):
            raise ShapeError(f"element {x} does not fit group with factors {self.factors}")
        for c, d in zip(x, self.factors):
            if not 0 <= c < d:
                raise ShapeError(f"coordinate {c} of {x} not reduced modulo {d}")

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def add(self, x: Element, y: Element) -> Element:
        self.check_element(x)
        self.check_element(y)
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def neg(self, x: Element) -> Element:
        self.check_element(x)
        return tuple((-a) % d for a, d in zip(x, self.factors))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def scalar_mul(self, c: int, x: Element) -> Element:
        self.check_element(x)
        return tuple((c * a) % d for a, d in zip(x, self.factors))

    def element_order(self, x: Element) -> int:
        """Least m >= 1 with m*x = 0."""
        self.check_element(x)
        m = 1
        for a, d in zip(x, self.factors):
            m = math.lcm(m, d // math.gcd(d, a))
        return m

    def generators(self) -> tuple[Element, ...]:
        """The standard generators e_i (one-hot coordinate tuples)."""
        k = len(self.factors)
        return tuple(
            tuple(1 if j == i else 0 for j in range(k)) for i in range(k)
        )

    @property
    def generator_indices(self) -> tuple[int, ...]:
        """Element indices of the standard generators (equal to the strides)."""
        return self._strides

    def spec(self) -> str:
        """Comma-separated factor string; the trivial group is "1"."""
        if not self.factors:
            return "1"
        return ",".join(str(d) for d in self.factors)

    @classmethod
    def from_spec(cls, text: str) -> AbelianGroup:
        """Parse a comma-separated list of cyclic orders.

        Any list of cyclic orders is accepted and normalized to invariant
        factors, e.g. "8,2" and "2,8" both give the group with factors (2, 8).
        """
        parts = [p.strip() for p in text.split(",")]
        try:
            orders = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad group spec {text!r}") from None
        if any(m < 1 for m in orders):
            raise ValueError(f"bad group spec {text!r}: orders must be positive")
        return cls(normalize_cyclic_orders(orders))

    def __str__(self) -> str:
        return self.spec()


def format_element(x: Element) -> str:
    """Render an element as "(3,2)"; the trivial group's element is "()"."""
    return "(" + ",".join(str(c) for c in x) + ")"


def _prime_factorization(n: int) -> dict[int, int]:
    result: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            result[p] = result.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return result


def normalize_cyclic_orders(orders: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups of the given orders.

    >>> normalize_cyclic_orders([8, 2])
    (2, 8)
    >>> normalize_cyclic_orders([6, 4])
    (2, 12)
    >>> normalize_cyclic_orders([1, 1])
    ()
    """
    exponents: dict[int, list[int]] = {}
    for m in orders:
        if m < 1:
            raise ValueError(f"cyclic orders must be positive, got {m}")
        for p, e in _prime_factorization(m).items():
            exponents.setdefault(p, []).append(e)
    if not exponents:
        return ()
    length = max(len(v) for v in exponents.values())
    factors = [1] * length
    for p, exps in exponents.items():
        # largest prime powers go into the largest invariant factors
        padded = [0] * (length - len(exps)) + sorted(exps)
        for i, e in enumerate(padded):
            factors[i] *= p**e
    return tuple(d for d in factors if d > 1)


def _partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as weakly increasing tuples."""
    result: list[tuple[int, ...]] = []

    def rec(remaining: int, minimum: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(minimum, remaining + 1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, 1, [])
    return result


def enumerate_groups(order: int) -> tuple[AbelianGroup, ...]:
    """All abelian groups of the given order, one per isomorphism class.

    Output is in invariant-factor form, ordered by (number of factors,
    then factor sequence), so cyclic comes first:

    >>> [g.factors for g in enumerate_groups(16)]
    [(16,), (2, 8), (4, 4), (2, 2, 4), (2, 2, 2, 2)]
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order == 1:
        return (AbelianGroup(()),)
    primes = _prime_factorization(order)
    per_prime = [(p, _partitions(e)) for p, e in sorted(primes.items())]
    groups = []
    for choice in itertools.product(*(parts for _, parts in per_prime)):
        length = max(len(part) for part in choice)
        factors = [1] * length
        for (p, _), part in zip(per_prime, choice):
            padded = [0] * (length - len(part)) + list(part)
            for i, e in enumerate(padded):
                factors[i] *= p**e
        groups.append(AbelianGroup(tuple(factors)))
    groups.sort(key=lambda g: (len(g.factors), g.factors))
    return tuple(groups)


@dataclass(frozen=True)
class SubgroupStructure:
    """A subgroup of an ambient group with its own invariant-factor data.

    `basis` realizes `factors`: the map (a_1, ..., a_m) -> sum a_j * basis_j
    is a bijection from the abstract group with those invariant factors onto
    `elements`.
    """

    group: AbelianGroup
    elements: frozenset[Element]
    factors: tuple[int, ...]
    basis: tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_group(self) -> AbelianGroup:
        return AbelianGroup(self.factors)

    @cached_property
    def coordinates(self) -> dict[Element, Element]:
        """Map each subgroup element to its coordinates in `basis`."""
        G = self.group
        coords: dict[Element, Element] = {}
        for combo in itertools.product(*(range(d) for d in self.factors)):
            x = G.zero
            for a, b in zip(combo, self.basis):
                x = G.add(x, G.scalar_mul(a, b))
            coords[x] = combo
        if len(coords) != len(self.elements):
            raise RuntimeError("basis does not enumerate the subgroup bijectively")
        return coords


def _closure(G: AbelianGroup, generators) -> frozenset[Element]:
    elems = {G.zero}
    gens = [g for g in generators]
    for g in gens:
        G.check_element(g)
    frontier = [G.zero]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.add(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elems)


def _invariant_decomposition(elems, add, zero):
    """Greedy invariant-factor decomposition of an explicit abelian group.

    Picks an element of maximal order (lexicographically least on ties),
    splits it off, recurses on the quotient by the cyclic group it spans,
    and lifts the quotient basis back to representatives of the right order.
    Returns (factors ascending, basis), the basis aligned with the factors.
    """
    if len(elems) == 1:
        return (), ()

    def order_of(x):
        m, y = 1, x
        while y != zero:
            y = add(y, x)
            m += 1
        return m

    orders = {x: order_of(x) for x in elems}
    m = max(orders.values())
    b = min(x for x in elems if orders[x] == m)

    cyclic = [zero]
    y = b
    for _ in range(m - 1):
        cyclic.append(y)
        y = add(y, b)

    def rep(x):
        return min(add(x, c) for c in cyclic)

    quotient = {rep(x) for x in elems}
    qadd = lambda x, y: rep(add(x, y))
    qfactors, qbasis = _invariant_decomposition(quotient, qadd, zero)

    basis = []
    for c, q in zip(qbasis, qfactors):
        # q*c lands in <b>; adjust c by a multiple of b so its order drops to q
        qc = zero
        for _ in range(q):
            qc = add(qc, c)
        u = cyclic.index(qc)
        s = (-(u // q)) % (m // q)
        adjusted = c
        for _ in range(s):
            adjusted = add(adjusted, b)
        basis.append(adjusted)

    return qfactors + (m,), tuple(basis) + (b,)


def subgroup_structure(G: AbelianGroup, generators) -> SubgroupStructure:
    """Close `generators` under the group operations and recover structure.

    >>> S = subgroup_structure(AbelianGroup((16,)), [(2,)])
    >>> sorted(S.elements), S.factors, S.basis
    ([(0,), (2,), (4,), (6,), (8,), (10,), (12,), (14,)], (8,), ((2,),))
    """
    elems = _closure(G, generators)
    factors, basis = _invariant_decomposition(elems, G.add, G.zero)
    return SubgroupStructure(group=G, elements=elems, factors=factors, basis=basis)
