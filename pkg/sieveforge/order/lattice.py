"""
Finite bounded lattices and the divisor-lattice family.

A :class:`FiniteLattice` stores its order as a dense boolean matrix and
precomputes meet/join tables at build time, so everything downstream is
table lookups. Element identifiers are opaque strings; the canonical order
of elements is their declaration order.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

import networkx as nx
import numpy as np
import sympy

from sieveforge.core.exceptions import (
    NotALattice,
    NotAPartialOrder,
    UnknownElement,
    ValidationError,
)
from sieveforge.core.verdict import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """
    A finite bounded lattice.

    ``leq[i, j]`` is true iff ``elements[i] <= elements[j]``; ``meet_table``
    and ``join_table`` hold element indices. Instances compare by identity.
    """

    name: str
    elements: tuple[str, ...]
    leq: np.ndarray
    meet_table: np.ndarray
    join_table: np.ndarray
    bottom: str
    top: str
    index: dict[str, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self.index

    def __iter__(self):
        return iter(self.elements)

    def position(self, element: str) -> int:
        """
        Index of an element in canonical order.

        Raises:
            UnknownElement: If the element is not declared
        """
        try:
            return self.index[element]
        except KeyError:
            raise UnknownElement(
                f"Unknown element in lattice {self.name}", details=repr(element)
            )

    def le(self, x: str, y: str) -> bool:
        return bool(self.leq[self.position(x), self.position(y)])

    def meet(self, x: str, y: str) -> str:
        return self.elements[self.meet_table[self.position(x), self.position(y)]]

    def join(self, x: str, y: str) -> str:
        return self.elements[self.join_table[self.position(x), self.position(y)]]

    def below(self, x: str) -> tuple[str, ...]:
        """Elements ``y <= x`` in canonical order."""
        column = self.leq[:, self.position(x)]
        return tuple(self.elements[i] for i in np.flatnonzero(column))

    def above(self, x: str) -> tuple[str, ...]:
        """Elements ``y >= x`` in canonical order."""
        row = self.leq[self.position(x), :]
        return tuple(self.elements[i] for i in np.flatnonzero(row))

    def canonical(self, members: Iterable[str]) -> tuple[str, ...]:
        """Sort element identifiers into canonical order."""
        return tuple(sorted(members, key=self.position))

    def covering_pairs(self) -> list[tuple[str, str]]:
        """
        Pairs (x, y) with x < y and nothing strictly between (Hasse edges).

        Returns:
            Covering pairs in canonical order
        """
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        # x < z < y exists iff (strict @ strict)[x, y]
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        cover = strict & ~two_step
        return [
            (self.elements[i], self.elements[j]) for i, j in np.argwhere(cover)
        ]


def _lattice_bound(
    leq: np.ndarray, candidates: np.ndarray, greatest: bool
) -> int | None:
    if candidates.size == 0:
        return None
    sub = leq[np.ix_(candidates, candidates)]
    # greatest lower bound: every candidate is below it (column all true)
    mask = sub.all(axis=0) if greatest else sub.all(axis=1)
    hits = candidates[mask]
    return int(hits[0]) if hits.size else None


def build_lattice(
    elements: Sequence[str],
    order_pairs: Iterable[tuple[str, str]],
    name: str = "L",
) -> FiniteLattice:
    """
    Build and certify a finite lattice from generating order pairs.

    Args:
        elements: Element identifiers in canonical order
        order_pairs: Pairs (x, y) meaning x <= y; closed reflexively and
            transitively
        name: Display name

    Returns:
        Certified FiniteLattice

    Raises:
        ValidationError: If no elements are given or identifiers repeat
        UnknownElement: If a pair references an undeclared element
        NotAPartialOrder: If antisymmetry fails
        NotALattice: If some pair lacks a meet or a join
    """
    elements = tuple(str(e) for e in elements)
    if not elements:
        raise ValidationError("A lattice needs at least one element")
    if len(set(elements)) != len(elements):
        raise ValidationError("Duplicate element identifiers", details=name)

    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for x, y in order_pairs:
        x, y = str(x), str(y)
        for e in (x, y):
            if e not in graph:
                raise UnknownElement(
                    f"Order pair references an undeclared element in {name}",
                    details=repr(e),
                )
        graph.add_edge(x, y)

    closure = nx.transitive_closure(graph, reflexive=True)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    leq = np.zeros((n, n), dtype=bool)
    for x, y in closure.edges:
        leq[index[x], index[y]] = True

    clash = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if clash.size:
        i, j = clash[0]
        raise NotAPartialOrder(
            f"Order on {name} is not antisymmetric",
            details=f"{elements[i]} <= {elements[j]} <= {elements[i]}",
            witness={"pair": [elements[i], elements[j]]},
        )

    meet_table = np.zeros((n, n), dtype=np.int64)
    join_table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            lower = np.flatnonzero(leq[:, i] & leq[:, j])
            upper = np.flatnonzero(leq[i, :] & leq[j, :])
            m = _lattice_bound(leq, lower, greatest=True)
            if m is None:
                raise NotALattice(
                    f"{name} is not a lattice: missing meet",
                    details=f"{elements[i]}, {elements[j]}",
                    witness={"pair": [elements[i], elements[j]], "missing": "meet"},
                )
            k = _lattice_bound(leq, upper, greatest=False)
            if k is None:
                raise NotALattice(
                    f"{name} is not a lattice: missing join",
                    details=f"{elements[i]}, {elements[j]}",
                    witness={"pair": [elements[i], elements[j]], "missing": "join"},
                )
            meet_table[i, j] = meet_table[j, i] = m
            join_table[i, j] = join_table[j, i] = k

    bottom = elements[int(np.flatnonzero(leq.all(axis=1))[0])]
    top = elements[int(np.flatnonzero(leq.all(axis=0))[0])]

    logger.debug(f"Built lattice {name} with {n} elements")
    return FiniteLattice(
        name=name,
        elements=elements,
        leq=leq,
        meet_table=meet_table,
        join_table=join_table,
        bottom=bottom,
        top=top,
        index=index,
    )


def divisor_lattice(n: int) -> FiniteLattice:
    """
    The lattice of divisors of n ordered by divisibility.

    Meet is gcd and join is lcm; element identifiers are the decimal
    representations of the divisors.

    Args:
        n: Positive integer

    Returns:
        FiniteLattice named ``D<n>``
    """
    if n < 1:
        raise ValidationError("Divisor lattices need n >= 1", details=str(n))
    divisors = [int(d) for d in sympy.divisors(n)]
    pairs = [
        (str(d), str(e)) for d in divisors for e in divisors if d != e and e % d == 0
    ]
    return build_lattice([str(d) for d in divisors], pairs, name=f"D{n}")


def join_of(lattice: FiniteLattice, members: Iterable[str]) -> str:
    """Join of a finite subset; the empty join is the bottom element."""
    return reduce(lattice.join, members, lattice.bottom)


def meet_of(lattice: FiniteLattice, members: Iterable[str]) -> str:
    """Meet of a finite subset; the empty meet is the top element."""
    return reduce(lattice.meet, members, lattice.top)


def is_frame(lattice: FiniteLattice) -> Verdict:
    """
    Check the distributive law x∧(y∨z) = (x∧y)∨(x∧z) on all triples.

    Finite lattices are complete and every join is a finite join, so the
    binary law is the whole frame condition.

    Args:
        lattice: Lattice to check

    Returns:
        Verdict with the first violating triple as witness
    """
    meet, join = lattice.meet_table, lattice.join_table
    xs = np.arange(len(lattice))[:, None, None]
    left = meet[xs, join[None, :, :]]
    right = join[meet[:, :, None], meet[:, None, :]]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return Verdict.ok()
    x, y, z = (lattice.elements[i] for i in bad[0])
    return Verdict.fail(
        "distributivity",
        triple=[x, y, z],
        lhs=lattice.elements[left[tuple(bad[0])]],
        rhs=lattice.elements[right[tuple(bad[0])]],
    )


def complements(lattice: FiniteLattice, x: str) -> list[str]:
    """All y with x∧y = bottom and x∨y = top."""
    return [
        y
        for y in lattice.elements
        if lattice.meet(x, y) == lattice.bottom and lattice.join(x, y) == lattice.top
    ]


def is_boolean(lattice: FiniteLattice) -> bool:
    """True iff the lattice is distributive and complemented."""
    if not is_frame(lattice).passed:
        return False
    return all(complements(lattice, x) for x in lattice.elements)
