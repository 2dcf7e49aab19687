"""Structural queries: derived series, solvability, classes, order spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .engine import (
    GroupHandle,
    StabilizerChain,
    _inv,
    _mult,
    _normal_closure_tuples,
    _tuple_order,
    build_group,
    enumerate_elements,
    enumeration_cap,
)
from .permutation import Permutation


@dataclass(frozen=True)
class SolvabilityResult:
    """Verdict of the derived-series test.

    ``series_orders`` lists the orders of successive derived subgroups,
    starting with the group itself.  For a solvable group it ends in 1; for
    a nonsolvable group it ends where the series stabilizes at a repeated
    nontrivial order.
    """

    solvable: bool
    series_orders: tuple

    def __bool__(self) -> bool:
        return self.solvable


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugation orbit: representative, size, members, common element order.

    The representative is the earliest member in the group's enumeration
    order, and ``members`` is sorted by that same order.
    """

    representative: Permutation
    size: int
    members: tuple
    order_of_elements: int


@dataclass(frozen=True)
class OrderSpectrum:
    """The set of element orders occurring in a group."""

    orders: tuple
    group_order: int

    def __contains__(self, m: int) -> bool:
        return m in self.orders


def _commutator_tuples(gens: Sequence[tuple]) -> list[tuple]:
    out = []
    seen = set()
    identity = None
    for a in gens:
        if identity is None:
            identity = tuple(range(len(a)))
        a_inv = _inv(a)
        for b in gens:
            c = _mult(_mult(_mult(a_inv, _inv(b)), a), b)
            if c != identity and c not in seen:
                seen.add(c)
                out.append(c)
    return out


def _derived_gens(gen_tuples: Sequence[tuple], degree: int) -> list[tuple]:
    """Generators of the derived subgroup, as image tuples.

    The derived subgroup is the normal closure of the commutators of the
    generating set.
    """
    return _normal_closure_tuples(
        gen_tuples, _commutator_tuples(gen_tuples), degree)


def derived_subgroup(group: GroupHandle) -> GroupHandle:
    """[G, G]: normal closure in G of the commutators of G's generators."""
    gens = _derived_gens(group._gen_tuples, group.degree)
    if not gens:
        return build_group([Permutation.identity(group.degree)])
    return build_group([Permutation._wrap(t) for t in gens])


def _solvability_tuples(gen_tuples: Sequence[tuple], degree: int,
                        order: int) -> SolvabilityResult:
    orders = [order]
    gens = list(gen_tuples)
    while orders[-1] > 1:
        gens = _derived_gens(gens, degree)
        next_order = StabilizerChain.build(gens, degree).order() if gens else 1
        if next_order == orders[-1]:
            # the series is stuck at a perfect nontrivial subgroup
            orders.append(next_order)
            return SolvabilityResult(False, tuple(orders))
        orders.append(next_order)
    return SolvabilityResult(True, tuple(orders))


def is_solvable(group: GroupHandle) -> SolvabilityResult:
    """Decide solvability by iterating the derived series until it stabilizes."""
    return _solvability_tuples(group._gen_tuples, group.degree, group.order())


def conjugacy_classes(group: GroupHandle) -> list:
    """Partition of the group into conjugation orbits.

    Classes are sorted by (element order, size, first appearance in the
    enumeration order); each class representative is its earliest member.
    Requires the group to be within the enumeration cap.
    """
    elements = [p.images for p in enumerate_elements(group)]
    position = {t: i for i, t in enumerate(elements)}
    conjugators = [(_inv(g), g) for g in group._gen_tuples]

    assigned = [False] * len(elements)
    raw_classes = []
    for i, start in enumerate(elements):
        if assigned[i]:
            continue
        members_idx = [i]
        assigned[i] = True
        frontier = [start]
        while frontier:
            new_frontier = []
            for t in frontier:
                for g_inv, g in conjugators:
                    c = _mult(_mult(g_inv, t), g)
                    j = position[c]
                    if not assigned[j]:
                        assigned[j] = True
                        members_idx.append(j)
                        new_frontier.append(c)
            frontier = new_frontier
        members_idx.sort()
        raw_classes.append((_tuple_order(start), len(members_idx), i,
                            members_idx))

    raw_classes.sort(key=lambda c: (c[0], c[1], c[2]))
    classes = []
    for elt_order, size, _first, members_idx in raw_classes:
        members = tuple(Permutation._wrap(elements[j]) for j in members_idx)
        classes.append(ConjugacyClass(members[0], size, members, elt_order))
    return classes


def order_spectrum(group: GroupHandle) -> OrderSpectrum:
    """oe(G): the exact set of element orders of the group."""
    orders = set()
    for t in _iter_element_tuples(group):
        orders.add(_tuple_order(t))
    return OrderSpectrum(tuple(sorted(orders)), group.order())


def elements_of_order(group: GroupHandle, m: int) -> Iterator[Permutation]:
    """All elements of order exactly m, in enumeration order."""
    if m < 1:
        raise ValueError("order must be positive")
    for t in _iter_element_tuples(group):
        if _tuple_order(t) == m:
            yield Permutation._wrap(t)


def _iter_element_tuples(group: GroupHandle) -> Iterator[tuple]:
    order = group.order()
    cap = enumeration_cap()
    if order > cap:
        from .engine import ENUM_CAP_ENV, EnumerationCapExceeded

        raise EnumerationCapExceeded(
            f"group order {order} exceeds enumeration cap {cap}; "
            f"raise {ENUM_CAP_ENV} or use class-based algorithms")
    return group.chain.iter_tuples()
