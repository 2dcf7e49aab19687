"""Stabilizer chains (base and strong generating set) for permutation groups.

The builder is a deterministic incremental Schreier-Sims: base points are
chosen as the smallest moved point not yet in the base, Schreier generators
are processed deepest-level-first in a fixed order, and transversals are
append-only.  Two builds from the same generator list therefore produce
identical chains and identical element enumeration order.

Hot paths work on raw 0-based image tuples; :class:`Permutation` objects
appear only at the public surface.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .permutation import DegreeMismatchError, Permutation

DEFAULT_ENUM_CAP = 2_000_000
ENUM_CAP_ENV = "SOLVCRIT_ENUM_CAP"


class EnumerationCapExceeded(RuntimeError):
    """Group is too large for element enumeration at the configured cap."""


class NotASubsetError(ValueError):
    """An element required to lie in the group does not."""


def enumeration_cap() -> int:
    """Current enumeration cap (default 2e6, overridable via SOLVCRIT_ENUM_CAP)."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


def _mult(p: tuple, q: tuple) -> tuple:
    # apply p, then q
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _tuple_order(p: tuple) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i] or p[i] == i:
            continue
        length = 1
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            length += 1
            j = p[j]
        order = math.lcm(order, length)
    return order


class _Level:
    """One level of the chain: a base point with transversal and generators."""

    __slots__ = ("point", "gens", "inv_gens", "transversal", "orbit", "pending")

    def __init__(self, point: int, identity: tuple):
        self.point = point
        self.gens: list[tuple] = []
        self.inv_gens: list[tuple] = []
        self.transversal: dict[int, tuple] = {point: identity}
        self.orbit: list[int] = [point]
        # Schreier-generator work queue of (orbit point, generator index)
        self.pending: deque = deque()

    def add_generator(self, gen: tuple) -> None:
        idx = len(self.gens)
        self.gens.append(gen)
        self.inv_gens.append(_inv(gen))
        for x in self.orbit:
            self.pending.append((x, idx))
        self._extend_orbit()

    def _extend_orbit(self) -> None:
        # Transversals are append-only: reps for already-known points never
        # change, which keeps previously processed Schreier pairs valid.
        transversal = self.transversal
        gens = self.gens
        frontier = list(self.orbit)
        while frontier:
            new_frontier = []
            for x in frontier:
                rep = transversal[x]
                for gen in gens:
                    y = gen[x]
                    if y not in transversal:
                        transversal[y] = _mult(rep, gen)
                        self.orbit.append(y)
                        new_frontier.append(y)
                        for idx in range(len(gens)):
                            self.pending.append((y, idx))
            frontier = new_frontier


class StabilizerChain:
    """Base, transversals and strong generators of a permutation group."""

    __slots__ = ("degree", "_identity", "_levels")

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self._identity = tuple(range(degree))
        self._levels: list[_Level] = []

    # -- construction ---------------------------------------------------

    @classmethod
    def build(cls, generators: Sequence[tuple], degree: int) -> "StabilizerChain":
        chain = cls(degree)
        chain.extend(generators)
        return chain

    def extend(self, generators: Iterable[tuple]) -> None:
        """Adjoin generators and re-close the chain (incremental Schreier-Sims)."""
        for gen in generators:
            self._insert(gen, 0)
        self._process_pending()

    def _insert(self, g: tuple, entry: int) -> bool:
        """Sift g from ``entry`` and add a new strong generator if needed.

        ``g`` must fix the base points above ``entry``.  The sift residue
        generates (part of) every stabilizer from ``entry`` down to the level
        where sifting stuck, so it is recorded at each of those levels.
        """
        residue, stuck = self._sift(g, start=entry)
        if residue is None:
            return False
        if stuck == len(self._levels):
            point = min(i for i, j in enumerate(residue) if i != j)
            self._levels.append(_Level(point, self._identity))
        for level in range(entry, stuck + 1):
            self._levels[level].add_generator(residue)
        return True

    def _process_pending(self) -> None:
        levels = self._levels
        while True:
            level = None
            for i in range(len(levels) - 1, -1, -1):
                if levels[i].pending:
                    level = i
                    break
            if level is None:
                return
            lv = levels[level]
            x, gen_idx = lv.pending.popleft()
            gen = lv.gens[gen_idx]
            rep = lv.transversal[x]
            walked = _mult(rep, gen)
            back = lv.transversal[gen[x]]
            if walked == back:
                continue
            schreier = _mult(walked, _inv(back))
            self._insert(schreier, level + 1)

    def _sift(self, g: tuple, start: int = 0) -> tuple:
        """Reduce g by transversal representatives.

        Returns ``(residue, level)`` where ``residue`` is None when g sifts
        to the identity, else the first level whose transversal cannot absorb
        the remainder (== number of levels when a new level is needed).
        """
        levels = self._levels
        identity = self._identity
        for i in range(start, len(levels)):
            lv = levels[i]
            y = g[lv.point]
            if y == lv.point:
                continue
            rep = lv.transversal.get(y)
            if rep is None:
                return g, i
            g = _mult(g, _inv(rep))
        if g == identity:
            return None, len(levels)
        return g, len(levels)

    # -- queries ---------------------------------------------------------

    def order(self) -> int:
        return math.prod(len(lv.transversal) for lv in self._levels)

    def contains_tuple(self, g: tuple) -> bool:
        if len(g) != self.degree:
            raise DegreeMismatchError(
                f"degree mismatch: {len(g)} vs {self.degree}")
        return self._sift(g)[0] is None

    @property
    def base(self) -> tuple:
        """Base points, 1-based, in chain order."""
        return tuple(lv.point + 1 for lv in self._levels)

    def strong_generators(self) -> list[tuple]:
        out = []
        for lv in self._levels:
            out.extend(lv.gens)
        return out

    def transversal_sizes(self) -> tuple:
        return tuple(len(lv.transversal) for lv in self._levels)

    def iter_tuples(self) -> Iterator[tuple]:
        """All elements, exactly once, in the chain's deterministic order.

        An element is the product (deepest level first) of one transversal
        representative per level; orbit points are taken in sorted order with
        the top level varying fastest.
        """

        def rec(index: int) -> Iterator[tuple]:
            if index == len(self._levels):
                yield self._identity
                return
            lv = self._levels[index]
            reps = [lv.transversal[x] for x in sorted(lv.transversal)]
            for deeper in rec(index + 1):
                for rep in reps:
                    yield _mult(deeper, rep)

        return rec(0)


@dataclass(frozen=True, eq=False)
class GroupHandle:
    """An immutable permutation group: generators plus an eagerly built chain."""

    generators: tuple
    chain: StabilizerChain
    label: str | None = None
    _gen_tuples: tuple = field(repr=False, default=())

    @property
    def degree(self) -> int:
        return self.chain.degree

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"<{name}: degree {self.degree}, order {self.order()}>"


def build_group(generators: Sequence[Permutation],
                label: str | None = None) -> GroupHandle:
    """Build a group handle from a nonempty, degree-matched generator list.

    Deterministic: a fixed generator list always yields the same base
    (smallest moved point first) and the same enumeration order.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("generator list must be nonempty")
    degree = gens[0].degree
    for g in gens[1:]:
        if g.degree != degree:
            raise DegreeMismatchError(
                f"degree mismatch: {g.degree} vs {degree}")
    gen_tuples = tuple(g.images for g in gens)
    chain = StabilizerChain.build(gen_tuples, degree)
    return GroupHandle(gens, chain, label, gen_tuples)


def generated_subgroup(elements: Sequence[Permutation],
                       label: str | None = None) -> GroupHandle:
    """The subgroup generated by the given elements."""
    return build_group(elements, label)


def group_order(group: GroupHandle) -> int:
    return group.chain.order()


def contains(group: GroupHandle, p: Permutation) -> bool:
    return group.chain.contains_tuple(p.images)


def enumerate_elements(group: GroupHandle,
                       cap: int | None = None) -> Iterator[Permutation]:
    """Yield every element exactly once, in deterministic order."""
    limit = enumeration_cap() if cap is None else cap
    order = group.order()
    if order > limit:
        raise EnumerationCapExceeded(
            f"group order {order} exceeds enumeration cap {limit}; "
            f"raise {ENUM_CAP_ENV} or use class-based algorithms")
    return (Permutation._wrap(t) for t in group.chain.iter_tuples())


def normal_closure(group: GroupHandle,
                   seeds: Sequence[Permutation],
                   label: str | None = None) -> GroupHandle:
    """Smallest normal subgroup of ``group`` containing ``seeds``.

    Worklist construction: adjoin conjugates of newly added generators by the
    parent's generators until the (incrementally re-closed) chain absorbs
    them all; the result is then verified closed under conjugation.
    """
    for s in seeds:
        if not contains(group, s):
            raise NotASubsetError(f"seed element {s} is not in the group")
    seed_tuples = [s.images for s in seeds]
    closure_gens = _normal_closure_tuples(
        group._gen_tuples or tuple(g.images for g in group.generators),
        seed_tuples, group.degree)
    if not closure_gens:
        identity = Permutation.identity(group.degree)
        return build_group([identity], label)
    perms = [Permutation._wrap(t) for t in closure_gens]
    return build_group(perms, label)


def _normal_closure_tuples(parent_gens: Sequence[tuple],
                           seeds: Sequence[tuple],
                           degree: int) -> list[tuple]:
    """Generators of the normal closure, as image tuples."""
    identity = tuple(range(degree))
    chain = StabilizerChain(degree)
    added: list[tuple] = []
    queue = deque(t for t in seeds if t != identity)
    parent_inv = [(_inv(g), g) for g in parent_gens]
    while queue:
        h = queue.popleft()
        if chain.contains_tuple(h):
            continue
        chain.extend([h])
        added.append(h)
        for g_inv, g in parent_inv:
            queue.append(_mult(_mult(g_inv, h), g))
    for h in added:
        for g_inv, g in parent_inv:
            conj = _mult(_mult(g_inv, h), g)
            if not chain.contains_tuple(conj):
                raise AssertionError(
                    "normal closure not conjugation-closed (builder bug)")
    return added
