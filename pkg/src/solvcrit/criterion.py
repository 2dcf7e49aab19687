"""Solvability-criterion checking and nonsolvable witness-pair search.

Two predicates drive everything here:

* ``check_criterion``: for every ordered pair of conjugacy classes (C, D),
  is there x in C and y in D with <x, y> solvable?  A finite group satisfies
  this for all pairs exactly when it is solvable.
* ``verify_witness_pair``: do all pairs (x, y) with |x| = a, |y| = b generate
  a nonsolvable subgroup?  Such (a, b) exist in every nonabelian simple group.

Both reduce the pair scan by conjugation equivariance: <x, y> and
<x^g, y^g> are conjugate, hence share order and solvability, so one side of
the scan may be fixed to class representatives.  Scans are deterministic
(enumeration order, first hit wins) and embarrassingly parallel over y-blocks;
reports are identical for any worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .engine import GroupHandle, StabilizerChain
from .permutation import Permutation
from .structure import (
    ConjugacyClass,
    _solvability_tuples,
    conjugacy_classes,
    elements_of_order,
    is_solvable,
    order_spectrum,
)

_SCAN_BLOCK = 64


class OrderNotInSpectrumError(ValueError):
    """Requested witness order does not occur in the group."""


@dataclass(frozen=True)
class ClassRef:
    """Identifies a conjugacy class within a report's sorted class list."""

    index: int
    order_of_elements: int
    size: int

    def __str__(self) -> str:
        return (f"class #{self.index} "
                f"(element order {self.order_of_elements}, size {self.size})")


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the per-class-pair solvable-witness search.

    When ``holds``, ``solvable_witnesses`` maps every ordered class-index
    pair to one witnessing (x, y).  When it fails, ``counterexample`` names
    the first ordered pair (C, D) for which no x in C, y in D generate a
    solvable subgroup; the verdict is confirmed by an exhaustive scan of the
    full C x D rectangle, not just the reduced one.
    """

    holds: bool
    classes: tuple
    pairs_checked: int
    solvable_witnesses: dict = field(default_factory=dict)
    counterexample: tuple | None = None
    counterexample_rechecked: bool = False
    subgroups_examined: int = 0


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of checking one (a, b) order pair.

    ``outcome_orders`` is a multiset of (subgroup order, solvable) verdicts
    over the scanned pairs.  ``verified`` means no solvable subgroup was
    found; otherwise ``counterexample`` is the first (x, y), in scan order,
    whose subgroup is solvable.
    """

    a: int
    b: int
    verified: bool
    outcome_orders: dict
    counterexample: tuple | None = None
    pairs_checked: int = 0

    def orders(self) -> frozenset:
        """The set of subgroup orders observed."""
        return frozenset(order for order, _solvable in self.outcome_orders)


class _PairJudge:
    """Memoized (order, solvable) verdicts for two-generated subgroups.

    The cache key is the sorted generator pair, so duplicate pairs are never
    recomputed; caching cannot change any verdict.  A subgroup whose order
    equals the parent's order *is* the parent, so the parent's solvability
    is reused without rerunning the derived series.
    """

    __slots__ = ("degree", "parent_order", "parent_solvable", "cache")

    def __init__(self, degree: int, parent_order: int, parent_solvable: bool,
                 use_cache: bool = True):
        self.degree = degree
        self.parent_order = parent_order
        self.parent_solvable = parent_solvable
        self.cache: dict | None = {} if use_cache else None

    def verdict(self, x: tuple, y: tuple) -> tuple:
        key = (x, y) if x <= y else (y, x)
        if self.cache is not None:
            hit = self.cache.get(key)
            if hit is not None:
                return hit
        order = StabilizerChain.build(key, self.degree).order()
        if order == self.parent_order:
            solvable = self.parent_solvable
        else:
            solvable = _solvability_tuples(key, self.degree, order).solvable
        result = (order, solvable)
        if self.cache is not None:
            self.cache[key] = result
        return result


def _verdict_block(args: tuple) -> list:
    degree, parent_order, parent_solvable, x, ys = args
    judge = _PairJudge(degree, parent_order, parent_solvable)
    return [judge.verdict(x, y) for y in ys]


class _Scanner:
    """Runs (x, ys) verdict scans sequentially or over a process pool.

    Parallel scans compute whole blocks, but verdicts are consumed strictly
    in enumeration order, so early-exit decisions (and hence reports) match
    the single-worker run byte for byte.
    """

    def __init__(self, judge: _PairJudge, workers: int):
        self.judge = judge
        self.workers = max(1, workers)
        self._pool = None

    def __enter__(self) -> "_Scanner":
        if self.workers > 1:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc) -> None:
        if self._pool is not None:
            self._pool.shutdown()

    def verdicts(self, x: tuple, ys: Sequence[tuple]) -> Iterable[tuple]:
        if self._pool is None:
            judge = self.judge
            return (judge.verdict(x, y) for y in ys)
        blocks = [ys[i:i + _SCAN_BLOCK] for i in range(0, len(ys), _SCAN_BLOCK)]
        tasks = [(self.judge.degree, self.judge.parent_order,
                  self.judge.parent_solvable, x, block) for block in blocks]
        block_results = self._pool.map(_verdict_block, tasks)
        return (v for block in block_results for v in block)


def check_criterion(group: GroupHandle, workers: int = 1) -> CriterionReport:
    """Check every ordered pair of conjugacy classes for a solvable witness.

    For each ordered pair (C, D) the scan fixes x at C's representative and
    ranges y over D in enumeration order (sound by conjugation equivariance).
    The first failing pair is rechecked exhaustively over all of C x D and
    reported as the counterexample.
    """
    classes = conjugacy_classes(group)
    refs = tuple(ClassRef(i, c.order_of_elements, c.size)
                 for i, c in enumerate(classes))
    parent = is_solvable(group)
    judge = _PairJudge(group.degree, group.order(), parent.solvable)
    witnesses: dict = {}
    pairs_checked = 0
    examined = 0

    with _Scanner(judge, workers) as scanner:
        for i, class_c in enumerate(classes):
            x = class_c.representative.images
            for j, class_d in enumerate(classes):
                pairs_checked += 1
                ys = [m.images for m in class_d.members]
                witness = None
                for y, (order, solvable) in zip(ys, scanner.verdicts(x, ys)):
                    examined += 1
                    if solvable:
                        witness = (Permutation._wrap(x), Permutation._wrap(y))
                        break
                if witness is not None:
                    witnesses[(i, j)] = witness
                    continue
                _recheck_counterexample(judge, class_c, class_d)
                return CriterionReport(
                    holds=False, classes=refs, pairs_checked=pairs_checked,
                    solvable_witnesses=witnesses,
                    counterexample=(refs[i], refs[j]),
                    counterexample_rechecked=True,
                    subgroups_examined=examined)

    return CriterionReport(holds=True, classes=refs,
                           pairs_checked=pairs_checked,
                           solvable_witnesses=witnesses,
                           subgroups_examined=examined)


def _recheck_counterexample(judge: _PairJudge, class_c: ConjugacyClass,
                            class_d: ConjugacyClass) -> None:
    # Exhaustive confirmation over the full rectangle; the reduced scan's
    # soundness rests on conjugation equivariance, this rests on nothing.
    for xm in class_c.members:
        for ym in class_d.members:
            order, solvable = judge.verdict(xm.images, ym.images)
            if solvable:
                raise AssertionError(
                    "reduced scan missed a solvable pair; conjugation "
                    "equivariance violated (engine bug)")


def verify_witness_pair(group: GroupHandle, a: int, b: int,
                        workers: int = 1,
                        classes: Sequence[ConjugacyClass] | None = None,
                        ) -> WitnessReport:
    """Check that every (x, y) with |x| = a, |y| = b generates nonsolvably.

    The scan pairs each conjugacy-class representative of order ``a`` with
    every element of order ``b`` in enumeration order (sound by conjugation
    equivariance) and stops at the first solvable subgroup found.
    """
    if classes is None:
        classes = conjugacy_classes(group)
    reps_a = [c.representative for c in classes if c.order_of_elements == a]
    if not reps_a:
        raise OrderNotInSpectrumError(f"no element of order {a} in the group")
    if not any(c.order_of_elements == b for c in classes):
        raise OrderNotInSpectrumError(f"no element of order {b} in the group")
    ys = [p.images for p in elements_of_order(group, b)]

    parent = is_solvable(group)
    judge = _PairJudge(group.degree, group.order(), parent.solvable)
    outcomes: Counter = Counter()
    counterexample = None
    pairs_checked = 0

    with _Scanner(judge, workers) as scanner:
        for rep in reps_a:
            x = rep.images
            for y, verdict in zip(ys, scanner.verdicts(x, ys)):
                pairs_checked += 1
                outcomes[verdict] += 1
                if verdict[1]:
                    counterexample = (Permutation._wrap(x),
                                      Permutation._wrap(y))
                    break
            if counterexample is not None:
                break

    return WitnessReport(a=a, b=b, verified=counterexample is None,
                         outcome_orders=dict(outcomes),
                         counterexample=counterexample,
                         pairs_checked=pairs_checked)


def search_witness_pairs(group: GroupHandle,
                         restrict_to_primes: bool = False,
                         workers: int = 1) -> list:
    """All unordered order pairs {a, b} that verify as witness pairs.

    Pairs are drawn from the group's order spectrum (a = b permitted) and
    returned in lexicographic order.  With ``restrict_to_primes``, only
    pairs of distinct primes are tried.
    """
    spectrum = order_spectrum(group)
    classes = conjugacy_classes(group)
    candidates = []
    for i, a in enumerate(spectrum.orders):
        for b in spectrum.orders[i:]:
            if restrict_to_primes and (a == b or not _is_prime(a)
                                       or not _is_prime(b)):
                continue
            candidates.append((a, b))
    found = []
    for a, b in candidates:
        report = verify_witness_pair(group, a, b, workers=workers,
                                     classes=classes)
        if report.verified:
            found.append((a, b))
    return found


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
