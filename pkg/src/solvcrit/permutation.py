"""Immutable permutations of {1..n} with disjoint-cycle notation.

Points are 1-based in every public surface (cycle strings, ``support``,
``apply``); storage is a 0-based image tuple.  Composition is fixed once,
package-wide, as left-to-right application: ``(p * q)`` means "apply p,
then q", i.e. ``(p * q)(x) = q(p(x))``.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator


class CycleParseError(ValueError):
    """Malformed or inconsistent cycle-notation input."""


class DegreeMismatchError(ValueError):
    """Operands act on different numbers of points."""


def _check_degrees(p: "Permutation", q: "Permutation") -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {p.degree} vs {q.degree}")


class Permutation:
    """A bijection of {1..n}, stored as the 0-based tuple of images."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        """Build from 0-based images: point i maps to images[i] (both 0-based)."""
        img = tuple(images)
        n = len(img)
        if n == 0:
            raise ValueError("degree must be at least 1")
        seen = [False] * n
        for x in img:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"images {img!r} are not a bijection of 0..{n - 1}")
            seen[x] = True
        object.__setattr__(self, "_images", img)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._wrap(tuple(range(degree)))

    @classmethod
    def _wrap(cls, images: tuple) -> "Permutation":
        # fast path for internally-produced image tuples, skips validation
        p = object.__new__(cls)
        object.__setattr__(p, "_images", images)
        return p

    @property
    def images(self) -> tuple:
        """The 0-based image tuple (``images[i]`` is where 0-based point i goes)."""
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= len(self._images):
            raise ValueError(f"point {point} out of range 1..{len(self._images)}")
        return self._images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Apply self, then other."""
        _check_degrees(self, other)
        q = other._images
        return Permutation._wrap(tuple(map(q.__getitem__, self._images)))

    def inverse(self) -> "Permutation":
        img = self._images
        inv = [0] * len(img)
        for i, j in enumerate(img):
            inv[j] = i
        return Permutation._wrap(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(len(self._images)))
        base = self._images
        while k:
            if k & 1:
                result = tuple(map(base.__getitem__, result))
            base = tuple(map(base.__getitem__, base))
            k >>= 1
        return Permutation._wrap(result)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def order(self) -> int:
        """Least k >= 1 with p**k = identity; the lcm of the cycle lengths."""
        return math.lcm(*(len(c) for c in self.cycles()))

    def support(self) -> frozenset:
        """The 1-based points moved by this permutation."""
        return frozenset(i + 1 for i, j in enumerate(self._images) if i != j)

    def cycles(self) -> tuple:
        """Disjoint cycles of length >= 2, as 1-based tuples.

        Each cycle starts at its smallest point; cycles are sorted by that
        point, so the decomposition is canonical.
        """
        img = self._images
        seen = [False] * len(img)
        out = []
        for i in range(len(img)):
            if seen[i] or img[i] == i:
                continue
            cycle = [i + 1]
            seen[i] = True
            j = img[i]
            while j != i:
                seen[j] = True
                cycle.append(j + 1)
                j = img[j]
            out.append(tuple(cycle))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, degree={self.degree})"

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation into a permutation of {1..degree}.

    Grammar: ``perm := cycle*`` with ``cycle := '(' int (ws int)* ')'``;
    integers are decimal 1-based points, whitespace-separated.  Points may
    appear in at most one cycle; unlisted points are fixed.  The empty
    string and ``()`` both denote the identity.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    images = list(range(degree))
    used = [False] * degree

    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' at position {pos}, got {ch!r}")
        close = text.find(")", pos)
        if close < 0:
            raise CycleParseError(f"unclosed cycle starting at position {pos}")
        body = text[pos + 1:close]
        pos = close + 1
        points = []
        for token in body.split():
            try:
                point = int(token)
            except ValueError:
                raise CycleParseError(f"invalid point {token!r}") from None
            if not 1 <= point <= degree:
                raise CycleParseError(
                    f"point {point} out of range 1..{degree}")
            if used[point - 1]:
                raise CycleParseError(f"point {point} repeated")
            used[point - 1] = True
            points.append(point - 1)
        for i, a in enumerate(points):
            images[a] = points[(i + 1) % len(points)]

    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle string; the identity prints as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q (the package-wide composition convention)."""
    return p * q


def element_order(p: Permutation) -> int:
    return p.order()


def support(p: Permutation) -> frozenset:
    return p.support()


def all_permutations(degree: int) -> Iterator[Permutation]:
    """Every permutation of {1..degree}, in lexicographic image order."""
    import itertools

    for img in itertools.permutations(range(degree)):
        yield Permutation._wrap(img)
