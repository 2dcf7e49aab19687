"""Group constructors, the catalog name resolver, and group-definition files.

Every constructor validates the built group's order against the closed-form
value, and every file load enforces the file's declared order, so bad
generator data can never masquerade as the intended group.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources

from .engine import GroupHandle, build_group
from .numbertheory import PrimePower
from .permutation import Permutation, parse_cycles


class GroupFileError(ValueError):
    """Malformed group-definition file; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class OrderGateError(ValueError):
    """Built group's order contradicts the declared or closed-form order."""


class UnknownGroupError(ValueError):
    """Catalog name does not resolve to a constructor or shipped file."""


def _gate(handle: GroupHandle, expected: int) -> GroupHandle:
    got = handle.order()
    if got != expected:
        raise OrderGateError(
            f"{handle.label or 'group'}: built order {got}, expected {expected}")
    return handle


def make_cyclic(n: int) -> GroupHandle:
    if n < 1:
        raise ValueError("need n >= 1")
    images = tuple((i + 1) % n for i in range(n))
    return _gate(build_group([Permutation(images)], label=f"C{n}"), n)


def make_symmetric(m: int) -> GroupHandle:
    if m < 3:
        raise ValueError("need m >= 3")
    cycle = Permutation(tuple((i + 1) % m for i in range(m)))
    swap = parse_cycles("(1 2)", m)
    return _gate(build_group([cycle, swap], label=f"S{m}"),
                 math.factorial(m))


def make_alternating(m: int) -> GroupHandle:
    if m < 3:
        raise ValueError("need m >= 3")
    three = parse_cycles("(1 2 3)", m)
    if m == 3:
        gens = [three]
    elif m % 2:
        gens = [three, Permutation(tuple((i + 1) % m for i in range(m)))]
    else:
        rotate = list(range(m))
        for i in range(1, m):
            rotate[i] = i % (m - 1) + 1
        gens = [three, Permutation(tuple(rotate))]
    return _gate(build_group(gens, label=f"A{m}"), math.factorial(m) // 2)


def make_dihedral(n: int) -> GroupHandle:
    """Dihedral group of order 2n (faithful point actions for n = 1, 2 too)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        gens = [parse_cycles("(1 2)", 2)]
    elif n == 2:
        gens = [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)]
    else:
        rotation = Permutation(tuple((i + 1) % n for i in range(n)))
        reflection = Permutation(tuple((n - i) % n for i in range(n)))
        gens = [rotation, reflection]
    return _gate(build_group(gens, label=f"D{n}"), 2 * n)


def make_frobenius20() -> GroupHandle:
    """The Frobenius group of order 20 on 5 points (a 5-cycle and an
    order-4 point-normalizer)."""
    gens = [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)]
    return _gate(build_group(gens, label="F20"), 20)


class _GF:
    """Arithmetic in GF(p^k), elements encoded as base-p digit integers.

    The modulus is the least monic irreducible polynomial of degree k over
    GF(p) in the base-p encoding, found by exhaustive search, so the field
    construction is deterministic.
    """

    def __init__(self, q: int):
        pp = PrimePower.of(q)
        self.p, self.k, self.q = pp.p, pp.k, pp.q
        self.modulus = self._least_irreducible()
        self.mul_table = [[self._polymul(a, b) for b in range(q)]
                          for a in range(q)]
        self.add_table = [[self._polyadd(a, b) for b in range(q)]
                          for a in range(q)]
        self.neg = [self._polyneg(a) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    self.inv[a] = b
                    break
        self.primitive = self._find_primitive()

    def _digits(self, a: int, length: int) -> list:
        out = []
        for _ in range(length):
            out.append(a % self.p)
            a //= self.p
        return out

    def _polyadd(self, a: int, b: int) -> int:
        da, db = self._digits(a, self.k), self._digits(b, self.k)
        return sum(((x + y) % self.p) * self.p ** i
                   for i, (x, y) in enumerate(zip(da, db)))

    def _polyneg(self, a: int) -> int:
        return sum(((-x) % self.p) * self.p ** i
                   for i, x in enumerate(self._digits(a, self.k)))

    def _polymul(self, a: int, b: int) -> int:
        # schoolbook product then reduction by the modulus polynomial
        da = self._digits(a, self.k)
        db = self._digits(b, self.k)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if not x:
                continue
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        mod = self._digits(self.modulus, self.k + 1)
        for top in range(len(prod) - 1, self.k - 1, -1):
            coeff = prod[top]
            if not coeff:
                continue
            prod[top] = 0
            for j in range(self.k):
                prod[top - self.k + j] = (
                    prod[top - self.k + j] - coeff * mod[j]) % self.p
        return sum(c * self.p ** i for i, c in enumerate(prod[:self.k]))

    def _least_irreducible(self) -> int:
        if self.k == 1:
            return self.p  # the polynomial x (unused for prime fields)
        for tail in range(self.p ** self.k):
            candidate = self.p ** self.k + tail  # monic: x^k + lower terms
            if self._irreducible(candidate):
                return candidate
        raise AssertionError("no irreducible polynomial found")

    def _poly_divmod_coeffs(self, num: list, den: list) -> list:
        num = list(num)
        dl = len(den) - 1
        while len(num) - 1 >= dl and any(num):
            while num and num[-1] == 0:
                num.pop()
            if len(num) - 1 < dl:
                break
            lead = num[-1] * pow(den[-1], self.p - 2, self.p) % self.p
            shift = len(num) - 1 - dl
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - lead * c) % self.p
        return num

    def _irreducible(self, poly: int) -> bool:
        coeffs = self._digits(poly, self.k + 1)
        for deg in range(1, self.k // 2 + 1):
            for tail in range(self.p ** deg):
                den = self._digits(self.p ** deg + tail, deg + 1)
                rem = self._poly_divmod_coeffs(coeffs, den)
                if not any(rem):
                    return False
        return True

    def _find_primitive(self) -> int:
        for a in range(2, self.q):
            seen = 1
            x = a
            while x != 1:
                x = self.mul_table[x][a]
                seen += 1
            if seen == self.q - 1:
                return a
        raise AssertionError("no primitive element found")


def make_psl2(q: int) -> GroupHandle:
    """PSL(2, q) acting on the q + 1 points of the projective line.

    Point i (1-based) is the field element i - 1 for i <= q; point q + 1 is
    infinity.  Generators: translation x -> x + 1, scaling x -> v^2 x for a
    primitive element v (the square keeps it inside PSL for odd q), and the
    inversion x -> -1/x.  Order is verified against q(q^2 - 1)/gcd(2, q-1).
    """
    if not 4 <= q <= 32:
        raise ValueError("need a prime power q with 4 <= q <= 32")
    field = _GF(q)
    infinity = q  # 0-based index of the projective point at infinity

    def translation(x: int) -> int:
        return infinity if x == infinity else field.add_table[x][1]

    nu2 = field.mul_table[field.primitive][field.primitive]

    def scaling(x: int) -> int:
        return infinity if x == infinity else field.mul_table[nu2][x]

    def inversion(x: int) -> int:
        if x == infinity:
            return 0
        if x == 0:
            return infinity
        return field.neg[field.inv[x]]

    gens = [Permutation(tuple(f(x) for x in range(q + 1)))
            for f in (translation, scaling, inversion)]
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    return _gate(build_group(gens, label=f"psl2:{q}"), expected)


@dataclass(frozen=True)
class GroupSpecFile:
    """Parsed group-definition file: a label, a degree, generator strings
    and an optional declared order (enforced at load time)."""

    label: str
    degree: int
    generator_strings: tuple
    expected_order: int | None = None


def parse_group_file(text: str) -> GroupSpecFile:
    """Parse the line-oriented group file grammar.

    Lines: ``label <string>``, ``degree <int>``, optional ``order <int>``,
    one ``gen <cycles>`` per generator; ``#`` starts a comment.
    """
    label = None
    degree = None
    order = None
    gens: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "label":
            if not rest:
                raise GroupFileError("label requires a value", lineno)
            label = rest
        elif keyword == "degree":
            try:
                degree = int(rest)
            except ValueError:
                raise GroupFileError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno)
        elif keyword == "order":
            try:
                order = int(rest)
            except ValueError:
                raise GroupFileError(f"bad order {rest!r}", lineno) from None
            if order < 1:
                raise GroupFileError("order must be positive", lineno)
        elif keyword == "gen":
            if degree is None:
                raise GroupFileError("gen before degree", lineno)
            try:
                parse_cycles(rest, degree)
            except ValueError as exc:
                raise GroupFileError(str(exc), lineno) from None
            gens.append(rest)
        else:
            raise GroupFileError(f"unknown keyword {keyword!r}", lineno)
    if label is None:
        raise GroupFileError("missing label")
    if degree is None:
        raise GroupFileError("missing degree")
    if not gens:
        raise GroupFileError("no generators")
    return GroupSpecFile(label, degree, tuple(gens), order)


def load_group(spec: GroupSpecFile) -> GroupHandle:
    """Build the group a spec file describes, enforcing its order gate."""
    gens = [parse_cycles(s, spec.degree) for s in spec.generator_strings]
    handle = build_group(gens, label=spec.label)
    if spec.expected_order is not None:
        _gate(handle, spec.expected_order)
    return handle


def load_group_file(path) -> GroupHandle:
    with open(path, encoding="utf-8") as fh:
        return load_group(parse_group_file(fh.read()))


def _shipped_group(name: str) -> GroupHandle:
    data = resources.files("solvcrit.data.groups").joinpath(f"{name}.grp")
    return load_group(parse_group_file(data.read_text(encoding="utf-8")))


_CATALOG_PATTERNS = (
    (re.compile(r"^A(\d+)$"), lambda m: make_alternating(int(m.group(1)))),
    (re.compile(r"^S(\d+)$"), lambda m: make_symmetric(int(m.group(1)))),
    (re.compile(r"^C(\d+)$"), lambda m: make_cyclic(int(m.group(1)))),
    (re.compile(r"^D(\d+)$"), lambda m: make_dihedral(int(m.group(1)))),
    (re.compile(r"^F20$"), lambda m: make_frobenius20()),
    (re.compile(r"^psl2:(\d+)$"), lambda m: make_psl2(int(m.group(1)))),
    (re.compile(r"^M11$"), lambda m: _shipped_group("m11")),
    (re.compile(r"^M12$"), lambda m: _shipped_group("m12")),
)


def catalog_group(name: str) -> GroupHandle:
    """Resolve a catalog name like ``A5``, ``S6``, ``D10``, ``C12``,
    ``F20``, ``psl2:7``, ``M11`` or ``M12`` to a built group."""
    for pattern, builder in _CATALOG_PATTERNS:
        match = pattern.match(name)
        if match:
            return builder(match)
    raise UnknownGroupError(f"unknown catalog group {name!r}")
