"""Permutations, the rational group algebra of the symmetric group, and the cycle-count functional.

Composition is right-to-left: ``(p * q)(x) == p(q(x))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .diagrams import ChordWord, DiagramExpr
from .errors import DimensionError, ParseError

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "CyclePoly",
    "perm_compose",
    "perm_inverse",
    "cycle_count",
    "sigma",
    "sigma_lin",
    "ga_multiply",
    "ga_star",
    "w_st_poly",
    "evaluate_poly",
    "parse_cycles",
    "parse_group_element",
]


class Permutation(tuple):
    """Bijection of ``{1..m}`` stored as its 1-based image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> Permutation:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls._raw(range(1, m + 1))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> Permutation:
        img = list(range(1, m + 1))
        img[i - 1], img[j - 1] = j, i
        return cls._raw(img)

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, m + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not 1 <= a <= m:
                    raise ValueError(f"point {a} outside 1..{m}")
                if a in seen:
                    raise ValueError(f"point {a} appears in two cycles")
                seen.add(a)
                img[a - 1] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return perm_compose(self, other)
        return NotImplemented

    def inverse(self) -> Permutation:
        return perm_inverse(self)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted by that point."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self[x - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def sign(self) -> int:
        return -1 if (len(self) - cycle_count(self)) % 2 else 1

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({list(self)})"


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise DimensionError(f"permutations of degree {len(p)} and {len(q)}")
    return Permutation._raw(tuple(p[i - 1] for i in q))


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for x, y in enumerate(p, 1):
        inv[y - 1] = x
    return Permutation._raw(inv)


@lru_cache(maxsize=1 << 16)
def _cycle_count(images: tuple) -> int:
    m = len(images)
    seen = bytearray(m)
    count = 0
    for s in range(m):
        if seen[s]:
            continue
        count += 1
        x = s
        while not seen[x]:
            seen[x] = 1
            x = images[x] - 1
    return count


def cycle_count(p: Permutation) -> int:
    """Number of cycles of ``p``, fixed points included."""
    return _cycle_count(tuple(p))


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Finitely supported rational combination of permutations of one degree."""

    degree: int
    terms: Mapping[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, c in self.terms.items():
            if len(p) != self.degree:
                raise DimensionError(f"permutation {p} has degree {len(p)}, expected {self.degree}")
            c = _frac(c)
            if c:
                clean[p if isinstance(p, Permutation) else Permutation(p)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _trusted(cls, degree: int, terms: dict) -> GroupAlgebraElement:
        # terms already has Permutation keys of the right degree
        obj = object.__new__(cls)
        object.__setattr__(obj, "degree", degree)
        object.__setattr__(obj, "terms", {p: c for p, c in terms.items() if c})
        return obj

    @classmethod
    def identity(cls, m: int) -> GroupAlgebraElement:
        return cls(m, {Permutation.identity(m): 1})

    @classmethod
    def zero(cls, m: int) -> GroupAlgebraElement:
        return cls(m, {})

    @classmethod
    def from_perm(cls, p: Permutation, coeff=1) -> GroupAlgebraElement:
        return cls(len(p), {p: coeff})

    @classmethod
    def sum_of(cls, m: int, perms: Iterable[Permutation], signed: bool = False) -> GroupAlgebraElement:
        acc: dict[Permutation, Fraction] = {}
        for p in perms:
            acc[p] = acc.get(p, Fraction(0)) + (p.sign() if signed else 1)
        return cls(m, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Permutation) -> Fraction:
        return self.terms.get(p, Fraction(0))

    def support(self) -> set[Permutation]:
        return set(self.terms)

    def _check(self, other: GroupAlgebraElement):
        if self.degree != other.degree:
            raise DimensionError(f"group algebra elements of degree {self.degree} and {other.degree}")

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, Fraction(0)) + c
        return GroupAlgebraElement._trusted(self.degree, acc)

    def __neg__(self):
        return GroupAlgebraElement._trusted(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return GroupAlgebraElement._trusted(self.degree, {p: c * other for p, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        return NotImplemented

    def star(self) -> GroupAlgebraElement:
        return ga_star(self)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        return "\n".join(f"{c} * {p}" for p, c in sorted(self.terms.items()))


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product."""
    a._check(b)
    acc: dict[Permutation, Fraction] = {}
    raw = Permutation._raw
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            r = raw(tuple(p[i - 1] for i in q))
            acc[r] = acc.get(r, 0) + cp * cq
    return GroupAlgebraElement._trusted(a.degree, acc)


def ga_star(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Invert every group element (coefficients are real)."""
    return GroupAlgebraElement._trusted(a.degree, {perm_inverse(p): c for p, c in a.terms.items()})


def sigma(c: ChordWord) -> Permutation:
    """Product of the chords' transpositions, bottom chord applied first."""
    img = list(range(1, c.strands + 1))
    # left-multiplying by a transposition swaps the values i and j in the image list
    for i, j in c.chords:
        for x in range(len(img)):
            if img[x] == i:
                img[x] = j
            elif img[x] == j:
                img[x] = i
    return Permutation._raw(img)


def sigma_lin(e) -> GroupAlgebraElement:
    if isinstance(e, ChordWord):
        e = DiagramExpr.from_word(e)
    acc: dict[Permutation, Fraction] = {}
    for w, c in e.terms.items():
        p = sigma(w)
        acc[p] = acc.get(p, 0) + c
    return GroupAlgebraElement._trusted(e.strands, acc)


class CyclePoly:
    """Polynomial in ``n`` with rational coefficients ``coeffs[k]`` of ``n**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n) -> Fraction:
        return evaluate_poly(self, n)

    def __add__(self, other):
        if not isinstance(other, CyclePoly):
            return NotImplemented
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (k - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (k - len(other.coeffs))
        return CyclePoly(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclePoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CyclePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CyclePoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")


def w_st_poly(a: GroupAlgebraElement) -> CyclePoly:
    """``sum z_p * n**cycle_count(p)`` as a polynomial in ``n``."""
    coeffs = [Fraction(0)] * (a.degree + 1)
    for p, c in a.terms.items():
        coeffs[_cycle_count(tuple(p))] += c
    return CyclePoly(coeffs)


def evaluate_poly(p: CyclePoly, n: int) -> Fraction:
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    n = int(n)
    total = Fraction(0)
    for c in reversed(p.coeffs):
        total = total * n + c
    return total


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int) -> Permutation:
    """Parse cycle notation such as ``"(1 3 2)(4 5)"``; ``"()"`` is the identity."""
    s = text.strip()
    pos = 0
    cycles = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        cm = _CYCLE.match(s, pos)
        if not cm:
            raise ParseError("expected '(' starting a cycle", s, pos)
        body = cm.group(1).replace(",", " ").split()
        try:
            pts = [int(x) for x in body]
        except ValueError:
            raise ParseError("non-integer point in cycle", s, pos) from None
        if pts:
            cycles.append(pts)
        pos = cm.end()
    try:
        return Permutation.from_cycles(m, cycles)
    except ValueError as exc:
        raise ParseError(str(exc), s, 0) from None


def parse_group_element(text: str, m: int) -> GroupAlgebraElement:
    """Parse one ``coeff * cycles`` term per line."""
    acc: dict[Permutation, Fraction] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line == "0":
            continue
        coeff, sep, rest = line.partition("*")
        if not sep:
            raise ParseError("expected 'coeff * cycles'", line, 0, lineno)
        try:
            c = Fraction(coeff.strip())
        except ValueError:
            raise ParseError("bad coefficient", line, 0, lineno) from None
        p = parse_cycles(rest, m)
        acc[p] = acc.get(p, Fraction(0)) + c
    return GroupAlgebraElement(m, acc)
