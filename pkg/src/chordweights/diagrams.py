"""Horizontal chord diagrams as words in a free monoid.

A :class:`ChordWord` on ``N`` strands stores its chords bottom-to-top: the
first chord in the list is the one applied first.  The diagram written
``(i_r, j_r) o ... o (i_1, j_1)`` therefore has ``chords[0] == (i_1, j_1)``,
and vertical composition is list concatenation.

:class:`DiagramExpr` is a finitely supported rational linear combination of
words on a common strand count, kept in canonical form (no zero terms).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DimensionError, ParseError

__all__ = [
    "Chord",
    "ChordWord",
    "DiagramExpr",
    "compose",
    "star",
    "expr_multiply",
    "expr_star",
    "tensor_split",
    "tensor_split_expr",
    "two_t_generator",
    "four_t_generator",
    "enumerate_words",
    "parse_diagram",
]


class Chord(NamedTuple):
    """A chord joining strands ``i < j`` (1-based)."""

    i: int
    j: int

    def __str__(self):
        return f"({self.i},{self.j})"


def _chord(pair) -> Chord:
    i, j = (int(x) for x in pair)
    if i == j:
        raise ValueError(f"chord endpoints must differ, got ({i},{j})")
    return Chord(i, j) if i < j else Chord(j, i)


@dataclass(frozen=True)
class ChordWord:
    """Element of the free monoid of horizontal chord diagrams on ``strands`` strands."""

    strands: int
    chords: tuple[Chord, ...] = ()

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError("strand count must be non-negative")
        chords = tuple(_chord(c) for c in self.chords)
        for c in chords:
            if c.i < 1 or c.j > self.strands:
                raise ValueError(f"chord {c} out of range for {self.strands} strands")
        object.__setattr__(self, "chords", chords)

    @classmethod
    def identity(cls, strands: int) -> ChordWord:
        return cls(strands, ())

    @classmethod
    def from_product(cls, strands: int, chords: Sequence) -> ChordWord:
        """Build from chords written left-to-right as ``c_r o ... o c_1`` (top first)."""
        return cls(strands, tuple(reversed(list(chords))))

    def __len__(self):
        return len(self.chords)

    def __mul__(self, other):
        if isinstance(other, ChordWord):
            return compose(self, other)
        return NotImplemented

    def star(self) -> ChordWord:
        return star(self)

    def is_identity(self) -> bool:
        return not self.chords

    def __str__(self):
        if not self.chords:
            return f"{self.strands}:"
        return f"{self.strands}: " + " ".join(str(c) for c in self.chords)

    def __repr__(self):
        return f"ChordWord({self})"


def compose(a: ChordWord, b: ChordWord) -> ChordWord:
    """Stack ``a`` on top of ``b`` (``b`` is applied first)."""
    if a.strands != b.strands:
        raise DimensionError(f"cannot compose diagrams on {a.strands} and {b.strands} strands")
    return ChordWord(a.strands, b.chords + a.chords)


def star(a: ChordWord) -> ChordWord:
    """Read the diagram backwards."""
    return ChordWord(a.strands, a.chords[::-1])


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class DiagramExpr:
    """Rational linear combination of chord words on ``strands`` strands."""

    strands: int
    terms: Mapping[ChordWord, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            if w.strands != self.strands:
                raise DimensionError(
                    f"term {w} has {w.strands} strands, expression has {self.strands}"
                )
            c = _frac(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_word(cls, word: ChordWord, coeff=1) -> DiagramExpr:
        return cls(word.strands, {word: coeff})

    @classmethod
    def from_terms(cls, strands: int, pairs: Iterable[tuple]) -> DiagramExpr:
        """Sum ``coeff * word`` pairs, merging repeated words."""
        acc: dict[ChordWord, Fraction] = {}
        for coeff, word in pairs:
            acc[word] = acc.get(word, Fraction(0)) + _frac(coeff)
        return cls(strands, acc)

    @classmethod
    def one(cls, strands: int) -> DiagramExpr:
        return cls.from_word(ChordWord.identity(strands))

    @classmethod
    def zero(cls, strands: int) -> DiagramExpr:
        return cls(strands, {})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: DiagramExpr):
        if self.strands != other.strands:
            raise DimensionError(
                f"expressions on {self.strands} and {other.strands} strands"
            )

    def __add__(self, other):
        if isinstance(other, ChordWord):
            other = DiagramExpr.from_word(other)
        if not isinstance(other, DiagramExpr):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return DiagramExpr(self.strands, acc)

    def __neg__(self):
        return DiagramExpr(self.strands, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, ChordWord):
            other = DiagramExpr.from_word(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (DiagramExpr, ChordWord)):
            return expr_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return DiagramExpr(self.strands, {w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, ChordWord):
            return expr_multiply(DiagramExpr.from_word(other), self)
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def star(self) -> DiagramExpr:
        return expr_star(self)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, ChordWord):
            other = DiagramExpr.from_word(other)
        if not isinstance(other, DiagramExpr):
            return NotImplemented
        return self.strands == other.strands and self.terms == other.terms

    def __hash__(self):
        return hash((self.strands, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return f"0 [{self.strands} strands]"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].chords)):
            body = " ".join(str(ch) for ch in w.chords) or "id"
            parts.append(f"{c} * [{body}]")
        return f"{self.strands}: " + " + ".join(parts)


def _as_expr(x) -> DiagramExpr:
    return DiagramExpr.from_word(x) if isinstance(x, ChordWord) else x


def expr_multiply(a, b) -> DiagramExpr:
    """Bilinear extension of :func:`compose`."""
    a, b = _as_expr(a), _as_expr(b)
    a._check(b)
    acc: dict[ChordWord, Fraction] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = ChordWord(a.strands, wb.chords + wa.chords)
            acc[w] = acc.get(w, Fraction(0)) + ca * cb
    return DiagramExpr(a.strands, acc)


def expr_star(a) -> DiagramExpr:
    # rational coefficients: conjugation is the identity
    a = _as_expr(a)
    return DiagramExpr(a.strands, {star(w): c for w, c in a.terms.items()})


def _block_bounds(widths: Sequence[int]) -> list[int]:
    bounds = [0]
    for w in widths:
        bounds.append(bounds[-1] + w)
    return bounds


def _lifts(chord: Chord, bounds: list[int]) -> list[Chord]:
    j, k = chord
    return [
        Chord(r, s)
        for r in range(bounds[j - 1] + 1, bounds[j] + 1)
        for s in range(bounds[k - 1] + 1, bounds[k] + 1)
    ]


def tensor_split(a: ChordWord, widths: Sequence[int]) -> DiagramExpr:
    """Replace strand ``r`` by ``widths[r-1]`` parallel strands and each chord by the sum of its lifts.

    >>> c = ChordWord.from_product(3, [(2, 3), (1, 3)])
    >>> print(tensor_split(c, (1, 2, 1)))
    4: 1 * [(1,4) (2,4)] + 1 * [(1,4) (3,4)]
    """
    widths = tuple(int(w) for w in widths)
    if len(widths) != a.strands:
        raise DimensionError(f"{len(widths)} widths given for {a.strands} strands")
    if any(w < 1 for w in widths):
        raise ValueError(f"tensor splitting widths must be positive, got {widths}")
    bounds = _block_bounds(widths)
    total = bounds[-1]
    lifted = [_lifts(c, bounds) for c in a.chords]
    # distinct lift sequences give distinct words, so no coefficients merge
    return DiagramExpr(total, {ChordWord(total, seq): 1 for seq in product(*lifted)})


def tensor_split_expr(e, widths: Sequence[int]) -> DiagramExpr:
    e = _as_expr(e)
    if len(widths) != e.strands:
        raise DimensionError(f"{len(widths)} widths given for {e.strands} strands")
    acc: dict[ChordWord, Fraction] = {}
    for w, c in e.terms.items():
        for w2, c2 in tensor_split(w, widths).terms.items():
            acc[w2] = acc.get(w2, Fraction(0)) + c * c2
    return DiagramExpr(sum(widths), acc)


def two_t_generator(i: int, j: int, k: int, l: int, N: int) -> DiagramExpr:
    """``(i,j) o (k,l) - (k,l) o (i,j)`` for ``i < j < k < l``."""
    if not 1 <= i < j < k < l <= N:
        raise ValueError(f"2T generator needs 1 <= i<j<k<l <= N, got {(i, j, k, l)}, N={N}")
    w = ChordWord.from_product
    return DiagramExpr.from_terms(N, [(1, w(N, [(i, j), (k, l)])), (-1, w(N, [(k, l), (i, j)]))])


def four_t_generator(i: int, j: int, k: int, N: int) -> DiagramExpr:
    """``(i,j)o(i,k) + (i,j)o(j,k) - (i,k)o(i,j) - (j,k)o(i,j)`` for ``i < j < k``."""
    if not 1 <= i < j < k <= N:
        raise ValueError(f"4T generator needs 1 <= i<j<k <= N, got {(i, j, k)}, N={N}")
    w = ChordWord.from_product
    return DiagramExpr.from_terms(N, [
        (1, w(N, [(i, j), (i, k)])),
        (1, w(N, [(i, j), (j, k)])),
        (-1, w(N, [(i, k), (i, j)])),
        (-1, w(N, [(j, k), (i, j)])),
    ])


def all_two_t_generators(N: int) -> list[DiagramExpr]:
    return [two_t_generator(*q, N) for q in combinations(range(1, N + 1), 4)]


def all_four_t_generators(N: int) -> list[DiagramExpr]:
    return [four_t_generator(*t, N) for t in combinations(range(1, N + 1), 3)]


def enumerate_words(N: int, max_chords: int) -> list[ChordWord]:
    """All words with at most ``max_chords`` chords, by length then lexicographically."""
    if N < 0 or max_chords < 0:
        raise ValueError("N and max_chords must be non-negative")
    alphabet = [Chord(i, j) for i, j in combinations(range(1, N + 1), 2)]
    words = [ChordWord.identity(N)]
    for k in range(1, max_chords + 1):
        words.extend(ChordWord(N, seq) for seq in product(alphabet, repeat=k))
    return words


_HEADER = re.compile(r"\s*(\d+)\s*:")
_CHORD = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_diagram(text: str) -> ChordWord:
    """Parse ``"N: (i,j) (k,l) ..."`` with chords listed bottom-to-top.

    ``"N:"`` alone is the identity on ``N`` strands.  Whitespace between
    chords is optional.
    """
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected strand count 'N:'", text, 0)
    N = int(m.group(1))
    pos = m.end()
    chords = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        cm = _CHORD.match(text, pos)
        if not cm:
            raise ParseError("expected chord '(i,j)'", text, pos)
        i, j = int(cm.group(1)), int(cm.group(2))
        if i == j:
            raise ParseError(f"chord ({i},{j}) joins a strand to itself", text, pos)
        for x in (i, j):
            if not 1 <= x <= N:
                raise ParseError(f"strand index {x} out of range 1..{N}", text, pos)
        chords.append((i, j))
        pos = cm.end()
    return ChordWord(N, tuple(chords))
