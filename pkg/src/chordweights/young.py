"""Partitions, tableaux, Young symmetrisers and the labelling symmetriser.

Symmetrisers live in the rational group algebra of :mod:`chordweights.perms`.
The canonical tableau of a shape is filled with ``size, size-1, ..., 1``
reading rows left to right, top to bottom.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import ConsistencyError, ParseError
from .perms import GroupAlgebraElement, Permutation, ga_multiply

__all__ = [
    "Partition",
    "Tableau",
    "RepLabel",
    "partitions",
    "canonical_tableau",
    "standard_tableaux",
    "row_stabilizer",
    "column_stabilizer",
    "unnormalized_symmetriser",
    "normalization_constant",
    "symmetriser",
    "small_symmetriser",
    "labelling_symmetriser",
    "rep_dimension",
    "hook_lengths",
    "num_standard_tableaux",
    "weyl_dimension",
    "parse_partition",
    "parse_label",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def is_row(self) -> bool:
        return len(self.parts) <= 1

    def is_column(self) -> bool:
        return all(p == 1 for p in self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class Tableau:
    """Filling of a Young diagram with ``1..size``, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))
        labels = sorted(x for r in rows for x in r)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"tableau labels must be 1..{len(labels)} without repeats")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[c] for r in self.rows if len(r) > c) for c in range(len(self.rows[0]))]

    def is_standard(self) -> bool:
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(a < b for c in self.columns() for a, b in zip(c, c[1:]))
        return rows_ok and cols_ok

    def act(self, p: Permutation) -> Tableau:
        """Relabel every box ``x`` as ``p(x)``."""
        return Tableau(tuple(tuple(p(x) for x in r) for r in self.rows))

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def canonical_tableau(shape: Partition) -> Tableau:
    if isinstance(shape, (tuple, list)):
        shape = Partition(tuple(shape))
    if shape.size == 0:
        raise ValueError("canonical tableau of the empty partition is undefined")
    label = shape.size
    rows = []
    for length in shape.parts:
        rows.append(tuple(range(label, label - length, -1)))
        label -= length
    return Tableau(tuple(rows))


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """All standard tableaux of ``shape`` (rows and columns increasing)."""
    if isinstance(shape, (tuple, list)):
        shape = Partition(tuple(shape))
    n = shape.size
    rows: list[list[int]] = [[] for _ in shape.parts]

    def place(label):
        if label > n:
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        for r, length in enumerate(shape.parts):
            if len(rows[r]) < length and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(label)
                yield from place(label + 1)
                rows[r].pop()

    yield from place(1)


def _block_group(blocks: Sequence[Sequence[int]], m: int) -> list[Permutation]:
    """All permutations of ``1..m`` that map each block to itself."""
    per_block = []
    for block in blocks:
        per_block.append([dict(zip(block, img)) for img in permutations(block)])
    out = []
    for choice in product(*per_block):
        img = list(range(1, m + 1))
        for mapping in choice:
            for a, b in mapping.items():
                img[a - 1] = b
        out.append(Permutation._raw(img))
    return out


def row_stabilizer(t: Tableau) -> list[Permutation]:
    return _block_group(t.rows, t.size)


def column_stabilizer(t: Tableau) -> list[Permutation]:
    return _block_group(t.columns(), t.size)


def unnormalized_symmetriser(t: Tableau) -> GroupAlgebraElement:
    """Row sum times signed column sum, in that order."""
    m = t.size
    a = GroupAlgebraElement.sum_of(m, row_stabilizer(t))
    b = GroupAlgebraElement.sum_of(m, column_stabilizer(t), signed=True)
    return ga_multiply(a, b)


def normalization_constant(ctilde: GroupAlgebraElement) -> Fraction:
    """The scalar ``alpha`` with ``ctilde * ctilde == alpha * ctilde``."""
    if ctilde.is_zero():
        raise ConsistencyError("zero element has no normalisation constant")
    sq = ga_multiply(ctilde, ctilde)
    p, c = next(iter(ctilde.terms.items()))
    alpha = sq.coefficient(p) / c
    if alpha <= 0 or sq != ctilde * alpha:
        raise ConsistencyError(f"square is not a positive multiple (ratio {alpha})")
    return alpha


def symmetriser(t: Tableau) -> GroupAlgebraElement:
    return _symmetriser_of_rows(t.rows)


@lru_cache(maxsize=None)
def _symmetriser_of_rows(rows) -> GroupAlgebraElement:
    ctilde = unnormalized_symmetriser(Tableau(rows))
    return ctilde / normalization_constant(ctilde)


def _shift(p: Permutation, N: int, offset: int) -> Permutation:
    img = list(range(1, N + 1))
    for x, y in enumerate(p, 1):
        img[offset + x - 1] = offset + y
    return Permutation._raw(img)


def small_symmetriser(N: int, offset: int, shape: Partition) -> GroupAlgebraElement:
    """Symmetriser of the canonical tableau of ``shape`` acting on points ``offset+1 .. offset+|shape|``."""
    if isinstance(shape, (tuple, list)):
        shape = Partition(tuple(shape))
    if offset < 0 or offset + shape.size > N:
        raise ValueError(f"block {offset + 1}..{offset + shape.size} does not fit in {N} points")
    c = symmetriser(canonical_tableau(shape))
    return GroupAlgebraElement._trusted(N, {_shift(p, N, offset): v for p, v in c.terms.items()})


_PART = re.compile(r"\[\s*\d+(\s*,\s*\d+)*\s*\]$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[5,3,1,1]"``."""
    s = text.strip()
    if not _PART.match(s):
        raise ParseError("expected partition literal like [2,1]", s, 0)
    try:
        return Partition(tuple(int(x) for x in s[1:-1].split(",")))
    except ValueError as exc:
        raise ParseError(str(exc), s, 0) from None


@dataclass(frozen=True)
class RepLabel:
    """A strand label: ``std``, ``sym:k``, ``ext:k`` or a general ``part:[...]``."""

    kind: str
    partition: Partition

    def __post_init__(self):
        if self.kind not in ("std", "sym", "ext", "part"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.partition.size < 1:
            raise ValueError("labels need a partition of size >= 1")

    @classmethod
    def std(cls) -> RepLabel:
        return cls("std", Partition((1,)))

    @classmethod
    def sym(cls, k: int) -> RepLabel:
        return cls("sym", Partition((k,)))

    @classmethod
    def ext(cls, k: int) -> RepLabel:
        return cls("ext", Partition((1,) * k))

    @classmethod
    def part(cls, parts) -> RepLabel:
        return cls("part", parts if isinstance(parts, Partition) else Partition(tuple(parts)))

    @property
    def tensor_width(self) -> int:
        return self.partition.size

    @property
    def k(self) -> int:
        return self.partition.size

    def is_sym_ext(self) -> bool:
        """True for the labels covered by the positivity guarantee."""
        return self.kind != "part" or self.partition.is_row() or self.partition.is_column()

    def __str__(self):
        if self.kind == "std":
            return "std"
        if self.kind == "part":
            return f"part:{self.partition}"
        return f"{self.kind}:{self.k}"


def parse_label(text: str) -> RepLabel:
    s = text.strip().lower()
    if s == "std":
        return RepLabel.std()
    kind, sep, arg = s.partition(":")
    if sep and kind in ("sym", "ext"):
        if not arg.strip().isdigit() or int(arg) < 1:
            raise ParseError(f"{kind} needs a positive integer", text, len(kind) + 1)
        return RepLabel.sym(int(arg)) if kind == "sym" else RepLabel.ext(int(arg))
    if sep and kind == "part":
        try:
            return RepLabel.part(parse_partition(arg))
        except ParseError as exc:
            raise ParseError(f"bad partition: {arg}", text, 5) from exc
    raise ParseError("expected std, sym:k, ext:k or part:[...]", text, 0)


def labelling_symmetriser(labels: Sequence[RepLabel]) -> GroupAlgebraElement:
    """Product of small symmetrisers, block ``i`` on the ``i``-th run of ``|label_i|`` points."""
    return _labelling_symmetriser(tuple(lab.partition for lab in labels))


@lru_cache(maxsize=None)
def _labelling_symmetriser(shapes: tuple[Partition, ...]) -> GroupAlgebraElement:
    total = sum(s.size for s in shapes)
    c = GroupAlgebraElement.identity(total)
    offset = 0
    for s in shapes:
        if s.size > 1:
            c = ga_multiply(c, small_symmetriser(total, offset, s))
        offset += s.size
    return c


def hook_lengths(shape: Partition) -> list[list[int]]:
    conj = shape.conjugate().parts
    return [[row - c + conj[c] - r - 1 for c in range(row)] for r, row in enumerate(shape.parts)]


def num_standard_tableaux(shape: Partition) -> int:
    """Hook length formula."""
    return factorial(shape.size) // prod(h for row in hook_lengths(shape) for h in row)


def weyl_dimension(shape: Partition, n: int) -> int:
    """Dimension of the Weyl module of ``shape`` over ``C^n`` (hook content formula); 0 if too many rows."""
    num = Fraction(1)
    for r, (length, hooks) in enumerate(zip(shape.parts, hook_lengths(shape))):
        for c in range(length):
            num *= Fraction(n + c - r, hooks[c])
    return int(num) if num > 0 else 0


def rep_dimension(label: RepLabel, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if label.kind == "std":
        return n
    if label.kind == "sym":
        return comb(n + label.k - 1, label.k)
    if label.kind == "ext":
        return comb(n, label.k)
    return weyl_dimension(label.partition, n)
