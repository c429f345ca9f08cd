"""gl_n weight systems on horizontal chord diagrams.

The factored pipeline evaluates ``W_rho(e) = w_st(c_rho * sigma(split(e)))``
where ``split`` replaces strand ``i`` by ``|label_i|`` parallel strands,
``sigma`` sends a word to its product of transpositions, ``c_rho`` is the
labelling symmetriser and ``w_st`` sends a permutation to ``n**#cycles``.
The result is kept as a polynomial in ``n``.

The tensor oracles compute the same numbers as traces of explicit sparse
operators on ``(C^n)^{(x) m}``, without going through ``split`` or ``sigma``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Sequence, Union

import numpy as np
import scipy.sparse as sp

from .config import DEFAULT_GUARDS, Guards
from .diagrams import ChordWord, DiagramExpr, tensor_split
from .errors import DimensionError, ParseError, ResourceError, ZeroModuleError
from .perms import (
    CyclePoly,
    GroupAlgebraElement,
    Permutation,
    cycle_count,
    ga_multiply,
    sigma,
    sigma_lin,
    w_st_poly,
)
from .young import (
    Partition,
    RepLabel,
    _labelling_symmetriser,
    labelling_symmetriser,
    parse_label,
    rep_dimension,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Labelling",
    "WeightValue",
    "parse_labelling",
    "weight_std",
    "weight_std_poly",
    "weight",
    "weight_poly",
    "pipeline_image",
    "class_functional",
    "tensor_oracle_std",
    "tensor_oracle",
]

Diagram = Union[ChordWord, DiagramExpr]


@dataclass(frozen=True)
class Labelling:
    labels: tuple[RepLabel, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def standard(cls, N: int) -> Labelling:
        return cls((RepLabel.std(),) * N)

    def __len__(self):
        return len(self.labels)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(lab.tensor_width for lab in self.labels)

    @property
    def total_width(self) -> int:
        return sum(self.widths)

    @property
    def shapes(self) -> tuple[Partition, ...]:
        return tuple(lab.partition for lab in self.labels)

    def is_standard(self) -> bool:
        return all(w == 1 for w in self.widths)

    def in_theorem_scope(self) -> bool:
        """Every label is a symmetric or exterior power (std included)."""
        return all(lab.is_sym_ext() for lab in self.labels)

    def dimensions(self, n: int) -> list[int]:
        return [rep_dimension(lab, n) for lab in self.labels]

    def symmetriser(self) -> GroupAlgebraElement:
        return labelling_symmetriser(self.labels)

    def __str__(self):
        return ",".join(str(lab) for lab in self.labels)


def _split_top_level(text: str) -> list[tuple[int, str]]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append((start, text[start:i]))
            start = i + 1
    out.append((start, text[start:]))
    return out


def parse_labelling(text: str) -> Labelling:
    """Parse a comma-separated list such as ``"sym:2,ext:2,part:[2,1]"``."""
    labels = []
    for start, piece in _split_top_level(text):
        try:
            labels.append(parse_label(piece))
        except ParseError as exc:
            raise ParseError(f"bad label {piece.strip()!r}", text, start) from exc
    return Labelling(tuple(labels))


def _as_labelling(rho) -> Labelling:
    if isinstance(rho, Labelling):
        return rho
    if isinstance(rho, str):
        return parse_labelling(rho)
    return Labelling(tuple(rho))


def _as_expr(e: Diagram) -> DiagramExpr:
    return DiagramExpr.from_word(e) if isinstance(e, ChordWord) else e


def _check_n(n):
    if n is None or n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")


def weight_std_poly(e: Diagram) -> CyclePoly:
    return w_st_poly(sigma_lin(e))


def weight_std(e: Diagram, n: int) -> Fraction:
    """``sum coeff * n**cycles(sigma(word))`` evaluated directly at ``n``."""
    _check_n(n)
    e = _as_expr(e)
    return sum((c * Fraction(n) ** cycle_count(sigma(w)) for w, c in e.terms.items()), Fraction(0))


def pipeline_image(e: Diagram, rho) -> GroupAlgebraElement:
    """``sigma(split(e))``: the image of ``e`` in the group algebra of degree ``|rho|``."""
    rho = _as_labelling(rho)
    e = _as_expr(e)
    if e.strands != len(rho):
        raise DimensionError(f"labelling has {len(rho)} labels, diagram has {e.strands} strands")
    acc: dict[Permutation, Fraction] = {}
    for w, c in e.terms.items():
        for p, v in _word_image(w, rho.widths).terms.items():
            acc[p] = acc.get(p, 0) + c * v
    return GroupAlgebraElement._trusted(rho.total_width, acc)


@lru_cache(maxsize=1 << 14)
def _word_image(word: ChordWord, widths: tuple[int, ...]) -> GroupAlgebraElement:
    return sigma_lin(tensor_split(word, widths))


@lru_cache(maxsize=1 << 16)
def _word_poly(word: ChordWord, shapes: tuple[Partition, ...]) -> CyclePoly:
    widths = tuple(s.size for s in shapes)
    c = _labelling_symmetriser(shapes)
    return w_st_poly(ga_multiply(c, _word_image(word, widths)))


def class_functional(x: GroupAlgebraElement, rho, side: str = "left") -> CyclePoly:
    """``w_st(c_rho * x)`` (or ``w_st(x * c_rho)`` with ``side="right"``)."""
    c = _as_labelling(rho).symmetriser()
    prod_ = ga_multiply(c, x) if side == "left" else ga_multiply(x, c)
    return w_st_poly(prod_)


def weight_poly(e: Diagram, rho) -> CyclePoly:
    rho = _as_labelling(rho)
    e = _as_expr(e)
    if e.strands != len(rho):
        raise DimensionError(f"labelling has {len(rho)} labels, diagram has {e.strands} strands")
    total = CyclePoly()
    for w, c in e.terms.items():
        total = total + _word_poly(w, rho.shapes) * c
    return total


@dataclass
class WeightValue:
    """Weight as a polynomial in ``n``, with specialisations filled on demand."""

    poly: CyclePoly
    n: int | None = None
    zero_module: bool = False
    specialised: dict[int, Fraction] = field(default_factory=dict)

    def at(self, n: int) -> Fraction:
        if n not in self.specialised:
            self.specialised[n] = self.poly(n)
        return self.specialised[n]

    @property
    def value(self) -> Fraction | None:
        return None if self.n is None else self.at(self.n)


def weight(e: Diagram, rho, n: int | None = None, strict: bool = False) -> WeightValue:
    """Evaluate the weight system labelled by ``rho`` on ``e``.

    If some label is the zero representation at ``n`` (for instance ``ext:k``
    with ``k > n``) the value is 0 and ``zero_module`` is set; with
    ``strict=True`` a :class:`ZeroModuleError` is raised instead.
    """
    rho = _as_labelling(rho)
    zero = False
    if n is not None:
        _check_n(n)
        dead = [str(lab) for lab, d in zip(rho.labels, rho.dimensions(n)) if d == 0]
        if dead:
            if strict:
                raise ZeroModuleError(f"labels {dead} are zero-dimensional at n={n}")
            logger.warning("labels %s are zero-dimensional at n=%d; weight is 0", dead, n)
            zero = True
    wv = WeightValue(weight_poly(e, rho), n, zero)
    if n is not None:
        wv.at(n)
    return wv


# --- tensor oracles -------------------------------------------------------


def _guard_dim(n: int, m: int, guards: Guards):
    dim = n**m
    if dim > guards.max_tensor_dim:
        raise ResourceError(
            f"tensor space has dimension {n}^{m} = {dim} > guard {guards.max_tensor_dim}"
        )
    return dim


def _digits(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    powers = n ** np.arange(m - 1, -1, -1, dtype=np.int64)
    idx = np.arange(n**m, dtype=np.int64)
    return (idx[:, None] // powers) % n, powers


def _place_map(p: Sequence[int], digits: np.ndarray, powers: np.ndarray) -> np.ndarray:
    """Index map of the operator moving tensor factor ``i`` to position ``p(i)``."""
    moved = np.empty_like(digits)
    moved[:, [x - 1 for x in p]] = digits
    return moved @ powers


def _flip_map(i: int, j: int, digits: np.ndarray, powers: np.ndarray) -> np.ndarray:
    swapped = digits.copy()
    swapped[:, [i - 1, j - 1]] = digits[:, [j - 1, i - 1]]
    return swapped @ powers


def tensor_oracle_std(c: ChordWord, n: int, guards: Guards = DEFAULT_GUARDS) -> int:
    """Trace of the composed factor flips on ``(C^n)^{(x) N}``."""
    _check_n(n)
    N = c.strands
    dim = _guard_dim(n, N, guards)
    if N == 0:
        return 1
    digits, powers = _digits(n, N)
    state = np.arange(dim, dtype=np.int64)
    for i, j in c.chords:
        state = _flip_map(i, j, digits, powers)[state]
    return int(np.count_nonzero(state == np.arange(dim)))


def _map_matrix(target: np.ndarray, dim: int, weight_=1) -> sp.csr_array:
    cols = np.arange(dim, dtype=np.int64)
    data = np.full(dim, weight_, dtype=np.int64)
    return sp.csr_array((data, (target, cols)), shape=(dim, dim))


def tensor_oracle(c: ChordWord, rho, n: int, guards: Guards = DEFAULT_GUARDS) -> Fraction:
    """``Tr(M(c_rho) R(c))`` on the ``|rho|``-fold tensor power of ``C^n``.

    ``R(c)`` applies, bottom to top, one operator per chord ``(j,k)``: the sum
    of factor flips over all pairs of tensor slots in blocks ``j`` and ``k``.
    ``M(c_rho)`` is the place-permutation action of the labelling symmetriser,
    scaled to integers by its common denominator.
    """
    _check_n(n)
    rho = _as_labelling(rho)
    if c.strands != len(rho):
        raise DimensionError(f"labelling has {len(rho)} labels, diagram has {c.strands} strands")
    m = rho.total_width
    dim = _guard_dim(n, m, guards)
    if m == 0:
        return Fraction(1)
    widths = rho.widths
    bounds = [0]
    for w in widths:
        bounds.append(bounds[-1] + w)

    sym = rho.symmetriser()
    denom = lcm(*(v.denominator for v in sym.terms.values()))
    bound = denom * sum(abs(v) for v in sym.terms.values()) * prod(
        widths[i - 1] * widths[j - 1] for i, j in c.chords
    )
    if bound >= 2**62:
        raise ResourceError("oracle entries could overflow 64-bit integers")

    digits, powers = _digits(n, m)
    R = sp.identity(dim, dtype=np.int64, format="csr")
    for i, j in c.chords:
        op = None
        for r in range(bounds[i - 1] + 1, bounds[i] + 1):
            for s in range(bounds[j - 1] + 1, bounds[j] + 1):
                f = _map_matrix(_flip_map(r, s, digits, powers), dim)
                op = f if op is None else op + f
        R = op @ R
    M = None
    for p, v in sym.terms.items():
        scaled = v * denom
        assert scaled.denominator == 1
        term = _map_matrix(_place_map(p, digits, powers), dim, int(scaled))
        M = term if M is None else M + term
    trace = int((M @ R).diagonal().sum())
    return Fraction(trace, denom)

