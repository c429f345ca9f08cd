"""Exact positivity certificates for weight systems on truncated diagram bases.

The state condition ``W(x x*) >= 0`` is checked on the span of all words with
at most ``d`` chords.  The Gram matrix ``M[i][j] = W(C_i C_j*)`` is assembled
exactly and decided by symmetric elimination over the rationals.  The words
span the degree-``d`` part of the quotient algebra but are not independent in
it, so singular matrices are expected.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .config import DEFAULT_GUARDS, Guards
from .diagrams import ChordWord, enumerate_words
from .errors import ResourceError, ShapeError
from .perms import CyclePoly, _cycle_count, ga_multiply, perm_inverse
from .weights import Labelling, _as_labelling, pipeline_image

__all__ = [
    "GramSpec",
    "GramReport",
    "PSDResult",
    "basis_size",
    "gram_matrix",
    "gram_poly_matrix",
    "matrix_csv",
    "psd_check",
    "quadratic_form",
    "verify_state",
]

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class GramSpec:
    strands: int
    max_chords: int
    labelling: Labelling
    n: int

    def __post_init__(self):
        object.__setattr__(self, "labelling", _as_labelling(self.labelling))
        if self.strands < 0 or self.max_chords < 0:
            raise ValueError("strands and max_chords must be non-negative")
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if len(self.labelling) != self.strands:
            raise ValueError(
                f"labelling has {len(self.labelling)} labels for {self.strands} strands"
            )


def basis_size(N: int, d: int) -> int:
    pairs = N * (N - 1) // 2
    return sum(pairs**k for k in range(d + 1))


def check_basis(N: int, d: int, guards: Guards):
    size = basis_size(N, d)
    if size > guards.max_basis:
        raise ResourceError(
            f"basis of words on {N} strands with <= {d} chords has {size} elements "
            f"> guard {guards.max_basis}"
        )


def gram_poly_matrix(
    N: int, d: int, rho, guards: Guards = DEFAULT_GUARDS
) -> tuple[list[list[CyclePoly]], list[ChordWord]]:
    """Gram matrix with entries kept as polynomials in ``n``.

    Uses ``W(C_i C_j*) = w_st(c * X_i * X_j^{-1})`` with ``X_i`` the group
    algebra image of ``C_i``, so each basis word is split only once.
    """
    rho = _as_labelling(rho)
    check_basis(N, d, guards)
    basis = enumerate_words(N, d)
    c = rho.symmetriser()
    images = [pipeline_image(w, rho) for w in basis]
    left = [ga_multiply(c, x) for x in images]
    right = [[(tuple(perm_inverse(q)), v) for q, v in x.terms.items()] for x in images]
    m = rho.total_width
    rows = []
    for y in left:
        row = []
        ys = [(tuple(p), v) for p, v in y.terms.items()]
        for xs in right:
            coeffs = [Fraction(0)] * (m + 1)
            for p, a in ys:
                for q, b in xs:
                    coeffs[_cycle_count(tuple(p[i - 1] for i in q))] += a * b
            row.append(CyclePoly(coeffs))
        rows.append(row)
    return rows, basis


def gram_matrix(spec: GramSpec, guards: Guards = DEFAULT_GUARDS) -> tuple[Matrix, list[ChordWord]]:
    """``M[i][j] = W_rho(C_i o C_j*)`` over :func:`enumerate_words` order."""
    polys, basis = gram_poly_matrix(spec.strands, spec.max_chords, spec.labelling, guards)
    return [[p(spec.n) for p in row] for row in polys], basis


def quadratic_form(M: Matrix, v: Sequence) -> Fraction:
    v = [Fraction(x) for x in v]
    return sum((v[i] * M[i][j] * v[j] for i in range(len(v)) for j in range(len(v))), Fraction(0))


@dataclass
class PSDResult:
    psd: bool
    pivots: list[Fraction]
    witness: Optional[list[Fraction]] = None


def _is_symmetric(M: Matrix) -> bool:
    return all(M[i][j] == M[j][i] for i, j in combinations(range(len(M)), 2))


def _simple_witness(M: Matrix) -> Optional[list[Fraction]]:
    """Sparsest witness with entries in {0, 1, -1}, if one exists with at most two nonzeros."""
    k = len(M)
    for i in range(k):
        if M[i][i] < 0:
            v = [Fraction(0)] * k
            v[i] = Fraction(1)
            return v
    for i, j in combinations(range(k), 2):
        s = -1 if M[i][j] > 0 else 1
        if M[i][i] + M[j][j] + 2 * s * M[i][j] < 0:
            v = [Fraction(0)] * k
            v[i], v[j] = Fraction(1), Fraction(s)
            return v
    return None


def psd_check(M: Matrix) -> PSDResult:
    """Decide positive semidefiniteness of a symmetric rational matrix exactly.

    Symmetric elimination takes the largest remaining diagonal entry as pivot
    (lowest index on ties).  The matrix is PSD iff every pivot is
    non-negative and a zero pivot only occurs once the remaining block is
    identically zero.  On failure a rational ``v`` with ``v^T M v < 0`` is
    returned, checked by direct multiplication.
    """
    k = len(M)
    if any(len(row) != k for row in M):
        raise ShapeError("matrix is not square")
    M = [[Fraction(x) for x in row] for row in M]
    if not _is_symmetric(M):
        raise ShapeError("matrix is not symmetric")

    S = [row[:] for row in M]
    # basis[i] expresses remaining direction i in original coordinates
    basis = [[Fraction(int(a == b)) for b in range(k)] for a in range(k)]
    remaining = list(range(k))
    pivots: list[Fraction] = []
    witness = None
    while remaining:
        p = max(remaining, key=lambda i: (S[i][i], -i))
        d = S[p][p]
        if d < 0:
            witness = basis[p]
            break
        if d == 0:
            neg = next((i for i in remaining if S[i][i] < 0), None)
            if neg is not None:
                witness = basis[neg]
                break
            bad = next(((i, j) for i in remaining for j in remaining if i != j and S[i][j] != 0), None)
            if bad is None:
                pivots.extend(Fraction(0) for _ in remaining)
                break
            i, j = bad
            # S_ii = S_jj = 0 here, so the form on basis_i - sgn(S_ij) basis_j is -2|S_ij|
            s = -1 if S[i][j] > 0 else 1
            witness = [a + s * b for a, b in zip(basis[i], basis[j])]
            break
        pivots.append(d)
        remaining.remove(p)
        for i in remaining:
            f = S[i][p] / d
            if f:
                for j in remaining:
                    S[i][j] -= f * S[p][j]
                basis[i] = [a - f * b for a, b in zip(basis[i], basis[p])]
        for i in remaining:
            S[i][p] = S[p][i] = Fraction(0)

    if witness is None:
        return PSDResult(True, pivots)
    witness = _simple_witness(M) or witness
    if quadratic_form(M, witness) >= 0:
        raise AssertionError("witness failed re-evaluation")
    return PSDResult(False, pivots, witness)


@dataclass
class GramReport:
    spec: GramSpec
    basis: list[ChordWord]
    matrix: Matrix
    unit_value: Fraction
    symmetric: bool
    asymmetry: Fraction
    psd: bool
    pivots: list[Fraction]
    witness: Optional[list[Fraction]] = None
    symmetrised: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def in_theorem_scope(self) -> bool:
        return self.spec.labelling.in_theorem_scope()

    @property
    def state_on_truncation(self) -> bool:
        """The Gram form is symmetric and PSD on this basis and the unit has positive weight."""
        return self.symmetric and self.psd and self.unit_value > 0

    @property
    def theorem_instance(self) -> bool:
        """Positivity certified for a symmetric/exterior power labelling."""
        return self.state_on_truncation and self.in_theorem_scope

    def to_dict(self) -> dict:
        s = self.spec
        return {
            "strands": s.strands,
            "max_chords": s.max_chords,
            "labelling": str(s.labelling),
            "n": s.n,
            "basis": [str(w) for w in self.basis],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "unit_value": str(self.unit_value),
            "symmetric": self.symmetric,
            "asymmetry": str(self.asymmetry),
            "symmetrised": self.symmetrised,
            "psd": self.psd,
            "pivots": [str(x) for x in self.pivots],
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "state_on_truncation": self.state_on_truncation,
            "theorem_instance": self.theorem_instance,
            "in_theorem_scope": self.in_theorem_scope,
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def matrix_csv(self) -> str:
        return matrix_csv(self.basis, self.matrix)


def matrix_csv(basis: Sequence[ChordWord], M: Matrix) -> str:
    """Matrix as CSV with diagram labels on the first row and column."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [str(w) for w in basis])
    for w, row in zip(basis, M):
        writer.writerow([str(w)] + [str(x) for x in row])
    return buf.getvalue()


def verify_state(spec: GramSpec, guards: Guards = DEFAULT_GUARDS) -> GramReport:
    M, basis = gram_matrix(spec, guards)
    unit = M[0][0]  # basis[0] is the chord-less word
    assert basis[0].is_identity()
    k = len(M)
    asym = max((abs(M[i][j] - M[j][i]) for i in range(k) for j in range(k)), default=Fraction(0))
    symmetric = asym == 0
    notes = []
    target = M
    if not symmetric:
        target = [[(M[i][j] + M[j][i]) / 2 for j in range(k)] for i in range(k)]
        notes.append("Gram matrix is not symmetric; PSD verdict is for its symmetric part only")
    if unit <= 0:
        notes.append("unit value is not positive")
    if not spec.labelling.in_theorem_scope():
        notes.append("labelling outside symmetric/exterior powers: verdict reported without expectation")
    res = psd_check(target)
    return GramReport(
        spec=spec,
        basis=basis,
        matrix=M,
        unit_value=unit,
        symmetric=symmetric,
        asymmetry=asym,
        psd=res.psd,
        pivots=res.pivots,
        witness=res.witness,
        symmetrised=not symmetric,
        notes=notes,
    )
