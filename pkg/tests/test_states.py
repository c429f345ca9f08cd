import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordweights import (
    ChordWord,
    DiagramExpr,
    GramSpec,
    Labelling,
    ResourceError,
    RepLabel,
    ShapeError,
    basis_size,
    enumerate_words,
    expr_multiply,
    expr_star,
    four_t_generator,
    gram_matrix,
    psd_check,
    quadratic_form,
    verify_state,
    weight,
)
from chordweights.config import Guards
from chordweights.states import gram_poly_matrix, matrix_csv
from conftest import labelling


def expr_vector(e: DiagramExpr, basis):
    index = {w: i for i, w in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for w, c in e.terms.items():
        v[index[w]] += c
    return v


def test_gram_std_two_strands():
    for n in (1, 2, 3, 5):
        M, basis = gram_matrix(GramSpec(2, 1, Labelling.standard(2), n))
        assert [str(w) for w in basis] == ["2:", "2: (1,2)"]
        assert M == [[n * n, n], [n, n * n]]


def test_gram_depth_zero():
    rho = labelling("sym:2", "ext:2", "std")
    M, basis = gram_matrix(GramSpec(3, 0, rho, 3))
    assert M == [[6 * 3 * 3]] and basis == [ChordWord.identity(3)]


def test_gram_entries_are_weights():
    rho = labelling("sym:2", "ext:2")
    M, basis = gram_matrix(GramSpec(2, 2, rho, 3))
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert M[i][j] == weight(a * b.star(), rho, 3).value


def test_gram_spec_validation():
    with pytest.raises(ValueError):
        GramSpec(2, 1, Labelling.standard(2), 0)
    with pytest.raises(ValueError):
        GramSpec(3, 1, Labelling.standard(2), 2)
    with pytest.raises(ResourceError):
        gram_matrix(GramSpec(4, 4, Labelling.standard(4), 2))
    assert basis_size(4, 3) == 1 + 6 + 36 + 216
    gram_matrix(GramSpec(3, 3, Labelling.standard(3), 2), Guards(max_basis=40))


def test_psd_examples():
    r = psd_check([[4, 2], [2, 4]])
    assert r.psd and r.pivots == [4, 3] and r.witness is None
    assert psd_check([[0, 0], [0, 0]]).psd
    r = psd_check([[1, 2], [2, 1]])
    assert not r.psd
    assert r.witness in ([1, -1], [-1, 1])
    assert quadratic_form([[1, 2], [2, 1]], r.witness) == -2
    assert psd_check([]).psd


def test_psd_zero_pivot_rules():
    assert not psd_check([[0, 1], [1, 0]]).psd
    assert psd_check([[1, 1], [1, 1]]).psd
    r = psd_check([[1, 1, 0], [1, 1, 1], [0, 1, 0]])
    assert not r.psd and quadratic_form([[1, 1, 0], [1, 1, 1], [0, 1, 0]], r.witness) < 0


def test_psd_shape_errors():
    with pytest.raises(ShapeError):
        psd_check([[1, 2], [3, 4]])
    with pytest.raises(ShapeError):
        psd_check([[1, 2, 3], [2, 1, 3]])


def _random_int_matrix(rng, k, rank):
    B = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(rank)]
    return [[sum(B[r][i] * B[r][j] for r in range(rank)) for j in range(k)] for i in range(k)]


def test_psd_on_gram_products(rng):
    # B^T B is PSD; compare against exact minors via sympy's rational eigen-free test
    for _ in range(100):
        k = rng.randint(1, 6)
        M = _random_int_matrix(rng, k, rng.randint(0, k))
        assert psd_check(M).psd
        lam = np.linalg.eigvalsh(np.array(M, dtype=float)).min() if k else 0
        assert lam > -1e-9


def test_psd_witness_soundness(rng):
    seen = 0
    for _ in range(300):
        k = rng.randint(1, 6)
        A = [[rng.randint(-4, 4) for _ in range(k)] for _ in range(k)]
        M = [[A[i][j] + A[j][i] for j in range(k)] for i in range(k)]
        r = psd_check(M)
        lam = np.linalg.eigvalsh(np.array(M, dtype=float)).min()
        assert r.psd == (lam > -1e-9)
        if not r.psd:
            seen += 1
            assert quadratic_form(M, r.witness) < 0
    assert seen > 50


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.lists(
    st.lists(st.fractions(-3, 3, max_denominator=3), min_size=k, max_size=k), min_size=1, max_size=k)))
def test_psd_matches_factor_form(B):
    k = len(B[0])
    M = [[sum(r[i] * r[j] for r in B) for j in range(k)] for i in range(k)]
    assert psd_check(M).psd
    neg = [[-x for x in row] for row in M]
    if any(any(row) for row in M):
        r = psd_check(neg)
        assert not r.psd and quadratic_form(neg, r.witness) < 0


def test_four_t_null_vectors():
    for names in (("std",) * 3, ("sym:2", "ext:2", "std"), ("ext:2", "ext:2", "std")):
        rho = labelling(*names)
        M, basis = gram_matrix(GramSpec(3, 2, rho, 3))
        for i, j, k in [(1, 2, 3)]:
            v = expr_vector(four_t_generator(i, j, k, 3), basis)
            Mv = [sum(M[r][c] * v[c] for c in range(len(v))) for r in range(len(v))]
            assert all(x == 0 for x in Mv)


@pytest.mark.parametrize("names", [("std", "std"), ("sym:2", "ext:2"), ("ext:2", "sym:2")])
def test_leading_principal_submatrix(names):
    rho = labelling(*names)
    polys = {d: gram_poly_matrix(2, d, rho)[0] for d in (1, 2, 3)}
    for d in (1, 2):
        k = basis_size(2, d)
        assert [row[:k] for row in polys[d + 1][:k]] == polys[d]


def test_star_positivity_spot_checks(rng):
    rho = labelling("sym:2", "ext:2", "std")
    n = 3
    M, basis = gram_matrix(GramSpec(3, 2, rho, n))
    for _ in range(50):
        picks = rng.sample(range(len(basis)), rng.randint(1, 4))
        x = DiagramExpr.from_terms(3, [(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), basis[i]) for i in picks])
        val = weight(expr_multiply(x, expr_star(x)), rho, n).value
        assert val >= 0
        assert val == quadratic_form(M, expr_vector(x, basis))


@pytest.mark.parametrize("N, d, names, n, unit", [
    (2, 2, ("std", "std"), 2, 4),
    (2, 2, ("sym:2", "sym:2"), 2, 9),
    (3, 2, ("ext:2", "ext:2", "std"), 3, 27),
])
def test_verify_state_examples(N, d, names, n, unit):
    rep = verify_state(GramSpec(N, d, labelling(*names), n))
    assert rep.psd and rep.symmetric and rep.witness is None
    assert rep.unit_value == unit
    assert rep.state_on_truncation and rep.theorem_instance
    assert len(rep.pivots) == len(rep.basis)


def test_verify_state_partition_labelling():
    rho = Labelling((RepLabel.part((2, 1)), RepLabel.std()))
    rep = verify_state(GramSpec(2, 1, rho, 3))
    assert not rep.theorem_instance
    assert rep.unit_value == 8 * 3
    assert any("without expectation" in s for s in rep.notes)
    data = json.loads(rep.to_json())
    assert data["theorem_instance"] is False


def test_verify_state_asymmetric_path(monkeypatch):
    import chordweights.states as states

    def fake_gram(spec, guards=None):
        return [[Fraction(2), Fraction(1)], [Fraction(0), Fraction(2)]], enumerate_words(2, 1)

    monkeypatch.setattr(states, "gram_matrix", fake_gram)
    rep = states.verify_state(GramSpec(2, 1, Labelling.standard(2), 2))
    assert not rep.symmetric and rep.symmetrised
    assert rep.asymmetry == 1
    assert rep.psd and not rep.state_on_truncation


def test_report_serialisation():
    rep = verify_state(GramSpec(2, 1, labelling("sym:2", "std"), 2))
    data = json.loads(rep.to_json())
    assert data["matrix"] == [[str(x) for x in row] for row in rep.matrix]
    assert data["psd"] is True and data["witness"] is None
    assert data["basis"] == ["2:", "2: (1,2)"]
    csv_text = rep.matrix_csv()
    assert csv_text == matrix_csv(rep.basis, rep.matrix)
    rows = list(csv.reader(io.StringIO(csv_text)))
    assert rows[0] == ["", "2:", "2: (1,2)"]
    assert [Fraction(x) for x in rows[1][1:]] == rep.matrix[0]
