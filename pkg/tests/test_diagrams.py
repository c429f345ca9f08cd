from itertools import combinations
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordweights import (
    ChordWord,
    DiagramExpr,
    DimensionError,
    ParseError,
    compose,
    enumerate_words,
    expr_multiply,
    expr_star,
    four_t_generator,
    parse_diagram,
    star,
    tensor_split,
    tensor_split_expr,
    two_t_generator,
)
from conftest import exprs, random_word, words

W = ChordWord.from_product


def test_compose_identity():
    e = ChordWord.identity(3)
    assert compose(e, e) == e


def test_compose_order():
    a = ChordWord(3, [(1, 2)])
    b = ChordWord(3, [(2, 3)])
    assert compose(a, b).chords == ((2, 3), (1, 2))
    assert a * b == compose(a, b)


def test_compose_strand_mismatch():
    with pytest.raises(DimensionError):
        compose(ChordWord(2), ChordWord(3))


def test_compose_unit(rng):
    for _ in range(50):
        c = random_word(rng, rng.randint(1, 5), 5)
        assert compose(c, ChordWord.identity(c.strands)) == c
        assert compose(ChordWord.identity(c.strands), c) == c


@given(words(strands=4), words(strands=4), words(strands=4))
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_chords_normalised_and_validated():
    assert ChordWord(3, [(3, 1)]).chords == ((1, 3),)
    with pytest.raises(ValueError):
        ChordWord(3, [(1, 4)])
    with pytest.raises(ValueError):
        ChordWord(3, [(2, 2)])
    assert ChordWord(0).chords == ()


def test_star_examples():
    assert star(ChordWord(3, [(1, 2), (1, 3)])).chords == ((1, 3), (1, 2))
    assert star(ChordWord.identity(4)) == ChordWord.identity(4)


def test_star_involution(rng):
    for _ in range(100):
        c = random_word(rng, rng.randint(2, 5), 6)
        assert star(star(c)) == c


@given(words(strands=4), words(strands=4))
def test_star_antimorphism(a, b):
    assert star(compose(a, b)) == compose(star(b), star(a))


def test_expr_star_linear():
    c1 = ChordWord(3, [(1, 2), (2, 3)])
    c2 = ChordWord(3, [(1, 3)])
    e = DiagramExpr.from_terms(3, [(2, c1), (3, c2)])
    assert expr_star(e) == DiagramExpr.from_terms(3, [(2, star(c1)), (3, star(c2))])


@given(exprs(3))
def test_expr_unit(e):
    one = DiagramExpr.one(3)
    assert expr_multiply(one, e) == e
    assert expr_multiply(e, one) == e


@settings(max_examples=100)
@given(exprs(3), exprs(3))
def test_expr_star_axioms(a, b):
    assert expr_star(DiagramExpr.one(3)) == DiagramExpr.one(3)
    assert expr_star(a * 2 + b * -3) == expr_star(a) * 2 + expr_star(b) * -3
    assert expr_star(expr_multiply(a, b)) == expr_multiply(expr_star(b), expr_star(a))


def test_expr_canonical_form():
    c = ChordWord(2, [(1, 2)])
    e = DiagramExpr.from_terms(2, [(1, c), (-1, c)])
    assert e.is_zero() and e == DiagramExpr.zero(2)
    with pytest.raises(DimensionError):
        DiagramExpr.one(2) + DiagramExpr.one(3)


def test_tensor_split_worked_examples():
    c = W(3, [(2, 3), (1, 3)])
    assert tensor_split(c, (1, 2, 1)) == DiagramExpr.from_terms(4, [
        (1, W(4, [(2, 4), (1, 4)])),
        (1, W(4, [(3, 4), (1, 4)])),
    ])
    assert tensor_split(c, (3, 1, 1)) == DiagramExpr.from_terms(5, [
        (1, W(5, [(4, 5), (1, 5)])),
        (1, W(5, [(4, 5), (2, 5)])),
        (1, W(5, [(4, 5), (3, 5)])),
    ])
    assert tensor_split(c, (1, 1, 1)) == DiagramExpr.from_word(c)


def test_tensor_split_errors():
    c = ChordWord(2, [(1, 2)])
    with pytest.raises(DimensionError):
        tensor_split(c, (1,))
    with pytest.raises(ValueError):
        tensor_split(c, (0, 1))


widths2 = st.lists(st.integers(1, 2), min_size=3, max_size=3)


@given(words(strands=3, max_chords=3), widths2)
def test_tensor_split_term_count(c, widths):
    expected = prod(widths[i - 1] * widths[j - 1] for i, j in c.chords)
    assert len(tensor_split(c, widths)) == expected


@given(words(strands=3, max_chords=3), words(strands=3, max_chords=3), widths2)
def test_tensor_split_multiplicative(a, b, widths):
    lhs = tensor_split(compose(a, b), widths)
    rhs = expr_multiply(tensor_split(a, widths), tensor_split(b, widths))
    assert lhs == rhs


@given(exprs(3), widths2)
def test_tensor_split_commutes_with_star(e, widths):
    assert tensor_split_expr(expr_star(e), widths) == expr_star(tensor_split_expr(e, widths))


def test_relation_generators():
    assert two_t_generator(1, 2, 3, 4, 4) == DiagramExpr.from_terms(4, [
        (1, W(4, [(1, 2), (3, 4)])),
        (-1, W(4, [(3, 4), (1, 2)])),
    ])
    assert four_t_generator(1, 2, 3, 3) == DiagramExpr.from_terms(3, [
        (1, W(3, [(1, 2), (1, 3)])),
        (1, W(3, [(1, 2), (2, 3)])),
        (-1, W(3, [(1, 3), (1, 2)])),
        (-1, W(3, [(2, 3), (1, 2)])),
    ])
    with pytest.raises(ValueError):
        two_t_generator(1, 3, 2, 4, 4)
    with pytest.raises(ValueError):
        four_t_generator(1, 2, 4, 3)


def _count_words_brute(N, d):
    # independent count: grow words one chord at a time
    pairs = list(combinations(range(1, N + 1), 2))
    level, total = [()], 1
    for _ in range(d):
        level = [w + (p,) for w in level for p in pairs]
        total += len(level)
    return total


def test_enumerate_words_counts():
    assert [str(w) for w in enumerate_words(2, 2)] == ["2:", "2: (1,2)", "2: (1,2) (1,2)"]
    assert len(enumerate_words(3, 1)) == 4
    assert _count_words_brute(3, 3) == 40
    assert len(enumerate_words(3, 3)) == 40
    for N in range(5):
        for d in range(4):
            assert len(enumerate_words(N, d)) == sum(comb(N, 2) ** k for k in range(d + 1))


def test_enumerate_words_order():
    ws = enumerate_words(3, 2)
    keys = [(len(w), w.chords) for w in ws]
    assert keys == sorted(keys)
    assert len(set(ws)) == len(ws)


def test_parse_diagram():
    assert parse_diagram("3:") == ChordWord.identity(3)
    assert parse_diagram("3: (1,2) (2,3)").chords == ((1, 2), (2, 3))
    assert parse_diagram("3: (1,2)(1,3)(2,3)") == ChordWord(3, [(1, 2), (1, 3), (2, 3)])
    assert parse_diagram("  2:(2, 1)").chords == ((1, 2),)


@pytest.mark.parametrize("text, column", [
    ("3: (1,2)(1,3)(3,4)", 13),
    ("x: (1,2)", 0),
    ("3: (1,2) [1,3]", 9),
    ("2: (1,1)", 3),
])
def test_parse_diagram_errors(text, column):
    with pytest.raises(ParseError) as info:
        parse_diagram(text)
    assert info.value.position == column


@given(words(min_strands=0, max_strands=6))
def test_diagram_text_round_trip(c):
    assert parse_diagram(str(c)) == c
