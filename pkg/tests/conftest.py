import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from chordweights import ChordWord, DiagramExpr, Labelling, RepLabel

LABELS = {"std": RepLabel.std(), "sym:2": RepLabel.sym(2), "ext:2": RepLabel.ext(2)}


@st.composite
def words(draw, strands=None, max_chords=4, min_strands=2, max_strands=4):
    N = strands if strands is not None else draw(st.integers(min_strands, max_strands))
    pairs = list(combinations(range(1, N + 1), 2))
    if not pairs:
        return ChordWord(N)
    chords = draw(st.lists(st.sampled_from(pairs), max_size=max_chords))
    return ChordWord(N, tuple(chords))


@st.composite
def exprs(draw, strands, max_terms=3, max_chords=3):
    terms = draw(st.lists(
        st.tuples(
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
            words(strands=strands, max_chords=max_chords),
        ),
        max_size=max_terms,
    ))
    return DiagramExpr.from_terms(strands, terms)


def random_word(rng: random.Random, N: int, max_chords: int) -> ChordWord:
    pairs = list(combinations(range(1, N + 1), 2))
    k = rng.randint(0, max_chords) if pairs else 0
    return ChordWord(N, tuple(rng.choice(pairs) for _ in range(k)))


def random_expr(rng: random.Random, N: int, max_chords: int, max_terms: int = 3) -> DiagramExpr:
    terms = [
        (Fraction(rng.randint(-6, 6), rng.randint(1, 4)), random_word(rng, N, max_chords))
        for _ in range(rng.randint(1, max_terms))
    ]
    return DiagramExpr.from_terms(N, terms)


def labelling(*names) -> Labelling:
    return Labelling(tuple(LABELS[x] for x in names))


@pytest.fixture
def rng():
    return random.Random(20240611)
