import random

import pytest
from hypothesis import strategies as st

from ftau.normal_form import available_backends
from ftau.words import Letter, Word, relations_up_to

ACCEPTANCE_RESULTS = {}

_RELATIONS = relations_up_to(8)


def random_word(rng: random.Random, max_len: int = 30, max_index: int = 6, families="xy") -> Word:
    n = rng.randint(0, max_len)
    return Word(
        Letter(rng.choice(families), rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(n)
    )


def scramble(rng: random.Random, w: Word, moves: int = 4) -> Word:
    """Insert trivial words (free pairs, relators) at random places; the element does not change."""
    letters = list(w)
    for _ in range(moves):
        pos = rng.randint(0, len(letters))
        if rng.random() < 0.3:
            l = Letter(rng.choice("xy"), rng.randint(0, 6), rng.choice((1, -1)))
            piece = [l, l.inverse()]
        else:
            lhs, rhs = rng.choice(_RELATIONS)
            if rng.random() < 0.5:
                lhs, rhs = rhs, lhs
            piece = list(lhs) + list(rhs.inverse())
        letters[pos:pos] = piece
    return Word(letters)


letters_st = st.builds(
    Letter,
    st.sampled_from("xy"),
    st.integers(min_value=0, max_value=6),
    st.sampled_from((1, -1)),
)
words_st = st.lists(letters_st, max_size=16).map(Word)
k_letters_st = st.one_of(
    st.builds(Letter, st.just("x"), st.just(0), st.sampled_from((1, -1))),
    st.builds(Letter, st.sampled_from("xy"), st.integers(1, 6), st.sampled_from((1, -1))),
)
k_words_st = st.lists(k_letters_st, max_size=16).map(Word)


@pytest.fixture
def rng():
    return random.Random(20241018)


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key:>2}: {detail}")
