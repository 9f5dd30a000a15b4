from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from heegperm import (CyclePermutation, Letter, PermutationDataSet, Presentation,
                      make_data_set, trivially_reduce)

FIG3 = dict(alpha=[[1, 2], [3, 4, 5, 6]], beta=[[1, 6, 4], [2, 3, 5]],
            epsilon=[1, 1, -1, -1, -1, -1])
DECODE_EXAMPLE = dict(alpha=[[1, 2, 3, 4], [5, 6, 7], [8, 9, 10, 11]],
                      beta=[[1, 6], [2, 4, 11], [8, 5, 10], [9, 3, 7]],
                      epsilon=[1, 1, -1, -1, -1, 1, -1, -1, 1, 1, 1])
H3_TEXT = "< x, y, z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1 >"


@pytest.fixture
def fig3():
    return make_data_set(FIG3["alpha"], FIG3["beta"], FIG3["epsilon"])


@pytest.fixture
def torus():
    return make_data_set([[1]], [[1]], [1])


@st.composite
def data_sets(draw, max_d=10):
    d = draw(st.integers(1, max_d))
    a = draw(st.permutations(range(1, d + 1)))
    b = draw(st.permutations(range(1, d + 1)))
    eps = draw(st.lists(st.sampled_from([1, -1]), min_size=d, max_size=d))
    return PermutationDataSet(CyclePermutation.from_images(a),
                              CyclePermutation.from_images(b), tuple(eps))


def random_data_set(rng: random.Random, max_d=10) -> PermutationDataSet:
    d = rng.randint(1, max_d)
    a = list(range(1, d + 1))
    b = list(range(1, d + 1))
    rng.shuffle(a)
    rng.shuffle(b)
    return PermutationDataSet(CyclePermutation.from_images(a), CyclePermutation.from_images(b),
                              tuple(rng.choice((1, -1)) for _ in range(d)))


def random_presentation(rng: random.Random, max_gens=3, max_rels=3, max_len=5,
                        max_class=None) -> Presentation:
    """A trivially reduced presentation using every generator, no empty relators."""
    from math import factorial, prod
    while True:
        m = rng.randint(1, max_gens)
        rels = []
        for _ in range(rng.randint(1, max_rels)):
            word = [Letter(rng.randint(1, m), rng.choice((1, -1)))
                    for _ in range(rng.randint(1, max_len))]
            rels.append(word)
        p = trivially_reduce(Presentation(m, rels))
        if any(not r for r in p.relators) or 0 in p.occurrence_counts:
            continue
        if max_class is not None and prod(factorial(k) for k in p.occurrence_counts) > max_class:
            continue
        return p


@st.composite
def presentations(draw, max_gens=3, max_rels=3, max_len=5):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_presentation(random.Random(seed), max_gens, max_rels, max_len)


# acceptance bookkeeping: tests call record(n, ok, text); lines print at the end
_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, text: str):
        _ACCEPTANCE[number] = (ok, text)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, text = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
