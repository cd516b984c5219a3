import itertools

import pytest

from nijalg import Monomial, TensorElement, gen


@pytest.fixture(scope="session")
def ab():
    return gen("a"), gen("b")


def words_over(gens, max_len, min_len=0):
    letters = tuple(gens)
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(itertools.product(letters, repeat=n))
    return out


def te(*letters):
    return TensorElement.from_word(letters)
