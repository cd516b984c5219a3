"""The four shuffle-type products and the operator-deformed product.

All four products are defined on basis words by recursion and extended
bilinearly.  The word-level recursions are memoized; the cache is keyed by
(word, word, lambda) and never changes results.

  quasi_shuffle        aU * bV  = a(U*bV) + b(aU*V) - λ·[ab](U*V)
  aug_quasi_shuffle    aU ⊡ bV = [ab](U*V)               (augmented module)
  mod_quasi_shuffle    aU ⊛ bV = a(U⊛bV) + b(aU⊛V) - λ·e[ab](U⊛V)
  aug_mod_quasi_shuffle aU ⊠ bV = [ab](U⊛V) at λ = 1     (augmented module)

The modified product is homogeneous in word length; it is associative only
at λ = 1, which is why ⊠ hard-codes that value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .base import MONO_UNIT
from .errors import EmptyWordTermError
from .tensor import EMPTY_WORD, TensorElement, Word


@lru_cache(maxsize=None)
def _qsh(w1: Word, w2: Word, lam: Fraction) -> TensorElement:
    if not w1:
        return TensorElement(((w2, 1),))
    if not w2:
        return TensorElement(((w1, 1),))
    a, u = w1[0], w1[1:]
    b, v = w2[0], w2[1:]
    out = _qsh(u, w2, lam).prepend(a) + _qsh(w1, v, lam).prepend(b)
    if lam:
        out = out - lam * _qsh(u, v, lam).prepend(a * b)
    return out


@lru_cache(maxsize=None)
def _mqsh(w1: Word, w2: Word, lam: Fraction) -> TensorElement:
    if not w1:
        return TensorElement(((w2, 1),))
    if not w2:
        return TensorElement(((w1, 1),))
    a, u = w1[0], w1[1:]
    b, v = w2[0], w2[1:]
    out = _mqsh(u, w2, lam).prepend(a) + _mqsh(w1, v, lam).prepend(b)
    if lam:
        # merged letters are shifted behind a fresh unit letter, preserving length
        out = out - lam * _mqsh(u, v, lam).prepend(a * b).prepend(MONO_UNIT)
    return out


def _bilinear(word_fn, x: TensorElement, y: TensorElement) -> TensorElement:
    acc: dict = {}
    for w1, c1 in x.iterterms():
        for w2, c2 in y.iterterms():
            weight = c1 * c2
            for word, coeff in word_fn(w1, w2).iterterms():
                c = acc.get(word, Fraction(0)) + weight * coeff
                if c:
                    acc[word] = c
                elif word in acc:
                    del acc[word]
    return TensorElement(acc)


def _require_augmented(x: TensorElement, op: str) -> None:
    if not x.is_augmented():
        raise EmptyWordTermError(f"{op} is defined on the augmented module only")


def quasi_shuffle(x: TensorElement, y: TensorElement, lam=1) -> TensorElement:
    """Hoffman's quasi-shuffle product; associative and commutative for any λ."""
    lam = Fraction(lam)
    return _bilinear(lambda a, b: _qsh(a, b, lam), x, y)


def shuffle(x: TensorElement, y: TensorElement) -> TensorElement:
    """Ordinary shuffle product: the λ = 0 quasi-shuffle."""
    return quasi_shuffle(x, y, 0)


def aug_quasi_shuffle(x: TensorElement, y: TensorElement, lam=1) -> TensorElement:
    """The product aU ⊡ bV = [ab](U*V) on the augmented module; unit is e."""
    _require_augmented(x, "aug_quasi_shuffle")
    _require_augmented(y, "aug_quasi_shuffle")
    lam = Fraction(lam)

    def word_fn(w1: Word, w2: Word) -> TensorElement:
        return _qsh(w1[1:], w2[1:], lam).prepend(w1[0] * w2[0])

    return _bilinear(word_fn, x, y)


def mod_quasi_shuffle(x: TensorElement, y: TensorElement, lam=1) -> TensorElement:
    """Length-homogeneous quasi-shuffle variant; associative iff the merge
    term is present with λ = 1."""
    lam = Fraction(lam)
    return _bilinear(lambda a, b: _mqsh(a, b, lam), x, y)


def aug_mod_quasi_shuffle(x: TensorElement, y: TensorElement) -> TensorElement:
    """The product aU ⊠ bV = [ab](U ⊛ V) with λ fixed to 1; unit is e.

    Every term of an (m-word ⊠ n-word) has length m + n - 1.
    """
    _require_augmented(x, "aug_mod_quasi_shuffle")
    _require_augmented(y, "aug_mod_quasi_shuffle")
    one = Fraction(1)

    def word_fn(w1: Word, w2: Word) -> TensorElement:
        return _mqsh(w1[1:], w2[1:], one).prepend(w1[0] * w2[0])

    return _bilinear(word_fn, x, y)


def mu_product(x, y, operator: Callable, mul: Callable):
    """Deformed product μ_N(x, y) = N(x)·y + x·N(y) − N(x·y)."""
    return mul(operator(x), y) + mul(x, operator(y)) - operator(mul(x, y))


def nijenhuis_torsion(x, y, operator: Callable, mul: Callable):
    """Torsion T(x, y) = N(μ_N(x, y)) − N(x)·N(y); zero when N is Nijenhuis."""
    return operator(mu_product(x, y, operator, mul)) - mul(operator(x), operator(y))


def clear_caches() -> None:
    _qsh.cache_clear()
    _mqsh.cache_clear()
