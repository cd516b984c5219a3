"""Words, the graded tensor module T(A), and the shift operators.

A word is a finite tuple of monomials; the empty word ``1`` spans the
length-0 component and is the unit of the shuffle-type products.  A
``TensorElement`` is a canonical rational linear combination of words.
The "augmented" submodule consists of elements with no empty-word term.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .base import BaseElement, MONO_UNIT, Monomial
from .errors import EmptyWordTermError

Word = Tuple[Monomial, ...]

EMPTY_WORD: Word = ()


def make_word(letters: Iterable[Monomial]) -> Word:
    w = tuple(letters)
    for letter in w:
        if not isinstance(letter, Monomial):
            raise TypeError(f"word letters must be Monomial, got {letter!r}")
    return w


def word_sort_key(w: Word):
    """Canonical order: length first, then letterwise monomial order."""
    return (len(w), tuple(m.sort_key for m in w))


def word_str(w: Word) -> str:
    if not w:
        return "1"
    return ".".join(str(m) for m in w)


class TensorElement:
    """A finite linear combination of words with exact rational coefficients.

    Instances are immutable and hashable (products memoize on them); all
    arithmetic returns new canonical elements with no zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for word, coeff in items:
            c = acc.get(word, Fraction(0)) + Fraction(coeff)
            if c:
                acc[word] = c
            elif word in acc:
                del acc[word]
        self._terms = acc
        self._hash = None

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls()

    @classmethod
    def from_word(cls, word: Iterable[Monomial], coeff=1) -> "TensorElement":
        return cls(((make_word(word), coeff),))

    def terms(self):
        """Term list in canonical word order."""
        return sorted(self._terms.items(), key=lambda kv: word_sort_key(kv[0]))

    def iterterms(self):
        return self._terms.items()

    def coeff(self, word: Word) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def is_augmented(self) -> bool:
        return EMPTY_WORD not in self._terms

    def lengths(self) -> frozenset:
        return frozenset(len(w) for w in self._terms)

    def prepend(self, mono: Monomial) -> "TensorElement":
        out = TensorElement.zero()
        out._terms = {(mono,) + w: c for w, c in self._terms.items()}
        return out

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "TensorElement") -> "TensorElement":
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            c = acc.get(word, Fraction(0)) + coeff
            if c:
                acc[word] = c
            elif word in acc:
                del acc[word]
        out = TensorElement.zero()
        out._terms = acc
        return out

    def __neg__(self) -> "TensorElement":
        out = TensorElement.zero()
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, coeff):
        return self._scale(coeff)

    def __rmul__(self, coeff):
        return self._scale(coeff)

    def _scale(self, coeff) -> "TensorElement":
        c = Fraction(coeff)
        out = TensorElement.zero()
        if c:
            out._terms = {w: k * c for w, k in self._terms.items()}
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.terms():
            mag = abs(coeff)
            body = word_str(word) if mag == 1 else f"{mag}·{word_str(word)}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"TensorElement({self})"


def te_add(x: TensorElement, y: TensorElement) -> TensorElement:
    return x + y


def te_scale(coeff, x: TensorElement) -> TensorElement:
    return Fraction(coeff) * x


def b_plus(x: TensorElement) -> TensorElement:
    """Prepend the unit letter e to every word; raises each length by one."""
    return x.prepend(MONO_UNIT)


def b_minus(x: TensorElement) -> TensorElement:
    """Drop the first letter of every word.

    Defined on the augmented module only: an empty-word term is a caller
    bug, not a value, and raises ``EmptyWordTermError``.
    """
    acc: dict = {}
    for word, coeff in x.iterterms():
        if not word:
            raise EmptyWordTermError("b_minus is defined on the augmented module only")
        tail = word[1:]
        c = acc.get(tail, Fraction(0)) + coeff
        if c:
            acc[tail] = c
        elif tail in acc:
            del acc[tail]
    out = TensorElement.zero()
    out._terms = acc
    return out


def grade_lengths(x: TensorElement) -> frozenset:
    """Set of word lengths carrying a nonzero coefficient."""
    return x.lengths()


def expand_letters(letters: Sequence[Union[BaseElement, Monomial]]) -> TensorElement:
    """Multilinear expansion of a word with general base-algebra letters.

    Each slot distributes over its terms: the result sums, over all choices
    of one monomial per slot, the chosen word weighted by the product of the
    chosen coefficients.
    """
    slots = []
    for letter in letters:
        if isinstance(letter, Monomial):
            letter = BaseElement.from_monomial(letter)
        slots.append(list(letter.iterterms()))
    acc: dict = {}
    for choice in itertools.product(*slots):
        word = tuple(mono for mono, _ in choice)
        coeff = Fraction(1)
        for _, c in choice:
            coeff *= c
        c = acc.get(word, Fraction(0)) + coeff
        if c:
            acc[word] = c
        elif word in acc:
            del acc[word]
    return TensorElement(acc)
