"""Exact scalars and the free commutative unital base algebra K[S].

Scalars are arbitrary-precision rationals (``fractions.Fraction``), which are
always stored reduced with a positive denominator.  The base algebra is the
polynomial algebra over a set of named generators; its basis consists of
commutative monomials, with the empty monomial acting as the unit ``e``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import ReservedSymbolError

Scalar = Fraction

_GEN_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def check_generator(name: str) -> str:
    """Validate a generator name; 'e' is reserved for the unit monomial."""
    if name == "e":
        raise ReservedSymbolError("'e' names the unit monomial and cannot be a generator")
    if not isinstance(name, str) or not _GEN_RE.match(name):
        raise ValueError(f"invalid generator name {name!r}")
    return name


class Monomial:
    """A commutative monomial: a finite map generator -> positive exponent.

    The empty monomial is the unit ``e``.  Instances are immutable, hashable
    and totally ordered by total degree first, then lexicographically on the
    fully expanded letter sequence (so e < a < a^2 < ab < b^2).
    """

    __slots__ = ("_pairs", "_key", "_hash")

    def __init__(self, exponents: Union[Mapping[str, int], Iterable[Tuple[str, int]]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict = {}
        for name, exp in items:
            check_generator(name)
            exp = int(exp)
            if exp < 0:
                raise ValueError(f"negative exponent for generator {name!r}")
            if exp:
                acc[name] = acc.get(name, 0) + exp
        self._pairs = tuple(sorted(acc.items()))
        degree = sum(acc.values())
        self._key = (degree, tuple(g for g, n in self._pairs for _ in range(n)))
        self._hash = hash(self._pairs)

    @classmethod
    def unit(cls) -> "Monomial":
        return _MONO_UNIT

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Monomial":
        return cls(((name, exp),))

    @property
    def exponents(self) -> Tuple[Tuple[str, int], ...]:
        return self._pairs

    @property
    def degree(self) -> int:
        return self._key[0]

    @property
    def sort_key(self):
        return self._key

    def is_unit(self) -> bool:
        return not self._pairs

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if not self._pairs:
            return other
        if not other._pairs:
            return self
        merged = dict(self._pairs)
        for name, exp in other._pairs:
            merged[name] = merged.get(name, 0) + exp
        return Monomial(merged)

    def __pow__(self, exp: int) -> "Monomial":
        exp = int(exp)
        if exp < 0:
            raise ValueError("negative monomial power")
        return Monomial({g: n * exp for g, n in self._pairs})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __str__(self):
        if not self._pairs:
            return "e"
        pieces = [g if n == 1 else f"{g}^{n}" for g, n in self._pairs]
        if len(self._pairs) == 1:
            return pieces[0]
        return "[" + " ".join(pieces) + "]"

    def __repr__(self):
        return f"Monomial({self})"


_MONO_UNIT = Monomial()

MONO_UNIT = _MONO_UNIT


def gen(name: str) -> Monomial:
    """Degree-1 monomial for a single generator."""
    return Monomial.gen(name)


class BaseElement:
    """A finite K-linear combination of monomials, kept in canonical form.

    Canonical form stores no zero coefficients, so equality of elements is
    equality of their term maps.  Forms a commutative unital ring.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                raise TypeError(f"expected Monomial key, got {mono!r}")
            c = acc.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        self._terms = acc

    @classmethod
    def zero(cls) -> "BaseElement":
        return cls()

    @classmethod
    def unit(cls) -> "BaseElement":
        return cls(((MONO_UNIT, 1),))

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff=1) -> "BaseElement":
        return cls(((mono, coeff),))

    def terms(self):
        """Term list in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def iterterms(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, BaseElement) and self._terms == other._terms

    def __add__(self, other: "BaseElement") -> "BaseElement":
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = acc.get(mono, Fraction(0)) + coeff
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        out = BaseElement.zero()
        out._terms = acc
        return out

    def __neg__(self) -> "BaseElement":
        out = BaseElement.zero()
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "BaseElement") -> "BaseElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BaseElement):
            acc: dict = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    c = acc.get(m, Fraction(0)) + c1 * c2
                    if c:
                        acc[m] = c
                    elif m in acc:
                        del acc[m]
            out = BaseElement.zero()
            out._terms = acc
            return out
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, coeff) -> "BaseElement":
        c = Fraction(coeff)
        out = BaseElement.zero()
        if c:
            out._terms = {m: k * c for m, k in self._terms.items()}
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            mag = abs(coeff)
            body = str(mono) if mag == 1 else f"{mag}·{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BaseElement({self})"
