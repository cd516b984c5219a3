"""Relation checkers, concrete operators, and the universal-property machinery.

The generic checkers return the *defect element* of a relation rather than a
boolean, so counterexamples stay inspectable and printable.  The concrete
target family for universal-property tests is K^d with the componentwise
product, a coordinate-projection Rota-Baxter operator R, and the Nijenhuis
operator N_τ = R - τ(1 - R).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Tuple

from .base import Monomial, check_generator
from .errors import EmptyWordTermError, UnmappedGeneratorError
from .products import aug_mod_quasi_shuffle, aug_quasi_shuffle
from .tensor import TensorElement, Word, b_minus, b_plus, word_str


class LinearOperator:
    """A named endomorphism; the name keys caches and labels reports."""

    __slots__ = ("name", "_fn")

    def __init__(self, name: str, fn: Callable):
        self.name = name
        self._fn = fn

    def __call__(self, x):
        return self._fn(x)

    def __repr__(self):
        return f"LinearOperator({self.name})"


def identity_operator() -> LinearOperator:
    return LinearOperator("id", lambda x: x)


def zero_operator() -> LinearOperator:
    return LinearOperator("zero", lambda x: 0 * x)


def shift_up() -> LinearOperator:
    """B⁺ₑ as a named operator on tensor elements."""
    return LinearOperator("B+", b_plus)


def shift_down() -> LinearOperator:
    return LinearOperator("B-", b_minus)


class VectorAlgebraElement:
    """An element of K^d with the componentwise (Hadamard) product."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable):
        self._coords = tuple(Fraction(c) for c in coords)

    @classmethod
    def unit(cls, dim: int) -> "VectorAlgebraElement":
        return cls([1] * dim)

    @classmethod
    def zero(cls, dim: int) -> "VectorAlgebraElement":
        return cls([0] * dim)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return self._coords

    @property
    def dim(self) -> int:
        return len(self._coords)

    def __add__(self, other: "VectorAlgebraElement") -> "VectorAlgebraElement":
        return VectorAlgebraElement(a + b for a, b in zip(self._coords, other._coords))

    def __sub__(self, other: "VectorAlgebraElement") -> "VectorAlgebraElement":
        return VectorAlgebraElement(a - b for a, b in zip(self._coords, other._coords))

    def __neg__(self) -> "VectorAlgebraElement":
        return VectorAlgebraElement(-a for a in self._coords)

    def __mul__(self, other):
        if isinstance(other, VectorAlgebraElement):
            return VectorAlgebraElement(a * b for a, b in zip(self._coords, other._coords))
        return VectorAlgebraElement(a * Fraction(other) for a in self._coords)

    def __rmul__(self, other):
        return VectorAlgebraElement(Fraction(other) * a for a in self._coords)

    def __pow__(self, exp: int) -> "VectorAlgebraElement":
        return VectorAlgebraElement(a ** exp for a in self._coords)

    def __bool__(self):
        return any(self._coords)

    def __eq__(self, other):
        return isinstance(other, VectorAlgebraElement) and self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self._coords) + ")"

    __repr__ = __str__


def vec_mul(x: VectorAlgebraElement, y: VectorAlgebraElement) -> VectorAlgebraElement:
    return x * y


def left_multiplication(v: VectorAlgebraElement) -> LinearOperator:
    return LinearOperator(f"L_{v}", lambda x: v * x)


def right_multiplication(v: VectorAlgebraElement) -> LinearOperator:
    return LinearOperator(f"R_{v}", lambda x: x * v)


@dataclass(frozen=True)
class NijenhuisTarget:
    """A concrete commutative target algebra K^dim for universal-property tests.

    ``mask`` selects the coordinates kept by the projection R (0-based); R is
    an idempotent Rota-Baxter operator of weight 1, so N_τ = R - τ(1-R) is an
    associative Nijenhuis operator.  ``images`` maps generator names to their
    values under the homomorphism φ, which extends multiplicatively to
    monomials with φ(e) the unit vector.
    """

    dim: int
    mask: frozenset
    tau: Fraction
    images: Mapping[str, VectorAlgebraElement]

    def __post_init__(self):
        if not all(0 <= i < self.dim for i in self.mask):
            raise ValueError("projection mask out of range")
        for name, vec in self.images.items():
            check_generator(name)
            if vec.dim != self.dim:
                raise ValueError(f"image of {name!r} has wrong dimension")
        object.__setattr__(self, "tau", Fraction(self.tau))

    def projection(self) -> LinearOperator:
        mask = self.mask

        def proj(v: VectorAlgebraElement) -> VectorAlgebraElement:
            return VectorAlgebraElement(
                c if i in mask else 0 for i, c in enumerate(v.coords)
            )

        return LinearOperator(f"proj{sorted(mask)}", proj)

    def scaled_projection(self, lam) -> LinearOperator:
        """λ·R: a Rota-Baxter operator of weight λ on this algebra."""
        lam = Fraction(lam)
        proj = self.projection()
        return LinearOperator(f"{lam}*{proj.name}", lambda v: lam * proj(v))


def make_n_tau(target: NijenhuisTarget) -> LinearOperator:
    """N_τ = R - τ(1 - R) for the target's projection R."""
    proj = target.projection()
    tau = target.tau

    def n_tau(v: VectorAlgebraElement) -> VectorAlgebraElement:
        rv = proj(v)
        return rv - tau * (v - rv)

    return LinearOperator(f"N_tau[{tau},{proj.name}]", n_tau)


def nijenhuis_defect(operator: Callable, mul: Callable, x, y):
    """N(x)N(y) + N²(xy) − N(N(x)y + xN(y)); zero iff the relation holds here."""
    nx, ny = operator(x), operator(y)
    return mul(nx, ny) + operator(operator(mul(x, y))) - operator(mul(nx, y) + mul(x, ny))


def rota_baxter_defect(operator: Callable, mul: Callable, lam, x, y):
    """R(x)R(y) + λR(xy) − R(R(x)y + xR(y)); zero iff the weight-λ relation holds."""
    rx, ry = operator(x), operator(y)
    return mul(rx, ry) + Fraction(lam) * operator(mul(x, y)) - operator(mul(rx, y) + mul(x, ry))


def hochschild_coboundary(tmap: Callable, mul: Callable, a, b, c):
    """a·T(b,c) − T(ab,c) + T(a,bc) − T(a,b)·c; zero for all triples iff T is a
    2-cocycle."""
    return mul(a, tmap(b, c)) - tmap(mul(a, b), c) + tmap(a, mul(b, c)) - mul(tmap(a, b), c)


def phi_monomial(target: NijenhuisTarget, mono: Monomial) -> VectorAlgebraElement:
    """φ extended multiplicatively from generators to monomials; φ(e) = 1."""
    acc = VectorAlgebraElement.unit(target.dim)
    for name, exp in mono.exponents:
        try:
            img = target.images[name]
        except KeyError:
            raise UnmappedGeneratorError(f"generator {name!r} has no image") from None
        acc = acc * img ** exp
    return acc


def phi_extend(
    target: NijenhuisTarget, x: TensorElement, operator: LinearOperator = None
) -> VectorAlgebraElement:
    """The unique operator-compatible extension of φ to augmented elements.

    On a word a₁…aₙ it evaluates φ(a₁)·N(φ(a₂)·N(…·N(φ(aₙ))…)); sums extend
    linearly.  ``operator`` defaults to the target's N_τ; pass a weight-λ
    Rota-Baxter operator for the Rota-Baxter variant.
    """
    if operator is None:
        operator = make_n_tau(target)
    total = VectorAlgebraElement.zero(target.dim)
    for word, coeff in x.iterterms():
        if not word:
            raise EmptyWordTermError("phi_extend is defined on the augmented module only")
        acc = phi_monomial(target, word[-1])
        for mono in word[-2::-1]:
            acc = phi_monomial(target, mono) * operator(acc)
        total = total + coeff * acc
    return total


def factorization_check(w: Word) -> TensorElement:
    """Rebuild the word a₁…aₙ as a₁ ⊠ B⁺ₑ(a₂ ⊠ B⁺ₑ(… ⊠ B⁺ₑ(aₙ)…)).

    The contract is that the result equals the single word with coefficient 1.
    """
    if not w:
        raise EmptyWordTermError("factorization is defined for nonempty words only")
    acc = TensorElement.from_word(w[-1:])
    for mono in w[-2::-1]:
        acc = aug_mod_quasi_shuffle(TensorElement.from_word((mono,)), b_plus(acc))
    return acc


def _operator_sanity(target: NijenhuisTarget, operator: LinearOperator, lam=None) -> None:
    # cheap defect check on a deterministic sample before trusting the target
    samples = [
        VectorAlgebraElement(range(1, target.dim + 1)),
        VectorAlgebraElement(Fraction(i, 2) - 1 for i in range(target.dim)),
    ]
    for x in samples:
        for y in samples:
            if lam is None:
                defect = nijenhuis_defect(operator, vec_mul, x, y)
            else:
                defect = rota_baxter_defect(operator, vec_mul, lam, x, y)
            if defect:
                raise ValueError(f"target operator {operator.name} fails its relation")


def universal_property_check(target: NijenhuisTarget, pairs) -> list:
    """Check multiplicativity and operator intertwining of φ̃ for ⊠ and B⁺ₑ.

    Returns one report record per check: {"inputs", "check", "defect", "pass"}.
    """
    operator = make_n_tau(target)
    _operator_sanity(target, operator)
    records = []
    for x, y in pairs:
        label = f"X={x}; Y={y}; tau={target.tau}; mask={sorted(target.mask)}"
        phix = phi_extend(target, x, operator)
        phiy = phi_extend(target, y, operator)
        mult = phi_extend(target, aug_mod_quasi_shuffle(x, y), operator) - phix * phiy
        records.append(
            {"inputs": label, "check": "multiplicative", "defect": str(mult), "pass": not mult}
        )
        twine = phi_extend(target, b_plus(x), operator) - operator(phix)
        records.append(
            {"inputs": label, "check": "intertwine", "defect": str(twine), "pass": not twine}
        )
    return records


def rb_universal_check(lam, target: NijenhuisTarget, pairs) -> list:
    """Rota-Baxter analog: ⊡ at weight λ against the operator λ·projection."""
    lam = Fraction(lam)
    operator = target.scaled_projection(lam)
    _operator_sanity(target, operator, lam=lam)
    records = []
    for x, y in pairs:
        label = f"X={x}; Y={y}; lambda={lam}; mask={sorted(target.mask)}"
        phix = phi_extend(target, x, operator)
        phiy = phi_extend(target, y, operator)
        mult = phi_extend(target, aug_quasi_shuffle(x, y, lam), operator) - phix * phiy
        records.append(
            {"inputs": label, "check": "multiplicative", "defect": str(mult), "pass": not mult}
        )
        twine = phi_extend(target, b_plus(x), operator) - operator(phix)
        records.append(
            {"inputs": label, "check": "intertwine", "defect": str(twine), "pass": not twine}
        )
    return records
