"""Dendriform dialgebra and trialgebra splittings of the quasi-shuffle.

The three operations split the quasi-shuffle product of two augmented
elements by the origin of the leading letter:

  X ≺ Z = x₁(B⁻(X) * Z) = X ⊡ B⁺ₑ(Z)
  X ≻ Z = z₁(X * B⁻(Z)) = B⁺ₑ(X) ⊡ Z
  X • Z = c·[x₁z₁](B⁻(X) * B⁻(Z))

Under the "default" convention c = -λ the three operations sum exactly to
the quasi-shuffle product; the "literal" convention keeps c = 1, in which
case • coincides with the ⊡ product.  At λ = 0 the default • vanishes and
(≺, ≻) is the weight-0 dendriform dialgebra split of the shuffle.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EmptyWordTermError
from .products import _bilinear, _qsh, aug_quasi_shuffle, quasi_shuffle, _require_augmented
from .tensor import TensorElement, Word, b_plus

DEFAULT = "default"
LITERAL = "literal"


class DendriformContext:
    """λ together with the splitting operations ≺, ≻, • at that weight."""

    def __init__(self, lam=1, convention: str = DEFAULT):
        if convention not in (DEFAULT, LITERAL):
            raise ValueError(f"unknown bullet convention {convention!r}")
        self.lam = Fraction(lam)
        self.convention = convention

    def prec(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """x ≺ y: the quasi-shuffle terms led by the first factor's head."""
        _require_augmented(x, "prec")
        _require_augmented(y, "prec")
        return aug_quasi_shuffle(x, b_plus(y), self.lam)

    def succ(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """x ≻ y: the quasi-shuffle terms led by the second factor's head."""
        _require_augmented(x, "succ")
        _require_augmented(y, "succ")
        return aug_quasi_shuffle(b_plus(x), y, self.lam)

    def bullet(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """x • y: the merged-head component, scaled per the convention."""
        _require_augmented(x, "bullet")
        _require_augmented(y, "bullet")
        merged = aug_quasi_shuffle(x, y, self.lam)
        if self.convention == LITERAL:
            return merged
        return -self.lam * merged

    def star(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """≺ + ≻ + •; equals the quasi-shuffle product under the default
        convention."""
        return self.prec(x, y) + self.succ(x, y) + self.bullet(x, y)

    # head-letter forms of the defining identities, used as cross-checks

    def prec_head_form(self, x: TensorElement, y: TensorElement) -> TensorElement:
        _require_augmented(x, "prec")
        _require_augmented(y, "prec")
        lam = self.lam
        return _bilinear(lambda w1, w2: _qsh(w1[1:], w2, lam).prepend(w1[0]), x, y)

    def succ_head_form(self, x: TensorElement, y: TensorElement) -> TensorElement:
        _require_augmented(x, "succ")
        _require_augmented(y, "succ")
        lam = self.lam
        return _bilinear(lambda w1, w2: _qsh(w1, w2[1:], lam).prepend(w2[0]), x, y)

    def bullet_head_form(self, x: TensorElement, y: TensorElement) -> TensorElement:
        _require_augmented(x, "bullet")
        _require_augmented(y, "bullet")
        lam = self.lam
        merged = _bilinear(
            lambda w1, w2: _qsh(w1[1:], w2[1:], lam).prepend(w1[0] * w2[0]), x, y
        )
        if self.convention == LITERAL:
            return merged
        return -lam * merged


def dialgebra_defects(ctx: DendriformContext, x, y, z):
    """The three dendriform dialgebra axiom defects (for the λ = 0 split)."""
    p, s = ctx.prec, ctx.succ

    def both(u, v):
        return p(u, v) + s(u, v)

    return (
        p(p(x, y), z) - p(x, both(y, z)),
        p(s(x, y), z) - s(x, p(y, z)),
        s(x, s(y, z)) - s(both(x, y), z),
    )


def trialgebra_defects(ctx: DendriformContext, x, y, z):
    """The seven tridendriform axiom defects with ⋆ = ≺ + ≻ + •."""
    p, s, b, star = ctx.prec, ctx.succ, ctx.bullet, ctx.star
    return (
        p(p(x, y), z) - p(x, star(y, z)),
        p(s(x, y), z) - s(x, p(y, z)),
        s(x, s(y, z)) - s(star(x, y), z),
        b(s(x, y), z) - s(x, b(y, z)),
        b(p(x, y), z) - b(x, s(y, z)),
        p(b(x, y), z) - b(x, p(y, z)),
        b(b(x, y), z) - b(x, b(y, z)),
    )


def omega_prec(w: Word, ctx: DendriformContext = None) -> TensorElement:
    """Right-nested ≺ over the letters: a₁ ≺ (a₂ ≺ (… ≺ aₙ)).

    Acts as the identity on monomial-letter words for any λ.
    """
    if not w:
        raise EmptyWordTermError("omega_prec is defined for nonempty words only")
    ctx = ctx or DendriformContext()
    acc = TensorElement.from_word(w[-1:])
    for mono in w[-2::-1]:
        acc = ctx.prec(TensorElement.from_word((mono,)), acc)
    return acc


def omega_succ(w: Word, ctx: DendriformContext = None) -> TensorElement:
    """Mirror left-nested ≻ over the reversed letters: (…(aₙ ≻ aₙ₋₁) ≻ …) ≻ a₁.

    Also the identity on monomial-letter words.
    """
    if not w:
        raise EmptyWordTermError("omega_succ is defined for nonempty words only")
    ctx = ctx or DendriformContext()
    acc = TensorElement.from_word(w[-1:])
    for mono in w[-2::-1]:
        acc = ctx.succ(acc, TensorElement.from_word((mono,)))
    return acc
