"""Dendriform dialgebra and trialgebra splittings."""

from fractions import Fraction

import pytest

from nijalg import (
    DendriformContext,
    EmptyWordTermError,
    TensorElement,
    dialgebra_defects,
    gen,
    omega_prec,
    omega_succ,
    quasi_shuffle,
    trialgebra_defects,
)
from nijalg.dendriform import LITERAL
from conftest import te, words_over

ZERO = TensorElement.zero()


def _aug_pairs(gens, max_total):
    ws = words_over(gens, max_total, 1)
    return [(x, y) for x in ws for y in ws if len(x) + len(y) <= max_total]


def _aug_triples(gens, max_total):
    ws = words_over(gens, max_total, 1)
    return [
        (x, y, z)
        for x in ws
        for y in ws
        if len(x) + len(y) < max_total
        for z in ws
        if len(x) + len(y) + len(z) <= max_total
    ]


def test_prec_examples(ab):
    a, b = ab
    c = gen("c")
    ctx = DendriformContext(Fraction(5, 7))
    assert ctx.prec(te(a), te(b)) == te(a, b)
    lam = ctx.lam
    assert ctx.prec(te(a, b), te(c)) == te(a, b, c) + te(a, c, b) - lam * te(a, b * c)


def test_succ_examples(ab):
    a, b = ab
    ctx = DendriformContext(1)
    assert ctx.succ(te(a), te(b)) == te(b, a)
    for x, y in _aug_pairs(ab, 5):
        assert ctx.succ(te(*x), te(*y)) == ctx.prec(te(*y), te(*x))


def test_head_forms_agree(ab):
    for lam in (Fraction(0), Fraction(1), Fraction(-1)):
        ctx = DendriformContext(lam)
        lit = DendriformContext(lam, LITERAL)
        for x, y in _aug_pairs(ab, 5):
            ex, ey = te(*x), te(*y)
            assert ctx.prec(ex, ey) == ctx.prec_head_form(ex, ey)
            assert ctx.succ(ex, ey) == ctx.succ_head_form(ex, ey)
            assert ctx.bullet(ex, ey) == ctx.bullet_head_form(ex, ey)
            assert lit.bullet(ex, ey) == lit.bullet_head_form(ex, ey)


def test_bullet_conventions(ab):
    a, b = ab
    assert DendriformContext(1).bullet(te(a), te(b)) == -te(a * b)
    assert DendriformContext(1, LITERAL).bullet(te(a), te(b)) == te(a * b)
    assert DendriformContext(0).bullet(te(a), te(b)) == ZERO
    for lam in (Fraction(1), Fraction(-1), Fraction(2, 3)):
        ctx = DendriformContext(lam)
        lit = DendriformContext(lam, LITERAL)
        for x, y in _aug_pairs(ab, 4):
            assert ctx.bullet(te(*x), te(*y)) == -lam * lit.bullet(te(*x), te(*y))


def test_splitting_sums_to_quasi_shuffle(ab):
    for lam in (Fraction(0), Fraction(1), Fraction(-1)):
        ctx = DendriformContext(lam)
        for x, y in _aug_pairs(ab, 5):
            assert ctx.star(te(*x), te(*y)) == quasi_shuffle(te(*x), te(*y), lam)


def test_dialgebra_axioms_weight_zero(ab):
    ctx = DendriformContext(0)
    a, b = ab
    c = gen("c")
    assert dialgebra_defects(ctx, te(a), te(b), te(c)) == (ZERO, ZERO, ZERO)
    for x, y, z in _aug_triples(ab, 5):
        assert dialgebra_defects(ctx, te(*x), te(*y), te(*z)) == (ZERO, ZERO, ZERO)


def test_dialgebra_axioms_fail_without_bullet_at_weight_one(ab):
    # dropping • at λ = 1 must break the dialgebra axioms at small length
    ctx = DendriformContext(1)
    found = any(
        any(d for d in dialgebra_defects(ctx, te(*x), te(*y), te(*z)))
        for x, y, z in _aug_triples(ab, 4)
    )
    assert found


def test_trialgebra_axioms(ab):
    a, b = ab
    c = gen("c")
    ctx = DendriformContext(1)
    assert all(
        d == ZERO for d in trialgebra_defects(ctx, te(a), te(b), te(c))
    )
    for lam in (Fraction(1), Fraction(-1), Fraction(2, 3)):
        ctx = DendriformContext(lam)
        for x, y, z in _aug_triples(ab, 5):
            assert all(
                d == ZERO for d in trialgebra_defects(ctx, te(*x), te(*y), te(*z))
            )


def test_trialgebra_reduces_to_dialgebra_at_weight_zero(ab):
    ctx = DendriformContext(0)
    for x, y, z in _aug_triples(ab, 4):
        defects = trialgebra_defects(ctx, te(*x), te(*y), te(*z))
        assert all(d == ZERO for d in defects[3:])  # every bullet term vanishes


def test_omega_identities(ab):
    a, b = ab
    c = gen("c")
    assert omega_prec((a,)) == te(a)
    assert omega_prec((a, b, c)) == te(a, b, c)
    assert omega_succ((a, b, c)) == te(a, b, c)
    for w in words_over(ab, 5, 1):
        assert omega_prec(w) == te(*w)
        assert omega_succ(w) == te(*w)
    with pytest.raises(EmptyWordTermError):
        omega_prec(())


def test_augmentation_guard(ab):
    a, _ = ab
    ctx = DendriformContext(1)
    with pytest.raises(EmptyWordTermError):
        ctx.prec(te() + te(a), te(a))
    with pytest.raises(EmptyWordTermError):
        ctx.bullet(te(a), te())
