import random
from fractions import Fraction

import pytest

from ysym.algebra import AlgebraElement, random_element
from ysym.perm import Permutation
from ysym.symmetrizer import (
    CongruenceContext,
    closed_form_multiplier,
    congruence_context,
    congruent,
    expand_product,
    garnir_zero,
    transposition_sum,
    verify_corner_identities,
    young_symmetrizer,
)
from ysym.tableau import Partition, YoungTableau, partitions

P = Partition.parse
T = YoungTableau.parse


def corner_cases(max_n):
    """All (canonical tableau, corner-removed subtableau) pairs up to max_n."""
    for n in range(2, max_n + 1):
        for lam in partitions(n):
            t = YoungTableau.canonical(lam)
            for (u, v) in lam.removable_corners():
                yield t, t.restrict(lam.remove_corner(u, v)), (u, v)


def test_symmetrizer_supports():
    tab = T("1,2,3/4,5")
    triple = young_symmetrizer(tab)
    assert len(triple.a_part) == 3 * 2 * 1 * 2  # 3! * 2!
    assert len(triple.b_part) == 2 * 2  # 2! * 2! * 1!
    assert len(triple.c) == 12 * 4


def test_symmetrizer_support_sizes_exhaustive():
    import math

    for n in range(1, 6):
        for lam in partitions(n):
            triple = young_symmetrizer(YoungTableau.canonical(lam))
            row_fact = math.prod(math.factorial(p) for p in lam.parts)
            col_fact = math.prod(math.factorial(p) for p in lam.conjugate().parts)
            assert len(triple.a_part) == row_fact
            assert len(triple.b_part) == col_fact
            assert len(triple.c) == row_fact * col_fact


def test_single_column_and_single_row():
    col = T("1/2")
    tc = young_symmetrizer(col).c
    e = Permutation.identity(2)
    t12 = Permutation.transposition(1, 2, 2)
    assert tc.coeff(e) == 1 and tc.coeff(t12) == -1
    assert tc * tc == tc.scale(2)

    row = T("1,2")
    rc = young_symmetrizer(row).c
    assert rc.coeff(e) == 1 and rc.coeff(t12) == 1
    assert rc * rc == rc.scale(2)


def test_quasi_idempotence_small():
    t = T("1,2/3")
    c = young_symmetrizer(t).c
    assert c * c == c.scale(3)
    assert P("2,1").hook_product() == 3


@pytest.mark.parametrize("n", list(range(1, 6)))
def test_quasi_idempotence_exhaustive(n):
    for lam in partitions(n):
        triple = young_symmetrizer(YoungTableau.canonical(lam))
        assert triple.c * triple.c == triple.c.scale(lam.hook_product())


def test_equivariance_under_relabeling():
    from ysym.algebra import conjugate

    rng = random.Random(17)
    for lam in partitions(4):
        t = YoungTableau.canonical(lam)
        c = young_symmetrizer(t).c
        for _ in range(4):
            word = list(range(1, 5))
            rng.shuffle(word)
            delta = Permutation(word)
            moved = young_symmetrizer(t.relabel(delta)).c
            d = AlgebraElement.from_perm(delta)
            dinv = AlgebraElement.from_perm(delta.inverse())
            assert moved == d * c * dinv
            assert moved == conjugate(delta, c)


def test_transposition_sum_values():
    assert transposition_sum(3, [], 5).is_zero()
    x = transposition_sum(9, [2, 3, 6, 7], 9)
    assert len(x) == 4
    for b in (2, 3, 6, 7):
        assert x.coeff(Permutation.transposition(9, b, 9)) == 1
    assert transposition_sum(7, [4], 9) == AlgebraElement.from_perm(
        Permutation.transposition(7, 4, 9)
    )
    with pytest.raises(ValueError):
        transposition_sum(2, [1, 2], 4)


def build_hook_factor_product(alpha, pairs, n):
    """Oracle-side expansion of alpha * prod (1 - x/r), left to right."""
    unit = AlgebraElement.unit(n)
    e = unit.scale(alpha)
    for x, r in pairs:
        e = e * (unit - x.scale(Fraction(1, r)))
    return e


def test_closed_form_nine_entry_tableau():
    # shape 4,3,1,1 with its three removable corners
    t = T("1,2,3,4/5,6,7/8/9")
    n = 9

    # corner at (4,1): two blocks, hook numbers 4 and 6
    s = t.restrict(P("4,3,1"))
    e = closed_form_multiplier(t, s, n)
    x1 = transposition_sum(9, [2, 3, 6, 7], n)
    x2 = transposition_sum(9, [4], n)
    want = build_hook_factor_product(P("4,3,1").hook_product(), [(x1, 4), (x2, 6)], n)
    assert e.element == want

    # corner at (2,3): one block, hook number 2
    s = t.restrict(P("4,2,1,1"))
    e = closed_form_multiplier(t, s, n)
    x1 = transposition_sum(7, [4], n)
    want = build_hook_factor_product(P("4,2,1,1").hook_product(), [(x1, 2)], n)
    assert e.element == want

    # corner at (1,4): nothing remains, alpha times the identity
    s = t.restrict(P("3,3,1,1"))
    e = closed_form_multiplier(t, s, n)
    alpha = P("3,3,1,1").hook_product()
    assert e.element == AlgebraElement.unit(n).scale(alpha)
    assert e.identity_coefficient() == alpha


def test_closed_form_two_rows_brute():
    t = T("1,3/2")
    s = t.restrict(P("1,1"))
    e = closed_form_multiplier(t, s)
    assert e.element == AlgebraElement.unit(3).scale(2)
    ct = young_symmetrizer(t).c
    cs = young_symmetrizer(s, 3).c
    assert ct * cs == ct * e.element


@pytest.mark.parametrize("n", list(range(2, 6)))
def test_closed_form_against_brute_force(n):
    for t, s, _ in corner_cases(n):
        if t.shape.n != n:
            continue
        e = closed_form_multiplier(t, s, n)
        ct = young_symmetrizer(t, n).c
        cs = young_symmetrizer(s, n).c
        assert ct * cs == ct * e.element
        assert e.identity_coefficient() == s.shape.hook_product()


def test_expand_product_equal_tableaux():
    t = T("1,2/3")
    e = expand_product(t, t)
    assert e.element == AlgebraElement.unit(3).scale(3)
    assert e.source == "closed-form"


def test_expand_product_single_cell_subtableau():
    t = T("1,2/3,4")
    s = t.restrict(P("1"))
    e = expand_product(t, s, 4)
    ct = young_symmetrizer(t).c
    assert e.identity_coefficient() == 1
    assert (ct * (e.element - AlgebraElement.unit(4))).is_zero()


def test_expand_product_two_step_brute():
    t = T("1,2/3,4")
    s = t.restrict(P("2"))
    e = expand_product(t, s, 4)
    assert e.source == "recursive"
    ct = young_symmetrizer(t).c
    cs = young_symmetrizer(s, 4).c
    assert ct * cs == ct * e.element
    assert e.identity_coefficient() == 2  # hook product of a single row of 2


def subdiagram_pairs(max_n):
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            t = YoungTableau.canonical(lam)
            for k in range(1, n + 1):
                for mu in partitions(k, within=lam):
                    yield t, t.restrict(mu)


@pytest.mark.parametrize("max_n", [4])
def test_expand_product_invariants_exhaustive(max_n):
    from ysym.tableau import in_left_set

    for t, s in subdiagram_pairs(max_n):
        n = t.shape.n
        e = expand_product(t, s, n)
        ct = young_symmetrizer(t, n).c
        cs = young_symmetrizer(s, n).c
        product = ct * cs
        assert product == ct * e.element
        assert not product.is_zero()
        assert e.identity_coefficient() == s.shape.hook_product()
        assert e.signs_match_parity()
        for p in e.element.support():
            assert in_left_set(p, t, s)


def test_garnir_zero_small_cases():
    assert garnir_zero(T("1,2"), 2, 1, 2).is_zero()
    t = T("1,2/3")
    for a in (2,):
        assert garnir_zero(t, 2, 1, a).is_zero()
    t = T("1,2/3,4")
    for a in (2, 4):
        assert garnir_zero(t, 2, 1, a).is_zero()


def test_garnir_preconditions():
    t = T("1,2/3")
    with pytest.raises(ValueError):
        garnir_zero(t, 1, 1, 1)
    with pytest.raises(ValueError):
        garnir_zero(t, 1, 2, 1)  # column 1 is taller than column 2
    with pytest.raises(ValueError):
        garnir_zero(t, 2, 1, 3)  # 3 is not in column 2


@pytest.mark.parametrize("n", list(range(2, 6)))
def test_garnir_zero_exhaustive(n):
    for lam in partitions(n):
        t = YoungTableau.canonical(lam)
        lamc = lam.conjugate()
        ncols = lam.part(1)
        for i in range(1, ncols + 1):
            for j in range(1, ncols + 1):
                if i == j or lamc.part(i) > lamc.part(j):
                    continue
                for a in t.column_set(i):
                    assert garnir_zero(t, i, j, a, n).is_zero()


def test_congruent_reflexive():
    t = T("1,2/3")
    s = t.restrict(P("2"))
    f = random_element(3, 3, random.Random(1))
    assert congruent(f, f, t, s)


def test_congruence_first_block_polynomial():
    # P_1 and Q_1 agree exactly, hence are congruent
    t = T("1,2/3")
    s = t.restrict(P("2"))
    n = 3
    ctx = congruence_context(t, s, n)
    a = 3
    from ysym.tableau import blocks_from_column

    dec = blocks_from_column(s, 0)
    x1 = transposition_sum(a, dec[0].entries, n)
    p1 = x1 - AlgebraElement.unit(n).scale(dec[0].length)
    assert ctx.congruent(p1, p1)
    # x_1 - l_1 is congruent to zero only if the chain annihilates it; check
    # instead the product relations the chain is built to witness
    assert ctx.congruent(x1 * x1, x1.scale(dec[0].length - dec[0].height) + AlgebraElement.unit(n).scale(dec[0].length * dec[0].height))


def test_congruence_block_products_exhaustive():
    from ysym.tableau import blocks_from_column

    for n in range(2, 6):
        for lam in partitions(n):
            t = YoungTableau.canonical(lam)
            for (u, v) in lam.removable_corners():
                mu = lam.remove_corner(u, v)
                s = t.restrict(mu)
                ctx = congruence_context(t, s, n)
                a = t.entry(u, v)
                dec = blocks_from_column(s, min(v - 1, mu.part(1)))
                xs = [transposition_sum(a, b.entries, n) for b in dec]
                for i in range(len(dec)):
                    for j in range(i):
                        assert ctx.congruent(xs[i] * xs[j], xs[i].scale(dec[j].length))


def test_congruence_respects_right_multiplication():
    t = T("1,2,3/4,5")
    s = t.restrict(P("3,1"))
    n = 5
    ctx = congruence_context(t, s, n)
    rng = random.Random(9)
    from ysym.tableau import blocks_from_column

    a = t.entry(2, 2)
    dec = blocks_from_column(s, 1)
    xs = [transposition_sum(a, b.entries, n) for b in dec]
    if len(xs) >= 2:
        f, g = xs[1] * xs[0], xs[1].scale(dec[0].length)
        assert ctx.congruent(f, g)
        for _ in range(3):
            h = random_element(n, 4, rng)
            assert ctx.congruent(f * h, g * h)
        # left multiplication by powers of the column sum also preserves it
        x_total = ctx.x_total
        assert ctx.congruent(x_total * f, x_total * g)


def test_congruent_v_argument_checked():
    t = T("1,2/3")
    s = t.restrict(P("2"))
    f = AlgebraElement.unit(3)
    assert congruent(f, f, t, s, v=1)
    with pytest.raises(ValueError):
        congruent(f, f, t, s, v=2)


def test_corner_identity_suite_smallest_cases():
    rep = verify_corner_identities(T("1,2/3"), T("1,2/3").restrict(P("2")))
    assert rep.ok, [r.line() for r in rep.results if not r.ok]
    # degenerate single column: most sums empty
    rep = verify_corner_identities(T("1/2"), T("1/2").restrict(P("1")))
    assert rep.ok
    ids = {r.check_id for r in rep.results}
    assert "polynomial-sandwich" in ids
    assert "congruence-pt-qt" in ids


@pytest.mark.parametrize("n", [2, 3, 4])
def test_corner_identity_suite_exhaustive(n):
    for t, s, _ in corner_cases(n):
        if t.shape.n != n:
            continue
        rep = verify_corner_identities(t, s, n)
        assert rep.ok, "\n".join(rep.lines())


def test_report_lines_format():
    rep = verify_corner_identities(T("1,2/3"), T("1,2/3").restrict(P("2")))
    for line in rep.lines():
        assert line.startswith("PASS ") or line.startswith("FAIL ")
        assert "2,1" in line and line.endswith(" 2")
