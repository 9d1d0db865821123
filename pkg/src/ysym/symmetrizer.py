"""Young symmetrizers and the product formulas built on them.

The central objects: for a tableau T with subtableau S, a small element E
supported on permutations that move entries of S weakly left, satisfying

    c(T) * c(S) = c(T) * E        (exactly, in the group algebra)

with the identity coefficient of E equal to the hook product of the shape
of S.  One corner of difference admits a closed formula over the blocks of
the truncated subtableau; the general case composes closed-form steps by
peeling rightmost corners.

The module also houses the Garnir relation check and the congruence
machinery (an equivalence modulo a chain of right annihilators) used to
validate the supporting identities of the closed formula.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .algebra import AlgebraElement, Coeff
from .perm import Permutation, _intern
from .tableau import (
    BlockDecomposition,
    Partition,
    YoungTableau,
    blocks_from_column,
    in_left_set,
    rightmost_corner_outside,
)


def _group_product_sum(cell_sets: Iterable[frozenset[int]], n: int, signed: bool) -> AlgebraElement:
    """Sum over the product of the symmetric groups of disjoint entry sets.

    With ``signed`` the coefficient of each group element is its sign.
    Enumerates the product group directly; the sets must be disjoint.
    """
    sets = [tuple(sorted(s)) for s in cell_sets if len(s) > 1]
    base = tuple(range(n))
    if not sets:
        return AlgebraElement._make(n, {_intern(base): 1})
    arrangements = []
    for s in sets:
        opts = []
        for arr in itertools.permutations(s):
            if signed:
                sign = _arr_parity(arr, s)
            else:
                sign = 1
            opts.append((arr, sign))
        arrangements.append((s, opts))
    terms: dict[Permutation, Coeff] = {}
    for combo in itertools.product(*[opts for _, opts in arrangements]):
        w = list(base)
        sign = 1
        for (s, _), (arr, sg) in zip(arrangements, combo):
            for pos, val in zip(s, arr):
                w[pos - 1] = val - 1
            sign *= sg
        terms[_intern(tuple(w))] = sign
    return AlgebraElement._make(n, terms)


def _arr_parity(values: tuple[int, ...], sorted_values: tuple[int, ...]) -> int:
    index = {v: i for i, v in enumerate(sorted_values)}
    word = [index[v] for v in values]
    seen = [False] * len(word)
    sign = 1
    for i in range(len(word)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = word[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class SymmetrizerTriple:
    """Row symmetrization, signed column antisymmetrization, their product."""

    tableau: YoungTableau
    degree: int
    a_part: AlgebraElement
    b_part: AlgebraElement
    c: AlgebraElement

    @property
    def alpha(self) -> int:
        """Hook product of the shape; the quasi-idempotence scalar."""
        return self.tableau.shape.hook_product()


_SYMMETRIZER_CACHE: dict[tuple[YoungTableau, int], SymmetrizerTriple] = {}


def young_symmetrizer(T: YoungTableau, degree: int | None = None) -> SymmetrizerTriple:
    """The Young symmetrizer of T inside the group algebra of S_degree."""
    n = T.max_entry() if degree is None else degree
    if T.max_entry() > n:
        raise ValueError(f"tableau entries exceed degree {n}")
    key = (T, n)
    cached = _SYMMETRIZER_CACHE.get(key)
    if cached is not None:
        return cached
    rows = [T.row_set(i) for i in range(1, len(T.rows) + 1)]
    cols = [T.column_set(j) for j in range(1, T.shape.part(1) + 1)]
    a_part = _group_product_sum(rows, n, signed=False)
    b_part = _group_product_sum(cols, n, signed=True)
    triple = SymmetrizerTriple(T, n, a_part, b_part, a_part * b_part)
    if len(_SYMMETRIZER_CACHE) > 4096:
        _SYMMETRIZER_CACHE.clear()
    _SYMMETRIZER_CACHE[key] = triple
    return triple


def transposition_sum(a: int, entries: Iterable[int], n: int) -> AlgebraElement:
    """Sum of the transpositions (a, b) over the given entries b."""
    bs = sorted(set(entries))
    if a in bs:
        raise ValueError(f"{a} may not appear in its own transposition sum")
    terms: dict[Permutation, Coeff] = {}
    for b in bs:
        terms[Permutation.transposition(a, b, n)] = 1
    return AlgebraElement._make(n, terms)


@dataclass(frozen=True)
class ExpansionMultiplier:
    """An element E with c(T)*c(S) = c(T)*E.

    ``alpha`` is the hook product of the subtableau shape; it must equal the
    identity coefficient.  ``source`` records whether E came from the
    one-corner closed formula or from the corner-peeling recursion.
    """

    element: AlgebraElement
    source: str
    alpha: int
    degree: int

    def identity_coefficient(self) -> Coeff:
        return self.element.coeff(Permutation.identity(self.degree))

    def all_integral(self) -> bool:
        return all(isinstance(c, int) for _, c in self.element.items())

    def support_in_left_set(self, T: YoungTableau, S: YoungTableau) -> bool:
        return all(in_left_set(p, T, S) for p in self.element.support())

    def signs_match_parity(self) -> bool:
        for p, c in self.element.items():
            if p.sign() > 0 and c < 0:
                return False
            if p.sign() < 0 and c > 0:
                return False
        return True


def _added_corner(T: YoungTableau, S: YoungTableau) -> tuple[int, int]:
    """The unique cell of T outside S, which must be a single corner."""
    lam, mu = T.shape, S.shape
    if lam.n != mu.n + 1:
        raise ValueError("shapes must differ by exactly one cell")
    if not T.has_subtableau(S):
        raise ValueError("S is not a subtableau of T")
    for i in range(1, len(lam.parts) + 1):
        if lam.part(i) != mu.part(i):
            return (i, lam.part(i))
    raise AssertionError("unreachable: shapes differ by one cell")


def closed_form_multiplier(
    T: YoungTableau, S: YoungTableau, degree: int | None = None
) -> ExpansionMultiplier:
    """The one-corner multiplier: alpha * prod_i (1 - x_i / r_i).

    The product runs over the blocks of S stripped of its first v columns,
    in left-to-right block order, where (u, v) is the added cell; x_i sums
    the transpositions of the new entry with the block entries, and r_i is
    the hook length of the subshape at (h_i, v).
    """
    n = T.max_entry() if degree is None else degree
    u, v = _added_corner(T, S)
    a = T.entry(u, v)
    mu = S.shape
    # v may exceed the width of S (corner at the end of row one); stripping
    # more columns than exist leaves the empty tableau either way.
    dec = blocks_from_column(S, min(v, mu.part(1)))
    hook_numbers = dec.hook_numbers(u)
    unit = AlgebraElement.unit(n)
    e = unit.scale(mu.hook_product())
    for block, r in zip(dec, hook_numbers):
        x = transposition_sum(a, block.entries, n)
        e = e * (unit - x.scale(Fraction(1, r)))
    return ExpansionMultiplier(e, "closed-form", mu.hook_product(), n)


def expand_product(
    T: YoungTableau, S: YoungTableau, degree: int | None = None
) -> ExpansionMultiplier:
    """General multiplier via recursive corner peeling.

    Equal tableaux give alpha times the identity; one corner of difference
    delegates to the closed formula; otherwise the rightmost corner of T
    outside S is removed to give U, and the multipliers compose as
    (1/alpha_U) * E(T,U) * E(U,S).
    """
    n = T.max_entry() if degree is None else degree
    if not T.has_subtableau(S):
        raise ValueError("S is not a subtableau of T")
    mu = S.shape
    if T.shape == mu:
        return ExpansionMultiplier(
            AlgebraElement.unit(n).scale(mu.hook_product()),
            "closed-form",
            mu.hook_product(),
            n,
        )
    if T.shape.n == mu.n + 1:
        return closed_form_multiplier(T, S, n)
    u, v = rightmost_corner_outside(T, S)
    U = T.remove_cell(u, v)
    outer = closed_form_multiplier(T, U, n)
    inner = expand_product(U, S, n)
    element = (outer.element * inner.element).scale(Fraction(1, U.shape.hook_product()))
    return ExpansionMultiplier(element, "recursive", mu.hook_product(), n)


def garnir_zero(
    T: YoungTableau, i: int, j: int, a: int, degree: int | None = None
) -> AlgebraElement:
    """c(T) * (1 - sum of (a, x) over column j); contractually zero.

    Requires i != j, column i no taller than column j, and a in column i.
    """
    n = T.max_entry() if degree is None else degree
    lamc = T.shape.conjugate()
    if i == j:
        raise ValueError("need two distinct columns")
    if lamc.part(i) > lamc.part(j):
        raise ValueError(f"column {i} is taller than column {j}")
    if a not in T.column_set(i):
        raise ValueError(f"{a} is not in column {i}")
    c = young_symmetrizer(T, n).c
    z = transposition_sum(a, T.column_set(j), n)
    return c * (AlgebraElement.unit(n) - z)


# -- congruence machinery ----------------------------------------------------


def _reduce_fraction_free(
    vec: dict[Permutation, int],
    basis: list[tuple[Permutation, dict[Permutation, int]]],
) -> dict[Permutation, int]:
    """Reduce an integer vector against an integer row basis.

    Uses cross-multiplication only, so everything stays in the integers;
    the content gcd is stripped after each elimination step.
    """
    for pivot, row in basis:
        c = vec.get(pivot)
        if not c:
            continue
        rp = row[pivot]
        new: dict[Permutation, int] = {}
        for k, val in vec.items():
            nv = val * rp - c * row.get(k, 0)
            if nv:
                new[k] = nv
        for k, val in row.items():
            if k not in vec:
                nv = -c * val
                if nv:
                    new[k] = nv
        vec = new
        if vec:
            g = 0
            for val in vec.values():
                g = math.gcd(g, val)
            if g > 1:
                vec = {k: val // g for k, val in vec.items()}
    return vec


class CongruenceContext:
    """Decides congruence modulo the right annihilator chain of a * c * X^i.

    Here T is S plus one box at (u, v), a is the new entry, and X sums the
    transpositions of a with every entry of S in columns v and beyond.  Two
    elements are congruent when a(T) * c(S) * X^i kills their difference for
    every i >= 0; the power chain is cut off once the linear span of the
    accumulated vectors stabilizes, which is sound because right
    multiplication by X preserves the stabilized span.
    """

    def __init__(self, T: YoungTableau, S: YoungTableau, degree: int | None = None):
        n = T.max_entry() if degree is None else degree
        u, v = _added_corner(T, S)
        a = T.entry(u, v)
        mu = S.shape
        right_entries: set[int] = set()
        for j in range(v, mu.part(1) + 1):
            right_entries.update(S.column_set(j))
        self.degree = n
        self.corner = (u, v)
        self.entry = a
        self.x_total = transposition_sum(a, right_entries, n) if right_entries else AlgebraElement.zero(n)
        w = young_symmetrizer(T, n).a_part * young_symmetrizer(S, n).c
        chain: list[AlgebraElement] = []
        basis: list[tuple[Permutation, dict[Permutation, int]]] = []
        while True:
            vec = {p: c for p, c in w.items()}
            reduced = _reduce_fraction_free(vec, basis)
            if not reduced:
                break
            pivot = min(reduced, key=lambda p: p.w)
            basis.append((pivot, reduced))
            chain.append(w)
            w = w * self.x_total
        self.chain = chain

    def congruent(self, f: AlgebraElement, g: AlgebraElement) -> bool:
        d = f - g
        if d.is_zero():
            return True
        return all((w * d).is_zero() for w in self.chain)


_CONTEXT_CACHE: dict[tuple[YoungTableau, YoungTableau, int], CongruenceContext] = {}


def congruence_context(
    T: YoungTableau, S: YoungTableau, degree: int | None = None
) -> CongruenceContext:
    n = T.max_entry() if degree is None else degree
    key = (T, S, n)
    ctx = _CONTEXT_CACHE.get(key)
    if ctx is None:
        ctx = CongruenceContext(T, S, n)
        if len(_CONTEXT_CACHE) > 512:
            _CONTEXT_CACHE.clear()
        _CONTEXT_CACHE[key] = ctx
    return ctx


def congruent(
    f: AlgebraElement,
    g: AlgebraElement,
    T: YoungTableau,
    S: YoungTableau,
    v: int | None = None,
) -> bool:
    """Whether a(T) * c(S) * X^i annihilates f - g for every power i."""
    ctx = congruence_context(T, S, f.degree)
    if v is not None and v != ctx.corner[1]:
        raise ValueError(f"column {v} does not match the added cell {ctx.corner}")
    return ctx.congruent(f, g)


# -- the identity suite for one added corner ---------------------------------


@dataclass
class CheckResult:
    check_id: str
    shape: str
    subshape: str
    ok: bool
    residual: AlgebraElement | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.check_id} {self.shape} {self.subshape}"


@dataclass
class IdentityReport:
    shape: str
    subshape: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def to_json(self) -> dict:
        out = {
            "shape": self.shape,
            "subshape": self.subshape,
            "ok": self.ok,
            "checks": [],
        }
        for r in self.results:
            entry: dict = {"id": r.check_id, "ok": r.ok}
            if not r.ok and r.residual is not None:
                entry["residual"] = r.residual.to_json()
            out["checks"].append(entry)
        return out


def verify_corner_identities(
    T: YoungTableau, S: YoungTableau, degree: int | None = None
) -> IdentityReport:
    """Exhaustively check the supporting identities of the one-corner formula.

    Covers the column and block product rules, the two corner reductions,
    the cyclic sandwich collapse, left-column annihilation, commutation of
    the full transposition sum, the polynomial sandwich, and the congruence
    relations between the block polynomials P_t and Q_t.
    """
    n = T.max_entry() if degree is None else degree
    u, v = _added_corner(T, S)
    a = T.entry(u, v)
    mu = S.shape
    muc = mu.conjugate()
    report = IdentityReport(str(T.shape), str(mu))
    unit = AlgebraElement.unit(n)
    cS = young_symmetrizer(S, n).c
    aT = young_symmetrizer(T, n).a_part
    aTcS = aT * cS

    def z(j: int) -> AlgebraElement:
        if j > mu.part(1):
            return AlgebraElement.zero(n)
        return transposition_sum(a, S.column_set(j), n)

    def add(check_id: str, residuals: Iterable[AlgebraElement]) -> None:
        bad = next((r for r in residuals if not r.is_zero()), None)
        report.results.append(
            CheckResult(check_id, str(T.shape), str(mu), bad is None, bad)
        )

    # column products: z_i z_j collapses onto z_i, z_i^2 is affine in z_i
    def column_product_residuals():
        for i in range(1, mu.part(1) + 1):
            zi = z(i)
            for j in range(1, mu.part(1) + 1):
                if i != j and muc.part(i) <= muc.part(j):
                    yield cS * zi * z(j) - cS * zi
            hi = muc.part(i)
            yield cS * zi * zi - cS * (unit.scale(hi) - zi.scale(hi - 1))

    add("column-products", column_product_residuals())

    dec = blocks_from_column(S, min(v - 1, mu.part(1)))
    m = len(dec)
    xs = [transposition_sum(a, b.entries, n) for b in dec]
    ls = dec.lengths
    hs = dec.heights
    rs = dec.hook_numbers(hs[0]) if m else ()

    dect = blocks_from_column(S, min(v, mu.part(1)))
    xst = [transposition_sum(a, b.entries, n) for b in dect]
    rst = dect.hook_numbers(u)

    # block products: x_i x_j = l_j x_i and x_i^2 = (l_i - h_i) x_i + l_i h_i
    def block_product_residuals():
        for i in range(m):
            for j in range(i):
                yield cS * xs[i] * xs[j] - (cS * xs[i]).scale(ls[j])
            yield cS * xs[i] * xs[i] - cS * (
                xs[i].scale(ls[i] - hs[i]) + unit.scale(ls[i] * hs[i])
            )

    add("block-products", block_product_residuals())

    def hook_factor_product(elements, hook_nums):
        e = unit
        for x, r in zip(elements, hook_nums):
            e = e * (unit - x.scale(Fraction(1, r)))
        return e

    # corner reduction: absorbing (1 - z_v) into the block product
    lhs = cS * (unit - z(v)) * hook_factor_product(xst, rst)
    rhs = cS * hook_factor_product(xs, rs)
    add("corner-reduction", [lhs - rhs])

    # corner sandwich: only the first block survives between two symmetrizers
    lhs = cS * (unit - z(v)) * cS
    if m:
        rhs = cS * (unit - xs[0].scale(Fraction(1, rs[0]))) * cS
    else:
        rhs = cS * cS
    add("corner-sandwich", [lhs - rhs])

    # cyclic sandwich: a cycle through increasing columns collapses or dies
    def cycle_sandwich_residuals():
        ncols = mu.part(1)
        columns = [sorted(S.column_set(j)) for j in range(1, ncols + 1)]
        for p in range(2, ncols + 1):
            for js in itertools.combinations(range(ncols), p):
                for bs in itertools.product(*[columns[j] for j in js]):
                    sigma = Permutation.cycle(a, list(bs), n)
                    lhs = cS * sigma * cS
                    if S.row_of(bs[0]) != S.row_of(bs[1]):
                        yield lhs
                    else:
                        tau = Permutation.cycle(a, list(bs[1:]), n)
                        yield lhs - cS * tau * cS

    add("cycle-sandwich", cycle_sandwich_residuals())

    # full block sandwich: the whole hook-factor product collapses likewise
    if m:
        lhs = cS * (unit - xs[0].scale(Fraction(1, rs[0]))) * cS
        rhs = cS * hook_factor_product(xs, rs) * cS
        add("block-sandwich", [lhs - rhs])
    else:
        add("block-sandwich", [])

    # left-column annihilation for permutations fixing the left of S
    def left_column_residuals():
        fixed = set()
        for j in range(1, v):
            fixed.update(S.column_set(j))
        free = sorted(set(range(1, n + 1)) - fixed)
        for j in range(1, v):
            zj = z(j)
            for arr in itertools.permutations(free):
                w = list(range(n))
                for pos, val in zip(free, arr):
                    w[pos - 1] = val - 1
                sigma = Permutation(x + 1 for x in w)
                yield aTcS * sigma * (unit - zj)

    add("left-column-annihilation", left_column_residuals())

    # the sum over all columns commutes with the subtableau symmetrizer
    Z = AlgebraElement.zero(n)
    for j in range(1, mu.part(1) + 1):
        Z = Z + z(j)

    def commutation_residuals():
        yield cS * Z - Z * cS
        others = [e for e in range(1, n + 1) if e != a]
        for arr in itertools.permutations(others):
            w = list(range(n))
            for pos, val in zip(others, arr):
                w[pos - 1] = val - 1
            sigma = Permutation(x + 1 for x in w)
            yield AlgebraElement.from_perm(sigma) * Z - Z * AlgebraElement.from_perm(sigma)

    add("colsum-commutation", commutation_residuals())

    # polynomial sandwich: a c alpha X^t = a c X^t c
    X = AlgebraElement.zero(n)
    for j in range(v, mu.part(1) + 1):
        X = X + z(j)
    alpha = mu.hook_product()

    def sandwich_residuals():
        left = aTcS
        for _t in range(5):
            yield left.scale(alpha) - left * cS
            left = left * X

    add("polynomial-sandwich", sandwich_residuals())

    # block polynomials: P_t and Q_t, their base case and congruences
    ctx = congruence_context(T, S, n)

    def poly_P(t: int) -> AlgebraElement:
        e = unit
        for i in range(t):
            e = e * (xs[i] - unit.scale(rs[i]))
        return e

    def poly_Q(t: int) -> AlgebraElement:
        xt = AlgebraElement.zero(n)
        for i in range(t):
            xt = xt + xs[i]
        cum = list(itertools.accumulate(ls))
        e = unit
        for i in range(1, t + 1):
            s = cum[i - 1] - (hs[i] if i < t else 0)
            e = e * (xt - unit.scale(s))
        return e

    if m:
        add("first-block-polys", [poly_P(1) - (xs[0] - unit.scale(ls[0])), poly_Q(1) - poly_P(1)])
    else:
        add("first-block-polys", [])

    def congruence_product_ok():
        for i in range(m):
            for j in range(i):
                if not ctx.congruent(xs[i] * xs[j], xs[i].scale(ls[j])):
                    return False
            rhs = xs[i].scale(ls[i] - hs[i]) + unit.scale(ls[i] * hs[i])
            if not ctx.congruent(xs[i] * xs[i], rhs):
                return False
        return True

    report.results.append(
        CheckResult("congruence-products", str(T.shape), str(mu), congruence_product_ok())
    )

    def congruence_pt_qt_ok():
        for t in range(1, m + 1):
            if not ctx.congruent(poly_P(t), poly_Q(t)):
                return False
        return True

    report.results.append(
        CheckResult("congruence-pt-qt", str(T.shape), str(mu), congruence_pt_qt_ok())
    )

    def congruence_annihilation_ok():
        zero = AlgebraElement.zero(n)
        for t in range(1, m + 1):
            pt = poly_P(t)
            xt = AlgebraElement.zero(n)
            for i in range(t):
                xt = xt + xs[i]
            shifted = xt + unit.scale(hs[0])
            if not ctx.congruent(pt * shifted, zero):
                return False
            if not ctx.congruent(shifted * pt, zero):
                return False
        return True

    report.results.append(
        CheckResult(
            "congruence-annihilation", str(T.shape), str(mu), congruence_annihilation_ok()
        )
    )

    return report
