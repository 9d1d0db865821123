"""The generic tensor algebra, tabloids, straightening and certificates.

Everything is computed in one canonical realization: the degree-n component
is the group algebra of S_n, a basis word being the tensor monomial whose
i-th slot holds the letter word[i].  The degree-graded product is the star
(concatenation) product.  A tabloid built from a filling F of a diagram by
{1..n} is realized as c(T) * rho, where T is the canonical tableau of the
shape and rho the permutation sending i to the T-entry at the cell F puts
i in.

The partially symmetrized algebra identifies letters inside consecutive
blocks of size d; its elements are kept as canonical block partitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgebraElement, Coeff, coeff_from_str, coeff_to_str, normalize_coeff
from .perm import Permutation, _intern
from .perm import star as perm_star
from .symmetrizer import expand_product, young_symmetrizer
from .tableau import Partition, YoungTableau


def star_algebra(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the star product to algebra elements."""
    n = f.degree
    terms: dict[Permutation, Coeff] = {}
    for p, cp in f.items():
        pw = p.w
        for q, cq in g.items():
            w = pw + tuple(n + v for v in q.w)
            terms[_intern(w)] = normalize_coeff(cp * cq)
    return AlgebraElement._make(n + g.degree, terms)


@dataclass(frozen=True)
class TensorElement:
    """A homogeneous element of the generic tensor algebra."""

    value: AlgebraElement

    @property
    def degree(self) -> int:
        return self.value.degree

    @staticmethod
    def monomial(word: Sequence[int]) -> "TensorElement":
        return TensorElement(AlgebraElement.from_perm(Permutation(word)))

    @staticmethod
    def unit() -> "TensorElement":
        """The empty tensor, the multiplicative unit in degree zero."""
        return TensorElement(AlgebraElement.unit(0))

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        return TensorElement(star_algebra(self.value, other.value))

    def __rmul__(self, other) -> "TensorElement":
        if isinstance(other, AlgebraElement):
            return TensorElement(other * self.value)
        return NotImplemented

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.value + other.value)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.value - other.value)

    def scale(self, c: Coeff) -> "TensorElement":
        return TensorElement(self.value.scale(c))

    def is_zero(self) -> bool:
        return self.value.is_zero()


def concat_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    """Concatenation product; degrees add."""
    return x * y


# -- tabloids -----------------------------------------------------------------


class Tabloid:
    """A tabloid: the realization class of a bijective filling by {1..n}."""

    __slots__ = ("filling", "_real")

    def __init__(self, filling: YoungTableau):
        n = filling.size
        if filling.entries != frozenset(range(1, n + 1)):
            raise ValueError("tabloid fillings must use exactly {1..n}")
        self.filling = filling
        self._real: TensorElement | None = None

    @property
    def shape(self) -> Partition:
        return self.filling.shape

    @property
    def degree(self) -> int:
        return self.filling.size

    def realization_word(self) -> Permutation:
        """The permutation sending i to the canonical-tableau entry at F's cell of i."""
        T = YoungTableau.canonical(self.shape)
        F = self.filling
        return Permutation(T.entry(*F.position(i)) for i in range(1, F.size + 1))

    def realize(self) -> TensorElement:
        if self._real is None:
            T = YoungTableau.canonical(self.shape)
            c = young_symmetrizer(T, self.degree).c
            self._real = TensorElement(c * self.realization_word())
        return self._real

    def column_canonical(self) -> "YoungTableau":
        """The filling with every column sorted ascending."""
        return _sort_columns(self.filling)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tabloid) and self.filling == other.filling

    def __hash__(self) -> int:
        return hash(self.filling)

    def __repr__(self) -> str:
        return f"Tabloid({self.filling})"


def realize_tabloid(filling: YoungTableau) -> TensorElement:
    return Tabloid(filling).realize()


def _columns_to_rows(columns: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    height = max((len(c) for c in columns), default=0)
    rows = []
    for i in range(height):
        rows.append(tuple(c[i] for c in columns if len(c) > i))
    return tuple(rows)


def _sort_columns(F: YoungTableau) -> YoungTableau:
    cols = [sorted(F.column(j)) for j in range(1, F.shape.part(1) + 1)]
    return YoungTableau(_columns_to_rows(cols))


def column_group(F: YoungTableau) -> Iterable[tuple[Permutation, int]]:
    """The column-preserving value permutations of F with their signs."""
    n = max(F.entries)
    cols = [F.column(j) for j in range(1, F.shape.part(1) + 1)]
    cols = [c for c in cols if len(c) > 1]
    pools = [list(itertools.permutations(c)) for c in cols]
    for combo in itertools.product(*pools) if pools else [()]:
        w = list(range(n))
        for col, arr in zip(cols, combo):
            for src, dst in zip(col, arr):
                w[src - 1] = dst - 1
        p = _intern(tuple(w))
        yield p, p.sign()


# -- straightening ------------------------------------------------------------


def _column_sorted_with_sign(F: YoungTableau, k: int) -> tuple[int, YoungTableau]:
    """Sort each column: distinguished entries (<= k) first, all ascending.

    Returns the sign of the column permutation relating the two fillings.
    """
    sign = 1
    cols = []
    for j in range(1, F.shape.part(1) + 1):
        col = list(F.column(j))
        want = sorted([e for e in col if e <= k]) + sorted([e for e in col if e > k])
        if want != col:
            index = {v: i for i, v in enumerate(col)}
            word = [index[v] for v in want]
            seen = [False] * len(word)
            for i in range(len(word)):
                if seen[i]:
                    continue
                j2, length = i, 0
                while not seen[j2]:
                    seen[j2] = True
                    j2 = word[j2]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        cols.append(want)
    return sign, YoungTableau(_columns_to_rows(cols))


def _split_violation(F: YoungTableau, k: int) -> int | None:
    """Leftmost column whose count of distinguished entries grows rightward."""
    ncols = F.shape.part(1)
    counts = [sum(1 for e in F.column(j) if e <= k) for j in range(1, ncols + 1)]
    for i in range(len(counts) - 1):
        if counts[i] < counts[i + 1]:
            return i + 1
    return None


def _exchange_representatives(
    X: Sequence[int], Y: Sequence[int], n: int
) -> Iterable[tuple[Permutation, int]]:
    """Order-preserving coset representatives swapping part of X with part of Y.

    Yields every nonidentity representative of the cosets of S_X x S_Y in
    S_{X u Y}: choose equal-sized subsets to trade, map order-preservingly.
    """
    xs, ys = sorted(X), sorted(Y)
    for s in range(1, min(len(xs), len(ys)) + 1):
        for xsub in itertools.combinations(xs, s):
            for ysub in itertools.combinations(ys, s):
                new_x = sorted(set(xs) - set(xsub) | set(ysub))
                new_y = sorted(set(ys) - set(ysub) | set(xsub))
                w = list(range(n))
                for src, dst in zip(xs, new_x):
                    w[src - 1] = dst - 1
                for src, dst in zip(ys, new_y):
                    w[src - 1] = dst - 1
                p = _intern(tuple(w))
                yield p, p.sign()


def straighten(F: YoungTableau, k: int) -> list[tuple[Coeff, YoungTableau]]:
    """Rewrite a filling as split fillings: entries <= k forming a diagram.

    Returns pairs (coeff, H) with realize(F) = sum coeff * realize(H); every
    H is column sorted, its distinguished entries form a subdiagram, and no
    distinguished entry ever moves right of where F put it.
    """
    n = F.size
    if F.entries != frozenset(range(1, n + 1)):
        raise ValueError("straightening needs a filling by exactly {1..n}")
    out: dict[YoungTableau, Coeff] = {}
    work: list[tuple[Coeff, YoungTableau]] = [(1, F)]
    while work:
        c, cur = work.pop()
        sign, cur = _column_sorted_with_sign(cur, k)
        c = normalize_coeff(c * sign)
        i = _split_violation(cur, k)
        if i is None:
            prev = out.get(cur, 0)
            out[cur] = normalize_coeff(prev + c)
            continue
        X = [e for e in cur.column(i) if e > k]
        Y = [e for e in cur.column(i + 1) if e <= k]
        for tau, sgn in _exchange_representatives(X, Y, n):
            work.append((normalize_coeff(-c * sgn), cur.relabel(tau)))
    return [(c, H) for H, c in out.items() if c]


# -- membership certificates ---------------------------------------------------


@dataclass(frozen=True)
class Summand:
    """One term of a certificate: left * (realize(generator) star right)."""

    left: AlgebraElement
    generator: YoungTableau
    right: Permutation

    def scaled(self, c: Coeff) -> "Summand":
        return Summand(self.left.scale(c), self.generator, self.right)


def _split_shape(F: YoungTableau, k: int) -> Partition:
    """The shape of the cells holding 1..k, which must form a diagram."""
    cells = set(F.position(i) for i in range(1, k + 1))

    def offending() -> tuple[int, int]:
        for cell in sorted(cells):
            i, j = cell
            if (j > 1 and (i, j - 1) not in cells) or (i > 1 and (i - 1, j) not in cells):
                return cell
        return min(cells)

    rowlens: dict[int, int] = {}
    for (i, _j) in cells:
        rowlens[i] = rowlens.get(i, 0) + 1
    parts = [rowlens.get(i, 0) for i in range(1, max(rowlens, default=0) + 1)]
    try:
        mu = Partition(parts)
    except ValueError:
        raise ValueError(
            f"entries 1..{k} of {F} do not fill a diagram (cell {offending()})"
        ) from None
    expected = set()
    for i, p in enumerate(mu.parts, start=1):
        for j in range(1, p + 1):
            expected.add((i, j))
    if cells != expected:
        raise ValueError(
            f"entries 1..{k} of {F} do not fill a diagram (cell {offending()})"
        )
    return mu


def _twist_filling(F: YoungTableau, T: YoungTableau, sigma: Permutation) -> YoungTableau:
    """The filling whose realization is c(T) * sigma * rho_F."""
    sigma_inv = sigma.inverse()
    rows = []
    for i, row in enumerate(T.rows, start=1):
        out = []
        for j, tval in enumerate(row, start=1):
            y = T.position(sigma_inv(tval))
            out.append(F.entry(*y))
        rows.append(tuple(out))
    return YoungTableau(rows)


def _left_anchor(F: YoungTableau, k: int, mu: Partition) -> Permutation:
    """The permutation aligning the canonical split realization with F's.

    Sends i <= k to the canonical-tableau entry at the cell the canonical
    mu-tableau gives i, and k+j to the canonical-tableau entry at F's cell
    of k+j.
    """
    n = F.size
    T = YoungTableau.canonical(F.shape)
    Tmu = YoungTableau.canonical(mu)
    word = []
    for i in range(1, k + 1):
        word.append(T.entry(*Tmu.position(i)))
    for j in range(k + 1, n + 1):
        word.append(T.entry(*F.position(j)))
    return Permutation(word)


@dataclass
class Certificate:
    """Witnesses scale * [target] = sum left * ([generator] star right)."""

    degree: int
    cutoff: int
    scale: Coeff
    target: YoungTableau
    summands: tuple[Summand, ...]

    def generator_fillings(self) -> list[YoungTableau]:
        seen = []
        for s in self.summands:
            if s.generator not in seen:
                seen.append(s.generator)
        return seen

    def _grouped(self) -> dict[tuple[YoungTableau, Permutation], AlgebraElement]:
        grouped: dict[tuple[YoungTableau, Permutation], AlgebraElement] = {}
        for s in self.summands:
            key = (s.generator, s.right)
            if key in grouped:
                grouped[key] = grouped[key] + s.left
            else:
                grouped[key] = s.left
        return grouped

    def verify(self) -> bool:
        lhs = realize_tabloid(self.target).value.scale(self.scale)
        rhs = AlgebraElement.zero(self.degree)
        for (gen, right), left in self._grouped().items():
            piece = star_algebra(realize_tabloid(gen).value, AlgebraElement.from_perm(right))
            rhs = rhs + left * piece
        return lhs == rhs

    def verify_symmetrizer_form(self) -> bool:
        """The same identity with generators kept as whole symmetrizers.

        Writes each summand as left * (c(canonical) star 1) * word, so the
        target symmetrizer visibly lies in the right ideal the generator
        symmetrizers span.
        """
        target_tab = Tabloid(self.target)
        lhs = (
            young_symmetrizer(YoungTableau.canonical(self.target.shape), self.degree).c
            * target_tab.realization_word()
        ).scale(self.scale)
        rhs = AlgebraElement.zero(self.degree)
        for (gen, right), left in self._grouped().items():
            delta = gen.shape
            c_delta = young_symmetrizer(YoungTableau.canonical(delta), gen.size).c
            rho = Tabloid(gen).realization_word()
            embedded = star_algebra(c_delta, AlgebraElement.unit(self.degree - gen.size))
            word = perm_star(rho, right)
            rhs = rhs + left * (embedded * word)
        return lhs == rhs

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "cutoff": self.cutoff,
            "scale": coeff_to_str(self.scale),
            "target": str(self.target),
            "summands": [
                {
                    "left": s.left.to_json(),
                    "generator": str(s.generator),
                    "right": list(s.right.word),
                }
                for s in self.summands
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Certificate":
        summands = tuple(
            Summand(
                AlgebraElement.from_json(s["left"]),
                YoungTableau.parse(s["generator"]),
                Permutation(s["right"]) if s["right"] else Permutation.identity(0),
            )
            for s in data["summands"]
        )
        return Certificate(
            data["degree"],
            data["cutoff"],
            coeff_from_str(data["scale"]),
            YoungTableau.parse(data["target"]),
            summands,
        )


_EXPAND_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...], int], object] = {}


def _expand_canonical(lam: Partition, mu: Partition, n: int):
    key = (lam.parts, mu.parts, n)
    got = _EXPAND_CACHE.get(key)
    if got is None:
        T = YoungTableau.canonical(lam)
        got = expand_product(T, T.restrict(mu), n)
        if len(_EXPAND_CACHE) > 1024:
            _EXPAND_CACHE.clear()
        _EXPAND_CACHE[key] = got
    return got


def membership_certificate(F: YoungTableau, k: int) -> Certificate:
    """Express the tabloid of F inside the ideal of its split generators.

    Requires the entries 1..k of F to fill a subdiagram.  The certificate
    scale is the hook product of that subdiagram; the generators are
    restrictions of split fillings dominating F's, so every generator
    tabloid uses the entries 1..k only.
    """
    n = F.size
    if F.entries != frozenset(range(1, n + 1)):
        raise ValueError("filling must use exactly {1..n}")
    if not (1 <= k <= n):
        raise ValueError(f"cutoff {k} out of range 1..{n}")
    mu = _split_shape(F, k)
    memo: dict[tuple, tuple[Summand, ...]] = {}
    summands = _certificate_summands(F, k, memo)
    return Certificate(n, k, mu.hook_product(), F, summands)


def _certificate_summands(
    F: YoungTableau, k: int, memo: dict
) -> tuple[Summand, ...]:
    """Summands expressing hook_product(mu) * [F] with mu the split shape."""
    key = F.rows
    cached = memo.get(key)
    if cached is not None:
        return cached
    n = F.size
    mu = _split_shape(F, k)
    lam = F.shape
    T = YoungTableau.canonical(lam)
    gen0 = F.restrict(mu)
    if k == n:
        result = (
            Summand(
                AlgebraElement.unit(n).scale(mu.hook_product()),
                F,
                Permutation.identity(0),
            ),
        )
        memo[key] = result
        return result
    cT = young_symmetrizer(T, n).c
    anchor = _left_anchor(F, k, mu)
    collected: list[Summand] = [Summand(cT * anchor, gen0, Permutation.identity(n - k))]
    expansion = _expand_canonical(lam, mu, n)
    for sigma, m in expansion.element.items():
        if sigma.is_identity():
            continue
        G = _twist_filling(F, T, sigma)
        for d, H in straighten(G, k):
            delta = _split_shape(H, k)
            sub = _certificate_summands(H, k, memo)
            factor = normalize_coeff(Fraction(-1) * m * d / delta.hook_product())
            for s in sub:
                collected.append(s.scaled(factor))
    merged: dict[tuple[YoungTableau, Permutation], AlgebraElement] = {}
    order: list[tuple[YoungTableau, Permutation]] = []
    for s in collected:
        key2 = (s.generator, s.right)
        if key2 in merged:
            merged[key2] = merged[key2] + s.left
        else:
            merged[key2] = s.left
            order.append(key2)
    result = tuple(
        Summand(merged[key2], key2[0], key2[1]) for key2 in order if merged[key2]
    )
    memo[key] = result
    return result


# -- partial symmetrization -----------------------------------------------------


def _project_word(w: tuple[int, ...], d: int) -> tuple[tuple[int, ...], ...]:
    """Canonical block partition of a 0-based word: sorted blocks of size d."""
    return tuple(
        sorted(tuple(sorted(v + 1 for v in w[i : i + d])) for i in range(0, len(w), d))
    )


class SymElement:
    """An element of the partially symmetrized algebra in one degree.

    Basis monomials are partitions of {1..degree} into blocks of size d,
    kept as a sorted tuple of sorted tuples.  The letters inside a block
    commute, and so do the blocks.
    """

    __slots__ = ("degree", "d", "terms")

    def __init__(self, degree: int, d: int, terms: dict | None = None):
        if d < 1 or degree % d:
            raise ValueError(f"degree {degree} not divisible by block size {d}")
        self.degree = degree
        self.d = d
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = normalize_coeff(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def _make(cls, degree: int, d: int, terms: dict) -> "SymElement":
        el = object.__new__(cls)
        el.degree = degree
        el.d = d
        el.terms = terms
        return el

    @staticmethod
    def zero(degree: int, d: int) -> "SymElement":
        return SymElement(degree, d, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymElement)
            and self.degree == other.degree
            and self.d == other.d
            and self.terms == other.terms
        )

    def __add__(self, other: "SymElement") -> "SymElement":
        if (self.degree, self.d) != (other.degree, other.d):
            raise ValueError("degree/block mismatch")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            s = acc.get(key, 0) + c
            if s:
                acc[key] = normalize_coeff(s)
            else:
                acc.pop(key, None)
        return SymElement._make(self.degree, self.d, acc)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c: Coeff) -> "SymElement":
        c = normalize_coeff(c)
        if not c:
            return SymElement.zero(self.degree, self.d)
        return SymElement._make(
            self.degree, self.d, {k: normalize_coeff(v * c) for k, v in self.terms.items()}
        )

    def star(self, other: "SymElement") -> "SymElement":
        """Product: concatenate block partitions, shifting the other's letters."""
        if self.d != other.d:
            raise ValueError("block size mismatch")
        shift = self.degree
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                shifted = tuple(tuple(v + shift for v in blk) for blk in k2)
                key = tuple(sorted(k1 + shifted))
                s = acc.get(key, 0) + c1 * c2
                if s:
                    acc[key] = normalize_coeff(s)
                else:
                    acc.pop(key, None)
        return SymElement._make(self.degree + other.degree, self.d, acc)

    def act(self, f) -> "SymElement":
        """Left action by relabeling letters; no signs are involved."""
        if isinstance(f, Permutation):
            f = AlgebraElement.from_perm(f)
        acc: dict = {}
        for p, cp in f.items():
            pw = p.w
            for key, c in self.terms.items():
                moved = tuple(
                    sorted(tuple(sorted(pw[v - 1] + 1 for v in blk)) for blk in key)
                )
                s = acc.get(moved, 0) + cp * c
                if s:
                    acc[moved] = normalize_coeff(s)
                else:
                    acc.pop(moved, None)
        return SymElement._make(self.degree, self.d, acc)

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymElement(deg {self.degree}, d={self.d}, 0)"
        bits = []
        for key, c in sorted(self.terms.items()):
            mono = "".join("{" + ",".join(map(str, blk)) + "}" for blk in key)
            bits.append(f"{coeff_to_str(c)}*{mono}")
            if len(bits) == 4 and len(self.terms) > 4:
                bits.append(f"... {len(self.terms)} terms")
                break
        return f"SymElement(deg {self.degree}, d={self.d}, " + " + ".join(bits) + ")"


def project_sym(x: TensorElement | AlgebraElement, d: int) -> SymElement:
    """Collapse each tensor monomial onto its block partition."""
    value = x.value if isinstance(x, TensorElement) else x
    if value.degree % d:
        raise ValueError(f"degree {value.degree} not divisible by {d}")
    acc: dict = {}
    for p, c in value.items():
        key = _project_word(p.w, d)
        s = acc.get(key, 0) + c
        if s:
            acc[key] = normalize_coeff(s)
        else:
            acc.pop(key, None)
    return SymElement._make(value.degree, d, acc)


# -- d-regular fillings and their tabloids ---------------------------------------


class DnFilling:
    """A filling of a diagram by {1..n} in which every label appears d times."""

    __slots__ = ("rows", "d", "n", "shape")

    def __init__(self, rows: Iterable[Iterable[int]], d: int):
        rws = tuple(tuple(int(e) for e in row) for row in rows)
        shape = Partition(len(r) for r in rws)
        counts: dict[int, int] = {}
        for row in rws:
            for e in row:
                counts[e] = counts.get(e, 0) + 1
        if not counts:
            raise ValueError("empty filling")
        n = max(counts)
        if set(counts) != set(range(1, n + 1)) or any(c != d for c in counts.values()):
            raise ValueError(f"every label of 1..{n} must appear exactly {d} times")
        self.rows = rws
        self.d = d
        self.n = n
        self.shape = shape

    @property
    def degree(self) -> int:
        return self.shape.n

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.shape.part(1) + 1)]

    def has_column_repeat(self) -> bool:
        return any(len(set(c)) != len(c) for c in self.columns())

    def relabel(self, sigma: Permutation) -> "DnFilling":
        return DnFilling(
            (tuple(sigma(e) for e in row) for row in self.rows), self.d
        )

    def canonical(self) -> "DnFilling":
        """Sort within columns, then sort equal-height column runs."""
        cols = [tuple(sorted(c)) for c in self.columns()]
        by_height: dict[int, list] = {}
        for c in cols:
            by_height.setdefault(len(c), []).append(c)
        ordered: list[tuple[int, ...]] = []
        for h in sorted(by_height, reverse=True):
            ordered.extend(sorted(by_height[h]))
        return DnFilling(_columns_to_rows(ordered), self.d)

    def lift(self) -> YoungTableau:
        """A bijective filling inducing this one: label i becomes d(i-1)+1..di.

        Cells of each fiber are numbered in reading order.
        """
        assign: dict[tuple[int, int], int] = {}
        counters = {i: 0 for i in range(1, self.n + 1)}
        for i, row in enumerate(self.rows, start=1):
            for j, e in enumerate(row, start=1):
                counters[e] += 1
                assign[(i, j)] = self.d * (e - 1) + counters[e]
        rows = tuple(
            tuple(assign[(i, j)] for j in range(1, len(row) + 1))
            for i, row in enumerate(self.rows, start=1)
        )
        return YoungTableau(rows)

    def realize(self) -> SymElement:
        """The symmetrized realization; zero when a column repeats a label.

        Fuses the row-group summation with the block projection so the full
        bijective realization is never materialized.
        """
        lifted = self.lift()
        nd = self.degree
        T = YoungTableau.canonical(self.shape)
        triple = young_symmetrizer(T, nd)
        rho = Tabloid(lifted).realization_word()
        seed = triple.b_part * rho
        seed_items = [(q.w, c) for q, c in seed.items()]
        d = self.d
        acc: dict = {}
        for p in triple.a_part.support():
            getter = p.w.__getitem__
            for qw, c in seed_items:
                w = tuple(map(getter, qw))
                key = tuple(
                    sorted(
                        tuple(sorted(v + 1 for v in w[i : i + d]))
                        for i in range(0, nd, d)
                    )
                )
                s = acc.get(key, 0) + c
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return SymElement._make(nd, d, {k: normalize_coeff(v) for k, v in acc.items() if v})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DnFilling)
            and self.d == other.d
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.d))

    def __str__(self) -> str:
        return "/".join(",".join(str(e) for e in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"DnFilling({self}, d={self.d})"

    @staticmethod
    def parse(text: str, d: int) -> "DnFilling":
        rows = [
            [int(t) for t in row.split(",") if t.strip()]
            for row in text.strip().split("/")
        ]
        return DnFilling(rows, d)


def realize_dn_tabloid(F: DnFilling) -> SymElement:
    return F.realize()


# -- graphs and their covariant tabloids -----------------------------------------


@dataclass(frozen=True)
class MultiGraph:
    """A multigraph on vertices {1..n} with a degree bound."""

    n: int
    d: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (x, y) in self.edges:
            if not (1 <= x < y <= self.n):
                raise ValueError(f"bad edge ({x},{y}) on {self.n} vertices")
        for v in range(1, self.n + 1):
            if self.degree_of(v) > self.d:
                raise ValueError(
                    f"vertex {v} has degree {self.degree_of(v)} > bound {self.d}"
                )

    @staticmethod
    def make(n: int, d: int, edges: Iterable[Iterable[int]]) -> "MultiGraph":
        normed = tuple(sorted(tuple(sorted(e)) for e in edges))
        return MultiGraph(n, d, normed)

    def degree_of(self, v: int) -> int:
        return sum(1 for (x, y) in self.edges if v in (x, y))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        es = " ".join(f"{x}-{y}" for (x, y) in self.edges)
        return f"n={self.n} d={self.d}; {es}".rstrip("; ")

    @staticmethod
    def parse(text: str) -> "MultiGraph":
        body = text.strip()
        if ";" in body:
            head, tail = body.split(";", 1)
        else:
            head, tail = body, ""
        n = d = None
        for tok in head.split():
            if tok.startswith("n="):
                n = int(tok[2:])
            elif tok.startswith("d="):
                d = int(tok[2:])
            else:
                raise ValueError(f"unexpected token {tok!r} in graph header")
        if n is None or d is None:
            raise ValueError("graph header must set n= and d=")
        edges = []
        for tok in tail.split():
            x, y = tok.split("-")
            edges.append((int(x), int(y)))
        return MultiGraph.make(n, d, edges)


def graph_tabloid(Q: MultiGraph) -> DnFilling:
    """The two-row tabloid of a graph: one height-2 column per edge.

    The shape is (n*d - e, e); the remaining width-one columns repeat each
    vertex until it appears d times.
    """
    n, d, e = Q.n, Q.d, Q.edge_count
    if n * d - e < e:
        raise ValueError(f"too many edges ({e}) for a two-row shape at n={n}, d={d}")
    top, bottom = [], []
    for (x, y) in Q.edges:
        top.append(x)
        bottom.append(y)
    singles = []
    for v in range(1, n + 1):
        singles.extend([v] * (d - Q.degree_of(v)))
    rows = [top + sorted(singles)]
    if bottom:
        rows.append(bottom)
    return DnFilling(rows, d)


def graphs_containing(
    base: MultiGraph, max_edges: int
) -> list[MultiGraph]:
    """All multigraphs on base's vertices containing it, up to an edge count.

    Respects the degree bound of the base graph.
    """
    pairs = [(x, y) for x in range(1, base.n + 1) for y in range(x + 1, base.n + 1)]
    out = []
    seen = set()
    for extra in range(0, max_edges - base.edge_count + 1):
        for combo in itertools.combinations_with_replacement(pairs, extra):
            edges = tuple(sorted(base.edges + combo))
            if edges in seen:
                continue
            seen.add(edges)
            try:
                out.append(MultiGraph(base.n, base.d, edges))
            except ValueError:
                continue
    return out


# -- certificates in the symmetrized algebra -------------------------------------


@dataclass(frozen=True)
class DnSummand:
    left: AlgebraElement
    generator: DnFilling
    right: Permutation


@dataclass
class DnCertificate:
    """A membership certificate pushed through the block projection."""

    degree: int
    d: int
    cutoff: int
    scale: Coeff
    target: DnFilling
    summands: tuple[DnSummand, ...]
    lifted: Certificate

    def verify(self) -> bool:
        """Check the identity entirely inside the symmetrized algebra."""
        d = self.d
        lhs = self.target.realize().scale(self.scale)
        rhs = SymElement.zero(self.degree, d)
        gen_cache: dict[DnFilling, SymElement] = {}
        for s in self.summands:
            gen_real = gen_cache.get(s.generator)
            if gen_real is None:
                gen_real = s.generator.realize()
                gen_cache[s.generator] = gen_real
            right_sym = SymElement(
                s.right.degree,
                d,
                {_project_word(s.right.w, d): 1},
            ) if s.right.degree else SymElement(0, d, {(): 1})
            rhs = rhs + gen_real.star(right_sym).act(s.left)
        return lhs == rhs

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "d": self.d,
            "cutoff": self.cutoff,
            "scale": coeff_to_str(self.scale),
            "target": str(self.target),
            "summands": [
                {
                    "left": s.left.to_json(),
                    "generator": str(s.generator),
                    "right": list(s.right.word),
                }
                for s in self.summands
            ],
        }


def _push_filling(gen: YoungTableau, d: int) -> DnFilling:
    """Collapse a bijective filling to block labels: value v becomes ceil(v/d)."""
    return DnFilling(
        (tuple((e - 1) // d + 1 for e in row) for row in gen.rows), d
    )


def symmetrized_membership_certificate(F: DnFilling, k: int) -> DnCertificate:
    """Certificate for a d-regular tabloid: lift, certify, project.

    Requires the cells labeled 1..k to fill a subdiagram.  Generators are
    d-regular fillings on the labels 1..k.
    """
    if not (1 <= k <= F.n):
        raise ValueError(f"cutoff {k} out of range 1..{F.n}")
    lifted = F.lift()
    base = membership_certificate(lifted, k * F.d)
    summands = tuple(
        DnSummand(s.left, _push_filling(s.generator, F.d), s.right)
        for s in base.summands
    )
    return DnCertificate(F.degree, F.d, k, base.scale, F, summands, base)
