"""Sparse exact-rational linear combinations of permutations.

An :class:`AlgebraElement` is the ambient object every identity in this
package is checked in: a finite map from permutations of {1..n} to nonzero
rational coefficients.  All arithmetic is exact; equality is exact map
equality and there is no tolerance parameter anywhere.

Coefficients are stored as ``int`` whenever the denominator is 1 and as
``fractions.Fraction`` otherwise.  Python compares and hashes the two
consistently, and keeping integers unboxed makes the convolution loop much
faster (symmetrizer coefficients are almost always integers).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .perm import Permutation, _intern, all_permutations

Coeff = Union[int, Fraction]


def normalize_coeff(c: Coeff) -> Coeff:
    """Collapse Fractions with denominator 1 to plain ints."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def coeff_to_str(c: Coeff) -> str:
    c = normalize_coeff(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def coeff_from_str(s: str) -> Coeff:
    return normalize_coeff(Fraction(s))


class AlgebraElement:
    """An element of the group algebra of S_n over the rationals."""

    __slots__ = ("degree", "_terms")

    degree: int
    _terms: dict[Permutation, Coeff]

    def __init__(self, degree: int, terms: Mapping[Permutation, Coeff] | None = None):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        clean: dict[Permutation, Coeff] = {}
        if terms:
            for p, c in terms.items():
                if p.degree != degree:
                    raise ValueError(
                        f"term degree {p.degree} does not match element degree {degree}"
                    )
                c = normalize_coeff(c)
                if c:
                    clean[p] = c
        self.degree = degree
        self._terms = clean

    @classmethod
    def _make(cls, degree: int, terms: dict[Permutation, Coeff]) -> "AlgebraElement":
        """Trusted constructor: terms already pruned and degree-checked."""
        el = object.__new__(cls)
        el.degree = degree
        el._terms = terms
        return el

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(degree: int) -> "AlgebraElement":
        return AlgebraElement._make(degree, {})

    @staticmethod
    def unit(degree: int) -> "AlgebraElement":
        return AlgebraElement._make(degree, {Permutation.identity(degree): 1})

    @staticmethod
    def from_perm(p: Permutation, coeff: Coeff = 1) -> "AlgebraElement":
        coeff = normalize_coeff(coeff)
        return AlgebraElement._make(p.degree, {p: coeff} if coeff else {})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset[Permutation]:
        return frozenset(self._terms)

    def coeff(self, p: Permutation) -> Coeff:
        return self._terms.get(p, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        if not self._terms:
            return f"AlgebraElement(S_{self.degree}, 0)"
        bits = []
        for p, c in sorted(self._terms.items(), key=lambda kv: kv[0].w):
            bits.append(f"{coeff_to_str(c)}*{p.cycle_string()}")
            if len(bits) == 6 and len(self._terms) > 6:
                bits.append(f"... {len(self._terms)} terms")
                break
        return f"AlgebraElement(S_{self.degree}, " + " + ".join(bits) + ")"

    # -- linear structure ----------------------------------------------------

    def _check_degree(self, other: "AlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self._terms)
        for p, c in other._terms.items():
            s = acc.get(p, 0) + c
            if s:
                acc[p] = normalize_coeff(s)
            else:
                acc.pop(p, None)
        return AlgebraElement._make(self.degree, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self._terms)
        for p, c in other._terms.items():
            s = acc.get(p, 0) - c
            if s:
                acc[p] = normalize_coeff(s)
            else:
                acc.pop(p, None)
        return AlgebraElement._make(self.degree, acc)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._make(self.degree, {p: -c for p, c in self._terms.items()})

    def scale(self, a: Coeff) -> "AlgebraElement":
        a = normalize_coeff(a)
        if not a:
            return AlgebraElement.zero(self.degree)
        return AlgebraElement._make(
            self.degree,
            {p: normalize_coeff(c * a) for p, c in self._terms.items()},
        )

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check_degree(other)
            return _mul_full(self, other)
        if isinstance(other, Permutation):
            if other.degree != self.degree:
                raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
            qw = other.w
            return AlgebraElement._make(
                self.degree,
                {_intern(tuple(map(p.w.__getitem__, qw))): c for p, c in self._terms.items()},
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, Permutation):
            if other.degree != self.degree:
                raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
            qw = other.w
            return AlgebraElement._make(
                self.degree,
                {_intern(tuple(map(qw.__getitem__, p.w))): c for p, c in self._terms.items()},
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        terms = sorted(self._terms.items(), key=lambda kv: kv[0].word)
        return {
            "degree": self.degree,
            "terms": [
                {"perm": list(p.word), "coeff": coeff_to_str(c)} for p, c in terms
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraElement":
        degree = data["degree"]
        terms: dict[Permutation, Coeff] = {}
        for t in data["terms"]:
            p = Permutation(t["perm"])
            if p in terms:
                raise ValueError(f"duplicate term {t['perm']}")
            terms[p] = coeff_from_str(t["coeff"])
        return AlgebraElement(degree, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @staticmethod
    def loads(s: str) -> "AlgebraElement":
        return AlgebraElement.from_json(json.loads(s))


def _mul_full(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """Convolution product, the hot loop of the whole package.

    Accumulates keyed by raw 0-based words so hashing stays at C speed;
    permutations are re-interned once per distinct result term.
    """
    acc: dict[tuple[int, ...], Coeff] = {}
    gitems = [(q.w, cq) for q, cq in g._terms.items()]
    acc_get = acc.get
    for p, cp in f._terms.items():
        getter = p.w.__getitem__
        for qw, cq in gitems:
            w = tuple(map(getter, qw))
            c = cp * cq
            prev = acc_get(w)
            acc[w] = c if prev is None else prev + c
    terms: dict[Permutation, Coeff] = {}
    for w, c in acc.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            terms[_intern(w)] = c
    return AlgebraElement._make(f.degree, terms)


def linear(a: Coeff, f: AlgebraElement, b: Coeff, g: AlgebraElement) -> AlgebraElement:
    """a*f + b*g with zero terms pruned."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    return f.scale(a) + g.scale(b)


def conjugate(d: Permutation, f: AlgebraElement) -> AlgebraElement:
    """d * f * d^{-1}."""
    if d.degree != f.degree:
        raise ValueError(f"degree mismatch: {d.degree} vs {f.degree}")
    dinv = d.inverse()
    dw, diw = d.w, dinv.w
    terms = {}
    for p, c in f.items():
        pw = p.w
        w = tuple(dw[pw[diw[i]]] for i in range(len(pw)))
        terms[_intern(w)] = c
    return AlgebraElement._make(f.degree, terms)


def _arrangement_parity(values: tuple[int, ...], sorted_values: tuple[int, ...]) -> int:
    """Sign of the permutation taking sorted_values to values positionwise."""
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


def _set_sum(entries: Iterable[int], n: int, signed: bool) -> AlgebraElement:
    import itertools

    xs = tuple(sorted(entries))
    if any(not (1 <= x <= n) for x in xs):
        raise ValueError(f"entries {list(xs)} not contained in {{1..{n}}}")
    if len(set(xs)) != len(xs):
        raise ValueError(f"repeated entry in {list(xs)}")
    base = list(range(n))
    terms: dict[Permutation, Coeff] = {}
    positions = [x - 1 for x in xs]
    for arr in itertools.permutations(xs):
        w = base[:]
        for pos, val in zip(positions, arr):
            w[pos] = val - 1
        coeff = _arrangement_parity(arr, xs) if signed else 1
        terms[_intern(tuple(w))] = coeff
    return AlgebraElement._make(n, terms)


def symmetrize_set(entries: Iterable[int], n: int) -> AlgebraElement:
    """Sum of all permutations of the given entries, fixing the complement."""
    return _set_sum(entries, n, signed=False)


def antisymmetrize_set(entries: Iterable[int], n: int) -> AlgebraElement:
    """Signed sum over all permutations of the given entries."""
    return _set_sum(entries, n, signed=True)


def random_element(n: int, nterms: int, rng, max_num: int = 5) -> AlgebraElement:
    """Small random element, used by property tests."""
    import math

    terms: dict[Permutation, Coeff] = {}
    order = math.factorial(n)
    perms = list(all_permutations(n)) if order <= 720 else None
    for _ in range(nterms):
        if perms is not None:
            p = rng.choice(perms)
        else:
            w = list(range(n))
            rng.shuffle(w)
            p = _intern(tuple(w))
        num = rng.randint(-max_num, max_num)
        den = rng.randint(1, 3)
        c = normalize_coeff(Fraction(num, den))
        if c:
            terms[p] = c
    return AlgebraElement(n, terms)
