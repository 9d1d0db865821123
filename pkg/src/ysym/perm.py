"""Permutations of {1..n} with composition, sign, cycles and the star product.

A permutation is stored in one-line word form.  Internally the word is a
0-based tuple ``w`` with ``w[i] = sigma(i+1) - 1``; the public ``word``
property is the usual 1-based one-line form.  Instances are interned, so
equal permutations are the same object and hashing is a precomputed int.

Degrees are explicit everywhere: there is no implicit embedding of S_k into
S_n.  Use :meth:`Permutation.pad` or :func:`star` to change degree.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

_POOL: dict[tuple[int, ...], "Permutation"] = {}


def _intern(w: tuple[int, ...]) -> "Permutation":
    p = _POOL.get(w)
    if p is None:
        p = object.__new__(Permutation)
        p.w = w
        p._hash = hash(w)
        _POOL[w] = p
    return p


def _parity_of_word(w: Sequence[int]) -> int:
    """Sign of the permutation given by a 0-based word, via cycle traversal."""
    n = len(w)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class Permutation:
    """A bijection of {1..n}; the atom all the algebra is built on."""

    __slots__ = ("w", "_hash")

    w: tuple[int, ...]
    _hash: int

    def __new__(cls, word: Iterable[int]) -> "Permutation":
        w = tuple(v - 1 for v in word)
        n = len(w)
        if sorted(w) != list(range(n)):
            raise ValueError(f"not a one-line word of {{1..{n}}}: {list(word)}")
        return _intern(w)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Permutation":
        if n < 0:
            raise ValueError("degree must be >= 0")
        return _intern(tuple(range(n)))

    @staticmethod
    def transposition(a: int, b: int, n: int) -> "Permutation":
        if a == b:
            raise ValueError("transposition needs two distinct entries")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"entries {a},{b} out of range for degree {n}")
        w = list(range(n))
        w[a - 1], w[b - 1] = b - 1, a - 1
        return _intern(tuple(w))

    @staticmethod
    def cycle(a: int, bs: Sequence[int], n: int) -> "Permutation":
        """The cyclic permutation (a, b_r, ..., b_1) for bs = [b_1, ..., b_r].

        Equals the product of transpositions (a,b_1)(a,b_2)...(a,b_r),
        composed left to right.  With bs empty this is the identity.
        """
        entries = [a, *bs]
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated entry in cycle {entries}")
        if any(not (1 <= e <= n) for e in entries):
            raise ValueError(f"cycle entries {entries} out of range for degree {n}")
        w = list(range(n))
        # a -> b_r -> b_{r-1} -> ... -> b_1 -> a
        ring = [a] + list(reversed(bs))
        for src, dst in zip(ring, ring[1:] + ring[:1]):
            w[src - 1] = dst - 1
        return _intern(tuple(w))

    @staticmethod
    def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        w = list(range(n))
        used: set[int] = set()
        for cyc in cycles:
            for e in cyc:
                if e in used:
                    raise ValueError(f"entry {e} appears in two cycles")
                if not (1 <= e <= n):
                    raise ValueError(f"entry {e} out of range for degree {n}")
                used.add(e)
            for src, dst in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                w[src - 1] = dst - 1
        return _intern(tuple(w))

    # -- basic protocol ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.w)

    @property
    def word(self) -> tuple[int, ...]:
        """One-line form: position i holds sigma(i), 1-based."""
        return tuple(v + 1 for v in self.w)

    def __call__(self, i: int) -> int:
        return self.w[i - 1] + 1

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, Permutation) and self.w == other.w)

    def __lt__(self, other: "Permutation") -> bool:
        return self.w < other.w

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"

    def __str__(self) -> str:
        return self.cycle_string()

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(i) = p(q(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.w) != len(other.w):
            raise ValueError(
                f"degree mismatch: {len(self.w)} vs {len(other.w)}"
            )
        pw = self.w
        return _intern(tuple(map(pw.__getitem__, other.w)))

    def inverse(self) -> "Permutation":
        w = self.w
        inv = [0] * len(w)
        for i, v in enumerate(w):
            inv[v] = i
        return _intern(tuple(inv))

    def sign(self) -> int:
        return _parity_of_word(self.w)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.w))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least entry, sorted by it."""
        w = self.w
        seen = [False] * len(w)
        out = []
        for i in range(len(w)):
            if seen[i]:
                continue
            cyc = [i + 1]
            seen[i] = True
            j = w[i]
            while j != i:
                seen[j] = True
                cyc.append(j + 1)
                j = w[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def moved_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self.w) if v != i)

    def pad(self, n: int) -> "Permutation":
        """Embed into S_n fixing every new point."""
        if n < len(self.w):
            raise ValueError(f"cannot pad degree {len(self.w)} down to {n}")
        return _intern(self.w + tuple(range(len(self.w), n)))

    # -- text formats ------------------------------------------------------

    def one_line(self) -> str:
        return "[" + ",".join(str(v) for v in self.word) + "]"

    def cycle_string(self) -> str:
        if not self.w:
            return "()"
        cycs = self.cycles(include_fixed=True)
        return "".join("(" + " ".join(str(e) for e in c) + ")" for c in cycs)

    @staticmethod
    def from_one_line(text: str) -> "Permutation":
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"not a one-line form: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return Permutation.identity(0)
        return Permutation(int(t) for t in body.split(","))

    @staticmethod
    def from_cycle_string(text: str, n: int | None = None) -> "Permutation":
        """Parse "(1 2)(3)"; degree defaults to the largest entry present."""
        s = text.strip().replace(",", " ")
        if s == "()":
            return Permutation.identity(n or 0)
        parts = re.findall(r"\(([^()]*)\)", s)
        if not parts or re.sub(r"\([^()]*\)", "", s).strip():
            raise ValueError(f"not a cycle form: {text!r}")
        cycles = [tuple(int(t) for t in p.split()) for p in parts]
        entries = [e for c in cycles for e in c]
        if not entries:
            raise ValueError(f"not a cycle form: {text!r}")
        deg = n if n is not None else max(entries)
        return Permutation.from_cycles(cycles, deg)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """compose(p, q)(i) = p(q(i))."""
    return p * q


def star(p: Permutation, q: Permutation) -> Permutation:
    """Degree-graded concatenation: S_n x S_m -> S_{n+m}.

    The first n points follow p; the remaining m points follow q shifted
    up by n.
    """
    n = len(p.w)
    return _intern(p.w + tuple(n + v for v in q.w))


def all_permutations(n: int):
    """All of S_n in lexicographic one-line order."""
    import itertools

    for w in itertools.permutations(range(n)):
        yield _intern(w)
