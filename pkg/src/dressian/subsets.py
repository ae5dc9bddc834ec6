"""k-subsets of [n], weight vectors over them, and lineality normalization.

All arithmetic is exact: weights are ``fractions.Fraction`` values.  Subsets
are canonical sorted tuples of integers in 1..n and every ordered listing in
the package is lexicographic on those tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import ParameterError


@dataclass(frozen=True, order=True)
class KSubset:
    """A k-element subset of [n], stored as a strictly increasing tuple."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        elems = tuple(self.elements)
        if list(elems) != sorted(set(elems)):
            raise ParameterError(f"elements must be strictly increasing: {elems}")
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise ParameterError(f"elements out of range 1..{self.n}: {elems}")
        object.__setattr__(self, "elements", elems)

    @property
    def k(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def __iter__(self):
        return iter(self.elements)

    def union(self, *extra: int) -> "KSubset":
        return KSubset(tuple(sorted(self.elements + extra)), self.n)

    def incidence(self) -> tuple[int, ...]:
        """0/1 vector of length n marking the elements."""
        s = set(self.elements)
        return tuple(1 if i in s else 0 for i in range(1, self.n + 1))

    def __str__(self):
        return "".join(str(i) for i in self.elements) if self.n < 10 else \
            "{" + ",".join(str(i) for i in self.elements) + "}"


def enumerate_ksubsets(k: int, n: int) -> list[KSubset]:
    """All k-subsets of [n] in lexicographic order on sorted element tuples."""
    if not (0 < k <= n):
        raise ParameterError(f"need 0 < k <= n, got k={k}, n={n}")
    return [KSubset(c, n) for c in combinations(range(1, n + 1), k)]


class WeightVector:
    """A total map from k-subsets of [n] to exact rationals.

    Candidate tropical Pluecker vector.  Immutable; hashable by content.
    """

    __slots__ = ("k", "n", "_entries")

    def __init__(self, k: int, n: int, entries):
        if not (0 < k <= n):
            raise ParameterError(f"need 0 < k <= n, got k={k}, n={n}")
        self.k = k
        self.n = n
        subsets = enumerate_ksubsets(k, n)
        if isinstance(entries, dict):
            table = {}
            for s in subsets:
                key = s if s in entries else s.elements
                if key not in entries:
                    raise ParameterError(f"missing entry for subset {s}")
                table[s] = Fraction(entries[key])
            if len(entries) != len(subsets):
                raise ParameterError("entries define extra or duplicate subsets")
        else:
            values = list(entries)
            if len(values) != comb(n, k):
                raise ParameterError(
                    f"expected {comb(n, k)} entries for ({k},{n}), got {len(values)}")
            table = {s: Fraction(v) for s, v in zip(subsets, values)}
        self._entries = table

    @classmethod
    def zero(cls, k: int, n: int) -> "WeightVector":
        return cls(k, n, [0] * comb(n, k))

    def __call__(self, subset) -> Fraction:
        if not isinstance(subset, KSubset):
            subset = KSubset(tuple(sorted(subset)), self.n)
        return self._entries[subset]

    def subsets(self) -> list[KSubset]:
        return sorted(self._entries)

    def values(self) -> list[Fraction]:
        """Entry list in lexicographic subset order."""
        return [self._entries[s] for s in sorted(self._entries)]

    def map(self, fn) -> "WeightVector":
        return WeightVector(self.k, self.n,
                            {s: fn(v) for s, v in self._entries.items()})

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if (self.k, self.n) != (other.k, other.n):
            raise ParameterError("mismatched (k, n)")
        return WeightVector(self.k, self.n,
                            {s: v + other._entries[s] for s, v in self._entries.items()})

    def __eq__(self, other):
        return (isinstance(other, WeightVector)
                and (self.k, self.n) == (other.k, other.n)
                and self._entries == other._entries)

    def __hash__(self):
        return hash((self.k, self.n, tuple(self.values())))

    def __repr__(self):
        return f"WeightVector(k={self.k}, n={self.n}, {self.values()})"


def lineality_shift(w: WeightVector, a) -> WeightVector:
    """Add sum(a_i for i in S) to every entry w(S).

    These directions form the lineality space of every fan structure in the
    package: signatures and subdivisions are invariant under them.
    """
    a = [Fraction(x) for x in a]
    if len(a) != w.n:
        raise ParameterError(f"shift vector must have length {w.n}")
    return WeightVector(w.k, w.n,
                        {s: w(s) + sum(a[i - 1] for i in s) for s in w.subsets()})


def _anchor_data(k: int, n: int):
    """Lex-first subsets with linearly independent incidence vectors.

    Returns (anchor subsets, pivot-solved matrix data) used by normalize.
    Computed fresh per call; sizes are tiny.
    """
    from .linalg import rank_profile

    subsets = enumerate_ksubsets(k, n)
    rows = [[Fraction(x) for x in s.incidence()] for s in subsets]
    keep = rank_profile(rows)
    return [subsets[i] for i in keep]


def normalize(w: WeightVector) -> WeightVector:
    """Canonical representative of w modulo the lineality space.

    Subtracts the unique lineality shift that makes w vanish on the lex-first
    spanning anchor family.  Idempotent and constant on lineality orbits.
    """
    from .linalg import solve_underdetermined

    anchors = _anchor_data(w.k, w.n)
    rows = [[Fraction(x) for x in s.incidence()] for s in anchors]
    rhs = [w(s) for s in anchors]
    a = solve_underdetermined(rows, rhs)
    return lineality_shift(w, [-x for x in a])
