"""Three-term tropical Pluecker relations, Dressian membership, signatures.

A relation is indexed by a (k-2)-subset A and a 4-element quad (i,j,k,l)
disjoint from it; its three terms pair the subsets {Aij,Akl}, {Aik,Ajl},
{Ail,Ajk}.  A weight vector is a tropical Pluecker vector when, in every
relation, the minimum of the three term sums is attained at least twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import MembershipError, ParameterError
from .subsets import KSubset, WeightVector

#: tie-pattern codes: all three equal, or the strictly smaller tied pair
PATTERNS = ("E", "a", "b", "c")
_PAIR_OF = {"a": (0, 1), "b": (0, 2), "c": (1, 2)}


@dataclass(frozen=True, order=True)
class ThreeTermRelation:
    """One three-term relation of Dr(k, n)."""

    A: tuple[int, ...]
    quad: tuple[int, ...]
    k: int
    n: int

    def __post_init__(self):
        if len(self.quad) != 4 or list(self.quad) != sorted(set(self.quad)):
            raise ParameterError(f"quad must be 4 sorted distinct ints: {self.quad}")
        if set(self.A) & set(self.quad):
            raise ParameterError("A and quad must be disjoint")
        if len(self.A) != self.k - 2:
            raise ParameterError("A must have size k-2")

    def term_subsets(self) -> list[tuple[KSubset, KSubset]]:
        """The three pairs of k-subsets, in the fixed term order."""
        i, j, kk, ll = self.quad
        mk = lambda *xs: KSubset(tuple(sorted(self.A + xs)), self.n)
        return [
            (mk(i, j), mk(kk, ll)),
            (mk(i, kk), mk(j, ll)),
            (mk(i, ll), mk(j, kk)),
        ]

    def __str__(self):
        a = ",".join(map(str, self.A)) or "-"
        return f"[A={a}|{''.join(map(str, self.quad))}]"


def enumerate_relations(k: int, n: int) -> list[ThreeTermRelation]:
    """All relations of Dr(k, n), A lex-ordered then quad lex-ordered.

    Empty when n - k < 2 or k < 2 (no relation exists).
    """
    if not (0 < k <= n):
        raise ParameterError(f"need 0 < k <= n, got k={k}, n={n}")
    if k < 2 or n - k < 2:
        return []
    out = []
    ground = range(1, n + 1)
    for A in combinations(ground, k - 2):
        rest = [x for x in ground if x not in A]
        for quad in combinations(rest, 4):
            out.append(ThreeTermRelation(A, quad, k, n))
    assert len(out) == comb(n, k - 2) * comb(n - k + 2, 4)
    return out


def relation_values(w: WeightVector, r: ThreeTermRelation):
    """The three term sums of the relation at w, in the fixed term order."""
    if (r.k, r.n) != (w.k, w.n):
        raise ParameterError("relation does not match the weight's (k, n)")
    return tuple(w(s) + w(t) for s, t in r.term_subsets())


def _tie_pattern(values):
    """Pattern code for a value triple, or None if the minimum is unique."""
    lo = min(values)
    tied = [i for i, v in enumerate(values) if v == lo]
    if len(tied) == 3:
        return "E"
    if len(tied) == 2:
        return {(0, 1): "a", (0, 2): "b", (1, 2): "c"}[tuple(tied)]
    return None


def is_in_dressian(w: WeightVector, relations=None):
    """(membership, first failing relation or None)."""
    if relations is None:
        relations = enumerate_relations(w.k, w.n)
    for r in relations:
        if _tie_pattern(relation_values(w, r)) is None:
            return False, r
    return True, None


class ConeSignature:
    """Per-relation tie patterns identifying a Pluecker-fan cone.

    Serialized as one character per relation, relations in
    ``enumerate_relations`` order: 'E' for a triple tie, 'a'/'b'/'c' for the
    strictly smaller tied pair in the fixed term order.
    """

    __slots__ = ("k", "n", "codes")

    def __init__(self, k: int, n: int, codes: str):
        relations = enumerate_relations(k, n)
        if len(codes) != len(relations):
            raise ParameterError(
                f"signature length {len(codes)} != {len(relations)} relations")
        if any(c not in PATTERNS for c in codes):
            raise ParameterError(f"invalid signature characters in {codes!r}")
        self.k, self.n, self.codes = k, n, codes

    def pattern(self, index: int) -> str:
        return self.codes[index]

    def tied_pair(self, index: int):
        """Indices of the tied terms for a pair pattern, or None for 'E'."""
        c = self.codes[index]
        return None if c == "E" else _PAIR_OF[c]

    def __eq__(self, other):
        return (isinstance(other, ConeSignature)
                and (self.k, self.n, self.codes) == (other.k, other.n, other.codes))

    def __hash__(self):
        return hash((self.k, self.n, self.codes))

    def __str__(self):
        return self.codes

    def __repr__(self):
        return f"ConeSignature({self.k},{self.n},{self.codes!r})"


def cone_signature(w: WeightVector, relations=None) -> ConeSignature:
    """Tie pattern of every relation at w; raises MembershipError off the Dressian."""
    if relations is None:
        relations = enumerate_relations(w.k, w.n)
    codes = []
    for r in relations:
        p = _tie_pattern(relation_values(w, r))
        if p is None:
            raise MembershipError(f"not a tropical Pluecker vector, fails {r}", r)
        codes.append(p)
    return ConeSignature(w.k, w.n, "".join(codes))
