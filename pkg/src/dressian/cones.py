"""Pluecker-fan cones: H-descriptions from signatures, maximality, adjacency.

A cone of the Pluecker fan is the set of weights sharing one signature:
equalities where a signature ties terms, strict inequalities where a tied
pair sits strictly below the third term.  Wall crossing works at a facet
relative-interior point: because relation values are linear, the signature
of w_F + eps*u is determined exactly by the values at w_F and their
derivatives along u, so adjacent cones are found by enumerating the
realizable derivative patterns of the relations that tie at the wall.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyConeError, NonMaximalConeError
from .linalg import dot, nullspace, primitive_direction, rank
from .lp import OPTIMAL, linprog_exact
from .relations import (ConeSignature, cone_signature, enumerate_relations,
                        relation_values)
from .subsets import WeightVector, enumerate_ksubsets


def _term_rows(relation, index_of, N):
    """Linear functionals (as length-N rows) of the three term sums."""
    rows = []
    for s, t in relation.term_subsets():
        row = [Fraction(0)] * N
        row[index_of[s.elements]] += 1
        row[index_of[t.elements]] += 1
        rows.append(row)
    return rows


def _signature_rows(k, n, codes, skip=()):
    """(equalities, stricts) for a signature's tie pattern.

    Each strict row r means r.w > 0.  ``stricts`` carries the relation index
    it came from.  Relations in ``skip`` contribute no rows.
    """
    relations = enumerate_relations(k, n)
    subsets = enumerate_ksubsets(k, n)
    index_of = {s.elements: i for i, s in enumerate(subsets)}
    N = len(subsets)
    eqs, stricts = [], []
    for ridx, (rel, code) in enumerate(zip(relations, codes)):
        if ridx in skip:
            continue
        t1, t2, t3 = _term_rows(rel, index_of, N)
        terms = [t1, t2, t3]
        if code == "E":
            eqs.append([a - b for a, b in zip(t1, t2)])
            eqs.append([a - b for a, b in zip(t1, t3)])
        else:
            i, j = {"a": (0, 1), "b": (0, 2), "c": (1, 2)}[code]
            l = 3 - i - j
            eqs.append([a - b for a, b in zip(terms[i], terms[j])])
            stricts.append((ridx, [a - b for a, b in zip(terms[l], terms[i])]))
    return eqs, stricts


def _max_margin(eqs, strict_rows, N):
    """Maximize m subject to eqs.w = 0, r.w >= m for strict rows, m <= 1.

    Returns (m, w) with m in [0, 1]; m > 0 certifies a point making every
    strict row positive (homogeneity then allows any margin).
    """
    A_eq = [row + [Fraction(0)] for row in eqs]
    b_eq = [Fraction(0)] * len(A_eq)
    A_ub = [[-x for x in row] + [Fraction(1)] for row in strict_rows]
    b_ub = [Fraction(0)] * len(A_ub)
    A_ub.append([Fraction(0)] * N + [Fraction(1)])
    b_ub.append(Fraction(1))
    obj = [Fraction(0)] * N + [Fraction(-1)]
    res = linprog_exact(obj, A_ub, b_ub, A_eq, b_eq)
    assert res.status == OPTIMAL  # w = 0, m = 0 is always feasible
    return -res.value, res.x[:N]


@dataclass(frozen=True)
class PlueckerCone:
    signature: ConeSignature
    dimension: int
    interior_point: WeightVector

    @property
    def k(self):
        return self.signature.k

    @property
    def n(self):
        return self.signature.n


def cone_polyhedron(signature: ConeSignature) -> PlueckerCone:
    """Exact H-description data for the cone of a signature."""
    k, n = signature.k, signature.n
    N = len(enumerate_ksubsets(k, n))
    eqs, stricts = _signature_rows(k, n, signature.codes)
    m, w = _max_margin(eqs, [r for _, r in stricts], N)
    if m == 0:
        raise EmptyConeError(f"signature {signature.codes!r} is not realized")
    dim = N - rank(eqs)
    point = WeightVector(k, n, list(w))
    return PlueckerCone(signature, dim, point)


def _refinement_exists(k, n, codes, open_relations):
    """True if some strict refinement of the 'E' codes is realizable."""
    N = len(enumerate_ksubsets(k, n))
    # base rows for the non-open part; open relations are assigned by DFS
    base_eqs, base_stricts = _signature_rows(k, n, codes, skip=open_relations)
    relations = enumerate_relations(k, n)
    subsets = enumerate_ksubsets(k, n)
    index_of = {s.elements: i for i, s in enumerate(subsets)}

    open_list = sorted(open_relations)

    def assign(pos, eqs, stricts, refined):
        if pos == len(open_list):
            if not refined:
                return False
            m, _ = _max_margin(eqs, stricts, N)
            return m > 0
        m, _ = _max_margin(eqs, stricts, N)
        if m == 0:
            return False
        rel = relations[open_list[pos]]
        t1, t2, t3 = _term_rows(rel, index_of, N)
        terms = [t1, t2, t3]
        for code in ("E", "a", "b", "c"):
            if code == "E":
                extra_eqs = [[a - b for a, b in zip(t1, t2)],
                             [a - b for a, b in zip(t1, t3)]]
                if assign(pos + 1, eqs + extra_eqs, stricts, refined):
                    return True
            else:
                i, j = {"a": (0, 1), "b": (0, 2), "c": (1, 2)}[code]
                l = 3 - i - j
                eq = [[a - b for a, b in zip(terms[i], terms[j])]]
                st = [[a - b for a, b in zip(terms[l], terms[i])]]
                if assign(pos + 1, eqs + eq, stricts + st, True):
                    return True
        return False

    return assign(0, base_eqs, [r for _, r in base_stricts], False)


def is_maximal_signature(signature: ConeSignature) -> bool:
    """True iff no realizable strict refinement of the signature exists."""
    cone_polyhedron(signature)  # raises EmptyConeError if unrealizable
    open_relations = {i for i, c in enumerate(signature.codes) if c == "E"}
    if not open_relations:
        return True
    return not _refinement_exists(signature.k, signature.n,
                                  signature.codes, open_relations)


@dataclass(frozen=True)
class FacetCrossing:
    """One facet of a maximal cone and what lies on its other side."""

    wall_point: WeightVector          # relative-interior point of the facet
    wall_relations: tuple             # relation indices that tie on the wall
    representative: WeightVector | None
    signature: ConeSignature | None
    boundary: bool                    # no cone on the other side


def adjacent_cones(w: WeightVector) -> list[FacetCrossing]:
    """All maximal cones sharing a facet with the cone of w."""
    sig = cone_signature(w)
    if not is_maximal_signature(sig):
        raise NonMaximalConeError(
            f"signature {sig.codes!r} does not define a maximal cone")
    k, n = sig.k, sig.n
    relations = enumerate_relations(k, n)
    subsets = enumerate_ksubsets(k, n)
    index_of = {s.elements: i for i, s in enumerate(subsets)}
    N = len(subsets)
    eqs, stricts = _signature_rows(k, n, sig.codes)

    # Work in coordinates on the cone's linear span: strict rows defining
    # the same wall project to the same primitive direction.
    basis = nullspace(eqs, N)
    d = len(basis)
    groups = {}
    for ridx, row in stricts:
        key = tuple(primitive_direction([dot(row, b) for b in basis]))
        groups.setdefault(key, []).append(ridx)

    out = []
    for key in sorted(groups):
        members = groups[key]
        other = [list(map(Fraction, k2)) for k2 in groups if k2 != key]
        m, y = _max_margin([list(map(Fraction, key))], other, d)
        if m == 0:
            continue  # this inequality cuts a lower-dimensional face, not a facet
        x = [sum(yi * b[j] for yi, b in zip(y, basis)) for j in range(N)]
        w_f = WeightVector(k, n, x)
        crossings = _cross_wall(w_f, sig, relations, index_of, N, d)
        wall_rel = tuple(sorted(members))
        if crossings:
            for rep, rep_sig in crossings:
                out.append(FacetCrossing(w_f, wall_rel, rep, rep_sig, False))
        else:
            out.append(FacetCrossing(w_f, wall_rel, None, None, True))
    return out


def _cross_wall(w_f, sig, relations, index_of, N, cone_dim):
    """Maximal cones other than sig's own on the far side of the wall at w_f.

    Enumerates realizable first-order patterns of the relations that triple-
    tie at the wall; relation values are linear, so first order is exact.
    """
    tied_rows = []     # equalities on the direction: keep two-term ties tied
    open_rels = []     # (relation index, full-space term rows)
    for ridx, rel in enumerate(relations):
        vals = relation_values(w_f, rel)
        lo = min(vals)
        tied = [i for i, v in enumerate(vals) if v == lo]
        terms = _term_rows(rel, index_of, N)
        if len(tied) == 3:
            open_rels.append((ridx, terms))
        else:
            i, j = tied
            tied_rows.append([a - b for a, b in zip(terms[i], terms[j])])

    # Directions keeping every 2-tie live in the kernel of the tie rows;
    # run the pattern search in coordinates on that kernel.
    wall_basis = nullspace(tied_rows, N) if tied_rows else \
        [[Fraction(i == j) for j in range(N)] for i in range(N)]
    q = len(wall_basis)
    proj_rels = [(ridx, [[dot(t, b) for b in wall_basis] for t in terms])
                 for ridx, terms in open_rels]

    found = []

    def assign(pos, eqs, stricts, codes):
        if pos == len(proj_rels):
            if [c for _, c in codes] == [sig.codes[r] for r, _ in proj_rels]:
                return  # the original cone's own side
            m, y = _max_margin(eqs, stricts, q)
            if m > 0:
                u = [sum(yi * b[j] for yi, b in zip(y, wall_basis))
                     for j in range(N)]
                found.append((u, dict(codes)))
            return
        m, _ = _max_margin(eqs, stricts, q)
        if m == 0:
            return
        ridx, terms = proj_rels[pos]
        t1, t2, t3 = terms
        for code in ("E", "a", "b", "c"):
            if code == "E":
                extra = [[a - b for a, b in zip(t1, t2)],
                         [a - b for a, b in zip(t1, t3)]]
                assign(pos + 1, eqs + extra, stricts, codes + [(ridx, code)])
            else:
                i, j = {"a": (0, 1), "b": (0, 2), "c": (1, 2)}[code]
                l = 3 - i - j
                eq = [[a - b for a, b in zip(terms[i], terms[j])]]
                st = [[a - b for a, b in zip(terms[l], terms[i])]]
                assign(pos + 1, eqs + eq, stricts + st, codes + [(ridx, code)])

    assign(0, [], [], [])

    results = []
    seen = set()
    for u, _codes in found:
        rep = _step_off_wall(w_f, u, relations)
        if rep is None:
            continue
        rep_sig = cone_signature(rep)
        if rep_sig == sig or rep_sig.codes in seen:
            continue
        seen.add(rep_sig.codes)
        # A degenerate direction lands inside the wall, whose cone has lower
        # dimension; a genuine crossing reaches a cone of full dimension.
        eqs, _ = _signature_rows(rep_sig.k, rep_sig.n, rep_sig.codes)
        if N - rank(eqs) != cone_dim:
            continue
        if "E" in rep_sig.codes and not is_maximal_signature(rep_sig):
            continue
        results.append((rep, rep_sig))
    return results


def _step_off_wall(w_f, u, relations):
    """w_f + eps*u with eps > 0 small enough to keep every 2-tie pattern."""
    k, n = w_f.k, w_f.n
    du = WeightVector(k, n, list(u))
    bound = None
    for rel in relations:
        vals = relation_values(w_f, rel)
        lo = min(vals)
        tied = [i for i, v in enumerate(vals) if v == lo]
        if len(tied) == 3:
            continue
        derivs = relation_values(du, rel)
        g_tied = derivs[tied[0]]
        for l in range(3):
            if l in tied:
                continue
            if derivs[l] < g_tied:
                # the loose term descends; cap eps before it catches up
                b = (vals[l] - lo) / (g_tied - derivs[l])
                bound = b if bound is None else min(bound, b)
    eps = Fraction(1) if bound is None else bound / 2
    return WeightVector(k, n, [a + eps * b for a, b in zip(w_f.values(), u)])
