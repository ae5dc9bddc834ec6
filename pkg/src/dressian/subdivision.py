"""Regular subdivisions of the hypersimplex and matroidality checks.

A weight on the k-subsets lifts each hypersimplex vertex e_S to height w(S);
the maximal cells of the regular subdivision are the tight sets of the
vertices of the envelope polyhedron {(c, b) : c.e_S + b <= w(S)}.  Those
vertices are enumerated exactly with the double description method, so the
cell list is complete, not sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dd import dual_description
from .errors import ParameterError
from .linalg import rank
from .lp import OPTIMAL, linprog_exact
from .subsets import KSubset, WeightVector, enumerate_ksubsets


@dataclass(frozen=True)
class Hypersimplex:
    k: int
    n: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n - 1):
            raise ParameterError(f"need 1 <= k <= n-1, got ({self.k},{self.n})")

    def vertices(self):
        return enumerate_ksubsets(self.k, self.n)


class Cell:
    """A set of k-subsets, interpreted as the vertex set of a subpolytope."""

    __slots__ = ("k", "n", "bases")

    def __init__(self, k, n, bases):
        norm = []
        for b in bases:
            if not isinstance(b, KSubset):
                b = KSubset(tuple(sorted(b)), n)
            if b.k != k or b.n != n:
                raise ParameterError("cell bases must share one (k, n)")
            norm.append(b)
        if not norm:
            raise ParameterError("cell must contain at least one basis")
        self.k, self.n = k, n
        self.bases = frozenset(norm)

    def sorted_bases(self):
        return sorted(self.bases)

    def as_lists(self):
        return [list(b.elements) for b in self.sorted_bases()]

    def is_full_dimensional(self) -> bool:
        pts = [b.incidence() for b in self.sorted_bases()]
        base = pts[0]
        rows = [[Fraction(a - c) for a, c in zip(p, base)] for p in pts[1:]]
        return bool(rows) and rank(rows) == self.n - 1

    def __eq__(self, other):
        return isinstance(other, Cell) and self.bases == other.bases

    def __hash__(self):
        return hash(self.bases)

    def __len__(self):
        return len(self.bases)

    def __contains__(self, b):
        if not isinstance(b, KSubset):
            b = KSubset(tuple(sorted(b)), self.n)
        return b in self.bases

    def __repr__(self):
        return f"Cell({self.as_lists()})"


class MatroidalSubdivision:
    """Maximal cells of a subdivision of the hypersimplex (cells only)."""

    def __init__(self, k, n, cells, weight: WeightVector | None = None):
        self.k, self.n = k, n
        self.cells = sorted(set(cells), key=lambda c: c.as_lists())
        self.weight = weight

    def covers_all_vertices(self) -> bool:
        seen = set()
        for c in self.cells:
            seen |= c.bases
        return seen == set(enumerate_ksubsets(self.k, self.n))

    def cell_sizes(self):
        return sorted(len(c) for c in self.cells)

    def __eq__(self, other):
        return (isinstance(other, MatroidalSubdivision)
                and (self.k, self.n) == (other.k, other.n)
                and set(self.cells) == set(other.cells))

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __repr__(self):
        return f"MatroidalSubdivision(k={self.k}, n={self.n}, {len(self.cells)} cells)"


def regular_subdivision(w: WeightVector) -> MatroidalSubdivision:
    """Maximal cells of the regular subdivision induced by w (no matroid check)."""
    k, n = w.k, w.n
    Hypersimplex(k, n)
    subsets = enumerate_ksubsets(k, n)
    dim = n + 2  # variables (c_1..c_n, beta, t)
    ineqs = []
    for s in subsets:
        e = s.incidence()
        ineqs.append([Fraction(-x) for x in e] + [Fraction(-1), w(s)])
    t_row = [Fraction(0)] * (n + 1) + [Fraction(1)]
    ineqs.append(t_row)
    _lin, rays, tights = dual_description(ineqs, dim=dim)
    cells = []
    for ray, tight in zip(rays, tights):
        if ray[n + 1] > 0:
            bases = [subsets[i] for i in tight if i < len(subsets)]
            cells.append(Cell(k, n, bases))
    return MatroidalSubdivision(k, n, cells, weight=w)


def is_matroid_cell(cell: Cell) -> bool:
    """Basis exchange: for B1, B2 and x in B1\\B2 some y in B2\\B1 swaps in."""
    bases = {b.elements for b in cell.bases}
    for b1 in bases:
        for b2 in bases:
            out = [x for x in b1 if x not in b2]
            inn = [y for y in b2 if y not in b1]
            for x in out:
                if not any(tuple(sorted(set(b1) - {x} | {y})) in bases
                           for y in inn):
                    return False
    return True


def is_matroidal(subdivision: MatroidalSubdivision) -> bool:
    return all(is_matroid_cell(c) for c in subdivision.cells)


# -- hypersimplex splits -------------------------------------------------

@dataclass(frozen=True)
class HypersimplexSplit:
    """The (A, B; mu) split: hyperplane |S ∩ A| = k - mu on Delta(k, n)."""

    A: frozenset
    B: frozenset
    mu: int
    k: int
    n: int

    def __post_init__(self):
        A, B = frozenset(self.A), frozenset(self.B)
        if not A or not B or (A & B) or (A | B) != set(range(1, self.n + 1)):
            raise ParameterError("A, B must partition [n] and be nonempty")
        if not (0 < self.mu < self.k):
            raise ParameterError("mu must satisfy 0 < mu < k")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        counts = {len(A & set(s)) for s in enumerate_ksubsets(self.k, self.n)}
        thr = self.k - self.mu
        if not (min(counts) < thr < max(counts)):
            raise ParameterError("degenerate split: one side holds every vertex")

    def threshold(self) -> int:
        return self.k - self.mu

    def side_cells(self):
        """The two maximal cells: vertices on each closed side of the hyperplane."""
        thr = self.threshold()
        lo, hi = [], []
        for s in enumerate_ksubsets(self.k, self.n):
            c = len(self.A & set(s))
            if c <= thr:
                lo.append(s)
            if c >= thr:
                hi.append(s)
        return Cell(self.k, self.n, hi), Cell(self.k, self.n, lo)

    def hyperplane(self):
        """Row (a, rhs) with a.x = rhs the split hyperplane in R^n."""
        a = [Fraction(1 if i in self.A else 0) for i in range(1, self.n + 1)]
        return a, Fraction(self.threshold())


def split_subdivision(h: HypersimplexSplit) -> MatroidalSubdivision:
    return MatroidalSubdivision(h.k, h.n, list(h.side_cells()))


def splits_compatible(h1: HypersimplexSplit, h2: HypersimplexSplit) -> bool:
    """True iff the two split hyperplanes do not meet in the relative interior."""
    if (h1.k, h1.n) != (h2.k, h2.n):
        raise ParameterError("splits live on different hypersimplices")
    if h1 == h2:
        return True
    n, k = h1.n, h1.k
    a1, r1 = h1.hyperplane()
    a2, r2 = h2.hyperplane()
    # interior point on both hyperplanes: 0 < x_i < 1, sum x = k
    nvar = n + 1  # x plus margin t
    A_ub = []
    b_ub = []
    for i in range(n):
        row = [Fraction(0)] * nvar
        row[i] = Fraction(-1)
        row[n] = Fraction(1)
        A_ub.append(row)   # t - x_i <= 0
        b_ub.append(Fraction(0))
        row = [Fraction(0)] * nvar
        row[i] = Fraction(1)
        row[n] = Fraction(1)
        A_ub.append(row)   # x_i + t <= 1
        b_ub.append(Fraction(1))
    A_eq = [
        [Fraction(1)] * n + [Fraction(0)],
        a1 + [Fraction(0)],
        a2 + [Fraction(0)],
    ]
    b_eq = [Fraction(k), r1, r2]
    obj = [Fraction(0)] * n + [Fraction(-1)]  # maximize t
    bounds = [None] * n + [Fraction(0)]
    res = linprog_exact(obj, A_ub, b_ub, A_eq, b_eq, bounds)
    if res.status != OPTIMAL:
        return True
    return -res.value <= 0


def common_refinement(splits) -> MatroidalSubdivision:
    """Common refinement of pairwise compatible splits of one hypersimplex.

    Intersects closed sides over all sign patterns and keeps the
    full-dimensional, inclusion-maximal cells.
    """
    splits = list(splits)
    if not splits:
        raise ParameterError("need at least one split")
    k, n = splits[0].k, splits[0].n
    for h1, h2 in combinations(splits, 2):
        if not splits_compatible(h1, h2):
            raise ParameterError(f"incompatible splits {h1} and {h2}")
    cells = []
    for pattern in range(1 << len(splits)):
        bases = []
        for s in enumerate_ksubsets(k, n):
            ok = True
            for idx, h in enumerate(splits):
                c = len(h.A & set(s))
                thr = h.threshold()
                if (pattern >> idx) & 1:
                    if c > thr:
                        ok = False
                        break
                else:
                    if c < thr:
                        ok = False
                        break
            if ok:
                bases.append(s)
        if bases:
            cell = Cell(k, n, bases)
            if cell.is_full_dimensional():
                cells.append(cell)
    maximal = [c for c in cells
               if not any(c is not d and c.bases < d.bases for d in cells)]
    return MatroidalSubdivision(k, n, maximal)


def cells_from_tree(T) -> MatroidalSubdivision:
    """Subdivision of Delta(2, m) dual to a tree: one cell per internal vertex,
    holding the pairs whose leaf path passes through that vertex."""
    from .trees import MetricTree

    if not isinstance(T, MetricTree):
        raise ParameterError("expected a MetricTree")
    leaves = sorted(T.leaves)
    if set(leaves) != set(range(1, len(leaves) + 1)):
        raise ParameterError("tree leaves must be labelled 1..m")
    m = len(leaves)
    cells = []
    for v in T.internal_vertices():
        branches = [T.branch_leaves(v, x) for x in T.neighbors(v)]
        bases = []
        for i, j in combinations(leaves, 2):
            bi = next(bl for bl in branches if i in bl)
            if j not in bi:
                bases.append(KSubset((i, j), m))
        cells.append(Cell(2, m, bases))
    return MatroidalSubdivision(2, m, cells)


# -- facet restrictions --------------------------------------------------

def _relabel_drop(s: KSubset, i: int, n: int) -> tuple[int, ...]:
    """Map elements of [n] minus i order-preservingly onto [n-1]."""
    return tuple(x if x < i else x - 1 for x in s.elements if x != i)


def contraction_restriction(w: WeightVector, i: int) -> WeightVector:
    """Weight induced on the contraction facet x_i = 1, on Delta(k-1, n-1).

    Ground set [n] minus i is relabelled order-preservingly onto [n-1].
    """
    if not (1 <= i <= w.n):
        raise ParameterError(f"leaf index {i} out of range")
    if w.k < 2:
        raise ParameterError("contraction needs k >= 2")
    entries = {}
    for s in enumerate_ksubsets(w.k - 1, w.n - 1):
        orig = tuple(sorted((x if x < i else x + 1) for x in s.elements) + [i])
        entries[s.elements] = w(KSubset(tuple(sorted(orig)), w.n))
    return WeightVector(w.k - 1, w.n - 1, entries)


def deletion_restriction(w: WeightVector, i: int) -> WeightVector:
    """Weight induced on the deletion facet x_i = 0, on Delta(k, n-1)."""
    if not (1 <= i <= w.n):
        raise ParameterError(f"leaf index {i} out of range")
    if w.k > w.n - 1:
        raise ParameterError("deletion needs k <= n - 1")
    entries = {}
    for s in enumerate_ksubsets(w.k, w.n - 1):
        orig = tuple(x if x < i else x + 1 for x in s.elements)
        entries[s.elements] = w(KSubset(orig, w.n))
    return WeightVector(w.k, w.n - 1, entries)
