"""Tree arrangements: families of metric trees indexed by (k-2)-subsets.

A weight on Delta(k, n) restricts, for each (k-2)-subset J, to a weight on
pairs over [n] \\ J; after an affine normalization into the interval (1, 2)
that restriction is a tree metric, and the reconstructed trees form a
(generalized) metric tree arrangement.  Conversely an arrangement's metrics
assemble into a weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import CompatibilityError, MembershipError, ParameterError
from .lp import lex_min
from .relations import is_in_dressian
from .subsets import KSubset, WeightVector, enumerate_ksubsets
from .trees import (MetricTree, cherries_of_tree, delete_leaf,
                    enumerate_all_topologies, is_whitehead_related,
                    labelled_isomorphic, reconstruct_tree, tree_metric)


class _Arrangement:
    """Shared structure: a total map from (k-2)-subsets J to trees on [n]\\J."""

    def __init__(self, k, n, trees):
        if k < 2:
            raise ParameterError("arrangements need k >= 2")
        normalized = {}
        for key, tree in trees.items():
            normalized[tuple(sorted(key))] = tree
        expected = [s.elements for s in enumerate_ksubsets(k - 2, n)] \
            if k > 2 else [()]
        if sorted(normalized) != sorted(expected):
            raise ParameterError(
                f"arrangement must have one tree per (k-2)-subset of [{n}]")
        for J, tree in normalized.items():
            want = set(range(1, n + 1)) - set(J)
            if set(tree.leaves) != want:
                raise ParameterError(
                    f"tree at index {J} must have leaves {sorted(want)}")
        self.k, self.n = k, n
        self.trees = normalized

    def indices(self):
        return sorted(self.trees)

    def tree(self, J):
        return self.trees[tuple(sorted(J))]

    def items(self):
        return [(J, self.trees[J]) for J in self.indices()]

    def __len__(self):
        return len(self.trees)


class TreeArrangement(_Arrangement):
    """Arrangement with metrics; overlapping distances must agree."""

    def abstract(self) -> "AbstractArrangement":
        return AbstractArrangement(self.k, self.n, self.trees)


class AbstractArrangement(_Arrangement):
    """Arrangement considered up to topology; edge lengths are ignored."""


def _leaf_path_edges(T: MetricTree, i: int, j: int):
    """Edges (as sorted vertex pairs) on the unique i-j path."""
    parent = {i: None}
    stack = [i]
    while stack:
        x = stack.pop()
        if x == j:
            break
        for y in T.neighbors(x):
            if y not in parent:
                parent[y] = x
                stack.append(y)
    path = []
    x = j
    while parent[x] is not None:
        path.append((min(x, parent[x]), max(x, parent[x])))
        x = parent[x]
    return path


def _partitions(K, k):
    """All (J, i, j) with J a (k-2)-subset and K = J + {i, j}."""
    K = tuple(sorted(K))
    out = []
    for pair in combinations(K, 2):
        J = tuple(x for x in K if x not in pair)
        out.append((J, pair[0], pair[1]))
    return out


def check_compatibility(T: TreeArrangement):
    """(ok, None) or (False, (J, J', (i,j), (i',j'))) for the first mismatch."""
    metrics = {J: tree_metric(tree) for J, tree in T.items()}
    for K in enumerate_ksubsets(T.k, T.n):
        parts = _partitions(K.elements, T.k)
        J0, i0, j0 = parts[0]
        ref = metrics[J0][(i0, j0)]
        for J, i, j in parts[1:]:
            if metrics[J][(i, j)] != ref:
                return False, (J0, J, (i0, j0), (i, j))
    return True, None


def _metric_interval_map(values):
    """Decreasing affine map sending [min, max] of values into [5/4, 7/4].

    The image lies in (1, 2), where every symmetric function is a metric; the
    decreasing direction converts min-convention weights into distances.
    """
    lo, hi = min(values), max(values)
    if lo == hi:
        return lambda v: Fraction(3, 2)
    span = hi - lo
    return lambda v: Fraction(5, 4) + (hi - v) / (2 * span)


def arrangement_from_weight(w: WeightVector) -> TreeArrangement:
    """The metric tree arrangement supported by a tropical Pluecker vector."""
    ok, bad = is_in_dressian(w)
    if not ok:
        raise MembershipError(f"weight fails relation {bad}", bad)
    to_metric = _metric_interval_map(w.values())
    trees = {}
    indices = [s.elements for s in enumerate_ksubsets(w.k - 2, w.n)] \
        if w.k > 2 else [()]
    for J in indices:
        rest = [x for x in range(1, w.n + 1) if x not in J]
        d = {}
        for i, j in combinations(rest, 2):
            v = to_metric(w(tuple(sorted(J + (i, j)))))
            d[(i, j)] = d[(j, i)] = v
        trees[J] = reconstruct_tree(d, leaves=rest)
    return TreeArrangement(w.k, w.n, trees)


def weight_from_arrangement(T: TreeArrangement) -> WeightVector:
    """w(K) = -delta_J(i, j) for any partition K = J + {i, j}.

    The negation converts the max-convention tree metrics into a
    min-convention tropical Pluecker vector.
    """
    ok, violation = check_compatibility(T)
    if not ok:
        raise CompatibilityError(
            f"incompatible arrangement: {violation}", violation)
    metrics = {J: tree_metric(tree) for J, tree in T.items()}
    entries = {}
    for K in enumerate_ksubsets(T.k, T.n):
        J, i, j = _partitions(K.elements, T.k)[0]
        entries[K.elements] = -metrics[J][(i, j)]
    return WeightVector(T.k, T.n, entries)


def arrangement_cherries(T) -> set:
    """All k-subsets I whose every partition I = J + {i,j} is a cherry of T_J."""
    cherry_sets = {J: {tuple(sorted(c)) for c in cherries_of_tree(tree)}
                   for J, tree in T.items()}
    out = set()
    for K in enumerate_ksubsets(T.k, T.n):
        if all((min(i, j), max(i, j)) in cherry_sets[J]
               for J, i, j in _partitions(K.elements, T.k)):
            out.add(K)
    return out


def is_abstract_arrangement(T, _depth=0) -> bool:
    """Recursive test of the classical (k=3) abstract-arrangement condition."""
    if T.k != 3:
        raise ParameterError("the recursive test is defined for k = 3")
    n = T.n
    if n < 4:
        raise ParameterError("need n >= 4")
    if n == 4:
        return True  # all trees are 3-leaf stars; any family qualifies
    if n == 5:
        for S in enumerate_all_topologies(range(1, 6)):
            if all(labelled_isomorphic(delete_leaf(S, i), T.tree((i,)))
                   for i in range(1, 6)):
                return True
        return False
    for i in range(1, n + 1):
        sub = {}
        for j in range(1, n + 1):
            if j == i:
                continue
            sub[(j,)] = delete_leaf(T.tree((j,)), i)
        relabel = _Relabelling([x for x in range(1, n + 1) if x != i])
        smaller = AbstractArrangement(3, n - 1, {
            (relabel.down(j),): relabel.down_tree(t) for (j,), t in sub.items()})
        if not is_abstract_arrangement(smaller, _depth + 1):
            return False
    return True


class _Relabelling:
    """Order-preserving bijection between a label set and [1..m]."""

    def __init__(self, labels):
        self._down = {x: i + 1 for i, x in enumerate(sorted(labels))}
        self._up = {v: k for k, v in self._down.items()}

    def down(self, x):
        return self._down[x]

    def down_tree(self, T: MetricTree) -> MetricTree:
        m = lambda v: self._down[v] if v > 0 else v
        return MetricTree([(m(u), m(v), ln) for u, v, ln in T.edges()])


def metrize_abstract_arrangement(T: AbstractArrangement):
    """A canonical compatible metric on the arrangement's topologies.

    Minimizes the total edge length, then each edge variable in a fixed
    order, subject to leaf lengths >= 0, internal lengths >= 1, and all
    overlap equalities.  Returns a TreeArrangement, or None if infeasible.
    """
    var_of = {}       # (J, edge pair) -> column
    bounds = []
    for J in T.indices():
        for u, v, _ in T.trees[J].edges():
            var_of[(J, (u, v))] = len(bounds)
            bounds.append(Fraction(0) if u > 0 or v > 0 else Fraction(1))
    nvar = len(bounds)

    def path_row(J, i, j):
        row = [Fraction(0)] * nvar
        for e in _leaf_path_edges(T.trees[J], i, j):
            row[var_of[(J, e)]] = Fraction(1)
        return row

    A_eq, b_eq = [], []
    for K in enumerate_ksubsets(T.k, T.n):
        parts = _partitions(K.elements, T.k)
        J0, i0, j0 = parts[0]
        ref = path_row(J0, i0, j0)
        for J, i, j in parts[1:]:
            other = path_row(J, i, j)
            A_eq.append([a - b for a, b in zip(ref, other)])
            b_eq.append(Fraction(0))

    objectives = [[Fraction(1)] * nvar]
    for j in range(nvar):
        objectives.append([Fraction(v == j) for v in range(nvar)])
    x = lex_min(objectives, A_eq=A_eq, b_eq=b_eq, bounds=bounds)
    if x is None:
        return None
    trees = {}
    for J in T.indices():
        edges = [(u, v, x[var_of[(J, (u, v))]])
                 for u, v, _ in T.trees[J].edges()]
        trees[J] = MetricTree(edges)
    return TreeArrangement(T.k, T.n, trees)


def recursive_contraction_arrangement(w: WeightVector) -> dict:
    """Trees from ordered sequences of k-2 contractions, original labels kept.

    Returns a map from ordered (k-2)-tuples of distinct indices to the tree
    dual to the induced Delta(2, n-k+2) subdivision.  The tree depends only
    on the underlying set, which callers may verify.
    """
    ok, bad = is_in_dressian(w)
    if not ok:
        raise MembershipError(f"weight fails relation {bad}", bad)
    to_metric = _metric_interval_map(w.values())
    out = {}
    sets = [s.elements for s in enumerate_ksubsets(w.k - 2, w.n)] \
        if w.k > 2 else [()]
    for J in sets:
        rest = [x for x in range(1, w.n + 1) if x not in J]
        d = {}
        for i, j in combinations(rest, 2):
            v = to_metric(w(tuple(sorted(J + (i, j)))))
            d[(i, j)] = d[(j, i)] = v
        tree = reconstruct_tree(d, leaves=rest)
        for order in permutations(J) if J else [()]:
            out[order] = tree
    return out


@dataclass(frozen=True)
class ArrangementComparison:
    kind: str                    # "identical" | "generalized-whitehead" | "farther"
    differing: tuple             # indices J where the topologies differ


def generalized_whitehead_diff(Ta, Tb) -> ArrangementComparison:
    """Classify two arrangements by the trees on which they differ."""
    if (Ta.k, Ta.n) != (Tb.k, Tb.n):
        raise ParameterError("arrangements have different (k, n)")
    differing = []
    for J in Ta.indices():
        if not labelled_isomorphic(Ta.tree(J), Tb.tree(J)):
            differing.append(J)
    if not differing:
        return ArrangementComparison("identical", ())
    for J in differing:
        a, b = Ta.tree(J), Tb.tree(J)
        if not (a.trivalent and b.trivalent and is_whitehead_related(a, b)):
            return ArrangementComparison("farther", tuple(differing))
    return ArrangementComparison("generalized-whitehead", tuple(differing))
