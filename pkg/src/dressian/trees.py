"""Leaf-labelled metric trees with exact rational edge lengths.

Leaves are positive integer labels; internal vertices are negative ints.
No internal vertex has degree two, edge lengths are nonnegative rationals.
Trees are compared through their split sets (labelled isomorphism), never
through internal vertex identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ParameterError, ReconstructionError


@dataclass(frozen=True)
class Split:
    """A bipartition of the leaf set with a nonnegative weight.

    Canonical orientation: the side containing the minimal label is A.
    """

    A: frozenset
    B: frozenset
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        A, B = frozenset(self.A), frozenset(self.B)
        if not A or not B or (A & B):
            raise ParameterError("split sides must be nonempty and disjoint")
        if min(B) < min(A):
            A, B = B, A
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "weight", Fraction(self.weight))

    def sides(self):
        return self.A, self.B

    def topology(self):
        """Weight-free key for set comparisons."""
        return (self.A, self.B)

    def __str__(self):
        fmt = lambda s: "".join(map(str, sorted(s)))
        return f"{fmt(self.A)}|{fmt(self.B)}({self.weight})"


def splits_are_compatible(s1: Split, s2: Split) -> bool:
    """Leaf-set compatibility: one of the four side intersections is empty."""
    return any(not (x & y) for x in s1.sides() for y in s2.sides())


class MetricTree:
    """Unrooted leaf-labelled tree with rational edge lengths."""

    def __init__(self, edges):
        adj = {}
        for u, v, ln in edges:
            ln = Fraction(ln)
            if ln < 0:
                raise ParameterError(f"negative edge length on ({u},{v})")
            adj.setdefault(u, {})
            adj.setdefault(v, {})
            if v in adj[u]:
                raise ParameterError(f"duplicate edge ({u},{v})")
            adj[u][v] = ln
            adj[v][u] = ln
        if not adj:
            raise ParameterError("empty tree")
        if len(edges) != len(adj) - 1:
            raise ParameterError("edge count does not match a tree")
        # connectivity
        seen = set()
        stack = [next(iter(adj))]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x])
        if seen != set(adj):
            raise ParameterError("tree is not connected")
        for v, nbrs in adj.items():
            if v > 0 and len(nbrs) != 1:
                raise ParameterError(f"leaf label {v} has degree {len(nbrs)}")
            if v < 0 and len(nbrs) < 3:
                raise ParameterError(f"internal vertex of degree {len(nbrs)}")
        self._adj = adj
        self.leaves = frozenset(v for v in adj if v > 0)
        if len(self.leaves) < 2:
            raise ParameterError("need at least two leaves")

    # -- basic structure -------------------------------------------------

    def neighbors(self, v):
        return dict(self._adj[v])

    def vertices(self):
        return list(self._adj)

    def internal_vertices(self):
        return [v for v in self._adj if v < 0]

    def edges(self):
        out = []
        for u, nbrs in self._adj.items():
            for v, ln in nbrs.items():
                if u < v:
                    out.append((u, v, ln))
        return sorted(out)

    def internal_edges(self):
        return [(u, v, ln) for u, v, ln in self.edges() if u < 0 and v < 0]

    @property
    def trivalent(self) -> bool:
        return all(len(self._adj[v]) == 3 for v in self.internal_vertices())

    def branch_leaves(self, v, nbr):
        """Leaves of the component of nbr after removing edge (v, nbr)."""
        seen = {v}
        stack = [nbr]
        leaves = set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if x > 0:
                leaves.add(x)
            stack.extend(self._adj[x])
        return frozenset(leaves)

    def __repr__(self):
        return f"MetricTree({to_newick(self)!r})"


# -- metrics -------------------------------------------------------------

def tree_metric(T: MetricTree) -> dict:
    """Pairwise leaf distances as a dict keyed by sorted leaf pairs."""
    dist = {}
    for src in sorted(T.leaves):
        seen = {src: Fraction(0)}
        stack = [src]
        while stack:
            x = stack.pop()
            for y, ln in T.neighbors(x).items():
                if y not in seen:
                    seen[y] = seen[x] + ln
                    stack.append(y)
        for dst in T.leaves:
            if src < dst:
                dist[(src, dst)] = seen[dst]
    return dist


def metric_value(d: dict, i: int, j: int) -> Fraction:
    if i == j:
        return Fraction(0)
    return d[(i, j) if i < j else (j, i)]


def four_point_violation(d: dict, leaves=None):
    """A quartet where the max pair-sum is attained only once, or None."""
    if leaves is None:
        leaves = sorted({x for pair in d for x in pair})
    for quad in combinations(sorted(leaves), 4):
        i, j, k, l = quad
        sums = [metric_value(d, i, j) + metric_value(d, k, l),
                metric_value(d, i, k) + metric_value(d, j, l),
                metric_value(d, i, l) + metric_value(d, j, k)]
        hi = max(sums)
        if sums.count(hi) < 2:
            return quad
    return None


def is_tree_metric(d: dict, leaves=None) -> bool:
    """Four-point condition: in every quartet the max pair-sum ties."""
    return four_point_violation(d, leaves) is None


# -- splits and construction --------------------------------------------

def splits_of_tree(T: MetricTree) -> list[Split]:
    """One split per internal edge, weighted by its length.  Leaf edges excluded."""
    out = []
    for u, v, ln in T.internal_edges():
        A = T.branch_leaves(v, u)
        out.append(Split(A, T.leaves - A, ln))
    return sorted(out, key=lambda s: (sorted(s.A), sorted(s.B)))


def tree_from_splits(leaves, splits, leaf_lengths=None) -> MetricTree:
    """Build the tree realizing a pairwise compatible split system.

    ``leaf_lengths`` maps each leaf to its pendant edge length (default 1).
    Splits of weight zero are skipped (contracted edges).
    """
    leaves = sorted(leaves)
    if leaf_lengths is None:
        leaf_lengths = {i: Fraction(1) for i in leaves}
    for s1, s2 in combinations(splits, 2):
        if not splits_are_compatible(s1, s2):
            raise ParameterError(f"incompatible splits {s1} and {s2}")
    adj = {}

    def add_edge(u, v, ln):
        adj.setdefault(u, {})[v] = Fraction(ln)
        adj.setdefault(v, {})[u] = Fraction(ln)

    center = -1
    next_id = -2
    for i in leaves:
        add_edge(i, center, leaf_lengths[i])

    def branch_leafset(v, nbr):
        seen, stack, out = {v}, [nbr], set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if x > 0:
                out.add(x)
            stack.extend(adj[x])
        return frozenset(out)

    for s in splits:
        if s.weight == 0:
            continue
        A, B = s.sides()
        placed = False
        for v in [x for x in adj if x < 0]:
            groups = {nbr: branch_leafset(v, nbr) for nbr in adj[v]}
            for side in (A, B):
                moved = [nbr for nbr, ls in groups.items() if ls <= side]
                if frozenset().union(*[groups[m] for m in moved] or [frozenset()]) == side:
                    u = next_id
                    next_id -= 1
                    for nbr in moved:
                        ln = adj[v].pop(nbr)
                        adj[nbr].pop(v)
                        add_edge(nbr, u, ln)
                    add_edge(v, u, s.weight)
                    placed = True
                    break
            if placed:
                break
        if not placed:
            raise ParameterError(f"could not realize split {s}")
    return MetricTree([(u, v, ln) for u, nbrs in adj.items()
                       for v, ln in nbrs.items() if u < v])


def star_tree(leaves, length=Fraction(1)) -> MetricTree:
    return tree_from_splits(leaves, [], {i: Fraction(length) for i in leaves})


def caterpillar(cherry1, middle, cherry2, length=Fraction(1)) -> MetricTree:
    """The caterpillar C(ab, c, de): cherries {a,b} and {d,e}, c in between."""
    a, b = cherry1
    d, e = cherry2
    leaves = [a, b, middle, d, e]
    if len(set(leaves)) != 5:
        raise ParameterError("caterpillar labels must be distinct")
    s1 = Split(frozenset({a, b}), frozenset({middle, d, e}), Fraction(length))
    s2 = Split(frozenset({d, e}), frozenset({middle, a, b}), Fraction(length))
    return tree_from_splits(leaves, [s1, s2],
                            {i: Fraction(length) for i in leaves})


# -- reconstruction from a metric ----------------------------------------

def reconstruct_tree(d: dict, leaves=None) -> MetricTree:
    """The unique metric tree realizing a tree metric, exactly.

    Splits are recovered through their isolation index; zero-length internal
    edges are contracted, so the result need not be trivalent.  Raises
    ReconstructionError (naming a violating quartet) for non-tree metrics.
    """
    if leaves is None:
        leaves = sorted({x for pair in d for x in pair})
    leaves = sorted(leaves)
    bad = four_point_violation(d, leaves)
    if bad is not None:
        raise ReconstructionError(f"four-point condition fails on {bad}", bad)
    if len(leaves) < 2:
        raise ParameterError("need at least two leaves")
    if len(leaves) == 2:
        i, j = leaves
        return MetricTree([(i, j, metric_value(d, i, j))])

    # pendant edge lengths via Gromov products
    leaf_len = {}
    for i in leaves:
        others = [x for x in leaves if x != i]
        leaf_len[i] = min(
            (metric_value(d, i, j) + metric_value(d, i, k)
             - metric_value(d, j, k)) / 2
            for j, k in combinations(others, 2)
        )

    # internal splits via isolation indices
    splits = []
    rest = leaves[1:]
    first = leaves[0]
    for r in range(1, len(rest)):
        for comb in combinations(rest, r):
            A = frozenset({first} | set(comb))
            B = frozenset(leaves) - A
            if len(A) < 2 or len(B) < 2:
                continue
            iso = None
            ok = True
            for (i, j) in combinations(sorted(A), 2):
                for (k, l) in combinations(sorted(B), 2):
                    c1 = metric_value(d, i, k) + metric_value(d, j, l)
                    c2 = metric_value(d, i, l) + metric_value(d, j, k)
                    if c1 != c2:
                        ok = False
                        break
                    gap = c1 - metric_value(d, i, j) - metric_value(d, k, l)
                    if gap <= 0:
                        ok = False
                        break
                    iso = gap if iso is None else min(iso, gap)
                if not ok:
                    break
            if ok:
                splits.append(Split(A, B, iso / 2))

    if any(v < 0 for v in leaf_len.values()):
        raise ReconstructionError("metric requires a negative pendant edge")
    T = tree_from_splits(leaves, splits, leaf_len)
    realized = tree_metric(T)
    if any(realized[(i, j)] != metric_value(d, i, j)
           for i, j in combinations(leaves, 2)):
        raise ReconstructionError("metric is not realized by any tree")
    return T


# -- comparison, cherries, moves -----------------------------------------

def labelled_isomorphic(T1: MetricTree, T2: MetricTree,
                        with_lengths: bool = False) -> bool:
    """Same leaf set and same split sets; with_lengths also compares metrics."""
    if T1.leaves != T2.leaves:
        return False
    if with_lengths:
        return tree_metric(T1) == tree_metric(T2)
    s1 = {s.topology() for s in splits_of_tree(T1)}
    s2 = {s.topology() for s in splits_of_tree(T2)}
    return s1 == s2


def cherries_of_tree(T: MetricTree) -> list[tuple[int, int]]:
    """Leaf pairs attached to a common internal vertex of degree exactly three."""
    out = []
    for v in T.internal_vertices():
        nbrs = T.neighbors(v)
        if len(nbrs) != 3:
            continue
        leaf_nbrs = sorted(x for x in nbrs if x > 0)
        for pair in combinations(leaf_nbrs, 2):
            out.append(pair)
    return sorted(out)


def delete_leaf(T: MetricTree, i: int) -> MetricTree:
    """Remove leaf i, suppressing any resulting degree-two vertex."""
    if i not in T.leaves:
        raise ParameterError(f"unknown leaf label {i}")
    if len(T.leaves) <= 2:
        raise ParameterError("cannot delete a leaf of a two-leaf tree")
    adj = {v: dict(nbrs) for v, nbrs in T._adj.items()}
    (v,) = adj[i]
    adj[v].pop(i)
    adj.pop(i)
    if v < 0 and len(adj[v]) == 2:
        (x, lx), (y, ly) = adj[v].items()
        adj[x].pop(v)
        adj[y].pop(v)
        adj.pop(v)
        adj[x][y] = adj[y][x] = lx + ly
    return MetricTree([(u, w, ln) for u, nbrs in adj.items()
                       for w, ln in nbrs.items() if u < w])


def whitehead_move(T: MetricTree, edge, choice: int) -> MetricTree:
    """One of the two alternative resolutions across an internal edge.

    Branches at each endpoint are ordered by minimal leaf label; choice 0
    swaps the second branch of one end with the first of the other, choice 1
    with the second.  The new internal edge keeps the old edge's length.
    """
    u, v = edge[:2]
    if not (u in T._adj and v in T._adj and v in T._adj[u]):
        raise ParameterError(f"no edge ({u},{v})")
    if u > 0 or v > 0:
        raise ParameterError("Whitehead moves need an internal edge")
    if len(T.neighbors(u)) != 3 or len(T.neighbors(v)) != 3:
        raise ParameterError("tree is not trivalent at the chosen edge")
    if choice not in (0, 1):
        raise ParameterError("choice must be 0 or 1")
    old_len = T._adj[u][v]
    a_branches = sorted(
        (T.branch_leaves(u, x) for x in T.neighbors(u) if x != v),
        key=min)
    b_branches = sorted(
        (T.branch_leaves(v, x) for x in T.neighbors(v) if x != u),
        key=min)
    a1, a2 = a_branches
    b1, b2 = b_branches
    newA = a1 | (b1 if choice == 0 else b2)
    new_split = Split(newA, T.leaves - newA, old_len)

    old_split_A = a1 | a2
    keep = [s for s in splits_of_tree(T)
            if s.A not in (old_split_A, T.leaves - old_split_A)]
    leaf_len = {}
    for i in T.leaves:
        (w,) = T._adj[i]
        leaf_len[i] = T._adj[i][w]
    return tree_from_splits(T.leaves, keep + [new_split], leaf_len)


def is_whitehead_related(T1: MetricTree, T2: MetricTree) -> bool:
    """True iff the trees exchange exactly one split for an alternative resolution."""
    if T1.leaves != T2.leaves:
        raise ParameterError("trees have different leaf sets")
    if not (T1.trivalent and T2.trivalent):
        raise ParameterError("Whitehead relatedness is defined for trivalent trees")
    s1 = {s.topology() for s in splits_of_tree(T1)}
    s2 = {s.topology() for s in splits_of_tree(T2)}
    only1 = s1 - s2
    only2 = s2 - s1
    if len(only1) != 1 or len(only2) != 1:
        return False
    (a1, b1), = only1
    (a2, b2), = only2
    return not splits_are_compatible(Split(a1, b1), Split(a2, b2))


def is_refinement_of(fine: MetricTree, coarse: MetricTree) -> bool:
    """True iff every split of coarse is a split of fine (same leaves)."""
    if fine.leaves != coarse.leaves:
        return False
    sf = {s.topology() for s in splits_of_tree(fine)}
    return all(s.topology() in sf for s in splits_of_tree(coarse))


# -- topology enumeration ------------------------------------------------

def enumerate_trivalent_topologies(leaves) -> list[MetricTree]:
    """All trivalent topologies on the leaf set, unit edge lengths."""
    leaves = sorted(leaves)
    if len(leaves) < 3:
        raise ParameterError("need at least three leaves")
    trees = [star_tree(leaves[:3])]
    for leaf in leaves[3:]:
        nxt = []
        for T in trees:
            mid = min(T.internal_vertices()) - 1
            for (u, v, _ln) in T.edges():
                edges = [(a, b, ln) for a, b, ln in T.edges() if (a, b) != (u, v)]
                edges += [(u, mid, Fraction(1)), (v, mid, Fraction(1)),
                          (leaf, mid, Fraction(1))]
                nxt.append(MetricTree(edges))
        trees = nxt
    return trees


def enumerate_all_topologies(leaves) -> list[MetricTree]:
    """All (possibly degenerate) topologies: one tree per compatible split system."""
    leaves = sorted(leaves)
    candidates = []
    rest = leaves[1:]
    for r in range(1, len(rest)):
        for comb in combinations(rest, r):
            A = frozenset({leaves[0]} | set(comb))
            B = frozenset(leaves) - A
            if len(A) >= 2 and len(B) >= 2:
                candidates.append(Split(A, B))
    out = []

    def extend(chosen, start):
        out.append(tree_from_splits(leaves, chosen))
        for idx in range(start, len(candidates)):
            s = candidates[idx]
            if all(splits_are_compatible(s, c) for c in chosen):
                extend(chosen + [s], idx + 1)

    extend([], 0)
    return out


# -- Newick serialization ------------------------------------------------

def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_newick(T: MetricTree) -> str:
    """Canonical Newick string: rooted at the neighbor of the smallest leaf,
    children sorted by minimal descendant label, rational lengths as p/q."""
    if len(T.leaves) == 2:
        a, b = sorted(T.leaves)
        return f"({a}:{_fraction_str(T._adj[a][b])},{b}:0);"
    lo = min(T.leaves)
    (root,) = T._adj[lo]

    def render(v, parent):
        if v > 0:
            return str(v), v
        parts = []
        for x, ln in sorted(T.neighbors(v).items()):
            if x == parent:
                continue
            body, mn = render(x, v)
            parts.append((mn, f"{body}:{_fraction_str(ln)}"))
        parts.sort()
        return "(" + ",".join(p for _, p in parts) + ")", min(mn for mn, _ in parts)

    body, _ = render(root, None)
    return body + ";"


def parse_newick(text: str) -> MetricTree:
    """Parse a Newick string with integer leaf labels and rational lengths."""
    s = text.strip()
    if not s.endswith(";"):
        raise ParameterError("Newick string must end with ';'")
    s = s[:-1]
    pos = 0
    next_internal = [-1]
    edges = []

    def parse_length():
        nonlocal pos
        if pos < len(s) and s[pos] == ":":
            pos += 1
            start = pos
            while pos < len(s) and (s[pos].isdigit() or s[pos] in "/-"):
                pos += 1
            token = s[start:pos]
            try:
                return Fraction(token)
            except (ValueError, ZeroDivisionError):
                raise ParameterError(f"bad branch length {token!r}")
        return Fraction(1)

    def parse_node():
        nonlocal pos
        if s[pos] == "(":
            node = next_internal[0]
            next_internal[0] -= 1
            pos += 1
            while True:
                child = parse_node()
                ln = parse_length()
                edges.append((node, child, ln))
                if s[pos] == ",":
                    pos += 1
                    continue
                if s[pos] == ")":
                    pos += 1
                    break
                raise ParameterError(f"unexpected character {s[pos]!r} at {pos}")
            return node
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParameterError(f"expected a leaf label at position {pos}")
        return int(s[start:pos])

    root = parse_node()
    if pos != len(s):
        raise ParameterError("trailing characters in Newick string")
    # suppress a degree-2 root left over from rooted input
    adj = {}
    for u, v, ln in edges:
        adj.setdefault(u, {})[v] = ln
        adj.setdefault(v, {})[u] = ln
    if root in adj and len(adj[root]) == 2 and root < 0:
        (x, lx), (y, ly) = adj[root].items()
        adj[x].pop(root)
        adj[y].pop(root)
        adj.pop(root)
        adj[x][y] = adj[y][x] = lx + ly
    return MetricTree([(u, v, ln) for u, nbrs in adj.items()
                       for v, ln in nbrs.items() if u < v])
