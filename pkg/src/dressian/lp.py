"""Exact rational linear programming via two-phase simplex with Bland's rule.

Small and deterministic rather than fast: every pivot choice is by lowest
index, so a given input always yields the same optimal vertex.  Problem
sizes in this package stay below ~100 rows x ~250 columns.
"""

from fractions import Fraction

from .errors import ParameterError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LPResult:
    __slots__ = ("status", "x", "value", "unique")

    def __init__(self, status, x=None, value=None, unique=False):
        self.status = status
        self.x = x
        self.value = value
        self.unique = unique

    def __repr__(self):
        return f"LPResult({self.status}, value={self.value})"


def linprog_exact(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=None):
    """Minimize c.x subject to A_ub x <= b_ub, A_eq x = b_eq.

    ``bounds[j]`` is a lower bound for x_j, or None for a free variable
    (default: all free).  All data may be ints or Fractions.
    """
    c = [Fraction(v) for v in c]
    nvar = len(c)
    A_ub = [list(map(Fraction, r)) for r in (A_ub or [])]
    b_ub = [Fraction(v) for v in (b_ub or [])]
    A_eq = [list(map(Fraction, r)) for r in (A_eq or [])]
    b_eq = [Fraction(v) for v in (b_eq or [])]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ParameterError("constraint matrix / rhs length mismatch")
    for r in A_ub + A_eq:
        if len(r) != nvar:
            raise ParameterError("constraint row has wrong length")
    if bounds is None:
        bounds = [None] * nvar
    lower = [None if b is None else Fraction(b) for b in bounds]

    # Column layout: one column per lower-bounded variable (shifted by the
    # bound), two columns (pos - neg) per free variable, then slacks.
    cols = []          # cols[j] = list of (orig var, sign)
    shift = [Fraction(0)] * nvar
    for j in range(nvar):
        if lower[j] is None:
            cols.append((j, 1))
            cols.append((j, -1))
        else:
            shift[j] = lower[j]
            cols.append((j, 1))
    nstruct = len(cols)

    def build_row(row):
        return [row[var] * sign for var, sign in cols]

    rows = []
    rhs = []
    row_kind = []  # "ub" or "eq"
    seen_rows = set()
    for r, b in zip(A_ub, b_ub):
        key = ("ub", tuple(r), b)
        if key in seen_rows:
            continue
        seen_rows.add(key)
        rows.append(build_row(r))
        rhs.append(b - sum(r[j] * shift[j] for j in range(nvar)))
        row_kind.append("ub")
    for r, b in zip(A_eq, b_eq):
        key = ("eq", tuple(r), b)
        if key in seen_rows:
            continue
        seen_rows.add(key)
        rows.append(build_row(r))
        rhs.append(b - sum(r[j] * shift[j] for j in range(nvar)))
        row_kind.append("eq")

    m = len(rows)
    nslack = sum(1 for k in row_kind if k == "ub")
    ncols = nstruct + nslack + m  # structural + slack + artificial
    T = []
    si = 0
    for i in range(m):
        b = rhs[i]
        flip = -1 if b < 0 else 1
        row = [flip * x for x in rows[i]] + [Fraction(0)] * (nslack + m)
        if row_kind[i] == "ub":
            row[nstruct + si] = Fraction(flip)
            si += 1
        row[nstruct + nslack + i] = Fraction(1)
        T.append(row + [flip * b])

    basis = [nstruct + nslack + i for i in range(m)]
    art_start = nstruct + nslack

    obj_struct = [c[var] * sign for var, sign in cols]

    def run_simplex(costs, allowed):
        """Minimize costs over the current tableau.

        Dantzig pivoting (most negative reduced cost, ties by lowest index)
        with a permanent switch to Bland's rule after a long degenerate
        streak, which guarantees termination while staying deterministic.
        """
        degenerate_streak = 0
        bland = False
        while True:
            # reduced costs: z_j = costs_j - sum over basis rows
            cb = [(i, c) for i, c in enumerate(costs[b] for b in basis) if c]
            entering = -1
            best_red = 0
            for j in range(ncols):
                if j not in allowed or j in basis:
                    continue
                red = costs[j] - sum(c * T[i][j] for i, c in cb)
                if red < 0:
                    if bland:
                        entering = j
                        break
                    if red < best_red:
                        best_red = red
                        entering = j
            if entering < 0:
                return OPTIMAL
            leaving = -1
            best = None
            for i in range(m):
                if T[i][entering] > 0:
                    ratio = T[i][ncols] / T[i][entering]
                    if best is None or ratio < best or \
                            (ratio == best and basis[i] < basis[leaving]):
                        best = ratio
                        leaving = i
            if leaving < 0:
                return UNBOUNDED
            if best == 0:
                degenerate_streak += 1
                if degenerate_streak > 3 * (m + ncols):
                    bland = True
            else:
                degenerate_streak = 0
            pivot(leaving, entering)

    def pivot(i, j):
        pv = T[i][j]
        T[i] = [x / pv for x in T[i]]
        row_i = T[i]
        for r in range(m):
            if r != i and T[r][j] != 0:
                f = T[r][j]
                T[r] = [a - f * b if b else a
                        for a, b in zip(T[r], row_i)]
        basis[i] = j

    # Phase 1
    phase1_cost = [Fraction(0)] * ncols
    for j in range(art_start, ncols):
        phase1_cost[j] = Fraction(1)
    allowed = set(range(ncols))
    run_simplex(phase1_cost, allowed)
    infeas = sum(T[i][ncols] for i in range(m) if basis[i] >= art_start)
    if infeas > 0:
        return LPResult(INFEASIBLE)
    # Drive remaining artificials out of the basis.
    for i in range(m):
        if basis[i] >= art_start:
            j = next((j for j in range(art_start) if T[i][j] != 0), None)
            if j is not None:
                pivot(i, j)
            # else: redundant row, artificial stays basic at value 0

    # Phase 2
    phase2_cost = [Fraction(0)] * ncols
    for j in range(nstruct):
        phase2_cost[j] = obj_struct[j]
    allowed = set(range(art_start))
    status = run_simplex(phase2_cost, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    xcol = [Fraction(0)] * ncols
    for i in range(m):
        xcol[basis[i]] = T[i][ncols]
    x = list(shift)
    for j, (var, sign) in enumerate(cols):
        x[var] += sign * xcol[j]
    value = sum(ci * xi for ci, xi in zip(c, x))

    # Uniqueness certificate: with no free variables, strictly positive
    # reduced costs on every nonbasic column pin the optimal vertex.
    unique = all(lb is not None for lb in lower)
    if unique:
        cb = [(i, cc) for i, cc in enumerate(phase2_cost[b] for b in basis)
              if cc]
        for j in range(art_start):
            if j in basis:
                continue
            red = phase2_cost[j] - sum(cc * T[i][j] for i, cc in cb)
            if red <= 0:
                unique = False
                break
    return LPResult(OPTIMAL, x, value, unique)


def feasible_point(A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=None, nvar=None):
    """A point of the polyhedron, or None if it is empty."""
    if nvar is None:
        for mat in (A_ub, A_eq):
            if mat:
                nvar = len(mat[0])
                break
        else:
            raise ParameterError("cannot infer dimension")
    res = linprog_exact([0] * nvar, A_ub, b_ub, A_eq, b_eq, bounds)
    return res.x if res.status == OPTIMAL else None


def lex_min(objectives, A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=None):
    """Lexicographic minimization over a list of objective vectors.

    Returns the unique lexicographic optimum when the objectives span the
    variable space; None if the problem is infeasible or unbounded below in
    some stage.
    """
    A_eq = [list(r) for r in (A_eq or [])]
    b_eq = list(b_eq or [])
    x = None
    for obj in objectives:
        if x is not None:
            # If the incumbent already attains a provable lower bound of
            # this objective, its minimum is known without solving.
            lb = _bound_value(obj, bounds)
            if lb is not None:
                val = sum(o * xi for o, xi in zip(obj, x))
                if val == lb:
                    A_eq.append(list(obj))
                    b_eq.append(val)
                    continue
        res = linprog_exact(obj, A_ub, b_ub, A_eq, b_eq, bounds)
        if res.status != OPTIMAL:
            return None
        x = res.x
        if res.unique:
            return x
        A_eq.append(list(obj))
        b_eq.append(res.value)
    return x


def _bound_value(obj, bounds):
    """Sum of coefficient * lower bound, or None if unbounded below."""
    if bounds is None:
        return None
    total = Fraction(0)
    for o, b in zip(obj, bounds):
        if o == 0:
            continue
        if o < 0 or b is None:
            return None
        total += o * b
    return total
