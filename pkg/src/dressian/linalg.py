"""Dense exact linear algebra over Fraction matrices (lists of lists).

Everything here is Gaussian elimination with full pivoting avoided on
purpose: first nonzero pivot keeps the results deterministic.
"""

from fractions import Fraction


def _clone(rows):
    return [list(map(Fraction, r)) for r in rows]


def rref(rows):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    m = _clone(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def rank_profile(rows):
    """Indices of a lex-first maximal independent subset of the rows."""
    keep = []
    basis = []
    for i, row in enumerate(rows):
        cand = basis + [list(map(Fraction, row))]
        if rank(cand) > len(basis):
            basis = rref(cand)[0][: len(basis) + 1]
            keep.append(i)
    return keep


def nullspace(rows, ncols=None):
    """Basis of the right kernel of the matrix, as a list of vectors."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve_underdetermined(rows, rhs):
    """One solution of A x = b with all free variables set to zero.

    Raises ValueError if the system is inconsistent.
    """
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(rows, v):
    return [dot(r, v) for r in rows]


def primitive_direction(v):
    """Scale a rational vector to coprime integers, preserving its direction."""
    from fractions import Fraction
    from math import gcd, lcm

    v = [Fraction(x) for x in v]
    mult = 1
    for x in v:
        mult = lcm(mult, x.denominator)
    ints = [int(x * mult) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    return ints


def scale_to_integers(v):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    ints = primitive_direction(v)
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints
