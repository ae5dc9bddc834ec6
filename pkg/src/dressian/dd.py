"""Double description: extreme rays of {x : A x >= 0, E x = 0}, exactly.

Motzkin's algorithm with the combinatorial adjacency test and explicit
lineality handling.  Rays are returned as primitive integer vectors together
with the set of inequality rows they make tight.  Intended for the small,
highly degenerate cones that appear in this package (dimension <= 10, tens
of rows).
"""

from fractions import Fraction

from .linalg import dot, primitive_direction


def dual_description(ineqs, eqs=None, dim=None):
    """Return (lineality_basis, rays, tight_sets).

    ``ineqs`` rows a mean a.x >= 0; ``eqs`` rows mean equality.
    ``tight_sets[i]`` is a frozenset of ineq row indices where ray i is zero.
    """
    ineqs = [list(map(Fraction, r)) for r in ineqs]
    eqs = [list(map(Fraction, r)) for r in (eqs or [])]
    if dim is None:
        dim = len((ineqs + eqs)[0])

    lineality = [[Fraction(i == j) for j in range(dim)] for i in range(dim)]
    rays = []       # list of vectors
    zeros = []      # zeros[i] = exact set of processed-constraint ids tight on rays[i]

    constraints = []
    cid = 0
    for e in eqs:
        constraints.append((e, None, cid)); cid += 1
        constraints.append(([-x for x in e], None, cid)); cid += 1
    for idx, a in enumerate(ineqs):
        constraints.append((a, idx, cid)); cid += 1

    processed = []

    def zero_set(r):
        # Degenerate cones make the incremental tight sets unreliable, so
        # every ray's tight set is recomputed against all processed rows.
        return {c for row, _, c in processed if dot(row, r) == 0}

    for a, label, cur in constraints:
        processed.append((a, label, cur))
        # Absorb the constraint into the lineality space if possible.
        l0 = next((l for l in lineality if dot(a, l) != 0), None)
        if l0 is not None:
            v0 = dot(a, l0)
            lineality = [
                [x - (dot(a, l) / v0) * y for x, y in zip(l, l0)]
                for l in lineality if l is not l0
            ]
            r0 = l0 if v0 > 0 else [-x for x in l0]
            new_rays = []
            for r in rays:
                vr = dot(a, r)
                new_rays.append([x - (vr / abs(v0)) * y for x, y in zip(r, r0)])
            new_rays.append(r0)
            rays = new_rays
            zeros = [zero_set(r) for r in rays]
        else:
            vals = [dot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            zer = [i for i, v in enumerate(vals) if v == 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            new_rays = [rays[i] for i in pos + zer]
            new_zeros = [zeros[i] | ({cur} if i in zer else set())
                         for i in pos + zer]
            for ip in pos:
                for im in neg:
                    common = zeros[ip] & zeros[im]
                    adjacent = True
                    for io in range(len(rays)):
                        if io in (ip, im):
                            continue
                        if common <= zeros[io]:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    comb = [vals[ip] * rays[im][j] - vals[im] * rays[ip][j]
                            for j in range(dim)]
                    new_rays.append(comb)
                    new_zeros.append(zero_set(comb))
            rays, zeros = new_rays, new_zeros

        # Keep one primitive representative per direction; duplicates would
        # defeat the adjacency test on the next constraint.
        dedup, dedup_zeros, seen = [], [], set()
        for r, z in zip(rays, zeros):
            ri = primitive_direction(r)
            key = tuple(ri)
            if all(x == 0 for x in key) or key in seen:
                continue
            seen.add(key)
            dedup.append(list(map(Fraction, ri)))
            dedup_zeros.append(z)
        rays, zeros = dedup, dedup_zeros

    # Normalize, dedupe.
    label_of = {c: lab for _, lab, c in processed}
    out_rays, out_tights, seen = [], [], set()
    for r, z in zip(rays, zeros):
        ri = tuple(primitive_direction(r))
        if all(x == 0 for x in ri) or ri in seen:
            continue
        seen.add(ri)
        out_rays.append(list(map(Fraction, ri)))
        out_tights.append(frozenset(label_of[c] for c in z
                                    if label_of[c] is not None))
    lin = [list(map(Fraction, primitive_direction(l))) for l in lineality
           if any(x != 0 for x in l)]
    return lin, out_rays, out_tights
