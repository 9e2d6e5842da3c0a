"""Exact affine-simplex utilities shared by chains and currents.

Simplices are ordered tuples of points (tuples of Fraction).  Everything
here is combinatorial or solved over Q; orientation travels with vertex
order and permutation parity.
"""

from __future__ import annotations

from fractions import Fraction

from .rational import centroid, dist2, dot, frac, lerp, vsub

Simplex = tuple  # tuple of points


def solve_fraction_system(A, b):
    """Solve A x = b over Q; returns None when inconsistent.

    A: list of rows; free variables are set to zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[frac(x) for x in row] + [frac(bv)] for row, bv in zip(A, b)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = M[i][n]
    return x


def barycentric_coords(p, verts):
    """Barycentric coordinates of p in the simplex, or None if p is
    outside the affine hull.  Coordinates may be negative."""
    n = len(p)
    k1 = len(verts)
    A = [[verts[j][i] for j in range(k1)] for i in range(n)]
    A.append([Fraction(1)] * k1)
    b = list(p) + [Fraction(1)]
    return solve_fraction_system(A, b)


def point_in_simplex(p, verts) -> bool:
    lam = barycentric_coords(p, verts)
    return lam is not None and all(x >= 0 for x in lam)


def edge_matrix(verts):
    return [vsub(v, verts[0]) for v in verts[1:]]


def gram_matrix(verts):
    E = edge_matrix(verts)
    return [[dot(a, b) for b in E] for a in E]


def det_fraction(M) -> Fraction:
    M = [row[:] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def gram_det(verts) -> Fraction:
    if len(verts) == 1:
        return Fraction(1)
    return det_fraction(gram_matrix(verts))


def is_degenerate(verts) -> bool:
    """Affinely dependent vertex tuple (repeats included)."""
    return gram_det(verts) == 0


def volume_squared(verts) -> Fraction:
    """Squared k-volume of the simplex."""
    k = len(verts) - 1
    if k == 0:
        return Fraction(1)
    f = 1
    for i in range(2, k + 1):
        f *= i
    return gram_det(verts) / (f * f)


def simplex_boundary_terms(tup: Simplex):
    """Alternating facet tuples: sum_i (-1)^i (drop vertex i)."""
    out = []
    for i in range(len(tup)):
        out.append((1 if i % 2 == 0 else -1, tup[:i] + tup[i + 1:]))
    return out


def barycentric_subdivide(tup: Simplex):
    """Terms of the barycentric subdivision, cone-on-boundary recursion.

    Returns [(sign, tuple)].  The pieces partition the simplex and the
    operation commutes with the alternating boundary.
    """
    if len(tup) == 1:
        return [(1, tup)]
    b = centroid(tup)
    out = []
    for s, face in simplex_boundary_terms(tup):
        for s2, sub in barycentric_subdivide(face):
            out.append((s * s2, (b,) + sub))
    return out


def staircase_prism(bottom, top):
    """Prism terms sum_i (-1)^i [v_0..v_i, w_i..w_k].

    Purely combinatorial: together with the alternating boundary this
    satisfies  b P + P b = [top] - [bottom]  exactly, for any vertex data.
    """
    k = len(bottom) - 1
    out = []
    for i in range(k + 1):
        tup = bottom[:i + 1] + top[i:]
        out.append((1 if i % 2 == 0 else -1, tup))
    return out


def canonical_orientation(tup: Simplex):
    """(sorted tuple, parity sign) under stable lexicographic vertex sort."""
    order = sorted(range(len(tup)), key=lambda i: (tup[i], i))
    # count inversions of the permutation for parity
    inv = 0
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b]:
                inv += 1
    return tuple(tup[i] for i in order), (1 if inv % 2 == 0 else -1)


def cut_simplex_by_values(tup: Simplex, vals, r):
    """Split a simplex along the affine level set {g = r}.

    vals are the g-values at the vertices (g affine on the simplex).
    Returns (low, high): lists of vertex tuples partitioning the simplex,
    low on g <= r, high on g >= r.  Orientation of every fragment matches
    the parent.  Vertices with value exactly r sit on the cut and are fine;
    the recursion splits crossing edges at exact rational points.
    """
    vals = list(vals)
    cross = None
    for i in range(len(tup)):
        for j in range(len(tup)):
            if vals[i] < r < vals[j]:
                cross = (i, j)
                break
        if cross:
            break
    if cross is None:
        if all(v <= r for v in vals):
            return [tup], []
        return [], [tup]
    i, j = cross
    t = (r - vals[i]) / (vals[j] - vals[i])
    q = lerp(tup[i], tup[j], t)
    tup_a = tup[:j] + (q,) + tup[j + 1:]
    vals_a = vals[:j] + [r] + vals[j + 1:]
    tup_b = tup[:i] + (q,) + tup[i + 1:]
    vals_b = vals[:i] + [r] + vals[i + 1:]
    low_a, high_a = cut_simplex_by_values(tup_a, vals_a, r)
    low_b, high_b = cut_simplex_by_values(tup_b, vals_b, r)
    return low_a + low_b, high_a + high_b


def point_simplex_dist2(p, verts) -> Fraction:
    """Exact squared Euclidean distance from p to the simplex."""
    if len(verts) == 1:
        return dist2(p, verts[0])
    E = edge_matrix(verts)
    G = [[dot(a, b) for b in E] for a in E]
    rhs = [dot(e, vsub(p, verts[0])) for e in E]
    lam = solve_fraction_system(G, rhs)
    if lam is not None and det_fraction(G) != 0:
        lam0 = 1 - sum(lam)
        if lam0 >= 0 and all(x >= 0 for x in lam):
            proj = list(verts[0])
            for c, e in zip(lam, E):
                proj = [a + c * b for a, b in zip(proj, e)]
            return dist2(p, tuple(proj))
    best = None
    for i in range(len(verts)):
        d = point_simplex_dist2(p, verts[:i] + verts[i + 1:])
        if best is None or d < best:
            best = d
    return best


def integrate_affine(tup: Simplex, vertex_values) -> Fraction:
    """Integral over the simplex of the affine function with the given
    vertex values, with respect to the parametrization by the standard
    simplex (volume 1/k! in parameter space)."""
    k = len(tup) - 1
    f = 1
    for i in range(2, k + 1):
        f *= i
    mean = sum(vertex_values, Fraction(0)) / len(vertex_values)
    return mean / f


def integrate_affine_product(tup: Simplex, u_vals, v_vals) -> Fraction:
    """Integral of a product of two affine functions over the standard
    parameter simplex: vol * (sum u_i v_i + (sum u_i)(sum v_i)) / ((k+1)(k+2))."""
    k = len(tup) - 1
    f = 1
    for i in range(2, k + 1):
        f *= i
    m = len(u_vals)
    s = sum((u * v for u, v in zip(u_vals, v_vals)), Fraction(0))
    s += sum(u_vals, Fraction(0)) * sum(v_vals, Fraction(0))
    return s / (f * m * (m + 1))
