"""Independent reference computations for cross-checking test values.

Everything here is deliberately naive and self-contained: minor
enumeration instead of elimination for invariant factors, dense Gaussian
elimination over Q and over prime fields for ranks.  Slow but obviously
correct on the small inputs the tests use.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def minor_gcds(rows):
    """d_k = gcd of all k x k minors, for k = 1..rank bound."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    out = []
    for k in range(1, min(n, m) + 1):
        g = 0
        for ri in combinations(range(n), k):
            for ci in combinations(range(m), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, _det(sub))
        out.append(abs(g))
        if out[-1] == 0:
            break
    return out


def _det(sq):
    n = len(sq)
    if n == 1:
        return sq[0][0]
    total = 0
    for j in range(n):
        if sq[0][j]:
            sub = [row[:j] + row[j + 1:] for row in sq[1:]]
            term = sq[0][j] * _det(sub)
            total += term if j % 2 == 0 else -term
    return total


def invariant_factors(rows):
    """Nontrivial diagonal of the integer normal form, from minor gcds."""
    ds = minor_gcds(rows)
    out = []
    prev = 1
    for d in ds:
        if d == 0:
            break
        out.append(d // prev)
        prev = d
    return out


def field_rank(rows, p=None):
    """Rank by Gaussian elimination over Q (p None) or over GF(p)."""
    if p is None:
        mat = [[Fraction(x) for x in row] for row in rows]
    else:
        mat = [[x % p for x in row] for row in rows]
    n = len(mat)
    m = len(mat[0]) if n else 0
    rank = 0
    col = 0
    while rank < n and col < m:
        piv = next((i for i in range(rank, n) if mat[i][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        if p is None:
            inv = 1 / mat[rank][col]
            mat[rank] = [x * inv for x in mat[rank]]
        else:
            inv = pow(mat[rank][col], p - 2, p)
            mat[rank] = [(x * inv) % p for x in mat[rank]]
        for i in range(n):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                if p is None:
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
                else:
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def simplicial_boundary_rows(faces, cells):
    """Boundary matrix rows of the map from `cells` to `faces`.

    Both arguments are lists of sorted vertex tuples; entry (i, j) is the
    signed incidence of faces[i] in cells[j].
    """
    index = {f: i for i, f in enumerate(faces)}
    rows = [[0] * len(cells) for _ in faces]
    for j, cell in enumerate(cells):
        for k in range(len(cell)):
            face = cell[:k] + cell[k + 1:]
            sign = 1 if k % 2 == 0 else -1
            rows[index[face]][j] += sign
    return rows


def betti_numbers(simplices_by_dim, p=None):
    """Betti numbers over Q or GF(p) from scratch.

    simplices_by_dim: dict k -> sorted list of sorted vertex tuples.
    """
    top = max(simplices_by_dim)
    out = []
    for k in range(top + 1):
        cells = simplices_by_dim.get(k, [])
        nk = len(cells)
        if k == 0:
            rk = 0
        else:
            rows = simplicial_boundary_rows(simplices_by_dim[k - 1], cells)
            rk = field_rank(rows, p) if cells else 0
        above = simplices_by_dim.get(k + 1, [])
        if above:
            rows = simplicial_boundary_rows(cells, above)
            rk1 = field_rank(rows, p)
        else:
            rk1 = 0
        out.append(nk - rk - rk1)
    return out
