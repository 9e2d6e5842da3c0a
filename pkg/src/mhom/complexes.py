"""Finite metric simplicial complexes with exact rational geometry.

A complex carries rational vertex coordinates in Euclidean space; the
metric is the restriction of the ambient distance.  Piecewise-linear maps,
Lipschitz extension of sampled data, star contractions and covers by open
balls all live here.  Comparisons stay on squared distances.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import GeometryError, InputError
from .geometry import (
    barycentric_coords,
    barycentric_subdivide,
    is_degenerate,
    point_in_simplex,
    point_simplex_dist2,
    solve_fraction_system,
)
from .intlinalg import IntMatrix
from .chaincomplex import ChainComplexZ, RelativePair
from .rational import dist2, dot, frac, sqrt_lower, sqrt_upper, vsub


class MetricComplex:
    """Geometric simplicial complex with Fraction vertex coordinates.

    simplices are sorted index tuples, closed under taking faces, each
    geometrically non-degenerate.  Named subcomplexes are lists of simplex
    indices, themselves face-closed.
    """

    def __init__(self, ambient_dim, vertices, simplices, subcomplexes=None):
        self.ambient_dim = int(ambient_dim)
        self.vertices = [tuple(frac(c) for c in v) for v in vertices]
        for v in self.vertices:
            if len(v) != self.ambient_dim:
                raise InputError("vertex coordinate count does not match ambient_dim")
        seen = set()
        self.simplices = []
        for s in simplices:
            t = tuple(sorted(int(i) for i in s))
            if len(set(t)) != len(t):
                raise InputError(f"repeated vertex in simplex {s}")
            if t not in seen:
                seen.add(t)
                self.simplices.append(t)
        self.simplices.sort(key=lambda t: (len(t), t))
        index = set(self.simplices)
        for t in self.simplices:
            if t[-1] >= len(self.vertices) or t[0] < 0:
                raise InputError(f"simplex {t} has an invalid vertex index")
            for j in range(len(t)):
                f = t[:j] + t[j + 1:]
                if f and f not in index:
                    raise InputError(f"face {f} of {t} is missing")
            if is_degenerate(self.points_of(t)):
                raise InputError(f"simplex {t} is geometrically degenerate")
        self.subcomplexes = {}
        for name, idxs in (subcomplexes or {}).items():
            self.subcomplexes[name] = sorted(set(int(i) for i in idxs))
            for i in self.subcomplexes[name]:
                if i < 0 or i >= len(self.simplices):
                    raise InputError(f"subcomplex {name!r} has a bad simplex index")
        self._index = {t: i for i, t in enumerate(self.simplices)}
        for name, idxs in self.subcomplexes.items():
            chosen = set(self.simplices[i] for i in idxs)
            for t in chosen:
                for j in range(len(t)):
                    f = t[:j] + t[j + 1:]
                    if f and f not in chosen:
                        raise InputError(f"subcomplex {name!r} is not face-closed")

    # -- basic queries ---------------------------------------------------

    def points_of(self, simplex):
        return tuple(self.vertices[i] for i in simplex)

    def dimension(self):
        return max(len(t) for t in self.simplices) - 1

    def top_simplices(self):
        """Simplices that are not proper faces of another simplex."""
        faces = set()
        for t in self.simplices:
            for j in range(len(t)):
                f = t[:j] + t[j + 1:]
                if f:
                    faces.add(f)
        return [t for t in self.simplices if t not in faces]

    def distance2(self, p, q) -> Fraction:
        return dist2(p, q)

    def distance(self, p, q) -> float:
        return float(sqrt_lower(dist2(p, q), 60))

    def contains_point(self, p) -> bool:
        return any(point_in_simplex(p, self.points_of(t)) for t in self.top_simplices())

    def find_containing_simplex(self, points):
        """Index of a simplex containing every given point, or None."""
        for t in self.top_simplices():
            verts = self.points_of(t)
            if all(point_in_simplex(p, verts) for p in points):
                return self._index[t]
        for t in self.simplices:
            verts = self.points_of(t)
            if all(point_in_simplex(p, verts) for p in points):
                return self._index[t]
        return None

    def subdivided_tops(self, depth: int):
        """Pieces of all top simplices after depth barycentric rounds.

        Returns a list of (top_simplex_index, piece vertex tuple).
        """
        out = []
        for t in self.top_simplices():
            pieces = [self.points_of(t)]
            for _ in range(depth):
                nxt = []
                for tup in pieces:
                    nxt.extend(sub for _, sub in barycentric_subdivide(tup))
                pieces = nxt
            ti = self._index[t]
            out.extend((ti, tup) for tup in pieces)
        return out

    def sample_vertices(self, depth: int):
        """Deduplicated vertex points of the depth-fold subdivision."""
        seen, out = set(), []
        for _, tup in self.subdivided_tops(depth):
            for p in tup:
                if p not in seen:
                    seen.add(p)
                    out.append(p)
        out.sort()
        return out

    # -- simplicial chain complex ----------------------------------------

    def chain_basis(self):
        top = self.dimension()
        basis = {k: [] for k in range(top + 1)}
        for t in self.simplices:
            basis[len(t) - 1].append(t)
        for k in basis:
            basis[k].sort()
        return basis

    def chain_complex(self):
        basis = self.chain_basis()
        top = max(basis)
        dims = [len(basis[k]) for k in range(top + 1)]
        pos = {k: {t: i for i, t in enumerate(basis[k])} for k in basis}
        bnds = {}
        for k in range(1, top + 1):
            M = IntMatrix(dims[k - 1], dims[k])
            for t in basis[k]:
                j = pos[k][t]
                for d in range(k + 1):
                    f = t[:d] + t[d + 1:]
                    M.set(pos[k - 1][f], j, M.get(pos[k - 1][f], j) + (-1) ** d)
            bnds[k] = M
        return ChainComplexZ(dims, bnds), basis

    def relative_pair(self, name: str) -> RelativePair:
        if name not in self.subcomplexes:
            raise InputError(f"unknown subcomplex {name!r}")
        C, basis = self.chain_complex()
        chosen = [self.simplices[i] for i in self.subcomplexes[name]]
        sub = {}
        for k, blist in basis.items():
            pos = {t: i for i, t in enumerate(blist)}
            sub[k] = [pos[t] for t in chosen if len(t) - 1 == k]
        return RelativePair(C, sub)


# -- piecewise linear maps -------------------------------------------------


class PLMap:
    """Piecewise-affine map into R^m.

    Either globally affine (matrix plus offset) or interpolated from
    vertex values over an explicit list of cells.  Cellwise data must be
    continuous across shared faces; evaluation is exact over Q.
    """

    def __init__(self, target_dim, matrix=None, offset=None, cells=None, cell_values=None):
        self.target_dim = int(target_dim)
        self.matrix = None
        self.offset = None
        self.cells = None
        self.cell_values = None
        if matrix is not None:
            self.matrix = [tuple(frac(x) for x in row) for row in matrix]
            self.offset = tuple(frac(x) for x in (offset or [0] * self.target_dim))
            if len(self.matrix) != self.target_dim:
                raise InputError("affine matrix has wrong number of rows")
        else:
            self.cells = [tuple(tuple(frac(x) for x in p) for p in c) for c in cells]
            self.cell_values = [tuple(tuple(frac(x) for x in v) for v in vals)
                                for vals in cell_values]
            for c, vals in zip(self.cells, self.cell_values):
                if len(c) != len(vals):
                    raise InputError("cell and value counts differ")
                for v in vals:
                    if len(v) != self.target_dim:
                        raise InputError("cell value has wrong target dimension")

    # constructors

    @staticmethod
    def affine(matrix, offset=None):
        return PLMap(len(matrix), matrix=matrix, offset=offset)

    @staticmethod
    def identity(n):
        return PLMap(n, matrix=[[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def constant(point):
        n = len(point)
        return PLMap(n, matrix=[[0] * n for _ in range(n)], offset=point)

    @staticmethod
    def coordinate(n, j):
        """Projection to the j-th coordinate as a scalar map."""
        return PLMap(1, matrix=[[1 if i == j else 0 for i in range(n)]])

    @staticmethod
    def from_vertex_values(cells, value_fn, target_dim):
        vals = [tuple(tuple(frac(x) for x in value_fn(p)) for p in c) for c in cells]
        return PLMap(target_dim, cells=cells, cell_values=vals)

    @staticmethod
    def scalar_from_vertex_values(cells, value_fn):
        return PLMap.from_vertex_values(cells, lambda p: (value_fn(p),), 1)

    # evaluation

    def is_affine(self):
        return self.matrix is not None

    def find_cell(self, points):
        """Index of a cell containing all the points, or None."""
        for i, c in enumerate(self.cells):
            if all(point_in_simplex(p, c) for p in points):
                return i
        return None

    def __call__(self, p):
        p = tuple(frac(x) for x in p)
        if self.matrix is not None:
            return tuple(dot(row, p) + off for row, off in zip(self.matrix, self.offset))
        i = self.find_cell([p])
        if i is None:
            raise GeometryError(f"point {p} is outside every cell of the map")
        return self.value_on_cell(i, p)

    def value_on_cell(self, i, p):
        lam = barycentric_coords(p, self.cells[i])
        if lam is None:
            raise GeometryError("point is outside the affine hull of its cell")
        vals = self.cell_values[i]
        return tuple(sum((l * v[d] for l, v in zip(lam, vals)), Fraction(0))
                     for d in range(self.target_dim))

    def scalar(self, p) -> Fraction:
        if self.target_dim != 1:
            raise InputError("not a scalar map")
        return self(p)[0]

    def affine_on(self, simplex_points) -> bool:
        """Is the map affine on the given simplex (so vertex images determine it)?"""
        if self.matrix is not None:
            return True
        return self.find_cell(list(simplex_points)) is not None

    # Lipschitz data

    def _cell_differential_gram(self, cell, vals):
        """Pair (G_source, G_target) of Gram matrices of edge vectors."""
        E = [vsub(p, cell[0]) for p in cell[1:]]
        W = [vsub(v, vals[0]) for v in vals[1:]]
        G = [[dot(a, b) for b in E] for a in E]
        H = [[dot(a, b) for b in W] for a in W]
        return G, H

    def scalar_lipschitz_squared(self, cells=None) -> Fraction:
        """Exact squared Lipschitz constant of a scalar map, maximized over
        cells (restricted to each cell's tangent space)."""
        if self.target_dim != 1:
            raise InputError("not a scalar map")
        if self.matrix is not None:
            return dot(self.matrix[0], self.matrix[0])
        best = Fraction(0)
        for cell, vals in zip(self.cells, self.cell_values):
            E = [vsub(p, cell[0]) for p in cell[1:]]
            d = [v[0] - vals[0][0] for v in vals[1:]]
            G = [[dot(a, b) for b in E] for a in E]
            a = solve_fraction_system(G, d)
            if a is None:
                raise GeometryError("degenerate cell in scalar Lipschitz bound")
            val = sum((ai * di for ai, di in zip(a, d)), Fraction(0))
            best = max(best, val)
        return best

    def lipschitz_constant(self, cells=None) -> float:
        """Operator-norm Lipschitz constant (float, via dense eigenvalues).

        For a globally affine map this is the spectral norm of the matrix;
        for cellwise data, the maximum over cells of the norm of the
        differential restricted to the cell's tangent space.
        """
        import numpy as np
        from scipy.linalg import eigh

        if self.matrix is not None:
            A = np.array([[float(x) for x in row] for row in self.matrix])
            if A.size == 0:
                return 0.0
            return float(np.linalg.norm(A, 2))
        best = 0.0
        for cell, vals in zip(self.cells, self.cell_values):
            G, H = self._cell_differential_gram(cell, vals)
            if not G:
                continue
            Gn = np.array([[float(x) for x in row] for row in G])
            Hn = np.array([[float(x) for x in row] for row in H])
            w = eigh(Hn, Gn, eigvals_only=True)
            best = max(best, float(max(w)) ** 0.5)
        return best

    def lipschitz_at_most(self, L) -> bool:
        """Exact check Lip <= L via positive semidefiniteness of
        L^2 G_source - G_target on every cell."""
        L2 = frac(L) ** 2
        if self.matrix is not None:
            # rows of the matrix act on the whole space
            A = self.matrix
            M = [[sum(A[d][i] * A[d][j] for d in range(self.target_dim))
                  for j in range(len(A[0]))] for i in range(len(A[0]))]
            I = [[L2 if i == j else Fraction(0) for j in range(len(M))] for i in range(len(M))]
            diff = [[I[i][j] - M[i][j] for j in range(len(M))] for i in range(len(M))]
            return _psd(diff)
        for cell, vals in zip(self.cells, self.cell_values):
            G, H = self._cell_differential_gram(cell, vals)
            diff = [[L2 * G[i][j] - H[i][j] for j in range(len(G))] for i in range(len(G))]
            if not _psd(diff):
                return False
        return True


def _psd(M) -> bool:
    """Exact positive semidefiniteness of a symmetric Fraction matrix,
    via Schur-complement elimination over Q."""
    n = len(M)
    A = [[frac(x) for x in row] for row in M]
    for k in range(n):
        if A[k][k] < 0:
            return False
        if A[k][k] == 0:
            # a zero diagonal entry forces its whole row and column to vanish
            if any(A[k][j] != 0 for j in range(k, n)) or any(A[i][k] != 0 for i in range(k, n)):
                return False
            continue
        p = A[k][k]
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] / p
                for j in range(k + 1, n):
                    A[i][j] -= f * A[k][j]
                A[i][k] = Fraction(0)
        for j in range(k + 1, n):
            A[k][j] = Fraction(0)
    return True


def lipschitz_constant(m: PLMap) -> float:
    return m.lipschitz_constant()


# -- McShane extension -----------------------------------------------------


def mcshane_extension(complex_: MetricComplex, boundary_values, L, depth=2, prec=30):
    """Rational realization of the largest L-Lipschitz extension.

    boundary_values: list of (point, value) pairs with rational values,
    checked to be L-Lipschitz pairwise (exact squared comparison).  Sample
    points are the depth-fold subdivision vertices; each gets a rational
    value within 2^-prec below its inf-convolution bound, chosen so the
    full assignment stays exactly L-Lipschitz and matches the boundary
    data without rounding.  Returns a scalar cellwise PLMap.
    """
    L = frac(L)
    if L < 0:
        raise InputError("negative Lipschitz bound")
    anchors = []
    for p, v in boundary_values:
        p = tuple(frac(x) for x in p)
        anchors.append((p, frac(v)))
    for (p, u), (q, v) in combinations(anchors, 2):
        if (u - v) ** 2 > L * L * dist2(p, q):
            raise GeometryError(
                f"boundary data is not {L}-Lipschitz on the pair {p}, {q}")

    assigned = dict(anchors)
    order = [p for p in complex_.sample_vertices(depth) if p not in assigned]

    def admissible(q, x):
        for p, v in assigned.items():
            if (q - v) ** 2 > L * L * dist2(x, p):
                return False
        return True

    for x in order:
        # exact radical bounds, then a rational pick near the upper end
        ups, los = [], []
        for p, v in assigned.items():
            d2 = L * L * dist2(x, p)
            ups.append((v, d2))
            los.append((v, d2))
        hi = min(v + sqrt_upper(d2, prec + 10) for v, d2 in ups)
        lo = max(v - sqrt_upper(d2, prec + 10) for v, d2 in los)
        q = None
        step = Fraction(1, 1 << prec)
        cand = hi
        for _ in range(prec + 14):
            if lo - step <= cand and admissible(cand, x):
                q = cand
                break
            cand -= step
            if cand < lo - step:
                cand = (lo + hi) / 2
        if q is None or not admissible(q, x):
            # fall back to a midpoint bisection scan
            a, b = lo - step, hi + step
            for _ in range(prec + 20):
                mid = (a + b) / 2
                if admissible(mid, x):
                    q = mid
                    break
                # move toward the feasible band by testing quarters
                if admissible((a + mid) / 2, x):
                    q = (a + mid) / 2
                    break
                a, b = (a * 3 + b) / 4, (a + b * 3) / 4
            if q is None:
                raise GeometryError(
                    f"no rational value admissible at sample point {x}")
        assigned[x] = q

    cells = [tup for _, tup in complex_.subdivided_tops(depth)]
    values = []
    for c in cells:
        row = []
        for p in c:
            if p not in assigned:
                raise GeometryError("subdivision vertex missed by the sampler")
            row.append((assigned[p],))
        values.append(tuple(row))
    return PLMap(1, cells=cells, cell_values=values)


# -- star contractions -----------------------------------------------------


class LipschitzHomotopy:
    """Straight-line homotopy h(x, t) = (1-t) x + t x0 on a star-shaped
    region, certified cell by cell against the complex carrier.

    h0 is the inclusion, h1 the constant map at the center.  Both are
    globally affine, which is what prism and cone constructions need.
    """

    def __init__(self, complex_, cells, center, certificates):
        self.complex = complex_
        self.cells = cells
        self.center = center
        self.certificates = certificates
        n = len(center)
        self.h0 = PLMap.identity(n)
        self.h1 = PLMap.constant(center)

    def at_time(self, t):
        t = frac(t)
        n = len(self.center)
        mat = [[(1 - t) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        off = tuple(t * c for c in self.center)
        return PLMap(n, matrix=mat, offset=off)


def star_contraction(complex_: MetricComplex, cells, center) -> LipschitzHomotopy:
    """Contraction of a star-shaped union of cells to the center point.

    Verifies, cell by cell, that the cone from the center over the cell
    stays inside the complex carrier (there must be a single simplex
    containing the cell and the center).  Failure names the bad cell.
    """
    center = tuple(frac(x) for x in center)
    cells = [tuple(tuple(frac(x) for x in p) for p in c) for c in cells]
    certs = []
    for c in cells:
        idx = complex_.find_containing_simplex(list(c) + [center])
        if idx is None:
            raise GeometryError(
                f"star-shape violation: no carrier simplex contains the cell {c} "
                f"together with the center {center}")
        certs.append(idx)
    return LipschitzHomotopy(complex_, cells, center, certs)


# -- covers by open balls ---------------------------------------------------


class BallCover:
    """Cover of the carrier by open metric balls with rational data.

    Each ball stores an exact rational center (optionally described
    barycentrically inside a named simplex) and a rational radius.
    Membership tests compare squared distances.
    """

    def __init__(self, complex_: MetricComplex, balls):
        self.complex = complex_
        self.centers = []
        self.radii = []
        self.descriptions = []
        for b in balls:
            if "center" in b:
                c = tuple(frac(x) for x in b["center"])
                desc = None
            else:
                si = int(b["center_simplex"])
                lam = [frac(x) for x in b["barycentric"]]
                tup = complex_.simplices[si]
                if len(lam) != len(tup):
                    raise InputError("barycentric coordinate count mismatch")
                if sum(lam) != 1 or any(x < 0 for x in lam):
                    raise InputError("barycentric coordinates must be a convex combination")
                pts = complex_.points_of(tup)
                c = tuple(sum((l * p[d] for l, p in zip(lam, pts)), Fraction(0))
                          for d in range(complex_.ambient_dim))
                desc = (si, tuple(lam))
            r = frac(b["radius"])
            if r <= 0:
                raise InputError("ball radius must be positive")
            self.centers.append(c)
            self.radii.append(r)
            self.descriptions.append(desc)

    def __len__(self):
        return len(self.centers)

    def contains(self, i, p) -> bool:
        return dist2(p, self.centers[i]) < self.radii[i] ** 2

    def simplex_inside(self, i, tup) -> bool:
        """Whole simplex strictly inside the open ball (convexity)."""
        return all(self.contains(i, p) for p in tup)

    def first_ball_containing(self, tup):
        for i in range(len(self.centers)):
            if self.simplex_inside(i, tup):
                return i
        return None

    def verify_covers(self, depth: int):
        """Every depth-subdivision piece must fit in one ball.

        Returns the list of uncovered pieces (empty when certified)."""
        missed = []
        for _, tup in self.complex.subdivided_tops(depth):
            if self.first_ball_containing(tup) is None:
                missed.append(tup)
        return missed

    def witness_point(self, indices, depth: int = 2):
        """A point of the carrier inside every listed ball, or None."""
        for p in self.complex.sample_vertices(depth):
            if all(self.contains(i, p) for i in indices):
                return p
        return None

    def intersection_contains(self, indices, p):
        return all(self.contains(i, p) for i in indices)

    def intersection_empty_certificate(self, indices) -> bool:
        """Exact proof that the listed balls share no carrier point.

        Certifies emptiness when every top simplex keeps its whole distance
        to some listed center at least that ball's radius.  A False return
        is inconclusive on its own.
        """
        for s in self.complex.top_simplices():
            tup = self.complex.points_of(s)
            if not any(point_simplex_dist2(self.centers[i], tup) >= self.radii[i] ** 2
                       for i in indices):
                return False
        return True

    def refinement_map(self, coarser: "BallCover"):
        """lambda: for each ball here, a coarser ball containing it.

        Containment is certified by d(c, c') + r <= r' checked on squares.
        """
        lam = []
        for c, r in zip(self.centers, self.radii):
            target = None
            for j, (c2, r2) in enumerate(zip(coarser.centers, coarser.radii)):
                gap = r2 - r
                if gap >= 0 and dist2(c, c2) <= gap * gap:
                    target = j
                    break
            if target is None:
                raise GeometryError(
                    f"no coarser ball contains the ball at {c} with radius {r}")
            lam.append(target)
        return lam


def vertex_star_cover(complex_: MetricComplex, depth: int,
                      radius_factor=Fraction(9, 8)) -> BallCover:
    """Cover by balls at the depth-subdivision vertices.

    The common radius is radius_factor times the largest piece diameter at
    that depth, so every piece fits inside the ball of each of its own
    vertices.  Coverage is verified one level deeper; failure raises.
    """
    if radius_factor <= 1:
        raise InputError("radius_factor must exceed 1")
    pieces = complex_.subdivided_tops(depth)
    centers = complex_.sample_vertices(depth)
    maxdiam2 = Fraction(0)
    for _, tup in pieces:
        for a, b in combinations(tup, 2):
            maxdiam2 = max(maxdiam2, dist2(a, b))
    r = sqrt_upper(maxdiam2, 20) * frac(radius_factor)
    cover = BallCover(complex_, [{"center": c, "radius": r} for c in centers])
    missed = cover.verify_covers(depth + 1)
    if missed:
        raise GeometryError(
            f"cover verification failed: {len(missed)} pieces uncovered at depth {depth + 1}")
    return cover


def refine_cover(coarse: BallCover, factor=Fraction(1, 2), depth: int = 2):
    """Shrink a cover: new balls at subdivision vertices, each inscribed in a
    coarse ball with room to spare.

    The new radius at a center c is factor times the best slack
    r_B - d(c, c_B) over coarse balls B containing c, which makes the
    refinement certificate d + r' <= r automatic.  Returns the refined cover
    and the index map into the coarse cover.  Raises if the refined balls do
    not cover the carrier.
    """
    complex_ = coarse.complex
    factor = frac(factor)
    if not (0 < factor < 1):
        raise InputError("refinement factor must lie strictly between 0 and 1")
    last = None
    for d in range(depth, depth + 3):
        balls = []
        for c in complex_.sample_vertices(d):
            best_slack = None
            for cb, rb in zip(coarse.centers, coarse.radii):
                d2 = dist2(c, cb)
                if d2 >= rb * rb:
                    continue
                slack = rb - sqrt_upper(d2, 25)
                if slack > 0 and (best_slack is None or slack > best_slack):
                    best_slack = slack
            if best_slack is None:
                raise GeometryError("subdivision vertex escapes every coarse ball")
            balls.append({"center": c, "radius": best_slack * factor})
        fine = BallCover(complex_, balls)
        missed = fine.verify_covers(d + 1)
        if not missed:
            return fine, fine.refinement_map(coarse)
        last = missed
    raise GeometryError(
        f"refined cover fails to cover: {len(last)} pieces missed")
