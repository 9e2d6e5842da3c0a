"""Polyhedral integral currents in rational ambient space.

A current of degree k is an integer combination of oriented k-simplices,
each an ordered (k+1)-tuple of rational points.  A tuple denotes the affine
image of the standard simplex, so its action on an affine k-form f dpi_1
^ ... ^ dpi_k is weight * det(Dpi) * integral of f, all exact.

reduce() computes a canonical representative: pieces are merged per affine
k-flat through a common refinement, multiplicities are recovered at witness
points, and each flat is retriangulated deterministically.  Two
representations describe the same current exactly when their difference
reduces to nothing.
"""

from fractions import Fraction

from .errors import GeometryError, InputError
from .geometry import (barycentric_subdivide, cut_simplex_by_values,
                       canonical_orientation, centroid, det_fraction,
                       edge_matrix, gram_det, integrate_affine,
                       integrate_affine_product, solve_fraction_system)
from .rational import RadicalSum, dot, frac, vadd, vscale, vsub

MAX_REFINE_ROUNDS = 8
MAX_FRAGMENTS = 50000


def _point(p):
    return tuple(Fraction(x) for x in p)


def _factorial(k):
    f = 1
    for i in range(2, k + 1):
        f *= i
    return f


class PolyhedralCurrent:
    """Integer-weighted oriented rational simplices of one degree."""

    __slots__ = ("ambient_dim", "degree", "pieces")

    def __init__(self, ambient_dim, degree, pieces=None):
        if degree < 0:
            raise InputError("current degree must be nonnegative")
        self.ambient_dim = int(ambient_dim)
        self.degree = int(degree)
        self.pieces = {}
        if pieces:
            for tup, w in dict(pieces).items():
                w = int(w)
                if w == 0:
                    continue
                tup = tuple(_point(p) for p in tup)
                if len(tup) != degree + 1:
                    raise InputError(
                        f"a degree-{degree} piece needs {degree + 1} vertices")
                if any(len(p) != self.ambient_dim for p in tup):
                    raise InputError("vertex dimension mismatch")
                self.pieces[tup] = self.pieces.get(tup, 0) + w
            self.pieces = {t: w for t, w in self.pieces.items() if w}

    @staticmethod
    def from_tuples(ambient_dim, items, degree=None):
        pieces = {}
        for w, tup in items:
            tup = tuple(_point(p) for p in tup)
            pieces[tup] = pieces.get(tup, 0) + int(w)
        if degree is None:
            if not pieces:
                raise InputError("cannot infer degree; pass degree=")
            degree = len(next(iter(pieces))) - 1
        return PolyhedralCurrent(ambient_dim, degree, pieces)

    @staticmethod
    def zero(ambient_dim, degree):
        return PolyhedralCurrent(ambient_dim, degree, {})

    def is_zero_representation(self):
        return not self.pieces

    def __add__(self, other):
        if self.ambient_dim != other.ambient_dim or self.degree != other.degree:
            raise InputError("currents of different type")
        pieces = dict(self.pieces)
        for t, w in other.pieces.items():
            pieces[t] = pieces.get(t, 0) + w
        pieces = {t: w for t, w in pieces.items() if w}
        return PolyhedralCurrent(self.ambient_dim, self.degree, pieces)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        n = int(n)
        return PolyhedralCurrent(self.ambient_dim, self.degree,
                                 {t: n * w for t, w in self.pieces.items() if n * w})

    def boundary(self):
        if self.degree == 0:
            return PolyhedralCurrent(self.ambient_dim, 0, {})
        pieces = {}
        for tup, w in self.pieces.items():
            for i in range(len(tup)):
                face = tup[:i] + tup[i + 1:]
                s = w if i % 2 == 0 else -w
                pieces[face] = pieces.get(face, 0) + s
        return PolyhedralCurrent(self.ambient_dim, self.degree - 1, pieces)

    def subdivide(self, times=1):
        """Barycentric refinement of every piece; the current is unchanged."""
        cur = self
        for _ in range(times):
            pieces = {}
            for tup, w in cur.pieces.items():
                for sign, sub in barycentric_subdivide(tup):
                    pieces[sub] = pieces.get(sub, 0) + sign * w
            cur = PolyhedralCurrent(cur.ambient_dim, cur.degree, pieces)
        return cur

    def refine_until_affine(self, maps):
        """Subdivide until every map in maps is affine on every piece."""
        cur = self
        for _ in range(MAX_REFINE_ROUNDS + 1):
            if all(m.affine_on(tup) for tup in cur.pieces for m in maps):
                return cur
            cur = cur.subdivide()
        raise GeometryError("maps never became affine on the refined pieces")

    def evaluate(self, f, pis):
        """Action on (f, pi_1, ..., pi_k) with piecewise-affine scalar data.

        Exact rational: pieces are refined until all entries are affine on
        each, then per piece the integral is weight * det(pi differences) *
        mean(f at vertices) / k!.
        """
        pis = list(pis)
        if len(pis) != self.degree:
            raise InputError(f"need exactly {self.degree} one-form entries")
        cur = self.refine_until_affine([f] + pis)
        total = Fraction(0)
        k = self.degree
        for tup, w in cur.pieces.items():
            fvals = [f.scalar(p) for p in tup]
            if k == 0:
                total += w * fvals[0]
                continue
            mat = [[pi.scalar(tup[j + 1]) - pi.scalar(tup[0]) for j in range(k)]
                   for pi in pis]
            d = det_fraction(mat)
            if d:
                total += w * d * integrate_affine(tup, fvals)
        return total

    def mass(self, canonical=True):
        """Total mass as an exact radical sum."""
        cur = self.reduce() if canonical else self
        k = self.degree
        fk = _factorial(k)
        out = RadicalSum()
        for tup, w in cur.pieces.items():
            g = gram_det(tup)
            if g:
                out = out + RadicalSum.sqrt_of(g).scale(Fraction(abs(w), fk))
        return out

    def mass_float(self, canonical=True):
        lo, hi = self.mass(canonical).bounds(40)
        return float((lo + hi) / 2)

    def support_pieces(self):
        """Pieces of the canonical representative (closed support carrier)."""
        return list(self.reduce().pieces.keys())

    def pushforward(self, plmap):
        """Image current under a piecewise-affine map, by vertex images of
        refined pieces.  Degenerate images are kept; reduce() removes them."""
        cur = self.refine_until_affine([plmap])
        pieces = {}
        for tup, w in cur.pieces.items():
            image = tuple(_point(plmap(p)) for p in tup)
            pieces[image] = pieces.get(image, 0) + w
        return PolyhedralCurrent(plmap.target_dim, self.degree, pieces)

    def restrict_scalar(self, g, r):
        """Split along the level set {g = r}: returns (below, above).

        g must take the value r at no vertex of the refined pieces; a hit
        means the value is non-generic for this representation and the
        offending vertex is reported.
        """
        r = frac(r)
        cur = self.refine_until_affine([g])
        low = {}
        high = {}
        for tup, w in cur.pieces.items():
            vals = [g.scalar(p) for p in tup]
            for p, v in zip(tup, vals):
                if v == r:
                    raise GeometryError(
                        f"restriction value {r} is non-generic: vertex {p} "
                        f"lies on the level set")
            lo, hi = cut_simplex_by_values(tup, vals, r)
            for t in lo:
                low[t] = low.get(t, 0) + w
            for t in hi:
                high[t] = high.get(t, 0) + w
        return (PolyhedralCurrent(cur.ambient_dim, cur.degree, low),
                PolyhedralCurrent(cur.ambient_dim, cur.degree, high))

    def product_interval(self):
        """Product with [0,1]: staircase triangulation in one more dimension.

        Satisfies boundary(T x I) = T x {1} - T x {0} - (boundary T) x I
        exactly at the level of representations.
        """
        pieces = {}
        for tup, w in self.pieces.items():
            bottom = [p + (Fraction(0),) for p in tup]
            top = [p + (Fraction(1),) for p in tup]
            for i in range(len(tup)):
                stair = tuple(bottom[:i + 1]) + tuple(top[i:])
                s = w if i % 2 == 0 else -w
                pieces[stair] = pieces.get(stair, 0) + s
        return PolyhedralCurrent(self.ambient_dim + 1, self.degree + 1, pieces)

    def embed_at_height(self, t):
        t = frac(t)
        pieces = {tuple(p + (t,) for p in tup): w for tup, w in self.pieces.items()}
        return PolyhedralCurrent(self.ambient_dim + 1, self.degree, pieces)

    def cone(self, apex):
        """Join to a point: apex prepended to every piece.

        boundary(cone T) = T - cone(boundary T), so cones fill cycles.
        """
        v = _point(apex)
        if len(v) != self.ambient_dim:
            raise InputError("apex dimension mismatch")
        pieces = {}
        for tup, w in self.pieces.items():
            key = (v,) + tup
            pieces[key] = pieces.get(key, 0) + w
        return PolyhedralCurrent(self.ambient_dim, self.degree + 1, pieces)

    def vertex_set(self):
        out = set()
        for tup in self.pieces:
            out.update(tup)
        return out

    def __len__(self):
        return len(self.pieces)

    def __repr__(self):
        return (f"PolyhedralCurrent(dim={self.ambient_dim}, degree={self.degree}, "
                f"pieces={len(self.pieces)})")

    # ---- canonical form ----

    def reduce(self):
        """Canonical representative of the current.

        Degenerate pieces vanish; the rest are grouped by the affine k-flat
        they span, refined against each other inside each flat, and
        rewritten as a deterministic triangulation weighted by exact
        multiplicities at interior witness points.
        """
        k = self.degree
        merged = {}
        for tup, w in self.pieces.items():
            if k > 0 and gram_det(tup) == 0:
                continue
            key, sign = canonical_orientation(tup)
            merged[key] = merged.get(key, 0) + sign * w
        merged = {t: w for t, w in merged.items() if w}
        if k == 0:
            return PolyhedralCurrent(self.ambient_dim, 0, merged)

        groups = {}
        for tup, w in sorted(merged.items()):
            fkey, chart = _flat_chart(tup)
            groups.setdefault(fkey, (chart, []))[1].append((tup, w))

        out = {}
        for fkey in sorted(groups):
            chart, members = groups[fkey]
            for tup, w in _reduce_in_chart(chart, members, k):
                out[tup] = out.get(tup, 0) + w
        out = {t: w for t, w in out.items() if w}
        return PolyhedralCurrent(self.ambient_dim, k, out)

    def equals(self, other):
        return (self - other).reduce().is_zero_representation()

    def is_zero(self):
        return self.reduce().is_zero_representation()


def _rref(rows):
    """Reduced row echelon form over Q; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        f = rows[r][c]
        rows[r] = [x / f for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                g = rows[i][c]
                rows[i] = [x - g * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return [tuple(row) for row in rows[:r] if any(row)]


def _flat_chart(tup):
    """Canonical key and rational chart for the affine flat of a simplex.

    The chart maps flat points to R^k coordinates and back, exactly.
    """
    E = edge_matrix(tup)
    R = _rref(E)
    k = len(R)
    # gram of the canonical basis is invertible on the flat
    G = [[dot(a, b) for b in R] for a in R]
    # anchor: point of the flat closest to the origin
    a = tup[0]
    lam = solve_fraction_system(G, [dot(r, a) for r in R])
    proj = [Fraction(0)] * len(a)
    for c, r in zip(lam, R):
        proj = [x + c * y for x, y in zip(proj, r)]
    anchor = tuple(x - y for x, y in zip(a, proj))
    key = (anchor, tuple(R))

    def to_chart(p):
        rhs = [dot(r, vsub(p, anchor)) for r in R]
        x = solve_fraction_system(G, rhs)
        return tuple(x)

    def from_chart(x):
        p = list(anchor)
        for c, r in zip(x, R):
            p = [u + c * v for u, v in zip(p, r)]
        return tuple(p)

    return key, (to_chart, from_chart)


def _primitive_normal(vec_):
    from math import gcd
    den = 1
    for x in vec_:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec_]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(Fraction(v) for v in ints)


def _facet_hyperplanes(chart_tup):
    """Hyperplanes spanned by the facets of a chart k-simplex."""
    k = len(chart_tup) - 1
    out = []
    for i in range(k + 1):
        facet = chart_tup[:i] + chart_tup[i + 1:]
        if k == 1:
            n = (Fraction(1),)
            c = facet[0][0]
        else:
            E = edge_matrix(facet)
            # one-dimensional nullspace of the facet directions
            rows = _rref(E)
            # find a vector orthogonal to all rows: solve rows . n = 0
            n = _nullvector(rows, k)
            if n is None:
                continue  # degenerate facet spans no hyperplane
            c = dot(n, facet[0])
        n = _primitive_normal(n)
        c = dot(n, facet[0])
        out.append((n, c))
    return out


def _nullvector(rows, n):
    """A nonzero rational vector orthogonal to all rows, or None."""
    if len(rows) >= n:
        return None
    pivots = []
    for row in rows:
        for j, x in enumerate(row):
            if x:
                pivots.append(j)
                break
    free = [j for j in range(n) if j not in pivots]
    if not free:
        return None
    j0 = free[0]
    v = [Fraction(0)] * n
    v[j0] = Fraction(1)
    # rows are in rref: back-substitute pivot entries
    for row, pj in zip(rows, pivots):
        v[pj] = -row[j0]
    return tuple(v)


def _reduce_in_chart(chart, members, k):
    """Canonical weighted triangulation of one flat's pieces."""
    to_chart, from_chart = chart
    cpieces = []
    for tup, w in members:
        ctup = tuple(to_chart(p) for p in tup)
        E = edge_matrix(ctup)
        d = det_fraction(E)
        if d == 0:
            continue
        s = 1 if d > 0 else -1
        cpieces.append((ctup, w, s))
    if not cpieces:
        return []

    hyps = set()
    for ctup, _, _ in cpieces:
        hyps.update(_facet_hyperplanes(ctup))
    hyps = sorted(hyps)

    # cut every piece by every hyperplane
    frag_lists = []
    total = 0
    for ctup, w, s in cpieces:
        frags = [ctup]
        for n, c in hyps:
            nxt = []
            for f in frags:
                vals = [dot(n, p) for p in f]
                lo, hi = cut_simplex_by_values(f, vals, c)
                nxt.extend(lo)
                nxt.extend(hi)
            frags = [f for f in nxt if det_fraction(edge_matrix(f)) != 0]
            total += len(frags)
            if total > MAX_FRAGMENTS:
                raise GeometryError("canonical form exceeded the fragment budget")
        frag_lists.append(frags)

    # group fragments into arrangement regions by centroid sign vectors
    regions = {}
    for idx, frags in enumerate(frag_lists):
        for f in frags:
            cen = centroid(f)
            sig = tuple(1 if dot(n, cen) > c else -1 for n, c in hyps)
            regions.setdefault(sig, []).append((idx, f))

    out = []
    for sig in sorted(regions):
        entries = regions[sig]
        witness = centroid(entries[0][1])
        mult = 0
        for ctup, w, s in cpieces:
            if _chart_point_in(witness, ctup):
                mult += w * s
        if mult == 0:
            continue
        # deterministic triangulation: fragments of the lowest-index piece
        first = min(i for i, _ in entries)
        for i, f in entries:
            if i != first:
                continue
            d = det_fraction(edge_matrix(f))
            fpos = f if d > 0 else (f[1], f[0]) + f[2:]
            amb = tuple(from_chart(p) for p in fpos)
            key, sign = canonical_orientation(amb)
            out.append((key, sign * mult))
    return out


def _chart_point_in(x, ctup):
    k = len(x)
    E = edge_matrix(ctup)
    rhs = vsub(x, ctup[0])
    lam = solve_fraction_system([[E[j][i] for j in range(k)] for i in range(k)],
                                list(rhs))
    if lam is None:
        return False
    if any(l < 0 for l in lam):
        return False
    return sum(lam) <= 1


def integral_of_product(current, u, v, nonzero_of=None, canonical=True):
    """Exact integral of |u| * |v| against the mass measure of the current.

    u may be None for the constant 1.  When nonzero_of is given, the
    integration is restricted to the region where that scalar map is not
    identically zero (a difference of measure zero from {nonzero_of != 0}).
    Returns an exact radical sum.
    """
    cur = current.reduce() if canonical else current
    k = cur.degree
    maps = [m for m in (u, v, nonzero_of) if m is not None]
    cur = cur.refine_until_affine(maps) if maps else cur
    total = RadicalSum()
    for tup, w in cur.pieces.items():
        frags = [tup]
        for m in maps:
            nxt = []
            for f in frags:
                vals = [m.scalar(p) for p in f]
                lo, hi = cut_simplex_by_values(f, vals, Fraction(0))
                nxt.extend(lo)
                nxt.extend(hi)
            frags = nxt
        for f in frags:
            if k > 0:
                g = gram_det(f)
                if g == 0:
                    continue
                scale = RadicalSum.sqrt_of(g)
            else:
                scale = RadicalSum.from_rational(1)
            if nonzero_of is not None:
                if all(nonzero_of.scalar(p) == 0 for p in f):
                    continue
            uvals = [abs(u.scalar(p)) for p in f] if u is not None else None
            vvals = [abs(v.scalar(p)) for p in f]
            if uvals is None:
                val = integrate_affine(f, vvals)
            else:
                val = integrate_affine_product(f, uvals, vvals)
            total = total + scale.scale(abs(w) * val)
    return total


def equicontinuity_gap(T, f, pis, pis2, check_lipschitz=True):
    """Exact right-minus-left gap of the continuity estimate.

    Compares |T(f, pis) - T(f, pis2)| against
    sum_i [ int |f| |pi_i - pi2_i| d||bd T|| + Lip(f) int_{f != 0}
    |pi_i - pi2_i| d||T|| ].  All entries must be scalar piecewise-affine
    maps; the comparison entries need Lipschitz constant at most 1, checked
    exactly unless disabled.  Returns (lhs, rhs) as exact values; the
    estimate holds when lhs <= rhs.
    """
    from .complexes import PLMap

    pis = list(pis)
    pis2 = list(pis2)
    if len(pis) != T.degree or len(pis2) != T.degree:
        raise InputError("one-form entry count must match the degree")
    if check_lipschitz:
        for m in pis + pis2:
            if m.scalar_lipschitz_squared() > 1:
                raise InputError("comparison entries must be 1-Lipschitz")

    lhs_q = T.evaluate(f, pis) - T.evaluate(f, pis2)
    lhs = RadicalSum.from_rational(abs(lhs_q))

    lipf = RadicalSum.sqrt_of(f.scalar_lipschitz_squared())
    bdT = T.boundary()
    rhs = RadicalSum()
    for pa, pb in zip(pis, pis2):
        diff = _difference_map(pa, pb)
        rhs = rhs + integral_of_product(bdT, f, diff)
        rhs = rhs + lipf * integral_of_product(T, None, diff, nonzero_of=f)
    return lhs, rhs


def _difference_map(pa, pb):
    """Scalar map p -> pa(p) - pb(p) with affine_on delegated to both."""

    class _Diff:
        target_dim = 1

        def scalar(self, p):
            return pa.scalar(p) - pb.scalar(p)

        def affine_on(self, pts):
            return pa.affine_on(pts) and pb.affine_on(pts)

        def __call__(self, p):
            return (self.scalar(p),)

    return _Diff()
