"""Piecewise-affine chains on a metric simplicial complex.

A chain of degree k is a finite integer combination of affine k-simplices,
each recorded as an ordered (k+1)-tuple of rational points whose convex hull
is certified to lie inside the carrier.  Chains carry a subdivision level:
two chains are considered the same element when they agree after refining
both to a common level, so addition first aligns levels by subdividing the
coarser operand.
"""

from fractions import Fraction

from .errors import GeometryError, InputError
from .geometry import barycentric_subdivide
from .rational import vec

MAX_SPLIT_ROUNDS = 8


def _point(p):
    return tuple(Fraction(x) for x in p)


def _tuple(tup):
    return tuple(_point(p) for p in tup)


class LipschitzChain:
    """Integer combination of affine simplices inside a fixed carrier."""

    __slots__ = ("complex", "degree", "level", "terms")

    def __init__(self, complex_, degree, terms=None, level=0, check_carrier=True):
        if degree < 0:
            raise InputError("chain degree must be nonnegative")
        self.complex = complex_
        self.degree = degree
        self.level = level
        self.terms = {}
        if terms:
            for tup, coeff in dict(terms).items():
                c = int(coeff)
                if c == 0:
                    continue
                tup = _tuple(tup)
                if len(tup) != degree + 1:
                    raise InputError(
                        f"a degree-{degree} chain needs {degree + 1} points per simplex")
                if any(len(p) != complex_.ambient_dim for p in tup):
                    raise InputError("point dimension does not match the carrier")
                self.terms[tup] = self.terms.get(tup, 0) + c
            self.terms = {t: c for t, c in self.terms.items() if c}
        if check_carrier:
            for tup in self.terms:
                if complex_.find_containing_simplex(tup) is None:
                    raise GeometryError(
                        f"simplex with vertices {tup} leaves the carrier")

    @staticmethod
    def zero(complex_, degree, level=0):
        return LipschitzChain(complex_, degree, {}, level)

    @staticmethod
    def from_simplices(complex_, items, level=0):
        """items: iterable of (coefficient, point tuple)."""
        terms = {}
        degree = None
        for coeff, tup in items:
            tup = _tuple(tup)
            if degree is None:
                degree = len(tup) - 1
            elif len(tup) - 1 != degree:
                raise InputError("mixed degrees in one chain")
            terms[tup] = terms.get(tup, 0) + int(coeff)
        if degree is None:
            raise InputError("cannot infer degree from an empty list; use zero()")
        return LipschitzChain(complex_, degree, terms, level)

    def is_zero(self):
        return not self.terms

    def copy(self):
        return LipschitzChain(self.complex, self.degree, dict(self.terms),
                              self.level, check_carrier=False)

    def _compatible(self, other):
        if self.complex is not other.complex or self.degree != other.degree:
            raise InputError("chains live on different carriers or degrees")

    def align(self, other):
        """Bring both chains to a common subdivision level."""
        self._compatible(other)
        a, b = self, other
        while a.level < b.level:
            a = a.subdivide()
        while b.level < a.level:
            b = b.subdivide()
        return a, b

    def __add__(self, other):
        a, b = self.align(other)
        terms = dict(a.terms)
        for tup, c in b.terms.items():
            terms[tup] = terms.get(tup, 0) + c
        terms = {t: c for t, c in terms.items() if c}
        return LipschitzChain(a.complex, a.degree, terms, a.level, check_carrier=False)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        n = int(n)
        terms = {t: n * c for t, c in self.terms.items() if n * c}
        return LipschitzChain(self.complex, self.degree, terms, self.level,
                              check_carrier=False)

    def __eq__(self, other):
        if not isinstance(other, LipschitzChain):
            return NotImplemented
        a, b = self.align(other)
        return a.terms == b.terms

    def boundary(self):
        """Alternating sum of facets of every term."""
        if self.degree == 0:
            return LipschitzChain(self.complex, 0, {}, self.level, check_carrier=False)
        terms = {}
        for tup, c in self.terms.items():
            for i in range(len(tup)):
                face = tup[:i] + tup[i + 1:]
                s = c if i % 2 == 0 else -c
                terms[face] = terms.get(face, 0) + s
        terms = {t: c for t, c in terms.items() if c}
        return LipschitzChain(self.complex, self.degree - 1, terms, self.level,
                              check_carrier=False)

    def subdivide(self, times=1):
        """Barycentric refinement; raises the level tag with each round."""
        chain = self
        for _ in range(times):
            terms = {}
            for tup, c in chain.terms.items():
                for sign, piece in barycentric_subdivide(tup):
                    terms[piece] = terms.get(piece, 0) + sign * c
            terms = {t: cc for t, cc in terms.items() if cc}
            chain = LipschitzChain(chain.complex, chain.degree, terms,
                                   chain.level + 1, check_carrier=False)
        return chain

    def canonical(self):
        """Vertex-sorted form with orientation signs.

        Tuples with a repeated point are dropped: enough further barycentric
        rounds annihilate them exactly, and callers only use this after
        aligning levels with slack.
        """
        out = {}
        for tup, c in self.terms.items():
            if len(set(tup)) < len(tup):
                continue
            order = sorted(range(len(tup)), key=lambda i: tup[i])
            sign = _permutation_sign(order)
            key = tuple(tup[i] for i in order)
            out[key] = out.get(key, 0) + sign * c
        return {t: c for t, c in out.items() if c}

    def equal_in_limit(self, other, extra=None):
        """Equality after refining both sides to a deep common level.

        Reordered copies of an affine simplex agree (with orientation sign)
        after one barycentric round, so canonical forms at matching levels
        decide equality in the refinement limit.
        """
        self._compatible(other)
        if extra is None:
            extra = max(2, self.degree)
        diff = self - other
        return diff.subdivide(extra).canonical() == {}

    def pushforward(self, plmap):
        """Image chain under a piecewise-affine self-map of the carrier.

        Terms are refined until the map is affine on each, then vertex
        images are taken; image simplices are re-certified against the
        carrier.
        """
        if plmap.target_dim != self.complex.ambient_dim:
            raise InputError("pushforward needs a self-map of the carrier")
        chain = self
        for _ in range(MAX_SPLIT_ROUNDS + 1):
            if all(plmap.affine_on(tup) for tup in chain.terms):
                terms = {}
                for tup, c in chain.terms.items():
                    image = tuple(_point(plmap(p)) for p in tup)
                    terms[image] = terms.get(image, 0) + c
                terms = {t: c for t, c in terms.items() if c}
                return LipschitzChain(chain.complex, chain.degree, terms, chain.level)
            chain = chain.subdivide()
        raise GeometryError("map never became affine on the refined terms")

    def cone(self, vertex, check_carrier=True):
        """Cone on a fixed point: prepend it to every term.

        b(cone z) = z - cone(b z), so coning fills cycles whenever each
        coned tuple stays inside the carrier.
        """
        v = _point(vertex)
        terms = {}
        for tup, c in self.terms.items():
            key = (v,) + tup
            terms[key] = terms.get(key, 0) + c
        terms = {t: c for t, c in terms.items() if c}
        return LipschitzChain(self.complex, self.degree + 1, terms, self.level,
                              check_carrier=check_carrier)

    def prism(self, h0, h1, check_carrier=True):
        """Staircase between two vertexwise images of this chain.

        h0 and h1 are callables on points.  With P this operator,
        b(P z) + P(b z) = h1(z) - h0(z) holds exactly at chain level; for
        the images to agree with pushforwards the maps must be affine on the
        terms, which callers arrange by refining first.
        """
        terms = {}
        for tup, c in self.terms.items():
            bottom = [_point(h0(p)) for p in tup]
            top = [_point(h1(p)) for p in tup]
            for i in range(len(tup)):
                stair = tuple(bottom[:i + 1]) + tuple(top[i:])
                s = c if i % 2 == 0 else -c
                terms[stair] = terms.get(stair, 0) + s
        terms = {t: cc for t, cc in terms.items() if cc}
        return LipschitzChain(self.complex, self.degree + 1, terms, self.level,
                              check_carrier=check_carrier)

    def vertex_images(self, fn):
        """Replace every vertex by fn(vertex), keeping coefficients."""
        terms = {}
        for tup, c in self.terms.items():
            image = tuple(_point(fn(p)) for p in tup)
            terms[image] = terms.get(image, 0) + c
        terms = {t: c for t, c in terms.items() if c}
        return LipschitzChain(self.complex, self.degree, terms, self.level)

    def supported_in_ball(self, cover, i):
        return all(cover.simplex_inside(i, tup) for tup in self.terms)

    def split_by_cover(self, cover, max_rounds=MAX_SPLIT_ROUNDS):
        """Refine until every term fits in one cover ball, then bucket them.

        Returns a dict ball index -> subchain; the buckets sum to a
        refinement of this chain.
        """
        chain = self
        for _ in range(max_rounds + 1):
            buckets = {}
            ok = True
            for tup, c in chain.terms.items():
                i = cover.first_ball_containing(tup)
                if i is None:
                    ok = False
                    break
                buckets.setdefault(i, {})[tup] = buckets.get(i, {}).get(tup, 0) + c
            if ok:
                return {
                    i: LipschitzChain(chain.complex, chain.degree, t, chain.level,
                                      check_carrier=False)
                    for i, t in buckets.items()
                }
            chain = chain.subdivide()
        raise GeometryError("terms never fit inside single cover balls")

    def vertex_set(self):
        out = set()
        for tup in self.terms:
            out.update(tup)
        return out

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return (f"LipschitzChain(degree={self.degree}, level={self.level}, "
                f"terms={len(self.terms)})")


def _permutation_sign(order):
    seen = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def chain_from_vector(complex_, degree, vector):
    """Chain for an integer vector over the complex's degree-k simplex basis."""
    basis = complex_.chain_basis()
    if degree >= len(basis):
        if all(int(x) == 0 for x in vector):
            return LipschitzChain.zero(complex_, degree)
        raise InputError("no simplices in this degree")
    sims = basis[degree]
    if len(vector) != len(sims):
        raise InputError("vector length does not match the simplex count")
    items = []
    for c, s in zip(vector, sims):
        c = int(c)
        if c:
            items.append((c, complex_.points_of(s)))
    if not items:
        return LipschitzChain.zero(complex_, degree)
    return LipschitzChain.from_simplices(complex_, items)


def chain_to_vector(chain, extra=None):
    """Inverse of chain_from_vector up to refinement, or None.

    Succeeds when the chain is a combination of the complex's own
    degree-k simplices in the refinement limit.
    """
    basis = chain.complex.chain_basis()
    sims = basis[chain.degree] if chain.degree < len(basis) else []
    if extra is None:
        extra = max(2, chain.degree)
    level = chain.level + extra
    target = chain.subdivide(extra).canonical()
    columns = []
    for s in sims:
        unit = LipschitzChain.from_simplices(
            chain.complex, [(1, chain.complex.points_of(s))])
        columns.append(unit.subdivide(level).canonical())
    coeffs = []
    residue = dict(target)
    for col in columns:
        # every basis simplex owns a private interior piece, so its
        # coefficient can be read off any term of its refinement
        probe = next(iter(col)) if col else None
        c = 0
        if probe is not None and probe in residue:
            c = residue[probe] // col[probe]
        coeffs.append(c)
        if c:
            for t, v in col.items():
                residue[t] = residue.get(t, 0) - c * v
                if residue[t] == 0:
                    del residue[t]
    if residue:
        return None
    return coeffs
