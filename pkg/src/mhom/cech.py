"""Cover combinatorics and the comparison zig-zag.

The engine decomposes cycles over a ball cover, solves preimage equations
for the nerve boundary with support certificates, fills local cycles by
cones to ball centers or by graph paths, and assembles the results into
global comparisons: a polyhedral cycle current is matched by a piecewise-affine
cycle chain up to a current boundary (fill), and a chain cycle whose
current bounds is itself a chain boundary in the refinement limit
(cancel).
"""

from fractions import Fraction
from itertools import combinations

from .bracket import bracket, bracket_inverse_points
from .chains import LipschitzChain
from .currents import PolyhedralCurrent
from .errors import GeometryError, InputError, LocalityError
from .geometry import point_in_simplex

MAX_SPLIT_ROUNDS = 8
MAX_FILL_DEPTH = 5


class Nerve:
    """Intersection combinatorics of a ball cover, with witness points.

    A tuple of cover indices enters the nerve when a sampled carrier point
    lies strictly inside all its balls.  Witness search is conservative;
    emptiness of an absent tuple can be certified separately.
    """

    def __init__(self, cover, max_arity=3, witness_depth=2):
        self.cover = cover
        self.max_arity = max_arity
        self.witnesses = {}
        pts = cover.complex.sample_vertices(witness_depth)
        memberships = []
        for p in pts:
            inside = tuple(i for i in range(len(cover)) if cover.contains(i, p))
            memberships.append((p, inside))
        for p, inside in memberships:
            for arity in range(1, max_arity + 1):
                if len(inside) < arity:
                    continue
                for tup in combinations(inside, arity):
                    self.witnesses.setdefault(tup, p)

    def has(self, tup):
        return tuple(sorted(tup)) in self.witnesses

    def witness(self, tup):
        return self.witnesses.get(tuple(sorted(tup)))

    def tuples(self, arity):
        return sorted(t for t in self.witnesses if len(t) == arity)

    def certified_empty(self, tup) -> bool:
        """Exact emptiness proof for a tuple absent from the nerve."""
        return self.cover.intersection_empty_certificate(tuple(sorted(tup)))


def cech_boundary(components):
    """Alternating index-deletion map from arity p+1 to arity p.

    components: dict sorted-index-tuple -> chain or current.  Applying it
    twice gives zero, and summing an image layer over all tuples of the
    lower arity telescopes to zero.
    """
    out = {}
    for B, val in components.items():
        for j in range(len(B)):
            A = B[:j] + B[j + 1:]
            term = val if j % 2 == 0 else -val
            if A in out:
                out[A] = out[A] + term
            else:
                out[A] = term
    return out


def _by_ball(components):
    """Flatten singleton-tuple keys to ball indices."""
    return {(k[0] if isinstance(k, tuple) else k): v
            for k, v in components.items()}


def augment(components):
    """Sum of the single-ball components (the global object)."""
    total = None
    for A in sorted(components):
        total = components[A] if total is None else total + components[A]
    return total


def total_weight(obj):
    """Sum of coefficients of a degree-zero chain or current."""
    src = obj.terms if isinstance(obj, LipschitzChain) else obj.pieces
    return sum(src.values())


def augment_nerve(components):
    """Total multiplicity of each degree-zero component, as a nerve chain.

    components: dict index-tuple (or ball index) -> degree-zero chain or
    current.  Returns dict sorted-tuple -> int with zero entries dropped.
    """
    out = {}
    for key, val in components.items():
        tup = key if isinstance(key, tuple) else (key,)
        w = total_weight(val)
        if w:
            out[tup] = out.get(tup, 0) + w
    return {t: w for t, w in out.items() if w}


def nerve_boundary(z):
    """Simplicial boundary of an integer chain on the nerve."""
    out = cech_boundary(z)
    return {t: w for t, w in out.items() if w}


def _sorted_with_sign(seq):
    """Sort a tuple of distinct indices, tracking the permutation sign."""
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return tuple(items), sign


def reindex_components(components, index_map):
    """Push components along a cover refinement's ball index map.

    Each tuple of fine-ball indices maps to the tuple of their coarse
    balls; tuples whose image has a repeated index collapse and are
    dropped, and sorting the image flips the sign per transposition.
    Works on coefficient components and on integer nerve chains alike.
    Keys keep their style (bare index in, bare index out).
    """
    out = {}
    for key, val in components.items():
        tup = key if isinstance(key, tuple) else (key,)
        image = tuple(index_map[i] for i in tup)
        if len(set(image)) < len(image):
            continue
        target, sign = _sorted_with_sign(image)
        okey = target if isinstance(key, tuple) else target[0]
        term = val if sign > 0 else -val
        out[okey] = out[okey] + term if okey in out else term
    return out


# ---- support-certified decomposition strategies ----

class _ChainOps:
    kind = "chain"

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def decompose(x, allowed, cover, context=""):
        """Split a chain into parts termwise inside single allowed balls."""
        work = x
        for _ in range(MAX_SPLIT_ROUNDS + 1):
            buckets = {}
            stuck = None
            for tup, c in work.terms.items():
                home = None
                for b in allowed:
                    if cover.simplex_inside(b, tup):
                        home = b
                        break
                if home is None:
                    stuck = tup
                    break
                buckets.setdefault(home, {})[tup] = \
                    buckets.get(home, {}).get(tup, 0) + c
            if stuck is None:
                return {
                    b: LipschitzChain(work.complex, work.degree, t, work.level,
                                      check_carrier=False)
                    for b, t in buckets.items()
                }
            if work.degree == 0:
                raise GeometryError(
                    f"point {stuck[0]} lies in no admissible ball {context}")
            work = work.subdivide()
        raise GeometryError(f"terms never fit admissible balls {context}")


class _CurrentOps:
    kind = "current"

    @staticmethod
    def is_zero(x):
        if x.is_zero_representation():
            return True
        return x.is_zero()

    @staticmethod
    def decompose(x, allowed, cover, context=""):
        work = x.reduce()
        for _ in range(MAX_SPLIT_ROUNDS + 1):
            buckets = {}
            stuck = None
            for tup, w in work.pieces.items():
                home = None
                for b in allowed:
                    if cover.simplex_inside(b, tup):
                        home = b
                        break
                if home is None:
                    stuck = tup
                    break
                buckets.setdefault(home, {})[tup] = \
                    buckets.get(home, {}).get(tup, 0) + w
            if stuck is None:
                return {
                    b: PolyhedralCurrent(work.ambient_dim, work.degree, t)
                    for b, t in buckets.items()
                }
            if work.degree == 0:
                raise GeometryError(
                    f"point {stuck[0]} lies in no admissible ball {context}")
            work = work.subdivide()
        raise GeometryError(f"pieces never fit admissible balls {context}")


def conforming(T, complex_) -> bool:
    """True when every piece sits inside a single complex simplex.

    Pieces may legally straddle flat cells as currents, but the zig-zag
    cone fills need the conforming representation.
    """
    return all(complex_.find_containing_simplex(tup) is not None
               for tup in T.pieces)


def split_current_by_cover(T, cover, max_rounds=MAX_SPLIT_ROUNDS):
    """Refine until every piece fits one ball, then bucket the pieces."""
    work = T
    for _ in range(max_rounds + 1):
        buckets = {}
        ok = True
        for tup, w in work.pieces.items():
            i = cover.first_ball_containing(tup)
            if i is None:
                ok = False
                break
            buckets.setdefault(i, {})[tup] = buckets.get(i, {}).get(tup, 0) + w
        if ok:
            return {i: PolyhedralCurrent(work.ambient_dim, work.degree, t)
                    for i, t in buckets.items()}
        work = work.subdivide()
    raise GeometryError("current pieces never fit inside single cover balls")


def cosheaf_split(T, cover, first, rest=None):
    """T = S + S' with S inside ball `first` and S' inside the other balls.

    Works by refinement and assignment with strict containment
    certificates; every returned piece is checked termwise.
    """
    if rest is None:
        rest = [i for i in range(len(cover)) if i != first]
    work = T
    for _ in range(MAX_SPLIT_ROUNDS + 1):
        s_pieces = {}
        r_pieces = {}
        ok = True
        for tup, w in work.pieces.items():
            if cover.simplex_inside(first, tup):
                s_pieces[tup] = s_pieces.get(tup, 0) + w
            elif any(cover.simplex_inside(b, tup) for b in rest):
                r_pieces[tup] = r_pieces.get(tup, 0) + w
            else:
                ok = False
                break
        if ok:
            return (PolyhedralCurrent(work.ambient_dim, work.degree, s_pieces),
                    PolyhedralCurrent(work.ambient_dim, work.degree, r_pieces))
        work = work.subdivide()
    raise GeometryError("support never split across the requested balls")


# ---- boundary preimage solvers ----

def solve_phi_single(Y, nerve, ops, context=""):
    """W on pairs with (boundary W)_A = Y_A, by leading-index elimination.

    Requires the components of Y to sum to zero (as chains exactly, as
    currents after reduction).  Every produced component is supported in
    its pairwise intersection by construction.
    """
    cover = nerve.cover
    n = len(cover)
    residual = dict(Y)
    W = {}
    for A in range(n):
        R = residual.get(A)
        if R is None or ops.is_zero(R):
            continue
        allowed = [b for b in range(A + 1, n) if nerve.has((A, b))]
        if not allowed:
            raise GeometryError(
                f"component {A} has a nonzero residual but no later overlap "
                f"{context}")
        parts = ops.decompose(R, allowed, cover,
                              context=f"(descending component {A}) {context}")
        for b, part in parts.items():
            # supported in both balls: decompose certified the second index
            _assert_inside(part, cover, A)
            key = (A, b)
            W[key] = W[key] + (-part) if key in W else -part
            residual[b] = residual.get(b)
            residual[b] = part if residual[b] is None else residual[b] + part
        residual[A] = None
    for A, R in residual.items():
        if R is not None and not ops.is_zero(R):
            raise GeometryError(f"elimination left a nonzero residual {context}")
    return W


def solve_phi_pairs(R, nerve, ops, context=""):
    """W on triples with (boundary W) matching R on pairs.

    Leading-pair elimination; pairs whose residual vanishes need no triple,
    which is exactly what happens when triple intersections are empty.
    """
    cover = nerve.cover
    n = len(cover)
    residual = {tuple(sorted(k)): v for k, v in R.items()}
    W = {}
    for pair in sorted(residual):
        val = residual[pair]
        if val is None or ops.is_zero(val):
            continue
        a, b = pair
        allowed = [g for g in range(b + 1, n) if nerve.has((a, b, g))]
        if not allowed:
            raise GeometryError(
                f"pair {pair} has a nonzero residual but no triple overlap "
                f"{context}")
        parts = ops.decompose(val, allowed, cover,
                              context=f"(descending pair {pair}) {context}")
        for g, part in parts.items():
            _assert_inside(part, cover, a)
            _assert_inside(part, cover, b)
            key = (a, b, g)
            W[key] = W[key] + part if key in W else part
            ag = (a, g)
            bg = (b, g)
            residual[ag] = part if residual.get(ag) is None \
                else residual[ag] + part
            residual[bg] = -part if residual.get(bg) is None \
                else residual[bg] + (-part)
        residual[pair] = None
    for pair, val in residual.items():
        if val is not None and not ops.is_zero(val):
            raise GeometryError(
                f"pair elimination left a nonzero residual at {pair} {context}")
    return W


def _assert_inside(obj, cover, i):
    src = obj.terms if isinstance(obj, LipschitzChain) else obj.pieces
    for tup in src:
        if not cover.simplex_inside(i, tup):
            raise GeometryError(
                f"support certificate failed: a term leaves ball {i}")


# ---- local fills ----

def fill_zero_chain(complex_, chain, membership, start_depth=2,
                    max_depth=MAX_FILL_DEPTH, context=""):
    """One-chain inside a region with boundary equal to the given 0-chain.

    The region is described by a strict membership predicate closed under
    segments inside single carrier simplices (intersections of open balls
    are).  Builds a path graph on sampled region vertices, routes each
    weighted point to its component root along a spanning tree, and fails
    honestly when some component carries nonzero total weight.
    """
    if chain.degree != 0:
        raise InputError("only zero-chains are filled by paths")
    weights = {}
    for tup, c in chain.terms.items():
        p = tup[0]
        if not membership(p):
            raise GeometryError(f"chain point {p} escapes the region {context}")
        weights[p] = weights.get(p, 0) + c
    weights = {p: c for p, c in weights.items() if c}
    if not weights:
        return LipschitzChain(complex_, 1, {}, chain.level, check_carrier=False)

    last_err = "no admissible depth"
    for depth in range(start_depth, max_depth + 1):
        nodes = [v for v in complex_.sample_vertices(depth) if membership(v)]
        seen = set(nodes)
        for p in weights:
            if p not in seen:
                nodes.append(p)
                seen.add(p)
        # edge when two nodes share a containing top simplex; the segment
        # then stays inside the carrier, and inside the region by convexity
        homes = {v: set() for v in nodes}
        for si, s in enumerate(complex_.top_simplices()):
            tup = complex_.points_of(s)
            for v in nodes:
                if point_in_simplex(v, tup):
                    homes[v].add(si)
        adj = {v: [] for v in nodes}
        for u, v in combinations(nodes, 2):
            if homes[u] & homes[v]:
                adj[u].append(v)
                adj[v].append(u)
        comp = {}
        for v in nodes:
            if v in comp:
                continue
            root = v
            stack = [v]
            comp[v] = root
            parent = {v: None}
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp[y] = root
                        parent[y] = x
                        stack.append(y)
            # check balance on this component, then route the weights
            total = sum(weights.get(x, 0) for x in parent)
            if total != 0:
                last_err = (f"component of {root} carries net weight {total}")
                break
        else:
            # all components balanced: build the fill along tree paths
            terms = {}
            parent_all = {}
            for v in nodes:
                parent_all.setdefault(v, None)
            # rebuild parents per component deterministically
            visited = set()
            for v in nodes:
                if v in visited:
                    continue
                stack = [v]
                visited.add(v)
                parent_all[v] = None
                while stack:
                    x = stack.pop()
                    for y in sorted(adj[x]):
                        if y not in visited:
                            visited.add(y)
                            parent_all[y] = x
                            stack.append(y)
            for p, c in weights.items():
                x = p
                while parent_all[x] is not None:
                    seg = (parent_all[x], x)
                    terms[seg] = terms.get(seg, 0) + c
                    x = parent_all[x]
            terms = {t: c for t, c in terms.items() if c}
            return LipschitzChain(complex_, 1, terms, 0)
        # fall through: retry deeper
    raise LocalityError(f"zero-chain fill failed {context}: {last_err}")


def cone_fill_chain(z, apex, complex_, context=""):
    """Cone a cycle chain to a point, certifying every coned term."""
    if not z.boundary().is_zero():
        raise InputError(f"cone fill needs an exact cycle {context}")
    for tup in z.terms:
        if complex_.find_containing_simplex(tup + (tuple(apex),)) is None:
            raise GeometryError(
                f"cone certificate failed {context}: no simplex holds "
                f"{tup} and the apex")
    return z.cone(apex, check_carrier=False)


def cone_fill_current(R, apex, complex_, context=""):
    """Cone a cycle current to a point, certifying every coned piece."""
    for tup in R.pieces:
        if complex_.find_containing_simplex(tup + (tuple(apex),)) is None:
            raise GeometryError(
                f"cone certificate failed {context}: no simplex holds "
                f"{tup} and the apex")
    return R.cone(apex)


# ---- descending a global cycle through the double complex ----

class Staircase:
    """Cover components of a descended cycle, keyed by (column, degree).

    `layers[(p, q)]` holds the components over nerve tuples of arity p+1
    with coefficients of degree q; `nerve_class` is the integer nerve
    chain of total multiplicities once the coefficients reach degree zero.
    """

    def __init__(self, layers, nerve_class):
        self.layers = layers
        self.nerve_class = nerve_class


def zigzag_descend(c, cover, nerve=None, verify=True):
    """Resolve a global cycle into components over the cover.

    The cycle is split into per-ball pieces summing back to it; each
    vertical boundary is then lifted through the index-deletion map one
    column to the right, down to degree-zero coefficients, whose total
    multiplicities form an integer cycle on the nerve.  Implemented for
    degrees 0..2 (the preimage solvers reach nerve arity three).
    """
    m = c.degree
    if m > 2:
        raise InputError("descent implemented for degrees 0, 1 and 2")
    if nerve is None:
        nerve = Nerve(cover, max_arity=m + 1)
    if isinstance(c, LipschitzChain):
        ops = _ChainOps
        layer0 = c.split_by_cover(cover)
    else:
        ops = _CurrentOps
        if not conforming(c, cover.complex):
            raise InputError(
                "descent needs a conforming representation: every piece "
                "inside a single complex simplex")
        layer0 = split_current_by_cover(c, cover)
    if m >= 1 and not ops.is_zero(c.boundary()):
        raise InputError("descent expects a cycle")

    layers = {(0, m): layer0}
    if m >= 1:
        Y = {A: comp.boundary() for A, comp in layer0.items()}
        layers[(1, m - 1)] = solve_phi_single(Y, nerve, ops,
                                              context="(descent)")
    if m >= 2:
        R = {pair: comp.boundary()
             for pair, comp in layers[(1, m - 1)].items()}
        layers[(2, m - 2)] = solve_phi_pairs(R, nerve, ops,
                                             context="(descent)")

    if verify:
        back = augment(layer0)
        same = (back == c) if isinstance(c, LipschitzChain) \
            else (back is not None and back.equals(c))
        if not same:
            raise GeometryError("descent components do not sum back")
        for p in range(1, m + 1):
            img = _by_ball(cech_boundary(layers[(p, m - p)])) if p == 1 \
                else cech_boundary(layers[(p, m - p)])
            want = {k: comp.boundary()
                    for k, comp in layers[(p - 1, m - p + 1)].items()}
            for k in set(img) | set(want):
                gap = img.get(k, None)
                if gap is None:
                    gap = -want[k]
                elif k in want:
                    gap = gap - want[k]
                if not ops.is_zero(gap):
                    raise GeometryError(
                        f"descent step {p} mismatched at {k!r}")

    return Staircase(layers, augment_nerve(layers[(m, 0)]))


# ---- the zig-zag in degree one ----

class FillResult:
    """Outcome of matching a cycle current by a cycle chain."""

    def __init__(self, chain, filling, layers):
        self.chain = chain
        self.filling = filling
        self.layers = layers


def zigzag_fill(T, cover, nerve=None, verify=True):
    """Cycle current of degree one -> cycle chain c and current S with
    boundary(S) = [c] - T, all certificates exact.

    The current is decomposed over the cover, its local boundaries are
    matched across pairwise intersections, the resulting point data is
    bracket-inverted and refilled by paths inside single balls, and the
    local defects, which are cycles, are coned to the ball centers.
    """
    complex_ = cover.complex
    if T.degree != 1:
        raise InputError("fill implemented in degree one")
    if not T.boundary().is_zero():
        raise InputError("fill needs a cycle current")
    if not conforming(T, complex_):
        raise InputError(
            "fill needs a conforming representation: every piece inside "
            "a single complex simplex")
    if nerve is None:
        nerve = Nerve(cover, max_arity=2)

    T01 = split_current_by_cover(T, cover)
    Y = {A: comp.boundary() for A, comp in T01.items()}
    T10 = solve_phi_single(Y, nerve, _CurrentOps, context="(fill)")
    c10 = {P: bracket_inverse_points(cur, complex_) for P, cur in T10.items()}

    rhs = _by_ball(cech_boundary(c10))
    c01 = {}
    for A in sorted(set(T01) | set(rhs)):
        r = rhs.get(A)
        if r is None or r.is_zero():
            c01[A] = LipschitzChain(complex_, 1, {}, 0, check_carrier=False)
            continue
        c01[A] = fill_zero_chain(
            complex_, r, lambda p, A=A: cover.contains(A, p),
            context=f"(fill, ball {A})")

    S_parts = {}
    for A in sorted(set(T01) | set(c01)):
        ch = c01.get(A)
        cu = T01.get(A)
        R = bracket(ch) if ch is not None else None
        if cu is not None:
            R = (-cu) if R is None else R - cu
        if R is None or R.is_zero_representation():
            continue
        S_parts[A] = cone_fill_current(R, cover.centers[A], complex_,
                                       context=f"(fill, ball {A})")

    c = augment(c01)
    if c is None:
        c = LipschitzChain(complex_, 1, {}, 0, check_carrier=False)
    S = augment(S_parts)
    if S is None:
        S = PolyhedralCurrent.zero(T.ambient_dim, 2)

    if verify:
        if not c.boundary().is_zero():
            raise GeometryError("fill produced a non-cycle chain")
        if not S.boundary().equals(bracket(c) - T):
            raise GeometryError("fill verification failed: boundary mismatch")
    return FillResult(c, S, {"T01": T01, "T10": T10, "c10": c10, "c01": c01})


def zigzag_cancel(z, S, cover, nerve=None, verify=True):
    """Cycle chain z with boundary(S) = [z] -> chain w with b(w) = z after
    refinement.

    Two elimination layers run over the nerve, point defects are refilled
    by paths inside pairwise intersections, and the local cycle defects,
    which are exact chain cycles, are coned to ball centers.
    """
    complex_ = cover.complex
    if z.degree != 1 or S.degree != 2:
        raise InputError("cancel implemented in degree one")
    if not z.boundary().is_zero():
        raise InputError("cancel needs a cycle chain")
    if not conforming(S, complex_):
        raise InputError(
            "cancel needs a conforming representation: every piece inside "
            "a single complex simplex")
    if nerve is None:
        nerve = Nerve(cover, max_arity=3)
    if verify and not S.boundary().equals(bracket(z)):
        raise InputError("cancel needs boundary(S) = [z]")

    c01 = z.split_by_cover(cover)
    Yc = {A: comp.boundary() for A, comp in c01.items()}
    c10 = solve_phi_single(Yc, nerve, _ChainOps, context="(cancel, chain)")

    T02 = split_current_by_cover(S, cover)
    Yt = {}
    for A in sorted(set(T02) | set(c01)):
        val = None
        if A in T02:
            val = T02[A].boundary()
        if A in c01:
            bc = bracket(c01[A])
            val = -bc if val is None else val - bc
        if val is not None:
            Yt[A] = val
    T11 = solve_phi_single(Yt, nerve, _CurrentOps, context="(cancel, current)")

    Rp = {}
    for P in sorted(set(T11) | set(c10)):
        val = None
        if P in T11:
            val = T11[P].boundary()
        if P in c10:
            bc = bracket(c10[P])
            val = bc if val is None else val + bc
        if val is not None:
            Rp[P] = val
    T20 = solve_phi_pairs(Rp, nerve, _CurrentOps, context="(cancel, triples)")
    c20 = {B: bracket_inverse_points(cur, complex_) for B, cur in T20.items()}

    rhs_pairs = cech_boundary(c20) if c20 else {}
    c11 = {}
    for P in sorted(set(c10) | set(rhs_pairs)):
        val = rhs_pairs.get(P)
        if P in c10:
            val = (-c10[P]) if val is None else val - c10[P]
        if val is None or val.is_zero():
            continue
        a, b = P
        c11[P] = fill_zero_chain(
            complex_, val,
            lambda p, a=a, b=b: cover.contains(a, p) and cover.contains(b, p),
            context=f"(cancel, pair {P})")

    rhs_balls = _by_ball(cech_boundary(c11)) if c11 else {}
    c02 = {}
    for A in sorted(set(c01) | set(rhs_balls)):
        val = rhs_balls.get(A)
        if A in c01:
            val = c01[A] if val is None else val + c01[A]
        if val is None or val.is_zero():
            continue
        c02[A] = cone_fill_chain(val, cover.centers[A], complex_,
                                 context=f"(cancel, ball {A})")

    w = augment(c02)
    if w is None:
        w = LipschitzChain(complex_, 2, {}, 0, check_carrier=False)
    if verify:
        if not (w.boundary() == z):
            raise GeometryError("cancel verification failed: b(w) != z")
    return w


# ---- degree zero ----

def degree_zero_fill(T, complex_):
    """Point current -> point chain with the same bracket, no filling
    needed."""
    c = bracket_inverse_points(T, complex_)
    S = PolyhedralCurrent.zero(T.ambient_dim, 1)
    return FillResult(c, S, {})


def degree_zero_cancel(z, complex_, start_depth=1):
    """Zero-chain whose current bounds -> a one-chain with that boundary.

    Fills across each connected component of the whole carrier.
    """
    return fill_zero_chain(complex_, z, lambda p: True,
                           start_depth=start_depth, context="(global)")
