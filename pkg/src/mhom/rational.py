"""Exact rational vectors and quadratic-radical arithmetic.

All trusted-path geometry works over Q.  Points are tuples of Fraction.
Square roots never enter comparisons directly: either both sides are
squared first, or values are kept as exact sums of c*sqrt(n) with n
squarefree (RadicalSum) where a genuine length is unavoidable.
"""

from __future__ import annotations

import math
from fractions import Fraction

from sympy import factorint

Vec = tuple  # tuple of Fraction


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (list, tuple)):
        return Fraction(x[0], x[1])
    return Fraction(x)


def vec(*coords) -> Vec:
    return tuple(frac(c) for c in coords)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(s, a: Vec) -> Vec:
    s = frac(s)
    return tuple(s * x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def dist2(a: Vec, b: Vec) -> Fraction:
    """Squared Euclidean distance, exact."""
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def norm2(a: Vec) -> Fraction:
    return dot(a, a)


def lerp(a: Vec, b: Vec, t) -> Vec:
    t = frac(t)
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def centroid(points) -> Vec:
    n = len(points)
    acc = points[0]
    for p in points[1:]:
        acc = vadd(acc, p)
    return vscale(Fraction(1, n), acc)


def sqrt_lower(q: Fraction, prec: int = 40) -> Fraction:
    """Rational r with r <= sqrt(q) < r + 2**-prec, for q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0)
    scale = 1 << prec
    n = q.numerator * scale * scale
    d = q.denominator
    # floor(sqrt(n/d)) at the scaled level
    r = math.isqrt(n // d)
    while (r + 1) * (r + 1) * d <= n:
        r += 1
    while r * r * d > n:
        r -= 1
    return Fraction(r, scale)


def sqrt_upper(q: Fraction, prec: int = 40) -> Fraction:
    """Rational r with r - 2**-prec < sqrt(q) <= r."""
    lo = sqrt_lower(q, prec)
    if lo * lo == q:
        return lo
    return lo + Fraction(1, 1 << prec)


def cmp_sqrt(a: Fraction, s: Fraction) -> int:
    """Sign of a - sqrt(s) for rational a and s >= 0, exact."""
    if s < 0:
        raise ValueError("negative radicand")
    if a < 0:
        return -1 if s > 0 or a < 0 else 0
    # both sides >= 0
    lhs, rhs = a * a, s
    return (lhs > rhs) - (lhs < rhs)


def _square_split(n: int) -> tuple[int, int]:
    """n = s*s*m with m squarefree; returns (s, m).  n >= 1."""
    s, m = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


class RadicalSum:
    """Exact number of the form sum_i c_i * sqrt(n_i), c_i in Q, n_i squarefree.

    Distinct squarefree radicands are linearly independent over Q, so the
    representation is canonical and equality testing is exact.  Sign of a
    nonzero value is decided by interval refinement, which terminates.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict squarefree int -> Fraction, no zero coefficients
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def from_rational(q) -> "RadicalSum":
        q = frac(q)
        return RadicalSum({1: q} if q else {})

    @staticmethod
    def sqrt_of(q) -> "RadicalSum":
        """sqrt of a nonnegative rational, exact."""
        q = frac(q)
        if q < 0:
            raise ValueError("negative radicand")
        if q == 0:
            return RadicalSum()
        # sqrt(a/b) = sqrt(a*b)/b
        n = q.numerator * q.denominator
        s, m = _square_split(n)
        return RadicalSum({m: Fraction(s, q.denominator)})

    def __add__(self, other):
        if not isinstance(other, RadicalSum):
            other = RadicalSum.from_rational(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            c2 = out.get(m, Fraction(0)) + c
            if c2:
                out[m] = c2
            else:
                out.pop(m, None)
        return RadicalSum(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RadicalSum):
            other = RadicalSum.from_rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return RadicalSum.from_rational(other) + (-self)

    def scale(self, q) -> "RadicalSum":
        q = frac(q)
        if not q:
            return RadicalSum()
        return RadicalSum({m: c * q for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, RadicalSum):
            return self.scale(other)
        out = {}
        for m, c in self.terms.items():
            for n, d in other.terms.items():
                # m, n squarefree: mn = g^2 * (m/g)(n/g) with the cofactors
                # coprime and squarefree
                g = math.gcd(m, n)
                key = (m // g) * (n // g)
                c2 = out.get(key, Fraction(0)) + c * d * g
                if c2:
                    out[key] = c2
                else:
                    out.pop(key, None)
        return RadicalSum(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(m == 1 for m in self.terms)

    def rational_part(self) -> Fraction:
        return self.terms.get(1, Fraction(0))

    def bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for m, c in self.terms.items():
            if m == 1:
                lo += c
                hi += c
            elif c > 0:
                lo += c * sqrt_lower(Fraction(m), prec)
                hi += c * sqrt_upper(Fraction(m), prec)
            else:
                lo += c * sqrt_upper(Fraction(m), prec)
                hi += c * sqrt_lower(Fraction(m), prec)
        return lo, hi

    def sign(self) -> int:
        """Exact sign: zero only in the canonical all-coefficients-zero case."""
        if not self.terms:
            return 0
        if self.is_rational():
            q = self.terms[1]
            return (q > 0) - (q < 0)
        prec = 20
        while True:
            lo, hi = self.bounds(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
            if prec > 100000:  # unreachable for genuine nonzero sums
                raise ArithmeticError("sign refinement did not converge")

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __eq__(self, other):
        if not isinstance(other, (RadicalSum, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __float__(self):
        return float(sum(c * math.sqrt(m) for m, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "RadicalSum(0)"
        bits = [f"{c}*sqrt({m})" if m != 1 else f"{c}" for m, c in sorted(self.terms.items())]
        return "RadicalSum(" + " + ".join(bits) + ")"
