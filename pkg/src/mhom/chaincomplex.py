"""Chain complexes of finitely generated free Z-modules and their homology.

Homology groups are presented as betti number plus elementary divisors,
with explicit cycle vectors generating the free and torsion parts.
Relative (quotient) complexes and the snake-lemma connecting map are
computed index-wise from a distinguished subcomplex basis.
"""

from __future__ import annotations

from .intlinalg import (
    IntMatrix,
    invert_unimodular,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)


class HomologyGroup:
    """Isomorphism type Z^betti + sum of Z/d for d in torsion (each d >= 2)."""

    __slots__ = ("betti", "torsion")

    def __init__(self, betti: int, torsion=()):
        self.betti = betti
        self.torsion = tuple(int(d) for d in torsion)

    def __eq__(self, other):
        if not isinstance(other, HomologyGroup):
            return NotImplemented
        return (self.betti, self.torsion) == (other.betti, other.torsion)

    def __hash__(self):
        return hash((self.betti, self.torsion))

    def is_trivial(self):
        return self.betti == 0 and not self.torsion

    def __str__(self):
        if self.is_trivial():
            return "0"
        bits = []
        if self.betti == 1:
            bits.append("Z")
        elif self.betti > 1:
            bits.append(f"Z^{self.betti}")
        bits.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(bits)

    __repr__ = __str__


class ChainComplexZ:
    """Nonnegatively graded complex; boundary(k) maps degree k to k-1."""

    def __init__(self, dims, boundaries, check=True):
        self.dims = list(dims)
        self._boundaries = dict(boundaries)
        if check:
            self.validate()

    def top_degree(self):
        return len(self.dims) - 1

    def dim(self, k: int) -> int:
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def boundary(self, k: int) -> IntMatrix:
        if k in self._boundaries:
            return self._boundaries[k]
        return IntMatrix.zeros(self.dim(k - 1), self.dim(k))

    def validate(self):
        for k, M in self._boundaries.items():
            if M.nrows != self.dim(k - 1) or M.ncols != self.dim(k):
                raise ValueError(f"boundary {k} has shape {M.nrows}x{M.ncols}, "
                                 f"expected {self.dim(k - 1)}x{self.dim(k)}")
        for k in range(1, len(self.dims)):
            comp = self.boundary(k) * self.boundary(k + 1)
            if not comp.is_zero():
                raise ValueError(f"boundary squared is nonzero in degree {k + 1}")


class HomologyData:
    """Homology in one degree with explicit generating cycles.

    free_generators and torsion_generators are integer chain vectors in the
    degree-k basis; class_vector expresses any cycle in those generators,
    returning combined coordinates (free first, then torsion mod its order).
    """

    def __init__(self, group, free_generators, torsion_generators, torsion_orders,
                 cycle_basis, expressor):
        self.group = group
        self.free_generators = free_generators
        self.torsion_generators = torsion_generators
        self.torsion_orders = torsion_orders
        self.cycle_basis = cycle_basis
        self._express = expressor

    def class_vector(self, cycle):
        """Combined class coordinates of an integer cycle vector."""
        return self._express(cycle)

    @property
    def moduli(self):
        return [0] * self.group.betti + list(self.torsion_orders)

    def generators(self):
        return list(self.free_generators) + list(self.torsion_generators)


def homology_data(C: ChainComplexZ, k: int) -> HomologyData:
    nk = C.dim(k)
    dk = C.boundary(k)
    dk1 = C.boundary(k + 1)
    Z = kernel_basis(dk) if nk else []
    z = len(Z)
    B = IntMatrix(nk, z)
    for j, col in enumerate(Z):
        for i, v in enumerate(col):
            if v:
                B.set(i, j, v)

    # image of the next boundary, in kernel-basis coordinates
    Y = IntMatrix(z, C.dim(k + 1))
    for j in range(C.dim(k + 1)):
        col = dk1.column(j)
        y = solve_integer(B, col) if z else ([] if not any(col) else None)
        if y is None:
            raise ValueError("boundary image does not lie in the cycle lattice")
        for i, v in enumerate(y):
            if v:
                Y.set(i, j, v)

    U, D, _ = smith_normal_form(Y)
    n = min(Y.nrows, Y.ncols)
    diag = [D.get(i, i) for i in range(n)]
    rank = len([d for d in diag if d])
    torsion_orders = [d for d in diag if d >= 2]
    betti = z - rank
    Uinv = invert_unimodular(U) if z else IntMatrix.identity(0)

    free_gens, tor_gens = [], []
    tor_positions = [i for i, d in enumerate(diag) if d >= 2]
    for j in range(rank, z):
        free_gens.append(B.apply(Uinv.column(j)))
    for i in tor_positions:
        tor_gens.append(B.apply(Uinv.column(i)))

    def express(cycle):
        if len(cycle) != nk:
            raise ValueError("cycle vector has wrong length")
        if any(v for v in dk.apply(list(cycle))):
            raise ValueError("vector is not a cycle")
        alpha = solve_integer(B, list(cycle))
        if alpha is None:
            raise ValueError("cycle does not lie in the kernel lattice")
        w = U.apply(alpha)
        free = [w[j] for j in range(rank, z)]
        tor = [w[i] % diag[i] for i in tor_positions]
        return free + tor

    group = HomologyGroup(betti, torsion_orders)
    return HomologyData(group, free_gens, tor_gens, torsion_orders, Z, express)


def homology(C: ChainComplexZ, k: int) -> HomologyGroup:
    return homology_data(C, k).group


def all_homology(C: ChainComplexZ):
    return [homology(C, k) for k in range(len(C.dims))]


class RelativePair:
    """Complex C with a boundary-closed subcomplex spanned by basis indices.

    sub[k] lists the degree-k basis indices belonging to the subcomplex.
    Provides the subcomplex A, the quotient C/A, and coordinate transport.
    """

    def __init__(self, C: ChainComplexZ, sub):
        self.total = C
        self.sub = {k: sorted(set(sub.get(k, ()))) for k in range(len(C.dims))}
        self.comp = {}
        for k in range(len(C.dims)):
            s = set(self.sub[k])
            if any(i < 0 or i >= C.dim(k) for i in s):
                raise ValueError(f"subcomplex index out of range in degree {k}")
            self.comp[k] = [i for i in range(C.dim(k)) if i not in s]
        self._check_closed()
        self.sub_complex = self._restrict(self.sub)
        self.quotient_complex = self._project()

    def _check_closed(self):
        for k in range(1, len(self.total.dims)):
            d = self.total.boundary(k)
            subk = set(self.sub[k])
            subk1 = set(self.sub[k - 1])
            for (i, j), v in d.data.items():
                if j in subk and v and i not in subk1:
                    raise ValueError(
                        f"subcomplex is not boundary-closed: degree {k} cell {j} "
                        f"hits outside cell {i}")

    def _restrict(self, idx):
        dims = [len(idx[k]) for k in range(len(self.total.dims))]
        bnds = {}
        for k in range(1, len(dims)):
            pos_k = {g: p for p, g in enumerate(idx[k])}
            pos_k1 = {g: p for p, g in enumerate(idx[k - 1])}
            M = IntMatrix(dims[k - 1], dims[k])
            d = self.total.boundary(k)
            for (i, j), v in d.data.items():
                if j in pos_k and i in pos_k1:
                    M.set(pos_k1[i], pos_k[j], v)
            bnds[k] = M
        return ChainComplexZ(dims, bnds)

    def _project(self):
        return self._restrict(self.comp)

    def include_vector(self, k, a):
        """A-coordinates -> C-coordinates."""
        out = [0] * self.total.dim(k)
        for p, g in enumerate(self.sub[k]):
            out[g] = a[p]
        return out

    def project_vector(self, k, x):
        """C-coordinates -> quotient coordinates."""
        return [x[g] for g in self.comp[k]]

    def lift_vector(self, k, q):
        """Quotient coordinates -> C-coordinates, zero on the subcomplex."""
        out = [0] * self.total.dim(k)
        for p, g in enumerate(self.comp[k]):
            out[g] = q[p]
        return out


def relative_complex(C: ChainComplexZ, sub) -> ChainComplexZ:
    return RelativePair(C, sub).quotient_complex


def connecting_homomorphism(pair: RelativePair, k: int):
    """Snake-lemma map H_k(C/A) -> H_{k-1}(A) on combined generators.

    Returns (matrix_columns, source_data, target_data): column i is the
    target class vector of the i-th combined generator of the source.
    """
    HQ = homology_data(pair.quotient_complex, k)
    HA = homology_data(pair.sub_complex, k - 1)
    d = pair.total.boundary(k)
    cols = []
    for g in HQ.generators():
        x = pair.lift_vector(k, g)
        bx = d.apply(x)
        # the lift's boundary is supported on the subcomplex
        a = [bx[i] for i in pair.sub[k - 1]]
        for p, i in enumerate(pair.comp[k - 1]):
            if bx[i]:
                raise ValueError("relative cycle lift has boundary outside A")
        cols.append(HA.class_vector(a))
    return cols, HQ, HA


def hom_matrix_columns(source: HomologyData, target: HomologyData, fn):
    """Columns of an induced map: fn takes a generator chain vector and
    returns a cycle vector in the target complex."""
    return [target.class_vector(fn(g)) for g in source.generators()]


def _augmented(columns, moduli):
    """Matrix [F | diag(moduli restricted to nonzero)] for subgroup work."""
    m = len(moduli)
    ncols = len(columns)
    extra = [i for i, d in enumerate(moduli) if d]
    M = IntMatrix(m, ncols + len(extra))
    for j, col in enumerate(columns):
        for i, v in enumerate(col):
            if v:
                M.set(i, j, v)
    for p, i in enumerate(extra):
        M.set(i, ncols + p, moduli[i])
    return M


def in_subgroup(y, columns, moduli) -> bool:
    """Is class y in the subgroup generated by the given classes?"""
    M = _augmented(columns, moduli)
    return solve_integer(M, list(y)) is not None


def kernel_class_generators(columns, source_moduli, target_moduli):
    """Generating classes of the kernel of the map with the given columns."""
    M = _augmented(columns, target_moduli)
    n = len(columns)
    gens = [vec[:n] for vec in kernel_basis(M)]
    # classes killed by the source relations are also in the kernel
    for i, dmod in enumerate(source_moduli):
        if dmod:
            e = [0] * n
            e[i] = dmod
            gens.append(e)
    return gens


def exact_at(columns_in, moduli_src, moduli_mid, columns_out, moduli_dst) -> bool:
    """Exactness im(f) = ker(g) at the middle group of G -f-> M -g-> K."""
    # image generators must map to zero
    for col in columns_in:
        img = [sum(columns_out[j][i] * col[j] for j in range(len(col)))
               for i in range(len(moduli_dst))]
        for i, v in enumerate(img):
            d = moduli_dst[i]
            if (d and v % d != 0) or (not d and v != 0):
                return False
    # kernel generators must be hit
    for kgen in kernel_class_generators(columns_out, moduli_mid, moduli_dst):
        if not in_subgroup(kgen, columns_in, moduli_mid):
            return False
    return True
