"""Exact integer linear algebra for finite abelian groups.

Smith normal form with tracked unimodular transforms (and their
inverses), a row-style Hermite lattice accumulator, linear congruence
systems with per-row moduli, and invariant-factor decompositions of
abelian Cayley tables.  Everything runs over unbounded Python integers;
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionMismatch, NotAbelian
from .groups import FiniteGroup, GroupMap, cyclic_group, generating_sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a,b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatch("row count mismatch")
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged matrix")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        data = tuple(tuple(int(v) for v in row) for row in rows)
        ncols = len(data[0]) if data else 0
        return IntMatrix(rows=len(data), cols=ncols, data=data)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(rows=n, cols=n, data=tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix(rows=r, cols=c, data=tuple((0,) * c for _ in range(r)))

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view."""
        return tuple(v for row in self.data for v in row)

    def at(self, i: int, j: int) -> int:
        return self.data[i][j]

    def to_lists(self):
        return [list(row) for row in self.data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(rows=self.cols, cols=self.rows,
                         data=tuple(zip(*self.data)) if self.data else ())

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(v == 0
                   for i, row in enumerate(self.data)
                   for j, v in enumerate(row) if i != j)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = b.transpose().data
    data = tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a.data)
    return IntMatrix(rows=a.rows, cols=b.cols, data=data)


def mat_vec(a: IntMatrix, x) -> list[int]:
    if a.cols != len(x):
        raise DimensionMismatch("vector length mismatch")
    return [sum(v * xi for v, xi in zip(row, x)) for row in a.data]


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination; exact over Z."""
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """u * a * v = s with u, v unimodular and s diagonal with a
    divisibility chain.  u_inv and v_inv undo the transforms."""

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Diagonalize by unimodular row and column operations.

    Pivot choice is the smallest nonzero absolute value, ties broken
    row-major, so the reduction (and therefore every downstream fixture)
    is deterministic.  The recomposition u*a*v == s is asserted before
    returning.
    """
    nr, nc = a.rows, a.cols
    s = a.to_lists()
    u = IntMatrix.identity(nr).to_lists()
    ui = IntMatrix.identity(nr).to_lists()
    v = IntMatrix.identity(nc).to_lists()
    vi = IntMatrix.identity(nc).to_lists()

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for r in ui:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_combine(i, j, p, q, x, y):
        # rows (i,j) <- (p*ri + q*rj, x*ri + y*rj); p*y - q*x must be +-1
        s[i], s[j] = ([p * a_ + q * b_ for a_, b_ in zip(s[i], s[j])],
                      [x * a_ + y * b_ for a_, b_ in zip(s[i], s[j])])
        u[i], u[j] = ([p * a_ + q * b_ for a_, b_ in zip(u[i], u[j])],
                      [x * a_ + y * b_ for a_, b_ in zip(u[i], u[j])])
        # inverse of [[p,q],[x,y]] is d*[[y,-q],[-x,p]] applied to columns
        d = p * y - q * x
        for r in ui:
            ci, cj = r[i], r[j]
            r[i] = d * (y * ci - x * cj)
            r[j] = d * (-q * ci + p * cj)

    def col_combine(i, j, p, q, x, y):
        for r in s:
            ci, cj = r[i], r[j]
            r[i], r[j] = p * ci + q * cj, x * ci + y * cj
        for r in v:
            ci, cj = r[i], r[j]
            r[i], r[j] = p * ci + q * cj, x * ci + y * cj
        d = p * y - q * x
        vi[i], vi[j] = ([d * (y * a_ - x * b_) for a_, b_ in zip(vi[i], vi[j])],
                        [d * (-q * a_ + p * b_) for a_, b_ in zip(vi[i], vi[j])])

    def row_addmul(i, j, q):
        # row i += q * row j
        s[i] = [a_ + q * b_ for a_, b_ in zip(s[i], s[j])]
        u[i] = [a_ + q * b_ for a_, b_ in zip(u[i], u[j])]
        for r in ui:
            r[j] -= q * r[i]

    def col_addmul(j, i, q):
        # col j += q * col i
        for r in s:
            r[j] += q * r[i]
        for r in v:
            r[j] += q * r[i]
        vi[i] = [a_ - q * b_ for a_, b_ in zip(vi[i], vi[j])]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    t = 0
    while t < min(nr, nc):
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                val = abs(s[i][j])
                if val != 0 and (best is None or val < best):
                    best = val
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])

        while True:
            # exact divisions use shears that leave the pivot row/column
            # alone; inexact ones use a gcd combine, which strictly
            # shrinks the pivot, so this loop terminates
            dirty = False
            for i in range(t + 1, nr):
                if s[i][t] != 0:
                    if s[i][t] % s[t][t] == 0:
                        row_addmul(i, t, -(s[i][t] // s[t][t]))
                    else:
                        g, p, q = xgcd(s[t][t], s[i][t])
                        row_combine(t, i, p, q, -(s[i][t] // g), s[t][t] // g)
                        dirty = True
            for j in range(t + 1, nc):
                if s[t][j] != 0:
                    if s[t][j] % s[t][t] == 0:
                        col_addmul(j, t, -(s[t][j] // s[t][t]))
                    else:
                        g, p, q = xgcd(s[t][t], s[t][j])
                        col_combine(t, j, p, q, -(s[t][j] // g), s[t][t] // g)
                        dirty = True
            if not dirty:
                # make the pivot divide the rest of the submatrix
                stuck = None
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if s[i][j] % s[t][t] != 0:
                            stuck = i
                            break
                    if stuck is not None:
                        break
                if stuck is None:
                    break
                row_combine(t, stuck, 1, 1, 0, 1)
        t += 1

    for i in range(min(nr, nc)):
        if s[i][i] < 0:
            row_negate(i)

    res = SNFResult(
        s=IntMatrix.from_rows(s), u=IntMatrix.from_rows(u),
        v=IntMatrix.from_rows(v),
        u_inv=IntMatrix.from_rows(ui), v_inv=IntMatrix.from_rows(vi))
    assert mat_mul(mat_mul(res.u, a), res.v).data == res.s.data
    return res


# ---------------------------------------------------------------------------
# row-lattice accumulator


class IntLattice:
    """Sublattice of Z^n maintained as xgcd-reduced rows keyed by pivot
    column.  add() keeps the row set in echelon form, so membership and
    Hermite normal form are cheap afterwards."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, list[int]] = {}

    def _reduce(self, vec):
        """Reduce vec against the current rows; returns the (possibly
        nonzero) remainder without inserting it."""
        v = list(vec)
        for p in sorted(self.pivot_rows):
            if v[p] == 0:
                continue
            r = self.pivot_rows[p]
            q = v[p] // r[p]
            if q:
                v = [a - q * b for a, b in zip(v, r)]
        return v

    def add(self, vec) -> bool:
        """Insert vec; True iff the lattice grew."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        v = list(vec)
        grew = False
        while True:
            p = next((i for i, x in enumerate(v) if x != 0), None)
            if p is None:
                return grew
            r = self.pivot_rows.get(p)
            if r is None:
                if v[p] < 0:
                    v = [-x for x in v]
                self.pivot_rows[p] = v
                return True
            a, b = r[p], v[p]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, r)]
            else:
                g, p_, q_ = xgcd(a, b)
                new_r = [p_ * x + q_ * y for x, y in zip(r, v)]
                new_v = [(a // g) * y - (b // g) * x for x, y in zip(r, v)]
                self.pivot_rows[p] = new_r
                v = new_v
                grew = True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self._reduce(vec))

    def rank(self) -> int:
        return len(self.pivot_rows)

    def hnf_rows(self) -> list[list[int]]:
        """Hermite form: positive pivots, entries above each pivot reduced
        into [0, pivot), rows ordered by pivot column."""
        pivots = sorted(self.pivot_rows)
        rows = [list(self.pivot_rows[p]) for p in pivots]
        for k in range(len(rows) - 1, -1, -1):
            p = pivots[k]
            for i in range(k):
                q = rows[i][p] // rows[k][p]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[k])]
        return rows

    def index_in_ambient(self) -> int:
        """[Z^n : L] when L has full rank, else 0."""
        if len(self.pivot_rows) < self.ncols:
            return 0
        out = 1
        for p, r in self.pivot_rows.items():
            out *= abs(r[p])
        return out


def express_in_hnf(hnf: list[list[int]], vec) -> list[int] | None:
    """Coefficients writing vec as an integer combination of the given
    Hermite-form rows, or None when vec is outside their span."""
    v = list(vec)
    coeffs = [0] * len(hnf)
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in hnf]
    for k, row in enumerate(hnf):
        p = pivots[k]
        for i in range(p):
            if v[i] != 0:
                return None
        if v[p] % row[p] != 0:
            return None
        q = v[p] // row[p]
        coeffs[k] = q
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(x != 0 for x in v):
        return None
    return coeffs


# ---------------------------------------------------------------------------
# linear congruence systems


@dataclass(frozen=True)
class ModSolveResult:
    """Solution of A x = b componentwise mod per-row moduli.

    modulus is the lcm M of the row moduli; solutions are meaningful
    mod M and the kernel lattice always contains M*Z^cols.  particular
    is None when the system is inconsistent; kernel rows are a
    Hermite-reduced generating set of the homogeneous solution lattice.
    """

    modulus: int
    particular: tuple[int, ...] | None
    kernel: tuple[tuple[int, ...], ...]


def solve_linear_mod(a: IntMatrix, moduli, b) -> ModSolveResult:
    """Solve A x = b with row i taken mod moduli[i].

    The rows are rescaled to a common modulus M, pre-reduced through a
    Hermite accumulator (together with the rows M*e_j, so the system
    shrinks to at most cols+1 independent congruences), and the reduced
    square system is finished by Smith normal form.
    """
    if len(moduli) != a.rows or len(b) != a.rows:
        raise DimensionMismatch("moduli and rhs must match row count")
    for m in moduli:
        if m <= 0:
            raise ValueError("moduli must be positive")
    bigm = 1
    for m in moduli:
        g, _, _ = xgcd(bigm, m)
        bigm = bigm // g * m

    c = a.cols
    lat = IntLattice(c + 1)
    for j in range(c + 1):
        row = [0] * (c + 1)
        row[j] = bigm
        lat.add(row)
    for i in range(a.rows):
        scale = bigm // moduli[i]
        lat.add([scale * x for x in a.data[i]] + [scale * b[i]])

    hnf = lat.hnf_rows()
    # bigm * e_j rows guarantee a pivot in every column
    rhs_pivot = hnf[-1][c]
    consistent = rhs_pivot == bigm

    bmat = IntMatrix.from_rows([row[:c] for row in hnf[:c]])
    rhs = [row[c] for row in hnf[:c]]
    snf = smith_normal_form(bmat)
    diag = snf.s.diagonal

    kernel_lat = IntLattice(c)
    vt = snf.v.transpose().data
    for j in range(c):
        g, _, _ = xgcd(diag[j], bigm)
        scale = bigm // g
        kernel_lat.add([scale * x for x in vt[j]])
    kernel = tuple(tuple(row) for row in kernel_lat.hnf_rows())

    particular = None
    if consistent:
        cvec = mat_vec(snf.u, rhs)
        z = [0] * c
        ok = True
        for j in range(c):
            g, _, _ = xgcd(diag[j], bigm)
            if cvec[j] % g != 0:
                ok = False
                break
            mj = bigm // g
            z[j] = (cvec[j] // g) * pow(diag[j] // g, -1, mj) % mj if mj > 1 else 0
        if ok:
            x = mat_vec(snf.v, z)
            particular = tuple(v % bigm for v in x)

    return ModSolveResult(modulus=bigm, particular=particular, kernel=kernel)


# ---------------------------------------------------------------------------
# abelian structure


@dataclass(frozen=True)
class AbelianPresentation:
    """Invariant-factor coordinates for an abelian Cayley table.

    coord_group is the direct product of cyclic groups of the invariant
    factors (trivial group when the input is trivial); to_group and
    to_coords are mutually inverse isomorphisms.
    """

    group: FiniteGroup
    invariant_factors: tuple[int, ...]
    coord_group: FiniteGroup
    to_group: GroupMap
    to_coords: GroupMap

    def coords_of(self, x: int) -> tuple[int, ...]:
        """Mixed-radix digits of element x, one per invariant factor."""
        idx = self.to_coords.images[x]
        digits = []
        for d in reversed(self.invariant_factors):
            digits.append(idx % d)
            idx //= d
        return tuple(reversed(digits))

    def element_of(self, coords) -> int:
        if len(coords) != len(self.invariant_factors):
            raise DimensionMismatch("coordinate count mismatch")
        idx = 0
        for c, d in zip(coords, self.invariant_factors):
            idx = idx * d + (c % d)
        return self.to_group.images[idx]


def abelian_invariants(g: FiniteGroup) -> AbelianPresentation:
    """Invariant factors d_1 | d_2 | ... with an explicit coordinate
    isomorphism, via the Smith form of a generator relation lattice."""
    if not g.is_abelian:
        raise NotAbelian("invariant factors require an abelian group")
    if g.order == 1:
        triv = cyclic_group(1)
        ident = GroupMap(dom=triv, cod=g, images=(0,))
        back = GroupMap(dom=g, cod=triv, images=(0,))
        return AbelianPresentation(group=g, invariant_factors=(),
                                   coord_group=triv, to_group=ident,
                                   to_coords=back)

    gens = generating_sequence(g)
    k = len(gens)
    # exponent vector for each element, found by breadth-first products
    vecs = {0: tuple([0] * k)}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        vx = vecs[x]
        for j, gen in enumerate(gens):
            y = g.table[x][gen]
            if y not in vecs:
                vy = list(vx)
                vy[j] += 1
                vecs[y] = tuple(vy)
                frontier.append(y)

    rel = IntLattice(k)
    for x, vx in vecs.items():
        for j, gen in enumerate(gens):
            y = g.table[x][gen]
            vy = vecs[y]
            diff = [a + (1 if i == j else 0) - b
                    for i, (a, b) in enumerate(zip(vx, vy))]
            rel.add(diff)
    assert rel.index_in_ambient() == g.order

    rmat = IntMatrix.from_rows(rel.hnf_rows())
    snf = smith_normal_form(rmat)
    diag = snf.s.diagonal

    factors = tuple(d for d in diag if d > 1)
    coord_group = cyclic_group(1)
    for d in factors:
        base = coord_group
        coord_group = _product_with_cyclic(base, d)
    coord_group = FiniteGroup(order=coord_group.order, table=coord_group.table,
                              name=None)

    # exponent vector realizing coordinate unit i: row i of v_inv,
    # restricted to the nontrivial diagonal positions
    keep = [i for i, d in enumerate(diag) if d > 1]
    unit_vecs = [snf.v_inv.data[i] for i in keep]

    def element_from_digits(digits):
        expo = [0] * k
        for digit, uv in zip(digits, unit_vecs):
            for j in range(k):
                expo[j] += digit * uv[j]
        x = 0
        for j, gen in enumerate(gens):
            x = g.table[x][g.power(gen, expo[j])]
        return x

    images = []
    digits = [0] * len(factors)
    for idx in range(coord_group.order):
        rem = idx
        for pos in range(len(factors) - 1, -1, -1):
            digits[pos] = rem % factors[pos]
            rem //= factors[pos]
        images.append(element_from_digits(digits))
    to_group = GroupMap(dom=coord_group, cod=g, images=tuple(images))
    assert to_group.is_bijective() and to_group.is_homomorphism()
    return AbelianPresentation(group=g, invariant_factors=factors,
                               coord_group=coord_group, to_group=to_group,
                               to_coords=to_group.inverse())


def _product_with_cyclic(base: FiniteGroup, d: int) -> FiniteGroup:
    if base.order == 1:
        return cyclic_group(d)
    from .groups import direct_product
    return direct_product(base, cyclic_group(d))
