"""Integer linear algebra: SNF, lattices, congruence solving, invariant
factors.  Frozen values were derived by hand elimination or exhaustive
enumeration at tiny sizes."""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centext.catalog import get_group
from centext.errors import DimensionMismatch, NotAbelian
from centext.groups import cyclic_group, direct_product
from centext.intlinalg import (
    IntLattice,
    IntMatrix,
    abelian_invariants,
    determinant,
    express_in_hnf,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_linear_mod,
    xgcd,
)

small_ints = st.integers(min_value=-30, max_value=30)


def random_matrix(draw, max_dim=4):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    data = [[draw(small_ints) for _ in range(c)] for _ in range(r)]
    return IntMatrix.from_rows(data)


matrices = st.composite(random_matrix)()


class TestXgcd:
    @given(small_ints, small_ints)
    def test_bezout(self, a, b):
        g, s, t = xgcd(a, b)
        assert g == math.gcd(a, b)
        assert s * a + t * b == g


class TestDeterminant:
    def test_known(self):
        assert determinant(IntMatrix.from_rows([[2, 4], [6, 8]])) == -8
        assert determinant(IntMatrix.identity(3)) == 1
        assert determinant(IntMatrix.zeros(2, 2)) == 0

    @given(st.lists(st.lists(small_ints, min_size=3, max_size=3),
                    min_size=3, max_size=3))
    def test_matches_permutation_expansion(self, rows):
        a = IntMatrix.from_rows(rows)
        expected = 0
        for perm in itertools.permutations(range(3)):
            sign = 1
            for i in range(3):
                for j in range(i + 1, 3):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = sign
            for i in range(3):
                term *= rows[i][perm[i]]
            expected += term
        assert determinant(a) == expected


class TestSmithNormalForm:
    def test_zero(self):
        res = smith_normal_form(IntMatrix.zeros(2, 3))
        assert res.s.data == IntMatrix.zeros(2, 3).data
        assert res.u.data == IntMatrix.identity(2).data
        assert res.v.data == IntMatrix.identity(3).data

    def test_already_diagonal(self):
        res = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 4]]))
        assert res.s.diagonal == (2, 4)

    def test_hand_elimination(self):
        res = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert res.s.diagonal == (2, 4)

    @given(matrices)
    @settings(max_examples=150, deadline=None)
    def test_snf_contract(self, a):
        res = smith_normal_form(a)
        assert mat_mul(mat_mul(res.u, a), res.v).data == res.s.data
        assert abs(determinant(res.u)) == 1
        assert abs(determinant(res.v)) == 1
        assert mat_mul(res.u, res.u_inv).data == IntMatrix.identity(a.rows).data
        assert mat_mul(res.v, res.v_inv).data == IntMatrix.identity(a.cols).data
        assert res.s.is_diagonal()
        diag = [d for d in res.s.diagonal if d != 0]
        assert all(d > 0 for d in diag)
        for x, y in zip(diag, diag[1:]):
            assert y % x == 0
        # zero diagonal entries trail the nonzero ones
        seen_zero = False
        for d in res.s.diagonal:
            if d == 0:
                seen_zero = True
            elif seen_zero:
                pytest.fail("nonzero after zero on the diagonal")


class TestIntLattice:
    def test_index(self):
        lat = IntLattice(2)
        lat.add([2, 0])
        lat.add([0, 2])
        assert lat.index_in_ambient() == 4
        lat.add([1, 1])
        assert lat.index_in_ambient() == 2

    def test_contains(self):
        lat = IntLattice(3)
        lat.add([1, 2, 3])
        lat.add([0, 4, 2])
        assert lat.contains([1, 6, 5])
        assert not lat.contains([0, 2, 1])

    def test_rank_deficient_index_zero(self):
        lat = IntLattice(2)
        lat.add([3, 6])
        assert lat.index_in_ambient() == 0

    def test_hnf_normalization(self):
        lat = IntLattice(2)
        lat.add([2, 7])
        lat.add([0, 3])
        rows = lat.hnf_rows()
        assert rows == [[2, 1], [0, 3]]

    def test_express_in_hnf(self):
        lat = IntLattice(3)
        for vec in ([2, 1, 0], [0, 3, 1], [0, 0, 5]):
            lat.add(vec)
        hnf = lat.hnf_rows()
        combo = [2 * a - b + 3 * c for a, b, c in zip(*hnf)]
        coeffs = express_in_hnf(hnf, combo)
        assert coeffs is not None
        rebuilt = [0, 0, 0]
        for q, row in zip(coeffs, hnf):
            rebuilt = [r + q * x for r, x in zip(rebuilt, row)]
        assert rebuilt == combo
        assert express_in_hnf(hnf, [1, 0, 0]) is None


class TestSolveLinearMod:
    def test_identity_system(self):
        a = IntMatrix.identity(2)
        res = solve_linear_mod(a, [4, 6], [3, 5])
        assert res.modulus == 12
        assert res.particular is not None
        x = res.particular
        assert x[0] % 4 == 3 and x[1] % 6 == 5

    def test_parity_obstruction(self):
        res = solve_linear_mod(IntMatrix.from_rows([[2]]), [4], [1])
        assert res.particular is None

    def test_even_case(self):
        res = solve_linear_mod(IntMatrix.from_rows([[2]]), [4], [2])
        assert res.particular == (1,)
        assert res.kernel == ((2,),)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_linear_mod(IntMatrix.identity(2), [2], [0, 0])

    @given(st.data())
    @settings(max_examples=120, deadline=None)
    def test_matches_exhaustive(self, data):
        nvars = data.draw(st.integers(min_value=1, max_value=3))
        nrows = data.draw(st.integers(min_value=1, max_value=3))
        moduli = [data.draw(st.sampled_from([2, 3, 4, 6])) for _ in range(nrows)]
        a = IntMatrix.from_rows(
            [[data.draw(st.integers(min_value=-4, max_value=4))
              for _ in range(nvars)] for _ in range(nrows)])
        b = [data.draw(st.integers(min_value=-4, max_value=4))
             for _ in range(nrows)]
        res = solve_linear_mod(a, moduli, b)
        bigm = res.modulus
        assert bigm == math.lcm(*moduli)

        def satisfies(x, rhs):
            vals = mat_vec(a, x)
            return all((v - r) % m == 0 for v, r, m in zip(vals, rhs, moduli))

        brute = {x for x in itertools.product(range(bigm), repeat=nvars)
                 if satisfies(x, b)}
        if res.particular is None:
            assert brute == set()
        else:
            assert satisfies(res.particular, b)
            # particular + kernel lattice reproduces every brute solution
            span = set()
            frontier = {tuple(v % bigm for v in res.particular)}
            while frontier:
                x = frontier.pop()
                if x in span:
                    continue
                span.add(x)
                for k in res.kernel:
                    frontier.add(tuple((xi + ki) % bigm for xi, ki in zip(x, k)))
            assert span == brute
        for k in res.kernel:
            assert satisfies(k, [0] * nrows)


class TestAbelianInvariants:
    def test_cyclic(self):
        assert abelian_invariants(get_group("Z6")).invariant_factors == (6,)
        assert abelian_invariants(get_group("Z8")).invariant_factors == (8,)

    def test_klein(self):
        assert abelian_invariants(get_group("K4")).invariant_factors == (2, 2)

    def test_z2xz4(self):
        assert abelian_invariants(get_group("Z2xZ4")).invariant_factors == (2, 4)

    def test_elementary_eight(self):
        pres = abelian_invariants(get_group("Z2xZ2xZ2"))
        assert pres.invariant_factors == (2, 2, 2)

    def test_trivial(self):
        assert abelian_invariants(get_group("Z1")).invariant_factors == ()

    def test_rejects_nonabelian(self):
        with pytest.raises(NotAbelian):
            abelian_invariants(get_group("S3"))

    def test_round_trip_all_elements(self):
        for name in ("Z1", "Z2", "Z6", "K4", "Z2xZ4", "Z2xZ2xZ2", "Z8"):
            pres = abelian_invariants(get_group(name))
            g = pres.group
            for x in range(g.order):
                coords = pres.coords_of(x)
                assert len(coords) == len(pres.invariant_factors)
                assert pres.element_of(coords) == x

    def test_coords_are_homomorphic(self):
        pres = abelian_invariants(get_group("Z2xZ4"))
        g = pres.group
        for x in range(g.order):
            for y in range(g.order):
                cx, cy = pres.coords_of(x), pres.coords_of(y)
                s = tuple((a + b) % d for a, b, d
                          in zip(cx, cy, pres.invariant_factors))
                assert pres.element_of(s) == g.table[x][y]

    def test_presentation_maps_verified(self):
        pres = abelian_invariants(direct_product(cyclic_group(3),
                                                 cyclic_group(6)))
        assert pres.invariant_factors == (3, 6)
        assert pres.to_group.is_homomorphism()
        assert pres.to_group.is_bijective()
