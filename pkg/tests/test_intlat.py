import unittest
import random
from math import gcd

from sympy import Matrix

from .context import tori
from tori import *


def random_matrix(rng, m, n, low=-6, high=6):
    return [[rng.randint(low, high) for __ in range(n)] for __ in range(m)]

def is_hnf(H):
    pivots = pivot_columns(H)
    if len(pivots) != len(H) or pivots != sorted(set(pivots)):
        return False
    for i, j in enumerate(pivots):
        p = H[i][j]
        if p <= 0:
            return False
        if any(not 0 <= H[k][j] < p for k in range(i)):
            return False
    return True


class TestIntlat(unittest.TestCase):

    def test_xgcd(self):
        for a, b in [(12, 18), (-7, 3), (0, 5), (5, 0), (-4, -6)]:
            g, s, t = xgcd(a, b)
            self.assertEqual(g, gcd(a, b))
            self.assertEqual(s*a + t*b, g)

    def test_hnf(self):
        get = hnf([[2, 0], [0, 2], [1, 1]])
        expect = [[1, 1], [0, 2]]
        self.assertEqual(get, expect)

        # Should drop zero rows
        self.assertEqual(hnf([[0, 0]]), [])
        self.assertEqual(hnf([], 3), [])

        rng = random.Random(11)
        for __ in range(20):
            A = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            H, U = hnf(A, transform=True)
            self.assertTrue(is_hnf(H))
            self.assertEqual(H, hnf(A))
            self.assertEqual(mat_mul(U, A, len(A[0])), H)

    def test_hnf_sparse(self):
        # Should agree with the dense path
        rng = random.Random(5)
        for __ in range(20):
            m, n = rng.randint(1, 8), rng.randint(1, 8)
            A = random_matrix(rng, m, n, -3, 3)
            rows = [{j: a for j, a in enumerate(r) if a} for r in A]
            cols, H = hnf_sparse(rows)
            dense = [[h.get(j, 0) for j in range(n)] for h in H]
            self.assertEqual(dense, hnf(A, n))
            self.assertEqual(cols, pivot_columns(dense))

    def test_snf(self):
        self.assertEqual(snf([[2, 0], [0, 3]]).diagonal(), [1, 6])

        rng = random.Random(7)
        for __ in range(20):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            A = random_matrix(rng, m, n)
            dec = snf(A)
            self.assertEqual(mat_mul(mat_mul(dec.U, A, n), dec.V, n), dec.S)
            self.assertEqual(mat_mul(dec.V, dec.Vinv, n), identity(n))
            self.assertTrue(is_unimodular(dec.U))
            diag = dec.diagonal()
            nonzero = [d for d in diag if d]
            # Should give a divisibility chain with zeros trailing
            self.assertEqual(diag[:len(nonzero)], nonzero)
            for a, b in zip(nonzero, nonzero[1:]):
                self.assertEqual(b % a, 0)
            for i in range(m):
                for j in range(n):
                    if i != j:
                        self.assertEqual(dec.S[i][j], 0)

    def test_elementary_divisors(self):
        # Should multiply up to the determinant
        rng = random.Random(3)
        for __ in range(20):
            n = rng.randint(1, 5)
            A = random_matrix(rng, n, n)
            det = abs(Matrix(A).det())
            divisors = elementary_divisors(A)
            if det:
                self.assertEqual(len(divisors), n)
                self.assertEqual(group_order(divisors), int(det))
            else:
                self.assertLess(len(divisors), n)

        # Should take the sparse path on large inputs and agree
        A = diagonal([2]*50 + [6]*50) + [[0]*100 for __ in range(100)]
        self.assertGreaterEqual(len(A)*len(A[0]), SPARSE_THRESHOLD)
        self.assertEqual(elementary_divisors(A), [2]*50 + [6]*50)

    def test_inverse_unimodular(self):
        A = [[2, 1], [1, 1]]
        get = inverse_unimodular(A)
        expect = [[1, -1], [-1, 2]]
        self.assertEqual(get, expect)
        self.assertRaises(ValueError, inverse_unimodular, [[2, 0], [0, 1]])
        self.assertTrue(is_unimodular(A))
        self.assertFalse(is_unimodular([[2, 0], [0, 1]]))
        self.assertFalse(is_unimodular([[1, 0]]))

    def test_kernels(self):
        self.assertEqual(integer_kernel([[1], [1]]), [[1, -1]])
        self.assertEqual(integer_kernel([[1, 0], [0, 1]]), [])
        self.assertEqual(right_kernel([[2, 4]], 2), [[2, -1]])

        # Should return saturated bases of the kernel
        rng = random.Random(13)
        for __ in range(20):
            m, n = rng.randint(1, 5), rng.randint(1, 6)
            A = random_matrix(rng, m, n, -4, 4)
            K = right_kernel(A, n)
            rank = Matrix(A).rank()
            self.assertEqual(len(K), n - rank)
            for x in K:
                self.assertEqual(vec_mat(x, transpose(A, n), m), [0]*m)
            if K:
                self.assertTrue(all(d == 1 for d in elementary_divisors(K)))

    def test_lattice_basis(self):
        L = LatticeBasis([[1, 1], [0, 2]])
        self.assertEqual(L.coordinates([3, 5]), [3, 1])
        self.assertIn([2, 4], L)
        self.assertNotIn([1, 0], L)
        self.assertRaises(ValueError, L.coordinates, [1, 0])
        self.assertRaises(ValueError, LatticeBasis, [[1, 2], [2, 4]])

        get = lattice_coordinates([[2, 0], [0, 3]], [[4, 3], [0, -6]])
        expect = [[2, 1], [0, -2]]
        self.assertEqual(get, expect)
        self.assertTrue(lattice_contains([[2, 0], [2, 2]], [0, 2]))
        self.assertFalse(lattice_contains([[2, 0], [2, 2]], [1, 1]))

    def test_lattice_intersection(self):
        get = lattice_intersection([[2, 0], [0, 2]], [[3, 0], [0, 3]])
        expect = [[6, 0], [0, 6]]
        self.assertEqual(get, expect)

        get = lattice_intersection([[1, 1]], [[1, 0], [0, 2]])
        expect = [[2, 2]]
        self.assertEqual(get, expect)

        self.assertEqual(lattice_intersection([], [[1, 0]]), [])
        self.assertRaises(ValueError, lattice_intersection, [[1, 0]],
          [[1, 0, 0]])

    def test_quotient_invariants(self):
        self.assertEqual(quotient_invariants(3,
          [[2, 0, 0], [0, 2, 0], [0, 0, 2]]), ([2, 2, 2], 0))
        self.assertEqual(quotient_invariants(2, [[2, 0], [0, 6]]), ([2, 6], 0))
        self.assertEqual(quotient_invariants(2, [[2, 0], [0, 3]]), ([6], 0))
        self.assertEqual(quotient_invariants(2, [[1, 1], [2, 2]]), ([], 1))

        # Should report or refuse a free part
        self.assertEqual(quotient_invariants(2, [[2, 0]]), ([2], 1))
        self.assertEqual(quotient_invariants(3, []), ([], 3))
        self.assertRaises(ValueError, quotient_invariants, 2, [[2, 0]],
          require_finite=True)

        # Free rank should agree with the structure of the quotient
        relations = [[2, 4, 0], [0, 0, 3]]
        Q = quotient_structure(3, relations)
        self.assertEqual(quotient_invariants(3, relations),
          (Q.invariants, Q.free_rank))

    def test_abelian_quotient(self):
        Q = quotient_structure(2, [[2, 0], [0, 3]])
        self.assertEqual(Q.invariants, [6])
        self.assertEqual(Q.free_rank, 0)

        # Should be a homomorphism onto ZZ/6
        u, v = [1, 0], [0, 1]
        cu, cv = coords_in_quotient(Q, u), coords_in_quotient(Q, v)
        self.assertEqual(Q.coords([1, 1]), [(cu[0] + cv[0]) % 6])
        self.assertEqual(gcd(Q.coords([1, 1])[0], 6), 1)
        self.assertEqual(Q.coords([2, 0]), [2*cu[0] % 6])
        self.assertEqual(Q.coords([2, 3]), [0])
        self.assertEqual(Q.coords(Q.generators()[0]), [1])

        Q = quotient_structure(3, [[2, 0, 0]])
        self.assertEqual(Q.invariants, [2])
        self.assertEqual(Q.free_rank, 2)

    def test_subgroups(self):
        self.assertEqual(subgroup_invariants([[2]], [4]), [2])
        self.assertEqual(subgroup_invariants([[1, 0], [0, 2]], [2, 4]), [2, 2])
        self.assertEqual(subgroup_invariants([[0, 0]], [2, 4]), [])
        self.assertEqual(subgroup_invariants([], []), [])

        # Should not depend on the generators chosen
        self.assertEqual(canonical_subgroup_coords([[6]], [4]), [[2]])
        self.assertEqual(canonical_subgroup_coords([[2]], [4]), [[2]])
        self.assertEqual(canonical_subgroup_coords([[4]], [4]), [])
        self.assertTrue(subgroup_equal([[2]], [[6]], [4]))
        self.assertFalse(subgroup_equal([[1]], [[2]], [4]))

        self.assertTrue(subgroup_contains([[1]], [[2]], [4]))
        self.assertFalse(subgroup_contains([[2]], [[1]], [4]))
        self.assertTrue(subgroup_contains([], [], []))

    def test_abelian_map_kernel(self):
        # ZZ/4 -> ZZ/2, 1 -> 1
        self.assertEqual(abelian_map_kernel([[1]], [4], [2]), [[2]])

        # ZZ/2 + ZZ/2 -> ZZ/2, the sum map
        get = abelian_map_kernel([[1], [1]], [2, 2], [2])
        self.assertEqual(subgroup_invariants(get, [2, 2]), [2])
        self.assertTrue(subgroup_equal(get, [[1, 1]], [2, 2]))

    def test_torsion_cokernel(self):
        tc = TorsionCokernel([{0: 2}, {1: 3}], 3)
        self.assertEqual(tc.invariants, [6])
        reps = tc.representatives()
        self.assertEqual(len(reps), 1)
        self.assertEqual(tc.coords(reps[0]), [1])

        # Should send relations to zero and torsion classes to their order
        self.assertEqual(tc.coords([2, 0, 0]), [0])
        self.assertEqual(tc.coords([1, 0, 0]), [3])
        self.assertIn(tc.coords({1: 1}), [[2], [4]])

        tc = TorsionCokernel([{0: 1, 1: 1}, {0: 1, 1: -1}], 2)
        self.assertEqual(tc.invariants, [2])

        tc = TorsionCokernel([{0: 1}], 2)
        self.assertEqual(tc.invariants, [])
        self.assertEqual(tc.coords([0, 5]), [])

    def test_echelon_basis(self):
        E = EchelonBasis(3)
        self.assertTrue(E.add([2, 4, 0]))
        self.assertFalse(E.add([1, 2, 0]))
        self.assertTrue(E.add([0, 0, 1]))
        self.assertEqual(E.rank, 2)
        self.assertEqual(E.rows(), [[1, 2, 0], [0, 0, 1]])
        self.assertFalse(E.add([0, 0, 0]))


if __name__ == '__main__':
    unittest.main()
