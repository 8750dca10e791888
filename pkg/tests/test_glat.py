import unittest

from .context import tori
from tori import *


S3 = group_from_generators(3, ['(1,2,3)', '(1,2)'])
A4 = group_from_generators(4, ['(1,2,3)', '(2,3,4)'])
D4 = group_from_generators(4, ['(1,2,3,4)', '(1,3)'])


class TestGlat(unittest.TestCase):

    def test_norm1_lattice(self):
        J = norm1_lattice(S3)
        self.assertEqual(J.rank, 2)
        check_homomorphism(J)
        g = parse_perm('(1,3)', 3)
        # Row i is the class of e_{g(i)}, and e_3 = -e_1 - e_2
        self.assertEqual(J.action(g), [[-1, -1], [0, 1]])

        # Should refuse intransitive groups and degree 1
        G = group_from_generators(3, ['(1,2)'])
        self.assertRaises(ValueError, norm1_lattice, G)
        self.assertRaises(ValueError, norm1_lattice,
          group_from_generators(1, []))

    def test_chevalley_lattice(self):
        H = stabilizer(A4, 1)
        J = chevalley_lattice(A4, H)
        self.assertEqual(J.rank, 3)
        check_homomorphism(J)
        self.assertEqual(chevalley_lattice(A4, A4).rank, 0)
        V4 = derived_subgroup(A4)
        self.assertEqual(chevalley_lattice(A4, V4).rank, 2)

    def test_action_is_homomorphism(self):
        for M in [norm1_lattice(D4), permutation_lattice(D4,
          stabilizer(D4, 1)), sign_lattice(D4), point_permutation_lattice(D4)]:
            for g in D4.elements:
                for h in D4.elements:
                    self.assertEqual(mat_mul(M.action(g), M.action(h),
                      M.rank), M.action(g*h))

        # Should refuse matrices that do not define a homomorphism
        C3 = group_from_generators(3, ['(1,2,3)'])
        M = GLattice(C3, 1, [[[-1]]])
        self.assertRaises(ValueError, M.action, C3.identity)
        self.assertRaises(ValueError, GLattice, C3, 1, [[[2]]])
        self.assertRaises(ValueError, GLattice, C3, 2, [[[1]]])
        self.assertRaises(ValueError, GLattice, C3, 1, [])

    def test_dual(self):
        M = norm1_lattice(D4)
        N = dual(dual(M))
        for g in D4.elements:
            self.assertEqual(N.action(g), M.action(g))
            self.assertEqual(dual(M).action(g),
              transpose(M.action(g.inverse()), M.rank))
        # Permutation lattices are self dual
        P = point_permutation_lattice(D4)
        for g in D4.generators:
            self.assertEqual(dual(P).action(g), P.action(g))

    def test_direct_sum(self):
        M = direct_sum(norm1_lattice(S3), trivial_lattice(S3),
          sign_lattice(S3))
        self.assertEqual(M.rank, 4)
        g = parse_perm('(1,2)', 3)
        self.assertEqual(M.action(g)[3], [0, 0, 0, -1])
        self.assertEqual(M.action(g)[2], [0, 0, 1, 0])
        self.assertRaises(ValueError, direct_sum)
        self.assertRaises(ValueError, direct_sum, trivial_lattice(S3),
          trivial_lattice(A4))

    def test_restrict(self):
        M = norm1_lattice(A4)
        H = stabilizer(A4, 1)
        R = restrict(M, H)
        self.assertEqual(R.group, H)
        for h in H.elements:
            self.assertEqual(R.action(h), M.action(h))
        self.assertRaises(ValueError, restrict, M,
          group_from_generators(4, ['(1,2)']))

    def test_fixed_sublattice(self):
        P = point_permutation_lattice(S3)
        self.assertEqual(fixed_sublattice(P), [[1, 1, 1]])
        self.assertEqual(fixed_sublattice(norm1_lattice(S3)), [])
        self.assertEqual(fixed_sublattice(trivial_lattice(S3, 2)),
          [[1, 0], [0, 1]])

        # Should count the K-orbits on the cosets
        for H in [stabilizer(A4, 1), derived_subgroup(A4),
          trivial_subgroup(A4)]:
            P = permutation_lattice(A4, H)
            for K in subgroup_class_reps(A4):
                image, hom = coset_action(A4, H)
                KK = PermGroup(image.degree, [hom(k) for k in K.generators])
                get = len(fixed_sublattice(P, K))
                expect = len(orbits(KK))
                self.assertEqual(get, expect)

    def test_norm_matrix(self):
        self.assertEqual(norm_matrix(trivial_lattice(A4)), [[12]])
        self.assertEqual(norm_matrix(sign_lattice(S3)), [[0]])
        self.assertEqual(norm_matrix(point_permutation_lattice(S3)),
          [[2, 2, 2]]*3)
        rows = augmentation_rows(sign_lattice(S3))
        self.assertEqual(rows, [[0], [-2]])

    def test_norm1_projection(self):
        P = norm1_projection(4)
        self.assertEqual(len(P), 4)
        self.assertEqual(integer_kernel(P), [[1, 1, 1, 1]])
        # Should intertwine the permutation action with the norm-one action
        Z = point_permutation_lattice(D4)
        J = norm1_lattice(D4)
        for g in D4.generators:
            self.assertEqual(mat_mul(Z.action(g), P, 3),
              mat_mul(P, J.action(g), 3))


if __name__ == '__main__':
    unittest.main()
