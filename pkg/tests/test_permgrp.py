import unittest
import os
import random
import logging

from sympy.combinatorics import Permutation, PermutationGroup

from .context import tori
from tori import *


SLOW = bool(os.environ.get('TORI_SLOW'))

def sympy_order(G):
    return PermutationGroup([Permutation(list(g.images))
      for g in G.generators]).order()

S3 = group_from_generators(3, ['(1,2,3)', '(1,2)'])
V4 = group_from_generators(4, ['(1,2)(3,4)', '(1,3)(2,4)'])
A4 = group_from_generators(4, ['(1,2,3)', '(2,3,4)'])
S4 = group_from_generators(4, ['(1,2,3,4)', '(1,2)'])
A5 = group_from_generators(5, ['(1,2,3)', '(1,2,3,4,5)'])


class TestPermgrp(unittest.TestCase):

    def test_parse_perm(self):
        p = parse_perm(' (1, 8)(2,3) ', 8)
        self.assertEqual(str(p), '(1,8)(2,3)')
        self.assertEqual(p(0), 7)
        self.assertEqual(str(parse_perm('()', 3)), '()')
        self.assertEqual(str(parse_perm('(3,1,2)', 3)), '(1,2,3)')

        # Should refuse malformed cycles
        for s in ['(1,2', '1,2', '(1,5)', '(1,1)', '(1,2)(2,3)', '(0,1)']:
            self.assertRaises(ParseError, parse_perm, s, 4)

    def test_products(self):
        p = parse_perm('(1,2)', 3)
        q = parse_perm('(2,3)', 3)
        # Should apply p first
        self.assertEqual(str(p*q), '(1,3,2)')
        self.assertEqual(str(q*p), '(1,2,3)')
        self.assertTrue((p*p).is_identity())
        self.assertEqual((p*q).order(), 3)
        self.assertEqual((p*q)**-1, (p*q).inverse())
        self.assertEqual((p*q)**3, Perm.identity(3))

        self.assertEqual(commutator(p, q), p.inverse()*q.inverse()*p*q)
        self.assertEqual(str(conjugate_element(p, q)), '(1,3)')

    def test_group_from_generators(self):
        for G, order in [(S3, 6), (V4, 4), (A4, 12), (S4, 24), (A5, 60)]:
            self.assertEqual(G.order, order)
            self.assertEqual(G.order, sympy_order(G))
            self.assertTrue(is_transitive(G))
        self.assertIn(parse_perm('(1,2)(3,4)', 4), A4)
        self.assertNotIn(parse_perm('(1,2)', 4), A4)

        # Should refuse bad input
        self.assertRaises(ParseError, group_from_generators, 0, [])
        self.assertRaises(ParseError, group_from_generators, 3, ['(1,4)'])
        self.assertRaises(BudgetError, group_from_generators, 6,
          ['(1,2,3,4,5,6)', '(1,2)'], max_order=100)

    def test_subgroups_and_cosets(self):
        H = stabilizer(S4, 1)
        self.assertEqual(H.order, 6)
        self.assertTrue(H.is_subgroup_of(S4))
        self.assertRaises(ValueError, stabilizer, S4, 5)

        cosets = right_cosets(S4, H)
        self.assertEqual(len(cosets), 4)
        # Should put H first
        self.assertEqual(set(cosets[0]), H.element_set)
        self.assertEqual(right_transversal(S4, H)[0], S4.identity)

        image, hom = coset_action(S4, H)
        self.assertEqual(image.degree, 4)
        self.assertEqual(image.order, 24)
        self.assertEqual(hom.kernel().order, 1)

        # Kernel of the action on cosets is the core
        C = generated_subgroup(S4, ['(1,2)(3,4)'])
        image, hom = coset_action(S4, normalizer(S4, C))
        self.assertEqual(image.degree, 3)
        self.assertEqual(hom.kernel().element_set, V4.element_set)

        self.assertRaises(ValueError, generated_subgroup, A4, ['(1,2)'])
        self.assertRaises(ValueError, right_cosets, A4,
          group_from_generators(4, ['(1,2)']))

    def test_double_cosets(self):
        H = stabilizer(S4, 1)
        K = stabilizer(S4, 2)
        reps = double_cosets(S4, H, K)
        self.assertEqual(len(reps), 2)
        self.assertEqual(reps[0], S4.identity)
        get = sum(len(double_coset(H, x, K)) for x in reps)
        self.assertEqual(get, S4.order)

    def test_characteristic_subgroups(self):
        self.assertEqual(derived_subgroup(S4).order, 12)
        self.assertEqual(derived_subgroup(A4).element_set, V4.element_set)
        self.assertEqual(derived_subgroup(A5).order, 60)
        self.assertEqual(center(S4).order, 1)
        self.assertEqual(center(V4).order, 4)
        self.assertEqual(center(catalog_get('8T19')).order, 2)
        self.assertTrue(is_normal(S4, V4))
        self.assertFalse(is_normal(S4, stabilizer(S4, 1)))
        self.assertEqual(normal_closure(S4, [parse_perm('(1,2,3)', 4)]).order,
          12)

    def test_sylow(self):
        self.assertEqual(sylow(S4, 2).order, 8)
        self.assertEqual(sylow(S4, 3).order, 3)
        self.assertEqual(sylow(A5, 5).order, 5)
        self.assertTrue(is_metacyclic(S3))
        self.assertTrue(is_metacyclic(catalog_get('7T3')))
        self.assertFalse(is_metacyclic(V4))
        self.assertFalse(is_metacyclic(A5))
        self.assertTrue(is_cyclic(catalog_get('8T1')))
        self.assertFalse(is_cyclic(V4))
        self.assertTrue(is_abelian(V4))
        self.assertFalse(is_abelian(S3))

    def test_all_subgroups(self):
        S = all_subgroups(S4)
        self.assertEqual(len(S), 30)
        self.assertEqual(len(subgroup_class_reps(S4)), 11)
        # Should sort by order
        self.assertEqual(S[0].order, 1)
        self.assertEqual(S[-1].order, 24)
        self.assertEqual(len(cyclic_subgroups(S4)), 17)

        self.assertEqual(len(all_subgroups(A5)), 59)
        self.assertEqual(len(subgroup_class_reps(A5)), 9)
        self.assertEqual(len(all_subgroups(catalog_get('8T31'))), 225)

        # Should respect the order bound
        self.assertRaises(BudgetError, all_subgroups, S4, 20)
        self.assertRaises(BudgetError, subgroup_class_reps, S4, None, 20)

        # Should log its running time
        with self.assertLogs('tori.utilities', level=logging.INFO) as cm:
            all_subgroups(S3)
        self.assertIn('all_subgroups', cm.output[-1])

    @unittest.skipUnless(SLOW, 'set TORI_SLOW to run')
    def test_all_subgroups_slow(self):
        self.assertEqual(len(all_subgroups(catalog_get('8T38'))), 351)
        G = catalog_get('10T32')
        self.assertRaises(BudgetError, all_subgroups, G)
        self.assertEqual(len(all_subgroups(G, order_bound=720)), 1455)

    def test_subgroup_classes(self):
        classes = subgroup_classes(S4)
        self.assertEqual(sum(len(c) for c in classes), 30)
        sizes = sorted(len(c) for c in classes)
        self.assertEqual(sizes, [1, 1, 1, 1, 3, 3, 3, 3, 4, 4, 6])
        H = stabilizer(S4, 1)
        x = parse_perm('(1,2)', 4)
        self.assertEqual(conjugate_subgroup(H, x).element_set,
          stabilizer(S4, 2).element_set)
        self.assertEqual(intersection(H, stabilizer(S4, 2)).order, 2)
        self.assertEqual(join(H, stabilizer(S4, 2)).order, 24)

    def test_group_hom(self):
        C2 = group_from_generators(2, ['(1,2)'])
        sign = GroupHom(S3, C2, ['()', '(1,2)'])
        self.assertTrue(sign.is_surjective())
        self.assertEqual(sign.kernel().order, 3)
        self.assertEqual(sign.preimage(trivial_subgroup(C2)).order, 3)
        self.assertEqual(sign(parse_perm('(1,3)', 3)), parse_perm('(1,2)', 2))
        self.assertEqual(hom_image(sign, stabilizer(S3, 1)).order, 2)
        self.assertEqual(hom_preimage(sign, C2).order, 6)
        self.assertEqual(hom_kernel(sign).order, 3)

        # Should refuse maps that are not homomorphisms
        self.assertRaises(ValueError, GroupHom, S3, C2, ['(1,2)', '()'])
        self.assertRaises(ValueError, GroupHom, S3, C2, ['(1,2)'])

    def test_abelianization(self):
        self.assertEqual(abelianization(A4).invariants, [3])
        self.assertEqual(abelianization(S4).invariants, [2])
        self.assertEqual(abelianization(V4).invariants, [2, 2])
        self.assertEqual(abelianization(A5).invariants, [])

        # Should be a homomorphism onto the invariants
        ab = abelianization(catalog_get('8T2'))
        self.assertEqual(ab.invariants, [2, 4])
        G = ab.group
        for g in G.generators:
            for h in G.generators:
                get = ab.coords(g*h)
                expect = [(a + b) % d for a, b, d in zip(ab.coords(g),
                  ab.coords(h), ab.invariants)]
                self.assertEqual(get, expect)
        for i, g in enumerate(ab.generators):
            expect = [int(i == j) for j in range(len(ab.invariants))]
            self.assertEqual(ab.coords(g), expect)

        # Should be additive on random pairs of elements
        rng = random.Random(7)
        for label in ['8T15', '8T31']:
            ab = abelianization(catalog_get(label))
            elements = ab.group.elements
            for __ in range(100):
                g, h = rng.choice(elements), rng.choice(elements)
                expect = [(a + b) % d for a, b, d in zip(ab.coords(g),
                  ab.coords(h), ab.invariants)]
                self.assertEqual(ab.coords(g*h), expect)

    def test_describe_group(self):
        self.assertEqual(describe_group(V4), 'C2 x C2')
        self.assertEqual(describe_group(trivial_subgroup(V4)), '1')
        self.assertEqual(describe_group(A4),
          'order 12 with abelianization C3')
        self.assertEqual(describe_group(A5),
          'order 60 with abelianization 1')


if __name__ == '__main__':
    unittest.main()
