import unittest
import logging

from .context import tori
from tori import *


class TestUtilities(unittest.TestCase):

    def test_parse_label(self):
        self.assertEqual(parse_label('8T31'), (8, 31))
        self.assertEqual(parse_label(' 15T104 '), (15, 104))
        for label in ['8t31', 'T3', '8T', '0T1', '4T0', '8T3.1', 8]:
            self.assertRaises(ParseError, parse_label, label)

    def test_check_invariants(self):
        self.assertIsNone(check_invariants([]))
        self.assertIsNone(check_invariants([2, 2, 4, 12]))
        self.assertRaises(ValueError, check_invariants, [1, 2])
        self.assertRaises(ValueError, check_invariants, [4, 2])
        self.assertRaises(ValueError, check_invariants, [2, 3])

    def test_format_invariants(self):
        self.assertEqual(format_invariants([]), '0')
        self.assertEqual(format_invariants([6]), 'Z/6')
        self.assertEqual(format_invariants([2, 4]), 'Z/2 x Z/4')

    def test_group_order(self):
        self.assertEqual(group_order([]), 1)
        self.assertEqual(group_order([2, 2, 6]), 24)

    def test_check_budget(self):
        self.assertIsNone(check_budget('BAR_BUDGET', 10, 10))
        with self.assertRaises(BudgetError) as cm:
            check_budget('BAR_BUDGET', 11, 10)
        e = cm.exception
        self.assertEqual((e.budget_name, e.needed, e.budget),
          ('BAR_BUDGET', 11, 10))
        self.assertIn('BAR_BUDGET', str(e))
        # Budget errors are value errors, as are the other library errors
        self.assertIsInstance(e, ValueError)
        self.assertTrue(issubclass(ParseError, ValueError))
        self.assertTrue(issubclass(UnknownLabelError, ValueError))

    def test_time_it(self):
        @time_it
        def double(x):
            return 2*x

        self.assertEqual(double.__name__, 'double')
        with self.assertLogs('tori.utilities', level=logging.INFO) as cm:
            self.assertEqual(double(3), 6)
        self.assertEqual(len(cm.output), 2)
        self.assertIn('double', cm.output[-1])


if __name__ == '__main__':
    unittest.main()
