import unittest
import json

from click.testing import CliRunner

from .context import tori
from tori import *
from tori.cli import tori as tori_cli


DATA_DIR = PROJECT_ROOT/'tests'/'data'

class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(tori_cli, list(args))

    def test_h1(self):
        result = self.invoke('h1', '-g', '4T2')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), 'H1(G, J) = Z/2 x Z/2')

        result = self.invoke('h1', '-g', '3:(1,2,3)', '--json')
        self.assertEqual(result.exit_code, 0)
        d = json.loads(result.output)
        self.assertEqual(d['h1_J'], [3])
        self.assertIsNone(d['group']['label'])

        result = self.invoke('h1', '-n', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip().split('\n'),
          ['3T1: H1(G, J) = Z/3', '3T2: H1(G, J) = 0'])

        # Subgroup outside the group
        result = self.invoke('h1', '-g', '4T2', '-s', '(1,2)')
        self.assertEqual(result.exit_code, 1)

    def test_flabby(self):
        result = self.invoke('flabby', '-g', '3T2')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), 'H1(G, [J]^fl) = 0')

        result = self.invoke('flabby', '-g', '4T2', '-d', '(1,2)(3,4)',
          '--reduce')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip().split('\n'),
          ['H1(G, [J]^fl) = Z/2', 'H1(<(1,2)(3,4)>, [J]^fl) = 0'])

        result = self.invoke('flabby', '-g', '4T2', '-b', '3')
        self.assertEqual(result.exit_code, 3)
        result = self.invoke('flabby', '-g', '4T2', '-b', '4')
        self.assertEqual(result.exit_code, 0)

    def test_obstruction(self):
        result = self.invoke('obstruction', '-g', '8T21', '--json')
        self.assertEqual(result.exit_code, 0)
        d = json.loads(result.output)
        self.assertEqual(d['obstruction']['ker']['invariants'], [2])
        self.assertEqual(d['obstruction']['dnr']['invariants'], [])
        self.assertEqual(d['obstruction']['dr'], [])
        # Output should be deterministic
        self.assertEqual(self.invoke('obstruction', '-g', '8T21',
          '--json').output, result.output)

        result = self.invoke('obstruction', '--cover-file',
          str(DATA_DIR/'4t2_cover.json'), '-d', '(2,3);(1,2)(3,4)')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip().split('\n'),
          ['Obs1N = Z/2', 'Dnr = 0', 'Dr(<(2,3);(1,2)(3,4)>) = Z/2'])

    def test_survey(self):
        result = self.invoke('survey', '--cover-file',
          str(DATA_DIR/'4t2_cover.json'), '--json')
        self.assertEqual(result.exit_code, 0)
        d = json.loads(result.output)
        self.assertEqual(d['num_subgroups'], 10)
        self.assertEqual(sum(c['count'] for c in d['true_set']), 1)

        result = self.invoke('survey', '-g', '10T7')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('Subgroups: 59', result.output)

        result = self.invoke('survey', '-g', '10T7', '-b', '30')
        self.assertEqual(result.exit_code, 3)

    def test_h3z(self):
        result = self.invoke('h3z', '-g', '4T2')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), 'H3(G, Z) = Z/2')

        result = self.invoke('h3z', '-g', '4T4', '-b', '100')
        self.assertEqual(result.exit_code, 3)
        self.assertIn('Error', result.output)

        result = self.invoke('h3z', '-g', '4T2', '-n', '4')
        self.assertEqual(result.exit_code, 2)

    def test_report(self):
        result = self.invoke('report', '-g', '3T1')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('Tamagawa number = 3', result.output)

        result = self.invoke('report', '-g', '8T3', '--no-flabby', '--json')
        self.assertEqual(result.exit_code, 0)
        d = json.loads(result.output)
        self.assertIsNone(d['flabby_class_h1'])
        self.assertEqual(d['tamagawa_numerator'], 8)

        result = self.invoke('report', '-g', '10T7', '-b', '10')
        self.assertEqual(result.exit_code, 3)
        self.assertIn('Error', result.output)

    def test_table1(self):
        result = self.invoke('table1', '-g', '4T2')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(),
          '4T2: HNP can fail, H1(G, [J]^fl) = Z/2')

        result = self.invoke('table1', '-g', '12T2')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('not covered', result.output)

        result = self.invoke('table1')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(len(result.output.strip().split('\n')), len(TABLE1))

    def test_catalog(self):
        result = self.invoke('catalog', '-n', '4')
        self.assertEqual(result.exit_code, 0)
        lines = result.output.strip().split('\n')
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[1], '4T2 4 4 paper-citation')

    def test_errors(self):
        # Malformed group
        result = self.invoke('h1', '-g', 'bingo')
        self.assertEqual(result.exit_code, 2)
        self.assertIn('Error', result.output)

        # No group at all
        self.assertEqual(self.invoke('h1').exit_code, 2)

        # Unknown label
        result = self.invoke('h1', '-g', '9T4')
        self.assertEqual(result.exit_code, 4)

        # Malformed group spec file
        result = self.invoke('obstruction', '--cover-file',
          str(DATA_DIR/'malformed.json'))
        self.assertEqual(result.exit_code, 2)


if __name__ == '__main__':
    unittest.main()
