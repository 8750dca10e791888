import os
from pathlib import Path


PROJECT_ROOT = Path(os.path.abspath(os.path.join(
  os.path.dirname(__file__), '../')))
DATA_DIR = PROJECT_ROOT/'tori'/'data'

#: Group catalog fixtures shipped with the package
CATALOG_PATH = DATA_DIR/'catalog.json'

#: Refuse to materialize permutation groups with more elements than this
MAX_GROUP_ORDER = 10**6

#: Refuse to enumerate all subgroups of groups of larger order than this
SUBGROUP_ORDER_BOUND = 400

#: Maximum number of cochain unknowns (|K| - 1)^2 * rank allowed when
#: computing H^2 of a lattice through the normalized bar complex
BAR_BUDGET = 2*10**5

#: Maximum number of cochain cells (|G| - 1)^(n + 1) allowed when
#: computing H^n(G, Z) through the normalized bar complex;
#: the default admits groups of order 16 in degree 3
HN_BUDGET = 15**4

#: Check the homomorphism property of a lattice action on every pair
#: (element, generator) when |G| * rank^2 is at most this
HOMOMORPHISM_CHECK_CAP = 10**7

#: Integer matrices with at least this many entries go through the
#: sparse elimination path of the normal form routines
SPARSE_THRESHOLD = 20000

#: Nonzero H^1(G, [J_{G/H}]^fl) for transitive groups G = nTm,
#: 2 <= n <= 15, n != 12, keyed by label.
#: For all other labels in that range the group is trivial.
TABLE1 = {
  '4T2': [2],
  '4T4': [2],
  '6T4': [2],
  '6T12': [2],
  '8T2': [2],
  '8T3': [2, 2, 2],
  '8T4': [2],
  '8T9': [2],
  '8T11': [2],
  '8T13': [2],
  '8T14': [2],
  '8T15': [2],
  '8T19': [2],
  '8T21': [2],
  '8T22': [2],
  '8T31': [2],
  '8T32': [2],
  '8T37': [2],
  '8T38': [2],
  '9T2': [3],
  '9T5': [3],
  '9T7': [3],
  '9T9': [3],
  '9T11': [3],
  '9T14': [3],
  '9T23': [3],
  '10T7': [2],
  '10T26': [2],
  '10T32': [2],
  '14T30': [2],
  '15T9': [5],
  '15T14': [5],
  }

#: Transitive group indices m, per degree n, for which the Hasse norm
#: principle can fail for a degree n extension with Galois group nTm.
#: Derived from ``TABLE1``.
ALWAYS_HNP_HOLDS_TABLES = {}
for _label in TABLE1:
    _n, _m = map(int, _label.split('T'))
    ALWAYS_HNP_HOLDS_TABLES.setdefault(_n, []).append(_m)
del _label, _n, _m

#: Largest degree covered by ``TABLE1``
TABLE1_MAX_DEGREE = 15

#: Degrees inside the range of ``TABLE1`` that it does not cover
TABLE1_EXCLUDED_DEGREES = [12]

#: CLI exit codes
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3
EXIT_UNKNOWN_LABEL = 4

#: Number of transitive groups of degree n up to conjugacy in S_n, n <= 15
NUM_TRANSITIVE_GROUPS = {
  1: 1, 2: 1, 3: 2, 4: 5, 5: 5, 6: 16, 7: 7, 8: 50, 9: 34, 10: 45, 11: 8,
  12: 301, 13: 9, 14: 63, 15: 104,
  }
