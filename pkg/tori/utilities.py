"""
CONVENTIONS:
    - Permutation points are 1-based in every external format (cycle strings, JSON files, CLI) and 0-based inside ``Perm`` objects
    - Invariant factor lists are plain lists of integers greater than 1 in divisibility order; the empty list is the trivial group
"""
import logging
from functools import wraps
import datetime as dt
import re


logger = logging.getLogger(__name__)


class ParseError(ValueError):
    """
    Raised on malformed user input: cycle strings, group labels, group strings and group spec files.
    """
    pass

class BudgetError(ValueError):
    """
    Raised when a computation would exceed one of the configured budgets in :mod:`tori.constants`.
    """
    def __init__(self, budget_name, needed, budget):
        self.budget_name = budget_name
        self.needed = needed
        self.budget = budget
        super().__init__('{!s} exceeded: needs {!s}, allowed {!s}'.format(
          budget_name, needed, budget))

class UnknownLabelError(ValueError):
    """
    Raised when a group label is not in the catalog.
    """
    pass


def time_it(f):
    """
    Decorate function ``f`` to measure and log elapsed time when executed.
    """
    @wraps(f)
    def wrap(*args, **kwargs):
        t1 = dt.datetime.now()
        logger.info('Timing %s...', f.__name__)
        result = f(*args, **kwargs)
        t2 = dt.datetime.now()
        seconds = (t2 - t1).total_seconds()
        logger.info('%s finished in %.2f s', f.__name__, seconds)
        return result
    return wrap

def check_budget(budget_name, needed, budget):
    """
    Raise a ``BudgetError`` naming ``budget_name`` if ``needed`` exceeds ``budget``.
    Otherwise, return nothing.
    """
    if needed > budget:
        raise BudgetError(budget_name, needed, budget)

def parse_label(label):
    """
    Parse a transitive group label of the form 'nTm' and return the pair of integers ``(n, m)``.
    Raise a ``ParseError`` if the label is malformed.

    EXAMPLES:

    >>> parse_label('8T31')
    (8, 31)
    """
    m = re.fullmatch(r'\s*(\d+)T(\d+)\s*', str(label))
    if m is None or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise ParseError('{!s} is not a valid transitive group label'.format(
          label))
    return int(m.group(1)), int(m.group(2))

def check_invariants(invariants):
    """
    Raise a ``ValueError`` if the given list of integers is not a chain of invariant factors, that is, every entry is greater than 1 and divides the next.
    Otherwise, return nothing.
    """
    for i, d in enumerate(invariants):
        if d <= 1:
            raise ValueError('Invariant factor {!s} is not > 1'.format(d))
        if i > 0 and d % invariants[i - 1]:
            raise ValueError('Invariant factors {!s} do not form a '
              'divisibility chain'.format(invariants))

def format_invariants(invariants):
    """
    Return the abelian group with the given invariant factors as a string, e.g. 'Z/2 x Z/4', or '0' for the trivial group.

    EXAMPLES:

    >>> format_invariants([2, 4])
    'Z/2 x Z/4'
    >>> format_invariants([])
    '0'
    """
    if not invariants:
        return '0'
    return ' x '.join('Z/{!s}'.format(d) for d in invariants)

def group_order(invariants):
    """
    Return the order of the finite abelian group with the given invariant factors.
    """
    result = 1
    for d in invariants:
        result *= d
    return result
