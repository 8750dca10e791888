"""
The first obstruction to the Hasse norm principle for an extension with Galois group ``G`` and intermediate field fixed by ``H``, computed from abelianizations:

- the numerator, the kernel of psi_1: H^ab -> G^ab
- the unramified part of the denominator, generated by the images of the commutators [h, x] that lie in H
- the part of the denominator coming from a decomposition group G_v, computed over the double cosets H x G_v

Subgroups of H^ab are ``ObstructionPart`` objects and compare as subgroups, never by their generator rows.
Also the embedded table of groups with nonzero H^1(G, [J_{G/H}]^fl) and the report arithmetic.
"""
import logging
from collections import Counter

from sympy import isprime

import tori.constants as cs
import tori.intlat as il
import tori.permgrp as pg
import tori.glat as gl
import tori.cohom as co
import tori.flabby as fl
from tori.utilities import ParseError, parse_label, group_order, time_it


logger = logging.getLogger(__name__)


class ObstructionPart(object):
    """
    A subgroup of the finite abelian group ZZ/ambient_1 + ... + ZZ/ambient_k.

    Attributes:

    - ``invariants``: invariant factors of the subgroup
    - ``ambient``: invariant factors of the ambient group
    - ``coords``: canonical generators, the Hermite basis of the preimage lattice without the rows in the relation lattice, reduced mod ``ambient``
    """
    def __init__(self, gens, ambient):
        self.ambient = list(ambient)
        gens = [list(g) for g in gens]
        self.coords = il.canonical_subgroup_coords(gens, self.ambient)
        self.invariants = il.subgroup_invariants(gens, self.ambient)

    @property
    def order(self):
        return group_order(self.invariants)

    def lattice(self):
        return il.subgroup_lattice(self.coords, self.ambient)

    def is_subgroup_of(self, other):
        return self.ambient == other.ambient and\
          il.subgroup_contains(other.coords, self.coords, self.ambient)

    def __eq__(self, other):
        return isinstance(other, ObstructionPart) and\
          self.ambient == other.ambient and self.lattice() == other.lattice()

    def __hash__(self):
        return hash((tuple(self.ambient), tuple(map(tuple, self.lattice()))))

    def to_list(self):
        """
        Return ``[invariants, [ambient, coords]]``.
        """
        return [self.invariants, [self.ambient, self.coords]]

    def to_dict(self):
        return {
          'invariants': self.invariants,
          'ambient': self.ambient,
          'coords': self.coords,
          }

    def __repr__(self):
        return 'ObstructionPart({!r})'.format(self.to_list())

class FirstObstructionN(object):
    """
    The numerator of the first obstruction: ``ker`` is the kernel of psi_1 as an ``ObstructionPart`` and ``psi1`` is the matrix of psi_1 in Smith coordinates (row i is the image of the i-th Smith generator of H^ab).
    """
    def __init__(self, ker, psi1):
        self.ker = ker
        self.psi1 = psi1

def _default_subgroup(G, H):
    if H is None:
        return pg.stabilizer(G, 1)
    pg.check_subgroup(H, G)
    return H

def first_obstruction_n(G, H=None):
    """
    Return the ``FirstObstructionN`` of ``H`` in ``G`` (default the stabilizer of 1).
    The kernel of psi_1 is the image in H^ab of the intersection of H with [G, G].

    EXAMPLES:

    >>> G = pg.group_from_generators(4, ['(1,2)(3,4)', '(1,3)(2,4)'])
    >>> first_obstruction_n(G).ker.invariants
    []
    """
    H = _default_subgroup(G, H)
    Hab = pg.abelianization(H)
    if not Hab.invariants:
        return FirstObstructionN(ObstructionPart([], []), [])
    Gab = pg.abelianization(G)
    psi1 = [Gab.coords(h) for h in Hab.generators]
    common = H.element_set & Gab.derived.element_set
    ker = ObstructionPart([Hab.coords(h) for h in sorted(common)],
      Hab.invariants)
    return FirstObstructionN(ker, psi1)

def first_obstruction_dnr(G, H=None):
    """
    Return the unramified part of the denominator as an ``ObstructionPart`` of H^ab: the image of the group generated by the commutators h^-1 x h x^-1, with x running over the right coset representatives of ``H`` and h over the generators of H intersected with x^-1 H x.
    """
    H = _default_subgroup(G, H)
    Hab = pg.abelianization(H)
    if not Hab.invariants:
        return ObstructionPart([], [])
    gens = []
    for x in pg.right_transversal(G, H):
        meet = pg.intersection(H, pg.conjugate_subgroup(H, x))
        xi = x.inverse()
        for h in meet.generators:
            gens.append(Hab.coords(pg.commutator(h, xi)))
    return ObstructionPart(gens, Hab.invariants)

def first_obstruction_dr(G, Gv, H=None):
    """
    Return the part of the denominator coming from the decomposition group ``Gv`` as an ``ObstructionPart`` of H^ab.

    NOTES:
        For each double coset H x Gv let H_w be the intersection of H with x Gv x^-1.
        Then psi_2 sends the sum of the H_w^ab to Gv^ab by h -> x^-1 h x and phi_1 sends it to H^ab by inclusion; the result is phi_1 of the kernel of psi_2.
    """
    H = _default_subgroup(G, H)
    pg.check_subgroup(Gv, G)
    Hab = pg.abelianization(H)
    if not Hab.invariants:
        return ObstructionPart([], [])
    Gvab = pg.abelianization(Gv)
    domain = []
    psi2 = []
    phi1 = []
    for x in pg.double_cosets(G, H, Gv):
        xi = x.inverse()
        Hw = pg.intersection(H, pg.conjugate_subgroup(Gv, xi))
        Hwab = pg.abelianization(Hw)
        for h in Hwab.generators:
            psi2.append(Gvab.coords(xi*h*x))
            phi1.append(Hab.coords(h))
        domain.extend(Hwab.invariants)
    if not domain:
        return ObstructionPart([], Hab.invariants)
    kernel = il.abelian_map_kernel(psi2, domain, Gvab.invariants)
    k = len(Hab.invariants)
    gens = [il.vec_mat(y, phi1, k) for y in kernel]
    return ObstructionPart(gens, Hab.invariants)


# ---------------------------------------------------------------------------
# Surveys over all decomposition groups
# ---------------------------------------------------------------------------
class HnpSurvey(object):
    """
    The ramified denominator for every subgroup of ``G`` taken as decomposition group.

    Attributes:

    - ``ker``: the numerator ``ObstructionPart``
    - ``per_subgroup``: list of pairs (subgroup, ``ObstructionPart``) in sorted subgroup order
    - ``true_set``: subgroups whose denominator is the whole numerator
    - ``false_set``: the other subgroups
    - ``minimal_true_subgroups``: members of ``true_set`` containing no other member
    """
    def __init__(self, ker, per_subgroup):
        self.ker = ker
        self.per_subgroup = per_subgroup
        self.true_set = [S for S, dr in per_subgroup if dr == ker]
        self.false_set = [S for S, dr in per_subgroup if dr != ker]
        self.minimal_true_subgroups = [S for S in self.true_set
          if not any(T.order < S.order and T.is_subgroup_of(S)
          for T in self.true_set)]

    def collected(self, subgroups=None):
        """
        Return a sorted list of pairs (description, count) describing the given subgroups (default the true set).
        """
        if subgroups is None:
            subgroups = self.true_set
        counts = Counter((S.order, pg.describe_group(S)) for S in subgroups)
        return [(name, n) for (__, name), n in sorted(counts.items())]

@time_it
def hnp_survey(G, H=None, subgroups=None,
  order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return the ``HnpSurvey`` of ``G`` and ``H`` (default the stabilizer of 1) over the given subgroups (default all subgroups of ``G``).
    The denominator is computed once per conjugacy class of subgroups.
    Raise a ``BudgetError`` if all subgroups are needed and the order of ``G`` exceeds ``order_bound``.
    """
    H = _default_subgroup(G, H)
    if subgroups is None:
        subgroups = pg.all_subgroups(G, order_bound)
    ker = first_obstruction_n(G, H).ker
    by_elements = {}
    classes = pg.subgroup_classes(G, subgroups)
    for i, cls in enumerate(classes):
        dr = first_obstruction_dr(G, cls[0], H)
        for S in cls:
            by_elements[S.element_set] = dr
        logger.debug('Subgroup class %s of %s: %s', i + 1, len(classes), dr)
    per_subgroup = [(S, by_elements[S.element_set])
      for S in sorted(subgroups, key=pg.PermGroup.sort_key)]
    logger.info('Surveyed %s subgroups in %s classes', len(per_subgroup),
      len(classes))
    return HnpSurvey(ker, per_subgroup)


# ---------------------------------------------------------------------------
# Embedded table and report arithmetic
# ---------------------------------------------------------------------------
def check_label(label):
    """
    Parse a transitive group label 'nTm' and return ``(n, m)``.
    Raise a ``ParseError`` if it is malformed or if ``m`` exceeds the number of transitive groups of degree ``n``.
    """
    n, m = parse_label(label)
    count = cs.NUM_TRANSITIVE_GROUPS.get(n)
    if count is not None and m > count:
        raise ParseError('There are only {!s} transitive groups of degree '
          '{!s}'.format(count, n))
    return n, m

def always_hnp_holds(label):
    """
    Return ``True`` if the Hasse norm principle holds for every extension of degree n with Galois group nTm, ``False`` if it can fail, and ``None`` if the embedded table does not decide it (degree 12 or degree > 15).
    Raise a ``ParseError`` if the label is malformed.

    EXAMPLES:

    >>> always_hnp_holds('7T3')
    True
    >>> always_hnp_holds('4T2')
    False
    >>> always_hnp_holds('12T31') is None
    True
    """
    n, m = check_label(label)
    if n == 1 or isprime(n):
        return True
    if n in cs.TABLE1_EXCLUDED_DEGREES or n > cs.TABLE1_MAX_DEGREE:
        return None
    return m not in cs.ALWAYS_HNP_HOLDS_TABLES.get(n, [])

def table1_lookup(label):
    """
    Return a dictionary with key 'status', one of 'holds-always', 'obstructed' and 'unknown', and key 'invariants', the nonzero invariants of H^1(G, [J_{G/H}]^fl) for 'obstructed' rows, ``[]`` for 'holds-always' and ``None`` for 'unknown'.
    """
    holds = always_hnp_holds(label)
    if holds is None:
        return {'status': 'unknown', 'invariants': None}
    if holds:
        return {'status': 'holds-always', 'invariants': []}
    return {'status': 'obstructed', 'invariants': list(cs.TABLE1[label.strip()])}

def tamagawa_number(h1_invariants, sha_order=1):
    """
    Return the Tamagawa number |H^1(k, T^)| / |Sha(T)| of a torus given the invariants of H^1(G, J) and the order of Sha.
    Raise a ``ValueError`` if ``sha_order`` does not divide the numerator.
    """
    numerator = group_order(h1_invariants)
    if sha_order < 1 or numerator % sha_order:
        raise ValueError('Sha order {!s} does not divide {!s}'.format(
          sha_order, numerator))
    return numerator // sha_order

class HnpReport(object):
    """
    Invariants of the norm-one torus of ``G`` and ``H`` in one record; see :func:`report`.
    """
    def __init__(self, **fields):
        self.__dict__.update(fields)

    def to_dict(self):
        result = {
          'h1_J': self.h1_J,
          'flabby_class_h1': self.flabby_class_h1,
          'obstruction': {
            'ker': self.ker.to_dict(),
            'dnr': self.dnr.to_dict(),
            'dr': [dr.to_dict() for dr in self.dr],
            },
          'tamagawa_numerator': self.tamagawa_numerator,
          'tamagawa_number': self.tamagawa_number,
          'table1': self.table1,
          }
        if self.local_flabby_class_h1 is not None:
            result['local_flabby_class_h1'] = self.local_flabby_class_h1
        return result

def report(G, H=None, label=None, decomposition_groups=(), flabby=True,
  reduce=False, order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return an ``HnpReport`` for the norm-one torus of ``G`` and ``H`` (default the stabilizer of 1) with the fields

    - ``h1_J``: invariants of H^1(G, J_{G/H})
    - ``flabby_class_h1``: invariants of H^1(G, [J_{G/H}]^fl), or ``None`` if ``flabby`` is ``False``
    - ``ker``, ``dnr``: numerator and unramified denominator of the first obstruction
    - ``dr``: the ramified denominators for the given decomposition groups
    - ``local_flabby_class_h1``: invariants of H^1(G_v, [J_{G/H}]^fl), the local T(k_v)/R, for the first decomposition group, or ``None``
    - ``tamagawa_numerator``: |H^1(G, J_{G/H})|
    - ``tamagawa_number``: the Tamagawa number when Sha is known to vanish, otherwise ``None``
    - ``table1``: the result of :func:`table1_lookup` if a ``label`` is given

    The flabby resolution enumerates the subgroup classes of ``G`` and raises a ``BudgetError`` if the order of ``G`` exceeds ``order_bound``.
    """
    H = _default_subgroup(G, H)
    J = gl.chevalley_lattice(G, H)
    h1_J = co.h1(G, J).invariants
    resolution = None
    flabby_class = None
    local_class = None
    if flabby:
        resolution = fl.flabby_resolution(J, reduce=reduce,
          order_bound=order_bound)
        flabby_class = fl.flabby_class_h1(J, resolution=resolution)
        if decomposition_groups:
            local_class = fl.flabby_class_h1(J, decomposition_groups[0],
              resolution=resolution)
    table1 = table1_lookup(label) if label is not None else None
    # Sha is dual to a quotient of H^1(G, [J]^fl)
    sha_vanishes = flabby_class == [] or pg.is_metacyclic(G) or\
      (table1 is not None and table1['status'] == 'holds-always')
    numerator = group_order(h1_J)
    return HnpReport(
      h1_J=h1_J,
      flabby_class_h1=flabby_class,
      local_flabby_class_h1=local_class,
      ker=first_obstruction_n(G, H).ker,
      dnr=first_obstruction_dnr(G, H),
      dr=[first_obstruction_dr(G, Gv, H) for Gv in decomposition_groups],
      tamagawa_numerator=numerator,
      tamagawa_number=tamagawa_number(h1_J) if sha_vanishes else None,
      table1=table1,
      )
