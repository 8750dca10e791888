"""
Cohomology of G-lattices: H^1 by Cayley graph propagation, H^2 and H^n(G, ZZ) through the normalized bar complex, Tate groups in degrees -1 and 0, the flabby and coflabby predicates, and kernels of restriction maps.

CONVENTIONS:
    - G-lattices carry a right action (see :mod:`tori.glat`); the bar complex turns it into the left action g.m = m*action(g^-1)
    - Bar cochains are normalized: a cochain of degree n is a function on n-tuples of nonidentity elements; coordinates are numbered by the tuple, read as a base |G| - 1 numeral in the sorted order of the nonidentity elements, followed by the lattice coordinate
    - Conjugate subgroups have isomorphic cohomology, so quantification over subgroups runs over conjugacy class representatives
"""
import logging
import itertools
from collections import deque

import tori.constants as cs
import tori.intlat as il
import tori.permgrp as pg
import tori.glat as gl
from tori.utilities import check_budget, check_invariants, format_invariants,\
  group_order


logger = logging.getLogger(__name__)


class CohomologyGroup(object):
    """
    A finite cohomology group given by its invariant factors.
    Optional ``representatives`` are cocycles (sparse dictionaries of cochain coordinates) whose classes are the Smith generators; they do not take part in equality.
    """
    def __init__(self, invariants, description=None, representatives=None):
        self.invariants = list(invariants)
        check_invariants(self.invariants)
        self.description = description
        self.representatives = representatives

    @property
    def order(self):
        return group_order(self.invariants)

    def is_trivial(self):
        return not self.invariants

    def __eq__(self, other):
        if isinstance(other, CohomologyGroup):
            return self.invariants == other.invariants
        return self.invariants == other

    def __hash__(self):
        return hash(tuple(self.invariants))

    def __str__(self):
        return format_invariants(self.invariants)

    def __repr__(self):
        return 'CohomologyGroup({!r}, {!r})'.format(self.invariants,
          self.description)

def _restricted(K, M):
    if K is None or K == M.group:
        return M
    return gl.restrict(M, K)


# ---------------------------------------------------------------------------
# H^1 by propagation along the Cayley graph
# ---------------------------------------------------------------------------
def _h1_cayley(M):
    G = M.group
    r = M.rank
    gens = G.generators
    k = len(gens)
    U = r*k
    if not U:
        return []
    # Z^1 and B^1 have the same rank r - rank(M^G) over QQ
    fixed_rank = len(gl.fixed_sublattice(M))
    target = U - (r - fixed_rank)
    echelon = il.EchelonBasis(U)
    identity = il.identity(r)
    # f(g) = sum_j u_j*blocks[g][j] with u_j = f(s_j); None is a zero block
    blocks = {G.identity: [None]*k}
    queue = deque([G.identity])
    while queue and echelon.rank < target:
        g = queue.popleft()
        for j, s in enumerate(gens):
            R = M.action(s)
            new = [None if A is None else il.mat_mul(A, R, r)
              for A in blocks[g]]
            new[j] = identity if new[j] is None else il.mat_add(new[j],
              identity)
            gs = g*s
            old = blocks.get(gs)
            if old is None:
                blocks[gs] = new
                queue.append(gs)
                continue
            for c in range(r):
                form = []
                for A, B in zip(new, old):
                    for i in range(r):
                        a = A[i][c] if A is not None else 0
                        b = B[i][c] if B is not None else 0
                        form.append(a - b)
                if any(form):
                    echelon.add(form)
                if echelon.rank >= target:
                    break
            if echelon.rank >= target:
                break
    logger.debug('Cocycle constraints of rank %s on %s unknowns',
      echelon.rank, U)
    Z = il.right_kernel(echelon.rows(), U)
    B = []
    for i in range(r):
        row = []
        for s in gens:
            row.extend(a - int(i == j) for j, a in enumerate(M.action(s)[i]))
        B.append(row)
    coords = il.lattice_coordinates(Z, B, U)
    invariants, __ = il.quotient_invariants(len(Z), coords,
      require_finite=True)
    return invariants

def h1(K, M, method='cayley'):
    """
    Return H^1(K, M) as a ``CohomologyGroup``, where ``K`` is a subgroup of the group of the lattice ``M`` (``None`` means the whole group).

    INPUT:
        - ``K``: ``PermGroup`` or ``None``
        - ``M``: ``GLattice``
        - ``method``: string; 'cayley' parametrizes cocycles by their values on the generators and imposes the constraints found along a breadth-first walk of the Cayley graph, stopping once the constraints reach the known rank; 'bar' reads H^1 off the full normalized bar complex and serves as an independent check

    EXAMPLES:

    >>> G = pg.group_from_generators(2, ['(1,2)'])
    >>> h1(G, gl.sign_lattice(G)).invariants
    [2]
    """
    M = _restricted(K, M)
    if method == 'cayley':
        invariants = _h1_cayley(M)
    elif method == 'bar':
        __, tc = _bar_torsion(M.group, M, 1, budget=None)
        invariants = tc.invariants
    else:
        raise ValueError('Unknown method {!r}'.format(method))
    return CohomologyGroup(invariants, 'H^1')


# ---------------------------------------------------------------------------
# The normalized bar complex
# ---------------------------------------------------------------------------
class BarComplex(object):
    """
    Normalized inhomogeneous cochains of ``group`` with values in the lattice ``lattice`` (``None`` means ZZ with the trivial action).
    The coboundary of a cochain f of degree n is

        (df)(g_1, ..., g_{n+1}) = g_1.f(g_2, ..., g_{n+1})
          + sum_{k=1}^{n} (-1)^k f(g_1, ..., g_k g_{k+1}, ..., g_{n+1})
          + (-1)^{n+1} f(g_1, ..., g_n)

    with every term having an identity argument dropped.
    """
    def __init__(self, group, lattice=None):
        self.group = group
        self.lattice = lattice
        self.rank = 1 if lattice is None else lattice.rank
        self.elements = [g for g in group.elements if not g.is_identity()]
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.inverses = {g: g.inverse() for g in self.elements}
        self.size = len(self.elements)

    def dimension(self, n):
        return self.size**n*self.rank

    def tuple_index(self, t):
        result = 0
        for g in t:
            result = result*self.size + self.index[g]
        return result

    def index_tuple(self, idx, n):
        digits = []
        for __ in range(n):
            idx, d = divmod(idx, self.size)
            digits.append(self.elements[d])
        return tuple(reversed(digits))

    def unit_coboundary(self, t, i):
        """
        Return the coboundary of the cochain that takes the value e_i at the tuple ``t`` and vanishes elsewhere, as a sparse dictionary.
        """
        n = len(t)
        r = self.rank
        m = self.size
        mn = m**n
        t_idx = self.tuple_index(t)
        row = {}

        def add(sigma_idx, j, a):
            key = sigma_idx*r + j
            value = row.get(key, 0) + a
            if value:
                row[key] = value
            else:
                row.pop(key, None)

        for g in self.elements:
            base = self.index[g]*mn + t_idx
            if self.lattice is None:
                add(base, 0, 1)
            else:
                for j, a in enumerate(self.lattice.action(self.inverses[g])[i]):
                    if a:
                        add(base, j, a)
        for k in range(n):
            sign = -1 if k % 2 == 0 else 1
            tk = t[k]
            for a in self.elements:
                b = self.inverses[a]*tk
                if b.is_identity():
                    continue
                add(self.tuple_index(t[:k] + (a, b) + t[k + 1:]), i, sign)
        sign = -1 if n % 2 == 0 else 1
        for g in self.elements:
            add(t_idx*m + self.index[g], i, sign)
        return row

    def coboundary_rows(self, n):
        """
        Yield the rows of the matrix of the coboundary from degree ``n`` to degree ``n + 1``, one per cochain coordinate in order.
        """
        for t in itertools.product(self.elements, repeat=n):
            for i in range(self.rank):
                yield self.unit_coboundary(t, i)

    def coboundary(self, n, cochain):
        """
        Return the coboundary of the sparse cochain ``cochain`` of degree ``n``.
        """
        result = {}
        for coord, value in cochain.items():
            t_idx, i = divmod(coord, self.rank)
            row = self.unit_coboundary(self.index_tuple(t_idx, n), i)
            for key, a in row.items():
                b = result.get(key, 0) + value*a
                if b:
                    result[key] = b
                else:
                    result.pop(key, None)
        return result

def restrict_cochain(big, small, n, cochain):
    """
    Restrict the sparse cochain ``cochain`` of degree ``n`` of the bar complex ``big`` to the bar complex ``small`` of a subgroup.
    """
    r = big.rank
    result = {}
    for t in itertools.product(small.elements, repeat=n):
        src = big.tuple_index(t)*r
        dst = small.tuple_index(t)*r
        for i in range(r):
            a = cochain.get(src + i)
            if a:
                result[dst + i] = a
    return result

def _bar_torsion(K, M, n, budget=None, budget_name='BAR_BUDGET'):
    complex_ = BarComplex(K, M)
    if budget is not None:
        check_budget(budget_name, complex_.dimension(n), budget)
    logger.info('Bar complex of degree %s: %s rows, %s columns', n,
      complex_.dimension(n - 1), complex_.dimension(n))
    tc = il.TorsionCokernel(complex_.coboundary_rows(n - 1),
      complex_.dimension(n))
    return complex_, tc

def h2(K, M, budget=cs.BAR_BUDGET):
    """
    Return H^2(K, M) as a ``CohomologyGroup`` with cocycle representatives.
    Raise a ``BudgetError`` naming 'BAR_BUDGET' if the normalized bar complex has more than ``budget`` cochain coordinates in degree 2.
    """
    M = _restricted(K, M)
    __, tc = _bar_torsion(M.group, M, 2, budget)
    return CohomologyGroup(tc.invariants, 'H^2', tc.representatives())

def _restriction_kernel(big, tc, subgroups, lattice, n, budget,
  budget_name):
    # Intersection of the kernels of the restrictions to the given subgroups,
    # as a lattice of exponent vectors in the Smith coordinates of tc
    reps = tc.representatives()
    k = len(tc.invariants)
    result = il.identity(k)
    for S in subgroups:
        if S.order == 1:
            continue
        L = None if lattice is None else gl.restrict(lattice, S)
        small, tc_small = _bar_torsion(S, L, n, budget, budget_name)
        if not tc_small.invariants:
            continue
        images = [tc_small.coords(restrict_cochain(big, small, n, y))
          for y in reps]
        kernel = il.abelian_map_kernel(images, tc.invariants,
          tc_small.invariants)
        result = il.lattice_intersection(result, kernel, k)
    return result

def sha2omega(G, M, budget=cs.BAR_BUDGET):
    """
    Return the kernel of the restriction map from H^2(G, M) to the sum of the H^2(C, M) over the cyclic subgroups C of ``G``.
    Restrictions to conjugate subgroups have the same kernel, so one cyclic subgroup per conjugacy class suffices.
    """
    M = _restricted(G, M)
    G = M.group
    big, tc = _bar_torsion(G, M, 2, budget)
    if not tc.invariants:
        return CohomologyGroup([], 'Sha^2_omega')
    cyclics = pg.subgroup_class_reps(G, pg.cyclic_subgroups(G))
    kernel = _restriction_kernel(big, tc, cyclics, M, 2, budget,
      'BAR_BUDGET')
    return CohomologyGroup(il.subgroup_invariants(kernel, tc.invariants),
      'Sha^2_omega')

def hn_trivial_z(G, n, budget=cs.HN_BUDGET):
    """
    Return H^n(G, ZZ) for the trivial action and n in {1, 2, 3}.
    Raise a ``BudgetError`` naming 'HN_BUDGET' if (|G| - 1)^(n + 1) exceeds ``budget``.

    NOTES:
        H^2(G, ZZ) is dual to the abelianization and H^3(G, ZZ) is the Schur multiplier.
    """
    if n not in (1, 2, 3):
        raise ValueError('Degree must be 1, 2 or 3, not {!s}'.format(n))
    check_budget('HN_BUDGET', (G.order - 1)**(n + 1), budget)
    __, tc = _bar_torsion(G, None, n)
    return CohomologyGroup(tc.invariants, 'H^{!s}(G, Z)'.format(n),
      tc.representatives())

def schur_multiplier(G, budget=cs.HN_BUDGET):
    return hn_trivial_z(G, 3, budget)

def res_kernel_hn_z(G, subgroups, n, budget=cs.HN_BUDGET):
    """
    Return the intersection of the kernels of the restriction maps from H^n(G, ZZ) to H^n(S, ZZ) over the given subgroups ``S`` of ``G``.
    """
    check_budget('HN_BUDGET', (G.order - 1)**(n + 1), budget)
    for S in subgroups:
        pg.check_subgroup(S, G)
    big, tc = _bar_torsion(G, None, n)
    if not tc.invariants:
        return CohomologyGroup([], 'ker res')
    kernel = _restriction_kernel(big, tc, subgroups, None, n, None,
      'HN_BUDGET')
    return CohomologyGroup(il.subgroup_invariants(kernel, tc.invariants),
      'ker res')


# ---------------------------------------------------------------------------
# Tate cohomology and the flabby predicates
# ---------------------------------------------------------------------------
def tate_h_minus1(K, M):
    """
    Return the Tate group of degree -1: the kernel of the norm of ``K`` on ``M`` modulo I_K M.
    """
    M = _restricted(K, M)
    r = M.rank
    if not r:
        return CohomologyGroup([], 'H^-1')
    kernel = il.integer_kernel(gl.norm_matrix(M), r)
    coords = il.lattice_coordinates(kernel, gl.augmentation_rows(M), r)
    invariants, __ = il.quotient_invariants(len(kernel), coords,
      require_finite=True)
    return CohomologyGroup(invariants, 'H^-1')

def tate_h0(K, M):
    """
    Return the Tate group of degree 0: the fixed sublattice M^K modulo the image of the norm.
    """
    M = _restricted(K, M)
    r = M.rank
    if not r:
        return CohomologyGroup([], 'H^0')
    fixed = gl.fixed_sublattice(M)
    coords = il.lattice_coordinates(fixed, gl.norm_matrix(M), r)
    invariants, __ = il.quotient_invariants(len(fixed), coords,
      require_finite=True)
    return CohomologyGroup(invariants, 'H^0')

def is_flabby(M, subgroups=None):
    """
    Return ``True`` if the Tate group of degree -1 vanishes for every subgroup of the lattice's group, checked on conjugacy class representatives (or on the given list ``subgroups``).
    """
    if subgroups is None:
        subgroups = pg.subgroup_class_reps(M.group)
    return all(tate_h_minus1(K, M).is_trivial() for K in subgroups)

def is_coflabby(M, subgroups=None):
    """
    Return ``True`` if H^1 vanishes for every subgroup of the lattice's group, checked on conjugacy class representatives (or on the given list ``subgroups``).
    """
    if subgroups is None:
        subgroups = pg.subgroup_class_reps(M.group)
    return all(h1(K, M).is_trivial() for K in subgroups)
