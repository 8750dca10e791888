"""
G-lattices: free ZZ-modules of finite rank with an action of a permutation group by unimodular integer matrices.

CONVENTIONS:
    - Lattice vectors are row vectors and the group acts on the right: ``v*action(g)``, so that action(g*h) = action(g)*action(h)
    - A basis of a sublattice is a list of row vectors in Hermite normal form
"""
import logging
import random
from collections import deque

import tori.constants as cs
import tori.intlat as il
import tori.permgrp as pg


logger = logging.getLogger(__name__)


class GLattice(object):
    """
    A lattice ZZ^rank with a right action of the permutation group ``group``.

    INPUT:
        - ``group``: ``PermGroup``
        - ``rank``: nonnegative integer
        - ``generator_matrices``: list of unimodular rank x rank integer matrices, one per generator of ``group``
        - ``element_action`` (optional): function sending a group element to its matrix; when absent, element matrices are built on first use by a breadth-first walk of the Cayley graph, which also checks that the generator matrices define a homomorphism
        - ``name`` (optional): string used in reprs and reports
    """
    def __init__(self, group, rank, generator_matrices, element_action=None,
      name=None):
        if len(generator_matrices) != len(group.generators):
            raise ValueError('Got {!s} matrices for {!s} generators'.format(
              len(generator_matrices), len(group.generators)))
        for A in generator_matrices:
            if len(A) != rank or any(len(row) != rank for row in A):
                raise ValueError('Action matrix is not {!s} x {!s}'.format(
                  rank, rank))
            if rank and not il.is_unimodular(A):
                raise ValueError('Action matrix {!s} is not unimodular'\
                  .format(A))
        self.group = group
        self.rank = rank
        self.generator_matrices = [[list(row) for row in A]
          for A in generator_matrices]
        self.name = name
        self._element_action = element_action
        self._cache = None if element_action is None else {}

    def _materialize(self):
        G = self.group
        cache = {G.identity: il.identity(self.rank)}
        queue = deque([G.identity])
        while queue:
            g = queue.popleft()
            for s, A in zip(G.generators, self.generator_matrices):
                gs = g*s
                B = il.mat_mul(cache[g], A, self.rank)
                old = cache.get(gs)
                if old is None:
                    cache[gs] = B
                    queue.append(gs)
                elif old != B:
                    raise ValueError('Action matrices do not define a '
                      'homomorphism')
        logger.debug('Cached %s action matrices of rank %s', len(cache),
          self.rank)
        return cache

    def action(self, g):
        """
        Return the matrix by which the group element ``g`` acts.
        """
        if self._cache is None:
            self._cache = self._materialize()
        A = self._cache.get(g)
        if A is None:
            if self._element_action is None:
                raise ValueError('{!s} is not an element of the group'.format(
                  g))
            A = self._element_action(g)
            self._cache[g] = A
        return A

    def __repr__(self):
        return 'GLattice(name={!r}, rank={!s}, group_order={!s})'.format(
          self.name, self.rank, self.group.order)

def check_homomorphism(M, cap=cs.HOMOMORPHISM_CHECK_CAP, sample_size=200,
  seed=1):
    """
    Raise a ``ValueError`` if action(g)*action(s) differs from action(g*s) for some group element ``g`` and generator ``s``.
    All elements are checked when |G|*rank^2 is at most ``cap``, otherwise a seeded random sample of ``sample_size`` elements.
    Otherwise, return nothing.
    """
    G = M.group
    elements = G.elements
    if G.order*M.rank**2 > cap:
        elements = random.Random(seed).sample(elements, min(sample_size,
          len(elements)))
    for g in elements:
        A = M.action(g)
        for s in G.generators:
            if il.mat_mul(A, M.action(s), M.rank) != M.action(g*s):
                raise ValueError('Action is not a homomorphism at {!s}, {!s}'\
                  .format(g, s))

def permutation_matrix(perm):
    """
    Return the matrix with rows e_{perm(i)}.
    """
    n = perm.degree
    return [[int(perm(i) == j) for j in range(n)] for i in range(n)]

def _norm1_matrix(perm):
    # Row i is the image of e_i-bar, where e_n-bar = -(e_1-bar + ... + e_{n-1}-bar)
    n = perm.degree
    minus = [-1]*(n - 1)
    result = []
    for i in range(n - 1):
        j = perm(i)
        if j == n - 1:
            result.append(list(minus))
        else:
            result.append([int(j == k) for k in range(n - 1)])
    return result

def trivial_lattice(G, rank=1):
    I = il.identity(rank)
    return GLattice(G, rank, [I for __ in G.generators],
      element_action=lambda g: I, name='Z' if rank == 1 else 'Z^{!s}'\
      .format(rank))

def sign_lattice(G):
    """
    Return the rank-1 lattice on which odd permutations act by -1.
    """
    def sign(g):
        return [[(-1)**sum(len(c) - 1 for c in g.cycles())]]

    return GLattice(G, 1, [sign(s) for s in G.generators],
      element_action=sign, name='Z^-')

def permutation_lattice(G, H):
    """
    Return the permutation lattice ZZ[G/H] with basis the right cosets of ``H`` in ``G`` in coset order, so that the coset ``H`` is the first basis vector.
    Raise a ``ValueError`` if ``H`` is not a subgroup of ``G``.
    """
    image, hom = pg.coset_action(G, H)

    def act(g):
        return permutation_matrix(hom(g))

    return GLattice(G, image.degree, [act(s) for s in G.generators],
      element_action=act, name='Z[G/H]')

def point_permutation_lattice(G):
    """
    Return ZZ^n with the permutation action of ``G`` on the basis vectors.
    """
    return GLattice(G, G.degree, [permutation_matrix(s) for s in G.generators],
      element_action=permutation_matrix, name='Z^n')

def norm1_lattice(G):
    """
    Return the Chevalley module J_{G/H} of the transitive group ``G`` of degree n >= 2, with H the stabilizer of 1.
    This is ZZ^n / ZZ(1, ..., 1) in the basis of the classes of e_1, ..., e_{n-1}; it is the character lattice of the norm-one torus.
    Raise a ``ValueError`` if ``G`` is not transitive or has degree 1.

    EXAMPLES:

    >>> G = pg.group_from_generators(2, ['(1,2)'])
    >>> norm1_lattice(G).action(G.generators[0])
    [[-1]]
    """
    if G.degree < 2:
        raise ValueError('Degree must be at least 2')
    if not pg.is_transitive(G):
        raise ValueError('{!r} is not transitive'.format(G))
    return GLattice(G, G.degree - 1, [_norm1_matrix(s) for s in G.generators],
      element_action=_norm1_matrix, name='J')

def chevalley_lattice(G, H):
    """
    Return the Chevalley module J_{G/H} for an arbitrary subgroup ``H`` of ``G``, built from the action of ``G`` on the right cosets of ``H``.
    Its rank is [G:H] - 1; for ``H = G`` it is the zero lattice.
    """
    image, hom = pg.coset_action(G, H)

    def act(g):
        return _norm1_matrix(hom(g))

    return GLattice(G, image.degree - 1, [act(s) for s in G.generators],
      element_action=act, name='J_{G/H}')

def norm1_projection(n):
    """
    Return the n x (n - 1) matrix of the quotient map ZZ^n -> J sending e_i to the class of e_i.
    Its row kernel is spanned by (1, ..., 1).
    """
    rows = [[int(i == j) for j in range(n - 1)] for i in range(n - 1)]
    rows.append([-1]*(n - 1))
    return rows

def dual(M):
    """
    Return the dual lattice Hom(M, ZZ), on which ``g`` acts by the transpose of the inverse of its action on ``M``.
    """
    def act(g):
        return il.transpose(M.action(g.inverse()), M.rank)

    mats = [il.transpose(il.inverse_unimodular(A), M.rank) if M.rank else []
      for A in M.generator_matrices]
    name = None if M.name is None else M.name + '^o'
    return GLattice(M.group, M.rank, mats, element_action=act, name=name)

def direct_sum(*lattices):
    """
    Return the direct sum of the given lattices, which must share their group.
    Raise a ``ValueError`` otherwise.
    """
    if not lattices:
        raise ValueError('Need at least one lattice')
    G = lattices[0].group
    for M in lattices[1:]:
        if M.group != G:
            raise ValueError('Lattices have different groups')
    rank = sum(M.rank for M in lattices)

    def act(g):
        return il.block_diagonal([M.action(g) for M in lattices])

    return GLattice(G, rank, [act(s) for s in G.generators],
      element_action=act, name=' + '.join(str(M.name) for M in lattices))

def restrict(M, K):
    """
    Return the lattice ``M`` viewed as a ``K``-lattice for a subgroup ``K`` of its group.
    Raise a ``ValueError`` if ``K`` is not a subgroup.
    """
    pg.check_subgroup(K, M.group)
    return GLattice(K, M.rank, [M.action(k) for k in K.generators],
      element_action=M.action, name=M.name)

def fixed_sublattice(M, K=None):
    """
    Return the Hermite basis of the sublattice of ``M`` fixed by the subgroup ``K`` (default the whole group).
    The result is saturated.
    """
    if K is None:
        K = M.group
    r = M.rank
    stacked = [[] for __ in range(r)]
    for k in K.generators:
        A = M.action(k)
        for i in range(r):
            stacked[i].extend(a - int(i == j) for j, a in enumerate(A[i]))
    return il.integer_kernel(stacked, r*len(K.generators))

def norm_matrix(M, K=None):
    """
    Return the sum of the action matrices over all elements of ``K`` (default the whole group).
    """
    if K is None:
        K = M.group
    r = M.rank
    result = [[0]*r for __ in range(r)]
    for k in K.elements:
        A = M.action(k)
        for i in range(r):
            row = result[i]
            for j, a in enumerate(A[i]):
                if a:
                    row[j] += a
    return result

def augmentation_rows(M, K=None):
    """
    Return the rows of action(s) - 1 over the generators ``s`` of ``K``; they span the sublattice I_K M.
    """
    if K is None:
        K = M.group
    rows = []
    for k in K.generators:
        A = M.action(k)
        for i in range(M.rank):
            rows.append([a - int(i == j) for j, a in enumerate(A[i])])
    return rows

