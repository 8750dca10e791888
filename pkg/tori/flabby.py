"""
Flabby resolutions 0 -> M -> P -> F -> 0 with P a permutation lattice and F flabby, and the invariant H^1(K, [M]^fl).

The resolution is dual to a coflabby cover of N = Hom(M, ZZ): for every conjugacy class representative K of subgroups and every vector x of the Hermite basis of N^K, the permutation lattice ZZ[G/K] maps onto N by sending the coset K*t to x*action(t).
Such a cover is onto on K-fixed points for every K, so its kernel is coflabby, and dualizing gives the resolution.
"""
import logging
import random

import tori.constants as cs
import tori.intlat as il
import tori.permgrp as pg
import tori.glat as gl
import tori.cohom as co
from tori.utilities import time_it


logger = logging.getLogger(__name__)


class CoverPiece(object):
    """
    One permutation summand ZZ[G/K] of the cover, sent onto N through the fixed vector ``x``.
    """
    __slots__ = ('subgroup', 'vector', 'transversal', 'hom')

    def __init__(self, subgroup, vector, transversal, hom):
        self.subgroup = subgroup
        self.vector = vector
        self.transversal = transversal
        self.hom = hom

class FlabbyResolution(object):
    """
    A flabby resolution 0 -> M -> P -> F -> 0.

    Attributes:

    - ``source``: the lattice M
    - ``permutation_part``: list of pairs (subgroup class representative K, multiplicity) describing P as a sum of ZZ[G/K]
    - ``permutation_lattice``: the lattice P
    - ``flabby_part``: the lattice F
    - ``embedding``: matrix of M -> P in row vector convention
    """
    def __init__(self, source, pieces, permutation_lattice, flabby_part,
      embedding):
        self.source = source
        self.pieces = pieces
        self.permutation_lattice = permutation_lattice
        self.flabby_part = flabby_part
        self.embedding = embedding
        counts = []
        for piece in pieces:
            if counts and counts[-1][0] == piece.subgroup:
                counts[-1][1] += 1
            else:
                counts.append([piece.subgroup, 1])
        self.permutation_part = [tuple(c) for c in counts]

    def __repr__(self):
        return 'FlabbyResolution(rank M={!s}, rank P={!s}, rank F={!s})'\
          .format(self.source.rank, self.permutation_lattice.rank,
          self.flabby_part.rank)

def _perturbed(basis, rng):
    # Another basis of the same lattice: shuffle, then take partial sums
    rows = [list(b) for b in basis]
    rng.shuffle(rows)
    for i in range(1, len(rows)):
        if rng.random() < 0.5:
            rows[i] = [a + b for a, b in zip(rows[i], rows[i - 1])]
    return rows

def _cover_pieces(N, subgroups, seed=None):
    G = N.group
    rng = None if seed is None else random.Random(seed)
    pieces = []
    for K in subgroups:
        basis = gl.fixed_sublattice(N, K)
        if not basis:
            continue
        if rng is not None:
            basis = _perturbed(basis, rng)
        __, hom = pg.coset_action(G, K)
        transversal = pg.right_transversal(G, K)
        for x in basis:
            pieces.append(CoverPiece(K, x, transversal, hom))
    return pieces

def _cover_matrix(N, pieces):
    rows = []
    for piece in pieces:
        for t in piece.transversal:
            rows.append(il.vec_mat(piece.vector, N.action(t), N.rank))
    return rows

def _is_surjective_on_fixed_points(N, pieces, subgroups, fixed):
    for K, target in zip(subgroups, fixed):
        images = []
        for piece in pieces:
            for orbit in pg.orbits(pg.PermGroup(piece.hom.target.degree,
              [piece.hom(k) for k in K.generators])):
                v = [0]*N.rank
                for c in orbit:
                    w = il.vec_mat(piece.vector, N.action(
                      piece.transversal[c - 1]), N.rank)
                    v = [a + b for a, b in zip(v, w)]
                images.append(v)
        if il.hnf(images, N.rank) != target:
            return False
    return True

def _reduce_pieces(N, pieces, subgroups):
    fixed = [gl.fixed_sublattice(N, K) for K in subgroups]
    # Summands of small subgroups have large rank, so try them first
    kept = sorted(pieces, key=lambda p: p.subgroup.order)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if trial and _is_surjective_on_fixed_points(N, trial, subgroups,
          fixed):
            kept = trial
        else:
            i += 1
    logger.info('Rank reduction kept %s of %s cover summands', len(kept),
      len(pieces))
    return kept

@time_it
def flabby_resolution(M, subgroups=None, reverse=False, seed=None,
  reduce=False, order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return a ``FlabbyResolution`` of the lattice ``M``.

    INPUT:
        - ``M``: ``GLattice``
        - ``subgroups`` (optional): list of subgroup conjugacy class representatives of the lattice's group; computed if not given
        - ``reverse``: boolean; if ``True``, then process the subgroup classes in reverse order
        - ``seed`` (optional): integer; if given, then replace each fixed sublattice basis by a randomly perturbed basis of the same lattice
        - ``reduce``: boolean; if ``True``, then greedily drop permutation summands as long as the cover stays onto on all fixed sublattices
        - ``order_bound``: integer; largest group order for which the subgroup classes are enumerated when ``subgroups`` is not given; a ``BudgetError`` is raised beyond it

    NOTES:
        The rank of F depends on these choices; the cohomology of F does not.
    """
    G = M.group
    if subgroups is None:
        subgroups = pg.subgroup_class_reps(G, order_bound=order_bound)
    order = list(reversed(subgroups)) if reverse else list(subgroups)
    N = gl.dual(M)
    pieces = _cover_pieces(N, order, seed)
    if reduce:
        pieces = _reduce_pieces(N, pieces, subgroups)
    Q = gl.direct_sum(*[gl.permutation_lattice(G, p.subgroup)
      for p in pieces]) if pieces else gl.trivial_lattice(G, 0)
    Pi = _cover_matrix(N, pieces)
    kernel = il.integer_kernel(Pi, N.rank) if Pi else []
    solver = il.LatticeBasis(kernel, Q.rank)

    def act(g):
        A = Q.action(g)
        return [solver.coordinates(il.vec_mat(v, A, Q.rank)) for v in kernel]

    C = gl.GLattice(G, len(kernel), [act(s) for s in G.generators],
      element_action=act, name='ker')
    F = gl.dual(C)
    F.name = '[{!s}]^fl'.format(M.name)
    embedding = il.transpose(Pi, M.rank)
    logger.info('Flabby resolution: rank M=%s, rank P=%s, rank F=%s',
      M.rank, Q.rank, F.rank)
    return FlabbyResolution(M, pieces, Q, F, embedding)

def flabby_class_h1(M, K=None, resolution=None,
  order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return the invariant factors of H^1(K, F) for the flabby part F of a flabby resolution of ``M`` and a subgroup ``K`` of the lattice's group (default the whole group).
    This does not depend on the resolution since H^1 of a permutation lattice vanishes.
    """
    if resolution is None:
        resolution = flabby_resolution(M, order_bound=order_bound)
    return co.h1(K, resolution.flabby_part).invariants
