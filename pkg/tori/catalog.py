"""
The group catalog: transitive permutation groups by label 'nTm' and the Schur covers used as inputs to the obstruction computations.

Entries live in ``cs.CATALOG_PATH``.
An entry either lists generators in cycle notation or names a construction, which is one of

- ``cyclic``, ``dihedral``, ``symmetric``, ``alternating``: the natural actions on n points
- ``affine_line``: z -> z + 1 and z -> a*z on the prime field F_p
- ``affine``: translations of F_p^d together with the given matrices, acting on the p^d vectors
- ``linear``: the given matrices acting on the p^d - 1 nonzero vectors of F_p^d
- ``psl2``, ``pgl2``: Moebius transformations of the projective line over F_p
- ``regular``: the right regular representation of another group
- ``coset``: the action of another group on the right cosets of a subgroup
- ``derived``: the derived subgroup of another group

Vectors of F_p^d are numbered in base p with the first coordinate most significant, starting from point 1 for the zero vector.
Matrices act on row vectors from the right.
Built entries are checked against their recorded order and for transitivity.
"""
import json
import logging
import difflib
import itertools as it
from functools import lru_cache

from sympy import isprime, primitive_root

import tori.constants as cs
import tori.permgrp as pg
from tori.utilities import ParseError, UnknownLabelError, parse_label


logger = logging.getLogger(__name__)


class CatalogEntry(object):
    """
    A built catalog group.

    Attributes:

    - ``label``: string
    - ``degree``: integer
    - ``generators``: list of cycle strings
    - ``order``: integer
    - ``provenance``: one of 'paper-citation', 'constructed', 'exported-fixture'
    - ``group``: the ``PermGroup``
    """
    def __init__(self, label, group, provenance):
        self.label = label
        self.group = group
        self.degree = group.degree
        self.generators = [str(g) for g in group.generators]
        self.order = group.order
        self.provenance = provenance

    def to_dict(self):
        """
        Return the entry in the group spec file format.
        """
        return {
            'label': self.label,
            'degree': self.degree,
            'generators': self.generators,
            'order': self.order,
        }

    def __repr__(self):
        return 'CatalogEntry(label={!r}, degree={!s}, order={!s})'.format(
          self.label, self.degree, self.order)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------
def cyclic_group(n):
    """
    Return the cyclic group generated by (1,2,...,n).
    """
    return pg.PermGroup(n, [pg.Perm([(i + 1) % n for i in range(n)])])

def dihedral_group(n):
    """
    Return the symmetry group of the n-gon with vertices 1, 2, ..., n in order; it has order 2n for n >= 3.
    """
    rotation = pg.Perm([(i + 1) % n for i in range(n)])
    reflection = pg.Perm([(-i) % n for i in range(n)])
    return pg.PermGroup(n, [rotation, reflection])

def symmetric_group(n):
    gens = [pg.Perm([(i + 1) % n for i in range(n)])]
    if n > 2:
        gens.append(pg.Perm.from_cycles([[1, 2]], n))
    return pg.PermGroup(n, gens)

def alternating_group(n):
    """
    Return the alternating group on n points, generated by (1,2,3) and an n-cycle or (n-1)-cycle of even sign.
    """
    if n < 3:
        return pg.PermGroup(max(n, 1), [])
    gens = [pg.Perm.from_cycles([[1, 2, 3]], n)]
    if n % 2:
        gens.append(pg.Perm.from_cycles([list(range(1, n + 1))], n))
    else:
        gens.append(pg.Perm.from_cycles([list(range(2, n + 1))], n))
    return pg.PermGroup(n, gens)

def _check_prime(p):
    if not isprime(p):
        raise ValueError('{!s} is not a prime'.format(p))

def affine_line_group(p, multiplier):
    """
    Return the group of maps z -> a*z + b of F_p generated by z -> z + 1 and z -> multiplier*z, acting on points 1, ..., p (point z + 1 is the field element z).

    EXAMPLES:

    >>> affine_line_group(5, 2).order
    20
    """
    _check_prime(p)
    shift = pg.Perm([(z + 1) % p for z in range(p)])
    scale = pg.Perm([(multiplier*z) % p for z in range(p)])
    return pg.PermGroup(p, [shift, scale])

def _vectors(p, d):
    return list(it.product(range(p), repeat=d))

def _vector_index(v, p):
    result = 0
    for a in v:
        result = result*p + a
    return result

def _apply(v, A, p, translation=None):
    d = len(v)
    w = [sum(v[i]*A[i][j] for i in range(d)) % p for j in range(d)]
    if translation is not None:
        w = [(a + b) % p for a, b in zip(w, translation)]
    return w

def affine_element(p, d, matrix=None, translation=None):
    """
    Return the permutation v -> v*matrix + translation of the p^d vectors of F_p^d.
    """
    if matrix is None:
        matrix = [[int(i == j) for j in range(d)] for i in range(d)]
    return pg.Perm([_vector_index(_apply(v, matrix, p, translation), p)
      for v in _vectors(p, d)])

def affine_group(p, d, matrices=()):
    """
    Return the group generated by the translations of F_p^d and the maps v -> v*A for the given matrices ``A``, acting on p^d points.
    """
    _check_prime(p)
    gens = []
    for i in range(d):
        e = [int(i == j) for j in range(d)]
        gens.append(affine_element(p, d, translation=e))
    gens.extend(affine_element(p, d, matrix=A) for A in matrices)
    return pg.PermGroup(p**d, gens)

def linear_group(p, matrices):
    """
    Return the group generated by the invertible matrices over F_p acting by v -> v*A on the p^d - 1 nonzero row vectors.
    """
    _check_prime(p)
    d = len(matrices[0])
    vectors = _vectors(p, d)[1:]
    gens = [pg.Perm([_vector_index(_apply(v, A, p), p) - 1 for v in vectors])
      for A in matrices]
    return pg.PermGroup(p**d - 1, gens)

def _moebius(p, f):
    # Points 0, ..., p - 1 are the field elements and point p is infinity
    return pg.Perm([f(z) for z in range(p + 1)])

def psl2(p):
    """
    Return PSL(2, p) acting on the p + 1 points of the projective line over F_p, generated by z -> z + 1 and z -> -1/z.
    Point i + 1 is the field element i and point p + 1 is infinity.

    EXAMPLES:

    >>> psl2(7).order
    168
    """
    _check_prime(p)
    inf = p

    def shift(z):
        return inf if z == inf else (z + 1) % p

    def invert(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, p - 2, p)) % p

    return pg.PermGroup(p + 1, [_moebius(p, shift), _moebius(p, invert)])

def pgl2(p):
    """
    Return PGL(2, p) acting on the projective line over F_p: PSL(2, p) together with z -> a*z for a primitive root ``a``.
    """
    G = psl2(p)
    a = primitive_root(p)

    def scale(z):
        return z if z == p else (a*z) % p

    return pg.PermGroup(p + 1, list(G.generators) + [_moebius(p, scale)])

def regular_representation(G):
    """
    Return the image of ``G`` acting on its own elements by right multiplication; point i is the i-th element in sorted order.
    """
    index = {g: i for i, g in enumerate(G.elements)}
    gens = [pg.Perm([index[g*s] for g in G.elements], check=False)
      for s in G.generators]
    return pg.PermGroup(G.order, gens)


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _load_catalog(path=None):
    path = cs.CATALOG_PATH if path is None else path
    with open(str(path), encoding='utf-8') as f:
        return json.load(f)

def _subgroup_element(item, construction, degree):
    if isinstance(item, str):
        return pg.parse_perm(item, degree)
    if construction.get('kind') != 'affine':
        raise ParseError('Subgroup element {!r} needs an affine group'.format(
          item))
    p, d = construction['p'], construction['dimension']
    return affine_element(p, d, matrix=item.get('matrix'),
      translation=item.get('translation'))

def build_group(construction):
    """
    Return the permutation group described by a catalog construction dictionary.
    Raise a ``ParseError`` if the construction kind is unknown.
    """
    if 'label' in construction:
        return catalog_get(construction['label'])
    if 'generators' in construction and 'kind' not in construction:
        return pg.group_from_generators(construction['degree'],
          construction['generators'])
    kind = construction.get('kind')
    if kind == 'cyclic':
        G = cyclic_group(construction['n'])
    elif kind == 'dihedral':
        G = dihedral_group(construction['n'])
    elif kind == 'symmetric':
        G = symmetric_group(construction['n'])
    elif kind == 'alternating':
        G = alternating_group(construction['n'])
    elif kind == 'affine_line':
        G = affine_line_group(construction['p'], construction['multiplier'])
    elif kind == 'affine':
        G = affine_group(construction['p'], construction['dimension'],
          construction.get('matrices', []))
    elif kind == 'linear':
        G = linear_group(construction['p'], construction['matrices'])
    elif kind == 'psl2':
        G = psl2(construction['p'])
    elif kind == 'pgl2':
        G = pgl2(construction['p'])
    elif kind == 'regular':
        G = regular_representation(build_group(construction['group']))
    elif kind == 'derived':
        G = pg.derived_subgroup(build_group(construction['group']))
    elif kind == 'coset':
        inner = construction['group']
        big = build_group(inner)
        H = pg.generated_subgroup(big, [_subgroup_element(x, inner, big.degree)
          for x in construction['subgroup']])
        G, __ = pg.coset_action(big, H)
    else:
        raise ParseError('Unknown construction kind {!r}'.format(kind))
    return G

def check_catalog_label(label, labels):
    """
    Raise an ``UnknownLabelError`` listing the nearest known labels if ``label`` is not among ``labels``.
    Otherwise, return nothing.
    """
    if label not in labels:
        near = difflib.get_close_matches(str(label), list(labels), n=5,
          cutoff=0.5)
        msg = 'Unknown group label {!r}'.format(label)
        if near:
            msg += '; nearest labels: {!s}'.format(', '.join(near))
        raise UnknownLabelError(msg)

@lru_cache(maxsize=None)
def catalog_entry(label):
    """
    Build, check and return the ``CatalogEntry`` of the given label.
    Raise an ``UnknownLabelError`` if the label is not in the catalog and a ``ValueError`` if the built group has the wrong order or is not transitive.
    """
    label = str(label).strip()
    groups = _load_catalog()['groups']
    check_catalog_label(label, groups)
    data = groups[label]
    construction = data.get('construction', data)
    G = build_group(construction)
    G = pg.PermGroup(G.degree, G.generators, elements=G.element_set)
    if G.order != data['order']:
        raise ValueError('Catalog group {!s} has order {!s}, expected {!s}'\
          .format(label, G.order, data['order']))
    if not pg.is_transitive(G):
        raise ValueError('Catalog group {!s} is not transitive'.format(label))
    n, __ = parse_label(label)
    if G.degree != n:
        raise ValueError('Catalog group {!s} has degree {!s}'.format(label,
          G.degree))
    logger.debug('Built catalog group %s of order %s', label, G.order)
    return CatalogEntry(label, G, data['provenance'])

def catalog_get(label):
    """
    Return the permutation group with the given catalog label, e.g. '8T31'.
    Raise an ``UnknownLabelError`` listing the nearest labels if the label is unknown.

    EXAMPLES:

    >>> catalog_get('14T30').order
    1092
    """
    return catalog_entry(label).group

def catalog_labels(degree=None):
    """
    Return the catalog labels, optionally only those of the given degree, ordered by degree and then index.
    """
    labels = sorted(_load_catalog()['groups'], key=parse_label)
    if degree is not None:
        labels = [x for x in labels if parse_label(x)[0] == degree]
    return labels

def make_cover(base, degree, generators, epi_images):
    """
    Return the ``GroupHom`` from the permutation group generated by ``generators`` (cycle strings of the given degree) onto the group ``base`` sending the i-th generator to the i-th element of ``epi_images``.
    Raise a ``ValueError`` if this is not a surjective homomorphism.
    """
    gens = [pg.parse_perm(g, degree) for g in generators]
    cover = pg.PermGroup(degree, gens)
    hom = pg.GroupHom(cover, base, epi_images, generators=gens)
    if not hom.is_surjective():
        raise ValueError('Cover map is not onto the base group')
    return hom

def cover_labels():
    return sorted(_load_catalog()['covers'], key=parse_label)

@lru_cache(maxsize=None)
def catalog_cover(label):
    """
    Return the recorded cover of the catalog group with the given label as a ``GroupHom`` onto ``catalog_get(label)``.
    Raise an ``UnknownLabelError`` if no cover is recorded for the label.

    EXAMPLES:

    >>> catalog_cover('4T2').source.order
    8
    """
    label = str(label).strip()
    covers = _load_catalog()['covers']
    check_catalog_label(label, covers)
    data = covers[label]
    return make_cover(catalog_get(label), data['degree'], data['generators'],
      data['epi_images'])
