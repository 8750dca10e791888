"""
Finite permutation groups by full element enumeration: cosets, double cosets, homomorphisms, subgroup lattices and abelianizations.

CONVENTIONS:
    - A product ``p*q`` of permutations means 'first apply ``p``, then ``q``'
    - The commutator of ``g`` and ``h`` is g^-1 h^-1 g h and conjugation is x^-1 g x
    - Cosets are right cosets ``H*g``; they are ordered by their least element, so the coset ``H`` comes first
    - Permutations are totally ordered by their image tuples; every choice of representative below takes the least element
"""
import logging
import functools
import re
from collections import deque

from sympy import primefactors

import tori.constants as cs
import tori.intlat as il
from tori.utilities import ParseError, check_budget, time_it


logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------
@functools.total_ordering
class Perm(object):
    """
    A permutation of {0, 1, ..., degree - 1} stored as the tuple of images.
    Printed and parsed in 1-based cycle notation, e.g. '(1,8)(2,3)'.
    """
    __slots__ = ('images', '_hash')

    def __init__(self, images, check=True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError('{!s} is not a permutation'.format(images))
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles, degree):
        """
        Build a permutation of the given degree from an iterable of cycles of 1-based points.
        """
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= degree:
                    raise ParseError('Point {!s} is out of range [1..{!s}]'\
                      .format(a, degree))
                if a in seen:
                    raise ParseError('Point {!s} occurs twice'.format(a))
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls(images, check=False)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        return Perm(map(other.images.__getitem__, self.images), check=False)

    def inverse(self):
        images = [0]*len(self.images)
        for i, a in enumerate(self.images):
            images[a] = i
        return Perm(images, check=False)

    __invert__ = inverse

    def __pow__(self, k):
        if k < 0:
            return self.inverse()**(-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result*base
            base = base*base
            k >>= 1
        return result

    def is_identity(self):
        return all(i == a for i, a in enumerate(self.images))

    def order(self):
        result = 1
        for cycle in self.cycles():
            n = len(cycle)
            a, b = result, n
            while b:
                a, b = b, a % b
            result = result*n//a
        return result

    def cycles(self):
        """
        Return the nontrivial cycles as tuples of 1-based points, each starting at its least point.
        """
        result = []
        seen = set()
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = []
            j = i
            while j not in seen:
                seen.add(j)
                cycle.append(j + 1)
                j = self.images[j]
            result.append(tuple(cycle))
        return result

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ','.join(map(str, c)) + ')' for c in cycles)

    def __repr__(self):
        return 'Perm({!s})'.format(self)

CYCLE_PATTERN = re.compile(r'(\((\d+(,\d+)*)?\))+')

def parse_perm(string, degree):
    """
    Parse a permutation of the given degree written in 1-based cycle notation, e.g. '(1,8)(2,3)(4,5)(6,7)' or '()'.
    Whitespace is ignored.
    Raise a ``ParseError`` on malformed input.

    EXAMPLES:

    >>> str(parse_perm(' (1, 2)(3,4) ', 4))
    '(1,2)(3,4)'
    """
    s = re.sub(r'\s+', '', str(string))
    if not CYCLE_PATTERN.fullmatch(s):
        raise ParseError('{!r} is not a permutation in cycle notation'.format(
          string))
    cycles = []
    for body in re.findall(r'\(([^()]*)\)', s):
        if body:
            cycles.append([int(a) for a in body.split(',')])
    return Perm.from_cycles(cycles, degree)

def commutator(g, h):
    """
    Return the commutator g^-1 h^-1 g h.
    """
    return g.inverse()*h.inverse()*g*h

def conjugate_element(g, x):
    """
    Return x^-1 g x.
    """
    return x.inverse()*g*x


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------
def _closure(degree, generators, seed=None, max_order=cs.MAX_GROUP_ORDER):
    identity = Perm.identity(degree)
    elements = set(seed) if seed else {identity}
    elements.add(identity)
    queue = deque(elements)
    while queue:
        g = queue.popleft()
        for s in generators:
            h = g*s
            if h not in elements:
                elements.add(h)
                check_budget('MAX_GROUP_ORDER', len(elements), max_order)
                queue.append(h)
    return elements

class PermGroup(object):
    """
    A permutation group of a given degree, given by generators, whose element set is materialized on first use.
    Two groups are equal when they have the same degree and the same element set.
    """
    def __init__(self, degree, generators=(), elements=None,
      max_order=cs.MAX_GROUP_ORDER):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError('Generator {!s} has degree {!s}, not {!s}'\
                  .format(g, g.degree, degree))
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self.max_order = max_order
        self._element_set = frozenset(elements) if elements is not None\
          else None
        self._elements = None

    @property
    def element_set(self):
        if self._element_set is None:
            elts = _closure(self.degree, self.generators,
              max_order=self.max_order)
            if len(elts) > 1000:
                logger.info('Materialized group of degree %s and order %s',
                  self.degree, len(elts))
            self._element_set = frozenset(elts)
        return self._element_set

    @property
    def elements(self):
        """
        Sorted list of the elements; the identity comes first.
        """
        if self._elements is None:
            self._elements = sorted(self.element_set)
        return self._elements

    @property
    def order(self):
        return len(self.element_set)

    @property
    def identity(self):
        return Perm.identity(self.degree)

    def __contains__(self, g):
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree\
          and self.element_set == other.element_set

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def is_subgroup_of(self, other):
        return self.degree == other.degree and\
          self.element_set <= other.element_set

    def sort_key(self):
        return (self.order, tuple(g.images for g in self.elements))

    def __repr__(self):
        gens = ', '.join(map(str, self.generators)) or '()'
        return 'PermGroup(degree={!s}, order={!s}, generators=[{!s}])'\
          .format(self.degree, self.order, gens)

def group_from_generators(degree, gens, max_order=cs.MAX_GROUP_ORDER):
    """
    Return the permutation group of the given degree generated by ``gens``, a list of ``Perm`` objects or cycle strings.
    Raise a ``ParseError`` on malformed cycle strings and a ``BudgetError`` if the group is larger than ``max_order``.

    EXAMPLES:

    >>> group_from_generators(4, ['(1,2)(3,4)', '(1,4)(2,3)']).order
    4
    """
    if degree < 1:
        raise ParseError('Degree must be positive, not {!s}'.format(degree))
    perms = [g if isinstance(g, Perm) else parse_perm(g, degree) for g in gens]
    G = PermGroup(degree, perms, max_order=max_order)
    G.element_set
    return G

def subgroup_from_elements(G, elements):
    """
    Return the subgroup of ``G`` whose element set is given; used for sets already known to be closed.
    """
    elements = frozenset(elements)
    gens = _small_generating_set(G.degree, elements)
    return PermGroup(G.degree, gens, elements=elements)

def _small_generating_set(degree, elements):
    gens = []
    span = {Perm.identity(degree)}
    for g in sorted(elements):
        if g not in span:
            gens.append(g)
            span = _closure(degree, gens, seed=span)
            if len(span) == len(elements):
                break
    return gens

def generated_subgroup(G, elts):
    """
    Return the subgroup of ``G`` generated by the given elements (``Perm`` objects or cycle strings).
    Raise a ``ValueError`` if some element does not lie in ``G``.
    """
    perms = [g if isinstance(g, Perm) else parse_perm(g, G.degree) for g in elts]
    for g in perms:
        if g not in G:
            raise ValueError('{!s} is not an element of the group'.format(g))
    return PermGroup(G.degree, perms)

def trivial_subgroup(G):
    return PermGroup(G.degree, [], elements=[G.identity])

def check_subgroup(H, G):
    """
    Raise a ``ValueError`` if ``H`` is not a subgroup of ``G``.
    Otherwise, return nothing.
    """
    if not H.is_subgroup_of(G):
        raise ValueError('{!r} is not a subgroup of {!r}'.format(H, G))

def is_abelian(G):
    gens = G.generators
    return all(a*b == b*a for i, a in enumerate(gens) for b in gens[i + 1:])

def is_cyclic(G):
    n = G.order
    return any(g.order() == n for g in G.elements)

def intersection(H, K):
    return subgroup_from_elements(H, H.element_set & K.element_set)

def join(H, K):
    return PermGroup(H.degree, H.generators + K.generators)

def conjugate_subgroup(H, x):
    """
    Return the subgroup x^-1 H x.
    """
    xi = x.inverse()
    return PermGroup(H.degree, [xi*h*x for h in H.generators],
      elements=[xi*h*x for h in H.element_set])


# ---------------------------------------------------------------------------
# Orbits, stabilizers, cosets
# ---------------------------------------------------------------------------
def orbit(G, point):
    """
    Return the sorted orbit of the 1-based ``point`` under ``G`` as a list of 1-based points.
    """
    p = point - 1
    seen = {p}
    queue = deque([p])
    while queue:
        a = queue.popleft()
        for s in G.generators:
            b = s(a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return sorted(a + 1 for a in seen)

def orbits(G):
    result = []
    seen = set()
    for p in range(1, G.degree + 1):
        if p not in seen:
            o = orbit(G, p)
            seen.update(o)
            result.append(o)
    return result

def is_transitive(G):
    return len(orbit(G, 1)) == G.degree

def stabilizer(G, point):
    """
    Return the subgroup of ``G`` fixing the 1-based ``point``.
    Raise a ``ValueError`` if the point is out of range.

    EXAMPLES:

    >>> G = group_from_generators(3, ['(1,2,3)', '(1,2)'])
    >>> stabilizer(G, 1).order
    2
    """
    if not 1 <= point <= G.degree:
        raise ValueError('Point {!s} is out of range [1..{!s}]'.format(
          point, G.degree))
    p = point - 1
    return subgroup_from_elements(G, [g for g in G.element_set if g(p) == p])

def right_cosets(G, H):
    """
    Return the right cosets ``H*g`` of ``H`` in ``G`` as sorted lists of elements, ordered by least element.
    Raise a ``ValueError`` if ``H`` is not a subgroup of ``G``.
    """
    check_subgroup(H, G)
    seen = set()
    result = []
    for g in G.elements:
        if g in seen:
            continue
        coset = sorted(h*g for h in H.element_set)
        seen.update(coset)
        result.append(coset)
    return result

def right_transversal(G, H):
    """
    Return the least element of each right coset of ``H`` in ``G``, in coset order; the identity comes first.
    """
    return [c[0] for c in right_cosets(G, H)]

def coset_action(G, H):
    """
    Return the pair ``(image, hom)`` where ``image`` is the permutation group of degree [G:H] induced by the action of ``G`` on the right cosets of ``H`` (point 1 is the coset ``H``) and ``hom`` is the ``GroupHom`` from ``G`` onto ``image``.
    The kernel of ``hom`` is the core of ``H``.
    """
    cosets = right_cosets(G, H)
    index = {}
    for i, c in enumerate(cosets):
        for g in c:
            index[g] = i
    n = len(cosets)
    images = [Perm([index[c[0]*s] for c in cosets], check=False)
      for s in G.generators]
    image = PermGroup(n, images)
    return image, GroupHom(G, image, images)

def double_cosets(G, H, K):
    """
    Return the least elements ``x`` of the double cosets ``H*x*K`` partitioning ``G``, in increasing order.
    """
    check_subgroup(H, G)
    check_subgroup(K, G)
    seen = set()
    result = []
    for g in G.elements:
        if g in seen:
            continue
        result.append(g)
        seen.update(h*g*k for h in H.element_set for k in K.element_set)
    return result

def double_coset(H, x, K):
    return frozenset(h*x*k for h in H.element_set for k in K.element_set)


# ---------------------------------------------------------------------------
# Characteristic subgroups
# ---------------------------------------------------------------------------
def normal_closure(G, elts):
    """
    Return the smallest normal subgroup of ``G`` containing the given elements.
    """
    gens = [g for g in elts if not g.is_identity()]
    elements = _closure(G.degree, gens)
    queue = deque(gens)
    conjugators = [(x.inverse(), x) for x in G.generators]
    while queue:
        g = queue.popleft()
        for xi, x in conjugators:
            c = xi*g*x
            if c not in elements:
                gens.append(c)
                elements = _closure(G.degree, gens, seed=elements)
                queue.append(c)
    return PermGroup(G.degree, gens, elements=elements)

def derived_subgroup(G):
    """
    Return the commutator subgroup [G, G], the normal closure of the commutators of pairs of generators.
    """
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)

def center(G):
    gens = G.generators
    return subgroup_from_elements(G, [z for z in G.element_set
      if all(z*s == s*z for s in gens)])

def normalizer(G, H):
    hgens = H.generators
    return subgroup_from_elements(G, [x for x in G.element_set
      if all(conjugate_element(h, x) in H for h in hgens)])

def is_normal(G, H):
    return all(conjugate_element(h, x) in H for h in H.generators
      for x in G.generators)

def sylow(G, p):
    """
    Return a Sylow ``p``-subgroup of ``G``, grown one factor ``p`` at a time inside successive normalizers.
    """
    target = 1
    n = G.order
    while n % p == 0:
        n //= p
        target *= p
    P = trivial_subgroup(G)
    while P.order < target:
        N = normalizer(G, P)
        for x in N.elements:
            if x not in P and x**p in P:
                P = PermGroup(G.degree, P.generators + (x,))
                break
        else:
            raise RuntimeError('No element of order {!s} modulo the '
              'p-subgroup'.format(p))
    return P

def is_metacyclic(G):
    """
    Return ``True`` if every Sylow subgroup of ``G`` is cyclic, and ``False`` otherwise.
    The trivial group counts as metacyclic.
    """
    if G.order == 1:
        return True
    return all(is_cyclic(sylow(G, p)) for p in primefactors(G.order))


# ---------------------------------------------------------------------------
# Subgroup lattices
# ---------------------------------------------------------------------------
def cyclic_subgroups(G):
    """
    Return the cyclic subgroups of ``G``, sorted.
    """
    found = {}
    for g in G.elements:
        powers = frozenset(_closure(G.degree, [g]))
        if powers not in found:
            found[powers] = PermGroup(G.degree, [g], elements=powers)
    return sorted(found.values(), key=PermGroup.sort_key)

@time_it
def all_subgroups(G, order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return all subgroups of ``G`` sorted by order and then by their sorted element lists.
    Every subgroup is a join of cyclic subgroups, so start from the cyclic subgroups and join with cyclic subgroups until nothing new appears.
    Raise a ``BudgetError`` if the order of ``G`` exceeds ``order_bound``.
    """
    check_budget('SUBGROUP_ORDER_BOUND', G.order, order_bound)
    cyclics = cyclic_subgroups(G)
    found = {C.element_set: C for C in cyclics}
    frontier = list(cyclics)
    while frontier:
        new = []
        for S in frontier:
            for C in cyclics:
                c = C.generators[0] if C.generators else None
                if c is None or c in S:
                    continue
                elements = frozenset(_closure(G.degree, S.generators + (c,),
                  seed=S.element_set))
                if elements not in found:
                    J = PermGroup(G.degree, S.generators + (c,),
                      elements=elements)
                    found[elements] = J
                    new.append(J)
        frontier = new
    logger.info('Found %s subgroups of a group of order %s', len(found),
      G.order)
    return sorted(found.values(), key=PermGroup.sort_key)

def subgroup_classes(G, subgroups=None, order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Partition the given subgroups of ``G`` (default all of them, enumerated under ``order_bound``) into ``G``-conjugacy classes.
    Return a list of classes, each a list of subgroups in sorted order; classes are ordered by their first member.
    """
    if subgroups is None:
        subgroups = all_subgroups(G, order_bound)
    subgroups = sorted(subgroups, key=PermGroup.sort_key)
    by_elements = {S.element_set: S for S in subgroups}
    assigned = set()
    result = []
    for S in subgroups:
        if S.element_set in assigned:
            continue
        members = set()
        for x in G.elements:
            xi = x.inverse()
            members.add(frozenset(xi*s*x for s in S.element_set))
        assigned.update(members)
        cls = [by_elements[m] if m in by_elements
          else PermGroup(G.degree, [], elements=m) for m in members]
        result.append(sorted(cls, key=PermGroup.sort_key))
    return result

def subgroup_class_reps(G, subgroups=None,
  order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return one subgroup per conjugacy class of subgroups of ``G``: the first of each class in sorted order.
    Raise a ``BudgetError`` if all subgroups are needed and the order of ``G`` exceeds ``order_bound``.
    """
    return [cls[0] for cls in subgroup_classes(G, subgroups, order_bound)]


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------
class GroupHom(object):
    """
    A homomorphism of permutation groups determined by the images of the source generators.
    The full element map is built by a breadth-first walk of the source's Cayley graph; the construction fails with a ``ValueError`` when two walks to the same element disagree, that is, when the images do not define a homomorphism.
    """
    def __init__(self, source, target, images, generators=None):
        images = [g if isinstance(g, Perm) else parse_perm(g, target.degree)
          for g in images]
        gens = list(source.generators if generators is None else generators)
        if len(images) != len(gens):
            raise ValueError('Got {!s} generator images for {!s} generators'\
              .format(len(images), len(gens)))
        for t in images:
            if t not in target:
                raise ValueError('{!s} is not in the target group'.format(t))
        self.source = source
        self.target = target
        self.generators = gens
        self.images = images
        mapping = {source.identity: target.identity}
        queue = deque([source.identity])
        while queue:
            g = queue.popleft()
            for s, t in zip(gens, images):
                gs = g*s
                img = mapping[g]*t
                old = mapping.get(gs)
                if old is None:
                    mapping[gs] = img
                    queue.append(gs)
                elif old != img:
                    raise ValueError('Generator images do not define a '
                      'homomorphism')
        if len(mapping) != source.order:
            raise ValueError('Generators do not generate the source group')
        self.mapping = mapping

    def __call__(self, g):
        return self.mapping[g]

    def image(self, S=None):
        """
        Return the image of the subgroup ``S`` of the source (default the whole source).
        """
        if S is None:
            S = self.source
        return PermGroup(self.target.degree,
          [self.mapping[s] for s in S.generators],
          elements={self.mapping[s] for s in S.element_set})

    def preimage(self, S):
        """
        Return the preimage of the subgroup ``S`` of the target.
        """
        return subgroup_from_elements(self.source,
          [g for g, t in self.mapping.items() if t in S])

    def kernel(self):
        e = self.target.identity
        return subgroup_from_elements(self.source,
          [g for g, t in self.mapping.items() if t == e])

    def is_surjective(self):
        return self.image().order == self.target.order

def hom_image(h, S):
    return h.image(S)

def hom_preimage(h, S):
    return h.preimage(S)

def hom_kernel(h):
    return h.kernel()


# ---------------------------------------------------------------------------
# Abelianization
# ---------------------------------------------------------------------------
class FiniteAbelianStructure(object):
    """
    The abelianization G/[G,G] of a permutation group in Smith coordinates.

    Attributes:

    - ``group``: the group G
    - ``invariants``: invariant factors of G/[G,G]
    - ``generators``: elements of G lifting the Smith generators
    - ``derived``: the subgroup [G,G]

    Call :meth:`coords` to get the exponent vector of an element; it is computed from a table over the cosets of [G,G].
    """
    def __init__(self, group):
        self.group = group
        self.derived = derived_subgroup(group)
        gens = group.generators
        k = len(gens)
        cosets = right_cosets(group, self.derived)
        self._coset_of = {}
        for i, c in enumerate(cosets):
            for g in c:
                self._coset_of[g] = i
        # Exponent vectors along a spanning tree of the quotient's Cayley graph
        vectors = {0: [0]*k}
        reps = {0: group.identity}
        relations = []
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j, s in enumerate(gens):
                target = self._coset_of[reps[i]*s]
                v = list(vectors[i])
                v[j] += 1
                if target in vectors:
                    rel = [a - b for a, b in zip(v, vectors[target])]
                    if any(rel):
                        relations.append(rel)
                else:
                    vectors[target] = v
                    reps[target] = reps[i]*s
                    queue.append(target)
        self._quotient = il.AbelianQuotient(k, relations)
        self.invariants = self._quotient.invariants
        self._coords = [self._quotient.coords(vectors[i])
          for i in range(len(cosets))]
        self.generators = [self._word(w, gens)
          for w in self._quotient.generators()]

    def _word(self, exponents, gens):
        result = self.group.identity
        for e, s in zip(exponents, gens):
            result = result*s**e
        return result

    @property
    def order(self):
        result = 1
        for d in self.invariants:
            result *= d
        return result

    def coords(self, g):
        """
        Return the exponent vector of the class of ``g`` with respect to the Smith generators.
        """
        return list(self._coords[self._coset_of[g]])

def abelianization(G):
    """
    Return the ``FiniteAbelianStructure`` of ``G``.

    EXAMPLES:

    >>> G = group_from_generators(4, ['(1,2,3)', '(2,3,4)'])
    >>> abelianization(G).invariants
    [3]
    """
    return FiniteAbelianStructure(G)

def describe_group(G):
    """
    Return a short description of ``G``: its invariants if it is abelian, e.g. 'C2 x C2', and its order and abelianization otherwise.
    """
    ab = abelianization(G)
    if G.order == 1:
        return '1'
    if ab.order == G.order:
        return ' x '.join('C{!s}'.format(d) for d in ab.invariants)
    return 'order {!s} with abelianization {!s}'.format(G.order,
      ' x '.join('C{!s}'.format(d) for d in ab.invariants) or '1')
