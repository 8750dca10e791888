"""
Exact integer linear algebra: Hermite and Smith normal forms, integer kernels, lattice intersections and finite abelian quotients.

CONVENTIONS:
    - A matrix is a list of rows, each row a list of Python integers; arithmetic is exact
    - Lattices are row lattices: a basis is a matrix whose rows span the lattice
    - Functions that accept matrices with possibly zero rows take an explicit ``ncols``
    - Row Hermite normal form: echelon form with positive pivots and the entries above each pivot reduced into [0, pivot); zero rows are dropped
"""
import logging
from fractions import Fraction
from math import gcd

import tori.constants as cs


logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Basic matrix helpers
# ---------------------------------------------------------------------------
def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]

def diagonal(entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]

def num_cols(A, ncols=None):
    if ncols is not None:
        return ncols
    return len(A[0]) if A else 0

def transpose(A, ncols=None):
    n = num_cols(A, ncols)
    return [[row[j] for row in A] for j in range(n)]

def mat_mul(A, B, ncols=None):
    """
    Return the product ``A*B``; ``ncols`` is the number of columns of ``B``, needed only when ``B`` has no rows.
    """
    n = num_cols(B, ncols)
    Bt = transpose(B, n)
    return [[sum(a*b for a, b in zip(row, col) if a) for col in Bt]
      for row in A]

def vec_mat(v, A, ncols=None):
    """
    Return the row vector ``v*A``.
    """
    n = num_cols(A, ncols)
    result = [0]*n
    for a, row in zip(v, A):
        if a:
            for j, b in enumerate(row):
                if b:
                    result[j] += a*b
    return result

def mat_add(A, B):
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]

def block_diagonal(blocks):
    """
    Return the block diagonal matrix with the given square blocks.
    """
    n = sum(len(B) for B in blocks)
    result = [[0]*n for __ in range(n)]
    offset = 0
    for B in blocks:
        k = len(B)
        for i in range(k):
            result[offset + i][offset:offset + k] = B[i]
        offset += k
    return result

def xgcd(a, b):
    """
    Return a triple ``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``s*a + t*b = g``.
    """
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q*b
        s0, s1 = s1, s0 - q*s1
        t0, t1 = t1, t0 - q*t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0

def _to_sparse(row):
    return {j: a for j, a in enumerate(row) if a}

def _to_dense(row, ncols):
    result = [0]*ncols
    for j, a in row.items():
        result[j] = a
    return result

def _sparse_axpy(x, y, q):
    """
    Return the sparse row ``x + q*y``.
    """
    result = dict(x)
    for j, b in y.items():
        a = result.get(j, 0) + q*b
        if a:
            result[j] = a
        else:
            result.pop(j, None)
    return result

def _sparse_combination(x, s, y, t):
    """
    Return the sparse row ``s*x + t*y``.
    """
    result = {}
    if s:
        for j, a in x.items():
            result[j] = s*a
    if t:
        for j, b in y.items():
            a = result.get(j, 0) + t*b
            if a:
                result[j] = a
            else:
                result.pop(j, None)
    return {j: a for j, a in result.items() if a}


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------
def _hnf_dense(rows, ncols, transform=False):
    A = [list(r) for r in rows]
    m = len(A)
    U = identity(m) if transform else None
    r = 0
    for j in range(ncols):
        if r == m:
            break
        found = False
        while True:
            piv = None
            for i in range(r, m):
                a = A[i][j]
                if a and (piv is None or abs(a) < abs(A[piv][j])):
                    piv = i
            if piv is None:
                break
            found = True
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
                if transform:
                    U[r], U[piv] = U[piv], U[r]
            p = A[r][j]
            done = True
            for i in range(r + 1, m):
                a = A[i][j]
                if a:
                    q = a // p
                    A[i] = [x - q*y for x, y in zip(A[i], A[r])]
                    if transform:
                        U[i] = [x - q*y for x, y in zip(U[i], U[r])]
                    if A[i][j]:
                        done = False
            if done:
                break
        if not found:
            continue
        if A[r][j] < 0:
            A[r] = [-x for x in A[r]]
            if transform:
                U[r] = [-x for x in U[r]]
        p = A[r][j]
        for i in range(r):
            q = A[i][j] // p
            if q:
                A[i] = [x - q*y for x, y in zip(A[i], A[r])]
                if transform:
                    U[i] = [x - q*y for x, y in zip(U[i], U[r])]
        r += 1
    if transform:
        return A[:r], U[:r]
    return A[:r]

def hnf_sparse(rows):
    """
    Compute the row Hermite normal form of a matrix given as an iterable of sparse rows (dictionaries column -> nonzero entry) by inserting rows one at a time into an echelon basis.
    Return the pair ``(pivot_columns, H)`` where ``H`` is the list of sparse rows of the Hermite normal form.
    Produces the same canonical form as the dense path.
    """
    pivots = {}
    for row in rows:
        v = {j: a for j, a in row.items() if a}
        while v:
            c = min(v)
            a = v[c]
            P = pivots.get(c)
            if P is None:
                if a < 0:
                    v = {j: -x for j, x in v.items()}
                pivots[c] = v
                break
            p = P[c]
            if a % p == 0:
                v = _sparse_axpy(v, P, -(a // p))
            else:
                g, s, t = xgcd(p, a)
                pivots[c] = _sparse_combination(P, s, v, t)
                v = _sparse_combination(P, a // g, v, -(p // g))
    cols = sorted(pivots)
    H = [pivots[c] for c in cols]
    for k, c in enumerate(cols):
        p = H[k][c]
        for i in range(k):
            q = H[i].get(c, 0) // p
            if q:
                H[i] = _sparse_axpy(H[i], H[k], -q)
    return cols, H

def hnf(rows, ncols=None, transform=False):
    """
    Return the row Hermite normal form ``H`` of the given matrix.
    If ``transform``, then return the pair ``(H, U)`` where ``U*rows = H``; the rows of ``U`` extend to a unimodular matrix.

    INPUT:
        - ``rows``: list of integer rows
        - ``ncols``: number of columns; needed only if ``rows`` is empty
        - ``transform``: boolean

    NOTES:
        Large matrices without a requested transform go through :func:`hnf_sparse`.

    EXAMPLES:

    >>> hnf([[2, 0], [0, 2], [1, 1]])
    [[1, 1], [0, 2]]
    >>> hnf([[0, 0]])
    []
    """
    n = num_cols(rows, ncols)
    if transform:
        return _hnf_dense(rows, n, transform=True)
    if len(rows)*n >= cs.SPARSE_THRESHOLD:
        __, H = hnf_sparse(_to_sparse(r) for r in rows)
        return [_to_dense(h, n) for h in H]
    return _hnf_dense(rows, n)

def pivot_columns(H):
    """
    Return the pivot column of each row of a matrix in echelon form.
    """
    result = []
    for row in H:
        for j, a in enumerate(row):
            if a:
                result.append(j)
                break
    return result


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------
class SnfDecomposition(object):
    """
    Smith normal form ``S = U*A*V`` of an integer matrix ``A`` together with ``Vinv``, the inverse of ``V``.
    """
    __slots__ = ('S', 'U', 'V', 'Vinv')

    def __init__(self, S, U, V, Vinv):
        self.S = S
        self.U = U
        self.V = V
        self.Vinv = Vinv

    def diagonal(self):
        k = min(len(self.S), len(self.V))
        return [self.S[i][i] for i in range(k)]

    def __repr__(self):
        return 'SnfDecomposition(diagonal={!r})'.format(self.diagonal())

def snf(A, ncols=None):
    """
    Compute the Smith normal form of the integer matrix ``A`` with transformation witnesses.
    Return an ``SnfDecomposition`` with ``U*A*V = S``, where ``U`` and ``V`` are unimodular and the diagonal entries of ``S`` are nonnegative, satisfy d_1 | d_2 | ..., and have zeros trailing.

    NOTES:
        Each round chooses a pivot of minimal absolute value.

    EXAMPLES:

    >>> snf([[2, 0], [0, 3]]).diagonal()
    [1, 6]
    """
    m = len(A)
    n = num_cols(A, ncols)
    S = [list(r) for r in A]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in S:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]
        Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    def add_row(i, k, q):
        # row_i += q*row_k
        S[i] = [x + q*y for x, y in zip(S[i], S[k])]
        U[i] = [x + q*y for x, y in zip(U[i], U[k])]

    def add_col(j, k, q):
        # col_j += q*col_k
        for row in S:
            if row[k]:
                row[j] += q*row[k]
        for row in V:
            if row[k]:
                row[j] += q*row[k]
        Vinv[k] = [x - q*y for x, y in zip(Vinv[k], Vinv[j])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        __, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = S[t][t]
            for i in range(t + 1, m):
                a = S[i][t]
                if a:
                    add_row(i, t, -(a // p))
            for j in range(t + 1, n):
                a = S[t][j]
                if a:
                    add_col(j, t, -(a // p))
            # Remainders left in row or column t give a smaller pivot
            best = None
            for i in range(t + 1, m):
                a = S[i][t]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, 'row')
            for j in range(t + 1, n):
                a = S[t][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), j, 'col')
            if best is not None:
                if best[2] == 'row':
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SnfDecomposition(S, U, V, Vinv)

def elementary_divisors(A, ncols=None):
    """
    Return the nonzero diagonal entries of the Smith normal form of ``A``, ones included.

    NOTES:
        Large matrices are first compressed by two Hermite normal forms (of the rows, then of the columns of the result), which leaves a square nonsingular matrix with the same elementary divisors.
    """
    n = num_cols(A, ncols)
    if len(A)*n < cs.SPARSE_THRESHOLD:
        return [d for d in snf(A, n).diagonal() if d]
    __, H = hnf_sparse(_to_sparse(r) for r in A)
    return _elementary_divisors_of_sparse_hnf(H)

def _elementary_divisors_of_sparse_hnf(H):
    rho = len(H)
    if not rho:
        return []
    columns = {}
    for i, row in enumerate(H):
        for j, a in row.items():
            columns.setdefault(j, {})[i] = a
    __, B = hnf_sparse(columns[j] for j in sorted(columns))
    B = [_to_dense(b, rho) for b in B]
    return [d for d in snf(B, rho).diagonal() if d]

def is_unimodular(A):
    n = len(A)
    if any(len(row) != n for row in A):
        return False
    return elementary_divisors(A, n) == [1]*n

def inverse_unimodular(A):
    """
    Return the inverse of the unimodular matrix ``A``; raise a ``ValueError`` if ``A`` is not unimodular.
    """
    n = len(A)
    dec = snf(A, n)
    if dec.diagonal() != [1]*n:
        raise ValueError('Matrix is not unimodular')
    return mat_mul(dec.V, dec.U, n)


# ---------------------------------------------------------------------------
# Kernels, coordinates and intersections
# ---------------------------------------------------------------------------
def right_kernel(rows, ncols):
    """
    Return the canonical saturated basis of the lattice ``{x : rows*x = 0}`` in ZZ^``ncols``.
    """
    H = hnf(rows, ncols)
    piv = pivot_columns(H)
    if all(H[i][c] == 1 for i, c in enumerate(piv)):
        # Reduced echelon with unit pivots: free coordinates parametrize
        pivot_set = set(piv)
        basis = []
        for f in range(ncols):
            if f in pivot_set:
                continue
            x = [0]*ncols
            x[f] = 1
            for i, c in enumerate(piv):
                if H[i][f]:
                    x[c] = -H[i][f]
            basis.append(x)
        return hnf(basis, ncols)
    # Integral pivots: augment by the identity and read off the transform
    Ht = transpose(H, ncols)
    rho = len(H)
    augmented = [row + [int(i == j) for j in range(ncols)]
      for i, row in enumerate(Ht)]
    A = _hnf_dense(augmented, rho + ncols)
    basis = [row[rho:] for row in A if not any(row[:rho])]
    return hnf(basis, ncols)

def integer_kernel(A, ncols=None):
    """
    Return the canonical saturated basis of the row kernel ``{x : x*A = 0}`` of the integer matrix ``A``.

    EXAMPLES:

    >>> integer_kernel([[1], [1]])
    [[1, -1]]
    >>> integer_kernel([[1, 0], [0, 1]])
    []
    """
    n = num_cols(A, ncols)
    return right_kernel(transpose(A, n), len(A))

class LatticeBasis(object):
    """
    A lattice given by linearly independent rows ``basis``, prepared for repeated coordinate computations.
    Raise a ``ValueError`` if the rows are dependent.
    """
    def __init__(self, basis, ncols=None):
        self.basis = [list(b) for b in basis]
        self.ncols = num_cols(basis, ncols)
        self.rank = len(self.basis)
        if self.basis:
            self.H, self.U = hnf(self.basis, self.ncols, transform=True)
            if len(self.H) != self.rank:
                raise ValueError('Lattice basis rows are not independent')
        else:
            self.H, self.U = [], []
        self.pivots = pivot_columns(self.H)

    def coordinates(self, v):
        """
        Return the integer coefficient vector of ``v`` with respect to the basis rows.
        Raise a ``ValueError`` if ``v`` does not lie in the lattice.
        """
        w = list(v)
        c = []
        for i, j in enumerate(self.pivots):
            q, r = divmod(w[j], self.H[i][j])
            if r:
                raise ValueError('Vector {!s} is not in the lattice'.format(v))
            c.append(q)
            if q:
                w = [x - q*y for x, y in zip(w, self.H[i])]
        if any(w):
            raise ValueError('Vector {!s} is not in the lattice'.format(v))
        return vec_mat(c, self.U, self.rank)

    def __contains__(self, v):
        try:
            self.coordinates(v)
        except ValueError:
            return False
        return True

def lattice_coordinates(basis, vectors, ncols=None):
    """
    Express each vector in ``vectors`` as an integer combination of the rows of ``basis``, which must be linearly independent.
    Return the list of coefficient vectors.
    Raise a ``ValueError`` if some vector does not lie in the lattice.
    """
    L = LatticeBasis(basis, ncols)
    return [L.coordinates(v) for v in vectors]

def lattice_contains(basis, v, ncols=None):
    return v in LatticeBasis(hnf(basis, ncols), ncols)

def lattice_intersection(L1, L2, ncols=None):
    """
    Return the canonical basis of the intersection of the row lattices of ``L1`` and ``L2``.
    Raise a ``ValueError`` if their ambient dimensions differ.

    EXAMPLES:

    >>> lattice_intersection([[2, 0], [0, 2]], [[3, 0], [0, 3]])
    [[6, 0], [0, 6]]
    """
    n1 = num_cols(L1, ncols)
    n2 = num_cols(L2, ncols)
    if L1 and L2 and n1 != n2:
        raise ValueError('Lattices live in different dimensions {!s} and {!s}'\
          .format(n1, n2))
    n = n1 if L1 else n2
    if not L1 or not L2:
        return []
    K = integer_kernel(L1 + L2, n)
    k = len(L1)
    return hnf([vec_mat(x[:k], L1, n) for x in K], n)


# ---------------------------------------------------------------------------
# Finite abelian quotients
# ---------------------------------------------------------------------------
class AbelianQuotient(object):
    """
    The quotient ZZ^n / (row lattice of a relation matrix) in Smith coordinates.

    Attributes:

    - ``invariants``: invariant factors (> 1) of the torsion part
    - ``free_rank``: rank of the free part
    - ``V``, ``Vinv``: column transform of the Smith normal form and its inverse
    - ``torsion_positions``, ``free_positions``: Smith coordinates of the torsion and free parts
    """
    def __init__(self, ambient_rank, relations):
        self.ambient_rank = ambient_rank
        dec = snf(relations, ambient_rank)
        diag = dec.diagonal()
        self.V = dec.V
        self.Vinv = dec.Vinv
        self.torsion_positions = [i for i, d in enumerate(diag) if d > 1]
        self.free_positions = [i for i in range(ambient_rank)
          if i >= len(diag) or diag[i] == 0]
        self.invariants = [diag[i] for i in self.torsion_positions]
        self.free_rank = len(self.free_positions)

    def coords(self, v):
        """
        Return the exponent vector of the class of ``v`` with respect to the Smith generators of the torsion part, reduced mod the invariants.
        """
        w = vec_mat(v, self.V, self.ambient_rank)
        return [w[i] % d for i, d in zip(self.torsion_positions,
          self.invariants)]

    def generators(self):
        """
        Return vectors of ZZ^n whose classes are the Smith generators of the torsion part.
        """
        return [list(self.Vinv[i]) for i in self.torsion_positions]

def quotient_structure(ambient_rank, relations):
    return AbelianQuotient(ambient_rank, relations)

def quotient_invariants(ambient_rank, relations, require_finite=False):
    """
    Return the pair ``(invariants, free_rank)`` for ZZ^``ambient_rank`` modulo the row lattice of ``relations``: the invariant factors of the torsion part, ones filtered out, and the rank of the free part.
    If ``require_finite`` and the quotient is infinite, raise a ``ValueError``.

    EXAMPLES:

    >>> quotient_invariants(3, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    ([2, 2, 2], 0)
    >>> quotient_invariants(2, [[2, 0]])
    ([2], 1)
    """
    divisors = elementary_divisors(relations, ambient_rank)
    free_rank = ambient_rank - len(divisors)
    if free_rank:
        logger.debug('Quotient has free rank %s', free_rank)
        if require_finite:
            raise ValueError('Quotient is infinite (free rank {!s})'.format(
              free_rank))
    return [d for d in divisors if d > 1], free_rank

def coords_in_quotient(quotient, v):
    """
    Return the exponent vector of ``v`` in the Smith coordinates of the given ``AbelianQuotient``.
    """
    return quotient.coords(v)


# ---------------------------------------------------------------------------
# Subgroups of finite abelian groups given in Smith coordinates
# ---------------------------------------------------------------------------
def subgroup_lattice(gens, ambient):
    """
    Return the canonical basis of the preimage in ZZ^k of the subgroup of ZZ/ambient_1 + ... + ZZ/ambient_k generated by the rows ``gens``.
    """
    k = len(ambient)
    return hnf([list(g) for g in gens] + diagonal(ambient), k)

def subgroup_invariants(gens, ambient):
    """
    Return the invariant factors of the subgroup of ZZ/ambient_1 + ... + ZZ/ambient_k generated by the rows ``gens``.
    """
    k = len(ambient)
    if not k:
        return []
    L = subgroup_lattice(gens, ambient)
    rel = lattice_coordinates(L, diagonal(ambient), k)
    return quotient_invariants(len(L), rel, require_finite=True)[0]

def canonical_subgroup_coords(gens, ambient):
    """
    Return canonical generators of the subgroup of ZZ/ambient_1 + ... + ZZ/ambient_k generated by the rows ``gens``: the Hermite basis of its preimage lattice, without the rows lying in the relation lattice, reduced mod ``ambient``.
    """
    result = []
    for row in subgroup_lattice(gens, ambient):
        if all(a % d == 0 for a, d in zip(row, ambient)):
            continue
        result.append([a % d for a, d in zip(row, ambient)])
    return result

def subgroup_contains(big, small, ambient):
    """
    Decide whether the subgroup generated by the rows ``small`` lies in the subgroup generated by the rows ``big`` inside ZZ/ambient_1 + ... + ZZ/ambient_k.
    """
    k = len(ambient)
    if not k:
        return True
    L = subgroup_lattice(big, ambient)
    try:
        lattice_coordinates(L, small, k)
    except ValueError:
        return False
    return True

def subgroup_equal(gens1, gens2, ambient):
    return subgroup_lattice(gens1, ambient) == subgroup_lattice(gens2, ambient)

def abelian_map_kernel(images, domain, codomain):
    """
    Given a homomorphism from ZZ/domain_1 + ... + ZZ/domain_k to ZZ/codomain_1 + ... + ZZ/codomain_l by the images (rows in codomain coordinates) of the domain's standard generators, return the canonical basis of the preimage lattice in ZZ^k of its kernel.
    """
    k = len(domain)
    l = len(codomain)
    if not k:
        return []
    stacked = [list(row) for row in images] + diagonal(codomain)
    K = integer_kernel(stacked, l)
    return hnf([x[:k] for x in K] + diagonal(domain), k)


# ---------------------------------------------------------------------------
# Torsion of cokernels of large sparse maps
# ---------------------------------------------------------------------------
class TorsionCokernel(object):
    """
    Torsion subgroup of ZZ^N / L, where L is the row lattice of a (typically tall and sparse) relation matrix, with class coordinates and class representatives.

    NOTES:
        Let H be the Hermite form of the relations, of rank r.
        The saturation of L consists of the vectors c*H with c in the dual lattice of the column lattice C of H inside ZZ^r, so the torsion is ZZ^r / C^T.
        Only r x r matrices are ever put into Smith form.
    """
    def __init__(self, relations, ncols):
        self.ncols = ncols
        self.pivots, self.H = hnf_sparse(relations)
        rho = len(self.H)
        self.rank = rho
        columns = {}
        for i, row in enumerate(self.H):
            for j, a in row.items():
                columns.setdefault(j, {})[i] = a
        __, B = hnf_sparse(columns[j] for j in sorted(columns))
        self.B = [_to_dense(b, rho) for b in B]
        dec = snf(transpose(self.B, rho), rho)
        diag = dec.diagonal()
        self.V = dec.V
        self.Vinv = dec.Vinv
        self.torsion_positions = [i for i, d in enumerate(diag) if d > 1]
        self.invariants = [diag[i] for i in self.torsion_positions]

    def _solve_pivots(self, y):
        # c*H restricted to the pivot columns equals y there
        c = []
        for i, p in enumerate(self.pivots):
            s = Fraction(y.get(p, 0))
            for l in range(i):
                h = self.H[l].get(p, 0)
                if h:
                    s -= c[l]*h
            c.append(s / self.H[i][p])
        return c

    def coords(self, y):
        """
        Return the class coordinates of the torsion element ``y`` (a sparse dictionary or a dense list) reduced mod the invariants.
        """
        if not isinstance(y, dict):
            y = _to_sparse(y)
        if not self.invariants:
            return []
        c = self._solve_pivots(y)
        rho = self.rank
        w = []
        for j in range(rho):
            s = sum(c[i]*self.B[j][i] for i in range(rho) if self.B[j][i])
            if s.denominator != 1:
                raise ValueError('Vector is not a torsion class of the '
                  'cokernel')
            w.append(int(s))
        w = vec_mat(w, self.V, rho)
        return [w[i] % d for i, d in zip(self.torsion_positions,
          self.invariants)]

    def representatives(self):
        """
        Return sparse integer vectors whose classes are the Smith generators of the torsion.
        """
        rho = self.rank
        result = []
        for pos in self.torsion_positions:
            w = self.Vinv[pos]
            # Solve B*c^T = w^T with B upper triangular
            c = [Fraction(0)]*rho
            for i in reversed(range(rho)):
                s = Fraction(w[i])
                for l in range(i + 1, rho):
                    if self.B[i][l]:
                        s -= self.B[i][l]*c[l]
                c[i] = s / self.B[i][i]
            y = {}
            for ci, row in zip(c, self.H):
                if ci:
                    for j, a in row.items():
                        y[j] = y.get(j, 0) + ci*a
            rep = {}
            for j, a in y.items():
                if a:
                    if a.denominator != 1:
                        raise ValueError('Torsion representative is not '
                          'integral')
                    rep[j] = int(a)
            result.append(rep)
        return result


# ---------------------------------------------------------------------------
# Incremental rational row spans
# ---------------------------------------------------------------------------
def _primitive(v):
    g = 0
    for a in v:
        if a:
            g = gcd(g, a)
            if g == 1:
                return v
    if g > 1:
        return [a // g for a in v]
    return v

class EchelonBasis(object):
    """
    Echelon basis of the rational span of integer row vectors added one at a time; rows are kept primitive with positive pivots.
    Only the span over QQ is tracked, which is all that a saturated kernel depends on.
    """
    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, v):
        while True:
            c = next((j for j, a in enumerate(v) if a), None)
            if c is None:
                return v, None
            P = self.pivots.get(c)
            if P is None:
                return v, c
            p, a = P[c], v[c]
            g = gcd(p, a)
            v = _primitive([(p // g)*x - (a // g)*y for x, y in zip(v, P)])

    def add(self, v):
        """
        Add the row ``v``; return ``True`` if it increased the rank.
        """
        v, c = self._reduce(_primitive(list(v)))
        if c is None:
            return False
        if v[c] < 0:
            v = [-a for a in v]
        self.pivots[c] = v
        return True

    def rows(self):
        return [self.pivots[c] for c in sorted(self.pivots)]
