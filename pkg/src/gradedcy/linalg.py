"""Small exact linear algebra kit over the rationals.

Matrices are lists of rows; entries are Fractions (or ints, which are
upgraded on demand).  Everything here is dense and meant for the matrix
sizes this package actually produces (a few hundred rows); sparse vectors
are dicts index -> Fraction with zero entries absent.
"""

from fractions import Fraction


def vec_add(u, v, c=1):
    """u + c*v for sparse dict vectors; returns a new dict without zeros."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(u, c):
    if not c:
        return {}
    return {k: c * x for k, x in u.items()}


class SparseEliminator:
    """Incremental row reduction of sparse dict vectors over Q.

    Rows are kept pivot-normalized.  `add(vec)` reduces vec against the
    current span and either absorbs it (returning the reduced nonzero row)
    or returns None when vec was already in the span.
    """

    def __init__(self):
        self.pivots = {}  # pivot index -> normalized row (dict)

    def reduce(self, vec):
        vec = dict(vec)
        for k in sorted(vec):
            if k in vec and vec[k] and k in self.pivots:
                vec = vec_add(vec, self.pivots[k], -Fraction(vec[k]))
        # second pass: reduction may reintroduce earlier pivots
        changed = True
        while changed:
            changed = False
            for k in list(vec):
                if vec.get(k) and k in self.pivots:
                    vec = vec_add(vec, self.pivots[k], -Fraction(vec[k]))
                    changed = True
        return vec

    def add(self, vec):
        vec = self.reduce(vec)
        if not vec:
            return None
        p = min(vec)
        c = Fraction(vec[p])
        row = {k: Fraction(x) / c for k, x in vec.items()}
        self.pivots[p] = row
        return row

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.pivots)


def sparse_rank(rows):
    el = SparseEliminator()
    for r in rows:
        el.add(r)
    return el.rank


def mat_from_columns(cols, nrows):
    m = [[Fraction(0)] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            m[i][j] = Fraction(x)
    return m


def rank(matrix):
    """Rank of a dense list-of-rows matrix, destructive-free."""
    if not matrix:
        return 0
    m = [[Fraction(x) for x in row] for row in matrix]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def nullspace(matrix, ncols=None):
    """Basis of the right kernel of a dense matrix (rows = equations)."""
    return nullspace_with_free(matrix, ncols)[0]


def nullspace_with_free(matrix, ncols=None):
    """(kernel basis, free column list).

    Basis vector j has value 1 at free column j and 0 at every other free
    column, so the coordinates of any kernel vector in this basis are just
    its values at the free columns.
    """
    if not matrix:
        n = ncols or 0
        return [{j: Fraction(1)} for j in range(n)], list(range(n))
    m = [[Fraction(x) for x in row] for row in matrix]
    nrows, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [j for j in range(nc) if j not in pivots]
    basis = []
    for f in free:
        v = {f: Fraction(1)}
        for i, p in enumerate(pivots):
            if m[i][f]:
                v[p] = -m[i][f]
        basis.append(v)
    return basis, free


def solve(matrix, rhs):
    """One solution x of matrix @ x = rhs, or None if inconsistent."""
    nrows = len(matrix)
    nc = len(matrix[0]) if nrows else 0
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
         for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if m[i][nc]:
            return None
    x = [Fraction(0)] * nc
    for i, p in enumerate(pivots):
        x[p] = m[i][nc]
    return x


def mat_mul(a, b):
    n, k = len(a), len(b)
    mcols = len(b[0]) if k else 0
    out = [[Fraction(0)] * mcols for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                c = a[i][t]
                row = b[t]
                orow = out[i]
                for j in range(mcols):
                    if row[j]:
                        orow[j] += c * row[j]
    return out


def mat_inv(matrix):
    """Exact inverse; raises ZeroDivisionError on singular input."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[col])]
    return [row[n:] for row in m]


def mat_det(matrix):
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                c = m[i][col] * inv
                m[i] = [a - c * b for a, b in zip(m[i], m[col])]
    return det


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v))), Fraction(0))
            for i in range(len(a))]
