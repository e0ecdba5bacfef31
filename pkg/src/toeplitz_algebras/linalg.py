"""Exact Gaussian elimination over the Gaussian rationals."""

from .scalars import ONE, ZERO, gr


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)``; the input is not modified.
    """
    m = [[gr(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x = 0}`` as a list of coefficient lists."""
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


class Span:
    """Incrementally maintained subspace of ``Q(i)^dim``.

    Basis vectors are kept fully reduced: each has a 1 at its pivot and
    every other basis vector is 0 there.
    """

    def __init__(self, dim, vectors=()):
        self.dim = dim
        self._basis = []  # list of (pivot, vector)
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._basis)

    @property
    def basis(self):
        return [v for _, v in self._basis]

    def reduce(self, v):
        v = [gr(x) for x in v]
        if len(v) != self.dim:
            raise ValueError("vector length does not match span dimension")
        for piv, b in self._basis:
            f = v[piv]
            if not f.is_zero():
                v = [x - f * y for x, y in zip(v, b)]
        return v

    def contains(self, v):
        return all(x.is_zero() for x in self.reduce(v))

    def add(self, v):
        """Add ``v``; return True if the dimension grew."""
        w = self.reduce(v)
        piv = next((i for i, x in enumerate(w) if not x.is_zero()), None)
        if piv is None:
            return False
        inv = w[piv].inverse()
        w = [x * inv for x in w]
        reduced = []
        for p, b in self._basis:
            f = b[piv]
            if not f.is_zero():
                b = [x - f * y for x, y in zip(b, w)]
            reduced.append((p, b))
        reduced.append((piv, w))
        self._basis = reduced
        return True

    def issubset(self, other):
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return len(self) == len(other) and self.issubset(other)
