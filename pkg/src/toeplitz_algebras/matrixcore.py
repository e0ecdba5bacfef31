"""Coefficient algebras: dense matrices, P(M) residues and O_{p,q}.

Block entries in this package are one of two kinds, both supporting
``+ - *``, ``scale``, ``is_zero`` and ``zero_like``:

* :class:`MatrixD`, a dense d x d matrix;
* :class:`PMElement`, an element ``a(M)`` of the algebra generated by a
  nonderogatory matrix ``M`` with minimal polynomial ``p``, stored as the
  residue ``a mod p``.  The companion matrix of ``p`` is the canonical ``M``.

The ``*Algebra`` classes describe a commutative coefficient algebra by a
basis and a coordinate map; the extension-space solver works on those
coordinates.
"""

from .errors import InvalidSpec, NotMonic, ShapeMismatch
from .linalg import Span, nullspace, rank
from .scalars import ONE, ZERO, Poly, gr, poly_gcd, poly_rem


class MatrixD:
    """Square matrix over the Gaussian rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(gr(x) for x in row) for row in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ShapeMismatch("matrix must be square")
        self.rows = rows

    @classmethod
    def _make(cls, rows):
        obj = object.__new__(cls)
        obj.rows = rows
        return obj

    @classmethod
    def zero(cls, d):
        return cls._make(tuple((ZERO,) * d for _ in range(d)))

    @classmethod
    def identity(cls, d):
        return cls._make(tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)))

    @classmethod
    def diagonal(cls, values):
        d = len(values)
        return cls._make(
            tuple(tuple(gr(values[i]) if i == j else ZERO for j in range(d)) for i in range(d))
        )

    @property
    def dim(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def zero_like(self):
        return MatrixD.zero(self.dim)

    def one_like(self):
        return MatrixD.identity(self.dim)

    def is_zero(self):
        return all(x.is_zero() for row in self.rows for x in row)

    def is_diagonal(self):
        return all(x.is_zero() for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def _check(self, other):
        if not isinstance(other, MatrixD):
            raise ShapeMismatch(f"cannot combine MatrixD with {type(other).__name__}")
        if other.dim != self.dim:
            raise ShapeMismatch(f"matrix dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return MatrixD._make(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        self._check(other)
        return MatrixD._make(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return MatrixD._make(tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c):
        c = gr(c)
        return MatrixD._make(tuple(tuple(x * c for x in r) for r in self.rows))

    def __mul__(self, other):
        if not isinstance(other, MatrixD):
            return self.scale(other)
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for x, y in zip(r, col):
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return MatrixD._make(tuple(out))

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        result, base = MatrixD.identity(self.dim), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MatrixD):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def flat(self):
        return [x for row in self.rows for x in row]

    def rank(self):
        return rank([list(r) for r in self.rows], self.dim)

    def is_invertible(self):
        return self.rank() == self.dim

    def __repr__(self):
        return "MatrixD([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj):
        from .scalars import GaussianRational

        if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
            raise ValueError("matrix must be a nested JSON array")
        return cls([[GaussianRational.from_json(x) for x in r] for r in obj])


def companion(p):
    """Companion matrix of a monic ``p``: ones on the subdiagonal, ``-coeffs`` in the last column."""
    if p.is_zero() or p.degree < 1:
        raise NotMonic("companion matrix needs a monic polynomial of degree >= 1")
    if not p.is_monic():
        raise NotMonic(f"{p} is not monic")
    d = p.degree
    rows = [[ZERO] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = ONE
    for i in range(d):
        rows[i][d - 1] = -p.coeff(i)
    return MatrixD(rows)


def eval_poly_at_matrix(a, M):
    """Horner evaluation of ``a(M)``."""
    acc = M.zero_like()
    ident = M.one_like()
    for c in reversed(a.coeffs):
        acc = acc * M + ident.scale(c)
    return acc


def minimal_polynomial(M):
    """Monic minimal polynomial, from the first linear dependency among I, M, M^2, ..."""
    d = M.dim
    span = Span(d * d)
    powers = []
    P = M.one_like()
    for k in range(d + 1):
        v = P.flat()
        if span.contains(v):
            # express M^k in terms of the lower powers
            cols = powers + [v]
            rows = [[cols[j][i] for j in range(len(cols))] for i in range(d * d)]
            sol = nullspace(rows, len(cols))[0]
            lead = sol[-1]
            return Poly([c / lead for c in sol])
        span.add(v)
        powers.append(v)
        P = P * M
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def is_nonderogatory(M):
    return minimal_polynomial(M).degree == M.dim


class PMElement:
    """Element of P(M) stored as a residue modulo the minimal polynomial ``p``."""

    __slots__ = ("modulus", "residue")

    def __init__(self, modulus, residue):
        if not modulus.is_monic() or modulus.degree < 1:
            raise NotMonic(f"modulus {modulus} must be monic of degree >= 1")
        self.modulus = modulus
        self.residue = poly_rem(residue, modulus)

    @classmethod
    def _make(cls, modulus, residue):
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.residue = residue
        return obj

    @property
    def dim(self):
        return self.modulus.degree

    def _check(self, other):
        if not isinstance(other, PMElement):
            raise ShapeMismatch(f"cannot combine PMElement with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ShapeMismatch(f"moduli differ: {self.modulus} vs {other.modulus}")

    def zero_like(self):
        return PMElement._make(self.modulus, Poly.zero())

    def one_like(self):
        return PMElement._make(self.modulus, Poly.one())

    def is_zero(self):
        return self.residue.is_zero()

    def __add__(self, other):
        self._check(other)
        return PMElement._make(self.modulus, self.residue + other.residue)

    def __sub__(self, other):
        self._check(other)
        return PMElement._make(self.modulus, self.residue - other.residue)

    def __neg__(self):
        return PMElement._make(self.modulus, -self.residue)

    def scale(self, c):
        return PMElement._make(self.modulus, self.residue * gr(c))

    def __mul__(self, other):
        if not isinstance(other, PMElement):
            return self.scale(other)
        self._check(other)
        return PMElement._make(self.modulus, poly_rem(self.residue * other.residue, self.modulus))

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, PMElement):
            return NotImplemented
        return self.modulus == other.modulus and self.residue == other.residue

    def __hash__(self):
        return hash((self.modulus, self.residue))

    def to_matrix(self):
        return eval_poly_at_matrix(self.residue, companion(self.modulus))

    def __repr__(self):
        return f"PMElement({self.residue} mod {self.modulus})"


def pm_reduce(a, p):
    return PMElement(p, a)


def pm_is_invertible(e):
    if e.residue.is_zero():
        return False
    return poly_gcd(e.residue, e.modulus).degree == 0


class OpqElement:
    """``[[lam*I_p, X], [0, lam*I_q]]`` with ``X`` a p x q block."""

    __slots__ = ("p", "q", "lam", "X")

    def __init__(self, p, q, lam, X):
        if p < 1 or q < 1:
            raise InvalidSpec("O_{p,q} needs positive p and q")
        X = tuple(tuple(gr(x) for x in row) for row in X)
        if len(X) != p or any(len(r) != q for r in X):
            raise ShapeMismatch(f"corner block must be {p}x{q}")
        self.p, self.q, self.lam, self.X = p, q, gr(lam), X

    def to_matrix(self):
        d = self.p + self.q
        rows = [[ZERO] * d for _ in range(d)]
        for i in range(d):
            rows[i][i] = self.lam
        for i in range(self.p):
            for j in range(self.q):
                rows[i][self.p + j] = self.X[i][j]
        return MatrixD(rows)

    @classmethod
    def from_matrix(cls, M, p, q):
        if M.dim != p + q or not opq_contains(M, p, q):
            raise InvalidSpec("matrix is not in O_{p,q}")
        return cls(p, q, M[0, 0], [[M[i, p + j] for j in range(q)] for i in range(p)])

    def __mul__(self, other):
        return OpqElement.from_matrix(self.to_matrix() * other.to_matrix(), self.p, self.q)

    def __add__(self, other):
        return OpqElement.from_matrix(self.to_matrix() + other.to_matrix(), self.p, self.q)

    def __eq__(self, other):
        if not isinstance(other, OpqElement):
            return NotImplemented
        return (self.p, self.q, self.lam, self.X) == (other.p, other.q, other.lam, other.X)

    def __hash__(self):
        return hash((self.p, self.q, self.lam, self.X))


def opq_contains(M, p, q):
    d = p + q
    if M.dim != d:
        return False
    lam = M[0, 0]
    for i in range(d):
        for j in range(d):
            x = M[i, j]
            if i == j:
                if x != lam:
                    return False
            elif not (i < p <= j) and not x.is_zero():
                return False
    return True


# Coefficient algebras ----------------------------------------------------


class PolyModAlgebra:
    """P(M) = Q(i)[X]/(p), basis 1, X, ..., X^(d-1)."""

    def __init__(self, p):
        if not p.is_monic() or p.degree < 1:
            raise NotMonic(f"{p} must be monic of degree >= 1")
        self.p = p
        self.dim = p.degree

    def basis(self):
        return [PMElement._make(self.p, Poly.monomial(r)) for r in range(self.dim)]

    def zero(self):
        return PMElement._make(self.p, Poly.zero())

    def one(self):
        return PMElement._make(self.p, Poly.one())

    def contains(self, e):
        return isinstance(e, PMElement) and e.modulus == self.p

    def coords(self, e):
        return e.residue.padded(self.dim)

    def element(self, coords):
        return PMElement._make(self.p, Poly(coords))

    flatten = coords

    def __eq__(self, other):
        return isinstance(other, PolyModAlgebra) and other.p == self.p

    def __hash__(self):
        return hash(self.p)


class OpqAlgebra:
    """O_{p,q}: lambda*I plus an arbitrary p x q upper-right corner."""

    def __init__(self, p, q):
        if p < 1 or q < 1:
            raise InvalidSpec("O_{p,q} needs positive p and q")
        self.p, self.q = p, q
        self.d = p + q
        self.dim = 1 + p * q

    def _corner_unit(self, i, j):
        rows = [[ZERO] * self.d for _ in range(self.d)]
        rows[i][self.p + j] = ONE
        return MatrixD(rows)

    def basis(self):
        return [MatrixD.identity(self.d)] + [
            self._corner_unit(i, j) for i in range(self.p) for j in range(self.q)
        ]

    def zero(self):
        return MatrixD.zero(self.d)

    def one(self):
        return MatrixD.identity(self.d)

    def contains(self, e):
        return isinstance(e, MatrixD) and opq_contains(e, self.p, self.q)

    def coords(self, e):
        if not self.contains(e):
            raise InvalidSpec("matrix is not in O_{p,q}")
        return [e[0, 0]] + [e[i, self.p + j] for i in range(self.p) for j in range(self.q)]

    def element(self, coords):
        rows = [[ZERO] * self.d for _ in range(self.d)]
        for i in range(self.d):
            rows[i][i] = gr(coords[0])
        k = 1
        for i in range(self.p):
            for j in range(self.q):
                rows[i][self.p + j] = gr(coords[k])
                k += 1
        return MatrixD(rows)

    def flatten(self, e):
        return e.flat()

    def is_invertible(self, e):
        return not e[0, 0].is_zero()


class DiagonalAlgebra:
    """D_d, the diagonal d x d matrices."""

    def __init__(self, d):
        self.d = d
        self.dim = d

    def basis(self):
        return [MatrixD.diagonal([ONE if i == j else ZERO for i in range(self.d)]) for j in range(self.d)]

    def zero(self):
        return MatrixD.zero(self.d)

    def one(self):
        return MatrixD.identity(self.d)

    def contains(self, e):
        return isinstance(e, MatrixD) and e.dim == self.d and e.is_diagonal()

    def coords(self, e):
        return [e[i, i] for i in range(self.d)]

    def element(self, coords):
        return MatrixD.diagonal(coords)

    def flatten(self, e):
        return e.flat()


def algebra_for(entry):
    """Default coefficient algebra for an entry; only P(M) is inferable."""
    if isinstance(entry, PMElement):
        return PolyModAlgebra(entry.modulus)
    raise InvalidSpec("matrix entries need an explicit coefficient algebra")
