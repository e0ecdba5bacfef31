"""Algebra families of block Toeplitz matrices and membership tests.

Families:

* :class:`Pseudocirculant` ``F(A, B)``: ``A T_j = B T_{j-n}`` for j >= 1,
  with ``ker A  &  ker B = {0}``;
* :class:`SinglyGen` ``B(p+, p-, chi)`` over P(M): upper offsets are
  multiples of ``p+(M)``, lower offsets multiples of ``p-(M)``, and with
  ``T_i = p+ a_i``, ``T_{i-n} = p- a_{i-n}`` the polynomial
  ``q = p / (p+ p-)`` divides ``a_i - chi a_{i-n}``;
* :class:`DiagonalTuple` and :class:`ScalarCirculant`: direct sums of
  generalized circulants ``t_{i-n} = alpha t_i`` (``alpha`` may be
  :data:`INFINITY`, meaning ``t_i = 0`` for ``i >= 1``);
* :class:`SchurOpq`: entries in O_{p,q} with every off-diagonal entry
  noninvertible;
* :class:`UpperTri` / :class:`LowerTri`.
"""

from dataclasses import dataclass

from .blocktoeplitz import BlockToeplitz, CyclicDiagonal
from .errors import InvalidSpec, Inconsistent, ModulusMismatch, ShapeMismatch
from .linalg import nullspace, rank
from .matrixcore import (
    DiagonalAlgebra,
    MatrixD,
    OpqAlgebra,
    PMElement,
    PolyModAlgebra,
    opq_contains,
)
from .scalars import ONE, ZERO, Poly, divides, exact_div, gr, poly_coprime, poly_gcd, poly_rem


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def _dense(e):
    return e.to_matrix() if isinstance(e, PMElement) else e


def kernels_meet_trivially(A, B):
    """``ker A  &  ker B == {0}``, i.e. the stacked matrix [A; B] has full column rank."""
    Am, Bm = _dense(A), _dense(B)
    if Am.dim != Bm.dim:
        raise ShapeMismatch("A and B have different dimensions")
    rows = [list(r) for r in Am.rows] + [list(r) for r in Bm.rows]
    return rank(rows, Am.dim) == Am.dim


@dataclass(frozen=True)
class Pseudocirculant:
    A: object
    B: object
    n: int

    def __post_init__(self):
        if type(self.A) is not type(self.B):
            raise InvalidSpec("A and B must be entries of the same kind")
        if isinstance(self.A, PMElement) and self.A.modulus != self.B.modulus:
            raise InvalidSpec("A and B live in different P(M)")
        if not kernels_meet_trivially(self.A, self.B):
            raise InvalidSpec("ker A and ker B intersect nontrivially")

    @property
    def d(self):
        return self.A.dim


@dataclass(frozen=True)
class SinglyGen:
    """``B(p_plus, p_minus, chi)`` over P(M), M nonderogatory with minimal polynomial ``p``.

    ``chi`` is stored reduced modulo ``q = p / (p_plus p_minus)`` (and as 1
    when ``q`` is constant); only that residue affects membership.
    """

    p: Poly
    p_plus: Poly
    p_minus: Poly
    chi: Poly
    n: int

    def __post_init__(self):
        p, pp, pm, chi = self.p, self.p_plus, self.p_minus, self.chi
        if not p.is_monic() or p.degree < 1:
            raise InvalidSpec(f"p = {p} must be monic of degree >= 1")
        if not pp.is_monic() or not pm.is_monic():
            raise InvalidSpec("p_plus and p_minus must be monic")
        if self.n < 1:
            raise InvalidSpec("n must be >= 1")
        q = exact_div(p, pp * pm)
        if q is None:
            raise InvalidSpec(f"p_plus*p_minus = {pp * pm} does not divide p = {p}")
        if not poly_coprime(chi, p):
            raise InvalidSpec(f"chi = {chi} is not coprime to p = {p}")
        object.__setattr__(self, "chi", poly_rem(chi, q) if q.degree >= 1 else Poly.one())

    @property
    def q(self):
        return self.p // (self.p_plus * self.p_minus)

    @property
    def d(self):
        return self.p.degree


@dataclass(frozen=True)
class DiagonalTuple:
    alphas: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(
            self, "alphas", tuple(a if a is INFINITY else gr(a) for a in self.alphas)
        )
        if not self.alphas:
            raise InvalidSpec("need at least one alpha")

    @property
    def d(self):
        return len(self.alphas)


@dataclass(frozen=True)
class ScalarCirculant:
    alpha: object
    n: int

    def __post_init__(self):
        if self.alpha is not INFINITY:
            object.__setattr__(self, "alpha", gr(self.alpha))

    @property
    def d(self):
        return 1


@dataclass(frozen=True)
class SchurOpq:
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InvalidSpec("O_{p,q} needs positive p and q")

    @property
    def d(self):
        return self.p + self.q


@dataclass(frozen=True)
class UpperTri:
    n: int
    d: int


@dataclass(frozen=True)
class LowerTri:
    n: int
    d: int


SPEC_TYPES = (Pseudocirculant, SinglyGen, DiagonalTuple, ScalarCirculant, SchurOpq, UpperTri, LowerTri)


def _check_shape(spec, T):
    if not isinstance(T, BlockToeplitz):
        raise ShapeMismatch(f"expected BlockToeplitz, got {type(T).__name__}")
    if T.n != spec.n:
        raise ShapeMismatch(f"block order {T.n} does not match spec n={spec.n}")
    if T.d != spec.d:
        raise ShapeMismatch(f"entry order {T.d} does not match spec d={spec.d}")


def _scalar(e):
    if isinstance(e, MatrixD):
        return e[0, 0]
    if isinstance(e, PMElement):
        return e.residue.coeff(0)
    raise ShapeMismatch(f"unsupported entry {type(e).__name__}")


def membership_witness(spec, T):
    """``None`` if ``T`` belongs to the algebra, else the first violated condition."""
    _check_shape(spec, T)
    n = T.n
    if isinstance(spec, Pseudocirculant):
        if type(T[0]) is not type(spec.A):
            raise ShapeMismatch("entries of T and of (A, B) differ in kind")
        for j in range(1, n):
            if spec.A * T[j] != spec.B * T[j - n]:
                return f"A*T_{j} != B*T_{j - n} at offset j={j}"
        return None

    if isinstance(spec, SinglyGen):
        for j in T.offsets():
            e = T[j]
            if not isinstance(e, PMElement) or e.modulus != spec.p:
                raise ShapeMismatch(f"entry at offset {j} is not in P(M) for p = {spec.p}")
        q = spec.q
        for i in range(1, n):
            a = exact_div(T[i].residue, spec.p_plus)
            if a is None:
                return f"T_{i} is not a multiple of p_plus at offset i={i}"
            b = exact_div(T[i - n].residue, spec.p_minus)
            if b is None:
                return f"T_{i - n} is not a multiple of p_minus at offset i={i - n}"
            if q.degree >= 1 and not divides(q, a - spec.chi * b):
                return f"q does not divide a_i - chi*a_(i-n) at offset i={i}"
        return None

    if isinstance(spec, (DiagonalTuple, ScalarCirculant)):
        alphas = spec.alphas if isinstance(spec, DiagonalTuple) else (spec.alpha,)
        for j in T.offsets():
            e = T[j]
            if isinstance(e, MatrixD) and not e.is_diagonal():
                return f"entry at offset {j} is not diagonal"
        for s, alpha in enumerate(alphas):
            for i in range(1, n):
                top, bottom = _slot(T[i], s), _slot(T[i - n], s)
                if alpha is INFINITY:
                    if not top.is_zero():
                        return f"slot {s}: t_{i} != 0 although alpha is infinite"
                elif bottom != alpha * top:
                    return f"slot {s}: t_{i - n} != alpha*t_{i} at offset i={i}"
        return None

    if isinstance(spec, SchurOpq):
        for j in T.offsets():
            e = T[j]
            if not isinstance(e, MatrixD) or not opq_contains(e, spec.p, spec.q):
                return f"entry at offset {j} is not in O_{{{spec.p},{spec.q}}}"
        for j in T.offsets():
            if j != 0 and not T[j][0, 0].is_zero():
                return f"off-diagonal entry at offset {j} is invertible"
        return None

    if isinstance(spec, UpperTri):
        for j in range(1, n):
            if not T[j].is_zero():
                return f"offset {j} is nonzero (below the diagonal)"
        return None

    if isinstance(spec, LowerTri):
        for j in range(1, n):
            if not T[-j].is_zero():
                return f"offset {-j} is nonzero (above the diagonal)"
        return None

    raise InvalidSpec(f"unknown algebra spec {type(spec).__name__}")


def _slot(e, s):
    if isinstance(e, MatrixD):
        return e[s, s]
    return _scalar(e)


def membership(spec, T):
    return membership_witness(spec, T) is None


def fab_equal(A, B, A2, B2):
    """Whether F(A, B) == F(A2, B2), i.e. ``A B2 == A2 B``."""
    if not kernels_meet_trivially(A, B) or not kernels_meet_trivially(A2, B2):
        raise InvalidSpec("ker A and ker B must intersect trivially for both pairs")
    return A * B2 == A2 * B


def bsg_equal(s1, s2):
    """Equality of singly generated algebras under monic normalization of p_plus, p_minus."""
    if s1.p != s2.p:
        raise ModulusMismatch(f"different minimal polynomials {s1.p} and {s2.p}")
    if s1.p_plus != s2.p_plus or s1.p_minus != s2.p_minus:
        return False
    q = s1.q
    if q.degree < 1:
        return True
    return divides(q, s1.chi - s2.chi)


def slice_basis(spec):
    """Basis of ``{(T_k, T_{k-n})}`` for one nonzero order, by a nullspace solve.

    Unknowns are the coefficients of ``a`` (``deg < d - deg p_plus``) and
    ``b`` (``deg < d - deg p_minus``); the constraints are the coefficients
    of ``(a - chi*b) mod q``.  The slice is the same for every order.
    """
    p, pp, pm, chi, q = spec.p, spec.p_plus, spec.p_minus, spec.chi, spec.q
    d = spec.d
    na, nb = d - pp.degree, d - pm.degree
    dq = q.degree
    columns = []
    for r in range(na):
        columns.append(poly_rem(Poly.monomial(r), q).padded(dq) if dq >= 1 else [])
    for r in range(nb):
        columns.append((-poly_rem(chi * Poly.monomial(r), q)).padded(dq) if dq >= 1 else [])
    rows = [[col[i] for col in columns] for i in range(dq)]
    out = []
    for v in nullspace(rows, na + nb):
        a, b = Poly(v[:na]), Poly(v[na:])
        out.append((PMElement(p, pp * a), PMElement(p, pm * b)))
    return out


def bsg_generators(spec, n=None):
    """Spanning set of ``B(p_plus, p_minus, chi)`` as a linear space.

    Diagonal monomials ``M^r``; for each order k the E-type diagonal
    ``(p_plus chi, p_minus)``, the J-type diagonals ``(q p_plus chi, 0)`` and
    ``(0, q p_minus)``, and a basis of the order-k slice.
    """
    n = spec.n if n is None else n
    if n < 2:
        raise InvalidSpec("generators need n >= 2")
    p, d = spec.p, spec.d
    zero = PMElement(p, Poly.zero())
    gens = [BlockToeplitz(n, {0: PMElement(p, Poly.monomial(r))}, zero=zero) for r in range(d)]
    q = spec.q
    special = [
        (PMElement(p, spec.p_plus * spec.chi), PMElement(p, spec.p_minus)),
        (PMElement(p, q * spec.p_plus * spec.chi), zero),
        (zero, PMElement(p, q * spec.p_minus)),
    ]
    pairs = special + slice_basis(spec)
    for k in range(1, n):
        for top, bottom in pairs:
            if top.is_zero() and bottom.is_zero():
                continue
            gens.append(CyclicDiagonal(n, k, top, bottom).to_toeplitz())
    return gens


def pseudocirculant_pair(spec):
    """``(A, B)`` with ``F(A, B) == B(p_plus, p_minus, chi)`` when p_plus, p_minus are coprime.

    Returns ``None`` when ``gcd(p_plus, p_minus)`` is nonconstant, in which
    case ``(p_minus(M), p_plus(M) chi(M))`` violates the kernel condition.
    """
    if poly_gcd(spec.p_plus, spec.p_minus).degree != 0:
        return None
    return PMElement(spec.p, spec.p_minus), PMElement(spec.p, spec.p_plus * spec.chi)


def diagonal_tuple_classify(gens):
    """Recover ``(alpha_1, ..., alpha_d)`` from generators with diagonal entries."""
    if not gens:
        raise InvalidSpec("empty generator set")
    n, d = gens[0].n, gens[0].d
    for G in gens:
        if G.n != n or G.d != d:
            raise ShapeMismatch("generators differ in shape")
        for j in G.offsets():
            if not isinstance(G[j], MatrixD) or not G[j].is_diagonal():
                raise InvalidSpec("generators must have diagonal matrix entries")
    alphas = []
    for s in range(d):
        alpha = INFINITY
        for G in gens:
            hit = next((i for i in range(1, n) if not G[i][s, s].is_zero()), None)
            if hit is not None:
                alpha = G[hit - n][s, s] / G[hit][s, s]
                break
        for G in gens:
            for i in range(1, n):
                top, bottom = G[i][s, s], G[i - n][s, s]
                if alpha is INFINITY:
                    ok = top.is_zero()
                else:
                    ok = bottom == alpha * top
                if not ok:
                    raise Inconsistent(f"slot {s}: no single alpha fits every generator")
        alphas.append(alpha)
    return DiagonalTuple(tuple(alphas), n)


def schur_generators(p, q, n):
    """Spanning set of the Schur algebra: O_{p,q} on the diagonal, nilpotent corners elsewhere."""
    alg = OpqAlgebra(p, q)
    zero = alg.zero()
    basis = alg.basis()
    gens = [BlockToeplitz(n, {0: b}, zero=zero) for b in basis]
    for j in range(-(n - 1), n):
        if j == 0:
            continue
        for b in basis[1:]:
            gens.append(BlockToeplitz(n, {j: b}, zero=zero))
    return gens


def coefficient_algebra(spec, algebra=None):
    """The coefficient algebra the family lives in."""
    if algebra is not None:
        return algebra
    if isinstance(spec, SinglyGen):
        return PolyModAlgebra(spec.p)
    if isinstance(spec, Pseudocirculant):
        if isinstance(spec.A, PMElement):
            return PolyModAlgebra(spec.A.modulus)
        raise InvalidSpec("pseudocirculant over matrices needs an explicit coefficient algebra")
    if isinstance(spec, (DiagonalTuple, ScalarCirculant)):
        return DiagonalAlgebra(spec.d)
    if isinstance(spec, SchurOpq):
        return OpqAlgebra(spec.p, spec.q)
    raise InvalidSpec(f"{type(spec).__name__} needs an explicit coefficient algebra")


def order_slice_basis(spec, algebra=None):
    """Basis of admissible ``(T_k, T_{k-n})`` pairs for a nonzero order k."""
    alg = coefficient_algebra(spec, algebra)
    zero = alg.zero()
    if isinstance(spec, SinglyGen):
        return slice_basis(spec)
    if isinstance(spec, (DiagonalTuple, ScalarCirculant)):
        alphas = spec.alphas if isinstance(spec, DiagonalTuple) else (spec.alpha,)
        out = []
        for s, alpha in enumerate(alphas):
            unit = [ONE if t == s else ZERO for t in range(spec.d)]
            if alpha is INFINITY:
                out.append((zero, MatrixD.diagonal(unit)))
            else:
                out.append((MatrixD.diagonal(unit), MatrixD.diagonal([alpha * u for u in unit])))
        return out
    if isinstance(spec, SchurOpq):
        nil = alg.basis()[1:]
        return [(b, zero) for b in nil] + [(zero, b) for b in nil]
    if isinstance(spec, UpperTri):
        return [(zero, b) for b in alg.basis()]
    if isinstance(spec, LowerTri):
        return [(b, zero) for b in alg.basis()]
    if isinstance(spec, Pseudocirculant):
        basis = alg.basis()
        m = alg.dim
        cols = [alg.flatten(spec.A * b) for b in basis] + [alg.flatten(-(spec.B * b)) for b in basis]
        rows = [[c[i] for c in cols] for i in range(len(cols[0]))]
        out = []
        for v in nullspace(rows, 2 * m):
            out.append((alg.element(v[:m]), alg.element(v[m:])))
        return out
    raise InvalidSpec(f"unknown algebra spec {type(spec).__name__}")
