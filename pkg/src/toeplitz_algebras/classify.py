"""Classification and maximality of algebras with entries in P(M).

Given generators of a commutative algebra of block Toeplitz matrices over
P(M), the pipeline computes the divisors ``s_plus``, ``s_minus`` (gcd of
the upper, resp. lower, offsets together with ``p``), a generic element
whose reduced offsets are coprime to ``p / s_plus`` and ``p / s_minus``,
and the linking polynomial ``xi = a_1 * gamma_1`` modulo
``p / (s_plus s_minus)``, where ``gamma_1`` inverts ``a_(1-n)``.

Maximality is decided by exact linear algebra: an algebra is maximal iff
every cyclic diagonal compatible with all of it already lies in it.
"""

from dataclasses import dataclass, field

from .algebras import SinglyGen, membership, schur_generators, slice_basis
from .blocktoeplitz import BlockToeplitz, CyclicDiagonal, compatible, toeplitz_product
from .errors import (
    InvalidParameters,
    NoGenericElement,
    NotClosed,
    NotCoprime,
    NotMaximalInput,
    OffsetGcdMismatch,
    OrderOutOfRange,
    PreconditionError,
    ShapeMismatch,
    XiInconsistent,
)
from .linalg import Span, nullspace
from .matrixcore import OpqAlgebra, PMElement, PolyModAlgebra, algebra_for, companion, pm_is_invertible
from .scalars import ZERO, Poly, X, exact_div, poly_coprime, poly_gcd_many, poly_mod_inverse, poly_rem


def _check_uniform(gens):
    if not gens:
        raise ShapeMismatch("empty generator set")
    n, sig = gens[0].n, gens[0].entry_signature
    for G in gens:
        if not isinstance(G, BlockToeplitz) or G.n != n or G.entry_signature != sig:
            raise ShapeMismatch("generators must share n, d and entry type")
    return n


def closure_check(gens):
    """Pairwise compatibility of the generators.

    Compatibility is bilinear, and products of compatible cyclic diagonals
    with commuting entries stay compatible, so this decides whether the
    generated algebra consists of block Toeplitz matrices.
    """
    _check_uniform(gens)
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            if not compatible(gens[a], gens[b]):
                return False
    return True


def _vector(T, alg):
    out = []
    for j in T.offsets():
        out.extend(alg.coords(T[j]))
    return out


def algebra_span(gens, algebra=None):
    """Basis (as BlockToeplitz) of the algebra generated by ``gens``."""
    _check_uniform(gens)
    if not closure_check(gens):
        raise NotClosed("generators are not pairwise compatible")
    alg = algebra or algebra_for(gens[0][0])
    n = gens[0].n
    span = Span((2 * n - 1) * alg.dim)
    basis = []
    for G in gens:
        if span.add(_vector(G, alg)):
            basis.append(G)
    i = 0
    while i < len(basis):
        for j in range(i + 1):
            for P in (toeplitz_product(basis[i], basis[j]), toeplitz_product(basis[j], basis[i])):
                if span.add(_vector(P, alg)):
                    basis.append(P)
        i += 1
    return basis


@dataclass
class SPlusMinus:
    s_plus: Poly
    s_minus: Poly
    genericity: str  # "generic", "upper" or "lower"


def _p_of(gens):
    e = gens[0][0]
    if not isinstance(e, PMElement):
        raise ShapeMismatch("classification needs entries in P(M)")
    return e.modulus


def compute_s_pm(gens):
    """Per-offset gcds of the residues together with ``p``; they must agree."""
    if not closure_check(gens):
        raise NotClosed("generators are not pairwise compatible")
    p = _p_of(gens)
    n = gens[0].n
    upper_zero = all(G[j].is_zero() for G in gens for j in range(1, n))
    lower_zero = all(G[-j].is_zero() for G in gens for j in range(1, n))
    if upper_zero and lower_zero:
        raise NotMaximalInput("generators are all diagonal")
    if upper_zero:
        return SPlusMinus(p, Poly.one(), "upper")
    if lower_zero:
        return SPlusMinus(Poly.one(), p, "lower")

    def offset_gcd(j):
        return poly_gcd_many([G[j].residue for G in gens] + [p])

    ups = [offset_gcd(j) for j in range(1, n)]
    downs = [offset_gcd(-j) for j in range(1, n)]
    if any(g != ups[0] for g in ups):
        raise OffsetGcdMismatch(f"upper offset gcds differ: {[str(g) for g in ups]}")
    if any(g != downs[0] for g in downs):
        raise OffsetGcdMismatch(f"lower offset gcds differ: {[str(g) for g in downs]}")
    return SPlusMinus(ups[0], downs[0], "generic")


def _reduced(T, j, s):
    a = exact_div(T[j].residue, s)
    if a is None:
        raise NotMaximalInput(f"offset {j} is not a multiple of {s}")
    return a


def _is_generic(A, s_plus, s_minus, p):
    n = A.n
    up, down = p // s_plus, p // s_minus
    for j in range(1, n):
        a = exact_div(A[j].residue, s_plus)
        b = exact_div(A[-j].residue, s_minus)
        if a is None or b is None:
            return False
        if not _coprime_mod(a, up) or not _coprime_mod(b, down):
            return False
    return True


def _coprime_mod(a, m):
    # coprimality with a constant modulus is automatic
    return m.degree < 1 or poly_coprime(a, m)


def find_generic_element(gens, s_plus, s_minus, bound=None):
    """Combination ``sum c**i * gens[i]`` (c = 1, 2, ...) with all reduced offsets generic.

    The coefficient vectors lie on the moment curve, which meets each of
    the finitely many proper "non-generic" subspaces in fewer than
    ``len(gens)`` points.
    """
    _check_uniform(gens)
    p = _p_of(gens)
    if bound is None:
        bound = len(gens) * p.degree * 8
    for c in range(1, bound + 1):
        A = gens[0]
        w = 1
        for G in gens[1:]:
            w *= c
            A = A + G.scale(w)
        if _is_generic(A, s_plus, s_minus, p):
            return A
    raise NoGenericElement(f"no generic element among {bound} candidates")


def _coprime_lift(a, step, p):
    """A representative ``a + c*step`` (c = 0, 1, ..., deg p) coprime to ``p``."""
    for c in range(p.degree + 1):
        cand = a + step * c
        if poly_coprime(cand, p):
            return cand
    raise NotCoprime(f"{a} has no representative modulo {step} coprime to {p}")


def compute_xi(A, s_plus, s_minus, p):
    """``xi = a_1 * gamma_1 mod dhat`` with ``p | gamma_1 a_(1-n) - 1`` and ``dhat = p/(s+ s-)``.

    Every ``xi_i`` (i >= 1) must agree with ``xi_1`` modulo ``dhat``; a
    constant ``dhat`` gives ``xi = 1``.
    """
    n = A.n
    dhat = exact_div(p, s_plus * s_minus)
    if dhat is None:
        raise XiInconsistent(f"s_plus*s_minus does not divide {p}")
    down = p // s_minus
    xis = []
    for i in range(1, n):
        a_top = _reduced(A, i, s_plus)
        a_bot = _coprime_lift(_reduced(A, i - n, s_minus), down, p)
        gamma = poly_mod_inverse(a_bot, p)
        xis.append(poly_rem(a_top * gamma, dhat) if dhat.degree >= 1 else Poly.one())
    for i, xi in enumerate(xis[1:], start=2):
        if xi != xis[0]:
            raise XiInconsistent(f"xi_{i} = {xi} differs from xi_1 = {xis[0]} modulo {dhat}")
    return xis[0]


@dataclass
class ClassificationReport:
    spec: SinglyGen
    s_plus: Poly
    s_minus: Poly
    xi: Poly
    generic_element: BlockToeplitz = None
    genericity: str = "generic"
    basis: list = field(default_factory=list, repr=False)


def classify_maximal(gens, bound=None):
    """Return the singly generated algebra spanned by ``gens``.

    Non-generic inputs classify as the upper (``B(p, 1, 1)``) or lower
    (``B(1, p, 1)``) triangular algebra.
    """
    n = _check_uniform(gens)
    if n < 2:
        raise InvalidParameters("classification needs n >= 2")
    p = _p_of(gens)
    if not closure_check(gens):
        raise NotClosed("generators are not pairwise compatible")
    basis = algebra_span(gens)
    try:
        s = compute_s_pm(basis)
        if s.genericity == "upper":
            spec = SinglyGen(p, p, Poly.one(), Poly.one(), n)
            A, xi = None, Poly.one()
        elif s.genericity == "lower":
            spec = SinglyGen(p, Poly.one(), p, Poly.one(), n)
            A, xi = None, Poly.one()
        else:
            A = find_generic_element(basis, s.s_plus, s.s_minus, bound)
            xi = compute_xi(A, s.s_plus, s.s_minus, p)
            dhat = p // (s.s_plus * s.s_minus)
            chi = _coprime_lift(xi, dhat, p) if dhat.degree >= 1 else Poly.one()
            spec = SinglyGen(p, s.s_plus, s.s_minus, chi, n)
    except NotCoprime as err:
        raise NotMaximalInput(str(err)) from err
    for G in basis:
        if not membership(spec, G):
            raise NotMaximalInput("a generator falls outside the recovered algebra")
    return ClassificationReport(spec, s.s_plus, s.s_minus, xi, A, s.genericity, basis)


def extension_space(gens, k, algebra=None):
    """Basis of the order-k cyclic diagonals compatible with every generator."""
    n = _check_uniform(gens)
    if not 0 <= k <= n - 1:
        raise OrderOutOfRange(f"order {k} outside 0..{n - 1}")
    if not closure_check(gens):
        raise NotClosed("generators are not pairwise compatible")
    alg = algebra or algebra_for(gens[0][0])
    basis = alg.basis()
    if k == 0:
        return [CyclicDiagonal(n, 0, b) for b in basis]
    m = alg.dim
    rows = []
    for G in gens:
        for j in range(1, n):
            lo, hi = G[j - n], G[j]
            # D_k * G_{j-n} - D_{k-n} * G_j == 0
            cols = [alg.flatten(b * lo) for b in basis] + [alg.flatten(-(b * hi)) for b in basis]
            rows.extend([c[i] for c in cols] for i in range(len(cols[0])))
    out = []
    for v in nullspace(rows, 2 * m):
        out.append(CyclicDiagonal(n, k, alg.element(v[:m]), alg.element(v[m:])))
    return out


def is_maximal(gens, algebra=None):
    """Whether the algebra generated by ``gens`` is maximal.

    True iff for every order k (the diagonal included) each compatible
    cyclic diagonal already lies in the generated algebra.
    """
    alg = algebra or algebra_for(gens[0][0])
    basis = algebra_span(gens, alg)
    n = basis[0].n
    span = Span((2 * n - 1) * alg.dim, [_vector(B, alg) for B in basis])
    for k in range(n):
        for D in extension_space(basis, k, alg):
            if not span.contains(_vector(D.to_toeplitz(), alg)):
                return False
    return True


def maximality_witness(gens, algebra=None):
    """First compatible cyclic diagonal outside the generated algebra, or ``None``."""
    alg = algebra or algebra_for(gens[0][0])
    basis = algebra_span(gens, alg)
    n = basis[0].n
    span = Span((2 * n - 1) * alg.dim, [_vector(B, alg) for B in basis])
    for k in range(n):
        for D in extension_space(basis, k, alg):
            if not span.contains(_vector(D.to_toeplitz(), alg)):
                return D
    return None


def assert_schur_maximal(p, q, n):
    """Check the Schur algebra in T_n[O_{p,q}] is maximal; requires |p - q| <= 1."""
    if abs(p - q) > 1:
        raise PreconditionError(f"O_{{{p},{q}}} maximality needs |p - q| <= 1")
    return is_maximal(schur_generators(p, q, n), OpqAlgebra(p, q))


# p = X^m ---------------------------------------------------------------


@dataclass(frozen=True)
class Stratum:
    """One family of maximal algebras over P(M) with ``p = X^m``."""

    m: int
    k_plus: int
    k_minus: int
    rigid: bool
    param_dim: int
    pseudocirculant: bool

    def representative(self, n):
        """``B(X^k+, X^k-, chi)`` with a fixed admissible chi (1 for rigid strata)."""
        p = X ** self.m
        if self.rigid:
            chi = Poly.one()
        else:
            chi = Poly(list(range(1, self.param_dim + 1)))
        return SinglyGen(p, X ** self.k_plus, X ** self.k_minus, chi, n)

    def to_json(self):
        return {
            "k_plus": self.k_plus,
            "k_minus": self.k_minus,
            "rigid": self.rigid,
            "param_dim": self.param_dim,
            "pseudocirculant": self.pseudocirculant,
        }


def enumerate_xm(m, n):
    """All strata of maximal algebras for ``p = X^m``.

    ``k_plus + k_minus < m`` gives a family parametrized by chi of degree
    ``< m - k_plus - k_minus`` with nonzero constant term; ``k_plus +
    k_minus == m`` gives a single algebra.  A stratum is pseudocirculant
    iff some member has an invertible off-diagonal entry, which over
    ``X^m`` happens iff ``min(k_plus, k_minus) == 0``.
    """
    if m < 1 or n < 2:
        raise InvalidParameters("need m >= 1 and n >= 2")
    out = []
    for total in range(m + 1):
        for kp in range(total, -1, -1):
            km = total - kp
            rigid = total == m
            out.append(Stratum(m, kp, km, rigid, 0 if rigid else m - total, min(kp, km) == 0))
    return out


def has_invertible_offdiagonal(spec, bound=None):
    """Whether some member of ``spec`` has an invertible off-diagonal entry.

    Non-invertible residues form a finite union of hyperplanes (one per
    root of ``p``), so a moment-curve combination of the slice basis is
    invertible as soon as any member is.
    """
    pairs = slice_basis(spec)
    if bound is None:
        bound = 2 * len(pairs) * spec.d + 2
    for side in (0, 1):
        for c in range(1, bound + 1):
            res = Poly.zero()
            w = 1
            for pair in pairs:
                res = res + pair[side].residue * w
                w *= c
            if poly_coprime(res, spec.p):
                return True
    return False


def xm_obstruction(m, k_plus, k_minus, n):
    """Exhibit why the rigid algebra ``B(X^k+, X^k-, 1)`` over ``X^m`` is not pseudocirculant.

    ``Y`` (``M^k+`` on offsets >= 0) and ``Y'`` (``M^k-`` on offsets <= 0)
    are members, so any ``F(A, B)`` containing the algebra needs
    ``A M^k+ = 0`` and ``B M^k- = 0``.  Both solution spaces consist of
    noninvertible elements that annihilate a common kernel vector of M,
    so ``ker A  &  ker B != {0}``.
    """
    if k_plus + k_minus != m or not (0 < k_plus < m):
        raise InvalidParameters("obstruction applies to rigid strata with 0 < k_plus, k_minus < m")
    p = X ** m
    spec = SinglyGen(p, X ** k_plus, X ** k_minus, Poly.one(), n)
    zero = PMElement(p, Poly.zero())
    Y = BlockToeplitz(n, {j: PMElement(p, X ** k_plus) for j in range(0, n)}, zero=zero)
    Yp = BlockToeplitz(n, {-j: PMElement(p, X ** k_minus) for j in range(0, n)}, zero=zero)
    alg = PolyModAlgebra(p)

    def annihilator(power):
        target = PMElement(p, X ** power)
        cols = [alg.flatten(b * target) for b in alg.basis()]
        rows = [[c[i] for c in cols] for i in range(m)]
        return [alg.element(v) for v in nullspace(rows, m)]

    ann_A, ann_B = annihilator(k_plus), annihilator(k_minus)
    M = companion(p)
    kernel = nullspace([list(r) for r in M.rows], m)
    vec = kernel[0]

    def kills(e):
        mat = e.to_matrix()
        return all(sum((mat[i, j] * vec[j] for j in range(m)), ZERO).is_zero() for i in range(m))

    return {
        "Y_member": membership(spec, Y),
        "Y_prime_member": membership(spec, Yp),
        "A_candidates_noninvertible": all(not pm_is_invertible(a) for a in ann_A),
        "B_candidates_noninvertible": all(not pm_is_invertible(b) for b in ann_B),
        "common_kernel_vector": vec,
        "kernel_shared": all(kills(e) for e in ann_A + ann_B) and any(not x.is_zero() for x in vec),
        "Y": Y,
        "Y_prime": Yp,
    }
