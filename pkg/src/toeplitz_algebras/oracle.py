"""Brute-force verification harness.

The dense oracle realizes every block as an explicit matrix (its own
companion-matrix construction for P(M) entries), clears denominators and
multiplies integer arrays with numpy.  It shares no multiplication or
Toeplitz-detection code with the structured implementation.

Each suite draws fresh random instances per trial from a generator
seeded by ``(suite, seed, trial)``; a trial either passes or yields a
failure record whose counterexample is CLI-style JSON that
:func:`replay` re-checks.
"""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from . import algebras, blocktoeplitz, classify, serialize
from .algebras import SinglyGen, coefficient_algebra, order_slice_basis
from .blocktoeplitz import BlockToeplitz, CyclicDiagonal
from .errors import InvalidSpec, UnknownSuite
from .linalg import Span
from .matrixcore import MatrixD, PMElement, PolyModAlgebra
from .scalars import GaussianRational, Poly, X, poly_coprime

COEFF_BOUND = 9


# Dense realization -------------------------------------------------------


def _gauss_parts(z):
    return Fraction(z.re), Fraction(z.im)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _companion_dense(p):
    d = p.degree
    coeffs = [_gauss_parts(p.coeff(r)) for r in range(d)]
    zero = (Fraction(0), Fraction(0))
    M = [[zero] * d for _ in range(d)]
    for i in range(1, d):
        M[i][i - 1] = (Fraction(1), Fraction(0))
    for i in range(d):
        M[i][d - 1] = (-coeffs[i][0], -coeffs[i][1])
    return M


def _dense_matmul(A, B):
    d = len(A)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            re = im = Fraction(0)
            for t in range(d):
                x = _cmul(A[i][t], B[t][j])
                re += x[0]
                im += x[1]
            row.append((re, im))
        out.append(row)
    return out


_COMPANION_POWERS = {}


def _scaled(entries):
    """Integer arrays ``(re, im)`` and a scale for a square array of Fraction pairs."""
    denom = 1
    for row in entries:
        for re, im in row:
            denom = lcm(denom, re.denominator, im.denominator)
    re = np.array([[int(x * denom) for x, _ in row] for row in entries], dtype=object)
    im = np.array([[int(y * denom) for _, y in row] for row in entries], dtype=object)
    return re, im, denom


def _companion_powers(p):
    """``M^0 .. M^(d-1)`` for the companion matrix of ``p``, as scaled integer arrays."""
    key = p.coeffs
    if key not in _COMPANION_POWERS:
        d = p.degree
        M = _companion_dense(p)
        eye = [[(Fraction(int(i == j)), Fraction(0)) for j in range(d)] for i in range(d)]
        powers = [eye]
        for _ in range(1, d):
            powers.append(_dense_matmul(powers[-1], M))
        _COMPANION_POWERS[key] = [_scaled(P) for P in powers]
    return _COMPANION_POWERS[key]


def dense_entry(e):
    """Entry as ``(re, im, scale)``: integer object arrays with the matrix ``(re + i*im) / scale``."""
    if isinstance(e, PMElement):
        p = e.modulus
        d = p.degree
        powers = _companion_powers(p)
        coeffs = [_gauss_parts(e.residue.coeff(r)) for r in range(d)]
        scale = 1
        for (a, b), (_, _, s) in zip(coeffs, powers):
            scale = lcm(scale, a.denominator * s, b.denominator * s)
        re = np.zeros((d, d), dtype=object)
        im = np.zeros((d, d), dtype=object)
        for (a, b), (R, I, s) in zip(coeffs, powers):
            if a == 0 and b == 0:
                continue
            # (a + ib)(R + iI)/s scaled to the common denominator
            fa, fb = int(a * scale / s), int(b * scale / s)
            re = re + fa * R - fb * I
            im = im + fa * I + fb * R
        return re, im, scale
    if isinstance(e, MatrixD):
        d = e.dim
        return _scaled([[_gauss_parts(e[i, j]) for j in range(d)] for i in range(d)])
    raise TypeError(f"cannot realize {type(e).__name__}")


@dataclass
class Dense:
    """Scaled integer realization: the matrix is ``(re + i*im) / scale``."""

    re: np.ndarray
    im: np.ndarray
    scale: int

    def __matmul__(self, other):
        n = self.re.shape[1]
        bound = max(_absmax(self.re), _absmax(self.im)) * max(_absmax(other.re), _absmax(other.im))
        if 2 * n * bound < 2**62:
            a = (self.re.astype(np.int64), self.im.astype(np.int64))
            b = (other.re.astype(np.int64), other.im.astype(np.int64))
        else:
            a = (self.re.astype(object), self.im.astype(object))
            b = (other.re.astype(object), other.im.astype(object))
        re = a[0] @ b[0] - a[1] @ b[1]
        im = a[0] @ b[1] + a[1] @ b[0]
        return Dense(re, im, self.scale * other.scale)

    def same(self, other):
        """Exact equality of the represented matrices."""
        s, t = self.scale, other.scale
        a = (self.re.astype(object) * t, self.im.astype(object) * t)
        b = (other.re.astype(object) * s, other.im.astype(object) * s)
        return np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def _absmax(a):
    return int(np.abs(a).max()) if a.size else 0


def _assemble(grid):
    """Dense matrix from an n x n grid of realized entries."""
    n = len(grid)
    d = grid[0][0][0].shape[0]
    scale = 1
    for row in grid:
        for _, _, s in row:
            scale = lcm(scale, s)
    re = np.zeros((n * d, n * d), dtype=object)
    im = np.zeros((n * d, n * d), dtype=object)
    for i, row in enumerate(grid):
        for j, (R, I, s) in enumerate(row):
            f = scale // s
            re[i * d:(i + 1) * d, j * d:(j + 1) * d] = R * f
            im[i * d:(i + 1) * d, j * d:(j + 1) * d] = I * f
    if max(_absmax(re), _absmax(im)) < 2**62:
        re, im = re.astype(np.int64), im.astype(np.int64)
    return Dense(re, im, scale)


def dense_toeplitz(T):
    """Full ``nd x nd`` realization of a block Toeplitz matrix."""
    n = T.n
    blocks = {j: dense_entry(T[j]) for j in T.offsets()}
    return _assemble([[blocks[i - j] for j in range(n)] for i in range(n)])


def dense_block_matrix(C):
    n = C.n
    return _assemble([[dense_entry(C[i, j]) for j in range(n)] for i in range(n)])


def _block(D, n, d, i, j):
    return D.re[i * d:(i + 1) * d, j * d:(j + 1) * d], D.im[i * d:(i + 1) * d, j * d:(j + 1) * d]


def dense_is_block_toeplitz(D, n, d):
    """Diagonal scan: block ``(i, j)`` equals block ``(i-1, j-1)`` everywhere."""
    for i in range(1, n):
        for j in range(1, n):
            a, b = _block(D, n, d, i, j), _block(D, n, d, i - 1, j - 1)
            if not (np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])):
                return False
    return True


def dense_offsets_support(D, n, d):
    """Set of offsets ``i - j`` carrying a nonzero block."""
    out = set()
    for i in range(n):
        for j in range(n):
            a = _block(D, n, d, i, j)
            if a[0].any() or a[1].any():
                out.add(i - j)
    return out


# Random instances ------------------------------------------------------


def _small(rng, bound=COEFF_BOUND):
    return rng.randint(-bound, bound)


def _small_gauss(rng, bound=3, complex_prob=0.2):
    im = rng.randint(-bound, bound) if rng.random() < complex_prob else 0
    return GaussianRational(rng.randint(-bound, bound), im)


def random_monic(rng, d, kind=None):
    """Random monic ``p`` of degree ``d`` with a known factorization.

    Returns ``(p, factors)``; ``factors`` are monic and multiply to ``p``.
    ``kind`` is ``"split"``, ``"power"`` (X^d), ``"shifted"`` ((X - c)^d),
    ``"squarefree"`` or ``"random"`` (then ``factors == [p]``).
    """
    kind = kind or rng.choice(["split", "split", "power", "shifted", "squarefree", "random"])
    if kind == "power":
        factors = [X] * d
    elif kind == "shifted":
        c = _small_gauss(rng)
        factors = [X - c] * d
    elif kind == "squarefree":
        roots = []
        while len(roots) < d:
            c = _small_gauss(rng)
            if c not in roots:
                roots.append(c)
        factors = [X - c for c in roots]
    elif kind == "split":
        factors = [X - _small_gauss(rng) for _ in range(d)]
    elif kind == "random":
        p = Poly([_small(rng, 4) for _ in range(d)] + [1])
        factors = [p]
    else:
        raise ValueError(f"unknown polynomial kind {kind!r}")
    p = Poly.one()
    for f in factors:
        p = p * f
    return p, factors


def random_residue(rng, d, density=0.7):
    return Poly([_small(rng) if rng.random() < density else 0 for _ in range(d)])


def random_pm(rng, p, density=0.7):
    return PMElement(p, random_residue(rng, p.degree, density))


def random_toeplitz(rng, n, p, zero_prob=0.3):
    zero = PMElement(p, Poly.zero())
    blocks = {}
    for j in range(-(n - 1), n):
        if rng.random() >= zero_prob:
            blocks[j] = random_pm(rng, p)
    return BlockToeplitz(n, blocks, zero=zero)


def random_cyclic(rng, n, p, k=None):
    k = rng.randrange(n) if k is None else k
    top = random_pm(rng, p)
    return CyclicDiagonal(n, k, top, random_pm(rng, p) if k else None)


def random_singly_gen(rng, n, p, factors):
    """Random valid ``B(p_plus, p_minus, chi)`` for ``p`` with the given factorization."""
    pool = list(factors)
    rng.shuffle(pool)
    cut1 = rng.randint(0, len(pool))
    cut2 = rng.randint(cut1, len(pool))
    p_plus, p_minus = Poly.one(), Poly.one()
    for f in pool[:cut1]:
        p_plus = p_plus * f
    for f in pool[cut1:cut2]:
        p_minus = p_minus * f
    q = p // (p_plus * p_minus)
    chi = Poly.one()
    for _ in range(50):
        cand = Poly([_small(rng, 4) for _ in range(max(q.degree, 1))])
        if poly_coprime(cand, p):
            chi = cand
            break
    return SinglyGen(p, p_plus, p_minus, chi, n)


def _combo(rng, elements, zero, bound=COEFF_BOUND):
    acc = zero
    for e in elements:
        c = _small(rng, bound)
        if c:
            acc = acc + e.scale(c)
    return acc


def random_member(spec, seed, algebra=None):
    """Random member built from the family's own slice bases.

    ``seed`` is an integer or a ``random.Random`` instance.
    """
    if not isinstance(spec, algebras.SPEC_TYPES):
        raise InvalidSpec(f"not an algebra spec: {type(spec).__name__}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    alg = coefficient_algebra(spec, algebra)
    zero = alg.zero()
    n = spec.n
    blocks = {0: _combo(rng, alg.basis(), zero)}
    pairs = order_slice_basis(spec, alg)
    for k in range(1, n):
        top, bottom = zero, zero
        for a, b in pairs:
            c = _small(rng)
            if c:
                top = top + a.scale(c)
                bottom = bottom + b.scale(c)
        blocks[k] = top
        blocks[k - n] = bottom
    return BlockToeplitz(n, blocks, zero=zero)


# Suites ------------------------------------------------------------------


@dataclass
class TrialConfig:
    seed: int = 0
    trials: int = 100
    n_range: tuple = (2, 4)
    d_range: tuple = (1, 3)
    suite: str = "prod"


@dataclass
class VerificationReport:
    suite: str
    trials: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite,
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.failures,
            "elapsed": f"{self.elapsed:.3f}",
        }


DEFAULT_IMPL = {
    "compatible": blocktoeplitz.compatible,
    "toeplitz_product": blocktoeplitz.toeplitz_product,
    "cyclic_product": blocktoeplitz.cyclic_product,
    "permute": blocktoeplitz.permute,
    "project_Ek": blocktoeplitz.project_Ek,
    "powers_toeplitz": blocktoeplitz.powers_toeplitz,
    "membership": algebras.membership,
    "bsg_equal": algebras.bsg_equal,
    "bsg_generators": algebras.bsg_generators,
    "classify_maximal": classify.classify_maximal,
    "extension_space": classify.extension_space,
}


def _pair_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    mode = rng.randrange(4)
    if mode == 0:
        A, B = random_toeplitz(rng, n, p), random_toeplitz(rng, n, p)
    elif mode == 1:
        spec = random_singly_gen(rng, n, p, factors)
        A, B = random_member(spec, rng), random_member(spec, rng)
    elif mode == 2:
        # a member pair with one off-diagonal block perturbed
        spec = random_singly_gen(rng, n, p, factors)
        A, B = random_member(spec, rng), random_member(spec, rng)
        j = rng.choice([j for j in range(-(n - 1), n) if j != 0])
        blocks = dict(B.blocks)
        blocks[j] = blocks[j] + random_pm(rng, p, density=0.4)
        B = BlockToeplitz(n, blocks)
    else:
        k = rng.randrange(1, n)
        A = random_cyclic(rng, n, p, k).to_toeplitz()
        B = random_cyclic(rng, n, p, rng.randrange(1, n)).to_toeplitz()
    return {"A": A, "B": B}


def _encode_pair(inst):
    return {"A": serialize.toeplitz_to_json(inst["A"]), "B": serialize.toeplitz_to_json(inst["B"])}


def _decode_pair(obj):
    return {"A": serialize.toeplitz_from_json(obj["A"]), "B": serialize.toeplitz_from_json(obj["B"])}


def _check_prod(inst, impl):
    A, B = inst["A"], inst["B"]
    DA, DB = dense_toeplitz(A), dense_toeplitz(B)
    expected = dense_is_block_toeplitz(DA @ DB, A.n, A.d)
    got = impl["compatible"](A, B)
    if got != expected:
        return f"compatible returned {got}, dense diagonal scan says {expected}"
    if expected:
        C = impl["toeplitz_product"](A, B)
        if not dense_toeplitz(C).same(DA @ DB):
            return "toeplitz_product disagrees with the dense product"
    return None


def _commute_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    spec = random_singly_gen(rng, n, p, factors)
    if rng.random() < 0.25:
        return _pair_instance(rng, n, d)
    return {"A": random_member(spec, rng), "B": random_member(spec, rng)}


def _check_commute(inst, impl):
    A, B = inst["A"], inst["B"]
    if not impl["compatible"](A, B):
        return None
    DA, DB = dense_toeplitz(A), dense_toeplitz(B)
    if not (DA @ DB).same(DB @ DA):
        return "compatible pair does not commute"
    return None


def _cd_instance(rng, n, d):
    p, _ = random_monic(rng, d)
    return {"D": random_cyclic(rng, n, p), "E": random_cyclic(rng, n, p)}


def _encode_cd(inst):
    return {"D": serialize.cyclic_to_json(inst["D"]), "E": serialize.cyclic_to_json(inst["E"])}


def _decode_cyclic(obj):
    p = serialize.poly_from_json(obj["p"])
    top = PMElement(p, serialize.poly_from_json(obj["top"]))
    bottom = PMElement(p, serialize.poly_from_json(obj["bottom"])) if "bottom" in obj else None
    return CyclicDiagonal(obj["n"], obj["k"], top, bottom)


def _decode_cd(obj):
    return {"D": _decode_cyclic(obj["D"]), "E": _decode_cyclic(obj["E"])}


def _check_cd(inst, impl):
    D, E = inst["D"], inst["E"]
    n, d = D.n, D.d
    order, C = impl["cyclic_product"](D, E)
    if order != (D.k + E.k) % n:
        return f"order {order} != (k + l) mod n = {(D.k + E.k) % n}"
    dense = dense_toeplitz(D.to_toeplitz()) @ dense_toeplitz(E.to_toeplitz())
    if not dense_block_matrix(C).same(dense):
        return "case formulas disagree with the dense product"
    allowed = {order, order - n}
    if not dense_offsets_support(dense, n, d) <= allowed:
        return "dense product leaves the order-(k+l) cyclic diagonal"
    return None


def _spec_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    spec = random_singly_gen(rng, n, p, factors)
    return {"spec": spec, "A": random_member(spec, rng), "B": random_member(spec, rng)}


def _encode_spec_pair(inst):
    out = _encode_pair(inst)
    out["spec"] = serialize.spec_to_json(inst["spec"])
    return out


def _decode_spec_pair(obj):
    out = _decode_pair(obj)
    out["spec"] = serialize.spec_from_json(obj["spec"])
    return out


def _check_closure(inst, impl):
    spec, A, B = inst["spec"], inst["A"], inst["B"]
    for name, T in (("A", A), ("B", B)):
        if not impl["membership"](spec, T):
            return f"sampled {name} is not a member"
    DA, DB = dense_toeplitz(A), dense_toeplitz(B)
    prod = DA @ DB
    if not dense_is_block_toeplitz(prod, A.n, A.d):
        return "product of members is not block Toeplitz"
    if not prod.same(DB @ DA):
        return "members do not commute"
    C = impl["toeplitz_product"](A, B)
    if not dense_toeplitz(C).same(prod):
        return "toeplitz_product disagrees with the dense product"
    if not impl["membership"](spec, C):
        return "product of members is not a member"
    return None


def _slice_span(gens, alg, impl):
    vectors = []
    for D in impl["extension_space"](gens, 1, alg):
        vectors.append(alg.coords(D.top) + alg.coords(D.bottom))
    return Span(2 * alg.dim, vectors)


def _equal_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    s1 = random_singly_gen(rng, n, p, factors)
    if rng.random() < 0.5:
        w = Poly([_small(rng, 4) for _ in range(d)])
        chi2 = s1.chi + s1.q * w
        if not poly_coprime(chi2, p):
            chi2 = s1.chi
        s2 = SinglyGen(p, s1.p_plus, s1.p_minus, chi2, n)
    else:
        s2 = random_singly_gen(rng, n, p, factors)
    return {"s1": s1, "s2": s2}


def _encode_specs(inst):
    return {k: serialize.spec_to_json(v) for k, v in inst.items()}


def _decode_specs(obj):
    return {k: serialize.spec_from_json(v) for k, v in obj.items()}


def _check_equal(inst, impl):
    s1, s2 = inst["s1"], inst["s2"]
    alg = PolyModAlgebra(s1.p)
    n = max(s1.n, 2)
    g1 = impl["bsg_generators"](s1, n)
    g2 = impl["bsg_generators"](s2, n)
    extensional = _slice_span(g1, alg, impl) == _slice_span(g2, alg, impl)
    got = impl["bsg_equal"](s1, s2)
    if got != extensional:
        return f"bsg_equal returned {got}, slice spaces equal: {extensional}"
    return None


def _classify_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    return {"spec": random_singly_gen(rng, max(n, 2), p, factors), "mix": rng.randrange(1 << 30)}


def _encode_classify(inst):
    return {"spec": serialize.spec_to_json(inst["spec"]), "mix": inst["mix"]}


def _decode_classify(obj):
    return {"spec": serialize.spec_from_json(obj["spec"]), "mix": obj["mix"]}


def _mixed(gens, rng):
    """Unitriangular recombination: same span, less structured generators."""
    out = []
    for i, G in enumerate(gens):
        acc = G
        for H in gens[i + 1:]:
            c = rng.randint(-2, 2)
            if c:
                acc = acc + H.scale(c)
        out.append(acc)
    rng.shuffle(out)
    return out


def _check_classify(inst, impl):
    spec = inst["spec"]
    gens = _mixed(impl["bsg_generators"](spec), random.Random(inst["mix"]))
    report = impl["classify_maximal"](gens)
    if not impl["bsg_equal"](report.spec, spec):
        return f"recovered {report.spec} is not equal to the input algebra"
    return None


def _action_instance(rng, n, d):
    inst = _spec_instance(rng, n, d)
    sigma = list(range(1, inst["spec"].n))
    rng.shuffle(sigma)
    inst["sigma"] = sigma
    inst["k"] = rng.randrange(inst["spec"].n)
    return inst


def _encode_action(inst):
    out = _encode_spec_pair(inst)
    out["sigma"] = inst["sigma"]
    out["k"] = inst["k"]
    return out


def _decode_action(obj):
    out = _decode_spec_pair(obj)
    out["sigma"] = obj["sigma"]
    out["k"] = obj["k"]
    return out


def _check_action(inst, impl):
    spec, A, B, sigma, k = inst["spec"], inst["A"], inst["B"], inst["sigma"], inst["k"]
    PA, PB = impl["permute"](A, sigma), impl["permute"](B, sigma)
    if not impl["membership"](spec, PA):
        return "permuted member is not a member"
    prod = dense_toeplitz(PA) @ dense_toeplitz(PB)
    if not dense_is_block_toeplitz(prod, A.n, A.d):
        return "product of permuted members is not block Toeplitz"
    Ek = impl["project_Ek"](A, k).to_toeplitz()
    if not impl["membership"](spec, Ek):
        return f"E_{k} of a member is not a member"
    return None


def _powers_instance(rng, n, d):
    p, factors = random_monic(rng, d)
    mode = rng.randrange(3)
    if mode == 0:
        A = random_cyclic(rng, n, p).to_toeplitz()
    elif mode == 1:
        A = random_member(random_singly_gen(rng, n, p, factors), rng)
    else:
        A = random_toeplitz(rng, n, p)
    return {"A": A}


def _encode_single(inst):
    return {"A": serialize.toeplitz_to_json(inst["A"])}


def _decode_single(obj):
    return {"A": serialize.toeplitz_from_json(obj["A"])}


def _check_powers(inst, impl):
    A = inst["A"]
    n, d = A.n, A.d
    D = dense_toeplitz(A)
    P = D
    all_toeplitz = True
    for _ in range(n + 1):
        if not dense_is_block_toeplitz(P, n, d):
            all_toeplitz = False
            break
        P = P @ D
    cyclic = sum(1 for j in A.offsets() if not A[j].is_zero() and j not in _cyclic_offsets(A)) == 0
    if cyclic and not all_toeplitz:
        return "a power of a cyclic diagonal is not block Toeplitz"
    got = impl["powers_toeplitz"](A)
    if got != all_toeplitz:
        return f"powers_toeplitz returned {got}, dense powers up to n+1 say {all_toeplitz}"
    return None


def _cyclic_offsets(A):
    nz = [j for j in A.offsets() if not A[j].is_zero()]
    if not nz:
        return set()
    k = nz[0] % A.n
    return {k, k - A.n} if k else {0}


SUITES = {
    "prod": (_pair_instance, _check_prod, _encode_pair, _decode_pair),
    "commute": (_commute_instance, _check_commute, _encode_pair, _decode_pair),
    "cdprod": (_cd_instance, _check_cd, _encode_cd, _decode_cd),
    "closure": (_spec_instance, _check_closure, _encode_spec_pair, _decode_spec_pair),
    "equal": (_equal_instance, _check_equal, _encode_specs, _decode_specs),
    "classify": (_classify_instance, _check_classify, _encode_classify, _decode_classify),
    "action": (_action_instance, _check_action, _encode_action, _decode_action),
    "powers": (_powers_instance, _check_powers, _encode_single, _decode_single),
}


def _suite(name):
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return SUITES[name]


def trial_rng(suite, seed, trial):
    return random.Random(f"{suite}:{seed}:{trial}")


def iter_trials(config):
    """Yield ``(trial, n, d, instance)`` for every trial of ``config``.

    Trial t always sees the same instance for a given suite and seed.
    """
    make = _suite(config.suite)[0]
    n_lo, n_hi = config.n_range
    d_lo, d_hi = config.d_range
    for t in range(config.trials):
        rng = trial_rng(config.suite, config.seed, t)
        n = rng.randint(max(n_lo, 2), max(n_hi, 2))
        d = rng.randint(max(d_lo, 1), max(d_hi, 1))
        yield t, n, d, make(rng, n, d)


def run_check(suite, inst, impl=None):
    """Apply one suite check; returns the failure message or ``None``."""
    _, check, _, _ = _suite(suite)
    try:
        return check(inst, impl or DEFAULT_IMPL)
    except Exception as err:  # a crash is a failure too
        return f"{type(err).__name__}: {err}"


def run_suite(config, overrides=None):
    """Run ``config.trials`` independent trials of ``config.suite``.

    ``overrides`` replaces library functions by name (e.g. a corrupted
    ``compatible``) for harness self-tests.
    """
    encode = _suite(config.suite)[2]
    impl = dict(DEFAULT_IMPL, **(overrides or {}))
    report = VerificationReport(config.suite, config.trials)
    start = time.perf_counter()
    for t, n, d, inst in iter_trials(config):
        msg = run_check(config.suite, inst, impl)
        if msg is not None:
            report.failures.append({"trial": t, "n": n, "d": d, "detail": msg, "counterexample": encode(inst)})
    report.elapsed = time.perf_counter() - start
    report.failures.sort(key=lambda f: f["trial"])
    return report


def replay(suite, counterexample, overrides=None):
    """Re-run one suite check on a serialized counterexample; ``None`` means it passes."""
    _, check, _, decode = _suite(suite)
    impl = dict(DEFAULT_IMPL, **(overrides or {}))
    return check(decode(counterexample), impl)
