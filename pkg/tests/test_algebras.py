import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toeplitz_algebras.algebras import (
    INFINITY,
    DiagonalTuple,
    LowerTri,
    Pseudocirculant,
    ScalarCirculant,
    SchurOpq,
    SinglyGen,
    UpperTri,
    bsg_equal,
    bsg_generators,
    diagonal_tuple_classify,
    fab_equal,
    kernels_meet_trivially,
    membership,
    membership_witness,
    order_slice_basis,
    pseudocirculant_pair,
    schur_generators,
    slice_basis,
)
from toeplitz_algebras.blocktoeplitz import BlockToeplitz, compatible, toeplitz_product
from toeplitz_algebras.errors import Inconsistent, InvalidSpec, ModulusMismatch, ShapeMismatch
from toeplitz_algebras.matrixcore import MatrixD, PMElement
from toeplitz_algebras.oracle import random_member, random_monic, random_singly_gen
from toeplitz_algebras.scalars import Poly, X, gr

ONE = Poly.one()
P2 = X**2


def pm(r, p=P2):
    return PMElement(p, r if isinstance(r, Poly) else Poly.const(r))


def toeplitz(n, blocks, p=P2):
    return BlockToeplitz(n, {j: pm(v, p) for j, v in blocks.items()}, zero=pm(0, p))


def test_singly_gen_validation():
    with pytest.raises(InvalidSpec):
        SinglyGen(Poly([1, 2]), ONE, ONE, ONE, 2)
    with pytest.raises(InvalidSpec):
        SinglyGen(P2, X + 1, ONE, ONE, 2)
    with pytest.raises(InvalidSpec):
        SinglyGen(P2, X, ONE, X, 2)
    s = SinglyGen(P2, X, ONE, 1 + X, 2)
    assert s.q == X and s.chi == ONE and s.d == 2


def test_membership_examples():
    s = SinglyGen(P2, X, ONE, ONE, 2)
    assert membership(s, toeplitz(2, {1: X, -1: 1}))
    assert not membership(s, toeplitz(2, {1: X, -1: X}))
    assert membership_witness(s, toeplitz(2, {1: X, -1: X})) == "q does not divide a_i - chi*a_(i-n) at offset i=1"
    assert "multiple of p_plus" in membership_witness(s, toeplitz(2, {1: 1, -1: 1}))


def test_diagonal_is_member_of_every_family():
    specs = [
        SinglyGen(P2, X, ONE, ONE, 3),
        SinglyGen(X**3 - X, X, X + 1, ONE, 3),
        UpperTri(3, 2),
        LowerTri(3, 2),
    ]
    for s in specs:
        assert membership(s, toeplitz(3, {0: 1 + X}, s.p if isinstance(s, SinglyGen) else P2))
    assert membership(DiagonalTuple((gr(2), INFINITY), 3), BlockToeplitz(3, {0: MatrixD.diagonal([1, 5])}))
    assert membership(SchurOpq(1, 1, 3), BlockToeplitz(3, {0: MatrixD.identity(2)}))


def test_shape_mismatch_is_reported():
    s = SinglyGen(P2, X, ONE, ONE, 2)
    with pytest.raises(ShapeMismatch):
        membership(s, toeplitz(3, {0: 1}))


def test_scalar_circulant_convention():
    s = ScalarCirculant(2, 3)
    p = X
    T = BlockToeplitz(3, {1: pm(1, p), -2: pm(2, p), 2: pm(3, p), -1: pm(6, p)}, zero=pm(0, p))
    assert membership(s, T)
    assert not membership(ScalarCirculant(Fraction(1, 2), 3), T)
    upper = BlockToeplitz(3, {-1: pm(4, p), 0: pm(1, p)}, zero=pm(0, p))
    assert membership(ScalarCirculant(INFINITY, 3), upper)


def test_fab_equal_examples():
    A, B = MatrixD([[gr(2)]]), MatrixD([[gr(1)]])
    assert fab_equal(A, B, A.scale(3), B.scale(3))
    assert fab_equal(A, B, MatrixD([[gr(2)]]), MatrixD([[gr(1)]]))
    assert not fab_equal(A, B, MatrixD([[gr(3)]]), MatrixD([[gr(1)]]))
    Z = MatrixD([[gr(1), gr(0)], [gr(0), gr(0)]])
    with pytest.raises(InvalidSpec):
        fab_equal(Z, Z, Z, Z)
    with pytest.raises(InvalidSpec):
        Pseudocirculant(Z, Z, 2)


def test_kernel_condition():
    N = pm(X)
    assert not kernels_meet_trivially(N, N)
    assert kernels_meet_trivially(N, pm(1))


def test_bsg_equal_examples():
    assert bsg_equal(SinglyGen(P2, X, ONE, ONE, 2), SinglyGen(P2, X, ONE, 1 + X, 2))
    assert not bsg_equal(SinglyGen(P2, X, ONE, ONE, 2), SinglyGen(P2, ONE, X, ONE, 2))
    assert bsg_equal(SinglyGen(P2, P2, ONE, 1 + X, 2), SinglyGen(P2, P2, ONE, Poly.const(3), 2))
    assert not bsg_equal(SinglyGen(P2, ONE, ONE, ONE, 2), SinglyGen(P2, ONE, ONE, 1 + X, 2))
    with pytest.raises(ModulusMismatch):
        bsg_equal(SinglyGen(P2, ONE, ONE, ONE, 2), SinglyGen(X**3, ONE, ONE, ONE, 2))


def test_slice_dimension_equals_d():
    # (a_1, a_-1) with a_1 in span(1) (times X), a_-1 free, a_1(0) = a_-1(0): dimension 2
    assert len(slice_basis(SinglyGen(P2, X, ONE, ONE, 2))) == 2
    for spec in (
        SinglyGen(X**3, ONE, ONE, 1 + X, 2),
        SinglyGen(X**3, X, X, ONE, 2),
        SinglyGen(X**3, X**3, ONE, ONE, 2),
        SinglyGen((X - 1) * (X + 2) * X, X - 1, X, ONE, 2),
    ):
        assert len(slice_basis(spec)) == spec.d


def test_generators_contain_E_and_are_members():
    s = SinglyGen(P2, X, ONE, ONE, 2)
    gens = bsg_generators(s)
    E = toeplitz(2, {1: X, -1: 1})
    assert E in gens
    assert all(membership(s, G) for G in gens)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(1, 4))
def test_generated_algebra_is_closed_and_commutative(seed, n, d):
    rng = random.Random(seed)
    p, factors = random_monic(rng, d)
    spec = random_singly_gen(rng, n, p, factors)
    A, B = random_member(spec, rng), random_member(spec, rng)
    assert membership(spec, A) and membership(spec, B)
    assert compatible(A, B)
    C = toeplitz_product(A, B)
    assert C == toeplitz_product(B, A)
    assert membership(spec, C)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(1, 3))
def test_pseudocirculant_pair_describes_the_same_algebra(seed, n, d):
    rng = random.Random(seed)
    p, factors = random_monic(rng, d, kind="squarefree")
    spec = random_singly_gen(rng, n, p, factors)
    pair = pseudocirculant_pair(spec)
    assert pair is not None  # square-free p gives coprime p_plus, p_minus
    F = Pseudocirculant(pair[0], pair[1], n)
    for _ in range(3):
        T = random_member(spec, rng)
        assert membership(F, T)
        U = random_member(F, rng)
        assert membership(spec, U)


def test_pseudocirculant_pair_absent_for_shared_factor():
    assert pseudocirculant_pair(SinglyGen(X**3, X, X, ONE, 2)) is None


def test_diagonal_tuple_classify_examples():
    d1 = lambda c: MatrixD([[gr(c)]])  # noqa: E731
    gens = [BlockToeplitz(3, {1: d1(1), -2: d1(2), 2: d1(3), -1: d1(6)})]
    assert diagonal_tuple_classify(gens).alphas == (gr(2),)
    upper = [BlockToeplitz(3, {-1: d1(1), 0: d1(1)})]
    assert diagonal_tuple_classify(upper).alphas == (INFINITY,)
    mixed = [BlockToeplitz(2, {1: d1(1), -1: d1(1)}), BlockToeplitz(2, {1: d1(1), -1: d1(2)})]
    with pytest.raises(Inconsistent):
        diagonal_tuple_classify(mixed)


def test_diagonal_tuple_slots_are_independent():
    spec = DiagonalTuple((gr(2), INFINITY), 2)
    T = BlockToeplitz(2, {1: MatrixD.diagonal([1, 0]), -1: MatrixD.diagonal([2, 7])})
    assert membership(spec, T)
    T2 = BlockToeplitz(2, {1: MatrixD.diagonal([1, 1]), -1: MatrixD.diagonal([2, 7])})
    assert not membership(spec, T2)
    assert len(order_slice_basis(spec)) == 2


def test_schur_algebra_membership():
    spec = SchurOpq(1, 2, 2)
    gens = schur_generators(1, 2, 2)
    assert all(membership(spec, G) for G in gens)
    bad = BlockToeplitz(2, {1: MatrixD.identity(3)})
    assert membership_witness(spec, bad) == "off-diagonal entry at offset 1 is invertible"
    for A in gens:
        for B in gens:
            assert compatible(A, B)
            assert membership(spec, toeplitz_product(A, B))


def test_triangular_families():
    up = toeplitz(3, {-1: X, -2: 1, 0: 1})
    assert membership(UpperTri(3, 2), up) and not membership(LowerTri(3, 2), up)
    assert membership(SinglyGen(P2, P2, ONE, ONE, 3), up)
