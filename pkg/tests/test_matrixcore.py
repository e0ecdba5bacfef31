import pytest
from hypothesis import given, strategies as st

from toeplitz_algebras.errors import InvalidSpec, NotMonic, ShapeMismatch
from toeplitz_algebras.linalg import Span, nullspace, rank, rref
from toeplitz_algebras.matrixcore import (
    DiagonalAlgebra,
    MatrixD,
    OpqAlgebra,
    OpqElement,
    PMElement,
    PolyModAlgebra,
    companion,
    eval_poly_at_matrix,
    is_nonderogatory,
    minimal_polynomial,
    opq_contains,
    pm_is_invertible,
    pm_reduce,
)
from toeplitz_algebras.scalars import ONE, ZERO, Poly, X, gr
from strategies import monic_polys, polys, small_ints


def det(rows):
    """Laplace expansion; independent of the elimination code under test."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def M(*rows):
    return MatrixD([[gr(x) for x in r] for r in rows])


# linear algebra


def test_rref_and_rank():
    red, piv = rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 3)
    assert piv == [0, 1]
    assert rank([[1, 2], [2, 4]], 2) == 1


def test_nullspace_of_empty_system_is_everything():
    assert len(nullspace([], 3)) == 3


@given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=4))
def test_nullspace_vectors_solve_the_system(rows):
    basis = nullspace(rows, 4)
    assert len(basis) == 4 - rank(rows, 4)
    for v in basis:
        for r in rows:
            assert sum((gr(a) * x for a, x in zip(r, v)), ZERO) == 0


@given(st.lists(st.lists(small_ints, min_size=3, max_size=3), max_size=5))
def test_span_membership(vectors):
    s = Span(3, vectors)
    for v in vectors:
        assert s.contains(v)
    assert len(s) == rank(vectors, 3) if vectors else len(s) == 0


# dense matrices


def test_matrix_basics():
    A = M([1, 2], [3, 4])
    assert A * MatrixD.identity(2) == A
    assert (A - A).is_zero()
    assert A.rank() == 2 and A.is_invertible()
    assert MatrixD.from_json(A.to_json()) == A
    with pytest.raises(ShapeMismatch):
        A * MatrixD.identity(3)


def test_companion_examples():
    assert companion(X**2) == M([0, 0], [1, 0])
    lam = gr(3, -1)
    assert companion(X - lam) == MatrixD([[lam]])
    C = companion(X**2 - 1)
    assert C.rows[1] == (ONE, ZERO)
    assert C * C == MatrixD.identity(2)
    with pytest.raises(NotMonic):
        companion(Poly([1, 2]))


def test_eval_poly_at_matrix_examples():
    Mx = companion(X**2)
    assert eval_poly_at_matrix(Poly.one(), Mx) == MatrixD.identity(2)
    p = X**3 - 2 * X + 5
    assert eval_poly_at_matrix(p, companion(p)).is_zero()
    assert eval_poly_at_matrix(X + 1, Mx) == Mx + MatrixD.identity(2)


@given(monic_polys())
def test_companion_is_nonderogatory_with_minimal_polynomial_p(p):
    C = companion(p)
    assert minimal_polynomial(C) == p
    assert is_nonderogatory(C)


def test_identity_is_derogatory():
    assert minimal_polynomial(MatrixD.identity(3)) == X - 1
    assert not is_nonderogatory(MatrixD.identity(3))


# P(M)


def test_pm_reduce_examples():
    assert pm_reduce(X**2, X**2).residue == Poly.zero()
    assert pm_reduce(X**2 + X + 1, X**2).residue == X + 1
    assert pm_reduce(Poly.const(7), X**3).residue == Poly.const(7)


def test_pm_invertibility_examples():
    assert pm_is_invertible(PMElement(X**2, 1 + X))
    assert not pm_is_invertible(PMElement(X**2, X))
    assert not pm_is_invertible(PMElement(X**2, Poly.zero()))


@given(st.data())
def test_residue_arithmetic_matches_matrices(data):
    p = data.draw(monic_polys())
    a = PMElement(p, data.draw(polys(6)))
    b = PMElement(p, data.draw(polys(6)))
    assert (a * b).to_matrix() == a.to_matrix() * b.to_matrix()
    assert (a + b).to_matrix() == a.to_matrix() + b.to_matrix()
    assert a * b == b * a


@given(st.data())
def test_pm_invertible_iff_determinant_nonzero(data):
    p = data.draw(monic_polys(max_degree=3))
    coeffs = data.draw(st.lists(small_ints, min_size=p.degree, max_size=p.degree))
    e = PMElement(p, Poly(coeffs))
    D = e.to_matrix()
    assert pm_is_invertible(e) == (not det([list(r) for r in D.rows]).is_zero())


# example coefficient algebras


def test_opq_membership_and_closure():
    alg = OpqAlgebra(2, 1)
    assert alg.dim == 3 and alg.d == 3
    for a in alg.basis():
        for b in alg.basis():
            assert opq_contains(a * b, 2, 1)
    corner = alg.basis()[1]
    assert (corner * corner).is_zero()
    assert not opq_contains(MatrixD.diagonal([1, 2, 1]), 2, 1)
    e = OpqElement(1, 2, 3, [[1, 2]])
    assert OpqElement.from_matrix(e.to_matrix(), 1, 2) == e
    assert (e * e).lam == 9
    with pytest.raises(InvalidSpec):
        OpqElement(0, 1, 1, [])


def test_coefficient_algebra_coordinates_round_trip():
    p = X**3 + X + 1
    for alg in (PolyModAlgebra(p), OpqAlgebra(1, 2), DiagonalAlgebra(3)):
        for i, b in enumerate(alg.basis()):
            coords = alg.coords(b)
            assert alg.element(coords) == b
            assert coords[i] == 1 and sum(1 for c in coords if not c.is_zero()) == 1
