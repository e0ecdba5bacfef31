"""Exact computations with algebras of block Toeplitz matrices whose entries commute."""

from .algebras import (
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
    membership,
    membership_witness,
    pseudocirculant_pair,
    schur_generators,
    slice_basis,
)
from .blocktoeplitz import (
    BlockMatrix,
    BlockToeplitz,
    CyclicDiagonal,
    compatible,
    cyclic_product,
    full_product,
    is_block_toeplitz,
    permute,
    powers_toeplitz,
    product,
    project_Ek,
    toeplitz_product,
)
from .classify import (
    ClassificationReport,
    Stratum,
    assert_schur_maximal,
    classify_maximal,
    compute_s_pm,
    compute_xi,
    enumerate_xm,
    extension_space,
    find_generic_element,
    is_maximal,
)
from .errors import ToeplitzAlgebraError
from .matrixcore import MatrixD, PMElement, companion, minimal_polynomial, pm_is_invertible
from .oracle import TrialConfig, VerificationReport, random_member, run_suite
from .scalars import GaussianRational, Poly, X, gr, poly_gcd, poly_mod_inverse

__version__ = "0.1.0"
