"""JSON encoding of the library's values.

All numbers are exact strings: a rational is ``"num/den"`` or ``"num"``,
a Gaussian rational is ``{"re": .., "im": ..}`` (a bare rational string is
accepted on input), a polynomial is an array of Gaussian rationals with
the constant term first, and a matrix is a row-major nested array.
"""

from .algebras import (
    INFINITY,
    DiagonalTuple,
    LowerTri,
    Pseudocirculant,
    ScalarCirculant,
    SchurOpq,
    SinglyGen,
    UpperTri,
)
from .blocktoeplitz import BlockMatrix, BlockToeplitz, CyclicDiagonal
from .errors import InvalidSpec, ShapeMismatch
from .matrixcore import MatrixD, PMElement
from .scalars import GaussianRational, Poly


class MalformedInput(ValueError):
    """Raised when a JSON document does not follow the documented schema."""


def _need(obj, key):
    if not isinstance(obj, dict):
        raise MalformedInput(f"expected an object with key {key!r}")
    if key not in obj:
        raise MalformedInput(f"missing key {key!r}")
    return obj[key]


def poly_from_json(obj):
    if not isinstance(obj, list):
        raise MalformedInput("polynomial must be an array of coefficients")
    return Poly.from_json(obj)


def entry_to_json(e):
    if isinstance(e, PMElement):
        return e.residue.to_json()
    return e.to_json()


def pm_to_json(e):
    return {"p": e.modulus.to_json(), "residue": e.residue.to_json()}


def pm_from_json(obj):
    return PMElement(poly_from_json(_need(obj, "p")), poly_from_json(_need(obj, "residue")))


def toeplitz_to_json(T):
    e = T.zero_entry
    out = {"n": T.n, "d": T.d}
    if isinstance(e, PMElement):
        out["entry_type"] = "poly_mod_p"
        out["p"] = e.modulus.to_json()
    else:
        out["entry_type"] = "matrix"
    out["blocks"] = {str(j): entry_to_json(T[j]) for j in T.offsets() if not T[j].is_zero()}
    return out


def toeplitz_from_json(obj):
    n = _need(obj, "n")
    kind = obj.get("entry_type", "poly_mod_p" if "p" in obj else "matrix")
    blocks = _need(obj, "blocks")
    if not isinstance(n, int) or not isinstance(blocks, dict):
        raise MalformedInput("'n' must be an integer and 'blocks' an object")
    try:
        offsets = {int(k): v for k, v in blocks.items()}
    except ValueError as err:
        raise MalformedInput(f"block keys must be integer offsets: {err}") from err
    if kind == "poly_mod_p":
        p = poly_from_json(_need(obj, "p"))
        zero = PMElement(p, Poly.zero())
        entries = {j: PMElement(p, poly_from_json(v)) for j, v in offsets.items()}
    elif kind == "matrix":
        d = _need(obj, "d")
        zero = MatrixD.zero(d)
        entries = {j: MatrixD.from_json(v) for j, v in offsets.items()}
    else:
        raise MalformedInput(f"unknown entry_type {kind!r}")
    T = BlockToeplitz(n, entries, zero=zero)
    if "d" in obj and obj["d"] != T.d:
        raise ShapeMismatch(f"declared d={obj['d']} but entries have order {T.d}")
    return T


def block_matrix_to_json(C):
    return [[entry_to_json(C[i, j]) for j in range(C.n)] for i in range(C.n)]


def cyclic_to_json(D):
    p = D.top.modulus.to_json() if isinstance(D.top, PMElement) else None
    out = {"n": D.n, "k": D.k, "top": entry_to_json(D.top)}
    if D.bottom is not None:
        out["bottom"] = entry_to_json(D.bottom)
    if p is not None:
        out["p"] = p
    return out


def _entry_any_to_json(e):
    return pm_to_json(e) if isinstance(e, PMElement) else e.to_json()


def _entry_any_from_json(obj):
    if isinstance(obj, dict):
        return pm_from_json(obj)
    return MatrixD.from_json(obj)


def _alpha_to_json(a):
    return "inf" if a is INFINITY else a.to_json()


def _alpha_from_json(obj):
    return INFINITY if obj == "inf" else GaussianRational.from_json(obj)


def spec_to_json(spec):
    if isinstance(spec, SinglyGen):
        body = {
            "variant": "singly_generated",
            "p": spec.p.to_json(),
            "p_plus": spec.p_plus.to_json(),
            "p_minus": spec.p_minus.to_json(),
            "chi": spec.chi.to_json(),
        }
    elif isinstance(spec, Pseudocirculant):
        body = {"variant": "pseudocirculant", "A": _entry_any_to_json(spec.A), "B": _entry_any_to_json(spec.B)}
    elif isinstance(spec, DiagonalTuple):
        body = {"variant": "diagonal_tuple", "alphas": [_alpha_to_json(a) for a in spec.alphas]}
    elif isinstance(spec, ScalarCirculant):
        body = {"variant": "scalar_circulant", "alpha": _alpha_to_json(spec.alpha)}
    elif isinstance(spec, SchurOpq):
        body = {"variant": "schur", "p": spec.p, "q": spec.q}
    elif isinstance(spec, UpperTri):
        body = {"variant": "upper"}
    elif isinstance(spec, LowerTri):
        body = {"variant": "lower"}
    else:
        raise InvalidSpec(f"cannot encode {type(spec).__name__}")
    body["n"] = spec.n
    body["d"] = spec.d
    return body


def spec_from_json(obj):
    variant = _need(obj, "variant")
    n = _need(obj, "n")
    if variant == "singly_generated":
        spec = SinglyGen(
            poly_from_json(_need(obj, "p")),
            poly_from_json(obj.get("p_plus", [{"re": "1", "im": "0"}])),
            poly_from_json(obj.get("p_minus", [{"re": "1", "im": "0"}])),
            poly_from_json(obj.get("chi", [{"re": "1", "im": "0"}])),
            n,
        )
    elif variant == "pseudocirculant":
        spec = Pseudocirculant(_entry_any_from_json(_need(obj, "A")), _entry_any_from_json(_need(obj, "B")), n)
    elif variant == "diagonal_tuple":
        spec = DiagonalTuple(tuple(_alpha_from_json(a) for a in _need(obj, "alphas")), n)
    elif variant == "scalar_circulant":
        spec = ScalarCirculant(_alpha_from_json(_need(obj, "alpha")), n)
    elif variant == "schur":
        spec = SchurOpq(_need(obj, "p"), _need(obj, "q"), n)
    elif variant == "upper":
        spec = UpperTri(n, _need(obj, "d"))
    elif variant == "lower":
        spec = LowerTri(n, _need(obj, "d"))
    else:
        raise MalformedInput(f"unknown variant {variant!r}")
    if "d" in obj and obj["d"] != spec.d:
        raise ShapeMismatch(f"declared d={obj['d']} but the algebra has d={spec.d}")
    return spec


def generators_from_json(obj):
    """A generator set: a bare array of matrices or ``{"generators": [...]}``."""
    if isinstance(obj, dict):
        obj = _need(obj, "generators")
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("generator set must be a nonempty array")
    return [toeplitz_from_json(g) for g in obj]


def generators_to_json(gens):
    return {"generators": [toeplitz_to_json(g) for g in gens]}


def report_to_json(report):
    return {
        "spec": spec_to_json(report.spec),
        "s_plus": report.s_plus.to_json(),
        "s_minus": report.s_minus.to_json(),
        "xi": report.xi.to_json(),
        "genericity": report.genericity,
        "generic_element": None if report.generic_element is None else toeplitz_to_json(report.generic_element),
    }


def strata_to_json(strata):
    return [s.to_json() for s in strata]


def to_json(value):
    """Encode any supported value, dispatching on type."""
    if isinstance(value, BlockToeplitz):
        return toeplitz_to_json(value)
    if isinstance(value, CyclicDiagonal):
        return cyclic_to_json(value)
    if isinstance(value, BlockMatrix):
        return block_matrix_to_json(value)
    if isinstance(value, PMElement):
        return pm_to_json(value)
    if isinstance(value, (MatrixD, Poly, GaussianRational)):
        return value.to_json()
    return spec_to_json(value)
