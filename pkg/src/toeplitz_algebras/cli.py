"""Command-line interface: JSON in, JSON out.

Exit status: 0 success, 1 malformed input, 2 a library precondition
failed (the error class name is reported), 3 verification failures.
"""

import argparse
import json
import sys

from . import serialize
from .algebras import bsg_equal, membership_witness
from .blocktoeplitz import compatible, product
from .classify import classify_maximal, enumerate_xm, is_maximal, maximality_witness
from .errors import ToeplitzAlgebraError
from .matrixcore import DiagonalAlgebra, OpqAlgebra
from .oracle import SUITES, TrialConfig, run_suite


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _load(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _algebra(args):
    if args.opq:
        try:
            p, q = (int(x) for x in args.opq.split(","))
        except ValueError as err:
            raise serialize.MalformedInput(f"--opq expects P,Q: {err}") from err
        return OpqAlgebra(p, q)
    if args.diagonal:
        return "diagonal"
    return None


def cmd_check_product(args):
    A = serialize.toeplitz_from_json(_load(args.a))
    B = serialize.toeplitz_from_json(_load(args.b))
    C, flag, T = product(A, B)
    out = {
        "compatible": compatible(A, B),
        "toeplitz": flag,
        "product": serialize.toeplitz_to_json(T) if flag else serialize.block_matrix_to_json(C),
    }
    return out, f"compatible: {out['compatible']}, product block Toeplitz: {flag}"


def cmd_membership(args):
    spec = serialize.spec_from_json(_load(args.spec))
    T = serialize.toeplitz_from_json(_load(args.matrix))
    witness = membership_witness(spec, T)
    out = {"member": witness is None, "witness": witness}
    return out, "member" if witness is None else f"not a member: {witness}"


def cmd_classify(args):
    gens = serialize.generators_from_json(_load(args.gens))
    report = classify_maximal(gens, bound=args.bound)
    out = serialize.report_to_json(report)
    s = report.spec
    return out, f"B({s.p_plus}, {s.p_minus}, {s.chi}) over p = {s.p} ({report.genericity})"


def cmd_equal(args):
    s1 = serialize.spec_from_json(_load(args.s1))
    s2 = serialize.spec_from_json(_load(args.s2))
    eq = bsg_equal(s1, s2)
    return {"equal": eq}, "equal" if eq else "different"


def cmd_maximal(args):
    gens = serialize.generators_from_json(_load(args.gens))
    alg = _algebra(args)
    if alg == "diagonal":
        alg = DiagonalAlgebra(gens[0].d)
    maximal = is_maximal(gens, alg)
    out = {"maximal": maximal}
    if not maximal:
        out["extension_basis"] = [serialize.cyclic_to_json(maximality_witness(gens, alg))]
    return out, "maximal" if maximal else "not maximal: a compatible cyclic diagonal lies outside"


def cmd_enumerate_xm(args):
    strata = enumerate_xm(args.m, args.n)
    lines = [
        f"k+={s.k_plus} k-={s.k_minus} {'rigid' if s.rigid else f'{s.param_dim}-parameter'}"
        f"{' pseudocirculant' if s.pseudocirculant else ''}"
        for s in strata
    ]
    return serialize.strata_to_json(strata), "\n".join(lines)


def cmd_verify(args):
    config = TrialConfig(args.seed, args.trials, (args.n_min, args.n_max), (args.d_min, args.d_max), args.suite)
    report = run_suite(config)
    summary = f"{report.suite}: {report.trials} trials, {len(report.failures)} failures, {report.elapsed:.2f}s"
    return report.to_json(), summary, (0 if report.passed else 3)


def build_parser():
    parser = _Parser(prog="toeplitz-algebras", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "human"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-product", help="compatibility and product of two block Toeplitz matrices")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_check_product)

    p = sub.add_parser("membership", help="test membership of a matrix in an algebra")
    p.add_argument("spec")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("classify", help="classify the maximal algebra spanned by generators")
    p.add_argument("gens")
    p.add_argument("--bound", type=int, default=None, help="generic-element search bound")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equal", help="equality of two singly generated algebras")
    p.add_argument("s1")
    p.add_argument("s2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("maximal", help="maximality of the algebra generated by a set")
    p.add_argument("gens")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--opq", metavar="P,Q", help="matrix entries lie in O_{P,Q}")
    group.add_argument("--diagonal", action="store_true", help="matrix entries lie in the diagonal algebra")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("enumerate-xm", help="strata of maximal algebras for p = X^m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_enumerate_xm)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    try:
        result = args.func(args)
    except ToeplitzAlgebraError as err:
        print(json.dumps({"error": type(err).__name__, "message": err.args[0] if err.args else ""}))
        return 2
    except (OSError, ValueError, KeyError, TypeError) as err:
        print(f"malformed input: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    out, human = result[0], result[1]
    status = result[2] if len(result) > 2 else 0
    if args.format == "human":
        print(human)
    else:
        print(json.dumps(out, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
