"""Command-line interface: file ingestion, dispatch, report rendering.

Exit codes: 0 when every checked property holds (or a construction
succeeded), 1 when an emitted report carries a FAIL verdict, 2 for unusable
input or usage errors.  Documents go to standard output (or --out); logs go
to standard error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import __version__, bundles
from .algebras import (
    check_generalized,
    check_lsa,
    check_omega_lie,
)
from .bialgebra import (
    check_dual_pair,
    cobracket_of_dual,
    crosscheck_equivalence,
    double_bracket,
)
from .errors import (
    AxiomViolation,
    BundleFormatError,
    DimensionMismatch,
    EmptyDecomposition,
    EmptyParameterSpace,
)
from .linalg import Vector, rat, rat_str
from .operators import (
    check_o_operator,
    check_o_operator_gen,
    commutator_complement,
    lift_o_operator,
    lsa_from_o_operator,
    omega_lie_from_lsa,
)
from .reports import Report
from .representations import (
    Representation,
    adjoint_pair,
    check_gen_rep,
    check_representation,
    dual_representation,
    generalized_dual_pair,
    semidirect_rep,
)
from .solver import build_problem, minimize, rationalize_verify
from .yang_baxter import (
    YbeContext,
    check_derivation_identity,
    check_r_admissible,
    check_yb_bialgebra,
    dual_structure_from_r,
    solution_conditions,
    yb_residual,
)

CONSTRUCT_RECIPES = (
    "dual-rep",
    "adjoint-pair",
    "gen-dual",
    "semidirect",
    "double",
    "cobracket",
    "dual-from-r",
    "lsa-from-o",
    "lift-o",
    "omega-lie-from-lsa",
)


@dataclass(frozen=True)
class ToolkitConfig:
    jac_scope: str = "all"
    central_rule: str = "center"
    solver: dict = None

    def meta(self) -> dict:
        return {
            "tool": f"omegalie {__version__}",
            "jac_scope": self.jac_scope,
            "central_rule": self.central_rule,
        }


def load_config(path: str) -> ToolkitConfig:
    doc = bundles.load_path(path)
    jac = doc.get("jac_delta_scope", "all")
    rule = doc.get("central_rule", "center")
    if jac not in ("all", "first"):
        raise BundleFormatError(f"unknown jac_delta_scope {jac!r}")
    if rule not in ("center", "zero"):
        raise BundleFormatError(f"unknown central_rule {rule!r}")
    return ToolkitConfig(jac_scope=jac, central_rule=rule, solver=doc.get("solver") or {})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegalie",
        description="Exact checks and constructions for twisted Lie-type algebras, "
        "their doubles, and the twisted Yang-Baxter equation.",
    )
    parser.add_argument("--config", help="JSON config file (cyclic-sum scope, "
                        "central-element rule, solver defaults)")
    parser.add_argument("--deterministic", action="store_true",
                        help="pin the solver seed to 1")
    parser.add_argument("--out", help="write the output document to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="dispatch a bundle to the checker for its kind")
    p_check.add_argument("bundle", help="path to a JSON bundle")

    p_con = sub.add_parser("construct", help="build a derived object from a bundle")
    p_con.add_argument("recipe", choices=CONSTRUCT_RECIPES)
    p_con.add_argument("--in", dest="infile", required=True, help="input bundle path")
    p_con.add_argument("--c", dest="scale", default=None,
                       help="nonzero scale for omega-lie-from-lsa (default: bundle c field or 1)")

    p_yb = sub.add_parser("yb", help="residual-side computations for a two-tensor")
    p_yb.add_argument("operation", choices=("residual", "admissible", "lemma42", "bialgebra"))
    p_yb.add_argument("--algebra", required=True, help="omega_lie bundle path")
    p_yb.add_argument("--r-tensor", dest="r_tensor", required=True,
                      help="two_tensor bundle path")
    p_yb.add_argument("--u-r", dest="u_r", default=None,
                      help="distinguished element as comma-separated rationals")

    p_ver = sub.add_parser("verify", help="run a cross-check between independent routes")
    p_ver.add_argument("theorem", choices=("thm-3.8", "thm-4.4", "thm-5.18"))
    p_ver.add_argument("--in", dest="infile", required=True)

    p_solve = sub.add_parser("solve", help="numerical search for exact skew solutions")
    p_solve.add_argument("--in", dest="infile", required=True, help="solve_request bundle path")
    return parser


def _emit(doc: dict, out_path) -> None:
    text = bundles.dumps(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish_report(report: Report, config: ToolkitConfig, out_path) -> int:
    report.meta.update(config.meta())
    _emit(report.to_document(), out_path)
    return 0 if report.passed else 1


def _failure_report(title: str, message: str) -> Report:
    report = Report(title)
    clause = report.clause("precondition")
    clause.add((), message, "satisfied")
    return report


def _parse_u_r(arg, n: int) -> Vector:
    if arg is None:
        return Vector.zero(n)
    parts = [p.strip() for p in arg.split(",")]
    if len(parts) != n:
        raise BundleFormatError(f"--u-r needs {n} comma-separated rationals")
    try:
        return Vector([rat(p) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise BundleFormatError(f"bad --u-r value: {exc}") from None


def cmd_check(args, config: ToolkitConfig) -> int:
    doc = bundles.load_path(args.bundle)
    kind, obj = bundles.parse_any(doc)
    if kind == "omega_lie":
        report = check_omega_lie(obj)
    elif kind == "generalized":
        report = check_generalized(obj)
    elif kind == "lsa":
        report = check_lsa(obj)
    elif kind == "representation":
        report = check_representation(obj)
    elif kind == "gen_rep_pair":
        report = check_gen_rep(obj)
    elif kind == "o_operator":
        if isinstance(obj.rep, Representation):
            report = check_o_operator(obj.algebra, obj.rep, obj.t)
        else:
            report = check_o_operator_gen(obj.algebra, obj.rep, obj.t)
    elif kind == "two_tensor":
        report = Report("two-tensor properties")
        skew = report.clause("skew-symmetric")
        if not obj.tensor.is_skew():
            skew.add((), obj.tensor.entries, (-obj.tensor.entries.transpose()))
        if obj.algebra is not None:
            ctx = YbeContext(obj.algebra, obj.u_r or Vector.zero(obj.tensor.dim))
            report.extend(check_r_admissible(ctx, obj.tensor, config.central_rule), "")
    elif kind == "dual_pair":
        report = check_dual_pair(obj)
    elif kind == "solve_request":
        report = Report("solve request")
        report.clause("well-formed")
        problem = build_problem(obj.algebra, obj.u_r, obj.options)
        report.meta["parameter_dim"] = problem.parameter_dim
    else:
        raise BundleFormatError(f"no checker for bundle kind {kind!r}")
    return _finish_report(report, config, args.out)


def cmd_construct(args, config: ToolkitConfig) -> int:
    doc = bundles.load_path(args.infile)
    recipe = args.recipe
    try:
        if recipe == "dual-rep":
            rep = bundles.parse_representation(doc)
            out = bundles.representation_doc(dual_representation(rep))
        elif recipe == "adjoint-pair":
            alg = bundles.parse_omega_lie(doc)
            out = bundles.gen_rep_pair_doc(adjoint_pair(alg))
        elif recipe == "gen-dual":
            pair = bundles.parse_gen_rep_pair(doc)
            out = bundles.gen_rep_pair_doc(generalized_dual_pair(pair))
        elif recipe == "semidirect":
            rep = bundles.parse_representation(doc)
            out = bundles.omega_lie_doc(semidirect_rep(rep))
        elif recipe == "double":
            dp = bundles.parse_dual_pair(doc)
            out = bundles.omega_lie_doc(double_bracket(dp))
        elif recipe == "cobracket":
            dual = bundles.parse_omega_lie(doc)
            out = bundles.cobracket_doc(cobracket_of_dual(dual))
        elif recipe == "dual-from-r":
            bundle = bundles.parse_two_tensor(doc)
            if bundle.algebra is None:
                raise BundleFormatError("dual-from-r needs an algebra block in the tensor bundle")
            ctx = YbeContext(bundle.algebra, bundle.u_r or Vector.zero(bundle.tensor.dim))
            out = bundles.omega_lie_doc(dual_structure_from_r(ctx, bundle.tensor))
        elif recipe == "lsa-from-o":
            ob = bundles.parse_o_operator(doc)
            if not isinstance(ob.rep, Representation):
                raise BundleFormatError("lsa-from-o needs a representation-flavor operator")
            out = bundles.lsa_doc(lsa_from_o_operator(ob.algebra, ob.rep, ob.t))
        elif recipe == "lift-o":
            ob = bundles.parse_o_operator(doc)
            if not isinstance(ob.rep, Representation):
                raise BundleFormatError("lift-o needs a representation-flavor operator")
            ambient, tensor = lift_o_operator(ob.algebra, ob.rep, ob.t)
            out = bundles.two_tensor_doc(tensor, ambient, Vector.zero(ambient.dim))
        elif recipe == "omega-lie-from-lsa":
            lsa = bundles.parse_lsa(doc)
            scale = rat(args.scale) if args.scale is not None else rat(doc.get("c", 1))
            built = omega_lie_from_lsa(lsa, Fraction(scale))
            out = bundles.omega_lie_doc(built)
            _, complement = commutator_complement(lsa)
            out["meta"]["complement_indices"] = [j + 1 for j in complement]
            out["meta"]["c"] = rat_str(Fraction(scale))
        else:  # pragma: no cover - argparse restricts choices
            raise BundleFormatError(f"unknown recipe {recipe!r}")
    except (AxiomViolation, ValueError) as exc:
        if isinstance(exc, BundleFormatError):
            raise
        report = _failure_report(f"construct {recipe}", str(exc))
        return _finish_report(report, config, args.out)
    _emit(out, args.out)
    return 0


def cmd_yb(args, config: ToolkitConfig) -> int:
    alg = bundles.parse_omega_lie(bundles.load_path(args.algebra))
    bundle = bundles.parse_two_tensor(bundles.load_path(args.r_tensor))
    tensor = bundle.tensor
    u_r = bundle.u_r if bundle.u_r is not None else None
    if args.u_r is not None:
        u_r = _parse_u_r(args.u_r, alg.dim)
    ctx = YbeContext(alg, u_r if u_r is not None else Vector.zero(alg.dim))
    if args.operation == "residual":
        _emit(bundles.three_tensor_doc(yb_residual(ctx, tensor)), args.out)
        return 0
    if args.operation == "admissible":
        report = check_r_admissible(ctx, tensor, config.central_rule)
    elif args.operation == "lemma42":
        report = check_derivation_identity(ctx, tensor, scope=config.jac_scope)
    else:
        report = check_yb_bialgebra(ctx, tensor)
    return _finish_report(report, config, args.out)


def cmd_verify(args, config: ToolkitConfig) -> int:
    doc = bundles.load_path(args.infile)
    if args.theorem == "thm-3.8":
        dp = bundles.parse_dual_pair(doc)
        report = crosscheck_equivalence(dp)
    elif args.theorem == "thm-4.4":
        bundle = bundles.parse_two_tensor(doc)
        if bundle.algebra is None:
            raise BundleFormatError("thm-4.4 needs an algebra block in the tensor bundle")
        ctx = YbeContext(bundle.algebra, bundle.u_r or Vector.zero(bundle.tensor.dim))
        conditions = solution_conditions(ctx, bundle.tensor)
        dual = dual_structure_from_r(ctx, bundle.tensor)
        axioms = check_omega_lie(dual)
        report = Report("dual-structure equivalence")
        report.extend(conditions, "")
        report.extend(axioms, "dual:")
        agreement = report.clause("verdict-agreement")
        if conditions.passed != axioms.passed:
            agreement.add((), (conditions.verdict, axioms.verdict), "equal")
        report.meta["conditions_verdict"] = conditions.verdict
        report.meta["dual_axioms_verdict"] = axioms.verdict
    else:  # thm-5.18
        ob = bundles.parse_o_operator(doc)
        if not isinstance(ob.rep, Representation):
            raise BundleFormatError("thm-5.18 needs a representation-flavor operator")
        operator = check_o_operator(ob.algebra, ob.rep, ob.t)
        ambient, tensor = lift_o_operator(ob.algebra, ob.rep, ob.t)
        residual = yb_residual(YbeContext(ambient, Vector.zero(ambient.dim)), tensor)
        report = Report("operator-lift equivalence")
        report.extend(operator, "")
        res_clause = report.clause("lift-residual-zero")
        if not residual.is_zero():
            res_clause.add((), residual, "zero")
        agreement = report.clause("verdict-agreement")
        if operator.passed != residual.is_zero():
            agreement.add((), (operator.verdict, "residual"), "equal")
        report.meta["operator_verdict"] = operator.verdict
        report.meta["lift_residual_zero"] = residual.is_zero()
    return _finish_report(report, config, args.out)


def cmd_solve(args, config: ToolkitConfig, deterministic: bool) -> int:
    req = bundles.parse_solve_request(bundles.load_path(args.infile))
    options = req.options
    for key, value in (config.solver or {}).items():
        if hasattr(options, key):
            options = replace(options, **{key: type(getattr(options, key))(value)})
    if deterministic:
        options = replace(options, seed=1)
    problem = build_problem(req.algebra, req.u_r, options)
    result = minimize(problem)
    if result.converged:
        result = rationalize_verify(problem, result)
    doc = {
        "kind": "solve_result",
        "converged": result.converged,
        "residual_norm": result.residual_norm,
        "exact_verified": result.exact_verified,
        "trace": result.trace,
        "coordinates_float": [float(c) for c in result.best_coords],
        "meta": config.meta(),
    }
    if result.rationalized is not None:
        doc["tensor"] = bundles.two_tensor_doc(result.rationalized)
    _emit(doc, args.out)
    return 0 if result.converged else 1


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else ToolkitConfig(solver={})
        if args.command == "check":
            return cmd_check(args, config)
        if args.command == "construct":
            return cmd_construct(args, config)
        if args.command == "yb":
            return cmd_yb(args, config)
        if args.command == "verify":
            return cmd_verify(args, config)
        if args.command == "solve":
            return cmd_solve(args, config, args.deterministic)
        parser.error(f"unknown command {args.command!r}")
    except BundleFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomViolation as exc:
        # a precondition that is itself a checked property failed
        report = _failure_report(args.command, str(exc))
        return _finish_report(report, ToolkitConfig(solver={}), args.out)
    except (DimensionMismatch, EmptyDecomposition, EmptyParameterSpace) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
