"""bound_commands.py - Commands that compute, verify and look up sharp bounds."""

import logging
import math

import conebound
from conebound.engine import compute_bound, convergence_study, family_bound_streamed
from conebound.families import asymptotic_constant, theorem_range_check
from conebound.oracle import Verdict, verify
from conebound.report import Response

from interface import _options as options


class BoundCommands:
    """Handlers for bound, verify, constant and converge."""

    def bound(self, args) -> Response:
        """Compute the sharp constant of a family truncation or a CSV matrix."""
        pair = options.pair_from(args)

        if args.matrix:
            matrix = options.matrix_from(args)
            logging.info("Computing the bound of %s (%s x %s)", args.matrix, matrix.rows, matrix.cols)
            result = compute_bound(matrix, pair)
            spec, size, rows = None, matrix.cols, matrix.rows
        else:
            spec = options.family_from(args)
            rows = options.rows_from(args, spec)
            size = args.size
            logging.info("Computing the bound of %s at N=%s, rows=%s", spec.label, size, options.rows_label(rows))
            result = family_bound_streamed(spec, size, pair, rows)

        response = Response(Response.BOUND, "Sharp bound")
        response.add_field("lambda", result.lambda_)
        response.add_field("lambda_pow_q", result.lambda_pow_q)
        response.add_field("lambda_pow_p", result.lambda_pow_p)
        response.add_field("optimal_r", result.optimal_r)
        response.add_field("N", size)
        response.add_field("rows", options.rows_label(rows))
        response.add_field("family", spec.label if spec else None)
        response.add_field("matrix", args.matrix)
        response.add_field("p", pair.p)
        response.add_field("q", pair.q)
        response.add_field("regime", pair.regime)

        citation, constant = None, None
        if spec is not None:
            coverage = theorem_range_check(spec, pair.p, pair.q, pair.regime)
            if coverage.covered:
                citation = coverage.citation
                constant = asymptotic_constant(spec, pair.p, pair.q, pair.regime).value
        response.add_field("citation", citation)
        response.add_field("constant", constant)

        return response

    def verify(self, args) -> Response:
        """Check the closed-form bound with the oracle."""
        pair = options.pair_from(args)

        if args.matrix:
            matrix = options.matrix_from(args)
            label = None
        else:
            spec = options.family_from(args)
            matrix = conebound.families.generate(spec, args.size)
            label = spec.label

        report = verify(matrix, pair, samples=args.samples, seed=args.seed, iters=args.iters)
        violated = report.verdict is Verdict.VIOLATION

        response = Response(Response.VERIFY, "Oracle verification", exit_code=1 if violated else 0)
        response.add_field("verdict", report.verdict)
        response.add_field("formula_lambda", report.formula_lambda)
        response.add_field("step_enum_lambda", report.step_enum_lambda)
        response.add_field("sampled_best", report.sampled_best)
        response.add_field("search_best", report.search_best)
        response.add_field("gap", report.gap)
        response.add_field("samples", report.samples)
        response.add_field("seed", report.seed)
        response.add_field("family", label)
        response.add_field("matrix", args.matrix)
        response.add_field("N", matrix.cols)
        response.add_field("p", pair.p)
        response.add_field("q", pair.q)
        response.add_field("regime", pair.regime)
        response.add_field("worst_vector", report.worst_vector.values)

        return response

    def constant(self, args) -> Response:
        """Look up the published constant for a family."""
        spec = options.family_from(args)
        q = args.p if args.q is None else args.q
        regime = None if args.regime == "auto" else args.regime

        known = asymptotic_constant(spec, args.p, q, regime)

        response = Response(Response.CONSTANT, "Published constant")
        response.add_field("family", spec.label)
        response.add_field("p", args.p)
        response.add_field("q", q)
        response.add_field("regime", known.regime)
        response.add_field("value", known.value)
        response.add_field("lambda", known.lambda_)
        response.add_field("est_abs_error", known.est_abs_error)
        response.add_field("citation", known.citation)
        response.add_field("validity", known.validity)

        return response

    def converge(self, args) -> Response:
        """Tabulate lambda^q(N) over increasing sizes."""
        spec = options.family_from(args)
        pair = options.pair_from(args)
        rows = options.rows_from(args, spec)

        table = convergence_study(spec, pair, args.sizes, rows)
        target = table.target

        response = Response(Response.CONVERGE, "Convergence study")
        response.add_field("family", spec.label)
        response.add_field("p", pair.p)
        response.add_field("q", pair.q)
        response.add_field("regime", pair.regime)
        response.add_field("rows", options.rows_label(rows))
        response.add_field("target", target.value if target else None)
        response.add_field("citation", target.citation if target else None)
        response.add_field("extrapolated", table.extrapolated)

        for index, size in enumerate(table.sizes):
            response.add_row({
                "size": size,
                "lambda_pow_q": table.lambdas[index],
                "gap": table.gaps[index] if table.gaps else math.nan,
            })

        return response


def setup(subparsers):
    """Add the bound commands to the parser."""
    commands = BoundCommands()

    bound = subparsers.add_parser("bound", help="Sharp constant of a family truncation or CSV matrix")
    options.add_family_options(bound)
    options.add_exponent_options(bound)
    options.add_size_options(bound)
    options.add_output_options(bound)
    bound.set_defaults(handler=commands.bound)

    check = subparsers.add_parser("verify", help="Check the bound by enumeration, sampling and search")
    options.add_family_options(check)
    options.add_exponent_options(check)
    check.add_argument("--size", type=int, default=64, help="Truncation size N (families only)")
    check.add_argument("--samples", type=int, help="Cone samples (default: the samples setting)")
    check.add_argument("--seed", type=int, help="Sampling seed (default: the seed setting)")
    check.add_argument("--iters", type=int, help="Local search moves per restart")
    options.add_output_options(check)
    check.set_defaults(handler=commands.verify)

    constant = subparsers.add_parser("constant", help="Published constant and its citation")
    options.add_family_options(constant, matrix=False)
    options.add_exponent_options(constant)
    options.add_output_options(constant)
    constant.set_defaults(handler=commands.constant)

    converge = subparsers.add_parser("converge", help="Bound over increasing truncation sizes")
    options.add_family_options(converge, matrix=False)
    options.add_exponent_options(converge)
    options.add_size_options(converge, sizes=True)
    options.add_output_options(converge)
    converge.set_defaults(handler=commands.converge)

