"""analysis_commands.py - Sequence analyses and inequality probes."""

import logging

import conebound
from conebound.analysis import (
    INEQUALITIES,
    Trend,
    bennett_claim,
    bennett_jameson_means,
    bennett_sequence,
    condition_sequence,
    monotonicity_verdict,
    probe,
    second_difference_min,
)
from conebound.report import Response

from interface import _options as options

CONVEXITY_TOLERANCE = -1e-9
CONDITION_TOLERANCE = -1e-12


class AnalysisCommands:
    """Handlers for analyze (bennett, condition, convexity, mean) and probe."""

    def bennett(self, args) -> Response:
        """Bennett's sequence with its monotonicity verdict."""
        n_max = args.n_max or conebound.settings.value("n_max")
        values = bennett_sequence(args.alpha, args.p, n_max)
        citation, claimed = bennett_claim(args.alpha, args.p)
        report = monotonicity_verdict(values, claim_citation=citation)

        response = self.__sequence_response("Bennett sequence", args, report, args.expect)
        response.add_field("claimed", claimed)
        return response

    def mean(self, args) -> Response:
        """Bennett-Jameson means A_n(f) with their monotonicity verdict."""
        n_max = args.n_max or conebound.settings.value("n_max")
        values = bennett_jameson_means(args.alpha, args.p, n_max)
        report = monotonicity_verdict(values, claim_citation="A_n(f) increases when f is convex")

        return self.__sequence_response("Bennett-Jameson means", args, report, args.expect)

    def condition(self, args) -> Response:
        """The sufficient condition for Bennett's sequence to increase, n = 1..n_max."""
        n_max = args.n_max or conebound.settings.value("n_max")
        values = condition_sequence(args.alpha, args.p, n_max)
        failing = [index + 1 for index, value in enumerate(values) if value < CONDITION_TOLERANCE]

        response = Response(Response.ANALYZE, "Sufficient condition")
        response.add_field("alpha", args.alpha)
        response.add_field("p", args.p)
        response.add_field("n_max", n_max)
        response.add_field("holds", not failing)
        response.add_field("first_failure", failing[0] if failing else None)
        response.add_field("min_value", float(values.min()))
        for index, value in enumerate(values):
            response.add_row({"n": index + 1, "value": value})

        return response

    def convexity(self, args) -> Response:
        """Minimum second difference of f on an interior grid."""
        grid = args.grid or conebound.settings.value("grid")
        minimum = second_difference_min(args.alpha, args.p, grid)
        convex = minimum >= CONVEXITY_TOLERANCE

        response = Response(Response.ANALYZE, "Convexity check", exit_code=0 if convex else 1)
        response.add_field("alpha", args.alpha)
        response.add_field("p", args.p)
        response.add_field("grid", grid)
        response.add_field("second_difference_min", minimum)
        response.add_field("convex", convex)

        return response

    def probe(self, args) -> Response:
        """Evaluate a registered inequality on its parameter box."""
        params = {
            "alpha_min": args.alpha_min,
            "alpha_max": args.alpha_max,
            "n_max": args.n_max,
            "beta_max": args.beta_max,
        }
        report = probe(args.id, params, args.grid, reverse=args.reverse)

        response = Response(Response.PROBE, f"Probe {report.inequality_id}", exit_code=0 if report.passed else 1)
        response.add_field("inequality_id", report.inequality_id)
        response.add_field("citation", report.citation)
        response.add_field("statement", INEQUALITIES[report.inequality_id].statement)
        response.add_field("grid", report.grid)
        response.add_field("reverse", report.reverse)
        response.add_field("evaluations", report.evaluations)
        response.add_field("worst_margin", report.worst_margin)
        response.add_field("violations", len(report.violations))
        response.add_field("passed", report.passed)

        for violation in report.violations:
            point = " ".join(f"{key}={value:g}" for key, value in violation.params.items())
            response.add_row({"point": point, "lhs": violation.lhs, "rhs": violation.rhs})

        return response

    @staticmethod
    def __sequence_response(title, args, report, expect) -> Response:
        """Shared layout for sequence verdicts; a mismatch with --expect exits 1."""
        mismatch = expect is not None and report.verdict is not Trend(expect)
        if mismatch:
            logging.warning("Expected %s, found %s", expect, report.verdict.value)

        response = Response(Response.ANALYZE, title, exit_code=1 if mismatch else 0)
        response.add_field("alpha", args.alpha)
        response.add_field("p", args.p)
        response.add_field("n_max", len(report.values))
        response.add_field("verdict", report.verdict)
        response.add_field("first_violation_index", report.first_violation_index)
        response.add_field("claim_citation", report.claim_citation)
        for index, value in enumerate(report.values):
            response.add_row({"n": index + 1, "value": value})

        return response


def setup(subparsers):
    """Add the analysis commands to the parser."""
    commands = AnalysisCommands()

    analyze = subparsers.add_parser("analyze", help="Monotonicity and convexity analyses")
    analyses = analyze.add_subparsers(dest="analysis", required=True)

    for name, handler, description in (
        ("bennett", commands.bennett, "Bennett's sequence and its direction"),
        ("mean", commands.mean, "Bennett-Jameson means of f"),
        ("condition", commands.condition, "The sufficient condition for Bennett's sequence to increase"),
        ("convexity", commands.convexity, "Numerical convexity of f on (0, 1)"),
    ):
        parser = analyses.add_parser(name, help=description)
        parser.add_argument("--alpha", type=options.real, required=True, help="Power parameter")
        parser.add_argument("--p", type=options.real, required=True, help="Exponent")
        if name == "convexity":
            parser.add_argument("--grid", type=int, help="Interior grid points (default: the grid setting)")
        else:
            parser.add_argument("--n-max", type=int, help="Last index (default: the n_max setting)")
        if name in ("bennett", "mean"):
            parser.add_argument(
                "--expect", choices=[trend.value for trend in Trend],
                help="Exit 1 unless the verdict matches",
            )
        options.add_output_options(parser)
        parser.set_defaults(handler=handler)

    check = subparsers.add_parser("probe", help="Grid-check a registered inequality")
    check.add_argument("--id", required=True, help=f"One of {', '.join(INEQUALITIES)}")
    check.add_argument("--alpha-min", type=options.real, help="Smallest alpha")
    check.add_argument("--alpha-max", type=options.real, help="Largest alpha")
    check.add_argument("--grid", type=int, help="Points per scalar dimension (default: the grid setting)")
    check.add_argument("--n-max", type=int, help="Largest n (default: the n_max setting)")
    check.add_argument("--beta-max", type=options.real, help="Largest finite beta for E4.2")
    check.add_argument("--reverse", action="store_true", help="Check the reversed claim on its reversed box")
    options.add_output_options(check)
    check.set_defaults(handler=commands.probe)
