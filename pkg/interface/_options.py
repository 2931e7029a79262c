"""_options.py - Argument groups and builders shared by the command modules."""

import math

from conebound.core import ExponentPair, NonNegativeMatrix, Regime
from conebound.families import FamilySpec, Kind
from conebound.report import FORMATS


def real(text: str) -> float:
    """A float that also accepts inf."""
    return float(text)


def size_list(text: str) -> list:
    """Comma-separated truncation sizes, e.g. 100,1000,10000."""
    try:
        return [int(float(item)) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ValueError(f"Error! `{text}` is not a comma-separated list of sizes.") from None


def add_output_options(parser):
    """--format and --output."""
    parser.add_argument("--format", choices=FORMATS, default="text", help="Report format")
    parser.add_argument("--output", help="Write the report here instead of standard output")


def add_family_options(parser, matrix: bool = True):
    """--family and its parameters, optionally with --matrix as the alternative source."""
    if matrix:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--family", choices=Kind.names(), help="A matrix family")
        source.add_argument("--matrix", help="A header-less CSV file of non-negative entries")
    else:
        parser.add_argument("--family", choices=Kind.names(), required=True, help="A matrix family")

    parser.add_argument("--alpha", type=real, help="Family power parameter")
    parser.add_argument("--t", type=real, help="tail-power shift, 0 <= t <= 1 (default 1)")
    parser.add_argument("--beta", type=real, help="log-mean-tail order (default inf)")


def add_exponent_options(parser, regime_default="auto"):
    """--p, --q and --regime."""
    parser.add_argument("--p", type=real, required=True, help="Domain exponent")
    parser.add_argument("--q", type=real, help="Image exponent (default p)")
    parser.add_argument(
        "--regime", choices=("auto", "lower", "upper"), default=regime_default,
        help="lower: p >= 1, 0 < q <= p. upper: 0 < p <= 1, q >= p",
    )


def add_size_options(parser, sizes: bool = False):
    """--size (or --sizes) and --rows."""
    if sizes:
        parser.add_argument("--sizes", type=size_list, required=True, help="Increasing sizes, comma-separated")
    else:
        parser.add_argument("--size", type=int, default=1000, help="Truncation size N (families only)")
    parser.add_argument(
        "--rows", default="auto",
        help="Row count: an integer, inf, or auto (inf for weighted means, N otherwise)",
    )


def family_from(args) -> FamilySpec:
    """The FamilySpec named on the command line."""
    return FamilySpec(Kind(args.family), alpha=args.alpha, t=args.t, beta=args.beta)


def matrix_from(args) -> NonNegativeMatrix:
    """The CSV matrix named on the command line."""
    return NonNegativeMatrix.from_csv(args.matrix)


def exponents_from(args) -> tuple:
    """(p, q, regime) with q defaulting to p; regime may be None when args.regime is auto and unresolvable."""
    q = args.p if args.q is None else args.q
    return args.p, q, resolve_regime(args.p, q, args.regime)


def resolve_regime(p: float, q: float, regime: str) -> Regime:
    """
    An explicit regime, or the one implied by (p, q).
    auto picks lower for p > 1 and upper for p < 1; at p = 1 it follows q.
    """
    if regime != "auto":
        return Regime.parse(regime)
    if p > 1 or (p == 1 and q <= 1):
        return Regime.LOWER
    return Regime.UPPER


def pair_from(args) -> ExponentPair:
    """A validated ExponentPair; raises RegimeViolation."""
    p, q, regime = exponents_from(args)
    return ExponentPair(p, q, regime)


def rows_from(args, spec) -> object:
    """None (square), an integer, or math.inf."""
    text = str(args.rows).strip().lower()
    if text == "auto":
        return math.inf if spec is not None and spec.kind.is_weighted_mean else None
    if text == "inf":
        return math.inf
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"Error! --rows must be an integer, inf or auto (got `{args.rows}`).") from None


def rows_label(rows) -> object:
    """How rows appear in reports."""
    if rows is None:
        return "square"
    return rows
