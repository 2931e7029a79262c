"""Registry of scalar inequalities used in the monotonicity proofs, and a grid prober for them."""

import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

import conebound
from conebound.core import compensated_cumsum
from conebound.errors import DomainError, UnknownInequality
from conebound.specfun import log_mean_weight, power_difference

# Open-ended parameter ranges (alpha >= 3) are probed up to this value
ALPHA_CEILING = 10.0
BETA_POINTS = 11
TOLERANCE = 1e-10

Inequality = namedtuple(
    "Inequality",
    ["identifier", "citation", "statement", "sense", "variable", "forward", "reverse", "terms"],
    module="conebound.analysis",
)
Violation = namedtuple("Violation", ["params", "lhs", "rhs"], module="conebound.analysis")
ProbeReport = namedtuple(
    "ProbeReport",
    ["inequality_id", "citation", "grid", "reverse", "evaluations", "worst_margin", "violations", "passed"],
    module="conebound.analysis",
)


def __partial_power_sums(alpha: float, count: int) -> np.ndarray:
    """Lambda_1 .. Lambda_count with Lambda_n = 1^alpha + ... + n^alpha."""
    return compensated_cumsum(np.arange(1, count + 1, dtype=float) ** alpha)


def __ratio_of_sums(alpha, n_max, **_):
    """Lambda_n / Lambda_k against (n(n+1) / (k(k+1)))^((alpha+1)/2) for k >= n."""
    cumulative = __partial_power_sums(alpha, n_max)
    index = np.arange(1, n_max + 1, dtype=float)
    n, k = np.triu_indices(n_max)

    lhs = cumulative[n] / cumulative[k]
    rhs = (index[n] * (index[n] + 1) / (index[k] * (index[k] + 1))) ** ((alpha + 1) / 2)
    return lhs, rhs, lambda i: {"n": int(n[i]) + 1, "k": int(k[i]) + 1}


def __sum_against_pronic(alpha, n_max, **_):
    """Lambda_n against (n(n+1))^((alpha+1)/2) / (alpha+1)."""
    cumulative = __partial_power_sums(alpha, n_max)
    n = np.arange(1, n_max + 1, dtype=float)
    rhs = (n * (n + 1)) ** ((alpha + 1) / 2) / (alpha + 1)
    return cumulative, rhs, __label_n


def __sum_against_rational(alpha, n_max, **_):
    """Lambda_n against 4 n^2 (n+1)^alpha / ((1+alpha)(4n+1+alpha))."""
    cumulative = __partial_power_sums(alpha, n_max)
    n = np.arange(1, n_max + 1, dtype=float)
    rhs = 4 * n ** 2 * (n + 1) ** alpha / ((1 + alpha) * (4 * n + 1 + alpha))
    return cumulative, rhs, __label_n


def __two_factor_product(alpha, grid, **_):
    """((1+x)^(2-alpha) (1+2x)^((alpha-1)/2) - 1)((1+2x)^((1+alpha)/2) - 1) - (1+alpha) x^2 against 0."""
    x = np.linspace(0.0, 1.0, grid)
    first = np.expm1((2 - alpha) * np.log1p(x) + (alpha - 1) / 2 * np.log1p(2 * x))
    second = np.expm1((1 + alpha) / 2 * np.log1p(2 * x))
    lhs = first * second - (1 + alpha) * x ** 2
    return lhs, np.zeros_like(lhs), lambda i: {"x": float(x[i])}


def __squared_ratio_gap(alpha, n_max, **_):
    """n(n+1)^(2a)/Lambda_n^2 against (n+1)(n+2)^(2a)/Lambda_{n+1}^2 + 0.94(1+a)/(n+1)^2."""
    cumulative = __partial_power_sums(alpha, n_max + 1)
    n = np.arange(1, n_max + 1, dtype=float)
    lhs = n * (n + 1) ** (2 * alpha) / cumulative[:-1] ** 2
    rhs = (n + 1) * (n + 2) ** (2 * alpha) / cumulative[1:] ** 2 + 0.94 * (1 + alpha) / (n + 1) ** 2
    return lhs, rhs, __label_n


def __ratio_gap(alpha, n_max, **_):
    """2n(n+1)^a/Lambda_n + 0.94(1+a)/(n+1)^2 against 2(n+1)(n+2)^a/Lambda_{n+1}."""
    cumulative = __partial_power_sums(alpha, n_max + 1)
    n = np.arange(1, n_max + 1, dtype=float)
    lhs = 2 * n * (n + 1) ** alpha / cumulative[:-1] + 0.94 * (1 + alpha) / (n + 1) ** 2
    rhs = 2 * (n + 1) * (n + 2) ** alpha / cumulative[1:]
    return lhs, rhs, __label_n


def __shifted_root_bound(alpha, n_max, **_):
    """The two rational expressions in (n+1)^alpha and half-integer powers of n, n+2, n+3+1/n^2."""
    n = np.arange(1, n_max + 1, dtype=float)
    half = (1 + alpha) / 2
    lhs = (n + 1) ** alpha + n ** half * (n + 1) ** alpha / power_difference(n + 2, n, half)
    rhs = (n + 1) ** half * (n + 2) ** alpha / power_difference(n + 3 + 1 / n ** 2, n + 1, half)
    return lhs, rhs, __label_n


def __log_mean_growth(alpha, n_max, beta_max=ALPHA_CEILING, **_):
    """Ratio of consecutive partial sums of L_beta(i, i-1)^(alpha-1) against ((n+2)/(n+1))^alpha."""
    betas = [beta for beta in np.linspace(alpha, max(alpha, beta_max), BETA_POINTS) if beta > 1]
    betas = sorted(set(betas)) + [math.inf]

    n = np.arange(1, n_max + 1, dtype=float)
    lhs, rhs, labels = [], [], []
    target = ((n + 2) / (n + 1)) ** alpha

    for beta in betas:
        weights = log_mean_weight(beta, np.arange(1, n_max + 2, dtype=float), alpha - 1)
        cumulative = compensated_cumsum(weights)
        lhs.append(cumulative[1:] / cumulative[:-1])
        rhs.append(target)
        labels.extend((beta, int(value)) for value in n)

    return np.concatenate(lhs), np.concatenate(rhs), lambda i: {"beta": labels[i][0], "n": labels[i][1]}


def __label_n(index):
    return {"n": index + 1}


INEQUALITIES = {
    entry.identifier: entry
    for entry in (
        Inequality(
            "L4_4.22", "Lemma 4 (4.22)",
            "Lambda_n / Lambda_k <= (n(n+1) / (k(k+1)))^((alpha+1)/2) for k >= n >= 1",
            "le", "n", ((0.0, 1.0), (3.0, ALPHA_CEILING)), ((1.0, 3.0),), __ratio_of_sums,
        ),
        Inequality(
            "L4_4.25", "Lemma 4 (4.25)",
            "Lambda_n <= (n(n+1))^((alpha+1)/2) / (alpha+1)",
            "le", "n", ((0.0, 1.0), (3.0, ALPHA_CEILING)), ((1.0, 3.0),), __sum_against_pronic,
        ),
        Inequality(
            "L5_5.15", "Lemma 5 (5.15)",
            "Lambda_n >= 4 n^2 (n+1)^alpha / ((1+alpha)(4n+1+alpha))",
            "ge", "n", ((1.0, 3.0),), ((3.0, ALPHA_CEILING),), __sum_against_rational,
        ),
        Inequality(
            "L6_5.14", "Lemma 6 (5.14)",
            "((1+x)^(2-alpha)(1+2x)^((alpha-1)/2) - 1)((1+2x)^((1+alpha)/2) - 1) - (1+alpha)x^2 >= 0 on [0, 1]",
            "ge", "x", ((1.0, 3.0),), ((3.0, ALPHA_CEILING),), __two_factor_product,
        ),
        Inequality(
            "L7_5.18", "Lemma 7 (5.18)",
            "n(n+1)^(2a)/Lambda_n^2 - (n+1)(n+2)^(2a)/Lambda_{n+1}^2 - 0.94(1+a)/(n+1)^2 >= 0",
            "ge", "n", ((0.14, 1.0),), None, __squared_ratio_gap,
        ),
        Inequality(
            "L8_5.16", "Lemma 8 (5.16)",
            "2n(n+1)^a/Lambda_n - 2(n+1)(n+2)^a/Lambda_{n+1} + 0.94(1+a)/(n+1)^2 >= 0",
            "ge", "n", ((0.14, 1.0),), None, __ratio_gap,
        ),
        Inequality(
            "L10", "Lemma 10",
            "(n+1)^a + n^h(n+1)^a/((n+2)^h - n^h) >= (n+1)^h(n+2)^a/((n+3+1/n^2)^h - (n+1)^h), h = (1+a)/2",
            "ge", "n", ((0.0, 1.0),), None, __shifted_root_bound,
        ),
        Inequality(
            "E4.2", "Section 4 (4.2)",
            "sum_{i<=n+1} L_beta(i,i-1)^(a-1) / sum_{i<=n} L_beta(i,i-1)^(a-1) >= ((n+2)/(n+1))^a, beta >= a >= 2",
            "ge", "n", ((2.0, ALPHA_CEILING),), None, __log_mean_growth,
        ),
    )
}


def probe(identifier: str, params: dict = None, grid: int = None, reverse: bool = False,
          threads: int = None) -> ProbeReport:
    """
    Evaluate a registered inequality over a grid of its parameters.

    A point violates the claim when its margin, normalized by
    max(1, |lhs|, |rhs|), falls below -1e-10.
    Args:
        identifier (str): A key of INEQUALITIES
        params (dict): Optional alpha_min, alpha_max, n_max and beta_max
        grid (int): Points per scalar dimension; defaults to the `grid` setting
        reverse (bool): Test the reversed claim on the reversed box
        threads (int): Worker threads over alpha values
    Returns (ProbeReport): The report, violations sorted by grid position
    Raises: UnknownInequality, DomainError if the box lies outside the claim's range
    """
    try:
        inequality = INEQUALITIES[identifier]
    except KeyError:
        known = ", ".join(INEQUALITIES)
        raise UnknownInequality(f"Error! Unknown inequality `{identifier}`. Known: {known}.") from None

    params = dict(params or {})
    grid = grid or conebound.settings.value("grid")
    threads = threads or conebound.settings.value("threads")
    n_max = int(params.get("n_max") or conebound.settings.value("n_max"))
    beta_max = float(params.get("beta_max") or ALPHA_CEILING)

    boxes = inequality.reverse if reverse else inequality.forward
    if boxes is None:
        raise DomainError(f"Error! `{identifier}` has no reversed form.")
    sense = __flipped(inequality.sense) if reverse else inequality.sense

    intervals = __requested_intervals(identifier, boxes, params.get("alpha_min"), params.get("alpha_max"))
    alphas = np.unique(np.concatenate([np.linspace(low, high, grid) for low, high in intervals]))

    def evaluate(alpha):
        lhs, rhs, label = inequality.terms(float(alpha), n_max=n_max, grid=grid, beta_max=beta_max)
        margin = (lhs - rhs) if sense == "ge" else (rhs - lhs)
        scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
        normalized = margin / scale
        found = [
            Violation({"alpha": float(alpha), **label(int(i))}, float(lhs[i]), float(rhs[i]))
            for i in np.flatnonzero(normalized < -TOLERANCE)
        ]
        return found, float(np.min(normalized)), normalized.size

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(evaluate, alphas))
    else:
        results = [evaluate(alpha) for alpha in alphas]

    violations = [violation for found, _, _ in results for violation in found]
    worst = min(result[1] for result in results)
    evaluations = sum(result[2] for result in results)

    box = " U ".join(f"[{low:g}, {high:g}]" for low, high in intervals)
    description = f"alpha in {box} ({alphas.size} values)"
    description += f", x in [0, 1] ({grid} values)" if inequality.variable == "x" else f", n <= {n_max}"

    logging.info("Probe %s%s: %s evaluations, %s violations", identifier,
                 " (reversed)" if reverse else "", evaluations, len(violations))

    return ProbeReport(
        identifier, inequality.citation, description, reverse, evaluations, worst, violations,
        not violations,
    )


def __flipped(sense: str) -> str:
    return "le" if sense == "ge" else "ge"


def __requested_intervals(identifier, boxes, alpha_min, alpha_max) -> list:
    """The declared intervals, or the requested one if it fits inside a single declared interval."""
    if alpha_min is None and alpha_max is None:
        return list(boxes)

    for low, high in boxes:
        start = low if alpha_min is None else float(alpha_min)
        stop = high if alpha_max is None else float(alpha_max)
        if low <= start <= stop <= high:
            return [(start, stop)]

    declared = " U ".join(f"[{low:g}, {high:g}]" for low, high in boxes)
    raise DomainError(f"Error! `{identifier}` is only claimed for alpha in {declared}.")
