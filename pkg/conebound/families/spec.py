"""Family descriptors: which matrix, with which parameters."""

import math
from enum import Enum

from conebound.errors import DomainError


class Kind(Enum):
    """Matrix families. Values are the command-line `--family` names."""

    CESARO = "cesaro"
    TAIL_POWER = "tail-power"
    TAIL_ALPHA_K = "tail-alpha-k"
    LOG_MEAN_TAIL = "log-mean-tail"
    WEIGHTED_MEAN_POWER = "weighted-mean-power"
    WEIGHTED_MEAN_POWER_DIFF = "weighted-mean-power-diff"
    NORLUND_POWER_DIFF = "norlund-power-diff"
    NORLUND_POWER_SUM = "norlund-power-sum"
    NORLUND_POWER = "norlund-power"

    @property
    def is_tail(self) -> bool:
        """Upper-triangular (Copson-type) kinds, supported on k >= j."""
        return self in (Kind.TAIL_POWER, Kind.TAIL_ALPHA_K, Kind.LOG_MEAN_TAIL)

    @property
    def is_weighted_mean(self) -> bool:
        """a_{j,k} = lambda_k / Lambda_j. Cesaro is the weighted mean with lambda = 1."""
        return self in (Kind.CESARO, Kind.WEIGHTED_MEAN_POWER, Kind.WEIGHTED_MEAN_POWER_DIFF)

    @property
    def is_norlund(self) -> bool:
        """a_{j,k} = lambda_{j-k+1} / Lambda_j."""
        return self in (Kind.NORLUND_POWER_DIFF, Kind.NORLUND_POWER_SUM, Kind.NORLUND_POWER)

    @classmethod
    def names(cls) -> list:
        """The command-line vocabulary."""
        return [kind.value for kind in cls]


class FamilySpec:
    """A family kind together with its numeric parameters."""

    def __init__(self, kind, alpha: float = None, t: float = None, beta: float = None):
        """
        Args:
            kind (Kind or str): The family
            alpha (float): The power parameter (ignored by Cesaro)
            t (float): The TailPower shift, 0 <= t <= 1 (default 1)
            beta (float): The log-mean order, beta >= alpha; math.inf allowed
        Raises: DomainError if a parameter is outside the family's constructor range
        """
        kind = kind if isinstance(kind, Kind) else Kind(kind)
        self.kind = kind
        self.alpha = None if alpha is None else float(alpha)
        self.t = None
        self.beta = None

        if kind is Kind.CESARO:
            self.alpha = None
            return

        if self.alpha is None or not math.isfinite(self.alpha):
            raise DomainError(f"Error! `{kind.value}` needs a finite --alpha.")

        alpha = self.alpha
        if kind is Kind.TAIL_POWER:
            self.t = 1.0 if t is None else float(t)
            if alpha <= 0:
                raise DomainError(f"Error! tail-power needs alpha > 0 (got {alpha}).")
            if not 0 <= self.t <= 1:
                raise DomainError(f"Error! tail-power needs 0 <= t <= 1 (got {self.t}).")
        elif kind is Kind.TAIL_ALPHA_K:
            if alpha < 1:
                raise DomainError(f"Error! tail-alpha-k needs alpha >= 1 (got {alpha}).")
        elif kind is Kind.LOG_MEAN_TAIL:
            self.beta = math.inf if beta is None else float(beta)
            if alpha < 1:
                raise DomainError(f"Error! log-mean-tail needs alpha >= 1 (got {alpha}).")
            if not (self.beta >= alpha and self.beta > 1):
                raise DomainError(
                    f"Error! log-mean-tail needs beta >= alpha and beta > 1 (got beta={self.beta})."
                )
        elif kind is Kind.WEIGHTED_MEAN_POWER:
            if alpha <= -1:
                raise DomainError(f"Error! weighted-mean-power needs alpha > -1 (got {alpha}).")
        elif kind in (Kind.WEIGHTED_MEAN_POWER_DIFF, Kind.NORLUND_POWER_DIFF):
            if alpha <= 0:
                raise DomainError(f"Error! `{kind.value}` needs alpha > 0 (got {alpha}).")
        elif kind in (Kind.NORLUND_POWER_SUM, Kind.NORLUND_POWER):
            if alpha < 0:
                raise DomainError(f"Error! `{kind.value}` needs alpha >= 0 (got {alpha}).")

    @property
    def label(self) -> str:
        """A compact description used in reports and cache keys."""
        parts = [self.kind.value]
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha:g}")
        if self.t is not None:
            parts.append(f"t={self.t:g}")
        if self.beta is not None:
            parts.append(f"beta={self.beta:g}")
        return " ".join(parts)

    @property
    def key(self) -> str:
        """An exact identity string for caches."""
        return f"{self.kind.value} {self.alpha!r} {self.t!r} {self.beta!r}"

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FamilySpec({self.label})"
