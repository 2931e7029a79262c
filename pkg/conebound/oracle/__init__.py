"""Independent checks of the closed-form bound."""

from .sampling import batch_ratios, ratio, restart_points, sample_monotone
from .search import local_search, repair
from .verify import OracleReport, Verdict, enumerate_steps, lemma1_check, verify
