"""Package conebound. Sharp norm bounds for non-negative matrices on the cone of non-increasing sequences.

The user need only know about `engine.compute_bound`, the family generators
and the published constants; the oracle and analysis modules check them.
"""

from conebound.settings import Settings

settings = Settings()

# pylint: disable=wrong-import-position
from conebound import core
from conebound import specfun
from conebound import families
from conebound import engine
from conebound import oracle
from conebound import analysis
from conebound import report
