"""Smoothability tests for monomial curves and cones over finite point sets.

Exact rational linear algebra (``exactmat``), numerical semigroups and the
Buchweitz/Dedekind test (``semigroup``), binomial presentations and graded
T^1 of monomial curves (``presentation``), point configurations and Gale
duality (``pointset``), and graded T^1 of cones over points (``conet1``).
"""

from .errors import *  # noqa: F401,F403
from .verdict import Outcome, Verdict
from .exactmat import RatMatrix, nullspace, rank, rref
from .semigroup import NumericalSemigroup, from_generators
from .presentation import minimal_presentation, t1_profile
from .pointset import PointConfiguration, classify_generic
from .conet1 import GradedConeModel, build

__version__ = "0.1.0"
