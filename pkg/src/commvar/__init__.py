"""Commuting varieties over classical Lie algebras, computed exactly.

Layers, bottom up: :mod:`lie` (matrix realisations), :mod:`orbits` (nilpotent
orbits by partition), :mod:`variety` (C_r(V) as a polynomial ideal),
:mod:`groebner` / :mod:`counting` / :mod:`engine` (dimensions), and
:mod:`formulas` / :mod:`verify` (closed forms and the suites that check them).
"""

from .errors import (CommvarError, DomainError, InputError, ResourceError,
                     UnsupportedLocusError)
from .lie import LieAlgebraBasis, LieType, algebra, construct_algebra, select_subalgebra
from .orbits import OrbitDescriptor, Partition, centralizer_dim, orbit_dim
from .variety import CommutingVarietyInstance, Locus, compile_instance
from .groebner import GroebnerBasis, GroebnerConfig, groebner, ideal_dimension
from .counting import count_points, slope_fit
from .engine import DimensionReport, EngineConfig, dimension
from .formulas import CATALOG, FormulaCatalog, bound_table, threshold_check
from .verify import run_suite

__version__ = "0.1.0"
