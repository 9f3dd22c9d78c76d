"""Exact invariants of generalized affine Springer fibers.

Root data, truncated Laurent series, torus elements and their Newton points
and discriminants, orders and stratifications of dominant coweights, weight
multiplicities, Coxeter elements, and the dimension and orbit-count formulas
built on top of them.
"""

__version__ = "0.1.0"

from .errors import DomainError, GasfError, InputError  # noqa: E402
from .root_datum import Coweight, RootDatum, Weight, build_root_datum  # noqa: E402

__all__ = ["Coweight", "DomainError", "GasfError", "InputError", "RootDatum", "Weight",
           "build_root_datum", "__version__"]
