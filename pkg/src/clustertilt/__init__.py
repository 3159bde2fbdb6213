"""Homological algebra for bound quiver algebras over prime fields.

Modules are right modules written as quiver representations; the main entry
points are re-exported here.
"""

__version__ = "0.1.0"

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra, opposite_algebra  # noqa: E402
from .rep import (  # noqa: E402
    ModuleMap,
    Representation,
    decompose,
    direct_sum,
    dual,
    hom_basis,
    hom_dim,
    injective,
    is_isomorphic,
    make_representation,
    projective,
    simple,
    thin_module,
)
from .homology import (  # noqa: E402
    ext_dim,
    injective_dimension,
    projective_dimension,
    projective_resolution,
    tau,
    tau_inv,
    tor_dim,
)
from .cluster import classify_pd_B, make_pair, rigidity_report  # noqa: E402
from .tilting import tilting_report  # noqa: E402
