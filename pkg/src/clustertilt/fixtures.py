"""The bundled worked-example data: three algebras, the pair (C, B) and named modules.

Everything is read from the files in ``clustertilt/data`` so that the file
formats and the library are exercised together.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import BoundQuiverAlgebra
from .cluster import make_pair
from .formats import load_algebra, load_modules, load_pair_spec
from .linalg import DEFAULT_PRIME
from .rep import DEFAULT_TRIALS, Representation, direct_sum

# dimension vectors of the thirteen indecomposable C-modules, in file order
C_INDECOMPOSABLE_DIMS = [
    (0, 0, 0, 0, 1), (0, 0, 0, 1, 1), (0, 0, 1, 1, 1), (0, 1, 1, 1, 1),
    (0, 0, 0, 1, 0), (0, 0, 1, 1, 0), (0, 1, 1, 1, 0), (0, 0, 1, 0, 0),
    (0, 1, 1, 0, 0), (1, 1, 1, 0, 0), (0, 1, 0, 0, 0), (1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
]


def algebra(name: str, prime: int = DEFAULT_PRIME) -> BoundQuiverAlgebra:
    """``"A"`` (hereditary), ``"C"`` (tilted) or ``"B"`` (cluster-tilted)."""
    # positional call into the cache so that every spelling shares one object
    return _algebra(name, prime)


@lru_cache(maxsize=None)
def _algebra(name: str, prime: int) -> BoundQuiverAlgebra:
    return load_algebra(f"fix{name}.alg", prime)


def pair(prime: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS, seed=None):
    """The verified pair (C, B), sharing algebra objects with :func:`algebra`."""
    return _pair(prime, trials, seed)


@lru_cache(maxsize=None)
def _pair(prime: int, trials: int, seed):
    spec, _ = load_pair_spec("fixpair.pair")
    return make_pair(algebra("C", prime), algebra("B", prime), spec.arrow_map,
                     spec.cluster_tilted, trials, seed)


def module(name: str, over: str = "C", prime: int = DEFAULT_PRIME) -> Representation:
    """A bundled module file (direct sum of its blocks) over the named fixture algebra."""
    mods = load_modules(algebra(over, prime), name)
    return mods[0] if len(mods) == 1 else direct_sum(*mods)


def c_indecomposables(prime: int = DEFAULT_PRIME) -> list[Representation]:
    return load_modules(algebra("C", prime), "indecC.mod")


def tilting_module(prime: int = DEFAULT_PRIME) -> Representation:
    return module("tiltA.mod", "A", prime)
