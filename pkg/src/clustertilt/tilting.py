"""Tilting-theoretic predicates: (partial) tilting tests, torsion classes, tilted-algebra checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import BoundQuiverAlgebra
from .homology import DEFAULT_CAP, ext_dim, global_dimension, injective_dimension, projective_dimension
from .rep import DEFAULT_TRIALS, Representation, decompose, dual, hom_dim


@dataclass
class TiltingReport:
    pd_ok: bool
    rigid_ok: bool
    summand_count: int
    summand_dims: list[tuple[int, ...]]
    vertex_count: int
    undetermined_pairs: int = 0

    @property
    def verdict(self) -> str:
        if not (self.pd_ok and self.rigid_ok):
            return "none"
        if self.summand_count == self.vertex_count:
            return "tilting"
        return "partial"

    def as_dict(self) -> dict:
        return {
            "pd_at_most_one": self.pd_ok,
            "rigid": self.rigid_ok,
            "distinct_summands": self.summand_count,
            "summand_dims": [list(d) for d in self.summand_dims],
            "vertex_count": self.vertex_count,
            "verdict": self.verdict,
        }


def tilting_report(T: Representation, trials: int = DEFAULT_TRIALS, seed=None,
                   cap: int = DEFAULT_CAP) -> TiltingReport:
    """Test ``pd T <= 1``, ``Ext^1(T, T) = 0`` and count distinct indecomposable summands.

    ``T`` is tilting when it is partial tilting with as many pairwise
    non-isomorphic indecomposable summands as the quiver has vertices.
    """
    pd_ok = projective_dimension(T, cap).at_most(1) is True
    rigid_ok = ext_dim(T, T, 1, cap) == 0
    dec = decompose(T, trials, seed)
    return TiltingReport(
        pd_ok=pd_ok,
        rigid_ok=rigid_ok,
        summand_count=len(dec.summands),
        summand_dims=sorted(S.dims for S, _ in dec.summands),
        vertex_count=T.algebra.vertex_count,
        undetermined_pairs=dec.undetermined_pairs,
    )


def cotilting_report(T: Representation, trials: int = DEFAULT_TRIALS, seed=None,
                     cap: int = DEFAULT_CAP) -> TiltingReport:
    """Cotilting test for ``T``, run as a tilting test of ``D T`` over the opposite algebra."""
    return tilting_report(dual(T), trials, seed, cap)


def torsion_membership(T: Representation, M: Representation) -> tuple[bool, bool]:
    """``(M in Gen-class, M in Cogen-class)`` of the torsion pair induced by ``T``.

    The torsion class is ``{M : Ext^1(T, M) = 0}`` and the torsion-free class
    is ``{M : Hom(T, M) = 0}``.
    """
    return ext_dim(T, M, 1) == 0, hom_dim(T, M) == 0


@dataclass
class TiltedBattery:
    global_dimension: str
    global_dimension_ok: bool
    modules: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.global_dimension_ok and all(m["pass"] for m in self.modules)


def tilted_property_battery(C: BoundQuiverAlgebra, modules: Sequence[Representation],
                            cap: int = DEFAULT_CAP) -> TiltedBattery:
    """Global dimension at most two, and every listed indecomposable has pd <= 1 or id <= 1."""
    gd = global_dimension(C, cap)
    out = TiltedBattery(gd.render(), gd.at_most(2) is True)
    for M in modules:
        p, i = projective_dimension(M, cap), injective_dimension(M, cap)
        ok_p, ok_i = p.at_most(1) is True, i.at_most(1) is True
        witness = "pd <= 1" if ok_p else ("id <= 1" if ok_i else "neither")
        out.modules.append({
            "dims": list(M.dims),
            "pd": p.to_json(),
            "id": i.to_json(),
            "pass": ok_p or ok_i,
            "witness": witness,
        })
    return out
