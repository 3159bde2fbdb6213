"""Resolutions, Ext and Tor, homological dimensions and Auslander-Reiten translates."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import linalg as la
from .algebra import BoundQuiverAlgebra
from .errors import CapTooSmall, GlobalDimensionTooLarge, InvariantBreach
from .rep import (
    ModuleMap,
    Representation,
    cokernel,
    compose,
    coregular_module,
    cosyzygy,
    dual,
    dual_map,
    generator_position,
    hom_basis,
    hom_dim,
    hom_from_generators,
    injective_envelope,
    kernel,
    projective_cover,
    projective_sum,
    regular_module,
    simple,
    span_dim,
    split_element,
    syzygy,
    zero_module,
)

DEFAULT_CAP = 32


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantBreach(message)


# ---------------------------------------------------------------- resolutions


@dataclass
class Resolution:
    """A prefix of a minimal projective (or injective) resolution.

    For a projective resolution ``differentials[k]`` maps ``terms[k+1] ->
    terms[k]`` and ``augmentation`` is ``terms[0] -> M``.  Injective
    resolutions are stored with all arrows reversed.
    """

    direction: str
    module: Representation
    terms: list[Representation]
    differentials: list[ModuleMap]
    augmentation: ModuleMap | None
    syzygies: list[Representation]
    terminated: bool
    cap_used: int
    tops: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def length(self) -> int | None:
        """Index of the last nonzero term when terminated."""
        if not self.terminated:
            return None
        return len(self.terms) - 1 if self.terms else 0

    def term_dims(self) -> list[tuple[int, ...]]:
        return [P.dims for P in self.terms]

    def term_summands(self) -> list[list[int]]:
        """1-based vertex labels of the indecomposable summands of each term."""
        return [[v + 1 for v in tops] for tops in self.tops]


def projective_resolution(M: Representation, cap: int = DEFAULT_CAP) -> Resolution:
    if cap < 1:
        raise CapTooSmall("resolution cap must be at least 1")
    terms, diffs, syz = [], [], []
    aug = None
    prev_inc = None
    cur = M
    terminated = M.dim == 0
    while not terminated and len(terms) < cap:
        P, epi = projective_cover(cur)
        K, inc = kernel(epi)
        if prev_inc is None:
            aug = epi
        else:
            d = compose(prev_inc, epi)
            if diffs:
                _require(compose(diffs[-1], d).is_zero(), "resolution differentials do not compose to zero")
            diffs.append(d)
        terms.append(P)
        syz.append(K)
        prev_inc = inc
        cur = K
        terminated = K.dim == 0
    return Resolution("projective", M, terms, diffs, aug, syz, terminated, cap,
                      [P.generators for P in terms])


def injective_resolution(M: Representation, cap: int = DEFAULT_CAP) -> Resolution:
    r = projective_resolution(dual(M), cap)
    return Resolution(
        "injective",
        M,
        [dual(P) for P in r.terms],
        [dual_map(d) for d in r.differentials],
        dual_map(r.augmentation) if r.augmentation is not None else None,
        [dual(K) for K in r.syzygies],
        r.terminated,
        cap,
        r.tops,
    )


# ---------------------------------------------------------------- dimensions


@dataclass(frozen=True)
class DimensionReport:
    value: int | None = None
    at_least: int | None = None
    infinite: bool = False
    certificate: str = ""

    @classmethod
    def exact(cls, value: int, certificate: str = "") -> "DimensionReport":
        return cls(value=value, certificate=certificate)

    @classmethod
    def lower_bound(cls, bound: int, certificate: str = "") -> "DimensionReport":
        return cls(at_least=bound, certificate=certificate)

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def at_most(self, k: int) -> bool | None:
        """Whether the dimension is ``<= k``; ``None`` when unknown."""
        if self.value is not None:
            return self.value <= k
        if self.infinite or (self.at_least is not None and self.at_least > k):
            return False
        return None

    def render(self) -> str:
        if self.value is not None:
            return str(self.value)
        if self.infinite:
            return "infinite"
        return f"at-least({self.at_least})"

    def to_json(self):
        if self.value is not None:
            return self.value
        return self.render()


def pd_by_resolution(M: Representation, cap: int = DEFAULT_CAP) -> DimensionReport:
    res = projective_resolution(M, cap)
    if res.terminated:
        return DimensionReport.exact(res.length, f"minimal projective resolution has length {res.length}")
    return DimensionReport.lower_bound(cap, f"resolution still running after {cap} terms")


def projective_dimension(M: Representation, cap: int = DEFAULT_CAP) -> DimensionReport:
    if M.dim == 0:
        return DimensionReport.exact(0, "zero module")
    P, epi = projective_cover(M)
    if P.dim == M.dim:
        return DimensionReport.exact(0, "M is projective")
    DA = coregular_module(M.algebra)
    if hom_dim(DA, tau(M)) == 0:
        return DimensionReport.exact(1, "not projective and Hom(DA, tau M) = 0")
    rep = pd_by_resolution(M, cap)
    if rep.is_exact:
        return rep
    return DimensionReport.lower_bound(max(cap, 2), rep.certificate)


def injective_dimension(M: Representation, cap: int = DEFAULT_CAP) -> DimensionReport:
    """Computed as the projective dimension of ``DM`` over the opposite algebra."""
    rep = projective_dimension(dual(M), cap)
    cert = {
        0: "M is injective",
        1: "not injective and Hom(tau^-1 M, A) = 0",
    }.get(rep.value, rep.certificate.replace("projective", "injective"))
    return DimensionReport(rep.value, rep.at_least, rep.infinite, cert)


pd = projective_dimension
id_ = injective_dimension


@lru_cache(maxsize=64)
def global_dimension(A: BoundQuiverAlgebra, cap: int = DEFAULT_CAP) -> DimensionReport:
    best = 0
    for i in range(1, A.vertex_count + 1):
        rep = pd_by_resolution(simple(A, i), cap)
        if not rep.is_exact:
            return DimensionReport.lower_bound(cap, f"simple S{i}: {rep.certificate}")
        best = max(best, rep.value)
    return DimensionReport.exact(best, "maximum projective dimension of the simple modules")


# ---------------------------------------------------------------- Ext and Tor


def _cochain_matrix(d: ModuleMap, N: Representation) -> np.ndarray:
    """Matrix of ``Hom(d, N): Hom(P_k, N) -> Hom(P_{k+1}, N)``.

    ``Hom(P, N)`` for a projective sum ``P`` is identified with the direct sum
    of ``N_{i_s}`` over the summand tops ``i_s`` (image of each generator).
    """
    src, tgt = d.target, d.source  # d: P_{k+1} -> P_k
    rows = [N.dims[j] for j in tgt.generators]
    cols = [N.dims[i] for i in src.generators]
    out = la.zeros(sum(rows), sum(cols))
    r0 = 0
    for t, j in enumerate(tgt.generators):
        v, c = generator_position(tgt, t)
        pieces = split_element(src, v, d.maps[v][:, c])
        c0 = 0
        for s, i in enumerate(src.generators):
            out[r0:r0 + rows[t], c0:c0 + cols[s]] = N.act_element(pieces[s], i, j)
            c0 += cols[s]
        r0 += rows[t]
    return out


def ext_dim(M: Representation, N: Representation, n: int, cap: int = DEFAULT_CAP) -> int:
    """``dim Ext^n(M, N)`` from the minimal projective resolution of ``M``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return hom_dim(M, N)
    if cap <= n:
        raise CapTooSmall(f"Ext^{n} needs a resolution cap above {n}, got {cap}")
    res = projective_resolution(M, n + 2)
    if len(res.terms) <= n:
        return 0
    p = M.prime
    P = res.terms[n]
    total = sum(N.dims[i] for i in P.generators)
    out_rank = la.rank(_cochain_matrix(res.differentials[n], N), p) if len(res.differentials) > n else 0
    in_rank = la.rank(_cochain_matrix(res.differentials[n - 1], N), p)
    return total - out_rank - in_rank


def tor_dim(M: Representation, N: Representation, n: int = 1, cap: int = DEFAULT_CAP) -> int:
    """``dim Tor_n(M, N)``; ``N`` is a left module, i.e. a right module over the opposite algebra."""
    if N.algebra is not M.algebra.opposite():
        raise ValueError("N must be a module over the opposite algebra")
    return ext_dim(M, dual(N), n, cap)


def _tensor_quotient(M: Representation, N: Representation):
    """Projections ``M_v (x) N_v -> (M (x)_A N)`` restricted to each vertex block."""
    A, p = M.algebra, M.prime
    sizes = [m * n for m, n in zip(M.dims, N.dims)]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offsets[-1])
    cols = []
    for k, a in enumerate(A.arrows):
        i, j = a.source, a.target
        width = M.dims[i] * N.dims[j]
        if width == 0:
            continue
        block = la.zeros(total, width)
        block[offsets[j]:offsets[j + 1]] += np.kron(M.maps[k], la.identity(N.dims[j]))
        block[offsets[i]:offsets[i + 1]] -= np.kron(la.identity(M.dims[i]), N.maps[k])
        cols.append(block % p)
    rel = np.concatenate(cols, axis=1) if cols else la.zeros(total, 0)
    proj, sec = la.quotient_basis(total, la.image_basis(rel, p))
    return proj, sec, offsets


def tensor_dim(M: Representation, N: Representation) -> int:
    """``dim M (x)_A N`` computed as a quotient of the raw product space."""
    proj, _, _ = _tensor_quotient(M, N)
    return proj.shape[0]


def _tensor_map_rank(f: ModuleMap, N: Representation) -> int:
    p = f.prime
    ps, ss, _ = _tensor_quotient(f.source, N)
    pt, _, _ = _tensor_quotient(f.target, N)
    raw = la.block_diag([np.kron(m, la.identity(n)) for m, n in zip(f.maps, N.dims)])
    return la.rank(la.matmul(la.matmul(pt, raw, p), ss, p), p)


def tor_dim_by_tensor(M: Representation, N: Representation, n: int = 1) -> int:
    """``dim Tor_n(M, N)`` as ``ker(Omega^n M (x) N -> P_{n-1} (x) N)``; independent of ``tor_dim``."""
    if n < 1:
        return tensor_dim(M, N)
    cur = M
    for _ in range(n - 1):
        cur = syzygy(cur)
    P, epi = projective_cover(cur)
    K, inc = kernel(epi)
    return tensor_dim(K, N) - _tensor_map_rank(inc, N)


# ---------------------------------------------------------------- transpose and translates


def transpose(M: Representation) -> Representation:
    """``Tr M``: cokernel of ``Hom(P_0, A) -> Hom(P_1, A)`` for a minimal presentation."""
    A = M.algebra
    op = A.opposite()
    if M.dim == 0:
        return zero_module(op)
    P0, epi = projective_cover(M)
    K, inc = kernel(epi)
    if K.dim == 0:
        return zero_module(op)
    P1, epi1 = projective_cover(K)
    d1 = compose(inc, epi1)
    tops0, tops1 = P0.generators, P1.generators
    # x[s][t] in e_{i_s} A e_{j_t}: coefficient of d1(generator t) on summand s
    x = [[None] * len(tops1) for _ in tops0]
    for t in range(len(tops1)):
        v, c = generator_position(P1, t)
        for s, piece in enumerate(split_element(P0, v, d1.maps[v][:, c])):
            x[s][t] = piece
    Q0 = projective_sum(op, tops0)
    Q1 = projective_sum(op, tops1)
    images = []
    for s, i in enumerate(tops0):
        images.append(np.concatenate(
            [x[s][t][A.block(i, j)] for t, j in enumerate(tops1)]
        ).astype(np.int64))
    f = hom_from_generators(Q0, Q1, images)
    _require(f.is_valid(), "transposed presentation is not a module map")
    return cokernel(f)[0]


def tau(M: Representation) -> Representation:
    return dual(transpose(M))


def tau_inv(M: Representation) -> Representation:
    return transpose(dual(M))


# ---------------------------------------------------------------- stable Hom


def stable_hom_under(M: Representation, N: Representation) -> int:
    """``dim Hom(M, N)`` modulo maps factoring through a projective."""
    total = hom_dim(M, N)
    if total == 0 or N.dim == 0:
        return total
    P, pi = projective_cover(N)
    through = [compose(pi, g) for g in hom_basis(M, P)]
    return total - span_dim(through)


def stable_hom_over(M: Representation, N: Representation) -> int:
    """``dim Hom(M, N)`` modulo maps factoring through an injective."""
    total = hom_dim(M, N)
    if total == 0 or M.dim == 0:
        return total
    I, iota = injective_envelope(M)
    through = [compose(h, iota) for h in hom_basis(I, N)]
    return total - span_dim(through)


def ar_formula_dims(M: Representation, N: Representation) -> tuple[int, int, int]:
    """``(dim Ext^1(M,N), dim Hom-under(tau^-1 N, M), dim Hom-over(N, tau M))``; all three agree."""
    return ext_dim(M, N, 1), stable_hom_under(tau_inv(N), M), stable_hom_over(N, tau(M))


# ---------------------------------------------------------------- small-dimension criteria


def pd_at_most_one(M: Representation) -> bool:
    """``pd M <= 1`` iff ``Hom(DA, tau M) = 0``."""
    return hom_dim(coregular_module(M.algebra), tau(M)) == 0


def id_at_most_one(M: Representation) -> bool:
    """``id M <= 1`` iff ``Hom(tau^-1 M, A) = 0``."""
    return hom_dim(tau_inv(M), regular_module(M.algebra)) == 0


@lru_cache(maxsize=64)
def tau_inv_cosyzygy_regular(A: BoundQuiverAlgebra) -> Representation:
    """``tau^-1 Omega^-1 A``."""
    return tau_inv(cosyzygy(regular_module(A)))


@lru_cache(maxsize=64)
def tau_syzygy_coregular(A: BoundQuiverAlgebra) -> Representation:
    """``tau Omega DA``."""
    return tau(syzygy(coregular_module(A)))


@dataclass
class LowDimensionCriteria:
    pd_le1_by_resolution: bool
    pd_le1_by_hom: bool
    id_le1_by_resolution: bool
    id_le1_by_hom: bool

    @property
    def consistent(self) -> bool:
        return (self.pd_le1_by_resolution == self.pd_le1_by_hom
                and self.id_le1_by_resolution == self.id_le1_by_hom)


def low_dimension_criteria(M: Representation, cap: int = DEFAULT_CAP) -> LowDimensionCriteria:
    """Decide ``pd <= 1`` and ``id <= 1`` over an algebra of global dimension at most two.

    Each is computed by a truncated resolution and by a single Hom-vanishing
    test: ``Hom(tau^-1 Omega^-1 A, M) = 0`` and ``Hom(M, tau Omega DA) = 0``.
    """
    A = M.algebra
    gd = global_dimension(A, min(cap, 4))
    if gd.at_most(2) is not True:
        raise GlobalDimensionTooLarge(f"global dimension is {gd.render()}, need at most 2")
    return LowDimensionCriteria(
        pd_le1_by_resolution=pd_by_resolution(M, 2).at_most(1) is True,
        pd_le1_by_hom=hom_dim(tau_inv_cosyzygy_regular(A), M) == 0,
        id_le1_by_resolution=pd_by_resolution(dual(M), 2).at_most(1) is True,
        id_le1_by_hom=hom_dim(M, tau_syzygy_coregular(A)) == 0,
    )
