"""Split extensions ``B -> C``, induction/coinduction, and the pd/rigidity transfer from C to B.

A :class:`SplitExtensionPair` records an algebra ``C`` whose quiver sits inside
the quiver of ``B`` (same vertices, ``B`` has extra "new" arrows) such that
killing the new arrows gives an algebra surjection ``pi: B -> C`` split by the
inclusion ``C -> B``.  The kernel ``E`` of ``pi`` is a C-C-bimodule; its right
C-module structure is computed directly and compared with ``tau^-1 Omega^-1 C``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg as la
from .algebra import BoundQuiverAlgebra, Path
from .errors import (
    BudgetExhausted,
    GlobalDimensionTooLarge,
    InvariantBreach,
    NotClusterTilted,
    NotSplitExtension,
)
from .homology import (
    DEFAULT_CAP,
    ar_formula_dims,
    ext_dim,
    injective_dimension,
    low_dimension_criteria,
    pd_at_most_one,
    projective_dimension,
    projective_resolution,
    stable_hom_under,
    tau,
    tau_inv,
    tau_inv_cosyzygy_regular,
    tau_syzygy_coregular,
)
from .rep import (
    DEFAULT_TRIALS,
    ModuleMap,
    Representation,
    coregular_module,
    cosyzygy,
    decompose,
    direct_sum,
    dual,
    embed,
    generator_position,
    hom_basis,
    hom_dim,
    hom_from_generators,
    injective,
    injective_envelope,
    is_isomorphic,
    is_projective,
    kernel,
    projective,
    projective_cover,
    random_combination,
    regular_module,
    restrict,
    syzygy,
    validate,
    _rng,
)


@dataclass(eq=False)
class SplitExtensionPair:
    C: BoundQuiverAlgebra
    B: BoundQuiverAlgebra
    arrow_map: dict[int, int]  # C-arrow index -> B-arrow index
    new_arrows: tuple[int, ...]
    inclusion: np.ndarray  # (dim B, dim C): C -> B
    projection: np.ndarray  # (dim C, dim B): B -> C, kills the new arrows
    cluster_tilted: bool = False
    E_module: Representation | None = None
    E_direct: Representation | None = None
    verified: bool = False
    _op: "SplitExtensionPair | None" = field(default=None, repr=False)

    @property
    def prime(self) -> int:
        return self.C.prime

    @property
    def new_arrow_names(self) -> list[str]:
        return [self.B.arrows[k].name for k in self.new_arrows]

    def embed(self, M: Representation) -> Representation:
        return embed(M, self.B, self.arrow_map)

    def restrict(self, N: Representation) -> Representation:
        return restrict(N, self.C, self.arrow_map)

    def opposite(self) -> "SplitExtensionPair":
        """The same pair over the opposite algebras (arrow indices are preserved)."""
        if self._op is None:
            op = SplitExtensionPair(
                self.C.opposite(), self.B.opposite(), dict(self.arrow_map), self.new_arrows,
                self.inclusion, self.projection, self.cluster_tilted, verified=self.verified,
            )
            op._op = self
            self._op = op
        return self._op

    def kernel_blocks(self) -> dict[tuple[int, int], np.ndarray]:
        """Column bases of ``e_i E e_j`` inside the coordinates of ``B``."""
        return _kernel_blocks(self)

    def full_blocks(self) -> dict[tuple[int, int], np.ndarray]:
        B = self.B
        eye = la.identity(B.dim)
        n = B.vertex_count
        return {(i, j): eye[:, B.block(i, j)] for i in range(n) for j in range(n)}


def _kernel_blocks(pair: SplitExtensionPair) -> dict[tuple[int, int], np.ndarray]:
    B, p = pair.B, pair.prime
    n = B.vertex_count
    out = {}
    for i in range(n):
        for j in range(n):
            idx = B.block(i, j)
            ker = la.kernel_columns(pair.projection[:, idx], p)
            cols = la.zeros(B.dim, ker.shape[1])
            cols[idx] = ker
            out[(i, j)] = cols
    return out


# ---------------------------------------------------------------- construction


def _map_path(path: Path, amap: dict[int, int], src: BoundQuiverAlgebra, dst: BoundQuiverAlgebra) -> Path:
    arrows = tuple(amap[k] for k in path.arrows)
    return Path(path.source, path.target, arrows)


def _structure_maps(C: BoundQuiverAlgebra, B: BoundQuiverAlgebra, amap: dict[int, int]):
    back = {b: c for c, b in amap.items()}
    inc = la.zeros(B.dim, C.dim)
    for k, path in enumerate(C.basis):
        inc[:, k] = B.normal_form(_map_path(path, amap, C, B))
    proj = la.zeros(C.dim, B.dim)
    for k, path in enumerate(B.basis):
        if all(a in back for a in path.arrows):
            proj[:, k] = C.normal_form(_map_path(path, back, B, C))
    return inc, proj


def _is_multiplicative(f: np.ndarray, X: BoundQuiverAlgebra, Y: BoundQuiverAlgebra) -> bool:
    p = X.prime
    for k in range(X.dim):
        for l in range(X.dim):
            lhs = (f @ X.struct[k, l]) % p
            rhs = Y.multiply(f[:, k], f[:, l])
            if not np.array_equal(lhs, rhs):
                return False
    return True


def make_pair(
    C: BoundQuiverAlgebra,
    B: BoundQuiverAlgebra,
    arrow_map: dict[str, str] | None = None,
    cluster_tilted: bool = False,
    trials: int = DEFAULT_TRIALS,
    seed=None,
) -> SplitExtensionPair:
    """Verify that ``B`` is a split extension of ``C`` by ``tau^-1 Omega^-1 C`` and return the pair.

    ``arrow_map`` sends C-arrow names to B-arrow names (default: same names).
    Raises :class:`NotSplitExtension` naming the first failed check.
    """
    if C.prime != B.prime:
        raise NotSplitExtension("the two algebras use different primes")
    if C.vertex_count != B.vertex_count:
        raise NotSplitExtension("vertex sets differ")
    names = arrow_map or {a.name: a.name for a in C.arrows}
    amap: dict[int, int] = {}
    for c_name, b_name in names.items():
        try:
            ci, bi = C.quiver.arrow_index(c_name), B.quiver.arrow_index(b_name)
        except Exception as exc:
            raise NotSplitExtension(f"arrow map: {exc}") from None
        ca, ba = C.arrows[ci], B.arrows[bi]
        if (ca.source, ca.target) != (ba.source, ba.target):
            raise NotSplitExtension(f"arrow {c_name} and {b_name} have different endpoints")
        amap[ci] = bi
    if len(amap) != len(C.arrows):
        raise NotSplitExtension("every arrow of the subalgebra must be mapped")
    if len(set(amap.values())) != len(amap):
        raise NotSplitExtension("two arrows map to the same arrow")
    new = tuple(k for k in range(len(B.arrows)) if k not in set(amap.values()))

    inc, proj = _structure_maps(C, B, amap)
    if la.rank(inc, C.prime) != C.dim:
        raise NotSplitExtension("subalgebra check: C-paths span a space of dimension "
                                f"{la.rank(inc, C.prime)} in B, expected {C.dim}")
    if not _is_multiplicative(inc, C, B):
        raise NotSplitExtension("subalgebra check: C -> B is not multiplicative")
    if not _is_multiplicative(proj, B, C):
        raise NotSplitExtension("retraction check: killing the new arrows is not an algebra map")
    if not np.array_equal(la.matmul(proj, inc, C.prime), la.identity(C.dim)):
        raise NotSplitExtension("retraction check: B -> C does not split C -> B")

    pair = SplitExtensionPair(C, B, amap, new, inc, proj, cluster_tilted)
    E = tau_inv_cosyzygy_regular(C)
    if B.dim != C.dim + E.dim:
        raise NotSplitExtension(f"dimension check: dim B = {B.dim} but dim C + dim E = {C.dim} + {E.dim}")
    pair.E_module = E
    pair.E_direct = kernel_as_c_module(pair)
    rng = _rng(seed)
    res = is_isomorphic(pair.E_direct, E, trials, rng)
    if res.certified_no:
        raise NotSplitExtension(f"kernel check: ker(B -> C) is not tau^-1 Omega^-1 C ({res.reason})")
    if not res.certified_yes:
        raise BudgetExhausted("kernel check: isomorphism search inconclusive")
    res = is_isomorphic(pair.restrict(regular_module(B)), direct_sum(regular_module(C), E), trials, rng)
    if res.certified_no:
        raise NotSplitExtension(f"restriction check: B restricted to C is not C + E ({res.reason})")
    if not res.certified_yes:
        raise BudgetExhausted("restriction check: isomorphism search inconclusive")
    ext2 = ext_dim(coregular_module(C), regular_module(C), 2)
    if ext2 != E.dim:
        raise NotSplitExtension(f"Ext^2(DC, C) has dimension {ext2}, expected {E.dim}")
    pair.verified = True
    return pair


def kernel_as_c_module(pair: SplitExtensionPair) -> Representation:
    """``ker(B -> C)`` as a right C-module, via the B-linear map ``B -> C`` on generators."""
    B = pair.B
    regB = regular_module(B)
    regC = regular_module(pair.C)
    target = pair.embed(regC)
    images = []
    for s in range(len(regC.generators)):
        v, c = generator_position(regC, s)
        vec = np.zeros(regC.dims[v], dtype=np.int64)
        vec[c] = 1
        images.append(vec)
    pi = hom_from_generators(regB, target, images)
    if not pi.is_valid() or not pi.is_surjective():
        raise InvariantBreach("B -> C is not a surjective module map")
    return pair.restrict(kernel(pi)[0])


# ---------------------------------------------------------------- induction


def _left_mult(A: BoundQuiverAlgebra, y: np.ndarray) -> np.ndarray:
    return np.einsum("l,lkm->mk", y, A.struct) % A.prime


def _right_mult(A: BoundQuiverAlgebra, z: np.ndarray) -> np.ndarray:
    return np.einsum("l,klm->mk", z, A.struct) % A.prime


def _arrow_element(A: BoundQuiverAlgebra, k: int) -> np.ndarray:
    a = A.arrows[k]
    v = np.zeros(A.dim, dtype=np.int64)
    v[A.index[Path(a.source, a.target, (k,))]] = 1
    return v


def _coords(U: np.ndarray, V: np.ndarray, p: int) -> np.ndarray:
    x = la.solve(U, V, p)
    if x is None:
        raise InvariantBreach("bimodule block is not closed under multiplication")
    return x


def _tensor_over_c(pair: SplitExtensionPair, M: Representation, blocks) -> tuple[Representation, list]:
    """``M (x)_C X`` as a right B-module, for ``X`` a sub-bimodule of ``B`` given by blocks."""
    C, B, p = pair.C, pair.B, pair.prime
    n = B.vertex_count
    r = {key: U.shape[1] for key, U in blocks.items()}
    left = {}
    for k, a in enumerate(C.arrows):
        L = _left_mult(B, _arrow_element(B, pair.arrow_map[k]))
        for j in range(n):
            left[(k, j)] = _coords(blocks[(a.source, j)], la.matmul(L, blocks[(a.target, j)], p), p)

    quotients = []
    for j in range(n):
        sizes = [M.dims[i] * r[(i, j)] for i in range(n)]
        off = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
        cols = []
        for k, a in enumerate(C.arrows):
            i, i2 = a.source, a.target
            width = M.dims[i] * r[(i2, j)]
            if width == 0:
                continue
            blk = la.zeros(int(off[-1]), width)
            blk[off[i2]:off[i2 + 1]] += np.kron(M.maps[k], la.identity(r[(i2, j)]))
            blk[off[i]:off[i + 1]] -= np.kron(la.identity(M.dims[i]), left[(k, j)])
            cols.append(blk % p)
        rel = np.concatenate(cols, axis=1) if cols else la.zeros(int(off[-1]), 0)
        proj, sec = la.quotient_basis(int(off[-1]), la.image_basis(rel, p))
        quotients.append((proj, sec))

    maps = []
    for k, b in enumerate(B.arrows):
        j, j2 = b.source, b.target
        R = _right_mult(B, _arrow_element(B, k))
        raw = la.block_diag([
            np.kron(la.identity(M.dims[i]), _coords(blocks[(i, j2)], la.matmul(R, blocks[(i, j)], p), p))
            for i in range(n)
        ])
        maps.append(la.matmul(la.matmul(quotients[j2][0], raw, p), quotients[j][1], p))
    N = Representation(B, tuple(q[0].shape[0] for q in quotients), tuple(maps))
    problems = validate(N)
    if problems:
        raise InvariantBreach("tensor product is not a B-module: " + "; ".join(problems))
    return N, quotients


def induce(pair: SplitExtensionPair, M: Representation) -> Representation:
    """``M (x)_C B``."""
    return _tensor_over_c(pair, M, pair.full_blocks())[0]


def tensor_with_kernel(pair: SplitExtensionPair, M: Representation) -> Representation:
    """``M (x)_C E`` as a right B-module (the new arrows act as zero)."""
    return _tensor_over_c(pair, M, pair.kernel_blocks())[0]


def multiplication_map(pair: SplitExtensionPair, M: Representation) -> ModuleMap:
    """The B-linear surjection ``M (x)_C B -> M``, ``m (x) b |-> m . pi(b)``."""
    B, p = pair.B, pair.prime
    n = B.vertex_count
    blocks = pair.full_blocks()
    N, quotients = _tensor_over_c(pair, M, blocks)
    target = pair.embed(M)
    maps = []
    for j in range(n):
        parts = []
        for i in range(n):
            U = blocks[(i, j)]
            cols = []
            for x in range(M.dims[i]):
                for u in range(U.shape[1]):
                    img = M.act_element(la.matmul(pair.projection, U[:, u:u + 1], p)[:, 0], i, j)
                    cols.append(img[:, x])
            parts.append(np.stack(cols, axis=1) if cols else la.zeros(M.dims[j], 0))
        raw = np.concatenate(parts, axis=1)
        maps.append(la.matmul(raw, quotients[j][1], p))
    f = ModuleMap(N, target, tuple(maps))
    if not f.is_valid():
        raise InvariantBreach("multiplication map is not B-linear")
    return f


def coinduce(pair: SplitExtensionPair, M: Representation) -> Representation:
    """``D(B (x)_C DM)``."""
    return dual(induce(pair.opposite(), dual(M)))


def coinduction_cokernel(pair: SplitExtensionPair, M: Representation) -> Representation:
    """Cokernel of ``M -> D(B (x)_C DM)`` as a C-module, i.e. ``D(E (x)_C DM)`` restricted to C."""
    op = pair.opposite()
    return pair.restrict(dual(tensor_with_kernel(op, dual(M))))


# ---------------------------------------------------------------- pd classification


@dataclass
class PdClassification:
    pd_C: int
    id_C: str
    id_C_at_most_one: bool
    shifted_P0_dims: tuple[int, ...] | None = None
    shifted_P1_dims: tuple[int, ...] | None = None
    shifted_iso: str | None = None
    verdict: str = ""
    certificate: str = ""
    cross_checks: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "pd_C": self.pd_C,
            "id_C": self.id_C,
            "id_C_at_most_one": self.id_C_at_most_one,
            "shifted_P0_dims": list(self.shifted_P0_dims) if self.shifted_P0_dims is not None else None,
            "shifted_P1_dims": list(self.shifted_P1_dims) if self.shifted_P1_dims is not None else None,
            "shifted_iso": self.shifted_iso,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "cross_checks": self.cross_checks,
        }


def classify_pd_B(
    pair: SplitExtensionPair,
    M: Representation,
    cap: int = DEFAULT_CAP,
    trials: int = DEFAULT_TRIALS,
    seed=None,
    cross_check: bool = True,
) -> PdClassification:
    """Projective dimension over ``B`` of a C-module, read off from data over ``C``.

    The verdict is one of ``"0"``, ``"1"`` or ``"infinite"``; the infinite case
    relies on ``B`` being 1-Gorenstein, which holds for cluster-tilted
    algebras, so the pair must carry the cluster-tilted flag.
    """
    if not pair.cluster_tilted:
        raise NotClusterTilted("the pair is not flagged as cluster-tilted; the infinite verdict would be unjustified")
    pd_rep = projective_dimension(M, cap)
    if not pd_rep.is_exact or pd_rep.value > 2:
        raise GlobalDimensionTooLarge(f"pd over C is {pd_rep.render()}; C must have global dimension at most 2")
    id_rep = injective_dimension(M, cap)
    id_le1 = id_rep.at_most(1) is True
    out = PdClassification(pd_rep.value, id_rep.render(), id_le1)
    gorenstein = "pd_B M > 1, and B is cluster-tilted (1-Gorenstein), so pd_B M is infinite"
    if pd_rep.value == 0:
        if id_le1:
            out.verdict, out.certificate = "0", "M is projective over C and id_C M <= 1"
        else:
            out.verdict = "infinite"
            out.certificate = f"M is projective over C but id_C M = {id_rep.render()} > 1; {gorenstein}"
    elif pd_rep.value == 2:
        out.verdict = "infinite"
        out.certificate = f"pd_C M = 2; {gorenstein}"
    else:
        P0, epi = projective_cover(M)
        P1, _ = projective_cover(kernel(epi)[0])
        X0 = tau_inv(cosyzygy(P0))
        X1 = tau_inv(cosyzygy(P1))
        out.shifted_P0_dims, out.shifted_P1_dims = X0.dims, X1.dims
        iso = is_isomorphic(X0, X1, trials, seed)
        out.shifted_iso = iso.status
        if iso.status == "undetermined":
            raise BudgetExhausted("could not decide the isomorphism needed for the pd 1 case; raise --trials")
        if id_le1 and iso.certified_yes:
            out.verdict = "1"
            out.certificate = "pd_C M = 1, id_C M <= 1 and tau^-1 Omega^-1 agrees on P1 and P0"
        else:
            why = []
            if not id_le1:
                why.append(f"id_C M = {id_rep.render()} > 1")
            if not iso.certified_yes:
                why.append(f"tau^-1 Omega^-1 P1 (dims {X1.dims}) is not isomorphic to "
                           f"tau^-1 Omega^-1 P0 (dims {X0.dims})")
            out.verdict = "infinite"
            out.certificate = "pd_C M = 1 but " + " and ".join(why) + f"; {gorenstein}"
    if cross_check:
        N = pair.embed(M)
        proj = is_projective(N)
        le1 = pd_at_most_one(N)
        out.cross_checks = {"projective_over_B": proj, "pd_B_at_most_one_by_hom": le1}
        if proj != (out.verdict == "0"):
            raise InvariantBreach("classifier disagrees with the projectivity test over B")
        if le1 != (out.verdict in ("0", "1")):
            raise InvariantBreach("classifier disagrees with Hom(DB, tau_B M) = 0 over B")
    return out


def resolution_transfer_check(pair: SplitExtensionPair, M: Representation,
                              trials: int = DEFAULT_TRIALS, seed=None) -> dict:
    """For M with pd over B at most 1: the minimal C- and B-resolutions coincide."""
    rng = _rng(seed)
    res_c = projective_resolution(M, 3)
    res_b = projective_resolution(pair.embed(M), 3)
    out = {
        "C_terms": [list(d) for d in res_c.term_dims()],
        "B_terms": [list(d) for d in res_b.term_dims()],
        "terminated": res_b.terminated,
        "terms_match": [],
    }
    ok = res_b.terminated and res_c.terminated and len(res_b.terms) == len(res_c.terms)
    if ok:
        for P, Q in zip(res_c.terms, res_b.terms):
            a = is_isomorphic(induce(pair, P), Q, trials, rng)
            b = is_isomorphic(pair.embed(P), Q, trials, rng)
            out["terms_match"].append([a.status, b.status])
            ok = ok and a.certified_yes and b.certified_yes
    out["pass"] = bool(ok)
    return out


# ---------------------------------------------------------------- rigidity


@dataclass
class RigidityReport:
    rigid_C: bool
    cond_a: bool
    cond_b: bool
    rigid_B: bool
    ext1_C: int
    ext1_B: int
    indecomposable: bool | None = None

    @property
    def implications_respected(self) -> bool:
        return not ((self.cond_a or self.cond_b) and self.rigid_C and not self.rigid_B)

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return self.rigid_C, self.cond_a, self.cond_b, self.rigid_B

    def as_dict(self) -> dict:
        return {
            "rigid_C": self.rigid_C,
            "hom_from_shifted_cover_vanishes": self.cond_a,
            "hom_to_shifted_envelope_vanishes": self.cond_b,
            "rigid_B": self.rigid_B,
            "ext1_C": self.ext1_C,
            "ext1_B": self.ext1_B,
            "indecomposable": self.indecomposable,
            "implications_respected": self.implications_respected,
        }


def rigidity_report(pair: SplitExtensionPair, M: Representation,
                    trials: int = DEFAULT_TRIALS, seed=None) -> RigidityReport:
    """Compare rigidity over C and over B with two Hom-vanishing conditions.

    ``cond_a``: ``Hom_C(tau^-1 Omega^-1 P0, M) = 0`` for the projective cover ``P0``;
    ``cond_b``: ``Hom_C(M, tau Omega I0) = 0`` for the injective envelope ``I0``.
    Either condition together with rigidity over C forces rigidity over B.
    """
    e_c = ext_dim(M, M, 1)
    N = pair.embed(M)
    e_b = ext_dim(N, N, 1)
    P0, _ = projective_cover(M)
    I0, _ = injective_envelope(M)
    rep = RigidityReport(
        rigid_C=e_c == 0,
        cond_a=hom_dim(tau_inv(cosyzygy(P0)), M) == 0,
        cond_b=hom_dim(M, tau(syzygy(I0))) == 0,
        rigid_B=e_b == 0,
        ext1_C=e_c,
        ext1_B=e_b,
    )
    if not rep.implications_respected:
        raise InvariantBreach("rigidity over C with a vanishing condition did not give rigidity over B")
    if pair.cluster_tilted and M.dim:
        rep.indecomposable = decompose(M, trials, seed).count == 1
        if rep.indecomposable and rep.rigid_C and not rep.rigid_B:
            raise InvariantBreach("indecomposable rigid C-module is not rigid over B")
    return rep


# ---------------------------------------------------------------- property suite


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | undetermined | not-applicable
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _status(ok: bool | None) -> str:
    if ok is None:
        return "undetermined"
    return "pass" if ok else "fail"


def _iso_status(res) -> bool | None:
    return {"yes": True, "no": False}.get(res.status)


def _injective_map_exists(X: Representation, Y: Representation, rng, trials: int) -> bool | None:
    if X.dim == 0:
        return True
    basis = hom_basis(X, Y)
    if not basis:
        return False
    for f in basis:
        if f.is_injective():
            return True
    for _ in range(trials):
        if random_combination(basis, rng).is_injective():
            return True
    return None


def module_checks(pair: SplitExtensionPair, M: Representation, trials: int = DEFAULT_TRIALS,
                  seed=None, cap: int = DEFAULT_CAP) -> list[CheckResult]:
    """Every per-module property relating C and B, each reported independently."""
    C = pair.C
    rng = _rng(seed)
    out: list[CheckResult] = []

    def run(name, fn):
        try:
            status, detail = fn()
        except (InvariantBreach, BudgetExhausted) as exc:
            status, detail = ("undetermined" if isinstance(exc, BudgetExhausted) else "fail"), str(exc)
        out.append(CheckResult(name, status, detail))

    N = pair.embed(M)
    pd_c = projective_dimension(M, cap)
    id_c = injective_dimension(M, cap)
    pd_le1, id_le1 = pd_c.at_most(1) is True, id_c.at_most(1) is True
    ME = pair.restrict(tensor_with_kernel(pair, M))

    def induction_sequence():
        ind = induce(pair, M)
        mult = multiplication_map(pair, M)
        dims_ok = ind.dim == M.dim + ME.dim and mult.is_surjective()
        ker_ok = kernel(mult)[0].dims == ME.dims
        iso = is_isomorphic(ME, tau_inv(cosyzygy(M)), trials, rng)
        ok = dims_ok and ker_ok and _iso_status(iso)
        return _status(ok), f"dim induce={ind.dim}, dim M={M.dim}, dim M(x)E={ME.dim}, iso={iso.status}"

    def induction_equivalences():
        a = is_isomorphic(induce(pair, M), N, trials, rng)
        b = is_isomorphic(coinduce(pair, M), N, trials, rng)
        if a.status == "undetermined" or b.status == "undetermined":
            return "undetermined", "isomorphism search inconclusive"
        ok = (id_le1 == a.certified_yes) and (pd_le1 == b.certified_yes)
        return _status(ok), f"id<=1:{id_le1} induce~M:{a.status}; pd<=1:{pd_le1} coinduce~M:{b.status}"

    def summand_dimensions():
        bad = []
        for S in decompose(ME, trials, rng).pieces:
            if projective_dimension(S, cap).value != 2:
                bad.append(f"pd of {S.dims}")
        Q = coinduction_cokernel(pair, M)
        for S in decompose(Q, trials, rng).pieces:
            if injective_dimension(S, cap).value != 2:
                bad.append(f"id of {S.dims}")
        return _status(not bad), "; ".join(bad) or f"M(x)E {ME.dims}, cokernel {Q.dims}"

    def induced_pd():
        lhs = projective_dimension(induce(pair, M), cap).at_most(1) is True
        DE = tau_syzygy_coregular(C)
        rhs = pd_le1 and hom_dim(DE, tau(M)) == 0
        return _status(lhs == rhs), f"pd_B(induce M)<=1: {lhs}; condition over C: {rhs}"

    def cover_transfer():
        if M.dim == 0:
            return "not-applicable", "zero module"
        PB, _ = projective_cover(N)
        PC, _ = projective_cover(M)
        res = is_isomorphic(PB, induce(pair, PC), trials, rng)
        return _status(_iso_status(res)), f"cover over B {PB.dims}, induced cover {res.status}"

    def ladder():
        if not (M.dim and is_projective(M) and id_c.value == 2 and decompose(M, trials, rng).count == 1):
            return "not-applicable", "needs an indecomposable projective with id 2"
        second = syzygy(syzygy(N))
        ok = second.dim > 0 and not is_projective(second)
        return _status(ok), f"second syzygy over B has dims {second.dims}"

    def submodules():
        if M.dim == 0:
            return "not-applicable", "zero module"
        target = tau(N)
        a = _injective_map_exists(pair.embed(tau(M)), target, rng, trials)
        b = _injective_map_exists(tau(induce(pair, M)), target, rng, trials)
        if a is False or b is False:
            return "fail", "no injective map exists"
        if a is None or b is None:
            return "undetermined", "no injective map found within the trial budget"
        return "pass", "injective maps found"

    def converse():
        P0, _ = projective_cover(M)
        premise = ext_dim(pair.embed(P0), N, 1) == 0 and ext_dim(N, N, 1) == 0
        if not premise:
            return "not-applicable", "premise fails"
        ok = hom_dim(tau_inv(cosyzygy(P0)), M) == 0
        return _status(ok), "Hom_C(tau^-1 Omega^-1 P0, M) = 0" if ok else "Hom nonzero"

    def low_dimension():
        crit = low_dimension_criteria(M, cap)
        ok = crit.consistent and crit.pd_le1_by_hom == pd_le1 and crit.id_le1_by_hom == id_le1
        return _status(ok), str(crit)

    def dichotomy():
        if decompose(M, trials, rng).count != 1:
            return "not-applicable", "not indecomposable"
        return _status(pd_le1 or id_le1), f"pd {pd_c.render()}, id {id_c.render()}"

    def classifier():
        if not pair.cluster_tilted:
            return "not-applicable", "pair not flagged cluster-tilted"
        cls = classify_pd_B(pair, M, cap, trials, rng, cross_check=True)
        if cls.verdict == "infinite":
            res = projective_resolution(N, cap)
            if res.terminated:
                return "fail", "resolution over B terminated although the verdict is infinite"
        return "pass", f"verdict {cls.verdict}"

    def hom_agreement():
        X = tau_inv_cosyzygy_regular(C)
        lhs, rhs = hom_dim(X, M), hom_dim(pair.embed(X), N)
        return _status(lhs == rhs), f"Hom over C {lhs}, over B {rhs}"

    def stable_versus_plain():
        X = tau_inv_cosyzygy_regular(C)
        ext1 = ext_dim(M, cosyzygy(regular_module(C)), 1, cap)
        stable = stable_hom_under(X, M)
        ext2 = ext_dim(M, regular_module(C), 2, cap)
        plain = hom_dim(X, M)
        ok = ext1 == stable == ext2 and (not pd_le1 or plain == 0)
        return _status(ok), f"Ext1(M, Omega^-1 C)={ext1}, stable Hom={stable}, Ext2(M, C)={ext2}, Hom={plain}"

    run("induction-sequence", induction_sequence)
    run("induction-equivalences", induction_equivalences)
    run("shifted-summand-dimensions", summand_dimensions)
    run("induced-pd-criterion", induced_pd)
    run("cover-transfer", cover_transfer)
    run("pd-ladder", ladder)
    run("translate-submodules", submodules)
    run("rigidity-converse", converse)
    run("low-dimension-criteria", low_dimension)
    run("tilted-dichotomy", dichotomy)
    run("classifier-cross-check", classifier)
    run("hom-over-B-equals-hom-over-C", hom_agreement)
    run("stable-versus-plain-hom", stable_versus_plain)
    return out


def gorenstein_check(B: BoundQuiverAlgebra, cap: int = DEFAULT_CAP) -> CheckResult:
    """Projectives have id <= 1 and injectives have pd <= 1."""
    n = B.vertex_count
    ids = [injective_dimension(projective(B, i), cap).at_most(1) is True for i in range(1, n + 1)]
    pds = [projective_dimension(injective(B, i), cap).at_most(1) is True for i in range(1, n + 1)]
    ok = all(ids) and all(pds)
    return CheckResult("1-gorenstein", _status(ok), f"id(P_i)<=1: {ids}; pd(I_i)<=1: {pds}")


def ar_formula_check(modules: Sequence[Representation]) -> CheckResult:
    bad = []
    for M in modules:
        for N in modules:
            dims = ar_formula_dims(M, N)
            if len(set(dims)) != 1:
                bad.append(f"{M.dims},{N.dims}: {dims}")
    return CheckResult("ar-formula", _status(not bad),
                       "; ".join(bad) or f"{len(modules) ** 2} ordered pairs agree")


def property_suite(pair: SplitExtensionPair, modules: Sequence[Representation],
                   trials: int = DEFAULT_TRIALS, seed=None, cap: int = DEFAULT_CAP) -> dict:
    rng = _rng(seed)
    report = {
        "algebra": [gorenstein_check(pair.B, cap).as_dict(), ar_formula_check(modules).as_dict()],
        "modules": [],
    }
    for M in modules:
        checks = module_checks(pair, M, trials, rng, cap)
        report["modules"].append({"dims": list(M.dims), "checks": [c.as_dict() for c in checks]})
    statuses = [c["status"] for c in report["algebra"]]
    statuses += [c["status"] for m in report["modules"] for c in m["checks"]]
    report["summary"] = {s: statuses.count(s) for s in ("pass", "fail", "undetermined", "not-applicable")}
    return report
