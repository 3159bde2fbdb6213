"""Right modules over bound quiver algebras, as quiver representations.

An arrow ``a: i -> j`` acts by a matrix of shape ``(dims[j], dims[i])`` on
column vectors, matching right multiplication ``m |-> m.a`` with paths read
left to right.  Vertex arguments of the public constructors (``projective``,
``injective``, ``simple``) are the 1-based labels used in hand calculations; everything
else indexes vertices from 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg as la
from .algebra import BoundQuiverAlgebra, Path
from .errors import EmbeddingInvalid, InvalidRepresentation, InvariantBreach

DEFAULT_TRIALS = 64
DEFAULT_SEED = 20240501


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: BoundQuiverAlgebra
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]
    # 0-based top vertices when this is a canonical sum of indecomposable projectives
    generators: tuple[int, ...] | None = None

    @property
    def prime(self) -> int:
        return self.algebra.prime

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def arrow_map(self, name: str) -> np.ndarray:
        return self.maps[self.algebra.quiver.arrow_index(name)]

    def act_path(self, path: Path) -> np.ndarray:
        """Matrix of right multiplication by ``path``: ``M_source -> M_target``."""
        key = path.arrows
        if not key:
            return la.identity(self.dims[path.source])
        cache = self._path_cache
        if key not in cache:
            prev = Path(path.source, self.algebra.arrows[key[-1]].source, key[:-1])
            cache[key] = la.matmul(self.maps[key[-1]], self.act_path(prev), self.prime)
        return cache[key]

    @cached_property
    def _path_cache(self) -> dict:
        return {}

    @cached_property
    def basis_actions(self) -> list[np.ndarray]:
        return [self.act_path(b) for b in self.algebra.basis]

    def act_element(self, coords: np.ndarray, i: int, j: int) -> np.ndarray:
        """Action ``M_i -> M_j`` of an element supported on ``e_i A e_j``."""
        out = la.zeros(self.dims[j], self.dims[i])
        for k in self.algebra.block(i, j):
            c = int(coords[k])
            if c:
                out = (out + c * self.basis_actions[k]) % self.prime
        return out

    def equals(self, other: "Representation") -> bool:
        return (
            self.algebra is other.algebra
            and self.dims == other.dims
            and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps))
        )

    def __repr__(self) -> str:
        return f"Representation({self.algebra.name}, dims={self.dims})"


def make_representation(
    A: BoundQuiverAlgebra,
    dims: Sequence[int],
    arrow_maps: dict[str, object] | None = None,
    check: bool = True,
) -> Representation:
    """Build a representation from arrow-name -> matrix data (missing arrows act as zero)."""
    dims = tuple(int(d) for d in dims)
    if len(dims) != A.vertex_count:
        raise InvalidRepresentation(f"expected {A.vertex_count} dimensions, got {len(dims)}")
    arrow_maps = dict(arrow_maps or {})
    unknown = set(arrow_maps) - {a.name for a in A.arrows}
    if unknown:
        raise InvalidRepresentation(f"unknown arrows {sorted(unknown)}")
    maps = []
    for a in A.arrows:
        shape = (dims[a.target], dims[a.source])
        if a.name in arrow_maps and arrow_maps[a.name] is not None:
            m = np.array(arrow_maps[a.name], dtype=np.int64)
            if m.size == 0:
                m = m.reshape(shape)
            if m.shape != shape:
                raise InvalidRepresentation(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")
            maps.append(m % A.prime)
        else:
            maps.append(la.zeros(*shape))
    M = Representation(A, dims, tuple(maps))
    if check:
        problems = validate(M)
        if problems:
            raise InvalidRepresentation("; ".join(problems))
    return M


def validate(M: Representation) -> list[str]:
    """Return the list of violated invariants (empty when ``M`` is a module)."""
    A = M.algebra
    problems = []
    if len(M.dims) != A.vertex_count or len(M.maps) != len(A.arrows):
        return ["dimension vector or arrow list has the wrong length"]
    for a, m in zip(A.arrows, M.maps):
        if m.shape != (M.dims[a.target], M.dims[a.source]):
            problems.append(f"arrow {a.name} has shape {m.shape}")
    if problems:
        return problems
    for r in A.relations:
        total = la.zeros(M.dims[r.target], M.dims[r.source])
        for c, path in r.terms:
            total = (total + c * M.act_path(path)) % M.prime
        if total.any():
            problems.append(f"relation {r.describe(A.quiver)} does not vanish")
    return problems


def zero_module(A: BoundQuiverAlgebra) -> Representation:
    return make_representation(A, [0] * A.vertex_count, check=False)


def thin_module(A: BoundQuiverAlgebra, dims: Sequence[int]) -> Representation:
    """0/1 dimension vector with every arrow between supported vertices acting by 1."""
    if any(d not in (0, 1) for d in dims):
        raise InvalidRepresentation("thin modules need a 0/1 dimension vector")
    maps = {a.name: [[1]] for a in A.arrows if dims[a.source] and dims[a.target]}
    return make_representation(A, dims, maps)


def simple(A: BoundQuiverAlgebra, i: int) -> Representation:
    dims = [0] * A.vertex_count
    dims[i - 1] = 1
    return make_representation(A, dims, check=False)


def direct_sum(*mods: Representation) -> Representation:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    A = mods[0].algebra
    dims = tuple(sum(M.dims[v] for M in mods) for v in range(A.vertex_count))
    maps = tuple(la.block_diag([M.maps[k] for M in mods]) for k in range(len(A.arrows)))
    gens = None
    if all(M.generators is not None for M in mods):
        gens = tuple(g for M in mods for g in M.generators)
    return Representation(A, dims, maps, gens)


# ---------------------------------------------------------------- maps


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    maps: tuple[np.ndarray, ...]

    @property
    def prime(self) -> int:
        return self.source.prime

    def is_valid(self) -> bool:
        p = self.prime
        for k, a in enumerate(self.source.algebra.arrows):
            lhs = la.matmul(self.target.maps[k], self.maps[a.source], p)
            rhs = la.matmul(self.maps[a.target], self.source.maps[k], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.maps)

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return compose(self, other)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         tuple((a + b) % self.prime for a, b in zip(self.maps, other.maps)))

    def scale(self, c: int) -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple((c * m) % self.prime for m in self.maps))

    def is_injective(self) -> bool:
        return all(la.rank(m, self.prime) == m.shape[1] for m in self.maps)

    def is_surjective(self) -> bool:
        return all(la.rank(m, self.prime) == m.shape[0] for m in self.maps)

    def is_isomorphism(self) -> bool:
        return all(m.shape[0] == m.shape[1] for m in self.maps) and self.is_injective()

    def vector(self) -> np.ndarray:
        return np.concatenate([m.reshape(-1) for m in self.maps]) if self.maps else la.zeros(0, 0)[0]


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """``g o f``."""
    p = f.prime
    return ModuleMap(f.source, g.target, tuple(la.matmul(b, a, p) for a, b in zip(f.maps, g.maps)))


def identity_map(M: Representation) -> ModuleMap:
    return ModuleMap(M, M, tuple(la.identity(d) for d in M.dims))


def zero_map(M: Representation, N: Representation) -> ModuleMap:
    return ModuleMap(M, N, tuple(la.zeros(n, m) for m, n in zip(M.dims, N.dims)))


# ---------------------------------------------------------------- Hom


def _hom_system(M: Representation, N: Representation) -> tuple[np.ndarray, list[int]]:
    A = M.algebra
    if N.algebra is not A:
        raise ValueError("modules live over different algebras")
    sizes = [n * m for m, n in zip(M.dims, N.dims)]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offsets[-1])
    rows = []
    p = A.prime
    for k, a in enumerate(A.arrows):
        i, j = a.source, a.target
        mi, nj = M.dims[i], N.dims[j]
        if nj * mi == 0:
            continue
        block = la.zeros(nj * mi, total)
        # N_a f_i - f_j M_a = 0, with f_v flattened row-major
        block[:, offsets[i]:offsets[i + 1]] += np.kron(N.maps[k], la.identity(mi))
        block[:, offsets[j]:offsets[j + 1]] -= np.kron(la.identity(nj), M.maps[k].T)
        rows.append(block % p)
    system = np.concatenate(rows, axis=0) if rows else la.zeros(0, total)
    return system, list(offsets)


def _unflatten(M: Representation, N: Representation, vec: np.ndarray, offsets) -> ModuleMap:
    maps = tuple(
        vec[offsets[v]:offsets[v + 1]].reshape(N.dims[v], M.dims[v]).copy()
        for v in range(len(M.dims))
    )
    return ModuleMap(M, N, maps)


def hom_basis(M: Representation, N: Representation) -> list[ModuleMap]:
    system, offsets = _hom_system(M, N)
    if system.shape[1] == 0:
        return []
    ker = la.kernel_columns(system, M.prime)
    return [_unflatten(M, N, ker[:, c], offsets) for c in range(ker.shape[1])]


def hom_dim(M: Representation, N: Representation) -> int:
    system, _ = _hom_system(M, N)
    return system.shape[1] - la.rank(system, M.prime)


def span_dim(maps: Sequence[ModuleMap]) -> int:
    if not maps:
        return 0
    return la.rank(np.stack([f.vector() for f in maps], axis=1), maps[0].prime)


def random_combination(basis: Sequence[ModuleMap], rng: np.random.Generator) -> ModuleMap:
    p = basis[0].prime
    coeffs = rng.integers(0, p, size=len(basis))
    maps = [la.zeros(*m.shape) for m in basis[0].maps]
    for c, f in zip(coeffs, basis):
        for v, m in enumerate(f.maps):
            maps[v] = (maps[v] + int(c) * m) % p
    return ModuleMap(basis[0].source, basis[0].target, tuple(maps))


# ---------------------------------------------------------------- sub and quotient modules


def submodule(M: Representation, columns: Sequence[np.ndarray]) -> tuple[Representation, ModuleMap]:
    """Submodule spanned vertex-wise by independent ``columns[v]`` (must be closed under arrows)."""
    A, p = M.algebra, M.prime
    maps = []
    for k, a in enumerate(A.arrows):
        U, W = columns[a.source], columns[a.target]
        x = la.solve(W, la.matmul(M.maps[k], U, p), p)
        if x is None:
            raise InvariantBreach(f"subspace is not closed under arrow {a.name}")
        maps.append(x)
    S = Representation(A, tuple(c.shape[1] for c in columns), tuple(maps))
    return S, ModuleMap(S, M, tuple(c.copy() for c in columns))


def quotient(M: Representation, subspaces: Sequence[la.Subspace]) -> tuple[Representation, ModuleMap]:
    """Quotient of ``M`` by a submodule given as per-vertex subspaces."""
    A, p = M.algebra, M.prime
    proj, sec = zip(*(la.quotient_basis(M.dims[v], subspaces[v]) for v in range(A.vertex_count)))
    maps = tuple(
        la.matmul(la.matmul(proj[a.target], M.maps[k], p), sec[a.source], p)
        for k, a in enumerate(A.arrows)
    )
    Q = Representation(A, tuple(pr.shape[0] for pr in proj), maps)
    return Q, ModuleMap(M, Q, tuple(pr % p for pr in proj))


def _independent_columns(m: np.ndarray, p: int) -> np.ndarray:
    return la.image_basis(m, p).columns()


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    p = f.prime
    cols = [la.kernel_columns(m, p) for m in f.maps]
    return submodule(f.source, cols)


def image(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    p = f.prime
    cols = [_independent_columns(m, p) for m in f.maps]
    return submodule(f.target, cols)


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    p = f.prime
    subs = [la.image_basis(m, p) for m in f.maps]
    return quotient(f.target, subs)


def radical_subspaces(M: Representation) -> list[la.Subspace]:
    A, p = M.algebra, M.prime
    out = []
    for v in range(A.vertex_count):
        parts = [M.maps[k] for k, a in enumerate(A.arrows) if a.target == v]
        stacked = np.concatenate(parts, axis=1) if parts else la.zeros(M.dims[v], 0)
        out.append(la.image_basis(stacked, p))
    return out


def radical(M: Representation) -> Representation:
    return submodule(M, [s.columns() for s in radical_subspaces(M)])[0]


def top(M: Representation) -> Representation:
    return quotient(M, radical_subspaces(M))[0]


def socle_columns(M: Representation) -> list[np.ndarray]:
    A, p = M.algebra, M.prime
    cols = []
    for v in range(A.vertex_count):
        parts = [M.maps[k] for k, a in enumerate(A.arrows) if a.source == v]
        stacked = np.concatenate(parts, axis=0) if parts else la.zeros(0, M.dims[v])
        cols.append(la.kernel_columns(stacked, p))
    return cols


def socle(M: Representation) -> Representation:
    return submodule(M, socle_columns(M))[0]


def loewy_layers(M: Representation) -> list[tuple[int, ...]]:
    """Dimension vectors of the radical layers rad^k M / rad^(k+1) M."""
    layers = []
    cur = M
    while cur.dim:
        rad = radical(cur)
        layers.append(tuple(a - b for a, b in zip(cur.dims, rad.dims)))
        cur = rad
    return layers


# ---------------------------------------------------------------- projectives and injectives


def projective_sum(A: BoundQuiverAlgebra, tops: Sequence[int]) -> Representation:
    """``(+)_s e_{tops[s]} A`` with its canonical path basis (``tops`` 0-based)."""
    tops = tuple(tops)
    n, p = A.vertex_count, A.prime
    dims = tuple(sum(len(A.block(i, v)) for i in tops) for v in range(n))
    maps = []
    for k, a in enumerate(A.arrows):
        ak = A.index[Path(a.source, a.target, (k,))]
        blocks = []
        for i in tops:
            rows, cols = A.block(i, a.target), A.block(i, a.source)
            blk = la.zeros(len(rows), len(cols))
            for c, b in enumerate(cols):
                prod = A.struct[b, ak]
                blk[:, c] = prod[rows]
            blocks.append(blk)
        maps.append(la.block_diag(blocks) % p if blocks else la.zeros(dims[a.target], dims[a.source]))
    return Representation(A, dims, tuple(maps), tops)


def generator_position(P: Representation, s: int) -> tuple[int, int]:
    """(vertex, coordinate) of the generator ``e_i`` of the ``s``-th summand."""
    A, tops = P.algebra, P.generators
    i = tops[s]
    offset = sum(len(A.block(t, i)) for t in tops[:s])
    return i, offset + A.block(i, i).index(A.idempotents[i])


def split_element(P: Representation, v: int, vec: np.ndarray) -> list[np.ndarray]:
    """Split a vector of ``P`` at vertex ``v`` into algebra elements, one per summand."""
    A = P.algebra
    out, offset = [], 0
    for i in P.generators:
        idx = A.block(i, v)
        x = np.zeros(A.dim, dtype=np.int64)
        x[idx] = vec[offset:offset + len(idx)]
        out.append(x)
        offset += len(idx)
    return out


def hom_from_generators(P: Representation, N: Representation, images: Sequence[np.ndarray]) -> ModuleMap:
    """The map ``P -> N`` sending the ``s``-th generator to ``images[s]``."""
    A, p = P.algebra, P.prime
    maps = []
    for v in range(A.vertex_count):
        cols = []
        for i, img in zip(P.generators, images):
            for b in A.block(i, v):
                cols.append(la.matmul(N.basis_actions[b], img.reshape(-1, 1), p))
        maps.append(np.concatenate(cols, axis=1) if cols else la.zeros(N.dims[v], 0))
    return ModuleMap(P, N, tuple(maps))


def generator_images(f: ModuleMap) -> list[np.ndarray]:
    P = f.source
    out = []
    for s in range(len(P.generators)):
        v, c = generator_position(P, s)
        out.append(f.maps[v][:, c].copy())
    return out


def projective(A: BoundQuiverAlgebra, i: int) -> Representation:
    return projective_sum(A, [i - 1])


def injective(A: BoundQuiverAlgebra, i: int) -> Representation:
    return dual(projective(A.opposite(), i))


def regular_module(A: BoundQuiverAlgebra) -> Representation:
    return projective_sum(A, range(A.vertex_count))


def coregular_module(A: BoundQuiverAlgebra) -> Representation:
    return dual(regular_module(A.opposite()))


def projective_cover(M: Representation) -> tuple[Representation, ModuleMap]:
    A = M.algebra
    tops, images = [], []
    for v, sub in enumerate(radical_subspaces(M)):
        _, section = la.quotient_basis(M.dims[v], sub)
        for c in range(section.shape[1]):
            tops.append(v)
            images.append(section[:, c])
    P = projective_sum(A, tops)
    epi = hom_from_generators(P, M, images)
    if not epi.is_surjective():
        raise InvariantBreach("projective cover is not surjective")
    return P, epi


def injective_envelope(M: Representation) -> tuple[Representation, ModuleMap]:
    P, epi = projective_cover(dual(M))
    return dual(P), dual_map(epi)


def syzygy(M: Representation) -> Representation:
    return kernel(projective_cover(M)[1])[0]


def cosyzygy(M: Representation) -> Representation:
    return cokernel(injective_envelope(M)[1])[0]


def is_projective(M: Representation) -> bool:
    return projective_cover(M)[0].dim == M.dim


def is_injective(M: Representation) -> bool:
    return is_projective(dual(M))


# ---------------------------------------------------------------- duality


def dual(M: Representation) -> Representation:
    """``D M = Hom_k(M, k)`` as a right module over the opposite algebra."""
    return Representation(M.algebra.opposite(), M.dims, tuple(m.T.copy() for m in M.maps))


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual(f.target), dual(f.source), tuple(m.T.copy() for m in f.maps))


# ---------------------------------------------------------------- change of rings


def embed(M: Representation, B: BoundQuiverAlgebra, arrow_map: dict[int, int]) -> Representation:
    """Let ``B`` act on a ``C``-module through ``B -> C`` (new arrows act as zero)."""
    inverse = {b: c for c, b in arrow_map.items()}
    maps = []
    for k, a in enumerate(B.arrows):
        if k in inverse:
            maps.append(M.maps[inverse[k]].copy())
        else:
            maps.append(la.zeros(M.dims[a.target], M.dims[a.source]))
    N = Representation(B, M.dims, tuple(maps))
    problems = validate(N)
    if problems:
        raise EmbeddingInvalid("; ".join(problems))
    return N


def restrict(N: Representation, C: BoundQuiverAlgebra, arrow_map: dict[int, int]) -> Representation:
    maps = tuple(N.maps[arrow_map[k]].copy() for k in range(len(C.arrows)))
    return Representation(C, N.dims, maps)


def restrict_map(f: ModuleMap, C: BoundQuiverAlgebra, arrow_map: dict[int, int]) -> ModuleMap:
    return ModuleMap(restrict(f.source, C, arrow_map), restrict(f.target, C, arrow_map), f.maps)


# ---------------------------------------------------------------- isomorphism and decomposition


@dataclass
class IsoResult:
    status: str  # "yes" | "no" | "undetermined"
    map: ModuleMap | None = None
    reason: str = ""

    @property
    def certified_yes(self) -> bool:
        return self.status == "yes"

    @property
    def certified_no(self) -> bool:
        return self.status == "no"

    def __bool__(self) -> bool:
        return self.certified_yes


def is_isomorphic(M: Representation, N: Representation, trials: int = DEFAULT_TRIALS, seed=None) -> IsoResult:
    if M.dims != N.dims:
        return IsoResult("no", reason=f"dimension vectors differ: {M.dims} vs {N.dims}")
    if M.dim == 0:
        return IsoResult("yes", zero_map(M, N), "both zero")
    basis = hom_basis(M, N)
    back = hom_dim(N, M)
    if len(basis) != back:
        return IsoResult("no", reason=f"dim Hom(M,N)={len(basis)} but dim Hom(N,M)={back}")
    e_m, e_n = hom_dim(M, M), hom_dim(N, N)
    if e_m != e_n:
        return IsoResult("no", reason=f"dim End(M)={e_m} but dim End(N)={e_n}")
    if not basis:
        return IsoResult("no", reason="Hom(M,N) = 0")
    rng = _rng(seed)
    for f in basis:
        if f.is_isomorphism():
            return IsoResult("yes", f, "basis map is invertible")
    for _ in range(trials):
        f = random_combination(basis, rng)
        if f.is_isomorphism():
            return IsoResult("yes", f, "random map is invertible")
    return IsoResult("undetermined", reason=f"no invertible map in {trials} trials")


def _matrix_power(m: np.ndarray, e: int, p: int) -> np.ndarray:
    out = la.identity(m.shape[0])
    base = m % p
    while e:
        if e & 1:
            out = la.matmul(out, base, p)
        base = la.matmul(base, base, p)
        e >>= 1
    return out


def _eigenvalues(mats: Sequence[np.ndarray], p: int) -> list[int]:
    """Eigenvalues lying in GF(p) of the given square matrices."""
    from sympy.polys.domains import GF, ZZ
    from sympy.polys.galoistools import gf_factor
    from sympy.polys.matrices import DomainMatrix

    K = GF(p)
    roots: set[int] = set()
    for m in mats:
        if m.shape[0] == 0:
            continue
        dm = DomainMatrix([[K(int(x)) for x in row] for row in m], m.shape, K)
        coeffs = [int(c) % p for c in dm.charpoly()]
        _, factors = gf_factor(coeffs, p, ZZ)
        for fac, _ in factors:
            if len(fac) == 2:
                roots.add(int(-fac[1] * pow(int(fac[0]), -1, p)) % p)
    return sorted(roots)


@dataclass
class DecompositionReport:
    pieces: list[Representation]
    inclusions: list[ModuleMap]
    certificate: ModuleMap  # direct_sum(pieces) -> M, invertible
    summands: list[tuple[Representation, int]] = field(default_factory=list)
    undetermined_pairs: int = 0

    @property
    def count(self) -> int:
        return len(self.pieces)

    def dim_vectors(self) -> list[tuple[int, ...]]:
        return sorted(P.dims for P in self.pieces)


def _split(M: Representation, rng, trials: int) -> list[tuple[Representation, ModuleMap]]:
    if M.dim == 0:
        return []
    basis = hom_basis(M, M)
    if len(basis) <= 1:
        return [(M, identity_map(M))]
    p, d = M.prime, M.dim
    candidates = list(basis) + [random_combination(basis, rng) for _ in range(trials)]
    for f in candidates:
        for lam in _eigenvalues(f.maps, p):
            g = ModuleMap(M, M, tuple((m - lam * la.identity(m.shape[0])) % p for m in f.maps))
            h = ModuleMap(M, M, tuple(_matrix_power(m, d, p) for m in g.maps))
            K, inc_k = kernel(h)
            if 0 < K.dim < d:
                I, inc_i = image(h)
                out = []
                for S, j in _split(K, rng, trials):
                    out.append((S, compose(inc_k, j)))
                for S, j in _split(I, rng, trials):
                    out.append((S, compose(inc_i, j)))
                return out
    return [(M, identity_map(M))]


def decompose(M: Representation, trials: int = DEFAULT_TRIALS, seed=None) -> DecompositionReport:
    """Krull-Schmidt decomposition by Fitting splitting of random endomorphisms.

    A piece is declared indecomposable once ``trials`` random endomorphisms
    (each shifted by every eigenvalue in the ground field) fail to split it.
    """
    rng = _rng(seed)
    parts = _split(M, rng, trials)
    pieces = [S for S, _ in parts]
    incs = [j for _, j in parts]
    total = direct_sum(*pieces) if pieces else zero_module(M.algebra)
    cert_maps = []
    for v in range(M.algebra.vertex_count):
        cols = [j.maps[v] for j in incs]
        cert_maps.append(np.concatenate(cols, axis=1) if cols else la.zeros(M.dims[v], 0))
    cert = ModuleMap(total, M, tuple(cert_maps))
    if not cert.is_isomorphism():
        raise InvariantBreach("decomposition certificate is not invertible")

    classes: list[list] = []
    undetermined = 0
    for S in pieces:
        for cls in classes:
            res = is_isomorphic(S, cls[0], trials, rng)
            if res.certified_yes:
                cls[1] += 1
                break
            if res.status == "undetermined":
                undetermined += 1
        else:
            classes.append([S, 1])
    return DecompositionReport(pieces, incs, cert, [(S, k) for S, k in classes], undetermined)
