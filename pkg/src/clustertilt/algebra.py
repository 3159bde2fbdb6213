"""Bound quiver algebras kQ/I with an explicit normal-form basis.

Conventions used throughout the package:

* Vertices are stored 0-based internally; user-facing helpers that take a
  vertex (``projective(A, i)`` and friends) use the 1-based labels of the
  quiver as written by hand.
* Paths compose left to right: in ``alpha*beta`` the arrow ``alpha`` is
  traversed first.  A right module is then a representation in which an arrow
  ``a: i -> j`` acts as a linear map ``M_i -> M_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import linalg as la
from .errors import ConfigurationError, InvalidRelation, NotAdmissible

DEFAULT_LENGTH_CAP = 32
MAX_PATHS = 20000
ASSOC_EXHAUSTIVE_MAX_DIM = 40
ASSOC_SAMPLES = 4000


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


class Path(NamedTuple):
    """A path ``source -> ... -> target``; ``arrows`` holds arrow indices."""

    source: int
    target: int
    arrows: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InvalidRelation(f"duplicate arrow names in {names}")
        for a in self.arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise InvalidRelation(f"arrow {a.name} has an endpoint out of range")

    @classmethod
    def from_labels(cls, n: int, arrows: Iterable[tuple[str, int, int]]) -> "Quiver":
        """Build from arrows written with 1-based vertex labels."""
        arrows = tuple(arrows)
        for name, s, t in arrows:
            if not (1 <= s <= n and 1 <= t <= n):
                raise InvalidRelation(f"arrow {name}: {s}->{t} out of range 1..{n}")
        return cls(n, tuple(Arrow(name, s - 1, t - 1) for name, s, t in arrows))

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)

    def path(self, *names: str) -> Path:
        """The path through the named arrows (checked for composability)."""
        if not names:
            raise ValueError("use Quiver.stationary for trivial paths")
        idx = tuple(self.arrow_index(n) for n in names)
        for a, b in zip(idx, idx[1:]):
            if self.arrows[a].target != self.arrows[b].source:
                raise InvalidRelation(f"arrows {self.arrows[a].name}, {self.arrows[b].name} do not compose")
        return Path(self.arrows[idx[0]].source, self.arrows[idx[-1]].target, idx)

    def stationary(self, vertex: int) -> Path:
        return Path(vertex, vertex, ())

    def reversed(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def path_name(self, path: Path) -> str:
        if not path.arrows:
            return f"e{path.source + 1}"
        return "*".join(self.arrows[k].name for k in path.arrows)


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least two."""

    terms: tuple[tuple[int, Path], ...]

    def validate(self, quiver: Quiver, p: int) -> None:
        if not self.terms:
            raise InvalidRelation("empty relation")
        ends = {(path.source, path.target) for _, path in self.terms}
        if len(ends) != 1:
            raise InvalidRelation("relation terms are not parallel paths")
        if any(path.length < 2 for _, path in self.terms):
            raise InvalidRelation("relation involves a path of length < 2 (not admissible)")
        if all(c % p == 0 for c, _ in self.terms):
            raise InvalidRelation("relation has no nonzero coefficient")

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target

    def reversed(self) -> "Relation":
        return Relation(tuple((c, _reverse(path)) for c, path in self.terms))

    def describe(self, quiver: Quiver) -> str:
        parts = []
        for c, path in self.terms:
            parts.append(("" if c == 1 else f"{c}*") + quiver.path_name(path))
        return " + ".join(parts)


def _reverse(path: Path) -> Path:
    return Path(path.target, path.source, tuple(reversed(path.arrows)))


def _extend(quiver: Quiver, paths: list[Path]) -> list[Path]:
    out = []
    for path in paths:
        for k, a in enumerate(quiver.arrows):
            if a.source == path.target:
                out.append(Path(path.source, a.target, path.arrows + (k,)))
    return out


def _order_key(path: Path):
    # Longest paths first, so the echelon pivots (eliminated paths) are long
    # and the surviving normal forms are as short as possible.
    return (-path.length, path.source, path.target, path.arrows)


@dataclass(eq=False)
class BoundQuiverAlgebra:
    """A finite-dimensional algebra kQ/I with a basis of path normal forms.

    ``struct[i, j]`` holds the coordinates of ``basis[i] * basis[j]``.  Paths
    of length ``>= nilpotency`` vanish.  Treat instances as immutable.
    """

    name: str
    quiver: Quiver
    relations: tuple[Relation, ...]
    prime: int
    nilpotency: int
    basis: tuple[Path, ...]
    struct: np.ndarray
    _normal_forms: dict = field(repr=False)
    _op: "BoundQuiverAlgebra | None" = field(default=None, repr=False)

    def __post_init__(self):
        self.index = {b: k for k, b in enumerate(self.basis)}
        n = self.quiver.vertex_count
        self.blocks: dict[tuple[int, int], list[int]] = {(i, j): [] for i in range(n) for j in range(n)}
        for k, b in enumerate(self.basis):
            self.blocks[(b.source, b.target)].append(k)
        self.idempotents = [self.index[Path(i, i, ())] for i in range(n)]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    def block(self, i: int, j: int) -> list[int]:
        """Basis indices of ``e_i A e_j`` (paths from ``i`` to ``j``), 0-based."""
        return self.blocks[(i, j)]

    def normal_form(self, path: Path) -> np.ndarray:
        if path.length >= self.nilpotency:
            return np.zeros(self.dim, dtype=np.int64)
        return self._normal_forms[path].copy()

    def element(self, *terms: tuple[int, Path]) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for c, path in terms:
            v = (v + c * self.normal_form(path)) % self.prime
        return v

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return multiply(self, x, y)

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._op is None:
            op = BoundQuiverAlgebra(
                name=self.name + "^op",
                quiver=self.quiver.reversed(),
                relations=tuple(r.reversed() for r in self.relations),
                prime=self.prime,
                nilpotency=self.nilpotency,
                basis=tuple(_reverse(b) for b in self.basis),
                struct=self.struct.transpose(1, 0, 2).copy(),
                _normal_forms={_reverse(k): v for k, v in self._normal_forms.items()},
            )
            op._op = self
            self._op = op
        return self._op

    @property
    def op(self) -> "BoundQuiverAlgebra":
        return self.opposite()

    def basis_names(self) -> list[str]:
        return [self.quiver.path_name(b) for b in self.basis]

    def path_counts_by_length(self) -> tuple[int, ...]:
        counts = [0] * self.nilpotency
        for b in self.basis:
            counts[b.length] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def check_associative(self, rng: np.random.Generator | None = None) -> bool:
        d, p, s = self.dim, self.prime, self.struct
        if d <= ASSOC_EXHAUSTIVE_MAX_DIM:
            # (b_i b_j) b_k versus b_i (b_j b_k), all triples at once
            left = (s.reshape(d * d, d) @ s.reshape(d, d * d)) % p
            right = (s.reshape(d * d, d) @ s.transpose(1, 0, 2).reshape(d, d * d)) % p
            left = left.reshape(d, d, d, d)
            right = right.reshape(d, d, d, d).transpose(2, 0, 1, 3)
            return bool(np.array_equal(left, right))
        rng = rng or np.random.default_rng(0)
        for _ in range(ASSOC_SAMPLES):
            i, j, k = (int(t) for t in rng.integers(0, d, size=3))
            lhs = multiply(self, s[i, j], _unit(d, k))
            rhs = multiply(self, _unit(d, i), s[j, k])
            if not np.array_equal(lhs, rhs):
                return False
        return True


def _unit(d: int, k: int) -> np.ndarray:
    v = np.zeros(d, dtype=np.int64)
    v[k] = 1
    return v


def multiply(A: BoundQuiverAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product of two algebra elements given in basis coordinates."""
    d, p = A.dim, A.prime
    t = (np.asarray(x, dtype=np.int64) @ A.struct.reshape(d, d * d)) % p
    return (np.asarray(y, dtype=np.int64) @ t.reshape(d, d)) % p


def build_algebra(
    quiver: Quiver,
    relations: Sequence[Relation] = (),
    length_cap: int = DEFAULT_LENGTH_CAP,
    prime: int = la.DEFAULT_PRIME,
    name: str = "A",
) -> BoundQuiverAlgebra:
    """Compute kQ/I: the two-sided ideal closure, nilpotency bound and basis.

    The ideal is saturated inside kQ / (paths of length > N) for increasing N
    until every path of length N lies in it; that N is the nilpotency bound.
    """
    if not la.is_prime(prime):
        raise ConfigurationError(f"{prime} is not prime")
    relations = tuple(
        Relation(tuple((c % prime, path) for c, path in r.terms)) for r in relations
    )
    for r in relations:
        r.validate(quiver, prime)

    levels: list[list[Path]] = [[Path(i, i, ()) for i in range(quiver.vertex_count)]]
    for N in range(1, length_cap + 1):
        levels.append(_extend(quiver, levels[-1]))
        all_paths = [path for lvl in levels for path in lvl]
        if len(all_paths) > MAX_PATHS:
            raise NotAdmissible(f"path space exceeds {MAX_PATHS} paths before reaching a nilpotency bound")
        order = sorted(all_paths, key=_order_key)
        col = {path: k for k, path in enumerate(order)}
        gens = _ideal_generators(quiver, relations, levels, N, col, prime)
        if gens.shape[0]:
            ideal, piv = la._rref_with_pivots(gens, prime)
            ideal = ideal[:len(piv)]
        else:
            ideal, piv = la.zeros(0, len(order)), []
        if all(_in_rowspace(ideal, piv, col[path], prime) for path in levels[N]):
            return _assemble(name, quiver, relations, prime, N, order, ideal, piv)
    raise NotAdmissible(f"no nilpotency bound <= {length_cap}: the ideal is not admissible")


def _ideal_generators(quiver, relations, levels, N, col, prime) -> np.ndarray:
    ending = {}
    starting = {}
    for lvl in levels:
        for path in lvl:
            ending.setdefault(path.target, []).append(path)
            starting.setdefault(path.source, []).append(path)
    rows = []
    for r in relations:
        shortest = min(path.length for _, path in r.terms)
        for u in ending.get(r.source, []):
            for v in starting.get(r.target, []):
                if u.length + v.length + shortest > N:
                    continue
                row = np.zeros(len(col), dtype=np.int64)
                for c, path in r.terms:
                    arrows = u.arrows + path.arrows + v.arrows
                    if len(arrows) <= N:
                        row[col[Path(u.source, v.target, arrows)]] += c
                rows.append(row % prime)
    if not rows:
        return la.zeros(0, len(col))
    return np.array(rows, dtype=np.int64)


def _in_rowspace(ideal: np.ndarray, piv: list[int], c: int, p: int) -> bool:
    v = np.zeros(ideal.shape[1], dtype=np.int64)
    v[c] = 1
    if piv:
        v = (v - ideal.T @ v[piv]) % p
    return not v.any()


def _assemble(name, quiver, relations, prime, N, order, ideal, piv) -> BoundQuiverAlgebra:
    pset = set(piv)
    survivors = [order[c] for c in range(len(order)) if c not in pset]
    basis = sorted(survivors, key=lambda path: (path.source, path.target, path.length, path.arrows))
    bidx = {b: k for k, b in enumerate(basis)}
    d = len(basis)
    if prime <= d:
        raise ConfigurationError(f"prime {prime} must exceed the algebra dimension {d}")

    normal_forms: dict[Path, np.ndarray] = {}
    for c, path in enumerate(order):
        if path.length >= N:
            continue
        v = np.zeros(len(order), dtype=np.int64)
        v[c] = 1
        if piv:
            v = (v - ideal.T @ v[piv]) % prime
        nf = np.zeros(d, dtype=np.int64)
        for cc in np.flatnonzero(v):
            nf[bidx[order[cc]]] = v[cc]
        normal_forms[path] = nf

    struct = np.zeros((d, d, d), dtype=np.int64)
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if x.target != y.source or x.length + y.length >= N:
                continue
            struct[i, j] = normal_forms[Path(x.source, y.target, x.arrows + y.arrows)]

    A = BoundQuiverAlgebra(
        name=name,
        quiver=quiver,
        relations=relations,
        prime=prime,
        nilpotency=N,
        basis=tuple(basis),
        struct=struct,
        _normal_forms=normal_forms,
    )
    for r in relations:
        if A.element(*r.terms).any():
            raise AssertionError("relation does not vanish in the quotient")
    if not A.check_associative():
        raise AssertionError("multiplication table is not associative")
    return A


def opposite_algebra(A: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return A.opposite()
