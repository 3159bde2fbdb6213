"""Line-oriented text formats for algebras, modules and split-extension pairs.

Algebra files::

    algebra C
    vertices 5
    arrow alpha 1 2
    arrow beta 2 3
    relation alpha*beta - 2*gamma*delta

Module files (several ``module`` blocks may follow each other)::

    module M
    algebra C
    dims 1 1 0 0 0
    map alpha [1]
    map beta [1 0] [0 1]

Each bracket is one matrix row; a map ``k^s -> k^t`` has ``t`` rows of ``s``
integers.  Omitted maps are zero.  Pair files::

    pair fixpair
    subalgebra fixC.alg
    extension fixB.alg
    map alpha alpha        # optional, defaults to equal names
    cluster-tilted         # optional flag

``#`` starts a comment everywhere.  Integers are reduced into the prime field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path as FsPath

import numpy as np

from .algebra import DEFAULT_LENGTH_CAP, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .errors import InvalidRepresentation, ParseError
from .linalg import DEFAULT_PRIME
from .rep import Representation, make_representation

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok: str, no: int, source, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {tok!r}", no, source) from None


# ---------------------------------------------------------------- algebras


@dataclass
class AlgebraSpec:
    name: str
    quiver: Quiver
    relations: list[Relation]


def _parse_relation(text: str, quiver: Quiver, no: int, source) -> Relation:
    tokens = re.findall(r"[+-]|[^\s+-]+", text)
    if not tokens:
        raise ParseError("empty relation", no, source)
    terms = []
    sign, expect_term = 1, True
    for tok in tokens:
        if tok in "+-":
            sign = -sign if tok == "-" else sign
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f"missing + or - before {tok!r}", no, source)
        parts = tok.split("*")
        coef = 1
        if re.fullmatch(r"\d+", parts[0]):
            coef = int(parts[0])
            parts = parts[1:]
        if not parts or any(not p for p in parts):
            raise ParseError(f"malformed path {tok!r}", no, source)
        try:
            path = quiver.path(*parts)
        except Exception as exc:
            raise ParseError(str(exc), no, source) from None
        terms.append((sign * coef, path))
        sign, expect_term = 1, False
    if expect_term:
        raise ParseError("relation ends with a sign", no, source)
    return Relation(tuple(terms))


def parse_algebra(text: str, source: str | None = None) -> AlgebraSpec:
    name, n = None, None
    arrows: list[tuple[str, int, int]] = []
    rel_lines: list[tuple[int, str]] = []
    for no, line in _lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "algebra":
            if not _NAME.match(rest):
                raise ParseError(f"bad algebra name {rest!r}", no, source)
            name = rest
        elif key == "vertices":
            n = _int(rest, no, source, "vertex count")
            if n < 1:
                raise ParseError("need at least one vertex", no, source)
        elif key == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("arrow lines read: arrow NAME SOURCE TARGET", no, source)
            if n is None:
                raise ParseError("'vertices' must precede arrows", no, source)
            a, s, t = parts[0], _int(parts[1], no, source, "source"), _int(parts[2], no, source, "target")
            if not _NAME.match(a):
                raise ParseError(f"bad arrow name {a!r}", no, source)
            if not (1 <= s <= n and 1 <= t <= n):
                raise ParseError(f"arrow {a}: endpoint outside 1..{n}", no, source)
            if any(a == b for b, _, _ in arrows):
                raise ParseError(f"duplicate arrow {a}", no, source)
            arrows.append((a, s, t))
        elif key == "relation":
            rel_lines.append((no, rest))
        else:
            raise ParseError(f"unknown keyword {key!r}", no, source)
    if name is None or n is None:
        raise ParseError("missing 'algebra' or 'vertices' line", None, source)
    quiver = Quiver.from_labels(n, arrows)
    relations = [_parse_relation(r, quiver, no, source) for no, r in rel_lines]
    return AlgebraSpec(name, quiver, relations)


def serialize_algebra(A: BoundQuiverAlgebra) -> str:
    out = [f"algebra {A.name}", f"vertices {A.vertex_count}"]
    for a in A.arrows:
        out.append(f"arrow {a.name} {a.source + 1} {a.target + 1}")
    for r in A.relations:
        parts = []
        for c, path in r.terms:
            c = c % A.prime
            sign = "+"
            if c > A.prime // 2:
                c, sign = A.prime - c, "-"
            body = A.quiver.path_name(path) if c == 1 else f"{c}*{A.quiver.path_name(path)}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        text += "".join(f" {s} {b}" for s, b in parts[1:])
        out.append(f"relation {text}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- modules


@dataclass
class ModuleSpec:
    name: str
    algebra_name: str | None
    dims: tuple[int, ...]
    maps: dict[str, list[list[int]]] = field(default_factory=dict)
    line: int = 0
    map_lines: dict[str, int] = field(default_factory=dict)


def _parse_matrix(text: str, no: int, source) -> list[list[int]]:
    text = text.strip()
    if not text:
        return []
    if not re.fullmatch(r"(\[[^\[\]]*\]\s*)+", text):
        raise ParseError("matrix rows must be written as [a b c] [d e f] ...", no, source)
    rows = []
    for body in re.findall(r"\[([^\[\]]*)\]", text):
        rows.append([_int(t, no, source, "matrix entry") for t in body.replace(",", " ").split()])
    return rows


def parse_modules(text: str, source: str | None = None) -> list[ModuleSpec]:
    specs: list[ModuleSpec] = []
    cur: ModuleSpec | None = None
    for no, line in _lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "module":
            cur = ModuleSpec(rest or f"M{len(specs) + 1}", None, (), line=no)
            specs.append(cur)
            continue
        if cur is None:
            raise ParseError("expected 'module NAME' first", no, source)
        if key == "algebra":
            cur.algebra_name = rest
        elif key == "dims":
            cur.dims = tuple(_int(t, no, source, "dimension") for t in rest.split())
            if any(d < 0 for d in cur.dims):
                raise ParseError("negative dimension", no, source)
        elif key == "map":
            arrow, _, mat = rest.partition(" ")
            if not arrow:
                raise ParseError("map lines read: map ARROW [row] [row] ...", no, source)
            if arrow in cur.maps:
                raise ParseError(f"arrow {arrow} given twice", no, source)
            cur.maps[arrow] = _parse_matrix(mat, no, source)
            cur.map_lines[arrow] = no
        else:
            raise ParseError(f"unknown keyword {key!r}", no, source)
    if not specs:
        raise ParseError("no module found", None, source)
    return specs


def module_from_spec(A: BoundQuiverAlgebra, spec: ModuleSpec, source: str | None = None) -> Representation:
    if len(spec.dims) != A.vertex_count:
        raise ParseError(f"module {spec.name}: {len(spec.dims)} dimensions for {A.vertex_count} vertices",
                         spec.line, source)
    names = {a.name: a for a in A.arrows}
    mats = {}
    for arrow, rows in spec.maps.items():
        no = spec.map_lines.get(arrow)
        if arrow not in names:
            raise ParseError(f"module {spec.name}: unknown arrow {arrow!r}", no, source)
        a = names[arrow]
        t, s = spec.dims[a.target], spec.dims[a.source]
        if len(rows) != t or any(len(r) != s for r in rows):
            raise ParseError(f"module {spec.name}: arrow {arrow} needs {t} rows of {s} entries", no, source)
        mats[arrow] = np.array(rows, dtype=np.int64).reshape(t, s)
    try:
        return make_representation(A, spec.dims, mats)
    except InvalidRepresentation as exc:
        raise InvalidRepresentation(f"module {spec.name}: {exc}") from None


def serialize_module(M: Representation, name: str = "M") -> str:
    A = M.algebra
    out = [f"module {name}", f"algebra {A.name}", "dims " + " ".join(str(d) for d in M.dims)]
    for a, m in zip(A.arrows, M.maps):
        if m.size and m.any():
            rows = " ".join("[" + " ".join(str(int(x)) for x in row) + "]" for row in m)
            out.append(f"map {a.name} {rows}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- pairs


@dataclass
class PairSpec:
    name: str
    subalgebra: str
    extension: str
    arrow_map: dict[str, str] | None
    cluster_tilted: bool


def parse_pair(text: str, source: str | None = None) -> PairSpec:
    name = sub = ext = None
    amap: dict[str, str] = {}
    flag = False
    for no, line in _lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "pair":
            name = rest
        elif key == "subalgebra":
            sub = rest
        elif key == "extension":
            ext = rest
        elif key == "map":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("map lines read: map SUBALGEBRA_ARROW EXTENSION_ARROW", no, source)
            amap[parts[0]] = parts[1]
        elif key == "cluster-tilted":
            flag = True
        else:
            raise ParseError(f"unknown keyword {key!r}", no, source)
    if not (name and sub and ext):
        raise ParseError("pair files need 'pair', 'subalgebra' and 'extension' lines", None, source)
    return PairSpec(name, sub, ext, amap or None, flag)


# ---------------------------------------------------------------- file lookup


_SUFFIXES = ("", ".alg", ".mod", ".pair")


def resolve_path(name: str, base: FsPath | None = None) -> tuple[str, str]:
    """Return ``(text, label)`` for a file path or a bundled data file name."""
    candidates = [FsPath(name)]
    if base is not None:
        candidates.insert(0, base / name)
    for c in candidates:
        if c.is_file():
            return c.read_text(), str(c)
    data = resources.files("clustertilt") / "data"
    wanted = name.lower()
    for entry in sorted(data.iterdir(), key=lambda e: e.name):
        stem = entry.name.rsplit(".", 1)[0].lower()
        if entry.name.lower() == wanted or stem == wanted or any(stem + s == wanted for s in _SUFFIXES):
            return entry.read_text(), f"bundled:{entry.name}"
    raise FileNotFoundError(f"no such file or bundled data: {name}")


def load_algebra(name: str, prime: int = DEFAULT_PRIME, length_cap: int = DEFAULT_LENGTH_CAP,
                 base: FsPath | None = None) -> BoundQuiverAlgebra:
    text, label = resolve_path(name, base)
    spec = parse_algebra(text, label)
    return build_algebra(spec.quiver, spec.relations, length_cap=length_cap, prime=prime, name=spec.name)


def load_modules(A: BoundQuiverAlgebra, name: str, base: FsPath | None = None) -> list[Representation]:
    text, label = resolve_path(name, base)
    return [module_from_spec(A, s, label) for s in parse_modules(text, label)]


def load_pair_spec(name: str) -> tuple[PairSpec, FsPath | None]:
    text, label = resolve_path(name)
    base = None if label.startswith("bundled:") else FsPath(label).parent
    return parse_pair(text, label), base


def load_pair(name: str, prime: int = DEFAULT_PRIME, length_cap: int = DEFAULT_LENGTH_CAP,
              trials: int | None = None, seed=None):
    """Parse a pair file, build both algebras and verify the split extension."""
    from .cluster import make_pair
    from .rep import DEFAULT_TRIALS

    spec, base = load_pair_spec(name)
    C = load_algebra(spec.subalgebra, prime, length_cap, base)
    B = load_algebra(spec.extension, prime, length_cap, base)
    return make_pair(C, B, spec.arrow_map, spec.cluster_tilted,
                     DEFAULT_TRIALS if trials is None else trials, seed)
