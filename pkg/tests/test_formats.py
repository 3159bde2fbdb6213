import numpy as np
import pytest

from clustertilt import fixtures
from clustertilt.algebra import build_algebra
from clustertilt.errors import InvalidRepresentation, ParseError
from clustertilt.formats import (
    load_algebra,
    load_modules,
    load_pair,
    module_from_spec,
    parse_algebra,
    parse_modules,
    parse_pair,
    serialize_algebra,
    serialize_module,
)
from clustertilt.rep import is_isomorphic

COMMUTATIVE_SQUARE = """\
# square with one commutativity relation
algebra S
vertices 4
arrow a 1 2
arrow b 2 4
arrow c 1 3
arrow d 3 4
relation a*b - 3*c*d   # trailing comment
"""


def test_parse_algebra_relation_coefficients():
    spec = parse_algebra(COMMUTATIVE_SQUARE)
    assert spec.name == "S" and spec.quiver.vertex_count == 4
    (r,) = spec.relations
    assert [c for c, _ in r.terms] == [1, -3]
    S = build_algebra(spec.quiver, spec.relations, prime=101)
    assert S.dim == 9


@pytest.mark.parametrize("name", ["A", "C", "B"])
def test_algebra_round_trip(name):
    A = fixtures.algebra(name)
    spec = parse_algebra(serialize_algebra(A))
    again = build_algebra(spec.quiver, spec.relations, name=spec.name)
    assert again.basis_names() == A.basis_names()
    assert np.array_equal(again.struct, A.struct)


def test_negative_coefficient_round_trip():
    spec = parse_algebra(COMMUTATIVE_SQUARE)
    S = build_algebra(spec.quiver, spec.relations, prime=101, name="S")
    text = serialize_algebra(S)
    assert "relation a*b - 3*c*d" in text
    spec2 = parse_algebra(text)
    assert np.array_equal(build_algebra(spec2.quiver, spec2.relations, prime=101).struct, S.struct)


@pytest.mark.parametrize("text,line", [
    ("algebra X\nvertices 2\narrow a 1 3\n", 3),
    ("algebra X\nvertices 2\narrow a 1 2\narrow a 2 1\n", 4),
    ("algebra X\nvertices 2\nfrobnicate\n", 3),
    ("algebra X\nvertices two\n", 2),
    ("algebra X\nvertices 3\narrow a 1 2\narrow b 2 3\nrelation a*zz\n", 5),
    ("algebra X\narrow a 1 2\n", 2),
])
def test_algebra_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_algebra(text, "x.alg")
    assert info.value.line == line
    assert str(info.value).startswith(f"x.alg:{line}:")


def test_module_round_trip(C, inds):
    for k, M in enumerate(inds):
        (spec,) = parse_modules(serialize_module(M, f"I{k}"))
        N = module_from_spec(C, spec)
        assert N.dims == M.dims and all(np.array_equal(a, b) for a, b in zip(N.maps, M.maps))


def test_multi_block_module_file(C):
    mods = load_modules(C, "M45_M12.mod")
    assert [M.dims for M in mods] == [(0, 0, 0, 1, 1), (1, 1, 0, 0, 0)]
    assert len(load_modules(C, "indecC.mod")) == 13


@pytest.mark.parametrize("text,exc,line", [
    ("dims 1 0\n", ParseError, 1),
    ("module M\ndims 1 1 0 0 0\nmap alpha 1\n", ParseError, 3),
    ("module M\ndims 1 1 0 0 0\nmap alpha [1]\nmap alpha [1]\n", ParseError, 4),
    ("module M\ndims 1 1 0 0 0\nmap alpha [1 0]\n", ParseError, 3),
    ("module M\ndims 1 1 0 0 0\nmap zeta [1]\n", ParseError, 3),
    ("module M\ndims 1 1 0 0\n", ParseError, 1),
])
def test_module_errors(C, text, exc, line):
    with pytest.raises(exc) as info:
        for spec in parse_modules(text):
            module_from_spec(C, spec)
    assert info.value.line == line


def test_module_violating_relations(C):
    text = "module M\ndims 1 1 1 1 0\nmap alpha [1]\nmap beta [1]\nmap gamma [1]\n"
    with pytest.raises(InvalidRepresentation, match="alpha\\*beta\\*gamma"):
        module_from_spec(C, parse_modules(text)[0])


def test_pair_files(tmp_path):
    spec = parse_pair("pair p\nsubalgebra c.alg\nextension b.alg\nmap alpha alpha\ncluster-tilted\n")
    assert spec.cluster_tilted and spec.arrow_map == {"alpha": "alpha"}
    with pytest.raises(ParseError):
        parse_pair("pair p\nsubalgebra c.alg\n")
    # a pair on disk resolves its algebra files relative to itself
    for name in ("fixC.alg", "fixB.alg"):
        (tmp_path / name).write_text(serialize_algebra(fixtures.algebra(name[3])))
    (tmp_path / "p.pair").write_text("pair p\nsubalgebra fixC.alg\nextension fixB.alg\ncluster-tilted\n")
    pair = load_pair(str(tmp_path / "p.pair"))
    assert pair.B.dim == 16 and pair.E_module.dims == (2, 1, 0, 0, 0)


def test_bundled_lookup_is_case_insensitive(C):
    assert load_algebra("FIXC").dim == 13
    assert is_isomorphic(load_modules(C, "m34")[0], fixtures.module("M34.mod")).certified_yes
    with pytest.raises(FileNotFoundError):
        load_algebra("no-such-algebra")
