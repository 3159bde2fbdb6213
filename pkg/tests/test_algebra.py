import numpy as np
import pytest

from clustertilt.algebra import Path, Quiver, Relation, build_algebra
from clustertilt.errors import ConfigurationError, InvalidRelation, NotAdmissible


def rel(q, *terms):
    """Relation from (coefficient, 'x*y') pairs."""
    return Relation(tuple((c, q.path(*word.split("*"))) for c, word in terms))


def test_fixture_dimensions(A, C, B):
    assert (A.dim, C.dim, B.dim) == (14, 13, 16)
    assert A.path_counts_by_length() == (5, 4, 3, 2)
    # C: the only path of length 3 is beta*gamma*eps; alpha*beta*gamma = 0
    assert C.path_counts_by_length() == (5, 4, 3, 1)
    assert B.path_counts_by_length() == (5, 5, 5, 1)
    names = B.basis_names()
    assert "beta*gamma*eps" in names and "alpha*beta*gamma" not in names


def test_multiplication_by_hand(C):
    q = C.quiver
    ab = C.normal_form(q.path("alpha", "beta"))
    g = C.normal_form(q.path("gamma"))
    assert not C.multiply(ab, g).any()  # alpha*beta*gamma = 0
    a, b = C.normal_form(q.path("alpha")), C.normal_form(q.path("beta"))
    assert np.array_equal(C.multiply(a, b), ab)
    assert not C.multiply(b, a).any()  # beta does not end where alpha starts
    e1 = C.normal_form(q.stationary(0))
    assert np.array_equal(C.multiply(e1, a), a)
    assert not C.multiply(a, e1).any()


def test_associative(A, C, B):
    assert A.check_associative() and C.check_associative() and B.check_associative()


def test_commutativity_relation_is_not_monomial():
    q = Quiver.from_labels(4, [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)])
    S = build_algebra(q, [rel(q, (1, "a*b"), (-1, "c*d"))])
    assert S.dim == 9  # 4 vertices, 4 arrows, one surviving length-2 path
    assert np.array_equal(S.normal_form(q.path("a", "b")), S.normal_form(q.path("c", "d")))


def test_loop_needs_a_relation():
    q = Quiver.from_labels(1, [("x", 1, 1)])
    assert build_algebra(q, [rel(q, (1, "x*x"))]).dim == 2
    with pytest.raises(NotAdmissible):
        build_algebra(q, [], length_cap=6)


def test_invalid_inputs():
    q = Quiver.from_labels(2, [("a", 1, 2)])
    with pytest.raises(InvalidRelation):
        build_algebra(q, [Relation(((1, q.path("a")),))])  # length one
    with pytest.raises(ConfigurationError):
        build_algebra(q, [], prime=12)
    with pytest.raises(InvalidRelation):
        Quiver.from_labels(2, [("a", 1, 3)])
    with pytest.raises(InvalidRelation):
        Quiver.from_labels(2, [("a", 1, 2), ("a", 2, 1)])
    q2 = Quiver.from_labels(3, [("a", 1, 2), ("b", 2, 3), ("c", 1, 3)])
    with pytest.raises(InvalidRelation):
        Relation(((1, q2.path("a", "b")), (1, q2.path("b")))).validate(q2, 7)
    with pytest.raises(InvalidRelation):
        q2.path("b", "a")


def test_opposite(C):
    op = C.opposite()
    assert op.opposite() is C
    assert op.dim == C.dim
    # the op algebra's e_j A^op e_i has the same size as e_i A e_j
    for i in range(5):
        for j in range(5):
            assert len(op.block(j, i)) == len(C.block(i, j))
    a = C.arrows[0]
    assert (op.arrows[0].source, op.arrows[0].target) == (a.target, a.source)


def test_paths_are_ordered_blocks(C):
    assert [len(C.block(0, j)) for j in range(5)] == [1, 1, 1, 0, 0]
    assert C.block(1, 4) == [C.index[Path(1, 4, tuple(C.quiver.arrow_index(n) for n in ("beta", "gamma", "eps")))]]
