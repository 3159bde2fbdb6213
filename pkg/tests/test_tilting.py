from clustertilt import fixtures
from clustertilt.rep import coregular_module, direct_sum, regular_module, simple
from clustertilt.tilting import cotilting_report, tilted_property_battery, tilting_report, torsion_membership


def test_bundled_tilting_module(A):
    T = fixtures.tilting_module()
    rep = tilting_report(T, seed=0)
    assert rep.verdict == "tilting"
    assert rep.summand_count == 5 and rep.pd_ok and rep.rigid_ok
    assert rep.summand_dims == sorted(M.dims for M in fixtures.load_modules(A, "tiltA.mod"))


def test_regular_and_partial(A):
    assert tilting_report(regular_module(A), seed=0).verdict == "tilting"
    assert cotilting_report(coregular_module(A), seed=0).verdict == "tilting"
    # S1 is projective over A (no arrow leaves vertex 1)
    assert tilting_report(simple(A, 1), seed=0).verdict == "partial"
    # the arrow 2 -> 1 gives Ext^1(S2, S1) != 0
    rep = tilting_report(direct_sum(simple(A, 1), simple(A, 2)), seed=0)
    assert rep.verdict == "none" and not rep.rigid_ok


def test_repeated_summands_count_once(A):
    rep = tilting_report(direct_sum(simple(A, 1), simple(A, 1)), seed=0)
    assert rep.summand_count == 1 and rep.verdict == "partial"


def test_torsion_membership(A):
    T = fixtures.tilting_module()
    assert torsion_membership(T, T) == (True, False)
    # the summand tops are 5, {4,5}, 5, 2, 1: only S3 receives no map from T
    assert [torsion_membership(T, simple(A, i))[1] for i in range(1, 6)] == [False, False, True, False, False]


def test_tilted_battery(C, inds):
    bat = tilted_property_battery(C, inds)
    assert bat.global_dimension == "2" and bat.passed
    assert len(bat.modules) == 13
