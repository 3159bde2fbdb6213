import pytest

from clustertilt import fixtures
from clustertilt.algebra import Relation, build_algebra
from clustertilt.cluster import (
    classify_pd_B,
    coinduce,
    induce,
    kernel_as_c_module,
    make_pair,
    module_checks,
    multiplication_map,
    property_suite,
    resolution_transfer_check,
    rigidity_report,
    tensor_with_kernel,
)
from clustertilt.errors import NotClusterTilted, NotSplitExtension
from clustertilt.homology import pd_by_resolution
from clustertilt.rep import decompose, injective, is_isomorphic, projective


def test_kernel_module(pair):
    E = pair.E_module
    assert E.dims == (2, 1, 0, 0, 0)
    assert sorted(decompose(E, seed=0).dim_vectors()) == [(1, 0, 0, 0, 0), (1, 1, 0, 0, 0)]
    assert is_isomorphic(kernel_as_c_module(pair), E, seed=0).certified_yes
    assert pair.new_arrow_names == ["delta"]


def test_rejects_non_extensions(C, B):
    with pytest.raises(NotSplitExtension, match="dimension"):
        make_pair(C, C)
    # dropping the relation beta*gamma*delta gives a 17-dimensional algebra
    q = B.quiver
    rels = [Relation(((1, q.path(*w)),)) for w in
            (("alpha", "beta", "gamma"), ("gamma", "delta", "alpha"), ("delta", "alpha", "beta"))]
    big = build_algebra(q, rels, name="B17")
    assert big.dim == 17
    with pytest.raises(NotSplitExtension):
        make_pair(C, big)
    with pytest.raises(NotSplitExtension, match="arrow map"):
        make_pair(C, B, {"alpha": "zeta", "beta": "beta", "gamma": "gamma", "eps": "eps"})
    with pytest.raises(NotSplitExtension, match="endpoints"):
        make_pair(C, B, {"alpha": "beta", "beta": "alpha", "gamma": "gamma", "eps": "eps"})


def test_induction_of_projectives_and_injectives(pair):
    for i in range(1, 6):
        assert is_isomorphic(induce(pair, projective(pair.C, i)), projective(pair.B, i), seed=0).certified_yes
        assert is_isomorphic(coinduce(pair, injective(pair.C, i)), injective(pair.B, i), seed=0).certified_yes


def test_induction_sequence_dimensions(pair, inds):
    for M in inds:
        f = multiplication_map(pair, M)
        assert f.is_surjective()
        # 0 -> M (x) E -> M (x) B -> M -> 0
        assert induce(pair, M).dim == M.dim + tensor_with_kernel(pair, M).dim


@pytest.mark.parametrize("name,verdict", [
    ("M5.mod", "0"), ("M234.mod", "1"), ("M12.mod", "infinite"),
    ("M45.mod", "infinite"), ("M34.mod", "infinite"),
])
def test_classifier_verdicts(pair, mod, name, verdict):
    assert classify_pd_B(pair, mod(name), seed=0).verdict == verdict


def test_classifier_against_resolutions(pair, inds):
    for M in inds:
        v = classify_pd_B(pair, M, seed=0).verdict
        rep = pd_by_resolution(pair.embed(M), 8)
        if v == "infinite":
            assert not rep.is_exact
        else:
            assert rep.value == int(v)


def test_classifier_requires_cluster_tilted(C, B, mod):
    plain = make_pair(C, B, cluster_tilted=False)
    with pytest.raises(NotClusterTilted):
        classify_pd_B(plain, mod("M5.mod"))


def test_resolution_transfer(pair, mod):
    out = resolution_transfer_check(pair, mod("M234.mod"), seed=0)
    assert out["pass"] and out["C_terms"] == out["B_terms"]
    assert not resolution_transfer_check(pair, mod("M12.mod"), seed=0)["pass"]


def test_rigidity(pair, mod):
    r = rigidity_report(pair, mod("M45_M12.mod"), seed=0)
    assert r.flags() == (True, False, False, False) and r.ext1_B >= 1
    assert rigidity_report(pair, mod("M5_M3.mod"), seed=0).flags() == (True, True, True, True)
    # indecomposable rigid C-modules stay rigid over B
    for M in fixtures.c_indecomposables():
        rep = rigidity_report(pair, M, seed=0)
        assert rep.indecomposable and (not rep.rigid_C or rep.rigid_B)


def test_property_suite(pair, inds):
    report = property_suite(pair, inds, seed=0)
    assert report["summary"]["fail"] == 0 and report["summary"]["undetermined"] == 0
    names = {c.name for c in module_checks(pair, inds[0], seed=0)}
    assert len(names) == 13
