import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustertilt.algebra import build_algebra
from clustertilt.errors import EmbeddingInvalid, InvalidRepresentation
from clustertilt.rep import (
    ModuleMap,
    cokernel,
    decompose,
    direct_sum,
    dual,
    embed,
    hom_basis,
    hom_dim,
    image,
    injective,
    injective_envelope,
    is_injective,
    is_isomorphic,
    is_projective,
    kernel,
    loewy_layers,
    make_representation,
    projective,
    projective_cover,
    radical,
    regular_module,
    simple,
    socle,
    syzygy,
    thin_module,
    top,
    validate,
)


def test_validate_reports_relation(C):
    M = make_representation(C, (1, 1, 1, 1, 0), {"alpha": [[1]], "beta": [[1]], "gamma": [[1]]}, check=False)
    assert validate(M) == ["relation alpha*beta*gamma does not vanish"]
    with pytest.raises(InvalidRepresentation):
        thin_module(C, (1, 1, 1, 1, 0))


def test_constructor_errors(C):
    with pytest.raises(InvalidRepresentation):
        make_representation(C, (1, 1, 0, 0))
    with pytest.raises(InvalidRepresentation):
        make_representation(C, (1, 1, 0, 0, 0), {"zeta": [[1]]})
    with pytest.raises(InvalidRepresentation):
        make_representation(C, (1, 1, 0, 0, 0), {"alpha": [[1, 0]]})


def test_projective_and_injective_dims(C, B):
    assert [projective(C, i).dims for i in range(1, 6)] == [
        (1, 1, 1, 0, 0), (0, 1, 1, 1, 1), (0, 0, 1, 1, 1), (0, 0, 0, 1, 1), (0, 0, 0, 0, 1)]
    assert [projective(B, i).dims for i in range(1, 6)] == [
        (1, 1, 1, 0, 0), (0, 1, 1, 1, 1), (1, 0, 1, 1, 1), (1, 1, 0, 1, 1), (0, 0, 0, 0, 1)]
    # paths ending at a vertex
    assert injective(C, 4).dims == (0, 1, 1, 1, 0)
    assert injective(C, 5).dims == (0, 1, 1, 1, 1)
    assert regular_module(C).dim == 13


def test_hom_by_hand(C):
    m12, m23 = thin_module(C, (1, 1, 0, 0, 0)), thin_module(C, (0, 1, 1, 0, 0))
    assert hom_dim(m12, m23) == 0
    assert hom_dim(m23, m12) == 1  # 2/3 -> 2 -> socle of 1/2
    assert hom_dim(projective(C, 2), m23) == 1  # = dim of m23 at vertex 2
    for f in hom_basis(projective(C, 1), regular_module(C)):
        assert f.is_valid()


def test_kernels_and_cokernels(C, B):
    P3 = projective(B, 3)
    f = hom_basis(P3, thin_module(B, (0, 0, 1, 1, 0)))[0]
    assert f.is_surjective()
    assert kernel(f)[0].dims == (1, 0, 0, 0, 1)
    g = hom_basis(thin_module(C, (0, 0, 0, 1, 1)), injective(C, 5))[0]
    assert g.is_injective()
    assert cokernel(g)[0].dims == (0, 1, 1, 0, 0)
    assert image(g)[0].dims == (0, 0, 0, 1, 1)


def test_radical_top_socle(C):
    P1, P2 = projective(C, 1), projective(C, 2)
    assert radical(P1).dims == (0, 1, 1, 0, 0)
    assert top(P2).dims == (0, 1, 0, 0, 0)
    assert socle(P2).dims == (0, 0, 0, 0, 1)
    assert loewy_layers(P2) == [(0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]
    for M in (P1, P2, thin_module(C, (0, 1, 1, 1, 0))):
        assert top(dual(M)).dims == socle(M).dims


def test_covers_and_syzygies(C):
    M = thin_module(C, (1, 1, 0, 0, 0))
    P, epi = projective_cover(M)
    assert P.dims == (1, 1, 1, 0, 0) and epi.is_surjective()
    assert syzygy(M).dims == (0, 0, 1, 0, 0)
    I, mono = injective_envelope(M)
    assert mono.is_injective() and is_injective(I)
    S = direct_sum(simple(C, 1), simple(C, 2))
    assert projective_cover(S)[0].dims == (1, 2, 2, 1, 1)


def test_projective_injective(C):
    P1 = projective(C, 1)
    assert is_projective(P1) and is_injective(P1)
    res = is_isomorphic(P1, injective(C, 3))
    assert res.certified_yes and res.map.is_isomorphism()
    assert not is_projective(simple(C, 1))


def test_isomorphism_certificates(C):
    a = make_representation(C, (1, 1, 0, 0, 0), {"alpha": [[3]]})
    b = thin_module(C, (1, 1, 0, 0, 0))
    assert is_isomorphic(a, b, seed=1).certified_yes
    no = is_isomorphic(direct_sum(simple(C, 1), simple(C, 2)), b)
    assert no.certified_no and no.reason
    assert is_isomorphic(b, thin_module(C, (0, 1, 1, 0, 0))).certified_no


def test_dual_is_involutive(C, inds):
    for M in inds:
        DD = dual(dual(M))
        assert DD.algebra is C and is_isomorphic(DD, M, seed=0).certified_yes


def test_embed_restrict_roundtrip(pair, mod):
    M = mod("M34.mod")
    N = pair.embed(M)
    assert N.algebra is pair.B and N.dims == M.dims
    assert is_isomorphic(pair.restrict(N), M).certified_yes



def test_embed_checks_relations(C):
    # a module over the relation-free A5 path algebra that violates alpha*beta*gamma = 0 in C
    free = build_algebra(C.quiver, [])
    M = thin_module(free, (1, 1, 1, 1, 0))
    with pytest.raises(EmbeddingInvalid):
        embed(M, C, {k: k for k in range(4)})
    assert embed(thin_module(free, (1, 1, 1, 0, 0)), C, {k: k for k in range(4)}).algebra is C


def test_module_map_algebra(C):
    M = thin_module(C, (0, 1, 1, 0, 0))
    f = hom_basis(M, M)[0]
    assert (f @ f).is_isomorphism()
    assert (f + f.scale(-1)).is_zero()
    assert isinstance(f, ModuleMap) and f.vector().shape == (2,)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=4), st.integers(0, 10**6))
def test_decompose_recovers_summands(inds, picks, seed):
    M = direct_sum(*[inds[k] for k in picks])
    rep = decompose(M, seed=seed)
    assert rep.dim_vectors() == sorted(inds[k].dims for k in picks)
    assert rep.certificate.is_isomorphism()
    assert sum(m for _, m in rep.summands) == len(picks)
    assert len(rep.summands) == len(set(picks))
