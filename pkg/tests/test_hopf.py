import pytest
from hypothesis import given, strategies as st

from hopfdepth.groups import builtin_group, conjugate, generated_subgroup
from hopfdepth.hopf import (HopfError, HopfStructure, NotHopfSubalgebra, check_hopf_axioms, coadjoint_actions,
                            coregular_actions, dual_hopf, group_hopf, induced_hopf_embedding,
                            quotient_module, sweedler, tensor_hopf, variants)
from hopfdepth.linalg import ONE, ZERO, axpy

from fixtures import bad_antipode, bad_bialgebra, bad_coassociative, bad_counit, kG

HOPFS = {
    "kS3": lambda: kG("S3"),
    "(kD4)*": lambda: dual_hopf(kG("D4")),
    "H4": sweedler,
    "(H4)*": lambda: dual_hopf(sweedler()),
    "kC2 (x) H4": lambda: tensor_hopf(kG("C2"), sweedler()),
}


@pytest.mark.parametrize("name", sorted(HOPFS))
def test_axioms_and_variants(name):
    H = HOPFS[name]()
    for label, V in variants(H).items():
        rep = check_hopf_axioms(V)
        assert rep.ok, (label, rep.failures)


@pytest.mark.parametrize("make, axiom", [(bad_coassociative, "coassociativity"),
                                         (bad_counit, "counit"),
                                         (bad_bialgebra, "comultiplication is multiplicative"),
                                         (bad_antipode, "antipode")])
def test_corrupted_hopf_has_witness(make, axiom):
    rep = check_hopf_axioms(make())
    failing = {f.name: f.witness for f in rep.failures}
    assert axiom in failing and failing[axiom]


def test_double_dual_is_identity():
    for H in (sweedler(), kG("S3")):
        assert dual_hopf(dual_hopf(H)).same_structure(H)


def test_sweedler_square_of_antipode():
    H = sweedler()
    x = H.labels.index("x")
    assert H.S(H.S({x: ONE})) == {x: -ONE}
    assert H.Sbar(H.S({x: ONE})) == {x: ONE}


@given(st.sampled_from(["S3", "D4", "Q8"]), st.data())
def test_coadjoint_on_group_algebras(gname, data):
    """g rrhu p_x = p_{g x g^-1} and g llhu p_x = delta(x, e) g."""
    G = builtin_group(gname)
    H = group_hopf(G)
    co = coadjoint_actions(H)
    g = data.draw(st.integers(0, G.order - 1))
    x = data.draw(st.integers(0, G.order - 1))
    assert co.rrhu[g][x] == {conjugate(G, g, x): ONE}
    assert co.llhu[g][x] == ({g: ONE} if x == 0 else {})


@given(st.sampled_from(["S3", "C4"]), st.data())
def test_hit_actions_are_module_actions(gname, data):
    H = kG(gname)
    co = coregular_actions(H)
    n = H.dim
    a, b, k = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    # a -> (b -> f) = (ab) -> f
    lhs: dict = {}
    for m, c in co.hit[b][k].items():
        axpy(lhs, c, co.hit[a][m])
    rhs: dict = {}
    for p, c in H.alg.mult[a][b].items():
        axpy(rhs, c, co.hit[p][k])
    assert lhs == rhs


def test_hopf_subalgebra_detection():
    S3 = kG("S3")
    t = S3.labels.index("(12)")
    pe = induced_hopf_embedding(S3, [{0: 1}, {t: 1}], name="kC2")
    assert check_hopf_axioms(pe.sub).ok
    with pytest.raises(NotHopfSubalgebra):
        induced_hopf_embedding(S3, [{0: 1}, {t: 1, 1: 1}])
    # in H4, span(1, x) is not closed under Delta
    H4 = sweedler()
    with pytest.raises(NotHopfSubalgebra):
        induced_hopf_embedding(H4, [{0: 1}, {H4.labels.index("x"): 1}])


@pytest.mark.parametrize("gname, gens, qdim", [("S3", ["(12)"], 3), ("S3", ["(123)"], 2),
                                               ("S4", ["(12)", "(123)"], 4)])
def test_quotient_module(gname, gens, qdim):
    G = builtin_group(gname)
    H = group_hopf(G)
    els = generated_subgroup(G, [G.index(g) for g in gens])
    pe = induced_hopf_embedding(H, [{e: 1} for e in els])
    Q = quotient_module(pe)
    assert Q.dim == qdim == G.order // len(els)
    # the left action is trivial: r.[h] = eps(r)[h]
    for i in range(pe.sub.dim):
        for c in range(Q.dim):
            assert Q.left.action[i][c] == {c: ONE}
    # the right action permutes cosets: its character counts fixed cosets
    chi = Q.right.character()
    assert chi[0] == qdim and all(x >= ZERO for x in chi)


def test_non_bijective_antipode_is_reported():
    H = kG("C2")
    K = HopfStructure.build(H.alg, list(H.comult), list(H.counit), [{0: 1}, {0: 1}])
    assert K.antipode_inverse is None
    with pytest.raises(HopfError):
        K.Sbar({0: ONE})
    assert not check_hopf_axioms(K).ok
