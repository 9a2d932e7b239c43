import pytest
from hypothesis import given, strategies as st

from hopfdepth.algebra import AlgebraError, Bimodule, center, tensor_over_sub
from hopfdepth.groups import builtin_group, generated_subgroup
from hopfdepth.hopf import (check_hopf_axioms, dual_hopf, group_hopf, induced_hopf_embedding,
                            sweedler, tensor_hopf)
from hopfdepth.linalg import ONE, axpy
from hopfdepth.products import (MatchedPair, MatchedPairViolation, ModuleAlgebraViolation,
                                PairedBialgebras, PairingViolation, canonical_pairing,
                                check_factorization, double_cross_product, drinfeld_double,
                                group_double_fast, heisenberg_double, matched_pair_from_factorization,
                                paired_dcp, smash_product, swapped, trivial_pairing)

from fixtures import kG
from oracles import brute_double_of_group

GROUPS = ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"]


@pytest.mark.parametrize("g", GROUPS)
def test_double_matches_fast_formula(g):
    G = builtin_group(g)
    D = drinfeld_double(group_hopf(G))
    assert D.hopf.same_structure(group_double_fast(G))


@pytest.mark.parametrize("g", ["S3", "Q8"])
def test_fast_formula_matches_brute_oracle(g):
    G = builtin_group(g)
    H = group_double_fast(G)
    mult, comult = brute_double_of_group(G.names, G.table)
    n = H.dim
    for i in range(n):
        assert H.comult[i] == comult[i]
        for j in range(n):
            assert H.alg.mult[i][j] == mult.get((i, j), {})


DOUBLES = {
    "D(kS3)": lambda: drinfeld_double(kG("S3")),
    "D(H4)": lambda: drinfeld_double(sweedler()),
    "D((kS3)*)": lambda: drinfeld_double(dual_hopf(kG("S3"))),
    "kS3^cop >< kS3": lambda: paired_dcp(trivial_pairing(kG("S3"), kG("S3"))),
    "H4^cop >< H4": lambda: paired_dcp(trivial_pairing(sweedler(), sweedler())),
    "paired kS3": lambda: paired_dcp(canonical_pairing(kG("S3"))),
    "paired H4": lambda: paired_dcp(canonical_pairing(sweedler())),
    "swapped D(kS3)": lambda: swapped(drinfeld_double(kG("S3"))),
}


@pytest.mark.parametrize("name", sorted(DOUBLES))
def test_double_cross_products_are_hopf_and_factorizations(name):
    D = DOUBLES[name]()
    assert check_hopf_axioms(D.hopf).ok
    assert check_factorization(D.factorization).ok
    # the induced psi is the matched pair's psi
    assert D.factorization.psi == D.pair.psi


@pytest.mark.parametrize("name", sorted(DOUBLES))
def test_round_trip_recovers_actions(name):
    D = DOUBLES[name]()
    P = matched_pair_from_factorization(D.hopf, D.first_embedding, D.second_embedding)
    assert P.rhd == D.pair.rhd
    assert P.lhd == D.pair.lhd


@pytest.mark.parametrize("H", [kG("S3"), sweedler()], ids=["kS3", "H4"])
def test_canonical_pairing_gives_drinfeld_double(H):
    assert paired_dcp(canonical_pairing(H)).hopf.same_structure(drinfeld_double(H).hopf)


def test_trivial_pairing_actions_trivial():
    D = paired_dcp(trivial_pairing(kG("S3"), kG("S3")))
    K, H = D.first, D.second
    for h in range(H.dim):
        for k in range(K.dim):
            assert D.pair.rhd[h][k] == ({k: H.counit[h]} if H.counit[h] else {})
            assert D.pair.lhd[h][k] == ({h: K.counit[k]} if K.counit[k] else {})


def test_tensor_factors_give_trivial_actions():
    H = tensor_hopf(kG("C2"), kG("C2"))
    first = induced_hopf_embedding(H, [{0: 1}, {2: 1}])     # g (x) 1
    second = induced_hopf_embedding(H, [{0: 1}, {1: 1}])    # 1 (x) g
    P = matched_pair_from_factorization(H, first, second)
    assert all(P.rhd[h][k] == {k: ONE} for h in range(2) for k in range(2))
    assert all(P.lhd[h][k] == {h: ONE} for h in range(2) for k in range(2))


def test_non_bijective_multiplication_rejected():
    G = builtin_group("C4")
    H = group_hopf(G)
    sub = [{e: 1} for e in generated_subgroup(G, [G.index("g2")])]
    A = induced_hopf_embedding(H, sub)
    with pytest.raises(AlgebraError, match="not bijective"):
        matched_pair_from_factorization(H, A, A)


def test_heisenberg_double_is_simple():
    for g in ("C2", "C3", "S3"):
        S = heisenberg_double(kG(g))
        assert S.algebra.dim == kG(g).dim ** 2
        assert center(S.algebra).dim == 1
        assert check_factorization(S.factorization).ok


def test_invalid_inputs_raise():
    H = kG("C3")
    Hd = dual_hopf(H)
    scaled = [[{k: 2 * ONE} for k in range(3)] for _ in range(3)]
    with pytest.raises(ModuleAlgebraViolation):
        smash_product(H, Hd.alg, scaled)
    D = drinfeld_double(kG("S3"))
    bad = tuple(tuple({} for _ in range(D.first.dim)) for _ in range(D.second.dim))
    with pytest.raises(MatchedPairViolation):
        double_cross_product(MatchedPair(D.first, D.second, bad, D.pair.lhd))
    cp = canonical_pairing(kG("S3"))
    doubled = tuple(tuple(2 * x for x in row) for row in cp.pairing)
    with pytest.raises(PairingViolation):
        paired_dcp(PairedBialgebras(cp.A, cp.B, doubled))


@given(st.integers(1, 2), st.data())
def test_psi_linearity(n, data):
    """The B-action on A^(x)n (x) B transported through psi agrees with left
    multiplication on S (x)_B ... (x)_B S (checked on random basis tensors, n <= 2)."""
    D = drinfeld_double(kG("S3"))
    F = D.factorization
    A, B, S = F.A, F.B, F.algebra
    m = B.dim
    eB = F.embed_B
    SS = Bimodule.regular(S)
    if n == 1:
        T = None
        target = SS
    else:
        T = tensor_over_sub(SS.restrict(right=eB), SS.restrict(left=eB))
        target = T.bimodule

    def phi(t):
        """a_1 (x) ... (x) a_n (x) b  ->  (a_1 # 1) (x) ... (x) (a_n # b)."""
        out: dict = {}
        for key, c in t.items():
            *as_, b = key
            if n == 1:
                axpy(out, c, {as_[0] * m + b: ONE})
            else:
                axpy(out, c, T.project({as_[0] * m: ONE}, {as_[1] * m + b: ONE}))
        return out

    def psi_act(b, t):
        """Move b in from the left, one tensor leg at a time, using psi."""
        out: dict = {}
        for key, c in t.items():
            *as_, bb = key
            states = {((), b): c}
            for a in as_:
                nxt: dict = {}
                for (done, bcur), s in states.items():
                    for (a2, b2), u in F.psi[bcur][a].items():
                        k = (done + (a2,), b2)
                        nxt[k] = nxt.get(k, 0) + s * u
                states = nxt
            for (done, bcur), s in states.items():
                for q, v in B.mult[bcur][bb].items():
                    axpy(out, s * v, {done + (q,): ONE})
        return out

    legs = tuple(data.draw(st.integers(0, A.dim - 1)) for _ in range(n))
    b0 = data.draw(st.integers(0, m - 1))
    b = data.draw(st.integers(0, m - 1))
    t = {legs + (b0,): ONE}
    lhs = phi(psi_act(b, t))
    rhs = target.act_left(eB.images[b], phi(t))
    assert lhs == rhs
