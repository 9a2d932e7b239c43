import pytest
from hypothesis import given, strategies as st

from hopfdepth.algebra import NotSemisimple
from hopfdepth.catalog import CatalogError, problem
from hopfdepth.depth import (DepthProblem, action_trivial, centralizer, dcp_centralizer, is_normal,
                             min_depth, module_depth, normal_core, quotient_character, tensor_character,
                             verify_theorems)
from hopfdepth.hopf import dual_hopf, induced_hopf_embedding, quotient_module
from hopfdepth.linalg import ONE
from hopfdepth.products import drinfeld_double, swapped

from fixtures import kG

# (ambient, sub) -> (min_odd, min_even, min_depth)
DEPTHS = {
    ("double:C2", "group-side"): (1, 2, 1),
    ("double:C3", "dual-side"): (1, 2, 1),
    ("double:C2xC2", "group-side"): (1, 2, 1),
    ("double:S3", "group-side"): (3, 4, 3),
    ("double:S3", "dual-side"): (3, 2, 2),
    ("double:D4", "group-side"): (3, 4, 3),
    ("double:Q8", "dual-side"): (3, 2, 2),
    ("heisenberg:C2", "group-side"): (3, 2, 2),
    ("heisenberg:S3", "group-side"): (3, 2, 2),
    ("tensor:S3", "second"): (1, 2, 1),
    ("tensor:S3", "first"): (1, 2, 1),
    ("paired:S3", "second"): (3, 4, 3),
    ("paired:S3", "first"): (3, 2, 2),
    ("group:S3", "subgroup:(12)"): (3, 4, 3),
    ("group:S3", "subgroup:(123)"): (3, 2, 2),
    ("group:S4", "subgroup:(12),(123)"): (5, 6, 5),
    ("group:Q8", "subgroup:i"): (3, 2, 2),
    ("group:C4", "subgroup:g2"): (1, 2, 1),
    ("group:S3", "identity"): (1, 2, 1),
}


@pytest.mark.parametrize("amb, sub", sorted(DEPTHS))
def test_depth_table(amb, sub):
    rep = min_depth(problem(amb, sub).emb, 4)
    assert (rep.min_odd, rep.min_even, rep.min_depth) == DEPTHS[(amb, sub)]
    assert rep.monotone
    assert rep.lower_bounds == {}


def test_trace_and_explicit_agree_on_small_case():
    emb = problem("double:S3", "group-side").emb
    a = min_depth(emb, 2, method="trace")
    b = min_depth(emb, 2, method="explicit")
    assert a.method == "trace" and b.method == "explicit"
    assert (a.min_odd, a.min_even) == (b.min_odd, b.min_even)
    assert [r.odd for r in a.table] == [r.odd for r in b.table]


def test_unsettled_depth_reports_lower_bounds():
    rep = min_depth(problem("group:S4", "subgroup:(12),(123)").emb, 1)
    assert rep.min_odd is None and rep.min_depth is None
    assert rep.min_even in (2, None)
    assert rep.lower_bounds["min_odd"] == 5


def test_report_json_shape():
    js = min_depth(problem("group:S3", "subgroup:(12)").emb, 2).to_json()
    assert set(js) == {"extension", "n_max", "method", "table", "min_odd", "min_even",
                       "min_depth", "lower_bounds", "monotone", "theorems"}
    assert set(js["table"][0]) == {"n", "odd", "even_BA", "even_AB", "dim", "support_BB"}
    assert js["table"][0]["even_BA"] is None


def test_unknown_method():
    with pytest.raises(ValueError):
        min_depth(problem("group:S3", "identity").emb, 1, method="magic")


def test_not_semisimple_double():
    with pytest.raises(NotSemisimple):
        min_depth(problem("double:sweedler", "group-side").emb, 2)


def test_catalog_errors():
    for amb, sub in [("double:S3", "subgroup:(12)"), ("group:S3", "subgroup:(1234)"),
                     ("wat:S3", "identity"), ("group", "identity")]:
        with pytest.raises(CatalogError):
            problem(amb, sub)


# ---------------------------------------------------------------- module depth

@pytest.mark.parametrize("label, depth", [("trivial", 0), ("sign", 1), ("regular", 1),
                                          ("standard", 2)])
def test_module_depth_over_kS3(label, depth):
    H = kG("S3")
    # classes of S3: e, transpositions, 3-cycles
    conj = [0 if lab == "e" else (1 if len(lab) == 4 else 2) for lab in H.labels]
    values = {"trivial": (1, 1, 1), "sign": (1, -1, 1), "regular": (6, 0, 0), "standard": (2, 0, -1)}
    chi = tuple(ONE * values[label][conj[i]] for i in range(6))
    tr = module_depth(H, chi, module_coalgebra=True)
    assert tr.depth == depth


@given(st.sampled_from(["S3", "D4"]), st.data())
def test_tensor_character_of_group_algebra_is_pointwise(g, data):
    H = kG(g)
    a = [data.draw(st.integers(-3, 3)) * ONE for _ in range(H.dim)]
    b = [data.draw(st.integers(-3, 3)) * ONE for _ in range(H.dim)]
    assert tensor_character(H, a, b) == tuple(x * y for x, y in zip(a, b))


@pytest.mark.parametrize("amb, sub", [("group:S3", "subgroup:(12)"), ("group:S4", "subgroup:(12),(123)"),
                                      ("double:S3", "group-side"), ("double:S3", "dual-side")])
def test_quotient_character_matches_quotient_module(amb, sub):
    p = problem(amb, sub)
    chi, qdim = quotient_character(p.emb, p.pair.sub)
    Q = quotient_module(p.pair)
    assert qdim == Q.dim
    assert chi == tuple(Q.right.character())


# ---------------------------------------------------------------- normality, actions, centralizers

@pytest.mark.parametrize("amb, sub, normal", [("group:S3", "subgroup:(12)", False),
                                              ("group:S3", "subgroup:(123)", True),
                                              ("double:S3", "group-side", False),
                                              ("double:S3", "dual-side", True),
                                              ("tensor:S3", "second", True)])
def test_normality(amb, sub, normal):
    nr = is_normal(problem(amb, sub).pair)
    assert nr.normal is normal
    assert (nr.witness is None) is normal


def test_action_triviality():
    D = drinfeld_double(kG("S3"))
    assert action_trivial(D.pair, "lhd") and not action_trivial(D.pair, "rhd")
    T = problem("tensor:S3", "first").dcp
    assert action_trivial(T.pair, "lhd") and action_trivial(T.pair, "rhd")
    with pytest.raises(ValueError):
        action_trivial(D.pair, "sideways")


def test_centralizer_commutes():
    emb = problem("double:S3", "group-side").emb
    C = centralizer(emb)
    A = emb.amb
    for x in C.sparse_basis():
        for b in emb.images:
            assert A.mul(x, b) == A.mul(b, x)


@pytest.mark.parametrize("g, dim, core_inside", [("C2", 4, True), ("S3", 18, True),
                                                 ("D4", 40, False), ("Q8", 40, False)])
def test_double_centralizer_counts_commuting_pairs(g, dim, core_inside):
    # C_{D(kG)}(kG^*) is spanned by p_x >< h with hx = xh
    D = drinfeld_double(kG(g))
    rep = dcp_centralizer(D)
    assert rep.centralizer.dim == dim
    assert rep.lhd_trivial
    # for D4 and Q8 the conjugation permutations are linearly dependent, so the
    # trivially acting subspace is larger than kZ(G) and escapes the centralizer
    assert (rep.core_form <= rep.centralizer) is core_inside
    assert (normal_core(D.pair).dim == 2) is (g == "C2")


# ---------------------------------------------------------------- theorem checks

def _statuses(p: DepthProblem) -> dict:
    return {t.name: t.status for t in verify_theorems(p)}


def test_theorems_hold_for_nonabelian_doubles():
    for g in ("S3", "Q8"):
        st_ = _statuses(problem(f"double:{g}", "group-side"))
        assert set(st_.values()) == {"PASS"}, st_


def test_abelian_double_has_depth_one():
    st_ = _statuses(problem("double:C3", "group-side"))
    assert st_["d(H, D(H)) = 3 (minimum odd depth)"] == "FAIL"
    assert st_["normal iff depth <= 2"] == "PASS"


def test_heisenberg_checks():
    st_ = _statuses(problem("heisenberg:C3", "group-side"))
    assert st_["Heisenberg double: d(H, H*#H) = d(H*, H-mod) + 1"] == "PASS"
    assert st_["Heisenberg double: d(H, H*#H) = 3 (minimum odd depth)"] == "PASS"
    assert st_["Heisenberg double: d(H, H*#H) = 3 (combined minimum depth)"] == "FAIL"
    assert st_["2 d(Q) + 1 <= d <= 2 d(Q) + 2"] == "FAIL"


def test_heisenberg_quotient_is_regular():
    p = problem("heisenberg:S3", "group-side")
    chi, qdim = quotient_character(p.emb, p.sub_hopf)
    assert qdim == 6 and chi == tuple([6 * ONE] + [0] * 5)


def test_swapped_double_breaks_leg_formula():
    D = swapped(drinfeld_double(kG("S3")))
    pe = D.second_embedding
    p = DepthProblem("swapped", pe.emb, pair=pe, dcp=D, side="second",
                     factorization=D.factorization, sub_hopf=D.second)
    st_ = _statuses(p)
    assert st_["d_odd(H, K >< H) = 2 d(K, H-mod) + 1"] == "FAIL"
    assert st_["S^(x)n = A^(x)n (x) B as B-B bimodules (n <= 3)"] == "PASS"
    assert st_["normal iff depth <= 2"] == "PASS"


def test_identity_subalgebra_depth_one():
    H = dual_hopf(kG("S3"))
    pe = induced_hopf_embedding(H, [{i: 1} for i in range(H.dim)])
    rep = min_depth(pe.emb, 2)
    assert rep.min_depth == 1
