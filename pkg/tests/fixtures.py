"""Shared objects for the test-suite: well-formed structures and one
deliberately corrupted fixture per axiom family."""
from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from functools import lru_cache

from hopfdepth.algebra import (AlgebraError, AxiomReport, AxiomResult, Bimodule, Module,
                               StructureAlgebra, SubalgebraEmbedding, check_algebra_axioms,
                               check_bimodule_axioms, check_module_axioms)
from hopfdepth.groups import FiniteGroup, GroupError, builtin_group
from hopfdepth.hopf import (HopfStructure, check_hopf_axioms, cop_hopf,
                            coregular_actions, dual_hopf, group_hopf, induced_hopf_embedding,
                            op_hopf, opcop_hopf, sweedler, tensor_hopf)
from hopfdepth.linalg import ONE
from hopfdepth.products import (Factorization, MatchedPair, PairedBialgebras, canonical_pairing,
                                check_factorization, check_matched_pair, check_module_algebra,
                                check_pairing, drinfeld_double, group_double_fast,
                                heisenberg_double, paired_dcp, trivial_pairing)


def kG(name: str) -> HopfStructure:
    return group_hopf(builtin_group(name))


def _group_report(make) -> AxiomReport:
    try:
        G = make()
    except GroupError as exc:
        return AxiomReport("group", (AxiomResult("group table", False, str(exc)),))
    return AxiomReport(G.name, (AxiomResult("group table", True),))


def _raised(subject: str, name: str, fn) -> AxiomReport:
    """Turn a validating constructor into a report."""
    try:
        fn()
    except (AlgebraError, GroupError) as exc:
        return AxiomReport(subject, (AxiomResult(name, False, str(exc)),))
    return AxiomReport(subject, (AxiomResult(name, True),))


@lru_cache(maxsize=None)
def well_formed_objects() -> tuple:
    out = []
    for g in ("C2", "C3", "C2xC2", "S3", "D4", "Q8", "S4"):
        out.append((f"group {g}", _group_report(lambda g=g: builtin_group(g))))
    S3 = kG("S3")
    H4 = sweedler()
    hopfs = {
        "kS3": S3, "(kS3)*": dual_hopf(S3), "kS3^op": op_hopf(S3), "kS3^cop": cop_hopf(S3),
        "kS3^opcop": opcop_hopf(S3), "kQ8": kG("Q8"), "H4": H4, "(H4)*": dual_hopf(H4),
        "H4^cop": cop_hopf(H4), "kS3 (x) kC2": tensor_hopf(S3, kG("C2")),
    }
    for name, H in hopfs.items():
        out.append((name, check_hopf_axioms(H)))
    doubles = {"D(kS3)": drinfeld_double(S3), "D(H4)": drinfeld_double(H4),
               "kS3^cop >< kS3": paired_dcp(trivial_pairing(S3, S3)),
               "paired D(kS3)": paired_dcp(canonical_pairing(S3))}
    for name, D in doubles.items():
        out.append((name, check_hopf_axioms(D.hopf)))
        out.append((f"{name} matched pair", check_matched_pair(D.pair)))
        out.append((f"{name} factorization", check_factorization(D.factorization)))
    out.append(("D(kQ8) fast", check_hopf_axioms(group_double_fast(builtin_group("Q8")))))
    heis = heisenberg_double(kG("C3"))
    out.append(("Heis(kC3) module algebra",
                check_module_algebra(heis.hopf, heis.module_algebra, heis.action)))
    out.append(("Heis(kC3) factorization", check_factorization(heis.factorization)))
    out.append(("Heis(kC3) algebra", check_algebra_axioms(heis.algebra)))
    out.append(("canonical pairing kS3", check_pairing(canonical_pairing(S3))))
    out.append(("trivial pairing kS3", check_pairing(trivial_pairing(S3, S3))))
    out.append(("regular bimodule kS3", check_bimodule_axioms(Bimodule.regular(S3.alg))))
    return tuple(out)


# ---------------------------------------------------------------- corrupted fixtures

def _with_mult(A: StructureAlgebra, i: int, j: int, value: dict) -> StructureAlgebra:
    mult = [list(r) for r in A.mult]
    mult[i][j] = value
    return StructureAlgebra(A.dim, tuple(tuple(r) for r in mult), A.unit, A.labels, A.name + "~")


def bad_latin_square():
    # a loop of order 5 that is not associative
    t = [[0, 1, 2, 3, 4],
         [1, 0, 3, 4, 2],
         [2, 4, 0, 1, 3],
         [3, 2, 4, 0, 1],
         [4, 3, 1, 2, 0]]
    return FiniteGroup("L5", ("e", "a", "b", "c", "d"), tuple(map(tuple, t)))


def kc2_coalgebra(delta_g: dict, eps_g) -> HopfStructure:
    """The algebra kC2 with a hand-written coalgebra structure; S = id."""
    A = kG("C2").alg
    return HopfStructure.build(A, [{(0, 0): 1}, delta_g], [1, eps_g], [{0: 1}, {1: 1}], "kC2~")


def bad_coassociative() -> HopfStructure:
    return kc2_coalgebra({(1, 1): 1, (1, 0): 1}, 1)


def bad_counit() -> HopfStructure:
    H = kG("C2")
    return HopfStructure.build(H.alg, list(H.comult), [1, 0], list(H.antipode), "kC2~")


def bad_bialgebra() -> HopfStructure:
    # g primitive is a coalgebra but not compatible with g^2 = 1
    return kc2_coalgebra({(1, 0): 1, (0, 1): 1}, 0)


def bad_antipode() -> HopfStructure:
    H = kG("S3")
    return HopfStructure.build(H.alg, list(H.comult), list(H.counit),
                               [{i: 1} for i in range(H.dim)], "kS3~")


def bad_hopf_json_coassociativity() -> HopfStructure:
    """What tests/data/bad_hopf.json encodes."""
    return bad_coassociative()


@lru_cache(maxsize=None)
def corrupted_fixtures() -> tuple:
    """(family, report, axiom expected to fail)."""
    S3 = kG("S3")
    out = []
    out.append(("group table", _group_report(bad_latin_square), "group table"))

    A = S3.alg
    out.append(("associativity", check_algebra_axioms(_with_mult(A, 1, 2, A.mult[2][1])),
                "associativity"))
    out.append(("unit", check_algebra_axioms(replace(A, unit={1: ONE})), "unit"))
    out.append(("coassociativity", check_hopf_axioms(bad_coassociative()), "coassociativity"))
    out.append(("counit", check_hopf_axioms(bad_counit()), "counit"))
    out.append(("bialgebra", check_hopf_axioms(bad_bialgebra()),
                "comultiplication is multiplicative"))
    out.append(("antipode", check_hopf_axioms(bad_antipode()), "antipode"))

    C2 = kG("C2").alg
    two_g = ({0: 2 * ONE}, {1: 2 * ONE})
    reg = Bimodule.regular(C2)
    bad_bi = Bimodule(C2, C2, 2, (reg.left_action[0], two_g), reg.right_action)
    out.append(("bimodule", check_bimodule_axioms(bad_bi), None))
    out.append(("module", check_module_axioms(Module(C2, 2, (reg.left_action[0], two_g))), None))

    H = kG("C3")
    co = coregular_actions(H)
    Hd = dual_hopf(H)
    scaled = tuple(tuple({k: 2 * c for k, c in v.items()} if h else v for v in row)
                   for h, row in enumerate(co.hit))
    out.append(("module algebra", check_module_algebra(H, Hd.alg, scaled), None))

    F = heisenberg_double(H).factorization
    psi = [list(r) for r in F.psi]
    psi[1][1] = {k: 3 * c for k, c in psi[1][1].items()}
    out.append(("factorization octagon",
                check_factorization(Factorization(F.A, F.B, tuple(map(tuple, psi)), "bad")), None))

    D = drinfeld_double(S3)
    P = D.pair
    # (trivial <|, coadjoint |>) is the valid smash product, so scale |> instead
    rhd = tuple(tuple({k: 2 * c for k, c in v.items()} if h == 1 else v for v in row)
                for h, row in enumerate(P.rhd))
    out.append(("matched pair", check_matched_pair(MatchedPair(P.first, P.second, rhd, P.lhd)),
                None))

    cp = canonical_pairing(S3)
    pm = [list(r) for r in cp.pairing]
    pm[1][2] = ONE
    out.append(("pairing", check_pairing(PairedBialgebras(cp.A, cp.B, tuple(map(tuple, pm)))), None))

    out.append(("subalgebra embedding",
                _raised("kC2 -> kS3", "embedding",
                        lambda: SubalgebraEmbedding(C2, A, ({0: ONE}, {3: ONE}))), "embedding"))
    out.append(("Hopf subalgebra",
                _raised("span(e, (12) + (23)) in kS3", "Hopf subalgebra",
                        lambda: induced_hopf_embedding(S3, [{0: 1}, {1: 1, 2: 1}])),
                "Hopf subalgebra"))
    return tuple(out)


# ---------------------------------------------------------------- kC2 bimodules for the oracle

def kc2_bimodule(L, R) -> Bimodule:
    """Bimodule over kC2 from dense sympy matrices for gL and gR (columns = images)."""
    from hopfdepth.linalg import Matrix

    A = kG("C2").alg
    n = L.shape[0]

    def cols(M):
        return tuple(dict(r) for r in Matrix.from_rows([[Fraction(int(M[i, j].p), int(M[i, j].q)) for i in range(n)]
                                                        for j in range(n)], n).sparse_rows())

    ident = tuple({m: ONE} for m in range(n))
    return Bimodule(A, A, n, (ident, cols(L)), (ident, cols(R)), "M")


@lru_cache(maxsize=None)
def kc2_cases() -> tuple:
    """(bimodule, oracle multiplicities) for every multiplicity vector of total
    dimension <= 4 and a seeded sample up to dimension 8."""
    import random
    from itertools import product

    from oracles import kc2_fixture, kc2_multiplicities

    rng = random.Random(20240601)
    vecs = [m for m in product(range(5), repeat=4) if 1 <= sum(m) <= 4]
    big = [m for m in product(range(9), repeat=4) if 5 <= sum(m) <= 8]
    vecs += rng.sample(big, 40)
    out = []
    for m in vecs:
        L, R = kc2_fixture(m, rng)
        mult = kc2_multiplicities(L, R)
        assert mult == m
        out.append((kc2_bimodule(L, R), mult))
    return tuple(out)
