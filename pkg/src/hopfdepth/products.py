"""Factorization algebras, smash products and double cross products.

Two-leg conventions
-------------------

A factorization algebra S = A (x)_psi B uses psi: B (x) A -> A (x) B and the
product (a (x) b)(c (x) d) = a psi(b (x) c) d.  The basis of S is a_i (x) b_j
at index ``i*dim(B) + j``.

A matched pair consists of Hopf algebras ``first`` and ``second`` with

* ``rhd``: second (x) first -> first (a left action), and
* ``lhd``: second (x) first -> second (a right action).

The double cross product first |><| second has

    (k |><| h)(l |><| g) = k (h_1 |> l_1) |><| (h_2 <| l_2) g,

the tensor product coalgebra and antipode (1 |><| S h)(S k |><| 1).  In
other words it is the factorization algebra of ``first`` and ``second``
with psi(h (x) k) = (h_1 |> k_1) (x) (h_2 <| k_2).

The Drinfeld double D(H) takes first = (H*)^cop, second = H, with the
coadjoint actions as |> and <|.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from . import hopf as hp
from .algebra import (AlgebraError, AxiomReport, StructureAlgebra, SubalgebraEmbedding,
                      first_failure, fmt_vec)
from .groups import FiniteGroup
from .hopf import (HopfEmbedding, HopfError, HopfStructure, check_hopf_axioms, coadjoint_actions,
                   coregular_actions, cop_hopf, dual_hopf, group_hopf, t2_add)
from .linalg import ONE, ZERO, LinAlgError, Matrix, axpy, inverse, rank_sparse, rat


class OctagonViolation(AlgebraError):
    def __init__(self, report: AxiomReport):
        self.report = report
        f = report.failures[0]
        super().__init__(f"{f.name}: {f.witness}")


class ModuleAlgebraViolation(OctagonViolation):
    pass


class MatchedPairViolation(OctagonViolation):
    pass


class PairingViolation(OctagonViolation):
    pass


def _fmt2(t, L1, L2):
    return hp.fmt_t2(t, L1, L2)


# ---------------------------------------------------------------- factorization algebras

@dataclass(frozen=True, eq=False)
class Factorization:
    """S = A (x)_psi B.  ``psi[b][a]`` is psi(b_b (x) a_a) as ``{(i, j): c}`` in A (x) B."""

    A: StructureAlgebra
    B: StructureAlgebra
    psi: tuple
    name: str = ""
    sep: str = "#"

    def psi_apply(self, b: Mapping, a: Mapping) -> dict:
        out: dict = {}
        for j, s in b.items():
            row = self.psi[j]
            for i, t in a.items():
                t2_add(out, s * t, row[i])
        return out

    @cached_property
    def algebra(self) -> StructureAlgebra:
        A, B = self.A, self.B
        m = B.dim

        def fn(x, y):
            i, j = divmod(x, m)
            k, l = divmod(y, m)
            out = {}
            for (p, q), c in self.psi[j][k].items():
                for r, s in A.mult[i][p].items():
                    for t, u in B.mult[q][l].items():
                        key = r * m + t
                        out[key] = out.get(key, ZERO) + c * s * u
            return out

        unit = {p * m + q: s * t for p, s in A.unit.items() for q, t in B.unit.items()}
        labels = [f"{a}{self.sep}{b}" for a in A.labels for b in B.labels]
        return StructureAlgebra.from_function(A.dim * m, fn, unit, labels, self.name)

    @cached_property
    def embed_A(self) -> SubalgebraEmbedding:
        m = self.B.dim
        imgs = tuple({i * m + q: t for q, t in self.B.unit.items()} for i in range(self.A.dim))
        return SubalgebraEmbedding(self.A, self.algebra, imgs)

    @cached_property
    def embed_B(self) -> SubalgebraEmbedding:
        m = self.B.dim
        imgs = tuple({p * m + j: s for p, s in self.A.unit.items()} for j in range(self.B.dim))
        return SubalgebraEmbedding(self.B, self.algebra, imgs)


def check_factorization(F: Factorization) -> AxiomReport:
    A, B = F.A, F.B
    LA, LB = A.labels, B.labels

    def units():
        for i in range(A.dim):
            got = F.psi_apply(B.unit, {i: ONE})
            want = {(i, q): t for q, t in B.unit.items()}
            if got != want:
                yield f"psi(1 (x) {LA[i]}) = {_fmt2(got, LA, LB)}"
        for j in range(B.dim):
            got = F.psi_apply({j: ONE}, A.unit)
            want = {(p, j): s for p, s in A.unit.items()}
            if got != want:
                yield f"psi({LB[j]} (x) 1) = {_fmt2(got, LA, LB)}"
        yield None

    def octagon():
        # (a d_al)_be (x) b^be c^al  ==  a_be d_al (x) (b^be c)^al
        for a in range(A.dim):
            for b in range(B.dim):
                pba = F.psi[b][a]
                for c in range(B.dim):
                    for d in range(A.dim):
                        lhs: dict = {}
                        for (i, j), s in F.psi[c][d].items():
                            Y = F.psi_apply({b: ONE}, A.mult[a][i])
                            for (p, q), t in Y.items():
                                for r, u in B.mult[q][j].items():
                                    t2_add(lhs, s * t * u, {(p, r): ONE})
                        rhs: dict = {}
                        for (i, j), s in pba.items():
                            Z = F.psi_apply(B.mult[j][c], {d: ONE})
                            for (p, q), t in Z.items():
                                for r, u in A.mult[i][p].items():
                                    t2_add(rhs, s * t * u, {(r, q): ONE})
                        if lhs != rhs:
                            yield (f"octagon fails at a={LA[a]}, b={LB[b]}, c={LB[c]}, d={LA[d]}: "
                                   f"{_fmt2(lhs, LA, LB)} != {_fmt2(rhs, LA, LB)}")
        yield None

    return AxiomReport(F.name or "factorization",
                       (first_failure("psi unit conditions", units()),
                        first_failure("octagon", octagon())))


def factorization_algebra(A: StructureAlgebra, B: StructureAlgebra, psi: Sequence,
                          name: str = "", check: bool = True) -> Factorization:
    psi = tuple(tuple({(int(i), int(j)): rat(c) for (i, j), c in t.items() if c} for t in row)
                for row in psi)
    if len(psi) != B.dim or any(len(r) != A.dim for r in psi):
        raise AlgebraError("psi must have shape dim(B) x dim(A)")
    F = Factorization(A, B, psi, name or f"{A.name}#{B.name}")
    if check:
        rep = check_factorization(F)
        if not rep.ok:
            raise OctagonViolation(rep)
    return F


# ---------------------------------------------------------------- smash products

def check_module_algebra(H: HopfStructure, A: StructureAlgebra, action: Sequence) -> AxiomReport:
    """``action[h][a]`` is h . a in A."""
    L, LA = H.labels, A.labels

    def act(h: Mapping, a: Mapping) -> dict:
        out: dict = {}
        for i, s in h.items():
            for k, t in a.items():
                axpy(out, s * t, action[i][k])
        return out

    def module():
        for i in range(H.dim):
            for j in range(H.dim):
                for k in range(A.dim):
                    lhs = act(H.alg.mult[i][j], {k: ONE})
                    rhs = act({i: ONE}, act({j: ONE}, {k: ONE}))
                    if lhs != rhs:
                        yield f"({L[i]}{L[j]}).{LA[k]} != {L[i]}.({L[j]}.{LA[k]})"
        for k in range(A.dim):
            if act(H.alg.unit, {k: ONE}) != {k: ONE}:
                yield f"1.{LA[k]} != {LA[k]}"
        yield None

    def multiplicative():
        for i in range(H.dim):
            for k in range(A.dim):
                for l in range(A.dim):
                    lhs = act({i: ONE}, A.mult[k][l])
                    rhs: dict = {}
                    for (p, q), c in H.comult[i].items():
                        axpy(rhs, c, A.mul(action[p][k], action[q][l]))
                    if lhs != rhs:
                        yield f"{L[i]}.({LA[k]}{LA[l]}) = {fmt_vec(lhs, LA)} != (h1.a)(h2.b) = {fmt_vec(rhs, LA)}"
            got = act({i: ONE}, A.unit)
            want = {k: H.counit[i] * s for k, s in A.unit.items() if H.counit[i]}
            if got != want:
                yield f"{L[i]}.1 != eps({L[i]})1"
        yield None

    return AxiomReport(f"{H.name}-module algebra {A.name}",
                       (first_failure("module axioms", module()),
                        first_failure("h.(ab) = (h1.a)(h2.b) and h.1 = eps(h)1", multiplicative())))


@dataclass(frozen=True, eq=False)
class SmashProduct:
    """A # H as the factorization algebra A (x)_psi H, psi(h (x) a) = h_1.a (x) h_2."""

    hopf: HopfStructure
    module_algebra: StructureAlgebra
    action: tuple
    factorization: Factorization

    @property
    def algebra(self) -> StructureAlgebra:
        return self.factorization.algebra

    @property
    def embed_hopf(self) -> SubalgebraEmbedding:
        return self.factorization.embed_B


def smash_product(H: HopfStructure, A: StructureAlgebra, action: Sequence, name: str = "",
                  check: bool = True) -> SmashProduct:
    action = tuple(tuple({int(k): rat(c) for k, c in v.items() if c} for v in row) for row in action)
    if check:
        rep = check_module_algebra(H, A, action)
        if not rep.ok:
            raise ModuleAlgebraViolation(rep)
    psi = []
    for h in range(H.dim):
        row = []
        for a in range(A.dim):
            t: dict = {}
            for (p, q), c in H.comult[h].items():
                for k, s in action[p][a].items():
                    t2_add(t, c * s, {(k, q): ONE})
            row.append(t)
        psi.append(tuple(row))
    F = factorization_algebra(A, H.alg, psi, name or f"{A.name}#{H.name}", check=check)
    return SmashProduct(H, A, action, F)


def heisenberg_double(H: HopfStructure, check: bool = True) -> SmashProduct:
    """H* # H with H acting on H* by h -> f."""
    Hd = dual_hopf(H)
    co = coregular_actions(H)
    return smash_product(H, Hd.alg, co.hit, f"Heis({H.name})", check=check)


# ---------------------------------------------------------------- matched pairs

@dataclass(frozen=True, eq=False)
class MatchedPair:
    first: HopfStructure
    second: HopfStructure
    rhd: tuple   # rhd[h][k] = h |> k in first
    lhd: tuple   # lhd[h][k] = h <| k in second

    def act_rhd(self, h: Mapping, k: Mapping) -> dict:
        out: dict = {}
        for i, s in h.items():
            for j, t in k.items():
                axpy(out, s * t, self.rhd[i][j])
        return out

    def act_lhd(self, h: Mapping, k: Mapping) -> dict:
        out: dict = {}
        for i, s in h.items():
            for j, t in k.items():
                axpy(out, s * t, self.lhd[i][j])
        return out

    @cached_property
    def psi(self) -> tuple:
        """psi(h (x) k) = (h_1 |> k_1) (x) (h_2 <| k_2) in first (x) second."""
        H, K = self.second, self.first
        rows = []
        for h in range(H.dim):
            row = []
            for k in range(K.dim):
                t: dict = {}
                for (h1, h2), s in H.comult[h].items():
                    for (k1, k2), u in K.comult[k].items():
                        x = self.rhd[h1][k1]
                        y = self.lhd[h2][k2]
                        for p, a in x.items():
                            for q, b in y.items():
                                t2_add(t, s * u * a * b, {(p, q): ONE})
                row.append(t)
            rows.append(tuple(row))
        return tuple(rows)


def check_matched_pair(P: MatchedPair) -> AxiomReport:
    K, H = P.first, P.second
    LK, LH = K.labels, H.labels
    nK, nH = K.dim, H.dim

    def e(i):
        return {i: ONE}

    def rhd_module():
        for h in range(nH):
            for g in range(nH):
                for k in range(nK):
                    if P.act_rhd(H.alg.mult[h][g], e(k)) != P.act_rhd(e(h), P.rhd[g][k]):
                        yield f"({LH[h]}{LH[g]})|>{LK[k]} != {LH[h]}|>({LH[g]}|>{LK[k]})"
        for k in range(nK):
            if P.act_rhd(H.alg.unit, e(k)) != e(k):
                yield f"1|>{LK[k]} != {LK[k]}"
        yield None

    def lhd_module():
        for h in range(nH):
            for k in range(nK):
                for l in range(nK):
                    if P.act_lhd(e(h), K.alg.mult[k][l]) != P.act_lhd(P.lhd[h][k], e(l)):
                        yield f"{LH[h]}<|({LK[k]}{LK[l]}) != ({LH[h]}<|{LK[k]})<|{LK[l]}"
            if P.act_lhd(e(h), K.alg.unit) != e(h):
                yield f"{LH[h]}<|1 != {LH[h]}"
        yield None

    def coalgebra_maps():
        for h in range(nH):
            for k in range(nK):
                want_r: dict = {}
                want_l: dict = {}
                for (h1, h2), s in H.comult[h].items():
                    for (k1, k2), u in K.comult[k].items():
                        for p, a in P.rhd[h1][k1].items():
                            for q, b in P.rhd[h2][k2].items():
                                t2_add(want_r, s * u * a * b, {(p, q): ONE})
                        for p, a in P.lhd[h1][k1].items():
                            for q, b in P.lhd[h2][k2].items():
                                t2_add(want_l, s * u * a * b, {(p, q): ONE})
                if K.delta(P.rhd[h][k]) != want_r:
                    yield f"Delta({LH[h]}|>{LK[k]}) != (h1|>k1)(x)(h2|>k2)"
                if H.delta(P.lhd[h][k]) != want_l:
                    yield f"Delta({LH[h]}<|{LK[k]}) != (h1<|k1)(x)(h2<|k2)"
                e_hk = H.counit[h] * K.counit[k]
                if K.eps(P.rhd[h][k]) != e_hk or H.eps(P.lhd[h][k]) != e_hk:
                    yield f"eps is not preserved at ({LH[h]}, {LK[k]})"
        yield None

    def rhd_product():
        # h |> (k l) = (h1 |> k1)((h2 <| k2) |> l),  h |> 1 = eps(h) 1
        for h in range(nH):
            for k in range(nK):
                for l in range(nK):
                    lhs = P.act_rhd(e(h), K.alg.mult[k][l])
                    rhs: dict = {}
                    for (h1, h2), s in H.comult[h].items():
                        for (k1, k2), u in K.comult[k].items():
                            right = P.act_rhd(P.lhd[h2][k2], e(l))
                            axpy(rhs, s * u, K.mul(P.rhd[h1][k1], right))
                    if lhs != rhs:
                        yield f"{LH[h]}|>({LK[k]}{LK[l]}) = {fmt_vec(lhs, LK)} != {fmt_vec(rhs, LK)}"
            got = P.act_rhd(e(h), K.alg.unit)
            if got != {q: H.counit[h] * a for q, a in K.alg.unit.items() if H.counit[h]}:
                yield f"{LH[h]}|>1 != eps({LH[h]})1"
        yield None

    def lhd_product():
        # (h g) <| k = (h <| (g1 |> k1))(g2 <| k2),  1 <| k = eps(k) 1
        for h in range(nH):
            for g in range(nH):
                for k in range(nK):
                    lhs = P.act_lhd(H.alg.mult[h][g], e(k))
                    rhs: dict = {}
                    for (g1, g2), s in H.comult[g].items():
                        for (k1, k2), u in K.comult[k].items():
                            left = P.act_lhd(e(h), P.rhd[g1][k1])
                            axpy(rhs, s * u, H.mul(left, P.lhd[g2][k2]))
                    if lhs != rhs:
                        yield f"({LH[h]}{LH[g]})<|{LK[k]} = {fmt_vec(lhs, LH)} != {fmt_vec(rhs, LH)}"
        for k in range(nK):
            got = P.act_lhd(H.alg.unit, e(k))
            if got != {q: K.counit[k] * a for q, a in H.alg.unit.items() if K.counit[k]}:
                yield f"1<|{LK[k]} != eps({LK[k]})1"
        yield None

    def cross():
        # (h1 <| k1) (x) (h2 |> k2) = (h2 <| k2) (x) (h1 |> k1)
        for h in range(nH):
            for k in range(nK):
                lhs: dict = {}
                rhs: dict = {}
                for (h1, h2), s in H.comult[h].items():
                    for (k1, k2), u in K.comult[k].items():
                        for p, a in P.lhd[h1][k1].items():
                            for q, b in P.rhd[h2][k2].items():
                                t2_add(lhs, s * u * a * b, {(p, q): ONE})
                        for p, a in P.lhd[h2][k2].items():
                            for q, b in P.rhd[h1][k1].items():
                                t2_add(rhs, s * u * a * b, {(p, q): ONE})
                if lhs != rhs:
                    yield f"cross condition fails at ({LH[h]}, {LK[k]})"
        yield None

    return AxiomReport(f"matched pair ({K.name}, {H.name})", (
        first_failure("|> is a left module action", rhd_module()),
        first_failure("<| is a right module action", lhd_module()),
        first_failure("actions are coalgebra maps", coalgebra_maps()),
        first_failure("h|>(kl) compatibility", rhd_product()),
        first_failure("(hg)<|k compatibility", lhd_product()),
        first_failure("cross condition", cross())))


@dataclass(frozen=True, eq=False)
class DoubleCrossProduct:
    pair: MatchedPair
    hopf: HopfStructure
    factorization: Factorization

    @property
    def first(self) -> HopfStructure:
        return self.pair.first

    @property
    def second(self) -> HopfStructure:
        return self.pair.second

    @cached_property
    def first_embedding(self) -> HopfEmbedding:
        emb = SubalgebraEmbedding(self.first.alg, self.hopf.alg, self.factorization.embed_A.images)
        return HopfEmbedding(self.first, self.hopf, emb)

    @cached_property
    def second_embedding(self) -> HopfEmbedding:
        emb = SubalgebraEmbedding(self.second.alg, self.hopf.alg, self.factorization.embed_B.images)
        return HopfEmbedding(self.second, self.hopf, emb)


def double_cross_product(P: MatchedPair, name: str = "", check: bool = True) -> DoubleCrossProduct:
    K, H = P.first, P.second
    name = name or f"{K.name}><{H.name}"
    if check:
        rep = check_matched_pair(P)
        if not rep.ok:
            raise MatchedPairViolation(rep)
    F = Factorization(K.alg, H.alg, P.psi, name, "><")
    alg = F.algebra
    m = H.dim
    comult, counit, antipode = [], [], []
    for i in range(K.dim):
        for j in range(m):
            t = {}
            for (a, b), s in K.comult[i].items():
                for (c, d), u in H.comult[j].items():
                    t2_add(t, s * u, {(a * m + c, b * m + d): ONE})
            comult.append(t)
            counit.append(K.counit[i] * H.counit[j])
            left = {p * m + q: s * t for p, s in K.alg.unit.items() for q, t in H.S({j: ONE}).items()}
            right = {p * m + q: s * t for p, s in K.S({i: ONE}).items() for q, t in H.alg.unit.items()}
            antipode.append(alg.mul(left, right))
    D = HopfStructure.build(alg, comult, counit, antipode, name)
    out = DoubleCrossProduct(P, D, F)
    if check:
        rep = check_hopf_axioms(D)
        if not rep.ok:
            raise HopfError(f"double cross product is not a Hopf algebra: "
                            f"{rep.failures[0].name}: {rep.failures[0].witness}")
    return out


def drinfeld_double(H: HopfStructure, check: bool = True) -> DoubleCrossProduct:
    first = cop_hopf(dual_hopf(H))
    ca = coadjoint_actions(H)
    P = MatchedPair(first, H, ca.rrhu, ca.llhu)
    return double_cross_product(P, f"D({H.name})", check=check)


def group_double_fast(G: FiniteGroup) -> HopfStructure:
    """D(kG) from closed formulas; basis p_x >< g at index x*|G| + g.

    (p_x >< g)(p_y >< k) = [x = g y g^-1] p_x >< g k,
    Delta(p_x >< g) = sum_{ab = x} (p_b >< g) (x) (p_a >< g),
    S(p_x >< g) = p_{g^-1 x^-1 g} >< g^-1.
    """
    n = G.order
    mul, inv = G.mul, G.inv

    def fn(a, b):
        x, g = divmod(a, n)
        y, k = divmod(b, n)
        if x == mul(mul(g, y), inv(g)):
            return {x * n + mul(g, k): ONE}
        return {}

    labels = tuple(f"p_{G.names[x]}><{G.names[g]}" for x in range(n) for g in range(n))
    alg = StructureAlgebra.from_function(n * n, fn, {x * n: ONE for x in range(n)}, labels,
                                         f"D(k{G.name})")
    comult, counit, antipode = [], [], []
    for x in range(n):
        for g in range(n):
            comult.append({(b * n + g, a * n + g): ONE for a in range(n) for b in range(n)
                           if mul(a, b) == x})
            counit.append(ONE if x == 0 else ZERO)
            antipode.append({mul(mul(inv(g), inv(x)), g) * n + inv(g): ONE})
    return HopfStructure.build(alg, comult, counit, antipode, f"D(k{G.name})")


# ---------------------------------------------------------------- pairings

@dataclass(frozen=True, eq=False)
class PairedBialgebras:
    """Hopf algebras A, B with a bilinear form ``pairing[a][b] = <a_a, b_b>``."""

    A: HopfStructure
    B: HopfStructure
    pairing: tuple

    def sigma(self, a: int, b: int):
        return self.pairing[a][b]

    @cached_property
    def inverse(self) -> tuple:
        """Convolution inverse, sigma^-1(a, b) = <S a, b>."""
        A, B = self.A, self.B
        return tuple(tuple(sum((c * self.pairing[k][b] for k, c in A.antipode[a].items()), ZERO)
                           for b in range(B.dim)) for a in range(A.dim))


def trivial_pairing(A: HopfStructure, B: HopfStructure) -> PairedBialgebras:
    return PairedBialgebras(A, B, tuple(tuple(A.counit[a] * B.counit[b] for b in range(B.dim))
                                        for a in range(A.dim)))


def canonical_pairing(H: HopfStructure) -> PairedBialgebras:
    Hd = dual_hopf(H)
    return PairedBialgebras(H, Hd, Matrix.identity(H.dim).entries)


def check_pairing(P: PairedBialgebras) -> AxiomReport:
    A, B = P.A, P.B
    s, si = P.pairing, P.inverse
    LA, LB = A.labels, B.labels

    def pair(x: Mapping, y: Mapping):
        return sum((a * b * s[i][j] for i, a in x.items() for j, b in y.items()), ZERO)

    def mult_A():
        for a in range(A.dim):
            for c in range(A.dim):
                for b in range(B.dim):
                    lhs = pair(A.alg.mult[a][c], {b: ONE})
                    rhs = sum((u * s[a][p] * s[c][q] for (p, q), u in B.comult[b].items()), ZERO)
                    if lhs != rhs:
                        yield f"<{LA[a]}{LA[c]}, {LB[b]}> != <{LA[a]}(x){LA[c]}, Delta {LB[b]}>"
        yield None

    def mult_B():
        for b in range(B.dim):
            for d in range(B.dim):
                for a in range(A.dim):
                    lhs = pair({a: ONE}, B.alg.mult[b][d])
                    rhs = sum((u * s[p][b] * s[q][d] for (p, q), u in A.comult[a].items()), ZERO)
                    if lhs != rhs:
                        yield f"<{LA[a]}, {LB[b]}{LB[d]}> != <Delta {LA[a]}, {LB[b]}(x){LB[d]}>"
        yield None

    def units():
        for a in range(A.dim):
            if pair({a: ONE}, B.alg.unit) != A.counit[a]:
                yield f"<{LA[a]}, 1> != eps({LA[a]})"
        for b in range(B.dim):
            if pair(A.alg.unit, {b: ONE}) != B.counit[b]:
                yield f"<1, {LB[b]}> != eps({LB[b]})"
        yield None

    def antipode():
        for a in range(A.dim):
            for b in range(B.dim):
                if pair(A.antipode[a], {b: ONE}) != pair({a: ONE}, B.antipode[b]):
                    yield f"<S {LA[a]}, {LB[b]}> != <{LA[a]}, S {LB[b]}>"
        yield None

    def conv_inverse():
        for a in range(A.dim):
            for b in range(B.dim):
                want = A.counit[a] * B.counit[b]
                left = sum((u * v * si[a1][b1] * s[a2][b2]
                            for (a1, a2), u in A.comult[a].items()
                            for (b1, b2), v in B.comult[b].items()), ZERO)
                right = sum((u * v * s[a1][b1] * si[a2][b2]
                             for (a1, a2), u in A.comult[a].items()
                             for (b1, b2), v in B.comult[b].items()), ZERO)
                if left != want or right != want:
                    yield f"sigma^-1 is not a convolution inverse at ({LA[a]}, {LB[b]})"
        yield None

    return AxiomReport("pairing", (first_failure("<ac,b> = <a(x)c, Delta b>", mult_A()),
                                   first_failure("<a,bd> = <Delta a, b(x)d>", mult_B()),
                                   first_failure("pairing units", units()),
                                   first_failure("<Sa,b> = <a,Sb>", antipode()),
                                   first_failure("convolution inverse", conv_inverse())))


def _delta2(H: HopfStructure, i: int) -> dict:
    out: dict = {}
    for (a, b), s in H.comult[i].items():
        for (c, d), t in H.comult[b].items():
            key = (a, c, d)
            v = out.get(key, ZERO) + s * t
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def paired_matched_pair(P: PairedBialgebras, check: bool = True) -> MatchedPair:
    """Matched pair (B^cop, A) with

    a <| b = a_2 tau(a_1, b_1) sigma(a_3, b_2),
    a |> b = b_2 tau(a_1, b_1) sigma(a_2, b_3),

    where the Sweedler legs of a are those of A^cop and tau(a, b) = <Sbar a, b>
    is the convolution inverse of sigma on A^cop (x) B.  For cocommutative A
    this is the usual formula with sigma^-1(a, b) = <S a, b>; in general it is
    the reading under which the canonical pairing of H with H* returns D(H).
    """
    if check:
        rep = check_pairing(P)
        if not rep.ok:
            raise PairingViolation(rep)
    A, B = P.A, P.B
    Ac = cop_hopf(A)
    s = P.pairing
    tau = tuple(tuple(sum((c * s[k][b] for k, c in A.Sbar({a: ONE}).items()), ZERO)
                      for b in range(B.dim)) for a in range(A.dim))
    rhd, lhd = [], []
    for a in range(A.dim):
        d3a = _delta2(Ac, a)
        d2a = Ac.comult[a]
        rrow, lrow = [], []
        for b in range(B.dim):
            d2b = B.comult[b]
            d3b = _delta2(B, b)
            left: dict = {}
            for (a1, a2, a3), u in d3a.items():
                for (b1, b2), v in d2b.items():
                    c = u * v * tau[a1][b1] * s[a3][b2]
                    if c:
                        axpy(left, c, {a2: ONE})
            right: dict = {}
            for (a1, a2), u in d2a.items():
                for (b1, b2, b3), v in d3b.items():
                    c = u * v * tau[a1][b1] * s[a2][b3]
                    if c:
                        axpy(right, c, {b2: ONE})
            lrow.append(left)
            rrow.append(right)
        rhd.append(tuple(rrow))
        lhd.append(tuple(lrow))
    return MatchedPair(cop_hopf(B), A, tuple(rhd), tuple(lhd))


def paired_dcp(P: PairedBialgebras, name: str = "", check: bool = True) -> DoubleCrossProduct:
    return double_cross_product(paired_matched_pair(P, check),
                                name or f"{P.B.name}^cop><{P.A.name}", check=check)


# ---------------------------------------------------------------- recovering a matched pair

def matched_pair_from_factorization(H: HopfStructure, first: HopfEmbedding,
                                    second: HopfEmbedding) -> MatchedPair:
    """Matched pair with H = first |><| second when k (x) h -> k h is a bijection.

    mu(h (x) k) = m^-1(h k), h |> k = (id (x) eps) mu, h <| k = (eps (x) id) mu.
    """
    K, L = first.sub, second.sub
    ke, le = first.emb, second.emb
    n = H.dim
    if K.dim * L.dim != n:
        raise AlgebraError("dimensions of the two factors do not multiply to dim H")
    cols = [H.mul(ke.images[i], le.images[j]) for i in range(K.dim) for j in range(L.dim)]
    if rank_sparse(cols, n) != n:
        raise AlgebraError("multiplication first (x) second -> H is not bijective")
    Minv = inverse(Matrix.from_sparse(cols, n).transpose())
    m = L.dim

    def mu(v: Mapping) -> dict:
        coords = Minv @ [v.get(k, ZERO) for k in range(n)]
        return {divmod(c, m): a for c, a in enumerate(coords) if a}

    rhd, lhd = [], []
    for h in range(L.dim):
        rrow, lrow = [], []
        for k in range(K.dim):
            t = mu(H.mul(le.images[h], ke.images[k]))
            r, l = {}, {}
            for (i, j), a in t.items():
                axpy(r, a * L.counit[j], {i: ONE})
                axpy(l, a * K.counit[i], {j: ONE})
            rrow.append(r)
            lrow.append(l)
        rhd.append(tuple(rrow))
        lhd.append(tuple(lrow))
    return MatchedPair(K, L, tuple(rhd), tuple(lhd))


def swapped(D: DoubleCrossProduct, check: bool = True) -> DoubleCrossProduct:
    """The same Hopf algebra factored the other way round: second |><| first."""
    P = matched_pair_from_factorization(D.hopf, D.second_embedding, D.first_embedding)
    return double_cross_product(P, f"{D.hopf.name} (legs swapped)", check=check)
