"""Hopf algebra structures given by structure constants.

``comult[i]`` is a dict ``{(j, k): c}`` meaning Delta(b_i) = sum c b_j (x) b_k.
The dual of H uses the dual basis f_k (f_k(b_i) = delta_ki) and is labelled
``p_<label>``.

Action conventions used throughout:

* ``<h -> f, x> = f(x h)`` and ``<f <- h, x> = f(h x)`` (H on H*),
* ``f -> h = h_1 f(h_2)`` and ``h <- f = f(h_1) h_2`` (H* on H),
* coadjoint actions ``h rrhu f = h_1 -> f <- Sbar(h_2)`` and
  ``h llhu f = Sbar*(f_(2)) -> h <- f_(1)``, where Sbar is the inverse
  antipode and f_(1) (x) f_(2) is the coproduct of (H*)^cop.  Equivalently
  ``h llhu f = f(Sbar(h_3) h_1) h_2``.

For a group algebra these give ``g rrhu p_x = p_{g x g^-1}`` and
``g llhu p_x = delta_{x,e} g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .algebra import (AlgebraError, AxiomReport, AxiomResult, Module, StructureAlgebra,
                      SubalgebraEmbedding, check_algebra_axioms, first_failure, fmt_vec,
                      tensor_algebra)
from .groups import FiniteGroup
from .linalg import (ONE, ZERO, Echelon, LinAlgError, Matrix, Subspace, axpy, inverse,
                     linear_image, rat)


class HopfError(AlgebraError):
    pass


Tensor2 = dict  # {(j, k): coeff}


def t2_add(out: dict, a, t: Mapping) -> dict:
    if not a:
        return out
    for key, v in t.items():
        s = out.get(key, ZERO) + a * v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def fmt_t2(t: Mapping, L1: Sequence, L2: Sequence | None = None) -> str:
    if not t:
        return "0"
    L2 = L2 or L1
    return " + ".join(f"{v}*{L1[j]}(x){L2[k]}" for (j, k), v in sorted(t.items()))


@dataclass(frozen=True, eq=False)
class HopfStructure:
    alg: StructureAlgebra
    comult: tuple
    counit: tuple
    antipode: tuple
    antipode_inverse: tuple | None
    name: str = ""

    @classmethod
    def build(cls, alg: StructureAlgebra, comult: Sequence[Mapping], counit: Sequence,
              antipode: Sequence[Mapping], name: str = "") -> "HopfStructure":
        n = alg.dim
        if len(comult) != n or len(counit) != n or len(antipode) != n:
            raise HopfError("coalgebra data must have one entry per basis element")
        comult = tuple({(int(j), int(k)): rat(c) for (j, k), c in t.items() if c} for t in comult)
        counit = tuple(rat(c) for c in counit)
        antipode = tuple({int(k): rat(c) for k, c in v.items() if c} for v in antipode)
        for t in comult:
            if any(not (0 <= j < n and 0 <= k < n) for j, k in t):
                raise HopfError("coproduct index out of range")
        try:
            Sm = Matrix.from_sparse(list(antipode), n).transpose()
            Si = inverse(Sm).transpose()
            sinv = tuple(dict(r) for r in Si.sparse_rows())
        except LinAlgError:
            sinv = None
        return cls(alg, comult, counit, antipode, sinv, name or alg.name)

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def labels(self) -> tuple:
        return self.alg.labels

    def mul(self, x, y) -> dict:
        return self.alg.mul(x, y)

    def delta(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            t2_add(out, a, self.comult[i])
        return out

    def eps(self, x: Mapping):
        return sum((a * self.counit[i] for i, a in x.items()), ZERO)

    def S(self, x: Mapping) -> dict:
        return linear_image(self.antipode, x)

    def Sbar(self, x: Mapping) -> dict:
        if self.antipode_inverse is None:
            raise HopfError("antipode is not invertible")
        return linear_image(self.antipode_inverse, x)

    def mul2(self, u: Mapping, v: Mapping) -> dict:
        """Product in H (x) H."""
        out: dict = {}
        M = self.alg.mult
        for (a, b), s in u.items():
            for (c, d), t in v.items():
                for p, x in M[a][c].items():
                    for q, y in M[b][d].items():
                        key = (p, q)
                        val = out.get(key, ZERO) + s * t * x * y
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def same_structure(self, other: "HopfStructure") -> bool:
        return (self.alg.same_structure(other.alg) and self.comult == other.comult
                and self.counit == other.counit and self.antipode == other.antipode)

    @cached_property
    def unit_vec(self) -> dict:
        return dict(self.alg.unit)


# ---------------------------------------------------------------- builders

def group_algebra(G: FiniteGroup) -> StructureAlgebra:
    return StructureAlgebra.from_function(G.order, lambda i, j: {G.mul(i, j): ONE}, {0: ONE},
                                          G.names, f"k{G.name}")


def group_hopf(G: FiniteGroup) -> HopfStructure:
    A = group_algebra(G)
    n = G.order
    return HopfStructure.build(A, [{(g, g): ONE} for g in range(n)], [ONE] * n,
                               [{G.inv(g): ONE} for g in range(n)], f"k{G.name}")


def dual_hopf(H: HopfStructure, name: str | None = None) -> HopfStructure:
    n = H.dim
    M = H.alg.mult
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), c in H.comult[k].items():
            mult[i][j][k] = c
    unit = {k: c for k, c in enumerate(H.counit) if c}
    labels = tuple(f"p_{l}" for l in H.labels)
    name = name or f"({H.name})*"
    alg = StructureAlgebra(n, tuple(tuple(r) for r in mult), unit, labels, name)
    comult = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in M[i][j].items():
                comult[k][(i, j)] = c
    counit = [H.alg.unit.get(k, ZERO) for k in range(n)]
    antipode = [dict() for _ in range(n)]
    for k in range(n):
        for i, c in H.antipode[k].items():
            antipode[i][k] = c
    return HopfStructure.build(alg, comult, counit, antipode, name)


def _replace(H: HopfStructure, alg=None, comult=None, antipode=None, sinv=None, name=""):
    return HopfStructure(alg or H.alg, comult if comult is not None else H.comult, H.counit,
                         antipode if antipode is not None else H.antipode,
                         sinv if sinv is not None else H.antipode_inverse, name)


def op_hopf(H: HopfStructure) -> HopfStructure:
    """Opposite multiplication; the antipode becomes Sbar."""
    if H.antipode_inverse is None:
        raise HopfError("H^op needs a bijective antipode")
    return _replace(H, alg=H.alg.opposite(), antipode=H.antipode_inverse, sinv=H.antipode,
                    name=f"{H.name}^op")


def cop_hopf(H: HopfStructure) -> HopfStructure:
    """Opposite comultiplication; the antipode becomes Sbar."""
    if H.antipode_inverse is None:
        raise HopfError("H^cop needs a bijective antipode")
    comult = tuple({(k, j): c for (j, k), c in t.items()} for t in H.comult)
    return _replace(H, comult=comult, antipode=H.antipode_inverse, sinv=H.antipode,
                    name=f"{H.name}^cop")


def opcop_hopf(H: HopfStructure) -> HopfStructure:
    comult = tuple({(k, j): c for (j, k), c in t.items()} for t in H.comult)
    return _replace(H, alg=H.alg.opposite(), comult=comult, name=f"{H.name}^opcop")


def variants(H: HopfStructure) -> dict:
    return {"op": op_hopf(H), "cop": cop_hopf(H), "opcop": opcop_hopf(H)}


def tensor_hopf(H: HopfStructure, K: HopfStructure) -> HopfStructure:
    """H (x) K with the tensor product coalgebra; basis index i*dim(K)+j."""
    m = K.dim
    alg = tensor_algebra(H.alg, K.alg, f"{H.name}(x){K.name}")
    comult, counit, antipode = [], [], []
    for i in range(H.dim):
        for j in range(m):
            t = {}
            for (a, b), s in H.comult[i].items():
                for (c, d), u in K.comult[j].items():
                    t[(a * m + c, b * m + d)] = s * u
            comult.append(t)
            counit.append(H.counit[i] * K.counit[j])
            antipode.append({p * m + q: s * u for p, s in H.antipode[i].items()
                             for q, u in K.antipode[j].items()})
    return HopfStructure.build(alg, comult, counit, antipode, alg.name)


def sweedler() -> HopfStructure:
    """Sweedler's four-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx.

    Basis 1, g, x, gx; Delta(x) = x (x) 1 + g (x) x.  Not semisimple, and its
    antipode has order 4, which makes it a good probe for side conventions.
    """
    # elements as (g power, has x); gx means g*x
    def mul(i, j):
        a, x1 = i % 2, i // 2
        b, x2 = j % 2, j // 2
        if x1 and x2:
            return {}
        # (g^a x^x1)(g^b x^x2) = (-1)^{x1 b} g^{a+b} x^{x1+x2}
        sign = -1 if (x1 and b) else 1
        return {((a + b) % 2) + 2 * (x1 + x2): sign}

    labels = ("1", "g", "x", "gx")
    alg = StructureAlgebra.from_function(4, mul, {0: 1}, labels, "H4")
    one, g, x, gx = 0, 1, 2, 3
    comult = [{(one, one): 1}, {(g, g): 1}, {(x, one): 1, (g, x): 1}, {(gx, g): 1, (one, gx): 1}]
    counit = [1, 1, 0, 0]
    antipode = [{one: 1}, {g: 1}, {gx: -1}, {x: 1}]
    return HopfStructure.build(alg, comult, counit, antipode, "H4")


# ---------------------------------------------------------------- axioms

def check_hopf_axioms(H: HopfStructure) -> AxiomReport:
    n = H.dim
    L = H.labels
    A = H.alg
    report = check_algebra_axioms(A)

    def coassoc():
        for i in range(n):
            lhs, rhs = {}, {}
            for (j, k), c in H.comult[i].items():
                for (a, b), d in H.comult[j].items():
                    t2_add(lhs, ONE, {((a, b), k): c * d})
                for (a, b), d in H.comult[k].items():
                    t2_add(rhs, ONE, {(j, (a, b)): c * d})
            lhs = {(a, b, k): v for ((a, b), k), v in lhs.items()}
            rhs = {(j, a, b): v for (j, (a, b)), v in rhs.items()}
            if lhs != rhs:
                yield f"(Delta(x)id)Delta != (id(x)Delta)Delta on {L[i]}"
        yield None

    def counit():
        for i in range(n):
            left, right = {}, {}
            for (j, k), c in H.comult[i].items():
                axpy(left, c * H.counit[j], {k: ONE})
                axpy(right, c * H.counit[k], {j: ONE})
            if left != {i: ONE} or right != {i: ONE}:
                yield f"counit law fails on {L[i]}: (eps(x)id)Delta = {fmt_vec(left, L)}, " \
                      f"(id(x)eps)Delta = {fmt_vec(right, L)}"
        yield None

    def delta_mult():
        if H.delta(A.unit) != {(a, b): s * t for a, s in A.unit.items() for b, t in A.unit.items()}:
            yield "Delta(1) != 1(x)1"
        for i in range(n):
            for j in range(n):
                lhs = H.delta(A.mult[i][j])
                rhs = H.mul2(H.comult[i], H.comult[j])
                if lhs != rhs:
                    yield f"Delta({L[i]}*{L[j]}) = {fmt_t2(lhs, L)} but " \
                          f"Delta({L[i]})Delta({L[j]}) = {fmt_t2(rhs, L)}"
        yield None

    def eps_mult():
        if H.eps(A.unit) != ONE:
            yield "eps(1) != 1"
        for i in range(n):
            for j in range(n):
                if H.eps(A.mult[i][j]) != H.counit[i] * H.counit[j]:
                    yield f"eps({L[i]}*{L[j]}) != eps({L[i]})eps({L[j]})"
        yield None

    def antipode():
        for i in range(n):
            left, right = {}, {}
            for (j, k), c in H.comult[i].items():
                axpy(left, c, A.mul(H.antipode[j], {k: ONE}))
                axpy(right, c, A.mul({j: ONE}, H.antipode[k]))
            target = {k: H.counit[i] * a for k, a in A.unit.items() if H.counit[i]}
            if left != target:
                yield f"S(h1)h2 = {fmt_vec(left, L)} != eps(h)1 for h = {L[i]}"
            if right != target:
                yield f"h1S(h2) = {fmt_vec(right, L)} != eps(h)1 for h = {L[i]}"
        yield None

    def bijective():
        if H.antipode_inverse is None:
            yield "antipode is singular"
            return
        for i in range(n):
            if H.Sbar(H.antipode[i]) != {i: ONE}:
                yield f"Sbar(S({L[i]})) != {L[i]}"
        yield None

    results = (first_failure("coassociativity", coassoc()),
               first_failure("counit", counit()),
               first_failure("comultiplication is multiplicative", delta_mult()),
               first_failure("counit is multiplicative", eps_mult()),
               first_failure("antipode", antipode()),
               first_failure("antipode bijective", bijective()))
    return AxiomReport(H.name or "hopf", report.results + results)


# ---------------------------------------------------------------- Hopf subalgebras

class NotHopfSubalgebra(HopfError):
    pass


@dataclass(frozen=True, eq=False)
class HopfEmbedding:
    """A Hopf subalgebra R of H together with the algebra embedding."""

    sub: HopfStructure
    amb: HopfStructure
    emb: SubalgebraEmbedding

    def __post_init__(self):
        e = self.emb
        for i in range(self.sub.dim):
            img = e.images[i]
            lhs = self.amb.delta(img)
            rhs = {}
            for (j, k), c in self.sub.comult[i].items():
                for a, s in e.images[j].items():
                    for b, t in e.images[k].items():
                        t2_add(rhs, c * s * t, {(a, b): ONE})
            if lhs != rhs:
                raise NotHopfSubalgebra(f"coproduct not preserved on {self.sub.labels[i]}")
            if self.amb.eps(img) != self.sub.counit[i]:
                raise NotHopfSubalgebra(f"counit not preserved on {self.sub.labels[i]}")
            if self.amb.S(img) != e.apply(self.sub.antipode[i]):
                raise NotHopfSubalgebra(f"antipode not preserved on {self.sub.labels[i]}")

    @property
    def name(self) -> str:
        return f"{self.sub.name} < {self.amb.name}"


def induced_hopf_embedding(H: HopfStructure, images: Sequence[Mapping], labels=None,
                           name: str = "") -> HopfEmbedding:
    """Hopf structure on a subspace of H closed under all structure maps."""
    images = [dict(v) for v in images]
    r = len(images)
    ech = Echelon(H.dim).extend(images)
    if ech.rank != r:
        raise NotHopfSubalgebra("spanning vectors are dependent")
    # coordinates in the given (arbitrary) basis: solve via an augmented echelon
    aug = Echelon(H.dim + r)
    for t, v in enumerate(images):
        w = dict(v)
        w[H.dim + t] = -ONE
        aug.add(w)

    def coords(v: Mapping) -> dict:
        red = aug.reduce(v)
        if any(k < H.dim for k in red):
            raise NotHopfSubalgebra(f"{fmt_vec(v, H.labels)} leaves the subspace")
        return {k - H.dim: a for k, a in red.items()}

    labels = tuple(labels) if labels else tuple(fmt_vec(v, H.labels) for v in images)
    mult = tuple(tuple(coords(H.mul(images[i], images[j])) for j in range(r)) for i in range(r))
    unit = coords(H.alg.unit)
    alg = StructureAlgebra(r, mult, unit, labels, name)
    comult = []
    for v in images:
        d = H.delta(v)
        # express the image of Delta in sub (x) sub by solving coordinate by coordinate
        first: dict = {}
        for (a, b), c in d.items():
            first.setdefault(b, {})[a] = c
        mid = {}
        for b, col in first.items():
            for i, c in coords(col).items():
                mid.setdefault(i, {})[b] = c
        out = {}
        for i, col in mid.items():
            for j, c in coords(col).items():
                out[(i, j)] = c
        comult.append(out)
    counit = [H.eps(v) for v in images]
    antipode = [coords(H.S(v)) for v in images]
    sub = HopfStructure.build(alg, comult, counit, antipode, name)
    emb = SubalgebraEmbedding(alg, H.alg, tuple(images))
    return HopfEmbedding(sub, H, emb)


# ---------------------------------------------------------------- actions

@dataclass(frozen=True)
class CoregularActions:
    """``hit[i][k] = b_i -> f_k`` and ``hit_right[k][i] = f_k <- b_i`` (in H*);
    ``dual_hit[k][i] = f_k -> b_i`` and ``dual_hit_right[i][k] = b_i <- f_k`` (in H)."""

    hit: tuple
    hit_right: tuple
    dual_hit: tuple
    dual_hit_right: tuple


def coregular_actions(H: HopfStructure) -> CoregularActions:
    n = H.dim
    M = H.alg.mult
    hit = [[dict() for _ in range(n)] for _ in range(n)]
    hit_right = [[dict() for _ in range(n)] for _ in range(n)]
    for m in range(n):
        for i in range(n):
            for k, c in M[m][i].items():
                hit[i][k][m] = c          # (b_i -> f_k)(b_m) = f_k(b_m b_i)
            for k, c in M[i][m].items():
                hit_right[k][i][m] = c    # (f_k <- b_i)(b_m) = f_k(b_i b_m)
    dual_hit = [[dict() for _ in range(n)] for _ in range(n)]
    dual_hit_right = [[dict() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (j, l), c in H.comult[i].items():
            dual_hit[l][i][j] = dual_hit[l][i].get(j, ZERO) + c       # f_l -> b_i = b_j f_l(b_l)
            dual_hit_right[i][j][l] = dual_hit_right[i][j].get(l, ZERO) + c  # b_i <- f_j
    freeze = lambda T: tuple(tuple({k: v for k, v in d.items() if v} for d in row) for row in T)
    return CoregularActions(freeze(hit), freeze(hit_right), freeze(dual_hit), freeze(dual_hit_right))


@dataclass(frozen=True)
class CoadjointActions:
    """``rrhu[i][k] = b_i rrhu f_k`` in H* and ``llhu[i][k] = b_i llhu f_k`` in H."""

    rrhu: tuple
    llhu: tuple


def coadjoint_actions(H: HopfStructure) -> CoadjointActions:
    n = H.dim
    if H.antipode_inverse is None:
        raise HopfError("coadjoint actions need a bijective antipode")
    co = coregular_actions(H)
    Hd = dual_hopf(H)
    rr = []
    for i in range(n):
        row = []
        for k in range(n):
            out: dict = {}
            for (a, b), c in H.comult[i].items():
                # b_a -> f_k <- Sbar(b_b)
                left = co.hit[a][k]
                for q, s in H.Sbar({b: ONE}).items():
                    for f, t in left.items():
                        axpy(out, c * s * t, co.hit_right[f][q])
            row.append(out)
        rr.append(tuple(row))
    ll = []
    for i in range(n):
        row = []
        for k in range(n):
            out = {}
            # Sweedler legs of f taken in the coproduct of (H*)^cop
            for (f2, f1), c in Hd.comult[k].items():
                inner = co.dual_hit_right[i][f1]        # b_i <- f_1
                for f, s in Hd.Sbar({f2: ONE}).items():  # Sbar*(f_2)
                    for m, t in inner.items():
                        axpy(out, c * s * t, co.dual_hit[f][m])
            row.append(out)
        ll.append(tuple(row))
    return CoadjointActions(tuple(rr), tuple(ll))


# ---------------------------------------------------------------- quotient module

@dataclass(frozen=True, eq=False)
class QuotientModule:
    """Q = H / R^+ H for a Hopf subalgebra R of H.

    ``left`` is the R-action induced by left multiplication (always
    trivial, r.[h] = eps(r)[h], since R^+ H is killed) and ``right`` the
    action [h].r = [h r], which is well defined because R^+ H is a right
    ideal.  Depth computations use ``right``.
    """

    pair: HopfEmbedding
    kernel: Subspace
    free_columns: tuple
    left: Module
    right: Module

    @property
    def dim(self) -> int:
        return len(self.free_columns)


def quotient_module(pair: HopfEmbedding) -> QuotientModule:
    H, R, e = pair.amb, pair.sub, pair.emb
    n = H.dim
    rplus = []
    for i in range(R.dim):
        v = dict(e.images[i])
        axpy(v, -R.counit[i], H.alg.unit)
        if v:
            rplus.append(v)
    ech = Echelon(n)
    for v in rplus:
        for h in range(n):
            ech.add(H.mul(v, {h: ONE}))
    kernel = Subspace.span(n, ech.basis())
    # R^+ H must be stable under left multiplication by R and right multiplication by H
    for v in ech.basis():
        for i in range(R.dim):
            if not ech.contains(H.mul(e.images[i], v)):
                raise HopfError("R^+H is not stable under left multiplication by R")
        for h in range(n):
            if not ech.contains(H.mul(v, {h: ONE})):
                raise HopfError("R^+H is not a right ideal")
    free = tuple(c for c in range(n) if c not in ech.rows)
    pos = {c: t for t, c in enumerate(free)}

    def proj(v: Mapping) -> dict:
        red = ech.reduce(v)
        return {pos[c]: a for c, a in red.items()}

    left = tuple(tuple(proj(H.mul(e.images[i], {c: ONE})) for c in free) for i in range(R.dim))
    right = tuple(tuple(proj(H.mul({c: ONE}, e.images[i])) for c in free) for i in range(R.dim))
    return QuotientModule(pair, kernel, free,
                          Module(R.alg, len(free), left, "left", "Q"),
                          Module(R.alg, len(free), right, "right", "Q"))
