"""Finite-dimensional algebras, bimodules and similarity of bimodules.

Algebras are given by structure constants ``mult[i][j] = b_i b_j`` stored as
sparse vectors.  Bimodules carry one sparse matrix per basis element of each
acting algebra (``left_action[p][m] = x_p . m_m``).

Similarity is decided through central characters.  Over a semisimple
algebra E = X (x) Y^op in characteristic 0 the trace form of every module
restricted to the center Z(E) = Z(X) (x) Z(Y) is a sum of nondegenerate
block forms, one per simple constituent present.  The kernel of that form
is therefore exactly the annihilator of M in Z(E), and

    M | pN   iff   Ann(N) <= Ann(M).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import (ONE, ZERO, Echelon, LinAlgError, Matrix, Subspace, axpy, inverse,
                     kernel_sparse, linear_image, rank_sparse, rat, rat_str, vsub)


class AlgebraError(ValueError):
    pass


class ActionMismatch(AlgebraError):
    pass


class NotSemisimple(ArithmeticError):
    """The similarity test needs a semisimple enveloping algebra."""


# ---------------------------------------------------------------- axiom reports

@dataclass(frozen=True)
class AxiomResult:
    name: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    subject: str
    results: tuple

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]

    def __add__(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.subject, self.results + other.results)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "axioms": [{"name": r.name, "ok": r.ok, "witness": r.witness}
                           for r in self.results]}


def first_failure(name: str, witnesses: Iterable) -> AxiomResult:
    """``witnesses`` yields None for passing cases and a description otherwise."""
    for w in witnesses:
        if w is not None:
            return AxiomResult(name, False, w)
    return AxiomResult(name, True)


def fmt_vec(v: Mapping, labels: Sequence | None = None) -> str:
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        name = labels[k] if labels else f"e{k}"
        parts.append(f"{rat_str(v[k])}*{name}")
    return " + ".join(parts)


# ---------------------------------------------------------------- algebras

@dataclass(frozen=True)
class CenterData:
    basis: tuple          # RREF basis of Z(A), sparse vectors in A
    pivots: tuple
    consts: tuple         # consts[a][b] = coordinates of u_a u_b in the basis, as dicts

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    dim: int
    mult: tuple
    unit: dict
    labels: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.mult) != self.dim or any(len(r) != self.dim for r in self.mult):
            raise AlgebraError(f"structure constants must be {self.dim}x{self.dim}")
        if len(self.labels) != self.dim:
            raise AlgebraError("one label per basis element is required")
        for row in self.mult:
            for v in row:
                if any(not 0 <= k < self.dim for k in v):
                    raise AlgebraError("structure constant index out of range")

    @classmethod
    def from_function(cls, dim: int, fn: Callable[[int, int], Mapping], unit: Mapping,
                      labels: Sequence | None = None, name: str = "") -> "StructureAlgebra":
        mult = tuple(tuple(_clean(fn(i, j)) for j in range(dim)) for i in range(dim))
        labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        return cls(dim, mult, _clean(unit), labels, name)

    def e(self, i: int) -> dict:
        return {i: ONE}

    def mul(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            row = self.mult[i]
            for j, b in y.items():
                axpy(out, a * b, row[j])
        return out

    def left_columns(self, x: Mapping) -> list:
        return [self.mul(x, {k: ONE}) for k in range(self.dim)]

    def right_columns(self, y: Mapping) -> list:
        return [self.mul({k: ONE}, y) for k in range(self.dim)]

    def opposite(self) -> "StructureAlgebra":
        mult = tuple(tuple(self.mult[j][i] for j in range(self.dim)) for i in range(self.dim))
        return StructureAlgebra(self.dim, mult, dict(self.unit), self.labels, self.name + "^op")

    def same_structure(self, other: "StructureAlgebra") -> bool:
        return (self is other) or (self.dim == other.dim and self.mult == other.mult
                                   and self.unit == other.unit)

    @cached_property
    def generators(self) -> tuple:
        """Basis indices generating the algebra (greedy)."""
        gens: list = []
        span = Echelon(self.dim)
        span.add(self.unit)
        for i in range(self.dim):
            if span.contains({i: ONE}):
                continue
            gens.append(i)
            span = self._closure(gens)
            if span.rank == self.dim:
                break
        return tuple(gens)

    def _closure(self, gens) -> Echelon:
        span = Echelon(self.dim)
        span.add(self.unit)
        frontier = [dict(self.unit)]
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = self.mul(v, {g: ONE})
                    if span.add(w):
                        nxt.append(w)
            frontier = nxt
        return span

    @cached_property
    def center_data(self) -> CenterData:
        rows: dict = {}
        for j in self.generators:
            for i in range(self.dim):
                for k, a in vsub(self.mult[i][j], self.mult[j][i]).items():
                    rows.setdefault((j, k), {})[i] = a
        basis = kernel_sparse(list(rows.values()), self.dim)
        pivots = tuple(min(v) for v in basis)
        consts = []
        for u in basis:
            row = []
            for w in basis:
                prod = self.mul(u, w)
                row.append({a: prod[p] for a, p in enumerate(pivots) if p in prod})
            consts.append(tuple(row))
        return CenterData(tuple(basis), pivots, tuple(consts))

    @cached_property
    def semisimple(self) -> bool:
        return is_semisimple(self)


def _clean(v: Mapping) -> dict:
    return {int(k): rat(a) for k, a in v.items() if a}


def check_algebra_axioms(A: StructureAlgebra) -> AxiomReport:
    L = A.labels

    def assoc():
        for i in range(A.dim):
            for j in range(A.dim):
                ij = A.mult[i][j]
                for k in range(A.dim):
                    lhs = A.mul(ij, {k: ONE})
                    rhs = A.mul({i: ONE}, A.mult[j][k])
                    if lhs != rhs:
                        yield f"({L[i]}*{L[j]})*{L[k]} = {fmt_vec(lhs, L)} but " \
                              f"{L[i]}*({L[j]}*{L[k]}) = {fmt_vec(rhs, L)}"
        yield None

    def unit():
        for i in range(A.dim):
            for side, v in (("left", A.mul(A.unit, {i: ONE})), ("right", A.mul({i: ONE}, A.unit))):
                if v != {i: ONE}:
                    yield f"{side} unit fails on {L[i]}: gives {fmt_vec(v, L)}"
        yield None

    return AxiomReport(A.name or "algebra",
                       (first_failure("associativity", assoc()), first_failure("unit", unit())))


def center(A: StructureAlgebra) -> Subspace:
    return Subspace.span(A.dim, A.center_data.basis)


def trace_form(A: StructureAlgebra) -> list:
    """Gram matrix tr(L_a L_b) of the regular representation."""
    n = A.dim
    G = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        ma = A.mult[a]
        for b in range(a, n):
            mb = A.mult[b]
            s = ZERO
            for l in range(n):
                for k, c in ma[l].items():
                    d = mb[k].get(l)
                    if d:
                        s += c * d
            G[a][b] = G[b][a] = s
    return G


def is_semisimple(A: StructureAlgebra) -> bool:
    """Characteristic 0: semisimple iff the regular trace form is nondegenerate."""
    G = trace_form(A)
    return rank_sparse([{j: a for j, a in enumerate(r) if a} for r in G], A.dim) == A.dim


def tensor_algebra(X: StructureAlgebra, Y: StructureAlgebra, name: str = "") -> StructureAlgebra:
    """X (x) Y with basis x_i (x) y_j at index i*dim(Y)+j."""
    m = Y.dim

    def fn(a, b):
        i, j = divmod(a, m)
        k, l = divmod(b, m)
        out = {}
        for p, s in X.mult[i][k].items():
            for q, t in Y.mult[j][l].items():
                out[p * m + q] = s * t
        return out

    unit = {p * m + q: s * t for p, s in X.unit.items() for q, t in Y.unit.items()}
    labels = [f"{x}(x){y}" for x in X.labels for y in Y.labels]
    return StructureAlgebra.from_function(X.dim * m, fn, unit, labels,
                                          name or f"{X.name}(x){Y.name}")


def enveloping(X: StructureAlgebra, Y: StructureAlgebra) -> StructureAlgebra:
    """X (x) Y^op; its modules are the X-Y bimodules."""
    return tensor_algebra(X, Y.opposite(), f"{X.name}(x){Y.name}^op")


# ---------------------------------------------------------------- embeddings

@dataclass(frozen=True, eq=False)
class SubalgebraEmbedding:
    """Unital injective algebra map B -> A; ``images[i]`` is b_i in A coordinates."""

    sub: StructureAlgebra
    amb: StructureAlgebra
    images: tuple

    def __post_init__(self):
        B, A = self.sub, self.amb
        if len(self.images) != B.dim:
            raise AlgebraError("one image per basis element of the subalgebra is required")
        if rank_sparse(list(self.images), A.dim) != B.dim:
            raise AlgebraError("embedding is not injective")
        if self.apply(B.unit) != A.unit:
            raise AlgebraError("embedding does not preserve the unit")
        for i in range(B.dim):
            for j in range(B.dim):
                lhs = self.apply(B.mult[i][j])
                rhs = A.mul(self.images[i], self.images[j])
                if lhs != rhs:
                    raise AlgebraError(
                        f"embedding is not multiplicative at ({B.labels[i]}, {B.labels[j]})")

    @classmethod
    def from_matrix(cls, sub, amb, M: Matrix) -> "SubalgebraEmbedding":
        if (M.nrows, M.ncols) != (sub.dim, amb.dim):
            raise AlgebraError("embedding matrix must be dim(B) x dim(A)")
        return cls(sub, amb, tuple(M.sparse_rows()))

    @classmethod
    def identity(cls, A: StructureAlgebra) -> "SubalgebraEmbedding":
        return cls(A, A, tuple({i: ONE} for i in range(A.dim)))

    @property
    def matrix(self) -> Matrix:
        return Matrix.from_sparse(list(self.images), self.amb.dim)

    def apply(self, x: Mapping) -> dict:
        return linear_image(self.images, x)

    def image(self) -> Subspace:
        return Subspace.span(self.amb.dim, self.images)


# ---------------------------------------------------------------- bimodules

@dataclass(frozen=True, eq=False)
class Bimodule:
    """An X-Y bimodule of finite dimension."""

    left_alg: StructureAlgebra
    right_alg: StructureAlgebra
    dim: int
    left_action: tuple
    right_action: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.left_action) != self.left_alg.dim or len(self.right_action) != self.right_alg.dim:
            raise ActionMismatch("action tensors do not match the acting algebras")
        for act in (self.left_action, self.right_action):
            if any(len(cols) != self.dim for cols in act):
                raise ActionMismatch("action matrices do not match the module dimension")

    @classmethod
    def regular(cls, A: StructureAlgebra) -> "Bimodule":
        left = tuple(tuple(A.mult[p][m] for m in range(A.dim)) for p in range(A.dim))
        right = tuple(tuple(A.mult[m][q] for m in range(A.dim)) for q in range(A.dim))
        return cls(A, A, A.dim, left, right, A.name)

    def left_columns(self, x: Mapping) -> list:
        return _combine(self.left_action, x, self.dim)

    def right_columns(self, y: Mapping) -> list:
        return _combine(self.right_action, y, self.dim)

    def act_left(self, x: Mapping, m: Mapping) -> dict:
        out: dict = {}
        for p, a in x.items():
            cols = self.left_action[p]
            for k, b in m.items():
                axpy(out, a * b, cols[k])
        return out

    def act_right(self, m: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for q, a in y.items():
            cols = self.right_action[q]
            for k, b in m.items():
                axpy(out, a * b, cols[k])
        return out

    def restrict(self, left: SubalgebraEmbedding | None = None,
                 right: SubalgebraEmbedding | None = None) -> "Bimodule":
        la, ra = self.left_action, self.right_action
        X, Y = self.left_alg, self.right_alg
        if left is not None:
            _require_same(left.amb, X, "left restriction")
            la = tuple(tuple(self.left_columns(img)) for img in left.images)
            X = left.sub
        if right is not None:
            _require_same(right.amb, Y, "right restriction")
            ra = tuple(tuple(self.right_columns(img)) for img in right.images)
            Y = right.sub
        return Bimodule(X, Y, self.dim, la, ra, self.name)

    def direct_sum(self, other: "Bimodule") -> "Bimodule":
        _require_same(self.left_alg, other.left_alg, "direct sum")
        _require_same(self.right_alg, other.right_alg, "direct sum")
        d = self.dim

        def glue(a, b):
            return tuple(tuple(a[p]) + tuple({k + d: v for k, v in col.items()} for col in b[p])
                         for p in range(len(a)))

        return Bimodule(self.left_alg, self.right_alg, d + other.dim,
                        glue(self.left_action, other.left_action),
                        glue(self.right_action, other.right_action),
                        f"{self.name}+{other.name}")

    def central_traces(self) -> list:
        """W[a][b] = tr(m -> u_a m v_b) for the center bases u of X and v of Y."""
        U = self.left_alg.center_data.basis
        V = self.right_alg.center_data.basis
        Lu = [self.left_columns(u) for u in U]
        W = []
        for lu in Lu:
            row = []
            for v in V:
                rv = self.right_columns(v)
                s = ZERO
                for m in range(self.dim):
                    img = rv[m]
                    if not img:
                        continue
                    for k, a in img.items():
                        c = lu[k].get(m)
                        if c:
                            s += a * c
                row.append(s)
            W.append(row)
        return W


def _combine(action, x: Mapping, dim: int) -> list:
    cols = [dict() for _ in range(dim)]
    for p, a in x.items():
        for m, col in enumerate(action[p]):
            axpy(cols[m], a, col)
    return cols


def _require_same(A: StructureAlgebra, B: StructureAlgebra, what: str):
    if not A.same_structure(B):
        raise ActionMismatch(f"{what}: algebras {A.name or '?'} and {B.name or '?'} differ")


def check_bimodule_axioms(M: Bimodule) -> AxiomReport:
    X, Y = M.left_alg, M.right_alg

    def assoc(alg, act, side):
        for p in range(alg.dim):
            for q in range(alg.dim):
                pq = alg.mult[p][q]
                for m in range(M.dim):
                    e = {m: ONE}
                    if side == "left":
                        lhs = M.act_left(pq, e)
                        rhs = M.act_left({p: ONE}, M.act_left({q: ONE}, e))
                    else:
                        lhs = M.act_right(e, pq)
                        rhs = M.act_right(M.act_right(e, {p: ONE}), {q: ONE})
                    if lhs != rhs:
                        yield f"{side} action not associative at ({alg.labels[p]}, {alg.labels[q]}, m{m})"
        yield None

    def unit():
        for m in range(M.dim):
            e = {m: ONE}
            if M.act_left(X.unit, e) != e:
                yield f"left unit fails on m{m}"
            if M.act_right(e, Y.unit) != e:
                yield f"right unit fails on m{m}"
        yield None

    def commute():
        for p in range(X.dim):
            for q in range(Y.dim):
                for m in range(M.dim):
                    e = {m: ONE}
                    lhs = M.act_right(M.act_left({p: ONE}, e), {q: ONE})
                    rhs = M.act_left({p: ONE}, M.act_right(e, {q: ONE}))
                    if lhs != rhs:
                        yield f"(x m) y != x (m y) at ({X.labels[p]}, m{m}, {Y.labels[q]})"
        yield None

    return AxiomReport(M.name or "bimodule", (
        first_failure("left module associativity", assoc(X, M.left_action, "left")),
        first_failure("right module associativity", assoc(Y, M.right_action, "right")),
        first_failure("module units", unit()),
        first_failure("actions commute", commute())))


# ---------------------------------------------------------------- one-sided modules

@dataclass(frozen=True, eq=False)
class Module:
    """A one-sided module; ``action[p][m]`` is the action of basis element p on m."""

    alg: StructureAlgebra
    dim: int
    action: tuple
    side: str = "left"
    name: str = ""

    def act(self, x: Mapping, m: Mapping) -> dict:
        out: dict = {}
        for p, a in x.items():
            cols = self.action[p]
            for k, b in m.items():
                axpy(out, a * b, cols[k])
        return out

    def character(self) -> tuple:
        return tuple(sum((cols[m].get(m, ZERO) for m in range(self.dim)), ZERO)
                     for cols in self.action)


def check_module_axioms(M: Module) -> AxiomReport:
    A = M.alg

    def assoc():
        for p in range(A.dim):
            for q in range(A.dim):
                pq = A.mult[p][q]
                for m in range(M.dim):
                    e = {m: ONE}
                    lhs = M.act(pq, e)
                    if M.side == "left":
                        rhs = M.act({p: ONE}, M.act({q: ONE}, e))
                    else:
                        rhs = M.act({q: ONE}, M.act({p: ONE}, e))
                    if lhs != rhs:
                        yield f"{M.side} action not associative at ({A.labels[p]}, {A.labels[q]}, m{m})"
        yield None

    def unit():
        for m in range(M.dim):
            if M.act(A.unit, {m: ONE}) != {m: ONE}:
                yield f"unit acts nontrivially on m{m}"
        yield None

    return AxiomReport(M.name or "module", (first_failure("module associativity", assoc()),
                                            first_failure("module unit", unit())))


# ---------------------------------------------------------------- support signatures

@dataclass(frozen=True)
class SupportSignature:
    """Annihilator of a module inside the center of its (semisimple) acting algebra.

    ``shape`` records the center dimensions of the two acting algebras
    (the second is 1 for one-sided modules).
    """

    center_dim: int
    annihilator: Subspace
    shape: tuple = ()

    @property
    def support_rank(self) -> int:
        return self.center_dim - self.annihilator.dim

    def divides(self, other: "SupportSignature") -> bool:
        """True when self | p * other, i.e. supp(self) <= supp(other)."""
        _same_shape(self, other)
        return other.annihilator <= self.annihilator

    def to_json(self) -> dict:
        return {"center_dim": self.center_dim, "shape": list(self.shape),
                "annihilator": [[rat_str(a) for a in v] for v in self.annihilator.basis]}


def _same_shape(s, t):
    if s.shape != t.shape or s.center_dim != t.center_dim:
        raise ActionMismatch("signatures over different algebras cannot be compared")


def signature_from_central_traces(W: Sequence[Sequence], cx: CenterData, cy: CenterData) -> SupportSignature:
    """Kernel of the form (z, z') -> chi(z z') on Z(X) (x) Z(Y)."""
    na, nb = cx.dim, cy.dim
    rows = []
    for a1 in range(na):
        for b1 in range(nb):
            row = {}
            for a in range(na):
                ca = cx.consts[a][a1]
                for b in range(nb):
                    cb = cy.consts[b][b1]
                    s = ZERO
                    for a2, s1 in ca.items():
                        Wa = W[a2]
                        for b2, s2 in cb.items():
                            w = Wa[b2]
                            if w:
                                s += s1 * s2 * w
                    if s:
                        row[a * nb + b] = s
            rows.append(row)
    n = na * nb
    ann = Subspace.span(n, kernel_sparse(rows, n))
    return SupportSignature(n, ann, (na, nb))


def signature_from_character(alg: StructureAlgebra, chi: Sequence) -> SupportSignature:
    """Support signature of a one-sided module over a semisimple algebra from its character."""
    if not alg.semisimple:
        raise NotSemisimple(f"{alg.name or 'algebra'} is not semisimple")
    cd = alg.center_data
    W = [[sum((a * chi[k] for k, a in u.items()), ZERO)] for u in cd.basis]
    one = CenterData(({0: ONE},), (0,), (({0: ONE},),))
    return signature_from_central_traces(W, cd, one)


def support_signature(M: Bimodule) -> SupportSignature:
    for alg in (M.left_alg, M.right_alg):
        if not alg.semisimple:
            raise NotSemisimple(f"{alg.name or 'algebra'} is not semisimple")
    return signature_from_central_traces(M.central_traces(), M.left_alg.center_data,
                                         M.right_alg.center_data)


@dataclass(frozen=True)
class Similarity:
    similar: bool
    m_divides_n: bool
    n_divides_m: bool


def compare_signatures(s: SupportSignature, t: SupportSignature) -> Similarity:
    mn, nm = s.divides(t), t.divides(s)
    return Similarity(mn and nm, mn, nm)


def similar(M: Bimodule, N: Bimodule) -> Similarity:
    _require_same(M.left_alg, N.left_alg, "similarity")
    _require_same(M.right_alg, N.right_alg, "similarity")
    return compare_signatures(support_signature(M), support_signature(N))


# ---------------------------------------------------------------- free bases

@dataclass(frozen=True)
class FreeBasis:
    """Generators s_j of a module that is free over the left acting algebra B.

    ``coords[m][j]`` is the B-coefficient b_j(e_m) with e_m = sum_j b_j(e_m) s_j.
    """

    generators: tuple
    coords: tuple

    @property
    def rank(self) -> int:
        return len(self.generators)

    def decompose(self, v: Mapping) -> list:
        out = [dict() for _ in range(self.rank)]
        for m, a in v.items():
            for j, b in enumerate(self.coords[m]):
                axpy(out[j], a, b)
        return out


def find_free_basis(M: Bimodule, seed: int = 0, tries: int = 64) -> FreeBasis | None:
    """A basis of M as a free left module over ``M.left_alg``, or None if none is found."""
    B = M.left_alg
    if M.dim % B.dim:
        return None
    r = M.dim // B.dim

    def attempt(candidates):
        ech = Echelon(M.dim)
        chosen = []
        for s in candidates:
            trial = Echelon(M.dim)
            trial.rows = {k: dict(v) for k, v in ech.rows.items()}
            trial._occ = {k: set(v) for k, v in ech._occ.items()}
            if all(trial.add(M.act_left({p: ONE}, s)) for p in range(B.dim)):
                ech = trial
                chosen.append(s)
                if len(chosen) == r:
                    return chosen
        return None

    chosen = attempt({m: ONE} for m in range(M.dim))
    rng = random.Random(seed)
    t = 0
    while chosen is None and t < tries:
        t += 1
        chosen = attempt({m: rat(rng.randint(-2, 2)) for m in range(M.dim)} for _ in range(4 * r))
    if chosen is None:
        return None
    cols = [M.act_left({p: ONE}, s) for s in chosen for p in range(B.dim)]
    F = Matrix.from_sparse(cols, M.dim).transpose()
    Finv = inverse(F)
    coords = []
    for m in range(M.dim):
        per = []
        for j in range(r):
            per.append({p: Finv[j * B.dim + p, m] for p in range(B.dim) if Finv[j * B.dim + p, m]})
        coords.append(tuple(per))
    return FreeBasis(tuple(chosen), tuple(coords))


# ---------------------------------------------------------------- tensor products over B

@dataclass(frozen=True, eq=False)
class TensorProduct:
    """M (x)_B N as an X-Y bimodule together with the projection from M (x) N.

    ``project(m, n)`` maps the pure tensor of two sparse vectors to the
    quotient basis.  With ``method="quotient"`` the quotient basis is the
    complement of the pivot columns of the relation space, in order.  With
    ``method="free"`` it is (basis of M) x (free generators of N over B).
    """

    bimodule: Bimodule
    left: Bimodule
    right: Bimodule
    method: str
    _project_basis: Callable = field(repr=False)

    @property
    def dim(self) -> int:
        return self.bimodule.dim

    def project(self, m: Mapping, n: Mapping) -> dict:
        out: dict = {}
        for i, a in m.items():
            for j, b in n.items():
                axpy(out, a * b, self._project_basis(i, j))
        return out

    def projection_matrix(self) -> Matrix:
        cols = [self._project_basis(i, j) for i in range(self.left.dim) for j in range(self.right.dim)]
        return Matrix.from_sparse(cols, self.dim).transpose()


def tensor_over_sub(M: Bimodule, N: Bimodule, method: str = "quotient",
                    free_basis: FreeBasis | None = None) -> TensorProduct:
    _require_same(M.right_alg, N.left_alg, "tensor product")
    if method == "free":
        fb = free_basis or find_free_basis(N)
        if fb is None:
            raise AlgebraError("right factor is not free over the middle algebra")
        return _tensor_free(M, N, fb)
    if method != "quotient":
        raise ValueError(f"unknown method {method!r}")
    return _tensor_quotient(M, N)


def _tensor_quotient(M: Bimodule, N: Bimodule) -> TensorProduct:
    B = M.right_alg
    dn = N.dim
    ncols = M.dim * dn
    ech = Echelon(ncols)
    for g in B.generators:
        Rg = M.right_action[g]
        Lg = N.left_action[g]
        for m in range(M.dim):
            mg = Rg[m]
            for n in range(dn):
                rel = {}
                for i, a in mg.items():
                    axpy(rel, a, {i * dn + n: ONE})
                for j, a in Lg[n].items():
                    axpy(rel, -a, {m * dn + j: ONE})
                if rel:
                    ech.add(rel)
    free = [c for c in range(ncols) if c not in ech.rows]
    pos = {c: t for t, c in enumerate(free)}

    def proj(i, j):
        cls = ech.complement_projection(i * dn + j)
        return {pos[c]: a for c, a in cls.items()}

    def image(v):
        out: dict = {}
        for c, a in v.items():
            axpy(out, a, proj(*divmod(c, dn)))
        return out

    left = []
    for p in range(M.left_alg.dim):
        cols = []
        for c in free:
            m, n = divmod(c, dn)
            cols.append(image({i * dn + n: a for i, a in M.left_action[p][m].items()}))
        left.append(tuple(cols))
    right = []
    for q in range(N.right_alg.dim):
        cols = []
        for c in free:
            m, n = divmod(c, dn)
            cols.append(image({m * dn + j: a for j, a in N.right_action[q][n].items()}))
        right.append(tuple(cols))
    bm = Bimodule(M.left_alg, N.right_alg, len(free), tuple(left), tuple(right),
                  f"{M.name}(x)_B{N.name}")
    return TensorProduct(bm, M, N, "quotient", proj)


def _tensor_free(M: Bimodule, N: Bimodule, fb: FreeBasis) -> TensorProduct:
    r = fb.rank
    Rm = M.right_action

    def proj(i, j):
        out = {}
        for t, b in enumerate(fb.coords[j]):
            for q, a in b.items():
                for k, c in Rm[q][i].items():
                    axpy(out, a * c, {k * r + t: ONE})
        return out

    def proj_vec(i, nvec):
        out = {}
        for j, a in nvec.items():
            axpy(out, a, proj(i, j))
        return out

    left = []
    for p in range(M.left_alg.dim):
        cols = []
        for i in range(M.dim):
            xm = M.left_action[p][i]
            for t in range(r):
                cols.append({k * r + t: a for k, a in xm.items()})
        left.append(tuple(cols))
    right = []
    for q in range(N.right_alg.dim):
        cols = []
        for i in range(M.dim):
            for t in range(r):
                sy = N.act_right(fb.generators[t], {q: ONE})
                cols.append(proj_vec(i, sy))
        right.append(tuple(cols))
    bm = Bimodule(M.left_alg, N.right_alg, M.dim * r, tuple(left), tuple(right),
                  f"{M.name}(x)_B{N.name}")
    return TensorProduct(bm, M, N, "free", proj)


def tensor_power(emb: SubalgebraEmbedding, n: int, method: str = "quotient") -> Bimodule:
    """A^{(x)_B n} as an A-A bimodule (n >= 1)."""
    if n < 1:
        raise ValueError("tensor powers start at n = 1; the zeroth power is B itself")
    A = Bimodule.regular(emb.amb)
    BA = A.restrict(left=emb)
    fb = find_free_basis(BA) if method == "free" else None
    P = A
    for _ in range(n - 1):
        P = tensor_over_sub(P.restrict(right=emb), BA, method, fb).bimodule
    return P
