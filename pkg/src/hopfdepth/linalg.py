"""Exact linear algebra over the rationals.

Scalars are ``gmpy2.mpq``.  Vectors are either dense tuples or sparse
``{index: mpq}`` dicts (zero entries are never stored).  Row reduction is
done incrementally on sparse rows, which keeps the structured systems that
show up for group-like bases (two nonzero entries per relation) cheap.

An optional modular fast path (see :func:`fast_prime`) reduces a matrix
modulo a random word-sized prime with numpy and then certifies the answer
by exact substitution.  It never changes a result; a failed certificate
just falls back to exact elimination.
"""
from __future__ import annotations

import contextvars
import random
import re
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import gmpy2
import numpy as np
from gmpy2 import mpq

Rational = type(mpq(0))
SparseVec = dict

ZERO = mpq(0)
ONE = mpq(1)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class LinAlgError(ValueError):
    pass


def rat(value) -> Rational:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions, mpq, and strings of the form ``"p"`` or ``"p/q"``.
    Floats are rejected: nothing in this package may round.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if not m:
            raise ValueError(f"not a rational literal: {value!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return mpq(int(m.group(1)), den)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def rat_str(q) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- sparse vectors

def axpy(y: dict, a, x: Mapping) -> dict:
    """In place ``y += a * x``; returns ``y``."""
    if not a:
        return y
    for k, v in x.items():
        s = y.get(k, ZERO) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)
    return y


def vadd(*vs: Mapping) -> dict:
    out: dict = {}
    for v in vs:
        axpy(out, ONE, v)
    return out


def vscale(x: Mapping, a) -> dict:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def vsub(x: Mapping, y: Mapping) -> dict:
    return axpy(dict(x), -ONE, y)


def dense(x: Mapping, n: int) -> tuple:
    out = [ZERO] * n
    for k, v in x.items():
        out[k] = v
    return tuple(out)


def sparse(seq: Sequence) -> dict:
    return {i: rat(v) for i, v in enumerate(seq) if v}


def linear_image(columns: Sequence[Mapping], x: Mapping) -> dict:
    """Apply the linear map with the given column images to ``x``."""
    out: dict = {}
    for k, a in x.items():
        axpy(out, a, columns[k])
    return out


# ---------------------------------------------------------------- echelon form

class Echelon:
    """Incrementally maintained reduced row echelon form of a row space.

    Every stored row is fully reduced against every other one, so the set
    of rows is the unique RREF basis of the span at all times.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}
        # column -> pivots of rows holding a nonzero entry in that (non-pivot) column
        self._occ: dict[int, set] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> dict:
        v = dict(v)
        hits = [c for c in v if c in self.rows]
        for c in hits:
            a = v.get(c)
            if a:
                axpy(v, -a, self.rows[c])
        return v

    def add(self, v: Mapping) -> bool:
        """Add a vector to the span; return True if it was independent."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = ONE / v[p]
        if inv != ONE:
            v = {k: a * inv for k, a in v.items()}
        for q in tuple(self._occ.pop(p, ())):
            row = self.rows[q]
            a = row[p]
            for k in v:
                if k != p:
                    had = k in row
                    s = row.get(k, ZERO) - a * v[k]
                    if s:
                        row[k] = s
                        if not had:
                            self._occ.setdefault(k, set()).add(q)
                    elif had:
                        del row[k]
                        self._occ[k].discard(q)
            del row[p]
        self.rows[p] = v
        for k in v:
            if k != p:
                self._occ.setdefault(k, set()).add(p)
        return True

    def extend(self, vs: Iterable[Mapping]) -> "Echelon":
        for v in vs:
            self.add(v)
        return self

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def coordinates(self, v: Mapping) -> dict | None:
        """Coordinates of ``v`` in the RREF basis, keyed by pivot; None if v is outside."""
        if not self.contains(v):
            return None
        return {p: v[p] for p in v if p in self.rows}

    def kernel_basis(self) -> list[dict]:
        """Basis of the null space of the row space (as column vectors)."""
        out = []
        free = [c for c in range(self.ncols) if c not in self.rows]
        for f in free:
            x = {f: ONE}
            for q in self._occ.get(f, ()):
                x[q] = -self.rows[q][f]
            out.append(x)
        return out

    def complement_projection(self, c: int) -> dict:
        """Class of the unit vector e_c modulo the row space, in terms of free columns."""
        if c not in self.rows:
            return {c: ONE}
        return {k: -a for k, a in self.rows[c].items() if k != c}


# ---------------------------------------------------------------- modular fast path

_FAST: contextvars.ContextVar = contextvars.ContextVar("hopfdepth_fast_prime", default=None)


@contextmanager
def fast_prime(seed: int = 0, enabled: bool = True):
    """Enable certified mod-p elimination inside the block."""
    token = _FAST.set(random.Random(seed) if enabled else None)
    try:
        yield
    finally:
        _FAST.reset(token)


def fast_prime_enabled() -> bool:
    return _FAST.get() is not None


def _random_prime(rng: random.Random) -> int:
    return int(gmpy2.next_prime(rng.randrange(2**30, 2**31 - 2**20)))


def _mod_matrix(rows: Sequence[Mapping], ncols: int, p: int) -> np.ndarray | None:
    M = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, a in row.items():
            d = int(a.denominator) % p
            if d == 0:
                return None
            M[i, j] = (int(a.numerator) % p) * pow(d, -1, p) % p
    return M


def _rref_mod(M: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """Pivot columns and the original indices of an independent row set, mod p."""
    M = M.copy()
    m, n = M.shape
    order = np.arange(m)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
            order[[r, k]] = order[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        below = np.nonzero(M[r + 1:, c])[0] + r + 1
        if below.size:
            f = M[below, c].reshape(-1, 1)
            M[below] = (M[below] - f * M[r]) % p
        pivots.append(c)
        r += 1
    return pivots, [int(i) for i in order[:r]]


def _fast_kernel(rows: Sequence[Mapping], ncols: int) -> list[dict] | None:
    rng = _FAST.get()
    if rng is None or not rows or ncols == 0:
        return None
    p = _random_prime(rng)
    M = _mod_matrix(rows, ncols, p)
    if M is None:
        return None
    pivots, indep = _rref_mod(M, p)
    pset = set(pivots)
    free = [c for c in range(ncols) if c not in pset]
    if not free:
        return []
    # exact solve on the square pivot block, one right-hand side per free column
    pos = {c: i for i, c in enumerate(pivots)}
    r = len(pivots)
    aug = Echelon(r + len(free))
    for i in indep:
        row = rows[i]
        v = {}
        for j, a in row.items():
            if j in pos:
                v[pos[j]] = a
            else:
                v[r + free.index(j)] = a
        aug.add(v)
    if aug.pivots()[:r] != list(range(r)) or aug.rank != r:
        return None
    out = []
    for t, f in enumerate(free):
        x = {f: ONE}
        for i in range(r):
            a = aug.rows[i].get(r + t)
            if a:
                x[pivots[i]] = -a
        out.append(x)
    # certificate: every candidate really is in the kernel
    for x in out:
        for row in rows:
            s = ZERO
            for j, a in row.items():
                b = x.get(j)
                if b:
                    s += a * b
            if s:
                return None
    return out


def kernel_sparse(rows: Sequence[Mapping], ncols: int) -> list[dict]:
    """Null space basis (canonical RREF) of the matrix with the given sparse rows."""
    vecs = _fast_kernel(rows, ncols)
    if vecs is None:
        vecs = Echelon(ncols).extend(rows).kernel_basis()
    return Echelon(ncols).extend(vecs).basis()


def rank_sparse(rows: Sequence[Mapping], ncols: int) -> int:
    vecs = _fast_kernel(rows, ncols)
    if vecs is not None:
        return ncols - len(vecs)
    return Echelon(ncols).extend(rows).rank


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix."""

    nrows: int
    ncols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [tuple(rat(a) for a in r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise LinAlgError("ragged matrix")
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_sparse(cls, rows: Sequence[Mapping], ncols: int) -> "Matrix":
        return cls(len(rows), ncols, tuple(dense(r, ncols) for r in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls(m, n, tuple((ZERO,) * n for _ in range(m)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def sparse_rows(self) -> list[dict]:
        return [{j: a for j, a in enumerate(r) if a} for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, tuple(zip(*self.entries)) if self.nrows else
                      tuple(() for _ in range(self.ncols)))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise LinAlgError("shape mismatch")
            cols = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
            out = []
            for r in self.entries:
                out.append(tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols))
            return Matrix(self.nrows, other.ncols, tuple(out))
        vec = [rat(a) for a in other]
        if len(vec) != self.ncols:
            raise LinAlgError("shape mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec) if a and b), ZERO) for r in self.entries)

    def to_strings(self) -> list[list[str]]:
        return [[rat_str(a) for a in r] for r in self.entries]


def rank(A: Matrix) -> int:
    return rank_sparse(A.sparse_rows(), A.ncols)


def kernel(A: Matrix) -> "Subspace":
    return Subspace.span(A.ncols, kernel_sparse(A.sparse_rows(), A.ncols))


def solve(A: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``A x = b`` (free variables set to zero), or None."""
    n = A.ncols
    b = [rat(x) for x in b]
    if len(b) != A.nrows:
        raise LinAlgError("shape mismatch")
    ech = Echelon(n + 1)
    for r, bi in zip(A.sparse_rows(), b):
        v = dict(r)
        if bi:
            v[n] = bi
        ech.add(v)
    if n in ech.rows:
        return None
    x = [ZERO] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, ZERO)
    return tuple(x)


def inverse(A: Matrix) -> Matrix:
    if A.nrows != A.ncols:
        raise LinAlgError("inverse of a non-square matrix")
    n = A.nrows
    ech = Echelon(2 * n)
    for i, r in enumerate(A.entries):
        v = {j: a for j, a in enumerate(r) if a}
        v[n + i] = ONE
        ech.add(v)
    if ech.pivots()[:n] != list(range(n)):
        raise LinAlgError("matrix is singular")
    rows = [tuple(ech.rows[i].get(n + j, ZERO) for j in range(n)) for i in range(n)]
    return Matrix(n, n, tuple(rows))


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim, stored by its canonical RREF basis.

    Because the basis is canonical, ``==`` is subspace equality.
    """

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.add(v if isinstance(v, Mapping) else sparse(v))
        return cls(ambient_dim, tuple(dense(r, ambient_dim) for r in ech.basis()))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(i for i, a in enumerate(v) if a) for v in self.basis]

    def sparse_basis(self) -> list[dict]:
        return [sparse(v) for v in self.basis]

    def echelon(self) -> Echelon:
        return Echelon(self.ambient_dim).extend(self.sparse_basis())

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            ech = self.echelon()
            return all(ech.contains(w) for w in v.sparse_basis())
        v = v if isinstance(v, Mapping) else sparse(v)
        return self.echelon().contains(v)

    def coordinates(self, v) -> tuple | None:
        v = v if isinstance(v, Mapping) else sparse(v)
        if not self.contains(v):
            return None
        return tuple(v.get(p, ZERO) for p in self.pivots())

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.ambient_dim, self.sparse_basis() + other.sparse_basis())

    def orthogonal(self) -> "Subspace":
        """Annihilator under the standard dot product."""
        n = self.ambient_dim
        return Subspace.span(n, kernel_sparse(self.sparse_basis(), n))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return (self.orthogonal() + other.orthogonal()).orthogonal()

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return other.contains(self)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise LinAlgError("subspaces live in different ambient spaces")


@dataclass(frozen=True)
class SubspaceOps:
    sum: Subspace
    intersection: Subspace
    equal: bool
    u_in_v: bool
    v_in_u: bool


def subspace_ops(U: Subspace, V: Subspace) -> SubspaceOps:
    return SubspaceOps(U + V, U.intersection(V), U == V, U <= V, V <= U)
