from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from hopfdepth.linalg import (Echelon, LinAlgError, Matrix, Subspace, fast_prime,
                              fast_prime_enabled, inverse, kernel, kernel_sparse, rank, rat,
                              rat_str, solve, subspace_ops)

small = st.integers(-4, 4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def to_sympy(rows):
    return sp.Matrix(rows)


# ---------------------------------------------------------------- scalars

@pytest.mark.parametrize("value, text", [(3, "3"), ("-6/4", "-3/2"), (Fraction(1, 3), "1/3"),
                                         ("0/5", "0"), (" 7 ", "7")])
def test_rat_roundtrip(value, text):
    assert rat_str(rat(value)) == text
    assert rat(rat_str(rat(value))) == rat(value)


@pytest.mark.parametrize("bad", [0.5, True, "1.5", "x", None])
def test_rat_rejects(bad):
    with pytest.raises((TypeError, ValueError)):
        rat(bad)


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat("1/0")


# ---------------------------------------------------------------- rank, kernel, solve

@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(Matrix.from_rows(rows)) == to_sympy(rows).rank()


@given(matrices())
def test_kernel_is_null_space(rows):
    A = Matrix.from_rows(rows)
    K = kernel(A)
    assert K.dim == len(rows[0]) - to_sympy(rows).rank()
    for v in K.basis:
        assert all(sum(a * x for a, x in zip(r, v)) == 0 for r in rows)
    # same subspace as sympy's nullspace
    ref = Subspace.span(A.ncols, [[Fraction(int(x.p), int(x.q)) for x in col]
                                  for col in to_sympy(rows).nullspace()])
    assert K == ref


@given(matrices(), st.lists(small, min_size=6, max_size=6))
def test_solve_consistent(rows, x0):
    A = Matrix.from_rows(rows)
    x0 = x0[:A.ncols]
    b = [sum(a * x for a, x in zip(r, x0)) for r in rows]
    x = solve(A, b)
    assert x is not None
    assert [sum(a * xi for a, xi in zip(r, x)) for r in rows] == [rat(v) for v in b]


def test_solve_inconsistent():
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_inverse(rows):
    A = Matrix.from_rows(rows)
    if to_sympy(rows).det() == 0:
        with pytest.raises(LinAlgError):
            inverse(A)
    else:
        assert A @ inverse(A) == Matrix.identity(A.nrows)


def test_echelon_incremental():
    E = Echelon(3)
    assert E.add({0: rat(1), 1: rat(2)})
    assert not E.add({0: rat(2), 1: rat(4)})
    assert E.add({2: rat(1)})
    assert E.rank == 2 and E.pivots() == [0, 2]
    assert E.contains({0: rat(3), 1: rat(6), 2: rat(-1)})
    assert E.kernel_basis() == [{1: rat(1), 0: rat(-2)}]


# ---------------------------------------------------------------- fast path

@given(matrices(8, 8))
def test_fast_prime_kernel_agrees(rows):
    sparse_rows = [{j: rat(a) for j, a in enumerate(r) if a} for r in rows]
    n = len(rows[0])
    exact = Subspace.span(n, kernel_sparse(sparse_rows, n))
    with fast_prime(seed=7):
        assert fast_prime_enabled()
        fast = Subspace.span(n, kernel_sparse(sparse_rows, n))
    assert not fast_prime_enabled()
    assert fast == exact


# ---------------------------------------------------------------- subspaces

vectors = st.lists(st.lists(small, min_size=4, max_size=4), max_size=4)


@given(vectors, vectors)
def test_subspace_lattice(us, vs):
    U, V = Subspace.span(4, us), Subspace.span(4, vs)
    ops = subspace_ops(U, V)
    assert ops.sum.dim + ops.intersection.dim == U.dim + V.dim
    assert ops.intersection <= U and ops.intersection <= V
    assert U <= ops.sum and V <= ops.sum
    assert ops.equal == (ops.u_in_v and ops.v_in_u)


@given(vectors)
def test_subspace_canonical(us):
    U = Subspace.span(4, us)
    assert Subspace.span(4, list(reversed(us)) + us) == U
    assert U.orthogonal().orthogonal() == U
    assert U.orthogonal().dim == 4 - U.dim


def test_subspace_ambient_mismatch():
    with pytest.raises(LinAlgError):
        Subspace.full(2) + Subspace.full(3)
