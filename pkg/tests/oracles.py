"""Independent reference computations, written against sympy only.

Nothing here imports the package's linear algebra: the kC2 bimodule oracle
decomposes a bimodule by explicit idempotents of k[C2 x C2] and dense sympy
ranks.
"""
from __future__ import annotations

import random
from itertools import product

import sympy as sp

# the four characters of C2 x C2 = <gL> x <gR>
SIGNS = tuple(product((1, -1), repeat=2))


def random_unimodular(n: int, rng: random.Random) -> sp.Matrix:
    """Product of random elementary integer matrices (determinant +-1)."""
    P = sp.eye(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            E = sp.eye(n)
            E[i, j] = rng.choice((-2, -1, 1, 2))
            P = P * E
    if n > 1:
        perm = list(range(n))
        rng.shuffle(perm)
        P = P.extract(list(range(n)), perm)
    return P


def kc2_fixture(mults: tuple, rng: random.Random):
    """Dense actions of gL and gR for the bimodule with the given multiplicities,
    disguised by a random change of basis.  ``mults`` is indexed like SIGNS."""
    diag_l, diag_r = [], []
    for (sl, sr), m in zip(SIGNS, mults):
        diag_l += [sl] * m
        diag_r += [sr] * m
    n = len(diag_l)
    if n == 0:
        return sp.zeros(0, 0), sp.zeros(0, 0)
    P = random_unimodular(n, rng)
    Pi = P.inv()
    return P * sp.diag(*diag_l) * Pi, P * sp.diag(*diag_r) * Pi


def kc2_multiplicities(L: sp.Matrix, R: sp.Matrix) -> tuple:
    """Multiplicity of each simple k[C2 x C2]-module, by ranks of the idempotents."""
    n = L.shape[0]
    if n == 0:
        return (0, 0, 0, 0)
    I = sp.eye(n)
    out = []
    for sl, sr in SIGNS:
        e = (I + sl * L) * (I + sr * R) / 4
        out.append(e.rank())
    assert sum(out) == n
    return tuple(out)


def kc2_similar(a: tuple, b: tuple) -> bool:
    """Similar iff the same simple modules occur."""
    return [m > 0 for m in a] == [m > 0 for m in b]


def kc2_divides(a: tuple, b: tuple) -> bool:
    """a | p b iff every simple summand of a occurs in b."""
    return all(y > 0 for x, y in zip(a, b) if x > 0)


def brute_double_of_group(names, table):
    """Structure constants of D(kG) on the basis p_x >< g, index x*|G| + g.

    (p_x >< g)(p_y >< h) = delta(x, g y g^-1) p_x >< gh, and the coproduct is
    taken from (kG)*^cop: Delta(p_x >< g) = sum over uv = x of
    (p_v >< g) (x) (p_u >< g).
    """
    n = len(names)
    inv = [next(j for j in range(n) if table[i][j] == 0) for i in range(n)]

    def idx(x, g):
        return x * n + g

    mult = {}
    for x, g, y, h in product(range(n), repeat=4):
        if x == table[table[g][y]][inv[g]]:
            mult[(idx(x, g), idx(y, h))] = {idx(x, table[g][h]): 1}
    comult = {}
    for x, g in product(range(n), repeat=2):
        d = {}
        for u in range(n):
            v = table[inv[u]][x]      # u v = x
            d[(idx(v, g), idx(u, g))] = 1
        comult[idx(x, g)] = d
    return mult, comult
