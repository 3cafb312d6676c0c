"""Exact integer model of the 7-dimensional fundamental representation of G2.

The weight basis is indexed by the seven weights 0, ±A, ±B, ±(A+B) of the
short-root lattice (A, B short roots at 120 degrees).  The two generator
pairs below satisfy the Chevalley relations; the generated Lie algebra has
dimension 14 (checked in the test suite), so brackets of the generators give
honest root vectors for all six positive roots.

This model decides, by exact linear algebra over Q, which pairs
(semisimple eigenvalue pattern, unipotent Jordan blocks per eigenvalue) are
realized by elements of G2: the unipotent part of an element with semisimple
part s lies in the centralizer of s, whose unipotent variety is swept out by
exponentials of sums of root vectors for the roots vanishing on s.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

# weights as (m, n) = m*A + n*B
WEIGHTS = [(1, 1), (0, 1), (1, 0), (0, 0), (-1, 0), (0, -1), (-1, -1)]
_IDX = {w: i for i, w in enumerate(WEIGHTS)}

# positive roots of G2 in (A, B)-coordinates: three short, three long
POSITIVE_ROOTS = [(1, 0), (0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)]


def _mk(moves):
    M = [[Fraction(0)] * 7 for _ in range(7)]
    for src, dst, c in moves:
        M[_IDX[dst]][_IDX[src]] = Fraction(c)
    return M


def _mmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(7)) for j in range(7)]
            for i in range(7)]


def _bracket(X, Y):
    XY, YX = _mmul(X, Y), _mmul(Y, X)
    return [[XY[i][j] - YX[i][j] for j in range(7)] for i in range(7)]


def _is_zero(M):
    return all(x == 0 for row in M for x in row)


_x_a = _mk([((-1, 0), (0, 0), 1), ((0, 0), (1, 0), 2),
            ((0, 1), (1, 1), 1), ((-1, -1), (0, -1), 1)])
_f_a = _mk([((1, 0), (0, 0), 1), ((0, 0), (-1, 0), 2),
            ((1, 1), (0, 1), 1), ((0, -1), (-1, -1), 1)])
_x_b = _mk([((1, 0), (0, 1), 1), ((0, -1), (-1, 0), 1)])
_f_b = _mk([((0, 1), (1, 0), 1), ((-1, 0), (0, -1), 1)])


@lru_cache(maxsize=1)
def root_vectors() -> dict[tuple[int, int], list[list[Fraction]]]:
    """Nilpotent matrices e_gamma for all six positive roots."""
    e = {(1, 0): _x_a, (-1, 1): _x_b}
    e[(0, 1)] = _bracket(_x_b, _x_a)
    e[(1, 1)] = _bracket(_x_a, e[(0, 1)])
    e[(2, 1)] = _bracket(_x_a, e[(1, 1)])
    e[(1, 2)] = _bracket(e[(0, 1)], e[(1, 1)])
    for gamma, mat in e.items():
        assert not _is_zero(mat), f"vanishing root vector {gamma}"
        # each entry moves weight mu to mu + gamma
        for i in range(7):
            for j in range(7):
                if mat[i][j] != 0:
                    mi, ni = WEIGHTS[i]
                    mj, nj = WEIGHTS[j]
                    assert (mi - mj, ni - nj) == gamma
    return e


def generators():
    return _x_a, _f_a, _x_b, _f_b


def _rank(M) -> int:
    rows = [row[:] for row in M]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _jordan_partition(U) -> tuple[int, ...]:
    """Jordan type of a unipotent matrix over Q."""
    n = len(U)
    N = [[U[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    ranks = [n]
    P = [row[:] for row in N]
    while True:
        r = _rank(P)
        ranks.append(r)
        if r == 0:
            break
        P = _mmul_rect(P, N)
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    part = []
    for k in range(1, len(ranks)):
        ge_k = ranks[k - 1] - ranks[k]
        ge_k1 = ranks[k] - ranks[k + 1] if k + 1 < len(ranks) else 0
        part.extend([k] * (ge_k - ge_k1))
    return tuple(sorted(part, reverse=True))


def _mmul_rect(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _exp_nilpotent(N):
    n = len(N)
    out = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    term = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        term = _mmul_rect(term, N)
        term = [[x / k for x in row] for row in term]
        if all(x == 0 for row in term for x in row):
            break
        out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, term)]
        term = [[x * k for x in row] for row in term]  # restore N^k for next step
    return out


Datum = tuple[tuple[Fraction, tuple[int, ...]], ...]
"""Eigenvalue datum: sorted ((residue, jordan partition), ...)."""


@lru_cache(maxsize=None)
def achievable_data(a: Fraction, b: Fraction) -> frozenset[Datum]:
    """All (eigenvalue residue -> Jordan partition) data of G2 elements whose
    semisimple part has the weight values induced by (a, b).

    The unipotent part ranges over exponentials of sums of root vectors for
    the roots vanishing on the semisimple part; this sweeps every unipotent
    class of the centralizer.
    """
    a, b = Fraction(a) % 1, Fraction(b) % 1
    evec = root_vectors()
    vanishing = [g for g in POSITIVE_ROOTS if (g[0] * a + g[1] * b) % 1 == 0]
    values = [(m * a + n * b) % 1 for (m, n) in WEIGHTS]
    groups: dict[Fraction, list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    out = set()
    for size in range(len(vanishing) + 1):
        for S in combinations(vanishing, size):
            N = [[Fraction(0)] * 7 for _ in range(7)]
            for g in S:
                E = evec[g]
                N = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(N, E)]
            U = _exp_nilpotent(N)
            datum = []
            for v, idxs in groups.items():
                sub = [[U[i][j] for j in idxs] for i in idxs]
                datum.append((v, _jordan_partition(sub)))
            out.add(tuple(sorted(datum)))
    return frozenset(out)


def lie_closure_dimension() -> int:
    """Dimension of the Lie algebra generated by the four generators."""
    gens = [_x_a, _f_a, _x_b, _f_b]

    def flat(M):
        return [x for row in M for x in row]

    basis: list[list[Fraction]] = []
    piv: list[int] = []

    def add(vec) -> bool:
        v = vec[:]
        for p, bv in zip(piv, basis):
            if v[p] != 0:
                c = v[p] / bv[p]
                v = [x - c * y for x, y in zip(v, bv)]
        for i, x in enumerate(v):
            if x != 0:
                basis.append(v)
                piv.append(i)
                return True
        return False

    mats = [g for g in gens]
    for g in gens:
        add(flat(g))
    changed = True
    while changed:
        changed = False
        for X in list(mats):
            for Y in list(mats):
                Z = _bracket(X, Y)
                fz = flat(Z)
                if any(fz) and add(fz):
                    mats.append(Z)
                    changed = True
    return len(basis)
