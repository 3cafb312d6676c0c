"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately separate from the library's own code paths:
Jordan types come from explicit matrices over Q, invariants from solving
centralizer equations, and the tensor-product oracle from coset-level
character bookkeeping on the common cover.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from wildmono.gf import field, root_of_unity, splitting_degree
from wildmono.laurent import LaurentTail
from wildmono.tame import TameAtom, TameChar, TameRep


# ---------------------------------------------------------------------------
# exact linear algebra over Q

def mat_rank(rows) -> int:
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
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
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def mat_mul(X, Y):
    n, k, m = len(X), len(Y), len(Y[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        Xi = X[i]
        for t in range(k):
            if Xi[t]:
                Yt = Y[t]
                for j in range(m):
                    out[i][j] += Xi[t] * Yt[j]
    return out


def jordan_block(n: int):
    """Unipotent single Jordan block of size n."""
    return [[Fraction(1 if i == j else 0) + Fraction(1 if j == i + 1 else 0)
             for j in range(n)] for i in range(n)]


def kron(A, B):
    na, nb = len(A), len(B)
    out = [[Fraction(0)] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if A[i][j]:
                for k in range(nb):
                    for l in range(nb):
                        out[i * nb + k][j * nb + l] = A[i][j] * B[k][l]
    return out


def jordan_type(U) -> tuple[int, ...]:
    """Jordan partition of a unipotent matrix via ranks of (U - 1)^k."""
    n = len(U)
    N = [[U[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    ranks = [n]
    P = N
    while True:
        r = mat_rank(P)
        ranks.append(r)
        if r == 0:
            break
        P = mat_mul(P, N)
    part = []
    for k in range(1, len(ranks)):
        ge_k = ranks[k - 1] - ranks[k]
        ge_next = ranks[k] - ranks[k + 1] if k + 1 < len(ranks) else 0
        part.extend([k] * (ge_k - ge_next))
    return tuple(sorted(part, reverse=True))


def tensor_jordan_type(n: int, m: int) -> tuple[int, ...]:
    """Jordan type of U(n) (x) U(m), by explicit Kronecker product."""
    return jordan_type(kron(jordan_block(n), jordan_block(m)))


def centralizer_dimension(partition) -> int:
    """dim of {X : XU = UX} for a unipotent U of the given Jordan type,
    by solving the linear system exactly."""
    n = sum(partition)
    U = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for part in partition:
        blk = jordan_block(part)
        for i in range(part):
            for j in range(part):
                U[pos + i][pos + j] = blk[i][j]
        pos += part
    # unknowns X[i][j]; equations (XU - UX)[i][j] = 0
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += U[k][j]      # (XU)[i][j]
                row[k * n + j] -= U[i][k]      # (UX)[i][j]
            rows.append(row)
    return n * n - mat_rank(rows)


# ---------------------------------------------------------------------------
# Mackey tensor oracle: conjugate-character bookkeeping over the common cover

def tensor_atoms_oracle(p, atom1, atom2):
    """Canonical atoms of atom1 (x) atom2 via restriction to the common
    cover, orbit grouping, and re-induction — no use of the library's
    double-coset formula.

    Each input atom [r](phi, a, n) restricts to the degree-N cover
    (N = lcm(r1, r2)) as the conjugates phi((zeta_N^k u)^{N/r}) with tame
    residue a*N/r, each Jordan factor surviving.  The tensor is the pairwise
    sum; grouping the characters into mu_N-orbits and splitting the
    re-induced tame part recovers the atom decomposition.
    """
    r1, r2 = atom1.ram, atom2.ram
    N = lcm(r1, r2)
    k1, k2 = N // r1, N // r2
    amb = splitting_degree(N, p)
    for _, c in atom1.tail.terms + atom2.tail.terms:
        amb = lcm(amb, c.field.m)
    zeta = root_of_unity(N, p, ambient=amb) if N > 1 else field(p, 1).one()

    def conjugates(tail, k, count):
        # tail(zeta^j u)^... : inflate to the N-cover then rotate
        base = tail.inflate(k)
        out = []
        cur = base
        for _ in range(count):
            out.append(cur)
            cur = cur.rotate(zeta)
        return out

    left = conjugates(atom1.tail, k1, r1)
    right = conjugates(atom2.tail, k2, r2)
    # left list index i corresponds to rotation zeta^i; it repeats with
    # period r1 along the full mu_N-orbit, likewise right with period r2
    char_res = (Fraction(atom1.char.residue * k1) +
                Fraction(atom2.char.residue * k2)) % 1
    jordan_parts = tensor_jordan_type(atom1.jordan, atom2.jordan)

    sums: dict = {}
    for i in range(r1):
        for j in range(r2):
            t = left[i] + right[j]
            sums[t.key()] = sums.get(t.key(), (t, 0))[0], \
                sums.get(t.key(), (t, 0))[1] + 1
    # group into mu_N rotation orbits
    orbits = []
    seen = set()
    for key, (tail, count) in sums.items():
        if key in seen:
            continue
        orbit = []
        cur = tail
        for _ in range(N):
            k = cur.key()
            if k not in seen:
                seen.add(k)
                orbit.append((cur, sums.get(k, (cur, 0))[1]))
            cur = cur.rotate(zeta)
        orbits.append(orbit)

    atoms = []
    for orbit in orbits:
        counts = {c for _, c in orbit}
        assert len(counts) == 1, "orbit multiplicities must be uniform"
        count = counts.pop()
        size = len(orbit)
        stab = N // size
        assert count % stab == 0, "count must be a multiple of the stabilizer"
        copies = count // stab
        tail = min((t for t, _ in orbit), key=LaurentTail.key)
        descended = tail.deflate(stab) if stab > 1 else tail
        from wildmono.laurent import as_reduce, orbit_minimal
        descended = orbit_minimal(as_reduce(descended), size)
        for _ in range(copies):
            for blk in jordan_parts:
                for j in range(stab):
                    res = (Fraction(char_res + j, stab)) % 1
                    atoms.append((size, descended.key(), res, blk))
    return sorted(atoms)
