import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from oracles import tensor_atoms_oracle
from wildmono.gf import field
from wildmono.laurent import LaurentTail, orbit_tails
from wildmono.tame import TameAtom, TameChar, TameRep
from wildmono.elementary import (ElementaryAtom, LocalRep, ModelError,
                                 canonicalize, check_model_validity,
                                 determinant, dual, formal_monodromy,
                                 invariant_dim, is_isomorphic, is_selfdual,
                                 tame_local, tensor, torus_data, wild_atom)

P = 13


def tail(coeffs):
    return LaurentTail.from_ints(P, coeffs)


# ---------------------------------------------------------------------------
# canonical forms

def test_canonicalize_descent_example():
    rep = wild_atom(P, 2, {2: 5})
    assert len(rep.atoms) == 2
    assert all(a.ram == 1 and a.tail == tail({1: 5}) for a in rep.atoms)
    assert sorted(a.char.residue for a in rep.atoms) == [Fr(0), Fr(1, 2)]


def test_canonicalize_tame_storage():
    rep = canonicalize(P, 1, LaurentTail(P), TameRep.of((0, 3)))
    assert len(rep.atoms) == 1 and not rep.atoms[0].is_wild()
    # induced tame data is eagerly decomposed to covering degree 1
    rep2 = canonicalize(P, 6, LaurentTail(P), TameRep.of((0, 1)))
    assert all(a.ram == 1 for a in rep2.atoms)
    assert sorted(a.char.residue for a in rep2.atoms) == \
        [Fr(0), Fr(1, 6), Fr(1, 3), Fr(1, 2), Fr(2, 3), Fr(5, 6)]


def test_canonicalize_conjugation_invariance():
    assert wild_atom(P, 2, {1: 5}) == wild_atom(P, 2, {1: -5})
    a = wild_atom(P, 6, {1: 3})
    zeta = field(P, 1).elem(4)  # a primitive 6th root
    rotated = canonicalize(P, 6, a.atoms[0].tail.rotate(zeta),
                           TameRep.of((0, 1)))
    assert rotated == a


def test_canonicalize_idempotent():
    rep = wild_atom(P, 6, {1: 2}, char=Fr(1, 3))
    atom = rep.atoms[0]
    again = canonicalize(P, atom.ram, atom.tail,
                         TameRep([TameAtom(atom.char, atom.jordan)]))
    assert again == rep


def test_canonicalize_rejects_p_divisible_cover():
    with pytest.raises(ModelError):
        canonicalize(P, 13, tail({1: 1}), TameRep.of((0, 1)))


def test_as_reduction_inside_canonicalize():
    # u^-13 is Artin-Schreier equivalent to u^-1
    assert wild_atom(P, 2, {13: 1}) == wild_atom(P, 2, {1: 1})


# ---------------------------------------------------------------------------
# invariants

def test_rank_slopes_swan_examples():
    E = wild_atom(P, 6, {1: 1})
    assert (E.rank(), E.swan()) == (6, 1)
    assert E.slopes() == [(Fr(1, 6), 6)]
    T = tame_local(P, [(Fr(1, 5), 3)])
    assert (T.rank(), T.swan()) == (3, 0)
    assert T.slopes() == [(Fr(0), 3)]
    pair = canonicalize(P, 2, tail({1: 4}),
                        TameRep.of((Fr(1, 3), 1), (Fr(2, 3), 1)))
    assert (pair.rank(), pair.swan()) == (4, 2)


def test_dual_examples():
    E2 = wild_atom(P, 2, {1: 3})
    assert dual(E2) == E2                       # -3 is in the mu_2 orbit
    E3 = wild_atom(P, 3, {1: 1})
    assert dual(E3) == wild_atom(P, 3, {1: -1})
    assert dual(E3) != E3
    assert dual(dual(E3)) == E3
    U = tame_local(P, [(0, 4)])
    assert dual(U) == U


def test_tensor_rank_one_twist_projection_formula():
    E = wild_atom(P, 6, {1: 2}, char=Fr(1, 12))
    chi = tame_local(P, [(Fr(1, 4), 1)])
    out = tensor(E, chi)
    assert len(out.atoms) == 1
    atom = out.atoms[0]
    assert atom.tail == E.atoms[0].tail
    # char shifted by 6 * 1/4 = 3/2 = 1/2
    assert atom.char.residue == (Fr(1, 12) + Fr(1, 2)) % 1


def test_tensor_coprime_covers():
    out = tensor(wild_atom(P, 2, {1: 3}), wild_atom(P, 3, {1: 4}))
    assert len(out.atoms) == 1
    atom = out.atoms[0]
    assert atom.ram == 6 and atom.pole == 3
    assert out.rank() == 6 and out.swan() == 3
    assert atom.tail == tail({3: 3, 2: 4})


def test_tensor_end_block_example():
    E = wild_atom(P, 6, {1: 1})
    out = tensor(E, dual(E))
    assert out.rank() == 36
    assert out.swan() == 5
    tame = [a for a in out.atoms if not a.is_wild()]
    assert sorted(a.char.residue for a in tame) == \
        [Fr(0), Fr(1, 6), Fr(1, 3), Fr(1, 2), Fr(2, 3), Fr(5, 6)]
    assert invariant_dim(out) == 1


def test_tensor_bilinear_over_sums():
    A = wild_atom(P, 2, {1: 1}) + tame_local(P, [(Fr(1, 2), 1)])
    B = wild_atom(P, 3, {1: 2})
    left = tensor(A, B)
    right = LocalRep(P, tensor(wild_atom(P, 2, {1: 1}), B).atoms
                     + tensor(tame_local(P, [(Fr(1, 2), 1)]), B).atoms)
    assert left == right


def test_determinant_examples():
    res, t = determinant(wild_atom(P, 2, {1: 7}))
    assert res == TameChar(Fr(1, 2)) and t.is_zero()
    row6 = wild_atom(P, 6, {1: 1}) + tame_local(P, [(Fr(1, 2), 1)])
    res, t = determinant(row6)
    assert res.is_trivial() and t.is_zero()
    res, t = determinant(wild_atom(P, 2, {2: 1, 1: 4}))
    assert res == TameChar(Fr(1, 2)) and t == tail({1: 2})


def test_determinant_multiplicative_and_dual_inverse():
    rng = random.Random(3)
    for _ in range(25):
        r = rng.choice([1, 2, 3, 4, 6])
        coeffs = {1: rng.randrange(1, P)}
        if rng.random() < 0.5:
            coeffs[2] = rng.randrange(0, P)
        A = wild_atom(P, r, coeffs, char=Fr(rng.randrange(12), 12))
        B = tame_local(P, [(Fr(rng.randrange(12), 12), rng.randint(1, 3))])
        ra, ta = determinant(A)
        rb, tb = determinant(B)
        rab, tab = determinant(A + B)
        assert rab == ra.mul(rb) and tab == ta + tb
        rd, td = determinant(dual(A))
        assert rd == ra.inv() and td == -ta


def test_determinant_tame_when_pole_below_cover():
    # wild determinant part vanishes whenever s < r, for any coefficients
    rng = random.Random(9)
    for r in range(2, 13):
        for s in range(1, r):
            coeffs = {s: rng.randrange(1, P)}
            for e in range(1, s):
                coeffs[e] = rng.randrange(0, P)
            rep = wild_atom(P, r, coeffs)
            if not rep.atoms or rep.atoms[0].ram != r:
                continue
            _, t = determinant(rep)
            assert t.is_zero(), (r, s)


def test_invariant_dim_examples():
    assert invariant_dim(wild_atom(P, 6, {1: 1})) == 0
    assert invariant_dim(tame_local(P, [(0, 7)])) == 1
    mix = tame_local(P, [(Fr(j, 6), 1) for j in range(6)] + [(0, 1)])
    assert invariant_dim(mix) == 2


def test_formal_monodromy_examples():
    E = wild_atom(P, 6, {1: 1})
    fm = formal_monodromy(E)
    assert sorted(a.char.residue for a in fm) == \
        [Fr(0), Fr(1, 6), Fr(1, 3), Fr(1, 2), Fr(2, 3), Fr(5, 6)]
    T = tame_local(P, [(Fr(2, 5), 2)])
    assert formal_monodromy(T) == T.tame_part_rep()
    tw = canonicalize(P, 2, tail({1: 1}), TameRep.of((Fr(1, 2), 1)))
    assert sorted(a.char.residue for a in formal_monodromy(tw)) == \
        [Fr(1, 4), Fr(3, 4)]
    assert fm.rank() == E.rank()


def test_torus_data_examples():
    rep = wild_atom(P, 3, {1: 2})
    tails = torus_data(rep)
    assert len(tails) == 3
    coeffs = sorted(t.coeff(1).coeffs[0] for t in tails)
    assert coeffs == [2, 5, 6]  # 2 * zeta_3^-j for zeta_3 = 3
    T = tame_local(P, [(Fr(1, 3), 2)])
    assert all(t.is_zero() for t in torus_data(T)) and len(torus_data(T)) == 2
    E6 = wild_atom(P, 6, {1: 1})
    t6 = torus_data(E6)
    vals = sorted(t.coeff(1).coeffs[0] for t in t6)
    assert vals == sorted([1, 12, 4, 9, 10, 3])  # +-1, +-zeta6, +-zeta6^2


def test_torus_data_rotation_invariant():
    rep = wild_atom(P, 6, {1: 2})
    atom = rep.atoms[0]
    zeta = field(P, 1).elem(4)
    rotated = ElementaryAtom(P, 6, atom.tail.rotate(zeta), atom.char, 1)
    t1 = sorted(t.key() for t in torus_data(rep))
    t2 = sorted(t.key() for t in torus_data(LocalRep(P, [rotated])))
    assert t1 == t2


def test_conjugate_sum_identity():
    # sum of torus tails equals jordan * trace, re-expressed on the cover
    from wildmono.laurent import trace_to_base
    for r, coeffs, n in [(2, {1: 5}, 1), (3, {1: 2}, 2), (4, {2: 3, 1: 1}, 1),
                         (6, {1: 7}, 1)]:
        rep = wild_atom(P, r, coeffs, jordan=n)
        atom = rep.atoms[0]
        total = LaurentTail(P)
        for t in torus_data(rep):
            total = total + t
        expected = trace_to_base(atom.tail, atom.ram).inflate(atom.ram).scale(n)
        assert total == expected


def test_isomorphism_examples():
    assert is_isomorphic(wild_atom(P, 2, {1: 4}), wild_atom(P, 2, {1: -4}))
    assert not is_isomorphic(tame_local(P, [(0, 3)]),
                             tame_local(P, [(0, 2), (0, 1)]))
    row4 = (wild_atom(P, 2, {1: 1}) + wild_atom(P, 2, {1: 2})
            + wild_atom(P, 2, {1: 3}) + tame_local(P, [(Fr(1, 2), 1)]))
    assert is_selfdual(row4)


def test_model_guard():
    big = wild_atom(P, 1, {12: 1, 1: 1})
    assert big.swan() == 12
    check_model_validity(big)
    too_big = wild_atom(P, 1, {12: 1, 1: 1}, jordan=2)
    with pytest.raises(ModelError):
        check_model_validity(too_big)


# ---------------------------------------------------------------------------
# additivity / duality properties

@settings(max_examples=40, deadline=None)
@given(st.sampled_from([1, 2, 3, 4, 5, 6]),
       st.integers(min_value=1, max_value=12),
       st.integers(min_value=0, max_value=11),
       st.integers(min_value=1, max_value=2))
def test_dual_preserves_rank_swan(r, lam, num, n):
    rep = wild_atom(P, r, {1: lam}, char=Fr(num, 12), jordan=n)
    d = dual(rep)
    assert d.rank() == rep.rank() and d.swan() == rep.swan()
    assert dual(d) == rep


def test_tensor_rank_multiplicative_small():
    rng = random.Random(17)
    for _ in range(60):
        r1, r2 = rng.choice([1, 2, 3, 4, 5, 6]), rng.choice([1, 2, 3])
        A = wild_atom(P, r1, {1: rng.randrange(1, P)},
                      char=Fr(rng.randrange(12), 12))
        B = wild_atom(P, r2, {1: rng.randrange(1, P)},
                      char=Fr(rng.randrange(12), 12),
                      jordan=rng.randint(1, 2))
        out = tensor(A, B)
        assert out.rank() == A.rank() * B.rank()


# ---------------------------------------------------------------------------
# the Mackey oracle (independent coset bookkeeping)

def _random_atom(rng, rmax=12, smax=3):
    while True:
        r = rng.randint(1, rmax)
        s = rng.randint(1, smax)
        coeffs = {s: rng.randrange(1, P)}
        for e in range(1, s):
            if rng.random() < 0.5:
                coeffs[e] = rng.randrange(1, P)
        rep = wild_atom(P, r, coeffs, char=Fr(rng.randrange(12), 12),
                        jordan=rng.randint(1, 2))
        if len(rep.atoms) == 1 and rep.atoms[0].ram == r:
            return rep.atoms[0]


def _canonical_atom_list(rep):
    return sorted((a.ram, a.tail.key(), a.char.residue, a.jordan)
                  for a in rep.atoms)


@pytest.mark.slow
def test_tensor_against_mackey_oracle_500():
    rng = random.Random(20240801)
    for trial in range(500):
        A = _random_atom(rng)
        B = _random_atom(rng)
        got = tensor(LocalRep(P, [A]), LocalRep(P, [B]))
        expected = tensor_atoms_oracle(P, A, B)
        assert _canonical_atom_list(got) == expected, (trial, A, B)


def test_tensor_against_mackey_oracle_quick():
    rng = random.Random(7)
    for _ in range(40):
        A = _random_atom(rng, rmax=6, smax=2)
        B = _random_atom(rng, rmax=6, smax=2)
        got = tensor(LocalRep(P, [A]), LocalRep(P, [B]))
        assert _canonical_atom_list(got) == tensor_atoms_oracle(P, A, B)


# ---------------------------------------------------------------------------
# same-slope tensor bound

def _random_same_slope_pair(rng):
    d = rng.choice([2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12])
    n = rng.choice([1, 2, 3])
    while n % P == 0 or gcd_(n, d) != 1 or n >= P:
        n = rng.choice([1, 2, 3])
    out = []
    for _ in range(2):
        m = rng.choice([k for k in range(1, 13) if k * d <= 12]) \
            if d <= 12 else 1
        r = d * m
        s = n * m
        coeffs = {s: rng.randrange(1, P)}
        rep = wild_atom(P, r, coeffs, char=Fr(rng.randrange(12), 12))
        if len(rep.atoms) != 1 or rep.atoms[0].ram != r or rep.atoms[0].pole != s:
            return None
        out.append(rep.atoms[0])
    return out, Fr(n, d)


def gcd_(a, b):
    from math import gcd
    return gcd(a, b)


@pytest.mark.slow
def test_same_slope_tensor_bound_1000():
    rng = random.Random(555)
    done = 0
    while done < 1000:
        pick = _random_same_slope_pair(rng)
        if pick is None:
            continue
        (A, B), x = pick
        assert A.slope == B.slope == x
        out = tensor(LocalRep(P, [A]), LocalRep(P, [B]))
        dim_x = sum(d for sl, d in out.slopes() if sl == x)
        bound = A.rank * B.rank * (1 - Fr(1, x.denominator))
        assert dim_x >= bound, (A, B, out.slopes())
        done += 1
