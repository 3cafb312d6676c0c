import pytest
from hypothesis import given, settings, strategies as st

from wildmono.gf import field
from wildmono.laurent import (LaurentError, LaurentTail, TruncSeries, as_reduce,
                              orbit_minimal, orbit_tails, series_nth_root,
                              trace_to_base)

P = 13
FP = field(P, 1)


def tail(coeffs):
    return LaurentTail.from_ints(P, coeffs)


def test_as_reduce_examples():
    assert as_reduce(tail({3: 5})) == tail({3: 5})
    assert as_reduce(tail({13: 1})) == tail({1: 1})       # 1^(1/13) = 1
    assert as_reduce(tail({26: 2})) == tail({2: 2})       # 2^(1/13) = 2 (Fermat)


def test_as_reduce_merges_terms():
    # u^-13 reduces onto an existing u^-1 term
    assert as_reduce(tail({13: 1, 1: 5})) == tail({1: 6})
    # cancellation to zero
    assert as_reduce(tail({13: 1, 1: -1})).is_zero()


def test_as_reduce_idempotent_and_pole_tracking():
    t = tail({26: 3, 5: 1})
    r = as_reduce(t)
    assert as_reduce(r) == r
    assert r.pole_order() == 5
    t2 = tail({169: 2})
    assert as_reduce(t2) == tail({1: 2})


def test_tail_arithmetic():
    a, b = tail({2: 3, 1: 1}), tail({2: 10, 1: 5})
    assert (a + b) == tail({1: 6})
    assert (a - a).is_zero()
    assert (-a) + a == LaurentTail(P)
    assert a.scale(2) == tail({2: 6, 1: 2})


def test_inflate_deflate():
    a = tail({2: 3})
    assert a.inflate(3) == tail({6: 3})
    assert a.inflate(3).deflate(3) == a
    with pytest.raises(LaurentError):
        tail({3: 1}).deflate(2)


def test_orbit_and_trace():
    t = tail({1: 6})
    orb = orbit_tails(t, 2)
    assert sorted(x.coeff(1).coeffs[0] for x in orb) == [6, 7]
    assert orbit_minimal(tail({1: -6}), 2) == tail({1: 6})
    # trace along degree-2 cover keeps even exponents, doubled
    assert trace_to_base(tail({2: 3, 1: 5}), 2) == tail({1: 6})
    assert trace_to_base(tail({1: 5}), 2).is_zero()


def test_orbit_minimal_prefers_prime_field():
    # the mu_5 orbit of 2*u^-1 has a single F_13 representative
    t = tail({1: 2})
    assert orbit_minimal(t, 5) == t


def test_series_nth_root_examples():
    f = TruncSeries(P, [FP.one(), FP.one()], 3)
    g = series_nth_root(f, 2)
    assert [c.coeffs[0] for c in g.coeffs] == [1, 7, 8]    # 1 + v/2 - v^2/8
    f2 = TruncSeries(P, [FP.one(), FP.one()], 2)
    g2 = series_nth_root(f2, 3)
    assert [c.coeffs[0] for c in g2.coeffs] == [1, 9]      # 1 + v/3
    one = TruncSeries.one(P, 4)
    assert series_nth_root(one, 5) == one


def test_series_nth_root_rejects_p():
    with pytest.raises(LaurentError):
        series_nth_root(TruncSeries.one(P, 3), 13)


def test_series_inverse():
    f = TruncSeries(P, [FP.one(), FP.elem(4), FP.elem(9)], 3)
    assert f * f.inverse() == TruncSeries.one(P, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=12), min_size=1, max_size=4),
       st.sampled_from([2, 3, 4, 5, 6]))
def test_series_root_squares_back(coeffs, n):
    prec = len(coeffs) + 1
    f = TruncSeries(P, [FP.one()] + [FP.elem(c) for c in coeffs], prec)
    g = series_nth_root(f, n)
    assert g.pow(n) == f


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.integers(min_value=1, max_value=30),
                       st.integers(min_value=0, max_value=12),
                       max_size=4))
def test_as_reduce_idempotent_property(coeffs):
    t = tail(coeffs)
    r = as_reduce(t)
    assert as_reduce(r) == r
    assert all(e % P for e, _ in r.terms)
