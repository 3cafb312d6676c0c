import pytest
from hypothesis import given, settings, strategies as st

from wildmono.gf import (FieldError, field, multiplicative_order_mod, nth_root,
                         root_of_unity, splitting_degree)

F13 = field(13, 1)


def test_canonical_primitive_root_is_smallest():
    assert F13.generator().coeffs == (2,)


def test_root_of_unity_values():
    assert root_of_unity(1, 13) == F13.one()
    assert root_of_unity(2, 13) == F13.elem(12)
    assert root_of_unity(6, 13) == F13.elem(4)   # 2^(12/6)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 6, 12, 5, 7, 11])
def test_root_of_unity_has_exact_order(N):
    z = root_of_unity(N, 13)
    # brute-force powering
    acc = z
    for k in range(1, N):
        assert acc != z.field.one().lift_to(z.field) or N == 1
        acc = acc * z
    assert z ** N == field(13, 1).one()
    assert z.multiplicative_order() == N


def test_root_of_unity_rejects_p_divisible():
    with pytest.raises(FieldError):
        root_of_unity(13, 13)
    with pytest.raises(FieldError):
        root_of_unity(26, 13)
    with pytest.raises(FieldError):
        root_of_unity(0, 13)


def test_nth_root_examples():
    assert nth_root(F13.elem(1), 5) == F13.one()       # smallest fifth root
    assert nth_root(F13.elem(5), 3) == F13.elem(7)     # 7^3 = 343 = 5 mod 13
    r = nth_root(F13.elem(2), 2)                       # 2 is a non-residue
    assert r.field.m == 2
    assert r * r == F13.elem(2)


def test_nth_root_picks_smallest():
    # x^2 = 4 has roots {2, 11}; canonical pick is 2
    assert nth_root(F13.elem(4), 2) == F13.elem(2)
    # x^3 = 5 has roots {7, 8, 11}; canonical pick is 7
    assert nth_root(F13.elem(5), 3) == F13.elem(7)


def test_splitting_degrees():
    assert splitting_degree(6, 13) == 1
    assert splitting_degree(5, 13) == 4
    assert splitting_degree(11, 13) == 10
    assert splitting_degree(99, 13) == 30


def test_embeddings_are_field_homomorphisms():
    sub, sup = field(13, 2), field(13, 4)
    a = sub.elem([3, 5])
    b = sub.elem([7, 1])
    la, lb = a.lift_to(sup), b.lift_to(sup)
    assert (a + b).lift_to(sup) == la + lb
    assert (a * b).lift_to(sup) == la * lb
    assert (a.inverse()).lift_to(sup) == la.inverse()


def test_prime_compression():
    big = field(13, 3)
    c = big.elem([9, 0, 0])
    assert c.field.m == 1
    assert c == F13.elem(9)


def test_pth_root_inverts_frobenius():
    K = field(13, 2)
    x = K.elem([4, 11])
    assert x.pth_root() ** 13 == x


def test_mixed_degree_arithmetic():
    a = field(13, 2).elem([1, 1])
    b = F13.elem(5)
    s = a + b
    assert s.field.m == 2
    assert s - b == a


elems = st.integers(min_value=0, max_value=12)


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_field_axioms_prime(a, b, c):
    A, B, C = F13.elem(a), F13.elem(b), F13.elem(c)
    assert (A + B) * C == A * C + B * C
    assert A * B == B * A
    if b != 0:
        assert (A / B) * B == A


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=168), st.integers(min_value=0, max_value=168))
def test_field_axioms_extension(x, y):
    K = field(13, 2)
    A = K.elem([x % 13, x // 13])
    B = K.elem([y % 13, y // 13])
    assert (A + B) - B == A
    if not B.is_zero():
        assert (A * B) / B == A


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.sampled_from([2, 3, 4, 5, 6, 7]))
def test_nth_root_roundtrip(c, n):
    x = nth_root(F13.elem(c), n)
    assert x ** n == F13.elem(c)


def test_order_helper():
    assert multiplicative_order_mod(13, 99) == 30
    with pytest.raises(FieldError):
        multiplicative_order_mod(13, 26)
