"""Laurent principal parts and truncated power series over F_{p^m}.

A :class:`LaurentTail` stores the strictly negative part of a Laurent
expansion: the monomial ``c * u^-i`` is kept as ``(i, c)`` with pole order
``i >= 1``.  Tails are immutable and always normalized (zero coefficients
dropped, Artin-Schreier reduction is a separate explicit step).
"""

from __future__ import annotations

from .gf import Field, FieldElem, field, root_of_unity


class LaurentError(ValueError):
    pass


class LaurentTail:
    """Principal part sum(c_i u^-i), i >= 1, coefficients in F_{p^m}."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms=()):
        self.p = p
        clean = tuple(sorted(((int(i), c) for i, c in terms if c), reverse=True))
        for i, _ in clean:
            if i < 1:
                raise LaurentError("tail exponents must be negative (pole order >= 1)")
        self.terms = clean

    @classmethod
    def from_ints(cls, p: int, coeffs: dict[int, int]) -> "LaurentTail":
        fp = field(p, 1)
        return cls(p, [(i, fp.elem(c)) for i, c in coeffs.items()])

    # -- queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def pole_order(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def coeff(self, i: int) -> FieldElem:
        for j, c in self.terms:
            if j == i:
                return c
        return field(self.p, 1).zero()

    def exponents(self) -> list[int]:
        return [i for i, _ in self.terms]

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "LaurentTail") -> "LaurentTail":
        if self.p != other.p:
            raise LaurentError("mixed characteristics")
        acc: dict[int, FieldElem] = {i: c for i, c in self.terms}
        for i, c in other.terms:
            acc[i] = acc[i] + c if i in acc else c
        return LaurentTail(self.p, acc.items())

    def __neg__(self) -> "LaurentTail":
        return LaurentTail(self.p, [(i, -c) for i, c in self.terms])

    def __sub__(self, other: "LaurentTail") -> "LaurentTail":
        return self + (-other)

    def scale(self, c: FieldElem | int) -> "LaurentTail":
        if isinstance(c, int):
            c = field(self.p, 1).elem(c)
        return LaurentTail(self.p, [(i, a * c) for i, a in self.terms])

    def rotate(self, zeta: FieldElem) -> "LaurentTail":
        """The tail of u -> phi(zeta * u): c_i becomes c_i * zeta^-i."""
        zinv = zeta.inverse()
        return LaurentTail(self.p, [(i, c * zinv**i) for i, c in self.terms])

    def inflate(self, k: int) -> "LaurentTail":
        """Pull back along u -> u^k: exponents multiply by k."""
        return LaurentTail(self.p, [(i * k, c) for i, c in self.terms])

    def deflate(self, d: int) -> "LaurentTail":
        """Descend along u = v^(1/d) when every exponent is divisible by d."""
        if any(i % d for i, _ in self.terms):
            raise LaurentError(f"tail exponents not divisible by {d}")
        return LaurentTail(self.p, [(i // d, c) for i, c in self.terms])

    # -- canonical key -------------------------------------------------------
    def key(self):
        return tuple((i, c.key()) for i, c in self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c!r}*u^-{i}" for i, c in self.terms)


def as_reduce(tail: LaurentTail) -> LaurentTail:
    """Artin-Schreier reduction: replace c*u^{-p*m} by c^(1/p)*u^{-m}.

    Iterated until no exponent is divisible by p; the additive character
    attached to the reduced tail is unchanged.
    """
    p = tail.p
    acc = {i: c for i, c in tail.terms}
    while True:
        div = [i for i in acc if i % p == 0]
        if not div:
            break
        for i in div:
            c = acc.pop(i)
            j = i // p
            r = c.pth_root()
            acc[j] = acc[j] + r if j in acc else r
            if j in acc and acc[j].is_zero():
                del acc[j]
    return LaurentTail(p, acc.items())


def exponent_gcd_with(tail: LaurentTail, r: int) -> int:
    """gcd of r and all tail exponents (r itself for the zero tail)."""
    from math import gcd

    g = r
    for i, _ in tail.terms:
        g = gcd(g, i)
    return g


def orbit_tails(tail: LaurentTail, r: int) -> list[LaurentTail]:
    """The conjugate tails phi(zeta * u) for zeta running over mu_r."""
    if r == 1 or tail.is_zero():
        return [tail] * r
    ambient = _ambient_degree(tail, r)
    zeta = root_of_unity(r, tail.p, ambient=ambient)
    out = []
    cur = tail
    for _ in range(r):
        out.append(cur)
        cur = cur.rotate(zeta)
    return out


def orbit_minimal(tail: LaurentTail, r: int) -> LaurentTail:
    """Canonical representative of the mu_r-orbit of a tail."""
    if r == 1 or tail.is_zero():
        return tail
    return min(orbit_tails(tail, r), key=LaurentTail.key)


def _ambient_degree(tail: LaurentTail, r: int) -> int:
    from math import lcm

    from .gf import splitting_degree

    deg = splitting_degree(r, tail.p)
    for _, c in tail.terms:
        deg = lcm(deg, c.field.m)
    return deg


def trace_to_base(tail: LaurentTail, r: int) -> LaurentTail:
    """Trace of phi(u) along u^r = t, written in t.

    Only exponents divisible by r survive (the mu_r character sums of the
    others vanish); each surviving coefficient is multiplied by r.
    """
    out = []
    fp = field(tail.p, 1)
    rc = fp.elem(r)
    for i, c in tail.terms:
        if i % r == 0:
            out.append((i // r, c * rc))
    return LaurentTail(tail.p, out)


# ---------------------------------------------------------------------------
# truncated power series (unit part bookkeeping for the transform
# normalization); precision = number of retained coefficients c_0..c_{N-1}

class TruncSeries:
    __slots__ = ("p", "coeffs", "prec")

    def __init__(self, p: int, coeffs, prec: int):
        if prec < 1:
            raise LaurentError("precision must be >= 1")
        self.p = p
        fp = field(p, 1)
        cs = list(coeffs)[:prec]
        cs += [fp.zero()] * (prec - len(cs))
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def one(cls, p: int, prec: int) -> "TruncSeries":
        fp = field(p, 1)
        return cls(p, [fp.one()], prec)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        prec = min(self.prec, other.prec)
        return TruncSeries(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)], prec)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        prec = min(self.prec, other.prec)
        fp = field(self.p, 1)
        out = [fp.zero() for _ in range(prec)]
        for i, a in enumerate(self.coeffs[:prec]):
            if a:
                for j, b in enumerate(other.coeffs[: prec - i]):
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.p, out, prec)

    def scale(self, c: FieldElem) -> "TruncSeries":
        return TruncSeries(self.p, [a * c for a in self.coeffs], self.prec)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by v^k (k >= 0)."""
        fp = field(self.p, 1)
        return TruncSeries(self.p, [fp.zero()] * k + list(self.coeffs), self.prec)

    def inverse(self) -> "TruncSeries":
        if self.coeffs[0].is_zero():
            raise LaurentError("series not a unit")
        inv0 = self.coeffs[0].inverse()
        out = [inv0]
        for k in range(1, self.prec):
            s = None
            for j in range(1, k + 1):
                t = self.coeffs[j] * out[k - j]
                s = t if s is None else s + t
            out.append(-(inv0 * s) if s is not None else field(self.p, 1).zero())
        return TruncSeries(self.p, out, self.prec)

    def pow(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.inverse().pow(-n)
        result = TruncSeries.one(self.p, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return self.coeffs[:prec] == other.coeffs[:prec]

    def __repr__(self):
        return " + ".join(f"{c!r}*v^{i}" for i, c in enumerate(self.coeffs) if c) or "0"


def series_nth_root(f: TruncSeries, n: int) -> TruncSeries:
    """The unique g with g(0) = 1 and g^n = f, for f(0) = 1 and p coprime to n.

    Coefficients are solved degree by degree; each step divides by n, which
    is invertible in the coefficient field.
    """
    p = f.p
    if n % p == 0:
        raise LaurentError(f"series root index divisible by p = {p}")
    if f.coeffs[0] != field(p, 1).one():
        raise LaurentError("series root requires constant term 1")
    fp = field(p, 1)
    n_inv = fp.elem(n).inverse()
    g = [fp.one()]
    for k in range(1, f.prec):
        cur = TruncSeries(p, g, f.prec).pow(n)
        delta = (f.coeffs[k] - cur.coeffs[k]) * n_inv
        g.append(delta)
    out = TruncSeries(p, g, f.prec)
    assert out.pow(n) == f
    return out


def eval_poly_at_series(poly_coeffs: list[FieldElem], arg: TruncSeries) -> TruncSeries:
    """Evaluate sum(poly_coeffs[k] * X^k) at a series argument (Horner)."""
    p = arg.p
    fp = field(p, 1)
    acc = TruncSeries(p, [fp.zero()], arg.prec)
    for c in reversed(poly_coeffs):
        acc = acc * arg
        acc = acc + TruncSeries(p, [c], arg.prec)
    return acc
