"""Exact arithmetic in finite fields F_{p^m} and their extension towers.

All choices are canonical and deterministic across runs:

* the defining polynomial of F_{p^m} is the first monic irreducible of
  degree m in the base-p encoding order,
* the primitive root of F_{p^m} is the smallest primitive element in the
  canonical element order (for m = 1 this is the usual smallest primitive
  root mod p),
* the N-th root of unity is ``g ** ((p^m - 1) // N)`` for that fixed g,
* n-th roots pick the smallest root in the canonical element order,
  extending the field on demand when no root exists.

The canonical order on F_{p^m} reads the coefficient tuple
(c_0, ..., c_{m-1}) as the integer sum(c_i * p^i); zero is first.  Elements
of different extension degrees compare by (degree, encoding).
"""

from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer factorization (group orders p^m - 1; split along cyclotomic values
# first so trial division almost always suffices)

def _trial_division(n: int, bound: int = 100000) -> tuple[dict[int, int], int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    return fac, n


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    from math import gcd

    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise FieldError(f"cannot factor {n}")


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Exact prime factorization of a positive integer."""
    fac, rest = _trial_division(n)
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return fac


def _cyclotomic_value(d: int, p: int) -> int:
    """Value of the d-th cyclotomic polynomial at p, by recursive division."""
    n = p**d - 1
    for e in _divisors(d):
        if e < d:
            n //= _cyclotomic_value(e, p)
    return n


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _factor_group_order(p: int, m: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    for d in _divisors(m):
        for q, e in factorize(_cyclotomic_value(d, p)).items():
            fac[q] = fac.get(q, 0) + e
    return fac


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (little-endian int lists)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = a[:]
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        q = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - q * fi) % p
        _ptrim(a)
    return a


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _poly_sub_x(h: list[int], p: int) -> list[int]:
    diff = h[:] + [0, 0]
    diff[1] = (diff[1] - 1) % p
    return _ptrim(diff)


def _is_irreducible(f: list[int], p: int) -> bool:
    m = len(f) - 1
    if _poly_sub_x(_ppowmod([0, 1], p**m, f, p), p):
        return False
    for ell in factorize(m):
        h = _ppowmod([0, 1], p ** (m // ell), f, p)
        if len(_pgcd(_poly_sub_x(h, p), f, p)) - 1 != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# fields

class Field:
    """The finite field F_{p^m} with its canonical presentation."""

    __slots__ = ("p", "m", "q", "modulus", "_gen", "_order_factors", "_emb_cache",
                 "_root_cache", "_frob_cache", "_solver_cache", "_proper_divisors")

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = self._find_modulus(p, m)
        self._gen = None
        self._order_factors = None
        self._emb_cache: dict[int, tuple] = {}
        self._root_cache: dict[int, "FieldElem"] = {}
        self._frob_cache: dict[int, tuple] = {}
        self._solver_cache: dict[int, tuple] = {}
        self._proper_divisors = tuple(d for d in range(2, m) if m % d == 0)

    @staticmethod
    def _find_modulus(p: int, m: int) -> tuple[int, ...] | None:
        if m == 1:
            return None
        counter = 1
        while True:
            digits = []
            c = counter
            for _ in range(m):
                digits.append(c % p)
                c //= p
            f = digits + [1]
            if _is_irreducible(f, p):
                return tuple(f)
            counter += 1

    @property
    def order_factors(self) -> dict[int, int]:
        if self._order_factors is None:
            self._order_factors = _factor_group_order(self.p, self.m)
        return self._order_factors

    def elem(self, coeffs) -> "FieldElem":
        """Build an element, compressed into its minimal subfield.

        Compression keeps every value's representation canonical (the same
        value always has the same home field and coefficient vector), which
        makes canonical orders and multiset keys independent of the route a
        computation took through larger fields.
        """
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs]
        c += [0] * (self.m - len(c))
        if len(c) > self.m:
            raise FieldError("coefficient vector too long")
        if self.m == 1:
            return FieldElem(self, tuple(c))
        if not any(c[1:]):
            return FieldElem(field(self.p, 1), (c[0],))
        for a in self._proper_divisors:
            if self._frob_power(c, a) == c:
                sub = self._express_in_subfield(c, a)
                return field(self.p, a).elem(sub)
        return FieldElem(self, tuple(c))

    def _frob_power(self, c: list[int], a: int) -> list[int]:
        cols = self._frob_cache.get(a)
        if cols is None:
            cols = []
            for j in range(self.m):
                poly = [0] * j + [1]
                img = _ppowmod(poly, self.p**a, list(self.modulus), self.p)
                img += [0] * (self.m - len(img))
                cols.append(tuple(img))
            cols = tuple(cols)
            self._frob_cache[a] = cols
        out = [0] * self.m
        for j, cj in enumerate(c):
            if cj:
                col = cols[j]
                for i in range(self.m):
                    out[i] = (out[i] + cj * col[i]) % self.p
        return out

    def _express_in_subfield(self, c: list[int], a: int) -> list[int]:
        solver = self._solver_cache.get(a)
        if solver is None:
            powers = _embedding_powers(self.p, a, self.m)
            # pick a rows of the m x a matrix with columns powers[i] that
            # form an invertible block, and invert it
            rows = []
            used = []
            for i in range(self.m):
                cand = rows + [[powers[j][i] for j in range(a)]]
                if _matrix_rank(cand, self.p) == len(cand):
                    rows = cand
                    used.append(i)
                    if len(rows) == a:
                        break
            inv = _matrix_inverse(rows, self.p)
            solver = (tuple(used), inv)
            self._solver_cache[a] = solver
        used, inv = solver
        rhs = [c[i] for i in used]
        return [sum(inv[i][j] * rhs[j] for j in range(a)) % self.p
                for i in range(a)]

    def zero(self) -> "FieldElem":
        return self.elem(0)

    def one(self) -> "FieldElem":
        return self.elem(1)

    def generator(self) -> "FieldElem":
        """Smallest primitive element in the canonical order."""
        if self._gen is not None:
            return self._gen
        primes = list(self.order_factors)
        if self.m == 1:
            for g in range(2, self.p):
                if all(pow(g, (self.p - 1) // ell, self.p) != 1 for ell in primes):
                    self._gen = self.elem(g)
                    return self._gen
            raise FieldError("no primitive root found")
        counter = self.p  # first element with a nonzero non-constant digit
        while True:
            digits = []
            c = counter
            for _ in range(self.m):
                digits.append(c % self.p)
                c //= self.p
            if any(digits[1:]):
                cand = FieldElem(self, tuple(digits))
                if all((cand ** ((self.q - 1) // ell)) != self.one() for ell in primes):
                    self._gen = cand
                    return cand
            counter += 1

    def elements(self):
        """Iterate all field elements in canonical order (desk-scale fields)."""
        for enc in range(self.q):
            digits = []
            c = enc
            for _ in range(self.m):
                digits.append(c % self.p)
                c //= self.p
            yield self.elem(digits)

    def __repr__(self):
        return f"F_{self.p}^{self.m}" if self.m > 1 else f"F_{self.p}"


@lru_cache(maxsize=None)
def field(p: int, m: int) -> Field:
    if p < 2 or m < 1:
        raise FieldError(f"bad field spec ({p}, {m})")
    return Field(p, m)


class FieldElem:
    """Immutable element of F_{p^m}, stored in its prime-compressed parent.

    Elements whose coefficient vector is constant are always represented in
    F_p, so prime-field values compare equal regardless of where they were
    computed.  Mixed-degree arithmetic lifts both operands to the compositum
    along the canonical embeddings.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: Field, coeffs: tuple[int, ...]):
        self.field = fld
        self.coeffs = coeffs

    # -- canonical order ----------------------------------------------------
    def encoding(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.field.p + c
        return enc

    def key(self) -> tuple[int, int]:
        return (self.field.m, self.encoding())

    @property
    def p(self) -> int:
        return self.field.p

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- lifting ------------------------------------------------------------
    def lift_to(self, fld: Field) -> "FieldElem":
        if fld.m == self.field.m:
            return self
        if fld.m % self.field.m:
            raise FieldError(f"no embedding F_{self.p}^{self.field.m} -> F_{self.p}^{fld.m}")
        if self.field.m == 1:
            return FieldElem(fld, (self.coeffs[0],) + (0,) * (fld.m - 1))
        powers = _embedding_powers(self.p, self.field.m, fld.m)
        acc = [0] * fld.m
        for c, vec in zip(self.coeffs, powers):
            if c:
                for i, v in enumerate(vec):
                    acc[i] = (acc[i] + c * v) % self.p
        return FieldElem(fld, tuple(acc))

    def _common(self, other: "FieldElem") -> tuple["FieldElem", "FieldElem", Field]:
        if self.p != other.p:
            raise FieldError("elements of different characteristic")
        if self.field is other.field:
            return self, other, self.field
        from math import lcm

        fld = field(self.p, lcm(self.field.m, other.field.m))
        return self.lift_to(fld), other.lift_to(fld), fld

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b, fld = self._common(other)
        return fld.elem([x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other):
        a, b, fld = self._common(other)
        return fld.elem([x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self):
        return FieldElem(self.field, tuple(-c % self.p for c in self.coeffs)) \
            if self.field.m == 1 else self.field.elem([-c for c in self.coeffs])

    def __mul__(self, other):
        a, b, fld = self._common(other)
        if fld.m == 1:
            return fld.elem(a.coeffs[0] * b.coeffs[0])
        prod = _pmul(list(a.coeffs), list(b.coeffs), fld.p)
        return fld.elem(_pmod(prod, list(fld.modulus), fld.p))

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        a, b, _ = self._common(other)
        return a * b.inverse()

    def __pow__(self, e: int):
        fld = self.field
        if fld.m == 1:
            if e < 0:
                return fld.elem(pow(self.coeffs[0], e, fld.p))
            return fld.elem(pow(self.coeffs[0], e, fld.p))
        if e < 0:
            return self.inverse() ** (-e)
        e %= fld.q - 1 if self else 1
        result = fld.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pth_root(self) -> "FieldElem":
        """Inverse of Frobenius; always exists and stays in the same field."""
        return self ** (self.field.p ** (self.field.m - 1)) if self.field.m > 1 else self

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise FieldError("order of zero")
        n = self.field.q - 1
        for ell, e in self.field.order_factors.items():
            for _ in range(e):
                if self ** (n // ell) == self.field.one():
                    n //= ell
                else:
                    break
        return n

    # -- comparisons ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        if self.p != other.p:
            return False
        if self.field is other.field:
            return self.coeffs == other.coeffs
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.p, self.field.m, self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        poly = "+".join(f"{c}g^{i}" if i else str(c)
                        for i, c in enumerate(self.coeffs) if c)
        return f"({poly or 0})@{self.field!r}"


# ---------------------------------------------------------------------------
# canonical embeddings for m > 1 (root of the subfield generator's minimal
# polynomial, smallest root in the canonical order of the big field)


def _matrix_rank(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _matrix_inverse(rows: list[list[int]], p: int) -> list[list[int]]:
    n = len(rows)
    aug = [rows[i][:] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _raw_roots_in_field(fcoeffs: list[list[int]], fld: Field) -> list[tuple[int, ...]]:
    """All roots in fld of a squarefree fully split polynomial, on raw
    coefficient vectors (no FieldElem, so element normalization can depend
    on this routine without recursion)."""
    p = fld.p
    m = fld.m
    modulus = list(fld.modulus) if fld.modulus else None

    def norm(v):
        v = [x % p for x in v]
        v += [0] * (m - len(v))
        return v

    def is_zero(v):
        return not any(v)

    def emul(u, v):
        if m == 1:
            return [u[0] * v[0] % p]
        return norm(_pmod(_pmul(list(u), list(v), p), modulus, p))

    def epow(u, e):
        res = norm([1])
        base = u
        while e:
            if e & 1:
                res = emul(res, base)
            base = emul(base, base)
            e >>= 1
        return res

    def einv(u):
        return epow(u, fld.q - 2)

    def trim(a):
        while a and is_zero(a[-1]):
            a.pop()
        return a

    def poly_mod(a, f):
        a = trim([v[:] for v in a])
        df = len(f) - 1
        inv = einv(f[-1])
        while a and len(a) - 1 >= df:
            qv = emul(a[-1], inv)
            sh = len(a) - 1 - df
            for i, fi in enumerate(f):
                prod = emul(qv, fi)
                a[sh + i] = [(x - y) % p for x, y in zip(a[sh + i], prod)]
            trim(a)
        return a

    def poly_mul(a, b):
        out = [norm([0]) for _ in range(len(a) + len(b) - 1)]
        for i, ai in enumerate(a):
            if not is_zero(ai):
                for j, bj in enumerate(b):
                    prod = emul(ai, bj)
                    out[i + j] = [(x + y) % p for x, y in zip(out[i + j], prod)]
        return trim(out)

    def poly_powmod(a, e, f):
        res = [norm([1])]
        a = poly_mod(a, f)
        while e:
            if e & 1:
                res = poly_mod(poly_mul(res, a), f)
            a = poly_mod(poly_mul(a, a), f)
            e >>= 1
        return res

    def poly_gcd(a, b):
        a, b = [v[:] for v in a], [v[:] for v in b]
        while b:
            a, b = b, poly_mod(a, b)
        if a:
            inv = einv(a[-1])
            a = [emul(c, inv) for c in a]
        return a

    def poly_quot(a, b):
        a = [v[:] for v in a]
        out = []
        db = len(b) - 1
        while len(a) - 1 >= db:
            qv = a[-1]
            out.append(qv)
            sh = len(a) - 1 - db
            for i, bi in enumerate(b):
                prod = emul(qv, bi)
                a[sh + i] = [(x - y) % p for x, y in zip(a[sh + i], prod)]
            a.pop()
        out.reverse()
        return out

    def split(f):
        if len(f) - 1 == 0:
            return []
        if len(f) - 1 == 1:
            neg = [(-x) % p for x in emul(f[0], einv(f[1]))]
            return [tuple(neg)]
        for enc in range(fld.q):
            delta = norm([(enc // p**i) % p for i in range(m)])
            h = poly_powmod([delta, norm([1])], (fld.q - 1) // 2, f)
            h = [v[:] for v in h]
            if h:
                h[0][0] = (h[0][0] - 1) % p
            else:
                h = [norm([-1])]
            g = poly_gcd(trim(h), f)
            if 0 < len(g) - 1 < len(f) - 1:
                return split(g) + split(poly_quot(f, g))
        raise FieldError("root splitting failed")

    monic = [norm(c) for c in fcoeffs]
    inv = einv(monic[-1])
    monic = [emul(c, inv) for c in monic]
    return split(monic)


@lru_cache(maxsize=None)
def _embedding_powers(p: int, a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """Powers h^0..h^{a-1} of the canonical image of F_{p^a}'s defining root
    in F_{p^b}: h is the smallest root (in the canonical encoding order) of
    the defining polynomial, so 1, h, ..., h^{a-1} are the images of the
    subfield's basis."""
    sub = field(p, a)
    sup = field(p, b)
    roots = _raw_roots_in_field([[c] for c in sub.modulus], sup)
    if len(roots) != a:
        raise FieldError("embedding root count mismatch")

    def enc(v):
        e = 0
        for c in reversed(v):
            e = e * p + c
        return e

    h = list(min(roots, key=enc))
    powers = []
    x = [1] + [0] * (b - 1)
    modulus = list(sup.modulus)
    for _ in range(a):
        powers.append(tuple(x))
        x = _pmod(_pmul(x, h, p), modulus, p)
        x += [0] * (b - len(x))
    return tuple(powers)


# ---------------------------------------------------------------------------
# roots of unity and n-th roots

def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a modulo n (a, n coprime)."""
    from math import gcd

    if gcd(a, n) != 1:
        raise FieldError(f"{a} not invertible mod {n}")
    o = 1
    x = a % n
    while x != 1:
        x = x * a % n
        o += 1
    return o


def splitting_degree(N: int, p: int) -> int:
    """Smallest m with N | p^m - 1."""
    if N == 1:
        return 1
    return multiplicative_order_mod(p, N)


def root_of_unity(N: int, p: int, ambient: int | None = None) -> FieldElem:
    """Canonical primitive N-th root of unity g^((q-1)/N).

    The root lives in F_{p^d} for the minimal degree d unless ``ambient``
    names a larger degree (a multiple of d); the ambient variant is the
    corresponding power of that field's own canonical generator, so all
    multiplicative relations between roots computed in one ambient field hold
    exactly.
    """
    if N <= 0:
        raise FieldError("root-of-unity index must be positive")
    if N % p == 0:
        raise FieldError(f"no {N}-th roots of unity in characteristic {p}")
    d = splitting_degree(N, p)
    m = ambient if ambient is not None else d
    if m % d:
        raise FieldError(f"mu_{N} does not lie in F_{p}^{m}")
    fld = field(p, m)
    cached = fld._root_cache.get(N)
    if cached is None:
        cached = fld.generator() ** ((fld.q - 1) // N)
        fld._root_cache[N] = cached
    return cached


def _amm_prime_root(c: FieldElem, ell: int, fld: Field) -> FieldElem:
    """One solution of x^ell = c in fld, assuming solvability (ell prime)."""
    q1 = fld.q - 1
    e = 0
    m0 = q1
    while m0 % ell == 0:
        m0 //= ell
        e += 1
    s = ell**e
    if e == 0:
        return c ** pow(ell, -1, q1)
    # split c into its order-m0 and Sylow components
    inv_s_mod_m0 = pow(s, -1, m0) if m0 > 1 else 0
    y = c ** (s * inv_s_mod_m0 % q1) if m0 > 1 else fld.one()
    z = c / y
    x1 = y ** pow(ell, -1, m0) if m0 > 1 else fld.one()
    # dlog of z in the cyclic ell-Sylow subgroup, base g_s
    eta = next(el for el in fld.elements()
               if el and (el ** (q1 // ell)) != fld.one())
    g_s = eta ** m0
    t = 0
    z_rem = z
    gs_inv = g_s.inverse()
    for k in range(e):
        w = z_rem ** (s // ell ** (k + 1))
        # w is an ell^(k+1)-th ... find digit by matching against powers
        probe = g_s ** (s // ell)
        digit = 0
        acc = fld.one()
        while acc != w:
            acc = acc * probe
            digit += 1
            if digit >= ell:
                raise FieldError("dlog digit not found")
        if digit:
            t += digit * ell**k
            z_rem = z_rem * (gs_inv ** (digit * ell**k))
    if t % ell:
        raise FieldError("element is not an ell-th power")
    x2 = g_s ** (t // ell)
    return x1 * x2


def nth_root(c: FieldElem, n: int) -> FieldElem:
    """Smallest x (canonical order) with x^n = c, extending the field if needed."""
    if n <= 0:
        raise FieldError("root index must be positive")
    p = c.p
    if n % p == 0:
        # strip exact Frobenius part; p-th roots always exist in-place
        x = c
        while n % p == 0:
            x = x.pth_root()
            n //= p
        return nth_root(x, n) if n > 1 else x
    if c.is_zero():
        return c
    from math import gcd

    a = c.field.m
    o = c.multiplicative_order()
    k = 1
    while True:
        q1 = p ** (a * k) - 1
        if q1 % o == 0 and (q1 // gcd(n, q1)) % o == 0:
            break
        k += 1
        if k > n:
            raise FieldError("no splitting field found for root")
    fld = field(p, a * k)
    cl = c.lift_to(fld)
    d = gcd(n, fld.q - 1)
    x = cl ** pow(n // d, -1, fld.q - 1)
    for ell, e in factorize(d).items():
        for _ in range(e):
            x = _amm_prime_root(x, ell, fld)
    # all roots differ by d-th roots of unity; take the canonical smallest
    if d > 1:
        zeta = root_of_unity(d, p, ambient=fld.m)
        best = x
        cur = x
        for _ in range(d - 1):
            cur = cur * zeta
            if cur.key() < best.key():
                best = cur
        x = best
    assert x**n == c
    return x
