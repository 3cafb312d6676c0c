"""Tame inertia calculus: finite-order characters and unipotent Jordan blocks.

A tame character is a residue a in Q/Z with denominator coprime to p;
the group law is addition mod 1.  chi(0) is trivial, chi(1/2) is the unique
quadratic character.  A tame atom chi_a (x) U(n) pairs a character with a
single unipotent Jordan block of length n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class TameError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TameChar:
    residue: Fraction

    def __post_init__(self):
        object.__setattr__(self, "residue", Fraction(self.residue) % 1)

    @classmethod
    def make(cls, num: int, den: int = 1) -> "TameChar":
        return cls(Fraction(num, den))

    def is_trivial(self) -> bool:
        return self.residue == 0

    def order(self) -> int:
        return self.residue.denominator

    def mul(self, other: "TameChar") -> "TameChar":
        return TameChar(self.residue + other.residue)

    def inv(self) -> "TameChar":
        return TameChar(-self.residue)

    def pow(self, k: int) -> "TameChar":
        return TameChar(self.residue * k)

    def pullback(self, r: int, p: int | None = None) -> "TameChar":
        """Restriction along the degree-r cover u -> u^r: residue times r."""
        if p is not None and r % p == 0:
            raise TameError(f"cover degree {r} divisible by p = {p}")
        return TameChar(self.residue * r)

    def check_prime_to(self, p: int) -> "TameChar":
        if self.residue.denominator % p == 0:
            raise TameError(f"character order {self.residue.denominator} divisible by p = {p}")
        return self

    def __repr__(self):
        return f"chi({self.residue})"


TRIVIAL = TameChar(Fraction(0))
QUADRATIC = TameChar(Fraction(1, 2))


@dataclass(frozen=True, order=True)
class TameAtom:
    """chi_a (x) U(n); rank n."""

    char: TameChar
    jordan: int = 1

    def __post_init__(self):
        if self.jordan < 1:
            raise TameError("Jordan length must be >= 1")

    @property
    def rank(self) -> int:
        return self.jordan

    def __repr__(self):
        if self.jordan == 1:
            return repr(self.char) if not self.char.is_trivial() else "1"
        pre = "" if self.char.is_trivial() else f"{self.char!r}*"
        return f"{pre}U({self.jordan})"


class TameRep:
    """Finite multiset of tame atoms in canonical order."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        self.atoms = tuple(sorted(atoms))

    @classmethod
    def of(cls, *pairs) -> "TameRep":
        return cls(TameAtom(TameChar(Fraction(a)), n) for a, n in pairs)

    def rank(self) -> int:
        return sum(a.jordan for a in self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __add__(self, other: "TameRep") -> "TameRep":
        return TameRep(self.atoms + other.atoms)

    def __eq__(self, other):
        if not isinstance(other, TameRep):
            return NotImplemented
        return self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def jordan_partition(self) -> tuple[int, ...]:
        return tuple(sorted((a.jordan for a in self.atoms), reverse=True))

    def char_multiset(self) -> tuple[Fraction, ...]:
        """Semisimplification: each block contributes its character n times."""
        out = []
        for a in self.atoms:
            out.extend([a.char.residue] * a.jordan)
        return tuple(sorted(out))

    def __repr__(self):
        return " + ".join(repr(a) for a in self.atoms) or "0"


# ---------------------------------------------------------------------------
# operations

def char_mul(a: TameChar, b: TameChar) -> TameChar:
    return a.mul(b)


def char_inv(a: TameChar) -> TameChar:
    return a.inv()


def char_order(a: TameChar) -> int:
    return a.order()


def char_pullback(a: TameChar, r: int, p: int | None = None) -> TameChar:
    return a.pullback(r, p)


def pushforward_decompose(atom: TameAtom, r: int, p: int | None = None) -> TameRep:
    """[r]_* (chi_a (x) U(n)) as a multiset of r tame atoms.

    The direct image restricted to the tame quotient sends the topological
    generator to a twisted cyclic permutation block; its eigenvalue residues
    are the r solutions b of r*b = a mod 1, each with its U(n) factor.
    """
    if p is not None and r % p == 0:
        raise TameError(f"cover degree {r} divisible by p = {p}")
    a = atom.char.residue
    return TameRep(
        TameAtom(TameChar((a + j) / r), atom.jordan) for j in range(r)
    )


def tame_tensor_atoms(x: TameAtom, y: TameAtom) -> TameRep:
    """Clebsch-Gordan: U(n) (x) U(m) = U(n+m-1) + U(n+m-3) + ... + U(|n-m|+1)."""
    c = x.char.mul(y.char)
    n, m = x.jordan, y.jordan
    return TameRep(TameAtom(c, n + m + 1 - 2 * k) for k in range(1, min(n, m) + 1))


def tame_tensor(R1: TameRep, R2: TameRep) -> TameRep:
    out = []
    for a in R1:
        for b in R2:
            out.extend(tame_tensor_atoms(a, b).atoms)
    return TameRep(out)


def tame_dual(R: TameRep) -> TameRep:
    return TameRep(TameAtom(a.char.inv(), a.jordan) for a in R)


def tame_invariants(R: TameRep) -> int:
    """Dimension of the inertia invariants: one line per trivial-character block."""
    return sum(1 for a in R if a.char.is_trivial())
