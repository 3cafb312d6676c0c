"""Elementary wild atoms [r]_* (psi(phi) (x) chi_a (x) U(n)) and their calculus.

An atom is the direct image along the degree-r Kummer cover of an additive
character attached to a Laurent tail phi, twisted by a tame atom.  Every
local monodromy object handled here is a finite multiset of such atoms in
canonical form:

* phi is Artin-Schreier reduced (no exponent divisible by p),
* the atom is primitive (no divisor d > 1 of r divides all exponents of phi;
  otherwise it decomposes along the subcover),
* phi is the minimum of its mu_r-orbit in the canonical tail order,
* tame atoms (phi = 0) are stored at r = 1.

Rank r*n, pole order s = max pole of phi, Swan conductor s*n, unique slope
s/r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .gf import FieldElem, field, root_of_unity, splitting_degree
from .laurent import (LaurentTail, as_reduce, exponent_gcd_with, orbit_minimal,
                      orbit_tails, trace_to_base)
from .tame import (TameAtom, TameChar, TameRep, pushforward_decompose,
                   tame_tensor_atoms)


class ModelError(ValueError):
    """A constructed object leaves the range of the structure theory."""


@dataclass(frozen=True)
class ElementaryAtom:
    p: int
    ram: int                 # covering degree r, coprime to p
    tail: LaurentTail        # reduced, primitive, orbit-minimal
    char: TameChar
    jordan: int = 1

    @property
    def rank(self) -> int:
        return self.ram * self.jordan

    @property
    def pole(self) -> int:
        return self.tail.pole_order()

    @property
    def swan(self) -> int:
        return self.pole * self.jordan

    @property
    def slope(self) -> Fraction:
        return Fraction(self.pole, self.ram)

    def is_wild(self) -> bool:
        return bool(self.tail)

    def sort_key(self):
        return (self.ram, self.pole, self.tail.key(), self.char.residue, self.jordan)

    def __repr__(self):
        tame = repr(TameAtom(self.char, self.jordan))
        if not self.is_wild():
            return tame
        return f"[{self.ram}]*(psi({self.tail!r}) x {tame})"


class LocalRep:
    """Canonical multiset of elementary atoms at one point of the disc."""

    __slots__ = ("p", "atoms", "coord")

    def __init__(self, p: int, atoms=(), coord: str = "t"):
        self.p = p
        self.atoms = tuple(sorted(atoms, key=ElementaryAtom.sort_key))
        self.coord = coord

    def with_coord(self, coord: str) -> "LocalRep":
        return LocalRep(self.p, self.atoms, coord)

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __add__(self, other: "LocalRep") -> "LocalRep":
        if self.p != other.p:
            raise ModelError("mixed characteristics")
        return LocalRep(self.p, self.atoms + other.atoms, self.coord)

    def __eq__(self, other):
        if not isinstance(other, LocalRep):
            return NotImplemented
        return self.p == other.p and self.atoms == other.atoms

    def __hash__(self):
        return hash((self.p, self.atoms))

    def __repr__(self):
        return " + ".join(repr(a) for a in self.atoms) or "0"

    # -- invariants ----------------------------------------------------------
    def rank(self) -> int:
        return sum(a.rank for a in self.atoms)

    def swan(self) -> int:
        return sum(a.swan for a in self.atoms)

    def slopes(self) -> list[tuple[Fraction, int]]:
        """Slope decomposition as (slope, dimension), sorted by slope."""
        acc: dict[Fraction, int] = {}
        for a in self.atoms:
            acc[a.slope] = acc.get(a.slope, 0) + a.rank
        return sorted(acc.items())

    def slope_part(self, pred) -> "LocalRep":
        return LocalRep(self.p, [a for a in self.atoms if pred(a.slope)], self.coord)

    def is_tame(self) -> bool:
        return all(not a.is_wild() for a in self.atoms)

    def tame_part_rep(self) -> TameRep:
        if not self.is_tame():
            raise ModelError("representation is not tame")
        return TameRep(TameAtom(a.char, a.jordan) for a in self.atoms)


def check_model_validity(rep: LocalRep) -> LocalRep:
    """Entry gate for modeled local monodromy: Swan conductor below p.

    The atom decomposition of a local representation is only asserted for
    Swan < p; data failing the bound is rejected loudly rather than modeled.
    """
    if rep.swan() >= rep.p:
        raise ModelError(
            f"Swan conductor {rep.swan()} >= p = {rep.p}: outside the modeled range")
    for a in rep.atoms:
        if a.char.residue.denominator % rep.p == 0:
            raise ModelError("tame character order divisible by p")
    return rep


# ---------------------------------------------------------------------------
# canonical form

def canonicalize(p: int, ram: int, tail: LaurentTail, tame: TameRep,
                 coord: str = "t") -> LocalRep:
    """Canonical form of [ram]_* (psi(tail) (x) tame).

    Applies Artin-Schreier reduction, descent along subcovers whenever all
    tail exponents share a divisor with ram, distribution over the tame
    multiset, and mu_ram-orbit minimization of the tail.
    """
    if ram < 1:
        raise ModelError("covering degree must be >= 1")
    if ram % p == 0:
        raise ModelError(f"covering degree {ram} divisible by p = {p}")
    atoms = []
    stack = [(ram, tail, t) for t in tame]
    while stack:
        r, phi, t_atom = stack.pop()
        phi = as_reduce(phi)
        d = exponent_gcd_with(phi, r)
        if d > 1:
            deflated = phi.deflate(d)
            for piece in pushforward_decompose(t_atom, d, p):
                stack.append((r // d, deflated, piece))
            continue
        phi = orbit_minimal(phi, r)
        atoms.append(ElementaryAtom(p, r, phi, t_atom.char, t_atom.jordan))
    return LocalRep(p, atoms, coord)


def wild_atom(p: int, ram: int, tail_coeffs: dict[int, int] | LaurentTail,
              char: Fraction | int = 0, jordan: int = 1,
              coord: str = "t") -> LocalRep:
    """Convenience constructor: canonical form of one raw atom."""
    tail = (tail_coeffs if isinstance(tail_coeffs, LaurentTail)
            else LaurentTail.from_ints(p, tail_coeffs))
    tame = TameRep([TameAtom(TameChar(Fraction(char)), jordan)])
    return canonicalize(p, ram, tail, tame, coord)


def tame_local(p: int, pairs, coord: str = "t") -> LocalRep:
    """Tame local data from (residue, jordan) pairs."""
    atoms = [ElementaryAtom(p, 1, LaurentTail(p), TameChar(Fraction(a)), n)
             for a, n in pairs]
    return LocalRep(p, atoms, coord)


# ---------------------------------------------------------------------------
# duality, tensor, determinant

def dual(rep: LocalRep) -> LocalRep:
    out = []
    for a in rep.atoms:
        out.extend(canonicalize(rep.p, a.ram, -a.tail,
                                TameRep([TameAtom(a.char.inv(), a.jordan)])).atoms)
    return LocalRep(rep.p, out, rep.coord)


def tensor(rep1: LocalRep, rep2: LocalRep) -> LocalRep:
    """Tensor product, bilinear over atoms via the Mackey double-coset formula.

    For atoms of covering degrees r1, r2 with d = gcd(r1, r2) and
    N = r1*r2/d the product is the sum over k < d of
    [N]_* (psi(phi1(u^{r2/d}) + phi2((zeta_N^k u)^{r1/d}))
          (x) pulled-back tame parts); every summand is re-canonicalized,
    since cancellation in the combined tail can trigger descent.
    """
    if rep1.p != rep2.p:
        raise ModelError("mixed characteristics")
    p = rep1.p
    out = []
    for a in rep1.atoms:
        for b in rep2.atoms:
            out.extend(_tensor_pair(p, a, b).atoms)
    return LocalRep(p, out, rep1.coord)


def _tensor_pair(p: int, a: ElementaryAtom, b: ElementaryAtom) -> LocalRep:
    d = gcd(a.ram, b.ram)
    N = a.ram * b.ram // d
    r1p, r2p = a.ram // d, b.ram // d
    char = a.char.pullback(r2p).mul(b.char.pullback(r1p))
    tame = tame_tensor_atoms(TameAtom(char, a.jordan), TameAtom(TameChar(Fraction(0)), b.jordan))
    base1 = a.tail.inflate(r2p)
    base2 = b.tail.inflate(r1p)
    pieces = []
    if d == 1:
        pieces.append(base1 + base2)
    else:
        ambient = splitting_degree(N, p)
        for _, c in a.tail.terms + b.tail.terms:
            ambient = lcm(ambient, c.field.m)
        zeta = root_of_unity(N, p, ambient=ambient)
        zk = zeta ** 0
        for k in range(d):
            pieces.append(base1 + base2.rotate(zk))
            zk = zk * zeta
    out = []
    for phi in pieces:
        out.extend(canonicalize(p, N, phi, tame).atoms)
    return LocalRep(p, out)


def determinant(rep: LocalRep) -> tuple[TameChar, LaurentTail]:
    """Determinant character, as (tame residue, wild additive tail in the base
    coordinate).

    Per atom the tame part is (r-1)*n/2 + n*a mod 1 (the sign of the cyclic
    permutation, times the tame twist) and the wild part is the additive
    character of n * Tr(phi), the trace taken along the degree-r cover; the
    exponents of phi not divisible by r cancel in the trace.  Determinants
    multiply across the multiset.
    """
    res = Fraction(0)
    tail = LaurentTail(rep.p)
    for a in rep.atoms:
        res += Fraction(a.ram - 1, 2) * a.jordan + a.char.residue * a.jordan
        tr = trace_to_base(a.tail, a.ram).scale(a.jordan)
        tail = tail + tr
    return TameChar(res), as_reduce(tail)


def invariant_dim(rep: LocalRep) -> int:
    """Dimension of the inertia invariants: wild atoms contribute nothing,
    a tame block contributes one line iff its character is trivial."""
    return sum(1 for a in rep.atoms if not a.is_wild() and a.char.is_trivial())


def formal_monodromy(rep: LocalRep) -> TameRep:
    """Restriction to a complement of wild inertia: the r-cycle twist of the
    tame part, a tame representation of the same rank."""
    atoms = []
    for a in rep.atoms:
        atoms.extend(pushforward_decompose(TameAtom(a.char, a.jordan), a.ram, rep.p))
    return TameRep(atoms)


def torus_data(rep: LocalRep) -> list[LaurentTail]:
    """The diagonal wild-inertia character tails {phi(zeta u)}, with
    multiplicity n per atom; tame blocks contribute zero tails."""
    out = []
    for a in rep.atoms:
        conj = orbit_tails(a.tail, a.ram)
        for t in conj:
            out.extend([t] * a.jordan)
    return out


def is_isomorphic(rep1: LocalRep, rep2: LocalRep) -> bool:
    return rep1 == rep2


def is_selfdual(rep: LocalRep) -> bool:
    return rep == dual(rep)
