"""Rank-7 G2 checks: weight and torus patterns, pole-order exclusion,
verification of the built-in classification table, and the constrained
classification search.

The classification table lists ten families of local-monodromy pairs
(tame at 0, wild at infinity) of rank 7; `verify_table_row` certifies each
family's invariants (trivial determinants, self-duality, G2 weight and torus
patterns, rigidity index 2) and `classify` re-derives the table from the
search bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd, lcm

from .gf import field, root_of_unity, splitting_degree
from .laurent import LaurentTail, orbit_tails
from .tame import TameAtom, TameChar, TameRep
from .elementary import (ElementaryAtom, LocalRep, ModelError, canonicalize,
                         check_model_validity, determinant, dual,
                         formal_monodromy, invariant_dim, is_selfdual,
                         tame_local, tensor, torus_data, wild_atom)
from .rigidity import INF, GlobalLocalData, euler_char, index_of_rigidity
from .fourier import reduction_step_rank
from .g2_structure import achievable_data


# ---------------------------------------------------------------------------
# weight and torus patterns

@dataclass(frozen=True)
class G2Witness:
    """Certificate that a multiset has the shape {0, +-a, +-b, +-(a+b)}."""

    kind: str                      # "weight" or "torus"
    first: object                  # TameChar or LaurentTail
    second: object
    whitelist_type: int | None = None


def _pattern_multiset_res(a: Fraction, b: Fraction) -> tuple[Fraction, ...]:
    vals = [Fraction(0), a, -a, b, -b, a + b, -a - b]
    return tuple(sorted(v % 1 for v in vals))


def weight_pattern_witnesses(chars) -> list[tuple[Fraction, Fraction]]:
    """All (a, b) with {0, +-a, +-b, +-(a+b)} equal to the given multiset."""
    M = tuple(sorted(Fraction(c) % 1 for c in chars))
    if len(M) != 7:
        return []
    seen = []
    cand = sorted(set(M))
    for a in cand:
        for b in cand:
            if _pattern_multiset_res(a, b) == M:
                seen.append((a, b))
    return seen


def g2_weight_pattern(rep: LocalRep) -> G2Witness | None:
    """Weight-pattern witness for tame rank-7 local data, with the matched
    table 0-column type (None when the Jordan layout is outside the table's
    ten shapes)."""
    if rep.rank() != 7:
        raise ModelError("weight pattern requires rank 7")
    if not rep.is_tame():
        raise ModelError("weight pattern applies to tame data")
    tame = rep.tame_part_rep()
    wits = weight_pattern_witnesses(tame.char_multiset())
    if not wits:
        return None
    a, b = wits[0]
    types = whitelist_types(rep)
    return G2Witness("weight", TameChar(a), TameChar(b),
                     types[0] if types else None)


def torus_common_cover_tails(rep: LocalRep) -> list[LaurentTail]:
    """Diagonal wild-character tails pulled back to the common cover, where
    additive relations between different atoms' characters are defined."""
    rams = [a.ram for a in rep.atoms] or [1]
    R = 1
    for r in rams:
        R = lcm(R, r)
    out = []
    for a in rep.atoms:
        for t in orbit_tails(a.tail, a.ram):
            out.extend([t.inflate(R // a.ram)] * a.jordan)
    return out


def _tails_multiset_key(tails):
    return tuple(sorted(t.key() for t in tails))


def g2_torus_pattern(rep: LocalRep) -> G2Witness | None:
    """Torus-pattern witness: the wild-character tails (on the common cover)
    must form {0, +-f, +-g, +-(f+g)}."""
    if rep.rank() != 7:
        raise ModelError("torus pattern requires rank 7")
    tails = torus_common_cover_tails(rep)
    target = _tails_multiset_key(tails)
    p = rep.p
    zero = LaurentTail(p)
    cand = {t.key(): t for t in tails}
    for f in cand.values():
        for g in cand.values():
            pat = [zero, f, -f, g, -g, f + g, -(f + g)]
            if _tails_multiset_key(pat) == target:
                return G2Witness("torus", f, g)
    return None


# ---------------------------------------------------------------------------
# table 0-column shapes (ten types, matching the table rows)

def _blocks(rep: LocalRep) -> list[tuple[Fraction, int]]:
    return sorted(((a.char.residue, a.jordan) for a in rep.atoms))


def whitelist_types(rep: LocalRep) -> list[int]:
    """Which of the ten table 0-column shapes the tame data matches."""
    B = _blocks(rep)
    half = Fraction(1, 2)
    out = []

    def multiset(items):
        return sorted(items)

    if B == multiset([(Fraction(0), 3), (Fraction(0), 3), (Fraction(0), 1)]):
        out.append(1)
    if B == multiset([(half, 2), (half, 2)] + [(Fraction(0), 1)] * 3):
        out.append(2)
    singles = [r for r, n in B if n == 1]
    if all(n == 1 for _, n in B):
        from collections import Counter
        c = Counter(singles)
        zeros = c[Fraction(0)]
        # type 3: {x, x, -x, -x, 0, 0, 0}
        if zeros == 3:
            rest = sorted(r for r in singles if r != 0)
            if len(rest) == 4:
                xs = sorted(set(rest))
                if len(xs) == 2 and xs[0] == (-xs[1]) % 1 and c[xs[0]] == 2 \
                        and xs[0] not in (Fraction(0), half):
                    out.append(3)
        # type 5: {i, i, -i, -i, 1/2, 1/2, 0} with i of order 4
        if zeros == 1 and c[half] == 2:
            rest = sorted(r for r in singles if r not in (Fraction(0), half))
            if len(rest) == 4:
                xs = sorted(set(rest))
                if len(xs) == 2 and xs[0].denominator == 4 and \
                        xs[1] == (-xs[0]) % 1 and c[xs[0]] == 2:
                    out.append(5)
        # type 10: seven distinct {0, x, y, x+y and inverses}
        if zeros == 1 and len(set(singles)) == 7:
            nz = [r for r in singles if r != 0]
            for x in nz:
                for y in nz:
                    pat = sorted(r % 1 for r in
                                 [Fraction(0), x, -x, y, -y, x + y, -x - y])
                    if pat == multiset(singles) and len(set(pat)) == 7:
                        if all(r not in (Fraction(0),) for r in
                               [x % 1, y % 1, (x + y) % 1]):
                            out.append(10)
                            break
                if 10 in out:
                    break
    if B == multiset([(Fraction(0), 3), (Fraction(0), 2), (Fraction(0), 2)]):
        out.append(4)
    if B == [(Fraction(0), 7)]:
        out.append(6)
    # type 7: eps U(3) + conj U(3) + 1, eps of order 3
    if len(B) == 3:
        three = sorted((r for r, n in B if n == 3))
        ones = [(r, n) for r, n in B if n == 1]
        if len(three) == 2 and ones == [(Fraction(0), 1)]:
            e1, e2 = three
            if e1.denominator == 3 and e2 == (-e1) % 1 and e1 != e2:
                out.append(7)
    # type 8: z U(2) + conj U(2) + z^2 + conj + 1
    twos = sorted(r for r, n in B if n == 2)
    ones = sorted(r for r, n in B if n == 1)
    if len(twos) == 2 and len(ones) == 3:
        z1, z2 = twos
        if z2 == (-z1) % 1 and z1 not in (Fraction(0), half) and \
                (4 * z1) % 1 != 0:
            expect = sorted([(2 * z1) % 1, (-2 * z1) % 1, Fraction(0)])
            if ones == expect:
                out.append(8)
    # type 9: x U(2) + conj U(2) + U(3)
    if len(B) == 3:
        twos = sorted((r for r, n in B if n == 2))
        threes = [(r, n) for r, n in B if n == 3]
        if len(twos) == 2 and threes == [(Fraction(0), 3)]:
            x1, x2 = twos
            if x2 == (-x1) % 1 and x1 not in (Fraction(0), half):
                out.append(9)
    return out


def g2_element_datum(rep: LocalRep):
    """(eigenvalue residue -> Jordan partition) datum of tame data."""
    groups: dict[Fraction, list[int]] = {}
    for a in rep.atoms:
        groups.setdefault(a.char.residue, []).append(a.jordan)
    return tuple(sorted((r, tuple(sorted(ns, reverse=True)))
                        for r, ns in groups.items()))


def g2_realizable_tame(rep: LocalRep) -> bool:
    """Is the tame datum the Jordan datum of an actual G2 element?"""
    if rep.rank() != 7 or not rep.is_tame():
        return False
    tame = rep.tame_part_rep()
    datum = g2_element_datum(rep)
    for a, b in weight_pattern_witnesses(tame.char_multiset()):
        if datum in achievable_data(a, b):
            return True
    return False


def formal_monodromy_rep(rep: LocalRep) -> LocalRep:
    """Formal monodromy as tame local data (for pattern checks)."""
    fm = formal_monodromy(rep)
    return tame_local(rep.p, [(a.char.residue, a.jordan) for a in fm],
                      rep.coord)


# ---------------------------------------------------------------------------
# orthogonality: the data must carry a symmetric (SO_7) structure

def atom_indicator(atom: ElementaryAtom) -> int | None:
    """+1 (orthogonal) or -1 (symplectic) for self-dual atoms, None else.

    A self-dual wild atom [r](phi, a, n) has r even and a in {0, 1/2}; the
    invariant form is symmetric exactly when the twist character takes value
    +1 on the tame generator of the subcover, corrected by the Jordan-block
    parity.  Tame self-dual blocks contribute the Jordan parity only.
    """
    one_atom = LocalRep(atom.p, [atom])
    if one_atom != dual(one_atom):
        return None
    jordan_sign = -1 if atom.jordan % 2 == 0 else 1
    if not atom.is_wild():
        return jordan_sign
    char_sign = 1 if atom.char.residue == 0 else -1
    return char_sign * jordan_sign


def has_orthogonal_structure(rep: LocalRep) -> bool:
    """Self-dual data embeds in O_7 iff every symplectic self-dual atom class
    occurs with even multiplicity."""
    from collections import Counter
    counts = Counter(rep.atoms)
    for atom, mult in counts.items():
        if mult % 2 == 0:
            continue
        ind = atom_indicator(atom)
        if ind == -1:
            return False
    return True


# ---------------------------------------------------------------------------
# pole-order exclusion scan

@dataclass(frozen=True)
class ScanVerdict:
    pole: int
    ram: int
    verdict: str      # "possible" | "excluded"
    mechanism: str


LEMMA_TABLE: dict[int, list[int]] = {
    1: [1, 2, 3, 4, 5, 6],
    2: [2, 4, 6],
    3: [3, 6],
    4: [4],
    6: [6],
}


def _sign_relation_solvable(p: int, s: int, r: int, nreps: int,
                            allowed_exps: list[int]) -> bool:
    """Can conjugate tails of a pole-s atom satisfy a signed-sum relation?

    The representatives t_i = phi(zeta_r^i u), i < nreps, must admit signs
    with sum(eps_i t_i) = 0 for some tail of pole order exactly s that is
    primitive for the cover degree r.  Exponent by exponent the relation
    reads a_m * sum(eps_i zeta^{-i m}) = 0, so a_m is free exactly when the
    root-of-unity sum vanishes.
    """
    d = splitting_degree(r, p)
    zeta = root_of_unity(r, p)
    one = field(p, 1).one()
    for signs in product((1, -1), repeat=nreps):
        free = []
        for m in allowed_exps:
            acc = None
            for i, e in enumerate(signs):
                term = zeta ** ((-i * m) % r)
                term = term if e == 1 else -term
                acc = term if acc is None else acc + term
            if acc.is_zero():
                free.append(m)
        if s in free and gcd(*free, r) == 1:
            return True
    return False


def pole_exclusion_scan(p: int) -> list[ScanVerdict]:
    """Verdicts for the pole order / covering degree case table.

    Pole orders 1 and 2 are reported possible; for the listed cases with
    pole order >= 3 the scan searches the rank-7 configurations built from a
    single atom of that shape (a self-dual atom plus tame filler, or the
    atom with its dual plus filler) for a torus pattern, and reports
    "excluded" when none exists.
    """
    if p <= 7:
        raise ModelError("scan requires p > 7")
    out = []
    for s, rams in sorted(LEMMA_TABLE.items()):
        for r in rams:
            if s <= 2:
                out.append(ScanVerdict(s, r, "possible", "pole order within bound"))
                continue
            feasible = False
            mechanisms = []
            # atom + dual + tame filler; pattern needs 1 or 3 zero lines
            if 2 * r <= 7 and (7 - 2 * r) in (1, 3):
                mechanisms.append("torus-relations")
                if _sign_relation_solvable(p, s, r, min(r, 3),
                                           list(range(1, s + 1))):
                    feasible = True
            # self-dual atom (r even, negation = half-turn) + tame filler
            if r % 2 == 0 and r <= 7 and (7 - r) in (1, 3):
                odd_exps = [m for m in range(1, s + 1) if m % 2 == 1]
                if s in odd_exps and gcd(*odd_exps, r) == 1:
                    mechanisms.append("torus-relations")
                    if _sign_relation_solvable(p, s, r, r // 2, odd_exps):
                        feasible = True
            if feasible:
                out.append(ScanVerdict(s, r, "possible", "pattern realizable"))
            else:
                mech = " / ".join(sorted(set(mechanisms))) if mechanisms else "rank"
                out.append(ScanVerdict(s, r, "excluded", mech))
    return out


# ---------------------------------------------------------------------------
# the classification table rows

DEFAULT_PARAMS: dict[str, object] = {
    "l1": 1,
    "l2": 2,
    "chi": Fraction(1, 3),
    "x": Fraction(1, 5),
    "y": Fraction(1, 7),
    "z": Fraction(1, 8),
    "eps": Fraction(1, 3),
    "iota": Fraction(1, 4),
}

ROW_INFINITY_SHAPE = {1: "A", 2: "A", 3: "A", 4: "B", 5: "C",
                      6: "D", 7: "D", 8: "D", 9: "D", 10: "D"}

ROW_WILD_SLOPE = {"A": Fraction(1, 2), "B": Fraction(1, 2),
                  "C": Fraction(1, 3), "D": Fraction(1, 6)}


@dataclass(frozen=True)
class RowSpec:
    row: int
    params: dict = dc_field(default_factory=dict)

    def merged(self) -> dict:
        out = dict(DEFAULT_PARAMS)
        out.update(self.params)
        return out


def row_constraint_violations(row: int, params: dict, p: int) -> list[str]:
    v = []
    if p <= 7:
        v.append(f"p = {p} is not > 7")
    l1 = int(params["l1"]) % p
    if l1 == 0:
        v.append("l1 vanishes")

    def frac(name):
        f = Fraction(params[name]) % 1
        if f.denominator % p == 0:
            v.append(f"character {name} has order divisible by p")
        return f

    if row in (1, 2, 3):
        chi = frac("chi")
        if chi == 0:
            v.append("chi is trivial")
        if chi.denominator == 2:
            v.append("chi is quadratic")
    if row == 3:
        x = frac("x")
        if x == 0 or x.denominator == 2:
            v.append("x and its inverse must differ and be non-trivial")
    if row == 4:
        l2 = int(params["l2"]) % p
        if l2 == 0:
            v.append("l2 vanishes")
        if (l1 - l2) % p == 0 or (l1 + l2) % p == 0:
            v.append("l1 = +-l2 is excluded")
    if row == 5:
        iota = frac("iota")
        if iota.denominator != 4:
            v.append("iota must have order 4")
    if row == 7:
        eps = frac("eps")
        if eps.denominator != 3:
            v.append("eps must have order 3")
    if row == 8:
        z = frac("z")
        if z == 0:
            v.append("z is trivial")
        if (4 * z) % 1 == 0:
            v.append("z^4 must be non-trivial")
    if row == 9:
        x = frac("x")
        if x == 0 or x.denominator == 2:
            v.append("x and its inverse must differ and be non-trivial")
    if row == 10:
        x, y = frac("x"), frac("y")
        vals = [x, (-x) % 1, y, (-y) % 1, (x + y) % 1, (-x - y) % 1]
        if any(val == 0 for val in vals) or len(set(vals)) != 6:
            v.append("x, y, xy and their inverses must be pairwise "
                     "different and non-trivial")
    return v


def build_row_data(row: int, params: dict, p: int) -> tuple[LocalRep, LocalRep]:
    """Local data (at 0, at infinity) of one table row."""
    l1 = int(params["l1"]) % p
    l2 = int(params["l2"]) % p
    chi = Fraction(params["chi"]) % 1
    x = Fraction(params["x"]) % 1
    y = Fraction(params["y"]) % 1
    z = Fraction(params["z"]) % 1
    eps = Fraction(params["eps"]) % 1
    iota = Fraction(params["iota"]) % 1
    half = Fraction(1, 2)

    zero_side = {
        1: [(0, 3), (0, 3), (0, 1)],
        2: [(half, 2), (half, 2), (0, 1), (0, 1), (0, 1)],
        3: [(x, 1), (x, 1), (-x, 1), (-x, 1), (0, 1), (0, 1), (0, 1)],
        4: [(0, 3), (0, 2), (0, 2)],
        5: [(iota, 1), (iota, 1), (iota + half, 1), (iota + half, 1),
            (half, 1), (half, 1), (0, 1)],
        6: [(0, 7)],
        7: [(eps, 3), (-eps, 3), (0, 1)],
        8: [(z, 2), (-z, 2), (2 * z, 1), (-2 * z, 1), (0, 1)],
        9: [(x, 2), (-x, 2), (0, 3)],
        10: [(x, 1), (y, 1), (x + y, 1), (-x - y, 1), (-y, 1), (-x, 1), (0, 1)],
    }[row]
    v0 = tame_local(p, zero_side, coord="t")

    shape = ROW_INFINITY_SHAPE[row]
    if shape == "A":
        pair = canonicalize(p, 2, LaurentTail.from_ints(p, {1: l1}),
                            TameRep([TameAtom(TameChar(chi), 1),
                                     TameAtom(TameChar(-chi), 1)]), coord="u")
        vinf = pair + wild_atom(p, 2, {1: 2 * l1}, coord="u") \
            + tame_local(p, [(half, 1)], coord="u")
    elif shape == "B":
        vinf = (wild_atom(p, 2, {1: l1}, coord="u")
                + wild_atom(p, 2, {1: l2}, coord="u")
                + wild_atom(p, 2, {1: l1 + l2}, coord="u")
                + tame_local(p, [(half, 1)], coord="u"))
    elif shape == "C":
        vinf = (wild_atom(p, 3, {1: l1}, coord="u")
                + wild_atom(p, 3, {1: -l1}, coord="u")
                + tame_local(p, [(0, 1)], coord="u"))
    else:
        vinf = wild_atom(p, 6, {1: l1}, coord="u") \
            + tame_local(p, [(half, 1)], coord="u")
    return v0, vinf.with_coord("u")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    row: int
    p: int
    params: dict
    constraint_failures: list[str]
    checks: list[CheckResult]
    rig: int | None = None
    reduction_rank: int | None = None
    weight_witness: str = ""
    torus_witness: str = ""

    @property
    def passed(self) -> bool:
        return not self.constraint_failures and all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "row": self.row,
            "p": self.p,
            "params": {k: str(v) for k, v in self.params.items()},
            "constraint_failures": self.constraint_failures,
            "checks": [c.to_json() for c in self.checks],
            "rig": self.rig,
            "reduction_rank": self.reduction_rank,
            "weight_witness": self.weight_witness,
            "torus_witness": self.torus_witness,
            "passed": self.passed,
        }


def verify_table_row(spec: RowSpec, p: int = 13) -> VerificationReport:
    """Certify one table row's invariants with the given parameters."""
    params = spec.merged()
    fails = row_constraint_violations(spec.row, params, p)
    report = VerificationReport(spec.row, p, params, fails, [])
    if fails:
        return report
    v0, vinf = build_row_data(spec.row, params, p)
    checks = report.checks

    checks.append(CheckResult("rank7", v0.rank() == 7 and vinf.rank() == 7,
                              f"ranks {v0.rank()}, {vinf.rank()}"))
    try:
        check_model_validity(v0)
        check_model_validity(vinf)
        checks.append(CheckResult("swan-bound", True,
                                  f"Sw = {v0.swan()}, {vinf.swan()} < {p}"))
    except ModelError as e:
        checks.append(CheckResult("swan-bound", False, str(e)))

    for label, repdata in (("0", v0), ("inf", vinf)):
        res, tail = determinant(repdata)
        checks.append(CheckResult(
            f"det-trivial-{label}", res.is_trivial() and tail.is_zero(),
            f"det = ({res!r}, {tail!r})"))
        checks.append(CheckResult(f"self-dual-{label}", is_selfdual(repdata)))
        checks.append(CheckResult(f"orthogonal-{label}",
                                  has_orthogonal_structure(repdata)))

    wit = g2_weight_pattern(v0)
    ok = wit is not None and wit.whitelist_type == spec.row
    checks.append(CheckResult(
        "weight-pattern-0", ok,
        f"witness ({wit.first!r}, {wit.second!r}), type {wit.whitelist_type}"
        if wit else "no witness"))
    report.weight_witness = f"({wit.first!r}, {wit.second!r})" if wit else ""

    twit = g2_torus_pattern(vinf)
    checks.append(CheckResult(
        "torus-pattern-inf", twit is not None,
        f"witness ({twit.first!r}, {twit.second!r})" if twit else "no witness"))
    report.torus_witness = f"({twit.first!r}, {twit.second!r})" if twit else ""

    fm = formal_monodromy_rep(vinf)
    fm_ok = False
    try:
        fm_wit = g2_weight_pattern(fm)
        fm_ok = fm_wit is not None and g2_realizable_tame(fm)
    except ModelError:
        pass
    checks.append(CheckResult("formal-monodromy-pattern-inf", fm_ok))

    slope = ROW_WILD_SLOPE[ROW_INFINITY_SHAPE[spec.row]]
    expected = sorted([(Fraction(0), 1), (slope, 6)])
    checks.append(CheckResult("slopes-inf", vinf.slopes() == expected,
                              f"slopes {vinf.slopes()}"))

    data = GlobalLocalData.make(7, p, [(0, v0), (INF, vinf)])
    rig = index_of_rigidity(data)
    report.rig = rig
    checks.append(CheckResult("rigidity-index", rig == 2, f"rig = {rig}"))

    red = reduction_step_rank(data)
    report.reduction_rank = red
    checks.append(CheckResult("fourier-reduction-certificate", red < 7,
                              f"transformed rank {red} < 7"))
    return report


def verify_all_rows(p: int = 13, overrides: dict | None = None) -> list[VerificationReport]:
    return [verify_table_row(RowSpec(row, overrides or {}), p)
            for row in range(1, 11)]


# ---------------------------------------------------------------------------
# classification search

@dataclass
class Family:
    row: int
    zero_side: str
    infinity_side: str
    count: int


@dataclass
class ClassificationResult:
    p: int
    nmax: int
    families: dict[int, Family]
    unmatched: list[str]
    stats: dict

    @property
    def complete(self) -> bool:
        return not self.unmatched and len(self.families) == 10

    def to_json(self):
        return {
            "p": self.p,
            "nmax": self.nmax,
            "families": {
                str(k): {"row": f.row, "zero_side": f.zero_side,
                         "infinity_side": f.infinity_side, "count": f.count}
                for k, f in sorted(self.families.items())},
            "unmatched": self.unmatched,
            "stats": self.stats,
            "complete": self.complete,
        }


def admissible_residues(nmax: int, p: int) -> list[Fraction]:
    out = {Fraction(0)}
    for den in range(1, nmax + 1):
        if gcd(den, p) != 1:
            continue
        for num in range(1, den):
            if gcd(num, den) == 1:
                out.add(Fraction(num, den))
    return sorted(out)


def _tame_inv_end(blocks) -> int:
    return sum(min(n1, n2) for r1, n1 in blocks for r2, n2 in blocks if r1 == r2)


def enumerate_zero_side(nmax: int, p: int) -> dict[LocalRep, int]:
    """All G2-realizable tame rank-7 data with residues of denominator
    <= nmax: candidates for the tame local monodromy, keyed to the
    invariant count of their End.

    The fully unramified datum (seven trivial lines) is excluded: the tame
    point must be genuinely singular for the two-point configuration.
    """
    res = admissible_residues(nmax, p)
    out: dict[LocalRep, int] = {}
    trivial = tame_local(p, [(0, 1)] * 7)
    for a in res:
        for b in res:
            if ((a + b) % 1).denominator > nmax:
                continue
            for datum in achievable_data(a, b):
                blocks = []
                ok = True
                for resid, part in datum:
                    if resid.denominator > nmax or resid.denominator % p == 0:
                        ok = False
                        break
                    blocks.extend((resid, n) for n in part)
                if not ok:
                    continue
                rep = tame_local(p, blocks)
                if rep == trivial:
                    continue
                if rep not in out:
                    out[rep] = _tame_inv_end(blocks)
    return out


# wild atom templates (ram, pole): slope numerator 1 and pole <= 2
def _wild_templates(p: int):
    out = []
    for r in range(1, 7):
        if r % p == 0:
            continue
        for s in (1, 2):
            if r % s == 0:
                out.append((r, s))
    return out


def _tail_orbit_reps(p: int, r: int, s: int) -> list[LaurentTail]:
    seen = {}
    if s == 1:
        combos = [({1: lam}) for lam in range(1, p)]
    else:
        combos = [({2: lam, 1: mu}) for lam in range(1, p) for mu in range(1, p)]
    for coeffs in combos:
        rep = wild_atom(p, r, coeffs)
        if len(rep.atoms) != 1:
            continue
        atom = rep.atoms[0]
        if atom.ram != r or atom.pole != s:
            continue
        seen[atom.tail.key()] = atom.tail
    return list(seen.values())


def _wild_shape_multisets():
    """Multisets of (ram, pole, jordan) with total wild rank 4 or 6."""
    templates = [(r, s) for r, s in _wild_templates(13)]  # p-independent for p > 7
    items = []
    for r, s in templates:
        for n in range(1, 6 // r + 1):
            items.append((r, s, n))
    shapes = []

    def rec(start, remaining, acc):
        if remaining == 0:
            shapes.append(tuple(acc))
            return
        for i in range(start, len(items)):
            r, s, n = items[i]
            if r * n <= remaining:
                rec(i, remaining - r * n, acc + [items[i]])

    for W in (4, 6):
        rec(0, W, [])
    return shapes


def _selfdual_char_multisets(size: int, residues) -> list[tuple[Fraction, ...]]:
    """Negation-closed char multisets of the given size."""
    half = Fraction(1, 2)
    selfinv = [Fraction(0), half]
    out = set()
    if size == 1:
        for c in selfinv:
            out.add((c,))
    elif size == 2:
        for c in residues:
            out.add(tuple(sorted((c, (-c) % 1))))
        for c1 in selfinv:
            for c2 in selfinv:
                out.add(tuple(sorted((c1, c2))))
    elif size == 3:
        for c in residues:
            for d in selfinv:
                out.add(tuple(sorted((c, (-c) % 1, d))))
    else:
        raise ModelError("unsupported multiset size")
    return sorted(out)


def _filler_structures(rank: int, residues):
    """Self-dual tame blocks of the given total rank."""
    half = Fraction(1, 2)
    selfinv = [Fraction(0), half]
    out = []
    if rank == 1:
        for c in selfinv:
            out.append(((c, 1),))
    elif rank == 3:
        for c in selfinv:
            out.append(((c, 3),))
        for c in selfinv:
            for d in selfinv:
                out.append(tuple(sorted([(c, 2), (d, 1)])))
        for chars in _selfdual_char_multisets(3, residues):
            out.append(tuple(sorted((c, 1) for c in chars)))
    return sorted(set(out))


_DUAL_TAIL_CACHE: dict = {}


def _dual_tail(p: int, r: int, tail: LaurentTail) -> LaurentTail:
    key = (p, r, tail.key())
    hit = _DUAL_TAIL_CACHE.get(key)
    if hit is None:
        rep = canonicalize(p, r, -tail,
                           TameRep([TameAtom(TameChar(Fraction(0)), 1)]))
        assert len(rep.atoms) == 1
        hit = _DUAL_TAIL_CACHE[key] = rep.atoms[0].tail
    return hit


def _group_tail_multisets(p, r, s, count, reps):
    """Dual-closed tail multisets for a group of identical atom templates."""
    from collections import Counter
    out = []
    for combo in combinations_with_replacement(reps, count):
        fwd = Counter(t.key() for t in combo)
        bwd = Counter(_dual_tail(p, r, t).key() for t in combo)
        if fwd == bwd:
            out.append(combo)
    return out


def _end_prune_value(p, atoms_spec, filler_rank) -> int:
    """Lower bound for Sw(End) - inv(End), independent of characters."""
    atoms = [ElementaryAtom(p, r, t, TameChar(Fraction(0)), n)
             for r, s, n, t in atoms_spec]
    atoms += [ElementaryAtom(p, 1, LaurentTail(p), TameChar(Fraction(0)), 1)
              for _ in range(filler_rank)]
    rep = LocalRep(p, atoms, "u")
    end = tensor(rep, dual(rep))
    tame_blocks = sum(1 for a in end.atoms if not a.is_wild())
    return end.swan() - tame_blocks


def enumerate_infinity_side(nmax: int, p: int, max_inv0: int) -> list[tuple[LocalRep, int]]:
    """Wild rank-7 candidates at infinity surviving all local filters,
    paired with Sw(End) - inv(End)."""
    residues = admissible_residues(nmax, p)
    survivors = []
    seen = set()
    tail_cache: dict[tuple[int, int], list[LaurentTail]] = {}
    for shape in _wild_shape_multisets():
        wild_rank = sum(r * n for r, s, n in shape)
        filler_rank = 7 - wild_rank
        groups: dict[tuple[int, int, int], int] = {}
        for item in shape:
            groups[item] = groups.get(item, 0) + 1
        group_items = sorted(groups.items())
        tail_choices = []
        for (r, s, n), count in group_items:
            if (r, s) not in tail_cache:
                tail_cache[(r, s)] = _tail_orbit_reps(p, r, s)
            tail_choices.append(
                _group_tail_multisets(p, r, s, count, tail_cache[(r, s)]))
        for tail_combo in product(*tail_choices):
            atoms_spec = []  # (r, s, n, tail)
            for ((r, s, n), _), tails in zip(group_items, tail_combo):
                for t in tails:
                    atoms_spec.append((r, s, n, t))
            if not _tails_torus_pattern(p, atoms_spec, filler_rank):
                continue
            if _end_prune_value(p, atoms_spec, filler_rank) + 2 > max_inv0:
                continue
            for rep in _char_assignments(p, atoms_spec, filler_rank, residues):
                if rep in seen:
                    continue
                seen.add(rep)
                if not _local_filters(rep):
                    continue
                end = tensor(rep, dual(rep))
                dval = end.swan() - invariant_dim(end)
                if dval + 2 > max_inv0:
                    continue
                survivors.append((rep, dval))
    return survivors


def _tails_torus_pattern(p, atoms_spec, filler_rank) -> bool:
    R = 1
    for r, s, n, t in atoms_spec:
        R = lcm(R, r)
    tails = []
    for r, s, n, t in atoms_spec:
        for conj in orbit_tails(t, r):
            tails.extend([conj.inflate(R // r)] * n)
    tails.extend([LaurentTail(p)] * filler_rank)
    target = _tails_multiset_key(tails)
    zero = LaurentTail(p)
    cand = {t.key(): t for t in tails}
    for f in cand.values():
        for g in cand.values():
            pat = [zero, f, -f, g, -g, f + g, -(f + g)]
            if _tails_multiset_key(pat) == target:
                return True
    return False


def _char_assignments(p, atoms_spec, filler_rank, residues):
    """All self-dual, determinant-trivial char assignments for the config."""
    from collections import defaultdict

    by_class: dict = defaultdict(list)
    for idx, (r, s, n, t) in enumerate(atoms_spec):
        by_class[(r, s, n, t.key())].append(idx)
    keys = sorted(by_class)
    # pair up groups with their dual groups
    handled = set()
    group_plans = []  # list of (indices, dual_indices or None)
    lookup = {k: by_class[k] for k in keys}
    for k in keys:
        if k in handled:
            continue
        r, s, n, tk = k
        tail = next(t for (r2, s2, n2, t) in atoms_spec
                    if (r2, s2, n2, t.key()) == k)
        dk = (r, s, n, _dual_tail(p, r, tail).key())
        if dk == k:
            group_plans.append((lookup[k], None))
            handled.add(k)
        else:
            if dk not in lookup or len(lookup[dk]) != len(lookup[k]):
                return
            group_plans.append((lookup[k], lookup[dk]))
            handled.add(k)
            handled.add(dk)

    choice_lists = []
    for idxs, dual_idxs in group_plans:
        size = len(idxs)
        if dual_idxs is None:
            choice_lists.append(_selfdual_char_multisets(size, residues))
        else:
            opts = set()
            for combo in combinations_with_replacement(residues, size):
                opts.add(tuple(sorted(combo)))
            choice_lists.append(sorted(opts))
    fillers = _filler_structures(filler_rank, residues)

    for combo in product(*choice_lists):
        assign: dict[int, Fraction] = {}
        for (idxs, dual_idxs), chars in zip(group_plans, combo):
            for i, c in zip(idxs, chars):
                assign[i] = c
            if dual_idxs is not None:
                for i, c in zip(dual_idxs, chars):
                    assign[i] = (-c) % 1
        if any(a.denominator % p == 0 for a in assign.values()):
            continue
        # residue-level formal monodromy of the wild part, reused per filler
        fm_base = []
        det_base = Fraction(0)
        for idx, (r, s, n, t) in enumerate(atoms_spec):
            a = assign[idx]
            det_base += Fraction(r - 1, 2) * n + a * n
            for j in range(r):
                fm_base.extend([Fraction(a + j, r) % 1] * n)
        for filler in fillers:
            det_res = det_base + sum(c * n for c, n in filler)
            if det_res % 1 != 0:
                continue
            fm_chars = fm_base + [c % 1 for c, n in filler for _ in range(n)]
            if not weight_pattern_witnesses(fm_chars):
                continue
            atoms = [ElementaryAtom(p, r, t, TameChar(assign[idx]), n)
                     for idx, (r, s, n, t) in enumerate(atoms_spec)]
            for c, n in filler:
                atoms.append(ElementaryAtom(p, 1, LaurentTail(p), TameChar(c), n))
            rep = LocalRep(p, atoms, "u")
            res, tail = determinant(rep)
            if not res.is_trivial() or not tail.is_zero():
                continue
            yield rep


def _local_filters(rep: LocalRep) -> bool:
    if not is_selfdual(rep):
        return False
    if not has_orthogonal_structure(rep):
        return False
    fm = formal_monodromy_rep(rep)
    try:
        if g2_weight_pattern(fm) is None:
            return False
    except ModelError:
        return False
    if not g2_realizable_tame(fm):
        return False
    return True


# row template matching ------------------------------------------------------

def _match_infinity_template(rep: LocalRep) -> str | None:
    """Which table infinity-shape (A/B/C/D) the candidate instantiates."""
    half = Fraction(1, 2)
    wilds = [a for a in rep.atoms if a.is_wild()]
    tames = [a for a in rep.atoms if not a.is_wild()]
    if all(a.ram == 2 and a.pole == 1 and a.jordan == 1 for a in wilds) \
            and len(wilds) == 3 and len(tames) == 1 \
            and tames[0].char.residue == half and tames[0].jordan == 1:
        chars = sorted(a.char.residue for a in wilds)
        tails = [a.tail for a in wilds]
        # A: two atoms share a tail and carry (chi, chi^-1), third trivial
        by_tail: dict = {}
        for a in wilds:
            by_tail.setdefault(a.tail.key(), []).append(a)
        if len(by_tail) == 2:
            big = next(v for v in by_tail.values() if len(v) == 2)
            small = next(v for v in by_tail.values() if len(v) == 1)
            c1, c2 = sorted(a.char.residue for a in big)
            if c2 == (-c1) % 1 and c1 not in (Fraction(0), half) \
                    and small[0].char.residue == 0:
                lam = big[0].tail.coeff(1)
                mu = small[0].tail.coeff(1)
                two_lam = lam + lam
                if mu == two_lam or mu == -two_lam:
                    return "A"
        if len(by_tail) == 3 and all(a.char.residue == 0 for a in wilds):
            return "B"
    if len(wilds) == 2 and all(a.ram == 3 and a.pole == 1 and a.jordan == 1
                               and a.char.residue == 0 for a in wilds) \
            and len(tames) == 1 and tames[0].char.residue == 0 \
            and tames[0].jordan == 1:
        return "C"
    if len(wilds) == 1 and wilds[0].ram == 6 and wilds[0].pole == 1 \
            and wilds[0].jordan == 1 and wilds[0].char.residue == 0 \
            and len(tames) == 1 and tames[0].char.residue == half \
            and tames[0].jordan == 1:
        return "D"
    return None


SHAPE_ROWS = {"A": {1, 2, 3}, "B": {4}, "C": {5}, "D": {6, 7, 8, 9, 10}}


def _twist_euler_ok(v0: LocalRep, vinf: LocalRep) -> bool:
    """Necessary for irreducibility: the middle-extension Euler
    characteristic of every rank-one Kummer twist is non-positive (a
    positive value would force a rank-one sub- or quotient system)."""
    from collections import Counter
    sw = v0.swan() + vinf.swan()
    c0 = Counter(a.char.residue for a in v0.atoms if not a.is_wild())
    cinf = Counter(a.char.residue for a in vinf.atoms if not a.is_wild())
    for d in set(c0) | {(-r) % 1 for r in cinf}:
        if c0.get(d, 0) + cinf.get((-d) % 1, 0) > sw:
            return False
    return True


def classify(nmax: int = 12, p: int = 13, jobs: int = 1) -> ClassificationResult:
    """Constrained classification search.

    Enumerates tame rank-7 data at 0 (weight pattern + G2 element
    realizability, denominators <= nmax) against wild rank-7 data at
    infinity (numerator-1 slopes, pole orders <= 2, coefficients in F_p,
    trivial determinant, self-dual, torus pattern, admitting an orthogonal
    structure, formal monodromy with a realizable weight pattern), pairs
    them by the rigidity-index equation rig = 2, and matches the surviving
    pairs against the ten table row templates.
    """
    if p <= 7:
        raise ModelError("classification requires p > 7")
    zero_side = enumerate_zero_side(nmax, p)
    max_inv0 = max(zero_side.values())
    by_inv: dict[int, list[LocalRep]] = {}
    for rep, inv in zero_side.items():
        by_inv.setdefault(inv, []).append(rep)

    survivors = enumerate_infinity_side(nmax, p, max_inv0)

    families: dict[int, Family] = {}
    unmatched: list[str] = []
    pairs = 0
    for vinf, dval in survivors:
        matches_v0 = by_inv.get(dval + 2, [])
        if not matches_v0:
            continue
        shape = _match_infinity_template(vinf)
        for v0 in matches_v0:
            if not _twist_euler_ok(v0, vinf):
                continue
            pairs += 1
            types = whitelist_types(v0)
            rows = set(types) & SHAPE_ROWS.get(shape, set()) if shape else set()
            if len(rows) == 1:
                row = rows.pop()
                fam = families.get(row)
                if fam is None:
                    families[row] = Family(row, repr(v0), repr(vinf), 1)
                else:
                    fam.count += 1
            else:
                unmatched.append(f"({v0!r} ; {vinf!r}) rig=2, shape={shape}, "
                                 f"types={types}")
    stats = {
        "zero_side_candidates": len(zero_side),
        "infinity_side_survivors": len(survivors),
        "rig_matched_pairs": pairs,
    }
    return ClassificationResult(p, nmax, families, unmatched, stats)
