"""Parser for local-data documents and the local-representation grammar.

Grammar for a local representation expression::

    localrep := term ("+" term)* ;
    term     := wild | tame ;
    wild     := "[" int "]*(" "psi(" poly ")" [ "x" tame ("+" tame)* ] ")" ;
    tame     := [ "chi(" fraction ")" "*" ] "U(" int ")"
              | "chi(" fraction ")" | "1" | "-1" ;
    poly     := mono ("+" mono)* ;
    mono     := coeff "u^-" int ;
    coeff    := int | "l1" | "l2" ;

"-1" denotes the order-two character chi(1/2), "1" the trivial character.
A document is a sequence of lines: assignments ("p = 13", "rank = 7",
"l1 = 1", "l2 = 2"), one "at <point>:" line per singular point (points are
integers mod p or "inf"), blank lines, and "#" comments.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .gf import field
from .laurent import LaurentTail
from .tame import TameAtom, TameChar, TameRep
from .elementary import LocalRep, canonicalize, check_model_validity, tame_local
from .rigidity import INF, GlobalLocalData


class GrammarError(ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        loc = ""
        if line is not None:
            loc += f" at line {line}"
        if pos is not None:
            loc += f", column {pos + 1}"
        super().__init__(message + loc)
        self.pos = pos
        self.line = line


_TOKEN_RE = re.compile(r"""
    (?P<lbrack>\[) | (?P<rbrack>\]) |
    (?P<star>\*)   | (?P<lparen>\() | (?P<rparen>\)) |
    (?P<plus>\+)   |
    (?P<psi>psi\b) | (?P<chi>chi\b) | (?P<ublock>U\b) |
    (?P<mono>u\^-) |
    (?P<tensor>x\b) |
    (?P<name>l[12]\b) |
    (?P<frac>-?\d+/\d+) |
    (?P<int>-?\d+) |
    (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise GrammarError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, p: int, params: dict[str, int]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.p = p
        self.params = params

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            raise GrammarError(f"expected {kind}, found {tok[1] or 'end'!r}", tok[2])
        self.i += 1
        return tok

    def accept(self, kind: str):
        if self.toks[self.i][0] == kind:
            self.i += 1
            return True
        return False

    # localrep := term ("+" term)*
    def localrep(self) -> list[tuple]:
        terms = self.term()
        while self.accept("plus"):
            terms += self.term()
        self.take("end")
        return terms

    # term := wild | tame
    def term(self) -> list[tuple]:
        if self.peek()[0] == "lbrack":
            return [self.wild()]
        atom = self.tame_atom()
        return [(1, LaurentTail(self.p), TameRep([atom]))]

    def wild(self) -> tuple:
        self.take("lbrack")
        rtok = self.take("int")
        ram = int(rtok[1])
        if ram < 1:
            raise GrammarError("covering degree must be positive", rtok[2])
        if ram % self.p == 0:
            raise GrammarError(
                f"covering degree {ram} divisible by p = {self.p}", rtok[2])
        self.take("rbrack")
        self.take("star")
        self.take("lparen")
        self.take("psi")
        self.take("lparen")
        tail = self.poly()
        self.take("rparen")
        atoms = [TameAtom(TameChar(Fraction(0)), 1)]
        if self.accept("tensor"):
            atoms = [self.tame_atom()]
            while self.accept("plus"):
                atoms.append(self.tame_atom())
        self.take("rparen")
        return (ram, tail, TameRep(atoms))

    # tame := [chi(frac) "*"] U(n) | chi(frac) | 1 | -1
    def tame_atom(self) -> TameAtom:
        tok = self.peek()
        if tok[0] == "chi":
            char = self.chi()
            if self.accept("star"):
                n = self.ublock()
                return TameAtom(char, n)
            return TameAtom(char, 1)
        if tok[0] == "ublock":
            return TameAtom(TameChar(Fraction(0)), self.ublock())
        if tok[0] == "int" and tok[1] in ("1", "-1"):
            self.i += 1
            res = Fraction(0) if tok[1] == "1" else Fraction(1, 2)
            return TameAtom(TameChar(res), 1)
        raise GrammarError(f"expected a tame factor, found {tok[1]!r}", tok[2])

    def chi(self) -> TameChar:
        self.take("chi")
        self.take("lparen")
        tok = self.peek()
        if tok[0] == "frac":
            num, den = tok[1].split("/")
            res = Fraction(int(num), int(den))
            self.i += 1
        elif tok[0] == "int":
            res = Fraction(int(tok[1]))
            self.i += 1
        else:
            raise GrammarError("expected a fraction", tok[2])
        if res.denominator % self.p == 0:
            raise GrammarError(
                f"character order divisible by p = {self.p}", tok[2])
        self.take("rparen")
        return TameChar(res)

    def ublock(self) -> int:
        self.take("ublock")
        self.take("lparen")
        tok = self.take("int")
        n = int(tok[1])
        if n < 1:
            raise GrammarError("Jordan length must be positive", tok[2])
        self.take("rparen")
        return n

    # poly := mono ("+" mono)*
    def poly(self) -> LaurentTail:
        fp = field(self.p, 1)
        acc: dict[int, object] = {}
        while True:
            c, e, pos = self.mono()
            cur = acc.get(e, fp.zero())
            acc[e] = cur + c
            if not self.accept("plus"):
                break
        return LaurentTail(self.p, acc.items())

    def mono(self):
        tok = self.peek()
        fp = field(self.p, 1)
        if tok[0] == "name":
            if tok[1] not in self.params:
                raise GrammarError(f"parameter {tok[1]} is not set", tok[2])
            coeff = fp.elem(self.params[tok[1]])
            self.i += 1
        elif tok[0] == "int":
            coeff = fp.elem(int(tok[1]))
            self.i += 1
        else:
            raise GrammarError(f"expected a coefficient, found {tok[1]!r}", tok[2])
        mtok = self.take("mono")
        etok = self.take("int")
        e = int(etok[1])
        if e < 1:
            raise GrammarError("pole exponents must be positive", etok[2])
        return coeff, e, mtok[2]


def parse_local_rep(text: str, p: int, params: dict[str, int] | None = None,
                    coord: str = "t", validate: bool = True) -> LocalRep:
    """Parse one local-representation expression into canonical form."""
    parser = _Parser(text, p, params or {})
    terms = parser.localrep()
    rep = LocalRep(p, (), coord)
    for ram, tail, tame in terms:
        rep = rep + canonicalize(p, ram, tail, tame, coord)
    if validate:
        check_model_validity(rep)
    return rep


def print_local_rep(rep: LocalRep) -> str:
    """Canonical grammar text for a local representation (prime-field
    coefficients only)."""
    parts = []
    for a in rep.atoms:
        tame = _print_tame(a)
        if not a.is_wild():
            parts.append(tame)
            continue
        monos = []
        for e, c in a.tail.terms:
            if c.field.m != 1:
                raise GrammarError(
                    "tail coefficient outside the prime field is not expressible")
            monos.append(f"{c.coeffs[0]} u^-{e}")
        parts.append(f"[{a.ram}]*(psi({' + '.join(monos)}) x {tame})")
    return " + ".join(parts) if parts else "1"


def _print_tame(a) -> str:
    res = a.char.residue
    if a.jordan == 1:
        if res == 0:
            return "1"
        if res == Fraction(1, 2):
            return "-1"
        return f"chi({res})"
    if res == 0:
        return f"U({a.jordan})"
    return f"chi({res})*U({a.jordan})"


# ---------------------------------------------------------------------------
# documents

@dataclass
class InputDocument:
    p: int
    rank: int
    params: dict[str, int]
    points: list[tuple[object, str]]  # (point, raw expression)
    reps: dict = dc_field(default_factory=dict)

    def global_data(self, validate: bool = True) -> GlobalLocalData:
        assignments = []
        for pt, raw in self.points:
            coord = "u" if pt == INF else "t"
            rep = parse_local_rep(raw, self.p, self.params, coord, validate)
            assignments.append((pt, rep))
        return GlobalLocalData.make(self.rank, self.p, assignments,
                                    validate=validate)


_ASSIGN_RE = re.compile(r"^\s*(p|m|rank|l1|l2)\s*=\s*(-?\d+)\s*$")
_AT_RE = re.compile(r"^\s*at\s+(\S+)\s*:\s*(.*\S)\s*$")


def default_p() -> int:
    env = os.environ.get("WILDMONO_P")
    return int(env) if env else 13


def parse_document(text: str) -> InputDocument:
    p = None
    rank = None
    params: dict[str, int] = {}
    points: list[tuple[object, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ASSIGN_RE.match(line)
        if m:
            key, val = m.group(1), int(m.group(2))
            if key == "p":
                p = val
            elif key == "rank":
                rank = val
            elif key == "m":
                pass   # extension degree accepted; prime-field documents only
            else:
                params[key] = val
            continue
        m = _AT_RE.match(line)
        if m:
            label, expr = m.group(1), m.group(2)
            if label in ("inf", "infty", "oo"):
                pt = INF
            else:
                try:
                    pt = int(label)
                except ValueError:
                    raise GrammarError(f"bad point label {label!r}", line=lineno)
            points.append((pt, expr))
            continue
        raise GrammarError(f"cannot parse line {raw!r}", line=lineno)
    if p is None:
        p = default_p()
    if p <= 7:
        raise GrammarError(f"characteristic p = {p} must exceed 7")
    if rank is None:
        raise GrammarError("document must declare a rank")
    if not points:
        raise GrammarError("document must declare at least one singular point")
    return InputDocument(p, rank, params, points)
