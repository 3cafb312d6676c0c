"""Local Fourier transform of wild atoms and stationary-phase assembly.

For a wild atom [r]_* (psi(phi) (x) K) at the origin with pole order s, the
transform at infinity of the dual line is again elementary: the new covering
degree is r + s, the new pole order is s (so the Swan conductor is
preserved and the slope becomes s/(r+s)), and the tame part picks up the
pull-back of the quadratic character along the degree-s cover.

The transformed tail is computed exactly: with rho(t) = t^r,

    rho_hat = -phi' / rho'      (pole order r + s),
    phi_hat = phi + rho*rho_hat (pole order s),

and the substitution t = h(v) = gamma * v * q(v) normalizes rho_hat to the
exact monomial v^-(r+s); gamma is a canonical (r+s)-th root and q a unit
series solved to precision s + 1.  Non-principal terms of phi_hat(h(v)) are
discarded (they define geometrically constant twists).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf import FieldElem, field, nth_root
from .laurent import LaurentTail, TruncSeries, eval_poly_at_series, series_nth_root
from .elementary import (ElementaryAtom, LocalRep, ModelError, canonicalize,
                         invariant_dim, tensor, wild_atom)
from .tame import TameAtom, TameChar, TameRep
from .rigidity import INF, GlobalLocalData


class TransformError(ValueError):
    """Input outside the range covered by the transform formulas."""


@dataclass(frozen=True)
class AtomTransformRecord:
    ram_in: int
    pole: int
    ram_out: int
    leading_root: FieldElem  # gamma, the chosen (r+s)-th root


@dataclass(frozen=True)
class FTResult:
    output: LocalRep
    records: tuple[AtomTransformRecord, ...]


def _check_ft_preconditions(p: int, r: int, s: int):
    if s < 1:
        raise TransformError("transform of tame data at the origin is not covered")
    for v, name in ((2, "2"), (r, "r"), (s, "s"), (r + s, "r+s")):
        if v % p == 0:
            raise TransformError(f"precondition failed: {name} = {v} divisible by p = {p}")


def local_ft_0_inf(atom: ElementaryAtom) -> FTResult:
    """Transform of one wild atom from the origin to infinity on the dual line.

    Output coordinate: v with v^(r+s) = w, w the reciprocal transform
    variable at infinity.
    """
    p = atom.p
    r, s = atom.ram, atom.pole
    _check_ft_preconditions(p, r, s)
    fp = field(p, 1)
    r_inv = fp.elem(r).inverse()

    # G(t) with rho_hat(t) = t^-(r+s) G(t); G(0) = s*c_s/r != 0
    gcoeffs = [fp.zero() for _ in range(s)]
    for i, c in atom.tail.terms:
        gcoeffs[s - i] = c * fp.elem(i) * r_inv
    g0 = gcoeffs[0]
    gamma = nth_root(g0, r + s)

    prec = s + 1
    q = TruncSeries.one(p, prec)
    gamma_pow = gamma ** (r + s)
    for _ in range(prec):
        # argument gamma * v * q(v), then q^(r+s) = G(arg) / gamma^(r+s)
        arg = q.scale(gamma).shift(1)
        val = eval_poly_at_series(gcoeffs, arg)
        val = val.scale(gamma_pow.inverse())
        q = series_nth_root(val, r + s)

    # phi_hat(h(v)) principal part
    out_terms: dict[int, FieldElem] = {}
    q_inv = q.inverse()
    for i, c in atom.tail.terms:
        coeff = c * fp.elem(r + i) * r_inv * (gamma ** (-i))
        series = q_inv.pow(i)
        for j in range(min(i, series.prec)):
            e = i - j
            if e >= 1:
                term = coeff * series.coeffs[j]
                out_terms[e] = out_terms[e] + term if e in out_terms else term

    out_tail = LaurentTail(p, out_terms.items())
    twist = TameChar(Fraction(s, 2))
    tame = TameRep([TameAtom(atom.char.mul(twist), atom.jordan)])
    out = canonicalize(p, r + s, out_tail, tame, coord="v")
    rec = AtomTransformRecord(r, s, r + s, gamma)
    return FTResult(out, (rec,))


def local_ft_rep(rep: LocalRep) -> FTResult:
    """Transform a multiset of wild atoms atom by atom."""
    atoms = []
    records = []
    for a in rep.atoms:
        if not a.is_wild():
            raise TransformError(
                "tame local data at a finite point is outside the covered transforms")
        res = local_ft_0_inf(a)
        atoms.extend(res.output.atoms)
        records.extend(res.records)
    return FTResult(LocalRep(rep.p, atoms, "v"), tuple(records))


def invariants_quotient(rep: LocalRep) -> LocalRep:
    """V / V^I: each trivial-character tame block loses one line."""
    out = []
    for a in rep.atoms:
        if not a.is_wild() and a.char.is_trivial():
            if a.jordan > 1:
                out.append(ElementaryAtom(a.p, 1, a.tail, a.char, a.jordan - 1))
        else:
            out.append(a)
    return LocalRep(rep.p, out, rep.coord)


def twist_translation(rep: LocalRep, point: FieldElem | int) -> LocalRep:
    """Tensor with the rank-one wild atom psi(point * w^-1) (the
    stationary-phase translation twist); point = 0 leaves rep unchanged."""
    p = rep.p
    if isinstance(point, int):
        point = field(p, 1).elem(point)
    if point.is_zero():
        return rep
    one_atom = canonicalize(p, 1, LaurentTail(p, [(1, point)]),
                            TameRep([TameAtom(TameChar(Fraction(0)), 1)]), rep.coord)
    return tensor(rep, one_atom)


def stationary_phase(data: GlobalLocalData) -> FTResult:
    """Local monodromy at infinity of the Fourier transform of the middle
    extension, assembled from the finite-point transforms.

    Requires every slope at infinity to be < 1 (then the infinity term
    contributes nothing to the generic rank) and every finite point to be,
    after the invariants quotient, a sum of wild atoms the transform covers.
    """
    vinf = data.at_infinity()
    if vinf is not None:
        for slope, _ in vinf.slopes():
            if slope >= 1:
                raise TransformError(
                    f"slope {slope} >= 1 at infinity: the infinity-to-infinity "
                    "transform is not modeled")
    atoms = []
    records = []
    for pt, rep in data.finite_points():
        red = invariants_quotient(rep)
        if not red.atoms:
            continue
        res = local_ft_rep(red)
        twisted = twist_translation(res.output, pt)
        atoms.extend(twisted.atoms)
        records.extend(res.records)
    return FTResult(LocalRep(data.p, atoms, "v"), tuple(records))


def ft_rank(data: GlobalLocalData) -> int:
    """Generic rank of the Fourier transform:
    sum over finite points of (Sw + rk - invariants) plus the slope->1 part
    at infinity (Swan minus rank of that part)."""
    total = 0
    for _, rep in data.finite_points():
        total += rep.swan() + data.rank - invariant_dim(rep)
    vinf = data.at_infinity()
    if vinf is not None:
        big = vinf.slope_part(lambda x: x > 1)
        total += big.swan() - big.rank()
    return total


def reduction_step_rank(data: GlobalLocalData, twists=None) -> int:
    """Generic rank after one Fourier step applied to the (optionally
    twisted) data; a value below the current rank certifies a decreasing
    step of the rank-reduction algorithm.  Twists map points to rank-one
    local data."""
    if not twists:
        return ft_rank(data)
    assignments = []
    for pt, rep in data.points:
        tw = None
        for tpt, trep in twists.items():
            if (tpt == INF and pt == INF) or (tpt != INF and pt != INF and
                                              _same_point(data.p, pt, tpt)):
                tw = trep
        if tw is not None:
            if tw.rank() != 1:
                raise ModelError("twist data must have rank one")
            rep = tensor(rep, tw)
        assignments.append((pt, rep))
    twisted = GlobalLocalData.make(data.rank, data.p, assignments, validate=False)
    return ft_rank(twisted)


def _same_point(p, a, b):
    if isinstance(a, int):
        a = field(p, 1).elem(a)
    if isinstance(b, int):
        b = field(p, 1).elem(b)
    return a == b
