"""Global bookkeeping on the projective line: Euler characteristic of the
middle extension and the index of rigidity.

A :class:`GlobalLocalData` is a generic rank together with the local
monodromy at each singular point.  Points are elements of the base field or
the symbol ``"inf"``; each carries its declared local coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElem, field
from .elementary import (LocalRep, ModelError, check_model_validity, dual,
                         invariant_dim, tensor)

INF = "inf"


def _point_key(pt):
    if pt == INF:
        return (1, 0)
    return (0, pt.key() if isinstance(pt, FieldElem) else (1, int(pt)))


@dataclass(frozen=True)
class GlobalLocalData:
    rank: int
    p: int
    points: tuple  # ((point, LocalRep), ...) sorted by point key

    @classmethod
    def make(cls, rank: int, p: int, assignments, validate: bool = True) -> "GlobalLocalData":
        pts = []
        seen = set()
        for pt, rep in assignments:
            if isinstance(pt, int):
                pt = field(p, 1).elem(pt)
            k = _point_key(pt)
            if k in seen:
                raise ModelError("duplicate singular point")
            seen.add(k)
            if rep.rank() != rank:
                raise ModelError(
                    f"local rank {rep.rank()} at {pt} differs from declared rank {rank}")
            if validate:
                check_model_validity(rep)
            pts.append((pt, rep))
        pts.sort(key=lambda t: _point_key(t[0]))
        return cls(rank, p, tuple(pts))

    def local_at(self, pt) -> LocalRep | None:
        if isinstance(pt, int):
            pt = field(self.p, 1).elem(pt)
        for q, rep in self.points:
            if q == pt:
                return rep
        return None

    def finite_points(self):
        return [(pt, rep) for pt, rep in self.points if pt != INF]

    def at_infinity(self) -> "LocalRep | None":
        for pt, rep in self.points:
            if pt == INF:
                return rep
        return None

    def num_points(self) -> int:
        return len(self.points)


def euler_char(data: GlobalLocalData) -> int:
    """chi(P^1, j_* L) = (2 - s) rk - sum_x (Sw_x - dim of invariants)."""
    s = data.num_points()
    total = (2 - s) * data.rank
    for _, rep in data.points:
        total -= rep.swan() - invariant_dim(rep)
    return total


def index_of_rigidity(data: GlobalLocalData) -> int:
    """Euler characteristic of the middle extension of End(L), computed
    pointwise from End_x = V_x (x) V_x^dual.

    For irreducible data the value 2 is equivalent to cohomological
    rigidity; the computation itself needs no irreducibility.
    """
    s = data.num_points()
    total = (2 - s) * data.rank**2
    for _, rep in data.points:
        end = tensor(rep, dual(rep))
        total -= end.swan() - invariant_dim(end)
    return total


def is_cohomologically_rigid(data: GlobalLocalData) -> bool:
    return index_of_rigidity(data) == 2
