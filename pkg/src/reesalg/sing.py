"""Singular loci: points where every generator ``g W^n`` has order >= n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from reesalg.poly import multi_indices
from reesalg.rees import EXACT, ReesAlgebra, graded_piece

DEFAULT_GRID_CAP = 10**6


class GridTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class SingPresentation:
    """Per generator, the Hasse derivatives of order <= n - 1.

    Their common zero set is the singular locus.
    """

    entries: tuple  # ((WeightedGen, (derivative, ...)), ...)

    def polys(self) -> list:
        out = []
        for _, derivs in self.entries:
            out.extend(derivs)
        return out

    @property
    def empty(self) -> bool:
        """True when some derivative is a nonzero constant."""
        return any(d.is_constant() and not d.is_zero() for d in self.polys())


def sing_presentation(G: ReesAlgebra) -> SingPresentation:
    entries = []
    for wg in G.gens:
        d = wg.g.ring.ngens
        derivs = []
        for a in multi_indices(d, wg.n - 1):
            D = wg.g.hasse(a)
            if D:
                derivs.append(D)
        entries.append((wg, tuple(derivs)))
    return SingPresentation(tuple(entries))


def in_sing(G: ReesAlgebra, point: Sequence) -> bool:
    point = tuple(point)
    if len(point) != G.ring.ngens:
        raise ValueError(f"point has {len(point)} coordinates, ring has {G.ring.ngens}")
    return all(wg.g.order_at(point) >= wg.n for wg in G.gens)


def _grid(ring, cap):
    p = ring.characteristic
    if p == 0:
        raise ValueError("grid enumeration needs a positive characteristic")
    if p**ring.ngens > cap:
        raise GridTooLarge(f"{p}^{ring.ngens} points exceed the cap {cap}")
    return product(range(p), repeat=ring.ngens)


def zero_set(polys: Sequence, ring, cap: int = DEFAULT_GRID_CAP) -> list:
    """Common zeros of ``polys`` over GF(p)^d, lexicographically ordered."""
    polys = [f for f in polys if f]
    return [pt for pt in _grid(ring, cap) if all(f.evaluate(pt) == 0 for f in polys)]


def sing_points(G: ReesAlgebra, cap: int = DEFAULT_GRID_CAP) -> list:
    """All GF(p)-points of Sing(G) in lexicographic order."""
    pres = sing_presentation(G)
    if pres.empty:
        _grid(G.ring, cap)  # still validate the request
        return []
    return zero_set(pres.polys(), G.ring, cap)


def piece_zero_set(G: ReesAlgebra, r: int, cap: int = DEFAULT_GRID_CAP) -> list:
    """Grid zero set of the degree-``r`` piece generators, ``V(I_r)``."""
    return zero_set(graded_piece(G, r, EXACT).gens, G.ring, cap)


def contains_on_grid(G: ReesAlgebra, f, r: int, cap: int = DEFAULT_GRID_CAP) -> bool:
    """Whether Sing(G) lies inside the points where ``f`` has order >= r."""
    return all(f.order_at(pt) >= r for pt in sing_points(G, cap))
