"""Coefficient algebras along coordinate retractions, and the invariants
governing integral closure of one-variable Rees algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from reesalg.field import INF
from reesalg.poly import Poly, PolyRing, multi_indices
from reesalg.rees import ReesAlgebra

F1PRIME = "f1p"
F1 = "f1"


@dataclass(frozen=True)
class Split:
    """``Z = V(x_1, ..., x_h)`` with the projection onto the last ``d - h``
    variables as retraction."""

    h: int

    def check(self, ring: PolyRing):
        if not 1 <= self.h <= ring.ngens - 1:
            raise ValueError(f"split h={self.h} needs 1 <= h <= {ring.ngens - 1}")

    def target(self, ring: PolyRing) -> PolyRing:
        return ring.drop(range(self.h))


def restrict(f: Poly, split: Split, target: PolyRing | None = None) -> Poly:
    """Set the first ``h`` variables to zero, landing in the trailing ring."""
    target = target or split.target(f.ring)
    h = split.h
    return Poly(target, {e[h:]: c for e, c in f.terms.items() if not any(e[:h])}, clean=False)


def coefficients(g: Poly, N: int, split: Split):
    """Yield ``(alpha, a_alpha)`` for ``|alpha| < N``: the coefficient of
    ``x^alpha`` when ``g`` is expanded in the first ``h`` variables."""
    ring = g.ring
    target = split.target(ring)
    d = ring.ngens
    mask = tuple(i < split.h for i in range(d))
    for a in multi_indices(d, N - 1, mask):
        yield a[: split.h], restrict(g.hasse(a), split, target)


@dataclass(frozen=True)
class CoeffAlgebra:
    algebra: ReesAlgebra
    recipe: str


def coefficient_algebra(G: ReesAlgebra, split: Split, recipe: str = F1PRIME) -> CoeffAlgebra:
    """Rees algebra on Z generated by the coefficients ``a_alpha``.

    ``f1p`` places ``a_alpha`` at weight ``n - |alpha|``; ``f1`` also at every
    lower positive weight.
    """
    split.check(G.ring)
    if recipe not in (F1PRIME, F1):
        raise ValueError(f"unknown recipe {recipe!r}")
    target = split.target(G.ring)
    gens = []
    for wg in G.gens:
        for alpha, a in coefficients(wg.g, wg.n, split):
            if a.is_zero():
                continue
            top = wg.n - sum(alpha)
            if recipe == F1PRIME:
                gens.append((a, top))
            else:
                gens.extend((a, w) for w in range(1, top + 1))
    return CoeffAlgebra(ReesAlgebra(target, gens), recipe)


def _ratio(order, weight):
    return INF if order is INF else Fraction(order, weight)


def sl(g: Poly, N: int, split: Split):
    """min over |alpha| < N of ord(a_alpha) / (N - |alpha|); INF if all vanish."""
    if g.ring.ngens - split.h != 1:
        raise ValueError("sl needs exactly one trailing variable")
    if N < 1:
        raise ValueError("N must be positive")
    return min(
        (_ratio(a.min_degree(), N - sum(alpha)) for alpha, a in coefficients(g, N, split)),
        default=INF,
    )


def lambda_invariant(G: ReesAlgebra):
    """min over generators of ord_0(g) / n for a one-variable algebra."""
    if G.ring.ngens != 1:
        raise ValueError("lambda is defined for one-variable algebras")
    return min((_ratio(wg.g.min_degree(), wg.n) for wg in G.gens), default=INF)


def integral_member_1d(n: int, m: int, G: ReesAlgebra) -> bool:
    """Whether ``t^n W^m`` is integral over ``G`` at the origin."""
    if m < 1 or n < 0:
        raise ValueError("need n >= 0 and m >= 1")
    lam = lambda_invariant(G)
    if lam is INF:
        return False
    return Fraction(n, m) >= lam


def same_closure_1d(G1: ReesAlgebra, G2: ReesAlgebra) -> bool:
    return lambda_invariant(G1) == lambda_invariant(G2)


def render_value(v) -> str:
    """``p/q`` in lowest terms, integers bare, ``inf`` for infinity."""
    if v is INF:
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
