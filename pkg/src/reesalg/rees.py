"""Rees algebras presented by finitely many weighted generators ``g W^n``.

The algebra generated over the polynomial ring ``R`` by ``{g_i W^{n_i}}``
has degree-``N`` piece ``I_N`` spanned by the products ``prod g_i^{a_i}``
with ``sum a_i n_i = N``.  Two presentations can define the same algebra;
:func:`pieces_equal` compares pieces up to a bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from reesalg.grobner import GroebnerBasis, buchberger, divides, ideal_member
from reesalg.poly import Poly, PolyRing

EXACT = "exact"
SATURATED = "saturated"
DEFAULT_FACTOR_CAP = 12


class PieceTooLarge(RuntimeError):
    """A graded-piece enumeration needed more factors than the cap allows."""


@dataclass(frozen=True)
class WeightedGen:
    g: Poly
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"weights must be positive integers, got {self.n!r}")

    def __str__(self):
        return f"({self.g})*W^{self.n}"


class ReesAlgebra:
    """Subalgebra of ``R[W]`` generated over ``R`` by weighted generators.

    Zero generators and exact duplicates are dropped; otherwise the given
    order is kept.  Equality is equality of presentations.
    """

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: PolyRing, gens: Iterable = ()):
        self.ring = ring
        seen = set()
        out = []
        for item in gens:
            wg = item if isinstance(item, WeightedGen) else WeightedGen(*item)
            if wg.g.ring != ring:
                raise ValueError(f"generator {wg.g} is not in {ring}")
            if wg.g.is_zero() or (wg.g, wg.n) in seen:
                continue
            seen.add((wg.g, wg.n))
            out.append(wg)
        self.gens = tuple(out)
        self._hash = None

    @property
    def weights(self) -> list:
        return [wg.n for wg in self.gens]

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=0)

    def is_zero(self) -> bool:
        return not self.gens

    def polys(self) -> list:
        return [wg.g for wg in self.gens]

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, ReesAlgebra):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.gens))
        return self._hash

    def same_generators(self, other: "ReesAlgebra") -> bool:
        return self.ring == other.ring and set(self.gens) == set(other.gens)

    def extended(self, extra: Iterable) -> "ReesAlgebra":
        return ReesAlgebra(self.ring, list(self.gens) + list(extra))

    def __repr__(self):
        body = ", ".join(str(wg) for wg in self.gens)
        return f"ReesAlgebra({self.ring}: {{{body}}})"


@dataclass(frozen=True)
class GradedPiece:
    N: int
    gens: tuple
    mode: str = EXACT


def saturate_weights(G: ReesAlgebra) -> ReesAlgebra:
    """Re-list every generator at all lower weights: presents sum_{r>=k} I_r."""
    return ReesAlgebra(G.ring, [(wg.g, k) for wg in G.gens for k in range(1, wg.n + 1)])


def _weight_vectors(weights, lo, hi):
    """Count vectors ``a`` with ``lo <= sum a_i w_i <= hi``, lexicographic."""
    m = len(weights)
    counts: list = []

    def rec(i, total):
        if i == m:
            if lo <= total <= hi:
                yield tuple(counts)
            return
        k = 0
        while total + k * weights[i] <= hi:
            counts.append(k)
            yield from rec(i + 1, total + k * weights[i])
            counts.pop()
            k += 1

    return rec(0, 0)


def graded_piece(G: ReesAlgebra, N: int, mode: str = EXACT, factor_cap: int = DEFAULT_FACTOR_CAP) -> GradedPiece:
    """Generators of ``I_N`` as explicit products of algebra generators,
    minus products divisible by another one.

    ``exact`` takes products of weight exactly ``N``; ``saturated`` takes
    weights in ``[N, N + max_weight - 1]``, which generates ``sum_{r>=N} I_r``
    because any heavier product has a factor-dropping sub-product in that
    window.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if mode not in (EXACT, SATURATED):
        raise ValueError(f"unknown mode {mode!r}")
    if G.is_zero():
        return GradedPiece(N, (), mode)
    hi = N if mode == EXACT else N + G.max_weight - 1
    polys = G.polys()
    powers = [{0: G.ring.one()} for _ in polys]
    out: dict = {}
    for counts in _weight_vectors(G.weights, N, hi):
        if sum(counts) > factor_cap:
            raise PieceTooLarge(
                f"degree-{N} piece needs products of {sum(counts)} factors (cap {factor_cap})"
            )
        prod = G.ring.one()
        for i, k in enumerate(counts):
            if k:
                if k not in powers[i]:
                    powers[i][k] = polys[i] ** k
                prod = prod * powers[i][k]
        if prod:
            out.setdefault(prod, None)
    # drop products that are multiples of another product
    kept: list = []
    for h in sorted(out, key=lambda f: (f.degree(), f.sort_key())):
        if not any(divides(k, h) for k in kept):
            kept.append(h)
    return GradedPiece(N, tuple(kept), mode)


@lru_cache(maxsize=8192)
def piece_basis(G: ReesAlgebra, N: int, mode: str = EXACT) -> GroebnerBasis:
    """Reduced Gröbner basis of the degree-``N`` piece.

    Built recursively from ``I_N = sum_i g_i I_{N - n_i}`` (``I_0 = R``), which
    keeps generator lists small compared with expanding every product.
    """
    R = G.ring
    if N <= 0:
        if N == 0 or mode == SATURATED:
            return buchberger([R.one()])
        return buchberger([], ring=R)
    gens = []
    for wg in G.gens:
        k = N - wg.n
        if k < 0 and mode == EXACT:
            continue
        if k <= 0:
            gens.append(wg.g)
            continue
        sub = piece_basis(G, k, mode)
        gens.extend(wg.g * b for b in sub.basis)
    return buchberger(gens, ring=R)


def piece_member(f: Poly, G: ReesAlgebra, N: int, mode: str = EXACT) -> bool:
    if f.ring != G.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {G.ring}")
    if N < 1:
        raise ValueError("N must be positive")
    return ideal_member(f, piece_basis(G, N, mode))


def pieces_equal(G1: ReesAlgebra, G2: ReesAlgebra, bound: int, mode: str = EXACT) -> bool:
    """Bounded algebra equality: equal reduced bases for every N <= bound."""
    if G1.ring != G2.ring:
        raise ValueError("ring mismatch")
    return all(piece_basis(G1, N, mode) == piece_basis(G2, N, mode) for N in range(1, bound + 1))


def pieces_contained(G1: ReesAlgebra, G2: ReesAlgebra, bound: int, mode: str = EXACT) -> bool:
    """Whether every piece of ``G1`` up to ``bound`` lies in that of ``G2``."""
    return all(
        all(piece_basis(G2, N, mode).contains(b) for b in piece_basis(G1, N, mode).basis)
        for N in range(1, bound + 1)
    )


def veronese(G: ReesAlgebra, M: int) -> ReesAlgebra:
    """The Rees ring of ``I_M`` (all generators at weight ``M``).

    ``M`` must be a common multiple of the weights so that ``G`` is integral
    over the result.
    """
    if M < 1 or any(M % n for n in G.weights):
        raise ValueError(f"{M} is not a common multiple of the weights {G.weights}")
    return ReesAlgebra(G.ring, [(h, M) for h in graded_piece(G, M, EXACT).gens])


@dataclass(frozen=True)
class IntegralWitness:
    """``g W^{k-1}`` together with its monic relation ``Z^k - g^k W^{k(k-1)}``."""

    element: WeightedGen
    k: int
    constant: WeightedGen

    def render(self) -> str:
        c = self.constant
        if c.g.is_zero():
            return f"Z^{self.k}"
        return f"Z^{self.k} - ({c.g})*W^{c.n}"

    def holds_in(self, G: ReesAlgebra) -> bool:
        """Check that the relation's constant term lies in ``G``, i.e. that the
        element is integral over ``G``."""
        return piece_member(self.constant.g, G, self.constant.n, EXACT)


def integral_witness(g: Poly, k: int) -> IntegralWitness:
    if k < 2:
        raise ValueError("k must be at least 2")
    return IntegralWitness(WeightedGen(g, k - 1), k, WeightedGen(g**k, k * (k - 1)))
