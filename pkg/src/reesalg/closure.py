"""Diff-closures of Rees algebras and the closedness test.

Variants:

* ``absolute``: every Hasse derivative ``D^a(g)`` with ``|a| < n`` at each
  weight ``1 .. n - |a|``.
* ``relative``: as absolute, with ``a`` supported on the first ``h``
  variables (operators relative to the projection killing them).
* ``logarithmic``: ``x^a D^a(g)`` for ``a`` supported on a subset of the
  variables, kept at weight ``n`` (and all lower weights).
* ``order_free``: every nonzero ``D^a(g)`` at weight ``n`` and below.
"""

from __future__ import annotations

from dataclasses import dataclass

from reesalg.poly import Poly, PolyRing, multi_indices
from reesalg.rees import EXACT, ReesAlgebra, WeightedGen, piece_member

ABSOLUTE = "absolute"
RELATIVE = "relative"
LOGARITHMIC = "logarithmic"
ORDER_FREE = "order_free"
VARIANTS = (ABSOLUTE, RELATIVE, LOGARITHMIC, ORDER_FREE)


@dataclass(frozen=True)
class ClosureOptions:
    variant: str = ABSOLUTE
    h: int | None = None
    log_vars: tuple | None = None
    simplify: bool = True
    prune: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown closure variant {self.variant!r}")
        if self.variant == RELATIVE and self.h is None:
            raise ValueError("relative closure needs h")
        if self.variant == LOGARITHMIC and not self.log_vars:
            raise ValueError("logarithmic closure needs a nonempty variable subset")

    @classmethod
    def absolute(cls, **kw):
        return cls(ABSOLUTE, **kw)

    @classmethod
    def relative(cls, h: int, **kw):
        return cls(RELATIVE, h=h, **kw)

    @classmethod
    def logarithmic(cls, variables, **kw):
        return cls(LOGARITHMIC, log_vars=tuple(variables), **kw)

    @classmethod
    def order_free(cls, **kw):
        return cls(ORDER_FREE, **kw)

    def allowed(self, ring: PolyRing) -> tuple:
        """Mask of the variables the operators may differentiate in."""
        d = ring.ngens
        if self.variant == RELATIVE:
            if not 1 <= self.h <= d:
                raise ValueError(f"relative h={self.h} outside 1..{d}")
            return tuple(i < self.h for i in range(d))
        if self.variant == LOGARITHMIC:
            idx = set()
            for v in self.log_vars:
                if isinstance(v, int):
                    if not 0 <= v < d:
                        raise ValueError(f"variable index {v} outside the ring")
                    idx.add(v)
                else:
                    if v not in ring.variables:
                        raise ValueError(f"unknown variable {v!r}")
                    idx.add(ring.index(v))
            return tuple(i in idx for i in range(d))
        return (True,) * d


def _operators(g: Poly, n: int, opts: ClosureOptions, mask):
    """Yield ``(|a|, image of g)`` for the variant's operators on ``g W^n``.

    For absolute/relative only ``|a| < n`` matters; the other variants run
    up to ``deg g`` (higher operators kill ``g``).
    """
    d = g.ring.ngens
    if opts.variant in (ABSOLUTE, RELATIVE):
        for a in multi_indices(d, n - 1, mask):
            yield sum(a), g.hasse(a)
    elif opts.variant == LOGARITHMIC:
        for a in multi_indices(d, max(g.degree(), 0), mask):
            yield sum(a), g.log_hasse(a)
    else:
        for a in multi_indices(d, max(g.degree(), 0), mask):
            yield sum(a), g.hasse(a)


def _canonical(gens: list) -> list:
    """Drop constant-multiple duplicates (first kept) and sort canonically."""
    seen = set()
    out = []
    for wg in gens:
        key = (wg.g.monic(), wg.n)
        if key in seen:
            continue
        seen.add(key)
        out.append(wg)
    out.sort(key=lambda wg: (wg.g.sort_key(), wg.n))
    return out


def _prune(G: ReesAlgebra) -> ReesAlgebra:
    gens = list(G.gens)
    i = len(gens) - 1
    while i >= 0 and len(gens) > 1:
        rest = ReesAlgebra(G.ring, gens[:i] + gens[i + 1:])
        wg = gens[i]
        if piece_member(wg.g, rest, wg.n, EXACT):
            gens = gens[:i] + gens[i + 1:]
        i -= 1
    return ReesAlgebra(G.ring, gens)


def diff_close(G: ReesAlgebra, opts: ClosureOptions | None = None) -> ReesAlgebra:
    """Smallest extension of ``G`` closed under the variant's operators."""
    opts = opts or ClosureOptions()
    mask = opts.allowed(G.ring)
    out = []
    for wg in G.gens:
        g, n = wg.g, wg.n
        for order, D in _operators(g, n, opts, mask):
            if D.is_zero():
                continue
            top = n - order if opts.variant in (ABSOLUTE, RELATIVE) else n
            out.extend(WeightedGen(D, w) for w in range(1, top + 1))
    if opts.simplify:
        out = _canonical(out)
    closed = ReesAlgebra(G.ring, out)
    if opts.prune:
        closed = _prune(closed)
    return closed


def _violations(G: ReesAlgebra, opts: ClosureOptions):
    mask = opts.allowed(G.ring)
    for wg in G.gens:
        g, n = wg.g, wg.n
        for k in range(1, n):
            if not piece_member(g, G, k, EXACT):
                yield (wg, "nested", g, k)
        for order, D in _operators(g, n, opts, mask):
            if order == 0 or D.is_zero():
                continue
            target = n - order if opts.variant in (ABSOLUTE, RELATIVE) else n
            if target < 1:
                continue
            if not piece_member(D, G, target, EXACT):
                yield (wg, "operator", D, target)


def closure_violations(G: ReesAlgebra, opts: ClosureOptions | None = None) -> list:
    """Generator-level failures of the Diff-algebra conditions.

    Each entry is ``(generator, kind, polynomial, target weight)`` where kind
    is ``"nested"`` (``g`` missing from a lower piece) or ``"operator"``.
    """
    return list(_violations(G, opts or ClosureOptions()))


def is_diff_closed(G: ReesAlgebra, opts: ClosureOptions | None = None) -> bool:
    """Check the Diff-algebra conditions on the generators.

    Checking generators suffices: the Leibniz rule spreads both conditions
    to products.
    """
    return next(_violations(G, opts or ClosureOptions()), None) is None
