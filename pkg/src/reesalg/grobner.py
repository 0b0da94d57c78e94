"""Buchberger's algorithm, reduced bases, and ideal membership.

Internally polynomials are plain ``{exponent: coeff}`` dicts so the inner
loops avoid object churn; :class:`Poly` only appears at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from reesalg.poly import Poly, PolyRing, grevlex_key, multi_indices


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @property
    def key(self):
        return grevlex_key if self.kind == "grevlex" else tuple


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _normalize(terms: dict, key, field):
    """Make ``terms`` monic; return (leading monomial, terms)."""
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc != 1:
        inv = field.inv(lc)
        p = field.characteristic
        if p:
            terms = {e: c * inv % p for e, c in terms.items()}
        else:
            terms = {e: c * inv for e, c in terms.items()}
    return lm, terms


def _reduce(terms: dict, basis, key, p, full=True) -> dict:
    """Normal form of ``terms`` modulo monic ``basis`` [(lm, terms), ...]."""
    work = dict(terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                for e, gc in g.items():
                    e2 = tuple(x + y for x, y in zip(e, q))
                    v = work.get(e2, 0) - c * gc
                    if p:
                        v %= p
                    if v:
                        work[e2] = v
                    else:
                        work.pop(e2, None)
                break
        else:
            if not full:
                rem.update(work)
                return rem
            rem[m] = c
            del work[m]
    return rem


def _spoly(f, g, key, p):
    (lf, tf), (lg, tg) = f, g
    l = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(l, lf))
    qg = tuple(x - y for x, y in zip(l, lg))
    out = {}
    for e, c in tf.items():
        out[tuple(x + y for x, y in zip(e, qf))] = c
    for e, c in tg.items():
        e2 = tuple(x + y for x, y in zip(e, qg))
        v = out.get(e2, 0) - c
        if p:
            v %= p
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis, sorted by descending leading monomial."""

    ring: PolyRing
    order: MonomialOrder
    basis: tuple

    @cached_property
    def _internal(self):
        key = self.order.key
        return [(max(g.terms, key=key), g.terms) for g in self.basis]

    def normal_form(self, f: Poly) -> Poly:
        if f.ring != self.ring:
            raise ValueError(f"ring mismatch: {f.ring} vs {self.ring}")
        rem = _reduce(f.terms, self._internal, self.order.key, self.ring.characteristic)
        return Poly(self.ring, rem, clean=False)

    def contains(self, f: Poly) -> bool:
        if f.ring != self.ring:
            raise ValueError(f"ring mismatch: {f.ring} vs {self.ring}")
        if not f.terms:
            return True
        if not self.basis:
            return False
        rem = _reduce(f.terms, self._internal, self.order.key, self.ring.characteristic, full=False)
        return not rem

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def __len__(self):
        return len(self.basis)


def buchberger(gens: Sequence[Poly], order: MonomialOrder = GREVLEX, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are handled with the normal strategy (smallest lcm first, ties by
    pair index) and pruned with the Gebauer-Möller criteria.
    """
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError(f"ring mismatch: {g.ring} vs {ring}")
    key = order.key
    field = ring.field
    p = field.characteristic

    G: list = []
    pairs: list = []

    def add(terms):
        lm, terms = _normalize(terms, key, field)
        t = len(G)
        G.append((lm, terms))
        # criterion B on old pairs
        kept = []
        for (i, j, l) in pairs:
            if (_divides(lm, l) and _lcm(G[i][0], lm) != l and _lcm(G[j][0], lm) != l):
                continue
            kept.append((i, j, l))
        new = [(i, t, _lcm(G[i][0], lm)) for i in range(t)]
        # criterion M
        new_m = [
            pr for pr in new
            if not any(q[2] != pr[2] and _divides(q[2], pr[2]) for q in new)
        ]
        # criterion F + product criterion
        by_lcm: dict = {}
        for pr in new_m:
            by_lcm.setdefault(pr[2], []).append(pr)
        for l, group in by_lcm.items():
            coprime = any(
                all(min(a, b) == 0 for a, b in zip(G[i][0], lm)) for i, _, _ in group
            )
            if not coprime:
                kept.append(group[0])
        pairs[:] = kept

    for g in gens:
        if g.terms:
            rem = _reduce(g.terms, G, key, p)
            if rem:
                add(rem)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: (key(pairs[k][2]), pairs[k][0], pairs[k][1]))
        i, j, _ = pairs.pop(best)
        s = _spoly(G[i], G[j], key, p)
        if not s:
            continue
        rem = _reduce(s, G, key, p)
        if rem:
            add(rem)

    # minimal basis
    lms = [lm for lm, _ in G]
    minimal = []
    for idx, (lm, terms) in enumerate(G):
        redundant = False
        for jdx, other in enumerate(lms):
            if jdx == idx:
                continue
            if _divides(other, lm) and (other != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append((lm, terms))
    # interreduce
    reduced = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [g for k, g in enumerate(minimal) if k != idx]
        tail = {e: c for e, c in terms.items() if e != lm}
        tail = _reduce(tail, others, key, p)
        tail[lm] = 1
        reduced.append((lm, tail))
    reduced.sort(key=lambda g: key(g[0]), reverse=True)
    basis = tuple(Poly(ring, terms, clean=False) for _, terms in reduced)
    return GroebnerBasis(ring, order, basis)


def divides(d: Poly, f: Poly) -> bool:
    """Whether ``d`` divides ``f`` (a single polynomial is a Gröbner basis)."""
    if not f.terms:
        return True
    if not d.terms:
        return False
    key = GREVLEX.key
    pivot = _normalize(d.terms, key, d.ring.field)
    return not _reduce(f.terms, [pivot], key, d.ring.characteristic, full=False)


def ideal_member(f: Poly, gb: GroebnerBasis) -> bool:
    return gb.contains(f)


def ideals_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return a.ring == b.ring and a.order == b.order and a.basis == b.basis


def member_bounded(f: Poly, gens: Sequence[Poly], cofactor_degree_bound: int) -> bool:
    """Decide ``f in sum h_i g_i`` with every ``deg h_i <= bound`` by exact
    linear algebra over the coefficient field.

    Sound, and complete up to the bound.  Shares no code with Buchberger.
    """
    if cofactor_degree_bound < 0:
        raise ValueError("bound must be nonnegative")
    if not f.terms:
        return True
    ring = f.ring
    field = ring.field
    p = field.characteristic
    pivots: dict = {}  # leading monomial -> monic row; leading monomials distinct

    def eliminate(vec: dict) -> dict:
        vec = dict(vec)
        while True:
            hits = [m for m in vec if m in pivots]
            if not hits:
                return vec
            m = max(hits, key=grevlex_key)
            c = vec[m]
            for e, rc in pivots[m].items():
                v = vec.get(e, 0) - c * rc
                if p:
                    v %= p
                if v:
                    vec[e] = v
                else:
                    vec.pop(e, None)

    def insert(vec: dict):
        vec = eliminate(vec)
        if not vec:
            return
        m = max(vec, key=grevlex_key)
        inv = field.inv(vec[m])
        pivots[m] = {e: (c * inv % p if p else c * inv) for e, c in vec.items()}

    monos = multi_indices(ring.ngens, cofactor_degree_bound)
    for g in gens:
        if g.ring != ring:
            raise ValueError("ring mismatch")
        if not g.terms:
            continue
        for mono in monos:
            insert(g.mul_monomial(mono).terms)

    return not eliminate(f.terms)
