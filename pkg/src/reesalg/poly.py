"""Sparse multivariate polynomials over an exact field.

A :class:`Poly` stores a dict mapping exponent tuples to nonzero field
elements.  Values are treated as immutable: every operation returns a new
polynomial.  Terms are rendered in descending graded-reverse-lex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Sequence

from reesalg.field import INF, Field

Exp = tuple  # exponent vector


def grevlex_key(e: Exp):
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def binomial_vec(top: Exp, bottom: Exp) -> int:
    r = 1
    for a, b in zip(top, bottom):
        if b:
            r *= comb(a, b)
    return r


def multi_indices(d: int, max_total: int, allowed: Sequence[bool] | None = None):
    """All exponent vectors of length ``d`` with entry sum <= ``max_total``.

    ``allowed[i]`` False forces entry ``i`` to be zero.  Output is ordered by
    total degree, then lexicographically descending, so results are stable.
    """
    if max_total < 0:
        return []
    out = []
    for e in product(range(max_total + 1), repeat=d):
        if sum(e) > max_total:
            continue
        if allowed is not None and any(x and not ok for x, ok in zip(e, allowed)):
            continue
        out.append(e)
    out.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return out


@dataclass(frozen=True)
class PolyRing:
    field: Field
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.ngens: c})

    def var(self, name_or_index) -> "Poly":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.ngens
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.ngens)]

    def monomial(self, exp: Exp, coeff=1) -> "Poly":
        if len(exp) != self.ngens:
            raise ValueError("exponent length does not match the ring")
        return Poly(self, {tuple(exp): coeff})

    def parse(self, text: str) -> "Poly":
        from reesalg.parse import parse_poly

        return parse_poly(text, self)

    def drop(self, indices: Iterable[int]) -> "PolyRing":
        """Ring on the variables not listed in ``indices``."""
        skip = set(indices)
        return PolyRing(self.field, tuple(v for i, v in enumerate(self.variables) if i not in skip))

    def extend(self, names: Iterable[str]) -> "PolyRing":
        return PolyRing(self.field, self.variables + tuple(names))

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, clean: bool = True):
        self.ring = ring
        if clean:
            f = ring.field
            d = ring.ngens
            cleaned = {}
            for e, c in terms.items():
                if len(e) != d:
                    raise ValueError(f"exponent {e} does not match {d} variables")
                c = f(c)
                if c != 0:
                    cleaned[tuple(e)] = c
            terms = cleaned
        self.terms = terms
        self._hash = None

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.ring.ngens, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self):
        """Order at the origin (``INF`` for zero)."""
        return min((sum(e) for e in self.terms), default=INF)

    def support(self) -> list:
        return sorted(self.terms, key=grevlex_key, reverse=True)

    def coefficient(self, exp: Exp):
        return self.terms.get(tuple(exp), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        lead = self.terms[max(self.terms, key=grevlex_key)]
        return self.scale(self.ring.field.inv(lead))

    def sort_key(self):
        """Canonical key; ascending order lists larger polynomials first."""
        keys = []
        for e in self.support():
            deg, rev = grevlex_key(e)
            keys.append((-deg, tuple(-x for x in rev), str(self.terms[e])))
        return tuple(keys)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out, clean=False)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return Poly(self.ring, {e: (-c) % p for e, c in self.terms.items()}, clean=False)
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, clean=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if c == 0:
            return self.ring.zero()
        p = self.ring.characteristic
        if p:
            return Poly(self.ring, {e: v * c % p for e, v in self.terms.items()}, clean=False)
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()}, clean=False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Poly(self.ring, out, clean=False)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Exp, coeff=1) -> "Poly":
        p = self.ring.characteristic
        out = {}
        for e, c in self.terms.items():
            v = c * coeff
            if p:
                v %= p
            if v:
                out[tuple(a + b for a, b in zip(e, exp))] = v
        return Poly(self.ring, out, clean=False)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- differential operators -------------------------------------------

    def _check_alpha(self, alpha):
        if len(alpha) != self.ring.ngens:
            raise ValueError(
                f"multi-index of length {len(alpha)} for a ring with {self.ring.ngens} variables"
            )

    def hasse(self, alpha: Exp) -> "Poly":
        """Coefficient of U^alpha in f(x + U).

        Each term picks up the product of binomials C(e_i, alpha_i) before
        reduction, so the operator is defined in every characteristic.
        """
        alpha = tuple(alpha)
        self._check_alpha(alpha)
        p = self.ring.characteristic
        out = {}
        for e, c in self.terms.items():
            if any(a < b for a, b in zip(e, alpha)):
                continue
            v = c * binomial_vec(e, alpha)
            if p:
                v %= p
            if v:
                out[tuple(a - b for a, b in zip(e, alpha))] = v
        return Poly(self.ring, out, clean=False)

    def log_hasse(self, alpha: Exp) -> "Poly":
        """x^alpha times the Hasse derivative: the coefficient of U^alpha
        under x_i -> x_i + x_i U_i."""
        alpha = tuple(alpha)
        self._check_alpha(alpha)
        p = self.ring.characteristic
        out = {}
        for e, c in self.terms.items():
            v = c * binomial_vec(e, alpha)
            if p:
                v %= p
            if v:
                out[e] = v
        return Poly(self.ring, out, clean=False)

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence):
        if len(point) != self.ring.ngens:
            raise ValueError("point dimension does not match the ring")
        f = self.ring.field
        pt = [f(x) for x in point]
        p = f.characteristic
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * (pow(x, k, p) if p else x**k)
            total += v
        return f(total) if not p else total % p

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Apply the ring homomorphism x_i -> images[i]."""
        if len(images) != self.ring.ngens:
            raise ValueError(
                f"expected {self.ring.ngens} images, got {len(images)}"
            )
        target = images[0].ring
        if any(im.ring != target for im in images):
            raise ValueError("images live in different rings")
        powers = [{0: target.one()} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def translate(self, point: Sequence) -> "Poly":
        """f(x + point), i.e. the Taylor shift moving ``point`` to the origin."""
        R = self.ring
        return self.substitute([R.var(i) + R.const(c) for i, c in enumerate(point)])

    def order_at(self, point: Sequence | None = None):
        """Order of vanishing at ``point`` (origin by default); ``INF`` for 0."""
        if point is None or not any(point):
            if point is not None and len(point) != self.ring.ngens:
                raise ValueError("point dimension does not match the ring")
            return self.min_degree()
        if len(point) != self.ring.ngens:
            raise ValueError("point dimension does not match the ring")
        return self.translate(point).min_degree()

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        field = self.ring.field
        parts = []
        for e in self.support():
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            neg = self.ring.characteristic == 0 and c < 0
            mag = -c if neg else c
            if not mono:
                body = field.render(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{field.render(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r} in {self.ring})"


def hasse_derivative(f: Poly, alpha: Exp) -> Poly:
    return f.hasse(alpha)


def log_hasse_derivative(f: Poly, alpha: Exp) -> Poly:
    return f.log_hasse(alpha)


def order_at(f: Poly, point: Sequence):
    return f.order_at(tuple(point))


def substitute(f: Poly, images: Sequence[Poly]) -> Poly:
    return f.substitute(images)
