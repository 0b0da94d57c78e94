"""Total transforms along ring maps, monomial-curve probes, and the
finite-extension check for Diff-closures."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from reesalg.closure import ClosureOptions, diff_close
from reesalg.coeff import F1, F1PRIME, Split, coefficient_algebra, lambda_invariant, render_value
from reesalg.field import INF
from reesalg.poly import Poly, PolyRing
from reesalg.rees import EXACT, ReesAlgebra, pieces_contained, piece_member, saturate_weights, veronese

IDENTITY = "identity"
RESTRICTION = "restriction-to-subspace"
SMOOTH = "smooth-projection-section"
TRIANGULAR = "triangular-automorphism"
CURVE = "monomial-curve"
GENERAL = "general"

CURVE_VAR = "t"
MAX_RETRIES = 8


@dataclass(frozen=True)
class RingMap:
    """Pullback of functions ``x_i -> images[i]`` from ``source`` to ``target``."""

    source: PolyRing
    target: PolyRing
    images: tuple
    kind: str = GENERAL

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.ngens:
            raise ValueError(f"expected {self.source.ngens} images, got {len(self.images)}")
        for im in self.images:
            if im.ring != self.target:
                raise ValueError(f"image {im} is not in {self.target}")
        if self.kind == CURVE and self.target.ngens != 1:
            raise ValueError("a monomial curve maps into a one-variable ring")

    def __call__(self, f: Poly) -> Poly:
        if f.ring != self.source:
            raise ValueError(f"ring mismatch: {f.ring} vs {self.source}")
        return f.substitute(self.images)

    def then(self, other: "RingMap") -> "RingMap":
        """The composite pullback: first ``self``, then ``other``."""
        if other.source != self.target:
            raise ValueError("maps do not compose")
        return RingMap(self.source, other.target, [other(im) for im in self.images], GENERAL)

    @classmethod
    def identity(cls, ring: PolyRing) -> "RingMap":
        return cls(ring, ring, ring.gens(), IDENTITY)

    @classmethod
    def restriction(cls, ring: PolyRing, zero_vars: Sequence) -> "RingMap":
        """Restriction to the coordinate subspace where ``zero_vars`` vanish."""
        idx = {v if isinstance(v, int) else ring.index(v) for v in zero_vars}
        target = ring.drop(idx)
        images = []
        for i, name in enumerate(ring.variables):
            images.append(target.zero() if i in idx else target.var(name))
        return cls(ring, target, images, RESTRICTION)

    @classmethod
    def inclusion(cls, ring: PolyRing, new_vars: Sequence[str]) -> "RingMap":
        """Pullback along the smooth projection dropping ``new_vars``."""
        target = ring.extend(new_vars)
        return cls(ring, target, [target.var(n) for n in ring.variables], SMOOTH)

    @classmethod
    def triangular(cls, ring: PolyRing, index: int, shift: Poly) -> "RingMap":
        """``x_index -> x_index + shift``, all other variables fixed.

        ``shift`` must not involve ``x_index`` so that the map is invertible.
        """
        if any(e[index] for e in shift.terms):
            raise ValueError(f"shift {shift} involves {ring.variables[index]}")
        images = ring.gens()
        images[index] = images[index] + shift
        return cls(ring, ring, images, TRIANGULAR)


def total_transform(G: ReesAlgebra, phi: RingMap) -> ReesAlgebra:
    if G.ring != phi.source:
        raise ValueError(f"ring mismatch: {G.ring} vs {phi.source}")
    return ReesAlgebra(phi.target, [(phi(wg.g), wg.n) for wg in G.gens])


@dataclass(frozen=True)
class MonomialCurve:
    """``x_i -> c_i t^a`` for ``i < d`` and ``x_d -> t^b``."""

    a: int
    b: int
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.a < 1 or self.b < 1:
            raise ValueError("curve weights must be positive")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("curve coefficients must be nonzero")

    def ring_map(self, ring: PolyRing) -> RingMap:
        d = ring.ngens
        if len(self.coeffs) != d - 1:
            raise ValueError(f"curve needs {d - 1} coefficients for {ring}")
        T = PolyRing(ring.field, (CURVE_VAR,))
        exp_a, exp_b = (self.a,), (self.b,)
        images = [T.monomial(exp_a, c) for c in self.coeffs] + [T.monomial(exp_b)]
        return RingMap(ring, T, images, CURVE)

    def l_value(self, exp) -> int:
        return self.a * sum(exp[:-1]) + self.b * exp[-1]

    def describe(self) -> str:
        cs = ",".join(render_value(c) for c in self.coeffs)
        return f"a={self.a} b={self.b} coeffs=[{cs}]"


def curve_pullback(G: ReesAlgebra, curve: MonomialCurve) -> ReesAlgebra:
    return total_transform(G, curve.ring_map(G.ring))


def newton_support(g: Poly) -> list:
    return g.support()


@dataclass(frozen=True)
class HalfspaceReport:
    gen: object
    min_value: object  # minimum of l over the support (INF for zero)
    bound: int  # a * n
    inside: bool
    touches: bool


def halfspace_check(G: ReesAlgebra, a: int, b: int) -> list:
    """For each generator, compare its support with ``l(y) >= a * n`` where
    ``l`` weighs the first d-1 coordinates by ``a`` and the last by ``b``."""
    if G.ring.ngens < 2:
        raise ValueError("halfspace_check needs at least two variables")
    curve = MonomialCurve(a, b)
    out = []
    for wg in G.gens:
        values = [curve.l_value(e) for e in wg.g.terms]
        low = min(values, default=INF)
        bound = a * wg.n
        out.append(HalfspaceReport(wg, low, bound, low >= bound, low == bound))
    return out


def coprime_schedule(limit: int = 12) -> list:
    """Coprime ``(a, b)`` with ``a + b <= limit``, ordered by (a + b, a)."""
    return [
        (a, s - a)
        for s in range(2, limit + 1)
        for a in range(1, s)
        if gcd(a, s - a) == 1
    ]


def _expected_order(g: Poly, curve: MonomialCurve):
    return min((curve.l_value(e) for e in g.terms), default=INF)


def _pull_orders(G: ReesAlgebra, curve: MonomialCurve):
    """Pullback along ``curve`` and whether some generator's order jumped
    above its Newton bound (cancellation among coefficients)."""
    phi = curve.ring_map(G.ring)
    pulled = []
    jumped = False
    for wg in G.gens:
        img = phi(wg.g)
        if img.min_degree() != _expected_order(wg.g, curve):
            jumped = True
        pulled.append((img, wg.n))
    return ReesAlgebra(phi.target, pulled), jumped


@dataclass
class ProbeRecord:
    index: int
    curve: MonomialCurve
    lambda1: object
    lambda2: object
    degenerate_draws: int
    degenerate: bool
    mismatch: bool

    def as_dict(self) -> dict:
        return {
            "trial": self.index,
            "a": self.curve.a,
            "b": self.curve.b,
            "coeffs": [render_value(c) for c in self.curve.coeffs],
            "lambda1": render_value(self.lambda1),
            "lambda2": render_value(self.lambda2),
            "degenerate_draws": self.degenerate_draws,
            "mismatch": self.mismatch,
        }


@dataclass
class ProbeVerdict:
    records: list = field(default_factory=list)
    witness: ProbeRecord | None = None

    @property
    def refuted(self) -> bool:
        return self.witness is not None

    @property
    def verdict(self) -> str:
        return "refuted" if self.refuted else "consistent"


def _draw_coeff(rng: random.Random, ring: PolyRing):
    p = ring.characteristic
    if p:
        return rng.randrange(1, p)
    return rng.choice((-1, 1)) * rng.randint(1, 20)


def probe_curve(G1: ReesAlgebra, G2: ReesAlgebra, curve: MonomialCurve):
    """Pull both algebras back along ``curve``; return (lambda1, lambda2, jumped)."""
    P1, j1 = _pull_orders(G1, curve)
    P2, j2 = _pull_orders(G2, curve)
    return lambda_invariant(P1), lambda_invariant(P2), j1 or j2


def equal_closure_probe(
    G1: ReesAlgebra,
    G2: ReesAlgebra,
    trials: int = 20,
    seed: int = 0,
    schedule: Sequence | None = None,
    stop_on_refutation: bool = True,
) -> ProbeVerdict:
    """Compare integral closures along seeded monomial curves through 0.

    A curve where both pullbacks are nonzero but their lambdas differ proves
    the closures differ.  Agreement on every curve is only evidence.
    """
    if G1.ring != G2.ring:
        raise ValueError("probed algebras must share a ring")
    if trials < 1:
        raise ValueError("trials must be positive")
    ring = G1.ring
    schedule = list(schedule or coprime_schedule())
    rng = random.Random(seed)
    verdict = ProbeVerdict()
    for i in range(trials):
        a, b = schedule[i % len(schedule)]
        draws = 0
        while True:
            coeffs = tuple(_draw_coeff(rng, ring) for _ in range(ring.ngens - 1))
            curve = MonomialCurve(a, b, coeffs)
            l1, l2, jumped = probe_curve(G1, G2, curve)
            if not jumped or draws >= MAX_RETRIES:
                break
            draws += 1
        nondegenerate = l1 is not INF and l2 is not INF
        rec = ProbeRecord(i, curve, l1, l2, draws, jumped, l1 != l2 and nondegenerate)
        verdict.records.append(rec)
        if rec.mismatch and verdict.witness is None:
            verdict.witness = rec
            if stop_on_refutation:
                break
    return verdict


class CertificateError(ValueError):
    """The pair does not carry a recognised finite-extension certificate."""


@dataclass(frozen=True)
class Certificate:
    kind: str  # "sat", "veronese", or "witness"
    M: int | None = None

    @classmethod
    def parse(cls, text: str) -> "Certificate":
        if text == "sat":
            return cls("sat")
        if text == "witness":
            return cls("witness")
        if text.startswith("veronese:"):
            try:
                return cls("veronese", int(text.split(":", 1)[1]))
            except ValueError:
                raise CertificateError(f"bad veronese certificate {text!r}") from None
        raise CertificateError(f"unknown certificate {text!r}")

    def __str__(self):
        return f"veronese:{self.M}" if self.kind == "veronese" else self.kind


def verify_certificate(G1: ReesAlgebra, G2: ReesAlgebra, cert: Certificate):
    """Raise :class:`CertificateError` unless ``G1 ⊂ G2`` is certified finite.

    * ``sat``: G2 is the weight saturation of G1.
    * ``veronese:M``: G1 is the Rees ring of the degree-M piece of G2.
    * ``witness``: G2 adds to G1 only elements ``g W^w`` with
      ``g^{w+1}`` in the degree ``w(w+1)`` piece of G1.
    """
    if G1.ring != G2.ring:
        raise CertificateError("the pair lives in different rings")
    if cert.kind == "sat":
        if not saturate_weights(G1).same_generators(G2):
            raise CertificateError("second algebra is not the saturation of the first")
    elif cert.kind == "veronese":
        try:
            expected = veronese(G2, cert.M)
        except ValueError as exc:
            raise CertificateError(str(exc)) from None
        if not expected.same_generators(G1):
            raise CertificateError(f"first algebra is not veronese(second, {cert.M})")
    elif cert.kind == "witness":
        base = set(G1.gens)
        if not base <= set(G2.gens):
            raise CertificateError("first algebra's generators are not all in the second")
        for wg in G2.gens:
            if wg in base:
                continue
            k = wg.n + 1
            if not piece_member(wg.g**k, G1, k * wg.n, EXACT):
                raise CertificateError(f"{wg} has no integrality witness over the first algebra")
    else:
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")


@dataclass
class MainCheckReport:
    certificate: str
    closure1: ReesAlgebra
    closure2: ReesAlgebra
    probe: ProbeVerdict
    inclusion_bound: int
    inclusion_ok: bool | None
    coeff_lambdas: list  # [(label, recipe, lambda1, lambda2)]

    @property
    def consistent(self) -> bool:
        coeff_ok = all(l1 == l2 for _, _, l1, l2 in self.coeff_lambdas)
        return not self.probe.refuted and coeff_ok and self.inclusion_ok is not False

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else "refuted"


def main_theorem_check(
    G1: ReesAlgebra,
    G2: ReesAlgebra,
    cert: Certificate,
    trials: int = 20,
    seed: int = 0,
    bound: int = 0,
    split: Split | None = None,
    opts: ClosureOptions | None = None,
) -> MainCheckReport:
    """Probe whether the Diff-closures of a certified finite pair stay a
    finite extension (same integral closure)."""
    verify_certificate(G1, G2, cert)
    C1 = diff_close(G1, opts)
    C2 = diff_close(G2, opts)
    probe = equal_closure_probe(C1, C2, trials, seed)
    inclusion = pieces_contained(C1, C2, bound) if bound > 0 else None
    coeff = []
    if split is not None:
        if G1.ring.ngens - split.h != 1:
            raise ValueError("coefficient comparison needs a one-dimensional Z")
        for label, A, B in (("algebras", G1, G2), ("closures", C1, C2)):
            for recipe in (F1PRIME, F1):
                l1 = lambda_invariant(coefficient_algebra(A, split, recipe).algebra)
                l2 = lambda_invariant(coefficient_algebra(B, split, recipe).algebra)
                coeff.append((label, recipe, l1, l2))
    return MainCheckReport(str(cert), C1, C2, probe, bound, inclusion, coeff)
