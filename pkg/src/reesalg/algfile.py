"""Reading and writing algebra description files.

Format::

    # comment
    ring char=0 vars=x,y
    gen w=2 x^2 + y^3
    split h=1
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from reesalg.coeff import Split
from reesalg.field import Field
from reesalg.parse import ParseError, parse_poly
from reesalg.poly import PolyRing
from reesalg.rees import ReesAlgebra

_RING = re.compile(r"^ring\s+char=(\d+)\s+vars=([A-Za-z_][A-Za-z0-9_]*(?:,[A-Za-z_][A-Za-z0-9_]*)*)$")
_GEN = re.compile(r"^gen\s+w=(\d+)\s+(.+)$")
_SPLIT = re.compile(r"^split\s+h=(\d+)$")


class AlgebraFileError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class AlgebraFile:
    algebra: ReesAlgebra
    split: Split | None = None

    @property
    def ring(self) -> PolyRing:
        return self.algebra.ring


def loads(text: str) -> AlgebraFile:
    ring = None
    gens = []
    split = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            m = _RING.match(line)
            if not m:
                raise AlgebraFileError("expected 'ring char=<p> vars=<names>' header", lineno)
            try:
                ring = PolyRing(Field(int(m.group(1))), tuple(m.group(2).split(",")))
            except ValueError as exc:
                raise AlgebraFileError(str(exc), lineno) from None
            continue
        if m := _GEN.match(line):
            w = int(m.group(1))
            if w < 1:
                raise AlgebraFileError("weights must be positive", lineno)
            try:
                g = parse_poly(m.group(2), ring)
            except ParseError as exc:
                raise AlgebraFileError(f"{exc.message} at byte {exc.offset} of the expression", lineno) from None
            gens.append((g, w))
        elif m := _SPLIT.match(line):
            if split is not None:
                raise AlgebraFileError("at most one split line is allowed", lineno)
            split = Split(int(m.group(1)))
            try:
                split.check(ring)
            except ValueError as exc:
                raise AlgebraFileError(str(exc), lineno) from None
        elif line.startswith("ring"):
            raise AlgebraFileError("duplicate ring header", lineno)
        else:
            raise AlgebraFileError(f"unrecognised line {line!r}", lineno)
    if ring is None:
        raise AlgebraFileError("missing ring header", max(1, len(text.splitlines())))
    return AlgebraFile(ReesAlgebra(ring, gens), split)


def load(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def ring_header(ring: PolyRing) -> str:
    return f"ring char={ring.characteristic} vars={','.join(ring.variables)}"


def dumps(G: ReesAlgebra, split: Split | None = None) -> str:
    lines = [ring_header(G.ring)]
    lines.extend(f"gen w={wg.n} {wg.g.render()}" for wg in G.gens)
    if split is not None:
        lines.append(f"split h={split.h}")
    return "\n".join(lines) + "\n"
