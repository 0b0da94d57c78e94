import random

import pytest
from hypothesis import given, settings, strategies as st

import randgen
from reesalg import algfile
from reesalg.algfile import AlgebraFileError
from reesalg.coeff import Split


def test_loads_basic():
    af = algfile.loads("# cusp\nring char=0 vars=x,y\ngen w=2 x^2 + y^3  # trailing\nsplit h=1\n")
    assert af.ring.variables == ("x", "y")
    assert af.split == Split(1)
    assert [(wg.g.render(), wg.n) for wg in af.algebra.gens] == [("y^3 + x^2", 2)]


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("gen w=1 x\n", 1, "header"),
        ("ring char=4 vars=x\n", 1, "prime"),
        ("ring char=0 vars=x\ngen w=0 x\n", 2, "positive"),
        ("ring char=0 vars=x\n\ngen w=1 2x\n", 3, "implicit multiplication"),
        ("ring char=0 vars=x\ngen w=1 y\n", 2, "unknown variable"),
        ("ring char=0 vars=x,y\nsplit h=1\nsplit h=1\n", 3, "at most one"),
        ("ring char=0 vars=x,y\nsplit h=2\n", 2, "split"),
        ("ring char=0 vars=x\nring char=0 vars=x\n", 2, "duplicate"),
        ("ring char=0 vars=x\nfoo\n", 2, "unrecognised"),
        ("# nothing\n", 1, "missing"),
    ],
)
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(AlgebraFileError) as info:
        algfile.loads(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_dumps_format():
    af = algfile.loads("ring char=5 vars=a,b\ngen w=3 7*a*b - b\n")
    assert algfile.dumps(af.algebra, Split(1)) == "ring char=5 vars=a,b\ngen w=3 2*a*b + 4*b\nsplit h=1\n"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 2, 7, 101]))
def test_round_trip(seed, p):
    rng = random.Random(seed)
    G = randgen.algebra(rng, randgen.ring(p, rng.randint(1, 3)), ngens=(0, 4), max_deg=5, max_weight=4)
    text = algfile.dumps(G)
    again = algfile.loads(text)
    assert again.algebra == G
    assert algfile.dumps(again.algebra) == text
