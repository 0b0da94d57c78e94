from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from reesalg.field import GF, INF, QQ
from reesalg.poly import PolyRing, binomial_vec, grevlex_key, multi_indices

R = PolyRing(QQ, ("x", "y"))
x, y = R.gens()


def test_hasse_examples():
    Rx = PolyRing(QQ, ("x",))
    (t,) = Rx.gens()
    assert (t**3).hasse((1,)) == 3 * t**2
    F2 = PolyRing(GF(2), ("x",))
    (u,) = F2.gens()
    assert (u**2).hasse((2,)) == F2.one()
    assert (u**2).hasse((1,)).is_zero()
    assert (x * y**2).hasse((1, 1)) == 2 * y


def test_log_hasse_examples():
    Rx = PolyRing(QQ, ("x",))
    (t,) = Rx.gens()
    assert (t**3).log_hasse((1,)) == 3 * t**3
    F2 = PolyRing(GF(2), ("x",))
    (u,) = F2.gens()
    assert (u**2).log_hasse((2,)) == u**2
    assert y.log_hasse((1, 0)).is_zero()


def test_order_at_examples():
    f = x**2 + y**3
    assert f.order_at((0, 0)) == 2
    assert f.order_at((1, 1)) == 0
    assert R.zero().order_at((3, 4)) is INF
    assert ((x - 1) ** 3 * (y + 2)).order_at((1, -2)) == 4


def test_substitute_examples():
    T = PolyRing(QQ, ("t",))
    (t,) = T.gens()
    assert (x**2 + y**3).substitute([t**3, t**2]) == 2 * t**6
    f = 3 * x * y - y**4 + Fraction(1, 2)
    assert f.substitute(R.gens()) == f
    assert (x - y).substitute([y, y]).is_zero()


def test_render():
    f = x**2 - Fraction(1, 2) * x * y + 3
    assert f.render() == "x^2 - 1/2*x*y + 3"
    assert (-x).render() == "-x"
    assert R.zero().render() == "0"
    assert (y**3 + x**2).render() == "y^3 + x^2"


def test_grevlex_order():
    # x^2 > x*y > y^2 > x > y > 1 in grevlex
    exps = [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert sorted(exps, key=grevlex_key) == exps
    # degree 3 in three variables: x*z^2 < y^3 (reverse lex on last variable)
    assert grevlex_key((1, 0, 2)) < grevlex_key((0, 3, 0))


def test_multi_indices():
    got = list(multi_indices(2, 2))
    assert len(got) == 6 and got[0] == (0, 0)
    assert list(multi_indices(3, 1, (True, False, True))) == [(0, 0, 0), (1, 0, 0), (0, 0, 1)]


def test_binomial_vec():
    assert binomial_vec((3, 2), (1, 1)) == 6
    assert binomial_vec((1,), (2,)) == 0


def test_char_p_reduction():
    F = PolyRing(GF(2), ("x", "y"))
    a, b = F.gens()
    assert (a + b) ** 2 == a**2 + b**2
    assert F.parse("3*x^2") == a**2


def test_ring_mismatch():
    S = PolyRing(GF(5), ("x", "y"))
    with pytest.raises(ValueError):
        x + S.var("x")


# property tests with a symbolic Taylor oracle

coeffs = st.integers(-5, 5)
exps = st.tuples(st.integers(0, 4), st.integers(0, 4))


@st.composite
def polys(draw, ring=R):
    terms = draw(st.dictionaries(exps, coeffs, max_size=5))
    return sum((ring.monomial(e, c) for e, c in terms.items()), ring.zero())


def _taylor_coefficient(f, alpha):
    """Coefficient of u^alpha in f(x + u), from expanding every term by hand."""
    out = R.zero()
    for e, c in f.terms.items():
        for beta in product(*(range(k + 1) for k in e)):
            if beta != alpha:
                continue
            rest = tuple(k - b for k, b in zip(e, beta))
            out = out + R.monomial(rest, c * binomial_vec(e, beta))
    return out


@given(polys(), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_hasse_matches_taylor_coefficient(f, alpha):
    assert f.hasse(alpha) == _taylor_coefficient(f, alpha)


@given(polys(), polys())
def test_ring_axioms(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    assert f * (g + 1) == f * g + f


@given(polys(), st.integers(0, 4), st.integers(0, 4))
def test_log_hasse_scales_monomials(f, a, b):
    alpha = (a, b)
    expected = R.zero()
    for e, c in f.terms.items():
        expected = expected + R.monomial(e, c * binomial_vec(e, alpha))
    assert f.log_hasse(alpha) == expected


@settings(max_examples=50)
@given(polys(), st.integers(-2, 2), st.integers(-2, 2))
def test_order_at_is_min_degree_after_shift(f, a, b):
    shifted = f.substitute([x + a, y + b])
    assert f.order_at((a, b)) == shifted.min_degree()
    # order is the least |alpha| with a nonzero Hasse derivative value
    nonzero = [sum(al) for al in multi_indices(2, max(f.degree(), 0)) if f.hasse(al).evaluate((a, b)) != 0]
    assert f.order_at((a, b)) == min(nonzero, default=INF)


@given(polys())
def test_render_roundtrip(f):
    assert R.parse(f.render()) == f


@given(polys(PolyRing(GF(5), ("x", "y"))))
def test_render_roundtrip_mod_p(f):
    assert f.ring.parse(f.render()) == f
