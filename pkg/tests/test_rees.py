import random

import pytest
from hypothesis import given, settings, strategies as st

import randgen
from reesalg.field import GF, QQ
from reesalg.grobner import buchberger
from reesalg.poly import PolyRing
from reesalg.rees import (
    EXACT,
    SATURATED,
    PieceTooLarge,
    ReesAlgebra,
    WeightedGen,
    graded_piece,
    integral_witness,
    piece_basis,
    piece_member,
    pieces_contained,
    pieces_equal,
    saturate_weights,
    veronese,
)

R1 = PolyRing(QQ, ("x",))
(x1,) = R1.gens()
R = PolyRing(QQ, ("x", "y"))
x, y = R.gens()


def test_construction_drops_zero_and_duplicates():
    G = ReesAlgebra(R, [(x, 1), (R.zero(), 2), (x, 1), (x, 2)])
    assert [wg.n for wg in G.gens] == [1, 2]
    with pytest.raises(ValueError):
        WeightedGen(x, 0)


def test_saturate_examples():
    assert saturate_weights(ReesAlgebra(R1, [(x1**2, 2)])).same_generators(
        ReesAlgebra(R1, [(x1**2, 1), (x1**2, 2)])
    )
    assert saturate_weights(ReesAlgebra(R1, [(x1, 1)])).same_generators(ReesAlgebra(R1, [(x1, 1)]))
    assert len(saturate_weights(ReesAlgebra(R1, [(x1**3, 3)])).gens) == 3


def test_graded_piece_examples():
    G = ReesAlgebra(R1, [(x1**2, 2)])
    assert graded_piece(G, 4).gens == (x1**4,)
    assert graded_piece(G, 3).gens == ()
    assert graded_piece(saturate_weights(G), 3).gens == (x1**4,)


def test_piece_member_examples():
    G = ReesAlgebra(R1, [(x1**2, 2)])
    assert piece_member(x1**5, G, 4)
    assert not piece_member(x1**3, G, 4)
    F2 = PolyRing(GF(2), ("x",))
    (u,) = F2.gens()
    assert piece_member(2 * u, ReesAlgebra(F2, [(u**3, 2)]), 2)


def test_veronese_examples():
    assert veronese(ReesAlgebra(R1, [(x1, 1)]), 2).same_generators(ReesAlgebra(R1, [(x1**2, 2)]))
    G = ReesAlgebra(R1, [(x1**2, 2)])
    assert veronese(G, 2).same_generators(G)
    V = veronese(ReesAlgebra(R, [(x, 1), (y, 2)]), 2)
    assert V.same_generators(ReesAlgebra(R, [(x**2, 2), (y, 2)]))
    with pytest.raises(ValueError):
        veronese(ReesAlgebra(R, [(x, 2)]), 3)


def test_integral_witness_examples():
    w = integral_witness(x**2, 2)
    assert (w.element.g, w.element.n) == (x**2, 1)
    assert (w.constant.g, w.constant.n) == (x**4, 2)
    assert w.render() == "Z^2 - (x^4)*W^2"
    w3 = integral_witness(y**3, 3)
    assert (w3.element.n, w3.constant.g, w3.constant.n) == (2, y**9, 6)
    assert integral_witness(R.zero(), 2).render() == "Z^2"
    assert integral_witness(x, 2).holds_in(ReesAlgebra(R, [(x**2, 2)]))
    assert not integral_witness(x, 2).holds_in(ReesAlgebra(R, [(x**3, 2)]))


def test_saturated_mode_is_tail_sum():
    G = ReesAlgebra(R, [(x**2, 2), (y, 3)])
    # I'_2 = I_2 + I_3 + ... = <x^2, y>
    assert piece_basis(G, 2, SATURATED) == buchberger([x**2, y])
    assert piece_basis(G, 1, SATURATED) == buchberger([x**2, y])
    assert piece_basis(G, 2, EXACT) == buchberger([x**2])


def test_redundant_products_are_dropped():
    G = ReesAlgebra(R, [(x, 1), (x**3 * y, 2), (y**2, 2)])
    assert graded_piece(G, 2).gens == (x**2, y**2)


def test_factor_cap():
    G = ReesAlgebra(R1, [(x1, 1)])
    graded_piece(G, 12)
    with pytest.raises(PieceTooLarge):
        graded_piece(G, 13)


def test_pieces_equal_and_contained():
    A = ReesAlgebra(R, [(x, 1)])
    B = ReesAlgebra(R, [(x, 1), (x**2, 2)])
    assert pieces_equal(A, B, 5)
    C = ReesAlgebra(R, [(x, 1), (y, 1)])
    assert pieces_contained(A, C, 4)
    assert not pieces_contained(C, A, 4)


def _piece_by_products(G, N):
    return buchberger(list(graded_piece(G, N).gens), ring=G.ring)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 3]))
def test_recursive_piece_matches_product_enumeration(seed, p):
    rng = random.Random(seed)
    G = randgen.algebra(rng, randgen.ring(p, 2), ngens=(1, 3), max_deg=3, max_weight=3)
    for N in range(1, 6):
        assert piece_basis(G, N) == _piece_by_products(G, N)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_pieces_multiply(seed):
    rng = random.Random(seed)
    G = randgen.algebra(rng, randgen.ring(5, 2), ngens=(1, 2), max_deg=3, max_weight=3)
    for a in range(1, 4):
        for b in range(1, 4):
            for f in piece_basis(G, a).basis:
                for g in piece_basis(G, b).basis:
                    assert piece_member(f * g, G, a + b)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_saturation_pieces_are_nested(seed):
    rng = random.Random(seed)
    S = saturate_weights(randgen.algebra(rng, randgen.ring(0, 2), ngens=(1, 2), max_deg=3, max_weight=3))
    for N in range(1, 5):
        for f in piece_basis(S, N + 1).basis:
            assert piece_member(f, S, N)
        assert piece_basis(S, N) == piece_basis(S, N, SATURATED)
