import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from confembed.repthy import (
    IrrepSum,
    casimir_value,
    dominant_weights,
    dynkin_index,
    freudenthal,
    irrep_index,
    tensor_decompose,
    weyl_dim,
)
from confembed.rootsys import LieType, build_root_datum
from confembed.verify import brute_tensor, gt_character

SMALL = [LieType.parse(t) for t in ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "G2", "F4")]


def weights(rank, hi):
    return st.lists(st.integers(0, hi), min_size=rank, max_size=rank).map(tuple)


def test_weyl_dim_examples():
    assert weyl_dim(build_root_datum("G2"), (0, 0)) == 1
    assert weyl_dim(build_root_datum("A2"), (1, 1)) == 8
    assert weyl_dim(build_root_datum("D5"), (0, 0, 0, 1, 0)) == 16


def test_freudenthal_examples():
    for m in range(6):
        ws = freudenthal(build_root_datum("A1"), (m,)).entries
        assert ws == {(j,): 1 for j in range(-m, m + 1, 2)}
    assert freudenthal(build_root_datum("A2"), (1, 1))[(0, 0)] == 2
    g2 = build_root_datum("G2")
    short = (1, 0) if g2.root_lengths[0] < g2.root_lengths[1] else (0, 1)
    ws = freudenthal(g2, short).entries
    assert len(ws) == 7 and set(ws.values()) == {1} and ws[(0, 0)] == 1


def test_tensor_examples():
    for n in range(2, 7):
        d = build_root_datum(LieType("A", n - 1))
        w1 = tuple(int(i == 0) for i in range(n - 1))
        wl = tuple(int(i == n - 2) for i in range(n - 1))
        both = tuple(a + b for a, b in zip(w1, wl))
        assert dict(tensor_decompose(d, w1, wl)) == {(0,) * (n - 1): 1, both: 1}
    d = build_root_datum("A1")
    assert dict(tensor_decompose(d, (0,), (5,))) == {(5,): 1}
    assert dict(tensor_decompose(d, (2,), (2,))) == {(0,): 1, (2,): 1, (4,): 1}


def test_casimir_examples():
    for t in SMALL:
        d = build_root_datum(t)
        assert casimir_value(d, (0,) * t.rank) == 0
        assert casimir_value(d, d.theta_weight) == 2 * d.dual_coxeter
    assert casimir_value(build_root_datum("A2"), (1, 0)) == Fraction(8, 3)


def test_dynkin_index_examples():
    for t in SMALL:
        d = build_root_datum(t)
        assert irrep_index(d, d.theta_weight) == 1
    assert irrep_index(build_root_datum("A2"), (1, 0)) == Fraction(1, 6)


@pytest.mark.parametrize("two_j", range(0, 9))
def test_sl2_index_matches_spin_formula(two_j):
    # index of spin j relative to the adjoint: j(j+1)(2j+1)/6
    j = Fraction(two_j, 2)
    assert irrep_index(build_root_datum("A1"), (two_j,)) == j * (j + 1) * (2 * j + 1) / 6


def test_sl2_spin_three_halves():
    assert irrep_index(build_root_datum("A1"), (3,)) == Fraction(5, 2)


def sl2_clebsch_gordan(a, b):
    return {(c,): 1 for c in range(abs(a - b), a + b + 1, 2)}


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(5))
def test_a1_against_clebsch_gordan(a, b):
    assert dict(tensor_decompose(build_root_datum("A1"), (a,), (b,))) == sl2_clebsch_gordan(a, b)


def test_a2_against_character_multiplication():
    d = build_root_datum("A2")
    box = [(i, j) for i in range(5) for j in range(5)]
    rng = random.Random(3)
    pairs = [(x, y) for x in box for y in box if x <= y]
    cases = rng.sample(pairs, 200)
    for lam, mu in cases:
        assert dict(tensor_decompose(d, lam, mu)) == brute_tensor(lam, mu), (lam, mu)


@pytest.mark.parametrize("t", ["A2", "A3", "A4"])
def test_gelfand_tsetlin_agrees_with_freudenthal(t):
    d = build_root_datum(t)
    for lam in [(1,) * d.lie_type.rank, tuple(range(d.lie_type.rank)), (2,) + (0,) * (d.lie_type.rank - 1)]:
        assert dict(gt_character(lam)) == dict(freudenthal(d, lam).entries)


@given(st.sampled_from(SMALL), st.data())
def test_dimension_conservation_and_commutation(t, data):
    d = build_root_datum(t)
    hi = 1 if t.rank >= 4 else 3
    lam = data.draw(weights(t.rank, hi))
    mu = data.draw(weights(t.rank, hi))
    prod = tensor_decompose(d, lam, mu)
    assert sum(m * weyl_dim(d, nu) for nu, m in prod) == weyl_dim(d, lam) * weyl_dim(d, mu)
    assert prod == tensor_decompose(d, mu, lam)


@given(st.sampled_from(SMALL), st.data())
def test_freudenthal_mass_and_orbit_constancy(t, data):
    d = build_root_datum(t)
    lam = data.draw(weights(t.rank, 2 if t.rank >= 4 else 3))
    wm = freudenthal(d, lam)
    assert wm.total() == weyl_dim(d, lam)
    entries = wm.entries
    for w, m in list(entries.items())[:40]:
        for i in range(t.rank):
            assert entries.get(d.simple_reflection(w, i), 0) == m


@given(st.sampled_from(SMALL), st.data())
def test_dynkin_index_additive(t, data):
    d = build_root_datum(t)
    lam = data.draw(weights(t.rank, 2))
    mu = data.draw(weights(t.rank, 2))
    both = IrrepSum.single(lam) + IrrepSum.single(mu)
    assert dynkin_index(d, both) == irrep_index(d, lam) + irrep_index(d, mu)


def test_dominant_weights_contains_highest_and_zero_for_root_lattice():
    d = build_root_datum("B3")
    doms = dominant_weights(d, d.theta_weight)
    assert d.theta_weight in doms and (0, 0, 0) in doms
