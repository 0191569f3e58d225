from fractions import Fraction

import pytest
import sympy

from confembed.conformal import (
    LevelError,
    central_charge,
    chain_conformal,
    conformal_levels,
    deligne_cubic_roots,
    solve_levels,
    verify_numcheck,
)
from confembed.rootsys import LieType, build_root_datum
from confembed.subalg import SubalgebraError, build_subalgebra, enumerate_maximal, find_subalgebra
from confembed.verify import all_types

PAIRS = [s for g in all_types(6) for s in enumerate_maximal(g)]
k = sympy.Symbol("k")


def pid(s):
    return f"{s.ambient}-{s.label}"


def test_central_charge_examples():
    assert central_charge(build_root_datum("E8"), 0) == 0
    assert central_charge(1, Fraction(7, 3)) == 1
    assert central_charge("E8", 1) == 8
    with pytest.raises(LevelError):
        central_charge("A2", -3)


def test_e8_a4xa4_level_one():
    # 248/(k+30) = 48/(k+5) after dividing by k
    assert sympy.solve(sympy.Eq(248 / (k + 30), 48 / (k + 5)), k) == [1]
    assert conformal_levels(find_subalgebra("E8", "A4xA4")) == (1,)


def test_table_examples():
    assert set(conformal_levels(find_subalgebra("G2", "A1xA1"))) == {1, Fraction(-5, 3)}
    for n in range(3, 9):
        for h in range(1, n):
            if 2 * h == n:
                continue
            s = build_subalgebra(LieType("C", n), h)
            assert set(conformal_levels(s)) == {Fraction(-1, 2), -1 - Fraction(n, 2)}


def sympy_levels(s):
    """Nonzero rational solutions of c_g(k) = c_g0(k) away from poles, via sympy."""
    d = s.datum
    lhs = k * d.dim / (k + d.dual_coxeter)
    rhs = sum(i.index * k * i.dim / (i.index * k + i.dual_coxeter) for i in s.ideals) + s.center_dim
    num = sympy.numer(sympy.together(lhs - rhs))
    poles = {Fraction(-d.dual_coxeter)} | {Fraction(-i.dual_coxeter) / i.index for i in s.ideals}
    out = set()
    for r in sympy.roots(sympy.Poly(num, k)).keys():
        if r.is_rational and r != 0:
            fr = Fraction(int(sympy.numer(r)), int(sympy.denom(r)))
            if fr not in poles:
                out.add(fr)
    return out


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_levels_against_sympy(s):
    assert set(solve_levels(s).levels) == sympy_levels(s)


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_numcheck_equivalence(s):
    levels = set(solve_levels(s).levels)
    for lev in levels:
        assert verify_numcheck(s, lev).conformal
    for lev in [Fraction(p, q) for p in range(-9, 10) for q in (1, 2, 3, 5)]:
        if lev in levels or lev == 0:
            continue
        try:
            rep = verify_numcheck(s, lev)
        except LevelError:
            continue
        assert not rep.conformal


@pytest.mark.parametrize("s", PAIRS, ids=pid)
def test_numerator_degree_bounded_by_poles(s):
    eq = solve_levels(s).equation
    assert len(eq.numerator) - 1 <= len(eq.terms) - 1


def test_level_one_rows():
    assert 1 not in conformal_levels(build_subalgebra(LieType("B", 5), 5))
    assert 1 not in conformal_levels(find_subalgebra("G2", "A2"))
    assert 1 not in conformal_levels(find_subalgebra("F4", "B4"))


def test_numcheck_examples():
    s = find_subalgebra("G2", "A2")
    assert [v for _, v in verify_numcheck(s, Fraction(-5, 3)).values] == [1, 1]
    assert not verify_numcheck(s, 1).conformal


def test_conditions_reported():
    sol = solve_levels(build_subalgebra(LieType("C", 4), 2))
    assert sol.levels == (Fraction(-1, 2),)
    assert "-3 excluded: critical level of C2" in sol.conditions


def test_nonmaximal_rejected():
    with pytest.raises(SubalgebraError):
        conformal_levels(build_subalgebra(LieType.parse("F4"), 3))


def test_chain_single_link_matches_levels():
    for lev in (1, -1, Fraction(-5, 2), Fraction(1, 3)):
        rep = chain_conformal("A4", [(0, 2)], lev)
        assert rep.conformal == (Fraction(lev) in conformal_levels(build_subalgebra(LieType("A", 4), 2)))


def test_chain_through_cartan():
    # A3 > A1 x A1 x Z > Z x A1 x Z at k = 1: every link is conformal
    rep = chain_conformal("A3", [(0, 2), (0, 1)], 1)
    assert rep.conformal and len(rep.links) == 2
    # at k = -1 the first link is conformal but sl2 > Z at level -1 is not
    rep = chain_conformal("A3", [(0, 2), (0, 1)], -1)
    assert not rep.conformal and rep.first_failure == 1


@pytest.mark.parametrize("g,extra", [("G2", Fraction(-5, 3)), ("F4", Fraction(-5, 2)), ("E6", -3), ("E7", -4), ("E8", -6)])
def test_deligne(g, extra):
    hv = build_root_datum(g).dual_coxeter
    assert set(deligne_cubic_roots(g)) == {1, Fraction(extra)} == {1, -Fraction(hv, 6) - 1}
