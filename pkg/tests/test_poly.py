from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from confembed import poly

k = sympy.Symbol("k")

roots_st = st.lists(
    st.fractions(min_value=-12, max_value=12, max_denominator=6), min_size=1, max_size=5
)


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * k ** i for i, c in enumerate(p))


@given(roots_st, st.integers(0, 2), st.integers(1, 5))
def test_rational_roots_against_sympy(roots, irreducible, scale):
    p = (Fraction(scale),)
    for r in roots:
        p = poly.mul(p, poly.linear_root(r))
    if irreducible == 1:
        p = poly.mul(p, poly.normalize([2, 0, 1]))  # k^2 + 2
    elif irreducible == 2:
        p = poly.mul(p, poly.normalize([-3, 0, 1]))  # k^2 - 3
    found, residual = poly.rational_roots(p)
    want = {}
    for factor, mult in sympy.factor_list(to_sympy(p), k)[1]:
        if sympy.degree(factor, k) == 1:
            root = sympy.solve(factor, k)[0]
            want[Fraction(int(sympy.numer(root)), int(sympy.denom(root)))] = mult
    assert dict(found) == want
    assert poly.degree(residual) == (0 if irreducible == 0 else 2)


@settings(max_examples=25)
@given(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=4), min_size=1, max_size=4))
def test_brute_force_candidate_scan(roots):
    p = (Fraction(1),)
    for r in roots:
        p = poly.mul(p, poly.linear_root(r))
    ints = poly.primitive_integer(p)
    nonzero = [c for c in ints if c]
    a0, an = nonzero[0], nonzero[-1]
    cands = {Fraction(s * a, b) for a in range(1, abs(a0) + 1) if a0 % a == 0
             for b in range(1, abs(an) + 1) if an % b == 0 for s in (1, -1)}
    if ints[0] == 0:
        cands.add(Fraction(0))
    brute = {c for c in cands if poly.evaluate(p, c) == 0}
    found, _ = poly.rational_roots(p)
    assert {r for r, _ in found} == brute


def test_divide_linear_remainder_is_value():
    p = poly.normalize([5, -3, 0, 2])
    q, rem = poly.divide_linear(p, Fraction(3, 2))
    assert rem == poly.evaluate(p, Fraction(3, 2))
    assert poly.add(poly.mul(q, poly.linear_root(Fraction(3, 2))), (rem,)) == p


def test_primitive_integer():
    assert poly.primitive_integer(poly.normalize([Fraction(-1, 2), Fraction(1, 3)])) == (-3, 2)
