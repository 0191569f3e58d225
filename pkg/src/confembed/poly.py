"""Dense univariate polynomials with Fraction coefficients, lowest degree first."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import List, Sequence, Tuple

Poly = Tuple[Fraction, ...]


def normalize(p: Sequence) -> Poly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p: Poly, c) -> Poly:
    return normalize([c * a for a in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def linear_root(r) -> Poly:
    """The monic polynomial k - r."""
    return normalize([-Fraction(r), 1])


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divide_linear(p: Poly, r) -> Tuple[Poly, Fraction]:
    """Synthetic division by (k - r); returns quotient and remainder."""
    if not p:
        return (), Fraction(0)
    r = Fraction(r)
    coeffs = list(reversed(p))
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * r)
    rem = out.pop()
    return normalize(list(reversed(out))), rem


def primitive_integer(p: Poly) -> Tuple[int, ...]:
    """Integer multiple of ``p`` with content 1 and positive leading coefficient."""
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _vanishes(ints: Sequence[int], num: int, den: int) -> bool:
    """Whether num/den is a root, evaluating den^deg * p(num/den) in integers."""
    n = len(ints) - 1
    acc = ints[n]
    power = 1
    for i in range(n - 1, -1, -1):
        power *= den
        acc = acc * num + ints[i] * power
    return acc == 0


def rational_roots(p: Poly) -> Tuple[List[Tuple[Fraction, int]], Poly]:
    """Rational roots with multiplicity, plus the cofactor without rational roots."""
    p = normalize(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    found: List[Tuple[Fraction, int]] = []
    mult0 = 0
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
        mult0 += 1
    if mult0:
        found.append((Fraction(0), mult0))
    while degree(p) >= 1:
        ints = primitive_integer(p)
        hit = None
        dens = _divisors(ints[-1])
        for num in _divisors(ints[0]):
            for den in dens:
                if gcd(num, den) != 1:
                    continue
                for s in (num, -num):
                    if _vanishes(ints, s, den):
                        hit = Fraction(s, den)
                        break
                if hit is not None:
                    break
            if hit is not None:
                break
        if hit is None:
            break
        mult = 0
        while degree(p) >= 1:
            q, rem = divide_linear(p, hit)
            if rem != 0:
                break
            p = q
            mult += 1
        found.append((hit, mult))
    found.sort()
    return found, p
