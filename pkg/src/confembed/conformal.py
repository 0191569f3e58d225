"""Central charges, conformal levels and the numerical conformality check.

A level k is conformal for g^0 in g when the Sugawara central charges agree:
    k dim g/(k + h) = sum_j d_j k dim g_j/(d_j k + h_j) + (dim of the center).
Dividing by k gives a sum of simple fractions in k whose numerator is an
integer polynomial; its rational roots, minus 0 and the critical levels, are
the conformal levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import poly
from .repthy import casimir_value
from .rootsys import LieType, RootDatum, build_root_datum
from .subalg import (
    ConstructionError,
    EqualRankSubalgebra,
    Ideal,
    SubalgebraError,
    build_subalgebra,
    identify_ideal,
)


class LevelError(ValueError):
    """A level hits a pole (critical level, or k = 0 with a center)."""


def central_charge(x: Union[RootDatum, LieType, str, int], k) -> Fraction:
    """Sugawara central charge k dim g/(k + h); an integer ``x`` means an abelian algebra of that dimension."""
    k = Fraction(k)
    if isinstance(x, int):
        if k == 0:
            raise LevelError("abelian central charge has a pole at k = 0")
        return Fraction(x)
    d = x if isinstance(x, RootDatum) else build_root_datum(x)
    if k + d.dual_coxeter == 0:
        raise LevelError(f"k = {k} is the critical level of {d.lie_type}")
    return k * d.dim / (k + d.dual_coxeter)


@dataclass(frozen=True)
class LevelAssignment:
    ambient: Fraction
    ideals: Tuple[Fraction, ...]
    center: Optional[Fraction]


def level_assignment(sub: EqualRankSubalgebra, k) -> LevelAssignment:
    k = Fraction(k)
    return LevelAssignment(
        ambient=k,
        ideals=tuple(i.index * k for i in sub.ideals),
        center=k if sub.center_dim else None,
    )


def subalgebra_central_charge(sub: EqualRankSubalgebra, k) -> Fraction:
    levels = level_assignment(sub, k)
    total = sum(
        (central_charge(i.datum, kj) for i, kj in zip(sub.ideals, levels.ideals)), Fraction(0)
    )
    if sub.center_dim:
        total += central_charge(sub.center_dim, k)
    return total


# -- equation and solver -------------------------------------------------------


@dataclass(frozen=True)
class CentralChargeEquation:
    """sum_r c_r/(k - r) = 0, with ``numerator`` the cleared polynomial."""

    terms: Tuple[Tuple[Fraction, Fraction, str], ...]
    numerator: poly.Poly

    @property
    def poles(self) -> Tuple[Fraction, ...]:
        return tuple(sorted({r for _, r, _ in self.terms}))

    @property
    def integer_numerator(self) -> Tuple[int, ...]:
        return poly.primitive_integer(self.numerator)

    def evaluate(self, k) -> Fraction:
        k = Fraction(k)
        return sum((c / (k - r) for c, r, _ in self.terms), Fraction(0))


def equation_from_terms(terms: Sequence[Tuple[Fraction, Fraction, str]]) -> CentralChargeEquation:
    # one linear factor per term, so repeated critical levels stay visible as
    # roots of the numerator and can be reported as excluded
    num: poly.Poly = ()
    for i, (c, _, _) in enumerate(terms):
        term: poly.Poly = (Fraction(c),)
        for j, (_, s, _) in enumerate(terms):
            if j != i:
                term = poly.mul(term, poly.linear_root(s))
        num = poly.add(num, term)
    return CentralChargeEquation(tuple((Fraction(c), Fraction(r), n) for c, r, n in terms), num)


def _simple_term(d: RootDatum, index: Fraction, sign: int) -> Tuple[Fraction, Fraction, str]:
    # d k dim/(d k + h) divided by k is dim/(k + h/d)
    return (Fraction(sign * d.dim), -Fraction(d.dual_coxeter) / index, str(d.lie_type))


def central_charge_equation(sub: EqualRankSubalgebra) -> CentralChargeEquation:
    terms = [_simple_term(sub.datum, Fraction(1), +1)]
    for ideal in sub.ideals:
        terms.append(_simple_term(ideal.datum, ideal.index, -1))
    if sub.center_dim:
        terms.append((Fraction(-sub.center_dim), Fraction(0), "Z"))
    return equation_from_terms(terms)


@dataclass(frozen=True)
class LevelSolution:
    levels: Tuple[Fraction, ...]
    excluded: Tuple[Tuple[Fraction, str], ...]
    residual: poly.Poly
    equation: CentralChargeEquation

    @property
    def needs_inspection(self) -> bool:
        """True when a factor of degree >= 2 without rational roots remains."""
        return poly.degree(self.residual) >= 2

    @property
    def conditions(self) -> Tuple[str, ...]:
        return tuple(f"{r} excluded: {why}" for r, why in self.excluded)


def solve_equation(eq: CentralChargeEquation) -> LevelSolution:
    if not eq.numerator:
        raise ConstructionError("central charge equation vanishes identically")
    found, residual = poly.rational_roots(eq.numerator)
    reasons: Dict[Fraction, str] = {}
    for _, r, name in eq.terms:
        if r == 0:
            continue
        reasons.setdefault(r, f"critical level of {name}")
    levels, excluded = [], []
    for root, _ in found:
        if root == 0:
            continue
        if root in reasons:
            excluded.append((root, reasons[root]))
        else:
            levels.append(root)
    return LevelSolution(tuple(levels), tuple(excluded), residual, eq)


def solve_levels(sub: EqualRankSubalgebra) -> LevelSolution:
    return solve_equation(central_charge_equation(sub))


def conformal_levels(sub: EqualRankSubalgebra) -> Tuple[Fraction, ...]:
    """Nonzero, non-critical rational levels where g^0 embeds conformally, ascending."""
    if not sub.maximal:
        raise SubalgebraError(f"{sub.label or sub.name} is not maximal")
    return solve_levels(sub).levels


# -- numcheck ------------------------------------------------------------------


@dataclass(frozen=True)
class NumcheckReport:
    level: Fraction
    values: Tuple[Tuple[int, Fraction], ...]

    @property
    def conformal(self) -> bool:
        return all(v == 1 for _, v in self.values)


def conformal_weight_terms(sub: EqualRankSubalgebra, k, weight) -> Fraction:
    """sum_j (nu^j, nu^j + 2 rho^j)_0/(2(k_j + h_j)) + (q zeta, q zeta)/(2k)."""
    k = Fraction(k)
    total = Fraction(0)
    for ideal, block in zip(sub.ideals, weight.blocks):
        kj = ideal.index * k
        den = kj + ideal.dual_coxeter
        if den == 0:
            raise LevelError(f"k = {k} puts {ideal.lie_type} at its critical level")
        total += casimir_value(ideal.datum, block) / (2 * den)
    if sub.center_dim and weight.charge:
        if k == 0:
            raise LevelError("k = 0 is a pole of the center term")
        total += weight.charge ** 2 * sub.zeta_norm / (2 * k)
    return total


def verify_numcheck(sub: EqualRankSubalgebra, k) -> NumcheckReport:
    k = Fraction(k)
    if sub.center_dim and k == 0:
        raise LevelError("k = 0 is a pole of the center term")
    vals = tuple((c.index, conformal_weight_terms(sub, k, c.weight)) for c in sub.p_module)
    return NumcheckReport(k, vals)


# -- chains --------------------------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    before: Tuple[str, ...]
    after: Tuple[str, ...]
    charge_before: Fraction
    charge_after: Fraction

    @property
    def conformal(self) -> bool:
        return self.charge_before == self.charge_after


@dataclass(frozen=True)
class ChainReport:
    level: Fraction
    links: Tuple[ChainLink, ...]

    @property
    def conformal(self) -> bool:
        return all(link.conformal for link in self.links)

    @property
    def first_failure(self) -> Optional[int]:
        for i, link in enumerate(self.links):
            if not link.conformal:
                return i
        return None


def _stage_charge(stage) -> Fraction:
    simple, centers = stage
    total = Fraction(centers)
    for t, lev in simple:
        total += central_charge(t, lev)
    return total


def _stage_names(stage) -> Tuple[str, ...]:
    simple, centers = stage
    return tuple(f"{t}@{lev}" for t, lev in simple) + ("Z",) * centers


def chain_conformal(g, chain: Sequence[Tuple[int, int]], k) -> ChainReport:
    """Walk a chain of maximal equal-rank links and compare central charges.

    Each step ``(j, node)`` replaces the j-th simple ideal (0-based, in the
    current list) by the subalgebra obtained from removing ``node``.  Levels
    compose through the embedding indices; every center contributes 1.
    """
    if isinstance(g, str):
        g = LieType.parse(g)
    k = Fraction(k)
    if k == 0:
        raise LevelError("chains are compared at k != 0")
    stage = ([(g, k)], 0)
    links = []
    for j, node in chain:
        simple, centers = stage
        if not 0 <= j < len(simple):
            raise SubalgebraError(f"no simple ideal {j} at this stage")
        t, lev = simple[j]
        sub = build_subalgebra(t, node)
        if not sub.maximal:
            raise SubalgebraError(f"removing node {node} of {t} is not a maximal link")
        replaced = [(i.lie_type, i.index * lev) for i in sub.ideals]
        nxt = (simple[:j] + replaced + simple[j + 1:], centers + sub.center_dim)
        links.append(ChainLink(_stage_names(stage), _stage_names(nxt), _stage_charge(stage), _stage_charge(nxt)))
        stage = nxt
    return ChainReport(k, tuple(links))


# -- Deligne series ------------------------------------------------------------

DELIGNE_TYPES = ("G2", "F4", "E6", "E7", "E8")


def theta_centralizer(g) -> Tuple[Ideal, ...]:
    """Simple ideals of the subalgebra spanned by roots orthogonal to theta."""
    if isinstance(g, str):
        g = LieType.parse(g)
    d = build_root_datum(g)
    orth = [r for r in d.positive_roots if d.root_inner(r, d.theta) == 0]
    orth_set = set(orth)
    simple = []
    for r in orth:
        decomposable = any(
            tuple(a - b for a, b in zip(r, s)) in orth_set for s in orth if s != r
        )
        if not decomposable:
            simple.append(r)
    vecs = {i: r for i, r in enumerate(simple)}
    gram = [[d.root_inner(a, b) for b in simple] for a in simple]
    comps: List[List[int]] = []
    rest = list(range(len(simple)))
    while rest:
        comp = [rest.pop(0)]
        grew = True
        while grew:
            grew = False
            for x in list(rest):
                if any(gram[x][y] != 0 for y in comp):
                    comp.append(x)
                    rest.remove(x)
                    grew = True
        comps.append(sorted(comp))
    ideals = [identify_ideal(d, comp, vecs) for comp in comps]
    return tuple(sorted(ideals, key=lambda i: (i.lie_type.family, i.lie_type.rank)))


def deligne_equation(g) -> CentralChargeEquation:
    if isinstance(g, str):
        g = LieType.parse(g)
    d = build_root_datum(g)
    terms = [_simple_term(d, Fraction(1), +1), _simple_term(build_root_datum("A1"), Fraction(1), -1)]
    for ideal in theta_centralizer(g):
        terms.append(_simple_term(ideal.datum, ideal.index, -1))
    return equation_from_terms(terms)


def deligne_cubic_roots(g) -> Tuple[Fraction, ...]:
    """Nonzero rational levels where g is conformal over sl2 + (centralizer of theta)."""
    if isinstance(g, str):
        g = LieType.parse(g)
    if str(g) not in DELIGNE_TYPES:
        raise SubalgebraError(f"{g} is not one of {', '.join(DELIGNE_TYPES)}")
    return solve_equation(deligne_equation(g)).levels
